//! Gauss diagrams and arrow-diagram formulas for the order-2 and order-3
//! invariants.
//!
//! A diagram with `c` crossings is a circle carrying `2c` endpoint positions
//! `0..2c`, numbered in traversal order from the basepoint. Each crossing is
//! an arrow from the position where the strand passes over to the position
//! where it passes under, labelled with the crossing's writhe sign.
//!
//! The invariants are signed subdiagram counts: a subset of arrows
//! contributes the product of its signs whenever its endpoint pattern matches
//! the formula's template.
//!
//! * `v2` counts based pairs reading `tail(a) head(b) head(a) tail(b)` from
//!   the basepoint. It is the second Conway coefficient.
//! * `v3` is unbased: with the six endpoints of a triple placed around the
//!   circle as `0..6`, a *chain* `0->2, 1->4, 3->5` counts `1/2` and a *star*
//!   `0->3, 2->5, 4->1` counts `1`, up to rotation.
//!
//! Normalised this way `v2` is `0` on the unknot and `1` on both trefoils
//! while `v3` is `0`, `1` and `-1`, so `x = 8 v2` and `y = 24 v3`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_poly::{int, ratio, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// One crossing: the overpass position is the tail, the underpass the head.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub over: usize,
    pub under: usize,
    pub sign: Sign,
}

/// Odd `n`, naming the torus knot `[n]` of type `(n, 2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnotIndex(i64);

impl TorusKnotIndex {
    pub fn new(n: i64) -> Result<Self> {
        if n % 2 == 0 {
            return Err(Error::EvenArgument(n));
        }
        Ok(TorusKnotIndex(n))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    pub fn is_unknot(self) -> bool {
        self.0.abs() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GaussDiagram {
    arrows: Vec<Arrow>,
}

impl GaussDiagram {
    /// Checks that the arrows use each position in `0..2c` exactly once.
    pub fn new(arrows: Vec<Arrow>) -> Result<Self> {
        let slots = 2 * arrows.len();
        let mut seen = vec![false; slots];
        for (i, a) in arrows.iter().enumerate() {
            if a.over == a.under {
                return Err(Error::InvalidDiagram(format!(
                    "arrow {i} starts and ends at position {}",
                    a.over
                )));
            }
            for p in [a.over, a.under] {
                if p >= slots {
                    return Err(Error::InvalidDiagram(format!(
                        "position {p} out of range for {} crossings",
                        arrows.len()
                    )));
                }
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidDiagram(format!("position {p} used twice")));
                }
            }
        }
        Ok(GaussDiagram { arrows })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn crossings(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Same chords, every crossing sign reversed.
    pub fn mirror(&self) -> Self {
        GaussDiagram {
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    sign: a.sign.flip(),
                    ..*a
                })
                .collect(),
        }
    }

    /// Moves the basepoint forward so that old position `shift` becomes 0.
    pub fn with_basepoint_shift(&self, shift: usize) -> Self {
        let slots = 2 * self.arrows.len();
        if slots == 0 {
            return self.clone();
        }
        let move_pos = |p: usize| (p + slots - shift % slots) % slots;
        GaussDiagram {
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    over: move_pos(a.over),
                    under: move_pos(a.under),
                    sign: a.sign,
                })
                .collect(),
        }
    }

    /// Parses whitespace-separated `O<id><sign>` / `U<id><sign>` tokens, e.g.
    /// `O1+ U2+ O3+ U1+ O2+ U3+`. Ids are arbitrary positive labels; each
    /// must occur once over and once under with the same sign.
    pub fn parse(code: &str) -> Result<Self> {
        struct Partial {
            over: Option<usize>,
            under: Option<usize>,
            sign: Sign,
            first_token: String,
        }

        let mut order: Vec<u64> = Vec::new();
        let mut by_id: HashMap<u64, Partial> = HashMap::new();
        let tokens: Vec<&str> = code.split_whitespace().collect();

        for (pos, &token) in tokens.iter().enumerate() {
            let err = |reason: &str| Error::GaussCode {
                token: token.to_string(),
                position: pos + 1,
                reason: reason.to_string(),
            };
            let mut chars = token.chars();
            let over = match chars.next() {
                Some('O') => true,
                Some('U') => false,
                _ => return Err(err("expected 'O' or 'U'")),
            };
            let sign = match token.chars().last() {
                Some('+') => Sign::Positive,
                Some('-') => Sign::Negative,
                _ => return Err(err("expected a trailing '+' or '-'")),
            };
            let digits = &token[1..token.len() - 1];
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err("expected a numeric crossing id"));
            }
            let id: u64 = digits
                .parse()
                .map_err(|_| err("crossing id out of range"))?;

            let entry = by_id.entry(id).or_insert_with(|| {
                order.push(id);
                Partial {
                    over: None,
                    under: None,
                    sign,
                    first_token: token.to_string(),
                }
            });
            if entry.sign != sign {
                return Err(err(&format!("sign disagrees with {}", entry.first_token)));
            }
            let slot = if over {
                &mut entry.over
            } else {
                &mut entry.under
            };
            if slot.replace(pos).is_some() {
                return Err(err("crossing already has this passage"));
            }
        }

        let mut arrows = Vec::with_capacity(order.len());
        for id in order {
            let p = &by_id[&id];
            match (p.over, p.under) {
                (Some(over), Some(under)) => arrows.push(Arrow {
                    over,
                    under,
                    sign: p.sign,
                }),
                _ => {
                    return Err(Error::GaussCode {
                        token: p.first_token.clone(),
                        position: p.over.or(p.under).unwrap() + 1,
                        reason: "crossing is visited only once".to_string(),
                    })
                }
            }
        }
        Self::new(arrows)
    }
}

/// Gauss code with crossings renumbered `1, 2, ...` by first visit.
impl fmt::Display for GaussDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut at: Vec<(usize, bool)> = vec![(0, false); 2 * self.arrows.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            at[a.over] = (i, true);
            at[a.under] = (i, false);
        }
        let mut label = vec![0usize; self.arrows.len()];
        let mut next = 0;
        for (pos, &(arrow, over)) in at.iter().enumerate() {
            if label[arrow] == 0 {
                next += 1;
                label[arrow] = next;
            }
            if pos > 0 {
                f.write_str(" ")?;
            }
            let passage = if over { 'O' } else { 'U' };
            let sign = self.arrows[arrow].sign.symbol();
            write!(f, "{passage}{}{sign}", label[arrow])?;
        }
        Ok(())
    }
}

/// Standard diagram of the closed 2-braid `sigma^n`. Traversal meets
/// crossings `1..m` and then `1..m` again, alternating over and under and
/// starting over crossing 1; all signs follow the sign of `n`.
pub fn torus_diagram(k: TorusKnotIndex) -> GaussDiagram {
    let m = k.get().unsigned_abs() as usize;
    if m == 1 {
        return GaussDiagram::empty();
    }
    let sign = if k.get() > 0 {
        Sign::Positive
    } else {
        Sign::Negative
    };
    let arrows = (0..m)
        .map(|i| {
            let (a, b) = (i, i + m);
            let (over, under) = if a % 2 == 0 { (a, b) } else { (b, a) };
            Arrow { over, under, sign }
        })
        .collect();
    GaussDiagram { arrows }
}

/// Order-2 invariant, normalised to `1` on the trefoil.
pub fn v2(d: &GaussDiagram) -> Rational {
    let mut total = 0i64;
    for a in d.arrows() {
        for b in d.arrows() {
            if a.over < b.under && b.under < a.under && a.under < b.over {
                total += a.sign.value() * b.sign.value();
            }
        }
    }
    int(total)
}

type Pattern = [(u8, u8); 3];

/// Unbased endpoint pattern of three arrows: endpoints ranked `0..6` around
/// the circle, minimised over rotations.
fn cyclic_pattern(arrows: [&Arrow; 3]) -> Pattern {
    let mut ends: Vec<usize> = arrows.iter().flat_map(|a| [a.over, a.under]).collect();
    ends.sort_unstable();
    let rank = |p: usize| ends.binary_search(&p).unwrap() as u8;
    let based = arrows.map(|a| (rank(a.over), rank(a.under)));
    canonical(based)
}

fn canonical(based: Pattern) -> Pattern {
    (0..6u8)
        .map(|r| {
            let mut rotated = based.map(|(t, h)| ((t + r) % 6, (h + r) % 6));
            rotated.sort_unstable();
            rotated
        })
        .min()
        .unwrap()
}

/// Order-3 invariant, normalised to `1` on the right-handed trefoil.
pub fn v3(d: &GaussDiagram) -> Rational {
    let chain = canonical([(0, 2), (1, 4), (3, 5)]);
    let star = canonical([(0, 3), (2, 5), (4, 1)]);

    let arrows = d.arrows();
    let (mut chains, mut stars) = (0i64, 0i64);
    for i in 0..arrows.len() {
        for j in i + 1..arrows.len() {
            for k in j + 1..arrows.len() {
                let triple = [&arrows[i], &arrows[j], &arrows[k]];
                let pattern = cyclic_pattern(triple);
                let sign: i64 = triple.iter().map(|a| a.sign.value()).product();
                if pattern == chain {
                    chains += sign;
                } else if pattern == star {
                    stars += sign;
                }
            }
        }
    }
    ratio(chains, 2) + int(stars)
}

/// `x([n]) = 8 v2`; equals `n^2 - 1`.
pub fn x_invariant(k: TorusKnotIndex) -> Rational {
    v2(&torus_diagram(k)) * int(8)
}

/// `y([n]) = 24 v3`; equals `n^3 - n`.
pub fn y_invariant(k: TorusKnotIndex) -> Rational {
    v3(&torus_diagram(k)) * int(24)
}
