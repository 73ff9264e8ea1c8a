//! The coordinate ring `Q[X,Y]/(X^3 + X^2 - Y^2)` of the nodal cubic.
//!
//! Every residue class has exactly one representative `p(X) + q(X)*Y`: the
//! relation is monic of degree two in `Y`, so `Y^2` can always be traded for
//! `X^3 + X^2`. [`CurveElement`] stores that pair. On torus knots `X` acts as
//! `n^2 - 1` and `Y` as `n^3 - n`; [`CurveElement::eval_at`] and
//! [`CurveElement::to_function`] realise that evaluation map.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_poly::{int, Degree, Rational, UniPoly, Var};

/// `X^3 + X^2`, the value of `Y^2` in the ring.
pub fn y_squared() -> UniPoly {
    UniPoly::from_i64s(Var::X, &[0, 0, 1, 1])
}

/// Image of `X` as a function of `n`: `n^2 - 1`.
pub fn x_image() -> UniPoly {
    UniPoly::from_i64s(Var::N, &[-1, 0, 1])
}

/// Image of `Y` as a function of `n`: `n^3 - n`.
pub fn y_image() -> UniPoly {
    UniPoly::from_i64s(Var::N, &[0, -1, 0, 1])
}

/// Canonical residue `p(X) + q(X)*Y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveElement {
    p: UniPoly,
    q: UniPoly,
}

impl CurveElement {
    /// `p(X) + q(X)*Y`; both polynomials are read as polynomials in `X`.
    pub fn from_parts(p: UniPoly, q: UniPoly) -> Self {
        CurveElement {
            p: p.with_var(Var::X),
            q: q.with_var(Var::X),
        }
    }

    pub fn zero() -> Self {
        Self::from_parts(UniPoly::zero(Var::X), UniPoly::zero(Var::X))
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_parts(UniPoly::constant(Var::X, c), UniPoly::zero(Var::X))
    }

    pub fn x() -> Self {
        Self::from_parts(UniPoly::identity(Var::X), UniPoly::zero(Var::X))
    }

    pub fn y() -> Self {
        Self::from_parts(UniPoly::zero(Var::X), UniPoly::one(Var::X))
    }

    /// `X^a * Y^b`, reduced.
    pub fn monomial(a: u32, b: u32) -> Self {
        &Self::x().pow(a) * &Self::y().pow(b)
    }

    pub fn p(&self) -> &UniPoly {
        &self.p
    }

    pub fn q(&self) -> &UniPoly {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CurveElement {
            p: self.p.scale(c),
            q: self.q.scale(c),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value on the torus knot `[n]`: `p(n^2 - 1) + q(n^2 - 1) * (n^3 - n)`.
    pub fn eval_at(&self, n: i64) -> Result<Rational> {
        if n % 2 == 0 {
            return Err(Error::EvenArgument(n));
        }
        let n = int(n);
        let x = &n * &n - Rational::one();
        let y = &x * &n;
        Ok(self.p.eval(&x) + self.q.eval(&x) * y)
    }

    /// The element as a polynomial function of `n`.
    pub fn to_function(&self) -> UniPoly {
        let x = x_image();
        let p = self.p.compose(&x);
        let q = self.q.compose(&x);
        &p + &(&q * &y_image())
    }

    /// Filtration order: `max(2 deg p, 2 deg q + 3)`, ignoring a zero part.
    /// `X^l` has order `2l` and `X^(l-1) Y` has order `2l + 1`.
    pub fn order(&self) -> Result<usize> {
        let from_p = self.p.degree().finite().map(|d| 2 * d);
        let from_q = self.q.degree().finite().map(|d| 2 * d + 3);
        from_p.max(from_q).ok_or(Error::ZeroOrder)
    }

    /// Bivariate view with no `Y^2` or higher.
    pub fn to_raw(&self) -> RawBivariate {
        let mut raw = RawBivariate::zero();
        for (j, part) in [&self.p, &self.q].into_iter().enumerate() {
            for (i, c) in part.coeffs().iter().enumerate() {
                raw.add_term(i as u32, j as u32, c.clone());
            }
        }
        raw
    }
}

impl Add for &CurveElement {
    type Output = CurveElement;

    fn add(self, rhs: &CurveElement) -> CurveElement {
        CurveElement {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Sub for &CurveElement {
    type Output = CurveElement;

    fn sub(self, rhs: &CurveElement) -> CurveElement {
        CurveElement {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
}

impl Neg for &CurveElement {
    type Output = CurveElement;

    fn neg(self) -> CurveElement {
        CurveElement {
            p: -&self.p,
            q: -&self.q,
        }
    }
}

/// `(p1 + q1 Y)(p2 + q2 Y) = p1 p2 + q1 q2 (X^3 + X^2) + (p1 q2 + p2 q1) Y`.
impl Mul for &CurveElement {
    type Output = CurveElement;

    fn mul(self, rhs: &CurveElement) -> CurveElement {
        let qq = &self.q * &rhs.q;
        CurveElement {
            p: &(&self.p * &rhs.p) + &(&qq * &y_squared()),
            q: &(&self.p * &rhs.q) + &(&rhs.p * &self.q),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for CurveElement {
            type Output = CurveElement;
            fn $m(self, rhs: CurveElement) -> CurveElement {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for CurveElement {
    type Output = CurveElement;

    fn neg(self) -> CurveElement {
        -&self
    }
}

/// `p + (q)*Y`, dropping whichever part is zero; `0` for zero.
impl fmt::Display for CurveElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p.is_zero(), self.q.is_zero()) {
            (true, true) => f.write_str("0"),
            (false, true) => write!(f, "{}", self.p),
            (true, false) => write!(f, "({})*Y", self.q),
            (false, false) => write!(f, "{} + ({})*Y", self.p, self.q),
        }
    }
}

/// Unreduced polynomial in `X` and `Y`, keyed by `(power of X, power of Y)`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawBivariate {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl RawBivariate {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(0, 0, c)
    }

    /// `c * X^i * Y^j`.
    pub fn term(i: u32, j: u32, c: Rational) -> Self {
        let mut r = Self::zero();
        r.add_term(i, j, c);
        r
    }

    pub fn x() -> Self {
        Self::term(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::term(0, 1, Rational::one())
    }

    /// The ideal generator `X^3 + X^2 - Y^2`.
    pub fn relation() -> Self {
        let mut r = Self::term(3, 0, Rational::one());
        r.add_term(2, 0, Rational::one());
        r.add_term(0, 2, -Rational::one());
        r
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rational)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn y_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(_, j)| Degree::Finite(j as usize))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(Rational::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Reduces modulo `Y^2 = X^3 + X^2`. Powers of `Y` are eliminated from the
    /// top down, so each slice is rewritten exactly once.
    pub fn normal_form(&self) -> CurveElement {
        let top = match self.y_degree() {
            Degree::NegInfinity => return CurveElement::zero(),
            Degree::Finite(j) => j.max(1),
        };
        let mut slices = vec![UniPoly::zero(Var::X); top + 1];
        for (&(i, j), c) in &self.terms {
            let t = UniPoly::monomial(Var::X, c.clone(), i as usize);
            slices[j as usize] = &slices[j as usize] + &t;
        }
        let cubic = y_squared();
        for j in (2..=top).rev() {
            let slice = std::mem::replace(&mut slices[j], UniPoly::zero(Var::X));
            if !slice.is_zero() {
                slices[j - 2] = &slices[j - 2] + &(&slice * &cubic);
            }
        }
        slices.truncate(2);
        let q = slices.pop().unwrap();
        let p = slices.pop().unwrap();
        CurveElement::from_parts(p, q)
    }
}

impl Add for &RawBivariate {
    type Output = RawBivariate;

    fn add(self, rhs: &RawBivariate) -> RawBivariate {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &RawBivariate {
    type Output = RawBivariate;

    fn sub(self, rhs: &RawBivariate) -> RawBivariate {
        self + &(-rhs)
    }
}

impl Neg for &RawBivariate {
    type Output = RawBivariate;

    fn neg(self) -> RawBivariate {
        RawBivariate {
            terms: self.terms.iter().map(|(&k, c)| (k, -c)).collect(),
        }
    }
}

impl Mul for &RawBivariate {
    type Output = RawBivariate;

    fn mul(self, rhs: &RawBivariate) -> RawBivariate {
        let mut out = RawBivariate::zero();
        for (&(a, b), c) in &self.terms {
            for (&(d, e), g) in &rhs.terms {
                out.add_term(a + d, b + e, c * g);
            }
        }
        out
    }
}

impl fmt::Display for RawBivariate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(&(i, j), c)| {
            let mut parts = Vec::new();
            match i {
                0 => {}
                1 => parts.push("X".to_string()),
                _ => parts.push(format!("X^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("Y".to_string()),
                _ => parts.push(format!("Y^{j}")),
            }
            (c, parts.join("*"))
        });
        crate::exact_poly::write_signed_terms(f, terms)
    }
}
