use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{int, Rational, UniPoly, Var};
use crate::error::{Error, Result};

/// Values of a function on finitely many odd integers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SampleSet {
    points: BTreeMap<i64, Rational>,
}

impl SampleSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `value` at `n`, replacing any earlier value there.
    pub fn insert(&mut self, n: i64, value: Rational) -> Result<()> {
        if n % 2 == 0 {
            return Err(Error::EvenArgument(n));
        }
        self.points.insert(n, value);
        Ok(())
    }

    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut s = Self::new();
        for (n, v) in pairs {
            s.insert(n, v)?;
        }
        Ok(s)
    }

    /// Samples `f` at each of `nodes`.
    pub fn sample(f: &UniPoly, nodes: &[i64]) -> Result<Self> {
        Self::from_pairs(nodes.iter().map(|&n| (n, f.eval(&int(n)))))
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, n: i64) -> Option<&Rational> {
        self.points.get(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.points.iter().map(|(&n, v)| (n, v))
    }
}

/// The first `count` odd integers by absolute value: `1, -1, 3, -3, 5, ...`.
pub fn default_nodes(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|i| {
            let m = 2 * (i / 2) + 1;
            if i % 2 == 0 {
                m
            } else {
                -m
            }
        })
        .collect()
}

/// The unique polynomial in `n` of degree below `samples.len()` through every
/// sample, via Newton divided differences. Empty input gives zero.
pub fn interpolate(samples: &SampleSet) -> UniPoly {
    let nodes: Vec<Rational> = samples.points.keys().map(|&n| int(n)).collect();
    let mut table: Vec<Rational> = samples.points.values().cloned().collect();
    let len = nodes.len();

    for level in 1..len {
        for i in (level..len).rev() {
            let span = &nodes[i] - &nodes[i - level];
            table[i] = (&table[i] - &table[i - 1]) / span;
        }
    }

    // Horner on the Newton form: c0 + (n - x0)(c1 + (n - x1)(c2 + ...)).
    let mut acc = UniPoly::zero(Var::N);
    for i in (0..len).rev() {
        let shift = UniPoly::from_coeffs(Var::N, vec![-nodes[i].clone(), Rational::one()]);
        if !acc.is_zero() {
            acc = &acc * &shift;
        }
        if !table[i].is_zero() {
            acc = &acc + &UniPoly::constant(Var::N, table[i].clone());
        }
    }
    acc
}
