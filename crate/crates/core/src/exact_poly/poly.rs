use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Name of the indeterminate. `N` is the torus-knot parameter `n`, `X` the
/// order-2 generator of the curve ring. The tag is only a label, but
/// arithmetic between polynomials with different tags is a logic error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    N,
    X,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::X => "X",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Degree of a univariate polynomial. The zero polynomial has degree
/// `NegInfinity`, which orders below every finite degree and absorbs
/// addition, so `deg(a * b) = deg(a) + deg(b)` holds without exceptions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial over the rationals; `coeffs[i]` multiplies
/// `var^i`. The highest stored coefficient is never zero, so the zero
/// polynomial is the empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero(var: Var) -> Self {
        UniPoly {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rational::one())
    }

    pub fn constant(var: Var, c: Rational) -> Self {
        Self::from_coeffs(var, vec![c])
    }

    /// The polynomial `var`.
    pub fn identity(var: Var) -> Self {
        Self::monomial(var, Rational::one(), 1)
    }

    /// `c * var^power`.
    pub fn monomial(var: Var, c: Rational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero(var);
        }
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        UniPoly { var, coeffs }
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(var: Var, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { var, coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(var: Var, coeffs: &[i64]) -> Self {
        Self::from_coeffs(var, coeffs.iter().map(|&c| super::int(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Same coefficients, relabelled indeterminate.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `var^i`, zero past the end.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero(self.var);
        }
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one(self.var);
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

    /// `self(inner)`. The result carries the indeterminate of `inner`.
    pub fn compose(&self, inner: &UniPoly) -> UniPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(UniPoly::zero(inner.var), |acc, c| {
                &(&acc * inner) + &UniPoly::constant(inner.var, c.clone())
            })
    }

    fn check_var(&self, other: &UniPoly) {
        assert_eq!(
            self.var, other.var,
            "polynomial arithmetic across indeterminates {} and {}",
            self.var, other.var
        );
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        UniPoly::from_coeffs(self.var, coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(self.var);
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(self.var, coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Writes `coeff * var^power` with an explicit leading sign handled by the caller.
pub(crate) fn write_term(
    f: &mut impl fmt::Write,
    abs_coeff: &Rational,
    monomial: &str,
) -> fmt::Result {
    match (abs_coeff.is_one(), monomial.is_empty()) {
        (_, true) => write!(f, "{abs_coeff}"),
        (true, false) => f.write_str(monomial),
        (false, false) => write!(f, "{abs_coeff}*{monomial}"),
    }
}

/// Joins signed terms as `a - b + c`, with a bare `-` on a negative leader.
pub(crate) fn write_signed_terms<'a>(
    f: &mut impl fmt::Write,
    terms: impl IntoIterator<Item = (&'a Rational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, monomial) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        write_term(f, &c.abs(), &monomial)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Decreasing powers, e.g. `n^3 - n` or `1/2*n^2 + 3`; `0` for the zero
/// polynomial.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.symbol();
        let terms = self.coeffs.iter().enumerate().rev().map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => v.to_string(),
                _ => format!("{v}^{i}"),
            };
            (c, mono)
        });
        write_signed_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::{int, ratio};

    fn n(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::N, coeffs)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&n(&[-1, 0, 1]) + &n(&[1]), n(&[0, 0, 1]));
        let p = n(&[3, -2, 0, 5]);
        assert_eq!(&p + &UniPoly::zero(Var::N), p);
        let sum = &n(&[0, -1, 0, 1]) + &n(&[0, 1, 0, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
    }

    #[test]
    fn mul_examples() {
        let x = n(&[-1, 0, 1]);
        assert_eq!(&x * &x, n(&[1, 0, -2, 0, 1]));
        let p = n(&[4, 0, -7]);
        assert_eq!(&p * &UniPoly::one(Var::N), p);
        assert!((&p * &UniPoly::zero(Var::N)).is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(n(&[-1, 0, 1]).eval(&int(3)), int(8));
        assert_eq!(n(&[0, -1, 0, 1]).eval(&int(-3)), int(-24));
        assert_eq!(UniPoly::zero(Var::N).eval(&int(17)), int(0));
    }

    #[test]
    fn zero_degree_is_below_everything() {
        let z = UniPoly::zero(Var::N);
        assert_eq!(z.degree(), Degree::NegInfinity);
        assert!(z.degree() < UniPoly::one(Var::N).degree());
        assert_eq!(z.degree() + Degree::Finite(4), Degree::NegInfinity);
        assert_eq!((&z * &n(&[1, 1])).degree(), z.degree() + Degree::Finite(1));
    }

    #[test]
    #[should_panic(expected = "across indeterminates")]
    fn mismatched_tags_panic() {
        let _ = &n(&[1]) + &UniPoly::from_i64s(Var::X, &[1]);
    }

    #[test]
    fn compose_substitutes() {
        // (X^2 + X) at X = n^2 - 1 is n^4 - n^2
        let p = UniPoly::from_i64s(Var::X, &[0, 1, 1]);
        assert_eq!(p.compose(&n(&[-1, 0, 1])), n(&[0, 0, -1, 0, 1]));
    }

    #[test]
    fn pow_matches_repeated_product() {
        let p = n(&[1, -2, 3]);
        let mut acc = UniPoly::one(Var::N);
        for e in 0..6 {
            assert_eq!(p.pow(e), acc);
            acc = &acc * &p;
        }
    }

    #[test]
    fn display() {
        assert_eq!(n(&[0, -1, 0, 1]).to_string(), "n^3 - n");
        let p = UniPoly::from_coeffs(Var::N, vec![int(3), int(0), ratio(1, 2)]);
        assert_eq!(p.to_string(), "1/2*n^2 + 3");
        assert_eq!(n(&[0, 0, -1]).to_string(), "-n^2");
        assert_eq!(n(&[-5]).to_string(), "-5");
        assert_eq!(UniPoly::zero(Var::X).to_string(), "0");
        assert_eq!(
            UniPoly::from_i64s(Var::X, &[0, 0, 1, 1]).to_string(),
            "X^3 + X^2"
        );
        let q = UniPoly::from_coeffs(Var::N, vec![ratio(-2, 3), ratio(-1, 4)]);
        assert_eq!(q.to_string(), "-1/4*n - 2/3");
    }
}
