//! From functions on odd integers back to the curve ring.
//!
//! A polynomial `f(n)` comes from the ring exactly when `f(1) = f(-1)`. Such
//! an `f` is a unique combination of `1`, `X^l` (order `2l`) and
//! `X^(l-1) Y` (order `2l + 1`); their images `(n^2 - 1)^l` and
//! `(n^2 - 1)^(l-1) (n^3 - n)` are monic of pairwise distinct degrees, so the
//! coefficients fall out of leading-term elimination.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::curve_ring::CurveElement;
use crate::error::{AdmissibilityError, Error, Result};
use crate::exact_poly::{int, interpolate, rank, Degree, Rational, SampleSet, UniPoly, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonomialKind {
    /// `X^l`
    PowerOfX,
    /// `X^(l-1) Y`
    PowerOfXTimesY,
}

/// A nonconstant basis monomial of the curve ring, `X^l` or `X^(l-1) Y` with
/// `l >= 1`. Ordered by filtration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisMonomial {
    kind: MonomialKind,
    l: u32,
}

impl BasisMonomial {
    pub fn new(kind: MonomialKind, l: u32) -> Self {
        assert!(l >= 1, "basis monomials need l >= 1");
        BasisMonomial { kind, l }
    }

    pub fn power_of_x(l: u32) -> Self {
        Self::new(MonomialKind::PowerOfX, l)
    }

    pub fn power_of_x_times_y(l: u32) -> Self {
        Self::new(MonomialKind::PowerOfXTimesY, l)
    }

    /// The unique basis monomial of filtration order `k`, if any (`k >= 2`).
    pub fn of_order(k: usize) -> Option<Self> {
        match k {
            0 | 1 => None,
            k if k % 2 == 0 => Some(Self::power_of_x((k / 2) as u32)),
            k => Some(Self::power_of_x_times_y(((k - 1) / 2) as u32)),
        }
    }

    pub fn kind(&self) -> MonomialKind {
        self.kind
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn order(&self) -> usize {
        match self.kind {
            MonomialKind::PowerOfX => 2 * self.l as usize,
            MonomialKind::PowerOfXTimesY => 2 * self.l as usize + 1,
        }
    }

    pub fn element(&self) -> CurveElement {
        match self.kind {
            MonomialKind::PowerOfX => CurveElement::monomial(self.l, 0),
            MonomialKind::PowerOfXTimesY => CurveElement::monomial(self.l - 1, 1),
        }
    }

    /// Image in `n`; monic of degree [`order`](Self::order).
    pub fn image(&self) -> UniPoly {
        self.element().to_function()
    }
}

impl Ord for BasisMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order().cmp(&other.order())
    }
}

impl PartialOrd for BasisMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x_power, with_y) = match self.kind {
            MonomialKind::PowerOfX => (self.l, false),
            MonomialKind::PowerOfXTimesY => (self.l - 1, true),
        };
        let x = match x_power {
            0 => String::new(),
            1 => "X".to_string(),
            e => format!("X^{e}"),
        };
        match (x.is_empty(), with_y) {
            (_, false) => f.write_str(&x),
            (true, true) => f.write_str("Y"),
            (false, true) => write!(f, "{x}*Y"),
        }
    }
}

/// `constant + sum(coeff * monomial)`; zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub constant: Rational,
    pub terms: BTreeMap<BasisMonomial, Rational>,
}

impl Decomposition {
    pub fn coefficient(&self, m: BasisMonomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The curve-ring element this combination denotes.
    pub fn reassemble(&self) -> CurveElement {
        self.terms.iter().fold(
            CurveElement::constant(self.constant.clone()),
            |acc, (m, c)| &acc + &m.element().scale(c),
        )
    }

    /// Filtration order of the combination, `None` when it is zero.
    pub fn order(&self) -> Option<usize> {
        match self.terms.keys().next_back() {
            Some(m) => Some(m.order()),
            None if self.constant.is_zero() => None,
            None => Some(0),
        }
    }
}

/// Highest order first, constant last, e.g. `X^2 + 2*X + 1`.
impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| (c, m.to_string()))
            .chain(std::iter::once((&self.constant, String::new())));
        crate::exact_poly::write_signed_terms(f, terms)
    }
}

pub fn is_admissible(f: &UniPoly) -> bool {
    f.eval(&int(1)) == f.eval(&int(-1))
}

/// Writes an admissible `f(n)` in the basis `{1, X^l, X^(l-1) Y}`.
///
/// The error carries both unknot values so callers can report them.
#[allow(clippy::result_large_err)]
pub fn decompose(f: &UniPoly) -> std::result::Result<Decomposition, AdmissibilityError> {
    let at_one = f.eval(&int(1));
    let at_minus_one = f.eval(&int(-1));
    if at_one != at_minus_one {
        return Err(AdmissibilityError {
            at_one,
            at_minus_one,
        });
    }

    let mut rest = f.clone().with_var(Var::N);
    let mut terms = BTreeMap::new();
    while let Degree::Finite(d @ 2..) = rest.degree() {
        let lead = rest.leading_coefficient().cloned().unwrap();
        let m = BasisMonomial::of_order(d).unwrap();
        rest = &rest - &m.image().scale(&lead);
        terms.insert(m, lead);
    }
    // Both images vanish at n = +-1, so `rest` is still admissible, and an
    // admissible polynomial of degree <= 1 is constant.
    debug_assert!(rest.coeff(1).is_zero());
    Ok(Decomposition {
        constant: rest.coeff(0),
        terms,
    })
}

/// Interpolates `samples` under the promise that the underlying function has
/// degree at most `degree_bound`, then decomposes the result.
pub fn from_samples(samples: &SampleSet, degree_bound: usize) -> Result<Decomposition> {
    if samples.len() <= degree_bound {
        return Err(Error::InsufficientSamples {
            bound: degree_bound,
            got: samples.len(),
        });
    }
    let f = interpolate(samples);
    if let Degree::Finite(degree) = f.degree() {
        if degree > degree_bound {
            return Err(Error::DegreeBoundExceeded {
                bound: degree_bound,
                degree,
            });
        }
    }
    Ok(decompose(&f)?)
}

/// `1` followed by every basis monomial of order at most `k`.
fn basis_elements(k: usize) -> Vec<CurveElement> {
    std::iter::once(CurveElement::one())
        .chain(
            (2..=k)
                .filter_map(BasisMonomial::of_order)
                .map(|m| m.element()),
        )
        .collect()
}

fn image_rows(elements: &[CurveElement]) -> Vec<Vec<Rational>> {
    elements
        .iter()
        .map(|e| e.to_function().into_coeffs())
        .collect()
}

/// `dim A_k`: rank of the images in `n` of all basis monomials of order `<= k`.
pub fn filtration_dimension(k: usize) -> usize {
    rank(&image_rows(&basis_elements(k)))
}

/// Dimension the structure theorem predicts for `A_k`.
pub fn expected_dimension(k: usize) -> usize {
    k.max(1)
}

/// Independently built basis of the polynomials of degree `<= k` with
/// `f(1) = f(-1)`: `1`, `n^j` for even `j`, `n^j - n` for odd `j >= 3`.
fn admissible_basis(k: usize) -> Vec<Vec<Rational>> {
    (0..=k)
        .filter(|&j| j != 1)
        .map(|j| {
            let mut row = vec![Rational::zero(); j + 1];
            row[j] = Rational::one();
            if j % 2 == 1 {
                row[1] = -Rational::one();
            }
            row
        })
        .collect()
}

/// Outcome of the filtration checks at one order `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderCheck {
    pub k: usize,
    /// `dim A_k` computed by exact rank.
    pub dim: usize,
    /// `dim A_k - dim A_(k-1)`, with `dim A_(-1) = 0`.
    pub quotient_dim: usize,
    pub expected_dim: usize,
    pub expected_quotient_dim: usize,
    /// Dimension of the admissible polynomials of degree `<= k`.
    pub admissible_dim: usize,
    /// Basis images and admissible polynomials span the same space.
    pub span_matches: bool,
    /// The generator of order exactly `k` is independent of all lower ones
    /// (vacuous for `k = 1`).
    pub generator_independent: bool,
}

impl OrderCheck {
    pub fn pass(&self) -> bool {
        self.dim == self.expected_dim
            && self.quotient_dim == self.expected_quotient_dim
            && self.admissible_dim == self.expected_dim
            && self.span_matches
            && self.generator_independent
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub checks: Vec<OrderCheck>,
}

impl TheoremReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(OrderCheck::pass)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.checks.iter().map(|c| c.dim).collect()
    }

    pub fn quotient_dims(&self) -> Vec<usize> {
        self.checks.iter().map(|c| c.quotient_dim).collect()
    }
}

fn check_order(k: usize) -> OrderCheck {
    let elements = basis_elements(k);
    let images = image_rows(&elements);
    let dim = rank(&images);
    let previous = match k {
        0 => 0,
        _ => filtration_dimension(k - 1),
    };

    let admissible = admissible_basis(k);
    let admissible_dim = rank(&admissible);
    let joint = rank(&[images.clone(), admissible].concat());
    let span_matches = joint == dim && joint == admissible_dim;

    let generator_independent = match (k, BasisMonomial::of_order(k)) {
        (0, _) => dim == 1,
        (_, None) => true,
        (_, Some(m)) => {
            let lower: Vec<_> = elements
                .iter()
                .filter(|e| e.order().is_ok_and(|o| o < k))
                .cloned()
                .collect();
            let lower_rows = image_rows(&lower);
            let with_gen = [lower_rows.clone(), vec![m.image().into_coeffs()]].concat();
            rank(&with_gen) == rank(&lower_rows) + 1
        }
    };

    OrderCheck {
        k,
        dim,
        quotient_dim: dim - previous,
        expected_dim: expected_dimension(k),
        expected_quotient_dim: match k {
            1 => 0,
            _ => 1,
        },
        admissible_dim,
        span_matches,
        generator_independent,
    }
}

/// Runs the filtration checks for every `k` in `0..=k_max`. Failures are
/// recorded in the report, never raised.
pub fn verify_theorem(k_max: usize) -> TheoremReport {
    TheoremReport {
        checks: (0..=k_max).map(check_order).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(Var::N, c)
    }

    #[test]
    fn admissibility_examples() {
        assert!(is_admissible(&n(&[-1, 0, 1])));
        assert!(!is_admissible(&n(&[0, 1])));
        assert!(is_admissible(&n(&[42])));
        assert!(is_admissible(&UniPoly::zero(Var::N)));
    }

    #[test]
    fn decompose_x() {
        let d = decompose(&n(&[-1, 0, 1])).unwrap();
        assert_eq!(d.constant, int(0));
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.coefficient(BasisMonomial::power_of_x(1)), int(1));
        assert_eq!(d.to_string(), "X");
    }

    #[test]
    fn decompose_n4() {
        let d = decompose(&n(&[0, 0, 0, 0, 1])).unwrap();
        assert_eq!(d.coefficient(BasisMonomial::power_of_x(2)), int(1));
        assert_eq!(d.coefficient(BasisMonomial::power_of_x(1)), int(2));
        assert_eq!(d.constant, int(1));
        assert_eq!(d.to_string(), "X^2 + 2*X + 1");
        for k in [1, -1, 3, -5, 9] {
            assert_eq!(d.reassemble().eval_at(k).unwrap(), int(k.pow(4)));
        }
    }

    #[test]
    fn decompose_rejects_n() {
        let err = decompose(&n(&[0, 1])).unwrap_err();
        assert_eq!(err.at_one, int(1));
        assert_eq!(err.at_minus_one, int(-1));
    }

    #[test]
    fn from_samples_examples() {
        let s = SampleSet::from_pairs(
            [(1, 0), (-1, 0), (3, 8), (-3, 8), (5, 24)].map(|(k, v)| (k, int(v))),
        )
        .unwrap();
        let d = from_samples(&s, 2).unwrap();
        assert_eq!(d.reassemble(), CurveElement::x());

        let s = SampleSet::from_pairs([(7, int(5)), (9, int(5))]).unwrap();
        let d = from_samples(&s, 0).unwrap();
        assert_eq!(d.constant, int(5));
        assert!(d.terms.is_empty());

        let s = SampleSet::from_pairs([(1, int(0)), (-1, int(1))]).unwrap();
        assert!(matches!(from_samples(&s, 1), Err(Error::Admissibility(_))));
    }

    #[test]
    fn from_samples_bound_errors() {
        let s = SampleSet::from_pairs([(1, int(0)), (3, int(8))]).unwrap();
        assert_eq!(
            from_samples(&s, 2),
            Err(Error::InsufficientSamples { bound: 2, got: 2 })
        );
        let s = SampleSet::sample(&n(&[0, 0, 0, 0, 1]), &[1, -1, 3, -3, 5]).unwrap();
        assert_eq!(
            from_samples(&s, 2),
            Err(Error::DegreeBoundExceeded {
                bound: 2,
                degree: 4
            })
        );
    }

    #[test]
    fn filtration_dimension_examples() {
        assert_eq!(filtration_dimension(0), 1);
        assert_eq!(filtration_dimension(1), 1);
        assert_eq!(filtration_dimension(7), 7);
    }

    #[test]
    fn verify_small() {
        let r = verify_theorem(3);
        assert!(r.all_pass());
        assert_eq!(r.quotient_dims(), vec![1, 0, 1, 1]);
        assert_eq!(r.dims(), vec![1, 1, 2, 3]);

        let r = verify_theorem(0);
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].dim, 1);
        assert!(r.all_pass());
    }

    #[test]
    fn monomial_display_and_order() {
        assert_eq!(BasisMonomial::power_of_x_times_y(1).to_string(), "Y");
        assert_eq!(BasisMonomial::power_of_x_times_y(2).to_string(), "X*Y");
        assert_eq!(BasisMonomial::power_of_x_times_y(4).to_string(), "X^3*Y");
        assert_eq!(BasisMonomial::power_of_x(3).to_string(), "X^3");
        for k in 2..30 {
            assert_eq!(BasisMonomial::of_order(k).unwrap().order(), k);
        }
    }
}
