use proptest::prelude::*;
use torus_core::curve_ring::{x_image, y_image};
use torus_core::exact_poly::{default_nodes, int, interpolate, rank, ratio};
use torus_core::{CurveElement, Rational, SampleSet, UniPoly, Var};

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=9).prop_map(|(n, d)| ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| *r != int(0))
}

fn poly(var: Var, max_len: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(move |c| UniPoly::from_coeffs(var, c))
}

fn element(max_len: usize) -> impl Strategy<Value = CurveElement> {
    (poly(Var::X, max_len), poly(Var::X, max_len)).prop_map(|(p, q)| CurveElement::from_parts(p, q))
}

fn odd() -> impl Strategy<Value = i64> {
    (-49i64..=49).prop_map(|k| 2 * k + 1)
}

/// Lagrange's formula, term by term.
fn lagrange(points: &[(i64, Rational)]) -> UniPoly {
    let mut total = UniPoly::zero(Var::N);
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = UniPoly::constant(Var::N, yi.clone());
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                let factor = UniPoly::from_coeffs(Var::N, vec![int(-xj), int(1)]);
                basis = &basis * &factor.scale(&(int(1) / int(xi - xj)));
            }
        }
        total = &total + &basis;
    }
    total
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<Rational>]) -> Rational {
    if m.is_empty() {
        return int(1);
    }
    let mut total = int(0);
    for col in 0..m.len() {
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != col)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][col] * det(&minor);
        total = if col % 2 == 0 {
            total + term
        } else {
            total - term
        };
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .map(|s| (0..n).filter(|i| s >> i & 1 == 1).collect())
        .collect()
}

/// Largest nonvanishing minor.
fn rank_by_minors(rows: &[Vec<Rational>], width: usize) -> usize {
    let m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            (0..width)
                .map(|c| r.get(c).cloned().unwrap_or_else(|| int(0)))
                .collect()
        })
        .collect();
    for k in (1..=m.len().min(width)).rev() {
        for rs in subsets(m.len(), k) {
            for cs in subsets(width, k) {
                let sub: Vec<Vec<Rational>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if det(&sub) != int(0) {
                    return k;
                }
            }
        }
    }
    0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational(), d in nonzero_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&d * &(int(1) / &d), int(1));
        prop_assert_eq!(&a - &a, int(0));
        // canonical form: positive denominator, lowest terms
        let s = &a / &d;
        prop_assert!(*s.denom() > 0.into());
        prop_assert_eq!(num_integer::Integer::gcd(s.numer(), s.denom()), if *s.numer() == 0.into() { s.denom().clone() } else { 1.into() });
    }

    #[test]
    fn interpolation_inverts_sampling(p in poly(Var::N, 9), offset in 0usize..4) {
        let needed = p.coeffs().len().max(1);
        let nodes: Vec<i64> = default_nodes(needed + offset);
        let s = SampleSet::sample(&p, &nodes).unwrap();
        prop_assert_eq!(interpolate(&s), p);
    }

    #[test]
    fn interpolation_matches_lagrange(values in prop::collection::btree_map(odd(), rational(), 1..7)) {
        let pairs: Vec<(i64, Rational)> = values.into_iter().collect();
        let s = SampleSet::from_pairs(pairs.clone()).unwrap();
        let f = interpolate(&s);
        prop_assert_eq!(&f, &lagrange(&pairs));
        for (n, v) in &pairs {
            prop_assert_eq!(&f.eval(&int(*n)), v);
        }
    }

    #[test]
    fn rank_matches_minors(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 0..=4), 0..=4)) {
        let rows: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect();
        let width = rows.iter().map(Vec::len).max().unwrap_or(0);
        prop_assert_eq!(rank(&rows), rank_by_minors(&rows, width));
    }

    #[test]
    fn rank_invariant_under_permutation_and_scaling(
        rows in prop::collection::vec(prop::collection::vec(rational(), 5), 1..=6),
        scales in prop::collection::vec(nonzero_rational(), 6),
        seed in any::<u64>(),
    ) {
        let base = rank(&rows);
        let mut shuffled: Vec<Vec<Rational>> = rows
            .iter()
            .zip(&scales)
            .map(|(r, s)| r.iter().map(|v| v * s).collect())
            .collect();
        let len = shuffled.len();
        shuffled.rotate_left((seed as usize) % len);
        shuffled.swap(0, len - 1);
        prop_assert_eq!(rank(&shuffled), base);
    }

    #[test]
    fn poly_degree_additive(a in poly(Var::N, 6), b in poly(Var::N, 6)) {
        prop_assert_eq!((&a * &b).degree(), a.degree() + b.degree());
        let at = int(7);
        prop_assert_eq!((&a * &b).eval(&at), a.eval(&at) * b.eval(&at));
        prop_assert_eq!((&a + &b).eval(&at), a.eval(&at) + b.eval(&at));
    }

    #[test]
    fn ring_axioms(a in element(7), b in element(7), c in element(7)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &CurveElement::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in element(6), b in element(6), n in odd()) {
        let (ea, eb) = (a.eval_at(n).unwrap(), b.eval_at(n).unwrap());
        prop_assert_eq!((&a * &b).eval_at(n).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).eval_at(n).unwrap(), &ea + &eb);
        prop_assert_eq!(a.to_function().eval(&int(n)), ea);
    }

    #[test]
    fn function_map_is_injective_and_admissible(a in element(11)) {
        let f = a.to_function();
        prop_assert_eq!(f.is_zero(), a.is_zero());
        prop_assert_eq!(f.eval(&int(1)), f.eval(&int(-1)));
    }

    #[test]
    fn order_is_additive(a in element(6), b in element(6)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let prod = &a * &b;
        prop_assert_eq!(prod.order().unwrap(), a.order().unwrap() + b.order().unwrap());
        if a.order().unwrap() > 0 {
            prop_assert_eq!(a.order().unwrap(), a.to_function().degree().finite().unwrap());
        }
    }

    #[test]
    fn raw_products_reduce_like_ring_products(
        xa in 0u32..5, ya in 0u32..5, xb in 0u32..5, yb in 0u32..5, c in nonzero_rational(),
    ) {
        use torus_core::RawBivariate;
        let raw = &RawBivariate::term(xa, ya, c.clone()) * &RawBivariate::term(xb, yb, int(1));
        let ring = &CurveElement::monomial(xa, ya).scale(&c) * &CurveElement::monomial(xb, yb);
        prop_assert_eq!(raw.normal_form(), ring);
    }
}

#[test]
fn defining_relation_holds_pointwise() {
    let (x, y) = (CurveElement::x(), CurveElement::y());
    for n in (-99..=99).filter(|n: &i64| n % 2 != 0) {
        let (xv, yv) = (x.eval_at(n).unwrap(), y.eval_at(n).unwrap());
        assert_eq!(&yv * &yv, &xv * &xv * &xv + &xv * &xv, "n = {n}");
    }
}

#[test]
fn generator_images() {
    assert_eq!(CurveElement::x().to_function(), x_image());
    assert_eq!(CurveElement::y().to_function(), y_image());
    let rel = &(&y_image() * &y_image()) - &(&x_image().pow(3) + &x_image().pow(2));
    assert!(rel.is_zero());
}
