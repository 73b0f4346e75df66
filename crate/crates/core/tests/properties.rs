use std::collections::BTreeMap;

use gfseries::action::Couplings;
use gfseries::fourier::{fourier_alg, fourier_comb, ExponentSplit};
use gfseries::legendre::{legendre, quasi_involution_l, tree_series_fixedpoint, ActionSeries};
use gfseries::oracle::{enumerate, VertexContent};
use gfseries::scalar::double_factorial;
use gfseries::{CoefficientPoly, Filter, Scalar, Series, Symbol, TruncationCtx, Var};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| Scalar::from_ratio(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Scalar> {
    rational().prop_filter("nonzero", |s| !s.is_zero())
}

/// `c x^2/2 + sum_{3<=j<=6} a_j x^j` through degree 8.
fn action() -> impl Strategy<Value = ActionSeries> {
    (nonzero_rational(), prop::collection::vec(rational(), 4)).prop_map(|(c, rest)| {
        let mut coeffs = vec![CoefficientPoly::zero(); 2];
        coeffs.push(CoefficientPoly::constant(c));
        coeffs.extend(rest.into_iter().map(CoefficientPoly::constant));
        ActionSeries::strict(Series::from_coeffs(Var::X, TruncationCtx::new(8), coeffs)).unwrap()
    })
}

fn degrees() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::btree_set(2u32..=5, 1..=3).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_term_satisfies_the_edge_grading(degs in degrees(), k in 0i64..=3, m in 1u32..=3) {
        let c = Couplings::symbolic(degs);
        let filter = Filter::edges(m);
        let split = ExponentSplit::fundamental(&c, 3 * 2 * m as i64 + 3, filter.clone());
        let z = fourier_comb(&split, &TruncationCtx::with_filter(k, filter)).unwrap();
        for (d, p) in z.support() {
            for (mono, _) in p.terms() {
                let half: i64 = mono.iter().filter_map(|(s, e)| match s {
                    Symbol::Lambda(j) => Some(j as i64 * e as i64),
                    _ => None,
                }).sum();
                prop_assert_eq!(2 * mono.exp(Symbol::U) as i64, half + d);
            }
        }
    }

    #[test]
    fn algebraic_transform_never_mentions_a(degs in degrees(), m in 1u32..=3) {
        let c = Couplings::symbolic(degs);
        let filter = Filter::edges(m);
        let f = c.fundamental(&TruncationCtx::with_filter(3 + 3 * 2 * m as i64 + 3, filter.clone()));
        let r = fourier_alg(&f, &TruncationCtx::with_filter(3, filter)).unwrap();
        prop_assert!(!r.mentions(Symbol::A));
    }

    #[test]
    fn legendre_is_a_quasi_involution(f in action()) {
        prop_assert!(quasi_involution_l(&f).unwrap().is_zero());
    }

    #[test]
    fn tree_fixed_point_is_reflected_legendre(f in action()) {
        let t = tree_series_fixedpoint(&f, 8).unwrap();
        prop_assert!(legendre(&f).unwrap().reflect().rename(Var::Y).agrees_with(&t));
    }

    #[test]
    fn log_inverts_exp(coeffs in prop::collection::vec(rational(), 1..=6)) {
        let mut all = vec![CoefficientPoly::zero()];
        all.extend(coeffs.into_iter().map(CoefficientPoly::constant));
        let s = Series::from_coeffs(Var::X, TruncationCtx::new(6), all);
        prop_assert!(s.exp().unwrap().log().unwrap().agrees_with(&s));
    }

    #[test]
    fn graph_classes_are_nested(n3 in 0u32..=2, n4 in 0u32..=2, external in 0u32..=4) {
        let content = VertexContent { counts: BTreeMap::from([(3, n3), (4, n4)]), external, free_slots: 0 };
        let total = content.half_ends();
        prop_assume!(total.is_multiple_of(2) && total <= 12);
        let t = enumerate(&content).unwrap();
        prop_assert_eq!(num_bigint::BigInt::from(t.all), double_factorial(total as i64 - 1));
        prop_assert!(t.trees <= t.connected && t.connected <= t.all);
        prop_assert!(t.bridgeless_connected <= t.connected);
    }
}
