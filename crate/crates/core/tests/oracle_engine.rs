use gfseries::oracle::{
    engine_coeff, engine_series, enumerate, oracle_coeff, verify_against_engine, OracleSeries, VertexContent,
};
use gfseries::{scalar::double_factorial, CoefficientPoly, Filter, Grading, Series, TruncationCtx, Var};

fn report(mism: &[gfseries::oracle::OracleMismatch]) {
    for m in mism {
        eprintln!("{} k={} m={} oracle={} engine={}", m.series, m.k, m.m, m.oracle, m.engine);
    }
}

#[test]
fn engine_matches_oracle_cubic() {
    let mism = verify_against_engine(4, 4, &[3]).unwrap();
    report(&mism);
    assert!(mism.is_empty());
}

#[test]
fn engine_matches_oracle_two_four() {
    let mism = verify_against_engine(2, 4, &[2, 4]).unwrap();
    report(&mism);
    assert!(mism.is_empty());
}

#[test]
fn engine_matches_oracle_generic() {
    let mism = verify_against_engine(3, 4, &[2, 3, 4]).unwrap();
    report(&mism);
    assert!(mism.is_empty());
}

#[test]
fn double_factorial_law() {
    for counts in [vec![(3, 2)], vec![(2, 1), (4, 1)], vec![(3, 1), (5, 1)], vec![(4, 2)], vec![(2, 3), (3, 2)]] {
        for external in 0..3 {
            let c = VertexContent { counts: counts.iter().copied().collect(), external, free_slots: 0 };
            let n = c.half_ends();
            let t = enumerate(&c).unwrap();
            if n % 2 == 1 {
                assert_eq!(t.all, 0);
                continue;
            }
            assert_eq!(num_bigint::BigInt::from(t.all), double_factorial(n as i64 - 1));
            assert!(t.trees <= t.connected && t.connected <= t.all && t.bridgeless_connected <= t.connected);
        }
    }
}

fn oracle_series(series: OracleSeries, kmax: u32, mmax: u32, degrees: &[u32]) -> Series {
    let bound = 2 * mmax as i64 + kmax as i64;
    let ctx = TruncationCtx::with_filter(kmax as i64, Filter::weight_at_most(Grading::half_edges(), bound));
    let mut s = Series::zero(Var::Y, ctx);
    for k in 0..=kmax {
        let mut c = CoefficientPoly::zero();
        for m in 0..=mmax + kmax {
            c.add_assign_ref(&oracle_coeff(series, k, m, degrees).unwrap());
        }
        let kf = gfseries::scalar::factorial(k as u64);
        s.set_coeff(k as i64, c.scale(&gfseries::Scalar::from_rational(num_rational::BigRational::new(1.into(), kf))));
    }
    s
}

#[test]
fn oracle_log_relation() {
    let degrees = [3, 4];
    let z = oracle_series(OracleSeries::Z, 3, 4, &degrees);
    let w = oracle_series(OracleSeries::W, 3, 4, &degrees);
    let logz = z.log().unwrap();
    for k in 0..=3 {
        for m in 0..=4 {
            assert_eq!(engine_coeff(&logz, k, m), engine_coeff(&w, k, m), "k={k} m={m}");
        }
    }
}

#[test]
fn oracle_gamma_matches_pipeline() {
    let degrees = [3, 4];
    let e = engine_series(2, 3, &degrees).unwrap();
    for k in 0..=2 {
        for m in 0..=3 {
            let o = oracle_coeff(OracleSeries::Gamma, k, m, &degrees).unwrap();
            assert_eq!(engine_coeff(&e[&OracleSeries::Gamma], k, m), o, "k={k} m={m}");
        }
    }
}
