//! The series each subcommand prints, and the identity suite.

use anyhow::{bail, Context};
use gfseries::fourier::{
    fourier_alg, fourier_comb, hbar_regrade, product_derivation_check, quasi_involution_f, w_from_z, ExponentSplit,
    HbarConvention, IdentityReport,
};
use gfseries::legendre::{gamma_from_w, legendre, quasi_involution_l, tree_series_fixedpoint, ActionSeries};
use gfseries::oracle::{oracle_coeff, verify_against_engine, OracleSeries};
use gfseries::{CoefficientPoly, Monomial, Scalar, Series, Symbol, TruncationCtx, Var};
use serde_json::json;

use crate::output::{render, Format};
use crate::spec::{Action, Truncation};

/// What a series counts, which decides the output filter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// `u` counts edges and `m - V - k` is the loop grade.
    Graphs,
    /// `u` counts internal edges.
    Amputated,
    /// No combinatorial reading.
    Plain,
}

fn action_ctx(a: &Action, degree: i64) -> TruncationCtx {
    TruncationCtx::with_filter(degree, a.truncation.filter())
}

/// `Z` through degree `k`.
pub fn z_series(a: &Action, k: i64) -> anyhow::Result<Series> {
    let bound = a.truncation.bound();
    let split = ExponentSplit::fundamental(&a.couplings, 3 * bound + 3, a.truncation.filter());
    Ok(fourier_comb(&split, &action_ctx(a, k))?)
}

/// Degree through which connected-graph series under the truncation are complete.
fn complete_degree(a: &Action) -> i64 {
    let legs = a.truncation.legs() as i64;
    match a.truncation {
        Truncation::Edges { .. } => legs.max(a.truncation.bound()),
        Truncation::Loops { .. } => legs.max(a.truncation.bound() + 2),
    }
}

/// Amputated legs are not edges, so `k` legs on `m` internal edges use `2m + k` half-ends.
pub fn gamma_series(a: &Action) -> anyhow::Result<Series> {
    let widened = match a.truncation {
        Truncation::Edges { legs, edges } => {
            Action { truncation: Truncation::Edges { legs, edges: edges + legs.div_ceil(2) }, ..a.clone() }
        }
        Truncation::Loops { .. } => a.clone(),
    };
    let a = &widened;
    let z = z_series(a, complete_degree(a))?;
    let w = w_from_z(&z)?;
    let g = gamma_from_w(&w, &a.couplings.u_poly())?;
    Ok(g.truncate(a.truncation.legs() as i64))
}

pub fn fundamental(a: &Action, degree: i64) -> Series {
    a.couplings.fundamental(&action_ctx(a, degree))
}

pub fn legendre_series(a: &Action) -> anyhow::Result<Series> {
    let f = ActionSeries::strict(fundamental(a, a.truncation.legs() as i64)).context("the action")?;
    Ok(legendre(&f)?)
}

pub fn tree_series(a: &Action) -> anyhow::Result<Series> {
    let k = a.truncation.legs() as i64;
    let f = ActionSeries::strict(fundamental(a, k)).context("the action")?;
    Ok(tree_series_fixedpoint(&f, k)?)
}

pub fn oracle_series(a: &Action, which: OracleSeries) -> anyhow::Result<Series> {
    let Truncation::Edges { legs, edges } = a.truncation else {
        bail!("the oracle needs an edge bound");
    };
    let degrees: Vec<u32> = a.couplings.active_degrees().into_iter().filter(|&d| d >= 2).collect();
    let var = if which == OracleSeries::Gamma { Var::Z } else { Var::Y };
    let mut s = Series::zero(var, TruncationCtx::new(legs as i64));
    for k in 0..=legs {
        let mut c = CoefficientPoly::zero();
        for m in 0..=edges {
            c.add_assign_ref(&oracle_coeff(which, k, m, &degrees)?);
        }
        let kf = gfseries::scalar::factorial(k as u64);
        s.set_coeff(k as i64, c.scale(&Scalar::from_rational(num_rational::BigRational::new(1.into(), kf))));
    }
    // the oracle counts vertices of coupling `l_j`; numeric values multiply in here
    let values = a.couplings.clone();
    Ok(s.map_coeffs(|c| {
        let mut out = CoefficientPoly::zero();
        for (m, v) in c.terms() {
            let mut t = CoefficientPoly::term(Monomial::one(), v.clone());
            for (sym, e) in m.iter() {
                let factor = match sym {
                    Symbol::Lambda(j) => values.lambda_poly(j),
                    _ => CoefficientPoly::term(Monomial::var(sym), Scalar::one()),
                };
                for _ in 0..e {
                    t = &t * &factor;
                }
            }
            out.add_assign_ref(&t);
        }
        out
    }))
}

/// Applies the truncation to the output terms, the `h` grading, and numeric values.
pub fn finish(a: &Action, s: &Series, kind: Kind, hbar: Option<HbarConvention>) -> Series {
    let mut s = match hbar {
        Some(conv) if kind == Kind::Graphs => hbar_regrade(s, conv),
        _ => s.clone(),
    };
    match (a.truncation, kind) {
        (Truncation::Edges { edges, .. }, Kind::Graphs | Kind::Amputated) => {
            s = s.map_coeffs(|c| c.select(|m| m.exp(Symbol::U) <= edges as i32));
        }
        (Truncation::Loops { loops, .. }, Kind::Graphs) => {
            s = s.map_coeffs_indexed(|k, c| {
                c.select(|m| {
                    let n = match hbar {
                        Some(HbarConvention::Shifted) => m.exp(Symbol::Hbar) - 1,
                        Some(HbarConvention::LoopOrder) => m.exp(Symbol::Hbar),
                        None => m.exp(Symbol::U) - m.lambda_count() - k as i32,
                    };
                    n <= loops as i32
                })
            });
        }
        _ => {}
    }
    s.substitute(&a.couplings.output_values())
}

/// One named check of the identity suite.
pub struct Check {
    pub name: String,
    pub mismatches: Vec<(i64, Monomial, Scalar)>,
    pub note: Option<String>,
}

impl Check {
    fn from_report(r: IdentityReport) -> Self {
        Check { name: r.name, mismatches: r.mismatches, note: None }
    }

    fn from_diff(name: &str, diff: &Series) -> Self {
        Check::from_report(IdentityReport::new(name, diff))
    }
}

pub fn verify(a: &Action) -> anyhow::Result<Vec<Check>> {
    let k = a.truncation.legs() as i64;
    let filter = a.truncation.filter();
    let mut checks = vec![];

    let f = ActionSeries::strict(fundamental(a, k)).context("the action")?;
    checks.push(Check::from_diff("legendre quasi-involution (L^2 F)(-x) = F(x)", &quasi_involution_l(&f)?));

    let qi = quasi_involution_f(&a.couplings, k, &filter)?;
    let mut reflected = Check::from_report(qi.reflected);
    reflected.note = Some(if qi.direct.passed() {
        "the unreflected form F(z) also holds".into()
    } else {
        format!("the unreflected form F(z) fails at {} coefficients", qi.direct.mismatches.len())
    });
    checks.push(reflected);

    let wide = fundamental(a, k + 3 * a.truncation.bound() + 3);
    for j in 1..=3 {
        checks.push(Check::from_report(product_derivation_check(j, &wide, &action_ctx(a, k))?));
    }

    let alg = fourier_alg(&wide, &action_ctx(a, k))?;
    checks.push(Check {
        name: "a-independence of the algebraic transform".into(),
        mismatches: if alg.mentions(Symbol::A) { vec![(0, Monomial::var(Symbol::A), Scalar::one())] } else { vec![] },
        note: None,
    });

    match a.truncation {
        Truncation::Edges { legs, edges } => {
            let degrees: Vec<u32> = a.couplings.active_degrees().into_iter().filter(|&d| d >= 2).collect();
            let mism = verify_against_engine(legs, edges, &degrees)?;
            checks.push(Check {
                name: "engine equals pairing oracle for Z, W, T, Gamma".into(),
                mismatches: mism
                    .iter()
                    .flat_map(|m| {
                        let d = &m.engine - &m.oracle;
                        d.terms().map(|(mono, v)| (m.k as i64, mono.clone(), v.clone())).collect::<Vec<_>>()
                    })
                    .collect(),
                note: None,
            });
        }
        Truncation::Loops { .. } => {}
    }
    Ok(checks)
}

pub fn render_checks(checks: &[Check], format: Format) -> anyhow::Result<String> {
    if format == Format::Json {
        let v: Vec<_> = checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "passed": c.mismatches.is_empty(),
                    "note": c.note,
                    "mismatches": c.mismatches.iter().map(|(d, m, s)| json!({
                        "deg": d,
                        "mono": m.to_string(),
                        "re": gfseries::scalar::rational_string(&s.re),
                        "im": gfseries::scalar::rational_string(&s.im),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&json!({ "checks": v }))?;
        s.push('\n');
        return Ok(s);
    }
    let mut out = String::new();
    for c in checks {
        let status = if c.mismatches.is_empty() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {}\n", c.name));
        if let Some(n) = &c.note {
            out.push_str(&format!("  note: {n}\n"));
        }
        if !c.mismatches.is_empty() {
            let rows: Vec<_> = c
                .mismatches
                .iter()
                .map(|(d, m, s)| crate::output::Row { deg: *d, mono: m.clone(), value: s.clone() })
                .collect();
            for line in render("d", &rows, format)?.lines() {
                out.push_str(&format!("  {line}\n"));
            }
        }
    }
    Ok(out)
}
