//! The combinatorial Legendre transform `L a = a o a'^[-1] - x a'^[-1]`, its explicit series,
//! the tree series of an action, and the passage from connected to 2-edge-connected graphs.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Symbol};
use crate::poly::CoefficientPoly;
use crate::scalar::{factorial, Scalar};
use crate::series::{Series, Var};
use crate::truncation::{Filter, Grading};

/// An action together with its quadratic coefficient `2 [x^2] body`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionSeries {
    pub body: Series,
    pub quad: CoefficientPoly,
}

impl ActionSeries {
    /// Checks the strict preconditions: no constant or linear term, and a unit quadratic
    /// coefficient.
    pub fn strict(body: Series) -> Result<Self> {
        if !body.coeff(0).is_zero() {
            return Err(Error::NotLegendrable(format!("constant term {} is nonzero", body.coeff(0))));
        }
        if !body.coeff(1).is_zero() {
            return Err(Error::NotLegendrable(format!("linear term {} is nonzero", body.coeff(1))));
        }
        if body.max_degree() < 2 {
            return Err(Error::NotLegendrable("window does not reach degree 2".into()));
        }
        let quad = body.coeff(2).scale_int(2);
        if !quad.is_unit(body.filter()) {
            return Err(Error::NotLegendrable(format!("quadratic coefficient {quad} is not a unit")));
        }
        Ok(ActionSeries { body, quad })
    }
}

/// The definitional transform. `a'^[-1]` is only known through `K-1`, but its top coefficient
/// cannot reach degree `K` of `a o a'^[-1] - x a'^[-1]`, so the result is exact through `K`.
pub fn legendre(a: &ActionSeries) -> Result<Series> {
    let k = a.body.max_degree();
    let inv = a.body.derive().comp_inverse()?.pad_to(k);
    let composed = a.body.compose(&inv)?;
    Ok(&composed - &inv.shift_up(1))
}

/// `-sum_k y^{k+1}/(k(k+1)) [t^{k-1}] h^{-k}` with `a' = x h`.
pub fn legendre_explicit(a: &ActionSeries) -> Result<Series> {
    let k = a.body.max_degree();
    let h = a.body.derive().shift_down(1);
    let hinv = h.invert_mult()?;
    let mut out = Series::zero(a.body.var(), a.body.ctx().clone());
    let mut power = Series::one(hinv.var(), hinv.ctx().clone());
    for j in 1..k {
        power = &power * &hinv;
        let c = power.coeff(j - 1).scale(&Scalar::from_ratio(-1, j * (j + 1)));
        out.set_coeff(j + 1, c);
    }
    Ok(out)
}

/// `(L^2 a)(-x) - a`, the zero series whenever the quasi-involution holds.
pub fn quasi_involution_l(a: &ActionSeries) -> Result<Series> {
    let once = ActionSeries::strict(legendre(a)?)?;
    let twice = legendre(&once)?;
    Ok(&twice.reflect() - &a.body)
}

/// The tree series `T` solving `T = y T' + F(T')`, through degree `k`.
///
/// Differentiating gives `F'(T') = -y`. With `F' = c x + R(x)`, iterating
/// `D <- c^-1 (-y - R(D))` from zero settles one more degree of `D = T'` per pass, since
/// `R` has valuation two. The result satisfies `T(y) = (L F)(-y)`.
pub fn tree_series_fixedpoint(f: &ActionSeries, k: i64) -> Result<Series> {
    let k = k.min(f.body.max_degree());
    let filter = f.body.filter().clone();
    let cinv = f.quad.inverse(&filter)?;
    let fp = f.body.derive().truncate(k - 1);
    let linear = Series::monomial(fp.var(), fp.ctx().clone(), 1, f.quad.clone());
    let r = &fp - &linear;
    let ctx = fp.ctx().clone();
    let minus_y = -Series::identity(Var::Y, ctx.clone());
    let step = |d: &Series| -> Result<Series> {
        let rd = r.compose(d)?;
        Ok((&minus_y - &rd).scale(&cinv))
    };
    let mut d = Series::zero(Var::Y, ctx);
    for pass in 1..=k {
        let next = step(&d)?;
        for deg in 0..pass.min(k) {
            if next.coeff(deg) != d.coeff(deg) {
                return Err(Error::NoConvergenceAtDegree(deg));
            }
        }
        d = next;
    }
    if step(&d)? != d {
        return Err(Error::NoConvergenceAtDegree(k - 1));
    }
    Ok(d.integrate())
}

/// Tuples `(n_j)_{j in degrees}` with `sum_j weight(j) n_j = total`, all weights positive.
pub(crate) fn weighted_tuples(degrees: &[u32], weight: impl Fn(u32) -> i64, total: i64) -> Vec<Vec<(u32, u32)>> {
    fn rec(
        degrees: &[u32],
        weight: &dyn Fn(u32) -> i64,
        left: i64,
        cur: &mut Vec<(u32, u32)>,
        out: &mut Vec<Vec<(u32, u32)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let Some((&j, rest)) = degrees.split_first() else { return };
        let w = weight(j);
        assert!(w > 0, "tuple weights must be positive");
        let mut n = 0u32;
        while n as i64 * w <= left {
            if n > 0 {
                cur.push((j, n));
            }
            rec(rest, weight, left - n as i64 * w, cur, out);
            if n > 0 {
                cur.pop();
            }
            n += 1;
        }
    }
    let mut out = Vec::new();
    if total >= 0 {
        rec(degrees, &weight, total, &mut Vec::new(), &mut out);
    }
    out
}

/// The closed form for the `y^n/n!` coefficient of the tree series,
/// `sum (n-2+sum n_j)! prod (l_j/(j-1)!)^{n_j}/n_j! * u^{edges}` over `sum (j-2) n_j = n-2`.
/// `lambdas` maps each degree `j >= 3` to its coupling.
pub fn tree_coeffs_direct(lambdas: &BTreeMap<u32, CoefficientPoly>, n: u32) -> CoefficientPoly {
    let degrees: Vec<u32> = lambdas.keys().copied().filter(|&j| j >= 3).collect();
    let mut out = CoefficientPoly::zero();
    for tuple in weighted_tuples(&degrees, |j| j as i64 - 2, n as i64 - 2) {
        let nv: u32 = tuple.iter().map(|&(_, c)| c).sum();
        let mut c = CoefficientPoly::constant(Scalar::from_bigint(factorial((n - 2 + nv) as u64)));
        for &(j, nj) in &tuple {
            let base =
                lambdas[&j].scale(&Scalar::from_rational(BigRational::new(BigInt::from(1), factorial(j as u64 - 1))));
            c = &c * &base.pow_filtered(nj, &Filter::none());
            c = c.scale(&Scalar::from_rational(BigRational::new(BigInt::from(1), factorial(nj as u64))));
        }
        let edges = (nv + n - 1) as i32;
        out.add_assign_ref(&c.mul_monomial(&Monomial::pow_of(Symbol::U, edges)));
    }
    out
}

/// `T = [h^-1] log Z` for a series carrying the loop grading `h`.
pub fn trees_from_graphs(z: &Series) -> Result<Series> {
    if !z.support().any(|(_, c)| c.mentions(Symbol::Hbar)) {
        return Err(Error::MissingHbarGrading);
    }
    let w = z.log()?;
    Ok(w.map_coeffs(|c| c.select(|m| m.exp(Symbol::Hbar) == -1).map_monomials(|m| m.without(Symbol::Hbar))))
}

/// Smallest window guaranteeing that a connected-graph series under `filter` has no terms
/// above it: legs are bounded by half-edge content, and by Euler weight plus two.
fn completeness_degree(filter: &Filter) -> Option<i64> {
    filter.bounds().iter().map(|b| if b.grading == Grading::half_edges() { b.bound } else { b.bound + 2 }).min()
}

/// Root `z0` of `w'` in the coefficient ring: `z0 = -(w_1 + sum_{n>=3} n w_n z0^{n-1}) / (2 w_2)`.
fn stationary_point(w: &Series) -> Result<CoefficientPoly> {
    let filter = w.filter();
    let c = w.coeff(2).scale_int(2);
    let cinv =
        c.inverse(filter).map_err(|_| Error::NotLegendrable(format!("quadratic coefficient {c} is not a unit")))?;
    let limit = 4 * filter.bounds().iter().map(|b| b.bound.unsigned_abs() as usize).sum::<usize>() + 16;
    let mut zeta = CoefficientPoly::zero();
    for _ in 0..limit {
        let mut acc = w.coeff(1).clone();
        let mut pow = zeta.clone();
        for n in 3..=w.max_degree() {
            pow = pow.mul_filtered(&zeta, filter);
            if pow.is_zero() {
                break;
            }
            acc.add_product(&w.coeff(n).scale_int(n), &pow, filter);
        }
        let next = -acc.mul_filtered(&cinv, filter);
        if next == zeta {
            return Ok(zeta);
        }
        zeta = next;
    }
    Err(Error::GradingNotLocallyFinite("stationary point did not settle".into()))
}

/// `L w` for a series whose constant and linear parts are topologically nilpotent.
///
/// With `w'(z0) = 0` and `b(x) = w(x + z0)`, `L w = L(b - b(0)) + b(0) - z z0`.
pub fn legendre_relaxed(w: &Series) -> Result<Series> {
    let filter = w.filter();
    let need = completeness_degree(filter)
        .ok_or_else(|| Error::GradingNotLocallyFinite("no weight bound on the couplings".into()))?;
    if w.max_degree() < need {
        return Err(Error::GradingNotLocallyFinite(format!(
            "window {} is below the completeness degree {need}",
            w.max_degree()
        )));
    }
    if !w.coeff(1).is_nilpotent(filter) || !w.coeff(0).is_nilpotent(filter) {
        return Err(Error::GradingNotLocallyFinite("low-degree part is not nilpotent".into()));
    }
    let zeta = stationary_point(w)?;
    let b = w.taylor_shift(&zeta);
    let b0 = b.coeff(0).clone();
    let mut centred = b.clone();
    centred.set_coeff(0, CoefficientPoly::zero());
    centred.set_coeff(1, CoefficientPoly::zero());
    let mut out = legendre(&ActionSeries::strict(centred)?)?;
    out.add_to_coeff(0, &b0);
    out.add_to_coeff(1, &-&zeta);
    Ok(out)
}

/// `Gamma(z) = (L W)(z) + u^-1 z^2/2`, the series of 2-edge-connected graphs.
pub fn gamma_from_w(w: &Series, u: &CoefficientPoly) -> Result<Series> {
    let uinv = u.inverse(&Filter::none()).map_err(|_| Error::UnitRequired(u.to_string()))?;
    let mut g = legendre_relaxed(w)?.rename(Var::Z);
    g.add_to_coeff(2, &uinv.scale(&Scalar::from_ratio(1, 2)));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::Couplings;
    use crate::truncation::TruncationCtx;

    fn scalar_series(k: i64, c: &[(i64, i64)]) -> Series {
        Series::from_scalars(Var::X, k, c.iter().map(|&(p, q)| Scalar::from_ratio(p, q)))
    }

    #[test]
    fn pure_quadratic_is_self_dual_up_to_sign() {
        let a = ActionSeries::strict(scalar_series(6, &[(0, 1), (0, 1), (-1, 2)])).unwrap();
        let l = legendre(&a).unwrap();
        assert_eq!(l, scalar_series(6, &[(0, 1), (0, 1), (1, 2)]));
        assert_eq!(legendre_explicit(&a).unwrap(), l);
    }

    #[test]
    fn strict_preconditions_are_named() {
        let e = ActionSeries::strict(scalar_series(4, &[(0, 1), (1, 1), (1, 1)])).unwrap_err();
        assert!(matches!(e, Error::NotLegendrable(ref s) if s.contains("linear")));
        assert!(ActionSeries::strict(scalar_series(4, &[(0, 1), (0, 1), (0, 1), (1, 1)])).is_err());
    }

    #[test]
    fn derivative_relation() {
        let a = ActionSeries::strict(scalar_series(7, &[(0, 1), (0, 1), (-1, 2), (1, 3), (2, 5), (0, 1), (-1, 7)]))
            .unwrap();
        let l = legendre(&a).unwrap();
        let inv = a.body.derive().comp_inverse().unwrap();
        assert!(l.derive().agrees_with(&-&inv));
    }

    #[test]
    fn relaxed_transform_of_a_shifted_action() {
        let ctx = TruncationCtx::with_filter(6, Filter::edges(3));
        let l3 = CoefficientPoly::symbol(Symbol::Lambda(3));
        let mut b = Series::zero(Var::X, ctx.clone());
        b.set_coeff(2, CoefficientPoly::constant(Scalar::from_ratio(1, 2)));
        b.set_coeff(3, l3.scale(&Scalar::from_ratio(1, 6)));
        b.set_coeff(4, l3.scale(&Scalar::from_ratio(1, 24)));
        let w = b.taylor_shift(&-&l3);
        let strict = legendre(&ActionSeries::strict(b).unwrap()).unwrap();
        let mut want = strict;
        want.add_to_coeff(1, &-&l3);
        assert!(legendre_relaxed(&w).unwrap().agrees_with(&want));
    }

    #[test]
    fn tree_series_without_vertices_is_one_edge() {
        let c = Couplings::symbolic([]);
        let f = ActionSeries::strict(c.fundamental(&TruncationCtx::new(6))).unwrap();
        let t = tree_series_fixedpoint(&f, 6).unwrap();
        assert_eq!(t.coeff(2), &CoefficientPoly::symbol(Symbol::U).scale(&Scalar::from_ratio(1, 2)));
        assert_eq!(t.support().count(), 1);
    }

    #[test]
    fn tree_series_matches_reflected_legendre() {
        let c = Couplings::symbolic([3, 4]);
        let f = ActionSeries::strict(c.fundamental(&TruncationCtx::new(6))).unwrap();
        let t = tree_series_fixedpoint(&f, 6).unwrap();
        assert!(legendre(&f).unwrap().reflect().rename(Var::Y).agrees_with(&t));
    }

    #[test]
    fn direct_tree_formula_at_small_n() {
        let l: BTreeMap<u32, CoefficientPoly> =
            [3, 4].into_iter().map(|k| (k, CoefficientPoly::symbol(Symbol::Lambda(k)))).collect();
        let u3 = Monomial::pow_of(Symbol::U, 3);
        assert_eq!(tree_coeffs_direct(&l, 3), CoefficientPoly::term(u3.mul(&Monomial::lambda(3)), Scalar::one()));
        let t4 = tree_coeffs_direct(&l, 4);
        assert_eq!(t4.len(), 2);
        assert_eq!(t4.coeff(&Monomial::from_pairs([(Symbol::U, 5), (Symbol::Lambda(3), 2)])), Scalar::from_int(3));
    }

    #[test]
    fn weighted_tuple_enumeration() {
        let t = weighted_tuples(&[3, 4, 5], |j| j as i64 - 2, 3);
        assert_eq!(t.len(), 3);
    }
}
