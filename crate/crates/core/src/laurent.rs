//! Truncated formal Laurent series: finitely many negative degrees, known through a precision.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::CoefficientPoly;
use crate::scalar::Scalar;
use crate::series::{Series, Var};
use crate::truncation::{Filter, TruncationCtx};

/// `sum_d c_d v^d` with every coefficient of degree `<= precision` known.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    var: Var,
    coeffs: BTreeMap<i64, CoefficientPoly>,
    precision: i64,
    filter: Filter,
}

impl LaurentSeries {
    pub fn zero(var: Var, precision: i64, filter: Filter) -> Self {
        LaurentSeries { var, coeffs: BTreeMap::new(), precision, filter }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, CoefficientPoly)>>(
        var: Var,
        precision: i64,
        filter: Filter,
        terms: I,
    ) -> Self {
        let mut s = LaurentSeries::zero(var, precision, filter);
        for (d, c) in terms {
            s.add_to_coeff(d, &c);
        }
        s
    }

    /// Scalar coefficients starting at degree `start`.
    pub fn from_scalars<I: IntoIterator<Item = Scalar>>(var: Var, start: i64, precision: i64, coeffs: I) -> Self {
        LaurentSeries::from_terms(
            var,
            precision,
            Filter::none(),
            coeffs.into_iter().enumerate().map(|(i, c)| (start + i as i64, CoefficientPoly::constant(c))),
        )
    }

    pub fn from_series(s: &Series) -> Self {
        LaurentSeries::from_terms(s.var(), s.max_degree(), s.filter().clone(), s.support().map(|(d, c)| (d, c.clone())))
    }

    /// The non-negative part as an ordinary series; fails when negative degrees are present.
    pub fn to_series(&self) -> Result<Series> {
        if let Some((&d, _)) = self.coeffs.iter().next() {
            if d < 0 {
                return Err(Error::OutOfTruncation(format!("degree {d} is negative")));
            }
        }
        let ctx = TruncationCtx::with_filter(self.precision, self.filter.clone());
        let mut s = Series::zero(self.var, ctx);
        for (&d, c) in &self.coeffs {
            s.set_coeff(d, c.clone());
        }
        Ok(s)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    pub fn coeff(&self, d: i64) -> CoefficientPoly {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    /// `[v^d]`, refusing degrees above the precision.
    pub fn extract(&self, d: i64) -> Result<CoefficientPoly> {
        if d > self.precision {
            return Err(Error::OutOfTruncation(format!("degree {d} above precision {}", self.precision)));
        }
        Ok(self.coeff(d))
    }

    fn add_to_coeff(&mut self, d: i64, c: &CoefficientPoly) {
        if d > self.precision {
            return;
        }
        let e = self.coeffs.entry(d).or_default();
        e.add_assign_ref(&c.filtered(&self.filter));
        if e.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, &CoefficientPoly)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    /// Least degree with nonzero coefficient.
    pub fn valuation(&self) -> Result<i64> {
        self.coeffs.keys().next().copied().ok_or(Error::ZeroSeries)
    }

    fn check_var(&self, other: &LaurentSeries) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn add(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.check_var(other)?;
        let precision = self.precision.min(other.precision);
        let filter = self.filter.intersect(&other.filter);
        let terms = self.support().chain(other.support()).map(|(d, c)| (d, c.clone()));
        Ok(LaurentSeries::from_terms(self.var, precision, filter, terms))
    }

    pub fn neg(&self) -> LaurentSeries {
        LaurentSeries { coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(), ..self.clone() }
    }

    pub fn sub(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.add(&other.neg())
    }

    /// Product; known through `min(p_a + v_b, p_b + v_a)`.
    pub fn mul(&self, other: &LaurentSeries) -> Result<LaurentSeries> {
        self.check_var(other)?;
        let filter = self.filter.intersect(&other.filter);
        let va = self.valuation().unwrap_or(self.precision + 1);
        let vb = other.valuation().unwrap_or(other.precision + 1);
        let precision = (self.precision + vb).min(other.precision + va);
        let mut out = LaurentSeries::zero(self.var, precision, filter.clone());
        for (i, a) in self.support() {
            for (j, b) in other.support() {
                let d = i + j;
                if d > precision {
                    break;
                }
                let mut t = CoefficientPoly::zero();
                t.add_product(a, b, &filter);
                out.add_to_coeff(d, &t);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoefficientPoly) -> LaurentSeries {
        let terms: Vec<_> = self.support().map(|(d, x)| (d, x.mul_filtered(c, &self.filter))).collect();
        LaurentSeries::from_terms(self.var, self.precision, self.filter.clone(), terms)
    }

    /// Multiplicative inverse `v^-val * (lead + rest)^-1`; the relative precision is kept.
    pub fn inverse(&self) -> Result<LaurentSeries> {
        let v = self.valuation()?;
        let rel = self.precision - v;
        let ctx = TruncationCtx::with_filter(rel, self.filter.clone());
        let mut norm = Series::zero(self.var, ctx);
        for (d, c) in self.support() {
            norm.set_coeff(d - v, c.clone());
        }
        let inv = norm.invert_mult()?;
        Ok(LaurentSeries::from_terms(
            self.var,
            rel - v,
            self.filter.clone(),
            inv.support().map(|(d, c)| (d - v, c.clone())),
        ))
    }

    pub fn pow(&self, n: i64) -> Result<LaurentSeries> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = LaurentSeries::one_like(self);
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    fn one_like(s: &LaurentSeries) -> LaurentSeries {
        LaurentSeries::from_terms(s.var, i64::MAX / 4, s.filter.clone(), [(0, CoefficientPoly::one())])
    }

    pub fn derive(&self) -> LaurentSeries {
        let terms: Vec<_> = self.support().map(|(d, c)| (d - 1, c.scale_int(d))).collect();
        LaurentSeries::from_terms(self.var, self.precision - 1, self.filter.clone(), terms)
    }

    /// The residue `[v^-1]`.
    pub fn residue(&self) -> Result<CoefficientPoly> {
        self.extract(-1)
    }

    /// `f(r)` for `val(r) > 0`, in the variable of `r`.
    pub fn compose(&self, r: &LaurentSeries) -> Result<LaurentSeries> {
        let alpha = r.valuation()?;
        if alpha <= 0 {
            return Err(Error::NonpositiveValuation(alpha));
        }
        let filter = self.filter.intersect(&r.filter);
        // terms of f above its precision enter at degree >= (p_f + 1) * alpha
        let mut precision = (self.precision + 1) * alpha - 1;
        let rel = r.precision - alpha;
        for (d, _) in self.support() {
            if d != 0 {
                precision = precision.min(d * alpha + rel);
            }
        }
        let mut out = LaurentSeries::zero(r.var, precision, filter.clone());
        let r = LaurentSeries { filter: filter.clone(), ..r.clone() };
        let r_inv = r.inverse()?;
        for (d, c) in self.support() {
            let p = if d >= 0 { r.pow(d)? } else { r_inv.pow(-d)? };
            for (e, x) in p.support() {
                out.add_to_coeff(e, &x.mul_filtered(c, &filter));
            }
        }
        Ok(out)
    }
}

/// Both sides of the residue composition identity: `(alpha [x^-1] f, [z^-1] f(r) r')` with
/// `alpha = val(r)`.
pub fn residue_compose_check(f: &LaurentSeries, r: &LaurentSeries) -> Result<(CoefficientPoly, CoefficientPoly)> {
    let alpha = r.valuation()?;
    if alpha <= 0 {
        return Err(Error::NonpositiveValuation(alpha));
    }
    let lhs = f.residue()?.scale_int(alpha);
    let rhs = f.compose(r)?.mul(&r.derive())?.residue()?;
    Ok((lhs, rhs))
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.support() {
            write!(f, "[{c}]*{}^{d} + ", self.var)?;
        }
        write!(f, "O({}^{})", self.var, self.precision + 1)
    }
}

impl fmt::Debug for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(start: i64, precision: i64, c: &[i64]) -> LaurentSeries {
        LaurentSeries::from_scalars(Var::X, start, precision, c.iter().map(|&n| Scalar::from_int(n)))
    }

    #[test]
    fn valuations_add() {
        let a = ints(3, 8, &[1, 0, 1]);
        let b = ints(-2, 4, &[1, 1]);
        assert_eq!(a.valuation(), Ok(3));
        assert_eq!(b.valuation(), Ok(-2));
        assert_eq!(a.mul(&b).unwrap().valuation(), Ok(1));
        assert_eq!(LaurentSeries::zero(Var::X, 3, Filter::none()).valuation(), Err(Error::ZeroSeries));
    }

    #[test]
    fn product_precision() {
        let a = ints(0, 5, &[1, 1]);
        let b = ints(-2, 3, &[1]);
        assert_eq!(a.mul(&b).unwrap().precision(), 3);
    }

    #[test]
    fn inverse_round_trip() {
        let a = ints(-1, 6, &[2, 1, 0, 3]);
        let one = a.mul(&a.inverse().unwrap()).unwrap();
        assert_eq!(one.valuation(), Ok(0));
        assert_eq!(one.support().count(), 1);
        assert!(one.precision() >= 6);
    }

    #[test]
    fn residue_of_reciprocal_under_square() {
        let f = ints(-1, 4, &[1]);
        let r = ints(2, 10, &[1]);
        let (l, rr) = residue_compose_check(&f, &r).unwrap();
        assert_eq!(l, CoefficientPoly::from_int(2));
        assert_eq!(rr, CoefficientPoly::from_int(2));
        assert_eq!(residue_compose_check(&f, &ints(0, 4, &[1, 1])), Err(Error::NonpositiveValuation(0)));
    }
}
