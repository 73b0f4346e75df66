//! Truncated power series in one principal variable with polynomial coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::CoefficientPoly;
use crate::scalar::{binomial, Scalar};
use crate::truncation::{Filter, TruncationCtx};

static ZERO: CoefficientPoly = CoefficientPoly::zero();

/// Name of the principal variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
    T,
    W,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::T => "t",
            Var::W => "w",
        };
        write!(f, "{s}")
    }
}

/// `sum_{d <= K} c_d v^d`. Coefficients above `K` are unknown, not zero; every stored
/// monomial passes the filter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    var: Var,
    coeffs: Vec<CoefficientPoly>,
    ctx: TruncationCtx,
}

fn width(k: i64) -> usize {
    (k + 1).max(0) as usize
}

impl Series {
    pub fn zero(var: Var, ctx: TruncationCtx) -> Self {
        Series { var, coeffs: vec![CoefficientPoly::zero(); width(ctx.max_degree)], ctx }
    }

    pub fn one(var: Var, ctx: TruncationCtx) -> Self {
        Series::constant(var, ctx, CoefficientPoly::one())
    }

    pub fn constant(var: Var, ctx: TruncationCtx, c: CoefficientPoly) -> Self {
        Series::monomial(var, ctx, 0, c)
    }

    /// `c * v^deg`, empty when `deg` is outside the window.
    pub fn monomial(var: Var, ctx: TruncationCtx, deg: i64, c: CoefficientPoly) -> Self {
        let mut s = Series::zero(var, ctx);
        s.set_coeff(deg, c);
        s
    }

    /// The variable itself.
    pub fn identity(var: Var, ctx: TruncationCtx) -> Self {
        Series::monomial(var, ctx, 1, CoefficientPoly::one())
    }

    /// Builds from dense coefficients starting at degree 0; entries beyond `K` are dropped.
    pub fn from_coeffs<I: IntoIterator<Item = CoefficientPoly>>(var: Var, ctx: TruncationCtx, coeffs: I) -> Self {
        let mut s = Series::zero(var, ctx);
        for (d, c) in coeffs.into_iter().enumerate() {
            s.set_coeff(d as i64, c);
        }
        s
    }

    /// Scalar coefficients, no filter.
    pub fn from_scalars<I: IntoIterator<Item = Scalar>>(var: Var, max_degree: i64, coeffs: I) -> Self {
        Series::from_coeffs(var, TruncationCtx::new(max_degree), coeffs.into_iter().map(CoefficientPoly::constant))
    }

    pub fn from_ints(var: Var, max_degree: i64, coeffs: &[i64]) -> Self {
        Series::from_scalars(var, max_degree, coeffs.iter().map(|&n| Scalar::from_int(n)))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn ctx(&self) -> &TruncationCtx {
        &self.ctx
    }

    pub fn filter(&self) -> &Filter {
        &self.ctx.filter
    }

    pub fn max_degree(&self) -> i64 {
        self.ctx.max_degree
    }

    /// Stored coefficient, zero outside the window.
    pub fn coeff(&self, d: i64) -> &CoefficientPoly {
        if d < 0 {
            return &ZERO;
        }
        self.coeffs.get(d as usize).unwrap_or(&ZERO)
    }

    /// The coefficient operator `[v^d]` restricted to one monomial. Distinguishes an unknown
    /// coefficient from a zero one.
    pub fn extract_coeff(&self, d: i64, m: &Monomial) -> Result<Scalar> {
        if d < 0 || d > self.ctx.max_degree {
            return Err(Error::OutOfTruncation(format!("degree {d} above {}", self.ctx.max_degree)));
        }
        if !self.ctx.filter.admits(m) {
            return Err(Error::OutOfTruncation(format!("monomial {m} fails the filter")));
        }
        Ok(self.coeff(d).coeff(m))
    }

    /// Replaces `[v^d]`, filtering the monomials. Degrees outside the window are ignored.
    pub fn set_coeff(&mut self, d: i64, c: CoefficientPoly) {
        if d < 0 || d > self.ctx.max_degree {
            return;
        }
        self.coeffs[d as usize] = c.filtered(&self.ctx.filter);
    }

    pub fn add_to_coeff(&mut self, d: i64, c: &CoefficientPoly) {
        if d < 0 || d > self.ctx.max_degree {
            return;
        }
        let filtered = c.filtered(&self.ctx.filter);
        self.coeffs[d as usize].add_assign_ref(&filtered);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CoefficientPoly::is_zero)
    }

    /// Degrees with nonzero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = (i64, &CoefficientPoly)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(d, c)| (d as i64, c))
    }

    /// Least degree with a nonzero coefficient.
    pub fn valuation(&self) -> Result<i64> {
        self.support().next().map(|(d, _)| d).ok_or(Error::ZeroSeries)
    }

    /// Same coefficients under the narrower window `ctx`; never widens.
    pub fn restrict(&self, ctx: &TruncationCtx) -> Series {
        let ctx = self.ctx.intersect(ctx);
        Series::from_coeffs(self.var, ctx, self.coeffs.iter().cloned())
    }

    pub fn truncate(&self, max_degree: i64) -> Series {
        self.restrict(&self.ctx.with_degree(max_degree.min(self.ctx.max_degree)))
    }

    /// Declares every coefficient above the current window to be zero and widens the window.
    /// Only sound for series known to be polynomials.
    pub fn pad_to(&self, max_degree: i64) -> Series {
        let ctx = self.ctx.with_degree(max_degree);
        Series::from_coeffs(self.var, ctx, self.coeffs.iter().cloned())
    }

    /// Replaces the filter, refiltering the coefficients.
    pub fn with_filter(&self, filter: Filter) -> Series {
        let ctx = TruncationCtx::with_filter(self.ctx.max_degree, filter);
        Series::from_coeffs(self.var, ctx, self.coeffs.iter().cloned())
    }

    /// Renames the principal variable.
    pub fn rename(&self, var: Var) -> Series {
        Series { var, ..self.clone() }
    }

    pub fn map_coeffs<F: Fn(&CoefficientPoly) -> CoefficientPoly>(&self, f: F) -> Series {
        Series::from_coeffs(self.var, self.ctx.clone(), self.coeffs.iter().map(f))
    }

    /// Applies `f(d, c)` to each coefficient.
    pub fn map_coeffs_indexed<F: Fn(i64, &CoefficientPoly) -> CoefficientPoly>(&self, f: F) -> Series {
        Series::from_coeffs(self.var, self.ctx.clone(), self.coeffs.iter().enumerate().map(|(d, c)| f(d as i64, c)))
    }

    fn check_var(&self, other: &Series) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        self.check_var(other)?;
        let ctx = self.ctx.intersect(&other.ctx);
        let mut out = self.restrict(&ctx);
        for (d, c) in other.support() {
            out.add_to_coeff(d, c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Series) -> Result<Series> {
        self.check_var(other)?;
        let ctx = self.ctx.intersect(&other.ctx);
        let mut out = Series::zero(self.var, ctx.clone());
        let a: Vec<(i64, &CoefficientPoly)> = self.support().collect();
        let b: Vec<(i64, &CoefficientPoly)> = other.support().collect();
        for &(i, ca) in &a {
            for &(j, cb) in &b {
                let d = i + j;
                if d > ctx.max_degree {
                    break;
                }
                out.coeffs[d as usize].add_product(ca, cb, &ctx.filter);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &CoefficientPoly) -> Series {
        let filter = self.ctx.filter.clone();
        self.map_coeffs(|x| x.mul_filtered(c, &filter))
    }

    pub fn scale_scalar(&self, c: &Scalar) -> Series {
        self.map_coeffs(|x| x.scale(c))
    }

    /// Multiplies by `v^n`, keeping the window.
    pub fn shift_up(&self, n: i64) -> Series {
        let mut out = Series::zero(self.var, self.ctx.clone());
        for (d, c) in self.support() {
            out.set_coeff(d + n, c.clone());
        }
        out
    }

    /// Divides by `v^n`, discarding degrees below `n`. The window shrinks by `n`.
    pub fn shift_down(&self, n: i64) -> Series {
        let ctx = self.ctx.with_degree(self.ctx.max_degree - n);
        Series::from_coeffs(self.var, ctx, self.coeffs.iter().skip(n.max(0) as usize).cloned())
    }

    /// `v -> c*v`.
    pub fn scale_var(&self, c: &Scalar) -> Series {
        let mut p = Scalar::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            out.push(x.scale(&p));
            p = &p * c;
        }
        Series::from_coeffs(self.var, self.ctx.clone(), out)
    }

    /// `v -> -v`.
    pub fn reflect(&self) -> Series {
        self.scale_var(&Scalar::from_int(-1))
    }

    pub fn derive(&self) -> Series {
        let ctx = self.ctx.with_degree(self.ctx.max_degree - 1);
        Series::from_coeffs(self.var, ctx, self.coeffs.iter().enumerate().skip(1).map(|(d, c)| c.scale_int(d as i64)))
    }

    /// Antiderivative with zero constant term; the window grows by one.
    pub fn integrate(&self) -> Series {
        let ctx = self.ctx.with_degree(self.ctx.max_degree + 1);
        let coeffs = std::iter::once(CoefficientPoly::zero())
            .chain(self.coeffs.iter().enumerate().map(|(d, c)| c.scale(&Scalar::from_ratio(1, d as i64 + 1))));
        Series::from_coeffs(self.var, ctx, coeffs)
    }

    /// Multiplicative inverse, defined when `[v^0]` is a graded unit.
    pub fn invert_mult(&self) -> Result<Series> {
        let filter = &self.ctx.filter;
        let c0_inv = self.coeff(0).inverse(filter)?;
        let mut out = Series::zero(self.var, self.ctx.clone());
        if self.ctx.max_degree < 0 {
            return Ok(out);
        }
        out.coeffs[0] = c0_inv.clone();
        let neg_inv = -&c0_inv;
        for n in 1..=self.ctx.max_degree {
            let mut acc = CoefficientPoly::zero();
            for i in 1..=n {
                let a = self.coeff(i);
                if a.is_zero() {
                    continue;
                }
                acc.add_product(a, &out.coeffs[(n - i) as usize], filter);
            }
            out.coeffs[n as usize] = acc.mul_filtered(&neg_inv, filter);
        }
        Ok(out)
    }

    /// `self^n`, by repeated squaring.
    pub fn pow(&self, mut n: u32) -> Series {
        let mut acc = Series::one(self.var, self.ctx.clone());
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^n` for any integer `n`; negative powers need an invertible constant term.
    pub fn pow_i64(&self, n: i64) -> Result<Series> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.invert_mult()?.pow(n.unsigned_abs() as u32))
        }
    }

    /// `exp(self)` through the derivative recurrence `n a_n = sum_k k b_k a_{n-k}`, the
    /// exponential-formula recurrence written for ordinary coefficients. A constant term is
    /// allowed when it is topologically nilpotent.
    pub fn exp(&self) -> Result<Series> {
        let filter = self.ctx.filter.clone();
        let a0 = self.coeff(0).exp_nilpotent(&filter).map_err(|_| {
            Error::BadConstantTerm(format!("exp needs a vanishing constant term, got {}", self.coeff(0)))
        })?;
        let mut out = Series::zero(self.var, self.ctx.clone());
        if self.ctx.max_degree < 0 {
            return Ok(out);
        }
        out.coeffs[0] = a0;
        for n in 1..=self.ctx.max_degree {
            let mut acc = CoefficientPoly::zero();
            for k in 1..=n {
                let b = self.coeff(k);
                if b.is_zero() {
                    continue;
                }
                acc.add_product(&b.scale_int(k), &out.coeffs[(n - k) as usize], &filter);
            }
            out.coeffs[n as usize] = acc.scale(&Scalar::from_ratio(1, n));
        }
        Ok(out)
    }

    /// `log(self)` through `n a_n = n b_n - sum_{k<n} k a_k b_{n-k}`. Needs `[v^0] = 1 + nil`
    /// with `nil` topologically nilpotent.
    pub fn log(&self) -> Result<Series> {
        let filter = self.ctx.filter.clone();
        let b0 = self.coeff(0);
        let bad = || Error::BadConstantTerm(format!("log needs constant term 1, got {b0}"));
        let nil = b0 - &CoefficientPoly::one();
        let a0 = nil.log1p_nilpotent(&filter).map_err(|_| bad())?;
        // normalise so that the constant term is exactly one
        let normed = if nil.is_zero() { self.clone() } else { self.scale(&b0.inverse(&filter).map_err(|_| bad())?) };
        let mut out = Series::zero(self.var, self.ctx.clone());
        if self.ctx.max_degree < 0 {
            return Ok(out);
        }
        out.coeffs[0] = a0;
        for n in 1..=self.ctx.max_degree {
            let mut acc = normed.coeff(n).scale_int(n);
            for k in 1..n {
                let a = &out.coeffs[k as usize];
                if a.is_zero() {
                    continue;
                }
                let b = normed.coeff(n - k);
                if b.is_zero() {
                    continue;
                }
                let mut t = CoefficientPoly::zero();
                t.add_product(&a.scale_int(k), b, &filter);
                acc.sub_assign_ref(&t);
            }
            out.coeffs[n as usize] = acc.scale(&Scalar::from_ratio(1, n));
        }
        Ok(out)
    }

    /// `f(g)` by Horner evaluation; `g` must have no constant term. The result lives in the
    /// variable of `g` and is known through `min(K_f, K_g)`.
    pub fn compose(&self, g: &Series) -> Result<Series> {
        if !g.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantInner);
        }
        let k = self.ctx.max_degree.min(g.ctx.max_degree);
        let ctx = TruncationCtx::with_filter(k, self.ctx.filter.intersect(&g.ctx.filter));
        let g = g.restrict(&ctx);
        let mut acc = Series::zero(g.var, ctx.clone());
        for d in (0..=k).rev() {
            acc = &acc * &g;
            acc.add_to_coeff(0, self.coeff(d));
        }
        Ok(acc)
    }

    /// Compositional inverse of `a = v*phi(v)` as `sum_k (1/k) v^k [t^{k-1}] phi^{-k}`.
    pub fn comp_inverse(&self) -> Result<Series> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NotInvertible("nonzero constant term".into()));
        }
        let filter = &self.ctx.filter;
        if !self.coeff(1).is_unit(filter) {
            return Err(Error::NotInvertible(format!("linear coefficient {} is not a unit", self.coeff(1))));
        }
        let phi = self.shift_down(1);
        let psi = phi.invert_mult()?;
        let mut out = Series::zero(self.var, self.ctx.clone());
        let mut power = Series::one(self.var, phi.ctx.clone());
        for k in 1..=self.ctx.max_degree {
            power = &power * &psi;
            let c = power.coeff(k - 1).scale(&Scalar::from_ratio(1, k));
            out.set_coeff(k, c);
        }
        Ok(out)
    }

    /// `h(v + t)`, treating the stored window as the whole of `h`.
    pub fn taylor_shift(&self, t: &CoefficientPoly) -> Series {
        let filter = &self.ctx.filter;
        let k = self.ctx.max_degree;
        let mut tpow = vec![CoefficientPoly::one()];
        for n in 1..=k.max(0) {
            let next = tpow[(n - 1) as usize].mul_filtered(t, filter);
            tpow.push(next);
        }
        let mut out = Series::zero(self.var, self.ctx.clone());
        for d in 0..=k {
            let mut acc = CoefficientPoly::zero();
            for n in 0..=(k - d) {
                let h = self.coeff(d + n);
                if h.is_zero() || tpow[n as usize].is_zero() {
                    continue;
                }
                let b = Scalar::from_bigint(binomial((d + n) as u64, n as u64));
                acc.add_product(&h.scale(&b), &tpow[n as usize], filter);
            }
            out.coeffs[d as usize] = acc;
        }
        out
    }

    /// Applies `c -> substitute(c)` to every coefficient.
    pub fn substitute(&self, values: &std::collections::BTreeMap<crate::monomial::Symbol, Scalar>) -> Series {
        self.map_coeffs(|c| c.substitute(values))
    }

    /// Ordinary coefficient `[v^d]` times `d!`.
    pub fn egf_coeff(&self, d: i64) -> CoefficientPoly {
        self.coeff(d).scale(&Scalar::from_bigint(crate::scalar::factorial(d.max(0) as u64)))
    }

    /// Coefficientwise difference, ignoring variable names and filters.
    pub fn diff_terms(&self, other: &Series) -> Vec<(i64, Monomial, Scalar)> {
        let k = self.ctx.max_degree.min(other.ctx.max_degree);
        let mut out = Vec::new();
        for d in 0..=k {
            let diff = self.coeff(d) - other.coeff(d);
            for (m, c) in diff.terms() {
                out.push((d, m.clone(), c.clone()));
            }
        }
        out
    }

    /// Whether both series agree on their common window.
    pub fn agrees_with(&self, other: &Series) -> bool {
        self.diff_terms(other).is_empty()
    }
}

/// Solves `w = t*phi(w)` and returns `f(w)` through `[t^k] f(w) = (1/k)[l^{k-1}] f' phi^k`
/// with `[t^0] f(w) = f(0)`. The result is in `t`.
pub fn lagrange_solve(phi: &Series, f: &Series, k: i64) -> Result<Series> {
    let filter = phi.ctx.filter.intersect(&f.ctx.filter);
    if !phi.coeff(0).is_unit(&filter) {
        return Err(Error::NonUnitPhiConstant);
    }
    let k = k.min(phi.ctx.max_degree + 1).min(f.ctx.max_degree);
    let ctx = TruncationCtx::with_filter(k, filter);
    let phi = phi.rename(f.var).restrict(&ctx.with_degree(k - 1));
    let fp = f.derive().restrict(&ctx.with_degree(k - 1));
    let mut out = Series::zero(Var::T, ctx.clone());
    out.set_coeff(0, f.coeff(0).clone());
    let mut power = Series::one(f.var, phi.ctx.clone());
    for j in 1..=k {
        power = &power * &phi;
        let prod = &fp * &power;
        out.set_coeff(j, prod.coeff(j - 1).scale(&Scalar::from_ratio(1, j)));
    }
    Ok(out)
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        self.checked_add(o).expect("series variables must match")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        self.checked_sub(o).expect("series variables must match")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        self.checked_mul(o).expect("series variables must match")
    }
}

impl Add for Series {
    type Output = Series;
    fn add(self, o: Series) -> Series {
        &self + &o
    }
}

impl Sub for Series {
    type Output = Series;
    fn sub(self, o: Series) -> Series {
        &self - &o
    }
}

impl Mul for Series {
    type Output = Series;
    fn mul(self, o: Series) -> Series {
        &self * &o
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        -&self
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "[{c}]*{}^{d}", self.var)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({}^{})", self.var, self.ctx.max_degree + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::Symbol;

    fn ints(k: i64, c: &[i64]) -> Series {
        Series::from_ints(Var::Y, k, c)
    }

    #[test]
    fn product_of_conjugates() {
        let a = ints(3, &[1, 1]);
        let b = ints(3, &[1, -1]);
        assert_eq!(&a * &b, ints(3, &[1, 0, -1]));
        let c = ints(4, &[0, 1, -1]);
        let d = ints(4, &[0, 1, 1]);
        assert_eq!(&c * &d, ints(4, &[0, 0, 1, 0, -1]));
    }

    #[test]
    fn mismatched_variables_are_reported() {
        let a = ints(2, &[1]);
        let b = a.rename(Var::Z);
        assert_eq!(a.checked_add(&b), Err(Error::VariableMismatch(Var::Y, Var::Z)));
    }

    #[test]
    fn window_intersection() {
        let a = ints(5, &[1, 1]);
        let b = ints(2, &[1, 1]);
        assert_eq!((&a * &b).max_degree(), 2);
    }

    #[test]
    fn extract_distinguishes_unknown() {
        let s = ints(2, &[1, 0, -1]);
        assert_eq!(s.extract_coeff(2, &Monomial::one()), Ok(Scalar::from_int(-1)));
        assert!(matches!(s.extract_coeff(3, &Monomial::one()), Err(Error::OutOfTruncation(_))));
        let f = s.with_filter(Filter::edges(1));
        assert!(f.extract_coeff(1, &Monomial::lambda(4)).is_err());
    }

    #[test]
    fn derive_and_integrate() {
        let s =
            Series::from_scalars(Var::Y, 3, [0, 0, 0, 1].map(Scalar::from_int)).scale_scalar(&Scalar::from_ratio(1, 6));
        let d = s.derive();
        assert_eq!(d.coeff(2).constant_coeff(), Scalar::from_ratio(1, 2));
        assert_eq!(ints(2, &[0, 0, 1]).integrate().coeff(3).constant_coeff(), Scalar::from_ratio(1, 3));
        let r = ints(4, &[3, 1, 4, 1, 5]);
        assert_eq!(r.integrate().derive(), r);
    }

    #[test]
    fn geometric_inverse() {
        let s = ints(5, &[1, -1]);
        assert_eq!(s.invert_mult().unwrap(), ints(5, &[1, 1, 1, 1, 1, 1]));
        let u = Series::constant(Var::Y, TruncationCtx::new(2), CoefficientPoly::symbol(Symbol::U));
        let inv = u.invert_mult().unwrap();
        assert_eq!(inv.coeff(0), &CoefficientPoly::term(Monomial::pow_of(Symbol::U, -1), Scalar::one()));
        assert!(ints(3, &[0, 1]).invert_mult().is_err());
    }

    #[test]
    fn exp_of_half_square() {
        let u = CoefficientPoly::symbol(Symbol::U);
        let s = Series::monomial(Var::Y, TruncationCtx::new(4), 2, u.scale(&Scalar::from_ratio(1, 2)));
        let e = s.exp().unwrap();
        assert_eq!(e.coeff(4), &(&u * &u).scale(&Scalar::from_ratio(1, 8)));
        assert_eq!(e.coeff(3), &CoefficientPoly::zero());
        assert!(ints(3, &[1, 1]).exp().is_err());
    }

    #[test]
    fn log_of_one_plus_y() {
        let l = ints(3, &[1, 1]).log().unwrap();
        let want = Series::from_scalars(
            Var::Y,
            3,
            [Scalar::zero(), Scalar::one(), Scalar::from_ratio(-1, 2), Scalar::from_ratio(1, 3)],
        );
        assert_eq!(l, want);
        assert!(ints(3, &[2, 1]).log().is_err());
    }

    #[test]
    fn composition() {
        let f = ints(4, &[0, 0, 1]);
        let g = ints(4, &[0, 1, 0, 1]);
        assert_eq!(f.compose(&g).unwrap(), ints(4, &[0, 0, 1, 0, 2]));
        assert_eq!(f.compose(&ints(4, &[1, 1])), Err(Error::NonzeroConstantInner));
    }

    #[test]
    fn inverse_of_y_minus_y2_is_catalan() {
        let a = ints(4, &[0, 1, -1]);
        assert_eq!(a.comp_inverse().unwrap(), ints(4, &[0, 1, 1, 2, 5]));
        let u = CoefficientPoly::symbol(Symbol::U);
        let b = Series::monomial(Var::Y, TruncationCtx::new(3), 1, u.clone());
        let inv = b.comp_inverse().unwrap();
        assert_eq!(inv.coeff(1), &u.inverse(&Filter::none()).unwrap());
        assert!(ints(3, &[0, 0, 1]).comp_inverse().is_err());
    }

    #[test]
    fn taylor_shift_binomial() {
        let s = ints(2, &[0, 0, 1]);
        assert_eq!(s.taylor_shift(&CoefficientPoly::one()), ints(2, &[1, 2, 1]));
        let c = CoefficientPoly::symbol(Symbol::C);
        let t = ints(3, &[0, 0, 0, 1]).taylor_shift(&c);
        assert_eq!(t.coeff(1), &(&c * &c).scale_int(3));
        assert_eq!(t.coeff(0), &c.pow_filtered(3, &Filter::none()));
    }

    #[test]
    fn lagrange_trivial_phi() {
        let phi = ints(5, &[1]);
        let f = ints(5, &[0, 1]);
        let w = lagrange_solve(&phi, &f, 5).unwrap();
        assert_eq!(w, ints(5, &[0, 1]).rename(Var::T));
        assert_eq!(lagrange_solve(&ints(5, &[0, 1]), &f, 5), Err(Error::NonUnitPhiConstant));
    }
}
