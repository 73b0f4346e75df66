//! Algebraic and combinatorial Fourier transforms built from Gaussian differential operators.
//!
//! Everything reduces to two primitives: resolving `e^{p d^2/2} e^{q y^2/2}` into a prefactor
//! and a Gaussian, and applying `e^{G(d)}` to a series, which is a finite sum once a weight
//! bound forces `[x^j] e^G` to vanish for large `j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::action::Couplings;
use crate::error::{Error, Result};
use crate::legendre::weighted_tuples;
use crate::monomial::{Monomial, Symbol};
use crate::poly::CoefficientPoly;
use crate::scalar::{double_factorial, factorial, Scalar};
use crate::series::{Series, Var};
use crate::truncation::{Filter, TruncationCtx};

/// `e^{G(d)} e^{-c^-1 z^2/2}`: the edge coefficient `c` multiplies `x^2/2`, the remainder `G`
/// holds everything else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentSplit {
    pub edge_coeff: CoefficientPoly,
    pub remainder: Series,
}

impl ExponentSplit {
    /// `c = -u^-1`, `G = F_int`, complete through degree `degree`.
    pub fn fundamental(couplings: &Couplings, degree: i64, filter: Filter) -> Self {
        ExponentSplit {
            edge_coeff: -couplings.u_inv_poly(),
            remainder: couplings.interaction(&TruncationCtx::with_filter(degree, filter)),
        }
    }
}

/// `scalar * sqrt(radicand) * prod s^{h_s/2}` times a series with integer exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformResult {
    pub scalar: Scalar,
    pub radicand: Scalar,
    /// Exponents in halves: `2` means the first power.
    pub half_exps: BTreeMap<Symbol, i32>,
    pub series: Series,
}

impl TransformResult {
    /// Multiplies the prefactor by `m^{e/2}` for each `(s, e)`.
    fn mul_half(&mut self, s: Symbol, halves: i32) {
        let e = self.half_exps.entry(s).or_insert(0);
        *e += halves;
        if *e == 0 {
            self.half_exps.remove(&s);
        }
    }

    /// Whether any part of the result mentions `s`.
    pub fn mentions(&self, s: Symbol) -> bool {
        self.half_exps.contains_key(&s) || self.series.support().any(|(_, c)| c.mentions(s))
    }

    pub fn prefactor_string(&self) -> String {
        let mut parts = vec![];
        if !self.scalar.is_one() || (self.radicand.is_one() && self.half_exps.is_empty()) {
            parts.push(format!("({})", self.scalar));
        }
        if !self.radicand.is_one() {
            parts.push(format!("sqrt({})", self.radicand));
        }
        for (s, e) in &self.half_exps {
            if e % 2 == 0 {
                parts.push(format!("{}^{}", s.name(), e / 2));
            } else {
                parts.push(format!("{}^({}/2)", s.name(), e));
            }
        }
        parts.join(" ")
    }
}

impl fmt::Display for TransformResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * [{}]", self.prefactor_string(), self.series)
    }
}

/// A pair `(p, q)` standing for `e^{p d^2/2} e^{q y^2/2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussPair {
    pub p: CoefficientPoly,
    pub q: CoefficientPoly,
}

fn ratio(num: BigInt, den: BigInt) -> Scalar {
    Scalar::from_rational(BigRational::new(num, den))
}

/// `e^{c y^2/2}` through degree `ctx.max_degree`.
pub fn gaussian(c: &CoefficientPoly, var: Var, ctx: &TruncationCtx) -> Series {
    let mut s = Series::zero(var, ctx.clone());
    let mut term = CoefficientPoly::one();
    let mut j = 0i64;
    while 2 * j <= ctx.max_degree {
        s.set_coeff(2 * j, term.clone());
        j += 1;
        term = term.mul_filtered(c, &ctx.filter).scale(&Scalar::from_ratio(1, 2 * j));
        if term.is_zero() {
            break;
        }
    }
    s
}

/// `e^{p d^2/2} e^{q y^2/2} = (1-pq)^{-1/2} e^{q (1-pq)^{-1} y^2/2}`.
///
/// `1 - pq` must be a graded unit `s*m*(1 + n)`. The factor `(s m)^{-1/2}` goes to the
/// prefactor and `(1 + n)^{-1/2}` is expanded binomially into the series.
pub fn gauss_resolve(g: &GaussPair, ctx: &TruncationCtx) -> Result<TransformResult> {
    let filter = &ctx.filter;
    let d = &CoefficientPoly::one() - &g.p.mul_filtered(&g.q, &Filter::none());
    if d.is_zero() {
        return Err(Error::ExceptionalElement);
    }
    let ((m, s), rest) = d.split_unit(filter).ok_or_else(|| Error::UnitRequired(format!("1 - pq = {d}")))?;
    let lead_inv = CoefficientPoly::term(m.inv(), s.inv().expect("nonzero lead"));
    let n = rest.mul_filtered(&lead_inv, &Filter::none());
    // (1 + n)^{-1/2} = sum_j binom(-1/2, j) n^j
    let mut corr = CoefficientPoly::one();
    let mut pow = CoefficientPoly::one();
    let mut binom = Scalar::one();
    let mut j = 0i64;
    loop {
        pow = pow.mul_filtered(&n, filter);
        if pow.is_zero() {
            break;
        }
        binom = &binom * &Scalar::from_ratio(-1 - 2 * j, 2 * (j + 1));
        j += 1;
        corr.add_assign_ref(&pow.scale(&binom));
    }
    let (scalar, radicand) = match s.exact_sqrt() {
        Some(r) => (r.inv().expect("nonzero root"), Scalar::one()),
        None => (Scalar::one(), s.inv().expect("nonzero lead")),
    };
    let exponent = g.q.mul_filtered(&d.inverse(filter)?, filter);
    let series = gaussian(&exponent, Var::Y, ctx).scale(&corr);
    let mut out = TransformResult { scalar, radicand, half_exps: BTreeMap::new(), series };
    for (sym, e) in m.iter() {
        out.mul_half(sym, -e);
    }
    Ok(out)
}

/// `e^{-c d^2/2}` applied to the exceptional element `Delta_a`, resolved as the pair
/// `(a - c, a^-1)`. The result is `sqrt(a/c) e^{c^-1 y^2/2}`.
pub fn exceptional_apply(c: &CoefficientPoly, ctx: &TruncationCtx) -> Result<TransformResult> {
    if !c.is_unit(&ctx.filter) {
        return Err(Error::UnitRequired(c.to_string()));
    }
    let a = CoefficientPoly::symbol(Symbol::A);
    let pair = GaussPair { p: &a - c, q: CoefficientPoly::term(Monomial::pow_of(Symbol::A, -1), Scalar::one()) };
    gauss_resolve(&pair, ctx)
}

/// Largest `j` with `[x^j] e^G` possibly nonzero under `filter`, or `None` when no bound
/// gives every term of `G` positive weight.
fn operator_degree(g: &Series, filter: &Filter) -> Option<i64> {
    let terms: Vec<(i64, &Monomial)> = g.support().flat_map(|(d, c)| c.terms().map(move |(m, _)| (d, m))).collect();
    if terms.is_empty() {
        return Some(0);
    }
    filter
        .bounds()
        .iter()
        .filter_map(|b| {
            let mut best: Option<BigRational> = None;
            for &(d, m) in &terms {
                let w = b.grading.weight(m);
                if w <= 0 {
                    return None;
                }
                let r = BigRational::new(BigInt::from(d), BigInt::from(w));
                if best.as_ref().is_none_or(|x| &r > x) {
                    best = Some(r);
                }
            }
            let rho = best.expect("nonempty");
            let top = (rho * BigRational::from_integer(BigInt::from(b.bound.max(0)))).floor();
            Some(i64::try_from(top.to_integer()).expect("degree fits"))
        })
        .min()
}

/// `e^{G(d)} s` through degree `k`, with `s` known through `k + deg`.
fn apply_exp_derivation(g: &Series, s: &Series, k: i64, deg: i64) -> Result<Series> {
    let filter = s.filter().clone();
    let e = g.truncate(deg).exp()?;
    let ctx = TruncationCtx::with_filter(k, filter.clone());
    let mut out = Series::zero(s.var(), ctx);
    for d in 0..=k {
        let mut acc = CoefficientPoly::zero();
        for j in 0..=deg {
            let ej = e.coeff(j);
            let sj = s.coeff(d + j);
            if ej.is_zero() || sj.is_zero() {
                continue;
            }
            let falling = ratio(factorial((d + j) as u64), factorial(d as u64));
            acc.add_product(&ej.scale(&falling), sj, &filter);
        }
        out.set_coeff(d, acc);
    }
    Ok(out)
}

fn required_degree(g: &Series, filter: &Filter) -> Result<i64> {
    let deg = operator_degree(g, filter)
        .ok_or_else(|| Error::FilterTooLoose("some vertex term has no positive weight".into()))?;
    if g.max_degree() < deg {
        return Err(Error::FilterTooLoose(format!(
            "remainder known through degree {} but the operator reaches {deg}",
            g.max_degree()
        )));
    }
    Ok(deg)
}

/// `e^{G(d_z)} e^{-c^-1 z^2/2}` through degree `ctx.max_degree`, in `y`.
pub fn fourier_comb(split: &ExponentSplit, ctx: &TruncationCtx) -> Result<Series> {
    let filter = ctx.filter.intersect(split.remainder.filter());
    let cinv = split.edge_coeff.inverse(&filter).map_err(|_| Error::NonUnitEdge(split.edge_coeff.to_string()))?;
    let g = split.remainder.with_filter(filter.clone());
    let deg = required_degree(&g, &filter)?;
    let k = ctx.max_degree;
    let gauss = gaussian(&-&cinv, Var::Y, &TruncationCtx::with_filter(k + deg, filter));
    apply_exp_derivation(&g, &gauss, k, deg)
}

/// `F_a[e^f] = a^{-1/2} e^{f(i d)} e^{a d^2/2} e^{a^-1 y^2/2}` with the symbol `a` kept
/// throughout, so the absence of `a` in the result is an actual computation.
pub fn fourier_alg(f: &Series, ctx: &TruncationCtx) -> Result<TransformResult> {
    let filter = ctx.filter.intersect(f.filter());
    let l2 = f.coeff(2).scale_int(2);
    if !l2.is_unit(&filter) {
        return Err(Error::QuadraticNotUnit(l2.to_string()));
    }
    let mut g = f.with_filter(filter.clone());
    g.set_coeff(2, CoefficientPoly::zero());
    let g = g.scale_var(&Scalar::i());
    let deg = required_degree(&g, &filter)?;
    let a = CoefficientPoly::symbol(Symbol::A);
    let pair = GaussPair { p: &a - &l2, q: CoefficientPoly::term(Monomial::pow_of(Symbol::A, -1), Scalar::one()) };
    let inner = TruncationCtx::with_filter(ctx.max_degree + deg, filter);
    let mut res = gauss_resolve(&pair, &inner)?;
    res.mul_half(Symbol::A, -1);
    res.series = apply_exp_derivation(&g.rename(Var::Y), &res.series, ctx.max_degree, deg)?;
    Ok(res)
}

/// Outcome of an identity check: the coefficientwise differences, empty on success.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub mismatches: Vec<(i64, Monomial, Scalar)>,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, diff: &Series) -> Self {
        let mismatches =
            diff.support().flat_map(|(d, c)| c.terms().map(move |(m, s)| (d, m.clone(), s.clone()))).collect();
        IdentityReport { name: name.into(), mismatches }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `p_k` with `(i d_x)^k e^f = p_k e^f`: `p_0 = 1`, `p_{j+1} = i (p_j' + p_j f')`.
pub fn derivation_polynomial(f: &Series, k: u32) -> Series {
    let fp = f.derive();
    let mut p = Series::one(f.var(), fp.ctx().clone());
    for _ in 0..k {
        p = (&p.derive().pad_to(fp.max_degree()) + &(&p * &fp)).scale_scalar(&Scalar::i());
    }
    p
}

/// `F_a[x^k-derivation of e^f] - (-y)^k F_a[e^f]`, computed as
/// `p_k(i d_y) S - (-y)^k S` on the series part `S` of `F_a[e^f]`. `f` must be a polynomial.
pub fn product_derivation_check(k: u32, f: &Series, ctx: &TruncationCtx) -> Result<IdentityReport> {
    let fdeg = f.support().map(|(d, _)| d).max().unwrap_or(0);
    let pdeg = k as i64 * (fdeg - 1).max(0);
    let mut g = f.clone();
    g.set_coeff(2, CoefficientPoly::zero());
    let reach = operator_degree(&g, &ctx.filter.intersect(f.filter())).unwrap_or(0);
    let f = f.pad_to((fdeg.max(2) + pdeg).max(reach));
    let p = derivation_polynomial(&f, k).truncate(pdeg);
    let wide = TruncationCtx::with_filter(ctx.max_degree + pdeg, ctx.filter.clone());
    let s = fourier_alg(&f, &wide)?.series;
    let filter = s.filter().clone();
    let mut lhs = Series::zero(Var::Y, TruncationCtx::with_filter(ctx.max_degree, filter.clone()));
    for (j, c) in p.support() {
        // i^j d^j
        let coeff = c.scale(&Scalar::i_pow(j));
        for d in 0..=ctx.max_degree {
            let sj = s.coeff(d + j);
            if sj.is_zero() {
                continue;
            }
            let falling = ratio(factorial((d + j) as u64), factorial(d as u64));
            lhs.add_to_coeff(d, &coeff.mul_filtered(&sj.scale(&falling), &filter));
        }
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let rhs = s.truncate(ctx.max_degree).shift_up(k as i64).scale_scalar(&Scalar::from_int(sign));
    Ok(IdentityReport::new(format!("product-derivation k={k}"), &(&lhs - &rhs)))
}

/// `W = log Z`.
pub fn w_from_z(z: &Series) -> Result<Series> {
    if !z.coeff(0).constant_coeff().is_one() {
        return Err(Error::BadConstantTerm(format!("[y^0] Z = {}", z.coeff(0))));
    }
    z.log()
}

/// Both readings of the second transform.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiInvolutionReport {
    /// `log F(F e^F)(z) - F(-z)`.
    pub reflected: IdentityReport,
    /// `log F(F e^F)(z) - F(z)`.
    pub direct: IdentityReport,
    pub result: Series,
}

/// Applies the combinatorial transform twice: `Z = F e^F`, `W = log Z = u y^2/2 + G`, then
/// `e^{G(d)} e^{-u^-1 z^2/2}` and a final `log`.
pub fn quasi_involution_f(couplings: &Couplings, k: i64, filter: &Filter) -> Result<QuasiInvolutionReport> {
    // W_n has weight at least n - 2 under either grading, so the second operator reaches 3B
    let bound = filter.bounds().iter().map(|b| b.bound).max().unwrap_or(0).max(0);
    let inner = k + 3 * bound + 2;
    let split = ExponentSplit::fundamental(couplings, inner, filter.clone());
    let z = fourier_comb(&split, &TruncationCtx::with_filter(inner, filter.clone()))?;
    let w = w_from_z(&z)?;
    let mut g = w.rename(Var::X);
    let u = couplings.u_poly();
    g.add_to_coeff(2, &u.scale(&Scalar::from_ratio(-1, 2)));
    let second = ExponentSplit { edge_coeff: u, remainder: g };
    let z2 = fourier_comb(&second, &TruncationCtx::with_filter(k, filter.clone()))?;
    let result = z2.log()?.rename(Var::Z);
    let f = couplings.fundamental(&TruncationCtx::with_filter(k, filter.clone())).rename(Var::Z);
    Ok(QuasiInvolutionReport {
        reflected: IdentityReport::new("quasi-involution against F(-z)", &(&result - &f.reflect())),
        direct: IdentityReport::new("quasi-involution against F(z)", &(&result - &f)),
        result,
    })
}

/// `(2m-1)!! sum prod (l_j/j!)^{n_j}/n_j!` over `sum j n_j = 2m - k`: the coefficient of
/// `u^m y^k/k!` in `Z`.
pub fn z_edge_coeff(k: u32, m: u32, degrees: &[u32]) -> CoefficientPoly {
    let total = 2 * m as i64 - k as i64;
    let mut out = CoefficientPoly::zero();
    let ds: Vec<u32> = degrees.iter().copied().filter(|&j| j >= 2).collect();
    for tuple in weighted_tuples(&ds, |j| j as i64, total) {
        out.add_assign_ref(&vertex_weight(&tuple));
    }
    out.scale(&Scalar::from_bigint(double_factorial(2 * m as i64 - 1)))
}

/// `prod (l_j/j!)^{n_j}/n_j!` as a polynomial in the coupling symbols.
fn vertex_weight(tuple: &[(u32, u32)]) -> CoefficientPoly {
    let mut c = Scalar::one();
    let mut m = Monomial::one();
    for &(j, nj) in tuple {
        let den = factorial(j as u64).pow(nj) * factorial(nj as u64);
        c = &c * &ratio(BigInt::from(1), den);
        m.add_exp(Symbol::Lambda(j), nj as i32);
    }
    CoefficientPoly::term(m, c)
}

/// `sum (2n+2k+2V-1)!! prod (l_j/j!)^{n_j}/n_j! u^{n+k+V}` over `sum (j-2) n_j = 2n + k`: the
/// coefficient of `h^n y^k/k!` in `Z`.
pub fn z_hbar_coeff(k: u32, n: i64, degrees: &[u32]) -> Result<CoefficientPoly> {
    if degrees.iter().any(|&j| j <= 2) {
        return Err(Error::Lambda2NotAllowed);
    }
    let total = 2 * n + k as i64;
    let mut out = CoefficientPoly::zero();
    for tuple in weighted_tuples(degrees, |j| j as i64 - 2, total) {
        let v: i64 = tuple.iter().map(|&(_, c)| c as i64).sum();
        let edges = n + k as i64 + v;
        let df = Scalar::from_bigint(double_factorial(2 * edges - 1));
        let w = vertex_weight(&tuple).scale(&df);
        out.add_assign_ref(&w.mul_monomial(&Monomial::pow_of(Symbol::U, edges as i32)));
    }
    Ok(out)
}

/// Loop-order conventions for attaching `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum HbarConvention {
    /// `edges - vertices - legs`; trees sit at `-1`.
    #[default]
    LoopOrder,
    /// `1 + edges - vertices - legs`.
    Shifted,
}

/// Multiplies each monomial `u^m l^{n}` at degree `k` by `h^{m - V - k}` (or one more).
pub fn hbar_regrade(z: &Series, convention: HbarConvention) -> Series {
    let shift = match convention {
        HbarConvention::LoopOrder => 0,
        HbarConvention::Shifted => 1,
    };
    z.map_coeffs_indexed(|k, c| {
        c.map_monomials(|m| {
            let e = m.exp(Symbol::U) - m.lambda_count() - k as i32 + shift;
            let mut out = m.clone();
            out.add_exp(Symbol::Hbar, e);
            out
        })
    })
}

/// `sum_{k,v} (dv+k-1)!! (l_d/d!)^v/v! h^{((d-2)v-k)/2} u^{(dv+k)/2} y^k/k!` for the single
/// vertex action, over `k <= kmax`, `v <= vmax`.
pub fn z_lambda_series(d: u32, kmax: i64, vmax: u32) -> Series {
    let mut s = Series::zero(Var::Y, TruncationCtx::new(kmax));
    for k in 0..=kmax {
        for v in 0..=vmax {
            let half = d as i64 * v as i64 + k;
            if half % 2 != 0 {
                continue;
            }
            let hb = (d as i64 - 2) * v as i64 - k;
            let df = double_factorial(half - 1);
            let den = factorial(d as u64).pow(v) * factorial(v as u64) * factorial(k as u64);
            let m = Monomial::from_pairs([
                (Symbol::U, (half / 2) as i32),
                (Symbol::Hbar, (hb / 2) as i32),
                (Symbol::Lambda(d), v as i32),
            ]);
            s.add_to_coeff(k, &CoefficientPoly::term(m, ratio(df, den)));
        }
    }
    s
}

/// Example actions with known closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleAction {
    /// `-x^2/2 - x^4/4!`
    F1,
    /// `-x^2/2 + x^4/4!`
    F2,
    /// `-x^2/2 + l4 x^4/4!`
    F3,
    /// `-x^2/2 + x^3/3!`
    F4,
    /// `e^x - 1 - x - x^2`
    F5,
    /// `-ln(1-x) - x - x^2`
    F6,
    /// `-x^2/2 + sum_{k>=3} k! x^k`
    F7,
}

impl ExampleAction {
    /// The numeric couplings `l_j` for `j <= max` (`F3` has a symbolic `l4`).
    pub fn couplings(&self, max: u32) -> Couplings {
        use crate::action::Coupling;
        let mut c = Couplings::symbolic([]);
        c.u = Coupling::Value(Scalar::one());
        let mut set = |j: u32, v: Coupling| {
            c.lambdas.insert(j, v);
        };
        match self {
            ExampleAction::F1 => set(4, Coupling::Value(Scalar::from_int(-1))),
            ExampleAction::F2 => set(4, Coupling::Value(Scalar::one())),
            ExampleAction::F3 => set(4, Coupling::Symbolic),
            ExampleAction::F4 => set(3, Coupling::Value(Scalar::one())),
            ExampleAction::F5 | ExampleAction::F6 | ExampleAction::F7 => {
                for j in 3..=max {
                    let v = match self {
                        ExampleAction::F5 => BigInt::from(1),
                        ExampleAction::F6 => factorial(j as u64 - 1),
                        _ => factorial(j as u64).pow(2),
                    };
                    set(j, Coupling::Value(Scalar::from_bigint(v)));
                }
            }
        }
        c
    }
}

/// The closed-form coefficient of `h^n y^k/k!` for the chosen example.
pub fn closed_form_example(which: ExampleAction, k: u32, n: i64) -> CoefficientPoly {
    let k = k as i64;
    match which {
        ExampleAction::F1 | ExampleAction::F2 | ExampleAction::F3 => {
            if k % 2 != 0 || n + k / 2 < 0 {
                return CoefficientPoly::zero();
            }
            let j = k / 2;
            let v = n + j;
            let mut c =
                ratio(double_factorial(4 * n + 6 * j - 1), BigInt::from(24).pow(v as u32) * factorial(v as u64));
            if which == ExampleAction::F1 && v % 2 != 0 {
                c = -c;
            }
            let m = if which == ExampleAction::F3 {
                Monomial::pow_of(Symbol::Lambda(4), v as i32)
            } else {
                Monomial::one()
            };
            CoefficientPoly::term(m, c)
        }
        ExampleAction::F4 => {
            let v = 2 * n + k;
            if v < 0 {
                return CoefficientPoly::zero();
            }
            CoefficientPoly::constant(ratio(
                double_factorial(6 * n + 4 * k - 1),
                BigInt::from(6).pow(v as u32) * factorial(v as u64),
            ))
        }
        ExampleAction::F5 | ExampleAction::F6 | ExampleAction::F7 => {
            let total = 2 * n + k;
            let degrees: Vec<u32> = (3..=(total.max(0) as u32 + 2)).collect();
            let mut acc = Scalar::zero();
            for tuple in weighted_tuples(&degrees, |j| j as i64 - 2, total) {
                let v: i64 = tuple.iter().map(|&(_, c)| c as i64).sum();
                let mut term = Scalar::from_bigint(double_factorial(2 * n + 2 * k + 2 * v - 1));
                for &(j, nj) in &tuple {
                    let w = match which {
                        ExampleAction::F5 => ratio(BigInt::from(1), factorial(j as u64)),
                        ExampleAction::F6 => Scalar::from_ratio(1, j as i64),
                        _ => Scalar::from_bigint(factorial(j as u64)),
                    };
                    term = &term * &ratio(BigInt::from(1), factorial(nj as u64));
                    term = &term * &w.pow(nj);
                }
                acc += &term;
            }
            CoefficientPoly::constant(acc)
        }
    }
}
