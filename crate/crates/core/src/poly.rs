//! Sparse Laurent polynomials over Gaussian rationals: the coefficient ring of every series.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Symbol};
use crate::scalar::Scalar;
use crate::truncation::Filter;

/// `sum c_m * m` with no zero coefficient stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CoefficientPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl CoefficientPoly {
    pub const fn zero() -> Self {
        CoefficientPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        CoefficientPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        CoefficientPoly::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        CoefficientPoly::constant(Scalar::from_int(n))
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = CoefficientPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn symbol(s: Symbol) -> Self {
        CoefficientPoly::term(Monomial::var(s), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// The coefficient of the empty monomial.
    pub fn constant_coeff(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &CoefficientPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &CoefficientPoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c);
        }
    }

    pub fn scale(&self, s: &Scalar) -> CoefficientPoly {
        if s.is_zero() {
            return CoefficientPoly::zero();
        }
        CoefficientPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c * s)).collect() }
    }

    pub fn scale_int(&self, n: i64) -> CoefficientPoly {
        self.scale(&Scalar::from_int(n))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> CoefficientPoly {
        CoefficientPoly { terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect() }
    }

    /// Product keeping only monomials admitted by `filter`.
    pub fn mul_filtered(&self, other: &CoefficientPoly, filter: &Filter) -> CoefficientPoly {
        let mut out = CoefficientPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                if filter.admits(&m) {
                    out.add_term(m, c1 * c2);
                }
            }
        }
        out
    }

    /// Adds `a * b` into `self`, filtered.
    pub fn add_product(&mut self, a: &CoefficientPoly, b: &CoefficientPoly, filter: &Filter) {
        for (m1, c1) in &a.terms {
            for (m2, c2) in &b.terms {
                let m = m1.mul(m2);
                if filter.admits(&m) {
                    self.add_term(m, c1 * c2);
                }
            }
        }
    }

    pub fn filtered(&self, filter: &Filter) -> CoefficientPoly {
        if filter.is_none() {
            return self.clone();
        }
        CoefficientPoly {
            terms: self.terms.iter().filter(|(m, _)| filter.admits(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn pow_filtered(&self, n: u32, filter: &Filter) -> CoefficientPoly {
        let mut acc = CoefficientPoly::one().filtered(filter);
        for _ in 0..n {
            acc = acc.mul_filtered(self, filter);
        }
        acc
    }

    /// The single term, if there is exactly one.
    pub fn as_single_term(&self) -> Option<(&Monomial, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Splits into a unit leading term and a topologically nilpotent remainder relative to
    /// `filter`. Without weight bounds only single invertible terms qualify.
    pub fn split_unit(&self, filter: &Filter) -> Option<((Monomial, Scalar), CoefficientPoly)> {
        let mut lead = None;
        let mut rest = CoefficientPoly::zero();
        for (m, c) in &self.terms {
            if filter.is_weightless(m) {
                if lead.is_some() {
                    return None;
                }
                lead = Some((m.clone(), c.clone()));
            } else if filter.is_nilpotent(m) {
                rest.add_term(m.clone(), c.clone());
            } else {
                return None;
            }
        }
        lead.map(|l| (l, rest))
    }

    pub fn is_unit(&self, filter: &Filter) -> bool {
        self.split_unit(filter).is_some()
    }

    /// Whether every term is topologically nilpotent under `filter`.
    pub fn is_nilpotent(&self, filter: &Filter) -> bool {
        self.terms.keys().all(|m| filter.is_nilpotent(m))
    }

    /// Inverse of a graded unit `c*m*(1 + n)` as `c^-1 m^-1 sum_k (-n)^k`, the sum terminating
    /// because `n` leaves the window after finitely many powers.
    pub fn inverse(&self, filter: &Filter) -> Result<CoefficientPoly> {
        let ((m, c), rest) = self.split_unit(filter).ok_or_else(|| Error::NonUnitConstantTerm(self.to_string()))?;
        let lead_inv = CoefficientPoly::term(m.inv(), c.inv().expect("lead scalar is nonzero"));
        if rest.is_zero() {
            return Ok(lead_inv.filtered(filter));
        }
        let n = rest.mul_filtered(&lead_inv, &Filter::none());
        let minus_n = -n;
        let mut sum = CoefficientPoly::one();
        let mut power = CoefficientPoly::one();
        loop {
            power = power.mul_filtered(&minus_n, filter);
            if power.is_zero() {
                break;
            }
            sum.add_assign_ref(&power);
        }
        Ok(sum.mul_filtered(&lead_inv, filter))
    }

    /// `exp(self)` for a topologically nilpotent element.
    pub fn exp_nilpotent(&self, filter: &Filter) -> Result<CoefficientPoly> {
        if !self.is_nilpotent(filter) {
            return Err(Error::BadConstantTerm(format!("exp of non-nilpotent constant {self}")));
        }
        let mut sum = CoefficientPoly::one();
        let mut term = CoefficientPoly::one();
        let mut k = 1i64;
        loop {
            term = term.mul_filtered(self, filter).scale(&Scalar::from_ratio(1, k));
            if term.is_zero() {
                break;
            }
            sum.add_assign_ref(&term);
            k += 1;
        }
        Ok(sum.filtered(filter))
    }

    /// `log(1 + self)` for a topologically nilpotent element.
    pub fn log1p_nilpotent(&self, filter: &Filter) -> Result<CoefficientPoly> {
        if !self.is_nilpotent(filter) {
            return Err(Error::BadConstantTerm(format!("log of 1 + {self}")));
        }
        let mut sum = CoefficientPoly::zero();
        let mut power = CoefficientPoly::one();
        let mut k = 1i64;
        loop {
            power = power.mul_filtered(self, filter);
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum.add_assign_ref(&power.scale(&Scalar::from_ratio(sign, k)));
            k += 1;
        }
        Ok(sum)
    }

    /// Replaces each symbol present in `values` by the given scalar. Negative exponents need an
    /// invertible value.
    pub fn substitute(&self, values: &BTreeMap<Symbol, Scalar>) -> CoefficientPoly {
        let mut out = CoefficientPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Monomial::one();
            for (s, e) in m.iter() {
                match values.get(&s) {
                    Some(v) => {
                        let base = if e < 0 {
                            v.inv().expect("substituted value of a negative power must be invertible")
                        } else {
                            v.clone()
                        };
                        coeff = &coeff * &base.pow(e.unsigned_abs());
                    }
                    None => rest.add_exp(s, e),
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Applies `f` to every monomial, merging collisions.
    pub fn map_monomials<F: Fn(&Monomial) -> Monomial>(&self, f: F) -> CoefficientPoly {
        let mut out = CoefficientPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Keeps the terms for which `pred` holds.
    pub fn select<F: Fn(&Monomial) -> bool>(&self, pred: F) -> CoefficientPoly {
        CoefficientPoly {
            terms: self.terms.iter().filter(|(m, _)| pred(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Whether any term carries `s`.
    pub fn mentions(&self, s: Symbol) -> bool {
        self.terms.keys().any(|m| m.contains(s))
    }

    /// Complex conjugation of every coefficient.
    pub fn conj(&self) -> CoefficientPoly {
        CoefficientPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }
}

impl From<Scalar> for CoefficientPoly {
    fn from(c: Scalar) -> Self {
        CoefficientPoly::constant(c)
    }
}

impl From<Symbol> for CoefficientPoly {
    fn from(s: Symbol) -> Self {
        CoefficientPoly::symbol(s)
    }
}

impl Add for &CoefficientPoly {
    type Output = CoefficientPoly;
    fn add(self, o: &CoefficientPoly) -> CoefficientPoly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl Add for CoefficientPoly {
    type Output = CoefficientPoly;
    fn add(mut self, o: CoefficientPoly) -> CoefficientPoly {
        self.add_assign_ref(&o);
        self
    }
}

impl Sub for &CoefficientPoly {
    type Output = CoefficientPoly;
    fn sub(self, o: &CoefficientPoly) -> CoefficientPoly {
        let mut out = self.clone();
        out.sub_assign_ref(o);
        out
    }
}

impl Sub for CoefficientPoly {
    type Output = CoefficientPoly;
    fn sub(mut self, o: CoefficientPoly) -> CoefficientPoly {
        self.sub_assign_ref(&o);
        self
    }
}

impl Mul for &CoefficientPoly {
    type Output = CoefficientPoly;
    fn mul(self, o: &CoefficientPoly) -> CoefficientPoly {
        self.mul_filtered(o, &Filter::none())
    }
}

impl Mul for CoefficientPoly {
    type Output = CoefficientPoly;
    fn mul(self, o: CoefficientPoly) -> CoefficientPoly {
        &self * &o
    }
}

impl Neg for CoefficientPoly {
    type Output = CoefficientPoly;
    fn neg(self) -> CoefficientPoly {
        CoefficientPoly { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &CoefficientPoly {
    type Output = CoefficientPoly;
    fn neg(self) -> CoefficientPoly {
        -(self.clone())
    }
}

impl fmt::Display for CoefficientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoefficientPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
