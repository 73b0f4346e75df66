//! Vertex couplings and the fundamental series `F(x) = -u^-1 x^2/2 + sum_k l_k x^k/k!`.
//!
//! Couplings are always carried as symbols so that every weight grading stays meaningful. A
//! numeric coupling `l_k = v` enters as `v * l_k` and `output_values` then sends `l_k` to `1`;
//! a numeric `u` stays symbolic until output.

use std::collections::BTreeMap;

use crate::monomial::{Monomial, Symbol};
use crate::poly::CoefficientPoly;
use crate::scalar::{factorial, Scalar};
use crate::series::{Series, Var};
use crate::truncation::TruncationCtx;

/// A coupling is either a free symbol or a fixed exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coupling {
    Symbolic,
    Value(Scalar),
}

/// The data of a fundamental series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Couplings {
    pub u: Coupling,
    /// Vertex couplings by degree. Degree 1 is ignored unless `lambda1` is set.
    pub lambdas: BTreeMap<u32, Coupling>,
    pub lambda1: bool,
}

impl Couplings {
    pub fn symbolic<I: IntoIterator<Item = u32>>(degrees: I) -> Self {
        Couplings {
            u: Coupling::Symbolic,
            lambdas: degrees.into_iter().map(|k| (k, Coupling::Symbolic)).collect(),
            lambda1: false,
        }
    }

    /// `u = 1` and `l_i = (i-3)!` for `3 <= i <= max`.
    pub fn shifted_factorial(max: u32) -> Self {
        Couplings {
            u: Coupling::Value(Scalar::one()),
            lambdas: (3..=max).map(|i| (i, Coupling::Value(Scalar::from_bigint(factorial(i as u64 - 3))))).collect(),
            lambda1: false,
        }
    }

    /// Degrees that take part, honouring the `l1` switch and dropping zero values.
    pub fn active_degrees(&self) -> Vec<u32> {
        self.lambdas
            .iter()
            .filter(|(k, c)| (**k >= 2 || (**k == 1 && self.lambda1)) && **c != Coupling::Value(Scalar::zero()))
            .map(|(k, _)| *k)
            .collect()
    }

    pub fn max_degree(&self) -> u32 {
        self.active_degrees().into_iter().max().unwrap_or(0)
    }

    /// The coefficient `l_k` as it enters every computation.
    pub fn lambda_poly(&self, k: u32) -> CoefficientPoly {
        match self.lambdas.get(&k) {
            Some(Coupling::Symbolic) => CoefficientPoly::symbol(Symbol::Lambda(k)),
            Some(Coupling::Value(v)) => CoefficientPoly::term(Monomial::lambda(k), v.clone()),
            None => CoefficientPoly::zero(),
        }
    }

    /// The edge weight `u`, always symbolic inside the engine.
    pub fn u_poly(&self) -> CoefficientPoly {
        CoefficientPoly::symbol(Symbol::U)
    }

    pub fn u_inv_poly(&self) -> CoefficientPoly {
        CoefficientPoly::term(Monomial::pow_of(Symbol::U, -1), Scalar::one())
    }

    /// `F_int(x) = sum_k l_k x^k/k!` through degree `ctx.max_degree`.
    pub fn interaction(&self, ctx: &TruncationCtx) -> Series {
        let mut s = Series::zero(Var::X, ctx.clone());
        for k in self.active_degrees() {
            let c = self
                .lambda_poly(k)
                .scale(&Scalar::from_rational(num_rational::BigRational::new(1.into(), factorial(k as u64))));
            s.add_to_coeff(k as i64, &c);
        }
        s
    }

    /// `F(x) = -u^-1 x^2/2 + F_int(x)`.
    pub fn fundamental(&self, ctx: &TruncationCtx) -> Series {
        let mut s = self.interaction(ctx);
        s.add_to_coeff(2, &self.u_inv_poly().scale(&Scalar::from_ratio(-1, 2)));
        s
    }

    /// Values substituted at output: numeric `u`, and `1` for every numeric coupling symbol.
    pub fn output_values(&self) -> BTreeMap<Symbol, Scalar> {
        let mut out = BTreeMap::new();
        if let Coupling::Value(v) = &self.u {
            out.insert(Symbol::U, v.clone());
        }
        for (k, c) in &self.lambdas {
            if matches!(c, Coupling::Value(_)) {
                out.insert(Symbol::Lambda(*k), Scalar::one());
            }
        }
        out
    }

    /// Whether `u * l2 = 1` for numeric values, the excluded case.
    pub fn violates_edge_guard(&self) -> bool {
        match (&self.u, self.lambdas.get(&2)) {
            (Coupling::Value(u), Some(Coupling::Value(l2))) => (u * l2).is_one(),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_series_shape() {
        let c = Couplings::symbolic([3, 4]);
        let f = c.fundamental(&TruncationCtx::new(5));
        assert_eq!(f.coeff(2), &CoefficientPoly::term(Monomial::pow_of(Symbol::U, -1), Scalar::from_ratio(-1, 2)));
        assert_eq!(f.coeff(4), &CoefficientPoly::term(Monomial::lambda(4), Scalar::from_ratio(1, 24)));
        assert!(f.coeff(5).is_zero());
    }

    #[test]
    fn numeric_couplings_are_scaled_symbols() {
        let c = Couplings::shifted_factorial(6);
        assert_eq!(c.lambda_poly(6), CoefficientPoly::term(Monomial::lambda(6), Scalar::from_int(6)));
        let vals = c.output_values();
        assert_eq!(vals[&Symbol::U], Scalar::one());
        assert_eq!(vals[&Symbol::Lambda(5)], Scalar::one());
    }

    #[test]
    fn lambda1_channel_is_off_by_default() {
        let mut c = Couplings::symbolic([1, 3]);
        assert_eq!(c.active_degrees(), vec![3]);
        c.lambda1 = true;
        assert_eq!(c.active_degrees(), vec![1, 3]);
    }
}
