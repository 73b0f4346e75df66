//! Truncation windows: a principal-degree bound plus optional weight bounds on coefficient
//! monomials.
//!
//! A weight bound `w(m) <= B` is downward closed whenever every monomial that actually occurs
//! has non-negative weight, which is what makes truncated multiplication consistent: a
//! product can only pass the bound if both factors do.

use crate::monomial::{Monomial, Symbol};

/// Integer weights on symbols. The coupling `l_k` weighs `lambda_slope * k + lambda_offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    pub u: i64,
    pub hbar: i64,
    pub lambda_slope: i64,
    pub lambda_offset: i64,
    pub a: i64,
    pub p: i64,
    pub q: i64,
    pub c: i64,
}

impl Grading {
    fn zero() -> Self {
        Grading { u: 0, hbar: 0, lambda_slope: 0, lambda_offset: 0, a: 0, p: 0, q: 0, c: 0 }
    }

    /// Half-edge content: `l_k` weighs `k`. Bounding it by `2M` bounds the edge count of
    /// every vacuum-free graph to `M` plus half the number of legs.
    pub fn half_edges() -> Self {
        Grading { lambda_slope: 1, ..Grading::zero() }
    }

    /// Euler weight: `l_k` weighs `k - 2`. At fixed leg count this bounds the loop order.
    pub fn euler() -> Self {
        Grading { lambda_slope: 1, lambda_offset: -2, ..Grading::zero() }
    }

    /// Total degree in the auxiliary `p` and `q`.
    pub fn pq_degree() -> Self {
        Grading { p: 1, q: 1, ..Grading::zero() }
    }

    pub fn symbol_weight(&self, s: Symbol) -> i64 {
        match s {
            Symbol::U => self.u,
            Symbol::Hbar => self.hbar,
            Symbol::Lambda(k) => self.lambda_slope * k as i64 + self.lambda_offset,
            Symbol::A => self.a,
            Symbol::P => self.p,
            Symbol::Q => self.q,
            Symbol::C => self.c,
        }
    }

    pub fn weight(&self, m: &Monomial) -> i64 {
        m.iter().map(|(s, e)| self.symbol_weight(s) * e as i64).sum()
    }
}

/// A single weight bound `grading(m) <= bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightBound {
    pub grading: Grading,
    pub bound: i64,
}

/// Conjunction of weight bounds. The empty filter admits every monomial.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Filter {
    bounds: Vec<WeightBound>,
}

impl Filter {
    pub fn none() -> Self {
        Filter::default()
    }

    pub fn weight_at_most(grading: Grading, bound: i64) -> Self {
        Filter { bounds: vec![WeightBound { grading, bound }] }
    }

    /// Half-edge content at most `2 * edges`.
    pub fn edges(edges: u32) -> Self {
        Filter::weight_at_most(Grading::half_edges(), 2 * edges as i64)
    }

    /// Euler weight at most `bound`.
    pub fn euler(bound: i64) -> Self {
        Filter::weight_at_most(Grading::euler(), bound)
    }

    pub fn is_none(&self) -> bool {
        self.bounds.is_empty()
    }

    pub fn bounds(&self) -> &[WeightBound] {
        &self.bounds
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        self.bounds.iter().all(|b| b.grading.weight(m) <= b.bound)
    }

    /// Conjunction; bounds sharing a grading keep the tighter limit.
    pub fn intersect(&self, other: &Filter) -> Filter {
        let mut out = self.bounds.clone();
        for b in &other.bounds {
            match out.iter_mut().find(|x| x.grading == b.grading) {
                Some(x) => x.bound = x.bound.min(b.bound),
                None => out.push(b.clone()),
            }
        }
        Filter { bounds: out }
    }

    /// Whether `m` is topologically nilpotent: some bound gives it strictly positive weight
    /// while no bound gives it negative weight, so high enough powers leave the window.
    pub fn is_nilpotent(&self, m: &Monomial) -> bool {
        let ws: Vec<i64> = self.bounds.iter().map(|b| b.grading.weight(m)).collect();
        ws.iter().any(|&w| w > 0) && ws.iter().all(|&w| w >= 0)
    }

    /// Whether `m` has weight zero under every bound.
    pub fn is_weightless(&self, m: &Monomial) -> bool {
        self.bounds.iter().all(|b| b.grading.weight(m) == 0)
    }
}

/// Everything a truncated series needs to know about its window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncationCtx {
    /// Highest principal degree whose coefficient is known.
    pub max_degree: i64,
    pub filter: Filter,
}

impl TruncationCtx {
    pub fn new(max_degree: i64) -> Self {
        TruncationCtx { max_degree, filter: Filter::none() }
    }

    pub fn with_filter(max_degree: i64, filter: Filter) -> Self {
        TruncationCtx { max_degree, filter }
    }

    pub fn intersect(&self, other: &TruncationCtx) -> TruncationCtx {
        TruncationCtx {
            max_degree: self.max_degree.min(other.max_degree),
            filter: self.filter.intersect(&other.filter),
        }
    }

    pub fn with_degree(&self, max_degree: i64) -> TruncationCtx {
        TruncationCtx { max_degree, filter: self.filter.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edges_filter_weights_couplings_by_degree() {
        let f = Filter::edges(2);
        let m = Monomial::from_pairs([(Symbol::U, 7), (Symbol::Lambda(4), 1)]);
        assert!(f.admits(&m));
        assert!(!f.admits(&m.mul(&Monomial::lambda(2))));
        assert!(f.is_nilpotent(&Monomial::lambda(3)));
        assert!(!f.is_nilpotent(&Monomial::var(Symbol::U)));
        assert!(f.is_weightless(&Monomial::pow_of(Symbol::U, -3)));
    }

    #[test]
    fn intersection_keeps_tighter_bound() {
        let f = Filter::edges(3).intersect(&Filter::edges(2)).intersect(&Filter::euler(4));
        assert_eq!(f.bounds().len(), 2);
        assert_eq!(f.bounds()[0].bound, 4);
    }
}
