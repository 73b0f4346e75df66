//! Brute-force Wick pairings on labelled half-ends, classified by graph shape.
//!
//! Every half-end is distinguished, so a content with `n_j` vertices of degree `j` is divided by
//! `prod j!^{n_j} n_j!` in aggregate. This is an independent route to the coefficients of `Z`,
//! `W`, `T` and `Gamma`.

use std::collections::BTreeMap;
use std::fmt;

use crate::action::Couplings;
use crate::error::{Error, Result};
use crate::fourier::{fourier_comb, hbar_regrade, w_from_z, ExponentSplit, HbarConvention};
use crate::legendre::{gamma_from_w, trees_from_graphs, weighted_tuples};
use crate::monomial::{Monomial, Symbol};
use crate::poly::CoefficientPoly;
use crate::scalar::{factorial, Scalar};
use crate::series::Series;
use crate::truncation::{Filter, Grading, TruncationCtx};

/// Largest number of half-ends enumerated.
pub const MAX_HALF_ENDS: usize = 16;

/// Vertices by degree, external 1-vertices, and ends left unmatched as labelled slots.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexContent {
    pub counts: BTreeMap<u32, u32>,
    pub external: u32,
    pub free_slots: u32,
}

impl VertexContent {
    pub fn half_ends(&self) -> usize {
        self.counts.iter().map(|(&j, &n)| (j * n) as usize).sum::<usize>() + self.external as usize
    }

    /// `prod (l_j/j!)^{n_j}/n_j!`.
    fn weight(&self) -> CoefficientPoly {
        let mut den = num_bigint::BigInt::from(1);
        let mut m = Monomial::one();
        for (&j, &n) in &self.counts {
            den *= factorial(j as u64).pow(n) * factorial(n as u64);
            m.add_exp(Symbol::Lambda(j), n as i32);
        }
        CoefficientPoly::term(m, Scalar::from_rational(num_rational::BigRational::new(1.into(), den)))
    }
}

/// Matching counts by graph class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub all: u64,
    pub connected: u64,
    pub trees: u64,
    pub bridgeless_connected: u64,
}

struct Universe {
    /// Node owning each end.
    owner: Vec<usize>,
    /// Nodes that are vertex instances; the rest are external 1-vertices.
    internal: usize,
    nodes: usize,
}

impl Universe {
    fn new(content: &VertexContent) -> Self {
        let mut owner = vec![];
        let mut node = 0;
        for (&j, &n) in &content.counts {
            for _ in 0..n {
                owner.extend(std::iter::repeat_n(node, j as usize));
                node += 1;
            }
        }
        let internal = node;
        for _ in 0..content.external {
            owner.push(node);
            node += 1;
        }
        Universe { owner, internal, nodes: node }
    }

    fn classify(&self, pairs: &[(usize, usize)], tally: &mut Tally, weight: u64, slots_mode: bool) {
        let edges: Vec<(usize, usize)> = pairs.iter().map(|&(a, b)| (self.owner[a], self.owner[b])).collect();
        let nodes = if slots_mode { self.internal } else { self.nodes };
        tally.all += weight;
        if nodes == 0 || !connected(nodes, &edges, None) {
            return;
        }
        tally.connected += weight;
        if edges.len() + 1 == nodes {
            tally.trees += weight;
        }
        let bridge = edges
            .iter()
            .enumerate()
            .any(|(i, &(a, b))| a != b && a < self.internal && b < self.internal && !connected(nodes, &edges, Some(i)));
        if !bridge {
            tally.bridgeless_connected += weight;
        }
    }
}

fn connected(nodes: usize, edges: &[(usize, usize)], skip: Option<usize>) -> bool {
    let mut parent: Vec<usize> = (0..nodes).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = nodes;
    for (i, &(a, b)) in edges.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            comps -= 1;
        }
    }
    comps == 1
}

type Pairing = [(usize, usize)];

/// Pairs the lowest unmatched end first.
fn match_all(ends: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, visit: &mut dyn FnMut(&Pairing)) {
    if ends.is_empty() {
        visit(pairs);
        return;
    }
    let first = ends.remove(0);
    for i in 0..ends.len() {
        let partner = ends.remove(i);
        pairs.push((first, partner));
        match_all(ends, pairs, visit);
        pairs.pop();
        ends.insert(i, partner);
    }
    ends.insert(0, first);
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        visit(cur);
        return;
    }
    for i in start..n {
        cur.push(i);
        subsets(n, k, i + 1, cur, visit);
        cur.pop();
    }
}

/// Tallies every matching of the content. With free slots, each choice of slot ends counts
/// `free_slots!` times for the slot labels and only vertex instances are nodes.
pub fn enumerate(content: &VertexContent) -> Result<Tally> {
    let total = content.half_ends();
    if total > MAX_HALF_ENDS {
        return Err(Error::TooLarge(total, MAX_HALF_ENDS));
    }
    let free = content.free_slots as usize;
    let mut tally = Tally::default();
    if free > total || !(total - free).is_multiple_of(2) {
        return Ok(tally);
    }
    let uni = Universe::new(content);
    let slots_mode = free > 0;
    let labels = u64::try_from(factorial(free as u64)).expect("small factorial");
    let mut visit_free = |chosen: &[usize]| {
        let mut ends: Vec<usize> = (0..total).filter(|e| !chosen.contains(e)).collect();
        match_all(&mut ends, &mut vec![], &mut |pairs| uni.classify(pairs, &mut tally, labels, slots_mode));
    };
    subsets(total, free, 0, &mut vec![], &mut visit_free);
    Ok(tally)
}

/// Which generating series the oracle reproduces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum OracleSeries {
    Z,
    W,
    T,
    Gamma,
}

impl fmt::Display for OracleSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleSeries::Z => "Z",
            OracleSeries::W => "W",
            OracleSeries::T => "T",
            OracleSeries::Gamma => "Gamma",
        })
    }
}

/// `[u^m y^k/k!]` of the chosen series, summed over vertex contents from `degrees`.
///
/// For `Z`, `W`, `T` the `k` legs are external 1-vertices and `m` counts all edges. For `Gamma`
/// the legs are free slots and `m` counts internal edges.
pub fn oracle_coeff(series: OracleSeries, k: u32, m: u32, degrees: &[u32]) -> Result<CoefficientPoly> {
    let (total, external, free) = match series {
        OracleSeries::Gamma => (2 * m as i64 + k as i64, 0, k),
        _ => (2 * m as i64 - k as i64, k, 0),
    };
    let mut out = CoefficientPoly::zero();
    if total < 0 {
        return Ok(out);
    }
    for tuple in weighted_tuples(degrees, |j| j as i64, total) {
        let content = VertexContent { counts: tuple.into_iter().collect(), external, free_slots: free };
        let t = enumerate(&content)?;
        let count = match series {
            OracleSeries::Z => t.all,
            OracleSeries::W => t.connected,
            OracleSeries::T => t.trees,
            OracleSeries::Gamma => t.bridgeless_connected,
        };
        if count > 0 {
            out.add_assign_ref(&content.weight().scale(&Scalar::from_int(count as i64)));
        }
    }
    Ok(out.mul_monomial(&Monomial::pow_of(Symbol::U, m as i32)))
}

/// A coefficient where the oracle and the engine differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleMismatch {
    pub series: OracleSeries,
    pub k: u32,
    pub m: u32,
    pub oracle: CoefficientPoly,
    pub engine: CoefficientPoly,
}

/// The engine's `Z`, `W`, `T`, `Gamma` for symbolic couplings of the given degrees, under a
/// half-edge bound covering every `(k <= kmax, m <= mmax)`.
pub fn engine_series(kmax: u32, mmax: u32, degrees: &[u32]) -> Result<BTreeMap<OracleSeries, Series>> {
    let couplings = Couplings::symbolic(degrees.iter().copied());
    let bound = 2 * mmax as i64 + kmax as i64;
    let filter = Filter::weight_at_most(Grading::half_edges(), bound);
    let ctx = TruncationCtx::with_filter(bound, filter.clone());
    let z = fourier_comb(&ExponentSplit::fundamental(&couplings, bound, filter), &ctx)?;
    let w = w_from_z(&z)?;
    let t = trees_from_graphs(&hbar_regrade(&z, HbarConvention::LoopOrder))?;
    let g = gamma_from_w(&w, &couplings.u_poly())?;
    Ok(BTreeMap::from([(OracleSeries::Z, z), (OracleSeries::W, w), (OracleSeries::T, t), (OracleSeries::Gamma, g)]))
}

/// `[u^m v^k/k!]` of an engine series.
pub fn engine_coeff(s: &Series, k: u32, m: u32) -> CoefficientPoly {
    s.egf_coeff(k as i64).select(|mono| mono.exp(Symbol::U) == m as i32)
}

/// Compares the oracle with the engine for every series and `(k <= kmax, m <= mmax)`.
pub fn verify_against_engine(kmax: u32, mmax: u32, degrees: &[u32]) -> Result<Vec<OracleMismatch>> {
    let engine = engine_series(kmax, mmax, degrees)?;
    let mut out = vec![];
    for (&series, s) in &engine {
        for k in 0..=kmax {
            for m in 0..=mmax {
                let oracle = oracle_coeff(series, k, m, degrees)?;
                let got = engine_coeff(s, k, m);
                if oracle != got {
                    out.push(OracleMismatch { series, k, m, oracle, engine: got });
                }
            }
        }
    }
    Ok(out)
}
