//! The action specification document and its validation.

use std::collections::BTreeMap;
use std::str::FromStr;

use anyhow::{bail, Context};
use gfseries::action::{Coupling, Couplings};
use gfseries::{Filter, Scalar};
use num_rational::BigRational;
use serde::Deserialize;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionSpec {
    #[serde(default = "symbolic")]
    pub u: String,
    #[serde(default = "off")]
    pub hbar: String,
    #[serde(default)]
    pub lambdas: BTreeMap<String, String>,
    #[serde(default)]
    pub truncation: TruncationSpec,
}

fn symbolic() -> String {
    "symbolic".into()
}

fn off() -> String {
    "off".into()
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TruncationSpec {
    pub legs: Option<i64>,
    pub edges: Option<i64>,
    pub loops: Option<i64>,
}

/// Either an edge bound or a loop bound, with the leg window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    Edges { legs: u32, edges: u32 },
    Loops { legs: u32, loops: u32 },
}

impl Truncation {
    pub fn legs(&self) -> u32 {
        match *self {
            Truncation::Edges { legs, .. } | Truncation::Loops { legs, .. } => legs,
        }
    }

    /// Half-edge content at most `2M`, or Euler weight at most `2N + K`.
    pub fn filter(&self) -> Filter {
        match *self {
            Truncation::Edges { edges, .. } => Filter::edges(edges),
            Truncation::Loops { legs, loops } => Filter::euler(2 * loops as i64 + legs as i64),
        }
    }

    pub fn bound(&self) -> i64 {
        self.filter().bounds()[0].bound
    }
}

/// A validated specification.
#[derive(Clone, Debug)]
pub struct Action {
    pub couplings: Couplings,
    pub hbar: bool,
    pub truncation: Truncation,
}

fn parse_rational(s: &str, what: &str) -> anyhow::Result<Scalar> {
    let r = BigRational::from_str(s.trim())
        .with_context(|| format!("{what}: {s:?} is neither \"symbolic\" nor a rational"))?;
    Ok(Scalar::from_rational(r))
}

fn nonnegative(v: Option<i64>, name: &str) -> anyhow::Result<Option<u32>> {
    match v {
        None => Ok(None),
        Some(n) if n < 0 => bail!("truncation {name} must be non-negative, got {n}"),
        Some(n) => Ok(Some(u32::try_from(n).with_context(|| format!("truncation {name} is too large"))?)),
    }
}

/// Command-line overrides of the truncation block.
#[derive(Clone, Copy, Debug, Default)]
pub struct Overrides {
    pub legs: Option<i64>,
    pub edges: Option<i64>,
    pub loops: Option<i64>,
}

impl ActionSpec {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        serde_json::from_str(text).context("spec is not a valid action document")
    }

    pub fn validate(&self, over: Overrides) -> anyhow::Result<Action> {
        let u = match self.u.as_str() {
            "symbolic" => Coupling::Symbolic,
            s => {
                let v = parse_rational(s, "u")?;
                if v.is_zero() {
                    bail!("u must be nonzero");
                }
                Coupling::Value(v)
            }
        };
        let hbar = match self.hbar.as_str() {
            "symbolic" => true,
            "off" => false,
            s => bail!("hbar must be \"symbolic\" or \"off\", got {s:?}"),
        };
        let mut lambdas = BTreeMap::new();
        for (k, v) in &self.lambdas {
            let deg: u32 = k.trim().parse().with_context(|| format!("lambda key {k:?} is not a degree"))?;
            if deg == 0 {
                bail!("lambda degrees start at 1");
            }
            let c = match v.as_str() {
                "symbolic" => Coupling::Symbolic,
                s => Coupling::Value(parse_rational(s, &format!("lambda {deg}"))?),
            };
            lambdas.insert(deg, c);
        }
        let lambda1 = lambdas.contains_key(&1);
        let couplings = Couplings { u, lambdas, lambda1 };
        if couplings.violates_edge_guard() {
            bail!("u * l2 = 1 makes the quadratic part vanish");
        }

        let legs = nonnegative(over.legs.or(self.truncation.legs), "legs")?
            .context("truncation needs a leg bound (legs / --legs)")?;
        let (edges, loops) = if over.edges.is_some() || over.loops.is_some() {
            (over.edges, over.loops)
        } else {
            (self.truncation.edges, self.truncation.loops)
        };
        let truncation = match (nonnegative(edges, "edges")?, nonnegative(loops, "loops")?) {
            (Some(_), Some(_)) => bail!("give either an edge bound or a loop bound, not both"),
            (None, None) => bail!("truncation needs an edge bound or a loop bound"),
            (Some(edges), None) => Truncation::Edges { legs, edges },
            (None, Some(loops)) => {
                if couplings.active_degrees().iter().any(|&d| d <= 2) {
                    bail!("loop truncation requires l1 and l2 to be absent");
                }
                Truncation::Loops { legs, loops }
            }
        };
        Ok(Action { couplings, hbar, truncation })
    }
}
