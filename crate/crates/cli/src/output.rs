//! Coefficient tables in text, JSON and CSV.

use clap::ValueEnum;
use gfseries::scalar::rational_string;
use gfseries::{Scalar, Series, Symbol};
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Whether rows show `[v^k]` or `k! [v^k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Normalization {
    Ordinary,
    Egf,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Row {
    pub deg: i64,
    pub mono: gfseries::Monomial,
    pub value: Scalar,
}

pub fn rows(s: &Series, norm: Normalization) -> Vec<Row> {
    let mut out = vec![];
    for (d, c) in s.support() {
        let c = match norm {
            Normalization::Ordinary => c.clone(),
            Normalization::Egf => s.egf_coeff(d),
        };
        for (m, v) in c.terms() {
            out.push(Row { deg: d, mono: m.clone(), value: v.clone() });
        }
    }
    out
}

fn symbol_key(s: Symbol) -> String {
    s.name()
}

#[derive(Serialize)]
struct Doc {
    terms: Vec<JsonTerm>,
}

#[derive(Serialize)]
struct JsonTerm {
    deg: i64,
    mono: Map<String, Value>,
    re: String,
    im: String,
}

pub fn render(var: &str, rows: &[Row], format: Format) -> anyhow::Result<String> {
    Ok(match format {
        Format::Text => rows.iter().map(|r| format!("{var}^{} {} : {}\n", r.deg, r.mono, r.value)).collect(),
        Format::Json => {
            let terms: Vec<JsonTerm> = rows
                .iter()
                .map(|r| JsonTerm {
                    deg: r.deg,
                    mono: r.mono.iter().map(|(s, e)| (symbol_key(s), Value::from(e))).collect(),
                    re: rational_string(&r.value.re),
                    im: rational_string(&r.value.im),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&Doc { terms })?;
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(vec![]);
            w.write_record(["deg", "mono", "re", "im"])?;
            for r in rows {
                w.write_record([
                    r.deg.to_string(),
                    r.mono.to_string(),
                    rational_string(&r.value.re),
                    rational_string(&r.value.im),
                ])?;
            }
            String::from_utf8(w.into_inner()?)?
        }
    })
}
