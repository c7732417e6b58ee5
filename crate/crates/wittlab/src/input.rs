//! Command-line value parsers and the two graph file formats.
//!
//! Text graphs: first line is the vertex count `v`, each further line an
//! edge `i j` with 0-based endpoints. `#` starts a comment. JSON graphs:
//! `{"v": 5, "edges": [[0, 1], [1, 2]]}`. The reader picks the format from
//! the first non-blank character.

use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use wittlab_core::graphs::Graph;
use wittlab_core::CharPolynomial;

use crate::CliError;

/// Comma-separated coefficients from degree 0 upward, e.g. `1,-11,33,-33,11`.
pub fn parse_polynomial(s: &str) -> Result<CharPolynomial, CliError> {
    let coeffs = s
        .split(',')
        .map(|c| {
            BigInt::from_str(c.trim())
                .map_err(|_| CliError::input(format!("bad coefficient {c:?} in {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    CharPolynomial::new(coeffs).map_err(|e| CliError::input(format!("polynomial {s:?}: {e}")))
}

/// `a..b` (inclusive), a single value, or a comma list; all values ≥ 1.
pub fn parse_index_list(s: &str) -> Result<Vec<u64>, CliError> {
    let bad = || CliError::input(format!("bad range {s:?}: expected a..b, n, or a,b,c with values >= 1"));
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        let range: RangeInclusive<u64> = match part.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let a: u64 = a.trim().parse().map_err(|_| bad())?;
                let b: u64 = b.trim().parse().map_err(|_| bad())?;
                if a > b {
                    return Err(bad());
                }
                a..=b
            }
            None => {
                let n: u64 = part.parse().map_err(|_| bad())?;
                n..=n
            }
        };
        if *range.start() == 0 {
            return Err(bad());
        }
        out.extend(range);
    }
    Ok(out)
}

/// Comma list of integers or fractions `p/q`.
pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',')
        .map(|x| {
            let x = x.trim();
            let parsed = match x.split_once('/') {
                Some((p, q)) => BigInt::from_str(p.trim())
                    .ok()
                    .zip(BigInt::from_str(q.trim()).ok())
                    .filter(|(_, q)| *q != BigInt::from(0))
                    .map(|(p, q)| BigRational::new(p, q)),
                None => BigInt::from_str(x).ok().map(BigRational::from_integer),
            };
            parsed.ok_or_else(|| CliError::input(format!("bad value {x:?}")))
        })
        .collect()
}

/// Comma list of non-negative residues.
pub fn parse_residues(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|r| {
            r.trim()
                .parse()
                .map_err(|_| CliError::input(format!("bad residue {r:?}")))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub v: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            v: g.vertex_count(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.v);
        for [a, b] in &self.edges {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }
}

fn parse_text_graph(src: &str) -> Result<GraphFile, CliError> {
    let mut lines = src
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| CliError::input("empty graph input"))?;
    let v: usize = header
        .parse()
        .map_err(|_| CliError::input(format!("line 1: expected vertex count, got {header:?}")))?;
    let mut edges = Vec::new();
    for (n, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        let edge = match fields.as_slice() {
            [a, b] => a.parse().ok().zip(b.parse().ok()),
            _ => None,
        };
        let (a, b) = edge.ok_or_else(|| CliError::input(format!("line {n}: expected \"i j\", got {line:?}")))?;
        edges.push([a, b]);
    }
    Ok(GraphFile { v, edges })
}

/// Reads either graph format and validates it.
pub fn parse_graph(src: &str) -> Result<Graph, CliError> {
    let file = if src.trim_start().starts_with('{') {
        serde_json::from_str(src).map_err(|e| CliError::input(format!("graph JSON: {e}")))?
    } else {
        parse_text_graph(src)?
    };
    Graph::new(file.v, file.edges.iter().map(|&[a, b]| (a, b))).map_err(CliError::from_core)
}
