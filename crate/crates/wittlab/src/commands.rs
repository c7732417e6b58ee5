//! One function per CLI command. Each returns the table text, the JSON
//! record and the exit code; nothing here touches stdin or stdout.

use std::fmt::Display;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Serialize;
use wittlab_core::charpoly::roots::eigenvalues_numeric;
use wittlab_core::charpoly::{finiteness_verdict, spectral_report, Verdict};
use wittlab_core::graphs::{cayley_graph, symmetrize, Graph};
use wittlab_core::numtheory::{necklace_eval, necklace_root_sum_c, ramanujan_p};
use wittlab_core::{presets, CharPolynomial, Error as CoreError};

use crate::config::REPORT_TOLERANCE;
use crate::input::GraphFile;
use crate::report::*;
use crate::{exit, CliError, Output, RunConfig};

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("report records serialize")
}

fn row(out: &mut String, label: &str, value: impl Display) {
    let _ = writeln!(out, "{label:<16}{value}");
}

fn joined<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `value (residual r)`, with a warning when `r` exceeds the report tolerance.
fn annotated(value: impl Display, residual: f64) -> String {
    let flag = if residual > REPORT_TOLERANCE { " UNRELIABLE" } else { "" };
    format!("{value} (residual {residual:.1e}{flag})")
}

fn complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{:.6}", z.re)
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{:.6} {sign} {:.6}i", z.re, z.im.abs())
    }
}

/// Full spectral and dimension report for a characteristic polynomial.
pub fn char_analyze(chi: &CharPolynomial, cfg: &RunConfig) -> Result<Output, CliError> {
    let (roots, residuals, entropy, converged) = match spectral_report(chi, cfg.tolerance) {
        Ok(s) => (
            s.eigenvalues,
            s.residuals,
            s.entropy.as_ref().map(EntropyRecord::new),
            true,
        ),
        Err(CoreError::NoConvergence { roots, residuals }) => {
            let entropy = roots
                .iter()
                .zip(&residuals)
                .max_by(|a, b| a.0.norm().total_cmp(&b.0.norm()))
                .map(|(z, &r)| EntropyRecord {
                    value: z.norm(),
                    exactness: "numeric".to_string(),
                    residual: r,
                    largest_real_root: None,
                    dominant_is_real: false,
                });
            (roots, residuals, entropy, false)
        }
        Err(e) => return Err(CliError::from_core(e)),
    };
    let witt = finiteness_verdict(chi, cfg.dims);
    let witness_residual = match &witt.verdict {
        Verdict::InfiniteDimensional(w) => eigenvalues_numeric(&w.remainder, cfg.tolerance)
            .ok()
            .and_then(|e| e.dominant().map(|i| e.residuals[i]))
            .unwrap_or(f64::INFINITY),
        _ => 0.0,
    };
    let hilbert = chi
        .hilbert_series(cfg.order)
        .integer_coefficients()
        .expect("inverse of a normalized integer polynomial is integral");

    let report = CharReport {
        polynomial: ints(chi.coefficients()),
        degree: chi.degree(),
        conductor: chi.conductor().into(),
        euler_poincare: chi.euler_poincare().into(),
        eigenvalues: roots
            .iter()
            .zip(&residuals)
            .map(|(&z, &r)| RootRecord::new(z, r))
            .collect(),
        converged,
        tolerance: cfg.tolerance,
        entropy,
        factorization: FactorizationRecord::new(&witt.factorization),
        power_sums: ints(&witt.witt.power_sums),
        dims: rationals(&witt.witt.dims),
        hilbert_series: ints(&hilbert),
        verdict: VerdictRecord::new(&witt.verdict, witness_residual),
    };

    let mut t = String::new();
    row(&mut t, "polynomial", joined(&report.polynomial));
    row(&mut t, "degree", report.degree);
    row(&mut t, "conductor", &report.conductor);
    row(&mut t, "euler-poincare", &report.euler_poincare);
    if !converged {
        row(&mut t, "warning", format!("root finder did not reach tolerance {:.1e}", cfg.tolerance));
    }
    for (i, r) in report.eigenvalues.iter().enumerate() {
        let label = if i == 0 { "eigenvalues" } else { "" };
        let z = Complex64::new(r.re, r.im);
        row(&mut t, label, annotated(format!("{}  |λ| {:.6}", complex(z), r.modulus), r.residual));
    }
    if let Some(e) = &report.entropy {
        let value = format!("{:.6} {}", e.value, e.exactness);
        row(&mut t, "entropy", annotated(value, e.residual));
        if let Some(real) = e.largest_real_root {
            let note = if e.dominant_is_real { "attains max |λ|" } else { "below max |λ|" };
            row(&mut t, "largest real λ", format!("{real:.6} ({note})"));
        }
    }
    let f = &report.factorization;
    let factors = if f.factors.is_empty() {
        "none".to_string()
    } else {
        joined(f.factors.iter().map(|x| format!("Φ*{}^{}", x.order, x.multiplicity)))
    };
    row(&mut t, "cyclotomic", factors);
    row(&mut t, "remainder", joined(&f.remainder));
    row(&mut t, "power sums", joined(&report.power_sums));
    row(&mut t, "dims", joined(&report.dims));
    row(&mut t, "hilbert series", joined(&report.hilbert_series));
    row(&mut t, "verdict", &report.verdict.kind);
    if let Some(fin) = &report.verdict.finite {
        row(&mut t, "k*", &fin.k_star);
        row(&mut t, "total dim", &fin.total_dim);
        let nonzero = joined(fin.nonzero_dims.iter().map(|d| format!("{}:{}", d.degree, d.dim)));
        row(&mut t, "nonzero dims", nonzero);
        row(&mut t, "degree check", fin.degree_check);
        row(&mut t, "vanishing", fin.vanishing_verified);
    }
    if let Some(inf) = &report.verdict.infinite {
        row(&mut t, "witness", format!("{} (remainder conductor {})", inf.witness, inf.remainder_conductor));
        if let Some(r) = &inf.witness_root {
            row(&mut t, "witness root", annotated(complex(Complex64::new(r.re, r.im)), r.residual));
        }
    }
    if let Some(d) = &report.verdict.not_realizable {
        row(&mut t, "first defect", format!("dim L_{} = {}", d.degree, d.value));
    }

    Ok(Output {
        table: t,
        json: json(&report),
        code: if converged { exit::OK } else { exit::NO_CONVERGENCE },
    })
}

pub fn graph_clique_poly(g: &Graph, cfg: &RunConfig) -> Result<Output, CliError> {
    let counts = g.clique_counts_with_limit(cfg.max_vertices).map_err(CliError::from_core)?;
    let chi = g
        .clique_polynomial_with_limit(cfg.max_vertices)
        .map_err(CliError::from_core)?;
    let report = CliquePolyReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        clique_number: counts.len(),
        clique_counts: ints(&counts),
        polynomial: ints(chi.coefficients()),
    };
    Ok(Output {
        table: format!("{}\n", joined(&report.polynomial)),
        json: json(&report),
        code: exit::OK,
    })
}

pub fn graph_ranks(g: &Graph, count: usize, cfg: &RunConfig) -> Result<Output, CliError> {
    let ranks = g
        .lcs_ranks_with_limit(count, cfg.max_vertices)
        .map_err(CliError::from_core)?;
    let report = RanksReport { ranks: ints(&ranks) };
    Ok(Output {
        table: format!("{}\n", joined(&report.ranks)),
        json: json(&report),
        code: exit::OK,
    })
}

pub fn graph_turan(g: &Graph, cfg: &RunConfig) -> Result<Output, CliError> {
    let t = g
        .turan_check_with_limit(cfg.max_vertices)
        .map_err(CliError::from_core)?;
    let r = TuranRecord::new(&t);
    let mut s = String::new();
    row(&mut s, "clique number", r.clique_number);
    row(&mut s, "c1", &r.c1);
    row(&mut s, "c2", &r.c2);
    let mantel = if r.mantel_applicable {
        format!("4·c2 <= c1^2: {}", r.mantel_holds)
    } else {
        format!("4·c2 <= c1^2: {} (graph has triangles)", r.mantel_holds)
    };
    row(&mut s, "mantel", mantel);
    row(&mut s, "turan bound", &r.turan_bound);
    row(&mut s, "c2 <= bound", r.turan_question_holds);
    row(&mut s, "equality", r.turan_extremal);
    Ok(Output {
        table: s,
        json: json(&r),
        code: exit::OK,
    })
}

/// Cayley graph of ℤ/n; the residues are closed under negation first.
pub fn graph_cayley(modulus: u64, residues: &[u64]) -> Result<Output, CliError> {
    if modulus == 0 {
        return Err(CliError::input("modulus must be at least 1"));
    }
    let set = symmetrize(modulus, residues);
    let g = cayley_graph(modulus, &set).map_err(CliError::from_core)?;
    let file = GraphFile::from_graph(&g);
    Ok(Output {
        table: file.to_text(),
        json: json(&file),
        code: exit::OK,
    })
}

fn table_output(name: &str, header: &str, columns: Vec<BigRational>, rows: Vec<TableRow>) -> Output {
    let cells: Vec<Vec<String>> = std::iter::once(
        std::iter::once("k".to_string())
            .chain(columns.iter().map(|c| format!("{header}={c}")))
            .collect(),
    )
    .chain(rows.iter().map(|r| {
        std::iter::once(r.k.to_string())
            .chain(r.values.iter().map(|v| v.to_string()))
            .collect()
    }))
    .collect();
    let widths: Vec<usize> = (0..cells[0].len())
        .map(|j| cells.iter().map(|r| r[j].chars().count()).max().unwrap_or(0))
        .collect();
    let mut table = String::new();
    for r in &cells {
        let line: Vec<String> = r
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:>w$}"))
            .collect();
        let _ = writeln!(table, "{}", line.join("  "));
    }
    let report = TableReport {
        table: name.to_string(),
        columns: columns.into_iter().map(JsonRational).collect(),
        rows,
    };
    Output {
        table,
        json: json(&report),
        code: exit::OK,
    }
}

/// `M_k(x)` for every `k` and `x`.
pub fn necklace(ks: &[u64], xs: &[BigRational]) -> Output {
    let rows = ks
        .iter()
        .map(|&k| TableRow {
            k,
            values: xs.iter().map(|x| JsonRational(necklace_eval(k, x))).collect(),
        })
        .collect();
    table_output("necklace", "x", xs.to_vec(), rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RamanujanKind {
    /// Sum of k-th powers of the primitive m-th roots of unity.
    #[value(name = "P")]
    P,
    /// Value of the k-th necklace polynomial summed over the primitive m-th roots of unity.
    #[value(name = "C")]
    C,
}

pub fn ramanujan(kind: RamanujanKind, ks: &[u64], ms: &[u64]) -> Output {
    let value = |k: u64, m: u64| match kind {
        RamanujanKind::P => BigRational::from_integer(BigInt::from(ramanujan_p(k, m))),
        RamanujanKind::C => necklace_root_sum_c(k, m),
    };
    let rows = ks
        .iter()
        .map(|&k| TableRow {
            k,
            values: ms.iter().map(|&m| JsonRational(value(k, m))).collect(),
        })
        .collect();
    let columns = ms
        .iter()
        .map(|&m| BigRational::from_integer(BigInt::from(m)))
        .collect();
    let name = match kind {
        RamanujanKind::P => "ramanujan_p",
        RamanujanKind::C => "ramanujan_c",
    };
    table_output(name, "m", columns, rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    Free(u64),
    FreeSum(u64, u64),
    OneRelator(u64),
    Braid(u64),
    Labute(u64),
    Filiform,
    Spiga,
}

fn core_input(r: wittlab_core::Result<CharPolynomial>) -> Result<CharPolynomial, CliError> {
    r.map_err(CliError::from_core)
}

/// Polynomial presets print the full `char analyze` report; `labute` prints
/// `K` dimensions, `filiform` the series to order `N`, `spiga` its graph.
pub fn preset(p: &Preset, cfg: &RunConfig) -> Result<Output, CliError> {
    match *p {
        Preset::Free(r) => char_analyze(&core_input(presets::free(r))?, cfg),
        Preset::FreeSum(r, s) => char_analyze(&core_input(presets::free_sum(r, s))?, cfg),
        Preset::OneRelator(m) => char_analyze(&core_input(presets::one_relator(m))?, cfg),
        Preset::Braid(n) => char_analyze(&core_input(presets::braid_arrangement(n))?, cfg),
        Preset::Labute(m) => {
            let dims = presets::labute_dims(m, cfg.dims).map_err(CliError::from_core)?;
            let report = DimsReport {
                name: format!("labute m={m}"),
                dims: ints(&dims),
            };
            Ok(Output {
                table: format!("{}\n", joined(&report.dims)),
                json: json(&report),
                code: exit::OK,
            })
        }
        Preset::Filiform => {
            let s = presets::filiform_series(cfg.order).map_err(CliError::from_core)?;
            let report = SeriesReport {
                name: "filiform".to_string(),
                order: s.order(),
                coefficients: rationals(s.coefficients()),
            };
            Ok(Output {
                table: format!("{}\n", joined(&report.coefficients)),
                json: json(&report),
                code: exit::OK,
            })
        }
        Preset::Spiga => {
            let file = GraphFile::from_graph(&presets::spiga());
            Ok(Output {
                table: file.to_text(),
                json: json(&file),
                code: exit::OK,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::OutputFormat;

    fn cfg() -> RunConfig {
        RunConfig::default()
    }

    #[test]
    fn free_dims_row() {
        let cfg = RunConfig::build(Some(8), None, None, OutputFormat::Table, None).unwrap();
        let out = char_analyze(&CharPolynomial::from_i64s(&[1, -2]).unwrap(), &cfg).unwrap();
        assert!(out.table.contains("dims            2 1 2 3 6 9 18 30\n"), "{}", out.table);
        assert_eq!(out.code, exit::OK);
    }

    #[test]
    fn not_realizable_is_not_an_error() {
        let out = char_analyze(&CharPolynomial::from_i64s(&[1, 1]).unwrap(), &cfg()).unwrap();
        assert_eq!(out.code, exit::OK);
        assert_eq!(out.json["verdict"]["kind"], "NotRealizable");
        assert_eq!(out.json["verdict"]["not_realizable"]["value"], serde_json::json!(-1));
    }

    #[test]
    fn cayley_closes_under_negation() {
        let a = graph_cayley(11, &[2, 3, 5]).unwrap();
        let b = graph_cayley(11, &[2, 3, 5, 6, 8, 9]).unwrap();
        assert_eq!(a.table, b.table);
        assert!(graph_cayley(11, &[0]).is_err());
        assert!(graph_cayley(0, &[1]).is_err());
    }

    #[test]
    fn size_limit_maps_to_resource_code() {
        let cfg = RunConfig { max_vertices: 5, ..cfg() };
        let err = graph_clique_poly(&Graph::empty(6), &cfg).unwrap_err();
        assert_eq!(err.exit_code(), exit::RESOURCE);
    }

    #[test]
    fn tables() {
        let out = necklace(&[1, 2, 3, 4], &[BigRational::from_integer(2.into())]);
        let col: Vec<&str> = out.table.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
        assert_eq!(col, ["2", "1", "2", "3"]);
        let out = ramanujan(RamanujanKind::P, &[1], &[2, 3, 4, 5, 6]);
        assert_eq!(out.table.lines().nth(1).unwrap().split_whitespace().collect::<Vec<_>>(), ["1", "-1", "-1", "0", "-1", "1"]);
        let out = ramanujan(RamanujanKind::C, &[5], &[2]);
        assert_eq!(out.json["rows"][0]["values"][0], serde_json::json!(0));
    }
}
