//! Serializable report records. Integers of any size are JSON numbers;
//! rationals are numbers when integral and `"p/q"` strings otherwise; every
//! float travels with the residual it was computed at.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::Number;
use wittlab_core::charpoly::{
    CycloFactorization, Exactness, FiniteCertificate, InfiniteWitness, Verdict, WitnessKind,
};
use wittlab_core::graphs::TuranReport;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JsonInt(pub BigInt);

impl From<BigInt> for JsonInt {
    fn from(v: BigInt) -> Self {
        JsonInt(v)
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        JsonInt(v.clone())
    }
}

impl fmt::Display for JsonInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let n = Number::from_str(&self.0.to_string()).map_err(serde::ser::Error::custom)?;
        n.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let n = Number::deserialize(d)?;
        BigInt::from_str(&n.to_string())
            .map(JsonInt)
            .map_err(|_| de::Error::custom(format!("expected an integer, got {n}")))
    }
}

pub fn ints<'a>(v: impl IntoIterator<Item = &'a BigInt>) -> Vec<JsonInt> {
    v.into_iter().map(JsonInt::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRational(pub BigRational);

impl fmt::Display for JsonRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            JsonInt(self.0.to_integer()).serialize(s)
        } else {
            s.serialize_str(&self.0.to_string())
        }
    }
}

impl<'de> Deserialize<'de> for JsonRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(Number),
            Frac(String),
        }
        let text = match Raw::deserialize(d)? {
            Raw::Int(n) => n.to_string(),
            Raw::Frac(s) => s,
        };
        let parsed = match text.split_once('/') {
            Some((p, q)) => BigInt::from_str(p)
                .ok()
                .zip(BigInt::from_str(q).ok())
                .filter(|(_, q)| *q != BigInt::from(0))
                .map(|(p, q)| BigRational::new(p, q)),
            None => BigInt::from_str(&text).ok().map(BigRational::from_integer),
        };
        parsed
            .map(JsonRational)
            .ok_or_else(|| de::Error::custom(format!("expected an integer or p/q, got {text:?}")))
    }
}

pub fn rationals<'a>(v: impl IntoIterator<Item = &'a BigRational>) -> Vec<JsonRational> {
    v.into_iter().map(|r| JsonRational(r.clone())).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootRecord {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub residual: f64,
}

impl RootRecord {
    pub fn new(z: Complex64, residual: f64) -> Self {
        RootRecord {
            re: z.re,
            im: z.im,
            modulus: z.norm(),
            residual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EntropyRecord {
    pub value: f64,
    /// `"exact"` when every eigenvalue is a root of unity, else `"numeric"`.
    pub exactness: String,
    pub residual: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub largest_real_root: Option<f64>,
    pub dominant_is_real: bool,
}

impl EntropyRecord {
    pub fn new(e: &wittlab_core::Entropy) -> Self {
        EntropyRecord {
            value: e.value,
            exactness: match e.exactness {
                Exactness::ExactOne => "exact",
                Exactness::Numeric => "numeric",
            }
            .to_string(),
            residual: e.residual,
            largest_real_root: e.largest_real_root,
            dominant_is_real: e.dominant_is_real,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub order: u64,
    pub multiplicity: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorizationRecord {
    pub factors: Vec<FactorRecord>,
    /// Coefficients of the non-cyclotomic part, degree 0 upward.
    pub remainder: Vec<JsonInt>,
    pub complete: bool,
}

impl FactorizationRecord {
    pub fn new(f: &CycloFactorization) -> Self {
        FactorizationRecord {
            factors: f
                .multiplicities
                .iter()
                .map(|(&order, &multiplicity)| FactorRecord { order, multiplicity })
                .collect(),
            remainder: ints(f.remainder.coefficients()),
            complete: f.is_complete(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimRecord {
    pub degree: u64,
    pub dim: JsonInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteRecord {
    pub k_star: JsonInt,
    pub nonzero_dims: Vec<DimRecord>,
    pub total_dim: JsonInt,
    pub lie_degree: JsonInt,
    pub degree_check: bool,
    pub vanishing_verified: bool,
    pub dims_agree: bool,
}

impl FiniteRecord {
    fn new(c: &FiniteCertificate) -> Self {
        FiniteRecord {
            k_star: (&c.vanishing_bound).into(),
            nonzero_dims: c
                .dims
                .iter()
                .map(|(&degree, d)| DimRecord { degree, dim: d.into() })
                .collect(),
            total_dim: (&c.total_dim).into(),
            lie_degree: (&c.lie_degree).into(),
            degree_check: c.degree_check,
            vanishing_verified: c.vanishing_verified,
            dims_agree: c.dims_agree,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InfiniteRecord {
    pub remainder_conductor: JsonInt,
    /// `"conductor"` (exact: |conductor| ≥ 2) or `"numeric"`.
    pub witness: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_root: Option<RootRecord>,
}

impl InfiniteRecord {
    fn new(w: &InfiniteWitness, root_residual: f64) -> Self {
        InfiniteRecord {
            remainder_conductor: (&w.remainder_conductor).into(),
            witness: match w.kind {
                WitnessKind::ConductorBound => "conductor",
                WitnessKind::Numeric => "numeric",
            }
            .to_string(),
            witness_root: w.witness_root.map(|z| RootRecord::new(z, root_residual)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectRecord {
    pub degree: usize,
    pub value: JsonRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite: Option<FiniteRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infinite: Option<InfiniteRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub not_realizable: Option<DefectRecord>,
}

impl VerdictRecord {
    /// `root_residual` is the backward error attached to the witness root.
    pub fn new(v: &Verdict, root_residual: f64) -> Self {
        let mut r = VerdictRecord {
            kind: v.name().to_string(),
            finite: None,
            infinite: None,
            not_realizable: None,
        };
        match v {
            Verdict::FiniteDimensional(c) => r.finite = Some(FiniteRecord::new(c)),
            Verdict::InfiniteDimensional(w) => r.infinite = Some(InfiniteRecord::new(w, root_residual)),
            Verdict::NotRealizable { degree, value } => {
                r.not_realizable = Some(DefectRecord {
                    degree: *degree,
                    value: JsonRational(value.clone()),
                })
            }
        }
        r
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharReport {
    pub polynomial: Vec<JsonInt>,
    pub degree: usize,
    pub conductor: JsonInt,
    pub euler_poincare: JsonInt,
    pub eigenvalues: Vec<RootRecord>,
    /// Every eigenvalue met the requested tolerance.
    pub converged: bool,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropyRecord>,
    pub factorization: FactorizationRecord,
    pub power_sums: Vec<JsonInt>,
    pub dims: Vec<JsonRational>,
    pub hilbert_series: Vec<JsonInt>,
    pub verdict: VerdictRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliquePolyReport {
    pub vertices: usize,
    pub edges: usize,
    pub clique_number: usize,
    pub clique_counts: Vec<JsonInt>,
    pub polynomial: Vec<JsonInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RanksReport {
    pub ranks: Vec<JsonInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranRecord {
    pub clique_number: usize,
    pub c1: JsonInt,
    pub c2: JsonInt,
    pub mantel_applicable: bool,
    pub mantel_holds: bool,
    pub turan_bound: JsonRational,
    pub turan_question_holds: bool,
    pub turan_extremal: bool,
}

impl TuranRecord {
    pub fn new(t: &TuranReport) -> Self {
        TuranRecord {
            clique_number: t.clique_number,
            c1: (&t.c1).into(),
            c2: (&t.c2).into(),
            mantel_applicable: t.mantel_applicable,
            mantel_holds: t.mantel_holds,
            turan_bound: JsonRational(t.turan_bound.clone()),
            turan_question_holds: t.turan_question_holds,
            turan_extremal: t.turan_extremal,
        }
    }
}

/// One row of a number-theory table: the index `k` and values per column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub k: u64,
    pub values: Vec<JsonRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReport {
    /// `"necklace"`, `"ramanujan_p"` or `"ramanujan_c"`.
    pub table: String,
    /// Column arguments: `x` values or moduli `m`.
    pub columns: Vec<JsonRational>,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub name: String,
    pub order: usize,
    pub coefficients: Vec<JsonRational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimsReport {
    pub name: String,
    pub dims: Vec<JsonInt>,
}
