//! The finite/infinite dichotomy for a characteristic polynomial.
//!
//! The verdict itself rests only on integer arithmetic: Witt dimensions for
//! realizability, exact cyclotomic division for finiteness. Numerics only
//! decorate the infinite case with an entropy value and a witness root.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyclo::{cyclotomic_factorize, dims_from_multiplicities, CycloFactorization};
use super::roots::eigenvalues_numeric;
use super::spectral::DEFAULT_ROOT_TOLERANCE;
use super::{witt_dim_at, CharPolynomial, WittDims};
use crate::numtheory::necklace_root_sum_c;

/// Default length of dimension tables.
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// Above this vanishing degree the Newton-identity path is skipped and only
/// the root-of-unity sum path is evaluated.
const NEWTON_VANISHING_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq)]
pub struct FiniteCertificate {
    pub multiplicities: BTreeMap<u64, u32>,
    /// Nonzero `dim L_k`.
    pub dims: BTreeMap<u64, BigInt>,
    pub total_dim: BigInt,
    /// `Σ k·dim L_k`.
    pub lie_degree: BigInt,
    pub poly_degree: usize,
    /// `lie_degree == poly_degree`.
    pub degree_check: bool,
    /// `k* = 1 + ∏` of the distinct orders of the eigenvalues.
    pub vanishing_bound: BigInt,
    /// `ℓ_k = 0` for `k*` (both computation paths) and for every tabulated `k ≥ k*`.
    pub vanishing_verified: bool,
    /// The multiplicity inversion agrees with the tabulated Witt dimensions.
    pub dims_agree: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// `|conductor(remainder)| ≥ 2`, so some root has modulus > 1 (exact).
    ConductorBound,
    /// Conductor ±1 but not cyclotomic; a root off the unit circle exists and
    /// the witness is the numeric one.
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct InfiniteWitness {
    /// Non-cyclotomic part of χ.
    pub remainder: CharPolynomial,
    pub remainder_conductor: BigInt,
    pub kind: WitnessKind,
    /// Largest-modulus root of the remainder, when the numerics converge.
    pub witness_root: Option<Complex64>,
    /// `max |λ|` over all of χ, when the numerics converge.
    pub entropy: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    FiniteDimensional(FiniteCertificate),
    InfiniteDimensional(InfiniteWitness),
    /// First degree whose dimension is negative or fractional.
    NotRealizable { degree: usize, value: BigRational },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::FiniteDimensional(_) => "FiniteDimensional",
            Verdict::InfiniteDimensional(_) => "InfiniteDimensional",
            Verdict::NotRealizable { .. } => "NotRealizable",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct WittReport {
    pub witt: WittDims,
    pub factorization: CycloFactorization,
    pub verdict: Verdict,
}

/// Decides from `χ` alone whether the algebra is finite-dimensional, tabulating
/// dimensions up to `max_degree`.
pub fn finiteness_verdict(chi: &CharPolynomial, max_degree: usize) -> WittReport {
    let witt = chi.witt_dims(max_degree);
    let factorization = cyclotomic_factorize(chi);

    if let Some((degree, value)) = witt.first_defect() {
        let verdict = Verdict::NotRealizable {
            degree,
            value: value.clone(),
        };
        return WittReport {
            witt,
            factorization,
            verdict,
        };
    }

    let verdict = if factorization.is_complete() {
        finite_verdict(chi, &witt, &factorization)
    } else {
        Verdict::InfiniteDimensional(infinite_witness(chi, &factorization))
    };
    WittReport {
        witt,
        factorization,
        verdict,
    }
}

fn finite_verdict(chi: &CharPolynomial, witt: &WittDims, f: &CycloFactorization) -> Verdict {
    let inverted = dims_from_multiplicities(&f.multiplicities);
    if let Some(&k) = inverted.negative.first() {
        return Verdict::NotRealizable {
            degree: k as usize,
            value: BigRational::from_integer(inverted.dims[&k].clone()),
        };
    }
    let product: BigInt = f.orders().map(BigInt::from).product();
    let k_star = product + BigInt::one();

    let root_sum_at = |k: u64| -> BigRational {
        f.multiplicities
            .iter()
            .map(|(&m, &n)| necklace_root_sum_c(k, m) * BigInt::from(n))
            .sum()
    };
    let tabulated_tail_zero = witt
        .dims
        .iter()
        .enumerate()
        .filter(|(i, _)| BigInt::from(i + 1) >= k_star)
        .all(|(_, d)| d.is_zero());
    let at_k_star = match u64::try_from(&k_star) {
        Ok(k) if k <= NEWTON_VANISHING_CAP => {
            let p = chi.power_sums(k as usize);
            witt_dim_at(&p, k as usize).is_zero() && root_sum_at(k).is_zero()
        }
        Ok(k) => root_sum_at(k).is_zero(),
        Err(_) => false,
    };

    let dims_agree = witt.dims.iter().enumerate().all(|(i, d)| {
        let expected = inverted
            .dims
            .get(&(i as u64 + 1))
            .cloned()
            .unwrap_or_default();
        *d == BigRational::from_integer(expected)
    });
    let lie_degree = inverted.weighted_degree();
    let poly_degree = chi.degree();
    Verdict::FiniteDimensional(FiniteCertificate {
        multiplicities: f.multiplicities.clone(),
        total_dim: inverted.total(),
        degree_check: lie_degree == BigInt::from(poly_degree),
        lie_degree,
        poly_degree,
        dims: inverted.dims,
        vanishing_bound: k_star,
        vanishing_verified: tabulated_tail_zero && at_k_star,
        dims_agree,
    })
}

fn infinite_witness(chi: &CharPolynomial, f: &CycloFactorization) -> InfiniteWitness {
    let remainder = f.remainder.clone();
    let remainder_conductor = remainder.conductor();
    let kind = if remainder_conductor.abs() >= BigInt::from(2) {
        WitnessKind::ConductorBound
    } else {
        WitnessKind::Numeric
    };
    let witness_root = eigenvalues_numeric(&remainder, DEFAULT_ROOT_TOLERANCE)
        .ok()
        .and_then(|e| e.dominant().map(|i| e.roots[i]));
    let entropy = eigenvalues_numeric(chi, DEFAULT_ROOT_TOLERANCE)
        .ok()
        .and_then(|e| e.dominant().map(|i| e.roots[i].norm()));
    InfiniteWitness {
        remainder,
        remainder_conductor,
        kind,
        witness_root,
        entropy,
    }
}
