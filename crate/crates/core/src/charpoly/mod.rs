//! Invariants read off a characteristic polynomial `χ(y) = ∏ (1 − λ_i·y)`.
//!
//! The exact path (power sums, graded dimensions, cyclotomic structure,
//! finiteness) never touches floating point. Eigenvalues and entropy are
//! numeric and live in [`roots`] and [`spectral`].

mod cyclo;
pub mod roots;
mod spectral;
mod verdict;

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::numtheory::{divisors, is_nonneg_integer, mu, IntPolynomial};
use crate::series::{pbw_series, TruncatedSeries};
use crate::{Error, Result};

pub use cyclo::{
    cyclotomic_factorize, dims_from_multiplicities, reversed_cyclotomic, CycloFactorization,
    InvertedDims,
};
pub use spectral::{
    entropy, entropy_with_tol, spectral_report, Entropy, Exactness, SpectralReport,
    DEFAULT_ROOT_TOLERANCE,
};
pub use verdict::{
    finiteness_verdict, FiniteCertificate, InfiniteWitness, Verdict, WitnessKind, WittReport,
    DEFAULT_MAX_DEGREE,
};

/// Integer polynomial with constant term 1, kept at its true degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharPolynomial(IntPolynomial);

impl CharPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        Self::from_poly(IntPolynomial::new(coeffs))
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_poly(IntPolynomial::from_i64s(coeffs))
    }

    pub fn from_poly(poly: IntPolynomial) -> Result<Self> {
        if !poly.coeff(0).is_one() {
            return Err(Error::NotNormalized);
        }
        Ok(CharPolynomial(poly))
    }

    /// `∏ (1 − λ·y)` over the given integer eigenvalues.
    pub fn from_eigenvalues<I, T>(eigenvalues: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let poly = eigenvalues.into_iter().fold(IntPolynomial::one(), |acc, l| {
            &acc * &IntPolynomial::new(alloc::vec![BigInt::one(), -l.into()])
        });
        CharPolynomial(poly)
    }

    pub fn one() -> Self {
        CharPolynomial(IntPolynomial::one())
    }

    pub fn degree(&self) -> usize {
        self.0.degree().unwrap_or(0)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        self.0.coefficients()
    }

    /// Coefficient `a_i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.0.coeff(i)
    }

    pub fn as_poly(&self) -> &IntPolynomial {
        &self.0
    }

    pub fn into_poly(self) -> IntPolynomial {
        self.0
    }

    /// `c = (−1)^n·a_n`, the product of the eigenvalues.
    pub fn conductor(&self) -> BigInt {
        let lead = self.0.leading().cloned().unwrap_or_else(BigInt::one);
        if self.degree().is_multiple_of(2) {
            lead
        } else {
            -lead
        }
    }

    /// Euler–Poincaré characteristic `χ(1)`; zero iff 1 is an eigenvalue.
    pub fn euler_poincare(&self) -> BigInt {
        self.0.eval_one()
    }

    /// The polynomial as a series truncated at `order`.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_integers(self.coefficients().iter().cloned(), order)
    }

    /// Power sums `p_m = Σ λ_i^m` for `m = 1..=count`, by Newton's identities
    /// with `a_i = (−1)^i·e_i`.
    pub fn power_sums(&self, count: usize) -> Vec<BigInt> {
        let n = self.degree();
        let a = self.coefficients();
        let mut p: Vec<BigInt> = Vec::with_capacity(count);
        for m in 1..=count {
            let mut acc = if m <= n {
                -(&a[m] * BigInt::from(m))
            } else {
                BigInt::zero()
            };
            for i in 1..=n.min(m - 1) {
                if !a[i].is_zero() {
                    acc -= &a[i] * &p[m - i - 1];
                }
            }
            p.push(acc);
        }
        p
    }

    /// Graded dimensions `ℓ_1..ℓ_count` by Möbius inversion of the power sums.
    pub fn witt_dims(&self, count: usize) -> WittDims {
        WittDims::from_power_sums(self.power_sums(count))
    }

    /// The inverse series `1/χ`, i.e. the Hilbert series of the enveloping algebra.
    pub fn hilbert_series(&self, order: usize) -> TruncatedSeries {
        self.to_series(order)
            .inverse()
            .expect("constant term is 1")
    }

    /// Sign screen for the Koszul shape `1 − b_1·y + b_2·y² − ⋯`: coefficients
    /// strictly alternate in sign and none vanish.
    pub fn descartes_check(&self) -> bool {
        self.coefficients().iter().enumerate().all(|(i, c)| {
            if i % 2 == 0 {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    }
}

impl fmt::Display for CharPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Power sums and the graded dimensions obtained from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittDims {
    /// `p_1..p_K`.
    pub power_sums: Vec<BigInt>,
    /// `ℓ_1..ℓ_K`; rational because an arbitrary polynomial need not be realizable.
    pub dims: Vec<BigRational>,
}

impl WittDims {
    pub fn from_power_sums(power_sums: Vec<BigInt>) -> Self {
        let dims = (1..=power_sums.len())
            .map(|k| witt_dim_at(&power_sums, k))
            .collect();
        WittDims { power_sums, dims }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// First degree whose dimension is negative or not an integer.
    pub fn first_defect(&self) -> Option<(usize, &BigRational)> {
        self.dims
            .iter()
            .enumerate()
            .find(|(_, d)| !is_nonneg_integer(d))
            .map(|(i, d)| (i + 1, d))
    }

    /// The dimensions as integers when all of them are integral.
    pub fn integral(&self) -> Option<Vec<BigInt>> {
        self.dims
            .iter()
            .map(|d| d.is_integer().then(|| d.to_integer()))
            .collect()
    }
}

/// `ℓ_k = (1/k)·Σ_{j | k} μ(k/j)·p_j`; `power_sums[j − 1]` must exist for all `j | k`.
pub fn witt_dim_at(power_sums: &[BigInt], k: usize) -> BigRational {
    let sum = divisors(k as u64)
        .into_iter()
        .fold(BigInt::zero(), |acc, j| match mu(k as u64 / j) {
            0 => acc,
            s => acc + &power_sums[j as usize - 1] * BigInt::from(s),
        });
    BigRational::new(sum, BigInt::from(k))
}

/// Outcome of reconstructing a characteristic polynomial from dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CharFromDims {
    Polynomial(CharPolynomial),
    /// The inverse Hilbert series has a nonzero coefficient past the assumed degree.
    Rejected { degree: usize, coefficient: BigInt },
}

/// Inverts the PBW series of `dims` at `order` and checks that everything
/// past `assumed_degree` vanishes.
pub fn char_from_dims<I, T>(dims: I, assumed_degree: usize, order: usize) -> Result<CharFromDims>
where
    I: IntoIterator<Item = T>,
    T: Into<BigInt>,
{
    if order < assumed_degree {
        return Err(Error::OrderTooSmall {
            order,
            required: assumed_degree,
        });
    }
    let chi = pbw_series(dims, order)?.inverse()?;
    let coeffs = chi
        .integer_coefficients()
        .expect("inverse of an integral series with constant term 1 is integral");
    if let Some((degree, c)) = coeffs
        .iter()
        .enumerate()
        .skip(assumed_degree + 1)
        .find(|(_, c)| !c.is_zero())
    {
        return Ok(CharFromDims::Rejected {
            degree,
            coefficient: c.clone(),
        });
    }
    let kept = coeffs.into_iter().take(assumed_degree + 1).collect();
    Ok(CharFromDims::Polynomial(CharPolynomial::new(kept)?))
}
