//! Worked examples: free and free-sum Lie algebras, quadratic one-relator
//! algebras, the filiform series, the braid arrangement and the Cayley graph
//! on ℤ/11 with connection set {±2, ±3, ±5}.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::charpoly::CharPolynomial;
use crate::graphs::{cayley_graph, Graph};
use crate::numtheory::{binomial, divisors, mu};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// Free Lie algebra on `r` generators: `1 − r·y`.
pub fn free(r: u64) -> Result<CharPolynomial> {
    if r == 0 {
        return Err(Error::InvalidParameter("free: r must be at least 1"));
    }
    Ok(CharPolynomial::from_eigenvalues([r]))
}

/// Free product-sum of free algebras on `r` and `s` generators: `(1 − r·y)(1 − s·y)`.
pub fn free_sum(r: u64, s: u64) -> Result<CharPolynomial> {
    if r == 0 || s == 0 {
        return Err(Error::InvalidParameter("free-sum: r and s must be at least 1"));
    }
    Ok(CharPolynomial::from_eigenvalues([r, s]))
}

/// Quadratic one-relator algebra on `m` generators: `1 − m·y + y²`.
pub fn one_relator(m: u64) -> Result<CharPolynomial> {
    if m < 2 {
        return Err(Error::InvalidParameter("one-relator: m must be at least 2"));
    }
    CharPolynomial::new(vec![BigInt::one(), -BigInt::from(m), BigInt::one()])
}

/// `λ_1^k + λ_2^k` for the one-relator eigenvalues, via the alternating
/// binomial sum `Σ_{0 ≤ i ≤ k/2} (−1)^i·(k/(k−i))·C(k−i, i)·m^{k−2i}`.
pub fn one_relator_power_sum(m: u64, k: u64) -> BigInt {
    assert!(k >= 1, "power index must be positive");
    let m = BigInt::from(m);
    let sum = (0..=k / 2).fold(BigRational::zero(), |acc, i| {
        let term = BigRational::new(BigInt::from(k), BigInt::from(k - i))
            * binomial(k - i, i)
            * m.pow((k - 2 * i) as u32);
        if i % 2 == 0 {
            acc + term
        } else {
            acc - term
        }
    });
    assert!(sum.is_integer(), "alternating binomial sum is integral");
    sum.to_integer()
}

/// Dimensions `ℓ_1..ℓ_count` of the one-relator algebra from the closed
/// double sum, independently of Newton's identities.
pub fn labute_dims(m: u64, count: usize) -> Result<Vec<BigInt>> {
    if m < 2 {
        return Err(Error::InvalidParameter("labute: m must be at least 2"));
    }
    let power_sums: Vec<BigInt> = (1..=count as u64)
        .map(|j| one_relator_power_sum(m, j))
        .collect();
    Ok((1..=count as u64)
        .map(|k| {
            let total: BigInt = divisors(k)
                .into_iter()
                .map(|j| &power_sums[j as usize - 1] * BigInt::from(mu(k / j)))
                .sum();
            let dim = BigRational::new(total, BigInt::from(k));
            assert!(dim.is_integer(), "one-relator dimensions are integral");
            dim.to_integer()
        })
        .collect())
}

/// `(1 − y)·∏_{k ≥ 1}(1 − y^k)` truncated at `order`.
///
/// Only a series: the product does not terminate, so there is no polynomial form.
pub fn filiform_series(order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return Err(Error::InvalidParameter("filiform: order must be at least 1"));
    }
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    coeffs[1] = BigInt::from(-1);
    for k in 1..=order {
        for i in (k..=order).rev() {
            let carry = coeffs[i - k].clone();
            coeffs[i] -= carry;
        }
    }
    Ok(TruncatedSeries::from_integers(coeffs, order))
}

/// Braid arrangement complement with eigenvalues `1, …, n`: `∏ (1 − i·y)`.
pub fn braid_arrangement(n: u64) -> Result<CharPolynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("braid: n must be at least 1"));
    }
    Ok(CharPolynomial::from_eigenvalues(1..=n))
}

/// Cayley graph of ℤ/11 with connection set {±2, ±3, ±5}.
pub fn spiga() -> Graph {
    cayley_graph(11, &[2, 3, 5, 6, 8, 9]).expect("symmetric connection set")
}
