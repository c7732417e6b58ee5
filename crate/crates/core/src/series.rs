//! Exact formal power series truncated at an explicit order.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `y^0, …, y^N`. Binary operations refuse operands of different orders;
//! use [`TruncatedSeries::truncated`] to lower one of them first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Builds a series of order `order` from leading coefficients; missing
    /// ones are zero, coefficients past `order` are dropped.
    pub fn new(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigRational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let coeffs = coeffs
            .into_iter()
            .take(order + 1)
            .map(|c| BigRational::from_integer(c.into()))
            .collect();
        Self::new(coeffs, order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigRational::one()], order)
    }

    /// Truncation bound `N`; the series carries `N + 1` coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// The coefficients as integers, or `None` if some coefficient is not integral.
    pub fn integer_coefficients(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Re-truncates to a lower (or equal) order.
    pub fn truncated(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::CannotExtend {
                order: self.order(),
                requested: order,
            });
        }
        Ok(TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    fn check_normalized(&self) -> Result<()> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotNormalized);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    /// Cauchy product, cut at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Multiplicative inverse of a series with constant term 1.
    pub fn inverse(&self) -> Result<Self> {
        self.check_normalized()?;
        let n = self.order();
        let mut inv: Vec<BigRational> = Vec::with_capacity(n + 1);
        inv.push(BigRational::one());
        for k in 1..=n {
            let mut acc = BigRational::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &inv[k - i];
                }
            }
            inv.push(-acc);
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    /// Formal logarithm of a series with constant term 1.
    ///
    /// Uses `k·L_k = k·a_k − Σ_{i<k} i·L_i·a_{k−i}`, the coefficient form of
    /// `L' = a'/a`.
    pub fn log(&self) -> Result<Self> {
        self.check_normalized()?;
        let n = self.order();
        let mut out = vec![BigRational::zero(); n + 1];
        for k in 1..=n {
            let mut acc = &self.coeffs[k] * BigInt::from(k);
            for (i, l) in out.iter().enumerate().take(k).skip(1) {
                if l.is_zero() || self.coeffs[k - i].is_zero() {
                    continue;
                }
                acc -= l * &self.coeffs[k - i] * BigInt::from(i);
            }
            out[k] = acc / BigInt::from(k);
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => f.write_str("y")?,
                (1, false) => write!(f, "{abs}*y")?,
                (_, true) => write!(f, "y^{k}")?,
                (_, false) => write!(f, "{abs}*y^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(y^{})", self.order() + 1)
    }
}

/// Hilbert series `∏_{k≥1} (1 − y^k)^{−ℓ_k}` of the enveloping algebra of a
/// graded Lie algebra with `dim L_k = ℓ_k`, truncated at `order`.
///
/// `dims[0]` is `ℓ_1`. Degrees past `dims.len()` count as zero; degrees past
/// `order` cannot contribute and are skipped.
pub fn pbw_series<I, T>(dims: I, order: usize) -> Result<TruncatedSeries>
where
    I: IntoIterator<Item = T>,
    T: Into<BigInt>,
{
    let mut coeffs = vec![BigInt::zero(); order + 1];
    coeffs[0] = BigInt::one();
    for (idx, dim) in dims.into_iter().enumerate() {
        let k = idx + 1;
        let dim: BigInt = dim.into();
        if dim.is_negative() {
            return Err(Error::NegativeDimension { degree: k });
        }
        if k > order || dim.is_zero() {
            continue;
        }
        // (1 − y^k)^{−ℓ} = Σ_j C(ℓ + j − 1, j) y^{kj}
        let steps = order / k;
        let mut factor = Vec::with_capacity(steps + 1);
        let mut binom = BigInt::one();
        factor.push(binom.clone());
        for j in 1..=steps {
            binom = binom * (&dim + BigInt::from(j - 1)) / BigInt::from(j);
            factor.push(binom.clone());
        }
        let mut next = vec![BigInt::zero(); order + 1];
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in factor.iter().enumerate() {
                let deg = i + j * k;
                if deg > order {
                    break;
                }
                next[deg] += c * b;
            }
        }
        coeffs = next;
    }
    Ok(TruncatedSeries::from_integers(coeffs, order))
}
