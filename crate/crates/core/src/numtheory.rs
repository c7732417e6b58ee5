//! Elementary arithmetic functions, integer polynomials, cyclotomic
//! polynomials, and necklace sums at roots of unity.
//!
//! Factorization is plain trial division; arguments are expected to be
//! desk-sized (up to about 10⁶).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Mul, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::{Error, Result};

/// Prime factorization `n = ∏ p^e` as `(p, e)` pairs in increasing `p`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub(crate) fn mu(n: u64) -> i64 {
    let mut sign = 1;
    for (_, e) in factorize(n) {
        if e > 1 {
            return 0;
        }
        sign = -sign;
    }
    sign
}

pub(crate) fn phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// The Möbius function μ(n).
pub fn moebius(n: u64) -> Result<i64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(mu(n))
}

/// Euler's totient φ(n).
pub fn euler_phi(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    Ok(phi(n))
}

/// Polynomial with arbitrary-precision integer coefficients, lowest degree first.
///
/// Always trimmed: the leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `y^n − 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[n] += BigInt::one();
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `y^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn into_coefficients(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient reversal `y^d·p(1/y)` with `d` the degree.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Euclidean division by a divisor whose leading coefficient divides
    /// every intermediate leading term. Returns `None` when that fails or
    /// the divisor is zero.
    pub fn div_rem(&self, divisor: &Self) -> Option<(Self, Self)> {
        let d_deg = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d_deg {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + d_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Some((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient, or `None` if `divisor` does not divide `self` in ℤ[y].
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        match self.div_rem(divisor)? {
            (q, r) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntPolynomial {
    /// Coefficients separated by spaces, degree 0 first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The `n`-th cyclotomic polynomial Φ_n, monic, of degree φ(n).
///
/// Built bottom-up over the divisors of `n`:
/// Φ_d = (y^d − 1) / ∏_{e | d, e < d} Φ_e, every division exact.
pub fn cyclotomic(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::ZeroArgument);
    }
    let divs = divisors(n);
    let mut table: BTreeMap<u64, IntPolynomial> = BTreeMap::new();
    for &d in &divs {
        let mut poly = IntPolynomial::x_pow_minus_one(d as usize);
        for (_, phi_e) in table.iter().filter(|(&e, _)| d % e == 0) {
            poly = poly
                .div_exact(phi_e)
                .expect("cyclotomic factors divide y^d - 1");
        }
        table.insert(d, poly);
    }
    Ok(table.remove(&n).expect("n divides itself"))
}

/// Necklace polynomial `M_k(x) = (1/k)·Σ_{j | k} μ(k/j)·x^j` evaluated exactly.
///
/// For integer `x ≥ 0` this is the number of aperiodic necklaces of length
/// `k` in `x` colours, an integer.
pub fn necklace_eval(k: u64, x: &BigRational) -> BigRational {
    assert!(k >= 1, "necklace degree must be positive");
    let sum = divisors(k)
        .into_iter()
        .fold(BigRational::zero(), |acc, j| match mu(k / j) {
            0 => acc,
            s => acc + x.clone().pow(j as u32) * BigInt::from(s),
        });
    sum / BigInt::from(k)
}

/// `P_k(m)`: the sum of the `k`-th powers of the primitive `m`-th roots of
/// unity, computed as the convolution `Σ_{d | gcd(m,k)} d·μ(m/d)`.
pub fn ramanujan_p(k: u64, m: u64) -> i64 {
    assert!(k >= 1 && m >= 1, "arguments must be positive");
    divisors(m.gcd(&k))
        .into_iter()
        .map(|d| d as i64 * mu(m / d))
        .sum()
}

/// `C_k(m)`: the sum of `M_k(ξ)` over the primitive `m`-th roots of unity ξ,
/// computed as `(1/k)·Σ_{j | k} μ(k/j)·P_j(m)`.
///
/// Returned as an exact rational; integrality is reported, not assumed.
pub fn necklace_root_sum_c(k: u64, m: u64) -> BigRational {
    assert!(k >= 1 && m >= 1, "arguments must be positive");
    let total: i64 = divisors(k)
        .into_iter()
        .map(|j| mu(k / j) * ramanujan_p(j, m))
        .sum();
    BigRational::new(total.into(), BigInt::from(k))
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

pub(crate) fn is_nonneg_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_negative()
}
