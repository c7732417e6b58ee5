use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use super::CharPolynomial;
use crate::numtheory::{cyclotomic, mu, phi, IntPolynomial};

/// `Φ*_m(y) = ±y^{φ(m)}·Φ_m(1/y)`, signed so the constant term is 1.
///
/// Equal to `Φ_m` for `m ≥ 2`; `Φ*_1 = 1 − y`.
pub fn reversed_cyclotomic(m: u64) -> IntPolynomial {
    let rev = cyclotomic(m).expect("order is positive").reversed();
    if rev.coeff(0).is_one() {
        rev
    } else {
        -rev
    }
}

/// `χ = remainder · ∏_m Φ*_m^{multiplicities[m]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloFactorization {
    pub multiplicities: BTreeMap<u64, u32>,
    pub remainder: CharPolynomial,
}

impl CycloFactorization {
    /// All eigenvalues are roots of unity.
    pub fn is_complete(&self) -> bool {
        self.remainder.degree() == 0
    }

    pub fn reassemble(&self) -> CharPolynomial {
        let poly = self
            .multiplicities
            .iter()
            .fold(self.remainder.as_poly().clone(), |acc, (&m, &e)| {
                &acc * &reversed_cyclotomic(m).pow(e)
            });
        CharPolynomial::from_poly(poly).expect("factors have constant term 1")
    }

    /// Distinct orders of the root-of-unity eigenvalues.
    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.multiplicities.keys().copied()
    }
}

/// Divides out every `Φ*_m` with `φ(m) ≤ deg χ`, each as often as it divides.
///
/// Candidates run over `m ≤ 2n² + 1`, which contains every `m` with `φ(m) ≤ n`.
pub fn cyclotomic_factorize(chi: &CharPolynomial) -> CycloFactorization {
    let n = chi.degree() as u64;
    let mut rest = chi.as_poly().clone();
    let mut multiplicities = BTreeMap::new();
    if n > 0 {
        for m in 1..=2 * n * n + 1 {
            let current = rest.degree().unwrap_or(0) as u64;
            if current == 0 {
                break;
            }
            if phi(m) > current {
                continue;
            }
            let factor = reversed_cyclotomic(m);
            let mut count = 0;
            while let Some(q) = rest.div_exact(&factor) {
                rest = q;
                count += 1;
            }
            if count > 0 {
                multiplicities.insert(m, count);
            }
        }
    }
    CycloFactorization {
        multiplicities,
        remainder: CharPolynomial::from_poly(rest).expect("constant term stays 1"),
    }
}

/// Dimensions recovered from cyclotomic multiplicities by Möbius inversion
/// over divisibility: `dim L_k = Σ_{j ≥ 1} μ(j)·m_{kj}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvertedDims {
    /// Nonzero dimensions by degree.
    pub dims: BTreeMap<u64, BigInt>,
    /// Degrees that came out negative; empty for consistent input.
    pub negative: Vec<u64>,
}

impl InvertedDims {
    pub fn is_consistent(&self) -> bool {
        self.negative.is_empty()
    }

    pub fn total(&self) -> BigInt {
        self.dims.values().sum()
    }

    /// `Σ k·dim L_k`.
    pub fn weighted_degree(&self) -> BigInt {
        self.dims.iter().map(|(&k, d)| d * BigInt::from(k)).sum()
    }
}

pub fn dims_from_multiplicities(multiplicities: &BTreeMap<u64, u32>) -> InvertedDims {
    let top = multiplicities.keys().next_back().copied().unwrap_or(0);
    let mut dims = BTreeMap::new();
    let mut negative = Vec::new();
    for k in 1..=top {
        let d: i64 = (1..=top / k)
            .filter_map(|j| {
                let m = multiplicities.get(&(k * j))?;
                Some(mu(j) * i64::from(*m))
            })
            .sum();
        if d < 0 {
            negative.push(k);
        }
        if d != 0 {
            dims.insert(k, BigInt::from(d));
        }
    }
    InvertedDims { dims, negative }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mults(pairs: &[(u64, u32)]) -> BTreeMap<u64, u32> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn normalization() {
        assert_eq!(reversed_cyclotomic(1), IntPolynomial::from_i64s(&[1, -1]));
        assert_eq!(reversed_cyclotomic(2), IntPolynomial::from_i64s(&[1, 1]));
        for m in 2..=60 {
            assert_eq!(reversed_cyclotomic(m), cyclotomic(m).unwrap());
        }
    }

    #[test]
    fn factorization_examples() {
        let cube = CharPolynomial::from_i64s(&[1, -3, 3, -1]).unwrap();
        let f = cyclotomic_factorize(&cube);
        assert_eq!(f.multiplicities, mults(&[(1, 3)]));
        assert!(f.is_complete());

        let free = CharPolynomial::from_i64s(&[1, -2]).unwrap();
        let f = cyclotomic_factorize(&free);
        assert!(f.multiplicities.is_empty());
        assert_eq!(f.remainder, free);

        let mixed = CharPolynomial::from_i64s(&[1, -1, -1, 1]).unwrap();
        let f = cyclotomic_factorize(&mixed);
        assert_eq!(f.multiplicities, mults(&[(1, 2), (2, 1)]));
        assert!(f.is_complete());
        assert_eq!(f.reassemble(), mixed);
    }

    #[test]
    fn partial_factorization_reassembles() {
        // (1 − y)(1 + y + y²)(1 − 3y + y²)
        let poly = &(&reversed_cyclotomic(1) * &reversed_cyclotomic(3))
            * &IntPolynomial::from_i64s(&[1, -3, 1]);
        let chi = CharPolynomial::from_poly(poly).unwrap();
        let f = cyclotomic_factorize(&chi);
        assert_eq!(f.multiplicities, mults(&[(1, 1), (3, 1)]));
        assert_eq!(f.remainder, CharPolynomial::from_i64s(&[1, -3, 1]).unwrap());
        assert_eq!(f.reassemble(), chi);
    }

    #[test]
    fn trivial_polynomial_has_empty_factorization() {
        let f = cyclotomic_factorize(&CharPolynomial::one());
        assert!(f.is_complete() && f.multiplicities.is_empty());
    }

    #[test]
    fn inversion_examples() {
        let heis = dims_from_multiplicities(&mults(&[(1, 3), (2, 1)]));
        assert_eq!(heis.dims, [(1, 2.into()), (2, 1.into())].into_iter().collect());
        assert!(heis.is_consistent());
        assert_eq!(heis.weighted_degree(), BigInt::from(4));
        // Φ*_1³·Φ*_2 has degree 4
        let chi = &reversed_cyclotomic(1).pow(3) * &reversed_cyclotomic(2);
        assert_eq!(chi.degree(), Some(4));

        for v in 1..6 {
            let ab = dims_from_multiplicities(&mults(&[(1, v)]));
            assert_eq!(ab.dims, [(1, BigInt::from(v))].into_iter().collect());
        }

        let small = dims_from_multiplicities(&mults(&[(1, 2), (2, 1)]));
        assert_eq!(small.dims, [(1, 1.into()), (2, 1.into())].into_iter().collect());
        assert_eq!(small.weighted_degree(), BigInt::from(3));
    }

    #[test]
    fn negative_inversion_flagged() {
        let bad = dims_from_multiplicities(&mults(&[(2, 1)]));
        assert_eq!(bad.negative, vec![1]);
        assert!(!bad.is_consistent());
        assert!(dims_from_multiplicities(&BTreeMap::new()).dims.is_empty());
    }
}
