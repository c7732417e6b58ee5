use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;

use super::cyclo::cyclotomic_factorize;
use super::roots::{eigenvalues_numeric, Eigenvalues};
use super::CharPolynomial;
use crate::{Error, Result};

pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-10;

/// Relative gap allowed between `max |λ|` and the largest positive real root.
const DOMINANT_MATCH_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exactness {
    /// Every eigenvalue is a root of unity (exact cyclotomic certificate), so the entropy is 1.
    ExactOne,
    Numeric,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Entropy {
    /// `max |λ_i|`.
    pub value: f64,
    pub exactness: Exactness,
    /// Backward error of the maximizing root (0 for [`Exactness::ExactOne`]).
    pub residual: f64,
    /// Largest positive real root, if any.
    pub largest_real_root: Option<f64>,
    /// Whether `max |λ|` is attained by a positive real eigenvalue within tolerance.
    pub dominant_is_real: bool,
}

pub fn entropy(chi: &CharPolynomial) -> Result<Entropy> {
    entropy_with_tol(chi, DEFAULT_ROOT_TOLERANCE)
}

pub fn entropy_with_tol(chi: &CharPolynomial, tol: f64) -> Result<Entropy> {
    if chi.degree() == 0 {
        return Err(Error::DegreeZero);
    }
    let eig = eigenvalues_numeric(chi, tol)?;
    let exact = cyclotomic_factorize(chi).is_complete();
    Ok(entropy_from(&eig, exact))
}

pub(crate) fn entropy_from(eig: &Eigenvalues, all_roots_of_unity: bool) -> Entropy {
    let dom = eig.dominant().expect("degree is positive");
    let numeric = eig.roots[dom].norm();
    let largest_real_root = eig
        .roots
        .iter()
        .filter(|r| r.im == 0.0 && r.re > 0.0)
        .map(|r| r.re)
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.max(x))));
    let (value, exactness, residual) = if all_roots_of_unity {
        (1.0, Exactness::ExactOne, 0.0)
    } else {
        (numeric, Exactness::Numeric, eig.residuals[dom])
    };
    let dominant_is_real = largest_real_root
        .is_some_and(|r| (r - numeric).abs() <= DOMINANT_MATCH_TOL * numeric.max(1.0));
    Entropy {
        value,
        exactness,
        residual,
        largest_real_root,
        dominant_is_real,
    }
}

/// Eigenvalues and the scalar invariants that go with them.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralReport {
    pub eigenvalues: Vec<Complex64>,
    pub residuals: Vec<f64>,
    /// `None` for `χ = 1`.
    pub entropy: Option<Entropy>,
    pub conductor: BigInt,
    pub euler_poincare: BigInt,
    /// Decided exactly by cyclotomic division.
    pub all_roots_of_unity: bool,
}

pub fn spectral_report(chi: &CharPolynomial, tol: f64) -> Result<SpectralReport> {
    let eig = eigenvalues_numeric(chi, tol)?;
    let all_roots_of_unity = cyclotomic_factorize(chi).is_complete();
    let entropy = (chi.degree() > 0).then(|| entropy_from(&eig, all_roots_of_unity));
    Ok(SpectralReport {
        eigenvalues: eig.roots,
        residuals: eig.residuals,
        entropy,
        conductor: chi.conductor(),
        euler_poincare: chi.euler_poincare(),
        all_roots_of_unity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entropy_examples() {
        let free = entropy(&CharPolynomial::from_i64s(&[1, -2]).unwrap()).unwrap();
        assert_eq!(free.value, 2.0);
        assert_eq!(free.exactness, Exactness::Numeric);
        assert!(free.dominant_is_real);

        let cyc = entropy(&CharPolynomial::from_i64s(&[1, -1, -1, 1]).unwrap()).unwrap();
        assert_eq!(cyc.value, 1.0);
        assert_eq!(cyc.exactness, Exactness::ExactOne);

        let spiga = entropy(&CharPolynomial::from_i64s(&[1, -11, 33, -33, 11]).unwrap()).unwrap();
        assert!((spiga.value - 6.85317).abs() < 1e-4);
        assert!(spiga.dominant_is_real);

        assert_eq!(entropy(&CharPolynomial::one()), Err(Error::DegreeZero));
    }

    #[test]
    fn negative_dominant_is_reported() {
        // eigenvalues −3 and 1
        let e = entropy(&CharPolynomial::from_eigenvalues([-3, 1])).unwrap();
        assert!((e.value - 3.0).abs() < 1e-12);
        assert!(!e.dominant_is_real);
    }

    #[test]
    fn report_fields() {
        let chi = CharPolynomial::from_i64s(&[1, -11, 33, -33, 11]).unwrap();
        let r = spectral_report(&chi, 1e-10).unwrap();
        assert_eq!(r.eigenvalues.len(), 4);
        assert_eq!(r.conductor, BigInt::from(11));
        assert_eq!(r.euler_poincare, BigInt::from(1));
        assert!(!r.all_roots_of_unity);
        let product = r.eigenvalues.iter().product::<Complex64>();
        assert!((product - Complex64::new(11.0, 0.0)).norm() < 1e-8);

        let trivial = spectral_report(&CharPolynomial::one(), 1e-10).unwrap();
        assert!(trivial.entropy.is_none());
        assert!(trivial.all_roots_of_unity);
    }
}
