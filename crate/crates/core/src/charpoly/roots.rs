//! Numeric eigenvalues: the roots of the reciprocal polynomial `y^n·χ(1/y)`,
//! found by Aberth–Ehrlich simultaneous iteration in double precision.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::CharPolynomial;
use crate::{Error, Result};

const MAX_ITERATIONS: usize = 2_000;
const POLISH_STEPS: usize = 4;

/// Roots with their backward-error residuals, in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenvalues {
    pub roots: Vec<Complex64>,
    /// `|f(z)| / Σ |c_j|·|z|^j` for each root.
    pub residuals: Vec<f64>,
}

impl Eigenvalues {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// Index of a root of largest modulus.
    pub fn dominant(&self) -> Option<usize> {
        (0..self.roots.len()).max_by(|&a, &b| {
            self.roots[a]
                .norm()
                .partial_cmp(&self.roots[b].norm())
                .unwrap_or(Ordering::Equal)
        })
    }
}

/// Monic coefficients of `y^n·χ(1/y)`, lowest degree first.
fn reciprocal_coeffs(chi: &CharPolynomial) -> Vec<Complex64> {
    chi.coefficients()
        .iter()
        .rev()
        .map(|c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
        .collect()
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut value = Complex64::zero();
    let mut deriv = Complex64::zero();
    for c in coeffs.iter().rev() {
        deriv = deriv * z + value;
        value = value * z + c;
    }
    (value, deriv)
}

fn backward_error(coeffs: &[Complex64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale = coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * r + c.norm());
    let (value, _) = horner(coeffs, z);
    if scale == 0.0 {
        0.0
    } else {
        value.norm() / scale
    }
}

/// Starting points on a circle whose radius is the Fujiwara bound, rotated off
/// the real axis.
fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let bound = (1..=n)
        .map(|k| {
            let c = coeffs[n - k].norm();
            let c = if k == n { c / 2.0 } else { c };
            c.powf(1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0;
    let radius = if bound > 0.0 { bound } else { 1.0 };
    (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * PI * k as f64 / n as f64 + 0.4))
        .collect()
}

fn aberth(coeffs: &[Complex64]) -> (Vec<Complex64>, bool) {
    let mut z = initial_guesses(coeffs);
    let n = z.len();
    for _ in 0..MAX_ITERATIONS {
        let mut settled = true;
        for i in 0..n {
            let (value, deriv) = horner(coeffs, z[i]);
            if value.is_zero() {
                continue;
            }
            let ratio = value / deriv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                continue;
            }
            z[i] -= step;
            if step.norm() > 4.0 * f64::EPSILON * z[i].norm().max(1.0) {
                settled = false;
            }
        }
        if settled || z.iter().all(|&r| backward_error(coeffs, r) <= 4.0 * f64::EPSILON) {
            return (z, true);
        }
    }
    (z, false)
}

/// Newton steps, kept only while they lower the backward error.
fn polish(coeffs: &[Complex64], root: Complex64) -> Complex64 {
    let mut best = root;
    let mut best_err = backward_error(coeffs, root);
    for _ in 0..POLISH_STEPS {
        let (value, deriv) = horner(coeffs, best);
        if deriv.is_zero() {
            break;
        }
        let candidate = best - value / deriv;
        let err = backward_error(coeffs, candidate);
        if err.partial_cmp(&best_err) != Some(Ordering::Less) {
            break;
        }
        best = candidate;
        best_err = err;
    }
    best
}

/// Pairs non-real roots with their nearest conjugate and snaps the rest onto
/// the real axis.
fn enforce_conjugates(roots: &mut [Complex64], real_tol: f64) {
    let n = roots.len();
    let mut paired = vec![false; n];
    for i in 0..n {
        if paired[i] || roots[i].im.abs() <= real_tol * roots[i].norm().max(1.0) {
            continue;
        }
        let target = roots[i].conj();
        let partner = (0..n)
            .filter(|&j| j != i && !paired[j] && roots[j].im * roots[i].im < 0.0)
            .min_by(|&a, &b| {
                (roots[a] - target)
                    .norm()
                    .partial_cmp(&(roots[b] - target).norm())
                    .unwrap_or(Ordering::Equal)
            });
        if let Some(j) = partner {
            let mean = (roots[i] + roots[j].conj()) * 0.5;
            roots[i] = mean;
            roots[j] = mean.conj();
            paired[i] = true;
            paired[j] = true;
        }
    }
    for (i, r) in roots.iter_mut().enumerate() {
        if !paired[i] {
            r.im = 0.0;
        }
    }
}

fn canonical_order(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

/// The eigenvalues `λ_i` of `χ`, each with backward error at most `tol`.
///
/// Roots are sorted by real part, then imaginary part, so conjugate pairs
/// sit next to each other. On non-convergence the partial roots and their
/// residuals travel inside [`Error::NoConvergence`].
pub fn eigenvalues_numeric(chi: &CharPolynomial, tol: f64) -> Result<Eigenvalues> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidTolerance);
    }
    let coeffs = reciprocal_coeffs(chi);
    let n = chi.degree();
    if n == 0 {
        return Ok(Eigenvalues {
            roots: Vec::new(),
            residuals: Vec::new(),
        });
    }
    let mut roots = if n == 1 {
        vec![-coeffs[0]]
    } else {
        aberth(&coeffs).0
    };
    for r in roots.iter_mut() {
        *r = polish(&coeffs, *r);
    }
    enforce_conjugates(&mut roots, 1e-7);
    roots.sort_by(canonical_order);
    let residuals: Vec<f64> = roots.iter().map(|&r| backward_error(&coeffs, r)).collect();
    if residuals.iter().all(|&e| e <= tol) {
        Ok(Eigenvalues { roots, residuals })
    } else {
        Err(Error::NoConvergence { roots, residuals })
    }
}
