use alloc::vec::Vec;
use core::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Binary series operation on operands truncated at different orders.
    OrderMismatch { left: usize, right: usize },
    /// Re-truncation can only lower the order.
    CannotExtend { order: usize, requested: usize },
    /// Series or polynomial whose constant term is not 1.
    NotNormalized,
    /// A negative dimension was supplied where one was required to be ≥ 0.
    NegativeDimension { degree: usize },
    /// Arithmetic function evaluated at 0.
    ZeroArgument,
    /// Characteristic polynomial of degree 0 where a root is required.
    DegreeZero,
    /// Truncation order too small for the requested computation.
    OrderTooSmall { order: usize, required: usize },
    InvalidTolerance,
    /// Root iteration hit its cap; roots and backward-error residuals so far.
    NoConvergence {
        roots: Vec<Complex64>,
        residuals: Vec<f64>,
    },
    SelfLoop { vertex: usize },
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    TooManyVertices { vertex_count: usize, limit: usize },
    /// Connection set of a Cayley graph that is not closed under negation or contains 0.
    InvalidConnectionSet { residue: u64 },
    ZeroModulus,
    /// A rank that must be a non-negative integer was not.
    InvalidRank { degree: usize },
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ ({left} vs {right})")
            }
            Error::CannotExtend { order, requested } => write!(
                f,
                "cannot re-truncate a series of order {order} to the larger order {requested}"
            ),
            Error::NotNormalized => f.write_str("constant term must be 1"),
            Error::NegativeDimension { degree } => {
                write!(f, "negative dimension in degree {degree}")
            }
            Error::ZeroArgument => f.write_str("argument must be a positive integer"),
            Error::DegreeZero => f.write_str("polynomial has degree 0"),
            Error::OrderTooSmall { order, required } => {
                write!(f, "truncation order {order} is below the required {required}")
            }
            Error::InvalidTolerance => f.write_str("tolerance must be positive and finite"),
            Error::NoConvergence { roots, .. } => write!(
                f,
                "root iteration did not converge ({} partial roots)",
                roots.len()
            ),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::VertexOutOfRange {
                vertex,
                vertex_count,
            } => write!(f, "vertex {vertex} out of range for {vertex_count} vertices"),
            Error::TooManyVertices {
                vertex_count,
                limit,
            } => write!(f, "graph has {vertex_count} vertices, limit is {limit}"),
            Error::InvalidConnectionSet { residue } => write!(
                f,
                "connection set must be symmetric and exclude 0 (offending residue {residue})"
            ),
            Error::ZeroModulus => f.write_str("modulus must be positive"),
            Error::InvalidRank { degree } => {
                write!(f, "rank in degree {degree} is not a non-negative integer")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
        }
    }
}

impl core::error::Error for Error {}
