use std::env;

use wittlab_core::charpoly::{DEFAULT_MAX_DEGREE, DEFAULT_ROOT_TOLERANCE};
use wittlab_core::graphs::DEFAULT_MAX_VERTICES;

use crate::CliError;

pub const MAX_VERTICES_ENV: &str = "WITTLAB_MAX_VERTICES";

/// Residual above which a numeric value is flagged in reports.
pub const REPORT_TOLERANCE: f64 = 1e-4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    /// Truncation order `N` for series.
    pub order: usize,
    /// Number of dimensions `K` to tabulate.
    pub dims: usize,
    pub tolerance: f64,
    pub format: OutputFormat,
    pub max_vertices: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: DEFAULT_MAX_DEGREE,
            dims: DEFAULT_MAX_DEGREE,
            tolerance: DEFAULT_ROOT_TOLERANCE,
            format: OutputFormat::Table,
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

impl RunConfig {
    /// Fills unset values with defaults: an unset order is `max(64, K)`, an
    /// unset K is `min(64, N)`.
    pub fn build(
        dims: Option<usize>,
        order: Option<usize>,
        tolerance: Option<f64>,
        format: OutputFormat,
        max_vertices: Option<usize>,
    ) -> Result<Self, CliError> {
        let base = RunConfig::default();
        let dims = dims.unwrap_or(order.map_or(base.dims, |n| base.dims.min(n)));
        let order = order.unwrap_or(base.order.max(dims));
        let tolerance = tolerance.unwrap_or(base.tolerance);
        if dims == 0 {
            return Err(CliError::input("--dims must be at least 1"));
        }
        if order < dims {
            return Err(CliError::input(format!("--order {order} is below --dims {dims}")));
        }
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(CliError::input("--tol must be a positive number"));
        }
        Ok(RunConfig {
            order,
            dims,
            tolerance,
            format,
            max_vertices: max_vertices.unwrap_or(base.max_vertices),
        })
    }

    /// Vertex limit from `WITTLAB_MAX_VERTICES`, if set.
    pub fn max_vertices_from_env() -> Result<Option<usize>, CliError> {
        match env::var(MAX_VERTICES_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| CliError::input(format!("{MAX_VERTICES_ENV}={v:?} is not a vertex count"))),
            Err(env::VarError::NotPresent) => Ok(None),
            Err(e) => Err(CliError::input(format!("{MAX_VERTICES_ENV}: {e}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let c = RunConfig::build(None, None, None, OutputFormat::Table, None).unwrap();
        assert_eq!(c, RunConfig::default());
        let c = RunConfig::build(Some(100), None, None, OutputFormat::Json, None).unwrap();
        assert_eq!((c.dims, c.order), (100, 100));
        let c = RunConfig::build(Some(8), None, None, OutputFormat::Table, None).unwrap();
        assert_eq!((c.dims, c.order), (8, 64));
        let c = RunConfig::build(None, Some(6), None, OutputFormat::Table, None).unwrap();
        assert_eq!((c.dims, c.order), (6, 6));
    }

    #[test]
    fn rejects_bad_values() {
        let t = OutputFormat::Table;
        assert!(RunConfig::build(Some(0), None, None, t, None).is_err());
        assert!(RunConfig::build(Some(10), Some(5), None, t, None).is_err());
        assert!(RunConfig::build(None, Some(0), None, t, None).is_err());
        assert!(RunConfig::build(None, None, Some(0.0), t, None).is_err());
        assert!(RunConfig::build(None, None, Some(f64::NAN), t, None).is_err());
    }
}
