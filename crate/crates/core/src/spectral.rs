//! Distance spectral radius, distance Perron vector and related quantities.

use crate::error::{Error, Result};
use crate::hypergraph::DistanceMatrix;

/// Default convergence tolerance for the power iteration.
pub const DEFAULT_TOL: f64 = 1e-10;

const ITERATION_CAP: usize = 1_000_000;

/// Dominant eigenpair of a distance matrix.
///
/// `perron` is strictly positive with unit Euclidean norm, `residual` is the
/// max-norm of `D x - rho x` (floored at machine precision so downstream
/// guard bands never collapse to zero).
#[derive(Debug, Clone)]
pub struct SpectralResult {
    pub rho: f64,
    pub perron: Vec<f64>,
    pub residual: f64,
}

impl SpectralResult {
    /// Guard band for strict-inequality certification on this eigenpair.
    pub fn guard_band(&self) -> f64 {
        10.0 * self.residual
    }

    /// Absolute tolerance for identity checks on this eigenpair.
    pub fn identity_band(&self) -> f64 {
        100.0 * self.residual
    }
}

fn mul_shifted(d: &DistanceMatrix, x: &[f64]) -> Vec<f64> {
    // y = (D + I) x; the unit shift makes the iteration matrix primitive
    d.rows()
        .zip(x)
        .map(|(row, &xi)| {
            let dx: f64 = row.iter().zip(x).map(|(&dij, &xj)| f64::from(dij) * xj).sum();
            dx + xi
        })
        .collect()
}

/// Largest eigenvalue of `D` with its positive unit eigenvector, by power
/// iteration on `D + I` from the normalized all-ones vector.
pub fn spectral_radius(d: &DistanceMatrix, tol: f64) -> Result<SpectralResult> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::InvalidTolerance);
    }
    let n = d.dim();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut prev: Option<f64> = None;
    for _ in 0..ITERATION_CAP {
        let y = mul_shifted(d, &x);
        let lambda: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        let rho = lambda - 1.0;
        let scale = rho.abs().max(1.0);
        let residual = x
            .iter()
            .zip(&y)
            .map(|(&xi, &yi)| (yi - lambda * xi).abs())
            .fold(0.0f64, f64::max);
        if let Some(p) = prev {
            if (lambda - p).abs() < tol * scale && residual <= tol * scale {
                let result = SpectralResult {
                    rho,
                    perron: x,
                    residual: residual.max(f64::EPSILON * scale),
                };
                validate(d, &result)?;
                return Ok(result);
            }
        }
        prev = Some(lambda);
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(Error::NonConvergence {
                iterations: ITERATION_CAP,
            });
        }
        x = y.into_iter().map(|v| v / norm).collect();
    }
    Err(Error::NonConvergence {
        iterations: ITERATION_CAP,
    })
}

fn validate(d: &DistanceMatrix, r: &SpectralResult) -> Result<()> {
    let slack = 10.0 * r.residual.max(f64::EPSILON);
    let positive = r.perron.iter().all(|&v| v > 0.0);
    let norm: f64 = r.perron.iter().map(|v| v * v).sum::<f64>().sqrt();
    let min_row = (0..d.dim()).map(|u| d.row_sum(u)).min().unwrap_or(0) as f64;
    let max_row = (0..d.dim()).map(|u| d.row_sum(u)).max().unwrap_or(0) as f64;
    if positive
        && (norm - 1.0).abs() <= 1e-12
        && r.rho >= min_row - slack
        && r.rho <= max_row + slack
    {
        Ok(())
    } else {
        Err(Error::NonConvergence {
            iterations: ITERATION_CAP,
        })
    }
}

/// Rayleigh quotient `x^T D x` for a unit nonnegative vector.
pub fn rayleigh(d: &DistanceMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != d.dim() {
        return Err(Error::DimensionMismatch {
            expected: d.dim(),
            got: x.len(),
        });
    }
    if x.iter().any(|&v| v < 0.0) {
        return Err(Error::NegativeVectorEntry);
    }
    let norm: f64 = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::NonUnitVector);
    }
    Ok(d.rows()
        .zip(x)
        .map(|(row, &xu)| {
            let inner: f64 = row.iter().zip(x).map(|(&dij, &xv)| f64::from(dij) * xv).sum();
            xu * inner
        })
        .sum())
}

/// Defect of the distance eigenequation at `u`: `|sum_v d(u,v) x_v - rho x_u|`.
pub fn eigenequation_residual(d: &DistanceMatrix, rho: f64, x: &[f64], u: usize) -> f64 {
    let row_dot: f64 = (0..d.dim()).map(|v| f64::from(d.get(u, v)) * x[v]).sum();
    (row_dot - rho * x[u]).abs()
}

/// Sum of vector entries over a vertex set.
pub fn sigma(x: &[f64], set: &[usize]) -> Result<f64> {
    let mut total = 0.0;
    for &v in set {
        if v >= x.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: x.len(),
            });
        }
        total += x[v];
    }
    Ok(total)
}

/// Status (transmission) of `u`: the row sum of the distance matrix.
pub fn status(d: &DistanceMatrix, u: usize) -> u64 {
    d.row_sum(u)
}

/// Minimum status over all vertices.
pub fn min_status(d: &DistanceMatrix) -> u64 {
    (0..d.dim()).map(|u| d.row_sum(u)).min().unwrap_or(0)
}
