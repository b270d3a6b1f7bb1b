use alloc::vec;
use alloc::vec::Vec;

use nalgebra::{DMatrix, SymmetricEigen};

use super::{structural_check, Graph, GraphError};
use crate::polynomials::h_value;

/// Tolerance on `|H_{d-1}(theta) - target|` for computed eigenvalues.
pub const SPECTRAL_TOLERANCE: f64 = 1e-8;

/// Eigenvalues within this distance of `+-k` are treated as trivial.
const TRIVIAL_EIGENVALUE_GAP: f64 = 1e-6;

/// Eigenvalues of a dense symmetric `n x n` matrix given row-major,
/// ascending.
pub fn symmetric_eigenvalues(n: usize, entries: &[f64]) -> Vec<f64> {
    assert_eq!(entries.len(), n * n, "expected an n x n matrix");
    let m = DMatrix::from_row_slice(n, n, entries);
    let mut values: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn adjacency_eigenvalues(g: &Graph) -> Vec<f64> {
    let n = g.order();
    let mut entries = vec![0.0; n * n];
    for (u, v) in g.edges() {
        entries[u * n + v] = 1.0;
        entries[v * n + u] = 1.0;
    }
    symmetric_eigenvalues(n, &entries)
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueCheck {
    pub theta: f64,
    pub h_value: f64,
    /// Nearest admissible value of `H_{d-1}(theta)`.
    pub target: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralReport {
    pub eigenvalues: Vec<f64>,
    /// Admissible values of `H_{d-1}(theta)`: the negated eigenvalues of the
    /// clique union `A_{d+1}`.
    pub targets: Vec<f64>,
    /// One entry per eigenvalue other than `+-k`.
    pub checks: Vec<EigenvalueCheck>,
    pub trivial_count: usize,
    pub max_deviation: f64,
}

impl SpectralReport {
    pub fn passes(&self) -> bool {
        self.max_deviation <= SPECTRAL_TOLERANCE
    }
}

/// Evaluates `H_{d-1}` at every eigenvalue other than `+-k` and measures
/// the distance to the nearest admissible value: `0` when `e = 0`, and
/// `{-e/2, 1}` otherwise.
pub fn crosscheck_eigenvalues(eigenvalues: &[f64], k: u32, d: u32, e: u32) -> SpectralReport {
    let kf = f64::from(k);
    let targets = if e == 0 { vec![0.0] } else { vec![-f64::from(e) / 2.0, 1.0] };
    let mut checks = Vec::new();
    let mut trivial_count = 0;
    for &theta in eigenvalues {
        if (theta.abs() - kf).abs() < TRIVIAL_EIGENVALUE_GAP {
            trivial_count += 1;
            continue;
        }
        let value = h_value(k, d as usize - 1, theta);
        let (target, deviation) = targets
            .iter()
            .map(|&t| (t, (value - t).abs()))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap_or((0.0, f64::INFINITY));
        checks.push(EigenvalueCheck { theta, h_value: value, target, deviation });
    }
    let max_deviation = checks.iter().map(|c| c.deviation).fold(0.0, f64::max);
    SpectralReport { eigenvalues: eigenvalues.to_vec(), targets, checks, trivial_count, max_deviation }
}

/// Eigenvalue cross-check gated on [`structural_check`].
pub fn spectral_crosscheck(g: &Graph, k: u32, d: u32, e: u32) -> Result<SpectralReport, GraphError> {
    let verdict = structural_check(g, k, d, e);
    if !verdict.passes() {
        return Err(GraphError::Structural(verdict.failures));
    }
    Ok(crosscheck_eigenvalues(&adjacency_eigenvalues(g), k, d, e))
}
