//! Symmetry and ordering relations among the multiplicities.
//!
//! For `d` odd, `m(lambda_i) = m(lambda_{d-i})` and `m(mu_i) = m(mu_{d-i})`;
//! moreover `m(mu_2) < m(mu_i)` for `3 <= i <= d-3` and
//! `m(lambda_1) < m(lambda_i)` for `2 <= i <= d-2`.

use alloc::vec::Vec;

use super::multiplicity::closed_form_in;
use super::roots::isolate_in;
use super::{validate, Epsilon, FeasibilityError, Setting};

/// Relative tolerance for the symmetry relations.
pub const SYMMETRY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct OrderReport {
    /// `m(mu_i)`, `i = 1..d-1`.
    pub mu: Vec<f64>,
    /// `m(lambda_i)`, `i = 1..d-1`.
    pub lambda: Vec<f64>,
    /// Largest relative gap `|m(mu_i) - m(mu_{d-i})| / max`.
    pub mu_symmetry_error: f64,
    pub lambda_symmetry_error: f64,
    /// `min_{3 <= i <= d-3} m(mu_i) - m(mu_2)`; `None` when the range is
    /// empty.
    pub mu_minimality_margin: Option<f64>,
    /// `min_{2 <= i <= d-2} m(lambda_i) - m(lambda_1)`; `None` when the
    /// range is empty.
    pub lambda_minimality_margin: Option<f64>,
}

impl OrderReport {
    pub fn symmetric(&self) -> bool {
        self.mu_symmetry_error <= SYMMETRY_TOLERANCE && self.lambda_symmetry_error <= SYMMETRY_TOLERANCE
    }

    pub fn mu_minimality_vacuous(&self) -> bool {
        self.mu_minimality_margin.is_none()
    }

    pub fn lambda_minimality_vacuous(&self) -> bool {
        self.lambda_minimality_margin.is_none()
    }

    /// Symmetry holds and every non-vacuous strict inequality has a
    /// positive margin.
    pub fn passes(&self) -> bool {
        self.symmetric()
            && self.mu_minimality_margin.is_none_or(|m| m > 0.0)
            && self.lambda_minimality_margin.is_none_or(|m| m > 0.0)
    }
}

pub fn multiplicity_order_checks(k: u32, d: u32, e: u32) -> Result<OrderReport, FeasibilityError> {
    validate(k, d, e)?;
    let setting = Setting::new(k, d, e);
    let values = |eps| -> Result<Vec<f64>, FeasibilityError> {
        isolate_in(&setting, eps)?
            .iter()
            .map(|r| closed_form_in(&setting, eps, r.theta))
            .collect()
    };
    Ok(order_report(values(Epsilon::One)?, values(Epsilon::MinusHalfExcess)?))
}

pub(crate) fn order_report(mu: Vec<f64>, lambda: Vec<f64>) -> OrderReport {
    OrderReport {
        mu_symmetry_error: symmetry_error(&mu),
        lambda_symmetry_error: symmetry_error(&lambda),
        mu_minimality_margin: minimality_margin(&mu, 2, 3),
        lambda_minimality_margin: minimality_margin(&lambda, 1, 2),
        mu,
        lambda,
    }
}

fn symmetry_error(m: &[f64]) -> f64 {
    let last = m.len();
    (0..last)
        .map(|i| {
            let (a, b) = (m[i], m[last - 1 - i]);
            (a - b).abs() / a.abs().max(b.abs())
        })
        .fold(0.0, f64::max)
}

/// `min_{from <= i <= d - from} m_i - m_pivot` with 1-based indices, where
/// `d - 1 = m.len()`.
fn minimality_margin(m: &[f64], pivot: usize, from: usize) -> Option<f64> {
    let d = m.len() + 1;
    let last = d.checked_sub(from)?;
    if from > last {
        return None;
    }
    let base = m[pivot - 1];
    Some((from..=last).map(|i| m[i - 1] - base).fold(f64::INFINITY, f64::min))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case_is_vacuous() {
        let r = multiplicity_order_checks(4, 3, 2).unwrap();
        assert!((r.mu[0] - 7.0).abs() < 1e-9 && (r.mu[1] - 7.0).abs() < 1e-9);
        assert!((r.lambda[0] - 6.0).abs() < 1e-9 && (r.lambda[1] - 6.0).abs() < 1e-9);
        assert!(r.symmetric());
        assert!(r.mu_minimality_vacuous());
        assert!(r.lambda_minimality_vacuous());
    }

    #[test]
    fn diameter_five_checks_lambda_only() {
        let r = multiplicity_order_checks(5, 5, 2).unwrap();
        assert!(r.mu_minimality_vacuous());
        assert!(r.lambda_minimality_margin.unwrap() > 0.0);
        assert!(r.passes());
    }

    #[test]
    fn diameter_seven_checks_everything() {
        let r = multiplicity_order_checks(7, 7, 2).unwrap();
        assert!(r.mu_minimality_margin.unwrap() > 0.0);
        assert!(r.lambda_minimality_margin.unwrap() > 0.0);
        assert!(r.passes());
    }
}
