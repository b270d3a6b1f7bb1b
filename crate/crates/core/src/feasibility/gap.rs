//! Eigenvalue-gap exclusion for `d >= 7`.
//!
//! `mu_2` and `lambda_2` sit on either side of `-2s cos(2 pi / d)` and are
//! so close that `lambda_2^2 - mu_2^2` lies strictly between 0 and 1. In an
//! antipodal cage both squares would be integers, a contradiction.

use core::f64::consts::PI;
#[allow(unused_imports)]
use num_traits::Float;

use super::roots::isolate_in;
use super::{validate, Epsilon, FeasibilityError, Setting};
use crate::interval::Interval;

/// Smallest `d` for which the gap argument applies.
pub const GAP_MIN_DIAMETER: u32 = 7;

/// `s^((d-3)/2) (d + (e/2) t) > (k-1) d >= (e+1) d > 4 pi sqrt(e/2 + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosingChain {
    pub leading: f64,
    pub degree_term: f64,
    pub excess_term: f64,
    pub trailing: f64,
}

impl ClosingChain {
    fn new(k: u32, d: u32, e: u32) -> Self {
        let s = (f64::from(k) - 1.0).sqrt();
        let t = s.powi(1 - d as i32);
        let (df, half_e) = (f64::from(d), f64::from(e) / 2.0);
        ClosingChain {
            leading: s.powf((df - 3.0) / 2.0) * (df + half_e * t),
            degree_term: (f64::from(k) - 1.0) * df,
            excess_term: (f64::from(e) + 1.0) * df,
            trailing: 4.0 * PI * (half_e + 1.0).sqrt(),
        }
    }

    pub fn holds(&self) -> bool {
        self.leading > self.degree_term && self.degree_term >= self.excess_term && self.excess_term > self.trailing
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    /// Certified enclosure of `lambda_2^2 - mu_2^2` from the exact root
    /// brackets.
    pub certified: Interval,
    /// `4 s^2 (cos^2(2 pi / (d + (e/2) t)) - cos^2(2 pi / (d - t)))`.
    pub angular_bound: f64,
    /// `16 pi^2 (e/2 + 1) s^(3-d) (2d + (e/2 - 1) t) / ((d - t)^2 (d + (e/2) t)^2)`.
    pub analytic_bound: f64,
    pub chain: ClosingChain,
}

impl GapReport {
    pub fn lower(&self) -> f64 {
        self.certified.lo_f64()
    }

    pub fn upper(&self) -> f64 {
        self.certified.hi_f64()
    }

    pub fn contains_integer(&self) -> bool {
        self.certified.contains_integer()
    }

    /// Exclusion rests on the certified interval alone.
    pub fn excluded(&self) -> bool {
        !self.contains_integer()
    }

    /// The certified interval lies in `(0, 1)` below both analytic bounds.
    pub fn bounds_consistent(&self) -> bool {
        self.lower() > 0.0 && self.upper() < 1.0 && self.upper() <= self.angular_bound && self.angular_bound <= self.analytic_bound
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GapVerdict {
    /// `d < 7`; no exclusion is claimed.
    OutsideRegime,
    Evaluated(GapReport),
}

impl GapVerdict {
    pub fn report(&self) -> Option<&GapReport> {
        match self {
            GapVerdict::OutsideRegime => None,
            GapVerdict::Evaluated(r) => Some(r),
        }
    }

    pub fn excluded(&self) -> bool {
        self.report().is_some_and(GapReport::excluded)
    }
}

pub fn gap_check(k: u32, d: u32, e: u32) -> Result<GapVerdict, FeasibilityError> {
    validate(k, d, e)?;
    if d < GAP_MIN_DIAMETER {
        return Ok(GapVerdict::OutsideRegime);
    }
    let setting = Setting::new(k, d, e);
    let mu = isolate_in(&setting, Epsilon::One)?;
    let lambda = isolate_in(&setting, Epsilon::MinusHalfExcess)?;
    Ok(GapVerdict::Evaluated(gap_from_brackets(k, d, e, &lambda[1].bracket, &mu[1].bracket)))
}

pub(crate) fn gap_from_brackets(k: u32, d: u32, e: u32, lambda2: &Interval, mu2: &Interval) -> GapReport {
    let certified = &lambda2.square() - &mu2.square();
    let s2 = f64::from(k) - 1.0;
    let s = s2.sqrt();
    let t = s.powi(1 - d as i32);
    let (df, half_e) = (f64::from(d), f64::from(e) / 2.0);
    let outer = (2.0 * PI / (df + half_e * t)).cos();
    let inner = (2.0 * PI / (df - t)).cos();
    let angular_bound = 4.0 * s2 * (outer * outer - inner * inner);
    let analytic_bound = 16.0 * PI * PI * (half_e + 1.0) * s.powi(3 - d as i32) * (2.0 * df + (half_e - 1.0) * t)
        / ((df - t).powi(2) * (df + half_e * t).powi(2));
    GapReport { certified, angular_bound, analytic_bound, chain: ClosingChain::new(k, d, e) }
}
