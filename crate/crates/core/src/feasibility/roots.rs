//! Certified isolation of the roots of `H_{d-1}(x) - epsilon`.
//!
//! Writing `theta = -2 s cos(phi)` and `phi = (i pi - alpha) / d`, each root
//! satisfies `sin(alpha) = eta t sin(phi)` with `t = s^(1-d)` and
//! `eta = epsilon (-1)^(d+i)`. That pins `phi_i` to an explicit interval
//! next to `i pi / d`, which seeds an exact bisection on the integer
//! polynomial.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One};
#[allow(unused_imports)]
use num_traits::Float;

use super::{validate, Epsilon, FeasibilityError, Setting};
use crate::interval::{rational_from_f64, ExactRational, Interval};
use crate::polynomials::IntPolynomial;

/// Bisection stops once the bracket is narrower than `2^-ISOLATION_BITS`.
pub const ISOLATION_BITS: u32 = 62;

/// One isolated root of `H_{d-1} - epsilon`.
#[derive(Debug, Clone, PartialEq)]
pub struct RootRecord {
    /// Position `1..=d-1` in ascending order of `theta`.
    pub index: u32,
    pub epsilon: Epsilon,
    /// `epsilon (-1)^(d+index)`.
    pub eta: i64,
    pub theta: f64,
    pub phi: f64,
    pub alpha: f64,
    /// Exact rational bracket containing the root.
    pub bracket: Interval,
}

/// `phi` interval that must contain `phi_i` for the given `eta`.
pub fn phi_bounds(k: u32, d: u32, index: u32, eta: i64) -> (f64, f64) {
    let t = coupling(k, d);
    let a = (eta.abs() as f64) * t;
    let d = f64::from(d);
    let centre = f64::from(index) * PI;
    if eta > 0 {
        (centre / (d + a), centre / d)
    } else {
        (centre / d, centre / (d - a))
    }
}

/// `t = s^(1-d)`.
pub(crate) fn coupling(k: u32, d: u32) -> f64 {
    (f64::from(k) - 1.0).sqrt().powi(1 - d as i32)
}

/// Isolates the `d - 1` roots of `H_{d-1} - epsilon`, ascending.
pub fn isolate_roots(k: u32, d: u32, e: u32, epsilon: Epsilon) -> Result<Vec<RootRecord>, FeasibilityError> {
    validate(k, d, e)?;
    let setting = Setting::new(k, d, e);
    isolate_in(&setting, epsilon)
}

pub(crate) fn isolate_in(setting: &Setting, epsilon: Epsilon) -> Result<Vec<RootRecord>, FeasibilityError> {
    let (k, d, e) = (setting.k, setting.d, setting.e);
    let target = setting.root_polynomial(epsilon);
    let width = ExactRational::new(BigInt::one(), BigInt::one() << ISOLATION_BITS as usize);
    let s = setting.s;
    let mut records = Vec::with_capacity(d as usize - 1);
    for index in 1..d {
        let eta = epsilon.eta(e, d, index);
        let (phi_lo, phi_hi) = phi_bounds(k, d, index, eta);
        let lo = rational_from_f64(-2.0 * s * phi_lo.cos());
        let hi = rational_from_f64(-2.0 * s * phi_hi.cos());
        let seed = Interval::new(lo, hi);
        let sign_lo = target.sign_at(seed.lo());
        let sign_hi = target.sign_at(seed.hi());
        if sign_lo == sign_hi {
            return Err(FeasibilityError::SeedSignMismatch { epsilon: epsilon.value(e), index });
        }
        let bracket = bisect_to_width(&target, seed, &width);
        records.push(record_from_bracket(setting, epsilon, index, eta, bracket)?);
    }
    for pair in records.windows(2) {
        if pair[0].bracket.hi() >= pair[1].bracket.lo() {
            return Err(FeasibilityError::BracketOverlap { epsilon: epsilon.value(e), index: pair[1].index });
        }
    }
    Ok(records)
}

fn record_from_bracket(
    setting: &Setting,
    epsilon: Epsilon,
    index: u32,
    eta: i64,
    bracket: Interval,
) -> Result<RootRecord, FeasibilityError> {
    let d = setting.d;
    let theta = bracket.mid_f64();
    let phi = (-theta / (2.0 * setting.s)).acos();
    let alpha = f64::from(index) * PI - f64::from(d) * phi;
    let bound = (eta.abs() as f64) * setting.t * phi;
    let sign_ok = if eta > 0 { alpha > 0.0 } else { alpha < 0.0 };
    if !sign_ok || alpha.abs() >= bound {
        return Err(FeasibilityError::AngleBoundViolation { epsilon: epsilon.value(setting.e), index });
    }
    Ok(RootRecord { index, epsilon, eta, theta, phi, alpha, bracket })
}

/// Halves `bracket` (which must straddle a sign change of `p`) until it is
/// no wider than `width`. An exact root collapses it to a point.
pub(crate) fn bisect_to_width(p: &IntPolynomial, mut bracket: Interval, width: &ExactRational) -> Interval {
    while &bracket.width() > width {
        match bisect_once(p, &bracket) {
            Some(next) => bracket = next,
            None => break,
        }
    }
    bracket
}

/// Performs `steps` halvings.
pub(crate) fn bisect_steps(p: &IntPolynomial, mut bracket: Interval, steps: u32) -> Interval {
    for _ in 0..steps {
        match bisect_once(p, &bracket) {
            Some(next) => bracket = next,
            None => break,
        }
    }
    bracket
}

fn bisect_once(p: &IntPolynomial, bracket: &Interval) -> Option<Interval> {
    if bracket.lo() == bracket.hi() {
        return None;
    }
    let sign_lo = p.sign_at(bracket.lo());
    if sign_lo == Ordering::Equal {
        return Some(Interval::point(bracket.lo().clone()));
    }
    let mid = bracket.midpoint();
    match p.sign_at(&mid) {
        Ordering::Equal => Some(Interval::point(mid)),
        s if s == sign_lo => Some(Interval::new(mid, bracket.hi().clone())),
        _ => Some(Interval::new(bracket.lo().clone(), mid)),
    }
}

/// Recomputes `theta`, `phi` and `alpha` after the bracket was narrowed.
pub(crate) fn refresh(setting: &Setting, record: &mut RootRecord) {
    record.theta = record.bracket.mid_f64();
    record.phi = (-record.theta / (2.0 * setting.s)).acos();
    record.alpha = f64::from(record.index) * PI - f64::from(setting.d) * record.phi;
}

/// `sin(alpha) - eta t sin((i pi - alpha) / d)` at the record's `alpha`.
/// Records with `eta = 0` (the Moore-graph analogue) are rejected.
pub fn transcendental_residual(record: &RootRecord, k: u32, d: u32) -> Result<f64, FeasibilityError> {
    if record.eta == 0 {
        return Err(FeasibilityError::ExcessTooSmall { e: 0 });
    }
    crate::polynomials::check_degree(k)?;
    let t = coupling(k, d);
    let phi = (f64::from(record.index) * PI - record.alpha) / f64::from(d);
    Ok(record.alpha.sin() - (record.eta as f64) * t * phi.sin())
}

/// Whether `theta` lies strictly inside the image of the record's
/// `phi` interval under `phi -> -2 s cos(phi)`.
pub fn inside_phi_interval(record: &RootRecord, k: u32, d: u32) -> bool {
    let (lo, hi) = phi_bounds(k, d, record.index, record.eta);
    let s = (f64::from(k) - 1.0).sqrt();
    let (a, b) = (-2.0 * s * lo.cos(), -2.0 * s * hi.cos());
    a < record.theta && record.theta < b
}

/// Whether `p` changes sign across `bracket` or vanishes at an endpoint.
/// A point bracket must be an exact root.
pub fn bracket_is_certified(p: &IntPolynomial, bracket: &Interval) -> bool {
    let a = p.sign_at(bracket.lo());
    let b = p.sign_at(bracket.hi());
    if bracket.lo() == bracket.hi() {
        return a == Ordering::Equal;
    }
    a == Ordering::Equal || b == Ordering::Equal || a != b
}
