//! Eigenvalue multiplicities of a putative antipodal cage.
//!
//! ```text
//!            n e k (k-1) H_{d-2}(theta)
//! m(theta) = -----------------------------------------------
//!            2 eps (2 eps + e/2 - 1) H'_{d-1}(theta) (k^2 - theta^2)
//! ```
//!
//! evaluated three ways: in binary64, through the trigonometric weights, and
//! as a certified interval over the root's exact bracket.

use core::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
#[allow(unused_imports)]
use num_traits::Float;

use super::roots::{bisect_steps, refresh, RootRecord};
use super::weights::{f_weight, g_weight, GWeight};
use super::{validate, Epsilon, FeasibilityError, Setting};
use crate::interval::{ExactRational, Interval, Precision};
use crate::polynomials::h_value_and_derivative;

/// Denominator guard for the binary64 closed form.
pub const ILL_CONDITIONED: f64 = 1e-12;
/// An enclosure narrower than this is decided without further refinement.
pub const TARGET_WIDTH: f64 = 1e-7;
/// Largest distance to an integer still called integral.
pub const INTEGRALITY_TOLERANCE: f64 = 1e-6;
/// Enclosures wider than this are never decided.
pub const UNDECIDED_WIDTH: f64 = 0.5;
/// Refinement rounds before giving up on narrowing an enclosure.
pub const MAX_REFINEMENT_ROUNDS: u32 = 24;
const BISECTIONS_PER_ROUND: u32 = 16;
const BITS_PER_ROUND: u32 = 16;

/// Binary64 closed-form multiplicity of `theta`.
pub fn multiplicity_closed_form(k: u32, d: u32, e: u32, epsilon: Epsilon, theta: f64) -> Result<f64, FeasibilityError> {
    validate(k, d, e)?;
    closed_form_in(&Setting::new(k, d, e), epsilon, theta)
}

pub(crate) fn closed_form_in(setting: &Setting, epsilon: Epsilon, theta: f64) -> Result<f64, FeasibilityError> {
    let (k, d, e) = (setting.k, setting.d as usize, setting.e);
    let (below, _) = h_value_and_derivative(k, d - 2, theta);
    let (_, slope) = h_value_and_derivative(k, d - 1, theta);
    let kf = f64::from(k);
    let gap = kf * kf - theta * theta;
    if slope.abs() < ILL_CONDITIONED || gap.abs() < ILL_CONDITIONED {
        return Err(FeasibilityError::IllConditioned { theta });
    }
    let n = setting.n.to_f64().unwrap_or(f64::INFINITY);
    let numerator = n * f64::from(e) * kf * (kf - 1.0) * below;
    let prefactor = setting.prefactor(epsilon).to_f64().unwrap_or(f64::NAN);
    Ok(numerator / (prefactor * slope * gap))
}

/// Multiplicity through `f(cos phi)` and the `g` weight selected by the
/// record's `epsilon` and the parity of its index.
pub fn multiplicity_trig(k: u32, d: u32, e: u32, record: &RootRecord) -> Result<f64, FeasibilityError> {
    validate(k, d, e)?;
    trig_in(&Setting::new(k, d, e), record)
}

pub(crate) fn trig_in(setting: &Setting, record: &RootRecord) -> Result<f64, FeasibilityError> {
    let (k, d, e) = (setting.k, setting.d, setting.e);
    let expected_eta = record.epsilon.eta(e, d, record.index);
    if record.eta != expected_eta || record.index == 0 || record.index >= d {
        return Err(FeasibilityError::BranchMismatch { index: record.index });
    }
    let n = setting.n.to_f64().unwrap_or(f64::INFINITY);
    let s2 = f64::from(k) - 1.0;
    let half_e = f64::from(e) / 2.0;
    let z = record.phi.cos();
    let f = f_weight(k, z)?;
    match record.epsilon {
        Epsilon::One => {
            let g = g_weight(GWeight::G1, k, d, e, record.eta as f64 * z)?;
            Ok(n * f64::from(e) / (4.0 * s2 * (half_e + 1.0)) * f * g)
        }
        Epsilon::MinusHalfExcess => {
            let which = if record.index % 2 == 1 { GWeight::G2 } else { GWeight::G3 };
            let g = g_weight(which, k, d, e, z)?;
            Ok(n / (2.0 * s2 * (half_e + 1.0)) * f * g)
        }
    }
}

/// Certified enclosure of the multiplicity over every point of `bracket`,
/// or `None` when a denominator factor is not bounded away from zero.
pub fn multiplicity_enclosure(
    k: u32,
    d: u32,
    e: u32,
    epsilon: Epsilon,
    bracket: &Interval,
    precision: Precision,
) -> Result<Option<Interval>, FeasibilityError> {
    validate(k, d, e)?;
    Ok(enclosure_in(&Setting::new(k, d, e), epsilon, bracket, precision))
}

pub(crate) fn enclosure_in(setting: &Setting, epsilon: Epsilon, bracket: &Interval, precision: Precision) -> Option<Interval> {
    let k = BigInt::from(setting.k);
    let below = setting.h_below.eval_interval(bracket, precision);
    let slope = setting.h_top_derivative.eval_interval(bracket, precision);
    let k_squared = ExactRational::from_integer(&k * &k);
    let gap = (-&bracket.square()).add_scalar(&k_squared);
    let scale = &setting.n * BigInt::from(setting.e) * &k * (&k - 1);
    let numerator = below.scale(&ExactRational::from_integer(scale));
    let denominator = (&slope * &gap).scale(&ExactRational::from_integer(setting.prefactor(epsilon)));
    numerator.checked_div(&denominator.rounded(precision)).map(|m| m.rounded(precision))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralityStatus {
    /// The enclosure contains exactly one integer and lies within
    /// [`INTEGRALITY_TOLERANCE`] of it.
    Integral,
    /// The enclosure contains no integer.
    NonIntegral,
    /// Refinement did not settle the question.
    Undecided,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Integrality {
    pub enclosure: Interval,
    /// Integer nearest to the enclosure midpoint.
    pub nearest: BigInt,
    /// Largest distance from a point of the enclosure to `nearest`.
    pub deviation: f64,
    pub status: IntegralityStatus,
    /// Working precision in bits at the final evaluation.
    pub precision_bits: u32,
}

impl Integrality {
    pub fn positive(&self) -> bool {
        self.enclosure.strict_sign() == Some(Ordering::Greater)
    }
}

/// Narrows the record's bracket and widens precision until the enclosure
/// is at most [`TARGET_WIDTH`] wide, then classifies it.
pub(crate) fn certify(setting: &Setting, record: &mut RootRecord, start: Precision) -> Integrality {
    let target = BigRational::from_float(TARGET_WIDTH).expect("finite");
    let polynomial = setting.root_polynomial(record.epsilon);
    let mut precision = start;
    let mut enclosure = None;
    for round in 0..=MAX_REFINEMENT_ROUNDS {
        if let Some(m) = enclosure_in(setting, record.epsilon, &record.bracket, precision) {
            let narrow = m.width() <= target;
            enclosure = Some(m);
            if narrow {
                break;
            }
        }
        if round == MAX_REFINEMENT_ROUNDS {
            break;
        }
        record.bracket = bisect_steps(&polynomial, record.bracket.clone(), BISECTIONS_PER_ROUND);
        precision = precision.widened(BITS_PER_ROUND);
    }
    refresh(setting, record);
    let enclosure = enclosure.unwrap_or_else(|| {
        let unbounded = ExactRational::from_integer(BigInt::one() << 64usize);
        Interval::new(-unbounded.clone(), unbounded)
    });
    classify(enclosure, precision)
}

fn classify(enclosure: Interval, precision: Precision) -> Integrality {
    let nearest = enclosure.midpoint().round().to_integer();
    let n = ExactRational::from_integer(nearest.clone());
    let deviation = (enclosure.lo() - &n).abs().max((enclosure.hi() - &n).abs());
    let deviation = deviation.to_f64().unwrap_or(f64::INFINITY);
    let (first, last) = enclosure.integer_span();
    let status = if enclosure.width_f64() > UNDECIDED_WIDTH {
        IntegralityStatus::Undecided
    } else if first > last {
        IntegralityStatus::NonIntegral
    } else if first == last && deviation <= INTEGRALITY_TOLERANCE {
        IntegralityStatus::Integral
    } else {
        IntegralityStatus::Undecided
    };
    Integrality { enclosure, nearest, deviation, status, precision_bits: precision.bits() }
}
