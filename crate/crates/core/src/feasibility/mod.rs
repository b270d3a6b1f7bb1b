//! Spectral feasibility of an antipodal `(k, 2d)`-cage of excess `e`.
//!
//! Such a graph has order `n = M(k, 2d) + e`, eigenvalues `+-k` with
//! multiplicity one, and every other eigenvalue is a root of
//! `H_{d-1}(x) - 1` (the `mu_i`) or of `H_{d-1}(x) + e/2` (the `lambda_i`).
//! The multiplicities are forced by the order, so they must come out as
//! positive integers; for `d >= 7` the squares of `mu_2` and `lambda_2`
//! would also have to be integers less than one apart.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
#[allow(unused_imports)]
use num_traits::Float;

use crate::graphcore::moore_bound;
use crate::intersection::build_bd;
use crate::interval::Precision;
use crate::polynomials::{dickson_family, Family, IntPolynomial};
use crate::ParameterError;

mod gap;
mod multiplicity;
mod order;
mod roots;
mod weights;

pub use gap::{gap_check, ClosingChain, GapReport, GapVerdict, GAP_MIN_DIAMETER};
pub use multiplicity::{
    multiplicity_closed_form, multiplicity_enclosure, multiplicity_trig, Integrality, IntegralityStatus,
    ILL_CONDITIONED, INTEGRALITY_TOLERANCE, MAX_REFINEMENT_ROUNDS, TARGET_WIDTH, UNDECIDED_WIDTH,
};
pub use order::{multiplicity_order_checks, OrderReport, SYMMETRY_TOLERANCE};
pub use roots::{
    bracket_is_certified, inside_phi_interval, isolate_roots, phi_bounds, transcendental_residual, RootRecord,
    ISOLATION_BITS,
};
pub use weights::{f_weight, g_weight, GWeight};

/// Relative tolerance for the sum, moment and dual-formula checks.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FeasibilityError {
    #[error("excess e = {e} is odd; an antipodal cage has even excess")]
    OddExcess { e: u32 },
    #[error("d = {d} is even; only odd d is supported")]
    EvenDiameter { d: u32 },
    #[error("d = {d} is below 3")]
    DiameterTooSmall { d: u32 },
    #[error("excess e = {e} is below 2")]
    ExcessTooSmall { e: u32 },
    #[error("excess e = {e} exceeds k - 2 for k = {k}")]
    ExcessTooLarge { e: u32, k: u32 },
    #[error(transparent)]
    Parameter(#[from] ParameterError),
    #[error("internal error: seed bracket for root {index} of H - ({epsilon}) has no sign change")]
    SeedSignMismatch { epsilon: i64, index: u32 },
    #[error("internal error: bracket of root {index} of H - ({epsilon}) overlaps its predecessor")]
    BracketOverlap { epsilon: i64, index: u32 },
    #[error("internal error: alpha of root {index} of H - ({epsilon}) violates its angular bound")]
    AngleBoundViolation { epsilon: i64, index: u32 },
    #[error("internal error: weight branch does not match root {index}")]
    BranchMismatch { index: u32 },
    #[error("multiplicity formula is ill-conditioned at theta = {theta}")]
    IllConditioned { theta: f64 },
}

/// Checks the parameter domain in a fixed order so that each violation
/// has one name.
pub fn validate(k: u32, d: u32, e: u32) -> Result<(), FeasibilityError> {
    if e % 2 == 1 {
        return Err(FeasibilityError::OddExcess { e });
    }
    if d % 2 == 0 {
        return Err(FeasibilityError::EvenDiameter { d });
    }
    if d < 3 {
        return Err(FeasibilityError::DiameterTooSmall { d });
    }
    if e < 2 {
        return Err(FeasibilityError::ExcessTooSmall { e });
    }
    if k < 3 {
        return Err(ParameterError::DegreeTooSmall { k, min: 3 }.into());
    }
    if e > k - 2 {
        return Err(FeasibilityError::ExcessTooLarge { e, k });
    }
    Ok(())
}

/// The two admissible values of `H_{d-1}` at a nontrivial eigenvalue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Epsilon {
    /// `epsilon = 1`; roots are the `mu_i`.
    One,
    /// `epsilon = -e/2`; roots are the `lambda_i`.
    MinusHalfExcess,
}

impl Epsilon {
    pub fn value(self, e: u32) -> i64 {
        match self {
            Epsilon::One => 1,
            Epsilon::MinusHalfExcess => -i64::from(e / 2),
        }
    }

    /// `epsilon (-1)^(d+i)`.
    pub fn eta(self, e: u32, d: u32, index: u32) -> i64 {
        let v = self.value(e);
        if (d + index) % 2 == 0 { v } else { -v }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Epsilon::One => "mu",
            Epsilon::MinusHalfExcess => "lambda",
        }
    }
}

/// Shared precomputation for one `(k, d, e)`.
pub(crate) struct Setting {
    pub k: u32,
    pub d: u32,
    pub e: u32,
    pub n: BigInt,
    pub s: f64,
    pub t: f64,
    pub h_top: IntPolynomial,
    pub h_below: IntPolynomial,
    pub h_top_derivative: IntPolynomial,
}

impl Setting {
    /// Assumes [`validate`] passed.
    pub fn new(k: u32, d: u32, e: u32) -> Self {
        let moore = moore_bound(k, 2 * d).expect("validated degree");
        let h_top = dickson_family(Family::H, k, d as usize - 1).expect("validated degree");
        let h_below = dickson_family(Family::H, k, d as usize - 2).expect("validated degree");
        let s = (f64::from(k) - 1.0).sqrt();
        Setting {
            k,
            d,
            e,
            n: BigInt::from(moore) + e,
            s,
            t: s.powi(1 - d as i32),
            h_top_derivative: h_top.derivative(),
            h_top,
            h_below,
        }
    }

    /// `H_{d-1}(x) - epsilon`.
    pub fn root_polynomial(&self, epsilon: Epsilon) -> IntPolynomial {
        &self.h_top - &IntPolynomial::constant(epsilon.value(self.e))
    }

    /// `2 eps (2 eps + e/2 - 1)`.
    pub fn prefactor(&self, epsilon: Epsilon) -> BigInt {
        let eps = epsilon.value(self.e);
        BigInt::from(2 * eps * (2 * eps + i64::from(self.e / 2) - 1))
    }
}

/// Working precision for certified evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FeasibilityConfig {
    pub precision: Precision,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    SpectrallyAdmissible,
    ExcludedByIntegrality,
    ExcludedByGap,
    OutsideRegime,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SpectrallyAdmissible => "spectrally-admissible",
            Verdict::ExcludedByIntegrality => "excluded-by-integrality",
            Verdict::ExcludedByGap => "excluded-by-gap",
            Verdict::OutsideRegime => "outside-regime",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A nontrivial eigenvalue with its multiplicity computed three ways.
#[derive(Debug, Clone, PartialEq)]
pub struct RootMultiplicity {
    pub record: RootRecord,
    pub closed_form: f64,
    pub trig: f64,
    pub integrality: Integrality,
}

impl RootMultiplicity {
    pub fn relative_disagreement(&self) -> f64 {
        (self.trig - self.closed_form).abs() / self.closed_form.abs()
    }
}

/// `(theta, m(theta))` for every eigenvalue including `+-k`, ascending in
/// `theta`.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiplicitySet {
    pub entries: Vec<(f64, f64)>,
    pub n: BigUint,
}

impl MultiplicitySet {
    pub fn total(&self) -> f64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumCheck {
    /// Sum over the nontrivial eigenvalues.
    pub total: f64,
    /// `n - 2`.
    pub expected: f64,
}

impl SumCheck {
    pub fn passes(&self) -> bool {
        (self.total - self.expected).abs() <= CONSISTENCY_TOLERANCE * self.expected.abs()
    }
}

/// `sum m(theta) theta^q + k^q + (-k)^q` against `n (B_d^q)_{0,0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentCheck {
    pub max_q: u32,
    pub worst_q: u32,
    /// Error relative to the sum of absolute values of the terms.
    pub worst_relative_error: f64,
}

impl MomentCheck {
    pub fn passes(&self) -> bool {
        self.worst_relative_error <= CONSISTENCY_TOLERANCE
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeasibilityReport {
    pub k: u32,
    pub d: u32,
    pub e: u32,
    pub n: BigUint,
    /// Roots of `H_{d-1} - 1`, ascending.
    pub mu: Vec<RootMultiplicity>,
    /// Roots of `H_{d-1} + e/2`, ascending.
    pub lambda: Vec<RootMultiplicity>,
    pub multiplicities: MultiplicitySet,
    pub sum_check: SumCheck,
    pub moment_check: MomentCheck,
    pub gap: GapVerdict,
    pub verdict: Verdict,
}

impl FeasibilityReport {
    pub fn roots(&self) -> impl Iterator<Item = &RootMultiplicity> {
        self.mu.iter().chain(&self.lambda)
    }

    pub fn all_positive(&self) -> bool {
        self.roots().all(|r| r.integrality.positive())
    }

    pub fn all_integral(&self) -> bool {
        self.roots().all(|r| r.integrality.status == IntegralityStatus::Integral)
    }

    pub fn max_integrality_deviation(&self) -> f64 {
        self.roots().map(|r| r.integrality.deviation).fold(0.0, f64::max)
    }

    pub fn max_dual_formula_disagreement(&self) -> f64 {
        self.roots().map(RootMultiplicity::relative_disagreement).fold(0.0, f64::max)
    }

    pub fn order_report(&self) -> OrderReport {
        let values = |set: &[RootMultiplicity]| set.iter().map(|r| r.closed_form).collect();
        order::order_report(values(&self.mu), values(&self.lambda))
    }
}

pub fn spectral_feasibility(k: u32, d: u32, e: u32) -> Result<FeasibilityReport, FeasibilityError> {
    spectral_feasibility_with(k, d, e, &FeasibilityConfig::default())
}

pub fn spectral_feasibility_with(
    k: u32,
    d: u32,
    e: u32,
    config: &FeasibilityConfig,
) -> Result<FeasibilityReport, FeasibilityError> {
    validate(k, d, e)?;
    let setting = Setting::new(k, d, e);
    let per_epsilon = |eps| -> Result<Vec<RootMultiplicity>, FeasibilityError> {
        roots::isolate_in(&setting, eps)?
            .into_iter()
            .map(|mut record| {
                let integrality = multiplicity::certify(&setting, &mut record, config.precision);
                let closed_form = multiplicity::closed_form_in(&setting, eps, record.theta)?;
                let trig = multiplicity::trig_in(&setting, &record)?;
                Ok(RootMultiplicity { record, closed_form, trig, integrality })
            })
            .collect()
    };
    let mu = per_epsilon(Epsilon::One)?;
    let lambda = per_epsilon(Epsilon::MinusHalfExcess)?;

    let kf = f64::from(k);
    let mut entries: Vec<(f64, f64)> = mu
        .iter()
        .chain(&lambda)
        .map(|r| (r.record.theta, r.closed_form))
        .chain([(-kf, 1.0), (kf, 1.0)])
        .collect();
    entries.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = setting.n.to_biguint().expect("order is positive");
    let nf = n.to_f64().unwrap_or(f64::INFINITY);
    let multiplicities = MultiplicitySet { entries, n: n.clone() };
    let sum_check = SumCheck { total: multiplicities.total() - 2.0, expected: nf - 2.0 };
    let moment_check = moment_check(k, d, &setting.n, &multiplicities)?;

    let gap = if d >= GAP_MIN_DIAMETER {
        GapVerdict::Evaluated(gap::gap_from_brackets(k, d, e, &lambda[1].record.bracket, &mu[1].record.bracket))
    } else {
        GapVerdict::OutsideRegime
    };

    let excluded_by_integrality = mu.iter().chain(&lambda).any(|r| {
        r.integrality.enclosure.strict_sign() == Some(Ordering::Less)
            || r.integrality.status == IntegralityStatus::NonIntegral
    });
    let verdict = if gap.excluded() {
        Verdict::ExcludedByGap
    } else if excluded_by_integrality {
        Verdict::ExcludedByIntegrality
    } else {
        Verdict::SpectrallyAdmissible
    };

    Ok(FeasibilityReport { k, d, e, n, mu, lambda, multiplicities, sum_check, moment_check, gap, verdict })
}

fn moment_check(k: u32, d: u32, n: &BigInt, set: &MultiplicitySet) -> Result<MomentCheck, FeasibilityError> {
    let max_q = 2 * d - 1;
    let walks = build_bd(k, d)?.closed_walks(max_q);
    let mut worst = (0, 0.0);
    for (q, w) in walks.iter().enumerate() {
        let mut sum = 0.0;
        let mut scale = 0.0;
        for &(theta, m) in &set.entries {
            let term = m * theta.powi(q as i32);
            sum += term;
            scale += term.abs();
        }
        let expected = (n * w).to_f64().unwrap_or(f64::INFINITY);
        let error = (sum - expected).abs() / scale.max(expected.abs());
        if error > worst.1 {
            worst = (q as u32, error);
        }
    }
    Ok(MomentCheck { max_q, worst_q: worst.0, worst_relative_error: worst.1 })
}

/// One row of a parameter scan.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub k: u32,
    pub d: u32,
    pub e: u32,
    pub outcome: Result<FeasibilityReport, FeasibilityError>,
}

impl ScanRow {
    pub fn verdict(&self) -> Verdict {
        match &self.outcome {
            Ok(r) => r.verdict,
            Err(_) => Verdict::OutsideRegime,
        }
    }
}

/// Every `(k, d, e)` in `k`-major, then `d`, then `e` order.
pub fn scan_triples(ks: &[u32], ds: &[u32], es: &[u32]) -> Vec<(u32, u32, u32)> {
    ks.iter()
        .flat_map(|&k| ds.iter().flat_map(move |&d| es.iter().map(move |&e| (k, d, e))))
        .collect()
}

/// Evaluates every triple in [`scan_triples`] order. Triples outside the
/// parameter domain keep their error and report as outside the regime.
pub fn scan(ks: &[u32], ds: &[u32], es: &[u32], config: &FeasibilityConfig) -> Vec<ScanRow> {
    scan_triples(ks, ds, es)
        .into_iter()
        .map(|(k, d, e)| ScanRow { k, d, e, outcome: spectral_feasibility_with(k, d, e, config) })
        .collect()
}

/// Rows of the multiplicity list in the order used by reports: ascending
/// `theta`, rounded to the nearest integer when certified integral.
pub fn rounded_multiplicities(report: &FeasibilityReport) -> Option<Vec<BigInt>> {
    if !report.all_integral() {
        return None;
    }
    let mut rows: Vec<(f64, BigInt)> = report
        .roots()
        .map(|r| (r.record.theta, r.integrality.nearest.clone()))
        .collect();
    let k = f64::from(report.k);
    rows.push((-k, BigInt::one()));
    rows.push((k, BigInt::one()));
    rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    Some(rows.into_iter().map(|(_, m)| m).collect())
}
