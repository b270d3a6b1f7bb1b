//! Spectral feasibility machinery for `(k, g)`-cages of even girth `g = 2d`
//! and small excess.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`polynomials`] builds the integer polynomial families `G_i`, `F_i`,
//!   `H_i` and evaluates them exactly, in binary64, or over intervals.
//! * [`graphcore`] holds the graph type, BFS invariants, distance matrices,
//!   the matrix identities relating `A`, `A_d` and `A_{d+1}`, antipodal
//!   analysis, an eigenvalue cross-check and a small catalogue of Moore
//!   graphs.
//! * [`intersection`] builds the intersection matrix `B_D` of a bipartite
//!   Moore graph and provides closed-walk counts that serve as an
//!   independent oracle for spectral moments.
//! * [`feasibility`] isolates the nontrivial eigenvalues of a putative
//!   antipodal cage, computes their multiplicities two ways, and runs the
//!   integrality and eigenvalue-gap exclusion tests.
//!
//! Graph6 parsing, report serialisation and the command-line front end live
//! in the companion `cage-spectra-cli` crate.
#![no_std]

extern crate alloc;

// Transcendental f64 methods come from `num_traits::Float` under no_std. When
// std is linked into the build the inherent methods take over, so those
// imports carry `allow(unused_imports)`.

pub mod feasibility;
pub mod graphcore;
pub mod intersection;
pub mod interval;
pub mod polynomials;

pub use feasibility::{
    gap_check, isolate_roots, multiplicity_closed_form, multiplicity_order_checks, multiplicity_trig, scan,
    spectral_feasibility, Epsilon, FeasibilityError, FeasibilityReport, RootRecord, Verdict,
};
pub use graphcore::{moore_bound, Graph, GraphError};
pub use interval::{ExactRational, Interval, Precision};
pub use polynomials::{dickson_family, Family, IntPolynomial};

/// Parameter-domain violations shared by the numeric entry points.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ParameterError {
    #[error("degree k = {k} is below the supported minimum {min}")]
    DegreeTooSmall { k: u32, min: u32 },
    #[error("girth g = {g} is below 3")]
    GirthTooSmall { g: u32 },
    #[error("diameter parameter d = {d} is below the supported minimum {min}")]
    DiameterTooSmall { d: u32, min: u32 },
    #[error("angle must lie strictly between 0 and pi")]
    AngleOutOfRange,
    #[error("argument must satisfy |z| < 1")]
    ArgumentOutOfRange,
    #[error("unknown polynomial family (expected G, F or H)")]
    UnknownFamily,
    #[error("excess e = {e} must be even and at least 2")]
    InvalidExcess { e: u32 },
    #[error("(e + 2) = {} does not divide 2n = {}", .e + 2, 2 * .n)]
    CliqueSizeMismatch { n: u64, e: u32 },
    #[error("radicand {radicand} is not positive; parameters are outside the supported regime")]
    RegimeViolation { radicand: f64 },
}
