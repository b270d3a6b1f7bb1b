use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::{distance_matrices, moore_bound, DistanceMatrixSet, Graph};
use crate::ParameterError;

/// A named condition that a candidate graph or parameter triple violates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `d < 3`: girth below 6 is outside the supported regime.
    DiameterParameterTooSmall { d: u32 },
    DegreeParameterTooSmall { k: u32 },
    OddExcess { e: u32 },
    /// `e > k - 2`.
    ExcessAboveRange { e: u32, k: u32 },
    NotRegular { expected: u32, found: Option<usize> },
    NotBipartite,
    GirthMismatch { expected: usize, found: Option<usize> },
    OrderMismatch { expected: u128, found: usize },
    Disconnected,
    DiameterMismatch { expected: usize, found: Option<usize> },
    /// Some vertex does not have exactly `e/2` vertices at distance `d+1`.
    AntipodeCountMismatch { expected: usize, found: Option<usize> },
    /// The distance-`(d+1)` relation is not a disjoint union of cliques.
    AntipodesNotCliques,
}

impl Violation {
    /// True for conditions on the requested parameters rather than on the
    /// graph itself.
    pub fn is_parameter_violation(&self) -> bool {
        matches!(
            self,
            Violation::DiameterParameterTooSmall { .. }
                | Violation::DegreeParameterTooSmall { .. }
                | Violation::OddExcess { .. }
                | Violation::ExcessAboveRange { .. }
        )
    }
}

/// Outcome of [`structural_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralVerdict {
    pub k: u32,
    pub d: u32,
    pub e: u32,
    pub order: usize,
    pub degree: Option<usize>,
    pub girth: Option<usize>,
    pub diameter: Option<usize>,
    pub bipartite: bool,
    /// `n - M(k, 2d)`.
    pub excess: i128,
    /// Common number of vertices at distance `d + 1`; `None` if it varies.
    pub antipode_count_per_vertex: Option<usize>,
    pub antipodal_cliques_ok: bool,
    /// `c = 2n/(e+2)`, recorded when `e > 0` and the clique structure holds.
    pub clique_count: Option<usize>,
    pub failures: Vec<Violation>,
}

impl StructuralVerdict {
    pub fn passes(&self) -> bool {
        self.failures.is_empty()
    }

    /// True when only parameter-range conditions failed.
    pub fn graph_conditions_pass(&self) -> bool {
        self.failures.iter().all(Violation::is_parameter_violation)
    }
}

/// Checks, in order: parameter ranges, `k`-regularity, bipartiteness,
/// girth `2d`, order `M(k,2d) + e`, diameter (`d + 1`, or `d` when `e = 0`),
/// exactly `e/2` vertices at distance `d + 1` from each vertex, and that the
/// distance-`(d+1)` relation partitions the vertices into cliques of size
/// `e/2 + 1`. Every failure is recorded; nothing short-circuits.
pub fn structural_check(g: &Graph, k: u32, d: u32, e: u32) -> StructuralVerdict {
    let mut failures = Vec::new();
    if d < 3 {
        failures.push(Violation::DiameterParameterTooSmall { d });
    }
    if k < 3 {
        failures.push(Violation::DegreeParameterTooSmall { k });
    }
    if e % 2 == 1 {
        failures.push(Violation::OddExcess { e });
    }
    if k >= 2 && e > k - 2 || k < 2 && e > 0 {
        failures.push(Violation::ExcessAboveRange { e, k });
    }

    let n = g.order();
    let degree = g.regular_degree();
    if degree != Some(k as usize) {
        failures.push(Violation::NotRegular { expected: k, found: degree });
    }
    let bipartite = g.is_bipartite();
    if !bipartite {
        failures.push(Violation::NotBipartite);
    }
    let girth = g.girth();
    if girth != Some(2 * d as usize) {
        failures.push(Violation::GirthMismatch { expected: 2 * d as usize, found: girth });
    }
    let moore = moore_bound(k.max(2), (2 * d).max(3))
        .ok()
        .and_then(|m| m.to_u128())
        .unwrap_or(u128::MAX);
    let expected_order = moore.saturating_add(u128::from(e));
    if expected_order != n as u128 {
        failures.push(Violation::OrderMismatch { expected: expected_order, found: n });
    }
    let excess = i128::try_from(n).unwrap_or(i128::MAX) - i128::try_from(moore).unwrap_or(i128::MAX);

    let distances = distance_matrices(g).ok();
    let diameter = distances.as_ref().map(DistanceMatrixSet::d_max);
    if distances.is_none() {
        failures.push(Violation::Disconnected);
    }
    let expected_diameter = if e == 0 { d as usize } else { d as usize + 1 };
    if diameter != Some(expected_diameter) {
        failures.push(Violation::DiameterMismatch { expected: expected_diameter, found: diameter });
    }

    let mut antipode_count_per_vertex = None;
    let mut antipodal_cliques_ok = false;
    let mut clique_count = None;
    if let Some(set) = &distances {
        let far = d as usize + 1;
        let counts: Vec<usize> = (0..n).map(|u| set.sphere_size(u, far)).collect();
        antipode_count_per_vertex = match counts.split_first() {
            Some((first, rest)) if rest.iter().all(|c| c == first) => Some(*first),
            None => Some(0),
            _ => None,
        };
        if e % 2 == 0 {
            let expected = e as usize / 2;
            if antipode_count_per_vertex != Some(expected) {
                failures.push(Violation::AntipodeCountMismatch {
                    expected,
                    found: antipode_count_per_vertex,
                });
            }
        }
        antipodal_cliques_ok = antipodes_form_cliques(set, far);
        if !antipodal_cliques_ok {
            failures.push(Violation::AntipodesNotCliques);
        }
        if e > 0 && e % 2 == 0 && antipodal_cliques_ok && antipode_count_per_vertex == Some(e as usize / 2) {
            clique_count = Some(2 * n / (e as usize + 2));
        }
    }

    StructuralVerdict {
        k,
        d,
        e,
        order: n,
        degree,
        girth,
        diameter,
        bipartite,
        excess,
        antipode_count_per_vertex,
        antipodal_cliques_ok,
        clique_count,
        failures,
    }
}

/// Any two distinct vertices at distance `far` from a common vertex are at
/// distance `far` from each other. Together with symmetry this makes
/// "equal or at distance `far`" an equivalence relation, so the
/// distance-`far` graph is a disjoint union of cliques.
fn antipodes_form_cliques(set: &DistanceMatrixSet, far: usize) -> bool {
    (0..set.order()).all(|u| {
        let sphere = set.sphere(u, far);
        sphere
            .iter()
            .enumerate()
            .all(|(i, &v)| sphere[i + 1..].iter().all(|&w| set.distance(v, w) == far))
    })
}

/// Spectrum of a disjoint union of `c = 2n/(e+2)` copies of `K_{e/2+1}`:
/// `e/2` with multiplicity `c` and `-1` with multiplicity `n - c`.
pub fn antipodal_spectrum(n: u64, e: u32) -> Result<Vec<(i64, u64)>, ParameterError> {
    if e < 2 || e % 2 == 1 {
        return Err(ParameterError::InvalidExcess { e });
    }
    let block = u64::from(e) + 2;
    if (2 * n) % block != 0 {
        return Err(ParameterError::CliqueSizeMismatch { n, e });
    }
    let c = 2 * n / block;
    Ok(vec![(i64::from(e / 2), c), (-1, n - c)])
}
