//! Exact verification of the two matrix identities satisfied by a
//! `(k, 2d)`-cage of excess `e <= k - 2`:
//!
//! ```text
//! F_d(A)  = k A_d - A A_{d+1}
//! k J     = (A + k I)(H_{d-1}(A) + A_{d+1})
//! ```
//!
//! For Moore graphs (`e = 0`) the diameter is `d` and `A_{d+1}` is the zero
//! matrix, so both identities reduce to their Moore-graph forms.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{distance_matrices, structural_check, Graph, GraphError, IntMatrix};
use crate::polynomials::{dickson_family, Family};

/// Left side minus right side of a matrix identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub residual: IntMatrix,
    /// Largest absolute entry of the residual.
    pub max_abs_residual: BigInt,
}

impl IdentityReport {
    fn new(lhs: &IntMatrix, rhs: &IntMatrix) -> Self {
        let residual = lhs - rhs;
        let max_abs_residual = residual.max_abs();
        IdentityReport { residual, max_abs_residual }
    }

    pub fn holds(&self) -> bool {
        self.max_abs_residual.is_zero()
    }
}

struct Prepared {
    a_d: IntMatrix,
    a_far: IntMatrix,
}

fn prepare(g: &Graph, k: u32, d: u32, e: u32) -> Result<Prepared, GraphError> {
    let verdict = structural_check(g, k, d, e);
    if !verdict.passes() {
        return Err(GraphError::Structural(verdict.failures));
    }
    let set = distance_matrices(g)?;
    Ok(Prepared { a_d: set.layer(d as usize), a_far: set.layer(d as usize + 1) })
}

/// `F_d(A) - (k A_d - A A_{d+1})`, refusing graphs that fail
/// [`structural_check`].
pub fn verify_path_count_identity(g: &Graph, k: u32, d: u32, e: u32) -> Result<IdentityReport, GraphError> {
    let Prepared { a_d, a_far } = prepare(g, k, d, e)?;
    let f_d = dickson_family(Family::F, k, d as usize).expect("k >= 3 after structural check");
    let lhs = IntMatrix::polynomial_of_adjacency(g, &f_d);
    // A_{d+1} is symmetric, so A A_{d+1} = (A_{d+1} A)^T.
    let a_times_far = transpose(&a_far.mul_adjacency(g));
    let rhs = &a_d.scale(&BigInt::from(k)) - &a_times_far;
    Ok(IdentityReport::new(&lhs, &rhs))
}

/// `kJ - (A + kI)(H_{d-1}(A) + A_{d+1})`, refusing graphs that fail
/// [`structural_check`].
pub fn verify_all_ones_identity(g: &Graph, k: u32, d: u32, e: u32) -> Result<IdentityReport, GraphError> {
    let Prepared { a_far, .. } = prepare(g, k, d, e)?;
    let n = g.order();
    let h = dickson_family(Family::H, k, d as usize - 1).expect("k >= 3 after structural check");
    let inner = &IntMatrix::polynomial_of_adjacency(g, &h) + &a_far;
    let shifted = IntMatrix::adjacency(g).add_scalar_identity(&BigInt::from(k));
    let rhs = &shifted * &inner;
    let lhs = IntMatrix::ones(n).scale(&BigInt::from(k));
    Ok(IdentityReport::new(&lhs, &rhs))
}

fn transpose(m: &IntMatrix) -> IntMatrix {
    IntMatrix::from_fn(m.size(), |i, j| m.get(j, i).clone())
}
