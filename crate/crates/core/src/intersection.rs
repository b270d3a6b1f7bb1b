//! The intersection matrix `B_D` of a bipartite Moore graph of degree `k`
//! and diameter `D`:
//!
//! ```text
//!   0   1
//!   k   0   1
//!      k-1  0   1
//!           .   .   .
//!              k-1  0   k
//!                  k-1  0
//! ```
//!
//! `(B_D^q)_{0,0}` counts closed walks of length `q` at a vertex of the
//! Moore tree, so for a bipartite `k`-regular graph of girth `2d` and order
//! `n`, `tr(A^q) = n (B_d^q)_{0,0}` for `q < 2d`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

use crate::graphcore::{Graph, GraphError, IntMatrix, Violation};
use crate::interval::rational_from_f64;
use crate::polynomials::{check_degree, dickson_family, Family, IntPolynomial};
use crate::ParameterError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    k: u32,
    diameter: u32,
    entries: IntMatrix,
}

impl IntersectionMatrix {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    /// `(B^q)_{0,0}` for `q = 0..=q_max`, by repeated row-vector products.
    pub fn closed_walks(&self, q_max: u32) -> Vec<BigInt> {
        let size = self.entries.size();
        let mut row = vec![BigInt::zero(); size];
        row[0] = BigInt::one();
        let mut out = Vec::with_capacity(q_max as usize + 1);
        for _ in 0..=q_max {
            out.push(row[0].clone());
            row = (0..size)
                .map(|j| (0..size).map(|i| &row[i] * self.entries.get(i, j)).sum())
                .collect();
        }
        out
    }
}

/// Builds `B_D`. Requires `k >= 3` and `D >= 2`.
pub fn build_bd(k: u32, diameter: u32) -> Result<IntersectionMatrix, ParameterError> {
    check_degree(k)?;
    if diameter < 2 {
        return Err(ParameterError::DiameterTooSmall { d: diameter, min: 2 });
    }
    let last = diameter as usize;
    let entries = IntMatrix::from_fn(last + 1, |i, j| {
        let v: u32 = if j == i + 1 {
            if i + 1 == last { k } else { 1 }
        } else if i == j + 1 {
            if i == 1 { k } else { k - 1 }
        } else {
            0
        };
        BigInt::from(v)
    });
    Ok(IntersectionMatrix { k, diameter, entries })
}

/// `(B^q)_{0,0}`.
pub fn bd_entry00(b: &IntersectionMatrix, q: u32) -> BigInt {
    b.closed_walks(q).pop().unwrap_or_default()
}

/// Per-`q` comparison of `tr(A^q)` with `n (B_d^q)_{0,0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    /// `(q, tr(A^q), n (B_d^q)_{0,0})` for `q = 0..2d`.
    pub rows: Vec<(u32, BigInt, BigInt)>,
    pub first_failure: Option<u32>,
}

impl TraceReport {
    pub fn passes(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Verifies `tr(A^q) = n (B_d^q)_{0,0}` for `q = 0, ..., 2d - 1`.
/// Refuses graphs that are not `k`-regular and bipartite of girth `2d`.
pub fn trace_identity_check(g: &Graph, k: u32, d: u32) -> Result<TraceReport, GraphError> {
    let mut failures = Vec::new();
    if g.regular_degree() != Some(k as usize) {
        failures.push(Violation::NotRegular { expected: k, found: g.regular_degree() });
    }
    if !g.is_bipartite() {
        failures.push(Violation::NotBipartite);
    }
    if g.girth() != Some(2 * d as usize) {
        failures.push(Violation::GirthMismatch { expected: 2 * d as usize, found: g.girth() });
    }
    let b = match build_bd(k, d) {
        Ok(b) => b,
        Err(_) => {
            failures.push(Violation::DegreeParameterTooSmall { k });
            return Err(GraphError::Structural(failures));
        }
    };
    if !failures.is_empty() {
        return Err(GraphError::Structural(failures));
    }
    let n = BigInt::from(g.order());
    let walks = b.closed_walks(2 * d - 1);
    let mut power = IntMatrix::identity(g.order());
    let mut rows = Vec::with_capacity(walks.len());
    let mut first_failure = None;
    for (q, w) in walks.iter().enumerate() {
        let trace = power.trace();
        let expected = &n * w;
        if trace != expected && first_failure.is_none() {
            first_failure = Some(q as u32);
        }
        rows.push((q as u32, trace, expected));
        power = power.mul_adjacency(g);
    }
    Ok(TraceReport { rows, first_failure })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalPolynomialReport {
    /// Largest absolute entry of `(B^2 - k^2 I) H_{D-1}(B)`.
    pub residual: BigInt,
    /// Whether `B^2 - k^2 I` alone annihilates `B`.
    pub quadratic_factor_annihilates: bool,
    /// Whether `H_{D-1}(B)` alone annihilates `B`.
    pub dickson_factor_annihilates: bool,
    /// `e_0, B e_0, ..., B^D e_0` are linearly independent, so no nonzero
    /// polynomial of degree `<= D` annihilates `B`.
    pub cyclic_vector: bool,
}

impl MinimalPolynomialReport {
    pub fn annihilates(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn is_minimal(&self) -> bool {
        self.annihilates()
            && !self.quadratic_factor_annihilates
            && !self.dickson_factor_annihilates
            && self.cyclic_vector
    }
}

/// Checks that `(x^2 - k^2) H_{D-1}(x)` is the minimal polynomial of `B_D`.
pub fn minimal_polynomial_check(k: u32, diameter: u32) -> Result<MinimalPolynomialReport, ParameterError> {
    let b = build_bd(k, diameter)?;
    let m = b.matrix();
    let h = dickson_family(Family::H, k, diameter as usize - 1)?;
    let quadratic = IntPolynomial::from_coeffs(vec![-BigInt::from(k) * BigInt::from(k), BigInt::zero(), BigInt::one()]);
    let q_of_b = m.polynomial(&quadratic);
    let h_of_b = m.polynomial(&h);
    let residual = (&q_of_b * &h_of_b).max_abs();

    // Krylov vectors of e_0 are triangular: B^j e_0 vanishes below index j
    // and is nonzero at j whenever the subdiagonal has no zeros.
    let size = m.size();
    let mut v = vec![BigInt::zero(); size];
    v[0] = BigInt::one();
    let mut cyclic_vector = true;
    for j in 0..size {
        if v[j].is_zero() || v[j + 1..].iter().any(|x| !x.is_zero()) {
            cyclic_vector = false;
            break;
        }
        v = (0..size).map(|i| (0..size).map(|l| m.get(i, l) * &v[l]).sum()).collect();
    }

    Ok(MinimalPolynomialReport {
        residual,
        quadratic_factor_annihilates: q_of_b.is_zero(),
        dickson_factor_annihilates: h_of_b.is_zero(),
        cyclic_vector,
    })
}

/// Degree above which [`ld_entry00`] switches from binary64 to exact
/// rational arithmetic.
pub const EXTENDED_PRECISION_THRESHOLD: u32 = 9;

/// `(L_d(B_d))_{0,0}` where
/// `L_d(x) = (x^2 - k^2) (H_{d-1}(x) - H_{d-1}(theta)) / (x - theta)`.
///
/// The quotient is formed by synthetic division, so no restriction on
/// `theta` is needed. For `d > 9` the whole computation runs in exact
/// rational arithmetic on the binary64 value of `theta`.
pub fn ld_entry00(k: u32, d: u32, theta: f64) -> Result<f64, ParameterError> {
    let b = build_bd(k, d)?;
    let h = dickson_family(Family::H, k, d as usize - 1)?;
    let walks = b.closed_walks(d);
    let k2 = BigInt::from(k) * BigInt::from(k);
    if d <= EXTENDED_PRECISION_THRESHOLD {
        let lift = |c: &BigInt| c.to_f64().unwrap_or(f64::NAN);
        Ok(l_entry(&h, &k2, theta, &walks, lift))
    } else {
        let lift = |c: &BigInt| BigRational::from_integer(c.clone());
        let exact = l_entry(&h, &k2, rational_from_f64(theta), &walks, lift);
        Ok(exact.to_f64().unwrap_or(f64::NAN))
    }
}

fn l_entry<T, F>(h: &IntPolynomial, k2: &BigInt, theta: T, walks: &[BigInt], lift: F) -> T
where
    T: Num + Clone,
    F: Fn(&BigInt) -> T,
{
    let c: Vec<T> = h.coefficients().iter().map(&lift).collect();
    let m = c.len() - 1;
    // (p(x) - p(theta)) / (x - theta) = sum b_j x^j with b_{m-1} = c_m and
    // b_{j-1} = c_j + theta b_j.
    let mut quotient = vec![T::zero(); m];
    let mut acc = T::zero();
    for j in (1..=m).rev() {
        acc = c[j].clone() + theta.clone() * acc;
        quotient[j - 1] = acc.clone();
    }
    // Multiply by x^2 - k^2.
    let k2 = lift(k2);
    let mut l = vec![T::zero(); m + 2];
    for (j, q) in quotient.iter().enumerate() {
        l[j + 2] = l[j + 2].clone() + q.clone();
        l[j] = l[j].clone() - k2.clone() * q.clone();
    }
    l.iter()
        .zip(walks)
        .fold(T::zero(), |sum, (coef, w)| sum + coef.clone() * lift(w))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_shapes() {
        let b = build_bd(3, 3).unwrap();
        assert_eq!(
            b.matrix(),
            &IntMatrix::from_rows(&[&[0, 1, 0, 0], &[3, 0, 1, 0], &[0, 2, 0, 3], &[0, 0, 2, 0]])
        );
        let b = build_bd(4, 2).unwrap();
        assert_eq!(b.matrix(), &IntMatrix::from_rows(&[&[0, 1, 0], &[4, 0, 4], &[0, 3, 0]]));
        let b = build_bd(5, 5).unwrap();
        assert_eq!(b.matrix().get(2, 1), &BigInt::from(4));
        assert_eq!(b.matrix().get(2, 3), &BigInt::from(1));
        assert_eq!(b.matrix().get(4, 5), &BigInt::from(5));
        assert_eq!(b.matrix().get(5, 4), &BigInt::from(4));
        assert_eq!(build_bd(3, 1), Err(ParameterError::DiameterTooSmall { d: 1, min: 2 }));
        assert_eq!(build_bd(2, 3), Err(ParameterError::DegreeTooSmall { k: 2, min: 3 }));
    }

    #[test]
    fn closed_walk_counts() {
        let b = build_bd(3, 3).unwrap();
        assert_eq!(bd_entry00(&b, 0), BigInt::from(1));
        assert_eq!(bd_entry00(&b, 2), BigInt::from(3));
        assert_eq!(bd_entry00(&b, 3), BigInt::from(0));
        // Closed 4-walks in a tree of degree k: k^2 + k(k-1) = 15 for k = 3.
        assert_eq!(bd_entry00(&b, 4), BigInt::from(15));
    }

    #[test]
    fn minimality_witnesses() {
        let r = minimal_polynomial_check(3, 3).unwrap();
        assert!(r.annihilates());
        assert!(!r.quadratic_factor_annihilates);
        assert!(r.is_minimal());
        assert!(minimal_polynomial_check(4, 3).unwrap().is_minimal());
    }

    #[test]
    fn l_entry_examples() {
        assert!((ld_entry00(4, 3, 2.0).unwrap() + 24.0).abs() < 1e-9);
        assert!(ld_entry00(4, 3, 0.0).unwrap().abs() < 1e-9);
        let v = ld_entry00(3, 3, 2f64.sqrt()).unwrap();
        assert!((v + 6.0 * 2f64.sqrt()).abs() < 1e-9);
    }
}
