use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Graph;
use crate::polynomials::IntPolynomial;

/// Dense square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, BigInt::one())
    }

    pub fn scalar(n: usize, c: BigInt) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    /// All-ones matrix `J`.
    pub fn ones(n: usize) -> Self {
        IntMatrix { n, entries: vec![BigInt::one(); n * n] }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Self::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self::from_fn(g.order(), |i, j| if g.has_edge(i, j) { BigInt::one() } else { BigInt::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Largest absolute entry; zero for the empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(Signed::abs).max().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntMatrix { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn add_scalar_identity(&self, c: &BigInt) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] += c;
        }
        m
    }

    /// `self * A(g)` using the sparse neighbour lists of `g`.
    pub fn mul_adjacency(&self, g: &Graph) -> Self {
        assert_eq!(self.n, g.order(), "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            let row = self.row(i);
            for j in 0..n {
                let acc: BigInt = g.neighbors(j).iter().map(|&w| &row[w]).sum();
                out.entries[i * n + j] = acc;
            }
        }
        out
    }

    /// `p(A(g))` by Horner's scheme over sparse adjacency products.
    pub fn polynomial_of_adjacency(g: &Graph, p: &IntPolynomial) -> Self {
        let n = g.order();
        let mut acc = Self::zeros(n);
        for c in p.coefficients().iter().rev() {
            acc = acc.mul_adjacency(g).add_scalar_identity(c);
        }
        acc
    }

    /// `p(self)` by Horner's scheme with dense products.
    pub fn polynomial(&self, p: &IntPolynomial) -> Self {
        let mut acc = Self::zeros(self.n);
        for c in p.coefficients().iter().rev() {
            acc = (&acc * self).add_scalar_identity(c);
        }
        acc
    }

    pub fn pow(&self, q: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..q {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;
    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "dimension mismatch");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for l in 0..n {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(l, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }
}
