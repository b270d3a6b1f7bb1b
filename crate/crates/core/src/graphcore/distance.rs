use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Graph, GraphError, IntMatrix};

/// The distance matrices `A_0, ..., A_{d_max}` of a connected graph, where
/// `A_i(u, v) = 1` exactly when `dist(u, v) = i`.
///
/// Only the distance table is stored; layers are materialised on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrixSet {
    n: usize,
    d_max: usize,
    dist: Vec<usize>,
}

impl DistanceMatrixSet {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Largest distance present, i.e. the diameter.
    pub fn d_max(&self) -> usize {
        self.d_max
    }

    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v]
    }

    /// `A_i`; the zero matrix for `i > d_max`.
    pub fn layer(&self, i: usize) -> IntMatrix {
        IntMatrix::from_fn(self.n, |u, v| {
            if self.distance(u, v) == i { BigInt::one() } else { BigInt::zero() }
        })
    }

    /// Vertices at distance exactly `i` from `u`, ascending.
    pub fn sphere(&self, u: usize, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.distance(u, v) == i).collect()
    }

    pub fn sphere_size(&self, u: usize, i: usize) -> usize {
        (0..self.n).filter(|&v| self.distance(u, v) == i).count()
    }
}

/// BFS from every vertex. Rejects disconnected graphs.
pub fn distance_matrices(g: &Graph) -> Result<DistanceMatrixSet, GraphError> {
    let n = g.order();
    let mut dist = Vec::with_capacity(n * n);
    let mut d_max = 0;
    for u in 0..n {
        for d in g.bfs_distances(u) {
            let d = d.ok_or(GraphError::Disconnected)?;
            d_max = d_max.max(d);
            dist.push(d);
        }
    }
    Ok(DistanceMatrixSet { n, d_max, dist })
}
