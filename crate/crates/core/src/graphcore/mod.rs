//! Simple undirected graphs and the structural machinery built on them.

mod catalog;
mod distance;
mod identities;
mod matrix;
mod spectral;
mod structure;

pub use catalog::{catalog, catalog_entries, CatalogEntry};
pub use distance::{distance_matrices, DistanceMatrixSet};
pub use identities::{verify_all_ones_identity, verify_path_count_identity, IdentityReport};
pub use matrix::IntMatrix;
pub use spectral::{
    adjacency_eigenvalues, crosscheck_eigenvalues, spectral_crosscheck, symmetric_eigenvalues,
    EigenvalueCheck, SpectralReport, SPECTRAL_TOLERANCE,
};
pub use structure::{antipodal_spectrum, structural_check, StructuralVerdict, Violation};

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::ParameterError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("unknown catalog graph `{0}`")]
    UnknownCatalogEntry(String),
    #[error("catalog graph `{name}` failed its load-time check: {detail}")]
    CatalogMismatch { name: &'static str, detail: &'static str },
    #[error("structural check failed: {0:?}")]
    Structural(Vec<Violation>),
}

/// Undirected simple graph on vertices `0..n` with sorted neighbour lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adjacency })
    }

    /// Builds a graph from neighbour lists, checking symmetry.
    pub fn from_adjacency(mut lists: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let n = lists.len();
        for (u, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(&v) = list.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if list.binary_search(&u).is_ok() {
                return Err(GraphError::SelfLoop(u));
            }
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::ParallelEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        for (u, list) in lists.iter().enumerate() {
            if let Some(&v) = list.iter().find(|&&v| lists[v].binary_search(&u).is_err()) {
                return Err(GraphError::Asymmetric(u, v));
            }
        }
        Ok(Graph { adjacency: lists })
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Common degree, if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adjacency.first()?.len();
        self.adjacency.iter().all(|l| l.len() == first).then_some(first)
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or_default();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut colour: Vec<Option<bool>> = vec![None; self.order()];
        for start in 0..self.order() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u] == Some(true);
                for &w in &self.adjacency[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Largest eccentricity, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.order() {
            for d in self.bfs_distances(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Length of a shortest cycle; `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        girth(self)
    }
}

/// Shortest cycle length via one BFS per vertex; `None` for forests.
///
/// A non-tree edge `u-w` met during the BFS from `r` closes a closed walk of
/// length `dist(u) + dist(w) + 1` through `r`, which contains a cycle no
/// longer than that. The minimum over all roots is attained by a root lying
/// on a shortest cycle, where the bound is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            // Every cycle closed from here has length at least 2 dist(u).
            if best.is_some_and(|b| 2 * dist[u] >= b) {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Moore bound `M(k, g)`: `1 + k + k(k-1) + ... + k(k-1)^((g-3)/2)` for odd
/// `g` and `2(1 + (k-1) + ... + (k-1)^((g-2)/2))` for even `g`.
pub fn moore_bound(k: u32, g: u32) -> Result<BigUint, ParameterError> {
    if k < 2 {
        return Err(ParameterError::DegreeTooSmall { k, min: 2 });
    }
    if g < 3 {
        return Err(ParameterError::GirthTooSmall { g });
    }
    let km1 = BigUint::from(k - 1);
    let geometric = |terms: u32| {
        let mut sum = BigUint::zero();
        let mut power = BigUint::one();
        for _ in 0..terms {
            sum += &power;
            power *= &km1;
        }
        sum
    };
    Ok(if g % 2 == 1 {
        BigUint::one() + BigUint::from(k) * geometric((g - 1) / 2)
    } else {
        BigUint::from(2u32) * geometric(g / 2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn moore_bound_values() {
        assert_eq!(moore_bound(3, 6).unwrap(), BigUint::from(14u32));
        assert_eq!(moore_bound(4, 6).unwrap(), BigUint::from(26u32));
        assert_eq!(moore_bound(3, 8).unwrap(), BigUint::from(30u32));
        assert_eq!(moore_bound(3, 5).unwrap(), BigUint::from(10u32));
        assert_eq!(moore_bound(7, 5).unwrap(), BigUint::from(50u32));
        for k in 2..12u32 {
            assert_eq!(moore_bound(k, 4).unwrap(), BigUint::from(2 * k));
            assert_eq!(moore_bound(k, 3).unwrap(), BigUint::from(k + 1));
        }
        assert_eq!(moore_bound(1, 6), Err(ParameterError::DegreeTooSmall { k: 1, min: 2 }));
        assert_eq!(moore_bound(3, 2), Err(ParameterError::GirthTooSmall { g: 2 }));
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(cycle(4).girth(), Some(4));
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(path.girth(), None);
        assert_eq!(Graph::empty(3).girth(), None);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::from_edges(3, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(GraphError::ParallelEdge(0, 1)));
        assert_eq!(
            Graph::from_adjacency(vec![vec![1], vec![]]),
            Err(GraphError::Asymmetric(0, 1))
        );
        assert!(Graph::from_adjacency(vec![vec![1], vec![0]]).is_ok());
    }

    #[test]
    fn bipartite_and_diameter() {
        assert!(cycle(6).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert_eq!(cycle(6).diameter(), Some(3));
        let split = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(split.diameter(), None);
        assert!(!split.is_connected());
        assert_eq!(complete(4).regular_degree(), Some(3));
        assert_eq!(complete(4).edge_count(), 6);
    }
}
