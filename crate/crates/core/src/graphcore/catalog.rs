//! Small embedded graphs used as exact regression anchors.

use alloc::string::ToString;
use alloc::vec::Vec;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
    pub order: usize,
    pub degree: usize,
    pub girth: usize,
    build: fn() -> Graph,
}

impl CatalogEntry {
    /// Builds the graph and checks it against the recorded metadata.
    pub fn load(&self) -> Result<Graph, GraphError> {
        let g = (self.build)();
        let fail = |detail| Err(GraphError::CatalogMismatch { name: self.name, detail });
        if g.order() != self.order {
            return fail("vertex count");
        }
        if g.regular_degree() != Some(self.degree) {
            return fail("degree");
        }
        if g.girth() != Some(self.girth) {
            return fail("girth");
        }
        Ok(g)
    }
}

const ENTRIES: [CatalogEntry; 4] = [
    CatalogEntry {
        name: "heawood",
        description: "Heawood graph: point-line incidence graph of the Fano plane, the (3,6)-cage",
        order: 14,
        degree: 3,
        girth: 6,
        build: heawood,
    },
    CatalogEntry {
        name: "tutte_coxeter",
        description: "Tutte-Coxeter graph: duad-syntheme incidence on six points, the (3,8)-cage",
        order: 30,
        degree: 3,
        girth: 8,
        build: tutte_coxeter,
    },
    CatalogEntry {
        name: "moebius_kantor",
        description: "Moebius-Kantor graph: generalized Petersen graph GP(8,3)",
        order: 16,
        degree: 3,
        girth: 6,
        build: moebius_kantor,
    },
    CatalogEntry {
        name: "pg23_incidence",
        description: "Point-line incidence graph of PG(2,3), the (4,6)-cage",
        order: 26,
        degree: 4,
        girth: 6,
        build: pg23_incidence,
    },
];

pub fn catalog_entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

/// Looks up and loads an embedded graph by name.
pub fn catalog(name: &str) -> Result<Graph, GraphError> {
    ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| GraphError::UnknownCatalogEntry(name.to_string()))?
        .load()
}

/// Incidence graph of the cyclic projective plane of order `q` generated by
/// a perfect difference set modulo `q^2 + q + 1`. Points are `0..v`, lines
/// `v..2v`.
fn difference_set_incidence(difference_set: &[usize]) -> Graph {
    let q = difference_set.len() - 1;
    let v = q * q + q + 1;
    let edges = (0..v).flat_map(|line| difference_set.iter().map(move |&s| ((line + s) % v, v + line)));
    Graph::from_edges(2 * v, edges).expect("valid incidence structure")
}

fn heawood() -> Graph {
    difference_set_incidence(&[0, 1, 3])
}

fn pg23_incidence() -> Graph {
    difference_set_incidence(&[0, 1, 3, 9])
}

fn moebius_kantor() -> Graph {
    let outer = (0..8).map(|i| (i, (i + 1) % 8));
    let spokes = (0..8).map(|i| (i, 8 + i));
    let inner = (0..8).map(|i| (8 + i, 8 + (i + 3) % 8));
    Graph::from_edges(16, outer.chain(spokes).chain(inner)).expect("valid GP(8,3)")
}

/// Duads are the 15 two-element subsets of `{0..6}`, synthemes the 15
/// partitions of it into three duads; a duad is adjacent to every syntheme
/// containing it.
fn tutte_coxeter() -> Graph {
    let duads: Vec<(usize, usize)> = (0..6).flat_map(|a| (a + 1..6).map(move |b| (a, b))).collect();
    let mut synthemes: Vec<[usize; 3]> = Vec::new();
    for (i, &(a, b)) in duads.iter().enumerate() {
        if a != 0 {
            continue;
        }
        for (j, &(c, d)) in duads.iter().enumerate() {
            if c == a || c == b || d == a || d == b {
                continue;
            }
            for (l, &(x, y)) in duads.iter().enumerate().skip(j + 1) {
                if [a, b, c, d].contains(&x) || [a, b, c, d].contains(&y) {
                    continue;
                }
                if c < x {
                    synthemes.push([i, j, l]);
                }
            }
        }
    }
    let edges = synthemes
        .iter()
        .enumerate()
        .flat_map(|(s, members)| members.iter().map(move |&duad| (duad, 15 + s)));
    Graph::from_edges(30, edges).expect("valid duad-syntheme incidence")
}
