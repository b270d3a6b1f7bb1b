use std::collections::VecDeque;

use cage_spectra::graphcore::{
    adjacency_eigenvalues, antipodal_spectrum, catalog, catalog_entries, crosscheck_eigenvalues, distance_matrices,
    spectral_crosscheck, structural_check, verify_all_ones_identity, verify_path_count_identity, IntMatrix, Violation,
};
use cage_spectra::intersection::trace_identity_check;
use cage_spectra::{moore_bound, Graph, GraphError};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

/// BFS distance from `u` to `v` ignoring the edge `u-v` itself.
fn distance_without_edge(g: &Graph, u: usize, v: usize) -> Option<usize> {
    let mut dist = vec![None; g.order()];
    dist[u] = Some(0);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if (x == u && y == v) || (x == v && y == u) || dist[y].is_some() {
                continue;
            }
            dist[y] = Some(dist[x].unwrap() + 1);
            queue.push_back(y);
        }
    }
    dist[v]
}

/// Shortest cycle through some edge: one plus the distance between its
/// endpoints once the edge is removed.
fn girth_oracle(g: &Graph) -> Option<usize> {
    g.edges().filter_map(|(u, v)| distance_without_edge(g, u, v)).map(|d| d + 1).min()
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..=12).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Counts closed walks of length `q` at `v` by direct enumeration.
fn closed_walks_at(g: &Graph, v: usize, q: usize) -> u64 {
    fn go(g: &Graph, at: usize, target: usize, left: usize) -> u64 {
        if left == 0 {
            return u64::from(at == target);
        }
        g.neighbors(at).iter().map(|&w| go(g, w, target, left - 1)).sum()
    }
    go(g, v, v, q)
}

proptest! {
    #[test]
    fn girth_matches_edge_deletion_oracle(g in graph_strategy()) {
        prop_assert_eq!(g.girth(), girth_oracle(&g));
    }

    #[test]
    fn antipodal_spectrum_is_consistent(c in 1u64..200, half in 1u32..10) {
        let e = 2 * half;
        // n chosen so that (e + 2) divides 2n.
        let n = c * u64::from(e + 2) / 2;
        let spectrum = antipodal_spectrum(n, e).unwrap();
        let total: u64 = spectrum.iter().map(|&(_, m)| m).sum();
        prop_assert_eq!(total, n);
        let trace: i128 = spectrum.iter().map(|&(v, m)| i128::from(v) * i128::from(m)).sum();
        prop_assert_eq!(trace, 0);
    }
}

#[test]
fn distance_layers_partition_all_ones() {
    for entry in catalog_entries() {
        let g = entry.load().unwrap();
        let set = distance_matrices(&g).unwrap();
        let mut sum = IntMatrix::zeros(g.order());
        for i in 0..=set.d_max() {
            let layer = set.layer(i);
            assert!(layer.is_symmetric(), "{}", entry.name);
            sum = &sum + &layer;
        }
        assert_eq!(sum, IntMatrix::ones(g.order()), "{}", entry.name);
    }
}

#[test]
fn catalog_moore_graphs_satisfy_identities() {
    for (name, k, d) in [("heawood", 3, 3), ("tutte_coxeter", 3, 4), ("pg23_incidence", 4, 3)] {
        let g = catalog(name).unwrap();
        let verdict = structural_check(&g, k, d, 0);
        assert!(verdict.passes(), "{name}: {:?}", verdict.failures);
        assert_eq!(BigUint::from(g.order()), moore_bound(k, 2 * d).unwrap());
        assert!(verify_path_count_identity(&g, k, d, 0).unwrap().holds(), "{name}");
        assert!(verify_all_ones_identity(&g, k, d, 0).unwrap().holds(), "{name}");
        let spectral = spectral_crosscheck(&g, k, d, 0).unwrap();
        assert!(spectral.passes(), "{name}: {}", spectral.max_deviation);
        assert_eq!(spectral.trivial_count, 2);
    }
}

#[test]
fn trace_identity_against_enumerated_walks() {
    for (name, k, d) in [("heawood", 3u32, 3u32), ("pg23_incidence", 4, 3)] {
        let g = catalog(name).unwrap();
        let report = trace_identity_check(&g, k, d).unwrap();
        assert!(report.passes());
        for (q, trace, _) in &report.rows {
            let walks: u64 = (0..g.order()).map(|v| closed_walks_at(&g, v, *q as usize)).sum();
            assert_eq!(trace, &BigInt::from(walks), "{name} q={q}");
        }
    }
}

#[test]
fn identity_verifiers_refuse_wrong_parameters() {
    let g = catalog("heawood").unwrap();
    let err = verify_path_count_identity(&g, 3, 4, 0).unwrap_err();
    assert!(matches!(err, GraphError::Structural(ref v) if v.iter().any(|x| matches!(x, Violation::GirthMismatch { .. }))));
    assert!(verify_all_ones_identity(&g, 4, 3, 0).is_err());
    assert!(trace_identity_check(&g, 3, 4).is_err());
}

#[test]
fn moebius_kantor_conditional_checks() {
    let g = catalog("moebius_kantor").unwrap();
    let verdict = structural_check(&g, 3, 3, 2);
    if !verdict.graph_conditions_pass() {
        return;
    }
    assert_eq!(verdict.clique_count, Some(8));
    let eig = adjacency_eigenvalues(&g);
    let report = crosscheck_eigenvalues(&eig, 3, 3, 2);
    assert!(report.passes(), "max deviation {}", report.max_deviation);
    for check in &report.checks {
        let t = check.theta.abs();
        assert!((t - 1.0).abs() < 1e-8 || (t - 3f64.sqrt()).abs() < 1e-8, "theta = {}", check.theta);
    }
}
