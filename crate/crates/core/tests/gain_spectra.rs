mod common;

use extracover::cover::{build_cover, verify_cover};
use extracover::gain::{
    cover_from_gain, degree_bound_search, gain_for_dims, gain_from_cocycle, twisted_adjacency,
};
use extracover::graph::{cartesian_product, cycle_graph, Graph};
use extracover::spectral::{hermitian_eigenvalues, symmetric_eigenvalues};
use extracover::{GroupSign, Prime};

fn prime(p: u32) -> Prime {
    Prime::new(p).unwrap()
}

#[test]
fn cover_spectrum_is_union_of_twisted_spectra() {
    for (p, d) in [(3u32, 1usize), (3, 2), (5, 1)] {
        for sign in GroupSign::BOTH {
            let cm = build_cover(prime(p), d, sign).unwrap();
            let n = cm.total.n();
            let cover = symmetric_eigenvalues(n, &cm.total.adjacency_matrix()).unwrap();
            let gg = gain_from_cocycle(prime(p), d, sign).unwrap();
            let mut union = Vec::with_capacity(n);
            for k in 0..p {
                union.extend(
                    hermitian_eigenvalues(&twisted_adjacency(&gg, k))
                        .unwrap()
                        .eigenvalues,
                );
            }
            assert!(
                common::same_multiset(&cover, &union, 1e-8),
                "p={p} d={d} {sign}"
            );
        }
    }
}

#[test]
fn gain_cover_is_the_cayley_cover() {
    for (p, d) in [(3u32, 1usize), (3, 2), (5, 1)] {
        for sign in GroupSign::BOTH {
            let gg = gain_from_cocycle(prime(p), d, sign).unwrap();
            let lifted = cover_from_gain(&gg);
            let cayley = build_cover(prime(p), d, sign).unwrap();
            assert_eq!(lifted, cayley);
            assert_eq!(verify_cover(&lifted), Ok(p as usize));
        }
    }
}

/// Every directed simple cycle of length `len` in `base`, each rotation and
/// direction listed.
fn directed_cycles(base: &Graph, len: usize) -> Vec<Vec<usize>> {
    fn go(base: &Graph, len: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if path.len() == len {
            if base.has_edge(u, path[0]) {
                out.push(path.clone());
            }
            return;
        }
        for &w in base.neighbors(u) {
            if !path.contains(&w) {
                path.push(w);
                go(base, len, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..base.n() {
        go(base, len, &mut vec![v], &mut out);
    }
    out
}

#[test]
fn short_cycles_of_the_minus_gain_graph_have_nonzero_gain() {
    let gg = gain_from_cocycle(prime(3), 1, GroupSign::Minus).unwrap();
    for len in [3, 4] {
        let cycles = directed_cycles(gg.base(), len);
        assert!(!cycles.is_empty());
        for c in &cycles {
            assert!(!gg.walk_gain(c).unwrap().is_zero(), "{c:?}");
        }
    }
    // the plus gain graph has zero-gain triangles, lifting to 3-cycles
    let plus = gain_from_cocycle(prime(3), 1, GroupSign::Plus).unwrap();
    assert!(directed_cycles(plus.base(), 3)
        .iter()
        .any(|c| plus.walk_gain(c).unwrap().is_zero()));
}

#[test]
fn gains_are_antisymmetric() {
    let gg = gain_from_cocycle(prime(5), 1, GroupSign::Minus).unwrap();
    for (u, v, g) in gg.arcs() {
        assert_eq!(gg.gain(v, u).unwrap(), -g);
    }
}

/// Smallest `s` such that every `s`-subset of `x` induces a subgraph of
/// maximum degree at least `degree`, by exhaustive subset enumeration.
fn true_threshold(x: &Graph, degree: usize) -> usize {
    let n = x.n();
    let mut worst = vec![usize::MAX; n + 1];
    for mask in 1u32..1 << n {
        let size = mask.count_ones() as usize;
        let max_deg = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| {
                x.neighbors(v)
                    .iter()
                    .filter(|&&w| mask >> w & 1 == 1)
                    .count()
            })
            .max()
            .unwrap();
        worst[size] = worst[size].min(max_deg);
    }
    (1..=n).find(|&s| worst[s] >= degree).unwrap()
}

#[test]
fn interlacing_thresholds_against_exhaustive_truth_on_c3_squared() {
    let torus = cartesian_product(&cycle_graph(3), &cycle_graph(3));
    assert_eq!(true_threshold(&torus, 1), 4);
    assert_eq!(true_threshold(&torus, 2), 5);
    assert_eq!(true_threshold(&torus, 3), 7);
    // (0,0), (0,1), (1,0), (1,1) induce a 4-cycle: four vertices need not force degree 3
    let square = torus.induced_subgraph(&[0, 1, 3, 4]);
    assert_eq!(square.max_degree(), 2);
    assert_eq!(square.edge_count(), 4);

    let search = degree_bound_search(prime(3), 2, &GroupSign::BOTH, None).unwrap();
    for degree in 1..=3 {
        let bound = search.best_for_degree(degree).unwrap().min_s;
        assert!(bound >= true_threshold(&torus, degree as usize));
    }
    assert_eq!(search.best_for_degree(3).unwrap().min_s, 7);
}

#[test]
fn odd_dimension_gain_graphs_are_cycle_powers() {
    let gg = gain_for_dims(prime(3), 3, GroupSign::Minus).unwrap();
    assert_eq!(gg.base().n(), 27);
    assert_eq!(gg.base().regular_degree(), Some(6));
    assert!(gg.base().is_connected());
    let lifted = cover_from_gain(&gg);
    assert_eq!(verify_cover(&lifted), Ok(3));
}
