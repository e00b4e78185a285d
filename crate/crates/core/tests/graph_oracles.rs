mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use extracover::cover::build_cover;
use extracover::graph::{girth, has_4cycle, has_cycle_of_length, Girth, Graph};
use extracover::{GroupSign, Prime};

#[test]
fn girth_and_cycles_match_subset_oracle() {
    let corpus = common::graph_corpus();
    assert!(corpus.len() > 1000);
    for x in &corpus {
        let lengths = common::cycle_lengths(x);
        for (len, &present) in lengths.iter().enumerate().skip(3) {
            assert_eq!(has_cycle_of_length(x, len), present, "len {len} on {x:?}");
        }
        let want = match common::brute_girth(x) {
            Some(g) if g <= 12 => Girth::Exact(g),
            _ => Girth::Greater(12),
        };
        assert_eq!(girth(x, 12), want, "{x:?}");
        assert_eq!(has_4cycle(x), lengths.get(4).copied().unwrap_or(false));
    }
}

#[test]
fn girth_cap_is_respected() {
    let c9 = extracover::graph::cycle_graph(9);
    assert_eq!(girth(&c9, 9), Girth::Exact(9));
    assert_eq!(girth(&c9, 8), Girth::Greater(8));
}

#[test]
fn four_cycle_matches_tuple_scan_up_to_30_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0004_c1c1);
    for n in [13usize, 18, 24, 30] {
        for density in [0.08, 0.15, 0.3] {
            for _ in 0..10 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(density))
                    .collect();
                let x = Graph::from_edges(n, edges).unwrap();
                assert_eq!(has_4cycle(&x), common::brute_has_4cycle(&x));
            }
        }
    }
    for sign in GroupSign::BOTH {
        let cm = build_cover(Prime::new(3).unwrap(), 1, sign).unwrap();
        assert!(!common::brute_has_4cycle(&cm.total));
        assert!(!has_4cycle(&cm.total));
        assert!(common::brute_has_4cycle(&cm.base));
    }
}
