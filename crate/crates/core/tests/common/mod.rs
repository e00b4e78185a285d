//! Independent oracles shared by the integration tests and the acceptance
//! harness. None of them call into the library's search or eigen routines.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use extracover::graph::{complete_graph, cycle_graph, path_graph, Graph};

/// Cycle lengths present in `x`, by a Held–Karp style subset dynamic
/// programme: `reach[mask][v]` says some simple path from `min(mask)` to `v`
/// uses exactly the vertices of `mask`.
pub fn cycle_lengths(x: &Graph) -> Vec<bool> {
    let n = x.n();
    assert!(n <= 14, "subset oracle is exponential");
    let adj: Vec<u32> = (0..n)
        .map(|v| x.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut present = vec![false; n + 1];
    let full = 1usize << n;
    let mut reach = vec![0u32; full];
    for r in 0..n {
        reach[1 << r] = 1 << r;
    }
    for mask in 1..full {
        let ends = reach[mask];
        if ends == 0 {
            continue;
        }
        let root = mask.trailing_zeros() as usize;
        let size = mask.count_ones() as usize;
        for (v, &nbrs) in adj.iter().enumerate() {
            if ends >> v & 1 == 0 {
                continue;
            }
            if size >= 3 && nbrs >> root & 1 == 1 {
                present[size] = true;
            }
            // extend only by vertices above the root so the root stays minimal
            let mut next = nbrs & !(mask as u32) & !((1u32 << (root + 1)) - 1);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                reach[mask | 1 << w] |= 1 << w;
            }
        }
    }
    present
}

pub fn brute_girth(x: &Graph) -> Option<usize> {
    cycle_lengths(x).iter().position(|&b| b)
}

/// 4-cycle check by scanning ordered 4-tuples.
pub fn brute_has_4cycle(x: &Graph) -> bool {
    let n = x.n();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
                    if distinct
                        && x.has_edge(a, b)
                        && x.has_edge(b, c)
                        && x.has_edge(c, d)
                        && x.has_edge(d, a)
                    {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges).unwrap()
}

fn hypercube(d: usize) -> Graph {
    let n = 1 << d;
    let edges = (0..n).flat_map(|v| (0..d).map(move |i| (v, v ^ (1 << i))));
    Graph::from_edges(n, edges).unwrap()
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j)))).unwrap()
}

/// Every graph on at most 5 labelled vertices, some named graphs, and
/// seeded random graphs on 6 to 12 vertices at several densities.
pub fn graph_corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for bits in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out.push(petersen());
    out.push(hypercube(3));
    out.push(complete_bipartite(3, 3));
    out.push(complete_bipartite(2, 5));
    for n in 6..=12 {
        out.push(cycle_graph(n));
        out.push(path_graph(n));
        out.push(complete_graph(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6c6f_6f70);
    for n in 6..=12usize {
        for density in [0.15, 0.25, 0.4, 0.6] {
            for _ in 0..25 {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(density))
                    .collect();
                out.push(Graph::from_edges(n, edges).unwrap());
            }
        }
    }
    out
}

/// Random Hermitian matrix, row-major, with entries of modulus at most 1.
pub fn random_hermitian(n: usize, rng: &mut ChaCha8Rng, real: bool) -> Vec<Complex64> {
    let mut m = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        m[i * n + i] = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
        for j in i + 1..n {
            let im = if real { 0.0 } else { rng.gen_range(-1.0..1.0) };
            let z = Complex64::new(rng.gen_range(-1.0..1.0), im);
            m[i * n + j] = z;
            m[j * n + i] = z.conj();
        }
    }
    m
}

/// `det(M - xI)` by Gaussian elimination with partial pivoting. Real for
/// Hermitian `M` and real `x`.
pub fn char_poly_at(n: usize, m: &[Complex64], x: f64) -> f64 {
    let mut a: Vec<Complex64> = m.to_vec();
    for i in 0..n {
        a[i * n + i] -= x;
    }
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&r, &s| a[r * n + col].norm().total_cmp(&a[s * n + col].norm()))
            .unwrap();
        if a[pivot * n + col].norm() == 0.0 {
            return 0.0;
        }
        if pivot != col {
            for k in 0..n {
                a.swap(pivot * n + k, col * n + k);
            }
            det = -det;
        }
        let d = a[col * n + col];
        det *= d;
        for r in col + 1..n {
            let f = a[r * n + col] / d;
            for k in col..n {
                let v = a[col * n + k];
                a[r * n + k] -= f * v;
            }
        }
    }
    det.re
}

/// Roots of the characteristic polynomial, ascending: sign changes on a
/// grid over `[-‖M‖_F, ‖M‖_F]`, then bisection. The grid is refined until
/// `n` roots are bracketed, which needs simple roots; generic random
/// matrices have them.
pub fn char_poly_roots(n: usize, m: &[Complex64]) -> Vec<f64> {
    let radius = m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt() + 1e-3;
    let mut steps = 1024;
    loop {
        let roots = bracket_roots(n, m, radius, steps);
        if roots.len() >= n || steps >= 1 << 20 {
            return roots;
        }
        steps *= 4;
    }
}

fn bracket_roots(n: usize, m: &[Complex64], radius: f64, steps: usize) -> Vec<f64> {
    let h = 2.0 * radius / steps as f64;
    let mut roots = Vec::new();
    let mut x0 = -radius;
    let mut f0 = char_poly_at(n, m, x0);
    for k in 1..=steps {
        let x1 = -radius + k as f64 * h;
        let f1 = char_poly_at(n, m, x1);
        if f0.signum() != f1.signum() {
            let (mut lo, mut hi, mut flo) = (x0, x1, f0);
            for _ in 0..100 {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let fm = char_poly_at(n, m, mid);
                if fm.signum() == flo.signum() {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        x0 = x1;
        f0 = f1;
    }
    roots
}

/// Multiset equality of two real lists within `tol`, after sorting.
pub fn same_multiset(a: &[f64], b: &[f64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}
