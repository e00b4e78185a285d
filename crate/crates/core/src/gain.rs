//! `Z_p`-gain graphs from the cocycles `κ_±`, their covers, root-of-unity
//! twisted adjacency matrices, and the degree-bound search over twists.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::cover::{base_graph, connection_set_s, odd_base_vertices, CoveringMap};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::groups::{kappa, FiniteGroup, GroupSign, VectorGroup};
use crate::modular::{Prime, ZpScalar};
use crate::spectral::{
    hermitian_eigenvalues, huang_degree_bound, DegreeBoundTable, HermitianMatrix, SpectrumReport,
    Threshold, MAX_ORDER,
};

/// A graph with an antisymmetric `Z_p`-valued arc labelling:
/// `gain(u, v) = -gain(v, u)` on every arc and nothing off the arcs.
///
/// Lifting convention: walking the arc `u -> v` adds `gain(u, v)` to the
/// fibre coordinate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GainGraph {
    base: Graph,
    p: Prime,
    /// `gains[u][i]` labels the arc from `u` to `base.neighbors(u)[i]`.
    gains: Vec<Vec<Option<u32>>>,
}

impl GainGraph {
    /// Builds a gain graph from labels on one orientation of each arc; the
    /// reverse arc receives the negated label.
    pub fn new(
        base: Graph,
        p: Prime,
        arcs: impl IntoIterator<Item = (usize, usize, ZpScalar)>,
    ) -> Result<Self> {
        let mut gains: Vec<Vec<Option<u32>>> =
            (0..base.n()).map(|u| vec![None; base.degree(u)]).collect();
        let set =
            |gains: &mut Vec<Vec<Option<u32>>>, u: usize, v: usize, g: ZpScalar| -> Result<()> {
                let idx = base
                    .neighbors(u)
                    .binary_search(&v)
                    .map_err(|_| Error::InvalidParameter(format!("({u}, {v}) is not an arc")))?;
                match gains[u][idx] {
                    Some(old) if old != g.value() => Err(Error::InconsistentGain(u, v)),
                    _ => {
                        gains[u][idx] = Some(g.value());
                        Ok(())
                    }
                }
            };
        for (u, v, g) in arcs {
            if g.prime() != p {
                return Err(Error::ModulusMismatch(p.get(), g.prime().get()));
            }
            set(&mut gains, u, v, g)?;
            set(&mut gains, v, u, -g)?;
        }
        if let Some(u) = gains.iter().position(|row| row.iter().any(Option::is_none)) {
            let missing = gains[u].iter().position(Option::is_none).unwrap();
            return Err(Error::InvalidParameter(format!(
                "arc ({u}, {}) has no gain",
                base.neighbors(u)[missing]
            )));
        }
        Ok(GainGraph { base, p, gains })
    }

    /// Zero gain on every arc.
    pub fn trivial(base: Graph, p: Prime) -> Self {
        let gains = (0..base.n())
            .map(|u| vec![Some(0); base.degree(u)])
            .collect();
        GainGraph { base, p, gains }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn gain(&self, u: usize, v: usize) -> Option<ZpScalar> {
        let idx = self.base.neighbors(u).binary_search(&v).ok()?;
        self.gains[u][idx].map(|g| ZpScalar::new(i64::from(g), self.p))
    }

    /// Arcs `(u, v, gain)` in adjacency order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, ZpScalar)> + '_ {
        (0..self.base.n()).flat_map(move |u| {
            self.base
                .neighbors(u)
                .iter()
                .zip(&self.gains[u])
                .map(move |(&v, g)| (u, v, ZpScalar::new(i64::from(g.unwrap()), self.p)))
        })
    }

    /// Sum of gains along the closed walk `walk[0] -> walk[1] -> … -> walk[0]`.
    pub fn walk_gain(&self, walk: &[usize]) -> Option<ZpScalar> {
        let mut acc = ZpScalar::zero(self.p);
        for i in 0..walk.len() {
            acc = acc + self.gain(walk[i], walk[(i + 1) % walk.len()])?;
        }
        Some(acc)
    }

    /// Restriction to the induced subgraph on `vertices`.
    pub fn restrict(&self, vertices: &[usize]) -> GainGraph {
        let base = self.base.induced_subgraph(vertices);
        let gains = vertices
            .iter()
            .enumerate()
            .map(|(i, &u)| {
                base.neighbors(i)
                    .iter()
                    .map(|&j| Some(self.gain(u, vertices[j]).unwrap().value()))
                    .collect()
            })
            .collect();
        GainGraph {
            base,
            p: self.p,
            gains,
        }
    }
}

/// `(Cay(Z_p^{2d}, S ∪ -S), f_±)` with `f_±(g, s+g) = κ_±(s, g)` for `s ∈ S`.
pub fn gain_from_cocycle(p: Prime, d: usize, sign: GroupSign) -> Result<GainGraph> {
    let s = connection_set_s(p, d)?;
    let base = base_graph(p, d)?;
    let group = VectorGroup::new(p, 2 * d)?;
    let gens: Vec<_> = s.elements().into_iter().map(|v| v.split_at(d)).collect();
    let mut arcs = Vec::with_capacity(base.n() * gens.len());
    for g_id in 0..group.order() {
        let g = group.element(g_id);
        let (c, e) = g.split_at(d);
        for (a, b) in &gens {
            let h = group.id_of(&(&a.concat(b) + &g));
            arcs.push((g_id, h, kappa(sign, (a, b), (&c, &e))?));
        }
    }
    GainGraph::new(base, p, arcs)
}

/// The cover on `V × Z_p`: `(v, j) ~ (u, j + gain(v, u))`, with `(v, j)`
/// numbered `v·p + j`.
pub fn cover_from_gain(gg: &GainGraph) -> CoveringMap {
    let p = gg.p.get() as usize;
    let n = gg.base.n();
    let mut edges = Vec::with_capacity(p * gg.base.edge_count());
    for (v, u, g) in gg.arcs() {
        if v < u {
            for j in 0..p {
                edges.push((v * p + j, u * p + (j + g.value() as usize) % p));
            }
        }
    }
    let total = Graph::from_edges(n * p, edges).expect("valid cover");
    CoveringMap {
        total,
        base: gg.base.clone(),
        gamma: (0..n * p).map(|x| x / p).collect(),
    }
}

/// `A_k(u, v) = ω^{k·gain(u, v)}` on arcs, `ω = e^{2πi/p}`.
pub fn twisted_adjacency(gg: &GainGraph, k: u32) -> HermitianMatrix {
    let n = gg.base.n();
    let p = gg.p.get();
    let roots: Vec<Complex64> = (0..p)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * f64::from(j) / f64::from(p)))
        .collect();
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for (u, v, g) in gg.arcs() {
        data[u * n + v] = roots[((k % p) * g.value() % p) as usize];
    }
    HermitianMatrix::new(n, data).expect("antisymmetric gains give a Hermitian matrix")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TwistBound {
    pub sign: GroupSign,
    pub twist: u32,
    pub spectrum: SpectrumReport,
    pub table: DegreeBoundTable,
    pub thresholds: Vec<Threshold>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BestThreshold {
    pub degree: i64,
    pub min_s: usize,
    /// `(sign, twist)` pairs achieving `min_s`.
    pub achieved_by: Vec<(GroupSign, u32)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundSearch {
    pub p: u32,
    /// Number of cycle factors of the base `C_p^dims`.
    pub dims: usize,
    pub n: usize,
    pub twists: Vec<TwistBound>,
    pub best: Vec<BestThreshold>,
}

/// Gain graph for `C_p^dims`: the full gain graph when `dims` is even, and
/// its restriction to the canonical induced `C_p^{dims}` when odd.
pub fn gain_for_dims(p: Prime, dims: usize, sign: GroupSign) -> Result<GainGraph> {
    if dims == 0 {
        return Err(Error::ZeroDimension);
    }
    let d = dims.div_ceil(2);
    let gg = gain_from_cocycle(p, d, sign)?;
    if dims.is_multiple_of(2) {
        Ok(gg)
    } else {
        Ok(gg.restrict(&odd_base_vertices(p, d)?))
    }
}

/// Runs the interlacing bound for each requested sign and twist (all
/// nontrivial twists when `twists` is `None`) and records the best threshold
/// per degree.
pub fn degree_bound_search(
    p: Prime,
    dims: usize,
    signs: &[GroupSign],
    twists: Option<&[u32]>,
) -> Result<BoundSearch> {
    if !p.is_odd() {
        return Err(Error::EvenPrime);
    }
    let n = (p.get() as u128).pow(dims as u32);
    if n > MAX_ORDER as u128 {
        return Err(Error::SizeLimit {
            size: n,
            limit: MAX_ORDER as u128,
        });
    }
    let all: Vec<u32> = (1..p.get()).collect();
    let twists = twists.unwrap_or(&all);
    if let Some(&k) = twists.iter().find(|&&k| k >= p.get()) {
        return Err(Error::InvalidParameter(format!(
            "twist {k} not in [0, {p})"
        )));
    }
    let mut results = Vec::new();
    for &sign in signs {
        let gg = gain_for_dims(p, dims, sign)?;
        for &k in twists {
            let spectrum = hermitian_eigenvalues(&twisted_adjacency(&gg, k))?;
            let table = huang_degree_bound(&spectrum);
            let thresholds = table.thresholds();
            results.push(TwistBound {
                sign,
                twist: k,
                spectrum,
                table,
                thresholds,
            });
        }
    }
    let top = results
        .iter()
        .flat_map(|r| r.thresholds.iter().map(|t| t.degree))
        .max()
        .unwrap_or(0);
    let mut best = Vec::new();
    for degree in 1..=top {
        let hits: Vec<(usize, GroupSign, u32)> = results
            .iter()
            .filter_map(|r| {
                r.table
                    .min_size_for_degree(degree)
                    .map(|s| (s, r.sign, r.twist))
            })
            .collect();
        if let Some(min_s) = hits.iter().map(|h| h.0).min() {
            best.push(BestThreshold {
                degree,
                min_s,
                achieved_by: hits
                    .iter()
                    .filter(|h| h.0 == min_s)
                    .map(|h| (h.1, h.2))
                    .collect(),
            });
        }
    }
    Ok(BoundSearch {
        p: p.get(),
        dims,
        n: n as usize,
        twists: results,
        best,
    })
}

impl BoundSearch {
    pub fn best_for_degree(&self, degree: i64) -> Option<&BestThreshold> {
        self.best.iter().find(|b| b.degree == degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::{build_cover, verify_cover};

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn gains_are_antisymmetric() {
        for (q, d) in [(3, 1), (5, 1), (3, 2)] {
            for sign in GroupSign::BOTH {
                let gg = gain_from_cocycle(p(q), d, sign).unwrap();
                for (u, v, g) in gg.arcs() {
                    assert_eq!(gg.gain(v, u).unwrap(), -g);
                }
                assert_eq!(gg.arcs().count(), 2 * gg.base().edge_count());
            }
        }
    }

    #[test]
    fn inconsistent_gains_rejected() {
        let c3 = crate::graph::cycle_graph(3);
        let one = ZpScalar::new(1, p(3));
        let two = ZpScalar::new(2, p(3));
        let res = GainGraph::new(
            c3.clone(),
            p(3),
            [(0, 1, one), (1, 0, one), (1, 2, one), (2, 0, one)],
        );
        assert_eq!(res, Err(Error::InconsistentGain(1, 0)));
        let ok = GainGraph::new(
            c3,
            p(3),
            [(0, 1, one), (1, 0, two), (1, 2, one), (2, 0, one)],
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn two_gain_values_per_generator_at_3_1() {
        let gg = gain_from_cocycle(p(3), 1, GroupSign::Minus).unwrap();
        let s = connection_set_s(p(3), 1).unwrap();
        let group = VectorGroup::new(p(3), 2).unwrap();
        for gen in s.elements() {
            let mut values: Vec<u32> = (0..9)
                .map(|g| {
                    let h = group.id_of(&(&gen + &group.element(g)));
                    gg.gain(g, h).unwrap().value()
                })
                .collect();
            values.sort_unstable();
            values.dedup();
            assert_eq!(values.len(), 2, "generator {gen}: {values:?}");
        }
    }

    #[test]
    fn trivial_gain_gives_disjoint_copies() {
        let c5 = crate::graph::cycle_graph(5);
        let cover = cover_from_gain(&GainGraph::trivial(c5.clone(), p(3)));
        assert!(!cover.total.is_connected());
        let layer: Vec<usize> = (0..5).map(|v| 3 * v + 1).collect();
        assert_eq!(cover.total.induced_subgraph(&layer), c5);
        assert_eq!(verify_cover(&cover), Ok(3));
    }

    #[test]
    fn gain_cover_is_the_cayley_cover() {
        for sign in GroupSign::BOTH {
            let gg = gain_from_cocycle(p(3), 1, sign).unwrap();
            let from_gain = cover_from_gain(&gg);
            let cayley = build_cover(p(3), 1, sign).unwrap();
            assert_eq!(from_gain, cayley);
            assert_eq!(verify_cover(&from_gain), Ok(3));
        }
    }

    #[test]
    fn twisted_matrix_properties() {
        let gg = gain_from_cocycle(p(3), 1, GroupSign::Plus).unwrap();
        let a0 = twisted_adjacency(&gg, 0);
        let adj = gg.base().adjacency_matrix();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(a0.get(i, j), Complex64::new(adj[i * 9 + j], 0.0));
            }
        }
        for k in 0..3 {
            let a = twisted_adjacency(&gg, k);
            for i in 0..9 {
                for j in 0..9 {
                    assert!((a.get(i, j) - a.get(j, i).conj()).norm() < 1e-15);
                }
            }
            assert!((a.max_row_modulus_sum() - 4.0).abs() < 1e-12);
        }
    }

    #[test]
    fn bound_search_rejects_bad_input() {
        assert!(matches!(
            degree_bound_search(p(3), 7, &GroupSign::BOTH, None),
            Err(Error::SizeLimit { .. })
        ));
        assert!(degree_bound_search(p(3), 2, &GroupSign::BOTH, Some(&[3])).is_err());
        assert_eq!(
            degree_bound_search(p(2), 2, &GroupSign::BOTH, None).unwrap_err(),
            Error::EvenPrime
        );
    }

    #[test]
    fn untwisted_bound_is_trivial() {
        let r = degree_bound_search(p(3), 2, &[GroupSign::Plus], Some(&[0])).unwrap();
        // base C_3^2: spectrum 4, 1 (x4), -2 (x4)
        let t = &r.twists[0];
        assert_eq!(t.table.min_size_for_degree(4), Some(9));
        let degrees: Vec<i64> = t.thresholds.iter().map(|t| t.degree).collect();
        assert_eq!(degrees, vec![1, 2, 3, 4]);
        assert!(t.thresholds.iter().skip(1).all(|t| t.min_s == 9));
    }
}
