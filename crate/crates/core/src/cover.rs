//! Connection sets, covering maps and the cover constructions: extraspecial
//! Cayley covers of `C_p^{2d}`, their induced covers of `C_p^{2d-1}`, the
//! Heisenberg cover of `Q_d`, and 2-fold covers from ±1 signings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{cayley, Graph};
use crate::groups::{
    commutator, inv, ExtraspecialElement, ExtraspecialGroup, FiniteGroup, GroupSign,
    HeisenbergGroup, VectorGroup,
};
use crate::modular::{rank, Prime, ZpScalar, ZpVector};

/// Largest group order accepted by [`build_cover`].
pub const MAX_COVER_VERTICES: u128 = 1_000_000;

/// The basis `S = A ∪ B` of `Z_p^{2d} = Z_p^d × Z_p^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSetS {
    pub p: Prime,
    pub d: usize,
    /// `A_k = Σ_{i≤k} e_i + Σ_{j<k} f_j`, as `(a, b)` halves concatenated.
    pub a: Vec<ZpVector>,
    /// `B_k = Σ_{i<k} e_i + 2e_k + Σ_{j≤k} f_j`.
    pub b: Vec<ZpVector>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SetPart {
    A,
    B,
}

impl ConnectionSetS {
    /// Elements in the order `A_1, B_1, A_2, B_2, …`.
    pub fn elements(&self) -> Vec<ZpVector> {
        self.labelled().into_iter().map(|(_, _, v)| v).collect()
    }

    /// `(part, k, vector)` in the order `A_1, B_1, A_2, B_2, …` (`k` is 1-based).
    pub fn labelled(&self) -> Vec<(SetPart, usize, ZpVector)> {
        let mut out = Vec::with_capacity(2 * self.d);
        for k in 0..self.d {
            out.push((SetPart::A, k + 1, self.a[k].clone()));
            out.push((SetPart::B, k + 1, self.b[k].clone()));
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank(&self.elements()).expect("uniform dimensions")
    }

    pub fn is_basis(&self) -> bool {
        self.rank() == 2 * self.d
    }

    /// `S ∪ -S`.
    pub fn symmetric(&self) -> Vec<ZpVector> {
        let s = self.elements();
        let neg: Vec<ZpVector> = s.iter().map(|v| -v).collect();
        s.into_iter().chain(neg).collect()
    }

    /// The linear map sending the `i`-th standard basis vector to the `i`-th
    /// element of [`ConnectionSetS::elements`].
    pub fn basis_change(&self) -> BasisChange {
        BasisChange {
            columns: self.elements(),
        }
    }
}

pub fn connection_set_s(p: Prime, d: usize) -> Result<ConnectionSetS> {
    if !p.is_odd() {
        return Err(Error::EvenPrime);
    }
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut a = Vec::with_capacity(d);
    let mut b = Vec::with_capacity(d);
    for k in 1..=d {
        let mut av = vec![0i64; 2 * d];
        av[..k].fill(1);
        av[d..d + k - 1].fill(1);
        a.push(ZpVector::from_ints(&av, p));

        let mut bv = vec![0i64; 2 * d];
        bv[..k - 1].fill(1);
        bv[k - 1] = 2;
        bv[d..d + k].fill(1);
        b.push(ZpVector::from_ints(&bv, p));
    }
    Ok(ConnectionSetS { p, d, a, b })
}

/// Linear map `Z_p^m -> Z_p^m` given by its columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    pub columns: Vec<ZpVector>,
}

impl BasisChange {
    pub fn apply(&self, x: &ZpVector) -> ZpVector {
        assert_eq!(x.len(), self.columns.len(), "dimension mismatch");
        let dim = self.columns[0].len();
        let mut acc = ZpVector::zeros(dim, x.prime());
        for (i, col) in self.columns.iter().enumerate() {
            acc = &acc + &col.scale(x.get(i));
        }
        acc
    }

    pub fn is_invertible(&self) -> bool {
        rank(&self.columns).expect("uniform dimensions") == self.columns.len()
    }
}

fn embed(v: &ZpVector, d: usize) -> ExtraspecialElement {
    let (a, b) = v.split_at(d);
    ExtraspecialElement {
        a,
        b,
        z: ZpScalar::zero(v.prime()),
    }
}

/// `ε(S)` in the order of [`ConnectionSetS::elements`].
pub fn embedded_s(s: &ConnectionSetS) -> Vec<ExtraspecialElement> {
    s.elements().iter().map(|v| embed(v, s.d)).collect()
}

/// `S_± = ε(S) ∪ ε(S)^{-1}`: the `2d` elements of `ε(S)` followed by their inverses.
pub fn lifted_connection(p: Prime, d: usize, sign: GroupSign) -> Result<Vec<ExtraspecialElement>> {
    let s = connection_set_s(p, d)?;
    let forward = embedded_s(&s);
    let inverses: Vec<ExtraspecialElement> = forward.iter().map(|g| inv(sign, g)).collect();
    if inverses.iter().any(|h| forward.contains(h)) {
        return Err(Error::ConnectionOverlap);
    }
    Ok(forward.into_iter().chain(inverses).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutatorEntry {
    pub left: (SetPart, usize),
    pub right: (SetPart, usize),
    /// Centre coordinate of `[left, right]`.
    pub z: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoncommutingReport {
    pub sign: GroupSign,
    /// No two distinct elements commute.
    pub pairwise_noncommuting: bool,
    /// Every commutator is `(0, 0, -1)` when the left element precedes the
    /// right one in the order `A_1, B_1, A_2, …`, and `(0, 0, 1)` otherwise.
    pub matches_case_formula: bool,
    pub table: Vec<CommutatorEntry>,
}

impl NoncommutingReport {
    pub fn passed(&self) -> bool {
        self.pairwise_noncommuting && self.matches_case_formula
    }
}

/// Computes every commutator of distinct elements of `ε(S)` by composition.
pub fn pairwise_noncommuting_check(s: &ConnectionSetS, sign: GroupSign) -> NoncommutingReport {
    let labels = s.labelled();
    let elems = embedded_s(s);
    let p = s.p;
    let mut table = Vec::new();
    let mut noncommuting = true;
    let mut matches = true;
    for (i, g) in elems.iter().enumerate() {
        for (j, h) in elems.iter().enumerate() {
            if i == j {
                continue;
            }
            let c = commutator(sign, g, h).expect("same group");
            let expected = ExtraspecialElement::central(s.d, if i < j { -1 } else { 1 }, p);
            noncommuting &= !c.is_identity();
            matches &= c == expected;
            table.push(CommutatorEntry {
                left: (labels[i].0, labels[i].1),
                right: (labels[j].0, labels[j].1),
                z: c.z.value(),
            });
        }
    }
    NoncommutingReport {
        sign,
        pairwise_noncommuting: noncommuting,
        matches_case_formula: matches,
        table,
    }
}

/// A graph `total` with a vertex map `gamma` onto `base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoveringMap {
    pub total: Graph,
    pub base: Graph,
    pub gamma: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum CoverViolation {
    GammaLength {
        expected: usize,
        found: usize,
    },
    GammaOutOfRange {
        vertex: usize,
        image: usize,
    },
    BaseDisconnected,
    /// A total edge whose endpoints map to the same base vertex.
    FiberNotIndependent {
        u: usize,
        v: usize,
    },
    /// A total edge whose image is not a base edge.
    NotHomomorphism {
        u: usize,
        v: usize,
    },
    /// `vertex` does not have exactly one neighbour over `base_neighbor`.
    NotPerfectMatching {
        vertex: usize,
        base_neighbor: usize,
        count: usize,
    },
    UnequalFibers {
        base_vertex: usize,
        size: usize,
        expected: usize,
    },
}

impl CoveringMap {
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        let mut fibers = vec![Vec::new(); self.base.n()];
        for (v, &b) in self.gamma.iter().enumerate() {
            if b < fibers.len() {
                fibers[b].push(v);
            }
        }
        fibers
    }

    /// Fibre-map text: one `"total_id base_id"` line per total vertex.
    pub fn fiber_map_text(&self) -> String {
        let mut out = String::with_capacity(12 * self.gamma.len());
        for (v, b) in self.gamma.iter().enumerate() {
            writeln!(out, "{v} {b}").unwrap();
        }
        out
    }

    pub fn parse_fiber_map(text: &str) -> Result<Vec<usize>> {
        let mut gamma = Vec::new();
        for (i, line) in text.lines().filter(|l| !l.trim().is_empty()).enumerate() {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| Error::Parse(format!("bad line {line:?}")))
                })
                .collect::<Result<_>>()?;
            match nums.as_slice() {
                [v, b] if *v == i => gamma.push(*b),
                _ => return Err(Error::Parse(format!("bad line {line:?}"))),
            }
        }
        Ok(gamma)
    }
}

/// Checks the covering axioms and returns the fold `r`.
pub fn verify_cover(cm: &CoveringMap) -> std::result::Result<usize, CoverViolation> {
    let (total, base) = (&cm.total, &cm.base);
    if cm.gamma.len() != total.n() {
        return Err(CoverViolation::GammaLength {
            expected: total.n(),
            found: cm.gamma.len(),
        });
    }
    if let Some((vertex, &image)) = cm.gamma.iter().enumerate().find(|(_, &b)| b >= base.n()) {
        return Err(CoverViolation::GammaOutOfRange { vertex, image });
    }
    if !base.is_connected() {
        return Err(CoverViolation::BaseDisconnected);
    }
    for (u, v) in total.edges() {
        let (gu, gv) = (cm.gamma[u], cm.gamma[v]);
        if gu == gv {
            return Err(CoverViolation::FiberNotIndependent { u, v });
        }
        if !base.has_edge(gu, gv) {
            return Err(CoverViolation::NotHomomorphism { u, v });
        }
    }
    // Each vertex sees exactly one vertex of every neighbouring fibre; with
    // equal fibre sizes this makes every base edge lift to a perfect matching.
    let mut count = vec![0usize; base.n()];
    for u in 0..total.n() {
        for &w in total.neighbors(u) {
            count[cm.gamma[w]] += 1;
        }
        for &b in base.neighbors(cm.gamma[u]) {
            if count[b] != 1 {
                return Err(CoverViolation::NotPerfectMatching {
                    vertex: u,
                    base_neighbor: b,
                    count: count[b],
                });
            }
        }
        for &w in total.neighbors(u) {
            count[cm.gamma[w]] = 0;
        }
    }
    let fibers = cm.fibers();
    let r = fibers.first().map_or(0, Vec::len);
    for (b, f) in fibers.iter().enumerate() {
        if f.len() != r || r == 0 {
            return Err(CoverViolation::UnequalFibers {
                base_vertex: b,
                size: f.len(),
                expected: r,
            });
        }
    }
    Ok(r)
}

/// `Cay(p_±^{1+2d}, S_±)` over `Cay(Z_p^{2d}, S ∪ -S)`, with `γ` dropping
/// the centre coordinate.
pub fn build_cover(p: Prime, d: usize, sign: GroupSign) -> Result<CoveringMap> {
    if !p.is_odd() {
        return Err(Error::EvenPrime);
    }
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let size = (p.get() as u128).pow(2 * d as u32 + 1);
    if size > MAX_COVER_VERTICES {
        return Err(Error::SizeLimit {
            size,
            limit: MAX_COVER_VERTICES,
        });
    }
    let group = ExtraspecialGroup::new(p, d, sign)?;
    let total = cayley(&group, &lifted_connection(p, d, sign)?)?;
    let base = base_graph(p, d)?;
    let pz = p.get() as usize;
    let gamma = (0..total.n()).map(|id| id / pz).collect();
    Ok(CoveringMap { total, base, gamma })
}

/// `Cay(Z_p^{2d}, S ∪ -S)`, a copy of `C_p^{2d}`.
pub fn base_graph(p: Prime, d: usize) -> Result<Graph> {
    let s = connection_set_s(p, d)?;
    cayley(&VectorGroup::new(p, 2 * d)?, &s.symmetric())
}

/// Base ids of `V = α({x : x_{2d} = 0})`, the span of all but the last
/// element of `S`, in ascending order.
pub fn odd_base_vertices(p: Prime, d: usize) -> Result<Vec<usize>> {
    let s = connection_set_s(p, d)?;
    let alpha = s.basis_change();
    let group = VectorGroup::new(p, 2 * d)?;
    let mut ids: Vec<usize> = ZpVector::all(2 * d - 1, p)
        .map(|x| {
            let mut full = x.values().iter().map(|&c| i64::from(c)).collect::<Vec<_>>();
            full.push(0);
            group.id_of(&alpha.apply(&ZpVector::from_ints(&full, p)))
        })
        .collect();
    ids.sort_unstable();
    Ok(ids)
}

/// The covers of `C_p^{2d-1}` obtained by restricting [`build_cover`] to
/// `γ^{-1}(V)` for `V` from [`odd_base_vertices`]. Vertices keep their
/// relative order.
pub fn induced_odd_cover(p: Prime, d: usize, sign: GroupSign) -> Result<CoveringMap> {
    let full = build_cover(p, d, sign)?;
    let base_vertices = odd_base_vertices(p, d)?;
    Ok(restrict_cover(&full, &base_vertices))
}

/// Restricts a cover to the preimage of `base_vertices` (sorted ascending).
pub fn restrict_cover(cm: &CoveringMap, base_vertices: &[usize]) -> CoveringMap {
    let mut base_pos = vec![usize::MAX; cm.base.n()];
    for (i, &b) in base_vertices.iter().enumerate() {
        base_pos[b] = i;
    }
    let total_vertices: Vec<usize> = (0..cm.total.n())
        .filter(|&v| base_pos[cm.gamma[v]] != usize::MAX)
        .collect();
    CoveringMap {
        total: cm.total.induced_subgraph(&total_vertices),
        base: cm.base.induced_subgraph(base_vertices),
        gamma: total_vertices
            .iter()
            .map(|&v| base_pos[cm.gamma[v]])
            .collect(),
    }
}

/// `Cay(H_d, S_d)` over `Q_d`, `γ(x, t) = x`.
pub fn heisenberg_cover(d: usize) -> Result<CoveringMap> {
    let group = HeisenbergGroup::new(d)?;
    let total = cayley(&group, &group.standard_generators())?;
    let q = VectorGroup::new(Prime::new(2)?, d)?;
    let base = cayley(&q, &q.standard_connection())?;
    let gamma = (0..total.n()).map(|id| id / 2).collect();
    Ok(CoveringMap { total, base, gamma })
}

/// Symmetric matrix with entries in `{-1, 0, 1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl SignedMatrix {
    pub fn new(n: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::BadMatrixShape);
        }
        for i in 0..n {
            if entries[i * n + i] != 0 {
                return Err(Error::InvalidParameter(format!("nonzero diagonal at {i}")));
            }
            for j in 0..n {
                let e = entries[i * n + j];
                if !(-1..=1).contains(&e) || e != entries[j * n + i] {
                    return Err(Error::InvalidParameter(format!("bad entry at ({i}, {j})")));
                }
            }
        }
        Ok(SignedMatrix { n, entries })
    }

    /// Signing of `graph` with `-1` on the listed edges.
    pub fn from_graph(graph: &Graph, negative: &[(usize, usize)]) -> Self {
        let n = graph.n();
        let mut entries = vec![0i8; n * n];
        for (u, v) in graph.edges() {
            entries[u * n + v] = 1;
            entries[v * n + u] = 1;
        }
        for &(u, v) in negative {
            assert!(graph.has_edge(u, v), "negative edge must be an edge");
            entries[u * n + v] = -1;
            entries[v * n + u] = -1;
        }
        SignedMatrix { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn support(&self) -> Graph {
        let n = self.n;
        Graph::from_edges(
            n,
            (0..n).flat_map(|i| {
                (i + 1..n)
                    .filter(move |&j| self.get(i, j) != 0)
                    .map(move |j| (i, j))
            }),
        )
        .expect("valid support")
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&e| f64::from(e)).collect()
    }
}

/// `A_1 = [[0,1],[1,0]]`, `A_d = [[A_{d-1}, I], [I, -A_{d-1}]]`.
pub fn cohen_tits_signing(d: usize) -> Result<SignedMatrix> {
    if d == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut m = vec![0i8, 1, 1, 0];
    let mut n = 2;
    for _ in 1..d {
        let big = 2 * n;
        let mut next = vec![0i8; big * big];
        for i in 0..n {
            for j in 0..n {
                let e = m[i * n + j];
                next[i * big + j] = e;
                next[(i + n) * big + (j + n)] = -e;
            }
            next[i * big + (i + n)] = 1;
            next[(i + n) * big + i] = 1;
        }
        m = next;
        n = big;
    }
    Ok(SignedMatrix { n, entries: m })
}

/// The 2-fold cover of a signed graph: vertex `v` becomes `2v` and `2v+1`;
/// positive edges join equal layers, negative edges cross.
pub fn signed_double_cover(m: &SignedMatrix) -> CoveringMap {
    let base = m.support();
    let mut edges = Vec::with_capacity(2 * base.edge_count());
    for (u, v) in base.edges() {
        if m.get(u, v) > 0 {
            edges.push((2 * u, 2 * v));
            edges.push((2 * u + 1, 2 * v + 1));
        } else {
            edges.push((2 * u, 2 * v + 1));
            edges.push((2 * u + 1, 2 * v));
        }
    }
    let total = Graph::from_edges(2 * base.n(), edges).expect("valid cover");
    let gamma = (0..total.n()).map(|v| v / 2).collect();
    CoveringMap { total, base, gamma }
}

/// Checks that every 4-cycle `v, v+e_i, v+e_i+e_j, v+e_j` of `Q_d` carries an
/// odd number of `-1` entries, with `Q_d` numbered by the big-endian codec.
pub fn every_square_is_odd(m: &SignedMatrix) -> bool {
    let n = m.n();
    let d = n.trailing_zeros() as usize;
    if 1 << d != n {
        return false;
    }
    for v in 0..n {
        for i in 0..d {
            for j in i + 1..d {
                let (bi, bj) = (1 << i, 1 << j);
                let walk = [v, v ^ bi, v ^ bi ^ bj, v ^ bj];
                let product: i32 = (0..4)
                    .map(|k| i32::from(m.get(walk[k], walk[(k + 1) % 4])))
                    .product();
                if product != -1 {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, has_4cycle};
    use crate::groups::element_order;

    fn p(n: u32) -> Prime {
        Prime::new(n).unwrap()
    }

    #[test]
    fn connection_set_examples() {
        let s = connection_set_s(p(3), 2).unwrap();
        let got: Vec<Vec<u32>> = s.elements().iter().map(|v| v.values().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![1, 0, 0, 0],
                vec![2, 0, 1, 0],
                vec![1, 1, 1, 0],
                vec![1, 2, 1, 1]
            ]
        );
        let s1 = connection_set_s(p(5), 1).unwrap();
        assert_eq!(s1.a[0].values(), &[1, 0]);
        assert_eq!(s1.b[0].values(), &[2, 1]);
        for q in [3, 5, 7] {
            for d in 1..=3 {
                let s = connection_set_s(p(q), d).unwrap();
                assert_eq!(s.rank(), 2 * d);
                assert!(s.basis_change().is_invertible());
            }
        }
        assert_eq!(connection_set_s(p(2), 1), Err(Error::EvenPrime));
    }

    #[test]
    fn lifted_connection_examples() {
        let plus = lifted_connection(p(3), 1, GroupSign::Plus).unwrap();
        assert_eq!(
            plus[2],
            ExtraspecialElement::from_ints(&[2], &[0], 0, p(3)).unwrap()
        );
        let minus = lifted_connection(p(3), 1, GroupSign::Minus).unwrap();
        assert_eq!(
            minus[2],
            ExtraspecialElement::from_ints(&[2], &[0], 2, p(3)).unwrap()
        );
        for q in [3, 5, 7] {
            for d in 1..=2 {
                for sign in GroupSign::BOTH {
                    let c = lifted_connection(p(q), d, sign).unwrap();
                    assert_eq!(c.len(), 4 * d);
                    for (i, g) in c.iter().enumerate() {
                        assert!(!c[i + 1..].contains(g));
                    }
                }
            }
        }
    }

    #[test]
    fn commutator_cases() {
        let s = connection_set_s(p(5), 2).unwrap();
        let e = embedded_s(&s);
        // order: A1, B1, A2, B2
        let (a1, b1, a2, b2) = (&e[0], &e[1], &e[2], &e[3]);
        for sign in GroupSign::BOTH {
            let c = |g, h| commutator(sign, g, h).unwrap();
            assert_eq!(c(a2, a1), ExtraspecialElement::central(2, 1, p(5)));
            assert_eq!(c(b1, b2), ExtraspecialElement::central(2, -1, p(5)));
            assert_eq!(c(a2, b1), ExtraspecialElement::central(2, 1, p(5)));
        }
        for q in [3, 5, 7] {
            for d in 1..=4 {
                let s = connection_set_s(p(q), d).unwrap();
                for sign in GroupSign::BOTH {
                    let r = pairwise_noncommuting_check(&s, sign);
                    assert!(r.passed(), "p={q} d={d} {sign}");
                    assert_eq!(r.table.len(), 2 * d * (2 * d - 1));
                }
            }
        }
    }

    #[test]
    fn element_orders_in_lifted_sets() {
        for q in [3u32, 5, 7] {
            for d in 1..=2 {
                for g in lifted_connection(p(q), d, GroupSign::Plus).unwrap() {
                    assert_eq!(element_order(GroupSign::Plus, &g), u64::from(q));
                }
                for g in lifted_connection(p(q), d, GroupSign::Minus).unwrap() {
                    assert_eq!(element_order(GroupSign::Minus, &g), u64::from(q * q));
                }
            }
        }
    }

    #[test]
    fn basis_change_is_graph_isomorphism() {
        for (q, d) in [(3, 1), (3, 2), (5, 1)] {
            let pr = p(q);
            let s = connection_set_s(pr, d).unwrap();
            let alpha = s.basis_change();
            let grp = VectorGroup::new(pr, 2 * d).unwrap();
            let std = cayley(&grp, &grp.standard_connection()).unwrap();
            let base = base_graph(pr, d).unwrap();
            let map: Vec<usize> = (0..grp.order())
                .map(|i| grp.id_of(&alpha.apply(&grp.element(i))))
                .collect();
            let mut sorted = map.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), grp.order());
            for (u, v) in std.edges() {
                assert!(base.has_edge(map[u], map[v]));
            }
            assert_eq!(std.edge_count(), base.edge_count());
        }
    }

    #[test]
    fn build_cover_examples() {
        let c = build_cover(p(3), 1, GroupSign::Minus).unwrap();
        assert_eq!((c.total.n(), c.total.regular_degree()), (27, Some(4)));
        assert_eq!(verify_cover(&c), Ok(3));
        let c = build_cover(p(5), 1, GroupSign::Plus).unwrap();
        assert_eq!((c.total.n(), c.total.regular_degree()), (125, Some(4)));
        assert!(!has_4cycle(&c.total));
        let c = build_cover(p(3), 2, GroupSign::Minus).unwrap();
        assert_eq!((c.total.n(), c.total.regular_degree()), (243, Some(8)));
        assert!(!has_4cycle(&c.total));
        assert!(matches!(
            build_cover(p(13), 3, GroupSign::Plus),
            Err(Error::SizeLimit { .. })
        ));
        assert_eq!(build_cover(p(2), 1, GroupSign::Plus), Err(Error::EvenPrime));
    }

    #[test]
    fn verify_cover_negative_cases() {
        let k4 = complete_graph(4);
        let ident = CoveringMap {
            total: k4.clone(),
            base: k4.clone(),
            gamma: (0..4).collect(),
        };
        assert_eq!(verify_cover(&ident), Ok(1));

        let good = build_cover(p(3), 1, GroupSign::Plus).unwrap();
        // 0 and 1 share the fibre over base vertex 0
        let mut edges: Vec<_> = good.total.edges().collect();
        edges.push((0, 1));
        let bad = CoveringMap {
            total: Graph::from_edges(27, edges).unwrap(),
            ..good.clone()
        };
        assert_eq!(
            verify_cover(&bad),
            Err(CoverViolation::FiberNotIndependent { u: 0, v: 1 })
        );

        let mut gamma = good.gamma.clone();
        gamma[0] = 5;
        let bad = CoveringMap {
            gamma,
            ..good.clone()
        };
        assert!(verify_cover(&bad).is_err());

        let disconnected = CoveringMap {
            total: Graph::empty(2),
            base: Graph::empty(2),
            gamma: vec![0, 1],
        };
        assert_eq!(
            verify_cover(&disconnected),
            Err(CoverViolation::BaseDisconnected)
        );
    }

    #[test]
    fn heisenberg_cover_examples() {
        let c = heisenberg_cover(3).unwrap();
        assert_eq!((c.total.n(), c.total.regular_degree()), (16, Some(3)));
        assert_eq!(
            crate::graph::girth(&c.total, 8),
            crate::graph::Girth::Exact(6)
        );
        for d in 1..=6 {
            let c = heisenberg_cover(d).unwrap();
            assert!(!has_4cycle(&c.total));
            assert_eq!(verify_cover(&c), Ok(2));
        }
    }

    #[test]
    fn cohen_tits_examples() {
        let a1 = cohen_tits_signing(1).unwrap();
        assert_eq!(a1, SignedMatrix::new(2, vec![0, 1, 1, 0]).unwrap());
        for d in 1..=6 {
            let m = cohen_tits_signing(d).unwrap();
            let n = m.n();
            assert!(every_square_is_odd(&m), "d={d}");
            let q = heisenberg_cover(d).unwrap().base;
            assert_eq!(m.support(), q);
            // A_d^2 = d I
            for i in 0..n {
                for j in 0..n {
                    let s: i32 = (0..n)
                        .map(|k| i32::from(m.get(i, k)) * i32::from(m.get(k, j)))
                        .sum();
                    assert_eq!(s, if i == j { d as i32 } else { 0 });
                }
            }
        }
    }

    #[test]
    fn signed_double_cover_examples() {
        let c5 = cycle_graph(5);
        let pos = SignedMatrix::from_graph(&c5, &[]);
        let cover = signed_double_cover(&pos);
        assert!(!cover.total.is_connected());
        assert_eq!(cover.total.edge_count(), 10);
        // each layer is a copy of C_5
        let layer: Vec<usize> = (0..5).map(|v| 2 * v).collect();
        assert_eq!(cover.total.induced_subgraph(&layer), c5);

        // signed K_4 with a negative triangle covers to the cube
        let k4 = complete_graph(4);
        let signed = SignedMatrix::from_graph(&k4, &[(0, 1), (0, 2), (1, 2)]);
        let cube = signed_double_cover(&signed);
        assert_eq!(verify_cover(&cube), Ok(2));
        assert_eq!(cube.total.regular_degree(), Some(3));
        assert!(cube.total.is_connected());
        assert_eq!(
            crate::graph::girth(&cube.total, 8),
            crate::graph::Girth::Exact(4)
        );
        assert!(!crate::graph::has_cycle_of_length(&cube.total, 3));
    }

    #[test]
    fn induced_cover_examples() {
        let c = induced_odd_cover(p(3), 1, GroupSign::Minus).unwrap();
        assert_eq!((c.total.n(), c.total.regular_degree()), (9, Some(2)));
        assert_eq!(c.base, cycle_graph(3));
        assert_eq!(verify_cover(&c), Ok(3));
        let c = induced_odd_cover(p(3), 2, GroupSign::Plus).unwrap();
        assert_eq!((c.total.n(), c.total.regular_degree()), (81, Some(6)));
        assert!(!has_4cycle(&c.total));
        assert_eq!(verify_cover(&c), Ok(3));
    }

    #[test]
    fn fiber_map_roundtrip() {
        let c = heisenberg_cover(2).unwrap();
        let text = c.fiber_map_text();
        assert!(text.starts_with("0 0\n1 0\n2 1\n"));
        assert_eq!(CoveringMap::parse_fiber_map(&text).unwrap(), c.gamma);
    }
}
