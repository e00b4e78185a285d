//! Simple undirected graphs, Cayley and Cartesian-product builders, and
//! short-cycle detection.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Maps structured labels (digit tuples) to contiguous ids, most significant
/// digit first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCodec {
    radices: Vec<u32>,
}

impl VertexCodec {
    pub fn new(radices: Vec<u32>) -> Self {
        assert!(radices.iter().all(|&r| r >= 1), "radix must be positive");
        VertexCodec { radices }
    }

    pub fn uniform(radix: u32, digits: usize) -> Self {
        Self::new(vec![radix; digits])
    }

    pub fn size(&self) -> usize {
        self.radices.iter().map(|&r| r as usize).product()
    }

    pub fn radices(&self) -> &[u32] {
        &self.radices
    }

    pub fn encode(&self, digits: &[u32]) -> usize {
        assert_eq!(digits.len(), self.radices.len(), "digit count");
        digits
            .iter()
            .zip(&self.radices)
            .fold(0usize, |acc, (&d, &r)| {
                debug_assert!(d < r);
                acc * r as usize + d as usize
            })
    }

    pub fn decode(&self, mut id: usize) -> Vec<u32> {
        let mut digits = vec![0u32; self.radices.len()];
        for (slot, &r) in digits.iter_mut().zip(&self.radices).rev() {
            *slot = (id % r as usize) as u32;
            id /= r as usize;
        }
        digits
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a simple graph; duplicate edges are merged, self-loops and
    /// out-of-range endpoints rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Common degree if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|a| a.len() == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Checks the simple-graph invariants: sorted symmetric adjacency, no
    /// loops, no repeated neighbours.
    pub fn audit(&self) -> Result<()> {
        for (u, nb) in self.adj.iter().enumerate() {
            for w in nb.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidParameter(format!(
                        "unsorted adjacency at {u}"
                    )));
                }
            }
            for &v in nb {
                if v == u {
                    return Err(Error::InvalidParameter(format!("self-loop at {u}")));
                }
                if v >= self.n() || !self.has_edge(v, u) {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric edge ({u}, {v})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n()
    }

    /// Induced subgraph on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut nb: Vec<usize> = self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        Graph { adj }
    }

    /// Dense row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n();
        let mut m = vec![0.0; n * n];
        for (u, v) in self.edges() {
            m[u * n + v] = 1.0;
            m[v * n + u] = 1.0;
        }
        m
    }

    /// Edge-list text: `"n m"` header, then one `"u v"` line per edge with
    /// `u < v` in ascending order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 * (self.edge_count() + 1));
        writeln!(out, "{} {}", self.n(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines.filter(|l| !l.trim().is_empty()) {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!(
                "header says {m} edges, found {}",
                edges.len()
            )));
        }
        let g = Graph::from_edges(n, edges)?;
        if g.edge_count() != m {
            return Err(Error::Parse("duplicate edges".into()));
        }
        Ok(g)
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::Parse(format!("bad line {line:?}"))),
    }
}

pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
}

pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid")
}

pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
}

/// `Cay(G, S)`: `{g, h}` is an edge iff `g h^{-1} ∈ S`.
pub fn cayley<G: FiniteGroup>(group: &G, connection: &[G::Element]) -> Result<Graph> {
    let identity = group.identity();
    let mut ids: Vec<usize> = Vec::with_capacity(connection.len());
    for s in connection {
        if *s == identity {
            return Err(Error::IdentityInConnection);
        }
        ids.push(group.id_of(s));
    }
    ids.sort_unstable();
    ids.dedup();
    let idset: HashSet<usize> = ids.iter().copied().collect();
    for &s in &ids {
        let si = group.id_of(&group.inv(&group.element(s)));
        if !idset.contains(&si) {
            return Err(Error::NotInverseClosed(s));
        }
    }
    let gens: Vec<G::Element> = ids.iter().map(|&i| group.element(i)).collect();
    let n = group.order();
    let mut adj = Vec::with_capacity(n);
    for h_id in 0..n {
        let h = group.element(h_id);
        // g h^{-1} = s  <=>  g = s h
        let mut nb: Vec<usize> = gens
            .iter()
            .map(|s| group.id_of(&group.mul(s, &h)))
            .collect();
        nb.sort_unstable();
        adj.push(nb);
    }
    Ok(Graph { adj })
}

/// `X □ Y`, with vertex `(x, y)` numbered `x·|Y| + y`.
pub fn cartesian_product(x: &Graph, y: &Graph) -> Graph {
    let ny = y.n();
    let mut adj = Vec::with_capacity(x.n() * ny);
    for u in 0..x.n() {
        for v in 0..ny {
            let mut nb: Vec<usize> = x.adj[u]
                .iter()
                .map(|&w| w * ny + v)
                .chain(y.adj[v].iter().map(|&w| u * ny + w))
                .collect();
            nb.sort_unstable();
            adj.push(nb);
        }
    }
    Graph { adj }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "value")]
pub enum Girth {
    /// Shortest cycle length, found within the cap.
    Exact(usize),
    /// No cycle of length at most the cap exists.
    Greater(usize),
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Exact(g) => write!(f, "{g}"),
            Girth::Greater(c) => write!(f, "> {c}"),
        }
    }
}

/// Girth by breadth-first search from every root, truncated at depth
/// `⌈cap/2⌉`.
pub fn girth(x: &Graph, cap: usize) -> Girth {
    assert!(cap >= 3, "cap must be at least 3");
    let n = x.n();
    let max_depth = cap.div_ceil(2);
    let mut best = cap + 1;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();
    for root in 0..n {
        for &t in &touched {
            dist[t] = usize::MAX;
        }
        touched.clear();
        queue.clear();
        dist[root] = 0;
        parent[root] = usize::MAX;
        touched.push(root);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best || dist[u] >= max_depth {
                break;
            }
            for &w in &x.adj[u] {
                if w == parent[u] {
                    continue;
                }
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best <= cap {
        Girth::Exact(best)
    } else {
        Girth::Greater(cap)
    }
}

/// Finds two vertices with two common neighbours. Returns the 4-cycle
/// `[u, a, w, b]` in cyclic order.
pub fn find_4cycle(x: &Graph) -> Option<[usize; 4]> {
    let n = x.n();
    let mut via = vec![usize::MAX; n];
    let mut touched = Vec::new();
    for u in 0..n {
        for &t in &touched {
            via[t] = usize::MAX;
        }
        touched.clear();
        for &a in &x.adj[u] {
            for &w in &x.adj[a] {
                if w == u {
                    continue;
                }
                if via[w] == usize::MAX {
                    via[w] = a;
                    touched.push(w);
                } else {
                    return Some([u, via[w], w, a]);
                }
            }
        }
    }
    None
}

pub fn has_4cycle(x: &Graph) -> bool {
    find_4cycle(x).is_some()
}

/// Finds a cycle of length exactly `len`, returned as its vertex sequence.
/// Simple graphs have no cycles shorter than 3.
///
/// Rooted depth-first search over simple paths whose smallest vertex is the
/// root, pruned by distance back to the root.
pub fn find_cycle_of_length(x: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 {
        return None;
    }
    let n = x.n();
    let mut dist = vec![usize::MAX; n];
    let mut on_path = vec![false; n];
    for root in 0..n {
        // distances from root within vertices >= root
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in &x.adj[u] {
                if w > root && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![root];
        on_path[root] = true;
        if extend_path(x, root, len, &dist, &mut on_path, &mut path) {
            return Some(path);
        }
        on_path[root] = false;
    }
    None
}

fn extend_path(
    x: &Graph,
    root: usize,
    len: usize,
    dist: &[usize],
    on_path: &mut [bool],
    path: &mut Vec<usize>,
) -> bool {
    let u = *path.last().expect("non-empty path");
    if path.len() == len {
        return x.has_edge(u, root);
    }
    let remaining = len - path.len();
    for &w in &x.adj[u] {
        // after stepping to w, `remaining - 1` more edges before closing at root
        if w <= root || on_path[w] || dist[w] == usize::MAX || dist[w] > remaining {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        if extend_path(x, root, len, dist, on_path, path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

pub fn has_cycle_of_length(x: &Graph, len: usize) -> bool {
    find_cycle_of_length(x, len).is_some()
}
