//! Immutable labeled simple graphs and their construction algebra.
//!
//! Vertices are the dense labels `0..n`. Adjacency is held twice: as a sorted
//! edge list and as one bitset row per vertex, so clique and bipartite-subgraph
//! searches can test adjacency with a single word operation.

mod canon;
mod clique;
mod degeneracy;
mod graph6;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm, MAX_CANON_ORDER};
pub use clique::{contains_k37, is_kt_free, max_clique_size, triangle_count};
pub use degeneracy::{degeneracy, Degeneracy};
pub use graph6::{graph6_decode, graph6_encode};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {{{u},{v}}} has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("invalid vertex split: {0}")]
    InvalidSplit(String),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("order {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Equal endpoints are allowed here and
    /// rejected by the graph constructors.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    pub fn shares_endpoint(&self, other: &Edge) -> bool {
        self.contains(other.u) || self.contains(other.v)
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    edges: Vec<Edge>,
    rows: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph from a list of pairs, deduplicating repeated pairs.
    pub fn from_edge_list<I, E>(n: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut edges = Vec::new();
        for e in pairs {
            let e = e.into();
            if e.v >= n {
                return Err(GraphError::EndpointOutOfRange { u: e.u, v: e.v, n });
            }
            if e.u == e.v {
                return Err(GraphError::Loop(e.u));
            }
            edges.push(e);
        }
        Ok(Self::from_valid_edges(n, edges))
    }

    /// Internal constructor for edge lists already known to be in range and loop-free.
    pub(crate) fn from_valid_edges(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for e in &edges {
            rows[e.u * words + e.v / 64] |= 1 << (e.v % 64);
            rows[e.v * words + e.u / 64] |= 1 << (e.u % 64);
        }
        Graph {
            n,
            words,
            edges,
            rows,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_valid_edges(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for v in 0..n {
            for u in 0..v {
                edges.push(Edge { u, v });
            }
        }
        Self::from_valid_edges(n, edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        join(&Graph::empty(a), &Graph::empty(b))
    }

    /// Cycle `0-1-...-(n-1)-0`. For `n < 3` this degenerates to a path.
    pub fn cycle(n: usize) -> Self {
        let mut edges: Vec<Edge> = (1..n).map(|i| Edge::new(i - 1, i)).collect();
        if n >= 3 {
            edges.push(Edge::new(0, n - 1));
        }
        Self::from_valid_edges(n, edges)
    }

    pub fn path(n: usize) -> Self {
        Self::from_valid_edges(n, (1..n).map(|i| Edge::new(i - 1, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Bitset row of `v`: bit `u` of word `u / 64` is set iff `u ~ v`.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|v| self.neighbors(v).collect()).collect()
    }

    /// Degree sequence sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    /// Copy of the graph with `added` inserted and `removed` deleted.
    /// Endpoints must be in range; duplicates and absent removals are ignored.
    pub fn with_changes(&self, added: &[Edge], removed: &[Edge]) -> Result<Graph, GraphError> {
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        edges.extend_from_slice(added);
        Graph::from_edge_list(self.n, edges)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.u], perm[e.v]))
            .collect();
        Graph::from_valid_edges(self.n, edges)
    }

    /// Connected components, each sorted, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `verts`, relabeled in the given order.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push(Edge::new(i, j));
                }
            }
        }
        Graph::from_valid_edges(verts.len(), edges)
    }

    /// Shortest cycle length, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Join `g1 + g2`: disjoint union plus every edge between the parts.
/// Vertices of `g2` are shifted by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut edges = Vec::with_capacity(g1.edge_count() + g2.edge_count() + n1 * g2.n());
    edges.extend_from_slice(g1.edges());
    edges.extend(g2.edges().iter().map(|e| Edge::new(e.u + n1, e.v + n1)));
    for a in 0..n1 {
        for b in 0..g2.n() {
            edges.push(Edge::new(a, n1 + b));
        }
    }
    Graph::from_valid_edges(n1 + g2.n(), edges)
}

/// Disjoint union, `g2` shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut edges = g1.edges().to_vec();
    edges.extend(g2.edges().iter().map(|e| Edge::new(e.u + n1, e.v + n1)));
    Graph::from_valid_edges(n1 + g2.n(), edges)
}

/// Cartesian product with row-major labels `(u, v) -> u * n2 + v`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let n2 = g2.n();
    let mut edges = Vec::with_capacity(g1.n() * g2.edge_count() + n2 * g1.edge_count());
    for u in 0..g1.n() {
        for e in g2.edges() {
            edges.push(Edge::new(u * n2 + e.u, u * n2 + e.v));
        }
    }
    for e in g1.edges() {
        for v in 0..n2 {
            edges.push(Edge::new(e.u * n2 + v, e.v * n2 + v));
        }
    }
    Graph::from_valid_edges(g1.n() * n2, edges)
}

/// Partition of a vertex's incident edges for [`split_vertex`]. Edges are
/// named by their other endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct VertexSplitSpec {
    pub target: usize,
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
    pub shared: Vec<usize>,
}

/// Replaces `target` by two nonadjacent vertices: the first keeps the label
/// `target` and receives `part_a ∪ shared`, the second gets the new label `n`
/// and receives `part_b ∪ shared`.
pub fn split_vertex(g: &Graph, spec: &VertexSplitSpec) -> Result<Graph, GraphError> {
    let t = spec.target;
    if t >= g.n() {
        return Err(GraphError::InvalidSplit(format!(
            "target {t} outside 0..{}",
            g.n()
        )));
    }
    let mut listed: Vec<usize> = spec
        .part_a
        .iter()
        .chain(&spec.part_b)
        .chain(&spec.shared)
        .copied()
        .collect();
    listed.sort_unstable();
    let len_before = listed.len();
    listed.dedup();
    if listed.len() != len_before {
        return Err(GraphError::InvalidSplit(
            "parts are not pairwise disjoint".into(),
        ));
    }
    let incident: Vec<usize> = g.neighbors(t).collect();
    if listed != incident {
        return Err(GraphError::InvalidSplit(format!(
            "parts {listed:?} do not cover the incident edges {incident:?} of vertex {t}"
        )));
    }
    let fresh = g.n();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !e.contains(t))
        .collect();
    for &w in spec.part_a.iter().chain(&spec.shared) {
        edges.push(Edge::new(t, w));
    }
    for &w in spec.part_b.iter().chain(&spec.shared) {
        edges.push(Edge::new(fresh, w));
    }
    Ok(Graph::from_valid_edges(g.n() + 1, edges))
}
