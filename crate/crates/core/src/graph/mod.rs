//! Simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is held twice: as a sorted edge list and as one neighbour
//! bitmask per vertex. The bitmask form caps the order at
//! [`MAX_VERTICES`]; the searches built on top are exponential anyway.

mod family;
pub mod generate;
mod hamilton;
pub mod io;
mod iso;
mod structure;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use family::Family;
pub use hamilton::{hamiltonian_cycle, hamiltonian_path};
pub use iso::{is_isomorphic, vertex_invariants, ISO_SIZE_LIMIT};
pub use structure::{check_dense_diameter, classify_dense_graph, DenseClassification, DiameterCheck};

/// Hard upper bound on the order of any [`Graph`].
pub const MAX_VERTICES: usize = 64;

pub type Edge = (usize, usize);

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        Graph::new(repr.n, repr.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        if n == 0 {
            return Err(Error::InvalidParameter("graph order must be at least 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeLimitExceeded {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u] & bit(v) != 0 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self::from_adjacency(adj))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// Builds from symmetric, loop-free bitmasks. Callers guarantee validity.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        let mut edges = Vec::new();
        for u in 0..n {
            debug_assert_eq!(adj[u] & bit(u), 0);
            debug_assert_eq!(adj[u] & !full_mask(n), 0);
            for v in bits(adj[u] & !full_mask(u + 1)) {
                debug_assert_ne!(adj[v] & bit(u), 0);
                edges.push((u, v));
            }
        }
        Self { n, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbour bitmask of `v`.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    pub(crate) fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n).map(|v| !self.adj[v] & all & !bit(v)).collect();
        Graph::from_adjacency(adj)
    }

    /// Returns a copy with the extra edges added. Every new pair must be a
    /// non-edge.
    pub fn with_edges<I>(&self, extra: I) -> Result<Graph>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut adj = self.adj.clone();
        for (u, v) in extra {
            for w in [u, v] {
                if w >= self.n {
                    return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u] & bit(v) != 0 {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            if seen & bit(v) != 0 {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            seen |= bit(v);
        }
        if vertices.is_empty() {
            return Err(Error::InvalidParameter("empty vertex set".into()));
        }
        let adj = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[u] & bit(w) != 0)
                    .fold(0u64, |m, (i, _)| m | bit(i))
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
            seen |= bit(p);
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        let all = full_mask(self.n);
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let next = bits(frontier).fold(0, |m, v| m | self.adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == all
    }

    /// Largest shortest-path distance; `None` when the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Number of triangles through each vertex.
    pub fn triangles_per_vertex(&self) -> Vec<usize> {
        (0..self.n)
            .map(|v| {
                self.neighbors(v)
                    .map(|w| (self.adj[v] & self.adj[w]).count_ones() as usize)
                    .sum::<usize>()
                    / 2
            })
            .collect()
    }

    pub fn has_triangle(&self) -> bool {
        self.edges
            .iter()
            .any(|&(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Two-colours each component from its lowest vertex; `None` when an odd
    /// cycle exists.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u]?;
                for w in self.neighbors(u) {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (x, y): (Vec<_>, Vec<_>) = (0..self.n).partition(|&v| side[v] == Some(false));
        Some(Bipartition { x, y })
    }

    /// Relabelling-invariant fingerprint used to bucket graphs before an
    /// isomorphism test.
    pub fn invariant_key(&self) -> Vec<usize> {
        let mut key = vec![self.n, self.edge_count()];
        let mut per_vertex = vertex_invariants(self);
        per_vertex.sort_unstable();
        for inv in per_vertex {
            key.extend(inv);
        }
        key
    }

    /// Undirected DOT rendering.
    pub fn to_dot(&self) -> String {
        io::to_dot(self)
    }
}

/// A split of the vertex set into two independent sides.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Bipartition {
    /// Takes `x` as given and puts every other vertex of `g` in `y`.
    pub fn from_x(g: &Graph, x: &[usize]) -> Result<Self> {
        let mut in_x = vec![false; g.order()];
        for &v in x {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.order() });
            }
            if in_x[v] {
                return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
            }
            in_x[v] = true;
        }
        let mut xs = x.to_vec();
        xs.sort_unstable();
        let y = (0..g.order()).filter(|&v| !in_x[v]).collect();
        let p = Self { x: xs, y };
        p.validate(g)?;
        Ok(p)
    }

    pub fn x_mask(&self) -> u64 {
        self.x.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn y_mask(&self) -> u64 {
        self.y.iter().fold(0, |m, &v| m | bit(v))
    }

    pub fn swapped(&self) -> Self {
        Self {
            x: self.y.clone(),
            y: self.x.clone(),
        }
    }

    /// Checks the sides cover `V(g)` disjointly and are both independent.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.order();
        let mut seen = 0u64;
        for &v in self.x.iter().chain(&self.y) {
            if v >= n {
                return Err(Error::InvalidPartition(format!("vertex {v} out of range")));
            }
            if seen & bit(v) != 0 {
                return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
            }
            seen |= bit(v);
        }
        if seen != full_mask(n) {
            return Err(Error::InvalidPartition("sides do not cover every vertex".into()));
        }
        let (xm, ym) = (self.x_mask(), self.y_mask());
        for &(u, v) in g.edges() {
            let same = (xm & bit(u) != 0 && xm & bit(v) != 0) || (ym & bit(u) != 0 && ym & bit(v) != 0);
            if same {
                return Err(Error::InvalidPartition(format!("edge {{{u},{v}}} inside one side")));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, [(1, 0), (0, 1)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn path_construction() {
        let g = p4();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn complement_examples() {
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        let c4 = Family::Cycle(4).build().unwrap();
        assert_eq!(c4.complement().edges(), &[(0, 2), (1, 3)]);
        assert_eq!(p4().complement().edges(), &[(0, 2), (0, 3), (1, 3)]);
    }

    #[test]
    fn diameters() {
        assert_eq!(Family::Complete(4).build().unwrap().diameter(), Some(1));
        assert_eq!(Family::Cycle(6).build().unwrap().diameter(), Some(3));
        assert_eq!(Family::Cycle(5).build().unwrap().diameter(), Some(2));
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), None);
        assert!(!two_edges.is_connected());
        assert_eq!(Graph::empty(1).unwrap().diameter(), Some(0));
    }

    #[test]
    fn induced_subgraph_relabels_in_input_order() {
        let g = Family::Path(5).build().unwrap();
        let h = g.induced_subgraph(&[4, 3, 1]).unwrap();
        assert_eq!(h.edges(), &[(0, 1)]);
        assert!(g.induced_subgraph(&[1, 1]).is_err());
    }

    #[test]
    fn bipartite_and_triangles() {
        let c6 = Family::Cycle(6).build().unwrap();
        let p = c6.is_bipartite().unwrap();
        assert_eq!(p.x, vec![0, 2, 4]);
        assert_eq!(p.y, vec![1, 3, 5]);
        assert!(Family::Cycle(5).build().unwrap().is_bipartite().is_none());
        assert!(Family::Cycle(3).build().unwrap().has_triangle());
        assert!(!c6.has_triangle());
        let k4 = Family::Complete(4).build().unwrap();
        assert_eq!(k4.triangles_per_vertex(), vec![3; 4]);
    }

    #[test]
    fn bipartition_validation() {
        let c6 = Family::Cycle(6).build().unwrap();
        assert!(Bipartition::from_x(&c6, &[0, 2, 4]).is_ok());
        assert!(matches!(
            Bipartition::from_x(&c6, &[0, 1, 4]),
            Err(Error::InvalidPartition(_))
        ));
    }

    #[test]
    fn serde_round_trip() {
        let g = p4();
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
