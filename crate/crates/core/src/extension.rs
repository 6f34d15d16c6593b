//! Degree-extensions: adding a perfect matching of the complement so every
//! degree goes up by exactly one.
//!
//! Several routes are provided. [`complete_extensions`] is exhaustive; the
//! spanning-path and partition routes build one extension from a Hamiltonian
//! path of the complement; the bipartite constructions work from maximum
//! matchings of the cross non-adjacency graph.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, hamiltonian_path, is_isomorphic, Bipartition, Edge, Graph};
use crate::matching::{
    enumerate_perfect_matchings, first_perfect_matching, hall_condition_nc, max_bidistinct_pairs,
    Matching,
};

/// `G + M`, where `M` must be a perfect matching of the complement of `G`.
pub fn extend_with_matching(g: &Graph, m: &Matching) -> Result<Graph> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    for &(u, v) in m.pairs() {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if g.has_edge(u, v) {
            return Err(Error::MatchingNotInComplement(u, v));
        }
    }
    if !m.covers_all(n) {
        return Err(Error::MatchingNotPerfect);
    }
    g.with_edges(m.pairs().iter().copied())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub matching: Matching,
    pub graph: Graph,
}

/// All complete degree-extensions of a graph, grouped up to isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSet {
    pub base: Graph,
    pub extensions: Vec<Extension>,
    /// Extension indices per class; classes ordered by first member.
    pub iso_classes: Vec<Vec<usize>>,
}

impl ExtensionSet {
    /// JSON shape: base graph, list of matchings, class index lists.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "base": self.base,
            "matchings": self.extensions.iter().map(|e| &e.matching).collect::<Vec<_>>(),
            "iso_classes": self.iso_classes,
        })
    }
}

/// Groups graphs into isomorphism classes, comparing each graph only with
/// class representatives sharing its invariant key.
pub fn isomorphism_classes(graphs: &[&Graph]) -> Result<Vec<Vec<usize>>> {
    let keys: Vec<Vec<usize>> = graphs.iter().map(|g| g.invariant_key()).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    'next: for (i, g) in graphs.iter().enumerate() {
        for class in classes.iter_mut() {
            let rep = class[0];
            if keys[rep] == keys[i] && is_isomorphic(graphs[rep], g)? {
                class.push(i);
                continue 'next;
            }
        }
        classes.push(vec![i]);
    }
    Ok(classes)
}

/// One extension per perfect matching of the complement, in lexicographic
/// matching order. An empty list means no extension exists.
pub fn complete_extensions(g: &Graph) -> Result<ExtensionSet> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let extensions = enumerate_perfect_matchings(&g.complement())?
        .into_iter()
        .map(|m| {
            let graph = extend_with_matching(g, &m)?;
            Ok(Extension { matching: m, graph })
        })
        .collect::<Result<Vec<_>>>()?;
    let graphs: Vec<&Graph> = extensions.iter().map(|e| &e.graph).collect();
    let iso_classes = isomorphism_classes(&graphs)?;
    Ok(ExtensionSet {
        base: g.clone(),
        extensions,
        iso_classes,
    })
}

/// Which vertex is held out of an odd-order extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum PivotRule {
    #[default]
    MaxDegree,
    MinDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncompleteExtension {
    pub pivot: usize,
    pub matching: Matching,
    pub graph: Graph,
}

/// Odd-order extension: remove the pivot (lowest-index vertex of maximum,
/// or minimum, degree), extend the rest by the first perfect matching of its
/// complement, and put the pivot back untouched.
pub fn incomplete_extension(g: &Graph, rule: PivotRule) -> Result<Option<IncompleteExtension>> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Err(Error::EvenOrder(n));
    }
    if n < 3 {
        return Err(Error::TooSmall("incomplete extension needs n >= 3".into()));
    }
    let target = match rule {
        PivotRule::MaxDegree => g.max_degree(),
        PivotRule::MinDegree => g.min_degree(),
    };
    let pivot = (0..n).find(|&v| g.degree(v) == target).expect("extremal vertex exists");
    let rest: Vec<usize> = (0..n).filter(|&v| v != pivot).collect();
    let sub = g.induced_subgraph(&rest)?;
    let Some(m) = first_perfect_matching(&sub.complement())? else {
        return Ok(None);
    };
    let matching = m.mapped(&rest)?;
    let graph = g.with_edges(matching.pairs().iter().copied())?;
    Ok(Some(IncompleteExtension {
        pivot,
        matching,
        graph,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathExtension {
    /// Spanning path of the complement.
    pub path: Vec<usize>,
    pub matching: Matching,
    pub graph: Graph,
}

/// The 1st, 3rd, 5th, ... edges of a path with an even number of vertices.
fn alternate_edges(path: &[usize]) -> Vec<Edge> {
    path.chunks_exact(2).map(|c| (c[0], c[1])).collect()
}

/// Extension from a spanning path of the complement, taking every other
/// edge of the path.
pub fn extension_via_spanning_path(g: &Graph) -> Result<Option<PathExtension>> {
    let n = g.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let Some(path) = hamiltonian_path(&g.complement())? else {
        return Ok(None);
    };
    let matching = Matching::new(alternate_edges(&path))?;
    let graph = extend_with_matching(g, &matching)?;
    Ok(Some(PathExtension {
        path,
        matching,
        graph,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionExtension {
    /// One spanning path (original labels) per part.
    pub paths: Vec<Vec<usize>>,
    pub matching: Matching,
    pub graph: Graph,
}

/// Extension assembled part by part: each even-size part contributes the
/// alternate edges of a spanning path of the complement of its induced
/// subgraph.
pub fn extension_via_partition(g: &Graph, parts: &[Vec<usize>]) -> Result<Option<PartitionExtension>> {
    let n = g.order();
    let mut seen = 0u64;
    for part in parts {
        for &v in part {
            if v >= n {
                return Err(Error::NotAPartition(format!("vertex {v} out of range")));
            }
            if seen & bit(v) != 0 {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
            seen |= bit(v);
        }
    }
    if seen.count_ones() as usize != n {
        return Err(Error::NotAPartition("parts do not cover every vertex".into()));
    }
    if let Some(i) = parts.iter().position(|p| p.len() % 2 == 1) {
        return Err(Error::OddPart(i));
    }
    let mut paths = Vec::with_capacity(parts.len());
    let mut pairs = Vec::with_capacity(n / 2);
    for part in parts.iter().filter(|p| !p.is_empty()) {
        let sub = g.induced_subgraph(part)?;
        let Some(local) = hamiltonian_path(&sub.complement())? else {
            return Ok(None);
        };
        let path: Vec<usize> = local.iter().map(|&i| part[i]).collect();
        pairs.extend(alternate_edges(&path));
        paths.push(path);
    }
    let matching = Matching::new(pairs)?;
    let graph = extend_with_matching(g, &matching)?;
    Ok(Some(PartitionExtension {
        paths,
        matching,
        graph,
    }))
}

/// Result of the bi-distinct-pair construction for bipartite graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteConstruction {
    pub graph: Graph,
    /// Maximum number of bi-distinct non-adjacent cross pairs.
    pub ell: usize,
    /// How many of them were added (`ell` or `ell - 1`).
    pub pairs_used: usize,
    pub cross_pairs: Vec<Edge>,
    pub x_pairs: Vec<Edge>,
    pub y_pairs: Vec<Edge>,
    /// Side sizes after orienting so that `|X| >= |Y|`.
    pub x_size: usize,
    pub y_size: usize,
}

/// Pairs up `vertices` along non-edges of `g`, by backtracking through the
/// lexicographically first perfect matching of the induced complement.
fn pair_leftovers(g: &Graph, vertices: &[usize], side: &str) -> Result<Vec<Edge>> {
    if vertices.is_empty() {
        return Ok(Vec::new());
    }
    if vertices.len() % 2 == 1 {
        return Err(Error::LeftoverUnpairable(format!(
            "{} leftover {side}-vertices is odd",
            vertices.len()
        )));
    }
    let sub = g.induced_subgraph(vertices)?.complement();
    match first_perfect_matching(&sub)? {
        Some(m) => Ok(m
            .pairs()
            .iter()
            .map(|&(a, b)| (vertices[a], vertices[b]))
            .collect()),
        None => Err(Error::LeftoverUnpairable(format!(
            "no pairing of leftover {side}-vertices along non-edges"
        ))),
    }
}

/// Complete extension of a balanced bipartite graph (side sizes of equal
/// parity): add `k` bi-distinct non-adjacent cross pairs, where `k` is `ell`
/// or `ell - 1` chosen so that `|X| - k` is even, then pair the leftover
/// vertices within each side. Sides are swapped first if `|X| < |Y|`.
pub fn bipartite_extension_construct(b: &Graph, p: &Bipartition) -> Result<BipartiteConstruction> {
    p.validate(b)?;
    let p = if p.x.len() >= p.y.len() { p.clone() } else { p.swapped() };
    let (nx, ny) = (p.x.len(), p.y.len());
    if (nx + ny) % 2 == 1 {
        return Err(Error::OddOrder(nx + ny));
    }
    let pairing = max_bidistinct_pairs(b, &p)?;
    let ell = pairing.ell;
    let used = if ell % 2 == nx % 2 {
        ell
    } else if ell > 0 {
        ell - 1
    } else {
        return Err(Error::LeftoverUnpairable(format!(
            "no cross pair is available and |X| = {nx} is odd"
        )));
    };
    let mut sorted = pairing.pairs.clone();
    sorted.sort_unstable();
    let cross_pairs: Vec<Edge> = sorted[..used].to_vec();
    let mut matched = 0u64;
    for &(x, y) in &cross_pairs {
        matched |= bit(x) | bit(y);
    }
    let left_x: Vec<usize> = p.x.iter().copied().filter(|&v| matched & bit(v) == 0).collect();
    let left_y: Vec<usize> = p.y.iter().copied().filter(|&v| matched & bit(v) == 0).collect();
    let x_pairs = pair_leftovers(b, &left_x, "X")?;
    let y_pairs = pair_leftovers(b, &left_y, "Y")?;
    let matching = Matching::new(
        cross_pairs
            .iter()
            .chain(&x_pairs)
            .chain(&y_pairs)
            .copied(),
    )?;
    let graph = extend_with_matching(b, &matching)?;
    Ok(BipartiteConstruction {
        graph,
        ell,
        pairs_used: used,
        cross_pairs,
        x_pairs,
        y_pairs,
        x_size: nx,
        y_size: ny,
    })
}

/// Perfect matching of the cross non-adjacency graph, or
/// `HallConditionFails`.
fn hall_matching(b: &Graph, p: &Bipartition) -> Result<Matching> {
    if !hall_condition_nc(b, p)? {
        return Err(Error::HallConditionFails);
    }
    let pairing = max_bidistinct_pairs(b, p)?;
    Matching::new(pairing.pairs)
}

/// Extension that stays bipartite with the same sides: add a perfect
/// matching of the cross non-adjacency graph.
pub fn bipartite_preserving_extension(b: &Graph, p: &Bipartition) -> Result<Graph> {
    let m = hall_matching(b, p)?;
    extend_with_matching(b, &m)
}

/// Take the bipartite-preserving matching `M`, drop two of its pairs
/// `x1y1`, `x2y2` and add `x1x2`, `y1y2` instead.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SwapExtension {
    pub removed: [Edge; 2],
    pub added: [Edge; 2],
    pub matching: Matching,
    pub graph: Graph,
}

fn swap_with(b: &Graph, p: &Bipartition, m: &Matching, i: usize, j: usize) -> Result<SwapExtension> {
    let xm = p.x_mask();
    let orient = |(a, c): Edge| if xm & bit(a) != 0 { (a, c) } else { (c, a) };
    let (x1, y1) = orient(m.pairs()[i]);
    let (x2, y2) = orient(m.pairs()[j]);
    let pairs = m
        .pairs()
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i && k != j)
        .map(|(_, &e)| e)
        .chain([(x1, x2), (y1, y2)]);
    let matching = Matching::new(pairs)?;
    let graph = extend_with_matching(b, &matching)?;
    Ok(SwapExtension {
        removed: [(x1, y1), (x2, y2)],
        added: [(x1.min(x2), x1.max(x2)), (y1.min(y2), y1.max(y2))],
        matching,
        graph,
    })
}

fn swap_preconditions(b: &Graph, p: &Bipartition) -> Result<Matching> {
    p.validate(b)?;
    if p.x.len() < 2 {
        return Err(Error::TooSmall("swap extension needs |X| >= 2".into()));
    }
    hall_matching(b, p)
}

/// Swap variant using the two pairs of `M` that come first in
/// lexicographic order.
pub fn bipartite_swap_extension(b: &Graph, p: &Bipartition) -> Result<SwapExtension> {
    let m = swap_preconditions(b, p)?;
    swap_with(b, p, &m, 0, 1)
}

/// Every choice of two pairs from `M`.
pub fn bipartite_swap_extensions_all(b: &Graph, p: &Bipartition) -> Result<Vec<SwapExtension>> {
    let m = swap_preconditions(b, p)?;
    let k = m.len();
    (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| swap_with(b, p, &m, i, j))
        .collect()
}

/// For `Δ(G) - δ(G) = 1`: add a perfect matching on the deficient vertices
/// (complement edges only) so the result is `Δ(G)`-regular.
pub fn partial_extension(g: &Graph) -> Result<Option<Graph>> {
    let (max, min) = (g.max_degree(), g.min_degree());
    if max != min + 1 {
        return Err(Error::NotAlmostRegular { max, min });
    }
    let deficient: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) < max).collect();
    if deficient.len() % 2 == 1 {
        return Ok(None);
    }
    let sub = g.induced_subgraph(&deficient)?.complement();
    let Some(m) = first_perfect_matching(&sub)? else {
        return Ok(None);
    };
    Ok(Some(g.with_edges(m.pairs().iter().map(|&(a, b)| (deficient[a], deficient[b])))?))
}
