//! Perfect-matching enumeration and maximum bipartite matching.

use std::collections::VecDeque;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, bits, full_mask, Bipartition, Edge, Graph};

/// A set of vertex-disjoint pairs, stored as `(u, v)` with `u < v` in
/// lexicographic order. Serializes as a JSON array of `[u, v]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<[usize; 2]>", into = "Vec<[usize; 2]>")]
pub struct Matching {
    pairs: Vec<Edge>,
}

impl TryFrom<Vec<[usize; 2]>> for Matching {
    type Error = Error;

    fn try_from(v: Vec<[usize; 2]>) -> Result<Self> {
        Matching::new(v.into_iter().map(|[a, b]| (a, b)))
    }
}

impl From<Matching> for Vec<[usize; 2]> {
    fn from(m: Matching) -> Self {
        m.pairs.into_iter().map(|(a, b)| [a, b]).collect()
    }
}

impl Matching {
    pub fn new<I: IntoIterator<Item = Edge>>(pairs: I) -> Result<Self> {
        let mut out: Vec<Edge> = pairs
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        out.sort_unstable();
        let mut used = std::collections::BTreeSet::new();
        for &(a, b) in &out {
            if a == b {
                return Err(Error::InvalidMatching(format!("pair {{{a},{b}}} is a loop")));
            }
            for w in [a, b] {
                if !used.insert(w) {
                    return Err(Error::InvalidMatching(format!("vertex {w} is matched twice")));
                }
            }
        }
        Ok(Self { pairs: out })
    }

    pub fn pairs(&self) -> &[Edge] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Mask of matched vertices; every endpoint must be below 64.
    pub fn covered_mask(&self) -> u64 {
        self.pairs.iter().fold(0, |m, &(a, b)| m | bit(a) | bit(b))
    }

    pub fn covers_all(&self, n: usize) -> bool {
        2 * self.len() == n && self.pairs.iter().all(|&(_, b)| b < n)
    }

    /// Renames every endpoint through `map`.
    pub fn mapped(&self, map: &[usize]) -> Result<Self> {
        Matching::new(self.pairs.iter().map(|&(a, b)| (map[a], map[b])))
    }
}

/// Visits every perfect matching of `g` in lexicographic order. The lowest
/// uncovered vertex is always matched next, so each matching is produced
/// exactly once. Returning `ControlFlow::Break` stops the walk.
pub fn for_each_perfect_matching<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    crate::check_size(g.order(), crate::size_limit())?;
    let n = g.order();
    if n % 2 == 1 {
        return Ok(());
    }
    let mut stack = Vec::with_capacity(n / 2);
    let _ = walk(g, full_mask(n), &mut stack, &mut visit);
    Ok(())
}

fn walk<F>(g: &Graph, uncovered: u64, stack: &mut Vec<Edge>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Matching) -> ControlFlow<()>,
{
    if uncovered == 0 {
        return visit(&Matching { pairs: stack.clone() });
    }
    if bits(uncovered).any(|v| g.neighbors_mask(v) & uncovered == 0) {
        return ControlFlow::Continue(());
    }
    let u = uncovered.trailing_zeros() as usize;
    let rest = uncovered & !bit(u);
    for v in bits(g.neighbors_mask(u) & rest) {
        stack.push((u, v));
        walk(g, rest & !bit(v), stack, visit)?;
        stack.pop();
    }
    ControlFlow::Continue(())
}

/// All perfect matchings of `g`; empty for odd order.
pub fn enumerate_perfect_matchings(g: &Graph) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for_each_perfect_matching(g, |m| {
        out.push(m.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The lexicographically first perfect matching, if any.
pub fn first_perfect_matching(g: &Graph) -> Result<Option<Matching>> {
    let mut found = None;
    for_each_perfect_matching(g, |m| {
        found = Some(m.clone());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Counts perfect matchings, stopping once `cap` is reached.
pub fn count_perfect_matchings(g: &Graph, cap: Option<usize>) -> Result<usize> {
    let mut count = 0;
    for_each_perfect_matching(g, |_| {
        count += 1;
        if cap.is_some_and(|c| count >= c) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(count)
}

/// Maximum matching between `left` vertices `0..adj.len()` and right vertices
/// `0..right`, by Hopcroft–Karp phases. Returns the partner of each left
/// vertex.
pub(crate) fn hopcroft_karp_lists(right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    const INF: usize = usize::MAX;
    let left = adj.len();
    let mut mate_l: Vec<Option<usize>> = vec![None; left];
    let mut mate_r: Vec<Option<usize>> = vec![None; right];
    let mut dist = vec![INF; left];

    loop {
        // layer the free left vertices and everything reachable by
        // alternating paths
        let mut queue = VecDeque::new();
        for x in 0..left {
            if mate_l[x].is_none() {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = INF;
            }
        }
        let mut reachable_free = false;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match mate_r[y] {
                    None => reachable_free = true,
                    Some(x2) if dist[x2] == INF => {
                        dist[x2] = dist[x] + 1;
                        queue.push_back(x2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !reachable_free {
            break;
        }
        for x in 0..left {
            if mate_l[x].is_none() {
                augment(x, adj, &mut dist, &mut mate_l, &mut mate_r);
            }
        }
    }
    mate_l
}

fn augment(
    x: usize,
    adj: &[Vec<usize>],
    dist: &mut [usize],
    mate_l: &mut [Option<usize>],
    mate_r: &mut [Option<usize>],
) -> bool {
    for &y in &adj[x] {
        let ok = match mate_r[y] {
            None => true,
            Some(x2) => dist[x2] == dist[x] + 1 && augment(x2, adj, dist, mate_l, mate_r),
        };
        if ok {
            mate_l[x] = Some(y);
            mate_r[y] = Some(x);
            return true;
        }
    }
    // dead end for this phase
    dist[x] = usize::MAX;
    false
}

/// Cross pairs `(x, y)` selected by `keep`, as adjacency lists over the
/// positions of `p.x` and `p.y`.
fn cross_lists<F: Fn(usize, usize) -> bool>(p: &Bipartition, keep: F) -> Vec<Vec<usize>> {
    p.x.iter()
        .map(|&x| {
            p.y.iter()
                .enumerate()
                .filter(|&(_, &y)| keep(x, y))
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

fn pairs_from_mates(p: &Bipartition, mates: &[Option<usize>]) -> Vec<(usize, usize)> {
    mates
        .iter()
        .enumerate()
        .filter_map(|(i, m)| m.map(|j| (p.x[i], p.y[j])))
        .collect()
}

/// Maximum-cardinality matching of a bipartite graph.
pub fn hopcroft_karp(b: &Graph, p: &Bipartition) -> Result<Matching> {
    p.validate(b)?;
    let adj = cross_lists(p, |x, y| b.has_edge(x, y));
    let mates = hopcroft_karp_lists(p.y.len(), &adj);
    Matching::new(pairs_from_mates(p, &mates))
}

/// Pairs `(x, y)`, `x ∈ X`, `y ∈ Y`, with distinct first and distinct second
/// coordinates, each a non-edge of the host graph. `ell` is the largest
/// possible number of such pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiDistinctPairing {
    pub pairs: Vec<(usize, usize)>,
    pub ell: usize,
}

/// Maximum matching in the X–Y non-adjacency graph. Pairs are listed in the
/// order of `p.x`.
pub fn max_bidistinct_pairs(b: &Graph, p: &Bipartition) -> Result<BiDistinctPairing> {
    p.validate(b)?;
    let adj = cross_lists(p, |x, y| !b.has_edge(x, y));
    let mates = hopcroft_karp_lists(p.y.len(), &adj);
    let pairs = pairs_from_mates(p, &mates);
    Ok(BiDistinctPairing {
        ell: pairs.len(),
        pairs,
    })
}

/// Hall's condition on non-neighbourhoods: `|N^c(S)| >= |S|` for every
/// `S ⊆ X`. Equivalent to the non-adjacency graph having a matching that
/// saturates `X`.
pub fn hall_condition_nc(b: &Graph, p: &Bipartition) -> Result<bool> {
    p.validate(b)?;
    if p.x.len() != p.y.len() {
        return Err(Error::UnbalancedPartition {
            x: p.x.len(),
            y: p.y.len(),
        });
    }
    Ok(max_bidistinct_pairs(b, p)?.ell == p.x.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn m(pairs: &[(usize, usize)]) -> Matching {
        Matching::new(pairs.iter().copied()).unwrap()
    }

    fn part(g: &Graph, x: &[usize]) -> Bipartition {
        Bipartition::from_x(g, x).unwrap()
    }

    fn k33_minus_pm() -> Graph {
        let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
        Graph::new(
            6,
            k33.edges()
                .iter()
                .copied()
                .filter(|e| ![(0, 3), (1, 4), (2, 5)].contains(e)),
        )
        .unwrap()
    }

    #[test]
    fn matching_validation() {
        assert_eq!(m(&[(3, 1), (0, 2)]).pairs(), &[(0, 2), (1, 3)]);
        assert!(Matching::new([(0, 1), (1, 2)]).is_err());
        assert!(Matching::new([(2, 2)]).is_err());
        let json = serde_json::to_string(&m(&[(1, 3), (0, 2)])).unwrap();
        assert_eq!(json, "[[0,2],[1,3]]");
    }

    #[test]
    fn p4_complement_has_one_matching() {
        let g = Family::Path(4).build().unwrap().complement();
        assert_eq!(enumerate_perfect_matchings(&g).unwrap(), vec![m(&[(0, 2), (1, 3)])]);
    }

    #[test]
    fn p6_complement_matches_listed_extensions() {
        let g = Family::Path(6).build().unwrap().complement();
        let got = enumerate_perfect_matchings(&g).unwrap();
        // v1v6,v2v4,v3v5 / v1v3,v2v5,v4v6 / v1v4,v2v5,v3v6 / v1v5,v2v4,v3v6 / v1v4,v2v6,v3v5
        let mut want = vec![
            m(&[(0, 5), (1, 3), (2, 4)]),
            m(&[(0, 2), (1, 4), (3, 5)]),
            m(&[(0, 3), (1, 4), (2, 5)]),
            m(&[(0, 4), (1, 3), (2, 5)]),
            m(&[(0, 3), (1, 5), (2, 4)]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn complete_graph_counts() {
        for (k, expected) in [(1, 1), (2, 3), (3, 15), (4, 105)] {
            let g = Family::Complete(2 * k).build().unwrap();
            assert_eq!(enumerate_perfect_matchings(&g).unwrap().len(), expected);
            assert_eq!(count_perfect_matchings(&g, None).unwrap(), expected);
        }
        let k6 = Family::Complete(6).build().unwrap();
        assert_eq!(count_perfect_matchings(&k6, Some(2)).unwrap(), 2);
        assert!(enumerate_perfect_matchings(&Family::Complete(5).build().unwrap())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn hopcroft_karp_examples() {
        let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
        assert_eq!(hopcroft_karp(&k33, &part(&k33, &[0, 1, 2])).unwrap().len(), 3);
        let c6 = Family::Cycle(6).build().unwrap();
        assert_eq!(hopcroft_karp(&c6, &part(&c6, &[0, 2, 4])).unwrap().len(), 3);
        let p5 = Family::Path(5).build().unwrap();
        let hk = hopcroft_karp(&p5, &part(&p5, &[0, 2, 4])).unwrap();
        assert_eq!(hk.len(), 2);
        assert!(hk.pairs().iter().all(|&(u, v)| p5.has_edge(u, v)));
    }

    #[test]
    fn invalid_partition_rejected() {
        let c6 = Family::Cycle(6).build().unwrap();
        let bad = Bipartition { x: vec![0, 1, 2], y: vec![3, 4, 5] };
        assert!(matches!(hopcroft_karp(&c6, &bad), Err(Error::InvalidPartition(_))));
        assert!(matches!(max_bidistinct_pairs(&c6, &bad), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn bidistinct_examples() {
        let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
        assert_eq!(max_bidistinct_pairs(&k33, &part(&k33, &[0, 1, 2])).unwrap().ell, 0);

        let c6 = Family::Cycle(6).build().unwrap();
        let got = max_bidistinct_pairs(&c6, &part(&c6, &[0, 2, 4])).unwrap();
        assert_eq!(got.ell, 3);
        assert_eq!(got.pairs, vec![(0, 3), (2, 5), (4, 1)]);

        let g = k33_minus_pm();
        let got = max_bidistinct_pairs(&g, &part(&g, &[0, 1, 2])).unwrap();
        assert_eq!(got.ell, 3);
        assert_eq!(got.pairs, vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn hall_examples() {
        let c6 = Family::Cycle(6).build().unwrap();
        assert!(hall_condition_nc(&c6, &part(&c6, &[0, 2, 4])).unwrap());
        let k33 = Family::CompleteBipartite(3, 3).build().unwrap();
        assert!(!hall_condition_nc(&k33, &part(&k33, &[0, 1, 2])).unwrap());
        let k44 = Family::CompleteBipartite(4, 4).build().unwrap();
        let minus = Graph::new(
            8,
            k44.edges().iter().copied().filter(|&(u, v)| v != u + 4),
        )
        .unwrap();
        assert!(hall_condition_nc(&minus, &part(&minus, &[0, 1, 2, 3])).unwrap());
        let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(
            hall_condition_nc(&k23, &part(&k23, &[0, 1])),
            Err(Error::UnbalancedPartition { x: 2, y: 3 })
        );
    }
}
