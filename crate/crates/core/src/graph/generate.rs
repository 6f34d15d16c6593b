//! Exhaustive and random graph generators used by the verification sweeps.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{bit, is_isomorphic, Graph};
use crate::error::Result;

/// Calls `f` on every labelled graph on `n` vertices whose maximum degree is
/// at most `max_degree`. Pairs are decided in lexicographic order.
pub fn for_each_labeled_graph<F>(n: usize, max_degree: usize, mut f: F) -> Result<()>
where
    F: FnMut(&Graph),
{
    crate::check_size(n, 12)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut adj = vec![0u64; n];
    fn rec<F: FnMut(&Graph)>(
        pairs: &[(usize, usize)],
        i: usize,
        adj: &mut [u64],
        max_degree: usize,
        f: &mut F,
    ) {
        if i == pairs.len() {
            f(&Graph::from_adjacency(adj.to_vec()));
            return;
        }
        rec(pairs, i + 1, adj, max_degree, f);
        let (u, v) = pairs[i];
        if (adj[u].count_ones() as usize) < max_degree && (adj[v].count_ones() as usize) < max_degree {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            rec(pairs, i + 1, adj, max_degree, f);
            adj[u] &= !bit(v);
            adj[v] &= !bit(u);
        }
    }
    if n == 0 {
        return Ok(());
    }
    rec(&pairs, 0, &mut adj, max_degree, &mut f);
    Ok(())
}

/// One representative per isomorphism class of graphs on `n` vertices.
///
/// Built by vertex augmentation: every graph on `n` vertices arises from a
/// representative on `n - 1` vertices plus a new vertex with some
/// neighbourhood, and duplicates are removed by invariant bucketing followed
/// by an exact isomorphism test.
pub fn graphs_up_to_isomorphism(n: usize) -> Result<Vec<Graph>> {
    crate::check_size(n, 8)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 2..=n {
        let mut buckets: HashMap<Vec<usize>, Vec<Graph>> = HashMap::new();
        let mut next = Vec::new();
        for base in &level {
            for nbrs in 0..(1u64 << (k - 1)) {
                let mut adj: Vec<u64> = base.adjacency().to_vec();
                adj.push(nbrs);
                for (v, row) in adj.iter_mut().enumerate().take(k - 1) {
                    if nbrs & bit(v) != 0 {
                        *row |= bit(k - 1);
                    }
                }
                let g = Graph::from_adjacency(adj);
                let bucket = buckets.entry(g.invariant_key()).or_default();
                let mut fresh = true;
                for h in bucket.iter() {
                    if is_isomorphic(&g, h)? {
                        fresh = false;
                        break;
                    }
                }
                if fresh {
                    bucket.push(g.clone());
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn connected_graphs_up_to_isomorphism(n: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to_isomorphism(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges)
}

/// Random bipartite graph with `X = 0..x`, `Y = x..x+y`, each cross pair
/// present with probability `p`.
pub fn random_bipartite<R: Rng + ?Sized>(x: usize, y: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let edges: Vec<_> = (0..x)
        .flat_map(|u| (x..x + y).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(x + y, edges)
}

/// Random connected graph with maximum degree at most `max_degree`: a random
/// spanning tree grown under the degree cap, then `extra` attempted chords.
/// Returns `None` when the tree cannot be completed under the cap.
pub fn random_connected_bounded<R: Rng + ?Sized>(
    n: usize,
    max_degree: usize,
    extra: usize,
    rng: &mut R,
) -> Result<Option<Graph>> {
    if n == 1 {
        return Ok(Some(Graph::empty(1)?));
    }
    if max_degree == 0 {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    let mut adj = vec![0u64; n];
    for i in 1..n {
        let v = order[i];
        let open: Vec<usize> = order[..i]
            .iter()
            .copied()
            .filter(|&u| deg[u] < max_degree)
            .collect();
        let Some(&u) = open.choose(rng) else {
            return Ok(None);
        };
        deg[u] += 1;
        deg[v] += 1;
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        edges.push((u, v));
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && adj[u] & bit(v) == 0 && deg[u] < max_degree && deg[v] < max_degree {
            deg[u] += 1;
            deg[v] += 1;
            adj[u] |= bit(v);
            adj[v] |= bit(u);
            edges.push((u, v));
        }
    }
    Ok(Some(Graph::new(n, edges)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn unlabelled_counts() {
        // OEIS A000088 and A001349
        let all = [1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 2, 6, 21, 112];
        for n in 1..=6 {
            assert_eq!(graphs_up_to_isomorphism(n).unwrap().len(), all[n - 1], "n={n}");
            assert_eq!(
                connected_graphs_up_to_isomorphism(n).unwrap().len(),
                connected[n - 1],
                "n={n}"
            );
        }
    }

    #[test]
    fn labelled_counts() {
        let mut count = 0;
        for_each_labeled_graph(4, 3, |_| count += 1).unwrap();
        assert_eq!(count, 64);
        // perfect matchings plus the empty graph plus single edges on 4 vertices
        let mut count = 0;
        for_each_labeled_graph(4, 1, |_| count += 1).unwrap();
        assert_eq!(count, 1 + 6 + 3);
    }

    #[test]
    fn bounded_generator_respects_cap() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            if let Some(g) = random_connected_bounded(10, 3, 20, &mut rng).unwrap() {
                assert!(g.is_connected());
                assert!(g.max_degree() <= 3);
            }
        }
    }
}
