//! Brute-force reference implementations.
//!
//! Nothing here shares code paths with the main algorithms: colorings are
//! raw assignment scans, matchings are filtered pairings of the complete
//! graph, isomorphism scans every permutation. Keep it that way; these are
//! what the rest of the crate is checked against.

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::matching::Matching;

pub const BRUTE_COLORING_LIMIT: usize = 10;
pub const BRUTE_MATCHING_LIMIT: usize = 12;
pub const BRUTE_ISO_LIMIT: usize = 8;
pub const BRUTE_HALL_LIMIT: usize = 12;

fn cap(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeLimitExceeded { n, limit })
    } else {
        Ok(())
    }
}

/// Steps a base-`k` counter; returns false after the last assignment.
fn next_assignment(colors: &mut [usize], k: usize) -> bool {
    for c in colors.iter_mut() {
        *c += 1;
        if *c < k {
            return true;
        }
        *c = 0;
    }
    false
}

fn proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Smallest `k` for which some of the `k^n` assignments is proper.
pub fn brute_chi(g: &Graph) -> Result<usize> {
    let n = g.order();
    cap(n, BRUTE_COLORING_LIMIT)?;
    for k in 1..=n {
        let mut colors = vec![0; n];
        loop {
            if proper(g, &colors) {
                return Ok(k);
            }
            if !next_assignment(&mut colors, k) {
                break;
            }
        }
    }
    Ok(n)
}

/// Minimum and maximum of `Σ i·θ(c_i)` over every proper assignment that
/// uses all of colors `1..=χ`.
pub fn brute_chi_sums(g: &Graph) -> Result<(usize, usize)> {
    let n = g.order();
    cap(n, BRUTE_COLORING_LIMIT)?;
    let k = brute_chi(g)?;
    let mut best: Option<(usize, usize)> = None;
    let mut colors = vec![0; n];
    loop {
        if proper(g, &colors) {
            let mut used = vec![false; k];
            for &c in &colors {
                used[c] = true;
            }
            if used.iter().all(|&u| u) {
                let sum: usize = colors.iter().map(|&c| c + 1).sum();
                best = Some(match best {
                    None => (sum, sum),
                    Some((lo, hi)) => (lo.min(sum), hi.max(sum)),
                });
            }
        }
        if !next_assignment(&mut colors, k) {
            break;
        }
    }
    Ok(best.expect("a chi-coloring exists"))
}

/// Every pairing of the vertex set, kept when all pairs are edges of `g`.
pub fn brute_perfect_matchings(g: &Graph) -> Result<Vec<Matching>> {
    let n = g.order();
    cap(n, BRUTE_MATCHING_LIMIT)?;
    let mut all_pairings = Vec::new();
    if n.is_multiple_of(2) {
        let vertices: Vec<usize> = (0..n).collect();
        pairings(&vertices, &mut Vec::new(), &mut all_pairings);
    }
    let mut out: Vec<Matching> = all_pairings
        .into_iter()
        .filter(|p| p.iter().all(|&(u, v)| g.has_edge(u, v)))
        .map(|p| Matching::new(p).expect("pairings are disjoint"))
        .collect();
    out.sort();
    Ok(out)
}

fn pairings(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    let Some((&first, tail)) = rest.split_first() else {
        out.push(acc.clone());
        return;
    };
    for i in 0..tail.len() {
        let mut remaining = tail.to_vec();
        let partner = remaining.remove(i);
        acc.push((first, partner));
        pairings(&remaining, acc, out);
        acc.pop();
    }
}

/// Scans all `n!` bijections.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    let n = g.order();
    cap(n.max(h.order()), BRUTE_ISO_LIMIT)?;
    if n != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edges().iter().all(|&(u, v)| h.has_edge(perm[u], perm[v])) {
            return Ok(true);
        }
        if !next_permutation(&mut perm) {
            return Ok(false);
        }
    }
}

/// Lexicographic successor; false once `perm` is the last permutation.
pub(crate) fn next_permutation(perm: &mut [usize]) -> bool {
    if perm.len() < 2 {
        return false;
    }
    let Some(i) = (0..perm.len() - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..perm.len()).rev().find(|&j| perm[j] > perm[i]).expect("successor exists");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// Maximum bipartite matching size by dynamic programming over subsets of
/// used `Y` vertices.
pub fn brute_max_bipartite_matching(b: &Graph, p: &Bipartition) -> Result<usize> {
    p.validate(b)?;
    cap(p.y.len(), 20)?;
    let ys = p.y.len();
    // best[mask] = largest matching using exactly the Y vertices in mask,
    // over the X vertices processed so far
    let mut best: Vec<Option<usize>> = vec![None; 1 << ys];
    best[0] = Some(0);
    for &x in &p.x {
        let prev = best.clone();
        for (mask, value) in prev.iter().enumerate() {
            let Some(size) = *value else { continue };
            for (j, &y) in p.y.iter().enumerate() {
                if mask & (1 << j) == 0 && b.has_edge(x, y) {
                    let next = mask | (1 << j);
                    if best[next].is_none_or(|s| s < size + 1) {
                        best[next] = Some(size + 1);
                    }
                }
            }
        }
    }
    Ok(best.into_iter().flatten().max().unwrap_or(0))
}

/// Checks `|N^c(S)| >= |S|` for all `2^|X|` subsets.
pub fn brute_hall_nc(b: &Graph, p: &Bipartition) -> Result<bool> {
    p.validate(b)?;
    cap(p.x.len(), BRUTE_HALL_LIMIT)?;
    for subset in 0u32..(1 << p.x.len()) {
        let mut nc = std::collections::BTreeSet::new();
        for (i, &x) in p.x.iter().enumerate() {
            if subset & (1 << i) != 0 {
                nc.extend(p.y.iter().copied().filter(|&y| !b.has_edge(x, y)));
            }
        }
        if nc.len() < subset.count_ones() as usize {
            return Ok(false);
        }
    }
    Ok(true)
}
