use super::{bit, bits, full_mask, Graph};
use crate::error::Result;

/// Finds a spanning path by backtracking, trying start vertices in index
/// order and extending through neighbours in index order.
pub fn hamiltonian_path(g: &Graph) -> Result<Option<Vec<usize>>> {
    crate::check_size(g.order(), crate::size_limit())?;
    let n = g.order();
    if n == 1 {
        return Ok(Some(vec![0]));
    }
    if !g.is_connected() {
        return Ok(None);
    }
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.clear();
        path.push(start);
        if extend(g, &mut path, bit(start), None) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// Finds a Hamilton cycle through vertex 0, returned as a vertex sequence
/// whose last vertex is adjacent to the first.
pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    crate::check_size(g.order(), crate::size_limit())?;
    let n = g.order();
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return Ok(None);
    }
    let mut path = vec![0];
    Ok(extend(g, &mut path, bit(0), Some(0)).then_some(path))
}

fn extend(g: &Graph, path: &mut Vec<usize>, visited: u64, close_to: Option<usize>) -> bool {
    let n = g.order();
    let last = *path.last().expect("path is never empty");
    if visited == full_mask(n) {
        return close_to.is_none_or(|s| g.has_edge(last, s));
    }
    // an unvisited vertex with no unvisited or endpoint neighbours is a dead end
    let remaining = full_mask(n) & !visited;
    for w in bits(remaining) {
        let mut exits = g.neighbors_mask(w) & (remaining | bit(last));
        if let Some(s) = close_to {
            exits |= g.neighbors_mask(w) & bit(s);
        }
        if exits == 0 {
            return false;
        }
    }
    for w in bits(g.neighbors_mask(last) & remaining) {
        path.push(w);
        if extend(g, path, visited | bit(w), close_to) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn is_path(g: &Graph, p: &[usize]) -> bool {
        p.len() == g.order() && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    #[test]
    fn paths() {
        let c6c = Family::Cycle(6).build().unwrap().complement();
        let p = hamiltonian_path(&c6c).unwrap().unwrap();
        assert!(is_path(&c6c, &p));
        let empty = Graph::empty(4).unwrap();
        assert_eq!(hamiltonian_path(&empty).unwrap(), None);
        let star = Family::CompleteBipartite(1, 3).build().unwrap();
        assert_eq!(hamiltonian_path(&star).unwrap(), None);
    }

    #[test]
    fn cycles() {
        let k4 = Family::Complete(4).build().unwrap();
        let c = hamiltonian_cycle(&k4).unwrap().unwrap();
        assert!(is_path(&k4, &c) && k4.has_edge(c[0], c[3]));
        assert_eq!(hamiltonian_cycle(&Family::Path(5).build().unwrap()).unwrap(), None);
        // K_{2,3} has a spanning path but no Hamilton cycle
        let k23 = Family::CompleteBipartite(2, 3).build().unwrap();
        assert_eq!(hamiltonian_cycle(&k23).unwrap(), None);
        assert!(hamiltonian_path(&k23).unwrap().is_some());
    }
}
