//! Compositions of copies of a base graph `H`.
//!
//! An *element* is a bare vertex, a single copy of `H`, or a cluster of
//! copies: cloverlike (all copies share one vertex), booklike (all share one
//! edge) or gridlike (copies share edges pairwise as listed). Elements are
//! joined by paths. A composition is treelike when the element-level join
//! multigraph has no cycle; copies of `H` may contain cycles of their own.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chromatic::{chromatic_coloring, chromatic_number, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Edge, Family, Graph};

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v < g.order() {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: v, n: g.order() })
    }
}

/// Disjoint union with `B`'s vertices renumbered by `map` (indices of the
/// result), plus `extra` edges.
fn glue(a: &Graph, b: &Graph, map: &[usize], n: usize, extra: &[Edge]) -> Result<Graph> {
    // an edge of B landing on a merged edge of A is the shared edge
    let mut edges: Vec<Edge> = a.edges().to_vec();
    edges.extend(b.edges().iter().map(|&(u, v)| (map[u].min(map[v]), map[u].max(map[v]))));
    edges.extend_from_slice(extra);
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, edges)
}

/// Numbers `B`'s vertices after `A`'s, skipping those in `identified`
/// (pairs `(b vertex, a vertex)`).
fn renumber(a: &Graph, b: &Graph, identified: &[(usize, usize)]) -> (Vec<usize>, usize) {
    let mut next = a.order();
    let map = (0..b.order())
        .map(|v| match identified.iter().find(|&&(bv, _)| bv == v) {
            Some(&(_, av)) => av,
            None => {
                next += 1;
                next - 1
            }
        })
        .collect();
    (map, next)
}

/// `A` and `B` with vertex `a` of `A` and `b` of `B` identified. `A` keeps
/// its numbering; `B`'s other vertices follow in order.
pub fn merge_on_vertex(a: &Graph, av: usize, b: &Graph, bv: usize) -> Result<Graph> {
    check_vertex(a, av)?;
    check_vertex(b, bv)?;
    let (map, n) = renumber(a, b, &[(bv, av)]);
    glue(a, b, &map, n, &[])
}

/// `A` and `B` sharing an edge: `e_a = (u, v)` is identified with
/// `e_b = (x, y)` as `u = x, v = y`, or `u = y, v = x` when `flip` is set.
pub fn merge_on_edge(a: &Graph, ea: Edge, b: &Graph, eb: Edge, flip: bool) -> Result<Graph> {
    for (g, (u, v)) in [(a, ea), (b, eb)] {
        check_vertex(g, u)?;
        check_vertex(g, v)?;
        if !g.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
    }
    let (x, y) = if flip { (eb.1, eb.0) } else { eb };
    let (map, n) = renumber(a, b, &[(x, ea.0), (y, ea.1)]);
    glue(a, b, &map, n, &[])
}

/// Disjoint union of `A` and `B` plus a path `v, w_1, ..., w_m, u` through
/// `m` fresh vertices numbered last. `m = 0` is the single edge `vu`.
pub fn join_by_path(a: &Graph, v: usize, b: &Graph, u: usize, m: usize) -> Result<Graph> {
    check_vertex(a, v)?;
    check_vertex(b, u)?;
    let (map, n) = renumber(a, b, &[]);
    let first_interior = n;
    let path: Vec<usize> = std::iter::once(v)
        .chain(first_interior..first_interior + m)
        .chain(std::iter::once(map[u]))
        .collect();
    let extra: Vec<Edge> = path.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))).collect();
    glue(a, b, &map, n + m, &extra)
}

/// Exchanges colors `k` and `t` everywhere.
pub fn recolor_swap(c: &Coloring, k: usize, t: usize) -> Result<Coloring> {
    c.swap_colors(k, t)
}

/// Two copies of a gridlike cluster sharing an edge; `edge_a[i]` of copy `a`
/// is identified with `edge_b[i]` of copy `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeMerge {
    pub a: usize,
    pub edge_a: [usize; 2],
    pub b: usize,
    pub edge_b: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElementSpec {
    /// A bare vertex (one copy of `K_1`).
    Vertex,
    Single,
    /// One copy per entry; copy `i` contributes vertex `vertices[i]` to the
    /// common vertex.
    Cloverlike { vertices: Vec<usize> },
    /// One copy per entry; copy `i` contributes edge `edges[i]`, endpoints
    /// identified in the order given.
    Booklike { edges: Vec<[usize; 2]> },
    Gridlike { copies: usize, merges: Vec<EdgeMerge> },
}

impl ElementSpec {
    fn copies(&self) -> usize {
        match self {
            ElementSpec::Vertex | ElementSpec::Single => 1,
            ElementSpec::Cloverlike { vertices } => vertices.len(),
            ElementSpec::Booklike { edges } => edges.len(),
            ElementSpec::Gridlike { copies, .. } => *copies,
        }
    }
}

/// A vertex of a given copy inside an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Endpoint {
    pub element: usize,
    #[serde(default)]
    pub copy: usize,
    pub vertex: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinSpec {
    pub from: Endpoint,
    pub to: Endpoint,
    /// Number of interior path vertices.
    #[serde(default)]
    pub m: usize,
}

/// Base graph given inline (`base`) or by family string (`family`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositionSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Graph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    pub elements: Vec<ElementSpec>,
    #[serde(default)]
    pub joins: Vec<JoinSpec>,
    /// Allows cycles among elements.
    #[serde(default)]
    pub cyclic: bool,
}

impl CompositionSpec {
    pub fn base_graph(&self) -> Result<Graph> {
        match (&self.base, &self.family) {
            (Some(g), None) => Ok(g.clone()),
            (None, Some(f)) => f.build(),
            _ => Err(Error::MalformedSpec("give exactly one of `base` and `family`".into())),
        }
    }
}

/// One copy's vertex as it appears in the composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CopySlot {
    pub element: usize,
    pub copy: usize,
    /// Vertex of `H` (0 for a bare vertex element).
    pub vertex: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuiltComposition {
    pub graph: Graph,
    /// Owning element per vertex; `None` for path interiors.
    pub element_map: Vec<Option<usize>>,
    /// Every copy slot landing on each vertex (several for merged vertices).
    pub copy_map: Vec<Vec<CopySlot>>,
    /// `slots[element][copy][vertex]` is the composed vertex.
    pub slots: Vec<Vec<Vec<usize>>>,
    /// Full vertex sequence of each join path, endpoints included.
    pub paths: Vec<Vec<usize>>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedSpec(msg.into())
}

/// Builds the composed graph. Vertices are numbered copy by copy in spec
/// order (a merged vertex takes the number of its first slot), then path
/// interiors in join order.
pub fn build_treelike(spec: &CompositionSpec) -> Result<BuiltComposition> {
    let h = spec.base_graph()?;
    let nh = h.order();
    if spec.elements.is_empty() {
        return Err(malformed("no elements"));
    }

    // flat slot index per (element, copy, vertex)
    let mut offsets = Vec::with_capacity(spec.elements.len());
    let mut total = 0;
    for el in &spec.elements {
        let width = if matches!(el, ElementSpec::Vertex) { 1 } else { nh };
        offsets.push((total, width));
        total += el.copies() * width;
    }
    let slot = |e: usize, c: usize, v: usize| offsets[e].0 + c * offsets[e].1 + v;
    let mut parent: Vec<usize> = (0..total).collect();
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    let check_edge = |[u, v]: [usize; 2]| -> Result<()> {
        if u >= nh || v >= nh {
            return Err(malformed(format!("edge ({u}, {v}) out of range")));
        }
        if !h.has_edge(u, v) {
            return Err(Error::EdgeNotPresent(u, v));
        }
        Ok(())
    };

    for (e, el) in spec.elements.iter().enumerate() {
        match el {
            ElementSpec::Vertex | ElementSpec::Single => {}
            ElementSpec::Cloverlike { vertices } => {
                if vertices.len() < 2 {
                    return Err(malformed(format!("element {e}: cloverlike needs 2 or more copies")));
                }
                if let Some(&v) = vertices.iter().find(|&&v| v >= nh) {
                    return Err(malformed(format!("element {e}: vertex {v} out of range")));
                }
                for (c, &v) in vertices.iter().enumerate().skip(1) {
                    union(&mut parent, slot(e, 0, vertices[0]), slot(e, c, v));
                }
            }
            ElementSpec::Booklike { edges } => {
                if edges.len() < 2 {
                    return Err(malformed(format!("element {e}: booklike needs 2 or more copies")));
                }
                for &edge in edges {
                    check_edge(edge)?;
                }
                for (c, &[u, v]) in edges.iter().enumerate().skip(1) {
                    union(&mut parent, slot(e, 0, edges[0][0]), slot(e, c, u));
                    union(&mut parent, slot(e, 0, edges[0][1]), slot(e, c, v));
                }
            }
            ElementSpec::Gridlike { copies, merges } => {
                if *copies < 2 {
                    return Err(malformed(format!("element {e}: gridlike needs 2 or more copies")));
                }
                let mut copy_parent: Vec<usize> = (0..*copies).collect();
                for mg in merges {
                    if mg.a >= *copies || mg.b >= *copies || mg.a == mg.b {
                        return Err(malformed(format!(
                            "element {e}: merge between copies {} and {} is invalid",
                            mg.a, mg.b
                        )));
                    }
                    check_edge(mg.edge_a)?;
                    check_edge(mg.edge_b)?;
                    for i in 0..2 {
                        union(&mut parent, slot(e, mg.a, mg.edge_a[i]), slot(e, mg.b, mg.edge_b[i]));
                    }
                    let (ra, rb) = (find(&mut copy_parent, mg.a), find(&mut copy_parent, mg.b));
                    copy_parent[ra.max(rb)] = ra.min(rb);
                }
                if (0..*copies).any(|c| find(&mut copy_parent, c) != 0) {
                    return Err(malformed(format!("element {e}: gridlike copies are not all linked")));
                }
            }
        }
    }

    // a class holding two slots of the same copy would fold that copy
    let mut owner_of_class: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); total];
    for (e, el) in spec.elements.iter().enumerate() {
        for c in 0..el.copies() {
            for v in 0..offsets[e].1 {
                let r = find(&mut parent, slot(e, c, v));
                if let Some(&(_, _, w)) = owner_of_class[r].iter().find(|&&(oe, oc, _)| (oe, oc) == (e, c)) {
                    return Err(malformed(format!(
                        "element {e}: vertices {w} and {v} of copy {c} would be merged"
                    )));
                }
                owner_of_class[r].push((e, c, v));
            }
        }
    }

    let mut id_of_class = vec![usize::MAX; total];
    let mut next = 0;
    let mut slots = Vec::with_capacity(spec.elements.len());
    let mut element_map = Vec::new();
    let mut copy_map: Vec<Vec<CopySlot>> = Vec::new();
    for (e, el) in spec.elements.iter().enumerate() {
        let mut copies = Vec::with_capacity(el.copies());
        for c in 0..el.copies() {
            let mut ids = Vec::with_capacity(offsets[e].1);
            for v in 0..offsets[e].1 {
                let r = find(&mut parent, slot(e, c, v));
                if id_of_class[r] == usize::MAX {
                    id_of_class[r] = next;
                    next += 1;
                    element_map.push(Some(e));
                    copy_map.push(Vec::new());
                }
                let id = id_of_class[r];
                copy_map[id].push(CopySlot { element: e, copy: c, vertex: v });
                ids.push(id);
            }
            copies.push(ids);
        }
        slots.push(copies);
    }

    let mut edges: Vec<Edge> = Vec::new();
    for (e, el) in spec.elements.iter().enumerate() {
        if matches!(el, ElementSpec::Vertex) {
            continue;
        }
        for ids in &slots[e] {
            for &(u, v) in h.edges() {
                let (a, b) = (ids[u], ids[v]);
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();

    let mut element_parent: Vec<usize> = (0..spec.elements.len()).collect();
    let mut paths = Vec::with_capacity(spec.joins.len());
    for (j, join) in spec.joins.iter().enumerate() {
        let resolve = |p: &Endpoint| -> Result<usize> {
            let ids = slots
                .get(p.element)
                .and_then(|el| el.get(p.copy))
                .and_then(|c| c.get(p.vertex))
                .ok_or_else(|| malformed(format!("join {j}: endpoint {p:?} does not exist")))?;
            Ok(*ids)
        };
        let (v, u) = (resolve(&join.from)?, resolve(&join.to)?);
        let (ra, rb) = (
            find(&mut element_parent, join.from.element),
            find(&mut element_parent, join.to.element),
        );
        if ra == rb && !spec.cyclic {
            return Err(Error::CyclicSpecRejected);
        }
        element_parent[ra.max(rb)] = ra.min(rb);
        let path: Vec<usize> = std::iter::once(v)
            .chain(next..next + join.m)
            .chain(std::iter::once(u))
            .collect();
        next += join.m;
        element_map.extend(std::iter::repeat_n(None, join.m));
        copy_map.extend(std::iter::repeat_n(Vec::new(), join.m));
        for w in path.windows(2) {
            edges.push((w[0].min(w[1]), w[0].max(w[1])));
        }
        paths.push(path);
    }
    edges.sort_unstable();
    if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
        return Err(malformed(format!("join adds an existing edge {:?}", w[0])));
    }
    let graph = Graph::new(next, edges)?;
    Ok(BuiltComposition {
        graph,
        element_map,
        copy_map,
        slots,
        paths,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreelikeReport {
    pub chi_h: usize,
    pub chi_gstar: usize,
    /// `chi_gstar == chi_h`.
    pub matches: bool,
    /// A `χ(H)`-coloring of the composition.
    pub witness: Coloring,
    /// The witness came from swap propagation alone; false when a copy had
    /// to be recolored by search, or the whole graph colored exactly,
    /// because swaps could not meet its merge constraints.
    pub propagated: bool,
}

/// Recolors `c` by color swaps so that each `(vertex, color)` pin holds,
/// and vertex `avoid.0` (if given) does not get color `avoid.1`.
fn align_by_swaps(c: &Coloring, pins: &[(usize, usize)], avoid: Option<(usize, usize)>) -> Result<Coloring> {
    let mut c = c.clone();
    for &(v, want) in pins {
        let cur = c.colors()[v];
        if cur != want {
            c = recolor_swap(&c, cur, want)?;
        }
    }
    if let Some((v, bad)) = avoid {
        if c.colors()[v] == bad {
            let other = if bad == 1 { 2 } else { 1 };
            c = recolor_swap(&c, bad, other)?;
        }
    }
    Ok(c)
}

fn satisfies(c: &[usize], pins: &[(usize, usize)], avoid: Option<(usize, usize)>) -> bool {
    pins.iter().all(|&(v, want)| c[v] == want) && avoid.is_none_or(|(v, bad)| c[v] != bad)
}

/// Proper coloring of `h` with colors `1..=k` meeting the pins, by search.
fn pinned_coloring(h: &Graph, k: usize, pins: &[(usize, usize)], avoid: Option<(usize, usize)>) -> Option<Vec<usize>> {
    fn rec(h: &Graph, k: usize, v: usize, fixed: &[usize], avoid: Option<(usize, usize)>, out: &mut Vec<usize>) -> bool {
        if v == h.order() {
            return true;
        }
        let choices: Vec<usize> = if fixed[v] != 0 { vec![fixed[v]] } else { (1..=k).collect() };
        for c in choices {
            if avoid == Some((v, c)) || h.neighbors(v).any(|u| u < v && out[u] == c) {
                continue;
            }
            out[v] = c;
            if rec(h, k, v + 1, fixed, avoid, out) {
                return true;
            }
        }
        out[v] = 0;
        false
    }
    let mut fixed = vec![0; h.order()];
    for &(v, c) in pins {
        fixed[v] = c;
    }
    let mut out = vec![0; h.order()];
    rec(h, k, 0, &fixed, avoid, &mut out).then_some(out)
}

/// Which copies of an element were glued directly to each other.
///
/// Every merge identifies vertices along these links only, so the copies
/// holding any given vertex form a connected set of links. Walking the
/// links outward therefore meets each new copy with only its glued vertex
/// or edge already colored.
fn copy_links(el: &ElementSpec) -> Vec<Vec<usize>> {
    let k = el.copies();
    let mut adj = vec![Vec::new(); k];
    match el {
        ElementSpec::Vertex | ElementSpec::Single => {}
        ElementSpec::Cloverlike { .. } | ElementSpec::Booklike { .. } => {
            for c in 1..k {
                adj[0].push(c);
                adj[c].push(0);
            }
        }
        ElementSpec::Gridlike { merges, .. } => {
            for mg in merges {
                adj[mg.a].push(mg.b);
                adj[mg.b].push(mg.a);
            }
        }
    }
    adj
}

/// Colors a composition with `χ(H)` colors by giving every copy the same
/// base coloring and reconciling shared vertices with color swaps, walking
/// elements from a root along joins and copies outward from the entry copy
/// along glue links. Returns `None` when some copy cannot be reconciled
/// (possible only when gridlike links close a cycle).
fn propagate(h: &Graph, spec: &CompositionSpec, built: &BuiltComposition) -> Result<Option<(Coloring, bool)>> {
    let base = chromatic_coloring(h)?;
    let k = base.color_count();
    let n = built.graph.order();
    let mut color = vec![0usize; n];
    let mut propagated = true;

    let mut join_adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); spec.elements.len()];
    for (j, join) in spec.joins.iter().enumerate() {
        join_adj[join.from.element].push((j, join.to.element));
        join_adj[join.to.element].push((j, join.from.element));
    }

    // colors one copy given the current partial coloring
    let mut color_copy = |ids: &[usize], avoid: Option<(usize, usize)>, color: &mut Vec<usize>, bare: bool| -> Result<bool> {
        if bare {
            let bad = avoid.map(|(_, b)| b);
            color[ids[0]] = if bad == Some(1) { 2 } else { 1 };
            return Ok(true);
        }
        let pins: Vec<(usize, usize)> = ids
            .iter()
            .enumerate()
            .filter(|&(_, &id)| color[id] != 0)
            .map(|(v, &id)| (v, color[id]))
            .collect();
        let swapped = align_by_swaps(&base, &pins, avoid)?;
        let local = if satisfies(swapped.colors(), &pins, avoid) {
            swapped.colors().to_vec()
        } else {
            propagated = false;
            match pinned_coloring(h, k, &pins, avoid) {
                Some(local) => local,
                None => return Ok(false),
            }
        };
        for (v, &id) in ids.iter().enumerate() {
            color[id] = local[v];
        }
        Ok(true)
    };

    let mut element_done = vec![false; spec.elements.len()];
    for root in 0..spec.elements.len() {
        if element_done[root] {
            continue;
        }
        // (element, entry copy, avoid constraint on composed vertex)
        let mut queue = VecDeque::from([(root, 0, None::<(usize, usize)>)]);
        element_done[root] = true;
        while let Some((e, entry, avoid)) = queue.pop_front() {
            let copies = &built.slots[e];
            let links = copy_links(&spec.elements[e]);
            let bare = matches!(spec.elements[e], ElementSpec::Vertex);
            let mut copy_done = vec![false; copies.len()];
            let mut cq = VecDeque::from([entry]);
            copy_done[entry] = true;
            let mut first = true;
            while let Some(c) = cq.pop_front() {
                let local_avoid = if first {
                    avoid.and_then(|(id, bad)| copies[c].iter().position(|&x| x == id).map(|v| (v, bad)))
                } else {
                    None
                };
                first = false;
                if !color_copy(&copies[c], local_avoid, &mut color, bare)? {
                    return Ok(None);
                }
                for &d in &links[c] {
                    if !copy_done[d] {
                        copy_done[d] = true;
                        cq.push_back(d);
                    }
                }
            }
            for &(j, other) in &join_adj[e] {
                if element_done[other] {
                    continue;
                }
                element_done[other] = true;
                let path = &built.paths[j];
                let join = &spec.joins[j];
                let (path, far) = if join.from.element == e {
                    (path.clone(), join.to)
                } else {
                    (path.iter().rev().copied().collect(), join.from)
                };
                for i in 1..path.len() - 1 {
                    let prev = color[path[i - 1]];
                    color[path[i]] = if prev == 1 { 2 } else { 1 };
                }
                let before = color[path[path.len() - 2]];
                queue.push_back((other, far.copy, Some((path[path.len() - 1], before))));
            }
        }
    }
    Ok(Some((Coloring::new(color, k)?, propagated)))
}

/// Exact `χ(H)` and `χ(G*)` for a treelike composition, plus a constructive
/// `χ(H)`-coloring of `G*`.
pub fn verify_treelike_chromatic(spec: &CompositionSpec) -> Result<TreelikeReport> {
    let h = spec.base_graph()?;
    let built = build_treelike(&CompositionSpec { cyclic: false, ..spec.clone() })?;
    let (chi_h, chi_gstar) = rayon::join(|| chromatic_number(&h), || chromatic_number(&built.graph));
    let (chi_h, chi_gstar) = (chi_h?, chi_gstar?);
    if chi_h < 2 {
        return Err(Error::PreconditionViolated(format!("χ(H) = {chi_h} is below 2")));
    }
    let (witness, propagated) = match propagate(&h, spec, &built)? {
        Some(found) => found,
        None => {
            let c = chromatic_coloring(&built.graph)?;
            if c.color_count() != chi_h {
                return Err(Error::PreconditionViolated(format!(
                    "the composition needs {} colors, more than χ(H) = {chi_h}",
                    c.color_count()
                )));
            }
            (c, false)
        }
    };
    Ok(TreelikeReport {
        chi_h,
        chi_gstar,
        matches: chi_h == chi_gstar,
        witness,
        propagated,
    })
}

fn random_edge<R: Rng + ?Sized>(h: &Graph, rng: &mut R) -> [usize; 2] {
    let &(u, v) = h.edges().choose(rng).expect("base graph has an edge");
    if rng.gen() {
        [u, v]
    } else {
        [v, u]
    }
}

fn element_order(el: &ElementSpec, nh: usize) -> usize {
    match el {
        ElementSpec::Vertex => 1,
        ElementSpec::Single => nh,
        ElementSpec::Cloverlike { vertices } => vertices.len() * (nh - 1) + 1,
        ElementSpec::Booklike { edges } => edges.len() * (nh - 2) + 2,
        ElementSpec::Gridlike { copies, .. } => copies * (nh - 2) + 2,
    }
}

/// A random treelike spec over `h` with at most `max_elements` elements and
/// at most `max_vertices` composed vertices. `h` needs an edge.
pub fn random_treelike_spec<R: Rng + ?Sized>(
    h: &Graph,
    max_elements: usize,
    max_vertices: usize,
    rng: &mut R,
) -> Result<CompositionSpec> {
    if h.edge_count() == 0 {
        return Err(Error::InvalidParameter("base graph needs an edge".into()));
    }
    if max_elements == 0 || max_vertices < h.order() {
        return Err(Error::InvalidParameter("bounds leave no room for one copy".into()));
    }
    let nh = h.order();
    let mut elements = Vec::new();
    let mut joins = Vec::new();
    let mut used = 0;
    let target = rng.gen_range(1..=max_elements);
    while elements.len() < target {
        let copies = rng.gen_range(2..=3);
        let el = match rng.gen_range(0..5) {
            0 if !elements.is_empty() => ElementSpec::Vertex,
            1 => ElementSpec::Cloverlike {
                vertices: (0..copies).map(|_| rng.gen_range(0..nh)).collect(),
            },
            2 => ElementSpec::Booklike {
                edges: (0..copies).map(|_| random_edge(h, rng)).collect(),
            },
            3 => ElementSpec::Gridlike {
                copies,
                merges: (1..copies)
                    .map(|b| EdgeMerge {
                        a: rng.gen_range(0..b),
                        edge_a: random_edge(h, rng),
                        b,
                        edge_b: random_edge(h, rng),
                    })
                    .collect(),
            },
            _ => ElementSpec::Single,
        };
        let m = rng.gen_range(0..=2);
        let extra = element_order(&el, nh) + if elements.is_empty() { 0 } else { m };
        if used + extra > max_vertices {
            if elements.is_empty() {
                continue;
            }
            break;
        }
        used += extra;
        if !elements.is_empty() {
            let pick = |e: usize, el: &ElementSpec, rng: &mut R| Endpoint {
                element: e,
                copy: rng.gen_range(0..el.copies()),
                vertex: if matches!(el, ElementSpec::Vertex) { 0 } else { rng.gen_range(0..nh) },
            };
            let from_el = rng.gen_range(0..elements.len());
            let from = pick(from_el, &elements[from_el], rng);
            let to = pick(elements.len(), &el, rng);
            joins.push(JoinSpec { from, to, m });
        }
        elements.push(el);
    }
    Ok(CompositionSpec {
        base: Some(h.clone()),
        family: None,
        elements,
        joins,
        cyclic: false,
    })
}
