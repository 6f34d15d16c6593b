//! Exact chromatic numbers and min/max color sums over χ-colorings.
//!
//! A *minimum proper coloring* here means a proper coloring that uses exactly
//! χ(G) colors, each at least once. Its color sum is `Σ i·θ(c_i)` where
//! `θ(c_i)` counts the vertices of color `i`.
//!
//! [`chi_sums`] does not enumerate colorings directly. It enumerates
//! partitions of `V` into χ independent sets; for a fixed partition with
//! class sizes `s`, the smallest sum over color relabellings gives color 1 to
//! the largest class (sizes sorted descending) and the largest sum gives it
//! to the smallest class (sizes sorted ascending).

mod predict;
pub mod verify;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::complete_extensions;
use crate::graph::{bit, bits, Graph};
use crate::matching::Matching;

pub use predict::{predict, PredictFamily, Prediction};

/// A total map from vertices to colors `1..=k` with every color used.
/// Properness is relative to a graph; see [`Coloring::is_proper`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ColoringRepr", into = "ColoringRepr")]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<ColoringRepr> for Coloring {
    type Error = Error;
    fn try_from(r: ColoringRepr) -> Result<Self> {
        Coloring::new(r.colors, r.k)
    }
}

impl From<Coloring> for ColoringRepr {
    fn from(c: Coloring) -> Self {
        ColoringRepr { k: c.k, colors: c.colors }
    }
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        let mut used = vec![false; k + 1];
        for &c in &colors {
            if c == 0 || c > k {
                return Err(Error::ColorOutOfRange { index: c, k });
            }
            used[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !used[c]) {
            return Err(Error::InvalidColoring(format!("color {missing} is never used")));
        }
        Ok(Self { colors, k })
    }

    /// Color of each vertex, 1-based.
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color_count(&self) -> usize {
        self.k
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && g.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }

    /// `θ`: entry `i` counts vertices of color `i + 1`.
    pub fn theta(&self) -> Vec<usize> {
        let mut theta = vec![0; self.k];
        for &c in &self.colors {
            theta[c - 1] += 1;
        }
        theta
    }

    /// Σ i·θ(c_i).
    pub fn color_sum(&self) -> usize {
        self.colors.iter().sum()
    }

    /// Exchanges colors `a` and `b` on every vertex.
    pub fn swap_colors(&self, a: usize, b: usize) -> Result<Coloring> {
        for c in [a, b] {
            if c == 0 || c > self.k {
                return Err(Error::ColorOutOfRange { index: c, k: self.k });
            }
        }
        let colors = self
            .colors
            .iter()
            .map(|&c| match c {
                c if c == a => b,
                c if c == b => a,
                c => c,
            })
            .collect();
        Ok(Coloring { colors, k: self.k })
    }
}

pub fn color_sum(c: &Coloring) -> usize {
    c.color_sum()
}

/// Greedy lower bound: a clique grown from each vertex in index order.
fn clique_lower_bound(g: &Graph) -> usize {
    (0..g.order())
        .map(|start| {
            let mut clique = bit(start);
            let mut candidates = g.neighbors_mask(start);
            while candidates != 0 {
                let v = candidates.trailing_zeros() as usize;
                clique |= bit(v);
                candidates &= g.neighbors_mask(v);
            }
            clique.count_ones() as usize
        })
        .max()
        .unwrap_or(1)
}

/// Backtracks over vertices in index order, opening at most one new color
/// per step so color permutations are not revisited.
fn try_color(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, k: usize, v: usize, classes: &mut Vec<u64>, assign: &mut [usize]) -> bool {
        if v == g.order() {
            return classes.len() == k;
        }
        if classes.len() + (g.order() - v) < k {
            return false;
        }
        let nb = g.neighbors_mask(v);
        for c in 0..classes.len() {
            if classes[c] & nb == 0 {
                classes[c] |= bit(v);
                assign[v] = c + 1;
                if rec(g, k, v + 1, classes, assign) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            assign[v] = classes.len();
            if rec(g, k, v + 1, classes, assign) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let mut classes = Vec::with_capacity(k);
    let mut assign = vec![0; g.order()];
    rec(g, k, 0, &mut classes, &mut assign).then_some(assign)
}

/// A coloring with exactly χ(G) colors.
pub fn chromatic_coloring(g: &Graph) -> Result<Coloring> {
    crate::check_size(g.order(), crate::size_limit())?;
    for k in clique_lower_bound(g)..=g.order() {
        if let Some(colors) = try_color(g, k) {
            return Coloring::new(colors, k);
        }
    }
    unreachable!("n colors always suffice")
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Ok(chromatic_coloring(g)?.color_count())
}

/// Exact χ, χ′ and χ⁺ with witness colorings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumReport {
    pub chi: usize,
    pub chi_sum_min: usize,
    pub chi_sum_max: usize,
    pub witness_min: Coloring,
    pub witness_max: Coloring,
    pub theta_min: Vec<usize>,
    pub theta_max: Vec<usize>,
}

fn sorted_value(sizes: &[usize], descending: bool) -> usize {
    let mut s = sizes.to_vec();
    if descending {
        s.sort_unstable_by(|a, b| b.cmp(a));
    } else {
        s.sort_unstable();
    }
    s.iter().enumerate().map(|(i, &x)| (i + 1) * x).sum()
}

/// Colors the classes `1..=k` in the order given by `descending` size,
/// breaking ties by lowest member.
fn coloring_from_classes(n: usize, classes: &[u64], descending: bool) -> Result<Coloring> {
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&c| {
        let size = classes[c].count_ones() as i64;
        (if descending { -size } else { size }, classes[c].trailing_zeros())
    });
    let mut colors = vec![0; n];
    for (rank, &c) in order.iter().enumerate() {
        for v in bits(classes[c]) {
            colors[v] = rank + 1;
        }
    }
    Coloring::new(colors, classes.len())
}

struct SumSearch<'a> {
    g: &'a Graph,
    chi: usize,
    classes: Vec<u64>,
    best_min: usize,
    best_max: usize,
    min_classes: Vec<u64>,
    max_classes: Vec<u64>,
}

impl SumSearch<'_> {
    fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.classes.iter().map(|c| c.count_ones() as usize).collect();
        s.resize(self.chi, 0);
        s
    }

    fn run(&mut self, v: usize) {
        let n = self.g.order();
        let remaining = n - v;
        if self.classes.len() + remaining < self.chi {
            return;
        }
        let sizes = self.sizes();
        if v == n {
            let lo = sorted_value(&sizes, true);
            let hi = sorted_value(&sizes, false);
            if lo < self.best_min {
                self.best_min = lo;
                self.min_classes = self.classes.clone();
            }
            if hi > self.best_max {
                self.best_max = hi;
                self.max_classes = self.classes.clone();
            }
            return;
        }
        // each remaining vertex adds at least 1 to the descending value and
        // at most χ to the ascending one
        let lb_min = sorted_value(&sizes, true) + remaining;
        let ub_max = sorted_value(&sizes, false) + remaining * self.chi;
        if lb_min >= self.best_min && ub_max <= self.best_max {
            return;
        }
        let nb = self.g.neighbors_mask(v);
        for c in 0..self.classes.len() {
            if self.classes[c] & nb == 0 {
                self.classes[c] |= bit(v);
                self.run(v + 1);
                self.classes[c] &= !bit(v);
            }
        }
        if self.classes.len() < self.chi {
            self.classes.push(bit(v));
            self.run(v + 1);
            self.classes.pop();
        }
    }
}

/// Exact χ′ (min) and χ⁺ (max) color sums over all minimum proper colorings.
pub fn chi_sums(g: &Graph) -> Result<SumReport> {
    let chi = chromatic_number(g)?;
    let mut search = SumSearch {
        g,
        chi,
        classes: Vec::with_capacity(chi),
        best_min: usize::MAX,
        best_max: 0,
        min_classes: Vec::new(),
        max_classes: Vec::new(),
    };
    search.run(0);
    let witness_min = coloring_from_classes(g.order(), &search.min_classes, true)?;
    let witness_max = coloring_from_classes(g.order(), &search.max_classes, false)?;
    debug_assert_eq!(witness_min.color_sum(), search.best_min);
    debug_assert_eq!(witness_max.color_sum(), search.best_max);
    Ok(SumReport {
        chi,
        chi_sum_min: search.best_min,
        chi_sum_max: search.best_max,
        theta_min: witness_min.theta(),
        theta_max: witness_max.theta(),
        witness_min,
        witness_max,
    })
}

/// One complete extension with its exact sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionRow {
    pub index: usize,
    /// Index into the isomorphism-class list.
    pub class: usize,
    pub matching: Matching,
    pub chi: usize,
    pub chi_sum_min: usize,
    pub chi_sum_max: usize,
}

/// Minimum of χ′ and maximum of χ⁺ over all complete extensions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionSums {
    pub chi_sum_min: usize,
    pub chi_sum_max: usize,
    /// Extension index attaining the minimum (first in index order).
    pub min_extension: usize,
    pub max_extension: usize,
    pub witness_min: Coloring,
    pub witness_max: Coloring,
    pub class_count: usize,
    pub rows: Vec<ExtensionRow>,
}

/// Sums over every complete degree-extension of an even-order graph. Each
/// isomorphism class is evaluated once, on its first member.
pub fn chi_sums_over_extensions(g: &Graph) -> Result<ExtensionSums> {
    let set = complete_extensions(g)?;
    if set.extensions.is_empty() {
        return Err(Error::NoExtensionExists);
    }
    let reports: Vec<SumReport> = set
        .iso_classes
        .par_iter()
        .map(|class| chi_sums(&set.extensions[class[0]].graph))
        .collect::<Result<_>>()?;

    let mut class_of = vec![0; set.extensions.len()];
    for (c, members) in set.iso_classes.iter().enumerate() {
        for &i in members {
            class_of[i] = c;
        }
    }
    let rows: Vec<ExtensionRow> = set
        .extensions
        .iter()
        .enumerate()
        .map(|(i, ext)| {
            let r = &reports[class_of[i]];
            ExtensionRow {
                index: i,
                class: class_of[i],
                matching: ext.matching.clone(),
                chi: r.chi,
                chi_sum_min: r.chi_sum_min,
                chi_sum_max: r.chi_sum_max,
            }
        })
        .collect();

    let min_row = rows
        .iter()
        .min_by_key(|r| (r.chi_sum_min, r.index))
        .expect("non-empty");
    let max_row = rows
        .iter()
        .max_by_key(|r| (r.chi_sum_max, std::cmp::Reverse(r.index)))
        .expect("non-empty");
    // witnesses are re-derived on the attaining extension itself so they are
    // valid colorings of that labelled graph
    let witness_min = chi_sums(&set.extensions[min_row.index].graph)?.witness_min;
    let witness_max = chi_sums(&set.extensions[max_row.index].graph)?.witness_max;
    Ok(ExtensionSums {
        chi_sum_min: min_row.chi_sum_min,
        chi_sum_max: max_row.chi_sum_max,
        min_extension: min_row.index,
        max_extension: max_row.index,
        witness_min,
        witness_max,
        class_count: set.iso_classes.len(),
        rows,
    })
}
