//! Randomized cross-checks of the main searches against the brute-force
//! oracles, plus algebraic invariants of colorings and compositions.

use gcsum::chromatic::{chromatic_number, Coloring};
use gcsum::extension::{complete_extensions, extend_with_matching};
use gcsum::graph::io::{parse_edge_list, parse_graph, to_edge_list};
use gcsum::graph::{is_isomorphic, Bipartition, Graph};
use gcsum::matching::{count_perfect_matchings, enumerate_perfect_matchings, hall_condition_nc, hopcroft_karp};
use gcsum::oracle::{
    brute_chi_sums, brute_hall_nc, brute_isomorphic, brute_max_bipartite_matching, brute_perfect_matchings,
};
use gcsum::patterns::{join_by_path, merge_on_edge, merge_on_vertex, recolor_swap};
use gcsum::chi_sums;
use proptest::prelude::*;

/// Graph on `1..=max_n` vertices with each pair present independently.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn even_graph(max_half: usize) -> impl Strategy<Value = Graph> {
    graph(2 * max_half).prop_filter("even order", |g| g.order() % 2 == 0)
}

/// Graph with a random permutation of its vertices.
fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Bipartite graph with `X = 0..x` and `Y = x..x+y`.
fn bipartite(max_side: usize, balanced: bool) -> impl Strategy<Value = (Graph, Bipartition)> {
    (1..=max_side, 1..=max_side)
        .prop_map(move |(x, y)| if balanced { (x, x) } else { (x, y) })
        .prop_flat_map(|(x, y)| {
            prop::collection::vec(any::<bool>(), x * y).prop_map(move |bits| {
                let edges = (0..x)
                    .flat_map(|u| (0..y).map(move |v| (u, v)))
                    .filter(|&(u, v)| bits[u * y + v])
                    .map(|(u, v)| (u, x + v));
                let g = Graph::new(x + y, edges).unwrap();
                let p = Bipartition::from_x(&g, &(0..x).collect::<Vec<_>>()).unwrap();
                (g, p)
            })
        })
}

/// `Σ i·θ_i` with θ sorted descending (largest class gets color 1) or
/// ascending.
fn rearranged(theta: &[usize], descending: bool) -> usize {
    let mut t = theta.to_vec();
    t.sort_unstable();
    if descending {
        t.reverse();
    }
    t.iter().zip(1..).map(|(s, i)| s * i).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sums_agree_with_oracle(g in graph(8)) {
        let r = chi_sums(&g).unwrap();
        prop_assert_eq!((r.chi_sum_min, r.chi_sum_max), brute_chi_sums(&g).unwrap());
    }

    #[test]
    fn sum_witnesses_are_valid(g in graph(9)) {
        let r = chi_sums(&g).unwrap();
        prop_assert_eq!(r.chi, chromatic_number(&g).unwrap());
        for (w, sum, theta) in [
            (&r.witness_min, r.chi_sum_min, &r.theta_min),
            (&r.witness_max, r.chi_sum_max, &r.theta_max),
        ] {
            prop_assert!(w.is_proper(&g));
            prop_assert_eq!(w.color_count(), r.chi);
            prop_assert_eq!(w.color_sum(), sum);
            prop_assert_eq!(&w.theta(), theta);
        }
        let n = g.order();
        prop_assert!(n <= r.chi_sum_min && r.chi_sum_min <= r.chi_sum_max && r.chi_sum_max <= r.chi * n);
    }

    #[test]
    fn extreme_witnesses_are_rearranged(g in graph(9)) {
        let r = chi_sums(&g).unwrap();
        prop_assert_eq!(r.chi_sum_min, rearranged(&r.theta_min, true));
        prop_assert_eq!(r.chi_sum_max, rearranged(&r.theta_max, false));
    }

    #[test]
    fn sums_ignore_labels((g, perm) in graph_and_perm(9)) {
        let h = g.relabel(&perm).unwrap();
        let a = chi_sums(&g).unwrap();
        let b = chi_sums(&h).unwrap();
        prop_assert_eq!((a.chi, a.chi_sum_min, a.chi_sum_max), (b.chi, b.chi_sum_min, b.chi_sum_max));
    }

    #[test]
    fn matchings_agree_with_oracle(g in even_graph(5)) {
        let mut fast = enumerate_perfect_matchings(&g).unwrap();
        let mut slow = brute_perfect_matchings(&g).unwrap();
        fast.sort();
        slow.sort();
        prop_assert_eq!(count_perfect_matchings(&g, None).unwrap(), fast.len());
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn relabeled_graphs_are_isomorphic((g, perm) in graph_and_perm(8)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn isomorphism_agrees_with_oracle(g in graph(7), h in graph(7)) {
        prop_assert_eq!(is_isomorphic(&g, &h).unwrap(), brute_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn extensions_raise_every_degree(g in even_graph(4)) {
        let set = complete_extensions(&g).unwrap();
        let want: Vec<usize> = g.degrees().iter().map(|d| d + 1).collect();
        for ext in &set.extensions {
            prop_assert_eq!(ext.graph.degrees(), want.clone());
            prop_assert_eq!(ext.graph.edge_count(), g.edge_count() + g.order() / 2);
        }
        prop_assert_eq!(set.extensions.len(), count_perfect_matchings(&g.complement(), None).unwrap());
    }

    #[test]
    fn extension_by_each_complement_matching(g in even_graph(4)) {
        for m in enumerate_perfect_matchings(&g.complement()).unwrap() {
            let ext = extend_with_matching(&g, &m).unwrap();
            prop_assert!(m.pairs().iter().all(|&(u, v)| ext.has_edge(u, v) && !g.has_edge(u, v)));
        }
    }

    #[test]
    fn swap_is_an_involution(g in graph(8), i in 0usize..8, j in 0usize..8) {
        let w = chi_sums(&g).unwrap().witness_min;
        let k = w.color_count();
        let (a, b) = (i % k + 1, j % k + 1);
        let once = recolor_swap(&w, a, b).unwrap();
        prop_assert!(once.is_proper(&g));
        prop_assert_eq!(recolor_swap(&once, a, b).unwrap(), w.clone());
        let theta = w.theta();
        let delta = (b as isize - a as isize) * (theta[a - 1] as isize - theta[b - 1] as isize);
        prop_assert_eq!(once.color_sum() as isize, w.color_sum() as isize + delta);
    }

    #[test]
    fn merges_add_up(a in graph(6), b in graph(6), av in 0usize..6, bv in 0usize..6, m in 0usize..4) {
        prop_assume!(av < a.order() && bv < b.order());
        let v = merge_on_vertex(&a, av, &b, bv).unwrap();
        prop_assert_eq!(v.order(), a.order() + b.order() - 1);
        prop_assert_eq!(v.edge_count(), a.edge_count() + b.edge_count());
        let j = join_by_path(&a, av, &b, bv, m).unwrap();
        prop_assert_eq!(j.order(), a.order() + b.order() + m);
        prop_assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + m + 1);
        let chi = chromatic_number(&a).unwrap().max(chromatic_number(&b).unwrap());
        prop_assert_eq!(chromatic_number(&v).unwrap(), chi);
        prop_assert_eq!(chromatic_number(&j).unwrap(), chi.max(2));
    }

    #[test]
    fn edge_merge_shares_one_edge(a in graph(6), b in graph(6), flip in any::<bool>()) {
        prop_assume!(a.edge_count() > 0 && b.edge_count() > 0);
        let ea = a.edges()[0];
        let eb = b.edges()[0];
        let g = merge_on_edge(&a, ea, &b, eb, flip).unwrap();
        prop_assert_eq!(g.order(), a.order() + b.order() - 2);
        prop_assert_eq!(g.edge_count() + 1, a.edge_count() + b.edge_count());
    }

    #[test]
    fn hopcroft_karp_is_maximum((g, p) in bipartite(7, false)) {
        let m = hopcroft_karp(&g, &p).unwrap();
        prop_assert!(m.pairs().iter().all(|&(u, v)| g.has_edge(u, v)));
        prop_assert_eq!(m.len(), brute_max_bipartite_matching(&g, &p).unwrap());
    }

    #[test]
    fn hall_agrees_with_oracle((g, p) in bipartite(6, true)) {
        prop_assert_eq!(hall_condition_nc(&g, &p).unwrap(), brute_hall_nc(&g, &p).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn json_round_trip(g in graph(12)) {
        let text = serde_json::to_string(&g).unwrap();
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        let w = chi_sums(&g).unwrap().witness_max;
        let back: Coloring = serde_json::from_str(&serde_json::to_string(&w).unwrap()).unwrap();
        prop_assert_eq!(back, w);
    }
}
