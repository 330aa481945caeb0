use std::collections::BTreeSet;

use proptest::prelude::*;

use deficiency::graph::{
    from_edge_list_text, to_edge_list_text, Graph, GraphBuilder, GraphDoc, Vertex,
};
use deficiency::harness::{random::rng, random_connected, random_tree, random_two_level};
use deficiency::levelling::Levelling;
use deficiency::lm::{lm_run_auto, two_level_matching, validate_trace};
use deficiency::matching::oracle::{berge_tutte_deficiency, brute_force_matching_size};
use deficiency::matching::{deficiency, maximum_matching, reduce_pendants};
use deficiency::structure::{
    admitting_set, find_induced_bone_dfs, find_induced_bone_scan, full_cap, structure_profile,
};

/// Arbitrary graph on `lo..=hi` vertices, each pair present independently.
fn graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut pairs = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            pairs.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, pairs).unwrap()
            },
        )
    })
}

fn connected(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 1u32..=9, any::<u64>())
        .prop_map(|(n, tenths, seed)| random_connected(n, f64::from(tenths) / 10.0, seed).unwrap())
}

fn tree(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, any::<u64>()).prop_map(|(n, seed)| random_tree(n, seed).unwrap())
}

/// Bone indices of a tree: one more than the distance between two branch vertices.
fn tree_admitting(t: &Graph) -> Vec<usize> {
    let branch: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) >= 3).collect();
    let mut out = BTreeSet::new();
    for (k, &u) in branch.iter().enumerate() {
        let d = t.distances_from(u);
        for &v in &branch[k + 1..] {
            out.insert(d[v].unwrap() + 1);
        }
    }
    out.into_iter().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(192))]

    #[test]
    fn blossom_matches_oracles(g in graph(0, 12)) {
        let m = maximum_matching(&g);
        let size = brute_force_matching_size(&g).unwrap();
        prop_assert_eq!(m.edges.len(), size);
        prop_assert_eq!(m.deficiency, g.n() - 2 * size);
        prop_assert_eq!(m.deficiency, berge_tutte_deficiency(&g).unwrap());
        let mut seen = vec![false; g.n()];
        for &(u, v) in &m.edges {
            prop_assert!(u < v && g.has_edge(u, v));
            prop_assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
        let uncovered: Vec<Vertex> = g.vertices().filter(|&v| !seen[v]).collect();
        prop_assert_eq!(uncovered, m.unsaturated);
    }

    #[test]
    fn pendant_reduction_keeps_deficiency(g in graph(1, 14)) {
        let r = reduce_pendants(&g);
        prop_assert_eq!(deficiency(&r.graph), deficiency(&g));
        prop_assert!(r.graph.pendant_edges().is_empty());
        prop_assert_eq!(r.graph.n() + 2 * r.removed.len(), g.n());
        let isolated = r.graph.vertices().filter(|&v| r.graph.degree(v) == 0).count();
        prop_assert_eq!(r.isolated, isolated);
        for &(x, y) in &r.removed {
            prop_assert!(g.has_edge(x, y));
        }
    }

    #[test]
    fn dfs_and_scan_bones_agree(g in connected(6, 11)) {
        for i in 2..=full_cap(&g) {
            let a = find_induced_bone_dfs(&g, i).unwrap();
            let b = find_induced_bone_scan(&g, i).unwrap();
            prop_assert_eq!(a.is_some(), b.is_some(), "index {}", i);
            for e in a.iter().chain(b.iter()) {
                prop_assert_eq!(e.index(), i);
                prop_assert!(e.is_induced_in(&g));
            }
        }
    }

    #[test]
    fn tree_bones_come_from_branch_pairs(t in tree(2, 24)) {
        prop_assert_eq!(admitting_set(&t, full_cap(&t)).unwrap(), tree_admitting(&t));
    }

    #[test]
    fn levelling_is_a_bfs_partition(g in connected(1, 16), r in any::<usize>()) {
        let root = r % g.n();
        let l = Levelling::new(&g, root).unwrap();
        let d = g.distances_from(root);
        let total: usize = l.levels().iter().map(Vec::len).sum();
        prop_assert_eq!(total, g.n());
        prop_assert_eq!(l.level(0), &[root][..]);
        for v in g.vertices() {
            prop_assert_eq!(Some(l.level_of(v)), d[v]);
            prop_assert!(l.level(l.level_of(v)).contains(&v));
            if v != root {
                prop_assert!(!l.parents(v).is_empty());
            }
            for &w in g.neighbors(v) {
                prop_assert!(l.level_of(v).abs_diff(l.level_of(w)) <= 1);
            }
            let p = l.path_to_root(v);
            prop_assert_eq!(p.len(), l.level_of(v) + 1);
            prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
    }

    #[test]
    fn friendly_paths_merge_at_their_level(g in connected(2, 14), a in any::<usize>(), b in any::<usize>()) {
        let l = Levelling::new(&g, 0).unwrap();
        let (u, v) = (a % g.n(), b % g.n());
        prop_assume!(u != v);
        let f = l.friendly_level(u, v).unwrap();
        prop_assert!(f.level <= l.level_of(u).min(l.level_of(v)));
        for (p, s) in [(&f.path_u, u), (&f.path_v, v)] {
            prop_assert_eq!(p[0], s);
            prop_assert_eq!(*p.last().unwrap(), 0);
            prop_assert_eq!(p.len(), l.level_of(s) + 1);
            prop_assert!(p.windows(2).all(|w| g.has_edge(w[0], w[1])));
        }
        // the vertex at level k sits at index level_of(s) - k
        let at = |p: &Vec<Vertex>, s: Vertex, k: usize| p[l.level_of(s) - k];
        for k in 0..=f.level {
            prop_assert_eq!(at(&f.path_u, u, k), at(&f.path_v, v, k));
        }
        if f.level < l.level_of(u).min(l.level_of(v)) {
            let above: BTreeSet<Vertex> = l.ancestor_sets(u)[f.level + 1].iter().copied().collect();
            prop_assert!(l.ancestor_sets(v)[f.level + 1].iter().all(|w| !above.contains(w)));
        }
    }

    #[test]
    fn two_level_postconditions(x in 1usize..6, y in 0usize..10, tenths in 1u32..6, seed in any::<u64>()) {
        let (h, xs, ys) = random_two_level(x, y, f64::from(tenths) / 10.0, &mut rng(seed)).unwrap();
        let res = two_level_matching(&h, &xs, &ys).unwrap();
        let mut covered = vec![false; h.n()];
        for &(a, b) in &res.matching {
            prop_assert!(h.has_edge(a, b) && !covered[a] && !covered[b]);
            covered[a] = true;
            covered[b] = true;
        }
        let y_m: Vec<Vertex> = ys.iter().copied().filter(|&v| !covered[v]).collect();
        prop_assert_eq!(&res.y_m, &y_m);
        let x_m: Vec<Vertex> = xs
            .iter()
            .copied()
            .filter(|&u| !covered[u] && h.neighbors(u).iter().any(|w| y_m.contains(w)))
            .collect();
        prop_assert_eq!(&res.x_m, &x_m);
        for &a in &y_m {
            prop_assert!(h.neighbors(a).iter().any(|w| x_m.contains(w)));
            prop_assert!(y_m.iter().all(|&b| !h.has_edge(a, b)));
        }
        prop_assert_eq!(res.private.len(), x_m.len());
        for (&u, w) in &res.private {
            prop_assert!(w[0] != w[1]);
            for &t in w {
                let free: Vec<Vertex> = h.neighbors(t).iter().copied().filter(|&z| !covered[z]).collect();
                prop_assert!(y_m.contains(&t));
                prop_assert_eq!(free, vec![u]);
            }
        }
    }

    #[test]
    fn json_and_edge_list_round_trip(g in graph(0, 15)) {
        let doc = GraphDoc::from(&g);
        let back = GraphDoc::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_graph().unwrap(), g.clone());
        prop_assert_eq!(from_edge_list_text(&to_edge_list_text(&g)).unwrap(), g);
    }

    #[test]
    fn lm_bound_dominates_deficiency(g in connected(2, 10)) {
        // two new leaves on vertex 0 make it a snail head
        let mut b = GraphBuilder::from_graph(&g);
        for _ in 0..2 {
            let leaf = b.add_vertex();
            b.add_edge(0, leaf);
        }
        let g = b.build().unwrap();
        let t = lm_run_auto(&g).unwrap();
        prop_assert!(t.bound >= deficiency(&g), "bound {} < {}", t.bound, deficiency(&g));
        let profile = structure_profile(&g, None).unwrap();
        let violations = validate_trace(&g, &t, &profile).unwrap();
        prop_assert!(violations.is_empty(), "{:?}", violations);
    }
}
