use proptest::prelude::*;
use ramsey_core::codec::{decode_graph6, encode_graph6};
use ramsey_core::graph::{Graph, GraphBuilder, VertexSet};
use ramsey_core::iso::{canonical_form, find_induced};
use ramsey_core::params::{self, ParamKind};
use ramsey_core::ramsey::{prune, PruneRule};

fn from_bits(order: usize, bits: u64) -> Graph {
    let mut b = GraphBuilder::new(order);
    let mut k = 0;
    for v in 1..order {
        for u in 0..v {
            if bits >> k & 1 == 1 {
                b.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    b.build()
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut b = GraphBuilder::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        b.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            b.build()
        })
    })
}

fn subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet::from_mask)
}

fn is_stable(g: &Graph, s: &VertexSet) -> bool {
    s.iter().all(|u| g.neighbors(u).is_disjoint(s))
}

fn naive_alpha(g: &Graph, within: &VertexSet) -> usize {
    let w = within.to_vec();
    (0u64..1 << w.len())
        .map(|m| {
            (0..w.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| w[i])
                .collect::<VertexSet>()
        })
        .filter(|s| is_stable(g, s))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Lexicographically least induced embedding by plain enumeration.
fn naive_induced(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>) -> bool {
        let i = map.len();
        if i == h.order() {
            return true;
        }
        for v in 0..g.order() {
            if map.contains(&v) {
                continue;
            }
            if (0..i).all(|j| h.has_edge(i, j) == g.has_edge(v, map[j])) {
                map.push(v);
                if go(g, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    let mut map = Vec::new();
    go(g, h, &mut map).then_some(map)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[test]
fn graph6_round_trip_exhaustive() {
    for n in 0..=5 {
        let pairs = n * (n.max(1) - 1) / 2;
        for bits in 0u64..1 << pairs {
            let g = from_bits(n, bits);
            let text = encode_graph6(&g).unwrap();
            assert_eq!(decode_graph6(&text).unwrap(), g, "{text}");
        }
    }
}

#[test]
fn canonical_form_matches_permutation_oracle() {
    // two labelled graphs on 5 vertices share a code exactly when some
    // permutation maps one onto the other
    let n = 5;
    let graphs: Vec<Graph> = (0u64..1 << 10).step_by(7).map(|b| from_bits(n, b)).collect();
    let perms = permutations(n);
    for a in graphs.iter().step_by(3) {
        let ca = canonical_form(a).unwrap().code;
        for b in graphs.iter().step_by(5) {
            let iso = a.edge_count() == b.edge_count() && perms.iter().any(|p| &a.permute(p) == b);
            assert_eq!(ca == canonical_form(b).unwrap().code, iso);
        }
    }
}

#[test]
fn isomorphism_class_counts_by_brute_force() {
    // labelled graphs up to relabelling: 1, 2, 4, 11, 34 classes
    for (n, expected) in [(1usize, 1usize), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let pairs = n * (n - 1) / 2;
        let mut codes: Vec<Vec<u64>> = (0u64..1 << pairs)
            .map(|b| canonical_form(&from_bits(n, b)).unwrap().code)
            .collect();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), expected, "n = {n}");
    }
}

#[test]
fn domination_matches_subset_search() {
    for bits in (0u64..1 << 15).step_by(97) {
        let g = from_bits(6, bits);
        let naive = subsets(6)
            .filter(|s| params::is_dominating(&g, s))
            .map(|s| s.len())
            .min()
            .unwrap();
        assert_eq!(params::domination(&g, false).unwrap().0, naive);
        if g.is_connected() {
            let naive_c = subsets(6)
                .filter(|s| params::is_dominating(&g, s) && g.component_count_within(s) == 1)
                .map(|s| s.len())
                .min()
                .unwrap();
            assert_eq!(params::domination(&g, true).unwrap().0, naive_c);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip_random(g in arb_graph(16)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(decode_graph6(&text).unwrap(), g);
    }

    #[test]
    fn graph_invariants(g in arb_graph(12)) {
        prop_assert!(g.check_invariants());
        let degree_sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert_eq!(g.complement().complement(), g.clone());
        let comps = g.components();
        prop_assert_eq!(comps.iter().map(VertexSet::len).sum::<usize>(), g.order());
    }

    #[test]
    fn find_induced_is_least_embedding(g in arb_graph(7), h in arb_graph(4)) {
        let got = find_induced(&g, &h).unwrap().map(|e| e.map);
        prop_assert_eq!(got, naive_induced(&g, &h));
    }

    #[test]
    fn canonical_form_is_label_invariant(g in arb_graph(10), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let a = canonical_form(&g).unwrap();
        let b = canonical_form(&g.permute(&perm)).unwrap();
        prop_assert_eq!(&a.code, &b.code);
        prop_assert_eq!(a.graph(), b.graph());
    }

    #[test]
    fn parameter_chain_and_cut_vertices(g in arb_graph(9)) {
        let cuts = params::cut_vertices(&g);
        let base = g.component_count();
        for v in 0..g.order() {
            let d = params::vertex_param(&g, v, ParamKind::Degree).unwrap();
            let a = params::vertex_param(&g, v, ParamKind::LocalIndependence).unwrap();
            let c = params::vertex_param(&g, v, ParamKind::LocalComponents).unwrap();
            let h = params::vertex_param(&g, v, ParamKind::Adhesion).unwrap();
            prop_assert!(d >= a && a >= c && c >= h, "v{}: {} {} {} {}", v, d, a, c, h);
            prop_assert_eq!(a, naive_alpha(&g, g.neighbors(v)));
            let (rest, _) = g.delete_vertex(v).unwrap();
            prop_assert_eq!(h as isize, rest.component_count() as isize - base as isize + 1);
            prop_assert_eq!(h >= 2, cuts.contains(v));
        }
    }

    #[test]
    fn h_index_recount(g in arb_graph(10)) {
        for kind in ParamKind::ALL {
            let values = params::vertex_params(&g, kind).unwrap();
            let naive = (0..=values.len())
                .filter(|&k| values.iter().filter(|&&p| p >= k).count() >= k)
                .max()
                .unwrap();
            prop_assert_eq!(params::h_index(&g, kind).unwrap(), naive);
        }
    }

    #[test]
    fn prune_is_confluent(g in arb_graph(11)) {
        // both rules are monotone, so deleting from the top gives the same
        // survivors
        for rule in [PruneRule::Degree1, PruneRule::Alpha1] {
            let p = prune(&g, rule);
            let mut alive = g.vertices();
            loop {
                let eligible = alive.iter().filter(|&v| {
                    let nb = g.neighbors(v).intersection(&alive);
                    match rule {
                        PruneRule::Degree1 => nb.len() <= 1,
                        PruneRule::Alpha1 => naive_alpha(&g, &nb) <= 1,
                    }
                }).last();
                match eligible {
                    Some(v) => { alive.remove(v); }
                    None => break,
                }
            }
            prop_assert_eq!(p.kept, alive.to_vec());
        }
    }

    #[test]
    fn induced_matching_matches_brute_force(g in arb_graph(8)) {
        let (k, m) = params::induced_matching_number(&g).unwrap();
        prop_assert!(params::is_induced_matching(&g, &m));
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let naive = (0u64..1 << edges.len())
            .filter(|mask| {
                let pick: Vec<(usize, usize)> =
                    (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
                params::is_induced_matching(&g, &pick)
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap();
        prop_assert_eq!(k, naive);
    }
}
