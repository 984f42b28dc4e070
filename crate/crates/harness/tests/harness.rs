use ramsey_core::codec::{decode_graph6, encode_graph6};
use ramsey_core::iso::canonical_form;
use ramsey_core::params::ParamKind;
use ramsey_core::{theorem_family, FamilySpec, Graph, GraphBuilder, GraphName, TheoremId};
use ramsey_harness::{enumerate_graphs, enumerate_table, extremal_search, scan_corpus, CheckId, ScanConfig};

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

/// Classes by brute force: canonical codes of all labelled graphs.
fn brute_force_classes(n: usize, connected: bool) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut codes: Vec<Vec<u64>> = (0u64..1 << pairs)
        .map(|b| from_bits(n, b))
        .filter(|g| !connected || g.is_connected())
        .map(|g| canonical_form(&g).unwrap().code)
        .collect();
    codes.sort();
    codes.dedup();
    codes.len()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=5 {
        assert_eq!(
            enumerate_graphs(n, false).unwrap().len(),
            brute_force_classes(n, false),
            "n = {n}"
        );
        assert_eq!(
            enumerate_graphs(n, true).unwrap().len(),
            brute_force_classes(n, true),
            "n = {n}"
        );
    }
}

#[test]
fn enumeration_examples() {
    assert_eq!(enumerate_graphs(1, false).unwrap().len(), 1);
    assert_eq!(enumerate_graphs(3, false).unwrap().len(), 4);
    let conn = enumerate_graphs(3, true).unwrap();
    let names: Vec<Graph> = ["P3", "K3"]
        .iter()
        .map(|s| s.parse::<GraphName>().unwrap().build().unwrap())
        .collect();
    assert_eq!(conn.len(), 2);
    for h in &names {
        assert!(conn.iter().any(|g| ramsey_core::iso::are_isomorphic(g, h).unwrap()));
    }
    assert_eq!(enumerate_graphs(4, false).unwrap().len(), 11);
}

#[test]
fn enumeration_is_sorted_and_canonical() {
    for classes in enumerate_table(6, false).unwrap() {
        let g6: Vec<String> = classes.iter().map(|g| encode_graph6(g).unwrap()).collect();
        assert!(g6.windows(2).all(|w| w[0] < w[1]));
        for g in &classes {
            assert_eq!(&canonical_form(g).unwrap().graph(), g);
        }
    }
}

fn config(checks: &[CheckId], jobs: usize) -> ScanConfig {
    ScanConfig {
        checks: checks.to_vec(),
        families: Vec::new(),
        jobs,
    }
}

#[test]
fn chain_and_cut_scans_are_clean() {
    let all: Vec<Graph> = enumerate_table(6, false).unwrap().into_iter().flatten().collect();
    let r = scan_corpus(&all, &config(&[CheckId::Chain], 0)).unwrap();
    assert_eq!(r.graphs, 1 + 1 + 2 + 4 + 11 + 34 + 156);
    assert!(r.passed(), "{:?}", r.violations);
    let conn: Vec<Graph> = enumerate_table(6, true).unwrap().into_iter().flatten().collect();
    let r = scan_corpus(&conn, &config(&[CheckId::CutAdh], 0)).unwrap();
    assert!(r.passed(), "{:?}", r.violations);
}

#[test]
fn scan_reports_records_in_input_order() {
    let graphs: Vec<Graph> = ["P4", "K3", "C5", "K1,3"]
        .iter()
        .map(|s| s.parse::<GraphName>().unwrap().build().unwrap())
        .collect();
    let mut cfg = config(&CheckId::ALL, 1);
    cfg.families = vec![theorem_family(TheoremId::Deg, 3).unwrap()];
    let one = scan_corpus(&graphs, &cfg).unwrap();
    cfg.jobs = 4;
    let four = scan_corpus(&graphs, &cfg).unwrap();
    assert_eq!(one, four);
    assert!(one.passed());
    assert_eq!(
        one.records.iter().map(|r| r.index).collect::<Vec<_>>(),
        vec![0, 1, 2, 3]
    );
    // P_4 holds P_3 and K_3 is a member
    assert!(!one.records[0].freeness[0].free);
    assert_eq!(one.records[1].freeness[0].member, Some(GraphName::Complete(3)));
    // K_{1,3}: centre degree 3, leaves degree 1
    assert_eq!(one.records[3].params[0].deg, 3);
    assert_eq!(one.records[3].params[0].adh, 3);
    assert_eq!(one.records[3].h_index.deg, 1);
}

#[test]
fn extremal_adh_family() {
    // connected graphs free of the adh family at n = 3 are P_3-free, hence
    // complete, so no cut vertices
    let fam = theorem_family(TheoremId::Adh, 3).unwrap();
    let t = extremal_search(&fam, ParamKind::Adhesion, 2, 7, true, 0).unwrap();
    assert_eq!(t.rows.len(), 7);
    for r in &t.rows {
        assert_eq!(r.max, Some(0), "order {}", r.order);
        assert_eq!(r.free_count, 1);
        let w = decode_graph6(r.witness.as_ref().unwrap()).unwrap();
        assert_eq!(w.edge_count(), r.order * (r.order - 1) / 2);
    }
}

#[test]
fn extremal_k2_free_is_edgeless() {
    let fam = FamilySpec::from_names(&[GraphName::Complete(2)]).unwrap();
    let t = extremal_search(&fam, ParamKind::Degree, 1, 5, false, 2).unwrap();
    for r in &t.rows {
        assert_eq!((r.free_count, r.max), (1, Some(0)));
    }
}

#[test]
fn extremal_witnesses_reverify() {
    let fam = theorem_family(TheoremId::Alpha, 3).unwrap();
    let t = extremal_search(&fam, ParamKind::LocalIndependence, 2, 7, false, 0).unwrap();
    for r in &t.rows {
        if let (Some(max), Some(w)) = (r.max, &r.witness) {
            let g = decode_graph6(w).unwrap();
            assert!(ramsey_core::iso::is_family_free(&g, &fam.members).unwrap().is_none());
            assert_eq!(
                ramsey_core::params::nontrivial_count(&g, ParamKind::LocalIndependence, 2).unwrap(),
                max
            );
        }
    }
}
