//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line.
//!
//! Run with `cargo test -p ramsey-harness --test acceptance -- --nocapture`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use ramsey_core::codec::{decode_graph6, encode_graph6};
use ramsey_core::iso::is_family_free;
use ramsey_core::params::{self, ParamKind};
use ramsey_core::ramsey::{extract_induced_matching, lemma_tight_augmented, lemma_tight_instance, BipartiteView};
use ramsey_core::witness::{witness, Outcome, WitnessOptions};
use ramsey_core::{theorem_family, Graph, GraphBuilder, GraphName, TheoremId, VertexSet};
use ramsey_harness::random::{random_bipartite_view, random_connected_graph, random_graph, seeded_rng};
use ramsey_harness::{
    certify_small_ramsey, enumerate_table, extremal_search, scan_corpus, CheckId, ScanConfig, ENUMERATION_CAP,
};

fn report(id: u32, title: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {id} [{verdict}] {title}: {detail}");
}

// ---------------------------------------------------------------- 1

use GraphName::*;

type Row = (GraphName, usize);

/// Stated counts for the connected statements at cut-off 2.
fn connected_tables(n: usize) -> Vec<(TheoremId, ParamKind, Vec<Row>)> {
    vec![
        (
            TheoremId::Deg,
            ParamKind::Degree,
            vec![
                (Complete(n), n),
                (Path(n), n - 2),
                (SubdividedStar(n), n + 1),
                (Biclique(2, n), n + 2),
                (EdgeJoinStable(n), n + 2),
                (ApexMatching(n), 2 * n + 1),
            ],
        ),
        (
            TheoremId::Alpha,
            ParamKind::LocalIndependence,
            vec![
                (Corona(n), n),
                (Path(n), n - 2),
                (SubdividedStar(n), n + 1),
                (Biclique(2, n), n + 2),
                (PairJoinClique(n), n),
                (ApexPaths(n), n + 1),
                (MatchedCliques(n), 2 * n),
            ],
        ),
        (
            TheoremId::C,
            ParamKind::LocalComponents,
            vec![
                (Corona(n), n),
                (Path(n), n - 2),
                (SubdividedStar(n), n + 1),
                (Biclique(2, n), n + 2),
                (MatchedCliques(n), 2 * n),
                (CappedSplit(n), n + 1),
            ],
        ),
        (
            TheoremId::Adh,
            ParamKind::Adhesion,
            vec![(Corona(n), n), (Path(n), n - 2), (SubdividedStar(n), n + 1)],
        ),
    ]
}

/// Stated counts for the h-index statements at cut-off `c_1`, `n = c_1 + c_2`.
fn hindex_tables(n: usize) -> Vec<(TheoremId, ParamKind, Vec<Row>)> {
    vec![
        (
            TheoremId::HDeg,
            ParamKind::Degree,
            vec![(Complete(n), n), (Biclique(n, n), 2 * n), (DisjointStars(n, n), n)],
        ),
        (
            TheoremId::HC,
            ParamKind::LocalComponents,
            vec![
                (Biclique(n, n), 2 * n),
                (DisjointStars(n, n), n),
                (SplitJoin(n, n), n),
                (CliqueWithPendants(n, n), n),
            ],
        ),
        (
            TheoremId::HAdh,
            ParamKind::Adhesion,
            vec![(DisjointStars(n, n), n), (CliqueWithPendants(n, n), n)],
        ),
    ]
}

struct Mismatch {
    theorem: TheoremId,
    n: usize,
    cutoff: usize,
    member: GraphName,
    stated: usize,
    got: usize,
}

fn count_mismatches() -> Vec<Mismatch> {
    let mut out = Vec::new();
    for n in 3..=8 {
        let mut jobs: Vec<(TheoremId, ParamKind, Vec<Row>, usize)> = connected_tables(n)
            .into_iter()
            .map(|(t, k, rows)| (t, k, rows, 2))
            .collect();
        // c_2 >= 1 and c_1 >= 2: with c_1 = 1 every leaf would count
        for c1 in 2..n {
            jobs.extend(hindex_tables(n).into_iter().map(|(t, k, rows)| (t, k, rows, c1)));
        }
        for (theorem, kind, rows, cutoff) in jobs {
            // the table covers exactly the statement's family
            let mut stated: Vec<GraphName> = rows.iter().map(|r| r.0).collect();
            let mut family = theorem.member_names(n);
            stated.sort_by_key(|g| g.to_string());
            family.sort_by_key(|g| g.to_string());
            assert_eq!(stated, family, "{theorem} n={n}");
            for (member, stated) in rows {
                let g = member.build().unwrap();
                let got = params::nontrivial_count(&g, kind, cutoff).unwrap();
                if got != stated {
                    out.push(Mismatch {
                        theorem,
                        n,
                        cutoff,
                        member,
                        stated,
                        got,
                    });
                }
            }
        }
    }
    out
}

fn is_known_defect(m: &Mismatch) -> bool {
    // K_n+E_n: every neighbourhood is connected
    m.theorem == TheoremId::HC && matches!(m.member, SplitJoin(..)) && m.got == 0
}

#[test]
fn criterion_1_count_tables() {
    let started = Instant::now();
    let mismatches = count_mismatches();
    let elapsed = started.elapsed();
    let unexpected: Vec<&Mismatch> = mismatches.iter().filter(|m| !is_known_defect(m)).collect();
    for m in &mismatches {
        println!(
            "  {} n={} cut-off {}: {} stated {} got {}",
            m.theorem, m.n, m.cutoff, m.member, m.stated, m.got
        );
    }
    report(
        1,
        "count tables",
        mismatches.is_empty() && elapsed < Duration::from_secs(5),
        &format!(
            "{} mismatches ({} on the K_n+E_n row under c(N)), {elapsed:?}",
            mismatches.len(),
            mismatches.len() - unexpected.len()
        ),
    );
    assert!(unexpected.is_empty(), "unexpected count mismatches");
    assert!(elapsed < Duration::from_secs(5));
}

/// The stated value for `K_n+E_n` under `c(N)`. It does not hold: the
/// neighbourhood of every vertex of the join is connected.
#[test]
#[ignore = "stated count for K_n+E_n under c(N) is n, the true count is 0"]
fn criterion_1_split_join_row_as_stated() {
    for n in 3..=8 {
        for c1 in 2..n {
            let g = SplitJoin(n, n).build().unwrap();
            assert_eq!(params::nontrivial_count(&g, ParamKind::LocalComponents, c1).unwrap(), n);
        }
    }
}

// ---------------------------------------------------------------- 2

/// Components of `g - v`, by a plain search.
fn components_without(g: &Graph, v: Option<usize>) -> usize {
    let n = g.order();
    let mut seen = vec![false; n];
    if let Some(v) = v {
        seen[v] = true;
    }
    let mut count = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u).iter() {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}

#[test]
fn criterion_2_chain_and_cut_vertices() {
    let started = Instant::now();
    let all: Vec<Graph> = enumerate_table(7, false)
        .unwrap()
        .into_iter()
        .skip(1)
        .flatten()
        .collect();
    let config = ScanConfig {
        checks: vec![CheckId::Chain, CheckId::CutAdh],
        ..Default::default()
    };
    let small = scan_corpus(&all, &config).unwrap();

    // connected order 8 comes from the built-in enumerator, which reaches the cap
    assert_eq!(ENUMERATION_CAP, 8);
    let eight = enumerate_table(8, true).unwrap().pop().unwrap();
    let large = scan_corpus(&eight, &config).unwrap();

    // cut vertices recomputed from the definition
    let oracle_misses: usize = all
        .par_iter()
        .chain(eight.par_iter())
        .map(|g| {
            let base = components_without(g, None);
            let cuts = params::cut_vertices(g);
            (0..g.order())
                .filter(|&v| (components_without(g, Some(v)) > base) != cuts.contains(v))
                .count()
        })
        .sum();

    let violations = small.violations.len() + large.violations.len();
    let pass = violations == 0 && oracle_misses == 0;
    report(
        2,
        "chain inequality and cut-vertex equivalence",
        pass,
        &format!(
            "{} classes on <= 7 vertices, {} connected on 8, {violations} violations, {oracle_misses} oracle disagreements, {:?}",
            small.graphs,
            large.graphs,
            started.elapsed()
        ),
    );
    assert_eq!(small.graphs, 1 + 2 + 4 + 11 + 34 + 156 + 1044);
    assert_eq!(large.graphs, 11117);
    assert!(pass, "{:?} {:?}", small.violations, large.violations);
}

// ---------------------------------------------------------------- 3

#[test]
fn criterion_3_induced_matchings() {
    let mut rng = seeded_rng(0x3a);
    let mut failures = Vec::new();
    let mut runs = 0;
    for (n, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let need = n * (p - 1) + 1;
        for _ in 0..500 {
            let x_size = rng.gen_range(need..=need + 4);
            let noise = [0.0, 0.3, 0.7][rng.gen_range(0..3)];
            let (g, x, y) = random_bipartite_view(&mut rng, x_size, n, noise);
            let view = BipartiteView::new(&g, x.clone(), y.clone()).unwrap();
            runs += 1;
            match extract_induced_matching(&view, n, p) {
                Ok(pairs) => {
                    // x_i ~ y_j exactly when i == j, all distinct, sides respected
                    let xs: VertexSet = pairs.iter().map(|q| q.0).collect();
                    let ys: VertexSet = pairs.iter().map(|q| q.1).collect();
                    let ok = pairs.len() == p
                        && xs.len() == p
                        && ys.len() == p
                        && xs.is_subset(&x)
                        && ys.is_subset(&y)
                        && pairs
                            .iter()
                            .all(|&(a, _)| pairs.iter().all(|&(c, b)| g.has_edge(a, b) == (a == c)));
                    if !ok {
                        failures.push(format!("n={n} p={p} {}: {pairs:?}", encode_graph6(&g).unwrap()));
                    }
                }
                Err(e) => failures.push(format!("n={n} p={p} {}: {e}", encode_graph6(&g).unwrap())),
            }
        }
    }
    let mut tight = Vec::new();
    for (n, p) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let (g, x, y) = lemma_tight_instance(n, p);
        assert_eq!(x.len(), n * (p - 1));
        let mu = params::induced_matching_number(&g).unwrap().0;
        let view = BipartiteView::new(&g, x, y).unwrap();
        let refused = extract_induced_matching(&view, n, p).is_err();
        let (ga, _, _) = lemma_tight_augmented(n, p);
        let mu_a = params::induced_matching_number(&ga).unwrap().0;
        tight.push((n, p, mu, mu_a));
        if mu != p - 1 || mu_a != p || !refused {
            failures.push(format!(
                "tight n={n} p={p}: mu' {mu}, augmented {mu_a}, refused {refused}"
            ));
        }
    }
    report(
        3,
        "induced matchings from bipartite views",
        failures.is_empty(),
        &format!(
            "{runs} random views, tight instances (n, p, mu', mu' augmented) {tight:?}, {} failures",
            failures.len()
        ),
    );
    assert!(failures.is_empty(), "{failures:#?}");
}

// ---------------------------------------------------------------- 4

#[test]
fn criterion_4_small_ramsey_certificate() {
    let started = Instant::now();
    let c = certify_small_ramsey().unwrap();
    let elapsed = started.elapsed();
    let pass = c.holds
        && c.k6_with_mono_triangle == 32768
        && c.pentagon_mono_triangles == 0
        && c.pentagon_triangles == 10
        && elapsed < Duration::from_secs(60);
    report(
        4,
        "R_2(3) = 6",
        pass,
        &format!(
            "{}/{} K6 colorings, {} of {} pentagon triangles monochromatic, {elapsed:?}",
            c.k6_with_mono_triangle, c.k6_colorings, c.pentagon_mono_triangles, c.pentagon_triangles
        ),
    );
    assert!(pass);
}

// ---------------------------------------------------------------- 5

fn embeds(h: &Graph, host: &Graph, map: &[usize]) -> bool {
    let mut seen = map.to_vec();
    seen.sort_unstable();
    seen.dedup();
    map.len() == h.order()
        && seen.len() == map.len()
        && map.iter().all(|&v| v < host.order())
        && (0..map.len()).all(|i| (i + 1..map.len()).all(|j| h.has_edge(i, j) == host.has_edge(map[i], map[j])))
}

#[test]
fn criterion_5_witness_soundness() {
    let mut rng = seeded_rng(0x55);
    let graphs: Vec<Graph> = (0..1000)
        .map(|i| {
            let order = rng.gen_range(2..=14);
            random_connected_graph(&mut rng, order, [0.2, 0.5, 0.8][i % 3])
        })
        .collect();
    // the domination statement has no witness extractor
    let theorems: Vec<TheoremId> = TheoremId::ALL.into_iter().filter(|&t| t != TheoremId::Dom).collect();
    let opts = WitnessOptions::default();
    let results: Vec<(usize, usize, usize, Vec<String>)> = graphs
        .par_iter()
        .map(|g| {
            let (mut found, mut verified, mut other) = (0, 0, 0);
            let mut bad = Vec::new();
            for &thm in &theorems {
                let r = witness(g, thm, 3, &opts).unwrap();
                let family = theorem_family(thm, 3).unwrap();
                let free = is_family_free(g, &family.members).unwrap().is_none();
                match &r.outcome {
                    Outcome::Found { member, embedding } => {
                        found += 1;
                        let ok = family.names().contains(member)
                            && embeds(&member.build().unwrap(), g, &embedding.map)
                            && !free;
                        if ok {
                            verified += 1;
                        } else {
                            bad.push(format!(
                                "{thm} {}: {member} {:?}",
                                encode_graph6(g).unwrap(),
                                embedding.map
                            ));
                        }
                    }
                    Outcome::NotTriggered { .. } | Outcome::StepFailed { .. } => other += 1,
                }
            }
            (found, verified, other, bad)
        })
        .collect();
    let found: usize = results.iter().map(|r| r.0).sum();
    let verified: usize = results.iter().map(|r| r.1).sum();
    let other: usize = results.iter().map(|r| r.2).sum();
    let bad: Vec<&String> = results.iter().flat_map(|r| &r.3).collect();
    report(
        5,
        "witness soundness",
        bad.is_empty() && found == verified,
        &format!(
            "1000 graphs x {} statements: {verified}/{found} found outcomes re-verified, {other} reported as not triggered or failed",
            theorems.len()
        ),
    );
    assert!(bad.is_empty(), "{bad:#?}");
}

// ---------------------------------------------------------------- 6

fn connected_within(g: &Graph, s: &VertexSet) -> bool {
    let Some(start) = s.first() else { return false };
    let mut seen = VertexSet::singleton(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for w in g.neighbors(u).intersection(s).iter() {
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == s.len()
}

#[test]
fn criterion_6_dominating_sets_contain_cut_vertices() {
    let conn: Vec<Graph> = enumerate_table(7, true).unwrap().into_iter().flatten().collect();
    let config = ScanConfig {
        checks: vec![CheckId::CdsCut],
        ..Default::default()
    };
    let scan = scan_corpus(&conn, &config).unwrap();
    // independent sweep over every vertex subset
    let (checked, misses): (usize, usize) = conn
        .par_iter()
        .map(|g| {
            let n = g.order();
            let base = components_without(g, None);
            let cuts: VertexSet = (0..n).filter(|&v| components_without(g, Some(v)) > base).collect();
            let mut checked = 0;
            let mut misses = 0;
            for mask in 1u64..1 << n {
                let s = VertexSet::from_mask(mask);
                let dominated = (0..n).all(|v| s.contains(v) || !g.neighbors(v).is_disjoint(&s));
                if dominated && connected_within(g, &s) {
                    checked += 1;
                    if !cuts.is_subset(&s) {
                        misses += 1;
                    }
                }
            }
            (checked, misses)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let pass = scan.passed() && misses == 0;
    report(
        6,
        "connected dominating sets contain all cut vertices",
        pass,
        &format!(
            "{} connected classes, {checked} connected dominating sets enumerated, {} scan violations, {misses} misses",
            scan.graphs,
            scan.violations.len()
        ),
    );
    assert!(pass, "{:?}", scan.violations);
}

// ---------------------------------------------------------------- 7

/// Straight transcription of the graph6 layout for orders below 63:
/// `n + 63`, then the upper triangle column by column, six bits per byte.
fn reference_encode(g: &Graph) -> String {
    let n = g.order();
    assert!(n < 63);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut s = String::new();
    s.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b));
        s.push((v + 63) as char);
    }
    s
}

#[test]
fn criterion_7_codec() {
    let mut failures = Vec::new();
    let mut exhaustive = 0;
    for n in 0..=5usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for bits in 0u64..1 << pairs {
            let mut b = GraphBuilder::new(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits >> k & 1 == 1 {
                        b.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            let g = b.build();
            let text = encode_graph6(&g).unwrap();
            exhaustive += 1;
            if text != reference_encode(&g) || decode_graph6(&text).unwrap() != g {
                failures.push(text);
            }
        }
    }
    let mut rng = seeded_rng(0x77);
    for _ in 0..1000 {
        let n = rng.gen_range(0..=16);
        let p = rng.gen_range(0.0..1.0);
        let g = random_graph(&mut rng, n, p);
        let text = encode_graph6(&g).unwrap();
        if text != reference_encode(&g) || decode_graph6(&text).unwrap() != g {
            failures.push(text);
        }
    }
    // goldens taken from the reference layout before the build
    let goldens = [("A_", Complete(2)), ("D??", Edgeless(5))];
    for (text, name) in goldens {
        let g = name.build().unwrap();
        if encode_graph6(&g).unwrap() != text || decode_graph6(text).unwrap() != g {
            failures.push(format!("golden {text} vs {name}"));
        }
    }
    report(
        7,
        "graph6 codec",
        failures.is_empty(),
        &format!(
            "{exhaustive} exhaustive + 1000 random round trips, 2 goldens, {} failures",
            failures.len()
        ),
    );
    assert!(failures.is_empty(), "{failures:?}");
}

// ---------------------------------------------------------------- 8

#[test]
fn criterion_8_extremal_stability() {
    let family = theorem_family(TheoremId::Deg, 3).unwrap();
    let run = |jobs| {
        let t = extremal_search(&family, ParamKind::Degree, 2, ENUMERATION_CAP, true, jobs).unwrap();
        (serde_json::to_string(&t).unwrap(), t)
    };
    let (reference, table) = run(1);
    let mut outputs = BTreeMap::new();
    for jobs in [1, 2, 4, 0] {
        outputs.insert(jobs, run(jobs).0);
    }
    let reproducible = outputs.values().all(|s| *s == reference);
    let witnesses_ok = table.rows.iter().all(|r| match (&r.witness, r.max) {
        (Some(w), Some(max)) => {
            let g = decode_graph6(w).unwrap();
            is_family_free(&g, &family.members).unwrap().is_none()
                && params::nontrivial_count(&g, ParamKind::Degree, 2).unwrap() == max
        }
        (None, None) => r.free_count == 0,
        _ => false,
    });
    let pass = table.stabilized() && reproducible && witnesses_ok;
    for r in &table.rows {
        println!(
            "  order {}: {} classes, {} free, max {:?}, running {:?}, witness {:?}",
            r.order, r.graphs, r.free_count, r.max, r.running_max, r.witness
        );
    }
    let last = table.rows.last().unwrap();
    report(
        8,
        "extremal stability",
        pass,
        &format!(
            "orders 1..={}, running max {:?} at the two largest orders, identical JSON for jobs 1, 2, 4 and default",
            ENUMERATION_CAP, last.running_max
        ),
    );
    assert!(pass);
}
