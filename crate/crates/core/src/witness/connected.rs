//! Pipelines for the connected statements and their disconnected corollaries.

use std::collections::BTreeMap;

use super::{best_clique, best_stable, dominating_set, fail, first_n, Run, Step};
use crate::error::Result;
use crate::generators::{GraphName, TheoremId};
use crate::graph::VertexSet;
use crate::iso::{find_induced, Embedding};
use crate::params::{self, ParamKind, DEFAULT_CAP};
use crate::ramsey::{
    find_mono_clique, path_clique_star, private_neighbor_pairs, prune_with, BipartiteView, ColoredClique, PruneMode,
    PruneRule,
};

pub(crate) fn corollary_of(base: TheoremId) -> TheoremId {
    match base {
        TheoremId::Deg => TheoremId::CorDeg,
        TheoremId::Alpha => TheoremId::CorAlpha,
        TheoremId::C => TheoremId::CorC,
        TheoremId::Adh => TheoremId::CorAdh,
        other => other,
    }
}

pub(crate) fn pipeline(run: &mut Run<'_>, base: TheoremId) -> Result<Step> {
    match base {
        TheoremId::Deg => deg(run),
        TheoremId::Alpha => alpha(run),
        TheoremId::C => comp(run),
        TheoremId::Adh => adh(run),
        other => Ok(fail("dispatch", format!("no connected pipeline for {other}"))),
    }
}

/// Splits matched pairs into `(xs, ys)` restricted to the chosen `ys`.
fn partners(pairs: &[(usize, usize)], chosen: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let by_y: BTreeMap<usize, usize> = pairs.iter().map(|&(x, y)| (y, x)).collect();
    (chosen.iter().map(|y| by_y[y]).collect(), chosen.to_vec())
}

fn matched(run: &mut Run<'_>, x: &VertexSet, y: &VertexSet) -> Result<Vec<(usize, usize)>> {
    let view = BipartiteView::new(run.g, x.clone(), y.clone())?;
    let pairs = private_neighbor_pairs(&view);
    debug_assert!(view.is_induced_matching(&pairs));
    run.log(
        "matching",
        pairs.len(),
        format!("induced matching between {} and {} vertices", x.len(), y.len()),
    );
    Ok(pairs)
}

fn concat(parts: &[&[usize]]) -> Vec<usize> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn deg(run: &mut Run<'_>) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let pruned = prune_with(g, PruneRule::Degree1, PruneMode::Snapshot);
    run.log("prune", pruned.kept.len(), "deleted vertices of degree at most 1");
    if pruned.kept.is_empty() {
        return Ok(fail("prune", "no vertex of degree at least 2"));
    }
    let tri = path_clique_star(&pruned.graph)?;
    let lift = |e: &Embedding| e.lift(&pruned.kept).map;
    run.log(
        "trichotomy",
        tri.best().k,
        format!("path {}, clique {}, star {}", tri.path.k, tri.clique.k, tri.star.k),
    );
    if tri.clique.k >= n {
        return Ok(Step::Found(
            GraphName::Complete(n),
            lift(&tri.clique.embedding)[..n].to_vec(),
        ));
    }
    if run.paths && tri.path.k >= n {
        return Ok(Step::Found(GraphName::Path(n), lift(&tri.path.embedding)[..n].to_vec()));
    }
    let star = lift(&tri.star.embedding);
    let s = star[0];
    let x: VertexSet = star[1..].iter().collect();
    if x.len() < n {
        return Ok(fail(
            "trichotomy",
            format!("largest star has {} leaves, need {n}", x.len()),
        ));
    }
    // second neighbours: two centres over n common leaves
    for y in g.vertices().iter().filter(|&y| y != s && !x.contains(y)) {
        let common = g.neighbors(y).intersection(&x);
        if common.len() >= n {
            run.log(
                "pigeonhole",
                common.len(),
                format!("vertex {y} sees {} leaves", common.len()),
            );
            let name = if g.has_edge(s, y) {
                GraphName::EdgeJoinStable(n)
            } else {
                GraphName::Biclique(2, n)
            };
            return Ok(Step::Found(name, concat(&[&[s, y], &first_n(&common, n)])));
        }
    }
    let mut ys = VertexSet::new();
    for v in x.iter() {
        if let Some(y) = g.neighbors(v).iter().find(|&y| y != s) {
            ys.insert(y);
        }
    }
    let pairs = matched(run, &x, &ys)?;
    let yp: VertexSet = pairs.iter().map(|p| p.1).collect();
    let clique = best_clique(g, &yp);
    if clique.len() >= n {
        return Ok(Step::Found(GraphName::Complete(n), first_n(&clique, n)));
    }
    let stable = best_stable(g, &yp);
    let (adj, non): (Vec<usize>, Vec<usize>) = stable.iter().partition(|&y| g.has_edge(s, y));
    run.log(
        "pigeonhole",
        stable.len(),
        format!(
            "stable set splits {} adjacent / {} not adjacent to the centre",
            adj.len(),
            non.len()
        ),
    );
    if adj.len() >= n {
        let (xs, ys) = partners(&pairs, &adj[..n]);
        let mut map = vec![s];
        for (a, b) in xs.into_iter().zip(ys) {
            map.extend([a, b]);
        }
        return Ok(Step::Found(GraphName::ApexMatching(n), map));
    }
    if non.len() >= n {
        let (xs, ys) = partners(&pairs, &non[..n]);
        return Ok(Step::Found(GraphName::SubdividedStar(n), concat(&[&[s], &xs, &ys])));
    }
    Ok(fail(
        "pigeonhole",
        format!(
            "matched stable set of {} splits {}/{}, need {n} on one side",
            stable.len(),
            adj.len(),
            non.len()
        ),
    ))
}

fn alpha(run: &mut Run<'_>) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let pruned = prune_with(g, PruneRule::Alpha1, PruneMode::Snapshot);
    run.log("prune", pruned.kept.len(), "deleted simplicial vertices");
    if pruned.kept.is_empty() {
        return Ok(fail("prune", "every neighbourhood is a clique"));
    }
    let tri = path_clique_star(&pruned.graph)?;
    let lift = |e: &Embedding| e.lift(&pruned.kept).map;
    run.log(
        "trichotomy",
        tri.best().k,
        format!("path {}, clique {}, star {}", tri.path.k, tri.clique.k, tri.star.k),
    );
    if run.paths && tri.path.k >= n {
        return Ok(Step::Found(GraphName::Path(n), lift(&tri.path.embedding)[..n].to_vec()));
    }
    let mut last = fail("trichotomy", format!("no path, clique or star of size {n}"));
    if tri.clique.k >= n {
        let x: VertexSet = lift(&tri.clique.embedding).into_iter().collect();
        match alpha_clique(run, &x)? {
            found @ Step::Found(..) => return Ok(found),
            failed => last = failed,
        }
    }
    if tri.star.k >= n {
        let star = lift(&tri.star.embedding);
        let x: VertexSet = star[1..].iter().collect();
        match alpha_star(run, star[0], &x)? {
            found @ Step::Found(..) => return Ok(found),
            failed => last = failed,
        }
    }
    Ok(last)
}

fn alpha_clique(run: &mut Run<'_>, x: &VertexSet) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let complete_to_x = |y: usize| x.is_subset(&g.neighbors(y).union(&VertexSet::singleton(y)));
    let mut ys = VertexSet::new();
    for v in x.iter() {
        let outside = g.neighbors(v).difference(x);
        let escaping = outside.iter().find(|&y| !complete_to_x(y));
        match escaping {
            Some(y) => {
                ys.insert(y);
            }
            None => {
                // N(v) is X - v plus vertices complete to X; a non-edge must
                // sit among the latter
                let w = outside.to_vec();
                for (i, &a) in w.iter().enumerate() {
                    if let Some(&b) = w[i + 1..].iter().find(|&&b| !g.has_edge(a, b)) {
                        run.log("clique-case", x.len(), format!("vertex {v} has no escaping neighbour"));
                        return Ok(Step::Found(
                            GraphName::PairJoinClique(n),
                            concat(&[&[a, b], &first_n(x, n)]),
                        ));
                    }
                }
            }
        }
    }
    for y in g.vertices().iter().filter(|&y| !x.contains(y) && !complete_to_x(y)) {
        let common = g.neighbors(y).intersection(x);
        if common.len() >= n {
            let miss = x.difference(g.neighbors(y)).first().expect("not complete to X");
            run.log(
                "pigeonhole",
                common.len(),
                format!("vertex {y} sees {} clique vertices", common.len()),
            );
            return Ok(Step::Found(
                GraphName::PairJoinClique(n),
                concat(&[&[y, miss], &first_n(&common, n)]),
            ));
        }
    }
    let pairs = matched(run, x, &ys)?;
    let yp: VertexSet = pairs.iter().map(|p| p.1).collect();
    let clique = best_clique(g, &yp);
    if clique.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&clique, n));
        return Ok(Step::Found(GraphName::MatchedCliques(n), concat(&[&xs, &ys])));
    }
    let stable = best_stable(g, &yp);
    run.log(
        "ramsey",
        stable.len(),
        format!("clique {} / stable {}", clique.len(), stable.len()),
    );
    if stable.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&stable, n));
        return Ok(Step::Found(GraphName::Corona(n), concat(&[&xs, &ys])));
    }
    Ok(fail(
        "ramsey",
        format!(
            "matched side of {} has clique {} and stable {}, need {n}",
            yp.len(),
            clique.len(),
            stable.len()
        ),
    ))
}

fn alpha_star(run: &mut Run<'_>, s: usize, x: &VertexSet) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let closed = g.closed_neighbors(s);
    let (x1, x2): (Vec<usize>, Vec<usize>) = x.iter().partition(|&v| !g.neighbors(v).difference(&closed).is_empty());
    let x1: VertexSet = x1.into_iter().collect();
    let x2: VertexSet = x2.into_iter().collect();
    run.log(
        "split",
        x1.len(),
        format!("{} leaves escape the centre, {} do not", x1.len(), x2.len()),
    );
    let mut last = fail("split", format!("neither side of the split reaches {n}"));
    if x1.len() >= n {
        match escaping_leaves(run, s, &x1)? {
            found @ Step::Found(..) => return Ok(found),
            failed => last = failed,
        }
    }
    if !x2.is_empty() {
        match trapped_leaves(run, s, &x2)? {
            found @ Step::Found(..) => return Ok(found),
            failed => last = failed,
        }
    }
    Ok(last)
}

/// Leaves `x1` of a star at `s`, each with a neighbour outside `N[s]`.
fn escaping_leaves(run: &mut Run<'_>, s: usize, x1: &VertexSet) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let closed = g.closed_neighbors(s);
    for y in g.vertices().difference(&closed).iter() {
        let common = g.neighbors(y).intersection(x1);
        if common.len() >= n {
            run.log(
                "pigeonhole",
                common.len(),
                format!("vertex {y} sees {} leaves", common.len()),
            );
            return Ok(Step::Found(
                GraphName::Biclique(2, n),
                concat(&[&[s, y], &first_n(&common, n)]),
            ));
        }
    }
    let ys: VertexSet = x1
        .iter()
        .filter_map(|v| g.neighbors(v).difference(&closed).first())
        .collect();
    let pairs = matched(run, x1, &ys)?;
    let yp: VertexSet = pairs.iter().map(|p| p.1).collect();
    let clique = best_clique(g, &yp);
    if clique.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&clique, n));
        return Ok(Step::Found(GraphName::Corona(n), concat(&[&ys, &xs])));
    }
    let stable = best_stable(g, &yp);
    run.log(
        "ramsey",
        stable.len(),
        format!("clique {} / stable {}", clique.len(), stable.len()),
    );
    if stable.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&stable, n));
        return Ok(Step::Found(GraphName::SubdividedStar(n), concat(&[&[s], &xs, &ys])));
    }
    Ok(fail(
        "ramsey",
        format!(
            "matched side of {} has clique {} and stable {}, need {n}",
            yp.len(),
            clique.len(),
            stable.len()
        ),
    ))
}

/// Leaves whose neighbourhoods stay inside `N[s]`: each spans a `K_4 - e`
/// with `s` and two nonadjacent common neighbours.
fn trapped_leaves(run: &mut Run<'_>, s: usize, x2: &VertexSet) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for v in x2.iter() {
        let common = g.neighbors(v).intersection(g.neighbors(s)).to_vec();
        let pair = common
            .iter()
            .enumerate()
            .find_map(|(i, &a)| common[i + 1..].iter().find(|&&b| !g.has_edge(a, b)).map(|&b| (a, b)));
        if let Some((a, b)) = pair {
            triples.push((v, a, b));
        }
    }
    run.log(
        "triples",
        triples.len(),
        "leaves with two nonadjacent common neighbours",
    );

    let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(v, a, b) in &triples {
        seen.entry(a).or_default().push(v);
        seen.entry(b).or_default().push(v);
    }
    // ties go to the smallest label
    if let Some((&centre, leaves)) = seen.iter().rev().max_by_key(|(_, l)| l.len()) {
        if leaves.len() >= n {
            run.log(
                "recenter",
                leaves.len(),
                format!(
                    "vertex {centre} appears in {} triples; chosen as new centre",
                    leaves.len()
                ),
            );
            let leaves: VertexSet = leaves.iter().collect();
            if let found @ Step::Found(..) = escaping_leaves(run, centre, &leaves)? {
                return Ok(found);
            }
        }
    }

    let mut used = VertexSet::new();
    let mut kept = Vec::new();
    for &(v, a, b) in &triples {
        if !used.contains(a) && !used.contains(b) {
            used.insert(a);
            used.insert(b);
            kept.push((v, a, b));
        }
    }
    run.log("subfamily", kept.len(), "triples with pairwise disjoint outer vertices");
    if kept.len() < n + 2 {
        return Ok(fail(
            "subfamily",
            format!("{} disjoint triples, need {}", kept.len(), n + 2),
        ));
    }
    let e = |u: usize, w: usize| u64::from(g.has_edge(u, w));
    let c = ColoredClique::new(kept.len(), 256, |i, j| {
        let (xi, yi, zi) = kept[i];
        let (xj, yj, zj) = kept[j];
        e(xi, yj)
            | e(xi, zj) << 1
            | e(yi, xj) << 2
            | e(zi, xj) << 3
            | e(yi, yj) << 4
            | e(zi, zj) << 5
            | e(yi, zj) << 6
            | e(zi, yj) << 7
    })?;
    let Some((color, set)) = find_mono_clique(&c, n + 2)? else {
        return Ok(fail(
            "coloring",
            format!("no monochromatic K_{} among {} triples", n + 2, kept.len()),
        ));
    };
    run.log(
        "coloring",
        set.len(),
        format!("monochromatic clique in color {color:08b}"),
    );
    let t: Vec<(usize, usize, usize)> = set.iter().map(|i| kept[i]).collect();
    let xs: Vec<usize> = t.iter().map(|p| p.0).collect();
    let ys: Vec<usize> = t.iter().map(|p| p.1).collect();
    let zs: Vec<usize> = t.iter().map(|p| p.2).collect();
    let bit = |k: u32| color >> k & 1 == 1;
    let head = |v: &[usize]| v[..n].to_vec();
    let tail2 = |v: &[usize]| v[2..].to_vec();
    let (a, b, cc, d, ey, fz, gyz, hzy) = (bit(0), bit(1), bit(2), bit(3), bit(4), bit(5), bit(6), bit(7));
    let step = if ey || fz {
        // a clique side: y when available, otherwise z
        let (side, fwd, back) = if ey { (&ys, a, cc) } else { (&zs, b, d) };
        if fwd {
            Step::Found(GraphName::PairJoinClique(n), concat(&[&[xs[0], xs[1]], &tail2(side)]))
        } else if back {
            Step::Found(
                GraphName::PairJoinClique(n),
                concat(&[&[xs[n], xs[n + 1]], &head(side)]),
            )
        } else {
            Step::Found(GraphName::Corona(n), concat(&[&head(side), &head(&xs)]))
        }
    } else if a {
        Step::Found(GraphName::Biclique(2, n), concat(&[&[xs[0], xs[1]], &tail2(&ys)]))
    } else if cc {
        Step::Found(GraphName::Biclique(2, n), concat(&[&[xs[n], xs[n + 1]], &head(&ys)]))
    } else if b {
        Step::Found(GraphName::Biclique(2, n), concat(&[&[xs[0], xs[1]], &tail2(&zs)]))
    } else if d {
        Step::Found(GraphName::Biclique(2, n), concat(&[&[xs[n], xs[n + 1]], &head(&zs)]))
    } else if gyz {
        Step::Found(GraphName::Biclique(2, n), concat(&[&[ys[0], ys[1]], &tail2(&zs)]))
    } else if hzy {
        Step::Found(GraphName::Biclique(2, n), concat(&[&[zs[0], zs[1]], &tail2(&ys)]))
    } else {
        let mut map = vec![s];
        for i in 0..n {
            map.extend([ys[i], xs[i], zs[i]]);
        }
        Step::Found(GraphName::ApexPaths(n), map)
    };
    Ok(step)
}

fn comp(run: &mut Run<'_>) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let hot = params::nontrivial_vertices(g, ParamKind::LocalComponents, 2)?;
    let d = dominating_set(g);
    run.log("dominate", d.len(), "dominating set used as pivots");
    let mut last = fail("dominate", format!("no pivot sees {n} vertices with c(N) >= 2"));
    let global = best_clique(g, &hot);
    if global.len() >= n {
        match comp_clique(run, &global)? {
            found @ Step::Found(..) => return Ok(found),
            failed => last = failed,
        }
    }
    let mut pivots = d.to_vec();
    pivots.sort_by_key(|&p| (std::cmp::Reverse(g.neighbors(p).intersection_len(&hot)), p));
    // the remaining vertices serve as pivots once the dominating set is spent
    pivots.extend(g.vertices().difference(&d).iter());
    for p in pivots {
        let w = g.neighbors(p).intersection(&hot);
        if w.len() < n {
            continue;
        }
        run.log("pivot", w.len(), format!("pivot {p}"));
        let k = best_clique(g, &w);
        if k.len() >= n && k != global {
            match comp_clique(run, &k)? {
                found @ Step::Found(..) => return Ok(found),
                failed => last = failed,
            }
        }
        let st = best_stable(g, &w);
        if st.len() >= n {
            match comp_star(run, p, &st)? {
                found @ Step::Found(..) => return Ok(found),
                failed => last = failed,
            }
        }
    }
    Ok(last)
}

fn comp_clique(run: &mut Run<'_>, k: &VertexSet) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let mut pairs = Vec::new();
    for v in k.iter() {
        let others = k.difference(&VertexSet::singleton(v));
        let comps = g.components_within(g.neighbors(v));
        if let Some(y) = comps.iter().find(|c| c.is_disjoint(&others)).and_then(|c| c.first()) {
            pairs.push((v, y));
        }
    }
    run.log(
        "clique-case",
        pairs.len(),
        "clique vertices with a private neighbour component",
    );
    let yp: VertexSet = pairs.iter().map(|p| p.1).collect();
    let clique = best_clique(g, &yp);
    if clique.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&clique, n));
        return Ok(Step::Found(GraphName::MatchedCliques(n), concat(&[&xs, &ys])));
    }
    let stable = best_stable(g, &yp);
    run.log(
        "ramsey",
        stable.len(),
        format!("clique {} / stable {}", clique.len(), stable.len()),
    );
    if stable.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&stable, n));
        return Ok(Step::Found(GraphName::Corona(n), concat(&[&xs, &ys])));
    }
    Ok(fail(
        "ramsey",
        format!(
            "{} escaping neighbours have clique {} and stable {}, need {n}",
            yp.len(),
            clique.len(),
            stable.len()
        ),
    ))
}

fn comp_star(run: &mut Run<'_>, s: usize, x: &VertexSet) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let closed = g.closed_neighbors(s);
    for y in g.vertices().difference(&closed).iter() {
        let common = g.neighbors(y).intersection(x);
        if common.len() >= n {
            run.log(
                "pigeonhole",
                common.len(),
                format!("vertex {y} sees {} leaves", common.len()),
            );
            return Ok(Step::Found(
                GraphName::Biclique(2, n),
                concat(&[&[s, y], &first_n(&common, n)]),
            ));
        }
    }
    let mut ys = VertexSet::new();
    for v in x.iter() {
        let comps = g.components_within(g.neighbors(v));
        if let Some(y) = comps.iter().find(|c| !c.contains(s)).and_then(|c| c.first()) {
            ys.insert(y);
        }
    }
    let pairs = matched(run, x, &ys)?;
    let yp: VertexSet = pairs.iter().map(|p| p.1).collect();
    let clique = best_clique(g, &yp);
    if clique.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&clique, n));
        return Ok(Step::Found(GraphName::Corona(n), concat(&[&ys, &xs])));
    }
    let stable = best_stable(g, &yp);
    run.log(
        "ramsey",
        stable.len(),
        format!("clique {} / stable {}", clique.len(), stable.len()),
    );
    if stable.len() >= n {
        let (xs, ys) = partners(&pairs, &first_n(&stable, n));
        return Ok(Step::Found(GraphName::SubdividedStar(n), concat(&[&[s], &xs, &ys])));
    }
    Ok(fail(
        "ramsey",
        format!(
            "matched side of {} has clique {} and stable {}, need {n}",
            yp.len(),
            clique.len(),
            stable.len()
        ),
    ))
}

fn long_path(g: &crate::graph::Graph) -> Result<Vec<usize>> {
    let tri = path_clique_star(g)?;
    Ok(tri.path.embedding.map)
}

fn adh(run: &mut Run<'_>) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let cuts = params::cut_vertices(g);
    run.log("cut-vertices", cuts.len(), "vertices with adhesion at least 2");
    if let Ok((gc, d)) = params::domination_capped(g, true, DEFAULT_CAP) {
        run.log(
            "connected-domination",
            gc,
            format!(
                "minimum connected dominating set contains every cut vertex: {}",
                cuts.is_subset(&d)
            ),
        );
    }
    let path = long_path(g)?;
    if run.paths && path.len() >= n {
        return Ok(Step::Found(GraphName::Path(n), path[..n].to_vec()));
    }
    for v in cuts.iter() {
        let rest = g.vertices().difference(&VertexSet::singleton(v));
        let closed = g.closed_neighbors(v);
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for c in g.components_within(&rest) {
            let found = c.intersection(g.neighbors(v)).iter().find_map(|x| {
                g.neighbors(x)
                    .intersection(&c)
                    .difference(&closed)
                    .first()
                    .map(|y| (x, y))
            });
            if let Some((x, y)) = found {
                xs.push(x);
                ys.push(y);
            }
        }
        if xs.len() >= n {
            run.log(
                "branches",
                xs.len(),
                format!("cut vertex {v} has {} branches of depth 2", xs.len()),
            );
            return Ok(Step::Found(
                GraphName::SubdividedStar(n),
                concat(&[&[v], &xs[..n], &ys[..n]]),
            ));
        }
    }
    let k = best_clique(g, &cuts);
    run.log("cut-clique", k.len(), "largest clique of cut vertices");
    if k.len() >= n {
        let top = first_n(&k, n);
        let mut pend = Vec::new();
        for &c in &top {
            let others = k.difference(&VertexSet::singleton(c));
            let rest = g.vertices().difference(&VertexSet::singleton(c));
            let p = g
                .components_within(&rest)
                .into_iter()
                .find(|comp| comp.is_disjoint(&others))
                .and_then(|comp| comp.intersection(g.neighbors(c)).first());
            match p {
                Some(p) => pend.push(p),
                None => return Ok(fail("cut-clique", format!("cut vertex {c} has no private branch"))),
            }
        }
        return Ok(Step::Found(GraphName::Corona(n), concat(&[&top, &pend])));
    }
    Ok(fail(
        "domination",
        format!(
            "longest induced path {}, no cut vertex with {n} deep branches, cut-vertex clique {}",
            path.len(),
            k.len()
        ),
    ))
}

/// Disconnected variants: copies of `P_3` or `K_3` spread over components
/// first, then the connected pipeline inside one component.
pub(crate) fn corollary(run: &mut Run<'_>, base: TheoremId) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let family = corollary_of(base).member_names(n);
    let comps = g.components();
    let spread = |pattern: GraphName| -> Result<Vec<Vec<usize>>> {
        let h = pattern.build()?;
        let mut out = Vec::new();
        for c in &comps {
            let (sub, map) = g.induced(c)?;
            if let Some(e) = find_induced(&sub, &h)? {
                out.push(e.lift(&map).map);
            }
        }
        Ok(out)
    };
    let p3 = spread(GraphName::Path(3))?;
    run.log(
        "components",
        p3.len(),
        format!("{} components, {} with an induced P3", comps.len(), p3.len()),
    );
    if p3.len() >= n {
        return Ok(Step::Found(GraphName::DisjointPaths3(n), p3[..n].concat()));
    }
    if family.contains(&GraphName::DisjointTriangles(n)) {
        let k3 = spread(GraphName::Complete(3))?;
        run.log("components", k3.len(), "components with a triangle");
        if k3.len() >= n {
            return Ok(Step::Found(GraphName::DisjointTriangles(n), k3[..n].concat()));
        }
    }
    let kind = base.param_kind().expect("vertex parameter");
    let mut ranked = Vec::new();
    for c in comps.iter().filter(|c| c.len() >= 2) {
        let (sub, map) = g.induced(c)?;
        let k = params::nontrivial_count(&sub, kind, 2)?;
        ranked.push((std::cmp::Reverse(k), map[0], sub, map));
    }
    ranked.sort_by_key(|a| (a.0, a.1));
    let mut last = fail("components", "no component yields a member of the family");
    for (_, first, sub, map) in ranked {
        if sub.order() >= 4 * n - 1 {
            let path = long_path(&sub)?;
            if path.len() >= 4 * n - 1 {
                let picked: Vec<usize> = (0..n).flat_map(|k| path[4 * k..4 * k + 3].to_vec()).collect();
                let lifted: Vec<usize> = picked.into_iter().map(|v| map[v]).collect();
                return Ok(Step::Found(GraphName::DisjointPaths3(n), lifted));
            }
        }
        let mut inner = Run::new(&sub, n);
        inner.paths = false;
        let step = pipeline(&mut inner, base)?;
        for t in inner.trace {
            run.log(&t.step, t.size, format!("component of {first}: {}", t.note));
        }
        match step {
            Step::Found(name, m) if family.contains(&name) => {
                return Ok(Step::Found(name, m.into_iter().map(|v| map[v]).collect()));
            }
            Step::Found(GraphName::ApexPaths(k), m) if k == n => {
                let lifted = m[1..].iter().map(|&v| map[v]).collect();
                return Ok(Step::Found(GraphName::DisjointPaths3(n), lifted));
            }
            Step::Found(name, _) => last = fail("components", format!("component yields {name}, not in the family")),
            failed => last = failed,
        }
    }
    Ok(last)
}
