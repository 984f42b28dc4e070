//! Pipelines for the h-index statements: fans of stable neighbours around
//! high-parameter vertices, resolved by a monochromatic clique.

use super::{best_clique, best_stable, fail, first_n, Run, Step};
use crate::error::{Error, Result};
use crate::generators::{GraphName, TheoremId};
use crate::graph::VertexSet;
use crate::params::ParamKind;
use crate::ramsey::{find_mono_clique, homogeneous, multipartite_refine, ColoredClique, MONO_CLIQUE_CAP};

pub(crate) fn pipeline(run: &mut Run<'_>, theorem: TheoremId, kind: ParamKind, hi: &[usize]) -> Result<Step> {
    match theorem {
        TheoremId::HDeg => hdeg(run, hi),
        TheoremId::HAlpha | TheoremId::HC => halpha(run, kind, hi),
        TheoremId::HAdh => hadh(run, hi),
        other => Ok(fail("dispatch", format!("no h-index pipeline for {other}"))),
    }
}

struct Fans {
    centres: Vec<usize>,
    fans: Vec<Vec<usize>>,
}

/// Fans built greedily in `hi` order from `pick(centre, available)`; fan
/// vertices avoid every high vertex and every earlier fan.
fn gather(
    run: &mut Run<'_>,
    hi: &[usize],
    limit: usize,
    mut pick: impl FnMut(usize, &VertexSet) -> Vec<usize>,
) -> Fans {
    let g = run.g;
    let n = run.n;
    let hot: VertexSet = hi.iter().collect();
    let mut used = VertexSet::new();
    let mut out = Fans {
        centres: Vec::new(),
        fans: Vec::new(),
    };
    for &v in hi {
        if out.centres.len() == limit {
            break;
        }
        let avail = g.neighbors(v).difference(&hot).difference(&used);
        let fan = pick(v, &avail);
        if fan.len() >= n {
            used = used.union(&fan.iter().collect());
            out.centres.push(v);
            out.fans.push(fan);
        }
    }
    run.log(
        "fans",
        out.centres.len(),
        format!("centres with {n} or more stable fan vertices"),
    );
    out
}

/// Keeps fan vertices with no neighbour in, and not belonging to, another
/// centre's closed fan.
fn private_fans(run: &mut Run<'_>, f: &Fans) -> Fans {
    let g = run.g;
    let n = run.n;
    let closed: Vec<VertexSet> = f
        .centres
        .iter()
        .zip(&f.fans)
        .map(|(&c, fan)| {
            let t: VertexSet = fan.iter().chain(std::iter::once(&c)).collect();
            t.iter().fold(t.clone(), |acc, u| acc.union(g.neighbors(u)))
        })
        .collect();
    let mut out = Fans {
        centres: Vec::new(),
        fans: Vec::new(),
    };
    for (i, (&c, fan)) in f.centres.iter().zip(&f.fans).enumerate() {
        let kept: Vec<usize> = fan
            .iter()
            .copied()
            .filter(|&w| closed.iter().enumerate().all(|(j, t)| j == i || !t.contains(w)))
            .collect();
        if kept.len() >= n {
            out.centres.push(c);
            out.fans.push(kept[..n].to_vec());
        }
    }
    run.log(
        "dedup",
        out.centres.len(),
        "centres whose fans avoid every other centre and fan",
    );
    out
}

/// A clique of centres with private fans is `K_n^n`; a stable set of
/// centres is `nK_{1,n}`.
fn direct(run: &mut Run<'_>, f: &Fans, clique_member: bool) -> Option<Step> {
    let g = run.g;
    let n = run.n;
    let centres: VertexSet = f.centres.iter().collect();
    let idx = |v: usize| f.centres.iter().position(|&c| c == v).expect("centre");
    if clique_member {
        let k = best_clique(g, &centres);
        if k.len() >= n {
            let top = first_n(&k, n);
            let mut map = top.clone();
            for &c in &top {
                map.extend(&f.fans[idx(c)]);
            }
            return Some(Step::Found(GraphName::CliqueWithPendants(n, n), map));
        }
    }
    let s = best_stable(g, &centres);
    if s.len() >= n {
        let mut map = Vec::new();
        for c in first_n(&s, n) {
            map.push(c);
            map.extend(&f.fans[idx(c)]);
        }
        return Some(Step::Found(GraphName::DisjointStars(n, n), map));
    }
    None
}

fn coloring_failure(e: Error) -> Result<Step> {
    match e {
        Error::OrderCapExceeded { .. } | Error::BudgetExhausted(_) => Ok(fail("coloring", e.to_string())),
        e => Err(e),
    }
}

fn hdeg(run: &mut Run<'_>, hi: &[usize]) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let mut clique_in_fan: Option<Vec<usize>> = None;
    let f = gather(run, hi, MONO_CLIQUE_CAP, |_, avail| {
        let st = best_stable(g, avail);
        if st.len() < n && clique_in_fan.is_none() {
            let k = best_clique(g, avail);
            if k.len() >= n {
                clique_in_fan = Some(first_n(&k, n));
            }
        }
        first_n(&st, n)
    });
    if let Some(k) = clique_in_fan {
        run.log("fans", n, "a neighbourhood holds a clique instead of a stable fan");
        return Ok(Step::Found(GraphName::Complete(n), k));
    }
    let k = best_clique(g, &hi.iter().collect());
    if k.len() >= n {
        return Ok(Step::Found(GraphName::Complete(n), first_n(&k, n)));
    }
    let p = private_fans(run, &f);
    if let Some(step) = direct(run, &p, false) {
        return Ok(step);
    }
    let bits = 1 + 2 * n + n * n;
    if bits >= 64 {
        return Ok(fail("coloring", format!("palette of 2^{bits} colors is too large")));
    }
    if f.centres.len() < 2 * n {
        return Ok(fail("fans", format!("{} centres, need {}", f.centres.len(), 2 * n)));
    }
    let e = |u: usize, w: usize| u64::from(g.has_edge(u, w));
    let (c, fans) = (&f.centres, &f.fans);
    let col = ColoredClique::new(c.len(), 1 << bits, |i, k| {
        let mut x = e(c[i], c[k]);
        for j in 0..n {
            x |= e(c[i], fans[k][j]) << (1 + j);
            x |= e(c[k], fans[i][j]) << (1 + n + j);
            for jj in 0..n {
                x |= e(fans[i][j], fans[k][jj]) << (1 + 2 * n + j * n + jj);
            }
        }
        x
    })?;
    let (color, set) = match find_mono_clique(&col, 2 * n) {
        Ok(Some(found)) => found,
        Ok(None) => {
            return Ok(fail(
                "coloring",
                format!("no monochromatic K_{} among {} centres", 2 * n, c.len()),
            ))
        }
        Err(e) => return coloring_failure(e),
    };
    run.log(
        "coloring",
        set.len(),
        format!("monochromatic clique in color {color:#x}"),
    );
    let ids = set.to_vec();
    let v: Vec<usize> = ids.iter().map(|&i| c[i]).collect();
    let fan = |i: usize, j: usize| fans[ids[i]][j];
    let bit = |k: usize| color >> k & 1 == 1;
    let lo = 0..n;
    let hi_ = n..2 * n;
    if bit(0) {
        return Ok(Step::Found(GraphName::Complete(n), v[..n].to_vec()));
    }
    for j in 0..n {
        if bit(1 + 2 * n + j * n + j) {
            return Ok(Step::Found(
                GraphName::Complete(n),
                lo.clone().map(|i| fan(i, j)).collect(),
            ));
        }
    }
    for j in 0..n {
        for jj in 0..n {
            if j != jj && bit(1 + 2 * n + j * n + jj) {
                let map = lo
                    .clone()
                    .map(|i| fan(i, j))
                    .chain(hi_.clone().map(|i| fan(i, jj)))
                    .collect();
                return Ok(Step::Found(GraphName::Biclique(n, n), map));
            }
        }
    }
    for j in 0..n {
        if bit(1 + j) {
            let map = v[..n].iter().copied().chain(hi_.clone().map(|i| fan(i, j))).collect();
            return Ok(Step::Found(GraphName::Biclique(n, n), map));
        }
        if bit(1 + n + j) {
            let map = lo.clone().map(|i| fan(i, j)).chain(v[n..].iter().copied()).collect();
            return Ok(Step::Found(GraphName::Biclique(n, n), map));
        }
    }
    let mut map = Vec::new();
    for i in 0..n {
        map.push(v[i]);
        map.extend((0..n).map(|j| fan(i, j)));
    }
    Ok(Step::Found(GraphName::DisjointStars(n, n), map))
}

fn halpha(run: &mut Run<'_>, kind: ParamKind, hi: &[usize]) -> Result<Step> {
    let g = run.g;
    let n = run.n;
    let width = 3 * n;
    let f = gather(run, hi, 4 * n, |v, avail| {
        let fan: Vec<usize> = if kind == ParamKind::LocalComponents {
            // one vertex per component of N(v) keeps the fan stable
            g.components_within(g.neighbors(v))
                .iter()
                .filter_map(|comp| comp.intersection(avail).first())
                .collect()
        } else {
            best_stable(g, avail).to_vec()
        };
        fan.into_iter().take(width).collect()
    });
    let p = private_fans(run, &f);
    if let Some(step) = direct(run, &p, true) {
        return Ok(step);
    }
    if f.centres.len() < 2 * n {
        return Ok(fail("fans", format!("{} centres, need {}", f.centres.len(), 2 * n)));
    }
    let parts: Vec<VertexSet> = f.fans.iter().map(|fan| fan.iter().collect()).collect();
    let qmax = parts.iter().map(VertexSet::len).min().unwrap_or(0).min(width);
    let mut refined = None;
    for q in (n..=qmax).rev() {
        match multipartite_refine(g, &parts, q) {
            Ok(Some(u)) => {
                refined = Some(u);
                break;
            }
            Ok(None) => {}
            Err(e @ Error::BudgetExhausted(_)) => return Ok(fail("refine", e.to_string())),
            Err(e) => return Err(e),
        }
    }
    let Some(u) = refined else {
        return Ok(fail(
            "refine",
            format!("no pairwise homogeneous subsets of size {n} or more"),
        ));
    };
    let q = u[0].len();
    run.log(
        "refine",
        q,
        format!("{} fans refined to pairwise homogeneous {q}-sets", u.len()),
    );
    for i in 0..u.len() {
        for k in i + 1..u.len() {
            let a = u[i].iter().next().expect("nonempty");
            let b = u[k].iter().next().expect("nonempty");
            if g.has_edge(a, b) {
                debug_assert!(homogeneous(g, &u[i], &u[k]));
                let map = first_n(&u[i], n).into_iter().chain(first_n(&u[k], n)).collect();
                return Ok(Step::Found(GraphName::Biclique(n, n), map));
            }
        }
    }
    let c = &f.centres;
    let fans: Vec<Vec<usize>> = u.iter().map(VertexSet::to_vec).collect();
    let e = |a: usize, b: usize| u64::from(g.has_edge(a, b));
    let col = ColoredClique::new(c.len(), 1 << (1 + 2 * q), |i, k| {
        let mut x = e(c[i], c[k]);
        for j in 0..q {
            x |= e(c[i], fans[k][j]) << (1 + j);
            x |= e(c[k], fans[i][j]) << (1 + q + j);
        }
        x
    })?;
    let (color, set) = match find_mono_clique(&col, 2 * n) {
        Ok(Some(found)) => found,
        Ok(None) => {
            return Ok(fail(
                "coloring",
                format!("no monochromatic K_{} among {} centres", 2 * n, c.len()),
            ))
        }
        Err(e) => return coloring_failure(e),
    };
    run.log(
        "coloring",
        set.len(),
        format!("monochromatic clique in color {color:#x}"),
    );
    let ids = set.to_vec();
    let v: Vec<usize> = ids.iter().map(|&i| c[i]).collect();
    let fan = |i: usize, j: usize| fans[ids[i]][j];
    let bit = |k: usize| color >> k & 1 == 1;
    let forward: Vec<usize> = (0..q).filter(|&j| bit(1 + j)).collect();
    let backward: Vec<usize> = (0..q).filter(|&j| bit(1 + q + j)).collect();
    if !bit(0) {
        if let Some(&j) = forward.first() {
            let map = v[..n].iter().copied().chain((n..2 * n).map(|i| fan(i, j))).collect();
            return Ok(Step::Found(GraphName::Biclique(n, n), map));
        }
        if let Some(&j) = backward.first() {
            let map = (0..n).map(|i| fan(i, j)).chain(v[n..].iter().copied()).collect();
            return Ok(Step::Found(GraphName::Biclique(n, n), map));
        }
        let mut map = Vec::new();
        for i in 0..n {
            map.push(v[i]);
            map.extend((0..n).map(|j| fan(i, j)));
        }
        return Ok(Step::Found(GraphName::DisjointStars(n, n), map));
    }
    if forward.len() >= n {
        let map = v[..n]
            .iter()
            .copied()
            .chain(forward[..n].iter().map(|&j| fan(n, j)))
            .collect();
        return Ok(Step::Found(GraphName::SplitJoin(n, n), map));
    }
    if backward.len() >= n {
        let map = v[1..=n]
            .iter()
            .copied()
            .chain(backward[..n].iter().map(|&j| fan(0, j)))
            .collect();
        return Ok(Step::Found(GraphName::SplitJoin(n, n), map));
    }
    let leaves: Vec<usize> = (0..q)
        .filter(|j| !forward.contains(j) && !backward.contains(j))
        .collect();
    run.log(
        "pigeonhole",
        leaves.len(),
        format!(
            "fan positions outside J ({}) and J' ({})",
            forward.len(),
            backward.len()
        ),
    );
    if leaves.len() < n {
        return Ok(fail(
            "pigeonhole",
            format!("{} private fan positions, need {n}", leaves.len()),
        ));
    }
    let mut map = v[..n].to_vec();
    for i in 0..n {
        map.extend(leaves[..n].iter().map(|&j| fan(i, j)));
    }
    Ok(Step::Found(GraphName::CliqueWithPendants(n, n), map))
}

fn hadh(run: &mut Run<'_>, hi: &[usize]) -> Result<Step> {
    let g = run.g;
    let hot: VertexSet = hi.iter().collect();
    let mut f = Fans {
        centres: Vec::new(),
        fans: Vec::new(),
    };
    for &v in hi.iter().take(MONO_CLIQUE_CAP) {
        // one neighbour per branch at v: distinct branches meet only in v
        let rest = g.vertices().difference(&VertexSet::singleton(v));
        let fan: Vec<usize> = g
            .components_within(&rest)
            .iter()
            .filter_map(|comp| comp.intersection(g.neighbors(v)).difference(&hot).first())
            .collect();
        f.centres.push(v);
        f.fans.push(fan);
    }
    run.log("fans", f.centres.len(), "one neighbour per branch of each centre");
    let p = private_fans(run, &f);
    if let Some(step) = direct(run, &p, true) {
        return Ok(step);
    }
    Ok(fail(
        "ramsey",
        format!(
            "{} centres with private fans have neither a clique nor a stable set of {}",
            p.centres.len(),
            run.n
        ),
    ))
}
