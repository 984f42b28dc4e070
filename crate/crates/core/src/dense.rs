//! Exact searches over graphs of at most 64 vertices held as one adjacency
//! word per vertex. Callers relabel a vertex subset into this form with
//! [`local_rows`] and map results back through the returned label table.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let t = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(t)
        }
    })
}

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

/// Rows of `G[set]` relabeled `0..|set|` in ascending order of `set`.
pub(crate) fn local_rows(g: &Graph, set: &VertexSet, cap: usize) -> Result<(Vec<u64>, Vec<usize>)> {
    let map = set.to_vec();
    let cap = cap.min(64);
    if map.len() > cap {
        return Err(Error::OrderCapExceeded { order: map.len(), cap });
    }
    let mut index = vec![usize::MAX; g.order()];
    for (i, &v) in map.iter().enumerate() {
        index[v] = i;
    }
    let rows = map
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .intersection(set)
                .iter()
                .fold(0u64, |m, u| m | bit(index[u]))
        })
        .collect();
    Ok((rows, map))
}

pub(crate) fn lift(mask: u64, map: &[usize]) -> VertexSet {
    bits(mask).map(|i| map[i]).collect()
}

/// Maximum independent set inside `cand`.
pub(crate) fn max_independent_set(rows: &[u64], cand: u64) -> u64 {
    let mut best = 0u64;
    mis_branch(rows, cand, 0, &mut best);
    best
}

fn mis_branch(rows: &[u64], cand: u64, cur: u64, best: &mut u64) {
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return;
    }
    if (cur | cand).count_ones() <= best.count_ones() {
        return;
    }
    let mut min_v = usize::MAX;
    let mut min_d = u32::MAX;
    let mut max_v = usize::MAX;
    let mut max_d = 0;
    for v in bits(cand) {
        let d = (rows[v] & cand).count_ones();
        if d < min_d {
            min_d = d;
            min_v = v;
        }
        if d > max_d || max_v == usize::MAX {
            max_d = d;
            max_v = v;
        }
    }
    // some maximum stable set contains any vertex of degree at most one
    if min_d <= 1 {
        mis_branch(rows, cand & !(rows[min_v] | bit(min_v)), cur | bit(min_v), best);
        return;
    }
    mis_branch(rows, cand & !(rows[max_v] | bit(max_v)), cur | bit(max_v), best);
    mis_branch(rows, cand & !bit(max_v), cur, best);
}

/// Complement rows restricted to the first `n` labels.
pub(crate) fn complement_rows(rows: &[u64]) -> Vec<u64> {
    let all = full(rows.len());
    rows.iter().enumerate().map(|(v, &r)| !r & all & !bit(v)).collect()
}

pub(crate) fn max_clique(rows: &[u64], cand: u64) -> u64 {
    max_independent_set(&complement_rows(rows), cand)
}

/// First clique of exactly `q` vertices inside `cand`, ascending search.
pub(crate) fn find_clique(rows: &[u64], cand: u64, q: usize) -> Option<u64> {
    fn go(rows: &[u64], cand: u64, cur: u64, left: usize) -> Option<u64> {
        if left == 0 {
            return Some(cur);
        }
        if (cand.count_ones() as usize) < left {
            return None;
        }
        for v in bits(cand) {
            let rest = cand & rows[v] & !full(v + 1);
            if let Some(found) = go(rows, rest, cur | bit(v), left - 1) {
                return Some(found);
            }
        }
        None
    }
    go(rows, cand, 0, q)
}

/// Minimum dominating set of the whole graph (empty for the empty graph).
pub(crate) fn min_dominating_set(rows: &[u64]) -> u64 {
    let n = rows.len();
    let closed: Vec<u64> = rows.iter().enumerate().map(|(v, &r)| r | bit(v)).collect();
    for k in 0..=n {
        if let Some(d) = dominate(&closed, full(n), 0, k) {
            return d;
        }
    }
    unreachable!("the full vertex set dominates")
}

fn dominate(closed: &[u64], undominated: u64, chosen: u64, left: usize) -> Option<u64> {
    if undominated == 0 {
        return Some(chosen);
    }
    if left == 0 {
        return None;
    }
    // the undominated vertex with the fewest possible dominators
    let u = bits(undominated).min_by_key(|&u| closed[u].count_ones()).unwrap_or(0);
    for w in bits(closed[u]) {
        if let Some(d) = dominate(closed, undominated & !closed[w], chosen | bit(w), left - 1) {
            return Some(d);
        }
    }
    None
}

pub(crate) fn is_connected_mask(rows: &[u64], set: u64) -> bool {
    if set == 0 {
        return false;
    }
    let mut seen = bit(set.trailing_zeros() as usize);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= rows[v] & set;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == set
}

/// Minimum connected dominating set of a connected graph, searched by
/// increasing size over connected vertex subsets in ascending order.
pub(crate) fn min_connected_dominating_set(rows: &[u64]) -> u64 {
    let n = rows.len();
    if n == 0 {
        return 0;
    }
    let closed: Vec<u64> = rows.iter().enumerate().map(|(v, &r)| r | bit(v)).collect();
    for k in 1..=n {
        for v in 0..n {
            let ext = rows[v] & !full(v + 1);
            if let Some(d) = grow_connected(rows, &closed, bit(v), ext, v, k - 1, full(n)) {
                return d;
            }
        }
    }
    full(n)
}

/// Enumerates connected sets with minimum vertex `root` (extension-set walk).
fn grow_connected(rows: &[u64], closed: &[u64], sub: u64, ext: u64, root: usize, left: usize, all: u64) -> Option<u64> {
    if left == 0 {
        let dominated = bits(sub).fold(0, |m, v| m | closed[v]);
        return (dominated == all).then_some(sub);
    }
    let mut ext = ext;
    while ext != 0 {
        let w = ext.trailing_zeros() as usize;
        ext &= ext - 1;
        let nbhd = bits(sub).fold(0, |m, v| m | closed[v]);
        let fresh = rows[w] & !nbhd & !full(root + 1) & !sub;
        if let Some(d) = grow_connected(rows, closed, sub | bit(w), ext | fresh, root, left - 1, all) {
            return Some(d);
        }
    }
    None
}

/// Every connected dominating set, as masks. Only for tiny graphs.
pub(crate) fn all_connected_dominating_sets(rows: &[u64]) -> Vec<u64> {
    let n = rows.len();
    let closed: Vec<u64> = rows.iter().enumerate().map(|(v, &r)| r | bit(v)).collect();
    (1..=full(n))
        .filter(|&s| bits(s).fold(0, |m, v| m | closed[v]) == full(n) && is_connected_mask(rows, s))
        .collect()
}

/// Maximum induced matching, returned as local vertex pairs.
pub(crate) fn max_induced_matching(rows: &[u64]) -> Vec<(usize, usize)> {
    let mut best = Vec::new();
    let mut cur = Vec::new();
    im_branch(rows, full(rows.len()), &mut cur, &mut best);
    best
}

fn im_branch(rows: &[u64], avail: u64, cur: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
    // isolated vertices of G[avail] can never be matched
    let live = bits(avail).filter(|&v| rows[v] & avail != 0).fold(0, |m, v| m | bit(v));
    if cur.len() + live.count_ones() as usize / 2 <= best.len() {
        if live == 0 && cur.len() > best.len() {
            *best = cur.clone();
        }
        return;
    }
    if live == 0 {
        *best = cur.clone();
        return;
    }
    let v = bits(live).min_by_key(|&v| (rows[v] & live).count_ones()).unwrap_or(0);
    for w in bits(rows[v] & live) {
        let blocked = rows[v] | rows[w] | bit(v) | bit(w);
        cur.push((v.min(w), v.max(w)));
        im_branch(rows, live & !blocked, cur, best);
        cur.pop();
    }
    im_branch(rows, live & !bit(v), cur, best);
}

/// A longest induced path, as a vertex sequence.
pub(crate) fn longest_induced_path(rows: &[u64]) -> Vec<usize> {
    let n = rows.len();
    let mut best = Vec::new();
    let mut path = Vec::with_capacity(n);
    for start in 0..n {
        path.push(start);
        extend_path(rows, &mut path, bit(start), &mut best);
        path.pop();
        if best.len() == n {
            break;
        }
    }
    best
}

fn extend_path(rows: &[u64], path: &mut Vec<usize>, blocked: u64, best: &mut Vec<usize>) {
    if path.len() > best.len() {
        *best = path.clone();
    }
    let last = *path.last().unwrap_or(&0);
    // `blocked` holds the closed neighbourhoods of every vertex but the last
    let next = rows[last] & !blocked;
    let new_blocked = blocked | rows[last] | bit(last);
    for w in bits(next) {
        path.push(w);
        extend_path(rows, path, new_blocked, best);
        path.pop();
    }
}
