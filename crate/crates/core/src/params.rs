//! Vertex parameters, h-index and exact graph parameters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dense;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Default vertex cap for the exponential solvers (α, γ, γ_c, μ′).
pub const DEFAULT_CAP: usize = 24;

/// Neighbourhoods are searched on the word-sized fast path.
const NEIGHBORHOOD_CAP: usize = 64;

/// The four vertex parameters of the chain `deg >= α(N) >= c(N) >= adh`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ParamKind {
    #[serde(rename = "deg")]
    Degree,
    #[serde(rename = "alpha")]
    LocalIndependence,
    #[serde(rename = "c")]
    LocalComponents,
    #[serde(rename = "adh")]
    Adhesion,
}

impl ParamKind {
    pub const ALL: [ParamKind; 4] = [
        ParamKind::Degree,
        ParamKind::LocalIndependence,
        ParamKind::LocalComponents,
        ParamKind::Adhesion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ParamKind::Degree => "deg",
            ParamKind::LocalIndependence => "alpha",
            ParamKind::LocalComponents => "c",
            ParamKind::Adhesion => "adh",
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ParamKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "deg" | "degree" => Ok(ParamKind::Degree),
            "alpha" | "local-independence" => Ok(ParamKind::LocalIndependence),
            "c" | "local-components" => Ok(ParamKind::LocalComponents),
            "adh" | "adhesion" => Ok(ParamKind::Adhesion),
            other => Err(Error::BadParameter(format!("unknown parameter `{other}`"))),
        }
    }
}

/// Maximum stable set inside `set`, exact.
pub fn stable_set_within(g: &Graph, set: &VertexSet, cap: usize) -> Result<VertexSet> {
    let (rows, map) = dense::local_rows(g, set, cap)?;
    let s = dense::max_independent_set(&rows, dense::full(rows.len()));
    Ok(dense::lift(s, &map))
}

/// Maximum clique inside `set`, exact.
pub fn clique_within(g: &Graph, set: &VertexSet, cap: usize) -> Result<VertexSet> {
    let (rows, map) = dense::local_rows(g, set, cap)?;
    let s = dense::max_clique(&rows, dense::full(rows.len()));
    Ok(dense::lift(s, &map))
}

/// `adh(v) = c(G-v) - c(G) + 1`, applied verbatim to any graph.
fn adhesion(g: &Graph, v: usize) -> usize {
    let mut rest = g.vertices();
    rest.remove(v);
    g.component_count_within(&rest) + 1 - g.component_count()
}

/// One vertex parameter. α(∅) = c(∅) = 0; an isolated vertex has adhesion 0.
pub fn vertex_param(g: &Graph, v: usize, kind: ParamKind) -> Result<usize> {
    g.check_vertex(v)?;
    let nbrs = g.neighbors(v);
    Ok(match kind {
        ParamKind::Degree => nbrs.len(),
        ParamKind::LocalIndependence => stable_set_within(g, nbrs, NEIGHBORHOOD_CAP)?.len(),
        ParamKind::LocalComponents => g.component_count_within(nbrs),
        ParamKind::Adhesion => adhesion(g, v),
    })
}

/// The parameter for every vertex, indexed by vertex.
pub fn vertex_params(g: &Graph, kind: ParamKind) -> Result<Vec<usize>> {
    (0..g.order()).map(|v| vertex_param(g, v, kind)).collect()
}

/// `|{v : p(v) >= threshold}|`.
pub fn nontrivial_count(g: &Graph, kind: ParamKind, threshold: usize) -> Result<usize> {
    Ok(vertex_params(g, kind)?.iter().filter(|&&p| p >= threshold).count())
}

/// The vertices counted by [`nontrivial_count`].
pub fn nontrivial_vertices(g: &Graph, kind: ParamKind, threshold: usize) -> Result<VertexSet> {
    Ok(vertex_params(g, kind)?
        .iter()
        .enumerate()
        .filter(|&(_, &p)| p >= threshold)
        .map(|(v, _)| v)
        .collect())
}

/// Largest `k` such that at least `k` values are `>= k`, or 0.
pub fn h_index_of(values: &[usize]) -> usize {
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    sorted.iter().enumerate().take_while(|&(i, &p)| p > i).count()
}

pub fn h_index(g: &Graph, kind: ParamKind) -> Result<usize> {
    Ok(h_index_of(&vertex_params(g, kind)?))
}

/// α(G) with one maximum stable set.
pub fn independence_number(g: &Graph) -> Result<(usize, VertexSet)> {
    independence_number_capped(g, DEFAULT_CAP)
}

pub fn independence_number_capped(g: &Graph, cap: usize) -> Result<(usize, VertexSet)> {
    let s = stable_set_within(g, &g.vertices(), cap)?;
    Ok((s.len(), s))
}

/// ω(G) with one maximum clique.
pub fn clique_number(g: &Graph) -> Result<(usize, VertexSet)> {
    let s = clique_within(g, &g.vertices(), NEIGHBORHOOD_CAP)?;
    Ok((s.len(), s))
}

/// γ(G), or γ_c(G) when `connected` is set, with a minimum certificate.
pub fn domination(g: &Graph, connected: bool) -> Result<(usize, VertexSet)> {
    domination_capped(g, connected, DEFAULT_CAP)
}

pub fn domination_capped(g: &Graph, connected: bool, cap: usize) -> Result<(usize, VertexSet)> {
    if connected && !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let (rows, map) = dense::local_rows(g, &g.vertices(), cap)?;
    let d = if connected {
        dense::min_connected_dominating_set(&rows)
    } else {
        dense::min_dominating_set(&rows)
    };
    let cert = dense::lift(d, &map);
    debug_assert!(is_dominating(g, &cert));
    Ok((cert.len(), cert))
}

pub fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    let covered = set.iter().fold(set.clone(), |acc, v| acc.union(g.neighbors(v)));
    covered.len() == g.order()
}

/// Every connected dominating set of a small connected graph.
pub fn all_connected_dominating_sets(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let (rows, map) = dense::local_rows(g, &g.vertices(), cap.min(20))?;
    Ok(dense::all_connected_dominating_sets(&rows)
        .into_iter()
        .map(|m| dense::lift(m, &map))
        .collect())
}

/// True when the edges are pairwise vertex-disjoint and no other edge of `g`
/// joins two of their endpoints.
pub fn is_induced_matching(g: &Graph, edges: &[(usize, usize)]) -> bool {
    let mut ends = VertexSet::new();
    for &(u, v) in edges {
        if u >= g.order() || v >= g.order() || !g.has_edge(u, v) {
            return false;
        }
        if !ends.insert(u) || !ends.insert(v) {
            return false;
        }
    }
    let ok = ends.iter().all(|x| g.neighbors(x).intersection_len(&ends) == 1);
    ok
}

/// μ′(G) with a witness matching, verified before return.
pub fn induced_matching_number(g: &Graph) -> Result<(usize, Vec<(usize, usize)>)> {
    induced_matching_number_capped(g, DEFAULT_CAP)
}

pub fn induced_matching_number_capped(g: &Graph, cap: usize) -> Result<(usize, Vec<(usize, usize)>)> {
    let (rows, map) = dense::local_rows(g, &g.vertices(), cap)?;
    let mut edges: Vec<(usize, usize)> = dense::max_induced_matching(&rows)
        .into_iter()
        .map(|(a, b)| (map[a], map[b]))
        .collect();
    edges.sort_unstable();
    assert!(
        is_induced_matching(g, &edges),
        "induced matching witness failed verification"
    );
    Ok((edges.len(), edges))
}

/// Articulation points by an iterative depth-first low-link search.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let n = g.order();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut cut = VertexSet::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if let Some(&w) = nbrs[v].get(*next) {
                *next += 1;
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if parent != root && low[v] >= disc[parent] {
                        cut.insert(parent);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut.insert(root);
        }
    }
    cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GraphName;
    use crate::graph::build_graph;

    fn g(name: &str) -> Graph {
        name.parse::<GraphName>().unwrap().build().unwrap()
    }

    #[test]
    fn spec_examples() {
        let k5 = g("K5");
        assert_eq!(vertex_param(&k5, 2, ParamKind::Adhesion).unwrap(), 1);
        let star = g("K1,4");
        for kind in ParamKind::ALL {
            assert_eq!(vertex_param(&star, 0, kind).unwrap(), 4);
        }
        let ck3 = g("CK3");
        for v in 0..6 {
            assert_eq!(vertex_param(&ck3, v, ParamKind::LocalIndependence).unwrap(), 2);
            assert_eq!(vertex_param(&ck3, v, ParamKind::LocalComponents).unwrap(), 2);
        }
        assert_eq!(nontrivial_count(&g("K1,4*"), ParamKind::Degree, 2).unwrap(), 5);
        assert_eq!(nontrivial_count(&g("CK4"), ParamKind::LocalIndependence, 2).unwrap(), 8);
        for kind in ParamKind::ALL {
            assert_eq!(nontrivial_count(&g("E7"), kind, 1).unwrap(), 0);
        }
        assert!(matches!(
            vertex_param(&k5, 5, ParamKind::Degree),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn degenerate_conventions() {
        let e1 = g("E1");
        for kind in ParamKind::ALL {
            assert_eq!(vertex_param(&e1, 0, kind).unwrap(), 0);
        }
        let e3 = g("E3");
        assert_eq!(vertex_param(&e3, 1, ParamKind::Adhesion).unwrap(), 0);
        assert_eq!(h_index(&e3, ParamKind::Degree).unwrap(), 0);
    }

    #[test]
    fn h_index_examples() {
        for n in 2..7 {
            assert_eq!(h_index(&g(&format!("K{n}")), ParamKind::Degree).unwrap(), n - 1);
        }
        assert_eq!(h_index(&g("K1,9"), ParamKind::Degree).unwrap(), 1);
        assert_eq!(h_index(&g("K4,4"), ParamKind::Degree).unwrap(), 4);
        assert_eq!(h_index_of(&[]), 0);
        assert_eq!(h_index_of(&[5, 5, 1]), 2);
    }

    #[test]
    fn exact_parameters() {
        assert_eq!(independence_number(&g("E6")).unwrap().0, 6);
        assert_eq!(independence_number(&g("K6")).unwrap().0, 1);
        assert_eq!(independence_number(&g("C5")).unwrap().0, 2);
        assert_eq!(domination(&g("K1,5"), false).unwrap(), (1, VertexSet::singleton(0)));
        assert_eq!(domination(&g("P4"), false).unwrap().0, 2);
        assert_eq!(
            domination(&g("P4"), true).unwrap(),
            (2, [1usize, 2].into_iter().collect())
        );
        assert_eq!(domination(&g("2P3"), true), Err(Error::GraphDisconnected));
        assert_eq!(induced_matching_number(&g("3K1,1")).unwrap().0, 3);
        assert_eq!(induced_matching_number(&g("P4")).unwrap().0, 1);
        assert!(matches!(
            independence_number(&Graph::empty(30)),
            Err(Error::OrderCapExceeded { order: 30, cap: 24 })
        ));
    }

    #[test]
    fn cut_vertex_examples() {
        assert_eq!(cut_vertices(&g("P5")).to_vec(), [1, 2, 3]);
        assert!(cut_vertices(&g("K6")).is_empty());
        assert_eq!(cut_vertices(&g("K1,3*")).to_vec(), [0, 1, 2, 3]);
        let bowtie = build_graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(cut_vertices(&bowtie).to_vec(), [2]);
    }
}
