//! Immutable simple undirected graphs over dense vertex labels `0..n`.
//!
//! Adjacency rows are bit-packed [`VertexSet`]s. Sets over at most 64
//! vertices live in a single inline machine word; larger sets spill to
//! additional words (still inline up to 128 vertices, heap beyond).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

type Words = SmallVec<[u64; 2]>;

/// A finite set of vertex labels with ascending iteration order.
///
/// The word vector never carries trailing zero words, so structural
/// equality coincides with set equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: Words,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// The full range `0..n`.
    pub fn full(n: usize) -> Self {
        let mut words: Words = SmallVec::from_elem(u64::MAX, n / 64);
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        Self { words }
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    /// Builds a set from the low 64 labels encoded as a bit mask.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = Self::new();
        if mask != 0 {
            s.words.push(mask);
        }
        s
    }

    /// The set as a single-word mask, if every member is below 64.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.words.get(v / 64).is_some_and(|w| w & (1u64 << (v % 64)) != 0)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (i, b) = (v / 64, 1u64 << (v % 64));
        if self.words.len() <= i {
            self.words.resize(i + 1, 0);
        }
        let fresh = self.words[i] & b == 0;
        self.words[i] |= b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let i = v / 64;
        if i >= self.words.len() {
            return false;
        }
        let b = 1u64 << (v % 64);
        let present = self.words[i] & b != 0;
        self.words[i] &= !b;
        self.trim();
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Largest member plus one, or zero for the empty set.
    pub fn bound(&self) -> usize {
        match self.words.last() {
            None => 0,
            Some(w) => (self.words.len() - 1) * 64 + 64 - w.leading_zeros() as usize,
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, o) in words.iter_mut().zip(short.words.iter()) {
            *w |= o;
        }
        Self { words }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut words: Words = self.words.iter().zip(other.words.iter()).map(|(a, b)| a & b).collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words }
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (w, o) in s.words.iter_mut().zip(other.words.iter()) {
            *w &= !o;
        }
        s.trim();
        s
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(other.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.len() <= other.words.len() && self.words.iter().zip(other.words.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.intersection_len(other) == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + t)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Accumulates edges and validates them before producing a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(); order],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        Self { adj: g.adj.clone() }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Appends an isolated vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(VertexSet::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let order = self.adj.len();
        for w in [u, v] {
            if w >= order {
                return Err(Error::EndpointOutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(self)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> &mut Self {
        if u < self.adj.len() && v < self.adj.len() {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
        self
    }

    pub fn build(self) -> Graph {
        let g = Graph { adj: self.adj };
        debug_assert!(g.check_invariants());
        g
    }
}

/// Builds a graph from an edge list; duplicate pairs collapse.
pub fn build_graph(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut b = GraphBuilder::new(order);
    for &(u, v) in edges {
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

impl Graph {
    /// The graph with `order` vertices and no edges.
    pub fn empty(order: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(); order],
        }
    }

    /// Builds a graph from single-word adjacency masks. Rows must be symmetric.
    pub fn from_masks(rows: &[u64]) -> Self {
        let g = Self {
            adj: rows.iter().map(|&m| VertexSet::from_mask(m)).collect(),
        };
        debug_assert!(g.check_invariants());
        g
    }

    /// Single-word adjacency masks, if the order fits a machine word.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.order() > 64 {
            return None;
        }
        Some(self.adj.iter().map(|s| s.as_mask().unwrap_or(0)).collect())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Symmetry, irreflexivity and range of every adjacency row.
    pub fn check_invariants(&self) -> bool {
        let n = self.order();
        self.adj
            .iter()
            .enumerate()
            .all(|(v, row)| row.bound() <= n && !row.contains(v) && row.iter().all(|u| self.adj[u].contains(v)))
    }

    /// The subgraph induced by `set`, relabeled `0..|set|` in ascending
    /// order, together with the map from new labels to old ones.
    pub fn induced(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if set.bound() > self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: set.bound() - 1,
                order: self.order(),
            });
        }
        let map = set.to_vec();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| self.adj[v].intersection(set).iter().map(|u| index[u]).collect())
            .collect();
        Ok((Graph { adj }, map))
    }

    /// Graph with vertex `v` deleted; remaining labels are compacted.
    pub fn delete_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        self.check_vertex(v)?;
        let mut keep = self.vertices();
        keep.remove(v);
        self.induced(&keep)
    }

    /// Connected components of `G[within]`, ordered by minimum vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut blocks = Vec::new();
        for start in within.iter() {
            if seen.contains(start) {
                continue;
            }
            let mut block = VertexSet::singleton(start);
            seen.insert(start);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].intersection(within).iter() {
                    if seen.insert(w) {
                        block.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            blocks.push(block);
        }
        blocks
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Number of connected components `c(S)` of `G[S]`.
    pub fn component_count_within(&self, within: &VertexSet) -> usize {
        self.components_within(within).len()
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.order() > 0 && self.component_count() == 1
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|v| {
                let mut row = VertexSet::full(n).difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// Relabels by `perm`, where `perm[new] = old`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        let mut inv = vec![0; n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let adj = perm
            .iter()
            .map(|&old| self.adj[old].iter().map(|u| inv[u]).collect())
            .collect();
        Graph { adj }
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// The join `G1 + G2`: both graphs plus every cross pair. `G2` is shifted by `|G1|`.
pub fn join_graphs(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let n = n1 + g2.order();
    let mut adj = Vec::with_capacity(n);
    let right: VertexSet = (n1..n).collect();
    let left = VertexSet::full(n1);
    for row in &g1.adj {
        adj.push(row.union(&right));
    }
    for row in &g2.adj {
        adj.push(row.iter().map(|u| u + n1).collect::<VertexSet>().union(&left));
    }
    Graph { adj }
}

/// Vertex-disjoint union; `g2` is shifted by `|g1|`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut adj = g1.adj.clone();
    adj.extend(g2.adj.iter().map(|row| row.iter().map(|u| u + n1).collect()));
    Graph { adj }
}

/// `kG`: `k` disjoint copies, copy `i` occupying labels `i*|G| .. (i+1)*|G|`.
pub fn disjoint_copies(k: usize, g: &Graph) -> Graph {
    (0..k).fold(Graph::empty(0), |acc, _| disjoint_union(&acc, g))
}

pub fn complement_graph(g: &Graph) -> Graph {
    g.complement()
}
