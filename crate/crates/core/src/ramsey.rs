//! Constructive subroutines: private-neighbour induced matchings, mono
//! cliques in edge colorings, multipartite homogeneous refinement, the
//! path/clique/star trichotomy and pruning.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::dense::{self, bit};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::iso::Embedding;
use crate::params::{self, DEFAULT_CAP};

/// The bipartite graph `G[X,Y]`: only host edges between `x` and `y` count.
#[derive(Debug, Clone)]
pub struct BipartiteView<'a> {
    pub host: &'a Graph,
    pub x: VertexSet,
    pub y: VertexSet,
}

impl<'a> BipartiteView<'a> {
    pub fn new(host: &'a Graph, x: VertexSet, y: VertexSet) -> Result<Self> {
        for v in x.iter().chain(y.iter()) {
            host.check_vertex(v)?;
        }
        if !x.is_disjoint(&y) {
            return Err(Error::BadParameter("bipartite view sides must be disjoint".into()));
        }
        Ok(Self { host, x, y })
    }

    pub fn x_neighbors(&self, y: usize) -> VertexSet {
        self.host.neighbors(y).intersection(&self.x)
    }

    pub fn y_neighbors(&self, x: usize) -> VertexSet {
        self.host.neighbors(x).intersection(&self.y)
    }

    /// Pairs `(x_i, y_i)` with `x_i ~ y_j` exactly when `i == j`.
    pub fn is_induced_matching(&self, pairs: &[(usize, usize)]) -> bool {
        let xs: VertexSet = pairs.iter().map(|p| p.0).collect();
        let ys: VertexSet = pairs.iter().map(|p| p.1).collect();
        xs.len() == pairs.len()
            && ys.len() == pairs.len()
            && xs.is_subset(&self.x)
            && ys.is_subset(&self.y)
            && pairs.iter().enumerate().all(|(i, &(x, _))| {
                pairs
                    .iter()
                    .enumerate()
                    .all(|(j, &(_, y))| self.host.has_edge(x, y) == (i == j))
            })
    }
}

/// One private-neighbour pair per member of a minimal dominating subset
/// `Y'` of `Y`, ordered by `y`. `Y'` is obtained from the vertices of `Y`
/// with a neighbour in `X` by discarding redundant ones in ascending order.
/// Vertices of `X` without a neighbour in `Y` are ignored.
pub fn private_neighbor_pairs(view: &BipartiteView<'_>) -> Vec<(usize, usize)> {
    let order = view.host.order();
    let mut cover = vec![0usize; order];
    let mut keep: Vec<usize> = Vec::new();
    for y in view.y.iter() {
        let nx = view.x_neighbors(y);
        if nx.is_empty() {
            continue;
        }
        for x in nx.iter() {
            cover[x] += 1;
        }
        keep.push(y);
    }
    let mut minimal = Vec::new();
    for y in keep {
        let nx = view.x_neighbors(y);
        if nx.iter().all(|x| cover[x] >= 2) {
            for x in nx.iter() {
                cover[x] -= 1;
            }
        } else {
            minimal.push(y);
        }
    }
    minimal
        .into_iter()
        .map(|y| {
            let x = view
                .x_neighbors(y)
                .iter()
                .find(|&x| cover[x] == 1)
                .expect("minimal dominating members have private neighbours");
            (x, y)
        })
        .collect()
}

/// `p` matched pairs under `δ(X) >= 1`, `Δ(Y) <= n`, `|X| >= n(p-1)+1`.
pub fn extract_induced_matching(view: &BipartiteView<'_>, n: usize, p: usize) -> Result<Vec<(usize, usize)>> {
    if let Some(x) = view.x.iter().find(|&x| view.y_neighbors(x).is_empty()) {
        return Err(Error::HypothesisViolated(format!(
            "min degree over X is at least 1: vertex {x} has no neighbour in Y"
        )));
    }
    if let Some(y) = view.y.iter().find(|&y| view.x_neighbors(y).len() > n) {
        return Err(Error::HypothesisViolated(format!(
            "max degree over Y is at most {n}: vertex {y} has {} neighbours in X",
            view.x_neighbors(y).len()
        )));
    }
    let need = n * p.saturating_sub(1) + 1;
    if view.x.len() < need {
        return Err(Error::HypothesisViolated(format!(
            "|X| >= n(p-1)+1 = {need}: |X| = {}",
            view.x.len()
        )));
    }
    let mut pairs = private_neighbor_pairs(view);
    assert!(pairs.len() >= p, "a minimal dominating set has at least p members");
    pairs.truncate(p);
    assert!(
        view.is_induced_matching(&pairs),
        "private-neighbour pairs must be induced"
    );
    Ok(pairs)
}

/// The tight instance: `p-1` disjoint stars `K_{1,n}` with centres in `Y`.
/// Star `i` has centre `i*(n+1)` followed by its `n` leaves.
pub fn lemma_tight_instance(n: usize, p: usize) -> (Graph, VertexSet, VertexSet) {
    let stars = p.saturating_sub(1);
    let mut b = GraphBuilder::new(stars * (n + 1));
    let (mut x, mut y) = (VertexSet::new(), VertexSet::new());
    for i in 0..stars {
        let c = i * (n + 1);
        y.insert(c);
        for j in 1..=n {
            b.add_edge(c, c + j).expect("in range");
            x.insert(c + j);
        }
    }
    (b.build(), x, y)
}

/// The tight instance plus one new `y` with a single pendant in `X`.
pub fn lemma_tight_augmented(n: usize, p: usize) -> (Graph, VertexSet, VertexSet) {
    let (g, mut x, mut y) = lemma_tight_instance(n, p);
    let mut b = GraphBuilder::from_graph(&g);
    let ny = b.add_vertex();
    let nx = b.add_vertex();
    b.add_edge(ny, nx).expect("fresh vertices");
    x.insert(nx);
    y.insert(ny);
    (b.build(), x, y)
}

/// An edge coloring of `K_order` with colors `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColoredClique {
    pub order: usize,
    pub num_colors: u64,
    /// Pair `(i, j)`, `i < j`, lives at `j*(j-1)/2 + i`.
    pub colors: Vec<u64>,
}

impl ColoredClique {
    pub fn new(order: usize, num_colors: u64, color: impl Fn(usize, usize) -> u64) -> Result<Self> {
        if num_colors == 0 {
            return Err(Error::BadParameter("an edge coloring needs at least one color".into()));
        }
        let mut colors = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for j in 1..order {
            for i in 0..j {
                let c = color(i, j);
                if c >= num_colors {
                    return Err(Error::BadParameter(format!("color {c} of pair ({i},{j}) out of range")));
                }
                colors.push(c);
            }
        }
        Ok(Self {
            order,
            num_colors,
            colors,
        })
    }

    pub fn color(&self, i: usize, j: usize) -> u64 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.colors[j * (j - 1) / 2 + i]
    }

    pub fn is_monochromatic(&self, set: &VertexSet, color: u64) -> bool {
        let v = set.to_vec();
        v.iter()
            .enumerate()
            .all(|(a, &i)| v[a + 1..].iter().all(|&j| self.color(i, j) == color))
    }
}

/// The pentagon in color 0 and the pentagram in color 1 on `K_5`.
pub fn pentagon_coloring() -> ColoredClique {
    ColoredClique::new(5, 2, |i, j| u64::from((j - i) % 5 != 1 && (j - i) % 5 != 4)).expect("valid")
}

/// The exhaustive fallback runs on the word-sized clique search.
pub const MONO_CLIQUE_CAP: usize = 64;

/// A monochromatic `q`-clique: first the majority-split construction, then
/// an exhaustive search per color. `None` only after the exhaustive search.
pub fn find_mono_clique(c: &ColoredClique, q: usize) -> Result<Option<(u64, VertexSet)>> {
    if q > c.order {
        return Ok(None);
    }
    if q <= 1 {
        return Ok(Some((0, (0..q).collect())));
    }
    if let Some(found) = majority_split(c, q) {
        debug_assert!(c.is_monochromatic(&found.1, found.0));
        return Ok(Some(found));
    }
    if c.order > MONO_CLIQUE_CAP {
        return Err(Error::OrderCapExceeded {
            order: c.order,
            cap: MONO_CLIQUE_CAP,
        });
    }
    let mut present = c.colors.clone();
    present.sort_unstable();
    present.dedup();
    for color in present {
        let rows: Vec<u64> = (0..c.order)
            .map(|i| {
                (0..c.order)
                    .filter(|&j| j != i && c.color(i, j) == color)
                    .fold(0u64, |m, j| m | bit(j))
            })
            .collect();
        if let Some(m) = dense::find_clique(&rows, dense::full(c.order), q) {
            let set: VertexSet = dense::bits(m).collect();
            debug_assert!(c.is_monochromatic(&set, color));
            return Ok(Some((color, set)));
        }
    }
    Ok(None)
}

/// Picks `v_1, v_2, ...`, each time keeping the largest color class of the
/// remaining vertices towards the picked one. Pairs `(v_a, v_b)`, `a < b`,
/// have the color recorded at `v_a`.
fn majority_split(c: &ColoredClique, q: usize) -> Option<(u64, VertexSet)> {
    let mut rest: Vec<usize> = (0..c.order).collect();
    let mut picked: Vec<(usize, u64)> = Vec::new();
    while let Some((&v, tail)) = rest.split_first() {
        let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for &u in tail {
            classes.entry(c.color(v, u)).or_default().push(u);
        }
        // ties go to the smallest color id
        let (color, largest) = classes
            .into_iter()
            .rev()
            .max_by_key(|(_, cl)| cl.len())
            .unwrap_or((0, Vec::new()));
        picked.push((v, color));
        rest = largest;
    }
    let (last, _) = *picked.last()?;
    let mut colors: Vec<u64> = picked.iter().map(|p| p.1).collect();
    colors.sort_unstable();
    colors.dedup();
    for color in colors {
        let mut set: Vec<usize> = picked[..picked.len() - 1]
            .iter()
            .filter(|&&(_, col)| col == color)
            .map(|&(v, _)| v)
            .collect();
        set.push(last);
        if set.len() >= q {
            set.sort_unstable();
            set.truncate(q);
            return Some((color, set.into_iter().collect()));
        }
    }
    None
}

/// Node budget of the exhaustive multipartite search.
pub const REFINE_BUDGET: u64 = 5_000_000;

/// Pairwise homogeneity: `a` complete or anticomplete to `b`.
pub fn homogeneous(host: &Graph, a: &VertexSet, b: &VertexSet) -> bool {
    let counts: Vec<usize> = a.iter().map(|v| host.neighbors(v).intersection_len(b)).collect();
    counts.iter().all(|&k| k == 0) || counts.iter().all(|&k| k == b.len())
}

/// `q`-subsets `U_i` of the parts, pairwise complete or anticomplete.
/// `None` only after an exhaustive search.
pub fn multipartite_refine(host: &Graph, parts: &[VertexSet], q: usize) -> Result<Option<Vec<VertexSet>>> {
    multipartite_refine_with_budget(host, parts, q, REFINE_BUDGET)
}

pub fn multipartite_refine_with_budget(
    host: &Graph,
    parts: &[VertexSet],
    q: usize,
    budget: u64,
) -> Result<Option<Vec<VertexSet>>> {
    for (i, a) in parts.iter().enumerate() {
        for v in a.iter() {
            host.check_vertex(v)?;
        }
        if parts[..i].iter().any(|b| !a.is_disjoint(b)) {
            return Err(Error::BadParameter(format!("part {i} overlaps an earlier part")));
        }
    }
    if let Some((part, a)) = parts.iter().enumerate().find(|(_, a)| a.len() < q) {
        return Err(Error::PartsTooSmall {
            part,
            size: a.len(),
            required: q,
        });
    }
    let verify = |out: &[VertexSet]| {
        out.iter().all(|u| u.len() == q) && (0..out.len()).all(|i| (0..i).all(|j| homogeneous(host, &out[i], &out[j])))
    };
    if let Some(out) = greedy_refine(host, parts, q) {
        assert!(verify(&out), "greedy refinement must be homogeneous");
        return Ok(Some(out));
    }
    let mut chosen = Vec::with_capacity(parts.len());
    let mut nodes = 0u64;
    if exhaustive_refine(host, parts, q, &mut chosen, &mut nodes, budget)? {
        assert!(verify(&chosen), "exhaustive refinement must be homogeneous");
        return Ok(Some(chosen));
    }
    Ok(None)
}

/// Shrinks each pair of parts in turn to a balanced homogeneous pair.
fn greedy_refine(host: &Graph, parts: &[VertexSet], q: usize) -> Option<Vec<VertexSet>> {
    let mut cur: Vec<Vec<usize>> = parts.iter().map(VertexSet::to_vec).collect();
    for i in 0..cur.len() {
        for j in i + 1..cur.len() {
            let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
            for &a in &cur[i] {
                for complete in [true, false] {
                    let b: Vec<usize> = cur[j]
                        .iter()
                        .copied()
                        .filter(|&w| host.has_edge(a, w) == complete)
                        .collect();
                    let a_side: Vec<usize> = cur[i]
                        .iter()
                        .copied()
                        .filter(|&u| b.iter().all(|&w| host.has_edge(u, w) == complete))
                        .collect();
                    let size = a_side.len().min(b.len());
                    if best.as_ref().is_none_or(|(x, _)| size > x.len()) {
                        best = Some((a_side[..size].to_vec(), b[..size].to_vec()));
                    }
                }
            }
            let (a_side, b) = best?;
            if a_side.len() < q {
                return None;
            }
            cur[i] = a_side;
            cur[j] = b;
        }
    }
    Some(cur.into_iter().map(|p| p.into_iter().take(q).collect()).collect())
}

fn exhaustive_refine(
    host: &Graph,
    parts: &[VertexSet],
    q: usize,
    chosen: &mut Vec<VertexSet>,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool> {
    let i = chosen.len();
    if i == parts.len() {
        return Ok(true);
    }
    // group the part's vertices by their complete/anticomplete signature
    let mut groups: Vec<(Vec<bool>, Vec<usize>)> = Vec::new();
    'vertex: for v in parts[i].iter() {
        let mut sig = Vec::with_capacity(i);
        for u in chosen.iter() {
            let k = host.neighbors(v).intersection_len(u);
            if k == 0 {
                sig.push(false);
            } else if k == u.len() {
                sig.push(true);
            } else {
                continue 'vertex;
            }
        }
        match groups.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, members)) => members.push(v),
            None => groups.push((sig, vec![v])),
        }
    }
    for (_, members) in groups.iter().filter(|(_, m)| m.len() >= q) {
        let mut idx: Vec<usize> = (0..q).collect();
        loop {
            *nodes += 1;
            if *nodes > budget {
                return Err(Error::BudgetExhausted(budget));
            }
            chosen.push(idx.iter().map(|&k| members[k]).collect());
            if exhaustive_refine(host, parts, q, chosen, nodes, budget)? {
                return Ok(true);
            }
            chosen.pop();
            if !next_combination(&mut idx, members.len()) {
                break;
            }
        }
    }
    Ok(false)
}

/// Advances `idx` to the next ascending `k`-combination of `0..n`.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for pos in (0..k).rev() {
        if idx[pos] < n - k + pos {
            idx[pos] += 1;
            for later in pos + 1..k {
                idx[later] = idx[later - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Path,
    Clique,
    Star,
}

/// An induced `P_k`, `K_k` or `K_{1,k}`. Path embeddings list the path in
/// order; star embeddings put the centre first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeWitness {
    pub shape: Shape,
    pub k: usize,
    pub embedding: Embedding,
}

impl ShapeWitness {
    pub fn pattern(&self) -> Graph {
        use crate::generators::GraphName;
        let name = match self.shape {
            Shape::Path => GraphName::Path(self.k),
            Shape::Clique => GraphName::Complete(self.k),
            Shape::Star => GraphName::Biclique(1, self.k),
        };
        if self.k == 0 {
            // K_{1,0} is a single vertex
            return Graph::empty(usize::from(self.shape == Shape::Star));
        }
        name.build().expect("positive parameter")
    }

    /// Number of vertices of the embedded shape.
    pub fn order(&self) -> usize {
        self.embedding.map.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Trichotomy {
    pub path: ShapeWitness,
    pub clique: ShapeWitness,
    pub star: ShapeWitness,
    /// False when the path came from the breadth-first lower bound.
    pub path_exact: bool,
}

impl Trichotomy {
    /// Largest `k`; ties prefer path, then clique, then star.
    pub fn best(&self) -> &ShapeWitness {
        [&self.path, &self.clique, &self.star]
            .into_iter()
            .rev()
            .max_by_key(|w| w.k)
            .expect("three candidates")
    }
}

/// Exact clique and star, plus the longest induced path (exact up to the
/// default cap, otherwise a shortest path between two far-apart vertices).
pub fn path_clique_star(g: &Graph) -> Result<Trichotomy> {
    if !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let clique = params::clique_within(g, &g.vertices(), 64)?;
    let mut star: Option<(usize, VertexSet)> = None;
    for v in g.vertices().iter() {
        let leaves = params::stable_set_within(g, g.neighbors(v), 64)?;
        if star.as_ref().is_none_or(|(_, s)| leaves.len() > s.len()) {
            star = Some((v, leaves));
        }
    }
    let (center, leaves) = star.expect("nonempty graph");
    let (path, path_exact) = if g.order() <= DEFAULT_CAP {
        let (rows, map) = dense::local_rows(g, &g.vertices(), DEFAULT_CAP)?;
        let p: Vec<usize> = dense::longest_induced_path(&rows).into_iter().map(|i| map[i]).collect();
        (p, true)
    } else {
        (diameter_path(g), false)
    };
    let out = Trichotomy {
        path: ShapeWitness {
            shape: Shape::Path,
            k: path.len(),
            embedding: Embedding::new(path),
        },
        clique: ShapeWitness {
            shape: Shape::Clique,
            k: clique.len(),
            embedding: Embedding::new(clique.to_vec()),
        },
        star: ShapeWitness {
            shape: Shape::Star,
            k: leaves.len(),
            embedding: Embedding::new(std::iter::once(center).chain(leaves.iter()).collect()),
        },
        path_exact,
    };
    for w in [&out.path, &out.clique, &out.star] {
        assert!(w.embedding.verify(&w.pattern(), g), "trichotomy witness must verify");
    }
    Ok(out)
}

/// A shortest path between the ends of a double breadth-first sweep.
/// Shortest paths are induced.
fn diameter_path(g: &Graph) -> Vec<usize> {
    let far = |s: usize| {
        let d = g.distances_from(s);
        (0..g.order())
            .max_by_key(|&v| (d[v].unwrap_or(0), std::cmp::Reverse(v)))
            .unwrap_or(s)
    };
    let u = far(0);
    let w = far(u);
    let d = g.distances_from(w);
    let mut path = vec![u];
    let mut cur = u;
    while cur != w {
        let step = d[cur].expect("connected") - 1;
        cur = g
            .neighbors(cur)
            .iter()
            .find(|&x| d[x] == Some(step))
            .expect("a neighbour one step closer");
        path.push(cur);
    }
    path
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PruneRule {
    /// Vertices of degree at most one.
    Degree1,
    /// Vertices whose neighbourhood is a clique (`α(N(v)) <= 1`).
    Alpha1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum PruneMode {
    /// Delete one vertex at a time, recomputing the rule each time.
    #[default]
    Iterative,
    /// Delete every vertex matching the rule in the input graph at once.
    Snapshot,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned {
    pub graph: Graph,
    /// `kept[new] = old`.
    pub kept: Vec<usize>,
    /// Deleted vertices, in deletion order.
    pub removed: Vec<usize>,
}

fn matches_rule(g: &Graph, alive: &VertexSet, v: usize, rule: PruneRule) -> bool {
    let nbrs = g.neighbors(v).intersection(alive);
    match rule {
        PruneRule::Degree1 => nbrs.len() <= 1,
        PruneRule::Alpha1 => nbrs
            .iter()
            .all(|u| g.neighbors(u).intersection_len(&nbrs) == nbrs.len() - 1),
    }
}

/// Iterative pruning, smallest eligible label first.
pub fn prune(g: &Graph, rule: PruneRule) -> Pruned {
    prune_with(g, rule, PruneMode::Iterative)
}

pub fn prune_with(g: &Graph, rule: PruneRule, mode: PruneMode) -> Pruned {
    let mut alive = g.vertices();
    let mut removed = Vec::new();
    match mode {
        PruneMode::Iterative => loop {
            let Some(v) = alive.iter().find(|&v| matches_rule(g, &alive, v, rule)) else {
                break;
            };
            alive.remove(v);
            removed.push(v);
        },
        PruneMode::Snapshot => {
            let all = g.vertices();
            removed = all.iter().filter(|&v| matches_rule(g, &all, v, rule)).collect();
            for &v in &removed {
                alive.remove(v);
            }
        }
    }
    let (graph, kept) = g.induced(&alive).expect("subset of the vertex set");
    Pruned { graph, kept, removed }
}
