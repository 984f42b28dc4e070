//! Induced-subgraph search, family freeness, the family order and a
//! canonical form for small graphs.

use serde::Serialize;

use crate::dense::{bit, bits};
use crate::error::{Error, Result};
use crate::generators::{GraphName, Member};
use crate::graph::{Graph, VertexSet};

/// Default node budget for [`find_induced`].
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Canonical forms are computed on the word-sized fast path only.
pub const CANON_CAP: usize = 64;

/// `map[i]` is the host vertex playing pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Self {
        Self { map }
    }

    /// Injective, in range, and preserving both edges and non-edges.
    pub fn verify(&self, h: &Graph, g: &Graph) -> bool {
        if self.map.len() != h.order() || self.map.iter().any(|&v| v >= g.order()) {
            return false;
        }
        if self.image().len() != self.map.len() {
            return false;
        }
        (0..h.order()).all(|j| (0..j).all(|i| h.has_edge(i, j) == g.has_edge(self.map[i], self.map[j])))
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().collect()
    }

    /// Composes with an outer relabeling (`outer[v]` is the image of `v`).
    pub fn lift(&self, outer: &[usize]) -> Embedding {
        Embedding::new(self.map.iter().map(|&v| outer[v]).collect())
    }
}

struct Search<'a> {
    h: &'a Graph,
    g: &'a Graph,
    budget: u64,
    nodes: u64,
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        Ok(())
    }

    fn run_masks(&mut self, rows: &[u64], map: &mut Vec<usize>, used: u64) -> Result<bool> {
        let i = map.len();
        if i == self.h.order() {
            return Ok(true);
        }
        self.tick()?;
        let all = crate::dense::full(rows.len());
        let mut cand = all & !used;
        for (j, &m) in map.iter().enumerate() {
            cand &= if self.h.has_edge(i, j) { rows[m] } else { !rows[m] };
        }
        let need = self.h.degree(i) as u32;
        for v in bits(cand) {
            if rows[v].count_ones() < need {
                continue;
            }
            map.push(v);
            if self.run_masks(rows, map, used | bit(v))? {
                return Ok(true);
            }
            map.pop();
        }
        Ok(false)
    }

    fn run_sets(&mut self, map: &mut Vec<usize>, used: &mut VertexSet) -> Result<bool> {
        let i = map.len();
        if i == self.h.order() {
            return Ok(true);
        }
        self.tick()?;
        let mut cand = self.g.vertices().difference(used);
        for (j, &m) in map.iter().enumerate() {
            cand = if self.h.has_edge(i, j) {
                cand.intersection(self.g.neighbors(m))
            } else {
                cand.difference(self.g.neighbors(m))
            };
        }
        let need = self.h.degree(i);
        for v in cand.iter() {
            if self.g.degree(v) < need {
                continue;
            }
            map.push(v);
            used.insert(v);
            if self.run_sets(map, used)? {
                return Ok(true);
            }
            used.remove(v);
            map.pop();
        }
        Ok(false)
    }
}

/// Lexicographically least induced embedding of `h` into `g`, under the
/// default node budget.
pub fn find_induced(g: &Graph, h: &Graph) -> Result<Option<Embedding>> {
    find_induced_with_budget(g, h, DEFAULT_BUDGET)
}

/// Complete backtracking search. Pattern vertices are placed in order
/// `0..|H|` and host candidates tried ascending, so the first hit is the
/// lexicographically least map. Exceeding `budget` search nodes yields
/// `BudgetExhausted`, never a false "absent".
pub fn find_induced_with_budget(g: &Graph, h: &Graph, budget: u64) -> Result<Option<Embedding>> {
    if h.order() > g.order() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut search = Search { h, g, budget, nodes: 0 };
    let mut map = Vec::with_capacity(h.order());
    let found = match g.masks() {
        Some(rows) => search.run_masks(&rows, &mut map, 0)?,
        None => search.run_sets(&mut map, &mut VertexSet::new())?,
    };
    if !found {
        return Ok(None);
    }
    let e = Embedding::new(map);
    assert!(e.verify(h, g), "induced embedding failed verification");
    Ok(Some(e))
}

/// First family member found in `g`, in family order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub member: GraphName,
    pub embedding: Embedding,
}

pub fn is_family_free(g: &Graph, members: &[Member]) -> Result<Option<Violation>> {
    is_family_free_with_budget(g, members, DEFAULT_BUDGET)
}

/// `Ok(None)` means free; `Ok(Some(_))` names the first violating member.
pub fn is_family_free_with_budget(g: &Graph, members: &[Member], budget: u64) -> Result<Option<Violation>> {
    for m in members {
        if let Some(embedding) = find_induced_with_budget(g, &m.graph, budget)? {
            return Ok(Some(Violation {
                member: m.name,
                embedding,
            }));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeCertificate {
    /// The member of the right-hand family being covered.
    pub right: GraphName,
    /// First left member induced in it, if any.
    pub witness: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LeVerdict {
    pub holds: bool,
    pub certificates: Vec<LeCertificate>,
}

/// `left <= right`: every right member contains some left member induced.
pub fn family_le(left: &[Member], right: &[Member]) -> Result<LeVerdict> {
    let certificates = right
        .iter()
        .map(|r| {
            Ok(LeCertificate {
                right: r.name,
                witness: is_family_free(&r.graph, left)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LeVerdict {
        holds: certificates.iter().all(|c| c.witness.is_some()),
        certificates,
    })
}

/// A canonical relabeling: `perm[new] = old`, and `code` is the adjacency
/// word list of the relabeled graph. Isomorphic graphs share `code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub perm: Vec<usize>,
    pub code: Vec<u64>,
}

impl Canonical {
    pub fn graph(&self) -> Graph {
        Graph::from_masks(&self.code)
    }
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | bit(v))
}

/// Equitable refinement of an ordered partition. Split cells are ordered by
/// neighbour count into the splitter, so the result is relabeling-invariant.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cell_mask(&cells[s]);
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            let mut changed = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((rows[v] & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
                changed |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            if changed {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn leaf_code(rows: &[u64], cells: &[Vec<usize>]) -> (Vec<usize>, Vec<u64>) {
    let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let mut pos = vec![0usize; rows.len()];
    for (new, &old) in perm.iter().enumerate() {
        pos[old] = new;
    }
    let code = perm
        .iter()
        .map(|&old| bits(rows[old]).fold(0u64, |m, u| m | bit(pos[u])))
        .collect();
    (perm, code)
}

fn twins(rows: &[u64], u: usize, v: usize) -> bool {
    rows[u] & !bit(v) == rows[v] & !bit(u)
}

fn canon_search(rows: &[u64], cells: Vec<Vec<usize>>, best: &mut Option<(Vec<usize>, Vec<u64>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let (perm, code) = leaf_code(rows, &cells);
        if best.as_ref().is_none_or(|(_, b)| code > *b) {
            *best = Some((perm, code));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        // swapping twins is an automorphism fixing the current partition
        if tried.iter().any(|&u| twins(rows, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..target]);
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        refine(rows, &mut next);
        canon_search(rows, next, best);
    }
}

/// Canonical form by individualization-refinement with twin pruning.
pub fn canonical_form(g: &Graph) -> Result<Canonical> {
    let rows = g.masks().ok_or(Error::OrderCapExceeded {
        order: g.order(),
        cap: CANON_CAP,
    })?;
    if rows.is_empty() {
        return Ok(Canonical {
            perm: Vec::new(),
            code: Vec::new(),
        });
    }
    let mut cells = vec![(0..rows.len()).collect::<Vec<_>>()];
    refine(&rows, &mut cells);
    let mut best = None;
    canon_search(&rows, cells, &mut best);
    let (perm, code) = best.expect("search visits at least one leaf");
    Ok(Canonical { perm, code })
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > CANON_CAP {
            return Err(Error::OrderCapExceeded {
                order: x.order(),
                cap: CANON_CAP,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = (0..x.order()).map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    if degrees(g) != degrees(h) {
        return Ok(false);
    }
    Ok(canonical_form(g)?.code == canonical_form(h)?.code)
}
