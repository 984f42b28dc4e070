//! Largest nontrivial-vertex count over family-free graphs, order by order.

use rayon::prelude::*;
use serde::Serialize;

use ramsey_core::codec::encode_graph6;
use ramsey_core::iso::is_family_free;
use ramsey_core::params::{self, ParamKind};
use ramsey_core::{FamilySpec, Graph, Result};

use crate::enumerate::enumerate_table;
use crate::pool::with_jobs;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalRow {
    pub order: usize,
    /// Classes of this order that were examined.
    pub graphs: usize,
    pub free_count: usize,
    /// `None` when no family-free graph of this order exists.
    pub max: Option<usize>,
    /// Least graph6 string attaining `max`.
    pub witness: Option<String>,
    /// Largest `max` over this and all smaller orders.
    pub running_max: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalTable {
    pub family: Vec<String>,
    pub param: ParamKind,
    pub threshold: usize,
    pub connected_only: bool,
    pub rows: Vec<ExtremalRow>,
}

impl ExtremalTable {
    /// Running maximum equal at the two largest orders.
    pub fn stabilized(&self) -> bool {
        match self.rows.as_slice() {
            [.., a, b] => a.running_max == b.running_max,
            _ => false,
        }
    }

    pub fn render_table(&self) -> String {
        let mut s = format!(
            "family {{{}}}  param {}  threshold {}  connected {}\n",
            self.family.join(", "),
            self.param.as_str(),
            self.threshold,
            self.connected_only
        );
        s += "order  graphs  free  max  running  witness\n";
        for r in &self.rows {
            let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
            s += &format!(
                "{:>5}  {:>6}  {:>4}  {:>3}  {:>7}  {}\n",
                r.order,
                r.graphs,
                r.free_count,
                show(r.max),
                show(r.running_max),
                r.witness.as_deref().unwrap_or("-")
            );
        }
        s
    }
}

fn row(order: usize, classes: &[Graph], family: &FamilySpec, kind: ParamKind, threshold: usize) -> Result<ExtremalRow> {
    // classes arrive sorted by graph6, so the first maximizer is the least
    let scored: Vec<Option<usize>> = classes
        .par_iter()
        .map(|g| {
            if is_family_free(g, &family.members)?.is_some() {
                return Ok(None);
            }
            Ok(Some(params::nontrivial_count(g, kind, threshold)?))
        })
        .collect::<Result<_>>()?;
    let mut best: Option<(usize, usize)> = None;
    for (i, s) in scored.iter().enumerate() {
        if let Some(c) = *s {
            if best.is_none_or(|(_, b)| c > b) {
                best = Some((i, c));
            }
        }
    }
    Ok(ExtremalRow {
        order,
        graphs: classes.len(),
        free_count: scored.iter().flatten().count(),
        max: best.map(|(_, c)| c),
        witness: best.map(|(i, _)| encode_graph6(&classes[i])).transpose()?,
        running_max: None,
    })
}

/// One row per order `1..=max_n`. A search budget running out is an error,
/// never a silent skip.
pub fn extremal_search(
    family: &FamilySpec,
    kind: ParamKind,
    threshold: usize,
    max_n: usize,
    connected_only: bool,
    jobs: usize,
) -> Result<ExtremalTable> {
    let table = enumerate_table(max_n, connected_only)?;
    let mut rows = with_jobs(jobs, || {
        (1..=max_n)
            .map(|order| row(order, &table[order], family, kind, threshold))
            .collect::<Result<Vec<_>>>()
    })?;
    let mut running: Option<usize> = None;
    for r in &mut rows {
        running = running.max(r.max);
        r.running_max = running;
    }
    Ok(ExtremalTable {
        family: family.names().iter().map(ToString::to_string).collect(),
        param: kind,
        threshold,
        connected_only,
        rows,
    })
}
