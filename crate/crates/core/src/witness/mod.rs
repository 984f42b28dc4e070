//! Constructive witness extraction: run a proof's case analysis on a concrete
//! graph and return a verified induced copy of a family member, or say which
//! step ran out of supply.

mod certify;
mod connected;
mod hindex;
mod thresholds;

use serde::{Deserialize, Serialize};

pub use certify::{only_if_certify, CertifyReport, CertifyRow, OnlyIfParams};
pub use thresholds::{paper_thresholds, Lookup, PaperThresholds, RamseyTable};

use crate::error::{Error, Result};
use crate::generators::{theorem_family, GraphName, TheoremId};
use crate::graph::{Graph, VertexSet};
use crate::iso::{is_family_free, Embedding};
use crate::params::{self, DEFAULT_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Trigger on any supply and let the pipeline report what runs short.
    #[default]
    BestEffort,
    /// Use the literal proof thresholds; refuse when they cannot be evaluated.
    Paper,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "best-effort" => Ok(Mode::BestEffort),
            "paper" => Ok(Mode::Paper),
            _ => Err(Error::BadParameter(format!("unknown mode `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessOptions {
    pub mode: Mode,
    /// Overrides the count threshold (`c + 1`, or `c_2` for h-index statements).
    pub threshold: Option<usize>,
    /// Overrides `c_1` for h-index statements.
    pub param_threshold: Option<usize>,
    /// When the pipeline fails, search the family directly before giving up.
    pub fallback: bool,
    pub table: RamseyTable,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            mode: Mode::BestEffort,
            threshold: None,
            param_threshold: None,
            fallback: true,
            table: RamseyTable::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub step: String,
    pub size: usize,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Outcome {
    Found { member: GraphName, embedding: Embedding },
    NotTriggered { count: usize, threshold: usize },
    StepFailed { step: String, diagnostic: String },
}

impl Outcome {
    pub fn is_found(&self) -> bool {
        matches!(self, Outcome::Found { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub mode: Mode,
    pub outcome: Outcome,
    pub trace: Vec<TraceEntry>,
}

/// Result of one pipeline stage.
pub(crate) enum Step {
    Found(GraphName, Vec<usize>),
    Failed(String, String),
}

pub(crate) fn fail(step: &str, diagnostic: impl Into<String>) -> Step {
    Step::Failed(step.to_string(), diagnostic.into())
}

pub(crate) struct Run<'a> {
    pub g: &'a Graph,
    pub n: usize,
    /// Off inside a component of a disconnected graph, where a short path
    /// is not a family member.
    pub paths: bool,
    pub trace: Vec<TraceEntry>,
}

impl<'a> Run<'a> {
    fn new(g: &'a Graph, n: usize) -> Self {
        Run {
            g,
            n,
            paths: true,
            trace: Vec::new(),
        }
    }

    pub fn log(&mut self, step: &str, size: usize, note: impl Into<String>) {
        let note = note.into();
        log::debug!("{step} [{size}] {note}");
        self.trace.push(TraceEntry {
            step: step.to_string(),
            size,
            note,
        });
    }
}

/// Exact maximum stable set when small enough, otherwise greedy.
pub(crate) fn best_stable(g: &Graph, set: &VertexSet) -> VertexSet {
    params::stable_set_within(g, set, 64).unwrap_or_else(|_| greedy(g, set, false))
}

/// Exact maximum clique when small enough, otherwise greedy.
pub(crate) fn best_clique(g: &Graph, set: &VertexSet) -> VertexSet {
    params::clique_within(g, set, 64).unwrap_or_else(|_| greedy(g, set, true))
}

fn greedy(g: &Graph, set: &VertexSet, clique: bool) -> VertexSet {
    let mut out = VertexSet::new();
    for v in set.iter() {
        let k = g.neighbors(v).intersection_len(&out);
        if (clique && k == out.len()) || (!clique && k == 0) {
            out.insert(v);
        }
    }
    out
}

pub(crate) fn first_n(set: &VertexSet, n: usize) -> Vec<usize> {
    set.iter().take(n).collect()
}

/// Minimum dominating set up to the exact cap, greedy beyond it.
pub(crate) fn dominating_set(g: &Graph) -> VertexSet {
    if let Ok((_, d)) = params::domination_capped(g, false, DEFAULT_CAP) {
        return d;
    }
    let mut undominated = g.vertices();
    let mut d = VertexSet::new();
    while !undominated.is_empty() {
        // ties go to the smallest label
        let v = (0..g.order())
            .rev()
            .max_by_key(|&v| g.closed_neighbors(v).intersection_len(&undominated))
            .expect("nonempty graph");
        d.insert(v);
        undominated = undominated.difference(&g.closed_neighbors(v));
    }
    d
}

fn finish(mut run: Run<'_>, theorem: TheoremId, mode: Mode, step: Step, fallback: bool) -> Result<WitnessReport> {
    let g = run.g;
    let n = run.n;
    let mut outcome = match step {
        Step::Found(name, map) => {
            let embedding = Embedding::new(map);
            if embedding.verify(&name.build()?, g) {
                Outcome::Found {
                    member: name,
                    embedding,
                }
            } else {
                log::warn!("{theorem}: candidate {name} failed verification");
                Outcome::StepFailed {
                    step: "verify".into(),
                    diagnostic: format!("candidate {name} at {:?} is not an induced copy", embedding.map),
                }
            }
        }
        Step::Failed(step, diagnostic) => Outcome::StepFailed { step, diagnostic },
    };
    if fallback && !outcome.is_found() {
        let family = theorem_family(theorem, n)?;
        match is_family_free(g, &family.members) {
            Ok(Some(v)) => {
                run.log(
                    "fallback",
                    v.embedding.map.len(),
                    format!("direct search found {}", v.member),
                );
                outcome = Outcome::Found {
                    member: v.member,
                    embedding: v.embedding,
                };
            }
            Ok(None) => run.log("fallback", 0, "direct search: graph is family-free"),
            Err(e) => run.log("fallback", 0, format!("direct search gave up: {e}")),
        }
    }
    Ok(WitnessReport {
        theorem_id: theorem,
        n,
        mode,
        outcome,
        trace: run.trace,
    })
}

fn not_triggered(run: Run<'_>, theorem: TheoremId, mode: Mode, count: usize, threshold: usize) -> WitnessReport {
    WitnessReport {
        theorem_id: theorem,
        n: run.n,
        mode,
        outcome: Outcome::NotTriggered { count, threshold },
        trace: run.trace,
    }
}

fn refused(run: Run<'_>, theorem: TheoremId, mode: Mode, why: String) -> WitnessReport {
    WitnessReport {
        theorem_id: theorem,
        n: run.n,
        mode,
        outcome: Outcome::StepFailed {
            step: "threshold".into(),
            diagnostic: why,
        },
        trace: run.trace,
    }
}

/// Maps solver limits to a failed step so the report stays honest.
fn guard(step: Result<Step>) -> Result<Step> {
    match step {
        Err(e @ (Error::OrderCapExceeded { .. } | Error::BudgetExhausted(_))) => Ok(fail("search", e.to_string())),
        other => other,
    }
}

/// Witness for one of `deg`, `alpha`, `c`, `adh`. With `connected == false`
/// (or a `cor-*` id) the disconnected corollary family is targeted.
pub fn extract_witness(
    g: &Graph,
    theorem: TheoremId,
    n: usize,
    connected: bool,
    opts: &WitnessOptions,
) -> Result<WitnessReport> {
    use TheoremId::*;
    let (base, connected) = match theorem {
        Deg | Alpha | C | Adh => (theorem, connected),
        CorDeg => (Deg, false),
        CorAlpha => (Alpha, false),
        CorC => (C, false),
        CorAdh => (Adh, false),
        _ => {
            return Err(Error::BadParameter(format!(
                "{theorem} is not a connected-graph statement"
            )))
        }
    };
    if n < 2 {
        return Err(Error::BadParameter("witness extraction needs n >= 2".into()));
    }
    if connected && !g.is_connected() {
        return Err(Error::GraphDisconnected);
    }
    let family = if connected { base } else { connected::corollary_of(base) };
    let kind = base.param_kind().expect("vertex parameter");
    let mut run = Run::new(g, n);
    let count = params::nontrivial_count(g, kind, 2)?;
    let threshold = match (opts.threshold, opts.mode) {
        (Some(t), _) => t,
        (None, Mode::BestEffort) => 1,
        (None, Mode::Paper) => match paper_thresholds(family, n, &opts.table) {
            Ok(p) => {
                for (name, v) in &p.quantities {
                    run.log("threshold", *v as usize, format!("{name} = {v}"));
                }
                p.count
            }
            Err(why) => return Ok(refused(run, family, opts.mode, why)),
        },
    };
    run.log(
        "count",
        count,
        format!("vertices with {} >= 2; threshold {threshold}", kind.as_str()),
    );
    if count < threshold {
        return Ok(not_triggered(run, family, opts.mode, count, threshold));
    }
    let step = if connected {
        guard(connected::pipeline(&mut run, base))?
    } else {
        guard(connected::corollary(&mut run, base))?
    };
    finish(run, family, opts.mode, step, opts.fallback)
}

/// Witness for one of the h-index statements.
pub fn extract_hindex_witness(g: &Graph, theorem: TheoremId, n: usize, opts: &WitnessOptions) -> Result<WitnessReport> {
    if !theorem.is_h_index() {
        return Err(Error::BadParameter(format!("{theorem} is not an h-index statement")));
    }
    if n < 2 {
        return Err(Error::BadParameter("witness extraction needs n >= 2".into()));
    }
    let kind = theorem.param_kind().expect("vertex parameter");
    let mut run = Run::new(g, n);
    let (c1, c2) = match opts.mode {
        Mode::BestEffort => (opts.param_threshold.unwrap_or(2), opts.threshold.unwrap_or(1)),
        Mode::Paper => match paper_thresholds(theorem, n, &opts.table) {
            Ok(p) => {
                for (name, v) in &p.quantities {
                    run.log("threshold", *v as usize, format!("{name} = {v}"));
                }
                (
                    opts.param_threshold.unwrap_or(p.param.expect("h-index cut-off")),
                    opts.threshold.unwrap_or(p.count),
                )
            }
            Err(why) => return Ok(refused(run, theorem, opts.mode, why)),
        },
    };
    let values = params::vertex_params(g, kind)?;
    let mut hi: Vec<usize> = (0..g.order()).filter(|&v| values[v] >= c1).collect();
    hi.sort_by_key(|&v| (std::cmp::Reverse(values[v]), v));
    run.log(
        "count",
        hi.len(),
        format!("vertices with {} >= {c1}; threshold {c2}", kind.as_str()),
    );
    if hi.len() < c2 {
        return Ok(not_triggered(run, theorem, opts.mode, hi.len(), c2));
    }
    let step = guard(hindex::pipeline(&mut run, theorem, kind, &hi))?;
    finish(run, theorem, opts.mode, step, opts.fallback)
}

/// Dispatches on the statement: connected ids use the connected pipelines,
/// `cor-*` ids the disconnected ones, `h-*` ids the h-index ones.
pub fn witness(g: &Graph, theorem: TheoremId, n: usize, opts: &WitnessOptions) -> Result<WitnessReport> {
    match theorem {
        TheoremId::Dom => Err(Error::BadParameter("no witness pipeline for dom".into())),
        t if t.is_h_index() => extract_hindex_witness(g, t, n, opts),
        t => extract_witness(g, t, n, t.requires_connected(), opts),
    }
}
