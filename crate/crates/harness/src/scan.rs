//! Per-graph invariant checks over a corpus.

use std::collections::BTreeMap;
use std::fmt;
use std::io::BufRead;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use ramsey_core::codec::{encode_graph6, CorpusFormat, CorpusStream};
use ramsey_core::iso::{family_le, is_family_free};
use ramsey_core::params::{self, ParamKind};
use ramsey_core::ramsey::path_clique_star;
use ramsey_core::{theorem_family, Error, FamilySpec, Graph, GraphName, Result, TheoremId};

use crate::pool::with_jobs;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    /// `deg >= α(N) >= c(N) >= adh` at every vertex.
    Chain,
    /// `adh(v) >= 2` exactly at cut vertices.
    CutAdh,
    /// Connected dominating sets contain every cut vertex.
    CdsCut,
    /// The four h-indices recount correctly and follow the chain.
    HSweep,
    /// Freeness is hereditary and respects the family order.
    FamilyLe,
    /// A connected graph on `k >= 3` vertices holds an induced `P_3` or `K_3`,
    /// and the path/clique/star witnesses verify.
    Trichotomy,
}

impl CheckId {
    pub const ALL: [CheckId; 6] = [
        CheckId::Chain,
        CheckId::CutAdh,
        CheckId::CdsCut,
        CheckId::HSweep,
        CheckId::FamilyLe,
        CheckId::Trichotomy,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckId::Chain => "chain",
            CheckId::CutAdh => "cut-adh",
            CheckId::CdsCut => "cds-cut",
            CheckId::HSweep => "h-sweep",
            CheckId::FamilyLe => "family-le",
            CheckId::Trichotomy => "trichotomy",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.as_str() == s.trim())
            .ok_or_else(|| Error::BadParameter(format!("unknown check `{s}`")))
    }
}

/// Parses a comma-separated list; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<CheckId>> {
    if list.trim() == "all" {
        return Ok(CheckId::ALL.to_vec());
    }
    let mut out: Vec<CheckId> = list.split(',').map(str::parse).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Default)]
pub struct ScanConfig {
    pub checks: Vec<CheckId>,
    /// Families whose freeness is recorded per graph.
    pub families: Vec<FamilySpec>,
    /// Worker threads, 0 for the default.
    pub jobs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamRow {
    pub deg: usize,
    pub alpha: usize,
    pub c: usize,
    pub adh: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Freeness {
    pub family: String,
    pub free: bool,
    pub member: Option<GraphName>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckViolation {
    pub check: CheckId,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub index: usize,
    pub graph6: String,
    pub order: usize,
    pub params: Vec<ParamRow>,
    pub h_index: ParamRow,
    pub freeness: Vec<Freeness>,
    pub violations: Vec<CheckViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub index: usize,
    pub graph6: String,
    pub check: CheckId,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusReport {
    pub checks: Vec<CheckId>,
    pub graphs: usize,
    /// Number of graphs per order.
    pub by_order: BTreeMap<usize, usize>,
    pub violation_counts: BTreeMap<CheckId, usize>,
    pub records: Vec<GraphRecord>,
    pub violations: Vec<Violation>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn render_table(&self) -> String {
        let mut s = format!("graphs: {}\n", self.graphs);
        for (order, count) in &self.by_order {
            s += &format!("  order {order:>2}: {count}\n");
        }
        s += "check        violations\n";
        for c in &self.checks {
            s += &format!(
                "{:<12} {}\n",
                c.as_str(),
                self.violation_counts.get(c).copied().unwrap_or(0)
            );
        }
        for v in &self.violations {
            s += &format!("#{} {} [{}] {}\n", v.index, v.graph6, v.check, v.detail);
        }
        s
    }
}

/// Reads a whole corpus. Strict mode stops at the first bad record.
pub fn read_corpus<R: BufRead>(source: R, format: CorpusFormat, lenient: bool) -> Result<Vec<Graph>> {
    CorpusStream::new(source, format).lenient(lenient).collect()
}

/// The families exercised by the `family-le` check.
fn le_families() -> Result<Vec<FamilySpec>> {
    [TheoremId::Deg, TheoremId::Alpha, TheoremId::C, TheoremId::Adh]
        .into_iter()
        .map(|t| theorem_family(t, 3))
        .collect()
}

fn family_label(f: &FamilySpec) -> String {
    match f.theorem_id {
        Some(t) => format!("{t}:{}", f.n),
        None => f.names().iter().map(ToString::to_string).collect::<Vec<_>>().join(","),
    }
}

struct Context {
    checks: Vec<CheckId>,
    families: Vec<FamilySpec>,
    le: Vec<FamilySpec>,
    /// `(i, j)` where `le[i] <= le[j]`.
    le_pairs: Vec<(usize, usize)>,
}

impl Context {
    fn new(config: &ScanConfig) -> Result<Self> {
        let le = if config.checks.contains(&CheckId::FamilyLe) {
            le_families()?
        } else {
            Vec::new()
        };
        let mut le_pairs = Vec::new();
        for i in 0..le.len() {
            for j in 0..le.len() {
                if i != j && family_le(&le[i].members, &le[j].members)?.holds {
                    le_pairs.push((i, j));
                }
            }
        }
        let mut checks = config.checks.clone();
        checks.sort();
        checks.dedup();
        Ok(Self {
            checks,
            families: config.families.clone(),
            le,
            le_pairs,
        })
    }

    fn record(&self, index: usize, g: &Graph) -> Result<GraphRecord> {
        let graph6 = encode_graph6(g)?;
        let table: Vec<Vec<usize>> = ParamKind::ALL
            .iter()
            .map(|&k| params::vertex_params(g, k))
            .collect::<Result<_>>()?;
        let rows: Vec<ParamRow> = (0..g.order())
            .map(|v| ParamRow {
                deg: table[0][v],
                alpha: table[1][v],
                c: table[2][v],
                adh: table[3][v],
            })
            .collect();
        let hs: Vec<usize> = table.iter().map(|t| params::h_index_of(t)).collect();
        let h_index = ParamRow {
            deg: hs[0],
            alpha: hs[1],
            c: hs[2],
            adh: hs[3],
        };
        let freeness = self
            .families
            .iter()
            .map(|f| {
                let v = is_family_free(g, &f.members)?;
                Ok(Freeness {
                    family: family_label(f),
                    free: v.is_none(),
                    member: v.map(|v| v.member),
                })
            })
            .collect::<Result<_>>()?;
        let mut violations = Vec::new();
        for &check in &self.checks {
            for detail in self.run_check(check, g, &rows, &h_index)? {
                violations.push(CheckViolation { check, detail });
            }
        }
        Ok(GraphRecord {
            index,
            graph6,
            order: g.order(),
            params: rows,
            h_index,
            freeness,
            violations,
        })
    }

    fn run_check(&self, check: CheckId, g: &Graph, rows: &[ParamRow], h: &ParamRow) -> Result<Vec<String>> {
        let mut out = Vec::new();
        match check {
            CheckId::Chain => {
                for (v, r) in rows.iter().enumerate() {
                    if !(r.deg >= r.alpha && r.alpha >= r.c && r.c >= r.adh) {
                        out.push(format!("v{v}: deg {} alpha {} c {} adh {}", r.deg, r.alpha, r.c, r.adh));
                    }
                }
            }
            CheckId::CutAdh => {
                let cuts = params::cut_vertices(g);
                for (v, r) in rows.iter().enumerate() {
                    if (r.adh >= 2) != cuts.contains(v) {
                        out.push(format!("v{v}: adh {} but cut vertex = {}", r.adh, cuts.contains(v)));
                    }
                }
            }
            CheckId::CdsCut => {
                if g.order() > 0 && g.is_connected() {
                    let cuts = params::cut_vertices(g);
                    let (_, min) = params::domination(g, true)?;
                    if !cuts.is_subset(&min) {
                        out.push(format!(
                            "minimum connected dominating set {min:?} misses a cut vertex of {cuts:?}"
                        ));
                    }
                    for d in params::all_connected_dominating_sets(g, params::DEFAULT_CAP)? {
                        if !cuts.is_subset(&d) {
                            out.push(format!(
                                "connected dominating set {d:?} misses a cut vertex of {cuts:?}"
                            ));
                        }
                    }
                }
            }
            CheckId::HSweep => {
                let cols: [Vec<usize>; 4] = [
                    rows.iter().map(|r| r.deg).collect(),
                    rows.iter().map(|r| r.alpha).collect(),
                    rows.iter().map(|r| r.c).collect(),
                    rows.iter().map(|r| r.adh).collect(),
                ];
                let got = [h.deg, h.alpha, h.c, h.adh];
                for (i, col) in cols.iter().enumerate() {
                    // largest k with at least k values >= k
                    let naive = (0..=col.len())
                        .rev()
                        .find(|&k| col.iter().filter(|&&p| p >= k).count() >= k)
                        .unwrap_or(0);
                    if naive != got[i] {
                        out.push(format!(
                            "{}: h-index {} but recount {naive}",
                            ParamKind::ALL[i].as_str(),
                            got[i]
                        ));
                    }
                }
                if !got.windows(2).all(|w| w[0] >= w[1]) {
                    out.push(format!("h-indices not monotone along the chain: {got:?}"));
                }
            }
            CheckId::FamilyLe => {
                let free: Vec<bool> = self
                    .le
                    .iter()
                    .map(|f| Ok(is_family_free(g, &f.members)?.is_none()))
                    .collect::<Result<_>>()?;
                for &(i, j) in &self.le_pairs {
                    if free[i] && !free[j] {
                        out.push(format!(
                            "{} <= {} but free of the first and not the second",
                            family_label(&self.le[i]),
                            family_label(&self.le[j])
                        ));
                    }
                }
                for (f, _) in self.le.iter().zip(&free).filter(|(_, &ok)| ok) {
                    for v in 0..g.order() {
                        let (rest, _) = g.delete_vertex(v)?;
                        if let Some(bad) = is_family_free(&rest, &f.members)? {
                            out.push(format!("free of {} but G-v{v} holds {}", family_label(f), bad.member));
                        }
                    }
                }
            }
            CheckId::Trichotomy => {
                if g.order() > 0 && g.is_connected() {
                    let t = path_clique_star(g)?;
                    for w in [&t.path, &t.clique, &t.star] {
                        if !w.embedding.verify(&w.pattern(), g) {
                            out.push(format!("{:?} witness of size {} fails to embed", w.shape, w.k));
                        }
                    }
                    let best = t.best().k;
                    if g.order() >= 3 && best < 3 {
                        out.push(format!("order {} but best shape has k = {best}", g.order()));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs the configured checks on every graph. Records come back in input
/// order whatever the number of workers.
pub fn scan_corpus(graphs: &[Graph], config: &ScanConfig) -> Result<CorpusReport> {
    let ctx = Context::new(config)?;
    let started = std::time::Instant::now();
    let records: Vec<GraphRecord> = with_jobs(config.jobs, || {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| ctx.record(i, g))
            .collect::<Result<Vec<_>>>()
    })?;
    log::info!("scanned {} graphs in {:?}", graphs.len(), started.elapsed());

    let mut by_order = BTreeMap::new();
    let mut violation_counts: BTreeMap<CheckId, usize> = ctx.checks.iter().map(|&c| (c, 0)).collect();
    let mut violations = Vec::new();
    for r in &records {
        *by_order.entry(r.order).or_insert(0) += 1;
        for v in &r.violations {
            *violation_counts.entry(v.check).or_insert(0) += 1;
            violations.push(Violation {
                index: r.index,
                graph6: r.graph6.clone(),
                check: v.check,
                detail: v.detail.clone(),
            });
        }
    }
    Ok(CorpusReport {
        checks: ctx.checks,
        graphs: records.len(),
        by_order,
        violation_counts,
        records,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_list() {
        assert_eq!(
            parse_checks("chain,cut-adh").unwrap(),
            vec![CheckId::Chain, CheckId::CutAdh]
        );
        assert_eq!(parse_checks("all").unwrap().len(), 6);
        assert!(parse_checks("chain,nope").is_err());
    }

    #[test]
    fn empty_stream() {
        let config = ScanConfig {
            checks: CheckId::ALL.to_vec(),
            ..Default::default()
        };
        let r = scan_corpus(&[], &config).unwrap();
        assert_eq!(r.graphs, 0);
        assert!(r.records.is_empty() && r.passed());
    }
}
