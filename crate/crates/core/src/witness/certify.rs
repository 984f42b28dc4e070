//! Necessity check: every member of the family at the matching parameter
//! already violates the claimed bound.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::{theorem_family, GraphName, TheoremId};
use crate::params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OnlyIfParams {
    /// Bound `c` on the nontrivial count.
    Single(usize),
    /// Bound `c_2` on the number of vertices with parameter `>= c_1`.
    Pair(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertifyRow {
    pub member: GraphName,
    pub order: usize,
    pub count: usize,
    pub exceeds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertifyReport {
    pub theorem_id: TheoremId,
    pub n: usize,
    pub params: OnlyIfParams,
    pub rows: Vec<CertifyRow>,
    pub holds: bool,
}

/// Evaluates the family at `n = c + 3` (connected statements), `n = c + 1`
/// (corollaries) or `n = c_1 + c_2` (h-index statements) and checks that each
/// member's count exceeds the bound.
pub fn only_if_certify(theorem: TheoremId, params: OnlyIfParams) -> Result<CertifyReport> {
    let kind = theorem
        .param_kind()
        .ok_or_else(|| Error::BadParameter(format!("{theorem} does not bound a vertex parameter")))?;
    let (n, cutoff, exceeds): (usize, usize, Box<dyn Fn(usize) -> bool>) = match (theorem.is_h_index(), params) {
        (false, OnlyIfParams::Single(c)) => {
            let n = if theorem.is_corollary() { c + 1 } else { c + 3 };
            (n, 2, Box::new(move |k| k > c))
        }
        (true, OnlyIfParams::Pair(c1, c2)) => (c1 + c2, c1, Box::new(move |k| k >= c2)),
        (true, _) => return Err(Error::BadParameter(format!("{theorem} takes a pair (c1, c2)"))),
        (false, _) => return Err(Error::BadParameter(format!("{theorem} takes a single bound c"))),
    };
    let family = theorem_family(theorem, n)?;
    let mut rows = Vec::new();
    for m in &family.members {
        let count = params::nontrivial_count(&m.graph, kind, cutoff)?;
        rows.push(CertifyRow {
            member: m.name,
            order: m.graph.order(),
            count,
            exceeds: exceeds(count),
        });
    }
    let holds = rows.iter().all(|r| r.exceeds);
    Ok(CertifyReport {
        theorem_id: theorem,
        n,
        params,
        rows,
        holds,
    })
}
