use std::collections::BTreeMap;

use crate::generators::TheoremId;

/// Ramsey-type constants the proofs quote. Only values with a known
/// certificate are built in; anything else must be supplied with
/// [`RamseyTable::with_external`] and is flagged as external in traces.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RamseyTable {
    external: BTreeMap<(u64, u64), u64>,
    external_mr: BTreeMap<(u64, u64), u64>,
}

/// A looked-up constant and whether it came from outside the built-in table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lookup {
    pub value: u64,
    pub external: bool,
}

impl RamseyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `R_colors(q) = value`.
    pub fn with_external(mut self, colors: u64, q: u64, value: u64) -> Self {
        self.external.insert((colors, q), value);
        self
    }

    /// Adds `MR(k, q) = value`.
    pub fn with_external_mr(mut self, k: u64, q: u64, value: u64) -> Self {
        self.external_mr.insert((k, q), value);
        self
    }

    /// `R_m(q)`: the least `N` such that every `m`-coloring of `K_N` has a
    /// monochromatic `K_q`.
    pub fn r(&self, colors: u64, q: u64) -> Option<Lookup> {
        let known = match (colors, q) {
            (0, _) => None,
            (_, 0..=2) => Some(q),
            (1, q) => Some(q),
            (2, 3) => Some(6),
            _ => None,
        };
        match known {
            Some(value) => Some(Lookup { value, external: false }),
            None => self
                .external
                .get(&(colors, q))
                .map(|&value| Lookup { value, external: true }),
        }
    }

    /// The multipartite refinement constant `MR(k, q)`.
    pub fn mr(&self, k: u64, q: u64) -> Option<Lookup> {
        let known = match (k, q) {
            (_, 0 | 1) => Some(q),
            (0 | 1, q) => Some(q),
            _ => None,
        };
        match known {
            Some(value) => Some(Lookup { value, external: false }),
            None => self
                .external_mr
                .get(&(k, q))
                .map(|&value| Lookup { value, external: true }),
        }
    }

    /// Least order forcing `P_n`, `K_n` or `K_{1,n}` in a connected graph.
    pub fn n0(&self, n: u64) -> Option<u64> {
        match n {
            1..=3 => Some(n),
            _ => None,
        }
    }
}

/// Literal thresholds of a proof, or the reason they cannot be evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaperThresholds {
    /// Trigger when the measured count is at least this.
    pub count: usize,
    /// Parameter cut-off `c_1` for the h-index statements.
    pub param: Option<usize>,
    /// Intermediate quantities in evaluation order.
    pub quantities: Vec<(&'static str, u64)>,
}

struct Eval<'a> {
    table: &'a RamseyTable,
    quantities: Vec<(&'static str, u64)>,
}

impl Eval<'_> {
    fn r(&mut self, colors: u64, q: u64) -> Result<u64, String> {
        let l = self
            .table
            .r(colors, q)
            .ok_or_else(|| format!("R_{colors}({q}) is not in the Ramsey table"))?;
        Ok(l.value)
    }

    fn mr(&mut self, k: u64, q: u64) -> Result<u64, String> {
        let l = self
            .table
            .mr(k, q)
            .ok_or_else(|| format!("MR({k}, {q}) is not in the Ramsey table"))?;
        Ok(l.value)
    }

    fn n0(&mut self, n: u64) -> Result<u64, String> {
        self.table.n0(n).ok_or_else(|| format!("N_0({n}) has no known value"))
    }

    fn note(&mut self, name: &'static str, v: u64) -> u64 {
        self.quantities.push((name, v));
        v
    }
}

fn mul(a: u64, b: u64) -> Result<u64, String> {
    a.checked_mul(b)
        .ok_or_else(|| "threshold overflows 64 bits".to_string())
}

fn pow2(e: u64) -> Result<u64, String> {
    if e >= 64 {
        return Err(format!("palette 2^{e} overflows 64 bits"));
    }
    Ok(1 << e)
}

fn to_usize(v: u64) -> Result<usize, String> {
    usize::try_from(v).map_err(|_| "threshold overflows usize".to_string())
}

/// Evaluates the proof formulas for `theorem` at parameter `n`.
pub fn paper_thresholds(theorem: TheoremId, n: usize, table: &RamseyTable) -> Result<PaperThresholds, String> {
    use TheoremId::*;
    let n = n as u64;
    let mut e = Eval {
        table,
        quantities: Vec::new(),
    };
    // (count cut-off, c_1); the connected statements bound count <= c, so
    // the trigger is c + 1
    let (count, param) = match theorem {
        Deg => {
            let r = e.r(2, 2 * n - 1)?;
            let n1 = e.note("N_1", mul(n - 1, r)?);
            let c = e.n0(n1)?;
            (c + 1, None)
        }
        Alpha => {
            let n3 = e.r(256, n + 2)?;
            let n3 = e.note("N_3", n3);
            let r = e.r(2, n)?;
            let n2 = e.note("N_2", mul(mul(n, r)?, n3)?);
            let n1 = e.note("N_1", 2 * n2 - 1);
            let c = e.n0(n1)?;
            (c + 1, None)
        }
        C => {
            let n2 = e.r(2, n)?;
            e.note("N_2", n2);
            e.note("N_1", mul(n, n2)?);
            return Err("the domination bound gamma_n has no explicit value".into());
        }
        Adh => return Err("the connected-domination bound gamma_c(n) has no explicit value".into()),
        CorDeg => {
            let r = e.r(2, 8 * n - 1)?;
            let n1 = e.note("N_1", mul(4 * n - 1, r)?);
            let n0 = e.n0(n1)?;
            (mul(2 * n - 2, n0)? + 1, None)
        }
        CorAlpha | CorC | CorAdh => {
            return Err(format!("{theorem} has no explicit threshold formula"));
        }
        HDeg => {
            let n3 = e.r(2, n)?;
            e.note("N_3", n3);
            let colors = pow2(n * n + 2 * n + 1)?;
            let n2 = e.r(colors, 2 * n)?;
            e.note("N_2", n2);
            let c1 = e.note("c_1", mul(n2, n3)? + n2);
            let c2 = e.note("c_2", n2);
            (c2, Some(c1))
        }
        HAlpha | HC => {
            let colors = pow2(2 * n + 1)?;
            let n2 = e.r(colors, 2 * n)?;
            e.note("N_2", n2);
            let n3 = e.mr(n2, 3 * n)?;
            e.note("N_3", n3);
            let c1 = e.note("c_1", mul(n2, n3)? + n2);
            let c2 = e.note("c_2", n2);
            (c2, Some(c1))
        }
        HAdh => {
            let n2 = e.r(2, n)?;
            e.note("N_2", n2);
            let n3 = e.note("N_3", n + n2 - 1);
            let c1 = e.note("c_1", mul(n2, n3)? + n2);
            let c2 = e.note("c_2", n2);
            (c2, Some(c1))
        }
        Dom => return Err("the domination statement has no witness pipeline".into()),
    };
    Ok(PaperThresholds {
        count: to_usize(count)?,
        param: param.map(to_usize).transpose()?,
        quantities: e.quantities,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ramsey_values() {
        let t = RamseyTable::new();
        assert_eq!(t.r(2, 3).unwrap().value, 6);
        assert_eq!(t.r(7, 2).unwrap().value, 2);
        assert_eq!(t.r(1, 9).unwrap().value, 9);
        assert!(t.r(2, 4).is_none());
        let t = t.with_external(2, 4, 18);
        assert_eq!(
            t.r(2, 4),
            Some(Lookup {
                value: 18,
                external: true
            })
        );
    }

    #[test]
    fn h_adh_is_evaluable() {
        let t = RamseyTable::new();
        let p = paper_thresholds(TheoremId::HAdh, 3, &t).unwrap();
        assert_eq!((p.count, p.param), (6, Some(54)));
        let p = paper_thresholds(TheoremId::HAdh, 2, &t).unwrap();
        assert_eq!((p.count, p.param), (2, Some(8)));
    }

    #[test]
    fn deg_refuses_unknown_n0() {
        let err = paper_thresholds(TheoremId::Deg, 3, &RamseyTable::new()).unwrap_err();
        assert!(err.contains("R_2(5)"), "{err}");
        let err = paper_thresholds(TheoremId::Deg, 2, &RamseyTable::new()).unwrap_err();
        assert!(err.contains("N_0(6)"), "{err}");
    }
}
