use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::Path;

use serde::Serialize;

use ramsey_core::codec::{encode_graph6, CorpusFormat};
use ramsey_core::generators::parse_family;
use ramsey_core::iso::{family_le, is_family_free, Embedding};
use ramsey_core::params::{self, ParamKind};
use ramsey_core::witness::{extract_witness, only_if_certify, witness, OnlyIfParams, Outcome, WitnessOptions};
use ramsey_core::{Error, FamilySpec, Graph, GraphName, Result};
use ramsey_harness::{
    certify_small_ramsey, enumerate_up_to, estimate_n0, extremal_search, parse_checks, read_corpus, scan_corpus,
    ScanConfig,
};

use crate::{Cli, Command, Failure, Format, Input, ParamChoice, RamseyCommand};

fn open(path: Option<&Path>) -> Result<Box<dyn BufRead>> {
    match path {
        None => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) if p.as_os_str() == "-" => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => {
            let f = File::open(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufReader::new(f)))
        }
    }
}

fn read_graphs(path: Option<&Path>, format: CorpusFormat, lenient: bool) -> Result<Vec<Graph>> {
    read_corpus(open(path)?, format, lenient)
}

fn read_input(input: &Input) -> Result<Vec<Graph>> {
    read_graphs(input.input.as_deref(), input.input_format, input.lenient)
}

/// Accepts `thm:n`, or graph names separated by `;` or `,`. A comma
/// followed by digits stays inside a name, as in `K2,4` or `K1,3*`.
fn parse_family_arg(s: &str) -> Result<FamilySpec> {
    if s.contains(':') {
        return parse_family(s);
    }
    let mut names: Vec<String> = Vec::new();
    for chunk in s.split(';') {
        for part in chunk.split(',') {
            let part = part.trim();
            let continues = part.starts_with(|c: char| c.is_ascii_digit())
                && part.trim_end_matches('*').chars().all(|c| c.is_ascii_digit());
            match names.last_mut() {
                Some(last) if continues => {
                    last.push(',');
                    last.push_str(part);
                }
                _ if part.is_empty() => {}
                _ => names.push(part.to_string()),
            }
        }
    }
    let parsed: Vec<GraphName> = names.iter().map(|n| n.parse()).collect::<Result<_>>()?;
    if parsed.is_empty() {
        return Err(Error::BadParameter(format!("empty family `{s}`")));
    }
    FamilySpec::from_names(&parsed)
}

fn emit<T: Serialize>(value: &T, table: impl FnOnce() -> String, format: Format) -> Result<()> {
    let text = match format {
        Format::Json => serde_json::to_string_pretty(value).map_err(|e| Error::Io(e.to_string()))? + "\n",
        Format::Table => table(),
    };
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct GenOut {
    name: GraphName,
    graph6: String,
    order: usize,
    edges: usize,
}

#[derive(Serialize)]
struct AnalyzeOut {
    index: usize,
    graph6: String,
    order: usize,
    /// Per-vertex values, keyed by parameter.
    params: BTreeMap<&'static str, Vec<usize>>,
    h_index: BTreeMap<&'static str, usize>,
}

#[derive(Serialize)]
struct FreeOut {
    index: usize,
    graph6: String,
    free: bool,
    member: Option<GraphName>,
    embedding: Option<Embedding>,
}

#[derive(Serialize)]
struct WitnessOut {
    index: usize,
    graph6: String,
    report: ramsey_core::witness::WitnessReport,
}

pub fn run(cli: &Cli) -> std::result::Result<(), Failure> {
    let format = cli.format;
    match &cli.command {
        Command::Gen { name } => {
            let g = name.build()?;
            let out = GenOut {
                name: *name,
                graph6: encode_graph6(&g)?,
                order: g.order(),
                edges: g.edge_count(),
            };
            emit(&out, || format!("{}\n", out.graph6), format)?;
        }
        Command::Analyze { param, input } => {
            let kinds: Vec<ParamKind> = match param {
                ParamChoice::All => ParamKind::ALL.to_vec(),
                ParamChoice::One(k) => vec![*k],
            };
            let graphs = read_input(input)?;
            let mut rows = Vec::new();
            for (index, g) in graphs.iter().enumerate() {
                let params = kinds
                    .iter()
                    .map(|&k| Ok((k.as_str(), params::vertex_params(g, k)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?;
                let h_index = params.iter().map(|(&k, v)| (k, params::h_index_of(v))).collect();
                rows.push(AnalyzeOut {
                    index,
                    graph6: encode_graph6(g)?,
                    order: g.order(),
                    params,
                    h_index,
                });
            }
            emit(&rows, || analyze_table(&rows), format)?;
        }
        Command::Free { family, input } => {
            let fam = parse_family_arg(family)?;
            let graphs = read_input(input)?;
            let mut rows = Vec::new();
            for (index, g) in graphs.iter().enumerate() {
                let v = is_family_free(g, &fam.members)?;
                rows.push(FreeOut {
                    index,
                    graph6: encode_graph6(g)?,
                    free: v.is_none(),
                    member: v.as_ref().map(|v| v.member),
                    embedding: v.map(|v| v.embedding),
                });
            }
            emit(
                &rows,
                || {
                    rows.iter()
                        .map(|r| match (&r.member, &r.embedding) {
                            (Some(m), Some(e)) => format!("{} {}: holds {m} at {:?}\n", r.index, r.graph6, e.map),
                            _ => format!("{} {}: free\n", r.index, r.graph6),
                        })
                        .collect()
                },
                format,
            )?;
        }
        Command::Le { left, right } => {
            let l = parse_family_arg(left)?;
            let r = parse_family_arg(right)?;
            let verdict = family_le(&l.members, &r.members)?;
            emit(
                &verdict,
                || {
                    let mut s = format!("holds: {}\n", verdict.holds);
                    for c in &verdict.certificates {
                        s += &match &c.witness {
                            Some(w) => format!("  {} contains {} at {:?}\n", c.right, w.member, w.embedding.map),
                            None => format!("  {} contains no left member\n", c.right),
                        };
                    }
                    s
                },
                format,
            )?;
            if !verdict.holds {
                return Err(Failure::Check);
            }
        }
        Command::Witness {
            theorem,
            n,
            mode,
            threshold,
            param_threshold,
            no_fallback,
            disconnected,
            input,
        } => {
            let opts = WitnessOptions {
                mode: *mode,
                threshold: *threshold,
                param_threshold: *param_threshold,
                fallback: !no_fallback,
                ..Default::default()
            };
            let graphs = read_input(input)?;
            let mut rows = Vec::new();
            for (index, g) in graphs.iter().enumerate() {
                let report = if *disconnected && theorem.requires_connected() {
                    extract_witness(g, *theorem, *n, false, &opts)?
                } else {
                    witness(g, *theorem, *n, &opts)?
                };
                rows.push(WitnessOut {
                    index,
                    graph6: encode_graph6(g)?,
                    report,
                });
            }
            emit(&rows, || witness_table(&rows), format)?;
        }
        Command::OnlyIf { theorem, c, c2 } => {
            let p = match c2 {
                Some(c2) => OnlyIfParams::Pair(*c, *c2),
                None => OnlyIfParams::Single(*c),
            };
            let r = only_if_certify(*theorem, p)?;
            emit(
                &r,
                || {
                    let mut s = format!("{} at n = {}: {:?}\n", r.theorem_id, r.n, r.params);
                    for row in &r.rows {
                        s += &format!(
                            "  {:<10} order {:>3}  count {:>3}  exceeds {}\n",
                            row.member.to_string(),
                            row.order,
                            row.count,
                            row.exceeds
                        );
                    }
                    s + &format!("holds: {}\n", r.holds)
                },
                format,
            )?;
            if !r.holds {
                return Err(Failure::Check);
            }
        }
        Command::Scan {
            checks,
            enumerate,
            connected,
            corpus,
            input_format,
            lenient,
            family,
            records,
            jobs,
        } => {
            let graphs = match (enumerate, corpus) {
                (Some(k), _) => enumerate_up_to(*k, *connected)?,
                (None, Some(p)) => read_graphs(Some(p), *input_format, *lenient)?,
                (None, None) => read_graphs(None, *input_format, *lenient)?,
            };
            let config = ScanConfig {
                checks: parse_checks(checks)?,
                families: family.iter().map(|f| parse_family_arg(f)).collect::<Result<_>>()?,
                jobs: *jobs,
            };
            let report = scan_corpus(&graphs, &config)?;
            emit(
                &report,
                || {
                    let mut s = report.render_table();
                    if *records {
                        for r in &report.records {
                            s += &format!("#{} {} order {} h {:?}\n", r.index, r.graph6, r.order, r.h_index);
                            for f in &r.freeness {
                                s += &format!("  {}: free {}\n", f.family, f.free);
                            }
                        }
                    }
                    s
                },
                format,
            )?;
            if !report.passed() {
                return Err(Failure::Check);
            }
        }
        Command::Extremal {
            family,
            param,
            max_n,
            threshold,
            connected,
            jobs,
        } => {
            let fam = parse_family_arg(family)?;
            let t = extremal_search(&fam, *param, *threshold, *max_n, *connected, *jobs)?;
            emit(&t, || t.render_table(), format)?;
        }
        Command::Ramsey { command } => match command {
            RamseyCommand::CertifySmall => {
                let c = certify_small_ramsey()?;
                emit(&c, || c.render_table(), format)?;
                if !c.holds {
                    return Err(Failure::Check);
                }
            }
            RamseyCommand::N0 { n, max_order } => {
                let e = estimate_n0(*n, *max_order)?;
                emit(
                    &e,
                    || match (&e.value, &e.last_avoiding) {
                        (Some(v), _) => {
                            format!("every connected graph on {v}..={max_order} vertices holds P{n}, K{n} or K1,{n}\n")
                        }
                        (None, Some((o, g))) => {
                            format!("N_0({n}) > {max_order}: {g} on {o} vertices avoids all three\n")
                        }
                        (None, None) => unreachable!("no value without an avoiding graph"),
                    },
                    format,
                )?;
            }
        },
    }
    Ok(())
}

fn analyze_table(rows: &[AnalyzeOut]) -> String {
    let mut s = String::new();
    for r in rows {
        s += &format!("graph {}: {} (order {})\n", r.index, r.graph6, r.order);
        s += "  v";
        for k in r.params.keys() {
            s += &format!(" {k:>6}");
        }
        s += "\n";
        for v in 0..r.order {
            s += &format!("  {v}");
            for vals in r.params.values() {
                s += &format!(" {:>6}", vals[v]);
            }
            s += "\n";
        }
        s += "  h";
        for h in r.h_index.values() {
            s += &format!(" {h:>6}");
        }
        s += "\n";
    }
    s
}

fn witness_table(rows: &[WitnessOut]) -> String {
    let mut s = String::new();
    for r in rows {
        let rep = &r.report;
        s += &format!("graph {}: {} {}:{}: ", r.index, r.graph6, rep.theorem_id, rep.n);
        s += &match &rep.outcome {
            Outcome::Found { member, embedding } => format!("found {member} at {:?}\n", embedding.map),
            Outcome::NotTriggered { count, threshold } => format!("not triggered, count {count} < {threshold}\n"),
            Outcome::StepFailed { step, diagnostic } => format!("step `{step}` failed: {diagnostic}\n"),
        };
        for t in &rep.trace {
            s += &format!("  {:<12} {:>4}  {}\n", t.step, t.size, t.note);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_lists() {
        let f = parse_family_arg("K2,4;P3").unwrap();
        assert_eq!(f.names(), vec![GraphName::Biclique(2, 4), GraphName::Path(3)]);
        let f = parse_family_arg("K1,3*,K3,3K1,2").unwrap();
        assert_eq!(
            f.names(),
            vec![
                GraphName::SubdividedStar(3),
                GraphName::Complete(3),
                GraphName::DisjointStars(3, 2)
            ]
        );
        assert_eq!(parse_family_arg("adh:3").unwrap().members.len(), 3);
        assert!(parse_family_arg("").is_err());
    }
}
