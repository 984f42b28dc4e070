//! graph6 and edge-list corpus I/O, plus DOT export.
//!
//! graph6 layout: a size header `N(n)` (one byte `n + 63` for `n <= 62`,
//! otherwise `~` followed by three 6-bit groups), then the upper triangle
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed big-endian six bits per
//! byte, zero-padded, each byte offset by 63.

use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_LONG: usize = 258_047;

fn decode_header(bytes: &[u8]) -> Result<(usize, usize)> {
    let first = *bytes.first().ok_or_else(|| Error::BadHeader("empty record".into()))?;
    if first == b'~' {
        if bytes.get(1) == Some(&b'~') {
            return Err(Error::BadHeader("8-byte size headers are not supported".into()));
        }
        let group = bytes
            .get(1..4)
            .ok_or_else(|| Error::BadHeader("truncated long header".into()))?;
        let mut n = 0usize;
        for &b in group {
            if !(BIAS..=BIAS + 63).contains(&b) {
                return Err(Error::BadHeader(format!("byte {b} outside [63,126]")));
            }
            n = (n << 6) | (b - BIAS) as usize;
        }
        if n <= MAX_SHORT {
            return Err(Error::BadHeader(format!("long header used for order {n}")));
        }
        Ok((n, 4))
    } else if (BIAS..BIAS + 63).contains(&first) {
        Ok(((first - BIAS) as usize, 1))
    } else {
        Err(Error::BadHeader(format!("byte {first} outside [63,125]")))
    }
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Padding bits must be zero.
pub fn decode_graph6(text: &str) -> Result<Graph> {
    let (g, padding_ok) = decode_graph6_inner(text)?;
    if !padding_ok {
        return Err(Error::NonCanonicalPadding);
    }
    Ok(g)
}

/// Like [`decode_graph6`] but tolerates nonzero padding, reporting it as a flag.
pub fn decode_graph6_lenient(text: &str) -> Result<(Graph, bool)> {
    decode_graph6_inner(text)
}

fn decode_graph6_inner(text: &str) -> Result<(Graph, bool)> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = decode_header(bytes)?;
    let payload = &bytes[header..];
    let expected = payload_len(n);
    if payload.len() != expected {
        return Err(Error::PayloadLengthMismatch {
            expected,
            found: payload.len(),
        });
    }
    let mut b = GraphBuilder::new(n);
    let mut k = 0usize;
    let total = n * n.saturating_sub(1) / 2;
    let (mut i, mut j) = (0usize, 1usize);
    let mut padding_ok = true;
    for &byte in payload {
        if !(BIAS..=BIAS + 63).contains(&byte) {
            return Err(Error::BadHeader(format!("payload byte {byte} outside [63,126]")));
        }
        let chunk = byte - BIAS;
        for shift in (0..6).rev() {
            let set = (chunk >> shift) & 1 == 1;
            if k < total {
                if set {
                    b.add_edge(i, j)?;
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if set {
                padding_ok = false;
            }
            k += 1;
        }
    }
    Ok((b.build(), padding_ok))
}

/// Encodes a graph as a canonical graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + payload_len(n));
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_LONG {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    } else {
        return Err(Error::OrderUnsupported(n));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Renders `n m` followed by one `u v` line per edge.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Undirected DOT document; isolated vertices are listed explicitly.
pub fn export_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.order() {
        match labels.and_then(|l| l.get(v)) {
            Some(label) => {
                let _ = writeln!(s, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CorpusFormat {
    #[default]
    Graph6,
    EdgeList,
}

impl std::str::FromStr for CorpusFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(Self::Graph6),
            "edge-list" | "edges" => Ok(Self::EdgeList),
            other => Err(Error::BadParameter(format!("unknown corpus format `{other}`"))),
        }
    }
}

/// Line-oriented reader yielding one graph per record.
///
/// In strict mode a malformed record yields a positioned error and ends the
/// stream. In lenient mode it is logged and skipped.
pub struct CorpusStream<R> {
    source: R,
    format: CorpusFormat,
    lenient: bool,
    line_number: usize,
    done: bool,
}

impl<R: BufRead> CorpusStream<R> {
    pub fn new(source: R, format: CorpusFormat) -> Self {
        Self {
            source,
            format,
            lenient: false,
            line_number: 0,
            done: false,
        }
    }

    pub fn lenient(mut self, lenient: bool) -> Self {
        self.lenient = lenient;
        self
    }

    pub fn line_number(&self) -> usize {
        self.line_number
    }

    fn next_line(&mut self) -> Result<Option<String>> {
        let mut buf = String::new();
        loop {
            buf.clear();
            if self.source.read_line(&mut buf)? == 0 {
                return Ok(None);
            }
            self.line_number += 1;
            let t = buf.trim();
            if !t.is_empty() {
                return Ok(Some(t.to_string()));
            }
        }
    }

    fn positioned(&self, line: usize, e: Error) -> Error {
        Error::Corpus {
            line,
            source: Box::new(e),
        }
    }

    fn read_graph6(&mut self) -> Option<Result<Graph>> {
        loop {
            let line = match self.next_line() {
                Ok(Some(l)) => l,
                Ok(None) => return None,
                Err(e) => return Some(Err(e)),
            };
            let at = self.line_number;
            match decode_graph6_inner(&line) {
                Ok((g, true)) => return Some(Ok(g)),
                Ok((g, false)) if self.lenient => {
                    log::warn!("line {at}: nonzero graph6 padding bits");
                    return Some(Ok(g));
                }
                Ok((_, false)) => return Some(Err(self.positioned(at, Error::NonCanonicalPadding))),
                Err(e) if self.lenient => log::warn!("line {at}: skipping record: {e}"),
                Err(e) => return Some(Err(self.positioned(at, e))),
            }
        }
    }

    fn read_edge_block(&mut self) -> Option<Result<Graph>> {
        loop {
            let header = match self.next_line() {
                Ok(Some(l)) => l,
                Ok(None) => return None,
                Err(e) => return Some(Err(e)),
            };
            let at = self.line_number;
            match self.edge_block_body(&header) {
                Ok(g) => return Some(Ok(g)),
                Err(e) if self.lenient => log::warn!("line {at}: skipping block: {e}"),
                Err(e) => return Some(Err(self.positioned(at, e))),
            }
        }
    }

    fn edge_block_body(&mut self, header: &str) -> Result<Graph> {
        let nums = parse_pair(header)?;
        let (n, m) = nums;
        let mut b = GraphBuilder::new(n);
        for _ in 0..m {
            let line = self
                .next_line()?
                .ok_or_else(|| Error::BadEdgeList(format!("expected {m} edge lines")))?;
            let (u, v) = parse_pair(&line)?;
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(Error::BadEdgeList(format!("expected two integers, got `{line}`"))),
    }
}

impl<R: BufRead> Iterator for CorpusStream<R> {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let item = match self.format {
            CorpusFormat::Graph6 => self.read_graph6(),
            CorpusFormat::EdgeList => self.read_edge_block(),
        };
        if matches!(item, None | Some(Err(_))) {
            self.done = true;
        }
        item
    }
}
