//! Named graphs and the forbidden families of each characterization.
//!
//! Labelings are fixed so embeddings are reproducible:
//!
//! | graph | labeling |
//! |---|---|
//! | `P_n` | path `0-1-...-(n-1)` |
//! | `C_n` | cycle `0-1-...-(n-1)-0` |
//! | `K_{s,t}` | parts `0..s` and `s..s+t` |
//! | `K_{1,n}^*` | center 0, leaves `1..=n`, pendant `n+i` on leaf `i` |
//! | `K_n^*` | clique `0..n`, pendant `n+i` on `i` |
//! | `CK_n` | cliques `0..n` and `n..2n`, matching `i <-> n+i` |
//! | `T_n` | clique `0..n`, stable `n..2n` complete to it, apex `2n` on the stable part |
//! | `K_n^m` | clique `0..n`, pendants of `i` at `n+i*m..n+(i+1)*m` |
//! | `K_2+nK_1` | edge `0-1`, stable `2..n+2` |
//! | `K_1+nK_2` | apex 0, pairs `(1+2k, 2+2k)` |
//! | `K_1+nP_3` | apex 0, path `1+3k - 2+3k - 3+3k` (middle `2+3k`) |
//! | `E_2+K_n` | stable `0,1`, clique `2..n+2` |
//! | `K_n+E_m` | clique `0..n`, stable `n..n+m` |
//! | `kH` | copy `i` occupies `i*|H|..(i+1)*|H|` |

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{disjoint_copies, join_graphs, Graph, GraphBuilder};
use crate::params::ParamKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum GraphName {
    Complete(usize),
    Edgeless(usize),
    Path(usize),
    Cycle(usize),
    Biclique(usize, usize),
    /// `K_{1,n}^*`: a pendant on every leaf of `K_{1,n}`.
    SubdividedStar(usize),
    /// `K_n^*`: a pendant on every vertex of `K_n`.
    Corona(usize),
    /// `CK_n`: two copies of `K_n` joined by a perfect matching.
    MatchedCliques(usize),
    /// `T_n`: `K_n+E_n` plus an apex on the `E_n` side.
    CappedSplit(usize),
    /// `K_n^m`: `m` pendants on every vertex of `K_n`.
    CliqueWithPendants(usize, usize),
    /// `K_2+nK_1`
    EdgeJoinStable(usize),
    /// `K_1+nK_2`
    ApexMatching(usize),
    /// `K_1+nP_3`
    ApexPaths(usize),
    /// `E_2+K_n`
    PairJoinClique(usize),
    /// `K_n+E_m`
    SplitJoin(usize, usize),
    /// `nP_3`
    DisjointPaths3(usize),
    /// `nK_3`
    DisjointTriangles(usize),
    /// `kK_{1,m}`
    DisjointStars(usize, usize),
}

impl From<GraphName> for String {
    fn from(name: GraphName) -> String {
        name.to_string()
    }
}

impl TryFrom<String> for GraphName {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl fmt::Display for GraphName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphName::*;
        match *self {
            Complete(n) => write!(f, "K{n}"),
            Edgeless(n) => write!(f, "E{n}"),
            Path(n) => write!(f, "P{n}"),
            Cycle(n) => write!(f, "C{n}"),
            Biclique(s, t) => write!(f, "K{s},{t}"),
            SubdividedStar(n) => write!(f, "K1,{n}*"),
            Corona(n) => write!(f, "K{n}*"),
            MatchedCliques(n) => write!(f, "CK{n}"),
            CappedSplit(n) => write!(f, "T{n}"),
            CliqueWithPendants(n, m) => write!(f, "K{n}^{m}"),
            EdgeJoinStable(n) => write!(f, "K2+{n}K1"),
            ApexMatching(n) => write!(f, "K1+{n}K2"),
            ApexPaths(n) => write!(f, "K1+{n}P3"),
            PairJoinClique(n) => write!(f, "E2+K{n}"),
            SplitJoin(n, m) => write!(f, "K{n}+E{m}"),
            DisjointPaths3(n) => write!(f, "{n}P3"),
            DisjointTriangles(n) => write!(f, "{n}K3"),
            DisjointStars(k, m) => write!(f, "{k}K1,{m}"),
        }
    }
}

type Ctor = fn(&[usize]) -> GraphName;

fn name_table() -> &'static [(Regex, Ctor)] {
    static TABLE: OnceLock<Vec<(Regex, Ctor)>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let rows: [(&str, Ctor); 18] = [
            (r"^K(\d+)$", |p| GraphName::Complete(p[0])),
            (r"^E(\d+)$", |p| GraphName::Edgeless(p[0])),
            (r"^P(\d+)$", |p| GraphName::Path(p[0])),
            (r"^C(\d+)$", |p| GraphName::Cycle(p[0])),
            (r"^K(\d+),(\d+)$", |p| GraphName::Biclique(p[0], p[1])),
            (r"^K1,(\d+)\*$", |p| GraphName::SubdividedStar(p[0])),
            (r"^K(\d+)\*$", |p| GraphName::Corona(p[0])),
            (r"^CK(\d+)$", |p| GraphName::MatchedCliques(p[0])),
            (r"^T(\d+)$", |p| GraphName::CappedSplit(p[0])),
            (r"^K(\d+)\^(\d+)$", |p| GraphName::CliqueWithPendants(p[0], p[1])),
            (r"^K2\+(\d+)K1$", |p| GraphName::EdgeJoinStable(p[0])),
            (r"^K1\+(\d+)K2$", |p| GraphName::ApexMatching(p[0])),
            (r"^K1\+(\d+)P3$", |p| GraphName::ApexPaths(p[0])),
            (r"^E2\+K(\d+)$", |p| GraphName::PairJoinClique(p[0])),
            (r"^K(\d+)\+E(\d+)$", |p| GraphName::SplitJoin(p[0], p[1])),
            (r"^(\d+)P3$", |p| GraphName::DisjointPaths3(p[0])),
            (r"^(\d+)K3$", |p| GraphName::DisjointTriangles(p[0])),
            (r"^(\d+)K1,(\d+)$", |p| GraphName::DisjointStars(p[0], p[1])),
        ];
        rows.into_iter()
            .map(|(re, ctor)| (Regex::new(re).expect("static pattern"), ctor))
            .collect()
    })
}

impl FromStr for GraphName {
    type Err = Error;

    /// Parses the canonical syntax, e.g. `K5`, `K1,4*`, `CK3`, `K3^3`, `3K1,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        for (re, ctor) in name_table() {
            if let Some(caps) = re.captures(s) {
                let params: Vec<usize> = caps
                    .iter()
                    .skip(1)
                    .flatten()
                    .map(|m| m.as_str().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::BadGraphName(s.to_string()))?;
                return Ok(ctor(&params));
            }
        }
        Err(Error::BadGraphName(s.to_string()))
    }
}

fn positive(name: GraphName, params: &[usize]) -> Result<()> {
    if params.contains(&0) {
        return Err(Error::BadParameter(format!("{name}: parameters must be positive")));
    }
    Ok(())
}

fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        for u in 0..v {
            b.add_edge(u, v).expect("in range");
        }
    }
    b.build()
}

fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v - 1, v).expect("in range");
    }
    b.build()
}

fn biclique(s: usize, t: usize) -> Graph {
    join_graphs(&Graph::empty(s), &Graph::empty(t))
}

fn clique_with_pendants(n: usize, m: usize) -> Graph {
    let mut b = GraphBuilder::from_graph(&complete(n));
    for i in 0..n {
        for _ in 0..m {
            let p = b.add_vertex();
            b.add_edge(i, p).expect("in range");
        }
    }
    b.build()
}

impl GraphName {
    /// Builds the graph with the documented labeling.
    pub fn build(&self) -> Result<Graph> {
        use GraphName::*;
        let name = *self;
        let g = match name {
            Complete(n) | Edgeless(n) | Path(n) | SubdividedStar(n) | Corona(n) | MatchedCliques(n)
            | CappedSplit(n) | EdgeJoinStable(n) | ApexMatching(n) | ApexPaths(n) | PairJoinClique(n)
            | DisjointPaths3(n) | DisjointTriangles(n) => {
                positive(name, &[n])?;
                match name {
                    Complete(_) => complete(n),
                    Edgeless(_) => Graph::empty(n),
                    Path(_) => path(n),
                    SubdividedStar(_) => {
                        let mut b = GraphBuilder::new(2 * n + 1);
                        for i in 1..=n {
                            b.add_edge(0, i)?.add_edge(i, n + i)?;
                        }
                        b.build()
                    }
                    Corona(_) => clique_with_pendants(n, 1),
                    MatchedCliques(_) => {
                        let mut b = GraphBuilder::from_graph(&disjoint_copies(2, &complete(n)));
                        for i in 0..n {
                            b.add_edge(i, n + i)?;
                        }
                        b.build()
                    }
                    CappedSplit(_) => {
                        let mut b = GraphBuilder::from_graph(&join_graphs(&complete(n), &Graph::empty(n)));
                        let apex = b.add_vertex();
                        for i in n..2 * n {
                            b.add_edge(i, apex)?;
                        }
                        b.build()
                    }
                    EdgeJoinStable(_) => join_graphs(&complete(2), &Graph::empty(n)),
                    ApexMatching(_) => join_graphs(&Graph::empty(1), &disjoint_copies(n, &complete(2))),
                    ApexPaths(_) => join_graphs(&Graph::empty(1), &disjoint_copies(n, &path(3))),
                    PairJoinClique(_) => join_graphs(&Graph::empty(2), &complete(n)),
                    DisjointPaths3(_) => disjoint_copies(n, &path(3)),
                    DisjointTriangles(_) => disjoint_copies(n, &complete(3)),
                    _ => unreachable!(),
                }
            }
            Cycle(n) => {
                if n < 3 {
                    return Err(Error::BadParameter(format!("C{n}: a cycle needs at least 3 vertices")));
                }
                let mut b = GraphBuilder::from_graph(&path(n));
                b.add_edge(0, n - 1)?;
                b.build()
            }
            Biclique(s, t) => {
                positive(name, &[s, t])?;
                biclique(s, t)
            }
            CliqueWithPendants(n, m) => {
                positive(name, &[n, m])?;
                clique_with_pendants(n, m)
            }
            SplitJoin(n, m) => {
                positive(name, &[n, m])?;
                join_graphs(&complete(n), &Graph::empty(m))
            }
            DisjointStars(k, m) => {
                positive(name, &[k, m])?;
                disjoint_copies(k, &biclique(1, m))
            }
        };
        Ok(g)
    }
}

/// Convenience wrapper around [`GraphName::build`].
pub fn named_graph(name: GraphName) -> Result<Graph> {
    name.build()
}

/// Identifiers of the characterizations whose families are built here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "deg")]
    Deg,
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "c")]
    C,
    #[serde(rename = "adh")]
    Adh,
    /// Bounded (connected) domination number.
    #[serde(rename = "dom")]
    Dom,
    #[serde(rename = "h-deg")]
    HDeg,
    #[serde(rename = "h-alpha")]
    HAlpha,
    #[serde(rename = "h-c")]
    HC,
    #[serde(rename = "h-adh")]
    HAdh,
    #[serde(rename = "cor-deg")]
    CorDeg,
    #[serde(rename = "cor-alpha")]
    CorAlpha,
    #[serde(rename = "cor-c")]
    CorC,
    #[serde(rename = "cor-adh")]
    CorAdh,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Deg,
        TheoremId::Alpha,
        TheoremId::C,
        TheoremId::Adh,
        TheoremId::Dom,
        TheoremId::HDeg,
        TheoremId::HAlpha,
        TheoremId::HC,
        TheoremId::HAdh,
        TheoremId::CorDeg,
        TheoremId::CorAlpha,
        TheoremId::CorC,
        TheoremId::CorAdh,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Deg => "deg",
            TheoremId::Alpha => "alpha",
            TheoremId::C => "c",
            TheoremId::Adh => "adh",
            TheoremId::Dom => "dom",
            TheoremId::HDeg => "h-deg",
            TheoremId::HAlpha => "h-alpha",
            TheoremId::HC => "h-c",
            TheoremId::HAdh => "h-adh",
            TheoremId::CorDeg => "cor-deg",
            TheoremId::CorAlpha => "cor-alpha",
            TheoremId::CorC => "cor-c",
            TheoremId::CorAdh => "cor-adh",
        }
    }

    /// The vertex parameter whose nontrivial count the statement bounds.
    /// `None` for the domination statement, which bounds a graph parameter.
    pub fn param_kind(self) -> Option<ParamKind> {
        use TheoremId::*;
        match self {
            Deg | HDeg | CorDeg => Some(ParamKind::Degree),
            Alpha | HAlpha | CorAlpha => Some(ParamKind::LocalIndependence),
            C | HC | CorC => Some(ParamKind::LocalComponents),
            Adh | HAdh | CorAdh => Some(ParamKind::Adhesion),
            Dom => None,
        }
    }

    /// Statements quantified over connected graphs only.
    pub fn requires_connected(self) -> bool {
        matches!(
            self,
            TheoremId::Deg | TheoremId::Alpha | TheoremId::C | TheoremId::Adh | TheoremId::Dom
        )
    }

    pub fn is_h_index(self) -> bool {
        matches!(
            self,
            TheoremId::HDeg | TheoremId::HAlpha | TheoremId::HC | TheoremId::HAdh
        )
    }

    pub fn is_corollary(self) -> bool {
        matches!(
            self,
            TheoremId::CorDeg | TheoremId::CorAlpha | TheoremId::CorC | TheoremId::CorAdh
        )
    }

    /// Member names of the family at parameter `n`, in statement order.
    pub fn member_names(self, n: usize) -> Vec<GraphName> {
        use GraphName::*;
        match self {
            TheoremId::Deg => vec![
                Complete(n),
                Path(n),
                SubdividedStar(n),
                Biclique(2, n),
                EdgeJoinStable(n),
                ApexMatching(n),
            ],
            TheoremId::Alpha => vec![
                Corona(n),
                Path(n),
                SubdividedStar(n),
                Biclique(2, n),
                PairJoinClique(n),
                ApexPaths(n),
                MatchedCliques(n),
            ],
            TheoremId::C => vec![
                Corona(n),
                Path(n),
                SubdividedStar(n),
                Biclique(2, n),
                MatchedCliques(n),
                CappedSplit(n),
            ],
            TheoremId::Adh => vec![Corona(n), SubdividedStar(n), Path(n)],
            TheoremId::Dom => vec![SubdividedStar(n), Corona(n), Path(n)],
            TheoremId::HDeg => vec![Complete(n), Biclique(n, n), DisjointStars(n, n)],
            TheoremId::HAlpha | TheoremId::HC => vec![
                Biclique(n, n),
                DisjointStars(n, n),
                SplitJoin(n, n),
                CliqueWithPendants(n, n),
            ],
            TheoremId::HAdh => vec![DisjointStars(n, n), CliqueWithPendants(n, n)],
            TheoremId::CorDeg => vec![
                Complete(n),
                DisjointPaths3(n),
                DisjointTriangles(n),
                SubdividedStar(n),
                Biclique(2, n),
                EdgeJoinStable(n),
                ApexMatching(n),
            ],
            TheoremId::CorAlpha => vec![
                Corona(n),
                DisjointPaths3(n),
                SubdividedStar(n),
                Biclique(2, n),
                PairJoinClique(n),
                MatchedCliques(n),
            ],
            TheoremId::CorC => vec![
                Corona(n),
                DisjointPaths3(n),
                SubdividedStar(n),
                Biclique(2, n),
                MatchedCliques(n),
                CappedSplit(n),
            ],
            TheoremId::CorAdh => vec![Corona(n), DisjointPaths3(n), SubdividedStar(n)],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s.trim())
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Member {
    pub name: GraphName,
    #[serde(skip)]
    pub graph: Graph,
}

impl Member {
    pub fn new(name: GraphName) -> Result<Self> {
        Ok(Self {
            name,
            graph: name.build()?,
        })
    }
}

/// A finite forbidden family, either from a statement or ad hoc.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub theorem_id: Option<TheoremId>,
    pub n: usize,
    pub members: Vec<Member>,
}

impl FamilySpec {
    /// An ad hoc family from a list of names.
    pub fn from_names(names: &[GraphName]) -> Result<Self> {
        Ok(Self {
            theorem_id: None,
            n: 0,
            members: names.iter().map(|&nm| Member::new(nm)).collect::<Result<_>>()?,
        })
    }

    pub fn names(&self) -> Vec<GraphName> {
        self.members.iter().map(|m| m.name).collect()
    }
}

/// The family of the given statement at parameter `n`.
pub fn theorem_family(theorem: TheoremId, n: usize) -> Result<FamilySpec> {
    if n == 0 {
        return Err(Error::BadParameter("family parameter n must be positive".into()));
    }
    let members = theorem
        .member_names(n)
        .into_iter()
        .map(Member::new)
        .collect::<Result<_>>()?;
    Ok(FamilySpec {
        theorem_id: Some(theorem),
        n,
        members,
    })
}

/// Parses `thm:n`, e.g. `deg:4`.
pub fn parse_family(spec: &str) -> Result<FamilySpec> {
    let (thm, n) = spec
        .split_once(':')
        .ok_or_else(|| Error::BadParameter(format!("expected <theorem>:<n>, got `{spec}`")))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| Error::BadParameter(format!("bad family parameter in `{spec}`")))?;
    theorem_family(thm.parse()?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_edge_counts() {
        use GraphName::*;
        for n in 1..7 {
            assert_eq!(SubdividedStar(n).build().unwrap().order(), 2 * n + 1);
            assert_eq!(Corona(n).build().unwrap().order(), 2 * n);
            assert_eq!(MatchedCliques(n).build().unwrap().order(), 2 * n);
            assert_eq!(CappedSplit(n).build().unwrap().order(), 2 * n + 1);
            assert_eq!(CliqueWithPendants(n, n).build().unwrap().order(), n * n + n);
        }
        let t3 = CappedSplit(3).build().unwrap();
        assert_eq!(t3.degree(6), 3);
        assert!((3..6).all(|v| t3.has_edge(v, 6)));
        let k22 = CliqueWithPendants(2, 2).build().unwrap();
        assert_eq!((k22.order(), k22.edge_count()), (6, 5));
        let ck2 = MatchedCliques(2).build().unwrap();
        assert!(ck2.vertices().iter().all(|v| ck2.degree(v) == 2));
        assert!(ck2.is_connected());
    }

    #[test]
    fn name_syntax_round_trips() {
        for s in [
            "K5", "E5", "P7", "C5", "K2,3", "K1,4*", "K4*", "CK3", "T3", "K3^3", "K2+4K1", "K1+4K2", "K1+3P3", "E2+K3",
            "K3+E3", "3P3", "3K3", "3K1,3",
        ] {
            let name: GraphName = s.parse().unwrap();
            assert_eq!(name.to_string(), s);
        }
        assert_eq!("K1,4".parse::<GraphName>().unwrap(), GraphName::Biclique(1, 4));
        assert!(matches!("Q3".parse::<GraphName>(), Err(Error::BadGraphName(_))));
        assert!(matches!(GraphName::Cycle(2).build(), Err(Error::BadParameter(_))));
        assert!(matches!(GraphName::Complete(0).build(), Err(Error::BadParameter(_))));
    }

    #[test]
    fn families() {
        let deg = theorem_family(TheoremId::Deg, 4).unwrap();
        assert_eq!(
            deg.names().iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["K4", "P4", "K1,4*", "K2,4", "K2+4K1", "K1+4K2"]
        );
        assert_eq!(theorem_family(TheoremId::Adh, 3).unwrap().members.len(), 3);
        let hadh = theorem_family(TheoremId::HAdh, 2).unwrap();
        assert_eq!(
            hadh.names().iter().map(ToString::to_string).collect::<Vec<_>>(),
            ["2K1,2", "K2^2"]
        );
        assert!(matches!("nope:3".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
        assert_eq!(parse_family("h-c:3").unwrap().theorem_id, Some(TheoremId::HC));
    }
}
