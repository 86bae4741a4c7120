//! Text, JSON and DOT formats.
//!
//! Text graphs start with `graph <n>` or `bigraph <nx> <ny>` followed by one
//! 0-based edge per line; lines starting with `#` are comments. JSON mirrors
//! are `{"n", "edges"}` and `{"nx", "ny", "edges"}`. Writers always emit
//! edges sorted, so output is deterministic.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::FormatError;
use crate::graph::{BipartiteGraph, Graph};
use crate::halfsquare::{ClassTag, RecognitionOutcome, RootCertificate, StarCenter, Witness};
use crate::hardness::BalancedBisplitRoot;
use crate::recognition::{BisplitPartition, DoublyLexOrdering, Obstruction, SideOrdering};

/// A parsed input of either kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Graph(Graph),
    Bigraph(BipartiteGraph),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct BigraphJson {
    nx: usize,
    ny: usize,
    edges: Vec<(usize, usize)>,
}

impl From<&BipartiteGraph> for BigraphJson {
    fn from(b: &BipartiteGraph) -> Self {
        BigraphJson {
            nx: b.nx(),
            ny: b.ny(),
            edges: b.edges(),
        }
    }
}

impl TryFrom<BigraphJson> for BipartiteGraph {
    type Error = FormatError;

    fn try_from(j: BigraphJson) -> Result<Self, FormatError> {
        Ok(BipartiteGraph::from_edges(j.nx, j.ny, j.edges)?)
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn number(line: usize, tok: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| {
        FormatError::parse(
            line,
            format!("expected a non-negative integer, got '{tok}'"),
        )
    })
}

fn pair(line: usize, toks: &[&str]) -> Result<(usize, usize), FormatError> {
    match toks {
        [a, b] => Ok((number(line, a)?, number(line, b)?)),
        _ => Err(FormatError::parse(line, "expected two vertex ids")),
    }
}

/// Parses the text format of either kind, or its JSON mirror when the input
/// starts with `{`.
pub fn parse_any(text: &str) -> Result<AnyGraph, FormatError> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text)?;
        return if value.get("nx").is_some() {
            Ok(AnyGraph::Bigraph(
                serde_json::from_value::<BigraphJson>(value)?.try_into()?,
            ))
        } else {
            graph_from_json_value(value).map(AnyGraph::Graph)
        };
    }
    let mut lines = data_lines(text);
    let (hl, header) = lines
        .next()
        .ok_or_else(|| FormatError::parse(1, "missing 'graph' or 'bigraph' header"))?;
    let edges = lines
        .map(|(l, toks)| pair(l, &toks))
        .collect::<Result<Vec<_>, _>>()?;
    match header.as_slice() {
        ["graph", n] => Ok(AnyGraph::Graph(Graph::from_edges(number(hl, n)?, edges)?)),
        ["bigraph", nx, ny] => Ok(AnyGraph::Bigraph(BipartiteGraph::from_edges(
            number(hl, nx)?,
            number(hl, ny)?,
            edges,
        )?)),
        _ => Err(FormatError::parse(
            hl,
            "header must be 'graph <n>' or 'bigraph <nx> <ny>'",
        )),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    match parse_any(text)? {
        AnyGraph::Graph(g) => Ok(g),
        AnyGraph::Bigraph(_) => Err(FormatError::Invalid(
            "expected a graph, found a bipartite graph".into(),
        )),
    }
}

pub fn parse_bigraph(text: &str) -> Result<BipartiteGraph, FormatError> {
    match parse_any(text)? {
        AnyGraph::Bigraph(b) => Ok(b),
        AnyGraph::Graph(_) => Err(FormatError::Invalid(
            "expected a bipartite graph, found a graph".into(),
        )),
    }
}

fn graph_from_json_value(value: serde_json::Value) -> Result<Graph, FormatError> {
    let j: GraphJson = serde_json::from_value(value)?;
    let g = Graph::from_edges(j.n, j.edges)?;
    Ok(match j.labels {
        Some(labels) => g.with_labels(labels)?,
        None => g,
    })
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn bigraph_to_text(b: &BipartiteGraph) -> String {
    let mut out = format!("bigraph {} {}\n", b.nx(), b.ny());
    for (x, y) in b.edges() {
        writeln!(out, "{x} {y}").unwrap();
    }
    out
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    serde_json::to_value(GraphJson {
        n: g.n(),
        edges: g.edges(),
        labels: g.labels().map(|l| l.to_vec()),
    })
    .expect("graph serializes")
}

pub fn bigraph_to_json(b: &BipartiteGraph) -> serde_json::Value {
    serde_json::to_value(BigraphJson::from(b)).expect("bipartite graph serializes")
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v} [label={}];", dot_id(&g.label(v))).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// DOT rendering with X-vertices `x<i>` and Y-vertices `y<j>` drawn as
/// boxes.
pub fn bigraph_to_dot(b: &BipartiteGraph) -> String {
    let mut out = String::from("graph B {\n");
    for x in 0..b.nx() {
        writeln!(out, "  x{x} [label=\"x{x}\"];").unwrap();
    }
    for y in 0..b.ny() {
        writeln!(out, "  y{y} [label=\"y{y}\", shape=box];").unwrap();
    }
    for (x, y) in b.edges() {
        writeln!(out, "  x{x} -- y{y};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Flat certificate schema. Fields that do not apply to the witness kind
/// are empty lists or null.
#[derive(Serialize, Deserialize)]
struct CertificateJson {
    class: ClassTag,
    witness_kind: String,
    #[serde(default)]
    orderings: Vec<SideOrdering>,
    #[serde(default)]
    center: Vec<StarCenter>,
    #[serde(default)]
    partition: Option<BisplitPartition>,
    #[serde(default)]
    doubly_lexical: Option<DoublyLexOrdering>,
    #[serde(default)]
    forest: Option<bool>,
    root: BigraphJson,
}

pub fn certificate_to_json(cert: &RootCertificate) -> serde_json::Value {
    let mut j = CertificateJson {
        class: cert.class,
        witness_kind: cert.witness.kind().to_string(),
        orderings: Vec::new(),
        center: Vec::new(),
        partition: None,
        doubly_lexical: None,
        forest: None,
        root: BigraphJson::from(&cert.root),
    };
    match &cert.witness {
        Witness::StarCenters(c) => j.center = c.clone(),
        Witness::Orderings(o) => j.orderings = o.clone(),
        Witness::DoublyLexical(d) => j.doubly_lexical = Some(d.clone()),
        Witness::Tree { forest } => j.forest = Some(*forest),
        Witness::Bisplit(p) => j.partition = Some(p.clone()),
    }
    serde_json::to_value(j).expect("certificate serializes")
}

pub fn certificate_from_json(text: &str) -> Result<RootCertificate, FormatError> {
    let j: CertificateJson = serde_json::from_str(text)?;
    let missing = |what: &str| FormatError::Invalid(format!("certificate lacks '{what}'"));
    let witness = match j.witness_kind.as_str() {
        "star_center" => Witness::StarCenters(j.center),
        "side_orderings" => Witness::Orderings(j.orderings),
        "doubly_lexical" => {
            Witness::DoublyLexical(j.doubly_lexical.ok_or_else(|| missing("doubly_lexical"))?)
        }
        "tree" => Witness::Tree {
            forest: j.forest.ok_or_else(|| missing("forest"))?,
        },
        "bisplit_partition" => Witness::Bisplit(j.partition.ok_or_else(|| missing("partition"))?),
        other => {
            return Err(FormatError::Invalid(format!(
                "unknown witness kind '{other}'"
            )));
        }
    };
    Ok(RootCertificate {
        class: j.class,
        root: j.root.try_into()?,
        witness,
    })
}

pub fn obstruction_to_json(o: &Obstruction) -> serde_json::Value {
    serde_json::json!({ "kind": o.kind, "witness": o.witness })
}

/// `{"verdict": "yes", "certificate": ...}` or
/// `{"verdict": "no", "obstruction": {"kind", "witness"}}`.
pub fn outcome_to_json(out: &RecognitionOutcome) -> serde_json::Value {
    match out {
        RecognitionOutcome::Yes(c) => {
            serde_json::json!({ "verdict": "yes", "certificate": certificate_to_json(c) })
        }
        RecognitionOutcome::No(o) => {
            serde_json::json!({ "verdict": "no", "obstruction": obstruction_to_json(o) })
        }
    }
}

#[derive(Serialize, Deserialize)]
struct BisplitRootJson {
    root: BigraphJson,
    partition: BisplitPartition,
}

pub fn bisplit_root_to_json(r: &BalancedBisplitRoot) -> serde_json::Value {
    serde_json::to_value(BisplitRootJson {
        root: BigraphJson::from(&r.b),
        partition: r.partition.clone(),
    })
    .expect("bisplit root serializes")
}

/// Reads `{"root", "partition"}`. A bare bipartite graph (text or JSON) is
/// also accepted; its partition is then recomputed.
pub fn bisplit_root_from_text(text: &str) -> Result<BalancedBisplitRoot, FormatError> {
    if let Ok(j) = serde_json::from_str::<BisplitRootJson>(text) {
        return Ok(BalancedBisplitRoot {
            b: j.root.try_into()?,
            partition: j.partition,
        });
    }
    let b = parse_bigraph(text)?;
    BalancedBisplitRoot::from_bipartite(b)
        .ok_or_else(|| FormatError::Invalid("bipartite graph is not balanced bisplit".into()))
}

/// JSON rendering with a trailing newline, stable across runs.
pub fn to_pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Side;
    use crate::halfsquare::{hs_biconvex, hs_chordal_bipartite, hs_star_biconvex, hs_tree};

    #[test]
    fn text_round_trip() {
        let text = "# P4\ngraph 4\n2 3\n0 1\n\n1 2\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::path(4));
        assert_eq!(graph_to_text(&g), "graph 4\n0 1\n1 2\n2 3\n");
        let b = parse_bigraph("bigraph 2 1\n1 0\n0 0\n").unwrap();
        assert_eq!(bigraph_to_text(&b), "bigraph 2 1\n0 0\n1 0\n");
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(5);
        let j = graph_to_json(&g).to_string();
        assert_eq!(parse_graph(&j).unwrap(), g);
        let b = crate::graph::subdivision(&g);
        assert_eq!(parse_bigraph(&bigraph_to_json(&b).to_string()).unwrap(), b);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_graph("graph 3\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(err, FormatError::Parse { line: 3, .. }));
        assert!(parse_graph("graph 2\n0 2\n").is_err());
        assert!(parse_graph("graph 2\n1 1\n").is_err());
        assert!(parse_graph("# only comments\n").is_err());
        assert!(parse_graph("digraph 2\n").is_err());
        assert!(parse_graph("bigraph 1 1\n0 0\n").is_err());
    }

    #[test]
    fn certificates_round_trip() {
        let p4 = Graph::path(4);
        let k3 = Graph::complete(3);
        let certs = [
            hs_biconvex(&p4).certificate().unwrap().clone(),
            hs_chordal_bipartite(&p4).certificate().unwrap().clone(),
            hs_star_biconvex(&k3).certificate().unwrap().clone(),
            hs_tree(&k3, false).certificate().unwrap().clone(),
        ];
        for c in certs {
            let text = to_pretty(&certificate_to_json(&c));
            assert_eq!(certificate_from_json(&text).unwrap(), c);
        }
    }

    #[test]
    fn certificate_schema_is_flat() {
        let cert = hs_star_biconvex(&Graph::complete(3))
            .certificate()
            .unwrap()
            .clone();
        let j = certificate_to_json(&cert);
        assert_eq!(j["class"], "star_biconvex");
        assert_eq!(j["witness_kind"], "star_center");
        assert_eq!(j["center"][0]["side"], "x");
        assert_eq!(j["root"]["nx"], 3);
        assert!(j["partition"].is_null());
        assert_eq!(cert.root.side_len(Side::Y), 1);
    }

    #[test]
    fn dot_output_mentions_every_edge() {
        let dot = graph_to_dot(&Graph::path(3));
        assert!(dot.contains("0 -- 1") && dot.contains("1 -- 2"));
        let dot = bigraph_to_dot(&crate::graph::subdivision(&Graph::path(2)));
        assert!(dot.contains("x1 -- y0"));
    }
}
