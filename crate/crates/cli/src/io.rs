//! Text objects for digraphs (djson) and signed graphs (sjson).
//!
//! djson: `{"n":3,"arcs":[[0,1],[1,2],[2,0]],"name":"C3"}`, arcs sorted.
//! sjson: `{"n":3,"edges":[[0,1],[0,2],[1,2]],"signs":[1,-1,1]}`, edges
//! with u < v in lexicographic order and one ±1 sign per edge.

use serde::{Deserialize, Serialize};
use wiener_core::{Graph, MAX_ORDER};
use wiener_orient::Digraph;
use wiener_signed::SignedGraph;

use crate::error::{CliError, CliResult};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct DigraphDoc {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SignedDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub signs: Vec<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

fn schema(what: &'static str, msg: impl Into<String>) -> CliError {
    CliError::Schema { what, msg: msg.into() }
}

fn check_order(what: &'static str, n: usize) -> CliResult<()> {
    if n > MAX_ORDER {
        return Err(schema(what, format!("field n: {n} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

fn parse<T: for<'de> Deserialize<'de>>(what: &'static str, text: &str) -> CliResult<T> {
    serde_json::from_str(text).map_err(|e| schema(what, format!("line {} column {}: {e}", e.line(), e.column())))
}

pub fn read_djson(text: &str) -> CliResult<(Digraph, Option<String>)> {
    const W: &str = "djson";
    let doc: DigraphDoc = parse(W, text)?;
    check_order(W, doc.n)?;
    let mut d = Digraph::new(doc.n);
    for (i, &[u, v]) in doc.arcs.iter().enumerate() {
        if u >= doc.n || v >= doc.n {
            return Err(schema(W, format!("field arcs[{i}]: vertex out of range for n = {}", doc.n)));
        }
        if u == v {
            return Err(schema(W, format!("field arcs[{i}]: loop at {u}")));
        }
        if d.has_arc(u, v) {
            return Err(schema(W, format!("field arcs[{i}]: repeated arc ({u}, {v})")));
        }
        d.add_arc(u, v);
    }
    Ok((d, doc.name))
}

pub fn write_djson(d: &Digraph, name: Option<&str>) -> String {
    let doc = DigraphDoc { n: d.order(), arcs: d.arcs().map(|(u, v)| [u, v]).collect(), name: name.map(str::to_owned) };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}

pub fn read_sjson(text: &str) -> CliResult<(SignedGraph, Option<String>)> {
    const W: &str = "sjson";
    let doc: SignedDoc = parse(W, text)?;
    check_order(W, doc.n)?;
    if doc.signs.len() != doc.edges.len() {
        return Err(schema(W, format!("field signs: {} signs for {} edges", doc.signs.len(), doc.edges.len())));
    }
    let mut g = Graph::new(doc.n);
    let mut prev: Option<[usize; 2]> = None;
    for (i, &[u, v]) in doc.edges.iter().enumerate() {
        if u >= v || v >= doc.n {
            return Err(schema(W, format!("field edges[{i}]: need u < v < n, got ({u}, {v})")));
        }
        if prev.is_some_and(|p| p >= [u, v]) {
            return Err(schema(W, format!("field edges[{i}]: edges must be strictly lexicographic")));
        }
        prev = Some([u, v]);
        g.add_edge(u, v);
    }
    if let Some(i) = doc.signs.iter().position(|s| s.abs() != 1) {
        return Err(schema(W, format!("field signs[{i}]: {} is not ±1", doc.signs[i])));
    }
    Ok((SignedGraph::from_signs(&g, &doc.signs)?, doc.name))
}

pub fn write_sjson(s: &SignedGraph, name: Option<&str>) -> String {
    let doc = SignedDoc {
        n: s.order(),
        edges: s.edges().iter().map(|&(u, v)| [u, v]).collect(),
        signs: s.signs(),
        name: name.map(str::to_owned),
    };
    serde_json::to_string(&doc).expect("plain data serializes") + "\n"
}
