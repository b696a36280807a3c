//! Subcommand bodies. Each returns report rows (or text lines) so the
//! binary only parses flags and prints.

use std::io::Read;

use serde_json::{json, Value};
use wiener_core::{
    blocks, chromatic_number, diameter, eccentricity_profile, radius, wiener, wiener_dimension, Graph, Shard,
};
use wiener_enumerate::{connected_graphs_sharded, ClassFilter, Direction, SearchRecord};
use wiener_families::FamilySpec;
use wiener_orient::{
    digraph_wiener, enumerate_orientations, max_orientation_wiener, min_chromatic_induced_wiener, tau, Digraph,
    TauConvention, ORIENTATION_EDGE_LIMIT,
};
use wiener_signed::{exists_k_canceling, is_k_canceling, min_signed_wiener, signed_wiener, SignedGraph};
use wiener_soltes::soltes_profile;
use wiener_varindex::{cambie_haslegrave_profile, critical_exponents, szeged, IndexProfile, ScanParams};

use crate::error::{CliError, CliResult};
use crate::graph6;
use crate::io::{read_djson, read_sjson};
use crate::report::Row;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Contents of a file, or of stdin for `-`.
pub fn read_input(path: &str) -> CliResult<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

/// Graphs from graph6 text or a family spec such as `theta:3,2,1`.
pub fn load_graphs(input: Option<&str>, family: Option<&str>) -> CliResult<Vec<Graph>> {
    match (input, family) {
        (_, Some(f)) => Ok(vec![FamilySpec::parse(f)?.build()?]),
        (Some(path), None) => graph6::decode_lines(&read_input(path)?),
        (None, None) => Err(usage("give an input file, '-' for stdin, or --family")),
    }
}

fn obj(v: Value) -> Row {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("json! object literal"),
    }
}

fn or_null<T: Into<Value>>(r: wiener_core::Result<T>) -> Value {
    r.map_or(Value::Null, Into::into)
}

pub fn invariant(graphs: &[Graph], which: &[String]) -> CliResult<Vec<Row>> {
    for w in which {
        if !["w", "sz", "dim", "ecc", "blocks"].contains(&w.as_str()) {
            return Err(usage(format!("unknown invariant {w:?}; choose from w,sz,dim,ecc,blocks")));
        }
    }
    let want = |k: &str| which.iter().any(|w| w == k);
    graphs
        .iter()
        .map(|g| {
            let mut r = obj(json!({ "graph6": graph6::encode(g)?, "n": g.order(), "m": g.edge_count() }));
            if want("w") {
                r.insert("w".into(), or_null(wiener(g)));
            }
            if want("sz") {
                r.insert("sz".into(), or_null(szeged(g)));
            }
            if want("dim") {
                r.insert("dim".into(), or_null(wiener_dimension(g)));
            }
            if want("ecc") {
                let e = eccentricity_profile(g).ok();
                r.insert("diameter".into(), e.as_ref().map_or(Value::Null, |e| e.diameter.into()));
                r.insert("radius".into(), e.as_ref().map_or(Value::Null, |e| e.radius.into()));
                r.insert("eccentricities".into(), e.map_or(Value::Null, |e| json!(e.per_vertex)));
            }
            if want("blocks") {
                let b = blocks(g);
                r.insert("blocks".into(), b.len().into());
                r.insert("cut_vertices".into(), json!(wiener_core::bits(b.cut_vertices).collect::<Vec<_>>()));
            }
            Ok(r)
        })
        .collect()
}

/// Comma-separated class: connected, chemical, tree, biconnected,
/// maxdeg=D, regular=K, diameter=D, radius=R, blocks=P, circ=C.
pub fn parse_filter(spec: &str) -> CliResult<ClassFilter> {
    let mut f = ClassFilter::connected();
    for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, val) = part.split_once('=').map_or((part, None), |(k, v)| (k.trim(), Some(v.trim())));
        let num = || -> CliResult<usize> {
            val.ok_or_else(|| usage(format!("{key} needs =value")))?.parse().map_err(|_| usage(format!("bad value in {part:?}")))
        };
        f = match key {
            "connected" => f,
            "chemical" => f.with_max_degree(4),
            "tree" => ClassFilter { tree: true, ..f },
            "biconnected" => f.biconnected(),
            "maxdeg" => f.with_max_degree(num()?),
            "regular" => f.with_regular(num()?),
            "diameter" => f.with_diameter(num()? as u32),
            "radius" => f.with_radius(num()? as u32),
            "blocks" => f.with_blocks(num()?),
            "circ" => f.with_max_circumference(num()?),
            _ => return Err(usage(format!("unknown filter {key:?}"))),
        };
    }
    Ok(f)
}

pub fn objective(name: &str, g: &Graph) -> CliResult<u64> {
    Ok(match name {
        "w" => wiener(g)?,
        "sz" => szeged(g)?,
        "dim" => wiener_dimension(g)? as u64,
        "diameter" => diameter(g)? as u64,
        "radius" => radius(g)? as u64,
        "blocks" => blocks(g).len() as u64,
        _ => return Err(usage(format!("unknown objective {name:?}; choose from w,sz,dim,diameter,radius,blocks"))),
    })
}

pub enum EnumerateMode {
    Count,
    Emit,
    Extremal { objective: String, direction: Direction },
}

pub enum EnumerateOutput {
    Lines(Vec<String>),
    Rows(Vec<Row>),
}

pub fn enumerate(n: usize, filter_spec: &str, shard: Shard, mode: EnumerateMode) -> CliResult<EnumerateOutput> {
    let filter = parse_filter(filter_spec)?;
    let mut err: Option<CliError> = None;
    match mode {
        EnumerateMode::Count => {
            let visited = connected_graphs_sharded(n, &filter, shard, |_| {})?;
            Ok(EnumerateOutput::Rows(vec![obj(json!({
                "n": n, "filter": filter_spec, "shard": format!("{}/{}", shard.index, shard.total), "visited": visited
            }))]))
        }
        EnumerateMode::Emit => {
            let mut lines = vec![];
            connected_graphs_sharded(n, &filter, shard, |g| match graph6::encode(g) {
                Ok(s) => lines.push(s),
                Err(e) => {
                    err.get_or_insert(e);
                }
            })?;
            err.map_or(Ok(EnumerateOutput::Lines(lines)), Err)
        }
        EnumerateMode::Extremal { objective: name, direction } => {
            let mut rec = SearchRecord::new(name.clone(), direction);
            connected_graphs_sharded(n, &filter, shard, |g| {
                if err.is_some() {
                    return;
                }
                if let Err(e) = objective(&name, g).and_then(|v| rec.offer(g, v).map_err(Into::into)) {
                    err = Some(e);
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
            let graphs = rec.attaining.iter().map(|f| graph6::encode(&f.to_graph())).collect::<CliResult<Vec<_>>>()?;
            Ok(EnumerateOutput::Rows(vec![obj(json!({
                "n": n,
                "filter": filter_spec,
                "objective": name,
                "direction": if direction == Direction::Min { "min" } else { "max" },
                "best": rec.best,
                "count": rec.count(),
                "visited": rec.visited,
                "graphs": graphs,
            }))]))
        }
    }
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn dirs_list(xs: &[u64], m: usize) -> Value {
    json!(xs.iter().map(|x| format!("{:0width$b}", x, width = m.max(1))).collect::<Vec<_>>())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OrientMode {
    Exhaustive,
    Coloring,
}

/// Orientation reports. Undirected input is searched; a djson digraph is
/// evaluated and compared with the W_max of its underlying graph.
pub fn orient(text: &str, mode: OrientMode, report: &[String], shard: Shard, conv: TauConvention) -> CliResult<Vec<Row>> {
    if looks_like_json(text) {
        let (d, name) = read_djson(text)?;
        return Ok(vec![digraph_row(&d, name, conv)?]);
    }
    let want = |k: &str| report.is_empty() || report.iter().any(|r| r == k);
    graph6::decode_lines(text)?
        .iter()
        .map(|g| {
            let mut r = obj(json!({ "graph6": graph6::encode(g)?, "n": g.order(), "m": g.edge_count() }));
            match mode {
                OrientMode::Exhaustive => {
                    let s = enumerate_orientations(g, shard)?;
                    r.insert("orientations".into(), s.all.count.into());
                    if want("max") {
                        r.insert("w_max".into(), s.all.max.into());
                        r.insert("w_max_strong".into(), if s.strong.is_empty() { Value::Null } else { s.strong.max.into() });
                    }
                    if want("min") {
                        r.insert("w_min".into(), s.all.min.into());
                        r.insert("w_min_acyclic".into(), if s.acyclic.is_empty() { Value::Null } else { s.acyclic.min.into() });
                    }
                    if want("argset") {
                        r.insert("argmax".into(), dirs_list(&s.all.argmax, g.edge_count()));
                        r.insert("argmin".into(), dirs_list(&s.all.argmin, g.edge_count()));
                    }
                }
                OrientMode::Coloring => {
                    r.insert("chromatic_number".into(), chromatic_number(g)?.into());
                    r.insert("w_min_coloring".into(), json!(min_chromatic_induced_wiener(g)?));
                }
            }
            Ok(r)
        })
        .collect()
}

fn digraph_row(d: &Digraph, name: Option<String>, conv: TauConvention) -> CliResult<Row> {
    let w = digraph_wiener(d);
    let mut r = obj(json!({
        "name": name,
        "n": d.order(),
        "arcs": d.arc_count(),
        "w": w,
        "tau": tau(d, conv),
        "strong": d.is_strongly_connected(),
        "acyclic": d.is_acyclic(),
    }));
    if d.is_oriented() {
        let g = d.underlying();
        if g.edge_count() <= ORIENTATION_EDGE_LIMIT {
            let best = max_orientation_wiener(&g)?;
            r.insert("w_max_underlying".into(), best.into());
            r.insert("attains_w_max".into(), (best == w).into());
        }
    }
    Ok(r)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum SignedMode {
    Wiener,
    Minimize,
    Canceling,
}

fn signs_of(g: &Graph, negative: u64) -> Value {
    json!((0..g.edge_count()).map(|i| if negative >> i & 1 == 1 { -1 } else { 1 }).collect::<Vec<i8>>())
}

/// Signed reports. sjson input carries its signature; graph6 input is
/// taken with every edge positive.
pub fn signed(text: &str, mode: SignedMode, k: usize, shard: Shard) -> CliResult<Vec<Row>> {
    let inputs: Vec<(SignedGraph, Option<String>)> = if looks_like_json(text) {
        vec![read_sjson(text)?]
    } else {
        graph6::decode_lines(text)?.iter().map(|g| Ok((SignedGraph::constant(g, true)?, None))).collect::<CliResult<_>>()?
    };
    inputs
        .into_iter()
        .map(|(s, name)| {
            let g = s.base().clone();
            let mut r = obj(json!({ "graph6": graph6::encode(&g)?, "name": name, "n": g.order(), "m": g.edge_count() }));
            match mode {
                SignedMode::Wiener => {
                    r.insert("signs".into(), json!(s.signs()));
                    r.insert("w_sigma".into(), signed_wiener(&s)?.into());
                }
                SignedMode::Minimize => {
                    let m = min_signed_wiener(&g, shard)?;
                    r.insert("w_star".into(), m.value.into());
                    r.insert("argmin_count".into(), m.argmin.len().into());
                    r.insert("argmin_first".into(), m.argmin.first().map_or(Value::Null, |&x| signs_of(&g, x)));
                    r.insert("visited".into(), m.visited.into());
                }
                SignedMode::Canceling if looks_like_json(text) => {
                    r.insert("k".into(), k.into());
                    r.insert("verdict".into(), format!("{:?}", is_k_canceling(&s, k)?).into());
                }
                SignedMode::Canceling => {
                    let found = exists_k_canceling(&g, k, shard)?;
                    r.insert("k".into(), k.into());
                    r.insert("signature".into(), found.signature.map_or(Value::Null, |x| signs_of(&g, x)));
                    r.insert("undefined".into(), json!(found.undefined.map(|(sig, set)| json!({
                        "signs": signs_of(&g, sig),
                        "removed": wiener_core::bits(set).collect::<Vec<_>>(),
                    }))));
                    r.insert("visited".into(), found.visited.into());
                }
            }
            Ok(r)
        })
        .collect()
}

pub fn soltes(graphs: &[Graph]) -> CliResult<Vec<Row>> {
    graphs
        .iter()
        .map(|g| {
            let p = soltes_profile(g)?;
            Ok(obj(json!({
                "graph6": graph6::encode(g)?,
                "n": g.order(),
                "w": p.wiener,
                "deltas": p.deltas,
                "soltes_vertices": wiener_core::bits(p.soltes_vertices()).collect::<Vec<_>>(),
                "proportion": p.proportion().to_string(),
                "soltes_graph": p.is_soltes_graph(),
            })))
        })
        .collect()
}

/// `lo,hi,steps`.
pub fn parse_scan(text: &str) -> CliResult<ScanParams> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    let bad = || usage(format!("scan {text:?} is not lo,hi,steps"));
    if parts.len() != 3 {
        return Err(bad());
    }
    Ok(ScanParams {
        lo: parts[0].parse().map_err(|_| bad())?,
        hi: parts[1].parse().map_err(|_| bad())?,
        steps: parts[2].parse().map_err(|_| bad())?,
        ..ScanParams::default()
    })
}

fn scan_row(label: Value, p: &IndexProfile, params: ScanParams) -> CliResult<Row> {
    let scan = critical_exponents(p, params)?;
    Ok(obj(json!({
        "graph": label,
        "sign_changes": scan.sign_changes(),
        "roots": scan.roots(),
        "brackets": scan.brackets.iter().map(|b| [b.lo, b.hi]).collect::<Vec<_>>(),
    })))
}

pub fn alpha(graphs: &[Graph], structural: Option<(u64, u64)>, params: ScanParams) -> CliResult<Vec<Row>> {
    if let Some((k, l)) = structural {
        return Ok(vec![scan_row(format!("G_({k},{l})").into(), &cambie_haslegrave_profile(k, l)?, params)?]);
    }
    graphs.iter().map(|g| scan_row(graph6::encode(g)?.into(), &IndexProfile::of_graph(g)?, params)).collect()
}
