//! Text input for graphs and posets, JSON output, and built-in fixtures.
//!
//! Input format:
//!
//! ```text
//! poset 4
//! a
//! b
//! c a
//! c b
//! d b
//! ```
//!
//! The header is `graph n` or `poset n`. Each following line is either a pair
//! `u v` (an edge, or the relation `u < v`) or a single name declaring a
//! vertex. Names get indices in order of first appearance; vertices never
//! named are called `1`, `2`, … skipping names already taken. `#` starts a
//! comment.

use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::combin::{incomparability_graph, Graph, Poset};
use crate::error::{Error, Result};
use crate::expansions::{Expansion, ExpansionReport};
use crate::partitions::IntPartition;
use crate::qsym::{DescentClass, QBasis, QSymPoly};
use crate::symfunc::{Basis, SymPoly};
use crate::tableaux::{InsertionTrace, PTableau, RowAction, StandardYoungTableau, SwwOutput};
use crate::{QSymFn, SymFn};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Graph(Graph),
    Poset(Poset),
}

impl Input {
    /// The graph itself, or the incomparability graph of a poset.
    pub fn graph(&self) -> Graph {
        match self {
            Input::Graph(g) => g.clone(),
            Input::Poset(p) => incomparability_graph(p),
        }
    }

    pub fn poset(&self) -> Option<&Poset> {
        match self {
            Input::Poset(p) => Some(p),
            Input::Graph(_) => None,
        }
    }
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

pub fn parse_input(text: &str) -> Result<Input> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    let (kind, n) = match head.as_slice() {
        [kind @ ("graph" | "poset"), n] => {
            (*kind, n.parse::<usize>().map_err(|_| parse_err(hl, format!("bad vertex count {n:?}")))?)
        }
        _ => return Err(parse_err(hl, "expected header `graph n` or `poset n`")),
    };
    if n > crate::combin::MAX_VERTICES {
        return Err(Error::CapExceeded { what: "vertex count", size: n, cap: crate::combin::MAX_VERTICES });
    }
    let mut names: Vec<String> = Vec::new();
    let mut pairs = Vec::new();
    let intern = |name: &str, line: usize, names: &mut Vec<String>| -> Result<usize> {
        if let Some(i) = names.iter().position(|x| x == name) {
            return Ok(i);
        }
        if names.len() == n {
            return Err(parse_err(line, format!("{name:?} is vertex {} of a {kind} with {n}", n + 1)));
        }
        names.push(name.to_string());
        Ok(names.len() - 1)
    };
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks.as_slice() {
            [v] => {
                intern(v, ln, &mut names)?;
            }
            [u, v] => {
                let a = intern(u, ln, &mut names)?;
                let b = intern(v, ln, &mut names)?;
                if a == b {
                    return Err(parse_err(ln, format!("{u} paired with itself")));
                }
                pairs.push((a, b));
            }
            _ => return Err(parse_err(ln, "expected one or two names")),
        }
    }
    let mut next = 1;
    while names.len() < n {
        let candidate = next.to_string();
        next += 1;
        if !names.contains(&candidate) {
            names.push(candidate);
        }
    }
    match kind {
        "graph" => {
            let mut g = Graph::with_names(names)?;
            for (u, v) in pairs {
                g.add_edge(u, v)?;
            }
            Ok(Input::Graph(g))
        }
        _ => Ok(Input::Poset(Poset::named_from_relations(names, &pairs)?)),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_input(text)? {
        Input::Graph(g) => Ok(g),
        Input::Poset(_) => Err(Error::Parse("expected a graph, found a poset".into())),
    }
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    match parse_input(text)? {
        Input::Poset(p) => Ok(p),
        Input::Graph(_) => Err(Error::Parse("expected a poset, found a graph".into())),
    }
}

/// Writes a graph in the input format, declaring every vertex first.
pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.len());
    for name in g.names() {
        out += &format!("{name}\n");
    }
    for (u, v) in g.edges() {
        out += &format!("{} {}\n", g.name(u), g.name(v));
    }
    out
}

/// Writes a poset in the input format using its cover relations.
pub fn format_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.len());
    for name in p.names() {
        out += &format!("{name}\n");
    }
    for (x, y) in p.covers() {
        out += &format!("{} {}\n", p.name(x), p.name(y));
    }
    out
}

/// Names accepted by [`fixture`], with their kind prefix.
pub const FIXTURES: &[&str] = &[
    "poset:N",
    "poset:chain3",
    "poset:chain4",
    "poset:chain5",
    "graph:K2",
    "graph:K3",
    "graph:K4",
    "graph:K5",
    "graph:C4",
    "graph:C5",
];

const POSET_N: &str = "poset 4\na\nb\nc\nd\nc a\nc b\nd b\n";

/// The poset `N`: elements `a, b` on top, `c, d` below, with `c < a`,
/// `c < b`, `d < b`.
pub fn fixture_poset(name: &str) -> Result<Poset> {
    match name {
        "N" => parse_poset(POSET_N),
        _ => match name.strip_prefix("chain").and_then(|k| k.parse::<usize>().ok()) {
            Some(k @ 3..=5) => Ok(Poset::chain(k)),
            _ => Err(Error::Parse(format!("unknown poset fixture {name:?}"))),
        },
    }
}

pub fn fixture_graph(name: &str) -> Result<Graph> {
    let size = |prefix: &str, lo: usize| {
        name.strip_prefix(prefix).and_then(|k| k.parse::<usize>().ok()).filter(|&k| (lo..=5).contains(&k))
    };
    if let Some(k) = size("K", 2) {
        return Ok(Graph::complete(k));
    }
    if let Some(k) = size("C", 4) {
        return Ok(Graph::cycle(k));
    }
    Err(Error::Parse(format!("unknown graph fixture {name:?}")))
}

/// `graph:NAME` / `poset:NAME` select a fixture; anything else is the text
/// itself.
pub fn fixture(spec: &str) -> Option<Result<Input>> {
    if let Some(name) = spec.strip_prefix("graph:") {
        return Some(fixture_graph(name).map(Input::Graph));
    }
    spec.strip_prefix("poset:").map(|name| fixture_poset(name).map(Input::Poset))
}

/// Loads a fixture name or reads and parses a file.
pub fn load(spec: &str) -> Result<Input> {
    if let Some(f) = fixture(spec) {
        return f;
    }
    let text = std::fs::read_to_string(Path::new(spec)).map_err(|e| Error::Parse(format!("cannot read {spec}: {e}")))?;
    parse_input(&text)
}

fn rational_fields(q: &BigRational) -> (String, String) {
    (q.numer().to_string(), q.denom().to_string())
}

fn rational_from(v: &Value) -> Result<BigRational> {
    let field = |k: &str| -> Result<BigInt> {
        v.get(k)
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse(format!("term is missing string field {k:?}")))?
            .parse()
            .map_err(|_| Error::Parse(format!("field {k:?} is not an integer")))
    };
    let den = field("den")?;
    if den == BigInt::from(0) {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(field("num")?, den))
}

fn terms_of(v: &Value) -> Result<&Vec<Value>> {
    v.get("terms").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing \"terms\" array".into()))
}

fn basis_of(v: &Value) -> Result<&str> {
    v.get("basis").and_then(Value::as_str).ok_or_else(|| Error::Parse("missing \"basis\"".into()))
}

pub fn sym_to_json(f: &SymFn) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(l, c)| {
            let (num, den) = rational_fields(c);
            json!({"partition": l.parts(), "num": num, "den": den})
        })
        .collect();
    json!({"basis": f.basis().name(), "terms": terms})
}

pub fn sym_from_json(v: &Value) -> Result<SymFn> {
    let basis: Basis = basis_of(v)?.parse()?;
    let mut f = SymPoly::zero(basis);
    for t in terms_of(v)? {
        let parts: Vec<u32> = serde_json::from_value(t.get("partition").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("bad partition: {e}")))?;
        f.add_term(IntPartition::new(parts)?, rational_from(t)?);
    }
    Ok(f)
}

pub fn qsym_to_json(f: &QSymFn) -> Value {
    let terms: Vec<Value> = f
        .terms()
        .map(|(s, c)| {
            let (num, den) = rational_fields(c);
            json!({"d": s.degree(), "S": s.elements(), "num": num, "den": den})
        })
        .collect();
    json!({"basis": f.basis().to_string(), "terms": terms})
}

pub fn qsym_from_json(v: &Value) -> Result<QSymFn> {
    let basis = match basis_of(v)? {
        "fundamental" => QBasis::Fundamental,
        "monomial" => QBasis::Monomial,
        other => return Err(Error::Parse(format!("unknown quasi-symmetric basis {other:?}"))),
    };
    let mut f = QSymPoly::zero(basis);
    for t in terms_of(v)? {
        let d = t.get("d").and_then(Value::as_u64).ok_or_else(|| Error::Parse("term is missing \"d\"".into()))?;
        let s: Vec<usize> = serde_json::from_value(t.get("S").cloned().unwrap_or(Value::Null))
            .map_err(|e| Error::Parse(format!("bad descent set: {e}")))?;
        f.add_term(DescentClass::new(d as usize, &s)?, rational_from(t)?);
    }
    Ok(f)
}

pub fn expansion_to_json(e: &Expansion) -> Value {
    match e {
        Expansion::Sym(f) => sym_to_json(f),
        Expansion::QSym(f) => qsym_to_json(f),
        Expansion::Table(rows) => Value::Array(rows.iter().map(|(k, v)| json!({"index": k, "value": v.to_string()})).collect()),
    }
}

/// `{"equal":true}` or `{"equal":false,"witness":{…}}`.
pub fn report_to_json(r: &ExpansionReport) -> Value {
    match &r.witness {
        None => json!({"equal": true}),
        Some(w) => json!({"equal": false, "witness": {"index": w.index, "lhs": w.lhs, "rhs": w.rhs}}),
    }
}

/// Rows of element names.
pub fn p_tableau_to_json(t: &PTableau, names: &[String]) -> Value {
    json!(t.rows().iter().map(|r| r.iter().map(|&x| names[x].as_str()).collect::<Vec<_>>()).collect::<Vec<_>>())
}

pub fn syt_to_json(t: &StandardYoungTableau) -> Value {
    json!(t.rows())
}

pub fn trace_to_json(trace: &InsertionTrace, names: &[String]) -> Value {
    let name = |x: usize| names[x].as_str();
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            let actions: Vec<Value> = s
                .actions
                .iter()
                .map(|a| match *a {
                    RowAction::Append { row, element } => json!({"action": "append", "row": row + 1, "element": name(element)}),
                    RowAction::NewRow { row, element } => json!({"action": "new_row", "row": row + 1, "element": name(element)}),
                    RowAction::Bump { row, element, bumped } => {
                        json!({"action": "bump", "row": row + 1, "element": name(element), "bumped": name(bumped)})
                    }
                    RowAction::Skip { row, element } => json!({"action": "skip", "row": row + 1, "element": name(element)}),
                })
                .collect();
            json!({"element": name(s.element), "actions": actions})
        })
        .collect();
    Value::Array(steps)
}

pub fn sww_output_to_json(out: &SwwOutput, names: &[String]) -> Value {
    json!({
        "insertion": p_tableau_to_json(&out.insertion, names),
        "recording": syt_to_json(&out.recording),
        "trace": trace_to_json(&out.trace, names),
    })
}
