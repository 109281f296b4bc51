//! Text formats: model files and the three graph export files.
//!
//! Model file, one `key = value` per line, `#` starts a comment:
//!
//! ```text
//! n = 1
//! f.kind = constant
//! f.params = 1
//! g.kind = affine
//! g.params = 1 0
//! horizon = 6
//! vertex_budget = 2000000
//! ```
//!
//! `kind` is one of `constant`, `affine` (params `slope intercept`) or `table`
//! (params `v_1 v_2 ...`). `vertex_budget` may be omitted.
//!
//! Exports, all newline-terminated:
//! * edges: `u v` with `u < v`, ascending;
//! * vertices: `id birth_time cap_id`, `-` as the cap of a seed;
//! * caps: `cap_id time parent,ids new,ids`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{CapRecord, FrustumGraph, GraphError, VertexId, VertexMeta};
use crate::params::{ModelParams, DEFAULT_VERTEX_BUDGET};
use crate::sequence::SequenceSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing field `{0}`")]
    MissingField(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

pub fn parse_model(text: &str) -> Result<ModelParams, FormatError> {
    let mut fields: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| syntax(line_no, "expected `key = value`"))?;
        let key = key.trim();
        const KNOWN: [&str; 7] =
            ["n", "f.kind", "f.params", "g.kind", "g.params", "horizon", "vertex_budget"];
        if !KNOWN.contains(&key) {
            return Err(syntax(line_no, format!("unknown field `{key}`")));
        }
        if fields.insert(key.to_string(), (line_no, value.trim().to_string())).is_some() {
            return Err(syntax(line_no, format!("duplicate field `{key}`")));
        }
    }
    let get = |key: &'static str| fields.get(key).ok_or(FormatError::MissingField(key));
    let number = |key: &'static str| -> Result<u64, FormatError> {
        let (line, value) = get(key)?;
        value.parse().map_err(|_| syntax(*line, format!("`{key}` must be a non-negative integer")))
    };
    let sequence = |kind: &'static str, params: &'static str| -> Result<SequenceSpec, FormatError> {
        let (line, kind_value) = get(kind)?;
        let (_, params_value) = get(params)?;
        SequenceSpec::from_kind_and_params(kind_value, params_value)
            .map_err(|e| syntax(*line, e.to_string()))
    };
    let horizon = number("horizon")?;
    let horizon_line = get("horizon")?.0;
    let horizon = u32::try_from(horizon).map_err(|_| syntax(horizon_line, "horizon too large"))?;
    let vertex_budget = if fields.contains_key("vertex_budget") {
        number("vertex_budget")?
    } else {
        DEFAULT_VERTEX_BUDGET
    };
    Ok(ModelParams {
        n: number("n")?,
        f: sequence("f.kind", "f.params")?,
        g: sequence("g.kind", "g.params")?,
        horizon,
        vertex_budget,
    })
}

pub fn write_model(p: &ModelParams) -> String {
    format!(
        "n = {}\nf.kind = {}\nf.params = {}\ng.kind = {}\ng.params = {}\nhorizon = {}\nvertex_budget = {}\n",
        p.n,
        p.f.kind_name(),
        p.f.params_string(),
        p.g.kind_name(),
        p.g.params_string(),
        p.horizon,
        p.vertex_budget
    )
}

pub fn write_edge_list(g: &FrustumGraph) -> String {
    let mut out = String::with_capacity(g.edge_count() as usize * 12);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_vertex_meta(g: &FrustumGraph) -> String {
    let mut out = String::new();
    for m in g.vertices() {
        match m.cap_id {
            Some(c) => writeln!(out, "{} {} {c}", m.id, m.birth_time),
            None => writeln!(out, "{} {} -", m.id, m.birth_time),
        }
        .expect("writing to a String");
    }
    out
}

fn id_list(ids: &[VertexId]) -> String {
    ids.iter().map(VertexId::to_string).collect::<Vec<_>>().join(",")
}

pub fn write_caps(g: &FrustumGraph) -> String {
    let mut out = String::new();
    for c in g.caps() {
        let _ = writeln!(out, "{} {} {} {}", c.cap_id, c.time, id_list(&c.parent_clique), id_list(&c.new_vertices));
    }
    out
}

fn tokens(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn parse_num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T, FormatError> {
    s.parse().map_err(|_| syntax(line, format!("bad number `{s}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Vec<(VertexId, VertexId)>, FormatError> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match tokens(line).as_slice() {
            [] => continue,
            [u, v] => {
                let (u, v): (VertexId, VertexId) = (parse_num(i + 1, u)?, parse_num(i + 1, v)?);
                if u >= v {
                    return Err(syntax(i + 1, "edges must be written `u v` with u < v"));
                }
                edges.push((u, v));
            }
            _ => return Err(syntax(i + 1, "expected `u v`")),
        }
    }
    Ok(edges)
}

pub fn parse_vertex_meta(text: &str) -> Result<Vec<VertexMeta>, FormatError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match tokens(line).as_slice() {
            [] => continue,
            [id, birth, cap] => {
                let cap_id = if *cap == "-" { None } else { Some(parse_num(i + 1, cap)?) };
                out.push(VertexMeta { id: parse_num(i + 1, id)?, birth_time: parse_num(i + 1, birth)?, cap_id });
            }
            _ => return Err(syntax(i + 1, "expected `id birth_time cap_id`")),
        }
    }
    Ok(out)
}

fn parse_id_list(line: usize, s: &str) -> Result<Vec<VertexId>, FormatError> {
    s.split(',').map(|x| parse_num(line, x)).collect()
}

pub fn parse_caps(text: &str) -> Result<Vec<CapRecord>, FormatError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match tokens(line).as_slice() {
            [] => continue,
            [cap_id, time, parent, new] => out.push(CapRecord {
                cap_id: parse_num(i + 1, cap_id)?,
                time: parse_num(i + 1, time)?,
                parent_clique: parse_id_list(i + 1, parent)?,
                new_vertices: parse_id_list(i + 1, new)?,
            }),
            _ => return Err(syntax(i + 1, "expected `cap_id time parents new`")),
        }
    }
    Ok(out)
}

/// Rebuilds a graph from the three export texts.
pub fn import_graph(edges: &str, vertices: &str, caps: &str) -> Result<FrustumGraph, FormatError> {
    let edges = parse_edge_list(edges)?;
    let vertices = parse_vertex_meta(vertices)?;
    let caps = parse_caps(caps)?;
    Ok(FrustumGraph::from_parts(vertices, &edges, caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::generate;

    #[test]
    fn model_file_round_trip() {
        let text = "# growing cone\nn = 1\nf.kind = constant\nf.params = 1\ng.kind = affine\ng.params = 1 0\nhorizon = 6\n";
        let p = parse_model(text).unwrap();
        assert_eq!(p, ModelParams::cone(SequenceSpec::identity(), 6));
        assert_eq!(parse_model(&write_model(&p)).unwrap(), p);
    }

    #[test]
    fn model_file_errors() {
        assert_eq!(parse_model("n = 1\n"), Err(FormatError::MissingField("horizon")));
        assert!(matches!(parse_model("n 1"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_model("n = 1\nn = 2"), Err(FormatError::Syntax { line: 2, .. })));
        assert!(matches!(parse_model("colour = 1"), Err(FormatError::Syntax { .. })));
        let bad_kind = "n = 1\nf.kind = cubic\nf.params = 1\ng.kind = constant\ng.params = 1\nhorizon = 1";
        assert!(matches!(parse_model(bad_kind), Err(FormatError::Syntax { line: 2, .. })));
    }

    #[test]
    fn complete_graph_edge_list() {
        let text = write_edge_list(&FrustumGraph::complete(5));
        assert_eq!(text.lines().count(), 10);
        assert!(text.starts_with("0 1\n0 2\n"));
        assert!(text.ends_with("3 4\n"));
    }

    #[test]
    fn exports_round_trip() {
        let p = ModelParams::new(3, SequenceSpec::Constant(2), SequenceSpec::Constant(2), 2);
        let g = generate(&p).unwrap();
        let vertices = write_vertex_meta(&g);
        assert!(vertices.starts_with("0 0 -\n"));
        assert!(vertices.contains("\n3 1 0\n"));
        let caps = write_caps(&g);
        assert!(caps.starts_with("0 1 0,1 3,4\n"));
        let back = import_graph(&write_edge_list(&g), &vertices, &caps).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn malformed_edges() {
        assert!(parse_edge_list("1 0\n").is_err());
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("0 x\n").is_err());
    }
}
