//! Instance files: a JSON object with a `kind` and the fields of that kind.
//!
//! ```json
//! {"kind": "hypergraph", "vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]}
//! {"kind": "graph", "vertices": ["a", "b"], "edges": [["a", "b"]]}
//! {"kind": "simplicial", "vertices": [1, 2, 3], "facets": [[1, 2], [3]]}
//! {"kind": "paths", "paths": ["bfcg", "aed"]}
//! ```

use std::fmt;

use hghopf::hopf::Species;
use hghopf::submonoids::{Graph, SetOfPaths, SimplicialComplex};
use hghopf::{GroundSet, Hypergraph, Mask};
use serde::Deserialize;

#[derive(Deserialize, Clone, Copy, Debug, PartialEq, Eq, Default)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    #[default]
    Hypergraph,
    Graph,
    Simplicial,
    Paths,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawLabel {
    Int(i64),
    Str(String),
}

impl RawLabel {
    fn text(&self) -> String {
        match self {
            RawLabel::Int(i) => i.to_string(),
            RawLabel::Str(s) => s.clone(),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPath {
    Word(String),
    Labels(Vec<RawLabel>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInstance {
    #[serde(default)]
    kind: Kind,
    vertices: Option<Vec<RawLabel>>,
    edges: Option<Vec<Vec<RawLabel>>>,
    faces: Option<Vec<Vec<RawLabel>>>,
    facets: Option<Vec<Vec<RawLabel>>>,
    paths: Option<Vec<RawPath>>,
}

#[derive(Clone, Debug)]
pub enum Instance {
    Hypergraph(Hypergraph),
    Graph(Graph),
    Simplicial(SimplicialComplex),
    Paths(SetOfPaths),
}

/// A parse or validation failure, located by line and column or by field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.location, self.message)
    }
}

fn field_error(field: impl Into<String>, message: impl fmt::Display) -> ParseError {
    ParseError { location: field.into(), message: message.to_string() }
}

fn reject(field: &str, present: bool, kind: Kind) -> Result<(), ParseError> {
    if present {
        return Err(field_error(field, format!("not a field of {kind:?} instances").to_lowercase()));
    }
    Ok(())
}

fn masks(ground: &GroundSet, field: &str, sets: &[Vec<RawLabel>]) -> Result<Vec<Mask>, ParseError> {
    sets.iter()
        .enumerate()
        .map(|(i, set)| {
            let mut m: Mask = 0;
            for (j, l) in set.iter().enumerate() {
                let text = l.text();
                let idx = ground
                    .index_of(&text)
                    .ok_or_else(|| field_error(format!("{field}[{i}][{j}]"), format!("`{text}` is not a vertex")))?;
                if m >> idx & 1 == 1 {
                    return Err(field_error(format!("{field}[{i}][{j}]"), format!("`{text}` repeated in one set")));
                }
                m |= 1 << idx;
            }
            Ok(m)
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let raw: RawInstance = serde_json::from_str(text).map_err(|e| ParseError {
        location: format!("line {}, column {}", e.line(), e.column()),
        message: e.to_string(),
    })?;
    let kind = raw.kind;
    let ground = match (&raw.vertices, kind) {
        (Some(v), _) => {
            GroundSet::new(v.iter().map(RawLabel::text)).map_err(|e| field_error("vertices", e))?
        }
        (None, Kind::Paths) => {
            let labels: Vec<String> = raw
                .paths
                .iter()
                .flatten()
                .flat_map(|p| match p {
                    RawPath::Word(w) => w.chars().map(String::from).collect::<Vec<_>>(),
                    RawPath::Labels(ls) => ls.iter().map(RawLabel::text).collect(),
                })
                .collect();
            GroundSet::new(labels).map_err(|e| field_error("paths", e))?
        }
        (None, _) => return Err(field_error("vertices", "missing field")),
    };
    match kind {
        Kind::Hypergraph | Kind::Graph => {
            reject("faces", raw.faces.is_some(), kind)?;
            reject("facets", raw.facets.is_some(), kind)?;
            reject("paths", raw.paths.is_some(), kind)?;
            let edges = masks(&ground, "edges", raw.edges.as_deref().unwrap_or_default())?;
            if let Some(i) = edges.iter().position(|&e| e == 0) {
                return Err(field_error(format!("edges[{i}]"), "empty edge"));
            }
            if kind == Kind::Hypergraph {
                Hypergraph::new(ground, edges).map(Instance::Hypergraph).map_err(|e| field_error("edges", e))
            } else {
                if let Some(i) = edges.iter().position(|e| e.count_ones() != 2) {
                    return Err(field_error(format!("edges[{i}]"), "graph edges have exactly two vertices"));
                }
                Graph::new(ground, edges).map(Instance::Graph).map_err(|e| field_error("edges", e))
            }
        }
        Kind::Simplicial => {
            reject("edges", raw.edges.is_some(), kind)?;
            reject("paths", raw.paths.is_some(), kind)?;
            let faces = masks(&ground, "faces", raw.faces.as_deref().unwrap_or_default())?;
            let facets = masks(&ground, "facets", raw.facets.as_deref().unwrap_or_default())?;
            let complex = if raw.facets.is_some() {
                let mut all = facets;
                all.extend(faces);
                SimplicialComplex::from_facets(ground, &all).map_err(|e| field_error("facets", e))?
            } else {
                SimplicialComplex::new(ground, faces).map_err(|e| field_error("faces", e))?
            };
            Ok(Instance::Simplicial(complex))
        }
        Kind::Paths => {
            reject("edges", raw.edges.is_some(), kind)?;
            reject("faces", raw.faces.is_some(), kind)?;
            reject("facets", raw.facets.is_some(), kind)?;
            let paths: Vec<Vec<String>> = raw
                .paths
                .unwrap_or_default()
                .iter()
                .map(|p| match p {
                    RawPath::Word(w) => w.chars().map(String::from).collect(),
                    RawPath::Labels(ls) => ls.iter().map(RawLabel::text).collect(),
                })
                .collect();
            SetOfPaths::new(ground, &paths).map(Instance::Paths).map_err(|e| field_error("paths", e))
        }
    }
}

/// Runs `$body` with `$x` bound to the instance's species element.
#[macro_export]
macro_rules! with_species {
    ($inst:expr, $x:ident => $body:expr) => {
        match $inst {
            $crate::instance::Instance::Hypergraph($x) => $body,
            $crate::instance::Instance::Graph($x) => $body,
            $crate::instance::Instance::Simplicial($x) => $body,
            $crate::instance::Instance::Paths($x) => $body,
        }
    };
}

impl Instance {
    pub fn ground(&self) -> &GroundSet {
        with_species!(self, x => x.ground())
    }

    /// The underlying hypergraph, for kinds whose invariant is that of a
    /// hypergraph.
    pub fn as_hypergraph(&self) -> Option<Hypergraph> {
        match self {
            Instance::Hypergraph(h) => Some(h.clone()),
            Instance::Graph(g) => Some(g.to_hypergraph()),
            Instance::Simplicial(c) => Some(c.to_simple_hypergraph().to_hypergraph()),
            Instance::Paths(_) => None,
        }
    }
}
