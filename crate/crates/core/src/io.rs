//! Vertex labels, the JSON complex format and Graphviz output.
//!
//! Complexes are exchanged as
//!
//! ```json
//! {"vertices": ["1", "2", "5"], "facets": [["1", "2", "5"]]}
//! ```
//!
//! Labels are decimal integers, or single characters where `a`, `b`, ...
//! stand for 10, 11, .... Digits mean the same thing in both styles.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frgraph::GraphIso;
use crate::simplicial::{ComplexError, Face, FacetRidgeGraph, SimplicialComplex, Vertex};
use crate::subword::SubwordComplex;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid vertex label {0:?}")]
    BadLabel(String),
    #[error("facet vertex {0:?} is not listed in \"vertices\"")]
    UnknownVertex(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LabelStyle {
    #[default]
    Decimal,
    /// `0`-`9` then `a`-`z`.
    Alphanumeric,
}

impl LabelStyle {
    pub fn label(self, v: Vertex) -> String {
        match self {
            LabelStyle::Alphanumeric if v < 36 => char::from_digit(v, 36).unwrap().to_string(),
            _ => v.to_string(),
        }
    }

    pub fn parse(self, s: &str) -> Result<Vertex, IoError> {
        let bad = || IoError::BadLabel(s.to_string());
        match self {
            LabelStyle::Decimal => s.parse().map_err(|_| bad()),
            LabelStyle::Alphanumeric => {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => c.to_digit(36).ok_or_else(bad),
                    _ => s.parse().map_err(|_| bad()),
                }
            }
        }
    }

    /// Decimal when every label is an integer, alphanumeric otherwise.
    pub fn detect<'a>(labels: impl IntoIterator<Item = &'a str>) -> LabelStyle {
        if labels.into_iter().all(|l| l.parse::<Vertex>().is_ok()) {
            LabelStyle::Decimal
        } else {
            LabelStyle::Alphanumeric
        }
    }

    pub fn face_labels(self, face: Face) -> Vec<String> {
        face.vertices().map(|v| self.label(v)).collect()
    }

    /// Concatenated labels, such as `125` or `28a`; comma separated when a
    /// label has more than one character.
    pub fn face_name(self, face: Face) -> String {
        let labels = self.face_labels(face);
        if labels.iter().all(|l| l.len() == 1) {
            labels.concat()
        } else {
            labels.join(",")
        }
    }

    pub fn parse_face(self, labels: &[String]) -> Result<Face, IoError> {
        let verts = labels
            .iter()
            .map(|l| self.parse(l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Face::try_new(verts)?)
    }

    /// Parses a compact name such as `28a` (one character per vertex).
    pub fn parse_face_name(self, name: &str) -> Result<Face, IoError> {
        let labels: Vec<String> = if name.contains(',') {
            name.split(',').map(|s| s.trim().to_string()).collect()
        } else {
            name.chars().map(String::from).collect()
        };
        self.parse_face(&labels)
    }
}

/// Metadata recording how a subword complex was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubwordMeta {
    #[serde(rename = "type")]
    pub coxeter_type: String,
    pub word: Vec<usize>,
    pub pi_word: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subword: Option<SubwordMeta>,
}

impl ComplexJson {
    pub fn from_complex(complex: &SimplicialComplex, style: LabelStyle) -> Self {
        ComplexJson {
            vertices: style.face_labels(complex.ground_set()),
            facets: complex
                .facets()
                .iter()
                .map(|&f| style.face_labels(f))
                .collect(),
            subword: None,
        }
    }

    pub fn from_subword(sc: &SubwordComplex) -> Self {
        let system = sc.system();
        ComplexJson {
            subword: Some(SubwordMeta {
                coxeter_type: system.coxeter_type().to_string(),
                word: sc.word().one_indexed(),
                pi_word: system.reduced_word(sc.pi()).one_indexed(),
            }),
            ..Self::from_complex(sc.complex(), LabelStyle::Decimal)
        }
    }

    pub fn style(&self) -> LabelStyle {
        LabelStyle::detect(
            self.vertices
                .iter()
                .chain(self.facets.iter().flatten())
                .map(String::as_str),
        )
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, IoError> {
        let style = self.style();
        let ground = self.vertices.iter().try_fold(Face::EMPTY, |acc, l| {
            Ok::<_, IoError>(acc.with(style.parse(l)?))
        })?;
        for label in self.facets.iter().flatten() {
            if !self.vertices.contains(label) {
                return Err(IoError::UnknownVertex(label.clone()));
            }
        }
        let facets = self
            .facets
            .iter()
            .map(|f| style.parse_face(f))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SimplicialComplex::from_facets(facets).with_ground_set(ground)?)
    }
}

pub fn complex_to_json(complex: &SimplicialComplex, style: LabelStyle) -> String {
    serde_json::to_string_pretty(&ComplexJson::from_complex(complex, style))
        .expect("plain data serialises")
}

pub fn complex_from_json(text: &str) -> Result<(SimplicialComplex, LabelStyle), IoError> {
    let parsed: ComplexJson = serde_json::from_str(text)?;
    Ok((parsed.to_complex()?, parsed.style()))
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The facet-ridge graph in Graphviz syntax, nodes labelled like `125`.
pub fn fr_graph_dot(graph: &FacetRidgeGraph, style: LabelStyle, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for (i, &f) in graph.facets.iter().enumerate() {
        writeln!(out, "  n{i} [label={}];", quote(&style.face_name(f))).unwrap();
    }
    for (a, b) in graph.graph.edges() {
        writeln!(out, "  n{a} -- n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Two facet-ridge graphs side by side, with a dashed edge from each facet
/// of the first to its image under `iso`.
pub fn isomorphism_dot(
    first: &FacetRidgeGraph,
    second: &FacetRidgeGraph,
    iso: &GraphIso,
    style: LabelStyle,
) -> String {
    let mut out = String::new();
    out.push_str("graph correspondence {\n  node [shape=circle];\n");
    for (tag, graph) in [("a", first), ("b", second)] {
        writeln!(out, "  subgraph cluster_{tag} {{").unwrap();
        for (i, &f) in graph.facets.iter().enumerate() {
            writeln!(out, "    {tag}{i} [label={}];", quote(&style.face_name(f))).unwrap();
        }
        for (a, b) in graph.graph.edges() {
            writeln!(out, "    {tag}{a} -- {tag}{b};").unwrap();
        }
        out.push_str("  }\n");
    }
    for (i, &j) in iso.map.iter().enumerate() {
        writeln!(out, "  a{i} -- b{j} [style=dashed, constraint=false];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_round_trip() {
        let s = LabelStyle::Alphanumeric;
        assert_eq!(s.label(10), "a");
        assert_eq!(s.parse("b").unwrap(), 11);
        assert_eq!(s.parse("7").unwrap(), 7);
        assert_eq!(s.face_name(Face::new([2, 8, 10])), "28a");
        assert_eq!(s.parse_face_name("28a").unwrap(), Face::new([2, 8, 10]));
        assert_eq!(LabelStyle::Decimal.face_name(Face::new([1, 12])), "1,12");
        assert!(LabelStyle::Decimal.parse("a").is_err());
    }

    #[test]
    fn detection() {
        assert_eq!(LabelStyle::detect(["1", "12"]), LabelStyle::Decimal);
        assert_eq!(LabelStyle::detect(["1", "a"]), LabelStyle::Alphanumeric);
    }

    #[test]
    fn json_round_trip() {
        let c = SimplicialComplex::from_vertex_lists([[2, 8, 10], [2, 6, 10]]);
        let text = complex_to_json(&c, LabelStyle::Alphanumeric);
        assert!(text.contains("\"a\""));
        let (back, style) = complex_from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.ground_set(), c.ground_set());
        assert_eq!(style, LabelStyle::Alphanumeric);
    }

    #[test]
    fn facets_must_use_listed_vertices() {
        let text = r#"{"vertices":["1","2"],"facets":[["1","3"]]}"#;
        assert!(matches!(
            complex_from_json(text),
            Err(IoError::UnknownVertex(_))
        ));
    }

    #[test]
    fn dot_output() {
        let c = SimplicialComplex::from_vertex_lists([[1, 2], [2, 3], [1, 3]]);
        let dot = fr_graph_dot(
            &c.facet_ridge_graph().unwrap(),
            LabelStyle::Decimal,
            "triangle",
        );
        assert!(dot.contains("label=\"12\""));
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
