//! JSON documents exchanged with the command line and other tools.
//!
//! Documents are always `f64` on the wire; converting to and from the generic
//! types goes through the scalar type's `f64` conversions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Error;
use crate::gadgets::{GadgetEmbedding, GadgetKind};
use crate::geom::Annulus;
use crate::point::Point2;
use crate::radial::{Color, Piece, RadialColoring, Threshold, Verdict};
use crate::scalar::Scalar;
use crate::udg::{build_udg, Graph};

/// Why a document could not be read.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Invalid(#[from] Error),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadialColoringDoc {
    pub r: f64,
    pub boundaries: Vec<f64>,
    pub sector_colors: Vec<Color>,
    pub boundary_colors: Vec<Color>,
}

impl RadialColoringDoc {
    pub fn from_coloring<T: Scalar>(c: &RadialColoring<T>) -> Self {
        Self {
            r: c.annulus().r().as_f64(),
            boundaries: c.boundaries().iter().map(|b| b.as_f64()).collect(),
            sector_colors: c.sector_colors().to_vec(),
            boundary_colors: c.boundary_colors().to_vec(),
        }
    }

    pub fn to_coloring<T: Scalar>(&self) -> Result<RadialColoring<T>, Error> {
        let annulus = Annulus::new(T::of(self.r))?;
        RadialColoring::new(
            annulus,
            self.boundaries.iter().map(|&b| T::of(b)).collect(),
            self.sector_colors.clone(),
            self.boundary_colors.clone(),
        )
    }
}

pub fn parse_radial_coloring<T: Scalar>(json: &str) -> Result<RadialColoring<T>, FormatError> {
    let doc: RadialColoringDoc = serde_json::from_str(json)?;
    Ok(doc.to_coloring()?)
}

pub fn radial_coloring_to_json<T: Scalar>(c: &RadialColoring<T>) -> String {
    serde_json::to_string_pretty(&RadialColoringDoc::from_coloring(c)).expect("serializable")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdDoc {
    pub colors: u32,
    pub max_r: f64,
    pub expr: String,
}

impl<T: Scalar> From<&Threshold<T>> for ThresholdDoc {
    fn from(t: &Threshold<T>) -> Self {
        Self {
            colors: t.colors,
            max_r: t.max_r.as_f64(),
            expr: t.expr.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GadgetDoc {
    pub kind: String,
    pub params: BTreeMap<String, Value>,
    pub vertices: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
    pub margin: f64,
}

impl GadgetDoc {
    pub fn from_embedding<T: Scalar>(e: &GadgetEmbedding<T>) -> Self {
        let mut params = BTreeMap::new();
        params.insert("r".to_string(), Value::from(e.annulus.r().as_f64()));
        if let GadgetKind::OddCycle { n, winding } = e.kind {
            params.insert("n".to_string(), Value::from(n));
            params.insert("winding".to_string(), Value::from(winding));
        }
        params.insert(
            "rotation".to_string(),
            Value::from(e.placement.rotation.as_f64()),
        );
        params.insert(
            "translation".to_string(),
            Value::from(vec![
                e.placement.translation.x.as_f64(),
                e.placement.translation.y.as_f64(),
            ]),
        );
        Self {
            kind: e.kind.name().to_string(),
            params,
            vertices: e
                .vertices
                .iter()
                .map(|v| [v.x.as_f64(), v.y.as_f64()])
                .collect(),
            edges: e.unit_edges.iter().map(|&(i, j)| [i, j]).collect(),
            margin: e.margin.as_f64(),
        }
    }
}

/// Either a point set (edges found by unit-distance scan) or an abstract
/// graph given by vertex count and edge list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphDoc {
    Points {
        points: Vec<[f64; 2]>,
        #[serde(default)]
        tolerance: Option<f64>,
    },
    Abstract {
        n: usize,
        edges: Vec<[usize; 2]>,
    },
}

impl GraphDoc {
    pub fn to_graph(&self, default_tolerance: f64) -> Result<Graph, Error> {
        match self {
            GraphDoc::Points { points, tolerance } => {
                let pts = points.iter().map(|&[x, y]| Point2::new(x, y)).collect();
                Ok(build_udg(pts, tolerance.unwrap_or(default_tolerance))?.graph)
            }
            GraphDoc::Abstract { n, edges } => Graph::new(*n, edges.iter().map(|&[i, j]| (i, j))),
        }
    }
}

pub fn parse_graph(json: &str, default_tolerance: f64) -> Result<Graph, FormatError> {
    let doc: GraphDoc = serde_json::from_str(json)?;
    Ok(doc.to_graph(default_tolerance)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pieces: Option<(Piece, Piece)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<[[f64; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<f64>,
}

impl<T: Scalar> From<&Verdict<T>> for VerdictDoc {
    fn from(v: &Verdict<T>) -> Self {
        match v {
            Verdict::Proper => Self {
                verdict: "proper".into(),
                color: None,
                pieces: None,
                witness: None,
                distance: None,
            },
            Verdict::Improper(bad) => Self {
                verdict: "improper".into(),
                color: Some(bad.color),
                pieces: Some(bad.pieces),
                witness: Some([
                    [bad.pair.p.x.as_f64(), bad.pair.p.y.as_f64()],
                    [bad.pair.q.x.as_f64(), bad.pair.q.y.as_f64()],
                ]),
                distance: Some(bad.pair.distance().as_f64()),
            },
        }
    }
}
