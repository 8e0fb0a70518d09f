//! JSON documents: one operad element per file, rationals as strings.
//!
//! ```json
//! {"name": "optional", "arrangement": {"lines": [{"q": "0", "p": "0"}, {"q": "1", "p": "-1"}]}}
//! {"tiling": ["1/3", "1/3", "1/3"]}
//! {"points": ["0", "1/3", "1", "2"]}
//! {"chain": [["0", "0"], ["1", "1"]]}
//! ```

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError, RootedLine};
use crate::chain::{ChainError, PolygonalChain};
use crate::geometry::{AffineMap2, Point2};
use crate::interval::{IntervalError, IntervalTiling, PointConfig};
use crate::rational::{format_rational, parse_rational, ParseRationalError, Rational};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("document has no payload; expected one of arrangement, tiling, points, chain")]
    MissingPayload,
    #[error("document has more than one payload")]
    MultiplePayloads,
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

impl DocumentError {
    /// The variant name with its fields, e.g. `ParallelPair(1, 2)`.
    pub fn code(&self) -> String {
        match self {
            DocumentError::Json(_) => "MalformedJson".into(),
            DocumentError::Rational(_) => "MalformedRational".into(),
            DocumentError::Arrangement(e) => format!("{e:?}"),
            DocumentError::Interval(e) => format!("{e:?}"),
            DocumentError::Chain(e) => format!("{e:?}"),
            other => format!("{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Arrangement(Arrangement),
    Tiling(IntervalTiling),
    Points(PointConfig),
    Chain(PolygonalChain),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Arrangement(_) => "arrangement",
            Payload::Tiling(_) => "tiling",
            Payload::Points(_) => "points",
            Payload::Chain(_) => "chain",
        }
    }

    pub fn arity(&self) -> usize {
        use crate::operad::Operad;
        match self {
            Payload::Arrangement(a) => a.arity(),
            Payload::Tiling(t) => t.arity(),
            Payload::Points(p) => p.arity(),
            Payload::Chain(c) => c.arity(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Document {
    pub name: Option<String>,
    pub payload: Payload,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    name: Option<String>,
    arrangement: Option<RawArrangement>,
    tiling: Option<Vec<String>>,
    points: Option<Vec<String>>,
    chain: Option<Vec<(String, String)>>,
}

#[derive(Deserialize)]
struct RawArrangement {
    lines: Vec<RawLine>,
}

#[derive(Deserialize)]
struct RawLine {
    q: String,
    p: String,
}

fn parse_all(xs: &[String]) -> Result<Vec<Rational>, ParseRationalError> {
    xs.iter().map(|s| parse_rational(s)).collect()
}

impl Document {
    pub fn new(payload: Payload) -> Self {
        Document { name: None, payload }
    }

    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        let present = [
            raw.arrangement.is_some(),
            raw.tiling.is_some(),
            raw.points.is_some(),
            raw.chain.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        match present {
            0 => return Err(DocumentError::MissingPayload),
            1 => {}
            _ => return Err(DocumentError::MultiplePayloads),
        }
        let payload = if let Some(a) = raw.arrangement {
            let lines = a
                .lines
                .iter()
                .map(|l| Ok(RootedLine::new(parse_rational(&l.q)?, parse_rational(&l.p)?)))
                .collect::<Result<Vec<_>, ParseRationalError>>()?;
            Payload::Arrangement(Arrangement::new(lines)?)
        } else if let Some(t) = raw.tiling {
            Payload::Tiling(IntervalTiling::new(parse_all(&t)?)?)
        } else if let Some(p) = raw.points {
            Payload::Points(PointConfig::new(parse_all(&p)?)?)
        } else if let Some(c) = raw.chain {
            let vertices = c
                .iter()
                .map(|(q, s)| Ok((parse_rational(q)?, parse_rational(s)?)))
                .collect::<Result<Vec<_>, ParseRationalError>>()?;
            Payload::Chain(PolygonalChain::new(vertices)?)
        } else {
            unreachable!("exactly one payload is present")
        };
        Ok(Document {
            name: raw.name,
            payload,
        })
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ self.payload.kind(): payload_json(&self.payload) });
        if let Some(name) = &self.name {
            v["name"] = json!(name);
        }
        v
    }

    pub fn to_pretty_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("values serialize")
    }
}

fn strings(xs: &[Rational]) -> Value {
    json!(xs.iter().map(format_rational).collect::<Vec<_>>())
}

pub fn arrangement_json(a: &Arrangement) -> Value {
    json!({
        "lines": a.lines().iter().map(|l| json!({
            "q": format_rational(&l.q),
            "p": format_rational(&l.p),
        })).collect::<Vec<_>>()
    })
}

pub fn payload_json(p: &Payload) -> Value {
    match p {
        Payload::Arrangement(a) => arrangement_json(a),
        Payload::Tiling(t) => strings(t.lengths()),
        Payload::Points(c) => strings(c.points()),
        Payload::Chain(c) => json!(c
            .vertices()
            .iter()
            .map(|(q, s)| [format_rational(q), format_rational(s)])
            .collect::<Vec<_>>()),
    }
}

pub fn point_json(x: &Point2) -> Value {
    json!([format_rational(&x.q), format_rational(&x.t)])
}

/// `[[m11, m12, m13], [m21, m22, m23]]`.
pub fn map_json(g: &AffineMap2) -> Value {
    let m: Vec<String> = g.entries().iter().map(format_rational).collect();
    json!([[m[0], m[1], m[2]], [m[3], m[4], m[5]]])
}
