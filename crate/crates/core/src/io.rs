//! JSON graph files, rational literals and decimal display.
//!
//! ```json
//! {"vertices": ["p0", "p1"], "edges": [{"from": 0, "to": 1, "length": "1/2"}], "divisor": [1, 0]}
//! ```
//!
//! Lengths are `"p/q"` strings or bare integers. `divisor` may be omitted.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Divisor, Edge, GraphPoint, MetrizedGraph};
use crate::Rational;

struct RationalLiteral(Rational);

impl<'de> Deserialize<'de> for RationalLiteral {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RationalLiteral;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational \"p/q\" or an integer")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Self::Value, E> {
                Ok(RationalLiteral(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Self::Value, E> {
                Ok(RationalLiteral(Rational::from_integer(v.into())))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Self::Value, E> {
                parse_rational(v).map(RationalLiteral).map_err(|e| E::custom(e))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeIn {
    from: usize,
    to: usize,
    length: RationalLiteral,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphIn {
    vertices: Vec<String>,
    edges: Vec<EdgeIn>,
    #[serde(default)]
    divisor: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct EdgeOut {
    from: usize,
    to: usize,
    length: String,
}

#[derive(Serialize)]
struct GraphOut<'a> {
    vertices: &'a [String],
    edges: Vec<EdgeOut>,
    divisor: &'a [i64],
}

/// Parses `"p/q"`, `"-p/q"` or an integer. The denominator must be positive.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let t = s.trim();
    let bad = || format!("malformed rational {s:?}");
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let digits = |x: &str| {
        let body = x.strip_prefix('-').unwrap_or(x);
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num) || !digits(den) || den.starts_with('-') {
        return Err(bad());
    }
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Reads a graph file. A missing divisor is the zero divisor.
pub fn parse_graph(text: &str) -> Result<(MetrizedGraph<Rational>, Divisor)> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: GraphIn = serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        Error::Parse {
            field: if field == "." { "document".into() } else { field },
            message: e.into_inner().to_string(),
        }
    })?;
    let edges = raw
        .edges
        .into_iter()
        .map(|e| Edge::new(e.from, e.to, e.length.0))
        .collect();
    let g = MetrizedGraph::new(raw.vertices, edges)?;
    let d = match raw.divisor {
        Some(c) => Divisor::new(c),
        None => Divisor::zero(g.vertex_count()),
    };
    d.check_for(&g)?;
    Ok((g, d))
}

/// Inverse of [`parse_graph`]; lengths are written as strings.
pub fn serialize_graph(g: &MetrizedGraph<Rational>, d: &Divisor) -> String {
    let out = GraphOut {
        vertices: g.labels(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeOut { from: e.tail, to: e.head, length: e.length.to_string() })
            .collect(),
        divisor: d.coefficients(),
    };
    serde_json::to_string_pretty(&out).expect("graph serializes")
}

/// `"i:p/q"`, a point at offset `p/q` on edge `i`. Range is not checked here.
pub fn parse_point(s: &str) -> Result<GraphPoint<Rational>> {
    let err = |message: String| Error::Parse { field: "point".into(), message };
    let (edge, offset) = s
        .trim()
        .split_once(':')
        .ok_or_else(|| err(format!("expected EDGE:OFFSET, got {s:?}")))?;
    let edge = edge
        .trim()
        .parse::<usize>()
        .map_err(|_| err(format!("bad edge index {edge:?}")))?;
    let offset = parse_rational(offset).map_err(err)?;
    Ok(GraphPoint::new(edge, offset))
}

/// `"a0,a1,..."`.
pub fn parse_divisor(s: &str) -> Result<Divisor> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|_| Error::Parse {
                field: "divisor".into(),
                message: format!("bad coefficient {t:?}"),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(Divisor::new)
}

/// `v` rounded half away from zero to `digits` places after the point.
pub fn decimal_string(v: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = v.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(1.into(), 2.into())).floor().to_integer();
    let (int, frac) = rounded.div_rem(&scale);
    let sign = if v.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>digits$}", frac.to_string())
    }
}
