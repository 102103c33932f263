#![allow(dead_code)]

use std::path::PathBuf;

use metgraph::io::{parse_graph, parse_point};
use metgraph::{Divisor, ExactGraph, GraphPoint, Rational, Scalar};

/// Graphs with committed point fixtures.
pub const FIXTURE_GRAPHS: [&str; 6] = ["circle", "joint_circles", "tesseract", "banana", "two_bridges", "segment"];

/// The five example graphs the consistency properties are checked on.
pub const TEST_GRAPHS: [&str; 5] = ["circle", "joint_circles", "tesseract", "banana", "two_bridges"];

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

pub fn load(name: &str) -> (ExactGraph, Divisor) {
    let path = data_dir().join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_graph(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub type PointPair = (GraphPoint<Rational>, GraphPoint<Rational>);

pub fn point_pairs(name: &str) -> Vec<PointPair> {
    let path = data_dir().join("points").join(format!("{name}.txt"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            let mut it = l.split_whitespace();
            let x = parse_point(it.next().unwrap()).unwrap();
            let y = parse_point(it.next().unwrap()).unwrap();
            (x, y)
        })
        .collect()
}

/// Distinct points from the fixture pairs, in order of first appearance.
pub fn fixture_points(name: &str) -> Vec<GraphPoint<Rational>> {
    let mut out: Vec<GraphPoint<Rational>> = Vec::new();
    for (x, y) in point_pairs(name) {
        for p in [x, y] {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

/// Fixture points strictly inside an edge.
pub fn interior_points(g: &ExactGraph, name: &str) -> Vec<GraphPoint<Rational>> {
    fixture_points(name)
        .into_iter()
        .filter(|p| g.vertex_at(p).is_none())
        .collect()
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::ratio(n, d)
}

/// Offsets `0, L/4, L/2, 3L/4, L` on edge `e`.
pub fn grid(g: &ExactGraph, e: usize) -> Vec<GraphPoint<Rational>> {
    let l = &g.edges()[e].length;
    (0..=4).map(|k| GraphPoint::new(e, l.clone() * q(k, 4))).collect()
}
