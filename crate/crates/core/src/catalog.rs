//! Small named graphs used throughout the docs and tests.
//!
//! Vertex and edge orders are fixed; the values computed on these graphs are
//! pinned in the test-suite.

use crate::graph::{Edge, MetrizedGraph};
use crate::scalar::Scalar;

fn build<S: Scalar>(labels: &[&str], edges: Vec<(usize, usize, S)>) -> MetrizedGraph<S> {
    MetrizedGraph::new(
        labels.iter().map(|s| s.to_string()).collect(),
        edges.into_iter().map(|(t, h, l)| Edge::new(t, h, l)).collect(),
    )
    .expect("catalog graphs are valid")
}

/// One edge `p0 → p1` of the given length.
pub fn segment<S: Scalar>(length: S) -> MetrizedGraph<S> {
    build(&["p0", "p1"], vec![(0, 1, length)])
}

/// Circle of length 2 on three vertices, listed in the order `(p1, p0, p2)`.
///
/// Edges: `e0 = p0 → p1` (1/2), `e1 = p0 → p2` (1), `e2 = p1 → p2` (1/2).
pub fn circle<S: Scalar>() -> MetrizedGraph<S> {
    build(
        &["p1", "p0", "p2"],
        vec![(1, 0, S::half()), (1, 2, S::one()), (0, 2, S::half())],
    )
}

/// Two circles of lengths `l1`, `l2` glued at `p0`, each cut into three equal edges.
pub fn joint_circles<S: Scalar>(l1: S, l2: S) -> MetrizedGraph<S> {
    let three = S::from_i64(3);
    let (a, b) = (l1 / three.clone(), l2 / three);
    build(
        &["p0", "p1", "p2", "p3", "p4"],
        vec![
            (0, 1, a.clone()),
            (1, 2, a.clone()),
            (2, 0, a),
            (0, 3, b.clone()),
            (3, 4, b.clone()),
            (4, 0, b),
        ],
    )
}

/// The 4-cube with unit edges; vertex `(b0,b1,b2,b3)` is `p_{b0+2b1+4b2+8b3}`.
pub fn tesseract<S: Scalar>() -> MetrizedGraph<S> {
    let mut edges = Vec::new();
    for i in 0..16usize {
        for j in i + 1..16 {
            if (i ^ j).count_ones() == 1 {
                edges.push(Edge::new(i, j, S::one()));
            }
        }
    }
    MetrizedGraph::from_edges(16, edges).expect("tesseract is valid")
}

/// Three arcs of lengths `a`, `b`, `c` between `p0` and `p1`; arcs `a` and `c`
/// carry midpoints `p2`, `p3`.
pub fn banana<S: Scalar>(a: S, b: S, c: S) -> MetrizedGraph<S> {
    let (ha, hc) = (a * S::half(), c * S::half());
    build(
        &["p0", "p1", "p2", "p3"],
        vec![(0, 1, b), (0, 2, ha.clone()), (2, 1, ha), (0, 3, hc.clone()), (3, 1, hc)],
    )
}

/// A square `p1 p2 p4 p3` with pendant bridges `e0 = p0 → p1` and `e5 = p4 → p5`.
pub fn two_bridges<S: Scalar>() -> MetrizedGraph<S> {
    build(
        &["p0", "p1", "p2", "p3", "p4", "p5"],
        vec![
            (0, 1, S::one()),
            (1, 2, S::one()),
            (1, 3, S::from_i64(2)),
            (2, 4, S::one()),
            (3, 4, S::one()),
            (4, 5, S::half()),
        ],
    )
}

/// Circle of two arcs `a`, `b` between `p1`, `p2`, plus a segment `c` to `p3`.
/// Not adequate: the arcs are parallel edges.
pub fn circle_line<S: Scalar>(a: S, b: S, c: S) -> MetrizedGraph<S> {
    build(&["p1", "p2", "p3"], vec![(0, 1, a), (0, 1, b), (1, 2, c)])
}

/// [`circle_line`] with arc `a` split at its midpoint `p0`.
pub fn circle_line_adequate<S: Scalar>(a: S, b: S, c: S) -> MetrizedGraph<S> {
    let ha = a * S::half();
    build(
        &["p0", "p1", "p2", "p3"],
        vec![(0, 1, ha.clone()), (0, 2, ha), (1, 2, b), (2, 3, c)],
    )
}
