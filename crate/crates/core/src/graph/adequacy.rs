use std::collections::HashSet;

use super::{Edge, GraphPoint, MetrizedGraph};
use crate::error::Result;
use crate::scalar::Scalar;

/// One piece of an original edge after subdivision.
#[derive(Debug, Clone, PartialEq)]
struct Segment<S> {
    new_edge: usize,
    start: S,
    length: S,
}

/// Records how the edges of a graph were cut into the edges of a refinement.
///
/// Original vertices keep their indices; new vertices are appended.
#[derive(Debug, Clone, PartialEq)]
pub struct Refinement<S> {
    segments: Vec<Vec<Segment<S>>>,
}

impl<S: Scalar> Refinement<S> {
    pub(crate) fn identity(g: &MetrizedGraph<S>) -> Self {
        let segments = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, e)| vec![Segment { new_edge: i, start: S::zero(), length: e.length.clone() }])
            .collect();
        Refinement { segments }
    }

    pub fn is_identity(&self) -> bool {
        self.segments.iter().enumerate().all(|(i, s)| s.len() == 1 && s[0].new_edge == i)
    }

    /// Sends a point of the original graph to the same metric point of the refinement.
    pub fn map_point(&self, p: &GraphPoint<S>) -> GraphPoint<S> {
        let pieces = &self.segments[p.edge];
        let piece = pieces
            .iter()
            .find(|s| p.offset <= s.start.clone() + s.length.clone())
            .unwrap_or_else(|| pieces.last().unwrap());
        GraphPoint::new(piece.new_edge, p.offset.clone() - piece.start.clone())
    }

    /// Edges of the refinement covering original edge `i`, in parametrization order.
    pub fn pieces(&self, i: usize) -> Vec<usize> {
        self.segments[i].iter().map(|s| s.new_edge).collect()
    }
}

/// Cuts edge `i` at the given interior offsets (sorted, distinct); returns the pieces.
pub(crate) fn cut_edges<S: Scalar>(
    g: &MetrizedGraph<S>,
    cuts: &[Vec<S>],
) -> (MetrizedGraph<S>, Refinement<S>) {
    let mut labels = g.labels().to_vec();
    let mut edges = Vec::new();
    let mut segments = Vec::with_capacity(g.edge_count());
    for (i, e) in g.edges().iter().enumerate() {
        let mut pieces = Vec::new();
        let mut from = e.tail;
        let mut start = S::zero();
        for (k, t) in cuts[i].iter().enumerate() {
            labels.push(format!("e{i}.{k}"));
            let v = labels.len() - 1;
            pieces.push(Segment { new_edge: edges.len(), start: start.clone(), length: t.clone() - start.clone() });
            edges.push(Edge::new(from, v, t.clone() - start));
            from = v;
            start = t.clone();
        }
        let length = e.length.clone() - start.clone();
        pieces.push(Segment { new_edge: edges.len(), start, length: length.clone() });
        edges.push(Edge::new(from, e.head, length));
        segments.push(pieces);
    }
    (MetrizedGraph::from_parts_unchecked(labels, edges), Refinement { segments })
}

impl<S: Scalar> MetrizedGraph<S> {
    /// No loops and no two edges joining the same pair of vertices.
    pub fn is_adequate(&self) -> bool {
        let mut pairs = HashSet::new();
        self.edges().iter().all(|e| {
            !e.is_loop() && pairs.insert((e.tail.min(e.head), e.tail.max(e.head)))
        })
    }

    /// Checked form of [`is_adequate`](Self::is_adequate) for graphs from untrusted sources.
    pub fn validate_adequate(&self) -> Result<bool> {
        // construction already enforced connectivity and positive lengths
        Ok(self.is_adequate())
    }

    /// Enlarges the vertex set until it is adequate.
    ///
    /// Loops are cut at their two trisection points. In each class of parallel
    /// edges the lowest-indexed edge is kept and every other one is cut at its
    /// midpoint. The result is isometric to `self`.
    pub fn make_adequate(&self) -> (MetrizedGraph<S>, Refinement<S>) {
        if self.is_adequate() {
            return (self.clone(), Refinement::identity(self));
        }
        let three = S::from_i64(3);
        let mut seen = HashSet::new();
        let cuts: Vec<Vec<S>> = self
            .edges()
            .iter()
            .map(|e| {
                if e.is_loop() {
                    let third = e.length.clone() / three.clone();
                    vec![third.clone(), third.clone() + third]
                } else if seen.insert((e.tail.min(e.head), e.tail.max(e.head))) {
                    Vec::new()
                } else {
                    vec![e.length.clone() * S::half()]
                }
            })
            .collect();
        let (g, r) = cut_edges(self, &cuts);
        debug_assert!(g.is_adequate());
        (g, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn adequacy_of_catalog_graphs() {
        assert!(!catalog::circle_line(q(1, 1), q(2, 1), q(3, 1)).is_adequate());
        assert!(catalog::segment(q(1, 1)).is_adequate());
        assert!(catalog::circle_line_adequate(q(1, 1), q(2, 1), q(3, 1)).is_adequate());
    }

    #[test]
    fn circle_line_repair_matches_figure_shape() {
        // arcs listed as (b, a): the second arc a gets halved
        let (a, b, c) = (q(2, 1), q(3, 1), q(5, 1));
        let g = MetrizedGraph::from_edges(
            3,
            vec![Edge::new(0, 1, b.clone()), Edge::new(0, 1, a.clone()), Edge::new(1, 2, c.clone())],
        )
        .unwrap();
        let (h, map) = g.make_adequate();
        assert!(h.is_adequate());
        assert_eq!(h.vertex_count(), 4);
        let mut lengths: Vec<_> = h.edges().iter().map(|e| e.length.clone()).collect();
        lengths.sort();
        assert_eq!(lengths, vec![q(1, 1), q(1, 1), b, c]);
        assert_eq!(h.total_length(), g.total_length());
        assert_eq!(map.pieces(1).len(), 2);
        let p = map.map_point(&GraphPoint::new(1, q(3, 2)));
        assert_eq!(p, GraphPoint::new(2, q(1, 2)));
    }

    #[test]
    fn already_adequate_is_untouched() {
        let g = catalog::circle::<Rational>();
        let (h, map) = g.make_adequate();
        assert_eq!(h, g);
        assert!(map.is_identity());
    }

    #[test]
    fn loop_becomes_triangle() {
        let g = MetrizedGraph::from_edges(1, vec![Edge::new(0, 0, q(3, 1))]).unwrap();
        let (h, _) = g.make_adequate();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edge_count(), 3);
        assert!(h.edges().iter().all(|e| e.length == q(1, 1)));
        assert_eq!(h.total_length(), q(3, 1));
        assert!((0..3).all(|v| h.valence(v) == 2));
    }

    #[test]
    fn repair_preserves_vertex_distances() {
        let g = catalog::circle_line(q(2, 1), q(3, 1), q(1, 2));
        let (h, _) = g.make_adequate();
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                assert_eq!(g.shortest_distance(u, v).unwrap(), h.shortest_distance(u, v).unwrap());
            }
        }
    }
}
