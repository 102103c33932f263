//! Metrized graphs: vertices, parametrized edges, points, distances.
//!
//! Edge `e` is identified with the interval `[0, L_e]`; offset `0` is its tail
//! `p_e` and offset `L_e` its head `q_e`. The orientation is part of the input.

mod adequacy;
mod bridges;
mod divisor;

pub use adequacy::Refinement;
pub(crate) use adequacy::cut_edges;
pub use bridges::{ClosestNeighbours, ConnectivityEntry, EndpointPair, Side};
pub use divisor::{CanonicalDivisor, Divisor};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<S> {
    pub tail: usize,
    pub head: usize,
    pub length: S,
}

impl<S> Edge<S> {
    pub fn new(tail: usize, head: usize, length: S) -> Self {
        Edge { tail, head, length }
    }

    pub fn is_loop(&self) -> bool {
        self.tail == self.head
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.tail == v || self.head == v
    }
}

/// A point of the graph given by an edge and an offset along it.
///
/// Vertices have several representations: one per incident edge end.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphPoint<S> {
    pub edge: usize,
    pub offset: S,
}

impl<S> GraphPoint<S> {
    pub fn new(edge: usize, offset: S) -> Self {
        GraphPoint { edge, offset }
    }
}

/// A finite connected graph with positive edge lengths.
///
/// Immutable once built; every constructor checks connectivity and lengths.
#[derive(Debug, Clone, PartialEq)]
pub struct MetrizedGraph<S> {
    labels: Vec<String>,
    edges: Vec<Edge<S>>,
}

impl<S: Scalar> MetrizedGraph<S> {
    pub fn new(labels: Vec<String>, edges: Vec<Edge<S>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 || edges.is_empty() {
            return Err(Error::EmptyGraph);
        }
        for (idx, e) in edges.iter().enumerate() {
            for v in [e.tail, e.head] {
                if v >= n {
                    return Err(Error::DanglingVertex { edge: idx, vertex: v, count: n });
                }
            }
            if !e.length.is_positive() {
                return Err(Error::NonpositiveLength { edge: idx, length: e.length.to_string() });
            }
        }
        let graph = MetrizedGraph { labels, edges };
        if graph.reachable_from(0, None).iter().any(|r| !r) {
            return Err(Error::GraphDisconnected);
        }
        Ok(graph)
    }

    /// Builds a graph on `n` vertices labelled `p0, p1, ...`.
    pub fn from_edges(n: usize, edges: Vec<Edge<S>>) -> Result<Self> {
        Self::new((0..n).map(|k| format!("p{k}")).collect(), edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn edges(&self) -> &[Edge<S>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<&Edge<S>> {
        self.edges.get(i).ok_or(Error::EdgeOutOfRange { index: i, count: self.edges.len() })
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.labels.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { index: v, count: self.labels.len() })
        }
    }

    pub fn total_length(&self) -> S {
        self.edges.iter().fold(S::zero(), |acc, e| acc + e.length.clone())
    }

    /// Number of directions leaving `v`; a loop counts twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.tail == v) + usize::from(e.head == v))
            .sum()
    }

    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        (0..self.edges.len()).filter(|&i| self.edges[i].has_endpoint(v)).collect()
    }

    pub fn point(&self, edge: usize, offset: S) -> Result<GraphPoint<S>> {
        let p = GraphPoint::new(edge, offset);
        self.check_point(&p)?;
        Ok(p)
    }

    pub fn check_point(&self, p: &GraphPoint<S>) -> Result<()> {
        let e = self.edge(p.edge)?;
        if p.offset.is_negative() || p.offset > e.length {
            return Err(Error::OffsetOutOfRange {
                edge: p.edge,
                offset: p.offset.to_string(),
                length: e.length.to_string(),
            });
        }
        Ok(())
    }

    /// The vertex a point sits on, if it is an edge endpoint.
    pub fn vertex_at(&self, p: &GraphPoint<S>) -> Option<usize> {
        let e = &self.edges[p.edge];
        if p.offset.is_zero() {
            Some(e.tail)
        } else if p.offset == e.length {
            Some(e.head)
        } else {
            None
        }
    }

    /// First representation of `v` in edge order, tail checked before head.
    pub fn vertex_point(&self, v: usize) -> GraphPoint<S> {
        self.edges
            .iter()
            .enumerate()
            .find_map(|(i, e)| {
                if e.tail == v {
                    Some(GraphPoint::new(i, S::zero()))
                } else if e.head == v {
                    Some(GraphPoint::new(i, e.length.clone()))
                } else {
                    None
                }
            })
            .expect("connected graph: every vertex has an incident edge")
    }

    /// Every representation of `v`, one per incident edge end.
    pub fn vertex_points(&self, v: usize) -> Vec<GraphPoint<S>> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.tail == v {
                out.push(GraphPoint::new(i, S::zero()));
            }
            if e.head == v {
                out.push(GraphPoint::new(i, e.length.clone()));
            }
        }
        out
    }

    /// Vertices reachable from `start`, optionally ignoring the interior of one edge.
    pub(crate) fn reachable_from(&self, start: usize, skip_edge: Option<usize>) -> Vec<bool> {
        let n = self.labels.len();
        let mut adj = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            if Some(i) != skip_edge {
                adj[e.tail].push(e.head);
                adj[e.head].push(e.tail);
            }
        }
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Geodesic distances from `source` to every vertex (Dijkstra, dense).
    pub fn distances_from(&self, source: usize) -> Vec<S> {
        let n = self.labels.len();
        let mut dist: Vec<Option<S>> = vec![None; n];
        let mut done = vec![false; n];
        dist[source] = Some(S::zero());
        for _ in 0..n {
            let mut best: Option<usize> = None;
            for v in 0..n {
                if done[v] {
                    continue;
                }
                if let Some(d) = &dist[v] {
                    if best.is_none_or(|b| d < dist[b].as_ref().unwrap()) {
                        best = Some(v);
                    }
                }
            }
            let Some(u) = best else { break };
            done[u] = true;
            let du = dist[u].clone().unwrap();
            for e in &self.edges {
                let other = if e.tail == u {
                    e.head
                } else if e.head == u {
                    e.tail
                } else {
                    continue;
                };
                let cand = du.clone() + e.length.clone();
                if dist[other].as_ref().is_none_or(|d| cand < *d) {
                    dist[other] = Some(cand);
                }
            }
        }
        dist.into_iter().map(|d| d.expect("graph is connected")).collect()
    }

    pub fn shortest_distance(&self, u: usize, v: usize) -> Result<S> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u).swap_remove(v))
    }

    /// Same graph with every length multiplied by `factor > 0`.
    pub fn scaled(&self, factor: &S) -> Self {
        assert!(factor.is_positive(), "scale factor must be positive");
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(e.tail, e.head, e.length.clone() * factor.clone()))
            .collect();
        MetrizedGraph { labels: self.labels.clone(), edges }
    }

    /// Same graph with the parametrization of edge `i` reversed.
    pub fn with_reversed_edge(&self, i: usize) -> Result<Self> {
        self.edge(i)?;
        let mut g = self.clone();
        let e = &mut g.edges[i];
        std::mem::swap(&mut e.tail, &mut e.head);
        Ok(g)
    }

    /// Converts every length into another scalar type.
    pub fn convert<T: Scalar>(&self, f: impl Fn(&S) -> T) -> MetrizedGraph<T> {
        MetrizedGraph {
            labels: self.labels.clone(),
            edges: self.edges.iter().map(|e| Edge::new(e.tail, e.head, f(&e.length))).collect(),
        }
    }

    pub(crate) fn from_parts_unchecked(labels: Vec<String>, edges: Vec<Edge<S>>) -> Self {
        MetrizedGraph { labels, edges }
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
    fn rejects_bad_input() {
        let e = MetrizedGraph::<Rational>::from_edges(2, vec![Edge::new(0, 1, q(0, 1))]);
        assert!(matches!(e, Err(Error::NonpositiveLength { edge: 0, .. })));
        let e = MetrizedGraph::<Rational>::from_edges(3, vec![Edge::new(0, 1, q(1, 1))]);
        assert_eq!(e, Err(Error::GraphDisconnected));
        let e = MetrizedGraph::<Rational>::from_edges(2, vec![Edge::new(0, 2, q(1, 1))]);
        assert!(matches!(e, Err(Error::DanglingVertex { vertex: 2, .. })));
        let e = MetrizedGraph::<Rational>::from_edges(1, vec![]);
        assert_eq!(e, Err(Error::EmptyGraph));
    }

    #[test]
    fn shortest_distances() {
        let g = catalog::circle::<Rational>();
        // vertex 1 is p0, vertex 0 is p1: arcs of 1/2 and 1 + 1/2
        assert_eq!(g.shortest_distance(1, 0).unwrap(), q(1, 2));
        assert_eq!(g.shortest_distance(1, 1).unwrap(), q(0, 1));
        assert_eq!(g.shortest_distance(1, 2).unwrap(), q(1, 1));
        let s = catalog::segment(q(7, 3));
        assert_eq!(s.shortest_distance(0, 1).unwrap(), q(7, 3));
        assert!(s.shortest_distance(0, 5).is_err());
    }

    #[test]
    fn points_and_representations() {
        let g = catalog::circle::<Rational>();
        assert!(g.point(0, q(3, 4)).is_err());
        assert!(g.point(0, q(-1, 4)).is_err());
        assert!(g.point(3, q(0, 1)).is_err());
        let p = g.point(0, q(1, 2)).unwrap();
        assert_eq!(g.vertex_at(&p), Some(0));
        assert_eq!(g.vertex_points(1).len(), 2);
        assert_eq!(g.vertex_point(2), GraphPoint::new(1, q(1, 1)));
        assert_eq!(g.valence(0), 2);
        assert_eq!(g.total_length(), q(2, 1));
    }
}
