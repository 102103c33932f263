//! Bridges, the two sides of a bridge, and closest neighbours of bridge pairs.

use std::fmt;

use super::MetrizedGraph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which component of `Γ − e` something lies in: the one holding the tail
/// `p_e` or the one holding the head `q_e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    P,
    Q,
}

impl Side {
    pub fn bit(self) -> u32 {
        match self {
            Side::P => 0,
            Side::Q => 1,
        }
    }

    pub fn from_bit(bit: u32) -> Option<Self> {
        match bit {
            0 => Some(Side::P),
            1 => Some(Side::Q),
            _ => None,
        }
    }
}

/// Which endpoints of two bridges realise their distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EndpointPair {
    PP,
    PQ,
    QP,
    QQ,
}

impl EndpointPair {
    pub fn new(first: Side, second: Side) -> Self {
        match (first, second) {
            (Side::P, Side::P) => EndpointPair::PP,
            (Side::P, Side::Q) => EndpointPair::PQ,
            (Side::Q, Side::P) => EndpointPair::QP,
            (Side::Q, Side::Q) => EndpointPair::QQ,
        }
    }

    pub fn sides(self) -> (Side, Side) {
        match self {
            EndpointPair::PP => (Side::P, Side::P),
            EndpointPair::PQ => (Side::P, Side::Q),
            EndpointPair::QP => (Side::Q, Side::P),
            EndpointPair::QQ => (Side::Q, Side::Q),
        }
    }

    /// Two-bit decimal code: `0, 1, 10, 11`.
    pub fn code(self) -> u32 {
        let (a, b) = self.sides();
        10 * a.bit() + b.bit()
    }

    pub fn from_code(code: u32) -> Option<Self> {
        Some(EndpointPair::new(Side::from_bit(code / 10)?, Side::from_bit(code % 10)?))
    }

    pub fn swapped(self) -> Self {
        let (a, b) = self.sides();
        EndpointPair::new(b, a)
    }
}

/// One entry of the connectivity matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConnectivityEntry {
    /// Neither edge is a bridge.
    NotApplicable,
    /// Diagonal entry of a bridge.
    SelfBridge,
    /// Exactly one of the two edges is a bridge; the side of the other edge.
    Side(Side),
    /// Two distinct bridges: side of the column edge w.r.t. the row bridge,
    /// and the endpoints realising their distance.
    BridgePair { side: Side, neighbours: EndpointPair },
}

impl ConnectivityEntry {
    /// The decimal bit-code `0, 1, 10, 11, 100, 101, 110, 111`.
    pub fn code(self) -> u32 {
        match self {
            ConnectivityEntry::NotApplicable => 0,
            ConnectivityEntry::SelfBridge => 1,
            ConnectivityEntry::Side(s) => s.bit(),
            ConnectivityEntry::BridgePair { side, neighbours } => 100 * side.bit() + neighbours.code(),
        }
    }

    /// Inverse of [`code`](Self::code). Codes overlap between variants, so the
    /// bridge status of both edges is needed to read one back.
    pub fn decode(code: u32, diagonal: bool, row_bridge: bool, col_bridge: bool) -> Option<Self> {
        match (diagonal, row_bridge, col_bridge) {
            (true, true, _) => (code == 1).then_some(ConnectivityEntry::SelfBridge),
            (true, false, _) | (false, false, false) => {
                (code == 0).then_some(ConnectivityEntry::NotApplicable)
            }
            (false, true, true) => Some(ConnectivityEntry::BridgePair {
                side: Side::from_bit(code / 100)?,
                neighbours: EndpointPair::from_code(code % 100)?,
            }),
            (false, _, _) => Side::from_bit(code).map(ConnectivityEntry::Side),
        }
    }
}

impl fmt::Display for ConnectivityEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// Closest endpoints of two distinct bridges.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosestNeighbours<S> {
    pub pair: EndpointPair,
    pub vertices: (usize, usize),
    pub distance: S,
}

impl<S: Scalar> MetrizedGraph<S> {
    /// `true` iff deleting the interior of edge `e` disconnects the graph.
    pub fn is_bridge(&self, e: usize) -> Result<bool> {
        let edge = self.edge(e)?;
        if edge.is_loop() {
            return Ok(false);
        }
        Ok(!self.reachable_from(edge.tail, Some(e))[edge.head])
    }

    /// Bridge flags for every edge in one pass (low-link DFS).
    pub fn bridges(&self) -> Vec<bool> {
        let n = self.vertex_count();
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (i, e) in self.edges().iter().enumerate() {
            adj[e.tail].push((e.head, i));
            if !e.is_loop() {
                adj[e.head].push((e.tail, i));
            }
        }
        let mut order = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_bridge = vec![false; self.edge_count()];
        let mut clock = 0;
        // frames: (vertex, edge used to enter, next adjacency slot)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        order[0] = clock;
        low[0] = clock;
        clock += 1;
        stack.push((0, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (u, via, slot) = *frame;
            if slot < adj[u].len() {
                frame.2 += 1;
                let (w, id) = adj[u][slot];
                if id == via {
                    continue;
                }
                if order[w] == usize::MAX {
                    order[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, id, 0));
                } else {
                    low[u] = low[u].min(order[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > order[parent] {
                        is_bridge[via] = true;
                    }
                }
            }
        }
        is_bridge
    }

    /// Side of every vertex with respect to bridge `b`; endpoints go to their own side.
    pub fn bridge_sides(&self, b: usize) -> Result<Vec<Side>> {
        if !self.is_bridge(b)? {
            return Err(Error::NotABridge { edge: b });
        }
        let tail_side = self.reachable_from(self.edges()[b].tail, Some(b));
        Ok(tail_side.into_iter().map(|t| if t { Side::P } else { Side::Q }).collect())
    }

    pub fn bridge_side_of_vertex(&self, b: usize, v: usize) -> Result<Side> {
        self.check_vertex(v)?;
        Ok(self.bridge_sides(b)?[v])
    }

    /// Side of the (connected) edge `target` with respect to bridge `b`.
    pub fn bridge_side_of_edge(&self, b: usize, target: usize) -> Result<Side> {
        let t = self.edge(target)?.tail;
        if b == target {
            return Err(Error::SameEdge { edge: b });
        }
        Ok(self.bridge_sides(b)?[t])
    }

    /// Endpoint pair of bridges `i` and `j` at minimal geodesic distance.
    ///
    /// Positive lengths make the minimiser unique; a tie is an internal error.
    pub fn closest_neighbours(&self, i: usize, j: usize) -> Result<ClosestNeighbours<S>> {
        if i == j {
            return Err(Error::SameEdge { edge: i });
        }
        for e in [i, j] {
            if !self.is_bridge(e)? {
                return Err(Error::NotABridge { edge: e });
            }
        }
        let (ei, ej) = (&self.edges()[i], &self.edges()[j]);
        let from_p = self.distances_from(ei.tail);
        let from_q = self.distances_from(ei.head);
        let candidates = [
            (EndpointPair::PP, (ei.tail, ej.tail), from_p[ej.tail].clone()),
            (EndpointPair::PQ, (ei.tail, ej.head), from_p[ej.head].clone()),
            (EndpointPair::QP, (ei.head, ej.tail), from_q[ej.tail].clone()),
            (EndpointPair::QQ, (ei.head, ej.head), from_q[ej.head].clone()),
        ];
        let best = candidates
            .iter()
            .min_by(|a, b| a.2.partial_cmp(&b.2).expect("distances are comparable"))
            .unwrap();
        let ties = candidates.iter().filter(|c| c.2 == best.2).count();
        assert_eq!(ties, 1, "closest neighbours of bridges {i} and {j} are not unique");
        Ok(ClosestNeighbours { pair: best.0, vertices: best.1, distance: best.2.clone() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::Edge;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn bridge_examples() {
        let cl = catalog::circle_line(q(1, 1), q(2, 1), q(3, 1));
        assert_eq!(cl.bridges(), vec![false, false, true]);
        assert!(cl.is_bridge(2).unwrap());
        let circle = catalog::circle::<Rational>();
        assert!((0..3).all(|e| !circle.is_bridge(e).unwrap()));
        assert!(catalog::segment(q(1, 1)).is_bridge(0).unwrap());
        assert!(circle.is_bridge(3).is_err());
    }

    #[test]
    fn two_bridge_sides() {
        let g = catalog::two_bridges::<Rational>();
        assert_eq!(g.bridge_side_of_edge(0, 1).unwrap(), Side::Q);
        assert_eq!(g.bridge_side_of_edge(5, 1).unwrap(), Side::P);
        assert_eq!(g.bridge_side_of_edge(0, 5).unwrap(), Side::Q);
        assert_eq!(g.bridge_side_of_vertex(0, 0).unwrap(), Side::P);
        assert_eq!(g.bridge_side_of_vertex(0, 1).unwrap(), Side::Q);
        assert_eq!(g.bridge_side_of_edge(1, 0), Err(Error::NotABridge { edge: 1 }));
        assert_eq!(g.bridge_side_of_edge(0, 0), Err(Error::SameEdge { edge: 0 }));
    }

    #[test]
    fn closest_neighbour_examples() {
        let g = catalog::two_bridges::<Rational>();
        let cn = g.closest_neighbours(0, 5).unwrap();
        assert_eq!(cn.vertices, (1, 4));
        assert_eq!(cn.pair, EndpointPair::QP);
        assert_eq!(cn.pair.code(), 10);
        let back = g.closest_neighbours(5, 0).unwrap();
        assert_eq!(back.vertices, (4, 1));
        assert_eq!(back.pair, EndpointPair::PQ);

        let path = MetrizedGraph::from_edges(
            4,
            vec![Edge::new(0, 1, q(1, 1)), Edge::new(1, 2, q(2, 1)), Edge::new(2, 3, q(1, 3))],
        )
        .unwrap();
        let cn = path.closest_neighbours(0, 1).unwrap();
        assert_eq!(cn.vertices, (1, 1));
        assert_eq!(cn.distance, q(0, 1));
        assert!(path.closest_neighbours(1, 1).is_err());
    }

    #[test]
    fn entry_codes_round_trip() {
        let mut pair_codes = Vec::new();
        for side in [Side::P, Side::Q] {
            for nb in [EndpointPair::PP, EndpointPair::PQ, EndpointPair::QP, EndpointPair::QQ] {
                let e = ConnectivityEntry::BridgePair { side, neighbours: nb };
                assert_eq!(ConnectivityEntry::decode(e.code(), false, true, true), Some(e));
                assert_eq!(nb.swapped().swapped(), nb);
                pair_codes.push(e.code());
            }
        }
        assert_eq!(pair_codes, vec![0, 1, 10, 11, 100, 101, 110, 111]);
        let cases = [
            (ConnectivityEntry::NotApplicable, true, false, false),
            (ConnectivityEntry::NotApplicable, false, false, false),
            (ConnectivityEntry::SelfBridge, true, true, true),
            (ConnectivityEntry::Side(Side::P), false, true, false),
            (ConnectivityEntry::Side(Side::Q), false, false, true),
        ];
        for (e, d, r, c) in cases {
            assert_eq!(ConnectivityEntry::decode(e.code(), d, r, c), Some(e));
        }
        assert_eq!(ConnectivityEntry::decode(2, false, true, false), None);
        assert_eq!(ConnectivityEntry::decode(120, false, true, true), None);
    }
}
