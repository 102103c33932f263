//! A graph bundled with everything derived from it once: `L`, `L⁺`, bridges,
//! bridge sides and the connectivity matrix.

use crate::error::{Error, Result};
use crate::graph::{ConnectivityEntry, MetrizedGraph, Side};
use crate::green::ConnectivityMatrix;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

#[derive(Debug, Clone)]
pub struct Network<S> {
    graph: MetrizedGraph<S>,
    laplacian: Matrix<S>,
    pinv: Matrix<S>,
    bridges: Vec<bool>,
    sides: Vec<Option<Vec<Side>>>,
    connectivity: ConnectivityMatrix,
}

impl<S: Scalar> Network<S> {
    /// Fails with `NotAdequate` for graphs with loops or parallel edges.
    pub fn new(graph: MetrizedGraph<S>) -> Result<Self> {
        let laplacian = linalg::laplacian(&graph)?;
        let pinv = linalg::pseudo_inverse(&laplacian)?;
        let bridges = graph.bridges();
        let sides = (0..graph.edge_count())
            .map(|e| bridges[e].then(|| graph.bridge_sides(e)).transpose())
            .collect::<Result<Vec<_>>>()?;
        let connectivity = ConnectivityMatrix::from_parts(&graph, &bridges, &sides);
        Ok(Network { graph, laplacian, pinv, bridges, sides, connectivity })
    }

    pub fn graph(&self) -> &MetrizedGraph<S> {
        &self.graph
    }

    pub fn laplacian(&self) -> &Matrix<S> {
        &self.laplacian
    }

    pub fn pinv(&self) -> &Matrix<S> {
        &self.pinv
    }

    pub fn connectivity(&self) -> &ConnectivityMatrix {
        &self.connectivity
    }

    pub fn entry(&self, i: usize, j: usize) -> ConnectivityEntry {
        self.connectivity.get(i, j)
    }

    pub fn is_bridge(&self, e: usize) -> bool {
        self.bridges[e]
    }

    /// Side of vertex `v` with respect to bridge `b`.
    pub fn side(&self, b: usize, v: usize) -> Result<Side> {
        self.graph.check_vertex(v)?;
        self.sides
            .get(b)
            .and_then(Option::as_ref)
            .map(|s| s[v])
            .ok_or(Error::NotABridge { edge: b })
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// `(tail, head, length)` of edge `i`.
    pub(crate) fn ends(&self, i: usize) -> (usize, usize, S) {
        let e = &self.graph.edges()[i];
        (e.tail, e.head, e.length.clone())
    }

    /// Resistance between vertices; indices are trusted.
    pub(crate) fn r(&self, p: usize, q: usize) -> S {
        let l = &self.pinv;
        l[(p, p)].clone() - S::from_i64(2) * l[(p, q)].clone() + l[(q, q)].clone()
    }

    /// Voltage `j_s(p, q)` between vertices; indices are trusted.
    pub(crate) fn j(&self, s: usize, p: usize, q: usize) -> S {
        let l = &self.pinv;
        l[(s, s)].clone() - l[(s, p)].clone() - l[(s, q)].clone() + l[(p, q)].clone()
    }

    pub fn resistance(&self, p: usize, q: usize) -> Result<S> {
        linalg::resistance_at_vertices(&self.pinv, p, q)
    }

    pub fn voltage(&self, s: usize, p: usize, q: usize) -> Result<S> {
        linalg::voltage_at_vertices(&self.pinv, s, p, q)
    }
}
