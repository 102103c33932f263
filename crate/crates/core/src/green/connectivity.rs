use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{ConnectivityEntry, EndpointPair, MetrizedGraph, Side};
use crate::scalar::Scalar;

/// Bridge topology of every ordered edge pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityMatrix {
    size: usize,
    entries: Vec<ConnectivityEntry>,
}

impl ConnectivityMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> ConnectivityEntry {
        self.entries[i * self.size + j]
    }

    pub fn is_bridge(&self, i: usize) -> bool {
        self.get(i, i) == ConnectivityEntry::SelfBridge
    }

    /// The decimal-coded matrix, row by row.
    pub fn codes(&self) -> Vec<Vec<u32>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.get(i, j).code()).collect()).collect()
    }

    fn set(&mut self, i: usize, j: usize, e: ConnectivityEntry) {
        self.entries[i * self.size + j] = e;
    }

    /// Fills the matrix from precomputed bridge flags and per-bridge vertex sides.
    pub(crate) fn from_parts<S: Scalar>(
        g: &MetrizedGraph<S>,
        bridges: &[bool],
        sides: &[Option<Vec<Side>>],
    ) -> Self {
        let m = g.edge_count();
        let mut c = ConnectivityMatrix { size: m, entries: vec![ConnectivityEntry::NotApplicable; m * m] };
        // side of e_j in Γ − e_i, read off at the tail of e_j
        let alpha = |i: usize, j: usize| -> Side {
            sides[i].as_ref().expect("alpha is only taken for bridges")[g.edges()[j].tail]
        };
        let beta = |i: usize, j: usize| -> EndpointPair {
            g.closest_neighbours(i, j).expect("both edges are bridges").pair
        };
        for (i, _) in bridges.iter().enumerate().filter(|(_, &b)| b) {
            c.set(i, i, ConnectivityEntry::SelfBridge);
        }
        for i in 0..m {
            for j in i + 1..m {
                match (bridges[i], bridges[j]) {
                    (true, true) => {
                        let ij = ConnectivityEntry::BridgePair { side: alpha(i, j), neighbours: beta(i, j) };
                        let ji = ConnectivityEntry::BridgePair { side: alpha(j, i), neighbours: beta(j, i) };
                        c.set(i, j, ij);
                        c.set(j, i, ji);
                    }
                    (true, false) => {
                        let e = ConnectivityEntry::Side(alpha(i, j));
                        c.set(i, j, e);
                        c.set(j, i, e);
                    }
                    (false, true) => {
                        let e = ConnectivityEntry::Side(alpha(j, i));
                        c.set(i, j, e);
                        c.set(j, i, e);
                    }
                    (false, false) => {}
                }
            }
        }
        c
    }
}

impl fmt::Display for ConnectivityMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.codes() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Connectivity matrix of an adequate graph.
pub fn connectivity_matrix<S: Scalar>(g: &MetrizedGraph<S>) -> Result<ConnectivityMatrix> {
    if !g.is_adequate() {
        return Err(Error::NotAdequate);
    }
    let bridges = g.bridges();
    let sides: Vec<_> = (0..g.edge_count())
        .map(|e| if bridges[e] { g.bridge_sides(e).ok() } else { None })
        .collect();
    Ok(ConnectivityMatrix::from_parts(g, &bridges, &sides))
}
