//! The admissible Arakelov-Green function `g_{μ_D}`: connectivity matrix,
//! value matrix `Z_D` and point evaluation.
//!
//! Every entry `z_ij` of the value matrix is a single [`EdgePairFunction`]:
//! for a fixed pair of edges the applicable closed form depends only on the
//! bridge topology, which is read from the [`ConnectivityMatrix`].

mod connectivity;

pub use connectivity::{connectivity_matrix, ConnectivityMatrix};
pub use crate::function::EdgePairFunction;

use crate::error::Result;
use crate::graph::{ConnectivityEntry, Divisor, EndpointPair, GraphPoint};
use crate::network::Network;
use crate::potential::{bridge_term, TauFunction};
use crate::scalar::Scalar;

/// `g_{μ_D}` on a network, with the divisor-dependent constants precomputed.
#[derive(Debug, Clone)]
pub struct GreenFunction<'a, S> {
    net: &'a Network<S>,
    divisor: Divisor,
    tau_d: TauFunction<S>,
}

impl<'a, S: Scalar> GreenFunction<'a, S> {
    pub fn new(net: &'a Network<S>, divisor: &Divisor) -> Result<Self> {
        let tau_d = TauFunction::new(net, divisor)?;
        Ok(GreenFunction { net, divisor: divisor.clone(), tau_d })
    }

    pub fn network(&self) -> &'a Network<S> {
        self.net
    }

    pub fn divisor(&self) -> &Divisor {
        &self.divisor
    }

    pub fn tau(&self) -> &S {
        &self.tau_d.tau
    }

    pub fn c_mu(&self) -> &S {
        &self.tau_d.c_mu
    }

    /// `z_ij`, the restriction of `g_{μ_D}` to `e_i × e_j`.
    pub fn entry(&self, i: usize, j: usize) -> EdgePairFunction<S> {
        let net = self.net;
        let tau = self.tau_d.pair(i, j).to_pair_function();
        let (pi, qi, li) = net.ends(i);
        let (pj, qj, lj) = net.ends(j);
        let zero = EdgePairFunction::zero(i, j);
        let half = S::half();
        let two = S::from_i64(2);
        // (L − r(p,q)) / (2L²) for each edge
        let curv_i = (li.clone() - net.r(pi, qi)) / (two.clone() * li.clone() * li.clone());
        let curv_j = (lj.clone() - net.r(pj, qj)) / (two.clone() * lj.clone() * lj.clone());

        if i == j {
            let abs = EdgePairFunction { cabs: -half, ..zero };
            if net.is_bridge(i) {
                return tau + abs;
            }
            let square = EdgePairFunction {
                cxx: curv_i.clone(),
                cyy: curv_i.clone(),
                cxy: -two * curv_i,
                ..EdgePairFunction::zero(i, j)
            };
            return tau + abs + square;
        }

        match (net.is_bridge(i), net.is_bridge(j), net.entry(i, j)) {
            (false, false, _) => {
                let lilj = li.clone() * lj.clone();
                let body = EdgePairFunction {
                    cxx: curv_i,
                    cyy: curv_j,
                    cxy: -(net.j(pj, pi, qj) - net.j(pj, qi, qj)) / lilj,
                    cx: -(li.clone() - two.clone() * net.j(pi, qi, pj)) / (two.clone() * li),
                    cy: -(lj.clone() - two.clone() * net.j(pj, pi, qj)) / (two * lj),
                    c0: -half * net.r(pi, pj),
                    ..zero
                };
                tau + body
            }
            (true, false, ConnectivityEntry::Side(side)) => {
                let y2 = EdgePairFunction { cyy: curv_j, ..zero };
                tau + y2 - bridge_term(net, side, i, j) * half
            }
            (false, true, ConnectivityEntry::Side(side)) => {
                let x2 = EdgePairFunction { cxx: curv_i, ..zero };
                tau + x2 - bridge_term(net, side, j, i).swapped() * half
            }
            (true, true, ConnectivityEntry::BridgePair { neighbours, .. }) => {
                let one = S::one();
                let (cx, cy, c0) = match neighbours {
                    EndpointPair::PP => (one.clone(), one, net.r(pi, pj)),
                    EndpointPair::PQ => (one.clone(), -one, lj + net.r(pi, qj)),
                    EndpointPair::QP => (-one.clone(), one, li + net.r(qi, pj)),
                    EndpointPair::QQ => (-one.clone(), -one, li + lj + net.r(qi, qj)),
                };
                tau - EdgePairFunction { cx, cy, c0, ..zero } * half
            }
            (bi, bj, e) => unreachable!("inconsistent connectivity ({bi}, {bj}, {e:?})"),
        }
    }

    pub fn value_matrix(&self) -> ValueMatrix<S> {
        let m = self.net.edge_count();
        let entries = (0..m * m).map(|k| self.entry(k / m, k % m)).collect();
        let vm = ValueMatrix { divisor: self.divisor.clone(), size: m, entries };
        if let Some((i, j)) = vm.asymmetry() {
            panic!("value matrix is not symmetric at ({i}, {j})");
        }
        vm
    }

    pub fn evaluate(&self, x: &GraphPoint<S>, y: &GraphPoint<S>) -> Result<S> {
        self.net.graph().check_point(x)?;
        self.net.graph().check_point(y)?;
        Ok(self.entry(x.edge, y.edge).evaluate(&x.offset, &y.offset))
    }
}

/// The `m × m` matrix of functions `z_ij` describing `g_{μ_D}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueMatrix<S> {
    divisor: Divisor,
    size: usize,
    entries: Vec<EdgePairFunction<S>>,
}

impl<S: Scalar> ValueMatrix<S> {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn divisor(&self) -> &Divisor {
        &self.divisor
    }

    pub fn get(&self, i: usize, j: usize) -> &EdgePairFunction<S> {
        &self.entries[i * self.size + j]
    }

    /// Mutable access, for building perturbed copies in diagnostics.
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut EdgePairFunction<S> {
        &mut self.entries[i * self.size + j]
    }

    pub fn evaluate(&self, x: &GraphPoint<S>, y: &GraphPoint<S>) -> S {
        self.get(x.edge, y.edge).evaluate(&x.offset, &y.offset)
    }

    /// First `(i, j)` where `z_ij(x, y) ≠ z_ji(y, x)` coefficientwise.
    pub fn asymmetry(&self) -> Option<(usize, usize)> {
        let m = self.size;
        (0..m)
            .flat_map(|i| (i..m).map(move |j| (i, j)))
            .find(|&(i, j)| !self.get(i, j).approx_eq(&self.get(j, i).swapped()))
    }
}

pub fn value_matrix_entry<S: Scalar>(
    net: &Network<S>,
    d: &Divisor,
    i: usize,
    j: usize,
) -> Result<EdgePairFunction<S>> {
    net.graph().edge(i)?;
    net.graph().edge(j)?;
    Ok(GreenFunction::new(net, d)?.entry(i, j))
}

pub fn value_matrix<S: Scalar>(net: &Network<S>, d: &Divisor) -> Result<ValueMatrix<S>> {
    Ok(GreenFunction::new(net, d)?.value_matrix())
}

/// `g_{μ_D}(x, y)` for two arbitrary points.
pub fn evaluate_g<S: Scalar>(
    net: &Network<S>,
    d: &Divisor,
    x: &GraphPoint<S>,
    y: &GraphPoint<S>,
) -> Result<S> {
    GreenFunction::new(net, d)?.evaluate(x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::error::Error;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    fn circle() -> Network<Rational> {
        Network::new(catalog::circle()).unwrap()
    }

    #[test]
    fn circle_entries() {
        let net = circle();
        let d = Divisor::zero(3);
        let z00 = value_matrix_entry(&net, &d, 0, 0).unwrap();
        let expected = EdgePairFunction {
            c0: q(1, 6),
            cxx: q(1, 4),
            cyy: q(1, 4),
            cxy: q(-1, 2),
            cabs: q(-1, 2),
            ..EdgePairFunction::zero(0, 0)
        };
        assert_eq!(z00, expected);
        let z02 = value_matrix_entry(&net, &d, 0, 2).unwrap();
        let expected = EdgePairFunction {
            c0: q(-1, 48),
            cx: q(1, 4),
            cy: q(-1, 4),
            cxx: q(1, 4),
            cyy: q(1, 4),
            cxy: q(-1, 2),
            ..EdgePairFunction::zero(0, 2)
        };
        assert_eq!(z02, expected);
    }

    #[test]
    fn segment_entry_and_values() {
        let seg = Network::new(catalog::segment(q(1, 1))).unwrap();
        let z = value_matrix_entry(&seg, &Divisor::zero(2), 0, 0).unwrap();
        assert_eq!(z, EdgePairFunction { c0: q(1, 4), cabs: q(-1, 2), ..EdgePairFunction::zero(0, 0) });
        let g = evaluate_g(
            &seg,
            &Divisor::new(vec![1, 1]),
            &GraphPoint::new(0, q(0, 1)),
            &GraphPoint::new(0, q(1, 1)),
        )
        .unwrap();
        assert_eq!(g, q(-1, 4));
    }

    #[test]
    fn vertex_values_on_circle() {
        let net = circle();
        let d = Divisor::zero(3);
        let p0 = GraphPoint::new(0, q(0, 1));
        let p1 = GraphPoint::new(0, q(1, 2));
        assert_eq!(evaluate_g(&net, &d, &p0, &p1).unwrap(), q(-1, 48));
        let x = GraphPoint::new(1, q(2, 7));
        assert_eq!(evaluate_g(&net, &d, &x, &x).unwrap(), q(1, 6));
        assert!(evaluate_g(&net, &d, &GraphPoint::new(1, q(2, 1)), &x).is_err());
    }

    #[test]
    fn bad_degree_is_reported() {
        let net = circle();
        let d = Divisor::new(vec![-2, 0, 0]);
        assert_eq!(value_matrix(&net, &d).unwrap_err(), Error::BadDegree { degree: -2 });
    }

    #[test]
    fn two_bridge_matrix_is_symmetric() {
        let net = Network::new(catalog::two_bridges::<Rational>()).unwrap();
        let vm = value_matrix(&net, &Divisor::new(vec![1, 0, 2, 0, -1, 3])).unwrap();
        assert_eq!(vm.asymmetry(), None);
        let mut bad = vm.clone();
        bad.get_mut(0, 5).c0 = bad.get(0, 5).c0.clone() + q(1, 1);
        assert_eq!(bad.asymmetry(), Some((0, 5)));
    }
}
