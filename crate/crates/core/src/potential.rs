//! Tau constant, resistance between arbitrary points, `r(D, ·)` on each edge,
//! the constant `c_{μ_D}` and the tau function `τ_D`.

use crate::error::Result;
use crate::function::{EdgeFunction, EdgePairFunction};
use crate::graph::{ConnectivityEntry, Divisor, EndpointPair, GraphPoint, Side};
use crate::network::Network;
use crate::scalar::Scalar;

/// `τ(Γ)` from the Laplacian and its pseudo-inverse.
pub fn tau_constant<S: Scalar>(net: &Network<S>) -> S {
    let (lap, pinv) = (net.laplacian(), net.pinv());
    let n = net.vertex_count();
    let mut edge_sum = S::zero();
    for e in net.graph().edges() {
        let l = lap[(e.tail, e.head)].clone();
        let t = S::one() / l.clone() + net.r(e.tail, e.head);
        edge_sum = edge_sum + l * t.clone() * t;
    }
    let mut cross = S::zero();
    for q in 0..n {
        for s in 0..n {
            if !lap[(q, s)].is_zero() {
                cross = cross + lap[(q, s)].clone() * pinv[(q, q)].clone() * pinv[(s, s)].clone();
            }
        }
    }
    -edge_sum / S::from_i64(12) + cross / S::from_i64(4) + pinv.trace() / S::from_i64(n as i64)
}

/// Resistance between vertex `s` and the points of edge `i`, as a function of the offset.
pub fn resistance_to_vertex<S: Scalar>(net: &Network<S>, s: usize, i: usize) -> Result<EdgeFunction<S>> {
    net.graph().check_vertex(s)?;
    let (p, q, len) = net.ends(i);
    if net.is_bridge(i) {
        return Ok(match net.side(i, s)? {
            Side::P => EdgeFunction::new(i, S::zero(), S::one(), net.r(s, p)),
            Side::Q => EdgeFunction::new(i, S::zero(), -S::one(), len + net.r(s, q)),
        });
    }
    let slack = len.clone() - net.r(p, q);
    Ok(EdgeFunction::new(
        i,
        -slack.clone() / (len.clone() * len.clone()),
        (slack + net.r(s, q) - net.r(s, p)) / len,
        net.r(s, p),
    ))
}

/// `r(x, y)` for `x ∈ e_i`, `y ∈ e_j`, as exact coefficients.
pub fn resistance_on_edges<S: Scalar>(net: &Network<S>, i: usize, j: usize) -> EdgePairFunction<S> {
    let (pi, qi, li) = net.ends(i);
    let (pj, qj, lj) = net.ends(j);
    let zero = EdgePairFunction::zero(i, j);
    let slack_i = li.clone() - net.r(pi, qi);
    let slack_j = lj.clone() - net.r(pj, qj);
    if i == j {
        if net.is_bridge(i) {
            return EdgePairFunction { cabs: S::one(), ..zero };
        }
        // |x−y| − (x−y)²·(L − r(p,q))/L²
        let k = slack_i / (li.clone() * li);
        return EdgePairFunction {
            cabs: S::one(),
            cxx: -k.clone(),
            cyy: -k.clone(),
            cxy: k * S::from_i64(2),
            ..zero
        };
    }
    let two = S::from_i64(2);
    match net.entry(i, j) {
        ConnectivityEntry::NotApplicable => EdgePairFunction {
            cxx: -slack_i / (li.clone() * li.clone()),
            cyy: -slack_j / (lj.clone() * lj.clone()),
            cxy: two.clone() * (net.j(pj, pi, qj) - net.j(pj, qi, qj)) / (li.clone() * lj.clone()),
            cx: (li.clone() - two.clone() * net.j(pi, qi, pj)) / li,
            cy: (lj.clone() - two * net.j(pj, pi, qj)) / lj,
            c0: net.r(pi, pj),
            ..zero
        },
        ConnectivityEntry::BridgePair { neighbours, .. } => {
            let one = S::one();
            let (cx, cy, c0) = match neighbours {
                EndpointPair::PP => (one.clone(), one, net.r(pi, pj)),
                EndpointPair::PQ => (one.clone(), -one, lj + net.r(pi, qj)),
                EndpointPair::QP => (-one.clone(), one, li + net.r(qi, pj)),
                EndpointPair::QQ => (-one.clone(), -one, li + lj + net.r(qi, qj)),
            };
            EdgePairFunction { cx, cy, c0, ..zero }
        }
        ConnectivityEntry::Side(side) if net.is_bridge(i) => {
            let y2 = -slack_j.clone() / (lj.clone() * lj.clone());
            let t = bridge_term(net, side, i, j);
            EdgePairFunction { cyy: y2, ..zero } + t
        }
        ConnectivityEntry::Side(_) => resistance_on_edges(net, j, i).swapped(),
        ConnectivityEntry::SelfBridge => unreachable!("off-diagonal entry"),
    }
}

/// `T₁` (side P) or `T₂` (side Q) for bridge `e_i` and non-bridge `e_j`.
pub(crate) fn bridge_term<S: Scalar>(net: &Network<S>, side: Side, i: usize, j: usize) -> EdgePairFunction<S> {
    let (pi, qi, li) = net.ends(i);
    let (pj, qj, lj) = net.ends(j);
    let slack_j = lj.clone() - net.r(pj, qj);
    let zero = EdgePairFunction::zero(i, j);
    match side {
        Side::P => EdgePairFunction {
            cy: (slack_j + net.r(pi, qj) - net.r(pi, pj)) / lj,
            cx: S::one(),
            c0: net.r(pi, pj),
            ..zero
        },
        Side::Q => EdgePairFunction {
            cy: (slack_j + net.r(qi, qj) - net.r(qi, pj)) / lj,
            cx: -S::one(),
            c0: li + net.r(qi, pj),
            ..zero
        },
    }
}

/// Effective resistance between two arbitrary points.
pub fn resistance_point<S: Scalar>(net: &Network<S>, x: &GraphPoint<S>, y: &GraphPoint<S>) -> Result<S> {
    let g = net.graph();
    g.check_point(x)?;
    g.check_point(y)?;
    if let (Some(u), Some(v)) = (g.vertex_at(x), g.vertex_at(y)) {
        return Ok(net.r(u, v));
    }
    Ok(resistance_on_edges(net, x.edge, y.edge).evaluate(&x.offset, &y.offset))
}

/// `r(D, ·)` restricted to edge `i`, routed through the connectivity matrix.
pub fn r_d_on_edge<S: Scalar>(net: &Network<S>, d: &Divisor, i: usize) -> Result<EdgeFunction<S>> {
    d.check_for(net.graph())?;
    net.graph().edge(i)?;
    let (p, q, len) = net.ends(i);
    let mut acc = EdgeFunction::zero(i);
    if !net.is_bridge(i) {
        let slack = len.clone() - net.r(p, q);
        let a2 = -slack.clone() / (len.clone() * len.clone());
        for (k, a) in d.terms() {
            let a = S::from_i64(a);
            let term = EdgeFunction::new(
                i,
                a2.clone(),
                (slack.clone() + net.r(k, q) - net.r(k, p)) / len.clone(),
                net.r(k, p),
            );
            acc = acc + term.scale(&a);
        }
        return Ok(acc);
    }
    for (k, a) in d.terms() {
        let a = S::from_i64(a);
        let term = if k == p {
            EdgeFunction::new(i, S::zero(), S::one(), S::zero())
        } else if k == q {
            EdgeFunction::new(i, S::zero(), -S::one(), len.clone())
        } else {
            // any other edge at p_k tells which side of e_i the vertex is on
            let j = (0..net.edge_count())
                .find(|&j| j != i && net.graph().edges()[j].has_endpoint(k))
                .expect("a vertex off e_i has another incident edge");
            let on_p_side = match net.entry(i, j) {
                ConnectivityEntry::Side(s) => s == Side::P,
                ConnectivityEntry::BridgePair { side, .. } => side == Side::P,
                other => unreachable!("bridge row holds {other:?}"),
            };
            if on_p_side {
                EdgeFunction::new(i, S::zero(), S::one(), net.r(k, p))
            } else {
                EdgeFunction::new(i, S::zero(), -S::one(), len.clone() + net.r(k, q))
            }
        };
        acc = acc + term.scale(&a);
    }
    Ok(acc)
}

/// `c_{μ_D}`; requires `deg(D) ≠ −2`.
pub fn c_mu_d<S: Scalar>(net: &Network<S>, d: &Divisor) -> Result<S> {
    d.check_for(net.graph())?;
    d.check_admissible()?;
    Ok(c_mu_d_with_tau(net, d, &tau_constant(net)))
}

pub(crate) fn c_mu_d_with_tau<S: Scalar>(net: &Network<S>, d: &Divisor, tau: &S) -> S {
    let deg = d.degree();
    let mut double_sum = S::zero();
    for (s, a) in d.terms() {
        for (t, b) in d.terms() {
            double_sum = double_sum + S::from_i64(a * b) * net.r(s, t);
        }
    }
    let shifted = S::from_i64(deg + 2);
    (S::from_i64(8) * tau.clone() * S::from_i64(deg + 1) + double_sum)
        / (S::from_i64(2) * shifted.clone() * shifted)
}

/// `τ_D` on `e_i × e_j`: only the monomials `1, x, x², y, y²` occur.
#[derive(Debug, Clone, PartialEq)]
pub struct TauFunctionPair<S> {
    pub i: usize,
    pub j: usize,
    pub c0: S,
    pub cx: S,
    pub cxx: S,
    pub cy: S,
    pub cyy: S,
}

impl<S: Scalar> TauFunctionPair<S> {
    pub fn evaluate(&self, x: &S, y: &S) -> S {
        self.to_pair_function().evaluate(x, y)
    }

    pub fn to_pair_function(&self) -> EdgePairFunction<S> {
        EdgePairFunction {
            c0: self.c0.clone(),
            cx: self.cx.clone(),
            cxx: self.cxx.clone(),
            cy: self.cy.clone(),
            cyy: self.cyy.clone(),
            ..EdgePairFunction::zero(self.i, self.j)
        }
    }
}

/// Everything `τ_D` needs, computed once per divisor.
#[derive(Debug, Clone)]
pub struct TauFunction<S> {
    pub tau: S,
    pub c_mu: S,
    pub degree: i64,
    pub r_d: Vec<EdgeFunction<S>>,
}

impl<S: Scalar> TauFunction<S> {
    pub fn new(net: &Network<S>, d: &Divisor) -> Result<Self> {
        d.check_for(net.graph())?;
        d.check_admissible()?;
        let tau = tau_constant(net);
        let c_mu = c_mu_d_with_tau(net, d, &tau);
        let r_d = (0..net.edge_count()).map(|i| r_d_on_edge(net, d, i)).collect::<Result<_>>()?;
        Ok(TauFunction { tau, c_mu, degree: d.degree(), r_d })
    }

    pub fn pair(&self, i: usize, j: usize) -> TauFunctionPair<S> {
        let w = S::one() / S::from_i64(self.degree + 2);
        let half_w = w.clone() * S::half();
        let (ri, rj) = (&self.r_d[i], &self.r_d[j]);
        TauFunctionPair {
            i,
            j,
            c0: w * S::from_i64(4) * self.tau.clone()
                + half_w.clone() * (ri.a0.clone() + rj.a0.clone())
                - self.c_mu.clone(),
            cx: half_w.clone() * ri.a1.clone(),
            cxx: half_w.clone() * ri.a2.clone(),
            cy: half_w.clone() * rj.a1.clone(),
            cyy: half_w * rj.a2.clone(),
        }
    }
}

pub fn tau_function_pair<S: Scalar>(
    net: &Network<S>,
    d: &Divisor,
    i: usize,
    j: usize,
) -> Result<TauFunctionPair<S>> {
    net.graph().edge(i)?;
    net.graph().edge(j)?;
    Ok(TauFunction::new(net, d)?.pair(i, j))
}
