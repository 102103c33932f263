//! Independent ground truth by subdivision.
//!
//! Any rational point can be made a vertex without changing the metric graph,
//! after which resistance and `g_{μ_D}` follow from `L⁺` of the refined graph
//! alone. None of the per-edge closed forms are used here.

use crate::error::Result;
use crate::graph::{cut_edges, Divisor, GraphPoint, MetrizedGraph};
use crate::invariants::green_at_vertices;
use crate::network::Network;
use crate::potential::{c_mu_d_with_tau, tau_constant};
use crate::scalar::Scalar;

/// A refinement in which every requested point is a vertex.
#[derive(Debug, Clone)]
pub struct SubdividedGraph<S> {
    pub graph: MetrizedGraph<S>,
    /// Vertex index of each requested point, in request order.
    pub point_vertices: Vec<usize>,
}

/// Promotes each point to a vertex. Original vertices keep their indices and
/// duplicate metric points share a vertex.
pub fn subdivide_at_points<S: Scalar>(
    g: &MetrizedGraph<S>,
    points: &[GraphPoint<S>],
) -> Result<SubdividedGraph<S>> {
    for p in points {
        g.check_point(p)?;
    }
    let mut cuts: Vec<Vec<S>> = vec![Vec::new(); g.edge_count()];
    for p in points {
        if g.vertex_at(p).is_none() && !cuts[p.edge].contains(&p.offset) {
            cuts[p.edge].push(p.offset.clone());
        }
    }
    for c in &mut cuts {
        c.sort_by(|a, b| a.partial_cmp(b).expect("offsets are comparable"));
    }
    let (refined, map) = cut_edges(g, &cuts);
    // splitting an adequate graph cannot create loops or parallel edges
    debug_assert!(!g.is_adequate() || refined.is_adequate());
    let (refined, second) = refined.make_adequate();
    let point_vertices = points
        .iter()
        .map(|p| {
            let mapped = second.map_point(&map.map_point(p));
            refined.vertex_at(&mapped).expect("requested points are vertices after cutting")
        })
        .collect();
    Ok(SubdividedGraph { graph: refined, point_vertices })
}

/// `r(x, y)` from `L⁺` of the graph subdivided at `x` and `y`.
pub fn oracle_resistance<S: Scalar>(g: &MetrizedGraph<S>, x: &GraphPoint<S>, y: &GraphPoint<S>) -> Result<S> {
    let sub = subdivide_at_points(g, &[x.clone(), y.clone()])?;
    let net = Network::new(sub.graph)?;
    net.resistance(sub.point_vertices[0], sub.point_vertices[1])
}

/// `g_{μ_D}(x, y)` from the vertex formula on the graph subdivided at `x` and `y`.
pub fn oracle_green<S: Scalar>(
    g: &MetrizedGraph<S>,
    d: &Divisor,
    x: &GraphPoint<S>,
    y: &GraphPoint<S>,
) -> Result<S> {
    d.check_for(g)?;
    d.check_admissible()?;
    let sub = subdivide_at_points(g, &[x.clone(), y.clone()])?;
    let d = d.extended(sub.graph.vertex_count());
    let net = Network::new(sub.graph)?;
    let tau = tau_constant(&net);
    let c_mu = c_mu_d_with_tau(&net, &d, &tau);
    Ok(green_at_vertices(&net, &d, &tau, &c_mu, sub.point_vertices[0], sub.point_vertices[1]))
}
