mod common;

use common::*;
use metgraph::io::{parse_graph, serialize_graph};
use metgraph::oracle::subdivide_at_points;
use metgraph::{catalog, Divisor, Error, Network};

#[test]
fn graph_files_round_trip() {
    for name in ["segment", "circle", "joint_circles", "tesseract", "banana", "two_bridges", "circle_line"] {
        let (g, d) = load(name);
        assert_eq!(parse_graph(&serialize_graph(&g, &d)).unwrap(), (g, d), "{name}");
    }
}

#[test]
fn files_match_catalog() {
    assert_eq!(load("circle").0, catalog::circle());
    assert_eq!(load("tesseract").0, catalog::tesseract());
    assert_eq!(load("tesseract").0.total_length(), q(32, 1));
    assert_eq!(load("banana").0, catalog::banana(q(1, 1), q(2, 1), q(3, 1)));
    assert_eq!(load("two_bridges").0, catalog::two_bridges());
    assert_eq!(load("segment").0, catalog::segment(q(1, 1)));
    assert_eq!(load("circle_line").0, catalog::circle_line(q(1, 1), q(2, 1), q(3, 1)));
}

#[test]
fn point_fixtures_are_valid() {
    for name in FIXTURE_GRAPHS {
        let (g, _) = load(name);
        let pairs = point_pairs(name);
        assert!(pairs.len() >= 50, "{name}");
        for (x, y) in pairs {
            g.check_point(&x).unwrap();
            g.check_point(&y).unwrap();
        }
        assert!(interior_points(&g, name).len() >= 10, "{name}");
    }
}

#[test]
fn circle_line_needs_refinement() {
    let (g, d) = load("circle_line");
    assert!(!g.is_adequate());
    assert_eq!(Network::new(g.clone()).unwrap_err(), Error::NotAdequate);
    let (a, map) = g.make_adequate();
    assert!(a.is_adequate());
    assert_eq!(a.total_length(), g.total_length());
    // the new midpoint is the only added vertex, so the divisor extends by a zero
    let d = d.extended(a.vertex_count());
    assert_eq!(d, Divisor::new(vec![1, 1, 1, 0]));
    let net = Network::new(a.clone()).unwrap();
    let x = map.map_point(&metgraph::GraphPoint::new(1, q(1, 1)));
    assert_eq!(a.vertex_at(&x), Some(3));
    // same graph as the hand-made adequate version, up to vertex order
    let hand = Network::new(catalog::circle_line_adequate(q(2, 1), q(1, 1), q(3, 1))).unwrap();
    assert_eq!(metgraph::potential::tau_constant(&net), metgraph::potential::tau_constant(&hand));
}

#[test]
fn subdividing_every_fixture_point_keeps_vertex_resistances() {
    let (g, _) = load("two_bridges");
    let net = Network::new(g.clone()).unwrap();
    let points: Vec<_> = fixture_points("two_bridges").into_iter().take(30).collect();
    let sub = subdivide_at_points(&g, &points).unwrap();
    let refined = Network::new(sub.graph).unwrap();
    for u in 0..g.vertex_count() {
        for v in 0..g.vertex_count() {
            assert_eq!(net.resistance(u, v).unwrap(), refined.resistance(u, v).unwrap());
        }
    }
}
