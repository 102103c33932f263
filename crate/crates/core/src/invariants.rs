//! The epsilon invariant by two independent formulas, and two self-checks of
//! a value matrix.

use std::fmt;

use crate::error::Result;
use crate::graph::{Divisor, GraphPoint};
use crate::green::{GreenFunction, ValueMatrix};
use crate::network::Network;
use crate::potential::{c_mu_d_with_tau, resistance_point, tau_constant};
use crate::scalar::Scalar;

/// `ε_D` from `g_{μ_D}` with base point `p_{e_0}`.
pub fn epsilon_via_green<S: Scalar>(net: &Network<S>, d: &Divisor) -> Result<S> {
    let vm = GreenFunction::new(net, d)?.value_matrix();
    epsilon_with_base(net, &vm, &GraphPoint::new(0, S::zero()))
}

/// `ε_D = (deg D + 2) Σ a_k g(p, p_k) + Σ a_k r(p, p_k)` at an arbitrary base point `p`.
pub fn epsilon_with_base<S: Scalar>(net: &Network<S>, vm: &ValueMatrix<S>, base: &GraphPoint<S>) -> Result<S> {
    let g = net.graph();
    let d = vm.divisor();
    d.check_for(g)?;
    g.check_point(base)?;
    let mut green_sum = S::zero();
    let mut resistance_sum = S::zero();
    for (k, a) in d.terms() {
        let a = S::from_i64(a);
        let pk = g.vertex_point(k);
        green_sum = green_sum + a.clone() * vm.evaluate(base, &pk);
        resistance_sum = resistance_sum + a * resistance_point(net, base, &pk)?;
    }
    Ok(S::from_i64(d.degree() + 2) * green_sum + resistance_sum)
}

/// `ε_D = (4τ deg D + Σ a_k a_l r(p_k, p_l)) / (deg D + 2)`.
pub fn epsilon_via_resistance<S: Scalar>(net: &Network<S>, d: &Divisor) -> Result<S> {
    d.check_for(net.graph())?;
    d.check_admissible()?;
    let mut double_sum = S::zero();
    for (k, a) in d.terms() {
        for (l, b) in d.terms() {
            double_sum = double_sum + S::from_i64(a * b) * net.r(k, l);
        }
    }
    let tau = tau_constant(net);
    Ok((S::from_i64(4) * tau * S::from_i64(d.degree()) + double_sum) / S::from_i64(d.degree() + 2))
}

/// One comparison made by a check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckEntry<S> {
    pub location: String,
    pub expected: S,
    pub got: S,
}

impl<S: Scalar> CheckEntry<S> {
    pub fn matches(&self) -> bool {
        self.expected.approx_eq(&self.got)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport<S> {
    pub name: String,
    pub entries: Vec<CheckEntry<S>>,
    pub pass: bool,
}

impl<S: Scalar> CheckReport<S> {
    fn new(name: &str, entries: Vec<CheckEntry<S>>) -> Self {
        let pass = entries.iter().all(CheckEntry::matches);
        CheckReport { name: name.to_string(), entries, pass }
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CheckEntry<S>> {
        self.entries.iter().filter(|e| !e.matches())
    }
}

impl<S: Scalar> fmt::Display for CheckReport<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        writeln!(f, "{}: {status} ({} comparisons)", self.name, self.entries.len())?;
        for e in self.mismatches() {
            writeln!(f, "  {}: expected {}, got {}", e.location, e.expected, e.got)?;
        }
        Ok(())
    }
}

fn describe<S: Scalar>(p: &GraphPoint<S>) -> String {
    format!("({}:{})", p.edge, p.offset)
}

/// Every representation of every vertex pair must give the same value.
///
/// The first representation of each pair is the reference value.
pub fn check_representation_independence<S: Scalar>(net: &Network<S>, vm: &ValueMatrix<S>) -> CheckReport<S> {
    let g = net.graph();
    let n = g.vertex_count();
    let reps: Vec<Vec<GraphPoint<S>>> = (0..n).map(|v| g.vertex_points(v)).collect();
    let mut entries = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if reps[p].len() < 2 && reps[q].len() < 2 {
                continue;
            }
            let reference = vm.evaluate(&reps[p][0], &reps[q][0]);
            for x in &reps[p] {
                for y in &reps[q] {
                    if x == &reps[p][0] && y == &reps[q][0] {
                        continue;
                    }
                    entries.push(CheckEntry {
                        location: format!(
                            "g(p{p}, p{q}) via z[{}][{}] at {} {}",
                            x.edge,
                            y.edge,
                            describe(x),
                            describe(y)
                        ),
                        expected: reference.clone(),
                        got: vm.evaluate(x, y),
                    });
                }
            }
        }
    }
    CheckReport::new("representation independence", entries)
}

/// Value matrix against the vertex formula built straight from `L⁺`.
pub fn check_vertex_formula<S: Scalar>(net: &Network<S>, vm: &ValueMatrix<S>) -> Result<CheckReport<S>> {
    let g = net.graph();
    let d = vm.divisor();
    d.check_for(g)?;
    d.check_admissible()?;
    let n = g.vertex_count();
    let tau = tau_constant(net);
    let c_mu = c_mu_d_with_tau(net, d, &tau);
    let mut entries = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            entries.push(CheckEntry {
                location: format!("g(p{x}, p{y})"),
                expected: green_at_vertices(net, d, &tau, &c_mu, x, y),
                got: vm.evaluate(&g.vertex_point(x), &g.vertex_point(y)),
            });
        }
    }
    Ok(CheckReport::new("vertex formula", entries))
}

/// `g(x, y) = (Σ a_s j_s(x, y) + 4τ − r(x, y)) / (deg D + 2) − c_{μ_D}` at vertices.
pub(crate) fn green_at_vertices<S: Scalar>(
    net: &Network<S>,
    d: &Divisor,
    tau: &S,
    c_mu: &S,
    x: usize,
    y: usize,
) -> S {
    let voltage_sum = d
        .terms()
        .fold(S::zero(), |acc, (s, a)| acc + S::from_i64(a) * net.j(s, x, y));
    (voltage_sum + S::from_i64(4) * tau.clone() - net.r(x, y)) / S::from_i64(d.degree() + 2)
        - c_mu.clone()
}
