//! Driver behind the `metgraph` binary.
//!
//! Input graphs that are not adequate are refined first. Points and divisors
//! given on the command line always refer to the graph as written in the file.

use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use metgraph::graph::Refinement;
use metgraph::green::value_matrix;
use metgraph::invariants::{
    check_representation_independence, check_vertex_formula, epsilon_via_green, epsilon_via_resistance,
    CheckReport,
};
use metgraph::io::{decimal_string, parse_divisor, parse_graph, parse_point};
use metgraph::oracle::{oracle_green, oracle_resistance};
use metgraph::potential::{resistance_point, tau_constant};
use metgraph::{Divisor, ExactGraph, ExactMatrix, ExactNetwork, GraphPoint, GreenFunction, Network, Rational};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Green,
    Resistance,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Info,
    Laplacian,
    Pinv,
    Tau,
    Resistance { x: String, y: String },
    Green { x: String, y: String },
    ValueMatrix,
    Epsilon { method: Method },
    Check,
    Oracle { points: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Exact,
    /// Exact value followed by a rounded decimal with this many digits.
    Decimal(usize),
    Machine,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub command: Command,
    /// Replaces the divisor stored in the file.
    pub divisor: Option<String>,
    pub output: OutputMode,
}

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

enum Failure {
    Input(String),
    Io(std::io::Error),
}

impl From<metgraph::Error> for Failure {
    fn from(e: metgraph::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<u8, Failure>;

/// Runs one command, writing results to `out` and diagnostics to `err`.
pub fn run(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(config, out, err) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

/// The graph as read, its adequate refinement and the divisor on the refinement.
struct Loaded {
    original: ExactGraph,
    net: ExactNetwork,
    refinement: Refinement<Rational>,
    divisor: Divisor,
}

impl Loaded {
    fn graph(&self) -> &ExactGraph {
        self.net.graph()
    }

    /// Reads `i:p/q` on the original graph and moves it to the refinement.
    fn point(&self, s: &str) -> Result<GraphPoint<Rational>, Failure> {
        let p = parse_point(s)?;
        self.original.check_point(&p)?;
        Ok(self.refinement.map_point(&p))
    }
}

fn load(config: &RunConfig, err: &mut dyn Write) -> Result<Loaded, Failure> {
    let text = std::fs::read_to_string(&config.input)
        .map_err(|e| Failure::Input(format!("{}: {e}", config.input.display())))?;
    let (original, file_divisor) = parse_graph(&text)?;
    let divisor = match &config.divisor {
        Some(s) => {
            let d = parse_divisor(s)?;
            d.check_for(&original)?;
            d
        }
        None => file_divisor,
    };
    let (refined, refinement) = original.make_adequate();
    if !refinement.is_identity() {
        writeln!(
            err,
            "note: vertex set refined to {} vertices and {} edges",
            refined.vertex_count(),
            refined.edge_count()
        )?;
    }
    let divisor = divisor.extended(refined.vertex_count());
    let net = Network::new(refined)?;
    Ok(Loaded { original, net, refinement, divisor })
}

fn scalar(mode: OutputMode, v: &Rational) -> String {
    match mode {
        OutputMode::Decimal(k) => format!("{v} ~ {}", decimal_string(v, k)),
        _ => v.to_string(),
    }
}

fn text<T: Display>(v: &T) -> Value {
    Value::String(v.to_string())
}

fn matrix_json(m: &ExactMatrix) -> Value {
    Value::Array((0..m.rows()).map(|r| Value::Array(m.row(r).iter().map(text).collect())).collect())
}

fn emit(out: &mut dyn Write, doc: Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))
}

fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let loaded = load(config, err)?;
    let mode = config.output;
    let machine = mode == OutputMode::Machine;
    let net = &loaded.net;
    let d = &loaded.divisor;
    match &config.command {
        Command::Info => info(&loaded, mode, out),
        Command::Laplacian | Command::Pinv => {
            let (name, m) = match config.command {
                Command::Laplacian => ("laplacian", net.laplacian()),
                _ => ("pinv", net.pinv()),
            };
            if machine {
                emit(out, json!({ "command": name, "matrix": matrix_json(m) }))?;
            } else {
                write!(out, "{m}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Tau => {
            let tau = tau_constant(net);
            if machine {
                emit(out, json!({ "command": "tau", "tau": text(&tau) }))?;
            } else {
                writeln!(out, "{}", scalar(mode, &tau))?;
            }
            Ok(EXIT_OK)
        }
        Command::Resistance { x, y } | Command::Green { x, y } => {
            let (px, py) = (loaded.point(x)?, loaded.point(y)?);
            let (name, v) = match config.command {
                Command::Resistance { .. } => ("resistance", resistance_point(net, &px, &py)?),
                _ => ("green", GreenFunction::new(net, d)?.evaluate(&px, &py)?),
            };
            if machine {
                emit(out, json!({ "command": name, "x": x, "y": y, "value": text(&v) }))?;
            } else {
                writeln!(out, "{}", scalar(mode, &v))?;
            }
            Ok(EXIT_OK)
        }
        Command::ValueMatrix => {
            let vm = value_matrix(net, d)?;
            let m = vm.size();
            if machine {
                let entries: Vec<Value> = (0..m * m)
                    .map(|k| {
                        let z = vm.get(k / m, k % m);
                        json!({
                            "i": z.i, "j": z.j,
                            "c0": text(&z.c0), "cx": text(&z.cx), "cy": text(&z.cy),
                            "cxx": text(&z.cxx), "cyy": text(&z.cyy), "cxy": text(&z.cxy),
                            "cabs": text(&z.cabs),
                        })
                    })
                    .collect();
                emit(out, json!({ "command": "value-matrix", "size": m, "entries": entries }))?;
            } else {
                for i in 0..m {
                    for j in 0..m {
                        writeln!(out, "z[{i}][{j}] = {}", vm.get(i, j))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Epsilon { method } => epsilon(net, d, *method, mode, out),
        Command::Check => {
            let vm = value_matrix(net, d)?;
            let reports = [check_representation_independence(net, &vm), check_vertex_formula(net, &vm)?];
            let pass = reports.iter().all(|r| r.pass);
            if machine {
                let checks: Vec<Value> = reports.iter().map(report_json).collect();
                emit(out, json!({ "command": "check", "pass": pass, "checks": checks }))?;
            } else {
                for r in &reports {
                    write!(out, "{r}")?;
                }
            }
            Ok(if pass { EXIT_OK } else { EXIT_MISMATCH })
        }
        Command::Oracle { points } => oracle(&loaded, points, mode, out),
    }
}

fn report_json(r: &CheckReport<Rational>) -> Value {
    let mismatches: Vec<Value> = r
        .mismatches()
        .map(|e| json!({ "location": e.location, "expected": text(&e.expected), "got": text(&e.got) }))
        .collect();
    json!({ "name": r.name, "pass": r.pass, "comparisons": r.entries.len(), "mismatches": mismatches })
}

fn info(loaded: &Loaded, mode: OutputMode, out: &mut dyn Write) -> Outcome {
    let g = loaded.graph();
    let net = &loaded.net;
    let bridges: Vec<usize> = (0..g.edge_count()).filter(|&e| net.is_bridge(e)).collect();
    let codes = net.connectivity().codes();
    let d = &loaded.divisor;
    if mode == OutputMode::Machine {
        emit(
            out,
            json!({
                "command": "info",
                "vertices": g.labels(),
                "edges": g.edge_count(),
                "total_length": text(&g.total_length()),
                "refined": !loaded.refinement.is_identity(),
                "bridges": bridges,
                "divisor": d.coefficients(),
                "degree": d.degree(),
                "connectivity": codes,
            }),
        )?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "vertices: {} ({})", g.vertex_count(), g.labels().join(" "))?;
    writeln!(out, "edges: {}", g.edge_count())?;
    for (i, e) in g.edges().iter().enumerate() {
        writeln!(out, "  e{i}: {} -> {} length {}", g.labels()[e.tail], g.labels()[e.head], e.length)?;
    }
    writeln!(out, "total length: {}", scalar(mode, &g.total_length()))?;
    let list: Vec<String> = bridges.iter().map(|b| format!("e{b}")).collect();
    writeln!(out, "bridges: {}", if list.is_empty() { "none".into() } else { list.join(" ") })?;
    let coeffs: Vec<String> = d.coefficients().iter().map(i64::to_string).collect();
    writeln!(out, "divisor: {} (degree {})", coeffs.join(" "), d.degree())?;
    writeln!(out, "connectivity:")?;
    write!(out, "{}", net.connectivity())?;
    Ok(EXIT_OK)
}

fn epsilon(net: &ExactNetwork, d: &Divisor, method: Method, mode: OutputMode, out: &mut dyn Write) -> Outcome {
    let by_green = match method {
        Method::Green | Method::Both => Some(epsilon_via_green(net, d)?),
        Method::Resistance => None,
    };
    let by_resistance = match method {
        Method::Resistance | Method::Both => Some(epsilon_via_resistance(net, d)?),
        Method::Green => None,
    };
    let agree = match (&by_green, &by_resistance) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    if mode == OutputMode::Machine {
        emit(
            out,
            json!({
                "command": "epsilon",
                "green": by_green.as_ref().map(text),
                "resistance": by_resistance.as_ref().map(text),
                "match": agree,
            }),
        )?;
    } else {
        if let Some(v) = &by_green {
            writeln!(out, "{}", scalar(mode, v))?;
        }
        if let Some(v) = &by_resistance {
            writeln!(out, "{}", scalar(mode, v))?;
        }
        if let Some(ok) = agree {
            writeln!(out, "{}", if ok { "MATCH" } else { "MISMATCH" })?;
        }
    }
    Ok(if agree == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
}

fn oracle(loaded: &Loaded, path: &PathBuf, mode: OutputMode, out: &mut dyn Write) -> Outcome {
    let text_in = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let net = &loaded.net;
    let g = loaded.graph();
    let d = &loaded.divisor;
    let green = GreenFunction::new(net, d)?;
    let mut rows = Vec::new();
    let mut mismatches = 0;
    for (n, line) in text_in.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Failure::Input(format!("{}:{}: expected two points", path.display(), n + 1)));
        }
        let at = |f: Failure| match f {
            Failure::Input(m) => Failure::Input(format!("{}:{}: {m}", path.display(), n + 1)),
            other => other,
        };
        let x = loaded.point(fields[0]).map_err(at)?;
        let y = loaded.point(fields[1]).map_err(at)?;
        let at = |e: metgraph::Error| at(e.into());
        let r = resistance_point(net, &x, &y).map_err(at)?;
        let ro = oracle_resistance(g, &x, &y).map_err(at)?;
        let v = green.evaluate(&x, &y).map_err(at)?;
        let vo = oracle_green(g, d, &x, &y).map_err(at)?;
        let (dr, dg) = (r.clone() - ro.clone(), v.clone() - vo.clone());
        if !dr.is_zero() || !dg.is_zero() {
            mismatches += 1;
        }
        rows.push((fields[0].to_string(), fields[1].to_string(), r, ro, dr, v, vo, dg));
    }
    if mode == OutputMode::Machine {
        let pairs: Vec<Value> = rows
            .iter()
            .map(|(x, y, r, ro, dr, v, vo, dg)| {
                json!({
                    "x": x, "y": y,
                    "resistance": { "closed_form": text(r), "oracle": text(ro), "diff": text(dr) },
                    "green": { "closed_form": text(v), "oracle": text(vo), "diff": text(dg) },
                })
            })
            .collect();
        emit(out, json!({ "command": "oracle", "pairs": pairs, "mismatches": mismatches }))?;
    } else {
        for (x, y, r, ro, dr, v, vo, dg) in &rows {
            writeln!(
                out,
                "{x} {y} r {} {} DIFF {dr} g {} {} DIFF {dg}",
                scalar(mode, r),
                scalar(mode, ro),
                scalar(mode, v),
                scalar(mode, vo)
            )?;
        }
        writeln!(out, "{} pairs, {mismatches} mismatches", rows.len())?;
    }
    Ok(if mismatches == 0 { EXIT_OK } else { EXIT_MISMATCH })
}
