use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use oddcut_core::cuts::CutCertificate;
use oddcut_core::cycle_space::{CycleSpaceBasis, MAX_ENUMERATION_DIM};
use oddcut_core::generators::{self, NamedInstance};
use oddcut_core::trail::verify_circuit_walk;
use oddcut_core::{
    extend_to_even_subgraph, feasible_by_bruteforce, find_circuit, min_odd_cut, verify_circuit, CircuitOutcome,
    EdgeSet, Graph,
};
use serde_json::{json, Value};

use crate::report::{RunReport, Status};

pub fn load_graph(path: &std::path::Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn edge_set(g: &Graph, ids: &[usize]) -> Result<EdgeSet> {
    for &e in ids {
        g.check_edge(e)?;
    }
    Ok(EdgeSet::from_ids(g.edge_count(), ids.iter().copied()))
}

pub fn check(g: &Graph, label: &str, k: usize) -> Result<RunReport> {
    let mut r = RunReport::new("check", label);
    let start = Instant::now();
    let cut = min_odd_cut(g)?;
    r.time("min_odd_cut", start.elapsed());
    match &cut {
        None => {
            r.line("min odd cut: none");
            r.line("universal for all k");
        }
        Some(c) => {
            r.line(format!("min odd cut: {} (side {:?}, boundary {:?})", c.size, c.side, c.boundary.to_vec()));
            if c.size > k {
                r.line(format!("universal for k = {k}"));
            } else {
                r.line(format!("not universal for k = {k}"));
                r.status = Status::Certificate;
            }
            r.verdicts.odd_cut = Some(c.size);
            r.result = Some(serde_json::to_value(c)?);
        }
    }
    Ok(r)
}

pub struct FindOptions {
    pub certify: bool,
    pub oracle_fallback: bool,
}

pub fn find(g: &Graph, label: &str, s: &EdgeSet, opts: &FindOptions) -> Result<RunReport> {
    let mut r = RunReport::new("find", label);
    let start = Instant::now();
    let out = find_circuit(g, s)?;
    r.time("find_circuit", start.elapsed());
    r.result = Some(serde_json::to_value(&out)?);
    match &out {
        CircuitOutcome::Circuit(t) => {
            r.verdicts.circuit = Some(true);
            r.line(format!("circuit of length {}: {:?}", t.len(), t.vertices()));
            if opts.certify {
                let ok = verify_circuit(g, t, s).is_ok();
                r.verdicts.verified = Some(ok);
                if !ok {
                    bail!("returned circuit failed verification");
                }
                r.line("verified");
            }
        }
        CircuitOutcome::OddCut(c) => {
            r.status = Status::Certificate;
            r.verdicts.circuit = Some(false);
            r.verdicts.odd_cut = Some(c.size);
            r.line(format!("odd cut of size {}: side {:?}, boundary {:?}", c.size, c.side, c.boundary.to_vec()));
            if opts.certify {
                let ok = c.validate(g).is_ok() && c.certifies(g, s.len());
                r.verdicts.verified = Some(ok);
                if !ok {
                    bail!("returned certificate failed validation");
                }
                r.line("certificate verified");
            }
            if opts.oracle_fallback {
                oracle_fallback(g, s, &mut r)?;
            }
        }
    }
    Ok(r)
}

fn oracle_fallback(g: &Graph, s: &EdgeSet, r: &mut RunReport) -> Result<()> {
    let dim = CycleSpaceBasis::new(g).dimension();
    if dim > MAX_ENUMERATION_DIM {
        r.line(format!("oracle skipped: cycle space dimension {dim} > {MAX_ENUMERATION_DIM}"));
        return Ok(());
    }
    let start = Instant::now();
    let found = feasible_by_bruteforce(g, s)?;
    r.time("oracle", start.elapsed());
    r.verdicts.oracle_feasible = Some(found.is_some());
    r.verdicts.jaeger_extendable = Some(extend_to_even_subgraph(g, s)?.extension().is_some());
    match found {
        Some(t) => {
            r.line(format!("oracle: feasible, circuit {:?}", t.vertices()));
            r.oracle = Some(oracle_json(Some(&t)));
        }
        None => {
            r.line("oracle: infeasible");
            r.oracle = Some(oracle_json(None));
        }
    }
    Ok(())
}

fn oracle_json(t: Option<&oddcut_core::Trail>) -> Value {
    match t {
        Some(t) => json!({"status": "circuit", "walk": t.vertices(), "edge_walk": t.edges(), "method": "oracle"}),
        None => json!({"status": "infeasible", "method": "oracle"}),
    }
}

pub fn oracle(g: &Graph, label: &str, s: &EdgeSet) -> Result<RunReport> {
    let mut r = RunReport::new("oracle", label);
    let start = Instant::now();
    let found = feasible_by_bruteforce(g, s)?;
    r.time("oracle", start.elapsed());
    r.verdicts.oracle_feasible = Some(found.is_some());
    match &found {
        Some(t) => r.line(format!("feasible: circuit {:?}", t.vertices())),
        None => {
            r.line("infeasible");
            r.status = Status::Certificate;
        }
    }
    r.result = Some(oracle_json(found.as_ref()));
    Ok(r)
}

fn usize_array(v: &Value, key: &str) -> Result<Vec<usize>> {
    v.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| anyhow!("missing array `{key}`"))?
        .iter()
        .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| anyhow!("non-integer in `{key}`")))
        .collect()
}

/// Rechecks a result JSON written by `find` or `oracle` against the graph.
pub fn verify(g: &Graph, label: &str, s: &EdgeSet, result: &Value) -> Result<RunReport> {
    let mut r = RunReport::new("verify", label);
    // reports carry the outcome under `result`
    let result = result.get("result").unwrap_or(result);
    let status = result.get("status").and_then(Value::as_str).ok_or_else(|| anyhow!("missing `status`"))?;
    let ok = match status {
        "circuit" => {
            let walk = usize_array(result, "walk")?;
            let edges = usize_array(result, "edge_walk")?;
            match verify_circuit_walk(g, &walk, &edges, s) {
                Ok(()) => {
                    r.line("circuit verified");
                    true
                }
                Err(d) => {
                    r.line(format!("invalid circuit: {d}"));
                    false
                }
            }
        }
        "odd-cut" => {
            let side = usize_array(result, "side")?;
            let recorded = usize_array(result, "boundary")?;
            let cert = CutCertificate::new(g, &side)?;
            if cert.boundary.to_vec() != recorded {
                r.line("boundary does not match the side");
                false
            } else if !cert.certifies(g, s.len()) {
                r.line(format!("cut of size {} is not an odd cut of size at most {}", cert.size, s.len()));
                false
            } else {
                r.line(format!("odd cut of size {} verified", cert.size));
                true
            }
        }
        other => bail!("cannot verify a result with status `{other}`"),
    };
    r.verdicts.verified = Some(ok);
    if !ok {
        r.status = Status::Failed;
    }
    Ok(r)
}

/// Families accepted by `generate`.
#[derive(Clone, Debug)]
pub enum Family {
    Ladder(usize),
    DoubleClique(usize),
    TwoCyclesBridge(usize, usize),
    GkWitness(usize),
    Cycle(usize),
    Complete(usize),
    Random { n: usize, m: usize, threshold: usize },
    Eulerian { n: usize, cycles: usize },
    NineFour { core: usize, extra: usize },
}

pub fn generate(family: &Family, seed: Option<u64>) -> Result<NamedInstance> {
    let need_seed = || seed.ok_or_else(|| anyhow!("this family is random; pass --seed"));
    Ok(match *family {
        Family::Ladder(r) => generators::ladder(r)?,
        Family::DoubleClique(l) => generators::double_clique(l)?,
        Family::TwoCyclesBridge(p, q) => generators::two_cycles_bridge(p, q)?,
        Family::GkWitness(k) => generators::gk_lower_witness(k)?.instance,
        Family::Cycle(n) => generators::cycle(n)?,
        Family::Complete(n) => generators::complete(n)?,
        Family::Random { n, m, threshold } => generators::random_connected(n, m, threshold, need_seed()?)?,
        Family::Eulerian { n, cycles } => generators::random_eulerian(n, cycles, need_seed()?)?,
        Family::NineFour { core, extra } => generators::random_nine_four(core, extra, need_seed()?)?,
    })
}

/// `ladder(4)` -> `ladder-4`, `random_connected(8,12,2,1)` -> `random_connected-8-12-2-1`.
pub fn file_stem(label: &str) -> String {
    label.replace(['(', ','], "-").replace(')', "")
}

pub fn sidecar_json(inst: &NamedInstance) -> String {
    let mut s = serde_json::to_string_pretty(inst).expect("sidecar serializes");
    s.push('\n');
    s
}
