use std::time::Instant;

use anyhow::{anyhow, bail, Result};
use oddcut_core::cuts::GomoryHuTree;
use oddcut_core::generators::{corpus, gk_lower_witness, ladder, ladder_rung, random_connected, two_cycles_bridge};
use oddcut_core::jaeger::min_components_even_extension;
use oddcut_core::oracle::{check_parity_monotonicity, MONOTONICITY_MAX_EDGES};
use oddcut_core::{extend_to_even_subgraph, feasible_by_bruteforce, find_circuit, EdgeSet, Graph};
use rayon::prelude::*;
use serde_json::json;

use crate::report::{RunReport, Status};

#[derive(Debug)]
struct RungSet {
    rungs: Vec<usize>,
    components: usize,
    extendable: bool,
    feasible: bool,
    cut: Option<usize>,
}

/// Every set of 3 to r-1 rungs of `ladder(r)`: extendable, infeasible, needing
/// `ceil(|S|/2)` components.
pub fn ladder_experiment(from: usize, to: usize) -> Result<RunReport> {
    if from < 4 || to < from || to > 8 {
        bail!("ladder sizes must satisfy 4 <= from <= to <= 8");
    }
    let mut r = RunReport::new("experiment ladder", &format!("ladder({from}..{to})"));
    let start = Instant::now();
    let mut rows = Vec::new();
    let mut all_ok = true;
    for size in from..=to {
        let g = ladder(size)?.graph;
        let masks: Vec<u32> = (0u32..1 << size)
            .filter(|m| (3..size).contains(&(m.count_ones() as usize)))
            .collect();
        let sets: Vec<RungSet> = masks
            .par_iter()
            .map(|&mask| -> Result<RungSet> {
                let rungs: Vec<usize> = (0..size).filter(|i| mask >> i & 1 == 1).collect();
                let s = EdgeSet::from_ids(g.edge_count(), rungs.iter().map(|&i| ladder_rung(size, i)));
                Ok(RungSet {
                    components: min_components_even_extension(&g, &s)?,
                    extendable: extend_to_even_subgraph(&g, &s)?.extension().is_some(),
                    feasible: feasible_by_bruteforce(&g, &s)?.is_some(),
                    cut: find_circuit(&g, &s)?.certificate().map(|c| c.size),
                    rungs,
                })
            })
            .collect::<Result<_>>()?;
        let bad: Vec<&RungSet> = sets
            .iter()
            .filter(|x| x.components != x.rungs.len().div_ceil(2) || !x.extendable || x.feasible || x.cut != Some(3))
            .collect();
        all_ok &= bad.is_empty();
        r.line(format!(
            "ladder({size}): {} rung sets, min components = ceil(|S|/2) for {}, exceptions {}",
            sets.len(),
            sets.len() - bad.len(),
            bad.len()
        ));
        for x in &bad {
            r.line(format!("  exception {x:?}"));
        }
        rows.push(json!({"r": size, "sets": sets.len(), "exceptions": bad.len()}));
    }
    r.time("total", start.elapsed());
    r.verdicts.jaeger_extendable = Some(all_ok);
    r.result = Some(json!({ "ladders": rows }));
    if !all_ok {
        r.status = Status::Failed;
    }
    Ok(r)
}

fn edge_connectivity(g: &Graph) -> usize {
    GomoryHuTree::build(g).edges().map(|(_, _, c)| c).min().unwrap_or(0)
}

/// The three small witnesses: a prescribed set that is extendable to an even
/// subgraph yet lies on no circuit, at edge-connectivity 1, 2 and 3.
pub fn gk_witness_experiment() -> Result<RunReport> {
    let mut r = RunReport::new("experiment gk-witness", "k = 2, 3, 4");
    let start = Instant::now();
    let tcb = two_cycles_bridge(3, 3)?;
    let l4 = ladder(4)?;
    let gk = gk_lower_witness(4)?;
    let three_rungs = EdgeSet::from_ids(l4.graph.edge_count(), (0..3).map(|i| ladder_rung(4, i)));
    let cases = [
        (2, &tcb.graph, tcb.prescribed.clone(), 1, tcb.label.clone()),
        (3, &l4.graph, three_rungs, 2, l4.label.clone()),
        (4, &gk.instance.graph, gk.instance.prescribed.clone(), gk.claimed_edge_connectivity, gk.instance.label.clone()),
    ];
    let mut rows = Vec::new();
    let mut all_ok = true;
    for (k, g, s, claimed, label) in cases {
        let lambda = edge_connectivity(g);
        let extendable = extend_to_even_subgraph(g, &s)?.extension().is_some();
        let feasible = feasible_by_bruteforce(g, &s)?.is_some();
        let ok = lambda == claimed && extendable && !feasible;
        all_ok &= ok;
        r.line(format!(
            "k = {k}: {label}, |S| = {}, edge-connectivity {lambda} (claimed {claimed}), extendable {extendable}, circuit {feasible}: {}",
            s.len(),
            if ok { "confirmed" } else { "NOT confirmed" }
        ));
        rows.push(json!({
            "k": k, "label": label, "prescribed": s, "edge_connectivity": lambda,
            "extendable": extendable, "feasible": feasible, "confirmed": ok,
        }));
    }
    r.time("total", start.elapsed());
    r.verdicts.jaeger_extendable = Some(all_ok);
    r.verdicts.oracle_feasible = Some(false);
    r.result = Some(json!({ "witnesses": rows }));
    if !all_ok {
        r.status = Status::Failed;
    }
    Ok(r)
}

/// Parity monotonicity over the corpus graphs with at most 12 edges, plus
/// `extra` seeded random graphs.
pub fn corollary_experiment(max_k: usize, extra: usize, seed: Option<u64>) -> Result<RunReport> {
    if max_k == 0 {
        bail!("max-k must be at least 1");
    }
    let mut r = RunReport::new("experiment corollary", &format!("k <= {max_k}"));
    r.seed = seed;
    let start = Instant::now();
    let mut graphs: Vec<(String, Graph)> = corpus()?
        .into_iter()
        .filter(|i| i.graph.edge_count() <= 12)
        .map(|i| (i.label, i.graph))
        .collect();
    if extra > 0 {
        let seed = seed.ok_or_else(|| anyhow!("random graphs need --seed"))?;
        for i in 0..extra as u64 {
            let n = 4 + (i % 5) as usize;
            let m = (n + 2 + (i % 4) as usize).min(n * (n - 1) / 2).min(MONOTONICITY_MAX_EDGES);
            let inst = random_connected(n, m, 1, seed.wrapping_add(i))?;
            graphs.push((inst.label, inst.graph));
        }
    }
    let failures: Vec<String> = graphs
        .par_iter()
        .map(|(label, g)| -> Result<Vec<String>> {
            let mut bad = Vec::new();
            for k in 1..=max_k {
                if !check_parity_monotonicity(g, k)? {
                    bad.push(format!("{label} k={k}"));
                }
            }
            Ok(bad)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    r.time("total", start.elapsed());
    r.line(format!("{} graphs, k = 1..{max_k}: {} violations", graphs.len(), failures.len()));
    for f in &failures {
        r.line(format!("  violation: {f}"));
    }
    r.result = Some(json!({ "graphs": graphs.len(), "violations": failures }));
    if !failures.is_empty() {
        r.status = Status::Failed;
    }
    Ok(r)
}
