//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use oddcut_core::components::connected_components;
use oddcut_core::cuts::{odd_cut_within, GomoryHuTree};
use oddcut_core::cycle_space::CycleSpaceBasis;
use oddcut_core::generators::{
    corpus, cycle, double_clique, gk_lower_witness, ladder, ladder_rung, random_edge_subset, random_nine_four,
    two_cycles_bridge, NamedInstance,
};
use oddcut_core::jaeger::min_components_even_extension;
use oddcut_core::oracle::{check_parity_monotonicity, FeasibilityTable};
use oddcut_core::{
    brute_force_min_odd_cut, extend_circuit, extend_to_even_subgraph, feasible_by_bruteforce, find_circuit,
    min_odd_cut, verify_circuit, CircuitOutcome, EdgeSet, Error, Graph, Trail,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const ORACLE_LIMIT: Duration = Duration::from_secs(600);
const MIN_CUT_LIMIT: Duration = Duration::from_secs(60);
const LADDER_LIMIT: Duration = Duration::from_secs(60);
const SCALE_LIMIT: Duration = Duration::from_secs(5);

const MAX_S: usize = 4;
const EXHAUSTIVE_MAX_EDGES: usize = 12;
const SAMPLES_PER_GRAPH: usize = 200;
const JAEGER_MAX_DIM: usize = 20;
const SAMPLE_SEED: u64 = 1_000;
const SCALE_SEED: u64 = 9;
const SCALE_S: usize = 8;

struct Verdict {
    pass: bool,
    detail: String,
}

fn report(n: usize, name: &str, v: &Verdict) {
    let status = if v.pass { "PASS" } else { "FAIL" };
    println!("criterion {n} [{name}]: {status} ({})", v.detail);
}

fn subsets_up_to(m: usize, size: usize) -> Vec<EdgeSet> {
    fn rec(m: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<EdgeSet>) {
        if !cur.is_empty() {
            out.push(EdgeSet::from_ids(m, cur.iter().copied()));
        }
        if cur.len() == size {
            return;
        }
        for e in from..m {
            cur.push(e);
            rec(m, size, e + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, size, 0, &mut Vec::new(), &mut out);
    out
}

/// Every nonempty S with |S| <= 4 when m <= 12, else 200 seeded samples.
fn s_family(g: &Graph, index: usize) -> Vec<EdgeSet> {
    let m = g.edge_count();
    if m <= EXHAUSTIVE_MAX_EDGES {
        return subsets_up_to(m, MAX_S);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED + index as u64);
    (0..SAMPLES_PER_GRAPH)
        .map(|_| {
            let size = rng.gen_range(1..=MAX_S);
            random_edge_subset(m, size, &mut rng)
        })
        .collect()
}

/// Even superset test by exhausting the cycle space projected onto `S`.
fn even_superset_exists(g: &Graph, s: &EdgeSet) -> bool {
    let ids = s.to_vec();
    let target = (1u32 << ids.len()) - 1;
    let mut span: HashSet<u32> = HashSet::from([0]);
    for c in &CycleSpaceBasis::new(g).cycles {
        let p = ids.iter().enumerate().fold(0u32, |acc, (i, &e)| acc | (c.contains(e) as u32) << i);
        let shifted: Vec<u32> = span.iter().map(|x| x ^ p).collect();
        span.extend(shifted);
    }
    span.contains(&target)
}

fn edge_connectivity(g: &Graph) -> usize {
    GomoryHuTree::build(g).edges().map(|(_, _, c)| c).min().unwrap_or(usize::MAX)
}

#[derive(Default)]
struct FinderTally {
    runs: usize,
    violations: Vec<String>,
    checker_fired: Vec<String>,
}

fn oracle_equivalence(corpus: &[NamedInstance]) -> (Verdict, FinderTally) {
    let start = Instant::now();
    let tallies: Vec<FinderTally> = corpus
        .par_iter()
        .enumerate()
        .map(|(index, inst)| {
            let g = &inst.graph;
            let min_cut = min_odd_cut(g).unwrap().map_or(usize::MAX, |c| c.size);
            let mut t = FinderTally::default();
            for s in s_family(g, index) {
                t.runs += 1;
                let tag = format!("{} S={:?}", inst.label, s.to_vec());
                match find_circuit(g, &s) {
                    Ok(CircuitOutcome::Circuit(c)) => {
                        if let Err(d) = verify_circuit(g, &c, &s) {
                            t.violations.push(format!("{tag}: bad circuit {d}"));
                        }
                    }
                    Ok(CircuitOutcome::OddCut(c)) => {
                        if c.validate(g).is_err() || !c.certifies(g, s.len()) {
                            t.violations.push(format!("{tag}: bad certificate"));
                        }
                        if min_cut > s.len() {
                            t.violations.push(format!("{tag}: certificate below the minimum odd cut"));
                        }
                    }
                    Err(e @ (Error::CoherenceViolated(..) | Error::DescentStalled(_))) => {
                        t.checker_fired.push(format!("{tag}: {e}"));
                    }
                    Err(e) => t.violations.push(format!("{tag}: {e}")),
                }
            }
            t
        })
        .collect();
    let mut total = FinderTally::default();
    for t in tallies {
        total.runs += t.runs;
        total.violations.extend(t.violations);
        total.checker_fired.extend(t.checker_fired);
    }
    let elapsed = start.elapsed();
    let bad = total.violations.len() + total.checker_fired.len();
    let mut detail = format!(
        "{} graphs, {} runs, {} violations, {:.1}s",
        corpus.len(),
        total.runs,
        bad,
        elapsed.as_secs_f64()
    );
    if let Some(first) = total.violations.iter().chain(&total.checker_fired).next() {
        detail.push_str(&format!("; first: {first}"));
    }
    (
        Verdict {
            pass: bad == 0 && elapsed < ORACLE_LIMIT,
            detail,
        },
        total,
    )
}

fn both_directions(corpus: &[NamedInstance]) -> Verdict {
    let small: Vec<&NamedInstance> = corpus.iter().filter(|i| i.graph.edge_count() <= EXHAUSTIVE_MAX_EDGES).collect();
    let failures: Vec<String> = small
        .par_iter()
        .flat_map_iter(|inst| {
            let g = &inst.graph;
            let table = FeasibilityTable::new(g).unwrap();
            let min_cut = min_odd_cut(g).unwrap().map_or(usize::MAX, |c| c.size);
            (1..=MAX_S.min(g.edge_count()))
                .filter(move |&k| (min_cut > k) != table.all_of_size_feasible(k))
                .map(move |k| format!("{} k={k}", inst.label))
        })
        .collect();
    Verdict {
        pass: failures.is_empty(),
        detail: format!(
            "{} graphs with m <= {EXHAUSTIVE_MAX_EDGES}, {} violations{}",
            small.len(),
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn min_cut_correctness(corpus: &[NamedInstance]) -> Verdict {
    let start = Instant::now();
    let mismatches: Vec<String> = corpus
        .par_iter()
        .filter(|i| i.graph.vertex_count() <= 12)
        .filter_map(|inst| {
            let fast = min_odd_cut(&inst.graph).unwrap().map(|c| c.size);
            let slow = brute_force_min_odd_cut(&inst.graph).unwrap().map(|c| c.size);
            (fast != slow).then(|| format!("{}: {fast:?} vs {slow:?}", inst.label))
        })
        .collect();
    let size = |g: &Graph| min_odd_cut(g).unwrap().map(|c| c.size);
    let pinned = [
        ("ladder(4)", size(&ladder(4).unwrap().graph), Some(3)),
        ("prism", size(&double_clique(3).unwrap().graph), Some(3)),
        ("two_cycles_bridge(3,3)", size(&two_cycles_bridge(3, 3).unwrap().graph), Some(1)),
        ("C6", size(&cycle(6).unwrap().graph), None),
    ];
    let pinned_bad: Vec<String> = pinned
        .iter()
        .filter(|(_, got, want)| got != want)
        .map(|(name, got, want)| format!("{name}: {got:?} != {want:?}"))
        .collect();
    let elapsed = start.elapsed();
    Verdict {
        pass: mismatches.is_empty() && pinned_bad.is_empty() && elapsed < MIN_CUT_LIMIT,
        detail: format!(
            "{} mismatches, pinned values {}, {:.1}s{}",
            mismatches.len(),
            if pinned_bad.is_empty() { "ok".to_string() } else { pinned_bad.join(", ") },
            elapsed.as_secs_f64(),
            mismatches.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn jaeger_equivalence(corpus: &[NamedInstance]) -> Verdict {
    let (checked, failures): (usize, Vec<String>) = corpus
        .par_iter()
        .enumerate()
        .filter(|(_, i)| CycleSpaceBasis::new(&i.graph).dimension() <= JAEGER_MAX_DIM)
        .map(|(index, inst)| {
            let g = &inst.graph;
            let mut bad = Vec::new();
            let family = s_family(g, index);
            for s in &family {
                let extends = extend_to_even_subgraph(g, s).unwrap().extension().is_some();
                let no_cut = odd_cut_within(g, s).unwrap().is_none();
                let brute = even_superset_exists(g, s);
                if extends != no_cut || no_cut != brute {
                    bad.push(format!("{} S={:?}", inst.label, s.to_vec()));
                }
            }
            (family.len(), bad)
        })
        .reduce(|| (0, Vec::new()), |(a, mut x), (b, y)| {
            x.extend(y);
            (a + b, x)
        });
    Verdict {
        pass: failures.is_empty(),
        detail: format!(
            "{checked} sets, {} violations{}",
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn ladder_example() -> Verdict {
    let start = Instant::now();
    let mut checked = 0;
    let mut failures = Vec::new();
    for r in 4..=6 {
        let g = ladder(r).unwrap().graph;
        let m = g.edge_count();
        let rungs: Vec<usize> = (0..r).map(|i| ladder_rung(r, i)).collect();
        for mask in 0u32..(1 << r) {
            let size = mask.count_ones() as usize;
            if !(3..=r - 1).contains(&size) {
                continue;
            }
            checked += 1;
            let s = EdgeSet::from_ids(m, (0..r).filter(|i| mask >> i & 1 == 1).map(|i| rungs[i]));
            let tag = format!("ladder({r}) S={:?}", s.to_vec());
            if extend_to_even_subgraph(&g, &s).unwrap().extension().is_none() {
                failures.push(format!("{tag}: not extendable"));
            }
            let comps = min_components_even_extension(&g, &s).unwrap();
            if comps != size.div_ceil(2) {
                failures.push(format!("{tag}: {comps} components"));
            }
            match find_circuit(&g, &s) {
                Ok(CircuitOutcome::OddCut(c)) if c.size == 3 && c.certifies(&g, 3) => {}
                Ok(CircuitOutcome::OddCut(c)) => failures.push(format!("{tag}: cut of size {}", c.size)),
                other => failures.push(format!("{tag}: {other:?}")),
            }
        }
    }
    let elapsed = start.elapsed();
    Verdict {
        pass: failures.is_empty() && elapsed < LADDER_LIMIT,
        detail: format!(
            "{checked} rung sets on r = 4..6, {} violations, {:.1}s{}",
            failures.len(),
            elapsed.as_secs_f64(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    }
}

fn witnesses() -> Verdict {
    let l4 = ladder(4).unwrap();
    let rungs = EdgeSet::from_ids(10, (0..3).map(|i| ladder_rung(4, i)));
    let gk = gk_lower_witness(4).unwrap();
    let tcb = two_cycles_bridge(3, 3).unwrap();
    let cases = [
        ("two_cycles_bridge(3,3)", &tcb.graph, tcb.prescribed.clone(), 1),
        ("ladder(4)", &l4.graph, rungs, 2),
        ("gk_lower_witness(4)", &gk.instance.graph, gk.instance.prescribed.clone(), gk.claimed_edge_connectivity),
    ];
    let mut failures = Vec::new();
    for (name, g, s, lambda) in cases {
        let got = edge_connectivity(g);
        if got != lambda {
            failures.push(format!("{name}: edge-connectivity {got} != {lambda}"));
        }
        if extend_to_even_subgraph(g, &s).unwrap().extension().is_none() {
            failures.push(format!("{name}: not extendable"));
        }
        if feasible_by_bruteforce(g, &s).unwrap().is_some() {
            failures.push(format!("{name}: oracle found a circuit"));
        }
    }
    if gk.ell != 3 {
        failures.push(format!("gk_lower_witness(4) has ell {}", gk.ell));
    }
    Verdict {
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            "3 witnesses extendable and infeasible at edge-connectivity 1, 2, 3".into()
        } else {
            failures.join("; ")
        },
    }
}

fn parity_monotonicity(corpus: &[NamedInstance]) -> Verdict {
    let small: Vec<&NamedInstance> = corpus.iter().filter(|i| i.graph.edge_count() <= EXHAUSTIVE_MAX_EDGES).collect();
    let failures: Vec<String> = small
        .par_iter()
        .flat_map_iter(|inst| {
            (1..=2)
                .filter(|&k| !check_parity_monotonicity(&inst.graph, k).unwrap())
                .map(move |k| format!("{} k={k}", inst.label))
        })
        .collect();
    Verdict {
        pass: failures.is_empty(),
        detail: format!("{} graphs, k in {{1, 2}}, {} violations", small.len(), failures.len()),
    }
}

fn hopping_internals(tally: &FinderTally) -> Verdict {
    let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    let h = Trail::from_edges(&g, 0, &[0, 3, 1]);
    let out = extend_circuit(&g, &h, &EdgeSet::from_ids(6, [0]), 2).unwrap();
    let walk = out.circuit().map(|t| t.vertices().to_vec());
    let fixture_ok = walk.as_deref() == Some(&[3, 0, 1, 3][..]);
    Verdict {
        pass: fixture_ok && tally.checker_fired.is_empty(),
        detail: format!(
            "checkers fired {} times over {} runs; K4 fixture walk {:?}",
            tally.checker_fired.len(),
            tally.runs,
            walk.unwrap_or_default()
        ),
    }
}

fn scale_smoke() -> Verdict {
    let g = random_nine_four(160, 40, SCALE_SEED).unwrap().graph;
    let min_cut = min_odd_cut(&g).unwrap().map(|c| c.size);
    let mut rng = ChaCha8Rng::seed_from_u64(SCALE_SEED);
    let s = random_edge_subset(g.edge_count(), SCALE_S, &mut rng);
    let start = Instant::now();
    let out = find_circuit(&g, &s);
    let elapsed = start.elapsed();
    let verified = matches!(&out, Ok(CircuitOutcome::Circuit(t)) if verify_circuit(&g, t, &s).is_ok());
    let connected = connected_components(&g, None).len() == 1;
    Verdict {
        pass: verified && connected && min_cut.is_none_or(|c| c >= 9) && elapsed < SCALE_LIMIT,
        detail: format!(
            "n = {}, m = {}, min odd cut {:?}, |S| = {}, circuit verified {verified}, {:.3}s",
            g.vertex_count(),
            g.edge_count(),
            min_cut,
            s.len(),
            elapsed.as_secs_f64()
        ),
    }
}

fn main() {
    let corpus = corpus().expect("corpus");
    let mut all = true;
    let mut emit = |n: usize, name: &str, v: Verdict| {
        report(n, name, &v);
        all &= v.pass;
    };
    let (v1, tally) = oracle_equivalence(&corpus);
    emit(1, "oracle equivalence", v1);
    emit(2, "both directions on small graphs", both_directions(&corpus));
    emit(3, "minimum odd cut", min_cut_correctness(&corpus));
    emit(4, "even-subgraph equivalence", jaeger_equivalence(&corpus));
    emit(5, "ladder rungs", ladder_example());
    emit(6, "lower-bound witnesses", witnesses());
    emit(7, "parity monotonicity", parity_monotonicity(&corpus));
    emit(8, "hopping internals", hopping_internals(&tally));
    emit(9, "scale smoke test", scale_smoke());
    if !all {
        std::process::exit(1);
    }
}
