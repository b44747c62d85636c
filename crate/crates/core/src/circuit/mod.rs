//! Circuits through prescribed edges.
//!
//! Edges of `S` are added one at a time in ascending id order. An edge that
//! is not yet covered either lies in a 2-edge-connected piece of `G - E(H)`,
//! which is spliced in directly or after contracting it, or it is a bridge of
//! `G - E(H)`, where the hopping construction either reroutes `H` through it
//! or exposes an odd cut of size at most `|S|`.

mod coherent;
mod reach;
mod segments;

pub use coherent::{
    check_coherence, initial_coherent_trail, initial_coherent_trail_at, reroute_descent, CoherentTrail,
    DescentStats, Span,
};
pub use reach::{compute_reach, hopping_fixpoint, Hopping, Level, LevelSequence, Reach, ReachState, Search};
pub use segments::{normalize_circuit, segment, SegmentedCircuit};

use serde::Serialize;

use crate::components::{bridges_and_2ec_components, component_labels, is_connected};
use crate::contract::contract_subgraph;
use crate::cuts::CutCertificate;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::flow::trail_through_edge;
use crate::graph::{edge_boundary, Graph};
use crate::trail::{verify_circuit, Trail};

/// A circuit through the prescribed edges, or an odd cut of size at most
/// the number of prescribed edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum CircuitOutcome {
    #[serde(rename = "circuit")]
    Circuit(Trail),
    #[serde(rename = "odd-cut")]
    OddCut(CutCertificate),
}

impl CircuitOutcome {
    pub fn circuit(&self) -> Option<&Trail> {
        match self {
            CircuitOutcome::Circuit(t) => Some(t),
            CircuitOutcome::OddCut(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&CutCertificate> {
        match self {
            CircuitOutcome::Circuit(_) => None,
            CircuitOutcome::OddCut(c) => Some(c),
        }
    }

    pub fn is_circuit(&self) -> bool {
        matches!(self, CircuitOutcome::Circuit(_))
    }
}

/// What the finder did, for diagnostics and tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FinderStats {
    pub already_covered: usize,
    pub splices: usize,
    pub contractions: usize,
    pub bridge_cases: usize,
    pub demotions: usize,
    pub reroutes: usize,
    pub restarts: usize,
}

impl FinderStats {
    fn absorb(&mut self, d: &DescentStats) {
        self.demotions += d.demotions;
        self.reroutes += d.reroutes;
        self.restarts += d.restarts;
    }
}

fn with_edge(s: &EdgeSet, e: usize) -> EdgeSet {
    let mut out = s.clone();
    out.insert(e);
    out
}

/// Adds `e_next`, a bridge of `G - E(H)`, to the circuit `h` through `s_prefix`.
///
/// If an end of `e_next` is off `H`, the returned circuit passes it once.
pub fn bridge_case(g: &Graph, h: &Trail, s_prefix: &EdgeSet, e_next: usize) -> Result<CircuitOutcome> {
    bridge_case_with_stats(g, h, s_prefix, e_next, &mut FinderStats::default())
}

fn bridge_case_with_stats(
    g: &Graph,
    h: &Trail,
    s_prefix: &EdgeSet,
    e_next: usize,
    stats: &mut FinderStats,
) -> Result<CircuitOutcome> {
    stats.bridge_cases += 1;
    let h = normalize_circuit(g, h, s_prefix)?;
    let seg = segment(g, &h, s_prefix)?;
    let state = match hopping_fixpoint(g, &seg, e_next)? {
        Hopping::Cut(c) => return Ok(CircuitOutcome::OddCut(c)),
        Hopping::State(s) => s,
    };
    let q = initial_coherent_trail(&state, &seg)?;
    let mut descent = DescentStats::default();
    let q = reroute_descent(g, &seg, &state, q, &mut descent)?;
    stats.absorb(&descent);

    let (a, b) = g.endpoints(e_next);
    let (a1, b1) = (q.trail.start(), q.trail.end());
    let pa = state.sides[0].level(1).witness(a1).ok_or_else(|| Error::Internal(format!("{a1} not reached from {a}")))?;
    let pb = state.sides[1].level(1).witness(b1).ok_or_else(|| Error::Internal(format!("{b1} not reached from {b}")))?;
    let mut out = Trail::from_parts(vec![b, a], vec![e_next]);
    out.extend(&pa);
    out.extend(&q.trail);
    out.extend(&pb.reversed());
    if let Err(d) = verify_circuit(g, &out, &with_edge(s_prefix, e_next)) {
        return Err(Error::Internal(format!("assembled circuit is invalid: {d}")));
    }
    Ok(CircuitOutcome::Circuit(out))
}

/// Extends the circuit `h` through `s_prefix` to one that also uses `e_next`,
/// or returns an odd cut of size at most `|s_prefix| + 1`.
pub fn extend_circuit(g: &Graph, h: &Trail, s_prefix: &EdgeSet, e_next: usize) -> Result<CircuitOutcome> {
    extend_with_stats(g, h, s_prefix, e_next, &mut FinderStats::default())
}

fn extend_with_stats(
    g: &Graph,
    h: &Trail,
    s_prefix: &EdgeSet,
    e_next: usize,
    stats: &mut FinderStats,
) -> Result<CircuitOutcome> {
    g.check_edge(e_next)?;
    if h.contains_edge(e_next) {
        stats.already_covered += 1;
        return Ok(CircuitOutcome::Circuit(h.clone()));
    }
    let rest = h.edge_set(g.edge_count()).complement();
    let decomposition = bridges_and_2ec_components(g, &rest);
    if decomposition.is_bridge(e_next) {
        return bridge_case_with_stats(g, h, s_prefix, e_next, stats);
    }
    let d = &decomposition.components[decomposition.component_of_edge[e_next].expect("non-bridge edge")];

    let mut on_h = vec![false; g.vertex_count()];
    for &v in h.vertices() {
        on_h[v] = true;
    }
    if let Some(&v) = d.vertices.iter().find(|&&v| on_h[v]) {
        stats.splices += 1;
        let detour = trail_through_edge(g, &d.edges, e_next, v, v)?;
        let at = h.vertices().iter().position(|&u| u == v).unwrap();
        let mut out = h.rotated(at);
        out.extend(&detour);
        return Ok(CircuitOutcome::Circuit(out));
    }

    // D is disjoint from H: contract it and route through one boundary edge
    stats.contractions += 1;
    let c = contract_subgraph(g, &d.vertices)?;
    let boundary = edge_boundary(g, &d.vertices)?;
    let e_f = boundary.iter().next().ok_or(Error::DisconnectedInput)?;
    let map_edge = |e: usize| c.edge_map[e].expect("edge off the contracted set");
    let h_small = Trail::from_parts(
        h.vertices().iter().map(|&v| c.vertex_map[v]).collect(),
        h.edges().iter().map(|&e| map_edge(e)).collect(),
    );
    let s_small = EdgeSet::from_ids(c.graph.edge_count(), s_prefix.iter().map(map_edge));
    let around = match bridge_case_with_stats(&c.graph, &h_small, &s_small, map_edge(e_f), stats)? {
        CircuitOutcome::OddCut(cut) => {
            let lifted = CutCertificate::new(g, &c.lift_side(&cut.side))?;
            if lifted.size != cut.size {
                return Err(Error::Internal("lifted cut changed size".into()));
            }
            return Ok(CircuitOutcome::OddCut(lifted));
        }
        CircuitOutcome::Circuit(t) => t,
    };
    let v_d = c.contracted;
    let hits: Vec<usize> = (0..around.len()).filter(|&i| around.vertex(i) == v_d).collect();
    if hits.len() != 1 {
        return Err(Error::Internal(format!("contracted vertex passed {} times", hits.len())));
    }
    let around = around.rotated(hits[0]);
    let edges: Vec<usize> = around.edges().iter().map(|&e| c.edge_origin[e]).collect();
    let in_d = |e: usize| {
        let (x, y) = g.endpoints(e);
        if c.is_contracted(x) {
            x
        } else {
            y
        }
    };
    let u1 = in_d(edges[0]);
    let u2 = in_d(*edges.last().unwrap());
    let outside = Trail::from_edges(g, u1, &edges);
    debug_assert_eq!(outside.end(), u2);
    let inside = trail_through_edge(g, &d.edges, e_next, u2, u1)?;
    let mut out = outside;
    out.extend(&inside);
    Ok(CircuitOutcome::Circuit(out))
}

/// Circuit through every edge of `s`, or an odd cut of size at most `|s|`.
pub fn find_circuit(g: &Graph, s: &EdgeSet) -> Result<CircuitOutcome> {
    find_circuit_with_stats(g, s).map(|(o, _)| o)
}

pub fn find_circuit_with_stats(g: &Graph, s: &EdgeSet) -> Result<(CircuitOutcome, FinderStats)> {
    if !is_connected(g) {
        return Err(Error::DisconnectedInput);
    }
    let order = s.to_vec();
    for &e in &order {
        g.check_edge(e)?;
    }
    let Some((&first, rest)) = order.split_first() else {
        return Err(Error::EmptyS);
    };
    let mut stats = FinderStats::default();
    let all = g.all_edges();
    let bridges = bridges_and_2ec_components(g, &all);
    let (u, _) = g.endpoints(first);
    if bridges.is_bridge(first) {
        let mut without = all.clone();
        without.remove(first);
        let (label, _) = component_labels(g, Some(&without));
        let side: Vec<usize> = (0..g.vertex_count()).filter(|&v| label[v] == label[u]).collect();
        return Ok((CircuitOutcome::OddCut(CutCertificate::new(g, &side)?), stats));
    }
    let mut h = trail_through_edge(g, &all, first, u, u)?;
    let mut prefix = EdgeSet::from_ids(g.edge_count(), [first]);
    for &e in rest {
        h = normalize_circuit(g, &h, &prefix)?;
        match extend_with_stats(g, &h, &prefix, e, &mut stats)? {
            CircuitOutcome::Circuit(next) => h = next,
            CircuitOutcome::OddCut(c) => {
                if !c.certifies(g, prefix.len() + 1) {
                    return Err(Error::Internal(format!("invalid certificate {:?}", c.boundary)));
                }
                return Ok((CircuitOutcome::OddCut(c), stats));
            }
        }
        prefix.insert(e);
    }
    let full = EdgeSet::from_ids(g.edge_count(), order.iter().copied());
    if let Err(d) = verify_circuit(g, &h, &full) {
        return Err(Error::Internal(format!("final circuit is invalid: {d}")));
    }
    Ok((CircuitOutcome::Circuit(h), stats))
}
