//! Unit-capacity maximum flow on undirected graphs, and the Menger-style
//! path constructions built on it.

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trail::Trail;

/// Outcome of a unit-capacity flow computation.
#[derive(Clone, Debug)]
pub struct UnitFlow {
    pub value: usize,
    /// Per edge: +1 if flow runs from the first to the second endpoint,
    /// -1 for the reverse, 0 if unused.
    pub flow: Vec<i8>,
    /// Vertices reachable from the source in the final residual graph. Only
    /// a minimum cut side when the flow was not stopped early by `limit`.
    pub source_side: Vec<bool>,
}

/// Augmenting-path max flow with every edge of capacity one in each
/// direction. Stops once `limit` units are routed.
pub fn unit_max_flow(
    g: &Graph,
    allowed: Option<&EdgeSet>,
    s: usize,
    t: usize,
    limit: Option<usize>,
) -> UnitFlow {
    let n = g.vertex_count();
    let mut flow = vec![0i8; g.edge_count()];
    let mut value = 0;
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    loop {
        seen.iter_mut().for_each(|x| *x = false);
        queue.clear();
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &(v, e) in g.neighbors(u) {
                if seen[v] || allowed.is_some_and(|a| !a.contains(e)) {
                    continue;
                }
                let forward = g.endpoints(e).0 == u;
                let residual = if forward { flow[e] < 1 } else { flow[e] > -1 };
                if residual {
                    seen[v] = true;
                    pred[v] = Some((u, e));
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] || limit.is_some_and(|l| value >= l) {
            break;
        }
        let mut v = t;
        while v != s {
            let (u, e) = pred[v].expect("augmenting path");
            if g.endpoints(e).0 == u {
                flow[e] += 1;
            } else {
                flow[e] -= 1;
            }
            v = u;
        }
        value += 1;
        if limit.is_some_and(|l| value >= l) {
            break;
        }
    }
    UnitFlow {
        value,
        flow,
        source_side: seen,
    }
}

/// Peels one simple source-sink path off the flow, consuming its edges.
fn peel_path(g: &Graph, flow: &mut [i8], s: usize, t: usize) -> Trail {
    let mut vertices = vec![s];
    let mut edges = Vec::new();
    let mut position = vec![usize::MAX; g.vertex_count()];
    position[s] = 0;
    let mut u = s;
    while u != t {
        let &(v, e) = g
            .neighbors(u)
            .iter()
            .find(|&&(_, e)| {
                let (a, _) = g.endpoints(e);
                (a == u && flow[e] == 1) || (a != u && flow[e] == -1)
            })
            .expect("flow conservation");
        flow[e] = 0;
        if position[v] != usize::MAX {
            // drop the cycle closed at v
            let p = position[v];
            for &w in &vertices[p + 1..] {
                position[w] = usize::MAX;
            }
            vertices.truncate(p + 1);
            edges.truncate(p);
        } else {
            position[v] = vertices.len();
            vertices.push(v);
            edges.push(e);
        }
        u = v;
    }
    Trail::from_parts(vertices, edges)
}

/// Two edge-disjoint `s`-`t` paths, or the witnessing cut of size at most one.
pub fn two_edge_disjoint_paths(g: &Graph, s: usize, t: usize) -> Result<(Trail, Trail)> {
    two_paths_within(g, None, s, t)
}

pub(crate) fn two_paths_within(
    g: &Graph,
    allowed: Option<&EdgeSet>,
    s: usize,
    t: usize,
) -> Result<(Trail, Trail)> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::BadParam("source and sink coincide".into()));
    }
    let mut f = unit_max_flow(g, allowed, s, t, Some(2));
    if f.value < 2 {
        let mut cut = crate::graph::boundary_of_mask(g, &f.source_side);
        if let Some(a) = allowed {
            cut = intersect(&cut, a);
        }
        return Err(Error::CutTooSmall(cut));
    }
    let p = peel_path(g, &mut f.flow, s, t);
    let q = peel_path(g, &mut f.flow, s, t);
    Ok((p, q))
}

fn intersect(a: &EdgeSet, b: &EdgeSet) -> EdgeSet {
    let mut out = a.clone();
    out.difference_with(&b.complement());
    out
}

/// A trail from `s` to `t` through edge `e`, using only edges of `allowed`.
///
/// Subdivides `e` with a new vertex `w` and routes two edge-disjoint paths from
/// `w` to `s` and `t` (via an extra sink when `s != t`). With `s == t` the
/// result is a circuit through `s` and `e`. Succeeds whenever the subgraph is
/// 2-edge-connected and contains `s`, `t` and `e`.
pub fn trail_through_edge(
    g: &Graph,
    allowed: &EdgeSet,
    e: usize,
    s: usize,
    t: usize,
) -> Result<Trail> {
    g.check_edge(e)?;
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    let n = g.vertex_count();
    let (x, y) = g.endpoints(e);
    let w = n;
    let z = if s == t { None } else { Some(n + 1) };

    let mut edges = Vec::new();
    let mut origin = Vec::new();
    for f in allowed.iter().filter(|&f| f != e) {
        edges.push(g.endpoints(f));
        origin.push(Some(f));
    }
    edges.push((w, x));
    edges.push((w, y));
    origin.extend([None, None]);
    let sink = match z {
        Some(z) => {
            edges.push((s, z));
            edges.push((t, z));
            origin.extend([None, None]);
            z
        }
        None => s,
    };
    let aux = Graph::new(n + 1 + usize::from(z.is_some()), edges)?;
    let (p1, p2) = two_paths_within(&aux, None, w, sink).map_err(|err| match err {
        Error::CutTooSmall(_) => {
            Error::Internal(format!("edge {e} does not lie on an {s}-{t} trail in the subgraph"))
        }
        other => other,
    })?;

    // strip w (and z) and map back to original edge ids
    let strip = |p: &Trail| -> (Vec<usize>, Vec<usize>) {
        let mut vs = p.vertices()[1..].to_vec();
        let mut es: Vec<usize> = p.edges()[1..].iter().map(|&a| origin[a].unwrap_or(usize::MAX)).collect();
        if z.is_some() {
            vs.pop();
            es.pop();
        }
        debug_assert!(es.iter().all(|&a| a != usize::MAX));
        (vs, es)
    };
    let (mut from_x, mut from_y) = (strip(&p1), strip(&p2));
    if from_x.0[0] != x {
        std::mem::swap(&mut from_x, &mut from_y);
    }
    // reverse(from_x) e from_y
    let mut vertices: Vec<usize> = from_x.0.iter().rev().copied().collect();
    let mut trail_edges: Vec<usize> = from_x.1.iter().rev().copied().collect();
    trail_edges.push(e);
    vertices.extend_from_slice(&from_y.0);
    trail_edges.extend_from_slice(&from_y.1);
    let mut trail = Trail::from_parts(vertices, trail_edges);
    if trail.start() != s {
        trail = trail.reversed();
    }
    debug_assert_eq!((trail.start(), trail.end()), (s, t));
    Ok(trail)
}
