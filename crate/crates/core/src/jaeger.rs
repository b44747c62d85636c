//! Extending an edge set to an even subgraph, or finding the odd cut that
//! forbids it.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::components::{connected_components, is_connected};
use crate::cuts::{odd_cut_within, CutCertificate};
use crate::cycle_space::CycleSpaceBasis;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{is_even_subgraph, Graph};

/// Largest vertex count accepted by [`min_components_even_extension`].
pub const MIN_COMPONENTS_MAX_VERTICES: usize = 20;

/// An even edge set containing the prescribed edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenExtension {
    #[serde(rename = "edges")]
    pub even_set: EdgeSet,
    /// Components of the subgraph formed by `even_set`, ignoring isolated vertices.
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JaegerOutcome {
    Extension(EvenExtension),
    OddCut(CutCertificate),
}

impl JaegerOutcome {
    pub fn extension(&self) -> Option<&EvenExtension> {
        match self {
            JaegerOutcome::Extension(x) => Some(x),
            JaegerOutcome::OddCut(_) => None,
        }
    }
}

/// `S ∪ J` for a `T`-join `J` of `G - S`, where `T` is the set of odd
/// vertices of `(V, S)`; or the odd cut inside `S` when some component of
/// `G - S` holds an odd number of them.
pub fn extend_to_even_subgraph(g: &Graph, s: &EdgeSet) -> Result<JaegerOutcome> {
    if !is_connected(g) {
        return Err(Error::DisconnectedInput);
    }
    if let Some(cut) = odd_cut_within(g, s)? {
        return Ok(JaegerOutcome::OddCut(cut));
    }
    let n = g.vertex_count();
    let rest = s.complement();
    let deg = g.degrees_in(s);

    // depth-first spanning forest of G - S, discovery order per tree
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut join = g.empty_edge_set();
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut order = Vec::new();
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            order.push(u);
            for &(v, e) in g.neighbors(u).iter().rev() {
                if rest.contains(e) && depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = Some((u, e));
                    stack.push(v);
                }
            }
        }
        let odd: Vec<usize> = order.into_iter().filter(|&v| deg[v] % 2 == 1).collect();
        for pair in odd.chunks(2) {
            let [x, y] = pair else {
                return Err(Error::Internal("odd number of odd vertices in a component".into()));
            };
            let (mut x, mut y) = (*x, *y);
            while x != y {
                if depth[x] < depth[y] {
                    std::mem::swap(&mut x, &mut y);
                }
                let (p, e) = parent[x].expect("non-root");
                join.toggle(e);
                x = p;
            }
        }
    }

    let join_deg = g.degrees_in(&join);
    debug_assert!((0..n).all(|v| (join_deg[v] % 2 == 1) == (deg[v] % 2 == 1)));
    let mut even_set = s.clone();
    even_set.union_with(&join);
    if !is_even_subgraph(g, &even_set) {
        return Err(Error::Internal("extension is not even".into()));
    }
    let components = connected_components(g, Some(&even_set)).len();
    Ok(JaegerOutcome::Extension(EvenExtension { even_set, components }))
}

/// Least number of components of an even edge set containing `s`, by
/// enumerating the cycle space.
pub fn min_components_even_extension(g: &Graph, s: &EdgeSet) -> Result<usize> {
    if g.vertex_count() > MIN_COMPONENTS_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "{} vertices > {MIN_COMPONENTS_MAX_VERTICES}",
            g.vertex_count()
        )));
    }
    let basis = CycleSpaceBasis::new(g);
    let mut best: Option<usize> = None;
    basis.for_each_even_set(g.edge_count(), |f| {
        if s.is_subset(f) {
            let count = connected_components(g, Some(f)).len();
            best = Some(best.map_or(count, |b| b.min(count)));
        }
        ControlFlow::Continue(())
    })?;
    best.ok_or(Error::NotExtendable)
}
