//! Connectivity, bridges and maximal 2-edge-connected subgraphs.

use crate::edgeset::EdgeSet;
use crate::graph::Graph;

/// Component label per vertex of `(V, f)` (or of `g` when `f` is `None`).
///
/// Labels are dense and assigned in order of smallest vertex.
pub fn component_labels(g: &Graph, f: Option<&EdgeSet>) -> (Vec<usize>, usize) {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for root in 0..n {
        if label[root] != usize::MAX {
            continue;
        }
        label[root] = count;
        stack.push(root);
        while let Some(u) = stack.pop() {
            for &(v, e) in g.neighbors(u) {
                if f.is_some_and(|f| !f.contains(e)) || label[v] != usize::MAX {
                    continue;
                }
                label[v] = count;
                stack.push(v);
            }
        }
        count += 1;
    }
    (label, count)
}

/// Components as sorted vertex lists.
///
/// With a restriction, vertices that have no edge of `f` are left out.
pub fn connected_components(g: &Graph, restricted_to: Option<&EdgeSet>) -> Vec<Vec<usize>> {
    let (label, count) = component_labels(g, restricted_to);
    let touched = restricted_to.map(|f| {
        let deg = g.degrees_in(f);
        deg.into_iter().map(|d| d > 0).collect::<Vec<_>>()
    });
    let mut comps = vec![Vec::new(); count];
    for v in 0..g.vertex_count() {
        if touched.as_ref().is_some_and(|t| !t[v]) {
            continue;
        }
        comps[label[v]].push(v);
    }
    comps.retain(|c| !c.is_empty());
    comps
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() <= 1 || component_labels(g, None).1 == 1
}

/// True iff the non-isolated vertices of `(V, f)` form one component.
pub fn is_edge_set_connected(g: &Graph, f: &EdgeSet) -> bool {
    connected_components(g, Some(f)).len() <= 1
}

/// A maximal 2-edge-connected subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoEdgeComponent {
    pub vertices: Vec<usize>,
    pub edges: EdgeSet,
}

#[derive(Clone, Debug)]
pub struct BridgeDecomposition {
    pub bridges: EdgeSet,
    pub components: Vec<TwoEdgeComponent>,
    /// Index into `components` for every non-bridge edge of the subgraph.
    pub component_of_edge: Vec<Option<usize>>,
}

impl BridgeDecomposition {
    pub fn is_bridge(&self, e: usize) -> bool {
        self.bridges.contains(e)
    }
}

/// Splits the edges of `(V, f)` into bridges and maximal 2-edge-connected
/// subgraphs.
pub fn bridges_and_2ec_components(g: &Graph, f: &EdgeSet) -> BridgeDecomposition {
    let n = g.vertex_count();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut bridges = g.empty_edge_set();
    let mut clock = 0;

    // iterative lowlink; frame = (vertex, edge used to enter, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(frame) = stack.last_mut() {
            let (u, via, idx) = *frame;
            if let Some(&(v, e)) = g.neighbors(u).get(idx) {
                frame.2 += 1;
                if e == via || !f.contains(e) {
                    continue;
                }
                if order[v] == usize::MAX {
                    order[v] = clock;
                    low[v] = clock;
                    clock += 1;
                    stack.push((v, e, 0));
                } else {
                    low[u] = low[u].min(order[v]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > order[parent] {
                        bridges.insert(via);
                    }
                }
            }
        }
    }

    let mut inner = f.clone();
    inner.difference_with(&bridges);
    let (label, _) = component_labels(g, Some(&inner));
    let mut index_of_label = std::collections::HashMap::new();
    let mut components: Vec<TwoEdgeComponent> = Vec::new();
    let mut component_of_edge = vec![None; g.edge_count()];
    for e in inner.iter() {
        let (u, _) = g.endpoints(e);
        let idx = *index_of_label.entry(label[u]).or_insert_with(|| {
            components.push(TwoEdgeComponent {
                vertices: Vec::new(),
                edges: g.empty_edge_set(),
            });
            components.len() - 1
        });
        components[idx].edges.insert(e);
        component_of_edge[e] = Some(idx);
    }
    for comp in &mut components {
        let deg = g.degrees_in(&comp.edges);
        comp.vertices = (0..n).filter(|&v| deg[v] > 0).collect();
    }
    BridgeDecomposition {
        bridges,
        components,
        component_of_edge,
    }
}
