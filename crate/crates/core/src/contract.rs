use crate::components::component_labels;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with one vertex set shrunk to a single vertex.
///
/// Vertices outside the contracted set keep their relative order and are
/// renumbered `0..n'-1`; the contracted vertex is the last one. Parallel edges
/// created by the contraction are merged into the lowest-id original, and
/// edges inside the contracted set are dropped.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    pub contracted: usize,
    /// Original vertex -> new vertex.
    pub vertex_map: Vec<usize>,
    /// New vertex -> original vertex, `None` for the contracted vertex.
    pub vertex_origin: Vec<Option<usize>>,
    /// Original edge -> new edge; `None` for dropped (internal) edges.
    pub edge_map: Vec<Option<usize>>,
    /// New edge -> representative original edge.
    pub edge_origin: Vec<usize>,
    members: Vec<bool>,
}

impl Contraction {
    pub fn is_contracted(&self, original: usize) -> bool {
        self.members[original]
    }

    /// Original vertex set corresponding to a vertex set of the contracted graph.
    pub fn lift_side(&self, side: &[usize]) -> Vec<usize> {
        let mut out = Vec::new();
        for &v in side {
            match self.vertex_origin[v] {
                Some(o) => out.push(o),
                None => out.extend((0..self.members.len()).filter(|&o| self.members[o])),
            }
        }
        out.sort_unstable();
        out
    }

    pub fn lift_edges(&self, f: &EdgeSet, m: usize) -> EdgeSet {
        EdgeSet::from_ids(m, f.iter().map(|e| self.edge_origin[e]))
    }
}

/// Contracts the vertex set `w`, which must induce a connected subgraph.
pub fn contract_subgraph(g: &Graph, w: &[usize]) -> Result<Contraction> {
    if w.is_empty() {
        return Err(Error::EmptyW);
    }
    let n = g.vertex_count();
    let mut members = vec![false; n];
    for &v in w {
        g.check_vertex(v)?;
        members[v] = true;
    }
    let mut induced = g.empty_edge_set();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if members[u] && members[v] {
            induced.insert(e);
        }
    }
    let (label, _) = component_labels(g, Some(&induced));
    let root = label[w[0]];
    if w.iter().any(|&v| label[v] != root) {
        return Err(Error::DisconnectedW);
    }

    let mut vertex_map = vec![0; n];
    let mut vertex_origin = Vec::new();
    for v in 0..n {
        if !members[v] {
            vertex_map[v] = vertex_origin.len();
            vertex_origin.push(Some(v));
        }
    }
    let contracted = vertex_origin.len();
    vertex_origin.push(None);
    for v in 0..n {
        if members[v] {
            vertex_map[v] = contracted;
        }
    }

    let mut edges = Vec::new();
    let mut edge_origin = Vec::new();
    let mut edge_map = vec![None; g.edge_count()];
    let mut by_pair = std::collections::HashMap::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (vertex_map[u], vertex_map[v]);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        let id = *by_pair.entry(key).or_insert_with(|| {
            edges.push((a, b));
            edge_origin.push(e);
            edges.len() - 1
        });
        edge_map[e] = Some(id);
    }
    let graph = Graph::new(contracted + 1, edges)?;
    Ok(Contraction {
        graph,
        contracted,
        vertex_map,
        vertex_origin,
        edge_map,
        edge_origin,
        members,
    })
}
