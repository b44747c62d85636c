use serde::Serialize;

use crate::edgeset::EdgeSet;
use crate::graph::Graph;

/// A walk `v_0 e_1 v_1 ... e_r v_r` with pairwise distinct edges.
///
/// Edge `edges[i]` joins `vertices[i]` and `vertices[i + 1]`. A trail with no
/// edges is legal and consists of a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trail {
    #[serde(rename = "walk")]
    vertices: Vec<usize>,
    #[serde(rename = "edge_walk")]
    edges: Vec<usize>,
}

impl Trail {
    pub fn trivial(v: usize) -> Self {
        Trail { vertices: vec![v], edges: Vec::new() }
    }

    /// Assembles a trail without validation; see [`check_trail`].
    pub fn from_parts(vertices: Vec<usize>, edges: Vec<usize>) -> Self {
        assert_eq!(vertices.len(), edges.len() + 1, "malformed trail");
        Trail { vertices, edges }
    }

    /// Follows `edges` from `start`, deriving the vertex sequence.
    pub fn from_edges(g: &Graph, start: usize, edges: &[usize]) -> Self {
        let mut vertices = Vec::with_capacity(edges.len() + 1);
        vertices.push(start);
        let mut at = start;
        for &e in edges {
            at = g.other_end(e, at);
            vertices.push(at);
        }
        Trail { vertices, edges: edges.to_vec() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.start() == self.end()
    }

    pub fn vertex(&self, i: usize) -> usize {
        self.vertices[i]
    }

    pub fn edge(&self, i: usize) -> usize {
        self.edges[i]
    }

    pub fn reversed(&self) -> Trail {
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.reverse();
        edges.reverse();
        Trail { vertices, edges }
    }

    /// Appends `other`, which must start where `self` ends.
    pub fn extend(&mut self, other: &Trail) {
        assert_eq!(self.end(), other.start(), "trails do not meet");
        self.vertices.extend_from_slice(&other.vertices[1..]);
        self.edges.extend_from_slice(&other.edges);
    }

    /// For a closed trail: the same circuit started at vertex position `pos`.
    pub fn rotated(&self, pos: usize) -> Trail {
        assert!(self.is_closed());
        let r = self.edges.len();
        if r == 0 {
            return self.clone();
        }
        let pos = pos % r;
        let edges: Vec<usize> = (0..r).map(|i| self.edges[(pos + i) % r]).collect();
        let vertices: Vec<usize> = (0..=r).map(|i| self.vertices[(pos + i) % r]).collect();
        Trail { vertices, edges }
    }

    /// Sub-trail between vertex positions `from..=to`.
    pub fn slice(&self, from: usize, to: usize) -> Trail {
        Trail {
            vertices: self.vertices[from..=to].to_vec(),
            edges: self.edges[from..to].to_vec(),
        }
    }

    pub fn edge_set(&self, m: usize) -> EdgeSet {
        EdgeSet::from_ids(m, self.edges.iter().copied())
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }
}

/// Why a walk failed to be a circuit through the prescribed edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircuitDefect {
    Malformed,
    VertexOutOfRange { position: usize },
    EdgeOutOfRange { position: usize },
    /// The recorded edge does not join the recorded consecutive vertices.
    NotIncident { position: usize },
    DuplicateEdge(usize),
    NotClosed,
    Uncovered(usize),
}

impl std::fmt::Display for CircuitDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CircuitDefect::Malformed => write!(f, "vertex and edge sequences have mismatched lengths"),
            CircuitDefect::VertexOutOfRange { position } => {
                write!(f, "vertex at position {position} out of range")
            }
            CircuitDefect::EdgeOutOfRange { position } => {
                write!(f, "edge at position {position} out of range")
            }
            CircuitDefect::NotIncident { position } => {
                write!(f, "edge at position {position} does not join its neighbors in the walk")
            }
            CircuitDefect::DuplicateEdge(e) => write!(f, "edge {e} used twice"),
            CircuitDefect::NotClosed => write!(f, "walk is not closed"),
            CircuitDefect::Uncovered(e) => write!(f, "prescribed edge {e} not covered"),
        }
    }
}

/// Checks adjacency and edge-distinctness of a raw vertex/edge walk.
pub fn check_walk(g: &Graph, vertices: &[usize], edges: &[usize]) -> Result<(), CircuitDefect> {
    if vertices.len() != edges.len() + 1 {
        return Err(CircuitDefect::Malformed);
    }
    for (i, &v) in vertices.iter().enumerate() {
        if v >= g.vertex_count() {
            return Err(CircuitDefect::VertexOutOfRange { position: i });
        }
    }
    let mut used = g.empty_edge_set();
    for (i, &e) in edges.iter().enumerate() {
        if e >= g.edge_count() {
            return Err(CircuitDefect::EdgeOutOfRange { position: i });
        }
        let (a, b) = g.endpoints(e);
        let (x, y) = (vertices[i], vertices[i + 1]);
        if !((a == x && b == y) || (a == y && b == x)) {
            return Err(CircuitDefect::NotIncident { position: i });
        }
        if used.contains(e) {
            return Err(CircuitDefect::DuplicateEdge(e));
        }
        used.insert(e);
    }
    Ok(())
}

pub fn check_trail(g: &Graph, t: &Trail) -> Result<(), CircuitDefect> {
    check_walk(g, &t.vertices, &t.edges)
}

/// Ok iff `t` is a closed trail of `g` whose edges include all of `s`.
pub fn verify_circuit(g: &Graph, t: &Trail, s: &EdgeSet) -> Result<(), CircuitDefect> {
    verify_circuit_walk(g, &t.vertices, &t.edges, s)
}

/// [`verify_circuit`] on unvalidated sequences, e.g. read back from JSON.
pub fn verify_circuit_walk(
    g: &Graph,
    vertices: &[usize],
    edges: &[usize],
    s: &EdgeSet,
) -> Result<(), CircuitDefect> {
    check_walk(g, vertices, edges)?;
    if vertices.first() != vertices.last() {
        return Err(CircuitDefect::NotClosed);
    }
    let covered = EdgeSet::from_ids(g.edge_count(), edges.iter().copied());
    if let Some(e) = s.iter().find(|&e| !covered.contains(e)) {
        return Err(CircuitDefect::Uncovered(e));
    }
    Ok(())
}
