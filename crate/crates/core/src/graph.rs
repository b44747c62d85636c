//! Finite simple undirected graphs with stable vertex and edge ids.
//!
//! Text format, shared by every tool in the workspace:
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines, 0-based, u != v)
//! ```
//!
//! An edge's id is its 0-based position among the edge lines.

use std::fmt::Write as _;

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, parallel edges and bad endpoints.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for (id, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::ParallelEdge(u, v));
            }
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
        Ok(Graph { n, edges, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        self.adjacency[u]
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.edges.len())
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, m: self.edges.len() })
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Degree of every vertex in the spanning subgraph `(V, f)`.
    pub fn degrees_in(&self, f: &EdgeSet) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in f.iter() {
            let (u, v) = self.edges[e];
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Vertices of odd degree in the whole graph.
    pub fn odd_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) % 2 == 1).collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m`".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than the declared {m} edges"),
                });
            }
            let (u, v) = parse_pair(line, body)?;
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: text.lines().count().max(1),
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("invalid integer `{tok}`"),
        })
    };
    let a = next("first value")?;
    let b = next("second value")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line,
            message: format!("unexpected token `{extra}`"),
        });
    }
    Ok((a, b))
}

/// Edges with exactly one endpoint in `side`.
pub fn edge_boundary(g: &Graph, side: &[usize]) -> Result<EdgeSet> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in side {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    Ok(boundary_of_mask(g, &inside))
}

pub(crate) fn boundary_of_mask(g: &Graph, inside: &[bool]) -> EdgeSet {
    let mut out = g.empty_edge_set();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if inside[u] != inside[v] {
            out.insert(e);
        }
    }
    out
}

/// True iff every vertex has even degree in `(V, f)`.
pub fn is_even_subgraph(g: &Graph, f: &EdgeSet) -> bool {
    g.degrees_in(f).iter().all(|d| d % 2 == 0)
}
