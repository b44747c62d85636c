use crate::components::is_edge_set_connected;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{is_even_subgraph, Graph};
use crate::trail::Trail;

/// Closed trail using every edge of `f` exactly once (Hierholzer).
///
/// An empty `f` yields the trivial trail at vertex 0.
pub fn euler_circuit(g: &Graph, f: &EdgeSet) -> Result<Trail> {
    if !is_even_subgraph(g, f) {
        return Err(Error::NotEven);
    }
    if !is_edge_set_connected(g, f) {
        return Err(Error::NotConnected);
    }
    let Some(first) = f.iter().next() else {
        return Ok(Trail::trivial(0));
    };
    let start = g.endpoints(first).0;

    let mut used = g.empty_edge_set();
    let mut next = vec![0usize; g.vertex_count()];
    // stack of (vertex, edge used to reach it)
    let mut stack = vec![(start, usize::MAX)];
    let mut vertices = Vec::with_capacity(f.len() + 1);
    let mut edges = Vec::with_capacity(f.len());
    while let Some(&(u, via)) = stack.last() {
        let adj = g.neighbors(u);
        while next[u] < adj.len() && (used.contains(adj[next[u]].1) || !f.contains(adj[next[u]].1)) {
            next[u] += 1;
        }
        if let Some(&(v, e)) = adj.get(next[u]) {
            used.insert(e);
            stack.push((v, e));
        } else {
            stack.pop();
            vertices.push(u);
            if via != usize::MAX {
                edges.push(via);
            }
        }
    }
    vertices.reverse();
    edges.reverse();
    Ok(Trail::from_parts(vertices, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trail::verify_circuit;

    #[test]
    fn triangle() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let t = euler_circuit(&g, &g.all_edges()).unwrap();
        assert_eq!(t.len(), 3);
        verify_circuit(&g, &t, &g.all_edges()).unwrap();
    }

    #[test]
    fn bowtie_repeats_the_shared_vertex() {
        let g = Graph::new(5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let t = euler_circuit(&g, &g.all_edges()).unwrap();
        assert_eq!(t.len(), 6);
        verify_circuit(&g, &t, &g.all_edges()).unwrap();
        assert_eq!(t.vertices()[..6].iter().filter(|&&v| v == 2).count(), 2);
    }

    #[test]
    fn disjoint_triangles_are_not_connected() {
        let g = Graph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(euler_circuit(&g, &g.all_edges()), Err(Error::NotConnected)));
    }

    #[test]
    fn odd_degrees_rejected() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(euler_circuit(&g, &g.all_edges()), Err(Error::NotEven)));
    }
}
