use crate::flow::unit_max_flow;
use crate::graph::Graph;

/// Cut tree of a graph: removing the edge `v - parent[v]` splits the tree into
/// two sides that form a minimum `v`-`parent[v]` cut of the graph, of value
/// `capacity[v]`. Vertex 0 is the root.
#[derive(Clone, Debug)]
pub struct GomoryHuTree {
    pub parent: Vec<usize>,
    pub capacity: Vec<usize>,
}

impl GomoryHuTree {
    /// Gusfield's construction: `n - 1` max-flow computations on the original
    /// graph, no contractions.
    pub fn build(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut parent = vec![0usize; n];
        let mut capacity = vec![0usize; n];
        for s in 1..n {
            let t = parent[s];
            let flow = unit_max_flow(g, None, s, t, None);
            let side = &flow.source_side;
            capacity[s] = flow.value;
            for i in 0..n {
                if i != s && side[i] && parent[i] == t {
                    parent[i] = s;
                }
            }
            if side[parent[t]] {
                parent[s] = parent[t];
                parent[t] = s;
                capacity[s] = capacity[t];
                capacity[t] = flow.value;
            }
        }
        GomoryHuTree { parent, capacity }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    /// Tree edges as `(child, parent, capacity)`, excluding the root.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.parent.len())
            .filter(move |&v| self.parent[v] != v)
            .map(move |v| (v, self.parent[v], self.capacity[v]))
    }

    fn root(&self) -> usize {
        (0..self.parent.len())
            .find(|&v| self.parent[v] == v)
            .unwrap_or(0)
    }

    fn children(&self) -> Vec<Vec<usize>> {
        let mut kids = vec![Vec::new(); self.parent.len()];
        for (v, p, _) in self.edges() {
            kids[p].push(v);
        }
        kids
    }

    /// Side of the tree edge above `v`: the subtree rooted at `v`.
    pub fn subtree_mask(&self, v: usize) -> Vec<bool> {
        let kids = self.children();
        let mut inside = vec![false; self.parent.len()];
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            inside[u] = true;
            stack.extend(&kids[u]);
        }
        inside
    }

    /// Minimum tree capacity on the `s`-`t` tree path.
    pub fn min_cut_value(&self, s: usize, t: usize) -> usize {
        if s == t {
            return usize::MAX;
        }
        let depth = self.depths();
        let (mut a, mut b) = (s, t);
        let mut best = usize::MAX;
        while a != b {
            if depth[a] >= depth[b] {
                best = best.min(self.capacity[a]);
                a = self.parent[a];
            } else {
                best = best.min(self.capacity[b]);
                b = self.parent[b];
            }
        }
        best
    }

    fn depths(&self) -> Vec<usize> {
        let n = self.parent.len();
        let mut depth = vec![usize::MAX; n];
        let root = self.root();
        depth[root] = 0;
        let kids = self.children();
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            for &c in &kids[u] {
                depth[c] = depth[u] + 1;
                stack.push(c);
            }
        }
        depth
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_path_minimum_matches_direct_flow() {
        // ladder with 4 rungs plus a pendant vertex 8 attached to 0
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)];
        edges.extend((0..4).map(|i| (i, i + 4)));
        edges.push((0, 8));
        let g = Graph::new(9, edges).unwrap();
        let tree = GomoryHuTree::build(&g);
        assert_eq!(tree.edges().count(), 8);
        for s in 0..9 {
            for t in 0..9 {
                if s != t {
                    let direct = unit_max_flow(&g, None, s, t, None).value;
                    assert_eq!(tree.min_cut_value(s, t), direct, "pair {s},{t}");
                }
            }
        }
    }

    #[test]
    fn subtree_sides_are_min_cuts() {
        let g = Graph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        let tree = GomoryHuTree::build(&g);
        for (v, _, cap) in tree.edges() {
            let side = tree.subtree_mask(v);
            let cut = crate::graph::boundary_of_mask(&g, &side);
            assert_eq!(cut.len(), cap);
        }
    }
}
