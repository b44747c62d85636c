//! The cycle space over GF(2): every even edge set is a sum of fundamental
//! cycles of a spanning forest.

use std::ops::ControlFlow;

use crate::components::component_labels;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest dimension accepted by the exhaustive enumerations.
pub const MAX_ENUMERATION_DIM: usize = 24;

#[derive(Clone, Debug)]
pub struct CycleSpaceBasis {
    pub cycles: Vec<EdgeSet>,
    pub components: usize,
}

impl CycleSpaceBasis {
    /// Fundamental cycles of a breadth-first spanning forest, one per non-tree
    /// edge in id order.
    pub fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        let mut tree = g.empty_edge_set();
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if depth[root] != usize::MAX {
                continue;
            }
            depth[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &(v, e) in g.neighbors(u) {
                    if depth[v] == usize::MAX {
                        depth[v] = depth[u] + 1;
                        parent[v] = Some((u, e));
                        tree.insert(e);
                        queue.push_back(v);
                    }
                }
            }
        }
        let mut cycles = Vec::new();
        for e in 0..g.edge_count() {
            if tree.contains(e) {
                continue;
            }
            let mut cycle = EdgeSet::from_ids(g.edge_count(), [e]);
            let (mut x, mut y) = g.endpoints(e);
            while x != y {
                if depth[x] < depth[y] {
                    std::mem::swap(&mut x, &mut y);
                }
                let (p, f) = parent[x].expect("non-root");
                cycle.insert(f);
                x = p;
            }
            cycles.push(cycle);
        }
        let components = component_labels(g, None).1;
        CycleSpaceBasis { cycles, components }
    }

    /// `m - n + c`.
    pub fn dimension(&self) -> usize {
        self.cycles.len()
    }

    pub fn check_enumerable(&self) -> Result<()> {
        if self.dimension() > MAX_ENUMERATION_DIM {
            return Err(Error::TooLarge(format!(
                "cycle space dimension {} > {MAX_ENUMERATION_DIM}",
                self.dimension()
            )));
        }
        Ok(())
    }

    /// Visits all `2^d` even edge sets in Gray-code order, starting with the
    /// empty set. Each step toggles one basis cycle.
    pub fn for_each_even_set<F>(&self, m: usize, mut visit: F) -> Result<()>
    where
        F: FnMut(&EdgeSet) -> ControlFlow<()>,
    {
        self.check_enumerable()?;
        let mut current = EdgeSet::new(m);
        if visit(&current).is_break() {
            return Ok(());
        }
        for i in 1u64..(1u64 << self.dimension()) {
            current.symmetric_difference_with(&self.cycles[i.trailing_zeros() as usize]);
            if visit(&current).is_break() {
                break;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_even_subgraph;

    #[test]
    fn k4_has_eight_even_sets() {
        let g = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let basis = CycleSpaceBasis::new(&g);
        assert_eq!(basis.dimension(), 3);
        let mut seen = std::collections::HashSet::new();
        basis
            .for_each_even_set(6, |f| {
                assert!(is_even_subgraph(&g, f));
                seen.insert(f.to_vec());
                ControlFlow::Continue(())
            })
            .unwrap();
        // empty set, four triangles, three 4-cycles
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn forest_has_trivial_cycle_space() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        let basis = CycleSpaceBasis::new(&g);
        assert_eq!((basis.dimension(), basis.components), (0, 2));
    }

    #[test]
    fn dimension_guard() {
        // K_8 has dimension 28 - 8 + 1 = 21, K_9 has 36 - 9 + 1 = 28
        let k9: Vec<(usize, usize)> = (0..9).flat_map(|i| (i + 1..9).map(move |j| (i, j))).collect();
        let g = Graph::new(9, k9).unwrap();
        let basis = CycleSpaceBasis::new(&g);
        assert!(matches!(
            basis.for_each_even_set(36, |_| ControlFlow::Continue(())),
            Err(Error::TooLarge(_))
        ));
    }
}
