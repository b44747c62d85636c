//! Exhaustive feasibility: a circuit through `S` exists exactly when some
//! connected even edge set contains `S`.

use std::ops::ControlFlow;

use crate::components::is_edge_set_connected;
use crate::cycle_space::CycleSpaceBasis;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::euler::euler_circuit;
use crate::graph::Graph;
use crate::trail::Trail;

/// Largest edge count accepted by [`FeasibilityTable`].
pub const TABLE_MAX_EDGES: usize = 20;

/// Largest edge count accepted by [`check_parity_monotonicity`].
pub const MONOTONICITY_MAX_EDGES: usize = 16;

/// Euler tour of the first connected even superset of `s` in Gray-code
/// order, or `None` if there is none. An empty `s` gives the trivial trail.
pub fn feasible_by_bruteforce(g: &Graph, s: &EdgeSet) -> Result<Option<Trail>> {
    for e in s.iter() {
        g.check_edge(e)?;
    }
    if s.is_empty() {
        return Ok(Some(Trail::trivial(0)));
    }
    let basis = CycleSpaceBasis::new(g);
    let mut found = None;
    basis.for_each_even_set(g.edge_count(), |f| {
        if s.is_subset(f) && is_edge_set_connected(g, f) {
            found = Some(f.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    found.map(|f| euler_circuit(g, &f)).transpose()
}

/// Feasibility of every edge subset of a small graph.
#[derive(Clone, Debug)]
pub struct FeasibilityTable {
    m: usize,
    feasible: Vec<bool>,
}

impl FeasibilityTable {
    /// Marks the connected even sets, then closes downward: a set is
    /// feasible when some feasible set contains it.
    pub fn new(g: &Graph) -> Result<Self> {
        let m = g.edge_count();
        if m > TABLE_MAX_EDGES {
            return Err(Error::TooLarge(format!("{m} edges > {TABLE_MAX_EDGES}")));
        }
        let mut feasible = vec![false; 1 << m];
        feasible[0] = true;
        CycleSpaceBasis::new(g).for_each_even_set(m, |f| {
            if is_edge_set_connected(g, f) {
                feasible[mask_of(f)] = true;
            }
            ControlFlow::Continue(())
        })?;
        for bit in 0..m {
            for mask in 0..(1usize << m) {
                if mask >> bit & 1 == 1 && feasible[mask] {
                    feasible[mask ^ (1 << bit)] = true;
                }
            }
        }
        Ok(FeasibilityTable { m, feasible })
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn is_feasible_mask(&self, mask: usize) -> bool {
        self.feasible[mask]
    }

    pub fn is_feasible(&self, s: &EdgeSet) -> bool {
        self.feasible[mask_of(s)]
    }

    /// Every set of exactly `size` edges is feasible (vacuous if `size > m`).
    pub fn all_of_size_feasible(&self, size: usize) -> bool {
        (0..(1usize << self.m))
            .filter(|mask| mask.count_ones() as usize == size)
            .all(|mask| self.feasible[mask])
    }
}

fn mask_of(s: &EdgeSet) -> usize {
    s.iter().fold(0usize, |acc, e| acc | 1 << e)
}

/// If every `2k-1` edges lie on a circuit, so do every `2k` edges.
pub fn check_parity_monotonicity(g: &Graph, k: usize) -> Result<bool> {
    if g.edge_count() > MONOTONICITY_MAX_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges > {MONOTONICITY_MAX_EDGES}",
            g.edge_count()
        )));
    }
    if k == 0 {
        return Err(Error::BadParam("k must be at least 1".into()));
    }
    let table = FeasibilityTable::new(g)?;
    Ok(!table.all_of_size_feasible(2 * k - 1) || table.all_of_size_feasible(2 * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trail::verify_circuit;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).unwrap()
    }

    fn ladder4() -> Graph {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7)];
        edges.extend((0..4).map(|i| (i, i + 4)));
        Graph::new(8, edges).unwrap()
    }

    fn prism() -> Graph {
        Graph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    #[test]
    fn cycle_is_feasible_for_every_subset() {
        let g = cycle(6);
        for mask in 1..64usize {
            let s = EdgeSet::from_ids(6, (0..6).filter(|i| mask >> i & 1 == 1));
            let t = feasible_by_bruteforce(&g, &s).unwrap().unwrap();
            verify_circuit(&g, &t, &s).unwrap();
            assert_eq!(t.len(), 6);
        }
    }

    #[test]
    fn three_ladder_rungs_are_infeasible() {
        let g = ladder4();
        assert!(feasible_by_bruteforce(&g, &EdgeSet::from_ids(10, [6, 7, 8])).unwrap().is_none());
        assert!(feasible_by_bruteforce(&g, &EdgeSet::from_ids(10, [7, 8])).unwrap().is_some());
    }

    #[test]
    fn triangle_plus_opposite_edge_is_infeasible() {
        let g = prism();
        assert!(feasible_by_bruteforce(&g, &EdgeSet::from_ids(9, [0, 1, 2, 3])).unwrap().is_none());
    }

    #[test]
    fn table_agrees_with_direct_search() {
        let g = prism();
        let table = FeasibilityTable::new(&g).unwrap();
        for mask in 0..(1usize << 9) {
            let s = EdgeSet::from_ids(9, (0..9).filter(|i| mask >> i & 1 == 1));
            let direct = feasible_by_bruteforce(&g, &s).unwrap().is_some();
            assert_eq!(table.is_feasible_mask(mask), direct, "mask {mask:b}");
        }
    }

    #[test]
    fn monotonicity_examples() {
        assert!(check_parity_monotonicity(&cycle(6), 1).unwrap());
        let bridged = Graph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap();
        assert!(check_parity_monotonicity(&bridged, 1).unwrap());
        let big = Graph::new(17, (0..17).map(|i| (i, (i + 1) % 17)).collect()).unwrap();
        assert!(matches!(check_parity_monotonicity(&big, 1), Err(Error::TooLarge(_))));
    }
}
