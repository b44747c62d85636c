//! Odd edge cuts: minimum odd cut, an exhaustive oracle for it, and odd cuts
//! contained in a given edge set.
//!
//! A cut `∂A` is odd exactly when `A` holds an odd number of odd-degree
//! vertices, so the minimum odd cut is the minimum `T`-cut for `T` the set of
//! odd-degree vertices. Minimum `T`-cuts are attained among the fundamental
//! cuts of a Gomory-Hu tree.

mod certificate;
mod gomory_hu;

pub use certificate::CutCertificate;
pub use gomory_hu::GomoryHuTree;

use crate::components::{component_labels, is_connected};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`brute_force_min_odd_cut`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 24;

/// Orders candidates by size, then by side normalized to contain vertex 0.
fn better(candidate: &CutCertificate, best: &Option<CutCertificate>) -> bool {
    match best {
        None => true,
        Some(b) => (candidate.size, &candidate.side) < (b.size, &b.side),
    }
}

fn normalized(g: &Graph, cert: CutCertificate) -> CutCertificate {
    if cert.side.first() == Some(&0) {
        cert
    } else {
        cert.flipped(g)
    }
}

/// A minimum-cardinality odd cut, or `None` if every cut is even.
pub fn min_odd_cut(g: &Graph) -> Result<Option<CutCertificate>> {
    if !is_connected(g) {
        return Err(Error::DisconnectedInput);
    }
    let mut is_terminal = vec![false; g.vertex_count()];
    let odd = g.odd_vertices();
    if odd.is_empty() {
        return Ok(None);
    }
    for &v in &odd {
        is_terminal[v] = true;
    }
    let tree = GomoryHuTree::build(g);
    let mut best: Option<CutCertificate> = None;
    for (v, _, capacity) in tree.edges() {
        if best.as_ref().is_some_and(|b| capacity > b.size) {
            continue;
        }
        let side = tree.subtree_mask(v);
        let terminals = (0..side.len()).filter(|&u| side[u] && is_terminal[u]).count();
        if terminals % 2 == 0 {
            continue;
        }
        let cert = normalized(g, CutCertificate::from_mask(g, &side));
        debug_assert_eq!(cert.size, capacity);
        if better(&cert, &best) {
            best = Some(cert);
        }
    }
    match best {
        Some(c) if c.odd => Ok(Some(c)),
        _ => Err(Error::Internal("odd-degree vertices but no odd tree cut".into())),
    }
}

/// Exact minimum odd cut by enumerating every side that contains vertex 0.
pub fn brute_force_min_odd_cut(g: &Graph) -> Result<Option<CutCertificate>> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooLarge(format!("{n} vertices > {BRUTE_FORCE_MAX_VERTICES}")));
    }
    if n < 2 {
        return Ok(None);
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (1u32 << u, 1u32 << v))
        .collect();
    let mut best: Option<(usize, Vec<usize>)> = None;
    // bit i of `rest` decides vertex i + 1
    for rest in 0u32..(1u32 << (n - 1)) {
        let mask = (rest << 1) | 1;
        if mask.count_ones() as usize == n {
            continue;
        }
        let size = edges
            .iter()
            .filter(|&&(a, b)| (mask & a == 0) != (mask & b == 0))
            .count();
        if size % 2 == 0 || best.as_ref().is_some_and(|(s, _)| size > *s) {
            continue;
        }
        let side: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if best.as_ref().is_none_or(|(s, b)| (size, &side) < (*s, b)) {
            best = Some((size, side));
        }
    }
    Ok(best.map(|(_, side)| CutCertificate::new(g, &side).expect("in range")))
}

/// An odd cut of size at most `k`, if the graph has one.
pub fn has_odd_cut_leq(g: &Graph, k: usize) -> Result<Option<CutCertificate>> {
    Ok(min_odd_cut(g)?.filter(|c| c.size <= k))
}

/// An odd cut of `g` contained in `s`, if any.
///
/// Each component `K` of `G - S` has `∂K ⊆ S`, and `|∂K|` has the parity of
/// the number of odd-degree vertices of `(V, S)` inside `K`. Conversely every
/// cut inside `S` is a union of such component boundaries, so some component
/// is odd whenever `S` contains an odd cut.
pub fn odd_cut_within(g: &Graph, s: &EdgeSet) -> Result<Option<CutCertificate>> {
    if !is_connected(g) {
        return Err(Error::DisconnectedInput);
    }
    let deg = g.degrees_in(s);
    let rest = s.complement();
    let (label, count) = component_labels(g, Some(&rest));
    let mut parity = vec![0usize; count];
    for v in 0..g.vertex_count() {
        parity[label[v]] ^= deg[v] & 1;
    }
    let Some(odd_label) = (0..count).find(|&c| parity[c] == 1) else {
        return Ok(None);
    };
    let side: Vec<usize> = (0..g.vertex_count()).filter(|&v| label[v] == odd_label).collect();
    let cert = CutCertificate::new(g, &side)?;
    debug_assert!(cert.odd && cert.boundary.is_subset(s));
    Ok(Some(cert))
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn bridged_triangles() -> Graph {
        Graph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)],
        )
        .unwrap()
    }

    fn k4() -> Graph {
        Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn sizes(g: &Graph) -> (Option<usize>, Option<usize>) {
        (
            min_odd_cut(g).unwrap().map(|c| c.size),
            brute_force_min_odd_cut(g).unwrap().map(|c| c.size),
        )
    }

    #[test]
    fn frozen_minimum_odd_cuts() {
        // expected values computed by exhaustive bipartition enumeration
        assert_eq!(sizes(&cycle(6)), (None, None));
        assert_eq!(sizes(&bridged_triangles()), (Some(1), Some(1)));
        assert_eq!(sizes(&ladder4()), (Some(3), Some(3)));
        assert_eq!(sizes(&prism()), (Some(3), Some(3)));
        assert_eq!(sizes(&k4()), (Some(3), Some(3)));
        let k2 = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(sizes(&k2), (Some(1), Some(1)));
    }

    #[test]
    fn bridge_certificate_is_the_bridge() {
        let c = min_odd_cut(&bridged_triangles()).unwrap().unwrap();
        assert_eq!(c.boundary.to_vec(), vec![6]);
        assert_eq!(c.side, vec![0, 1, 2]);
    }

    #[test]
    fn threshold_queries() {
        let g = ladder4();
        assert_eq!(has_odd_cut_leq(&g, 3).unwrap().map(|c| c.size), Some(3));
        assert!(has_odd_cut_leq(&g, 2).unwrap().is_none());
        assert!(has_odd_cut_leq(&cycle(6), 1000).unwrap().is_none());
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let g = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(matches!(min_odd_cut(&g), Err(Error::DisconnectedInput)));
    }

    #[test]
    fn brute_force_guard() {
        let g = cycle(25);
        assert!(matches!(brute_force_min_odd_cut(&g), Err(Error::TooLarge(_))));
    }

    #[test]
    fn odd_cut_inside_a_star() {
        let g = k4();
        let star = EdgeSet::from_ids(6, [0, 1, 2]);
        let c = odd_cut_within(&g, &star).unwrap().unwrap();
        assert_eq!(c.boundary, star);
        assert_eq!(c.size, 3);
    }

    #[test]
    fn ladder_rungs_contain_no_cut() {
        let g = ladder4();
        for rungs in [[6, 7, 8], [7, 8, 9], [6, 8, 9]] {
            let s = EdgeSet::from_ids(10, rungs);
            assert!(odd_cut_within(&g, &s).unwrap().is_none());
        }
        assert!(odd_cut_within(&g, &g.empty_edge_set()).unwrap().is_none());
    }
}
