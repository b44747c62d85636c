//! Graph families with fixed vertex and edge numbering, and seeded random
//! connected graphs.
//!
//! Numbering conventions:
//! - `ladder(r)`: rails `0..r` and `r..2r`; edge ids are the top rail
//!   `(i, i+1)`, then the bottom rail `(r+i, r+i+1)`, then the rungs `(i, r+i)`.
//! - `double_clique(l)`: cliques on `0..l` and `l..2l` (edges in lexicographic
//!   order), then the matching `(i, l+i)`.
//! - `two_cycles_bridge(p, q)`: cycle `0..p`, cycle `p..p+q`, then the
//!   bridge `(0, p)`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cuts::min_odd_cut;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Rejection-sampling attempts before [`random_connected`] gives up.
pub const RANDOM_ATTEMPTS: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedInstance {
    #[serde(skip)]
    pub graph: Graph,
    pub prescribed: EdgeSet,
    pub label: String,
}

impl NamedInstance {
    fn new(graph: Graph, prescribed: Vec<usize>, label: String) -> Self {
        let prescribed = EdgeSet::from_ids(graph.edge_count(), prescribed);
        NamedInstance { graph, prescribed, label }
    }
}

pub fn ladder(r: usize) -> Result<NamedInstance> {
    if r < 2 {
        return Err(Error::BadParam(format!("ladder needs at least 2 rungs, got {r}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..r - 1).map(|i| (i, i + 1)).collect();
    edges.extend((0..r - 1).map(|i| (r + i, r + i + 1)));
    edges.extend((0..r).map(|i| (i, r + i)));
    let inner: Vec<usize> = (1..r - 1).map(|i| ladder_rung(r, i)).collect();
    Ok(NamedInstance::new(Graph::new(2 * r, edges)?, inner, format!("ladder({r})")))
}

/// Edge id of rung `i` in `ladder(r)`.
pub fn ladder_rung(r: usize, i: usize) -> usize {
    2 * (r - 1) + i
}

fn clique_edges(offset: usize, l: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..l).flat_map(move |i| (i + 1..l).map(move |j| (offset + i, offset + j)))
}

pub fn double_clique(l: usize) -> Result<NamedInstance> {
    if l < 3 || l.is_multiple_of(2) {
        return Err(Error::BadParam(format!("clique size must be odd and at least 3, got {l}")));
    }
    let mut edges: Vec<(usize, usize)> = clique_edges(0, l).collect();
    let first_clique = edges.len();
    edges.extend(clique_edges(l, l));
    edges.extend((0..l).map(|i| (i, l + i)));
    let mut prescribed: Vec<usize> = (0..first_clique).collect();
    prescribed.push(first_clique);
    Ok(NamedInstance::new(
        Graph::new(2 * l, edges)?,
        prescribed,
        format!("double_clique({l})"),
    ))
}

pub fn two_cycles_bridge(p: usize, q: usize) -> Result<NamedInstance> {
    if p < 3 || q < 3 {
        return Err(Error::BadParam(format!("cycle lengths must be at least 3, got {p} and {q}")));
    }
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    edges.extend((0..q).map(|i| (p + i, p + (i + 1) % q)));
    edges.push((0, p));
    Ok(NamedInstance::new(
        Graph::new(p + q, edges)?,
        vec![0, p],
        format!("two_cycles_bridge({p},{q})"),
    ))
}

pub fn cycle(n: usize) -> Result<NamedInstance> {
    if n < 3 {
        return Err(Error::BadParam(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(NamedInstance::new(Graph::new(n, edges)?, vec![], format!("cycle({n})")))
}

pub fn complete(n: usize) -> Result<NamedInstance> {
    if n < 2 {
        return Err(Error::BadParam(format!("complete graph needs at least 2 vertices, got {n}")));
    }
    Ok(NamedInstance::new(
        Graph::new(n, clique_edges(0, n).collect())?,
        vec![],
        format!("complete({n})"),
    ))
}

/// The two-clique construction for a given `k`.
#[derive(Clone, Debug)]
pub struct GkWitness {
    pub instance: NamedInstance,
    /// Greatest odd integer at most `(sqrt(8k - 7) + 1) / 2`.
    pub ell: usize,
    /// Edge-connectivity the construction is claimed to have (`ell`).
    pub claimed_edge_connectivity: usize,
}

pub fn gk_lower_witness(k: usize) -> Result<GkWitness> {
    if k < 4 {
        return Err(Error::BadParam(format!("k must be at least 4, got {k}")));
    }
    // l <= (sqrt(8k-7)+1)/2  <=>  (2l-1)^2 <= 8k-7
    let mut ell = 1;
    while (2 * (ell + 2) - 1) * (2 * (ell + 2) - 1) <= 8 * k - 7 {
        ell += 2;
    }
    let mut instance = double_clique(ell)?;
    instance.label = format!("gk_lower_witness({k})");
    debug_assert!(instance.prescribed.len() <= k);
    Ok(GkWitness {
        instance,
        ell,
        claimed_edge_connectivity: ell,
    })
}

/// Uniform labelled tree on `n` vertices from a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf.min(c), leaf.max(c)));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    edges
}

fn random_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    let mut edges = random_tree(n, rng);
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    let mut pool: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|p| !present.contains(p))
        .collect();
    pool.shuffle(rng);
    for p in pool.into_iter().take(m - edges.len()) {
        present.insert(p);
        edges.push(p);
    }
    edges.shuffle(rng);
    Graph::new(n, edges)
}

/// Seeded connected simple graph whose minimum odd cut is absent or at least
/// `threshold`, by rejection sampling.
pub fn random_connected(n: usize, m: usize, threshold: usize, seed: u64) -> Result<NamedInstance> {
    let max_m = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_m {
        return Err(Error::BadParam(format!("no connected simple graph with n={n}, m={m}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_ATTEMPTS {
        let g = random_graph(n, m, &mut rng)?;
        if min_odd_cut(&g)?.is_none_or(|c| c.size >= threshold) {
            return Ok(NamedInstance::new(
                g,
                vec![],
                format!("random_connected({n},{m},{threshold},{seed})"),
            ));
        }
    }
    Err(Error::Exhausted(RANDOM_ATTEMPTS))
}

/// Union of `cycles` edge-disjoint random Hamiltonian cycles on `n` vertices:
/// a connected graph with every degree `2 * cycles`, hence no odd cut.
pub fn random_eulerian(n: usize, cycles: usize, seed: u64) -> Result<NamedInstance> {
    if n < 3 || cycles == 0 || 2 * cycles > n - 1 {
        return Err(Error::BadParam(format!("cannot fit {cycles} Hamiltonian cycles on {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = std::collections::HashSet::new();
    let mut edges = Vec::with_capacity(n * cycles);
    let mut placed = 0;
    let mut attempts = 0;
    while placed < cycles {
        attempts += 1;
        if attempts > RANDOM_ATTEMPTS {
            return Err(Error::Exhausted(RANDOM_ATTEMPTS));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let tour: Vec<(usize, usize)> = (0..n)
            .map(|i| {
                let (u, v) = (order[i], order[(i + 1) % n]);
                (u.min(v), u.max(v))
            })
            .collect();
        if tour.iter().any(|p| present.contains(p)) {
            continue;
        }
        present.extend(tour.iter().copied());
        edges.extend(tour);
        placed += 1;
    }
    Ok(NamedInstance::new(
        Graph::new(n, edges)?,
        vec![],
        format!("random_eulerian({n},{cycles},{seed})"),
    ))
}

/// `core` vertices of degree 9 and `extra` vertices of degree 4.
///
/// Four edge-disjoint Hamiltonian cycles on the core; every extra vertex has
/// two core neighbours and lies on a cycle through the extra vertices; the
/// remaining core vertices are matched. With `core = 160, extra = 40` this is
/// 200 vertices and 800 edges.
pub fn random_nine_four(core: usize, extra: usize, seed: u64) -> Result<NamedInstance> {
    if extra < 3 || core < 9 || core < 2 * extra || (core - 2 * extra) % 2 == 1 {
        return Err(Error::BadParam(format!("no degree 9/4 graph with core {core}, extra {extra}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = random_eulerian(core, 4, rng.gen())?.graph;
    let mut present: std::collections::HashSet<(usize, usize)> = base.edges().iter().copied().collect();
    let mut edges = base.edges().to_vec();
    for attempt in 0.. {
        if attempt == RANDOM_ATTEMPTS {
            return Err(Error::Exhausted(RANDOM_ATTEMPTS));
        }
        let mut order: Vec<usize> = (0..core).collect();
        order.shuffle(&mut rng);
        let matching: Vec<(usize, usize)> = order[2 * extra..]
            .chunks(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        if matching.iter().any(|p| present.contains(p)) {
            continue;
        }
        present.extend(matching.iter().copied());
        edges.extend(matching);
        for (i, pair) in order[..2 * extra].chunks(2).enumerate() {
            edges.push((pair[0], core + i));
            edges.push((pair[1], core + i));
        }
        break;
    }
    let mut ring: Vec<usize> = (core..core + extra).collect();
    ring.shuffle(&mut rng);
    edges.extend((0..extra).map(|i| (ring[i], ring[(i + 1) % extra])));
    Ok(NamedInstance::new(
        Graph::new(core + extra, edges)?,
        vec![],
        format!("random_nine_four({core},{extra},{seed})"),
    ))
}

/// Seeded choice of `size` distinct edge ids.
pub fn random_edge_subset(m: usize, size: usize, rng: &mut impl Rng) -> EdgeSet {
    let mut ids: Vec<usize> = (0..m).collect();
    ids.shuffle(rng);
    EdgeSet::from_ids(m, ids.into_iter().take(size))
}

/// Number of random graphs in [`corpus`].
pub const CORPUS_RANDOM: usize = 500;

/// The named families plus [`CORPUS_RANDOM`] seeded random graphs with
/// `3 <= n <= 9`.
///
/// Random graphs cycle through thresholds 1, 2 and 3 on the minimum odd cut;
/// every tenth one is a dense graph on 6 or 7 vertices with threshold 5.
pub fn corpus() -> Result<Vec<NamedInstance>> {
    let mut out = Vec::new();
    for r in 2..=8 {
        out.push(ladder(r)?);
    }
    out.push(double_clique(3)?);
    out.push(two_cycles_bridge(3, 3)?);
    out.push(two_cycles_bridge(4, 5)?);
    for n in 3..=8 {
        out.push(cycle(n)?);
    }
    out.push(complete(4)?);
    out.push(complete(5)?);

    let mut params = ChaCha8Rng::seed_from_u64(0x0dd_c07);
    for i in 0..CORPUS_RANDOM {
        let seed = 10_000 + i as u64;
        let (n, m, threshold) = if i % 10 == 9 {
            let n = params.gen_range(6..=7);
            let max_m = n * (n - 1) / 2;
            (n, params.gen_range(max_m - 5..=max_m), 5)
        } else {
            let n = params.gen_range(3..=9);
            let max_m = (n * (n - 1) / 2).min(2 * n + 2);
            let threshold = [1, 2, 3][i % 3];
            let min_m = if threshold == 1 { n - 1 } else { n.min(max_m) };
            (n, params.gen_range(min_m..=max_m), threshold)
        };
        out.push(random_connected(n, m, threshold, seed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::{bridges_and_2ec_components, is_connected};
    use crate::cuts::brute_force_min_odd_cut;

    #[test]
    fn ladder_shapes() {
        let l2 = ladder(2).unwrap();
        assert_eq!((l2.graph.vertex_count(), l2.graph.edge_count()), (4, 4));
        assert!(l2.prescribed.is_empty());
        let l4 = ladder(4).unwrap();
        assert_eq!((l4.graph.vertex_count(), l4.graph.edge_count()), (8, 10));
        assert_eq!(l4.prescribed.to_vec(), vec![7, 8]);
        assert_eq!(l4.graph.endpoints(ladder_rung(4, 1)), (1, 5));
        assert!(matches!(ladder(1), Err(Error::BadParam(_))));
    }

    #[test]
    fn ladder_min_odd_cut_is_three() {
        for r in 3..=8 {
            let g = ladder(r).unwrap().graph;
            assert_eq!(brute_force_min_odd_cut(&g).unwrap().unwrap().size, 3, "r = {r}");
        }
    }

    #[test]
    fn double_clique_sizes() {
        let p = double_clique(3).unwrap();
        assert_eq!((p.graph.vertex_count(), p.graph.edge_count(), p.prescribed.len()), (6, 9, 4));
        let d5 = double_clique(5).unwrap();
        assert_eq!((d5.graph.vertex_count(), d5.prescribed.len()), (10, 11));
        assert!(double_clique(4).is_err());
        assert!(double_clique(1).is_err());
    }

    #[test]
    fn gk_witness_arithmetic() {
        let w4 = gk_lower_witness(4).unwrap();
        assert_eq!((w4.ell, w4.instance.prescribed.len()), (3, 4));
        let w5 = gk_lower_witness(5).unwrap();
        assert_eq!((w5.ell, w5.instance.prescribed.len()), (3, 4));
        let w11 = gk_lower_witness(11).unwrap();
        assert_eq!((w11.ell, w11.instance.prescribed.len()), (5, 11));
        let w10 = gk_lower_witness(10).unwrap();
        assert_eq!(w10.ell, 3);
        assert!(gk_lower_witness(3).is_err());
    }

    #[test]
    fn two_cycles_bridge_shape() {
        let t = two_cycles_bridge(3, 3).unwrap();
        assert_eq!(t.graph.edge_count(), 7);
        assert_eq!(min_odd_cut(&t.graph).unwrap().unwrap().size, 1);
        assert!(two_cycles_bridge(2, 3).is_err());
    }

    #[test]
    fn random_graphs_are_deterministic_and_meet_thresholds() {
        let a = random_connected(10, 20, 3, 7).unwrap();
        let b = random_connected(10, 20, 3, 7).unwrap();
        assert_eq!(a.graph.edges(), b.graph.edges());
        assert!(is_connected(&a.graph));
        assert!(min_odd_cut(&a.graph).unwrap().is_none_or(|c| c.size >= 3));
        let bridgeless = random_connected(8, 12, 2, 1).unwrap();
        assert!(bridges_and_2ec_components(&bridgeless.graph, &bridgeless.graph.all_edges())
            .bridges
            .is_empty());
        assert!(random_connected(5, 3, 1, 0).is_err());
    }

    #[test]
    fn nine_four_degrees() {
        let g = random_nine_four(160, 40, 5).unwrap().graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (200, 800));
        assert!((0..160).all(|v| g.degree(v) == 9));
        assert!((160..200).all(|v| g.degree(v) == 4));
        assert!(is_connected(&g));
        assert!(random_nine_four(10, 6, 0).is_err());
    }

    #[test]
    fn eulerian_union_has_even_degrees() {
        let g = random_eulerian(50, 4, 3).unwrap().graph;
        assert_eq!(g.edge_count(), 200);
        assert!((0..50).all(|v| g.degree(v) == 8));
        assert!(is_connected(&g));
    }
}
