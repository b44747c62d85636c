//! Fixed inputs shared by the benchmarks.

use oddcut_core::generators::{ladder, random_connected, random_edge_subset, random_nine_four};
use oddcut_core::{EdgeSet, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Case {
    pub name: String,
    pub graph: Graph,
    pub prescribed: EdgeSet,
}

/// Graphs with no odd cut of size at most `|prescribed|`, so the finder
/// always builds a circuit.
pub fn circuit_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for (core, extra, k) in [(40, 10, 4), (80, 20, 6), (160, 40, 8)] {
        let graph = random_nine_four(core, extra, 1).unwrap().graph;
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        let prescribed = random_edge_subset(graph.edge_count(), k, &mut rng);
        out.push(Case {
            name: format!("nine_four_n{}_k{k}", core + extra),
            graph,
            prescribed,
        });
    }
    out
}

pub fn cut_cases() -> Vec<Case> {
    let mut out = Vec::new();
    for r in [8, 32, 128] {
        let inst = ladder(r).unwrap();
        out.push(Case {
            name: format!("ladder_{r}"),
            graph: inst.graph,
            prescribed: inst.prescribed,
        });
    }
    let g = random_connected(60, 180, 3, 4).unwrap().graph;
    let m = g.edge_count();
    out.push(Case {
        name: "random_n60_m180".into(),
        graph: g,
        prescribed: EdgeSet::new(m),
    });
    out
}
