//! Circuits through prescribed edges, with odd-cut certificates when none
//! exists.

pub mod circuit;
pub mod components;
pub mod contract;
pub mod cuts;
pub mod cycle_space;
pub mod edgeset;
pub mod error;
pub mod euler;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod jaeger;
pub mod oracle;
pub mod trail;

pub use circuit::{extend_circuit, find_circuit, find_circuit_with_stats, CircuitOutcome, FinderStats};
pub use cuts::{brute_force_min_odd_cut, min_odd_cut, CutCertificate};
pub use edgeset::EdgeSet;
pub use error::{Error, Result};
pub use generators::NamedInstance;
pub use graph::Graph;
pub use jaeger::{extend_to_even_subgraph, EvenExtension, JaegerOutcome};
pub use oracle::feasible_by_bruteforce;
pub use trail::{verify_circuit, Trail};
