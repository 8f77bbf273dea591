//! Even-length cycles in balanced bipartite digraphs.
//!
//! The crate checks the dominating-pair degree conditions `B_k`, finds
//! certified cycles of prescribed lengths, builds the known extremal
//! digraphs, and turns the even-pancyclicity theorems for balanced bipartite
//! digraphs into verdicts with checkable certificates.
//!
//! ```
//! use bipan::families::{generate, FamilySpec};
//! use bipan::verify::{verify_theorem_1_10, Conclusion};
//!
//! let d8 = generate(FamilySpec::D8).unwrap();
//! let verdict = verify_theorem_1_10(&d8);
//! assert!(matches!(verdict.conclusion, Some(Conclusion::D8Isomorphism(_))));
//! ```

pub mod bitset;
pub mod conditions;
pub mod cycles;
pub mod digraph;
pub mod error;
pub mod families;
pub mod format;
pub mod random;
pub mod verify;
pub mod witness;

pub use conditions::{check_bk, check_theorem_hypotheses, ConditionReport, HypothesisReport, Theorem};
pub use cycles::{
    cycle_spectrum, cycles_through_vertex, find_bypass, find_cycle_of_length, is_hamiltonian,
    longest_non_hamiltonian_cycle, Bypass, CycleSpectrum, DEFAULT_MAX_N,
};
pub use digraph::{validate_bipartite, Degree, Digraph, DominatingPair, Kind, RawBipartite, Side, VertexId};
pub use error::{EngineError, GraphError};
pub use format::{parse, serialize};
pub use random::random_bipartite;
pub use witness::{Cycle, Path};
