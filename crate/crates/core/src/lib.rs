//! Certified path partitions and k-partial colorings for spine digraphs.
//!
//! A spine digraph has a vertex partition `(X, Y)` where `D[X]` has a
//! Hamiltonian path and `Y` is stable. For every such digraph and every
//! `k ≥ 1`, [`certify`] produces a path partition whose k-norm is at most the
//! weight of a k-partial coloring, a concrete instance of `π_k(D) ≤ α_k(D)`.
//! [`verify_certificate`] re-checks any certificate from scratch.
//!
//! The [`oracles`] compute the exact quantities by exhaustive search for small
//! digraphs, and the [`harness`] generates seeded instances and runs both
//! sides against each other.
//!
//! ```
//! use spine_linial::{certify, directed_cycle, verify_certificate, SpinePartition};
//!
//! let c5 = directed_cycle(5);
//! let spine = SpinePartition::new(vec![1, 2, 3, 4], vec![0]);
//! let cert = certify(&c5, &spine, 1).unwrap();
//! assert!(cert.k_norm <= cert.weight);
//! assert!(verify_certificate(&c5, &cert).is_ok());
//! ```

pub mod certificate;
pub mod cli;
pub mod constructions;
pub mod digraph;
pub mod harness;
pub mod oracles;
pub mod recognition;

pub use certificate::{
    coloring_k_norm, coloring_weight, k_norm, k_path_weight, validate_k_partial_coloring, validate_path_partition,
    verify_certificate, CaseTag, Certificate, Coloring, KPartialColoring, KPath, PathPartition, Violation,
};
pub use constructions::{
    baseline_coloring, certify, certify_detailed, check_fishbone, fishbone, long_path_partition, loose_coloring,
    prefix_orientation_check, trivial_partition, Certified, ConstructionError, Evidence, FishboneResult,
    TightnessOutcome,
};
pub use digraph::{directed_cycle, make_digraph, Digraph, DigraphError, OverlapError, Path};
pub use oracles::{
    alpha_k_oracle, check_dual, check_linial, chi_k_oracle, lambda_k_oracle, lambda_oracle, pi_k_oracle,
    BoundCheck, OracleBudget, OracleError,
};
pub use recognition::{
    check_spine_partition, classify_tightness, find_hamiltonian_path, find_spine_partition, find_split_partition,
    hamiltonian_path_semicomplete, is_semicomplete, zigzag_violation, LooseWitness, RecognitionError,
    SpinePartition, Tightness, ZigzagKind, ZigzagViolation,
};
