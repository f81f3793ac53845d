//! Exact algorithms for maximum edge 2-coloring.
//!
//! An edge coloring is *q-valid* when every vertex sees at most `q` distinct
//! colors on its incident edges; σ_q(G) is the largest number of colors such a
//! coloring can use. This crate holds the allocation-only core: graphs and
//! colorings, matchings, an exhaustive oracle for σ, three kernelizations, the
//! palette-guessing FPT decision procedure, and instance generators.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! thread-level parallelism live in the `maxedge` companion crate.

#![no_std]

extern crate alloc;

pub mod coloring;
pub mod generators;
pub mod graph;
pub mod kernels;
pub mod matching;
pub mod oracle;
pub mod solver;

pub use coloring::{
    character_subgraph, compress_colors, palettes, verify_coloring, ColoringError, EdgeColoring,
    Palette, ValidityProfile, Verification,
};
pub use graph::{Graph, GraphError};
pub use matching::{
    matching_coloring, matching_preprocess, max_bipartite_matching, maximal_matching,
    BipartiteGraph, BipartiteMatching, Matching, Preprocess,
};
pub use oracle::{sigma_exact, sigma_threshold, OracleError, SigmaResult, DEFAULT_EDGE_LIMIT};
pub use solver::{solve_exact, solve_exact_with, Decision, SolveControl, SolveError, SolveStats};
pub use generators::{
    gen_random, gen_two_factor, pendant_transform, reduce_mcis, AnnotatedInstance, GenError,
    MCISInstance,
};
pub use kernels::{
    apply_r2_once, has_c4, kernelize_c4free, kernelize_dual, kernelize_standard,
    neighborhood_classes, KernelError, KernelResult, LiftError, LiftOp, Lifting,
    NeighborhoodClass, Verdict,
};
pub use oracle::threshold_witness;
