//! Certifying toolkit for half-squares of restricted bipartite graphs.
//!
//! The half-square `B²[X]` of a bipartite graph `B = (X, Y, E)` is the graph
//! on `X` in which two vertices are adjacent when they share a neighbor in
//! `Y`. This crate recognizes half-squares of star convex, star biconvex,
//! convex, biconvex, chordal bipartite and tree roots, builds a root on
//! success and returns a forbidden structure on failure. It also implements
//! the reduction from edge clique cover to balanced bisplit roots.

pub mod error;
pub mod graph;
pub mod halfsquare;
pub mod hardness;
pub mod io;
pub mod oracle;
pub mod recognition;

pub use error::{FormatError, GraphError, HardnessError, OracleError, VerifyError};
pub use graph::{
    half_square, incidence_from_cliques, maximal_cliques, maximal_cliques_from_peo, subdivision,
    substitute, true_twin_classes, twin_quotient, vertex_clique_incidence, BipartiteGraph,
    CliqueSet, Graph, Side, TwinPartition,
};
pub use halfsquare::{
    hs_biconvex, hs_chordal_bipartite, hs_convex, hs_star_biconvex, hs_star_convex, hs_tree,
    recognize, verify_root, ClassTag, RecognitionOutcome, RootCertificate, StarCenter, Witness,
};
pub use hardness::{
    build_root_from_cover, extract_cover_from_root, hs_balanced_bisplit, reduce_ecc, solve_ecc,
    strip_universal_vertices, BalancedBisplitRoot, CliqueCover, EccInstance, ReductionOutput,
    StrippedInstance,
};
pub use recognition::{Obstruction, ObstructionKind};
