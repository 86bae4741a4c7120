//! Certifying membership tests for the graph classes that characterize
//! half-squares (chordal, interval, unit interval, strongly chordal, split,
//! block) and for the bipartite root classes, together with the ordering
//! primitives they rest on.
//!
//! Every "yes" carries a checkable certificate. Every "no" carries an
//! [`Obstruction`]: an induced forbidden structure in the queried object.

mod bipartite;
mod chordal;
mod cop;
mod interval;
mod lexical;
mod minimize;
mod split;

pub use bipartite::{
    check_bisplit_partition, check_side_ordering, check_star_center, is_balanced_bisplit,
    is_biconvex, is_chordal_bipartite, is_convex, is_star_convex, BisplitPartition, SideOrdering,
};
pub use chordal::{chordality, find_diamond, is_block_graph, is_perfect_elimination_ordering};
pub use cop::{consecutive_ones, is_consecutive_under};
pub use interval::{find_claw, interval_model, is_unit_interval, CliqueChain};
pub use lexical::{
    closed_neighborhood_matrix, doubly_lexical, find_gamma, is_doubly_lexical, is_strongly_chordal,
    BinaryMatrix, DoublyLexOrdering,
};
pub use minimize::minimize_witness;
pub use split::{find_split_obstruction, is_split, SplitPartition};

use serde::{Deserialize, Serialize};
use std::fmt;

/// The kind of forbidden structure carried by an [`Obstruction`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    /// `[center, leaf, leaf, leaf]`, an induced `K_{1,3}`.
    Claw,
    /// An induced cycle listed in cyclic order. In a bipartite graph the
    /// cycle has length at least six and uses combined ids (see
    /// [`Obstruction`]); otherwise its length is at least four.
    Hole,
    /// `[t_1..t_k, s_1..s_k]`: the `t_i` form a clique, the `s_i` a stable
    /// set, and `s_i` is adjacent exactly to `t_i` and `t_{i+1}` (cyclically).
    KSun,
    /// `[a, b, c, d]` inducing `K_4 - e` with `a d` the missing edge.
    Diamond,
    /// `[a, b, c, d]` where `a b` and `c d` are edges in different components.
    ExtraBigComponent,
    /// The vertex set of the unique big component, none of which is
    /// universal in it.
    NoUniversalVertex,
    /// An induced `2K_2`, `C_4` or `C_5` on twin-class representatives.
    NonSplitQuotient,
    /// An induced `2K_2`, `C_4` or `C_5` (edges `ab`, `cd` for `2K_2`; cyclic
    /// order for the cycles).
    NotSplit,
    /// Vertex set of an inclusion-minimal induced subgraph that is not an
    /// interval graph.
    NotInterval,
    /// Inclusion-minimal set of rows without the consecutive-ones property.
    NotCop,
    /// Other-side vertices of degree at least two (combined ids) whose
    /// neighborhoods have no common vertex on the queried side.
    NoStarCenter,
    /// Two vertices in different connected components.
    Disconnected,
    /// The universal vertices, when the remaining graph has no edge clique
    /// cover with that many cliques.
    TooFewUniversal,
}

impl ObstructionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ObstructionKind::Claw => "claw",
            ObstructionKind::Hole => "hole",
            ObstructionKind::KSun => "k_sun",
            ObstructionKind::Diamond => "diamond",
            ObstructionKind::ExtraBigComponent => "extra_big_component",
            ObstructionKind::NoUniversalVertex => "no_universal_vertex",
            ObstructionKind::NonSplitQuotient => "non_split_quotient",
            ObstructionKind::NotSplit => "not_split",
            ObstructionKind::NotInterval => "not_interval",
            ObstructionKind::NotCop => "not_cop",
            ObstructionKind::NoStarCenter => "no_star_center",
            ObstructionKind::Disconnected => "disconnected",
            ObstructionKind::TooFewUniversal => "too_few_universal",
        }
    }
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Induced forbidden structure certifying a negative answer.
///
/// For graphs the witness lists vertex ids. For bipartite graphs it uses
/// combined ids: X-vertex `x` is `x` and Y-vertex `y` is `nx + y`. For a
/// bare 0-1 matrix ([`consecutive_ones`]) it lists row indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub witness: Vec<usize>,
}

impl Obstruction {
    pub fn new(kind: ObstructionKind, witness: Vec<usize>) -> Self {
        Obstruction { kind, witness }
    }
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.kind, self.witness)
    }
}
