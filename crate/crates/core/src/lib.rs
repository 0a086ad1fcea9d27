//! Exact computations in the Hopf algebra of unlabeled-graph quasi-symmetric
//! functions.
//!
//! Every simple graph `G` without isolated vertex indexes a power series
//! `M_G` in the commuting, idempotent variables `x_ij` (`i < j`): the sum of
//! the monomials of all labelings of `G` by positive integers. Evaluated on
//! the adjacency bits of a host graph `H`, `M_G(H)` is the number of
//! subgraphs of `H` isomorphic to `G`. The span of the `M_G` is closed under
//! multiplication and carries a coproduct splitting connected components,
//! which makes it a commutative, cocommutative Hopf algebra.
//!
//! Layout:
//!
//! * [`graph`] - labeled graphs, the relabeling action, packing and
//!   canonical forms.
//! * [`series`] - truncations of `M_G` and their evaluation on hosts.
//! * [`hopf`] - linear combinations of `M_G`, product, coproduct, antipode.
//! * [`invariants`] - separating families, the isomorphism criterion,
//!   vertex-deleted decks and Kelly's identity.
//! * [`enumeration`] - orderly generation and Euler transforms.

pub mod enumeration;
pub mod error;
pub mod graph;
pub mod hopf;
pub mod invariants;
pub mod series;

pub use error::{Error, Result};
pub use graph::{CanonGraph, LabeledGraph, Permutation};
pub use hopf::{Algebra, HopfElement, TensorElement};

/// Largest node count any graph can have: canonical codes pack the
/// `C(16, 2) = 120` pair bits into a `u128`.
pub const HARD_NODE_LIMIT: usize = 16;

/// Configurable capacity bounds. Exceeding one yields [`Error::Capacity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Node bound for algebra operations (operands and products).
    pub max_nodes: usize,
    /// Edge bound for edge-indexed enumeration and binomials of `M_K2`.
    pub max_edges: usize,
    /// Node bound for node-indexed enumeration.
    pub max_generated_nodes: usize,
    /// Largest label used when expanding truncated series.
    pub max_label: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_nodes: 10,
            max_edges: 8,
            max_generated_nodes: 7,
            max_label: 12,
        }
    }
}

impl Limits {
    pub(crate) fn check(what: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::Capacity { what, value, limit })
        } else {
            Ok(())
        }
    }
}
