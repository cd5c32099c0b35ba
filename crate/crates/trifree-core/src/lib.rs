//! Exact combinatorics for the acyclic number and the dichromatic number of
//! oriented triangle-free graphs.
//!
//! The crate bundles:
//!
//! * bitset-backed graph and digraph types ([`graph`], [`bitset`]),
//! * exact solvers: acyclic number, independence number, arboricity,
//!   chromatic and dichromatic number with certificates ([`acyclic`],
//!   [`arboricity`], [`dicolour`]),
//! * total-order machinery: backedge graphs, the order/dichromatic equality
//!   and degree-halving orders ([`order`], [`linforest`]),
//! * deterministic and seeded random generators: backward-blowups, Paley
//!   tournaments, Mycielskians, `G(n,p)` ([`construct`], [`random`]),
//! * sparsity and tail-bound checks for the probabilistic arguments
//!   ([`sparse`]),
//! * triangle-free graph enumeration, canonical forms and the
//!   cut-decomposition pipeline ([`enumerate`], [`canon`], [`decompose`],
//!   [`extremal`]),
//! * brute-force reference implementations used as test oracles ([`brute`]).
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only adds wall-clock timings to search statistics.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod acyclic;
pub mod arboricity;
pub mod bitset;
pub mod brute;
pub mod canon;
pub mod construct;
pub mod decompose;
pub mod dicolour;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod linforest;
pub mod order;
pub mod random;
pub mod sparse;

pub use bitset::VertexSet;
pub use graph::{Digraph, UndirectedGraph};

/// Hard cap on the number of vertices any graph in this crate may have.
///
/// Chosen as a word multiple large enough for every construction the toolkit
/// produces (the largest is the 209-vertex backward-blowup of the Grötzsch
/// graph).
pub const MAX_VERTICES: usize = 256;

/// Number of 64-bit words backing a [`VertexSet`].
pub(crate) const WORDS: usize = MAX_VERTICES / 64;

/// Node budget for exhaustive searches, so runs are reproducible
/// independently of machine speed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
}

impl Budget {
    pub const fn new(max_nodes: u64) -> Self {
        Budget { max_nodes }
    }

    /// Effectively unlimited; useful in tests on tiny instances.
    pub const fn unlimited() -> Self {
        Budget {
            max_nodes: u64::MAX,
        }
    }
}

impl Default for Budget {
    /// Default limit of 10^9 search nodes.
    fn default() -> Self {
        Budget {
            max_nodes: 1_000_000_000,
        }
    }
}

/// Returned when a search exhausts its node budget before reaching a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExceeded {
    /// Nodes explored when the search gave up.
    pub nodes: u64,
}

impl core::fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "search budget exceeded after {} nodes", self.nodes)
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BudgetExceeded {}
