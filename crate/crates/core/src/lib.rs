//! Resilient monotone submodular maximization.
//!
//! Choose `alpha` elements of a ground set so that the objective stays high
//! after an adversary deletes the worst `beta` of them. The main entry point
//! is [`solvers::resilient_greedy`], a two-phase greedy whose guarantee
//! depends on the objective's curvature (see [`analysis`]). Exact brute-force
//! solvers for the inner and outer problems live in [`adversary`] and
//! [`solvers`], and [`experiments`] runs the log-det comparison study.

pub mod adversary;
pub mod analysis;
pub mod error;
pub mod experiments;
pub mod functions;
pub mod oracle;
pub mod solvers;
pub mod subset;

pub use error::{Error, Result};
pub use oracle::{marginal_gain, MemoizedOracle, ObjectiveOracle, Oracle, SetFunction};
pub use subset::{GroundSet, Subset};
