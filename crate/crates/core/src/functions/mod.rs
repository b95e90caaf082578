//! Concrete objective families.
//!
//! The coverage family and the random generators exist for testing; the
//! log-det family is the experimental objective.

mod coverage;
mod instance;
mod logdet;
mod matrix;
mod modular;
pub mod random;
pub use random::{random_coverage, random_modular, random_tabular};
mod tabular;

pub use coverage::WeightedCoverageFunction;
pub use instance::{load_instance, InstanceSpec, Objective};
pub use logdet::{random_psd_instance, LogDetFunction, PSD_JITTER};
pub use matrix::{cholesky_logdet, DenseMatrix, SYMMETRY_TOL};
pub use modular::ModularFunction;
pub use tabular::{
    make_example1_function, TableViolation, TabularFunction, MAX_TABULAR_SIZE, TABLE_TOL,
};
