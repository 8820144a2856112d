//! Optimal discrimination of quantum states in finite dimension.
//!
//! The crate answers one recurring question in four regimes: given an
//! ensemble of known states with known priors, what is the best measurement
//! to identify which state was prepared, where "best" means
//!
//! * smallest error probability ([`min_error`]),
//! * no misidentification ever, at the price of an inconclusive outcome
//!   ([`unambiguous`]),
//! * largest posterior confidence per conclusive outcome
//!   ([`max_confidence`]),
//! * most mutual information between preparation and outcome
//!   ([`mutual_info`]).
//!
//! Closed forms are used where they exist (two states, symmetric pure
//! ensembles) and a fixed-point solver where they do not. Everything a
//! construction claims is checkable: optimality certificates
//! ([`min_error::check_optimality`]), zero-error residuals, no-signaling
//! bounds derived without any measurement operators, exhaustive
//! low-dimensional searches, a seeded sampling simulator and a path-encoded
//! dilation ([`simulator`]). The [`verify`] module runs the whole battery
//! and reports one line per check.
//!
//! Measurements are plain operator lists ([`Pom`]) with outcome labels;
//! states enter as amplitude vectors ([`PureState`]) or density matrices
//! ([`DensityOperator`]). All angles are radians, all logarithms base 2.

#![forbid(unsafe_code)]

pub mod eigen;
pub mod ensembles;
pub mod error;
pub mod io;
pub mod max_confidence;
pub mod min_error;
pub mod mutual_info;
pub mod random;
pub(crate) mod search;
pub mod simulator;
pub mod types;
pub mod unambiguous;
pub mod validate;
pub mod verify;

pub use error::{DiscrimError, Result};
pub use types::{
    CanonicalPair, DensityOperator, HermitianOperator, OutcomeLabel, Pom, ProbabilityOperator,
    PureState, StateEnsemble, Tolerances,
};
