//! Optimal programmable discrimination of multi-copy qubit states.
//!
//! A programmable discrimination machine receives `n_A` copies of an unknown
//! state in program port A, `n_C` copies of another unknown state in program
//! port C, and `n_B` copies of one of the two in data port B. It must decide
//! which program state the data matches. This crate computes:
//!
//! - [`pure`]: unambiguous (inconclusive probability) and minimum-error
//!   optima for pure states, symmetric `n × m × n` and asymmetric loads;
//! - [`mixed`]: minimum-error optimum for states of known purity, via the
//!   block decomposition into small Helstrom problems;
//! - [`universal`]: the same with the purity averaged over a prior;
//! - [`asym`]: closed-form asymptotic approximations;
//! - [`oracle`]: an independent brute-force reference on explicit matrices.
//!
//! Angular-momentum machinery lives in [`angular`].

pub mod angular;
pub mod asym;
pub mod cli;
mod error;
pub mod mixed;
pub mod oracle;
pub mod par;
pub mod pure;
pub mod special;
pub mod universal;

pub use error::{Error, Result};
pub use par::Execution;
