//! Finite-volume solvers for hyperbolic balance laws built around interface
//! (value, time-derivative) pairs: second-order interface solvers composed
//! with a two-stage fourth-order time stepping, compact Hermite-type
//! reconstruction, and high-order boundary treatment.

pub mod boundary;
pub mod error;
pub mod exec;
pub mod fv;
pub mod gas;
pub mod kinetic;
pub mod problems;
pub mod recon;
pub mod report;
pub mod solvers;
pub mod stepping;

pub use error::{Result, SolverError};
