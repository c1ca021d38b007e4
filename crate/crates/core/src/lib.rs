//! Exactly solvable two-parameter deformations of the quantum harmonic
//! oscillator.
//!
//! A depth parameter `p > -1` lowers the ground level to `1 - 2p` (units
//! ħω/2) while leaving the excited ladder {3, 5, 7, …} untouched; a skew
//! parameter `|s_hat| < 1` reshapes the potential without moving any level.
//! The crate provides:
//!
//! - [`specfun`]: log-gamma, overflow-safe confluent hypergeometric series,
//!   Hermite-type polynomials, and the skew boundary `s_max`.
//! - [`model`]: seed solutions, superpotential, partner potential, exact
//!   spectrum, normalized eigenfunctions, closed-form normalization.
//! - [`oracle`]: an independent finite-difference eigensolver, composite
//!   Simpson quadrature, and an exact Wronskian constancy check, used to
//!   validate the closed forms without trusting them.
//! - [`bec`]: critical temperature of a Bose gas in the dimple trap.
//!
//! All computations are pure functions of their inputs and safe to run
//! concurrently.

// Constants carry guard digits beyond f64 precision.
#![allow(clippy::excessive_precision)]
// Negated comparisons like !(x > 0.0) deliberately reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// ScaledReal/BigFixed expose add/mul/... as inherent methods; the operands
// are mixed value/reference in ways the std operator traits don't fit.
#![allow(clippy::should_implement_trait)]

pub mod bec;
mod bigfixed;
pub mod error;
pub mod model;
pub mod oracle;
pub mod report;
pub mod scaled;
pub mod specfun;

pub use error::{Error, Result};
pub use model::{Eigenstate, PartnerParams};
pub use scaled::ScaledReal;
