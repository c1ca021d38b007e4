//! Special-function kernel: log-gamma, confluent hypergeometric series in
//! overflow-safe form, Hermite-type polynomials, and the skew boundary.
//!
//! Everything here is a pure function of its arguments; all routines may be
//! called concurrently.

mod gamma;
mod hermite;
mod kummer;

pub use gamma::{log_gamma, s_max};
pub use hermite::{hermite_poly, pseudo_hermite};
pub(crate) use kummer::kummer_series_fixed;
pub use kummer::{
    kummer_m, kummer_m_asymptotic, kummer_m_deriv, kummer_transform_check, KummerArgs,
};
