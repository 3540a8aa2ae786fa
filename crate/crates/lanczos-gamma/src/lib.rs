//! Lanczos approximation of the Γ-function with an arbitrary complex free
//! parameter.
//!
//! The classical Lanczos expansion (C. Lanczos, 1964; analysed in depth by
//! G. R. Pugh, 2004) writes Γ(z+1) as a simple prefactor times a rational
//! series whose coefficients a_k(r) depend on a free parameter r. The
//! coefficients follow from exact interpolation at the non-negative integers,
//! which works verbatim when r is complex. This crate provides:
//!
//! - [`coeffgen`]: coefficient sets for any r with Re(r) > -1/2,
//! - [`evaluator`]: Γ(z+1) and Γ(z) over the complex plane (reflection
//!   formula on the left half-plane),
//! - [`transform`]: an independent quadrature route to the same coefficients
//!   via the Fourier cosine integrals of the transformed integrand, plus the
//!   derivation-level identities used to cross-check it,
//! - [`geometry`]: the parameter values where a_0(r) is purely real or
//!   purely imaginary, and coefficient-magnitude behaviour along vertical
//!   lines in the r-plane,
//! - [`harness`]: error sweeps against exact and high-order references,
//!   with CSV emission for plotting,
//! - [`coeff_file`]: JSON persistence for coefficient sets.
//!
//! The `lanczos-gamma` binary exposes all of it on the command line.

pub mod coeffgen;
mod dd;
pub mod error;
pub mod evaluator;

pub use coeffgen::{CoefficientSet, FreeParameter};
pub use error::{Error, Result};
pub use num_complex::Complex64;
