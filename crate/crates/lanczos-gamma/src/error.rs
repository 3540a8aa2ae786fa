//! Error type shared by all modules of the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors from coefficient generation, evaluation and the experiment harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Factorial argument outside the double-precision range.
    #[error("factorial argument {0} outside 0..=170")]
    FactorialRange(u32),

    /// Requested number of series terms outside the supported range.
    #[error("term count {0} outside 1..=40")]
    TermCount(usize),

    /// Free parameter violates Re(r) > -1/2 or is not finite.
    #[error("free parameter real part {0} must be finite and exceed -1/2")]
    ParameterDomain(f64),

    /// A rational series factor has a vanishing denominator (z = -k).
    #[error("series denominator vanishes near z = -{0}")]
    SeriesPole(usize),

    /// Gamma evaluated at (or within 1e-12 of) a non-positive integer.
    #[error("gamma pole at non-positive integer {0}")]
    GammaPole(i64),

    /// Transform angle outside [-pi/2, pi/2].
    #[error("theta {0} outside [-pi/2, pi/2]")]
    ThetaRange(f64),

    /// Transform angle too close to an interval endpoint for the integrand.
    #[error("theta {0} within 1e-9 of an interval endpoint")]
    ThetaEndpoint(f64),

    /// Taylor expansion order outside 1..=20.
    #[error("taylor expansion order {0} outside 1..=20")]
    TaylorOrder(usize),

    /// Fourier mode index above the supported cap.
    #[error("cosine mode index {0} exceeds 20")]
    ModeIndex(usize),

    /// Panel refinement exhausted its node budget without two levels agreeing.
    #[error("quadrature did not converge: last two estimates {prev} and {last}")]
    QuadratureConvergence { prev: Complex64, last: Complex64 },

    /// Closed-form integral argument outside Re(z) > -1/2.
    #[error("Re(z) = {0} not greater than -1/2")]
    HalfPlane(f64),

    /// Profile grid too small.
    #[error("profile needs at least 2 points, got {0}")]
    GridSize(usize),

    /// Decay profile ordinate outside y > 0.
    #[error("profile ordinate {0} must be positive")]
    ProfileOrdinate(f64),

    /// A special-point root failed its classification check against a0(r).
    #[error("special point at r_y = {r_y} inconsistent: a0 cross-part ratio {ratio}")]
    Inconsistency { r_y: f64, ratio: f64 },

    /// Argument has no exact gamma value (not integer or half-integer >= 1.5).
    #[error("no exact value at z+1 = {0}: need a positive integer or half-integer >= 1.5")]
    OracleDomain(f64),

    /// The high-order reference set failed validation against exact values.
    #[error("reference set validation failed: max relative error {0}")]
    OracleValidation(f64),

    /// A persisted coefficient file is malformed or inconsistent.
    #[error("coefficient file invalid: {0}")]
    CoefficientFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
