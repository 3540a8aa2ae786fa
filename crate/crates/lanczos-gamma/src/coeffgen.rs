//! Coefficient generation for the Lanczos series with a complex free parameter.
//!
//! The series for Γ(z+1) terminates at non-negative integer arguments, so the
//! coefficients a_k(r) follow from the known values Γ(n+1) = n!: a_0 comes in
//! closed form from the z = 0 case and each further a_n from the nested
//! recursion over F_r(n), evaluated innermost-first so that rounding is
//! deterministic and reproducible.

use num_complex::Complex64;

use crate::dd::{self, Dd};
use crate::error::{Error, Result};

/// Largest factorial argument representable in f64.
pub const MAX_FACTORIAL_ARG: u32 = 170;

/// Cap on the number of series terms: cancellation in the recursion grows
/// with the term count and double precision degrades well before 40.
pub const MAX_TERMS: usize = 40;

/// The free parameter r = r_x + i r_y, restricted to Re(r) > -1/2 so that
/// z + r + 1/2 stays in the right half-plane at every generation point and
/// the principal-branch power is single-valued.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FreeParameter {
    r_x: f64,
    r_y: f64,
}

impl FreeParameter {
    pub fn new(r_x: f64, r_y: f64) -> Result<Self> {
        if !r_x.is_finite() || !r_y.is_finite() || r_x <= -0.5 {
            return Err(Error::ParameterDomain(r_x));
        }
        Ok(FreeParameter { r_x, r_y })
    }

    pub fn re(&self) -> f64 {
        self.r_x
    }

    pub fn im(&self) -> f64 {
        self.r_y
    }

    pub fn as_complex(&self) -> Complex64 {
        Complex64::new(self.r_x, self.r_y)
    }

    /// The parameter mirrored across the real axis.
    pub fn conj(&self) -> Self {
        FreeParameter { r_x: self.r_x, r_y: -self.r_y }
    }
}

/// An immutable, ordered set of Lanczos coefficients a_0(r) .. a_{N-1}(r).
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    r: FreeParameter,
    coefficients: Vec<Complex64>,
}

impl CoefficientSet {
    pub fn r(&self) -> FreeParameter {
        self.r
    }

    pub fn n_terms(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    /// Rebuild a set from parts that came from persistent storage.
    pub(crate) fn from_parts(r: FreeParameter, coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() || coefficients.len() > MAX_TERMS {
            return Err(Error::TermCount(coefficients.len()));
        }
        Ok(CoefficientSet { r, coefficients })
    }
}

/// n! as a floating value by iterated product.
pub fn factorial(n: u32) -> Result<f64> {
    if n > MAX_FACTORIAL_ARG {
        return Err(Error::FactorialRange(n));
    }
    let mut acc = 1.0;
    for i in 2..=n {
        acc *= f64::from(i);
    }
    Ok(acc)
}

/// F_r(n) = Γ(n+1) e^{n+r+1/2} / (√(2π) (n+r+1/2)^{n+1/2}), the value the
/// bracketed series must take at the integer generation point z = n.
pub fn f_r(n: u32, r: FreeParameter) -> Result<Complex64> {
    let fact = factorial(n)?;
    let w = Complex64::new(f64::from(n) + r.re() + 0.5, r.im());
    let power = w.powf(f64::from(n) + 0.5);
    Ok(fact * w.exp() / ((2.0 * std::f64::consts::PI).sqrt() * power))
}

/// a_0(r) = √(2e / (π (r + 1/2))) e^r with the principal square root.
pub fn a0(r: FreeParameter) -> Complex64 {
    let shifted = r.as_complex() + 0.5;
    let radicand = 2.0 * std::f64::consts::E / (std::f64::consts::PI * shifted);
    radicand.sqrt() * r.as_complex().exp()
}

/// Generate a_0 .. a_{n_terms-1} by the nested exact-interpolation recursion,
/// evaluated in the printed bracketing order: innermost difference first,
/// multiply by the rational factor, subtract the next coefficient.
pub fn generate(r: FreeParameter, n_terms: usize) -> Result<CoefficientSet> {
    if n_terms == 0 || n_terms > MAX_TERMS {
        return Err(Error::TermCount(n_terms));
    }
    let mut coefficients = Vec::with_capacity(n_terms);
    coefficients.push(a0(r));
    for n in 1..n_terms {
        let mut t = f_r(n as u32, r)? - coefficients[0] / 2.0;
        for j in 1..=n {
            t *= (n + j) as f64 / (n - j + 1) as f64;
            if j < n {
                t -= coefficients[j];
            }
        }
        coefficients.push(t);
    }
    Ok(CoefficientSet { r, coefficients })
}

/// Same recursion for a real parameter, run in double-double arithmetic.
///
/// The rational factors amplify mid-chain rounding by binomial-sized factors,
/// which caps plain f64 sets near 1e-11 relative accuracy. Reference sets
/// (15 terms, validated to 1e-12) are produced through this path instead.
pub fn generate_real_extended(r_x: f64, n_terms: usize) -> Result<CoefficientSet> {
    let r = FreeParameter::new(r_x, 0.0)?;
    if n_terms == 0 || n_terms > MAX_TERMS {
        return Err(Error::TermCount(n_terms));
    }
    let half = Dd::from_f64(0.5);
    let rd = Dd::from_f64(r_x);
    let sqrt_2pi = (Dd::from_f64(2.0) * dd::PI).sqrt();

    let f_r_dd = |n: usize| -> Dd {
        let mut fact = Dd::from_f64(1.0);
        for i in 2..=n {
            fact = fact * Dd::from_f64(i as f64);
        }
        let w = Dd::from_f64(n as f64) + rd + half;
        let power = w.powi(n as u32) * w.sqrt();
        fact * w.exp() / (sqrt_2pi * power)
    };

    let a0_dd = {
        let radicand = Dd::from_f64(2.0) * dd::E / (dd::PI * (rd + half));
        radicand.sqrt() * rd.exp()
    };

    let mut acc = vec![a0_dd];
    for n in 1..n_terms {
        let mut t = f_r_dd(n) - acc[0] * half;
        for j in 1..=n {
            t = t * Dd::from_f64((n + j) as f64) / Dd::from_f64((n - j + 1) as f64);
            if j < n {
                t = t - acc[j];
            }
        }
        acc.push(t);
    }
    let coefficients = acc.iter().map(|c| Complex64::new(c.to_f64(), 0.0)).collect();
    Ok(CoefficientSet { r, coefficients })
}
