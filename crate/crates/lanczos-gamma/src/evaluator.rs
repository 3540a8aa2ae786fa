//! Series evaluation of Γ(z+1) and Γ(z) from a coefficient set.
//!
//! The right half-plane goes through the series directly; Re(z) < 1/2 is
//! reached with the Euler reflection formula Γ(z)Γ(1-z) = π/sin(πz).

use num_complex::Complex64;

use crate::coeffgen::CoefficientSet;
use crate::error::{Error, Result};

/// Proximity to a pole (or a rational-factor denominator zero) below which
/// evaluation refuses to proceed: closer than this, sin(πz) carries no digits.
const POLE_TOL: f64 = 1e-12;

/// One term of the bracketed series: the index and the rational factor that
/// multiplies a_k. The k = 0 factor is the constant 1/2 applied to a_0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSumTerm {
    pub k: usize,
    pub rational_factor: Complex64,
}

/// Iterator over the rational factors, built incrementally:
/// factor_k = factor_{k-1} * (z - k + 1) / (z + k).
struct RationalFactors {
    z: Complex64,
    k: usize,
    factor: Complex64,
}

impl RationalFactors {
    fn new(z: Complex64) -> Self {
        RationalFactors { z, k: 0, factor: Complex64::new(0.5, 0.0) }
    }
}

impl Iterator for RationalFactors {
    type Item = Result<Complex64>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.k == 0 {
            self.k = 1;
            return Some(Ok(self.factor));
        }
        let k = self.k;
        let denom = self.z + k as f64;
        if denom.norm() < POLE_TOL {
            return Some(Err(Error::SeriesPole(k)));
        }
        self.factor = if k == 1 {
            // leave the 1/2 constant behind; factor_1 = z / (z + 1)
            self.z / denom
        } else {
            self.factor * (self.z - (k - 1) as f64) / denom
        };
        self.k += 1;
        Some(Ok(self.factor))
    }
}

/// The bracketed sum a_0/2 + Σ a_k Π (z-j)/(z+j+1).
pub fn series_sum(z: Complex64, coeffs: &CoefficientSet) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for (factor, a_k) in RationalFactors::new(z).zip(coeffs.coefficients()) {
        sum += factor? * a_k;
    }
    Ok(sum)
}

/// The per-term rational factors, for termination checks and diagnostics.
pub fn partial_sum_terms(z: Complex64, coeffs: &CoefficientSet) -> Result<Vec<PartialSumTerm>> {
    RationalFactors::new(z)
        .take(coeffs.n_terms())
        .enumerate()
        .map(|(k, factor)| Ok(PartialSumTerm { k, rational_factor: factor? }))
        .collect()
}

/// Γ(z+1) = √(2π) (z+r+1/2)^{z+1/2} e^{-(z+r+1/2)} * series_sum(z).
pub fn gamma_zp1(z: Complex64, coeffs: &CoefficientSet) -> Result<Complex64> {
    let w = z + coeffs.r().as_complex() + 0.5;
    let prefactor = (2.0 * std::f64::consts::PI).sqrt() * w.powc(z + 0.5) * (-w).exp();
    Ok(prefactor * series_sum(z, coeffs)?)
}

fn nearest_pole(z: Complex64) -> Option<i64> {
    let m = z.re.round();
    if m <= 0.0 && (z - m).norm() < POLE_TOL {
        Some(m as i64)
    } else {
        None
    }
}

/// Γ(z) anywhere except the simple poles at the non-positive integers.
///
/// Re(z) >= 1/2 goes through the series, Re(z) < 1/2 through the reflection
/// formula. Within the strip 1/2 <= Re(z) < 3/2 the series argument z - 1
/// would sit at the edge of its comfortable region (the truncation error of
/// a 10-term set at z = -1/2 is ~8e-6 even in exact arithmetic), so one step
/// of the functional equation Γ(z) = Γ(z+1)/z keeps the argument at
/// Re >= 1/2 instead.
pub fn gamma(z: Complex64, coeffs: &CoefficientSet) -> Result<Complex64> {
    if let Some(m) = nearest_pole(z) {
        return Err(Error::GammaPole(m));
    }
    if z.re >= 1.5 {
        gamma_zp1(z - 1.0, coeffs)
    } else if z.re >= 0.5 {
        Ok(gamma_zp1(z, coeffs)? / z)
    } else {
        let pi = std::f64::consts::PI;
        let sin_piz = (pi * z).sin();
        if sin_piz.norm() == 0.0 {
            return Err(Error::GammaPole(z.re.round() as i64));
        }
        // 1 - z lands in Re >= 1/2, so the recursion bottoms out immediately
        Ok(pi / (sin_piz * gamma(1.0 - z, coeffs)?))
    }
}

/// log |Γ(z)| from the log of the prefactor plus log of the series modulus,
/// never forming the full product; safe where Γ itself would overflow.
/// Routes the argument exactly like [`gamma`].
pub fn log_abs_gamma(z: Complex64, coeffs: &CoefficientSet) -> Result<f64> {
    if let Some(m) = nearest_pole(z) {
        return Err(Error::GammaPole(m));
    }
    let pi = std::f64::consts::PI;
    let log_abs_gamma_zp1 = |arg: Complex64| -> Result<f64> {
        let w = arg + coeffs.r().as_complex() + 0.5;
        let log_prefactor = 0.5 * (2.0 * pi).ln() + ((arg + 0.5) * w.ln()).re - w.re;
        Ok(log_prefactor + series_sum(arg, coeffs)?.norm().ln())
    };
    if z.re >= 1.5 {
        log_abs_gamma_zp1(z - 1.0)
    } else if z.re >= 0.5 {
        Ok(log_abs_gamma_zp1(z)? - z.norm().ln())
    } else {
        Ok(pi.ln() - log_abs_sin(pi * z) - log_abs_gamma(1.0 - z, coeffs)?)
    }
}

/// ln |sin w| without overflowing for large |Im w|.
fn log_abs_sin(w: Complex64) -> f64 {
    if w.im.abs() > 20.0 {
        // |sin w| = e^{|Im w|} (1 + O(e^{-2|Im w|})) / 2
        w.im.abs() - std::f64::consts::LN_2
    } else {
        w.sin().norm().ln()
    }
}
