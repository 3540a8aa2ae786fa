//! Double-double arithmetic for the coefficient recursion.
//!
//! The exact-interpolation recursion multiplies intermediate differences by
//! binomial-sized rational factors, so plain f64 rounding injected mid-chain
//! is amplified to ~1e-11 in the evaluated series by n = 15. The reference
//! coefficient sets need better than 1e-12, which a two-f64 representation
//! (roughly 32 significant digits) restores. Only the real-parameter path
//! uses this module.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// An unevaluated sum of two f64, |lo| <= ulp(hi)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

pub(crate) const PI: Dd = Dd { hi: 3.141592653589793, lo: 1.2246467991473532e-16 };
pub(crate) const E: Dd = Dd { hi: 2.718281828459045, lo: 1.4456468917292502e-16 };
const LN2: Dd = Dd { hi: 0.6931471805599453, lo: 2.3190468138462996e-17 };

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let v = s - a;
    (s, (a - (s - v)) + (b - v))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn sqrt(self) -> Self {
        let s = self.hi.sqrt();
        if s == 0.0 {
            return Dd::from_f64(0.0);
        }
        // one Newton correction on the f64 seed
        let e = (self - Dd::from_f64(s) * Dd::from_f64(s)).hi / (2.0 * s);
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    /// exp(x) by range reduction x = k ln2 + t and a Taylor sum in t.
    pub fn exp(self) -> Self {
        let k = (self.hi / LN2.hi).round();
        let t = self - LN2 * Dd::from_f64(k);
        let mut sum = Dd::from_f64(1.0) + t;
        let mut term = t;
        for i in 2..40 {
            term = term * t / Dd::from_f64(f64::from(i));
            sum = sum + term;
            if term.hi.abs() < 1e-35 {
                break;
            }
        }
        let scale = 2f64.powi(k as i32);
        Dd { hi: sum.hi * scale, lo: sum.lo * scale }
    }

    /// ln(x) for x > 0: f64 seed refined by one Newton step on exp.
    #[cfg(test)]
    pub fn ln(self) -> Self {
        let y0 = self.hi.ln();
        let r = self * Dd::from_f64(-y0).exp() - Dd::from_f64(1.0);
        // ln(1+r) ~ r - r^2/2 is ample: |r| ~ 1e-16
        Dd::from_f64(y0) + r * (Dd::from_f64(1.0) - r * Dd::from_f64(0.5))
    }

    /// Integer power by repeated multiplication (exponents stay below 40).
    pub fn powi(self, n: u32) -> Self {
        let mut acc = Dd::from_f64(1.0);
        for _ in 0..n {
            acc = acc * self;
        }
        acc
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, o: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, o.hi);
        let (t1, t2) = two_sum(self.lo, o.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, o: Dd) -> Dd {
        self + (-o)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, o: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, o.hi);
        let (hi, lo) = quick_two_sum(p1, p2 + (self.hi * o.lo + self.lo * o.hi));
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self - o * Dd::from_f64(q1);
        let q2 = r.hi / o.hi;
        let r = r - o * Dd::from_f64(q2);
        let q3 = r.hi / o.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + Dd::from_f64(q3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Dd, exact_hi: f64, exact_lo: f64) -> f64 {
        let d = a - Dd { hi: exact_hi, lo: exact_lo };
        (d.hi.abs() + d.lo.abs()) / exact_hi.abs()
    }

    #[test]
    fn add_mul_residual() {
        // (1/3 in dd) * 3 - 1 should vanish to ~1e-32
        let third = Dd::from_f64(1.0) / Dd::from_f64(3.0);
        let r = third * Dd::from_f64(3.0) - Dd::from_f64(1.0);
        assert!(r.to_f64().abs() < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        for x in [2.0, 10.5, 123.456, 1e-8] {
            let s = Dd::from_f64(x).sqrt();
            let r = s * s - Dd::from_f64(x);
            assert!((r.to_f64() / x).abs() < 1e-30, "x = {x}");
        }
    }

    #[test]
    fn exp_ln_roundtrip() {
        for x in [0.5, 1.0, 3.25, 10.0, 25.5, -4.5] {
            let y = Dd::from_f64(x).exp();
            let back = y.ln();
            assert!((back.to_f64() - x).abs() < 1e-29, "x = {x}");
        }
    }

    #[test]
    fn exp_of_one_is_e() {
        let y = Dd::from_f64(1.0).exp();
        assert!(rel(y, E.hi, E.lo) < 1e-30);
    }

    #[test]
    fn ln_of_two() {
        let y = Dd::from_f64(2.0).ln();
        assert!((y.hi - std::f64::consts::LN_2).abs() < 1e-16);
        assert!(rel(y, 0.6931471805599453, 2.3190468138462996e-17) < 1e-30);
    }

    #[test]
    fn division_long_chain() {
        // pi/e * e / pi == 1
        let r = PI / E * E / PI - Dd::from_f64(1.0);
        assert!(r.to_f64().abs() < 1e-30);
    }

    #[test]
    fn powi_matches_repeated_mul() {
        let w = Dd::from_f64(10.5);
        let p = w.powi(14);
        assert!((p.to_f64() / 10.5f64.powi(14) - 1.0).abs() < 1e-13);
    }
}
