//! Sign + log-magnitude scalars.
//!
//! Combinatorial factors like sqrt([2s]_q!) grow like q^(s^2) and leave f64
//! around s ~ 15 for q = 2. Accumulating in the log domain and exponentiating
//! only final ratios keeps the Fock-expansion coefficients (all of magnitude
//! <= 1) representable at any truncation order.

use std::ops::{Add, Div, Mul, Neg, Sub};

/// A real number stored as `sign * exp(ln_mag)`.
///
/// Zero is `sign == 0` with `ln_mag == -inf`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogNum {
    sign: i8,
    ln_mag: f64,
}

impl LogNum {
    pub const ZERO: LogNum = LogNum {
        sign: 0,
        ln_mag: f64::NEG_INFINITY,
    };
    pub const ONE: LogNum = LogNum {
        sign: 1,
        ln_mag: 0.0,
    };

    pub fn new(sign: i8, ln_mag: f64) -> Self {
        if sign == 0 || ln_mag == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        LogNum { sign, ln_mag }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            LogNum {
                sign: if x > 0.0 { 1 } else { -1 },
                ln_mag: x.abs().ln(),
            }
        }
    }

    /// Build from a log-magnitude with positive sign.
    pub fn from_ln(ln_mag: f64) -> Self {
        Self::new(1, ln_mag)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn ln_mag(&self) -> f64 {
        self.ln_mag
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Convert back to f64. Magnitudes beyond f64 saturate to +/-inf,
    /// which callers treat as overflow.
    pub fn to_f64(self) -> f64 {
        self.sign as f64 * self.ln_mag.exp()
    }

    pub fn abs(self) -> Self {
        Self::new(self.sign.abs(), self.ln_mag)
    }

    /// Square root; requires a non-negative value.
    pub fn sqrt(self) -> Self {
        debug_assert!(self.sign >= 0, "sqrt of negative LogNum");
        Self::new(self.sign, 0.5 * self.ln_mag)
    }

    pub fn powi(self, k: i32) -> Self {
        if self.is_zero() {
            return if k == 0 { Self::ONE } else { Self::ZERO };
        }
        let sign = if k % 2 == 0 { 1 } else { self.sign };
        Self::new(sign, self.ln_mag * k as f64)
    }

    /// Compare absolute magnitudes.
    pub fn abs_gt(&self, other: &LogNum) -> bool {
        self.ln_mag > other.ln_mag
    }
}

impl Mul for LogNum {
    type Output = LogNum;
    fn mul(self, rhs: LogNum) -> LogNum {
        LogNum::new(self.sign * rhs.sign, self.ln_mag + rhs.ln_mag)
    }
}

impl Div for LogNum {
    type Output = LogNum;
    fn div(self, rhs: LogNum) -> LogNum {
        debug_assert!(!rhs.is_zero(), "division by zero LogNum");
        LogNum::new(self.sign * rhs.sign, self.ln_mag - rhs.ln_mag)
    }
}

impl Neg for LogNum {
    type Output = LogNum;
    fn neg(self) -> LogNum {
        LogNum::new(-self.sign, self.ln_mag)
    }
}

impl Add for LogNum {
    type Output = LogNum;
    fn add(self, rhs: LogNum) -> LogNum {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        // Anchor on the larger magnitude so the correction stays in (-1, 1].
        let (big, small) = if self.ln_mag >= rhs.ln_mag {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let d = small.ln_mag - big.ln_mag; // <= 0
        if big.sign == small.sign {
            LogNum::new(big.sign, big.ln_mag + d.exp().ln_1p())
        } else {
            // |big| - |small|; exact cancellation gives zero.
            let m = -d.exp_m1(); // 1 - e^d in (0, 1]
            if m == 0.0 {
                LogNum::ZERO
            } else {
                LogNum::new(big.sign, big.ln_mag + m.ln())
            }
        }
    }
}

impl Sub for LogNum {
    type Output = LogNum;
    fn sub(self, rhs: LogNum) -> LogNum {
        self + (-rhs)
    }
}
