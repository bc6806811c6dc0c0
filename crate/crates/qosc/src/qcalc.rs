//! q-deformed arithmetic and the basic special functions built on it:
//! q-numbers, q-factorials and double factorials, q-Pochhammer symbols,
//! the q-exponential series, the q-derivative, and the two basic
//! hypergeometric sums used by the eigenstate construction (1phi0 and a
//! terminating 2phi1, from which little q-Jacobi polynomials follow).
//!
//! Everything here is a pure function of its inputs. Factors of the form
//! 1 - a*q^k are evaluated through `ln_1p`/`exp_m1` whenever the product is
//! close to 1, so all functions stay accurate through the classical limit
//! q -> 1.

use crate::error::{Error, Result};

/// ln(q) computed as ln_1p(q - 1); exact relative accuracy for q near 1.
pub(crate) fn ln_q(q: f64) -> f64 {
    (q - 1.0).ln_1p()
}

pub(crate) fn powi64(q: f64, n: i64) -> f64 {
    if n.unsigned_abs() <= i32::MAX as u64 {
        q.powi(n as i32)
    } else {
        (n as f64 * q.ln()).exp()
    }
}

/// 1 - a * base^k without cancellation, for a > 0 treated in log form when
/// the product lands near 1.
pub(crate) fn one_minus_prod_pow(a: f64, base: f64, k: i64) -> f64 {
    if a <= 0.0 {
        return 1.0 - a * powi64(base, k);
    }
    let p = a * powi64(base, k);
    if (0.5..2.0).contains(&p) {
        -((a - 1.0).ln_1p() + k as f64 * ln_q(base)).exp_m1()
    } else {
        1.0 - p
    }
}

/// 1 - q^m, cancellation-safe.
pub(crate) fn one_minus_q_pow(q: f64, m: i64) -> f64 {
    one_minus_prod_pow(1.0, q, m)
}

fn q_number_raw(n: i64, q: f64) -> f64 {
    if q == 1.0 {
        return n as f64;
    }
    if (q - 1.0).abs() < 1e-8 {
        // (q^n - 1)/(q - 1) via exp_m1: exact through the classical limit
        (n as f64 * ln_q(q)).exp_m1() / (q - 1.0)
    } else {
        (powi64(q, n) - 1.0) / (q - 1.0)
    }
}

/// The q-number [n]_q = (q^n - 1)/(q - 1), with [n]_1 = n exactly.
///
/// Negative n is the formal extension [n]_q = (q^n - 1)/(q - 1) used only by
/// the eigenstate coefficient formula.
pub fn q_number(n: i64, q: f64) -> Result<f64> {
    let v = q_number_raw(n, q);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("q_number"))
    }
}

/// ln [n]_q for n >= 1 and q >= 1; returns -inf at n = 0.
pub(crate) fn ln_q_number(n: i64, q: f64) -> f64 {
    debug_assert!(n >= 0 && q >= 1.0);
    if q == 1.0 {
        return (n as f64).ln();
    }
    let l = n as f64 * ln_q(q);
    // ln((q^n - 1)/(q - 1)) = n ln q + ln(1 - q^-n) - ln(q - 1)
    l + (-(-l).exp()).ln_1p() - (q - 1.0).ln()
}

/// [n]_q! = [1]_q [2]_q ... [n]_q, with [0]_q! = 1.
pub fn q_factorial(n: u32, q: f64) -> Result<f64> {
    let mut p = 1.0;
    for j in 1..=n as i64 {
        p *= q_number_raw(j, q);
    }
    if p.is_finite() {
        Ok(p)
    } else {
        Err(Error::Overflow("q_factorial"))
    }
}

/// ln [n]_q!, always finite for representable inputs.
pub fn ln_q_factorial(n: u32, q: f64) -> f64 {
    (1..=n as i64).map(|j| ln_q_number(j, q)).sum()
}

/// q-double factorial: [n]_q [n-2]_q ... down to [2]_q or [1]_q, with the
/// empty-product convention at n = 0 and n = -1.
pub fn q_double_factorial(n: i64, q: f64) -> Result<f64> {
    if n < -1 {
        return Err(Error::Domain(format!(
            "q_double_factorial requires n >= -1, got {n}"
        )));
    }
    let mut p = 1.0;
    let mut j = n;
    while j >= 1 {
        p *= q_number_raw(j, q);
        j -= 2;
    }
    if p.is_finite() {
        Ok(p)
    } else {
        Err(Error::Overflow("q_double_factorial"))
    }
}

/// ln of the q-double factorial.
pub fn ln_q_double_factorial(n: i64, q: f64) -> f64 {
    debug_assert!(n >= -1);
    let mut s = 0.0;
    let mut j = n;
    while j >= 1 {
        s += ln_q_number(j, q);
        j -= 2;
    }
    s
}

/// q-Pochhammer symbol (a; q)_n = (1 - a)(1 - aq)...(1 - aq^(n-1)).
///
/// Overflow saturates to +/-inf, which callers surface as errors where needed.
pub fn q_pochhammer(a: f64, q: f64, n: u32) -> f64 {
    let mut p = 1.0;
    for j in 0..n as i64 {
        p *= one_minus_prod_pow(a, q, j);
    }
    p
}

/// Truncation policy for the infinite series (E_q and 1phi0).
#[derive(Clone, Copy, Debug)]
pub struct SeriesControl {
    /// Absolute bound on the neglected tail.
    pub tol: f64,
    /// Hard cap on the number of terms.
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(tol: f64, max_terms: usize) -> Result<Self> {
        if !(tol > 0.0) || max_terms == 0 {
            return Err(Error::Domain(format!(
                "series control requires tol > 0 and max_terms >= 1, got tol {tol:e}, max_terms {max_terms}"
            )));
        }
        Ok(SeriesControl { tol, max_terms })
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        SeriesControl {
            tol: 1e-14,
            max_terms: 10_000,
        }
    }
}

/// Coefficient sequence {a^n / [n]_q!} of the q-exponential E_q(a x),
/// truncated once the next coefficient contributes less than `ctl.tol`
/// at the evaluation radius `radius` in |x|.
pub fn q_exp_coefficients(a: f64, q: f64, radius: f64, ctl: &SeriesControl) -> Result<Vec<f64>> {
    if q < 1.0 {
        return Err(Error::Domain(format!(
            "q_exp_coefficients requires q >= 1, got {q}"
        )));
    }
    let mut coeffs = vec![1.0];
    if a == 0.0 {
        return Ok(coeffs);
    }
    let mut c = 1.0;
    let mut r_pow = radius.abs();
    for n in 1..=ctl.max_terms as i64 {
        c *= a / q_number_raw(n, q);
        if !c.is_finite() {
            return Err(Error::Overflow("q_exp_coefficients"));
        }
        if c.abs() * r_pow < ctl.tol {
            return Ok(coeffs);
        }
        coeffs.push(c);
        r_pow *= radius.abs();
    }
    Err(Error::NonConvergence {
        tol: ctl.tol,
        max_terms: ctl.max_terms,
    })
}

/// q-derivative of a dense coefficient sequence (index = exponent):
/// the coefficient of x^(m-1) in the output is [m]_q times the input
/// coefficient of x^m.
pub fn q_derivative(coeffs: &[f64], q: f64) -> Vec<f64> {
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    (1..coeffs.len())
        .map(|m| q_number_raw(m as i64, q) * coeffs[m])
        .collect()
}

/// 1phi0(a; --; base, z) = sum_k (a; base)_k / (base; base)_k z^k.
///
/// The term ratio tends to a*z/base, so convergence requires |a z| < base.
/// At the formal point a = base = 1 the limit is taken along a^2 = base (the
/// only family this crate uses), giving the classical binomial series
/// sum (2k-1)!!/(2k)!! z^k = (1 - z)^(-1/2).
pub fn one_phi_zero(a: f64, base: f64, z: f64, ctl: &SeriesControl) -> Result<f64> {
    if z == 0.0 {
        return Ok(1.0);
    }
    let formal_classical = base == 1.0 && a == 1.0;
    if base == 1.0 && a != 1.0 {
        return Err(Error::Domain(
            "one_phi_zero at base 1 is defined only for a = 1 (formal classical limit)".into(),
        ));
    }
    let ratio_inf = (a * z / base).abs();
    if ratio_inf >= 1.0 {
        return Err(Error::Domain(format!(
            "one_phi_zero diverges: |a z / base| = {ratio_inf} >= 1"
        )));
    }
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..ctl.max_terms as i64 {
        let factor = if formal_classical {
            (2 * k + 1) as f64 / (2 * k + 2) as f64
        } else {
            one_minus_prod_pow(a, base, k) / one_minus_q_pow(base, k + 1)
        };
        term *= factor * z;
        if term == 0.0 {
            return Ok(sum);
        }
        sum += term;
        if !sum.is_finite() {
            return Err(Error::Overflow("one_phi_zero"));
        }
        // geometric tail bound once the asymptotic ratio applies
        if term.abs() / (1.0 - ratio_inf) < ctl.tol {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        tol: ctl.tol,
        max_terms: ctl.max_terms,
    })
}

/// Terminating 2phi1(base^(-n), a2; b1; base, z): the exact sum of n + 1 terms.
pub fn two_phi_one_terminating(n: u32, a2: f64, b1: f64, base: f64, z: f64) -> Result<f64> {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 0..n as i64 {
        let denom = one_minus_q_pow(base, k + 1) * one_minus_prod_pow(b1, base, k);
        if denom == 0.0 || !denom.is_finite() {
            return Err(Error::BadSeriesParameter(format!(
                "2phi1 denominator vanished at term {k} (b1 = {b1}, base = {base})"
            )));
        }
        let numer = one_minus_q_pow(base, k - n as i64) * one_minus_prod_pow(a2, base, k);
        term *= numer / denom * z;
        sum += term;
    }
    if sum.is_finite() {
        Ok(sum)
    } else {
        Err(Error::Overflow("two_phi_one_terminating"))
    }
}

/// Little q-Jacobi polynomial p_n(x; a, b; base) =
/// 2phi1(base^(-n), a b base^(n+1); a base; base, base x).
pub fn little_q_jacobi(n: u32, x: f64, a: f64, b: f64, base: f64) -> Result<f64> {
    two_phi_one_terminating(n, a * b * powi64(base, n as i64 + 1), a * base, base, base * x)
}
