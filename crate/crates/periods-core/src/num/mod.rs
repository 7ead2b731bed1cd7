//! Arbitrary-precision numeric foundation.
//!
//! Precision is always requested in *decimal digits*; every operation that
//! takes a `digits` argument computes internally with [`GUARD_DIGITS`] extra
//! digits and MPFR correct rounding at that working precision. Results are
//! heuristic rather than ball-rigorous: the acceptance checks compare against
//! closed forms, so guard digits plus convergence doubling suffice.

pub mod complex;

pub use complex::Complex;

/// Arbitrary-precision real number (MPFR-backed).
pub type Real = rug::Float;

/// Exact rational number (GMP-backed).
pub type Rational = rug::Rational;

/// Arbitrary-size integer (GMP-backed).
pub type Integer = rug::Integer;

/// Guard digits added on top of every requested precision.
pub const GUARD_DIGITS: u32 = 15;

/// Minimum requested precision in decimal digits.
pub const MIN_DIGITS: u32 = 10;

/// Binary precision needed to represent `digits` decimal digits, with a
/// small safety margin.
pub fn bits_for(digits: u32) -> u32 {
    // log2(10) = 3.3219...
    (digits as f64 * 3.321929).ceil() as u32 + 8
}

/// Working binary precision for a `digits`-digit request (guard included).
pub fn working_bits(digits: u32) -> u32 {
    bits_for(digits + GUARD_DIGITS)
}

/// π at the working precision for `digits`.
pub fn pi(digits: u32) -> Real {
    Real::with_val(working_bits(digits), rug::float::Constant::Pi)
}

/// A positive power of ten, `10^exp`, at modest precision (used for
/// tolerances and convergence thresholds).
pub fn pow10(exp: i64) -> Real {
    Real::with_val(64, 10).pow_i64(exp)
}

/// Convenience constructors at a given working precision.
pub fn real_from_rational(q: &Rational, bits: u32) -> Real {
    Real::with_val(bits, q)
}

pub trait RealExt {
    fn pow_i64(self, e: i64) -> Real;
}

impl RealExt for Real {
    fn pow_i64(self, e: i64) -> Real {
        use rug::ops::Pow;
        self.pow(e)
    }
}

/// Format a real to `digits` significant decimal digits (scientific form
/// normalized by MPFR; exact zero prints as `0`).
pub fn real_to_decimal(x: &Real, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".to_string()
        } else if x.is_sign_negative() {
            "-inf".to_string()
        } else {
            "inf".to_string()
        };
    }
    let (sign, mantissa, exp) = x.to_sign_string_exp(10, Some(digits));
    let exp = exp.expect("finite nonzero value has an exponent");
    let s = if sign { "-" } else { "" };
    // mantissa "d₁d₂…" with exponent such that value = 0.d₁d₂… · 10^exp
    let mut m = mantissa;
    while m.len() > 1 && m.ends_with('0') {
        m.pop();
    }
    let (head, tail) = m.split_at(1);
    if tail.is_empty() {
        format!("{s}{head}e{}", exp - 1)
    } else {
        format!("{s}{head}.{tail}e{}", exp - 1)
    }
}
