//! Arithmetic-geometric mean iteration.

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Real};

/// Common limit of aₙ₊₁ = (aₙ+bₙ)/2, bₙ₊₁ = √(aₙbₙ) for positive reals.
/// Quadratically convergent; accurate to 10^(-digits).
pub fn agm(a: &Real, b: &Real, digits: u32) -> Result<Real> {
    if !(a.is_finite() && b.is_finite()) || *a <= 0u32 || *b <= 0u32 {
        return Err(Error::domain("agm needs positive real arguments"));
    }
    let bits = working_bits(digits);
    let mut x = Real::with_val(bits, a);
    let mut y = Real::with_val(bits, b);
    let eps = pow10(-(digits as i64) - 10);
    for _ in 0..(64 + digits) {
        let diff = Real::with_val(bits, &x - &y).abs();
        let scale = Real::with_val(bits, x.clone().abs());
        if diff <= Real::with_val(bits, &eps * &scale) {
            break;
        }
        let am = Real::with_val(bits, &x + &y) >> 1;
        let gm = Real::with_val(bits, &x * &y).sqrt();
        x = am;
        y = gm;
    }
    Ok(x)
}
