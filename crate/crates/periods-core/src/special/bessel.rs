//! Modified Bessel functions at real argument: I₀ by its everywhere-
//! convergent series, K₀ and K₀′ by quadrature of the integral
//! representations over the multiplicative group.

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Real};
use crate::quad::{integrate_real, Endpoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BesselKind {
    I0,
    I0Prime,
    K0,
    K0Prime,
}

/// I₀, I₀′, K₀ or K₀′ at z > 0.
pub fn bessel(kind: BesselKind, z: &Real, digits: u32) -> Result<Complex> {
    if !(z.clone() > 0u32) {
        return Err(Error::domain("bessel needs z > 0"));
    }
    Ok(Complex::from_real(match kind {
        BesselKind::I0 => i0_series(z, digits, false),
        BesselKind::I0Prime => i0_series(z, digits, true),
        BesselKind::K0 => k0_quad(z, digits, false)?,
        BesselKind::K0Prime => k0_quad(z, digits, true)?,
    }))
}

/// I₀(z) = Σ (z/2)^(2n)/(n!)²; the derivative variant sums
/// I₀′(z) = Σ n·(z/2)^(2n−1)/(n!)².
fn i0_series(z: &Real, digits: u32, derivative: bool) -> Real {
    let bits = working_bits(digits);
    let half: Real = Real::with_val(bits, z) >> 1;
    let h2 = Real::with_val(bits, half.clone().square());
    let eps = pow10(-(digits as i64) - 12);
    let mut term = Real::with_val(bits, 1); // (z/2)^(2n)/(n!)² at n = 0
    let mut acc = if derivative {
        Real::new(bits)
    } else {
        term.clone()
    };
    for n in 1u32..100_000 {
        term = Real::with_val(bits, &term * &h2);
        term /= Real::with_val(bits, n).square();
        if derivative {
            // n·(z/2)^(2n−1)/(n!)² = term·n/(z/2)
            let t = Real::with_val(bits, &term * &Real::with_val(bits, n));
            acc += Real::with_val(bits, &t / &half);
        } else {
            acc += &term;
        }
        if term.clone().abs() < eps {
            break;
        }
    }
    acc
}

/// K₀(z) = (1/2)∫₀^∞ e^(−(z/2)(x+1/x)) dx/x; differentiating under the
/// integral sign gives K₀′(z) = −(1/2)∫₀^∞ e^(−(z/2)(x+1/x)) dx.
fn k0_quad(z: &Real, digits: u32, derivative: bool) -> Result<Real> {
    let bits = working_bits(digits);
    let half_z: Real = Real::with_val(bits, z) >> 1;
    let v = integrate_real(
        |n| {
            let xinv = Real::with_val(bits, n.x.clone().recip());
            let s = Real::with_val(bits, &n.x + &xinv);
            let e = (-Real::with_val(bits, &s * &half_z)).exp();
            if derivative {
                e
            } else {
                Real::with_val(bits, &e * &xinv)
            }
        },
        Endpoint::Finite(Real::new(bits)),
        Endpoint::PosInf,
        digits,
    )?;
    let signed = if derivative { -v } else { v };
    Ok(signed >> 1)
}
