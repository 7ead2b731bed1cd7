//! Euler's constant two ways: the Brent–McMillan Bessel-ratio acceleration
//! of the defining limit, and the double-integral representation
//! ∫₀¹∫₀¹ e^(−xy) − ∫₁^∞∫₁^∞ e^(−xy) evaluated as iterated quadrature.

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Real};
use crate::quad::{integrate_real, Endpoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EulerGammaMethod {
    /// Brent–McMillan: γ = S₀(2n)/I₀(2n) − ln n + O(e^(−4n)).
    Standard,
    /// The exponential-period double integral, iterated 1D quadrature.
    DoubleIntegral,
}

/// Euler's constant γ; precision capped at 30 digits (the double-integral
/// route is quadratically expensive and the standard route is only needed
/// as its counterpart).
pub fn euler_gamma(digits: u32, method: EulerGammaMethod) -> Result<Complex> {
    if digits > 30 {
        return Err(Error::domain("euler_gamma is capped at 30 digits"));
    }
    Ok(Complex::from_real(match method {
        EulerGammaMethod::Standard => brent_mcmillan(digits),
        EulerGammaMethod::DoubleIntegral => double_integral(digits)?,
    }))
}

fn brent_mcmillan(digits: u32) -> Real {
    let bits = working_bits(digits + 10);
    // error O(e^(−4n)): n = ceil((digits+12)·ln10/4)
    let n = ((digits as f64 + 12.0) * std::f64::consts::LN_10 / 4.0).ceil() as u32 + 1;
    let x = Real::with_val(bits, 2 * n); // argument of I₀, S₀
    let x2 = Real::with_val(bits, Real::with_val(bits, &x >> 1).square()); // (x/2)² = n²
    let mut term = Real::with_val(bits, 1); // (x/2)^{2k}/(k!)²
    let mut i0 = term.clone();
    let mut s0 = Real::new(bits);
    let mut harmonic = Real::new(bits);
    let eps = pow10(-(digits as i64) - 18);
    for k in 1u32..200_000 {
        term = Real::with_val(bits, &term * &x2);
        term /= Real::with_val(bits, k).square();
        harmonic += Real::with_val(bits, Real::with_val(bits, k).recip());
        i0 += &term;
        s0 += Real::with_val(bits, &term * &harmonic);
        // terms peak near k = x; only stop once they decay again
        if k > 2 * n && Real::with_val(bits, &term / &i0) < eps {
            break;
        }
    }
    let ratio = Real::with_val(bits, &s0 / &i0);
    ratio - Real::with_val(bits, n).ln()
}

fn double_integral(digits: u32) -> Result<Real> {
    let bits = working_bits(digits);
    let inner_digits = digits + 3;
    // ∫₀¹∫₀¹ e^(−xy) dy dx
    let unit = integrate_real(
        |nx| {
            let x = nx.x.clone();
            integrate_real(
                move |ny| (-Real::with_val(bits, &x * &ny.x)).exp(),
                Endpoint::Finite(Real::new(bits)),
                Endpoint::Finite(Real::with_val(bits, 1)),
                inner_digits,
            )
            .unwrap_or_else(|_| Real::with_val(bits, rug::float::Special::Nan))
        },
        Endpoint::Finite(Real::new(bits)),
        Endpoint::Finite(Real::with_val(bits, 1)),
        digits,
    )?;
    // ∫₁^∞∫₁^∞ e^(−xy) dy dx
    let tail = integrate_real(
        |nx| {
            let x = nx.x.clone();
            integrate_real(
                move |ny| (-Real::with_val(bits, &x * &ny.x)).exp(),
                Endpoint::Finite(Real::with_val(bits, 1)),
                Endpoint::PosInf,
                inner_digits,
            )
            .unwrap_or_else(|_| Real::with_val(bits, rug::float::Special::Nan))
        },
        Endpoint::Finite(Real::with_val(bits, 1)),
        Endpoint::PosInf,
        digits,
    )?;
    Ok(Real::with_val(bits, &unit - &tail))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_frozen_value() {
        // γ = 0.5772156649015328606065121…, frozen from the accelerated
        // limit and MPFR's independent constant
        let digits = 25;
        let bits = working_bits(digits);
        let g = euler_gamma(digits, EulerGammaMethod::Standard).unwrap();
        let frozen = Real::with_val(
            bits,
            Real::parse("0.5772156649015328606065120900824024310421593359").unwrap(),
        );
        assert!(Real::with_val(bits, &g.re - &frozen).abs() < pow10(-(digits as i64)));
        let mpfr = Real::with_val(bits, rug::float::Constant::Euler);
        assert!(Real::with_val(bits, &g.re - &mpfr).abs() < pow10(-(digits as i64)));
    }

    #[test]
    fn double_integral_agrees() {
        let digits = 12;
        let bits = working_bits(digits);
        let a = euler_gamma(digits, EulerGammaMethod::DoubleIntegral).unwrap();
        let b = euler_gamma(digits, EulerGammaMethod::Standard).unwrap();
        let d = Real::with_val(bits, &a.re - &b.re).abs();
        assert!(d < pow10(-(digits as i64) + 3), "defect {:.3e}", d.to_f64());
    }

    #[test]
    fn gamma_derivative_route() {
        // γ = −Γ′(1) by central difference of gamma_fn at prec 15
        let digits = 15;
        let bits = working_bits(digits);
        let h = pow10(-4);
        let up = Complex::from_real(Real::with_val(bits, 1u32) + h.clone());
        let dn = Complex::from_real(Real::with_val(bits, 1u32) - h.clone());
        let gu = crate::special::gamma_fn(&up, digits).unwrap();
        let gd = crate::special::gamma_fn(&dn, digits).unwrap();
        let deriv = Real::with_val(bits, &gu.re - &gd.re)
            / Real::with_val(bits, &h * &Real::with_val(bits, 2));
        let gamma_est = -Real::with_val(bits, deriv);
        let target = Real::with_val(bits, rug::float::Constant::Euler);
        assert!(Real::with_val(bits, &gamma_est - &target).abs() < pow10(-8));
    }

    #[test]
    fn precision_cap() {
        assert!(euler_gamma(40, EulerGammaMethod::Standard).is_err());
    }
}
