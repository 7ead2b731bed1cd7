//! Γ and B by quadrature on their defining integrals plus the functional
//! equation Γ(s+1) = sΓ(s); constants stay auditable against the integral
//! representations rather than a rational approximation scheme.

use crate::error::{Error, Result};
use crate::num::{working_bits, Complex, Real};
use crate::quad::{integrate, Endpoint};

/// Γ(s) for complex s away from the poles 0, −1, −2, …, to relative
/// accuracy 10^(5−digits).
pub fn gamma_fn(s: &Complex, digits: u32) -> Result<Complex> {
    let bits = working_bits(digits);
    let s = Complex::from_parts(Real::with_val(bits, &s.re), Real::with_val(bits, &s.im));
    if s.im.is_zero() && s.re.clone().fract().is_zero() && !(s.re > 0u32) {
        return Err(Error::domain("gamma pole at nonpositive integer"));
    }
    // shift into the strip Re ∈ [1,2] where the defining integral is tame
    let mut shifted = s.clone();
    let mut prefactor = Complex::with_val(bits, 1);
    let mut divisor = Complex::with_val(bits, 1);
    while shifted.re < 1u32 {
        // Γ(s) = Γ(s+1)/s
        divisor = &divisor * &shifted;
        shifted = &shifted + &Complex::with_val(bits, 1);
    }
    while shifted.re > 2u32 {
        // Γ(s) = (s−1)·Γ(s−1)
        shifted = &shifted - &Complex::with_val(bits, 1);
        prefactor = &prefactor * &shifted;
    }
    let core = gamma_integral_strip(&shifted, digits)?;
    Ok(&(&prefactor * &core) / &divisor)
}

/// ∫₀^∞ t^(w−1) e^(−t) dt for Re(w) ∈ [1,2], by exp-sinh quadrature.
fn gamma_integral_strip(w: &Complex, digits: u32) -> Result<Complex> {
    let bits = working_bits(digits);
    let wm1 = w - &Complex::with_val(bits, 1);
    integrate(
        |n| {
            // t^(w−1)·e^(−t) = exp((w−1)·ln t − t)
            let lnt = Real::with_val(bits, n.x.clone().ln());
            let mut e = wm1.scale_real(&lnt);
            e.re = Real::with_val(bits, &e.re - &n.x);
            e.exp()
        },
        Endpoint::Finite(Real::new(bits)),
        Endpoint::PosInf,
        digits,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetaMethod {
    /// Euler's formula B(a,b) = Γ(a)Γ(b)/Γ(a+b).
    Gamma,
    /// Tanh-sinh quadrature of ∫₀¹ t^(a−1)(1−t)^(b−1) dt.
    Quadrature,
}

/// B(a, b) on Re(a), Re(b) > 0; the two methods agree within 10^(8−digits)
/// and the acceptance checks exercise that agreement.
pub fn beta_fn(a: &Complex, b: &Complex, digits: u32, method: BetaMethod) -> Result<Complex> {
    if !(a.re > 0u32) || !(b.re > 0u32) {
        return Err(Error::domain("beta needs positive real parts"));
    }
    let bits = working_bits(digits);
    match method {
        BetaMethod::Gamma => {
            let ga = gamma_fn(a, digits)?;
            let gb = gamma_fn(b, digits)?;
            let gab = gamma_fn(&(a + b), digits)?;
            Ok(&(&ga * &gb) / &gab)
        }
        BetaMethod::Quadrature => {
            let am1 = a - &Complex::with_val(bits, 1);
            let bm1 = b - &Complex::with_val(bits, 1);
            integrate(
                |n| {
                    let lt = Real::with_val(bits, n.left.as_ref().unwrap().clone().ln());
                    let lu = Real::with_val(bits, n.right.as_ref().unwrap().clone().ln());
                    let e = &am1.scale_real(&lt) + &bm1.scale_real(&lu);
                    e.exp()
                },
                Endpoint::Finite(Real::new(bits)),
                Endpoint::Finite(Real::with_val(bits, 1)),
                digits,
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{pi, pow10};

    fn creal(v: f64, bits: u32) -> Complex {
        Complex::with_val(bits, v)
    }

    #[test]
    fn factorials() {
        // Γ(5) = 24
        let digits = 40;
        let bits = working_bits(digits);
        let g = gamma_fn(&creal(5.0, bits), digits).unwrap();
        let d = (&g - &creal(24.0, bits)).abs();
        assert!(d < pow10(-(digits as i64) + 6));
    }

    #[test]
    fn gamma_half_is_sqrt_pi() {
        let digits = 45;
        let bits = working_bits(digits);
        let g = gamma_fn(&creal(0.5, bits), digits).unwrap();
        let target = pi(digits).sqrt();
        let d = Real::with_val(bits, &g.re - &target).abs();
        assert!(d < pow10(-(digits as i64) + 6));
        assert!(g.im.clone().abs() < pow10(-(digits as i64) + 6));
    }

    #[test]
    fn gamma_quarter_frozen_and_mpfr_oracle() {
        // Γ(1/4) = 3.62560990822190831193…, frozen from the quadrature
        // oracle and cross-checked against MPFR's independent gamma
        let digits = 40;
        let bits = working_bits(digits);
        let g = gamma_fn(&creal(0.25, bits), digits).unwrap();
        let frozen = Real::with_val(
            bits,
            Real::parse("3.6256099082219083119306851558676720029951").unwrap(),
        );
        assert!(Real::with_val(bits, &g.re - &frozen).abs() < pow10(-37));
        let mpfr = Real::with_val(bits, 0.25f64).gamma();
        assert!(Real::with_val(bits, &g.re - &mpfr).abs() < pow10(-(digits as i64) + 6));
    }

    #[test]
    fn recursion_and_reflection_on_random_points() {
        let digits = 30;
        let bits = working_bits(digits);
        let tol = pow10(-(digits as i64) + 8);
        for v in [0.3f64, 0.85, 1.6, 2.9] {
            // Γ(s+1) = sΓ(s)
            let s = creal(v, bits);
            let lhs = gamma_fn(&(&s + &creal(1.0, bits)), digits).unwrap();
            let rhs = &s * &gamma_fn(&s, digits).unwrap();
            assert!((&lhs - &rhs).abs() < tol, "recursion at {v}");
        }
        for v in [0.2f64, 0.5, 0.77] {
            // Γ(s)Γ(1−s)·sin(πs) = π
            let s = creal(v, bits);
            let g1 = gamma_fn(&s, digits).unwrap();
            let g2 = gamma_fn(&(&creal(1.0, bits) - &s), digits).unwrap();
            let sin = Complex::from_real(
                Real::with_val(bits, &pi(digits) * &Real::with_val(bits, v)).sin(),
            );
            let prod = &(&g1 * &g2) * &sin;
            let d = (&prod - &Complex::from_real(pi(digits))).abs();
            assert!(d < tol, "reflection at {v}");
        }
    }

    #[test]
    fn complex_argument_against_functional_equation() {
        let digits = 25;
        let bits = working_bits(digits);
        let s = Complex::from_parts(Real::with_val(bits, 0.5f64), Real::with_val(bits, 1.25f64));
        let lhs = gamma_fn(&(&s + &Complex::with_val(bits, 1)), digits).unwrap();
        let rhs = &s * &gamma_fn(&s, digits).unwrap();
        assert!((&lhs - &rhs).abs() < pow10(-(digits as i64) + 8));
    }

    #[test]
    fn beta_methods_agree() {
        let digits = 40;
        let bits = working_bits(digits);
        // B(1,1) = 1
        let one = creal(1.0, bits);
        let b = beta_fn(&one, &one, digits, BetaMethod::Quadrature).unwrap();
        assert!((&b - &one).abs() < pow10(-(digits as i64) + 8));
        // B(1/2,1/2) = π
        let half = creal(0.5, bits);
        let b = beta_fn(&half, &half, digits, BetaMethod::Gamma).unwrap();
        assert!(Real::with_val(bits, &b.re - &pi(digits)).abs() < pow10(-(digits as i64) + 8));
        // method agreement at (1/4, 1/2)
        let q = creal(0.25, bits);
        let b1 = beta_fn(&q, &half, digits, BetaMethod::Gamma).unwrap();
        let b2 = beta_fn(&q, &half, digits, BetaMethod::Quadrature).unwrap();
        assert!((&b1 - &b2).abs() < pow10(-(digits as i64) + 8));
    }

    #[test]
    fn poles_and_domains() {
        let bits = working_bits(20);
        assert!(gamma_fn(&creal(0.0, bits), 20).is_err());
        assert!(gamma_fn(&creal(-3.0, bits), 20).is_err());
        assert!(beta_fn(&creal(-1.0, bits), &creal(1.0, bits), 20, BetaMethod::Gamma).is_err());
    }
}
