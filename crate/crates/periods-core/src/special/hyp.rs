//! Gauss hypergeometric function inside the unit disk: defining series with
//! ratio-bound tail control, and Euler's integral representation as the
//! second route when c > a > 0.

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Rational, Real};
use crate::quad::{integrate, Endpoint};
use crate::special::gamma::{beta_fn, BetaMethod};

/// ₂F₁(a, b; c | z) by the series Σ (a)ₖ(b)ₖ/(c)ₖ · zᵏ/k!, for |z| < 1.
pub fn hyp2f1(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Complex,
    digits: u32,
) -> Result<Complex> {
    if *c <= 0u32 && c.denom() == &1u32 {
        return Err(Error::domain("hyp2f1 pole: c is a nonpositive integer"));
    }
    let bits = working_bits(digits);
    let zabs = z.abs();
    if !(zabs.clone() < 1u32) {
        return Err(Error::domain("hyp2f1 series needs |z| < 1"));
    }
    // once k is past all of |a|,|b|,|c|, the term ratio is below ρ < 1;
    // near the disk boundary (the Beukers-Wolfart arguments) this still
    // means several hundred thousand terms, so the recurrence runs on
    // correctly rounded reals rather than exact rationals
    let rho = Real::with_val(bits, &zabs + 1u32) >> 1;
    let tail_factor = Real::with_val(bits, Real::with_val(bits, 1u32) - &rho).recip();
    let eps = pow10(-(digits as i64) - 10);
    let (ar, br, cr) = (
        Real::with_val(bits, a),
        Real::with_val(bits, b),
        Real::with_val(bits, c),
    );
    let mut term = Complex::with_val(bits, 1);
    let mut acc = term.clone();
    let k_start = [a, b, c]
        .iter()
        .map(|r| {
            let v = (*r).clone().abs().ceil();
            v.numer().to_f64() as usize
        })
        .max()
        .unwrap()
        + 2;
    for k in 0..3_000_000i64 {
        let kr = Real::with_val(bits, k);
        let num = Real::with_val(bits, &ar + &kr) * Real::with_val(bits, &br + &kr);
        let den = Real::with_val(bits, &cr + &kr) * Real::with_val(bits, &kr + 1u32);
        let ratio = Real::with_val(bits, num) / Real::with_val(bits, den);
        term = (&term * z).scale_real(&Real::with_val(bits, ratio));
        acc = &acc + &term;
        if k as usize > k_start {
            let bound = Real::with_val(bits, term.abs() * &tail_factor);
            if bound < eps {
                return Ok(acc);
            }
        }
    }
    Err(Error::NoConvergence {
        context: "hyp2f1 series".into(),
        best: acc.to_decimal(20),
        gap: term.abs().to_f64().to_string(),
    })
}

/// Euler's integral route, valid for c > a > 0:
/// ₂F₁ = ∫₀¹ t^(a−1)(1−t)^(c−a−1)(1−tz)^(−b) dt / B(a, c−a).
pub fn hyp2f1_euler(
    a: &Rational,
    b: &Rational,
    c: &Rational,
    z: &Complex,
    digits: u32,
) -> Result<Complex> {
    if !(*c > *a && *a > 0u32) {
        return Err(Error::domain("Euler integral route needs c > a > 0"));
    }
    let bits = working_bits(digits);
    let am1 = Complex::from_rational(&Rational::from(a - &Rational::from(1)), bits);
    let cam1 = Complex::from_rational(&(Rational::from(c - a) - Rational::from(1)), bits);
    let minus_b = Complex::from_rational(&-b.clone(), bits);
    let num = integrate(
        |n| {
            let lt = Real::with_val(bits, n.left.as_ref().unwrap().clone().ln());
            let lu = Real::with_val(bits, n.right.as_ref().unwrap().clone().ln());
            let tz = Complex::from_real(n.left.as_ref().unwrap().clone());
            let one_minus_tz = &Complex::with_val(bits, 1) - &(&tz * z);
            let log_pow = one_minus_tz.ln().expect("1-tz stays off the cut");
            let e = &(&am1.scale_real(&lt) + &cam1.scale_real(&lu)) + &(&minus_b * &log_pow);
            e.exp()
        },
        Endpoint::Finite(Real::new(bits)),
        Endpoint::Finite(Real::with_val(bits, 1)),
        digits,
    )?;
    let ca = Complex::from_rational(a, bits);
    let cca = Complex::from_rational(&Rational::from(c - a), bits);
    let beta = beta_fn(&ca, &cca, digits, BetaMethod::Gamma)?;
    Ok(&num / &beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn binomial_series_closed_form() {
        // ₂F₁(a, 1; 1 | z) = (1−z)^(−a)
        let digits = 35;
        let bits = working_bits(digits);
        let z = Complex::with_val(bits, 0.375f64);
        let a = q(3, 7);
        let f = hyp2f1(&a, &q(1, 1), &q(1, 1), &z, digits).unwrap();
        let target = (&Complex::with_val(bits, 1) - &z)
            .pow(&Complex::from_rational(&-a, bits))
            .unwrap();
        assert!((&f - &target).abs() < pow10(-(digits as i64) + 3));
    }

    #[test]
    fn series_and_euler_routes_agree() {
        let digits = 30;
        let bits = working_bits(digits);
        let z = Complex::with_val(bits, 0.6f64);
        let (a, b, c) = (q(1, 3), q(1, 2), q(5, 4));
        let f1 = hyp2f1(&a, &b, &c, &z, digits).unwrap();
        let f2 = hyp2f1_euler(&a, &b, &c, &z, digits).unwrap();
        assert!((&f1 - &f2).abs() < pow10(-(digits as i64) + 8));
    }

    #[test]
    fn beukers_wolfart_value() {
        // ₂F₁(1/12, 5/12; 1/2 | 1323/1331) = (3/4)·11^(1/4)
        let digits = 40;
        let bits = working_bits(digits);
        let z = Complex::from_rational(&q(1323, 1331), bits);
        let f = hyp2f1(&q(1, 12), &q(5, 12), &q(1, 2), &z, digits).unwrap();
        let target = Real::with_val(bits, 11).root(4) * Real::with_val(bits, 0.75f64);
        let d = Real::with_val(bits, &f.re - &Real::with_val(bits, target)).abs();
        assert!(d < pow10(-(digits as i64) + 10), "defect {:?}", d.to_f64());
    }

    #[test]
    fn domain_guards() {
        let bits = working_bits(20);
        let z = Complex::with_val(bits, 0.5f64);
        assert!(hyp2f1(&q(1, 2), &q(1, 2), &q(-2, 1), &z, 20).is_err());
        let z1 = Complex::with_val(bits, 1.5f64);
        assert!(hyp2f1(&q(1, 2), &q(1, 2), &q(1, 1), &z1, 20).is_err());
        assert!(hyp2f1_euler(&q(2, 1), &q(1, 2), &q(1, 1), &z, 20).is_err());
    }
}
