//! Polynomial root finding by simultaneous Newton (Aberth-Ehrlich) iteration.

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Real};
use crate::poly::Poly;

/// All complex roots of the polynomial with the given coefficients (lowest
/// degree first), each satisfying |p(root)| < 10^(5-digits)·max|coeff|.
/// Multiple roots are reported with multiplicity (clustered to a common
/// value); their locations carry the usual square-root-of-epsilon
/// sensitivity, though the residual contract still holds.
pub fn poly_roots(coeffs: &[Complex], digits: u32) -> Result<Vec<Complex>> {
    let bits = working_bits(digits);
    let mut cs: Vec<Complex> = coeffs.to_vec();
    while cs.last().is_some_and(|c| c.is_zero()) {
        cs.pop();
    }
    if cs.len() < 2 {
        return Err(Error::domain("poly_roots needs a nonconstant polynomial"));
    }
    let mut roots: Vec<Complex> = Vec::new();
    // roots at the origin come off for free
    while cs.first().is_some_and(|c| c.is_zero()) {
        roots.push(Complex::new(bits));
        cs.remove(0);
    }
    let n = cs.len() - 1;
    if n == 0 {
        return finish(roots, coeffs, digits);
    }

    let p = Poly::from_coeffs(cs.clone());
    let dp = p.derivative();

    // Initial guesses on a circle of radius the Cauchy bound, angles offset
    // from the axes to dodge symmetric stalls.
    let lead = cs[n].abs();
    let mut radius = Real::new(bits);
    for c in &cs[..n] {
        let r = Real::with_val(bits, c.abs() / &lead);
        if r > radius {
            radius = r;
        }
    }
    let radius = Real::with_val(bits, radius + 1u32);
    let two_pi = crate::num::pi(digits) << 1;
    let mut zs: Vec<Complex> = (0..n)
        .map(|k| {
            let ang = Real::with_val(bits, &two_pi * &Real::with_val(bits, k as u32))
                / Real::with_val(bits, n as u32);
            let ang = Real::with_val(bits, ang + 0.41f64);
            let (s, c) = ang.sin_cos(Real::new(bits));
            Complex::from_parts(
                Real::with_val(bits, &c * &radius),
                Real::with_val(bits, &s * &radius),
            )
        })
        .collect();

    let step_tol = pow10(-(digits as i64) - 8);
    let max_iter = 120 + 4 * digits as usize;
    let mut converged = false;
    for _ in 0..max_iter {
        let mut max_step = Real::new(bits);
        for i in 0..n {
            let pz = p.eval(&zs[i]);
            if pz.is_zero() {
                continue;
            }
            let dpz = dp.eval(&zs[i]);
            let newton = &pz / &dpz;
            // Aberth correction: w = N / (1 − N·Σ 1/(z_i−z_j))
            let mut s = Complex::new(bits);
            for (j, zj) in zs.iter().enumerate() {
                if j == i {
                    continue;
                }
                let d = &zs[i] - zj;
                if d.is_zero() {
                    continue;
                }
                s = &s + &d.recip();
            }
            let denom = &Complex::with_val(bits, 1) - &(&newton * &s);
            let w = if denom.is_zero() {
                newton
            } else {
                &newton / &denom
            };
            let step = w.abs();
            zs[i] = &zs[i] - &w;
            if step > max_step {
                max_step = step;
            }
        }
        let scale = Real::with_val(bits, &radius * &step_tol);
        if max_step < scale {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            context: "Aberth iteration stalled".into(),
            best: format!("{} candidates", zs.len()),
            gap: "step above tolerance".into(),
        });
    }

    // Cluster near-coincident roots to their mean (multiple roots).
    let cluster_eps = Real::with_val(bits, &radius * &pow10(-(digits as i64) / 2));
    let mut used = vec![false; zs.len()];
    for i in 0..zs.len() {
        if used[i] {
            continue;
        }
        let mut members = vec![i];
        for j in (i + 1)..zs.len() {
            if used[j] {
                continue;
            }
            if (&zs[i] - &zs[j]).abs() < cluster_eps {
                members.push(j);
                used[j] = true;
            }
        }
        if members.len() > 1 {
            let mut mean = Complex::new(bits);
            for &m in &members {
                mean = &mean + &zs[m];
            }
            let mean = mean.scale_real(&Real::with_val(bits, members.len() as u32).recip());
            for &m in &members {
                zs[m] = mean.clone();
            }
        }
    }
    roots.extend(zs);
    finish(roots, coeffs, digits)
}

fn finish(mut roots: Vec<Complex>, coeffs: &[Complex], digits: u32) -> Result<Vec<Complex>> {
    let bits = working_bits(digits);
    // residual contract: |p(root)| < 10^(5-digits) · max|coeff|
    let p = Poly::from_coeffs(coeffs.to_vec());
    let mut max_c = Real::new(bits);
    for c in coeffs {
        let a = c.abs();
        if a > max_c {
            max_c = a;
        }
    }
    let bound = Real::with_val(bits, &max_c * &pow10(5 - digits as i64));
    for r in &roots {
        let res = p.eval(r).abs();
        if !(res < bound) {
            return Err(Error::NoConvergence {
                context: "root residual above contract".into(),
                best: r.to_decimal(20),
                gap: format!("{:.3e}", res.to_f64()),
            });
        }
    }
    roots.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Rational;

    fn from_ints(cs: &[i64], bits: u32) -> Vec<Complex> {
        cs.iter().map(|&c| Complex::with_val(bits, c)).collect()
    }

    #[test]
    fn lemniscatic_cubic() {
        // 4x³-4x = 4x(x-1)(x+1) → roots −1, 0, 1
        let digits = 40;
        let bits = working_bits(digits);
        let roots = poly_roots(&from_ints(&[0, -4, 0, 4], bits), digits).unwrap();
        assert_eq!(roots.len(), 3);
        let expect = [-1.0, 0.0, 1.0];
        for (r, e) in roots.iter().zip(expect) {
            assert!((r.re.to_f64() - e).abs() < 1e-35);
            assert!(r.im.to_f64().abs() < 1e-35);
        }
    }

    #[test]
    fn gaussian_pair() {
        // x²+1 → ±i, sorted imaginary-ascending
        let digits = 30;
        let bits = working_bits(digits);
        let roots = poly_roots(&from_ints(&[1, 0, 1], bits), digits).unwrap();
        assert!((roots[0].im.to_f64() + 1.0).abs() < 1e-25);
        assert!((roots[1].im.to_f64() - 1.0).abs() < 1e-25);
    }

    #[test]
    fn three_real_roots_with_residual_check() {
        // 4x³−8x−1 has three real roots; verify residuals and the exact
        // reconstruction property lc·∏(x−rᵢ) ≈ p coefficientwise.
        let digits = 45;
        let bits = working_bits(digits);
        let coeffs = from_ints(&[-1, -8, 0, 4], bits);
        let roots = poly_roots(&coeffs, digits).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.im.to_f64().abs() < 1e-40));
        let mut rebuilt = Poly::from_coeffs(vec![Complex::with_val(bits, 4)]);
        for r in &roots {
            let lin = Poly::from_coeffs(vec![-r.clone(), Complex::with_val(bits, 1)]);
            rebuilt = rebuilt.mul(&lin);
        }
        for (k, c) in coeffs.iter().enumerate() {
            let d = (&rebuilt.get(k) - c).abs();
            assert!(d < pow10(5 - digits as i64));
        }
    }

    #[test]
    fn multiplicity_reported() {
        // (x-1)²(x+2) = x³ - 3x + 2
        let digits = 30;
        let bits = working_bits(digits);
        let roots = poly_roots(&from_ints(&[2, -3, 0, 1], bits), digits).unwrap();
        assert_eq!(roots.len(), 3);
        let ones: Vec<_> = roots
            .iter()
            .filter(|r| (r.re.to_f64() - 1.0).abs() < 1e-6)
            .collect();
        assert_eq!(ones.len(), 2);
        assert_eq!(ones[0], ones[1]);
    }

    #[test]
    fn rational_input_via_map() {
        let digits = 30;
        let bits = working_bits(digits);
        let p: Poly<Rational> = Poly::from_coeffs(vec![
            Rational::from(-2),
            Rational::from(0),
            Rational::from(1),
        ]);
        let cp = p.map(|q| Complex::from_rational(q, bits));
        let roots = poly_roots(cp.coeffs(), digits).unwrap();
        assert!((roots[1].re.to_f64() - 2f64.sqrt()).abs() < 1e-25);
    }

    #[test]
    fn constant_is_domain_error() {
        let bits = working_bits(20);
        assert!(poly_roots(&from_ints(&[7], bits), 20).is_err());
    }
}
