//! Eisenstein series G₂, G₄, G₆ by q-expansion, in the lattice-sum
//! normalization G_{2k}(τ) = Σ'(m+nτ)^(−2k) (so G₄ = g₂(Λ_τ)/60,
//! G₆ = g₃(Λ_τ)/140, and G₂ is the quasi-modular weight-2 series summed
//! rows first).

use rug::ops::Pow;

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Real};
use crate::special::zeta::zeta_real;

/// e^(2πiτ).
pub fn nome(tau: &Complex, digits: u32) -> Complex {
    let two_pi = crate::num::pi(digits) << 1;
    tau.scale_real(&two_pi).mul_i().exp()
}

/// G_weight(τ) for weight ∈ {2, 4, 6}, Im(τ) ≥ 0.05.
pub fn eisenstein(weight: u32, tau: &Complex, digits: u32) -> Result<Complex> {
    if ![2, 4, 6].contains(&weight) {
        return Err(Error::domain("eisenstein supports weights 2, 4, 6"));
    }
    if !(tau.im.clone() > 0.05f64) {
        return Err(Error::Conditioning(
            "Im(τ) < 0.05: nome too close to the unit circle".into(),
        ));
    }
    let bits = working_bits(digits);
    let q = nome(tau, digits);
    // divisor-power sum Σ σ_{w-1}(n) qⁿ, truncated when |q|ⁿ·n^w drops
    // below target
    let qabs = q.abs();
    let eps = pow10(-(digits as i64) - 12);
    let n_max = {
        let log_qabs = qabs.clone().ln().to_f64(); // < 0
        let need = (digits as f64 + 14.0) * std::f64::consts::LN_10;
        let mut n = (need / -log_qabs).ceil() as usize + 4;
        // account for polynomial growth of σ_{w−1}(n) ≤ n^w
        for _ in 0..8 {
            let poly = (weight as f64 + 1.0) * (n as f64).ln();
            n = ((need + poly) / -log_qabs).ceil() as usize + 4;
        }
        n
    };
    let mut sigma = vec![rug::Integer::new(); n_max + 1];
    for d in 1..=n_max {
        let dp = rug::Integer::from(d).pow(weight - 1);
        let mut m = d;
        while m <= n_max {
            sigma[m] += &dp;
            m += d;
        }
    }
    let mut sum = Complex::new(bits);
    let mut q_pow = Complex::with_val(bits, 1);
    for (n, s) in sigma.iter().enumerate().skip(1) {
        q_pow = &q_pow * &q;
        let term = q_pow.scale_real(&Real::with_val(bits, s));
        sum = &sum + &term;
        if term.abs() < eps && n > 4 {
            break;
        }
    }
    let (zeta_w, coeff) = match weight {
        2 => (zeta_real(2, digits)?, -24i32),
        4 => (zeta_real(4, digits)?, 240),
        _ => (zeta_real(6, digits)?, -504),
    };
    let one = Complex::with_val(bits, 1);
    let inner = &one + &sum.scale_i64(coeff as i64);
    Ok(inner.scale_real(&Real::with_val(bits, &zeta_w * &Real::with_val(bits, 2))))
}
