//! Riemann zeta at integer arguments ≥ 2 by Euler–Maclaurin acceleration,
//! plus the Hurwitz tails that drive the multiple-zeta-value engine.

use std::sync::Mutex;

use rug::ops::Pow;

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Rational, Real};

static BERNOULLI: Mutex<Vec<Rational>> = Mutex::new(Vec::new());

/// Exact Bernoulli number B_n (B_1 = −1/2), memoized.
pub fn bernoulli(n: usize) -> Rational {
    let mut cache = BERNOULLI.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rational::from(1));
    }
    while cache.len() <= n {
        let m = cache.len();
        // Σ_{j=0}^{m} C(m+1, j) B_j = 0
        let mut acc = Rational::new();
        let mut binom = Rational::from(1); // C(m+1, 0)
        for (j, b) in cache.iter().enumerate() {
            acc += Rational::from(&binom * b);
            binom *= Rational::from(((m + 1 - j) as i64, (j + 1) as i64));
        }
        let value = -acc / Rational::from((m + 1) as i64);
        cache.push(value);
    }
    cache[n].clone()
}

/// Σ_{k≥a} k^(−s) for integer s ≥ 2, integer a ≥ 1, by the Euler–Maclaurin
/// expansion at a. The error is on the order of the first omitted term; `a`
/// must be large enough relative to the precision (the caller controls it).
pub fn hurwitz_tail(s: u32, a: u32, digits: u32) -> Result<Real> {
    if s < 2 || a < 1 {
        return Err(Error::domain("hurwitz_tail needs s ≥ 2, a ≥ 1"));
    }
    let bits = working_bits(digits);
    let av = Real::with_val(bits, a);
    let a_pow_s = Real::with_val(bits, av.clone().pow(s)); // a^s
                                                           // a^(1−s)/(s−1)
    let mut acc = Real::with_val(bits, &av / &a_pow_s) / Real::with_val(bits, s - 1);
    // + a^(−s)/2
    acc += Real::with_val(bits, a_pow_s.clone().recip()) >> 1;
    let eps = pow10(-(digits as i64) - 12);
    // + Σ B_{2i}/(2i)!·(s)_{2i−1}·a^(−s−2i+1)
    let mut factorial = Rational::from(1); // (2i)!
    let mut rising = Rational::from(1); // (s)_{2i−1}
    let mut a_pow = Real::with_val(bits, &a_pow_s * &av); // a^(s+2i−1) at i=1 start: a^(s+1)
    let mut prev_mag: Option<Real> = None;
    for i in 1..200usize {
        factorial *= Rational::from(((2 * i - 1) as i64) * (2 * i) as i64);
        if i == 1 {
            rising = Rational::from(s);
        } else {
            rising *= Rational::from((s as i64 + 2 * i as i64 - 3) * (s as i64 + 2 * i as i64 - 2));
        }
        let coeff = Rational::from(&bernoulli(2 * i) / &factorial) * &rising;
        let term = Real::with_val(bits, &coeff) / &a_pow;
        let term = Real::with_val(bits, term);
        let mag = term.clone().abs();
        acc += &term;
        if mag < eps {
            return Ok(acc);
        }
        if let Some(p) = prev_mag {
            if mag > p {
                // expansion diverging before reaching the target: a too small
                return Err(Error::Conditioning(format!(
                    "Euler–Maclaurin tail at a = {a} cannot reach {digits} digits"
                )));
            }
        }
        prev_mag = Some(mag);
        a_pow *= Real::with_val(bits, av.clone().square());
    }
    Err(Error::Conditioning(
        "Euler–Maclaurin did not terminate".into(),
    ))
}

/// ζ(n) for integer n ≥ 2, accurate to 10^(−digits).
pub fn zeta_real(n: u32, digits: u32) -> Result<Real> {
    if n < 2 {
        return Err(Error::domain("zeta_fn needs n ≥ 2"));
    }
    let bits = working_bits(digits);
    // direct sum to M−1, Euler–Maclaurin tail from M
    let m = 16 + digits / 2;
    let mut acc = Real::with_val(bits, 1);
    for k in 2..m {
        acc += Real::with_val(bits, Real::with_val(bits, k).pow(n)).recip();
    }
    acc += hurwitz_tail(n, m, digits)?;
    Ok(acc)
}

/// Spec surface: ζ(n) as a complex value.
pub fn zeta_fn(n: u32, digits: u32) -> Result<Complex> {
    Ok(Complex::from_real(zeta_real(n, digits)?))
}
