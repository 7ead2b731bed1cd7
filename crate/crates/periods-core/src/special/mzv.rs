//! Multiple zeta values ζ(n₁, …, n_ℓ) = Σ_{k₁>…>k_ℓ≥1} k₁^(−n₁)…k_ℓ^(−n_ℓ).
//!
//! Each nesting level maintains the partial-sum function G(x) = Σ_{k>x} …
//! exactly for x up to a cutoff K and as an Euler–Maclaurin asymptotic
//! series in 1/x beyond it; tails of the next level are then sums of Hurwitz
//! tails, again with closed asymptotic expansions. Every truncation happens
//! at magnitude below 10^(−digits−8) at the cutoff, giving the advertised
//! absolute error 10^(−digits).

use rug::ops::Pow;

use crate::error::{Error, Result};
use crate::num::{pow10, working_bits, Complex, Rational, Real};
use crate::special::zeta::bernoulli;

/// Asymptotic expansion Σ c_e·x^(−e) with integer exponents e ≥ 1.
struct AsymSeries {
    terms: Vec<(i64, Real)>,
}

impl AsymSeries {
    fn eval(&self, x: u32, bits: u32) -> Real {
        let xv = Real::with_val(bits, x);
        let mut acc = Real::new(bits);
        for (e, c) in &self.terms {
            let p = Real::with_val(bits, xv.clone().pow(*e as u32));
            acc += Real::with_val(bits, c / &p);
        }
        acc
    }
}

/// ζ_H(s, x+1) = Σ_{k>x} k^(−s) as an asymptotic series in 1/x:
/// x^(1−s)/(s−1) − x^(−s)/2 + Σ_i B_{2i}/(2i)!·(s)_{2i−1}·x^(−s−2i+1).
/// Terms are dropped once they fall below `floor` at x = k_cut.
fn hurwitz_series(s: i64, k_cut: u32, floor: &Real, bits: u32) -> AsymSeries {
    assert!(s >= 2);
    let mut terms: Vec<(i64, Real)> = Vec::new();
    let sm1_inv = Real::with_val(bits, s - 1).recip();
    terms.push((s - 1, sm1_inv));
    terms.push((s, Real::with_val(bits, -0.5f64)));
    let kv = Real::with_val(bits, k_cut);
    let mut factorial = Rational::from(1);
    let mut rising = Rational::from(1);
    for i in 1..120usize {
        factorial *= Rational::from(((2 * i - 1) as i64) * (2 * i) as i64);
        if i == 1 {
            rising = Rational::from(s);
        } else {
            rising *= Rational::from((s + 2 * i as i64 - 3) * (s + 2 * i as i64 - 2));
        }
        let coeff = Rational::from(&bernoulli(2 * i) / &factorial) * &rising;
        let c = Real::with_val(bits, &coeff);
        let e = s + 2 * i as i64 - 1;
        let mag = Real::with_val(
            bits,
            c.clone().abs() / Real::with_val(bits, kv.clone().pow(e as u32)),
        );
        if mag < *floor {
            break;
        }
        terms.push((e, c));
    }
    AsymSeries { terms }
}

/// Asymptotic series of Σ_{k>x} k^(−n)·g(k) for g given asymptotically.
fn tail_sum_series(g: &AsymSeries, n: i64, k_cut: u32, floor: &Real, bits: u32) -> AsymSeries {
    let kv = Real::with_val(bits, k_cut);
    let mut acc: Vec<(i64, Real)> = Vec::new();
    for (e, c) in &g.terms {
        // c·Σ_{k>x} k^{−(n+e)} expanded again as a series in x
        let h = hurwitz_series(n + e, k_cut, floor, bits);
        for (e2, c2) in &h.terms {
            let coeff = Real::with_val(bits, c * c2);
            let mag = Real::with_val(
                bits,
                coeff.clone().abs() / Real::with_val(bits, kv.clone().pow(*e2 as u32)),
            );
            if mag < *floor {
                continue;
            }
            match acc.iter_mut().find(|(e3, _)| e3 == e2) {
                Some((_, c3)) => *c3 += &coeff,
                None => acc.push((*e2, coeff)),
            }
        }
    }
    acc.sort_by_key(|(e, _)| *e);
    AsymSeries { terms: acc }
}

/// ζ(n₁, …, n_ℓ) to absolute error 10^(−digits). Depth ≤ 3 and digits ≤ 25
/// per the operation contract; convergence needs n₁ ≥ 2.
pub fn mzv(exponents: &[u32], digits: u32) -> Result<Complex> {
    if exponents.is_empty() || exponents.len() > 3 {
        return Err(Error::domain("mzv supports depth 1 to 3"));
    }
    if digits > 25 {
        return Err(Error::domain("mzv precision is capped at 25 digits"));
    }
    if exponents[0] < 2 {
        return Err(Error::domain("mzv needs n₁ ≥ 2 for convergence"));
    }
    if exponents.iter().skip(1).any(|&n| n < 1) {
        return Err(Error::domain("mzv needs nᵢ ≥ 1"));
    }
    let bits = working_bits(digits + 10);
    let k_cut: u32 = 40 + 4 * digits;
    let floor = pow10(-(digits as i64) - 12);

    // innermost level: G(x) = Σ_{k>x} k^(−n₁)
    let mut series = hurwitz_series(exponents[0] as i64, k_cut, &floor, bits);
    let mut grid: Vec<Real> = Vec::with_capacity(k_cut as usize + 1);
    grid.resize(k_cut as usize + 1, Real::new(bits));
    grid[k_cut as usize] = series.eval(k_cut, bits);
    for x in (0..k_cut).rev() {
        let k = x + 1;
        let term = Real::with_val(bits, Real::with_val(bits, k).pow(exponents[0])).recip();
        grid[x as usize] = Real::with_val(bits, &grid[(x + 1) as usize] + &term);
    }

    for &n in &exponents[1..] {
        series = tail_sum_series(&series, n as i64, k_cut, &floor, bits);
        let mut next: Vec<Real> = vec![Real::new(bits); k_cut as usize + 1];
        next[k_cut as usize] = series.eval(k_cut, bits);
        for x in (0..k_cut).rev() {
            let k = x + 1;
            let kp = Real::with_val(bits, Real::with_val(bits, k).pow(n)).recip();
            let term = Real::with_val(bits, &kp * &grid[k as usize]);
            next[x as usize] = Real::with_val(bits, &next[(x + 1) as usize] + &term);
        }
        grid = next;
    }
    Ok(Complex::from_real(grid[0].clone()))
}
