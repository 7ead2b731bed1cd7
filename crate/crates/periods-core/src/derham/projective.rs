//! The projective line through its two standard charts: exact ranks of the
//! truncated total complex ℚ[t]⊕ℚ[s] → ℚ[t]dt⊕ℚ[s]ds⊕ℚ[t,t⁻¹] → ℚ[t,t⁻¹]dt.

use crate::linalg::{in_column_span, rational_rank};
use crate::num::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P1Report {
    pub h0_dim: usize,
    pub h1_dim: usize,
    pub h2_has_dtt: bool,
}

/// Compute H⁰, H¹ of the truncated complex and decide whether dt/t survives
/// in H², with all spaces cut off at degree `nmax`:
///
///   a(f, g) = (−f'(t)dt, −g'(s)ds, f(t) − g(1/t)),
///   b(Pdt, Qds, h) = (P(t) + Q(1/t)t⁻² + h'(t))dt.
pub fn verify_p1_truncated(nmax: usize) -> P1Report {
    assert!(nmax >= 4, "truncation bound must be at least 4");
    let n = nmax as i64;
    let q0 = Rational::new;

    // domain of a: (f, g), dim 2(n+1)
    let dim_a = 2 * (nmax + 1);
    // middle space: (P, Q, h) with deg P, deg Q ≤ n and h of degree in [−n, n]
    let dim_b = 2 * (nmax + 1) + (2 * nmax + 1);
    // target of b: Laurent forms of degree in [−n−2, n]
    let dim_c = 2 * nmax + 3;

    let mid_index = |which: usize, k: i64| -> usize {
        match which {
            0 => k as usize,                        // P coefficient of t^k
            1 => (nmax + 1) + k as usize,           // Q coefficient of s^k
            _ => 2 * (nmax + 1) + (k + n) as usize, // h coefficient of t^k
        }
    };
    let c_index = |k: i64| -> usize { (k + n + 2) as usize };

    // columns of a
    let mut a_cols: Vec<Vec<Rational>> = Vec::with_capacity(dim_a);
    for k in 0..=n {
        // basis vector f = t^k: (−k·t^{k−1}, 0, t^k)
        let mut col = vec![q0(); dim_b];
        if k >= 1 {
            col[mid_index(0, k - 1)] = Rational::from(-k);
        }
        col[mid_index(2, k)] += Rational::from(1);
        a_cols.push(col);
    }
    for k in 0..=n {
        // basis vector g = s^k: (0, −k·s^{k−1}, −t^{−k})
        let mut col = vec![q0(); dim_b];
        if k >= 1 {
            col[mid_index(1, k - 1)] = Rational::from(-k);
        }
        col[mid_index(2, -k)] -= Rational::from(1);
        a_cols.push(col);
    }

    // columns of b
    let mut b_cols: Vec<Vec<Rational>> = Vec::with_capacity(dim_b);
    for k in 0..=n {
        // P = t^k ↦ t^k dt
        let mut col = vec![q0(); dim_c];
        col[c_index(k)] = Rational::from(1);
        b_cols.push(col);
    }
    for k in 0..=n {
        // Q = s^k ↦ t^{−k−2} dt
        let mut col = vec![q0(); dim_c];
        col[c_index(-k - 2)] = Rational::from(1);
        b_cols.push(col);
    }
    for k in -n..=n {
        // h = t^k ↦ k·t^{k−1} dt
        let mut col = vec![q0(); dim_c];
        if k != 0 {
            col[c_index(k - 1)] = Rational::from(k);
        }
        b_cols.push(col);
    }

    let to_rows = |cols: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        let rows = cols[0].len();
        (0..rows)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    };

    let rank_a = rational_rank(&to_rows(&a_cols));
    let rank_b = rational_rank(&to_rows(&b_cols));
    let h0_dim = dim_a - rank_a;
    let h1_dim = (dim_b - rank_b) - rank_a;

    // dt/t ∈ im(b)?
    let mut dtt = vec![q0(); dim_c];
    dtt[c_index(-1)] = Rational::from(1);
    let h2_has_dtt = !in_column_span(&b_cols, &dtt);

    P1Report {
        h0_dim,
        h1_dim,
        h2_has_dtt,
    }
}
