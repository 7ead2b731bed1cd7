//! H⁰ of a zero-dimensional variety: the number field ℚ[x]/(f) with monomial
//! basis 1, x, …, x^{d−1}, and Ω¹ = 0 since f′ is invertible mod f.

use crate::error::{Error, Result};
use crate::num::{Integer, Rational};
use crate::poly::{Poly, RatPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct NumberFieldH0 {
    pub dim: usize,
    /// Monomial basis descriptors "1", "x", "x^2", …
    pub basis: Vec<String>,
    /// Ω¹ = 0 always holds here; recorded for the report.
    pub omega1_trivial: bool,
    /// False when the degree exceeds the exact-factorization bound and
    /// irreducibility was trusted rather than proved.
    pub verified: bool,
}

/// Basis of H⁰(Spec ℚ[x]/(f)). Errors if `f` is constant or provably
/// reducible; degrees above 8 are trusted and flagged.
pub fn numberfield_h0_basis(f: &RatPoly) -> Result<NumberFieldH0> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::domain("need a nonconstant polynomial"))?;
    let verified = if d <= 8 {
        match is_irreducible(f) {
            Some(true) => true,
            Some(false) => return Err(Error::domain("polynomial is reducible over Q")),
            None => false,
        }
    } else {
        false
    };
    let basis = (0..d)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            k => format!("x^{k}"),
        })
        .collect();
    Ok(NumberFieldH0 {
        dim: d,
        basis,
        omega1_trivial: true,
        verified,
    })
}

/// Exact irreducibility over ℚ for small degrees: squarefree and rational
/// root tests, then a Kronecker interpolation search for factors of degree
/// up to d/2. Returns None when the divisor search would be unreasonably
/// large (caller then trusts with a flag).
fn is_irreducible(f: &RatPoly) -> Option<bool> {
    let d = f.degree().unwrap();
    if d == 1 {
        return Some(true);
    }
    // a repeated factor shows up in gcd(f, f')
    let g = f.gcd(&f.derivative());
    if g.degree().unwrap_or(0) >= 1 {
        return Some(false);
    }
    let fz = to_primitive_integer(f);
    // linear factors: rational root test on p/q with p | c0, q | lead
    if fz[0] == 0u32 {
        return Some(false); // x divides
    }
    let lead = fz.last().unwrap().clone();
    let c0 = fz[0].clone();
    let (pdivs, ok_p) = divisors(&c0);
    let (qdivs, ok_q) = divisors(&lead);
    if !(ok_p && ok_q) {
        return None;
    }
    for p in &pdivs {
        for q in &qdivs {
            for sign in [1i32, -1] {
                let root = Rational::from((Integer::from(p * sign), q.clone()));
                if eval_int_poly(&fz, &root) == 0u32 {
                    return Some(false);
                }
            }
        }
    }
    if d <= 3 {
        return Some(true); // no linear factor ⇒ irreducible
    }
    // Kronecker: a degree-k factor is pinned down by its values at k+1
    // points, each dividing the value of f there.
    for k in 2..=(d / 2) {
        let points: Vec<i64> = (0..=(k as i64))
            .map(|i| if i % 2 == 0 { i / 2 } else { -(i / 2 + 1) })
            .collect();
        let mut value_divs: Vec<Vec<Integer>> = Vec::new();
        let mut total: u128 = 1;
        for &x in &points {
            let v = eval_int_poly_at_int(&fz, x);
            if v == 0u32 {
                return Some(false);
            }
            let (ds, ok) = divisors(&v);
            if !ok {
                return None;
            }
            // signed divisors
            let mut signed: Vec<Integer> = Vec::with_capacity(2 * ds.len());
            for t in ds {
                signed.push(t.clone());
                signed.push(-t);
            }
            total = total.saturating_mul(signed.len() as u128);
            value_divs.push(signed);
        }
        if total > 400_000 {
            return None;
        }
        let mut choice = vec![0usize; points.len()];
        'outer: loop {
            let values: Vec<Rational> = choice
                .iter()
                .zip(&value_divs)
                .map(|(&i, ds)| Rational::from(&ds[i]))
                .collect();
            if let Some(g) = interpolate(&points, &values) {
                if g.degree() == Some(k) && is_integer_poly(&g) {
                    let (_, rem) = f.div_rem(&g);
                    if rem.is_zero() {
                        return Some(false);
                    }
                }
            }
            // advance the odometer
            for pos in 0..choice.len() {
                choice[pos] += 1;
                if choice[pos] < value_divs[pos].len() {
                    continue 'outer;
                }
                choice[pos] = 0;
            }
            break;
        }
    }
    Some(true)
}

fn to_primitive_integer(f: &RatPoly) -> Vec<Integer> {
    let mut lcm = Integer::from(1);
    for c in f.coeffs() {
        lcm.lcm_mut(c.denom());
    }
    let mut ints: Vec<Integer> = f
        .coeffs()
        .iter()
        .map(|c| {
            let scaled = Rational::from(c * &Rational::from(&lcm));
            scaled.numer().clone()
        })
        .collect();
    let mut content = Integer::new();
    for c in &ints {
        content.gcd_mut(c);
    }
    if content > 1u32 {
        for c in &mut ints {
            *c /= &content;
        }
    }
    ints
}

fn eval_int_poly(fz: &[Integer], x: &Rational) -> Rational {
    let mut acc = Rational::new();
    for c in fz.iter().rev() {
        acc = acc * x + Rational::from(c);
    }
    acc
}

fn eval_int_poly_at_int(fz: &[Integer], x: i64) -> Integer {
    let mut acc = Integer::new();
    for c in fz.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Positive divisors by trial division; the flag is false if the cofactor
/// could not be fully factored within budget.
fn divisors(n: &Integer) -> (Vec<Integer>, bool) {
    let mut m = Integer::from(n.clone().abs());
    if m == 0u32 {
        return (vec![], true);
    }
    let mut primes: Vec<(Integer, u32)> = Vec::new();
    let mut p = Integer::from(2);
    let mut budget = 1_000_000u64;
    while Integer::from(&p * &p) <= m {
        if budget == 0 {
            return (vec![], false);
        }
        budget -= 1;
        if m.is_divisible(&p) {
            let mut e = 0;
            while m.is_divisible(&p) {
                m /= &p;
                e += 1;
            }
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if m > 1u32 {
        primes.push((m, 1));
    }
    let mut out = vec![Integer::from(1)];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = Integer::from(1);
            for _ in 0..=e {
                next.push(Integer::from(d * &pk));
                pk *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out.dedup();
    (out, true)
}

fn interpolate(points: &[i64], values: &[Rational]) -> Option<RatPoly> {
    let mut acc = RatPoly::zero();
    for (i, (&xi, vi)) in points.iter().zip(values).enumerate() {
        let mut li = RatPoly::one();
        let mut denom = Rational::from(1);
        for (j, &xj) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            li = li.mul(&Poly::from_coeffs(vec![
                Rational::from(-xj),
                Rational::from(1),
            ]));
            denom *= Rational::from(xi - xj);
        }
        let w = Rational::from(vi / &denom);
        acc = acc.add(&li.scale(&w));
    }
    Some(acc)
}

fn is_integer_poly(p: &RatPoly) -> bool {
    p.coeffs().iter().all(|c| *c.denom() == 1u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> RatPoly {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    #[test]
    fn quadratic_fields() {
        let nf = numberfield_h0_basis(&p(&[-2, 0, 1])).unwrap(); // x²−2
        assert_eq!(nf.dim, 2);
        assert_eq!(nf.basis, vec!["1", "x"]);
        assert!(nf.verified && nf.omega1_trivial);

        let nf = numberfield_h0_basis(&p(&[1, 0, 1])).unwrap(); // x²+1
        assert_eq!(nf.dim, 2);
    }

    #[test]
    fn fifth_cyclotomic() {
        // x⁴+x³+x²+x+1, the primitive fifth roots of unity
        let nf = numberfield_h0_basis(&p(&[1, 1, 1, 1, 1])).unwrap();
        assert_eq!(nf.dim, 4);
        assert!(nf.verified);
    }

    #[test]
    fn rejects_reducible() {
        assert!(numberfield_h0_basis(&p(&[-1, 0, 1])).is_err()); // (x−1)(x+1)
        assert!(numberfield_h0_basis(&p(&[0, 1, 1])).is_err()); // x(x+1)
        assert!(numberfield_h0_basis(&p(&[1, 2, 1])).is_err()); // (x+1)²
                                                                // (x²+1)(x²+2), no rational roots but a quadratic factor
        assert!(numberfield_h0_basis(&p(&[2, 0, 3, 0, 1])).is_err());
        // (x²-2)(x²-3)
        assert!(numberfield_h0_basis(&p(&[6, 0, -5, 0, 1])).is_err());
    }

    #[test]
    fn constants_and_high_degree() {
        assert!(numberfield_h0_basis(&p(&[5])).is_err());
        // degree 9 is trusted with a flag
        let mut c = vec![0i64; 10];
        c[0] = 2;
        c[9] = 1;
        let nf = numberfield_h0_basis(&p(&c)).unwrap();
        assert_eq!(nf.dim, 9);
        assert!(!nf.verified);
    }

    #[test]
    fn non_monic_and_rational_coefficients() {
        // 2x² − 1 is irreducible; x² − 1/4 is not
        assert!(numberfield_h0_basis(&p(&[-1, 0, 2])).is_ok());
        let half_sq = Poly::from_coeffs(vec![
            Rational::from((-1, 4)),
            Rational::new(),
            Rational::from(1),
        ]);
        assert!(numberfield_h0_basis(&half_sq).is_err());
    }
}
