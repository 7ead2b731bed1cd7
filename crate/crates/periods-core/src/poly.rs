//! Dense univariate polynomials, generic over the coefficient scalar.
//!
//! The same machinery serves exact rational coefficients (the currency of the
//! symbolic cohomology layer) and arbitrary-precision complex coefficients
//! (root finding). Coefficients are stored lowest degree first with no
//! trailing zeros; the zero polynomial is the empty list.

use std::fmt;
use std::ops::{Div, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

use crate::error::{Error, Result};
use crate::num::Rational;

/// Coefficient ring bound for the generic polynomial/series layer.
pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + FromPrimitive
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + FromPrimitive
{
}

/// Coefficient field bound: rings with exact division.
pub trait CoeffField: Coeff + Div<Output = Self> {}
impl<T> CoeffField for T where T: Coeff + Div<Output = T> {}

#[derive(Clone, Debug, PartialEq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type RatPoly = Poly<Rational>;

impl<T: Coeff> Poly<T> {
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn constant(c: T) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn x() -> Self {
        Poly::from_coeffs(vec![T::zero(), T::one()])
    }

    pub fn monomial(c: T, deg: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn get(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.get(k) + rhs.get(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.get(k) - rhs.get(k));
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.clone() * T::from_i64(k as i64).expect("small integer"))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: CoeffField> Poly<T> {
    /// Antiderivative with zero constant term.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = vec![T::zero()];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / T::from_i64(k as i64 + 1).expect("small integer"));
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: self = q·rhs + r with deg r < deg rhs.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let d = rhs.degree().unwrap();
        let lc = rhs.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.leading().unwrap().clone() / lc.clone();
            let t = Poly::monomial(c, rd - d);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(rhs));
        }
        (quot, rem)
    }

    /// Exact division; debug-asserts a zero remainder.
    pub fn exact_div(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

/// Extended Euclid: returns `(d, u, v)` with `u·f + v·g = d`, `d` the monic
/// gcd, and `deg u < deg g − deg d`, `deg v < deg f − deg d` whenever the
/// cofactor divisors are nonconstant.
pub fn ext_gcd<T: CoeffField>(f: &Poly<T>, g: &Poly<T>) -> Result<(Poly<T>, Poly<T>, Poly<T>)> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::domain("ext_gcd of two zero polynomials"));
    }
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut u0, mut u1) = (Poly::one(), Poly::zero());
    let (mut v0, mut v1) = (Poly::zero(), Poly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let u = u0.sub(&q.mul(&u1));
        let v = v0.sub(&q.mul(&v1));
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = u;
        v0 = v1;
        v1 = v;
    }
    // Normalize to monic d.
    let lc = r0.leading().expect("nonzero gcd").clone();
    let inv = T::one() / lc;
    let d = r0.scale(&inv);
    let mut u = u0.scale(&inv);
    let mut v = v0.scale(&inv);
    // Reduce u modulo g/d so the degree bounds hold; recover v from the
    // Bézout identity by exact division.
    if !g.is_zero() {
        let gd = g.exact_div(&d);
        if gd.degree().unwrap_or(0) > 0 {
            let (_, ur) = u.div_rem(&gd);
            u = ur;
            v = d.sub(&u.mul(f)).exact_div(g);
        }
    }
    Ok((d, u, v))
}

impl fmt::Display for Poly<Rational> {
    /// Renders in the CLI form grammar, e.g. `3/2*x^2 - x + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            write!(f, "{}", term_str(c, k as i64, first))?;
            first = false;
        }
        Ok(())
    }
}

pub(crate) fn term_str(c: &Rational, k: i64, first: bool) -> String {
    let neg = *c < 0u32;
    let mag = if neg {
        Rational::from(-c.clone())
    } else {
        c.clone()
    };
    let sign = match (first, neg) {
        (true, false) => String::new(),
        (true, true) => "-".to_string(),
        (false, false) => " + ".to_string(),
        (false, true) => " - ".to_string(),
    };
    let body = if k == 0 {
        format!("{mag}")
    } else {
        let xs = if k == 1 {
            "x".to_string()
        } else {
            format!("x^{k}")
        };
        if mag == 1u32 {
            xs
        } else {
            format!("{mag}*{xs}")
        }
    };
    format!("{sign}{body}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn p(coeffs: &[(i64, i64)]) -> RatPoly {
        Poly::from_coeffs(coeffs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn mul_and_eval() {
        // (x-1)(x+1) = x^2 - 1
        let a = p(&[(-1, 1), (1, 1)]);
        let b = p(&[(1, 1), (1, 1)]);
        assert_eq!(a.mul(&b), p(&[(-1, 1), (0, 1), (1, 1)]));
        assert_eq!(a.mul(&b).eval(&q(3, 1)), q(8, 1));
    }

    #[test]
    fn div_rem_roundtrip() {
        let f = p(&[(2, 1), (0, 1), (-3, 1), (1, 2)]);
        let g = p(&[(1, 1), (1, 1)]);
        let (quot, rem) = f.div_rem(&g);
        assert_eq!(quot.mul(&g).add(&rem), f);
        assert!(rem.degree() < g.degree());
    }

    #[test]
    fn ext_gcd_spec_cases() {
        // f = x²−1, g = 2x → d = 1, u = −1, v = x/2
        let f = p(&[(-1, 1), (0, 1), (1, 1)]);
        let g = p(&[(0, 1), (2, 1)]);
        let (d, u, v) = ext_gcd(&f, &g).unwrap();
        assert_eq!(d, Poly::one());
        assert_eq!(u, p(&[(-1, 1)]));
        assert_eq!(v, p(&[(0, 1), (1, 2)]));
        assert_eq!(u.mul(&f).add(&v.mul(&g)), d);

        // f = x, g = x² → d = x, u = 1, v = 0
        let f = p(&[(0, 1), (1, 1)]);
        let g = p(&[(0, 1), (0, 1), (1, 1)]);
        let (d, u, v) = ext_gcd(&f, &g).unwrap();
        assert_eq!(d, f);
        assert_eq!(u, Poly::one());
        assert!(v.is_zero());

        // the curve y² = 4x³−4x: f = 4x³−4x, f' = 12x²−4, coprime
        let f = p(&[(0, 1), (-4, 1), (0, 1), (4, 1)]);
        let g = p(&[(-4, 1), (0, 1), (12, 1)]);
        let (d, u, v) = ext_gcd(&f, &g).unwrap();
        assert_eq!(d, Poly::one());
        assert_eq!(u.mul(&f).add(&v.mul(&g)), Poly::one());
        // degree bounds from the contract
        assert!(u.degree().unwrap() < 2);
        assert!(v.degree().unwrap() < 3);
    }

    #[test]
    fn ext_gcd_rejects_double_zero() {
        assert!(ext_gcd(&RatPoly::zero(), &RatPoly::zero()).is_err());
    }

    #[test]
    fn display_grammar() {
        let f = p(&[(5, 1), (-1, 1), (3, 2)]);
        assert_eq!(f.to_string(), "3/2*x^2 - x + 5");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }
}
