//! Laurent polynomials: finitely many terms of possibly negative degree.

use std::fmt;

use crate::error::{Error, Result};
use crate::num::Rational;
use crate::poly::{term_str, Coeff, CoeffField, Poly};

/// Dense Laurent polynomial; `coeffs[i]` is the coefficient of
/// `x^(min_deg + i)`. First and last stored coefficients are nonzero unless
/// the whole polynomial is zero (empty `coeffs`, `min_deg = 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<T> {
    min_deg: i64,
    coeffs: Vec<T>,
}

pub type RatLaurent = Laurent<Rational>;

impl<T: Coeff> Laurent<T> {
    pub fn from_coeffs(min_deg: i64, coeffs: Vec<T>) -> Self {
        let mut l = Laurent { min_deg, coeffs };
        l.normalize();
        l
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.min_deg += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.min_deg = 0;
        }
    }

    pub fn zero() -> Self {
        Laurent {
            min_deg: 0,
            coeffs: vec![],
        }
    }

    pub fn monomial(c: T, deg: i64) -> Self {
        Laurent::from_coeffs(deg, vec![c])
    }

    pub fn from_poly(p: &Poly<T>) -> Self {
        Laurent::from_coeffs(0, p.coeffs().to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn max_deg(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.min_deg + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn get(&self, k: i64) -> T {
        if k < self.min_deg {
            return T::zero();
        }
        self.coeffs
            .get((k - self.min_deg) as usize)
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Iterate over (degree, coefficient) of stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.min_deg + i as i64, c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(rhs.min_deg);
        let hi = self.max_deg().unwrap().max(rhs.max_deg().unwrap());
        let mut out = Vec::with_capacity((hi - lo + 1) as usize);
        for k in lo..=hi {
            out.push(self.get(k) + rhs.get(k));
        }
        Laurent::from_coeffs(lo, out)
    }

    pub fn neg(&self) -> Self {
        Laurent {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Laurent::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Laurent::from_coeffs(self.min_deg + rhs.min_deg, out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Laurent::from_coeffs(
            self.min_deg,
            self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        )
    }

    /// Multiply by x^k (k may be negative).
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            min_deg: self.min_deg + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .terms()
            .map(|(k, c)| c.clone() * T::from_i64(k).expect("small integer"))
            .collect();
        Laurent::from_coeffs(self.min_deg - 1, coeffs)
    }
}

impl<T: CoeffField> Laurent<T> {
    /// Antiderivative within Laurent polynomials; fails exactly when the
    /// coefficient of x⁻¹ is nonzero (the dx/x obstruction).
    pub fn antiderivative(&self) -> Result<Self> {
        if !self.get(-1).is_zero() {
            return Err(Error::domain(
                "no Laurent antiderivative: nonzero x^-1 coefficient",
            ));
        }
        let mut out = Laurent::zero();
        for (k, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let t = c.clone() / T::from_i64(k + 1).expect("small integer");
            out = out.add(&Laurent::monomial(t, k + 1));
        }
        Ok(out)
    }
}

impl fmt::Display for Laurent<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut ts: Vec<_> = self.terms().collect();
        ts.reverse();
        for (k, c) in ts {
            if c.is_zero() {
                continue;
            }
            write!(f, "{}", term_str(c, k, first))?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn normalization_and_access() {
        let l = RatLaurent::from_coeffs(-2, vec![q(0), q(3), q(0), q(5), q(0)]);
        assert_eq!(l.min_deg(), -1);
        assert_eq!(l.max_deg(), Some(1));
        assert_eq!(l.get(-1), q(3));
        assert_eq!(l.get(0), q(0));
        assert_eq!(l.get(1), q(5));
        assert_eq!(l.get(7), q(0));
    }

    #[test]
    fn derivative_kills_constants_only() {
        // d/dx (2/x + 5x) = -2/x² + 5
        let l = RatLaurent::from_coeffs(-1, vec![q(2), q(7), q(5)]);
        let d = l.derivative();
        assert_eq!(d.get(-2), q(-2));
        assert_eq!(d.get(0), q(5));
        assert_eq!(d.get(-1), q(0));
    }

    #[test]
    fn antiderivative_obstruction() {
        let ok = RatLaurent::from_coeffs(0, vec![q(0), q(5)]);
        let anti = ok.antiderivative().unwrap();
        assert_eq!(anti, RatLaurent::monomial(Rational::from((5, 2)), 2));
        let bad = RatLaurent::monomial(q(1), -1);
        assert!(bad.antiderivative().is_err());
    }

    #[test]
    fn display() {
        let l = RatLaurent::from_coeffs(-1, vec![q(2), q(0), q(5)]);
        assert_eq!(l.to_string(), "5*x + 2*x^-1");
        // negative-degree rendering matches the CLI grammar
        assert_eq!(RatLaurent::monomial(q(1), -1).to_string(), "x^-1");
    }
}
