//! Truncated Laurent series with explicit order-of-validity tracking.
//!
//! A `TruncSeries` knows its coefficients for degrees in `[min_deg, order)`;
//! asking for a coefficient at or beyond `order` is an error the caller can
//! recover from by recomputing at a larger order. Multiplication and
//! inversion propagate the validity window, so order bookkeeping is automatic
//! through local computations at the point at infinity.

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::num::Rational;
use crate::poly::{Coeff, CoeffField};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<T> {
    min_deg: i64,
    /// Coefficients of degrees `min_deg .. order`, length `order - min_deg`.
    coeffs: Vec<T>,
}

pub type RatSeries = TruncSeries<Rational>;

impl<T: Coeff> TruncSeries<T> {
    pub fn new(min_deg: i64, coeffs: Vec<T>) -> Self {
        TruncSeries { min_deg, coeffs }
    }

    /// The zero series known through order (exclusive).
    pub fn zero_through(min_deg: i64, order: i64) -> Self {
        assert!(order >= min_deg);
        TruncSeries {
            min_deg,
            coeffs: vec![T::zero(); (order - min_deg) as usize],
        }
    }

    /// Terms of degree ≥ order are unknown.
    pub fn order(&self) -> i64 {
        self.min_deg + self.coeffs.len() as i64
    }

    pub fn min_deg(&self) -> i64 {
        self.min_deg
    }

    pub fn from_laurent(l: &Laurent<T>, order: i64) -> Self {
        let min = l.min_deg().min(0).min(order);
        let mut coeffs = Vec::new();
        for k in min..order {
            coeffs.push(l.get(k));
        }
        TruncSeries {
            min_deg: min,
            coeffs,
        }
    }

    /// The exact constant c, known through `order`.
    pub fn constant(c: T, order: i64) -> Self {
        TruncSeries::from_laurent(&Laurent::monomial(c, 0), order)
    }

    /// Coefficient of z^k; error if k is beyond the known order.
    pub fn get(&self, k: i64) -> Result<T> {
        if k >= self.order() {
            return Err(Error::OrderTooSmall {
                have: self.order(),
                need: k + 1,
            });
        }
        if k < self.min_deg {
            return Ok(T::zero());
        }
        Ok(self.coeffs[(k - self.min_deg) as usize].clone())
    }

    /// Degree of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_deg + i as i64)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let min = self.min_deg.min(rhs.min_deg);
        let mut coeffs = Vec::with_capacity((order - min).max(0) as usize);
        for k in min..order {
            coeffs.push(self.get(k).unwrap() + rhs.get(k).unwrap());
        }
        TruncSeries {
            min_deg: min,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &T) -> Self {
        TruncSeries {
            min_deg: self.min_deg,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        TruncSeries {
            min_deg: self.min_deg + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // Truncation error of one factor times the lowest term of the other
        // bounds the product's validity window.
        let order = (self.min_deg + rhs.order()).min(rhs.min_deg + self.order());
        let min = self.min_deg + rhs.min_deg;
        let mut coeffs = vec![T::zero(); (order - min).max(0) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let k = (i + j) as i64;
                if k >= order - min {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        TruncSeries {
            min_deg: min,
            coeffs,
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let k = self.min_deg + i as i64;
                c.clone() * T::from_i64(k).expect("small integer")
            })
            .collect();
        TruncSeries {
            min_deg: self.min_deg - 1,
            coeffs,
        }
    }

    pub fn truncate_to(&self, order: i64) -> Self {
        let order = order.min(self.order());
        let len = (order - self.min_deg).max(0) as usize;
        TruncSeries {
            min_deg: self.min_deg,
            coeffs: self.coeffs[..len].to_vec(),
        }
    }
}

impl<T: CoeffField> TruncSeries<T> {
    /// Multiplicative inverse. If `self` has valuation v and is known through
    /// order N, the inverse is known through order N − 2v.
    pub fn inverse(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::domain("inverse of (truncation of) zero series"))?;
        let n = (self.order() - v) as usize; // known coefficients from valuation
        let a: Vec<T> = (0..n as i64).map(|i| self.get(v + i).unwrap()).collect();
        let a0_inv = T::one() / a[0].clone();
        let mut b = Vec::with_capacity(n);
        b.push(a0_inv.clone());
        for k in 1..n {
            let mut acc = T::zero();
            for j in 1..=k {
                acc = acc + a[j].clone() * b[k - j].clone();
            }
            b.push(-(acc * a0_inv.clone()));
        }
        Ok(TruncSeries {
            min_deg: -v,
            coeffs: b,
        })
    }

    /// Term-by-term antiderivative with zero integration constant; requires
    /// the z⁻¹ coefficient to vanish (true for differentials of the second
    /// kind).
    pub fn antiderivative(&self) -> Result<Self> {
        if self.min_deg <= -1 && self.order() > -1 && !self.get(-1)?.is_zero() {
            return Err(Error::domain(
                "series antiderivative: nonzero z^-1 coefficient",
            ));
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for k in self.min_deg..self.order() {
            if k == -1 {
                // the z^-1 slot (known zero) integrates to the constant slot
                coeffs.push(T::zero());
                continue;
            }
            let c = self.get(k).unwrap();
            coeffs.push(c / T::from_i64(k + 1).expect("small integer"));
        }
        Ok(TruncSeries {
            min_deg: self.min_deg + 1,
            coeffs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    fn geom(order: i64) -> RatSeries {
        // 1/(1-z) = 1 + z + z² + ...
        RatSeries::new(0, (0..order).map(|_| q(1, 1)).collect())
    }

    #[test]
    fn mul_tracks_order() {
        let a = geom(8);
        let one_minus_z = RatSeries::new(0, vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1)]);
        let prod = a.mul(&one_minus_z);
        assert_eq!(prod.order(), 4); // limited by the shorter factor
        assert_eq!(prod.get(0).unwrap(), q(1, 1));
        assert_eq!(prod.get(3).unwrap(), q(0, 1));
        assert!(prod.get(4).is_err());
    }

    #[test]
    fn inverse_of_laurent_tail() {
        // s = z^-2 (1 - z): inverse = z^2 (1 + z + z^2 + ...)
        let s = RatSeries::new(-2, vec![q(1, 1), q(-1, 1), q(0, 1), q(0, 1), q(0, 1)]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.min_deg(), 2);
        assert_eq!(inv.get(2).unwrap(), q(1, 1));
        assert_eq!(inv.get(4).unwrap(), q(1, 1));
        let prod = s.mul(&inv);
        assert_eq!(prod.get(0).unwrap(), q(1, 1));
        assert_eq!(prod.get(1).unwrap(), q(0, 1));
    }

    #[test]
    fn antiderivative_skips_log_slot() {
        let s = RatSeries::new(-3, vec![q(2, 1), q(0, 1), q(0, 1), q(4, 1), q(6, 1)]);
        // ∫ (2 z^-3 + 4 + 6 z) dz = -z^-2 + 4z + 3z²
        let f = s.antiderivative().unwrap();
        assert_eq!(f.get(-2).unwrap(), q(-1, 1));
        assert_eq!(f.get(1).unwrap(), q(4, 1));
        assert_eq!(f.get(2).unwrap(), q(3, 1));
        let ds = f.derivative();
        assert_eq!(ds.get(-3).unwrap(), q(2, 1));
        // a z^-1 term blocks it
        let bad = RatSeries::new(-1, vec![q(1, 1), q(0, 1)]);
        assert!(bad.antiderivative().is_err());
    }
}
