//! Precision-tagged complex arithmetic on MPFR reals.
//!
//! A [`Complex`] is a pair of `rug::Float`s. Binary operations produce a
//! result at the larger of the two operand precisions, so exact low-precision
//! constants (0, 1, small integers) mix freely with high-precision values.
//! The principal branch is used everywhere a branch choice arises, with the
//! cut on `(-inf, 0]`; points on the cut take the limit from above.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::num::{bits_for, real_to_decimal, Rational, Real};

#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    /// Zero at the given binary precision.
    pub fn new(bits: u32) -> Self {
        Complex {
            re: Real::new(bits),
            im: Real::new(bits),
        }
    }

    pub fn from_parts(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let bits = re.prec();
        Complex {
            re,
            im: Real::new(bits),
        }
    }

    pub fn with_val<T>(bits: u32, t: T) -> Self
    where
        Real: rug::Assign<T>,
    {
        Complex::from_real(Real::with_val(bits, t))
    }

    pub fn from_rational(q: &Rational, bits: u32) -> Self {
        Complex::from_real(Real::with_val(bits, q))
    }

    pub fn i(bits: u32) -> Self {
        Complex {
            re: Real::new(bits),
            im: Real::with_val(bits, 1),
        }
    }

    /// Binary precision: the larger of the two parts.
    pub fn prec(&self) -> u32 {
        self.re.prec().max(self.im.prec())
    }

    /// Approximate decimal precision carried by this value.
    pub fn prec_digits(&self) -> u32 {
        (self.prec() as f64 / 3.321929).floor() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        Complex {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    pub fn mul_i(&self) -> Self {
        Complex {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }

    pub fn norm_sqr(&self) -> Real {
        let bits = self.prec();
        let mut t = Real::with_val(bits, &self.re * &self.re);
        t += Real::with_val(bits, &self.im * &self.im);
        t
    }

    pub fn abs(&self) -> Real {
        Real::with_val(self.prec(), self.re.clone().hypot(&self.im))
    }

    pub fn arg(&self) -> Real {
        Real::with_val(self.prec(), self.im.clone().atan2(&self.re))
    }

    pub fn scale_real(&self, c: &Real) -> Self {
        let bits = self.prec().max(c.prec());
        Complex {
            re: Real::with_val(bits, &self.re * c),
            im: Real::with_val(bits, &self.im * c),
        }
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        let bits = self.prec();
        Complex {
            re: Real::with_val(bits, &self.re * c),
            im: Real::with_val(bits, &self.im * c),
        }
    }

    pub fn recip(&self) -> Self {
        let bits = self.prec();
        let n = self.norm_sqr();
        Complex {
            re: Real::with_val(bits, &self.re / &n),
            im: -Real::with_val(bits, &self.im / &n),
        }
    }

    /// Principal square root; `sqrt(-1) = i`.
    pub fn sqrt(&self) -> Self {
        let bits = self.prec();
        if self.is_zero() {
            return Complex::new(bits);
        }
        if self.im.is_zero() {
            if self.re.is_sign_negative() {
                let t = Real::with_val(bits, -&self.re).sqrt();
                return Complex {
                    re: Real::new(bits),
                    im: t,
                };
            }
            return Complex::from_real(Real::with_val(bits, &self.re).sqrt());
        }
        let r = self.abs();
        if !self.re.is_sign_negative() {
            // t = sqrt((r + re)/2), result = t + i im/(2t)
            let t = (Real::with_val(bits, &r + &self.re) / 2u32).sqrt();
            let im = Real::with_val(bits, &self.im / &t) / 2u32;
            Complex {
                re: t,
                im: Real::with_val(bits, im),
            }
        } else {
            let u = (Real::with_val(bits, &r - &self.re) / 2u32).sqrt();
            let re = Real::with_val(bits, Real::with_val(bits, self.im.clone().abs()) / &u) / 2u32;
            let im = if self.im.is_sign_negative() { -u } else { u };
            Complex {
                re: Real::with_val(bits, re),
                im,
            }
        }
    }

    pub fn exp(&self) -> Self {
        let bits = self.prec();
        let m = Real::with_val(bits, &self.re).exp();
        let (s, c) = Real::with_val(bits, &self.im).sin_cos(Real::new(bits));
        Complex {
            re: Real::with_val(bits, &c * &m),
            im: Real::with_val(bits, &s * &m),
        }
    }

    /// Principal logarithm; errors on zero.
    pub fn ln(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("log of zero"));
        }
        let bits = self.prec();
        let r = self.abs().ln();
        let t = self.arg();
        Ok(Complex {
            re: Real::with_val(bits, r),
            im: t,
        })
    }

    /// Principal power `self^w = exp(w ln self)`; errors on zero base.
    pub fn pow(&self, w: &Complex) -> Result<Self> {
        Ok((w * &self.ln()?).exp())
    }

    pub fn sin(&self) -> Self {
        let bits = self.prec();
        let (s, c) = Real::with_val(bits, &self.re).sin_cos(Real::new(bits));
        let (sh, ch) = Real::with_val(bits, &self.im).sinh_cosh(Real::new(bits));
        Complex {
            re: Real::with_val(bits, &s * &ch),
            im: Real::with_val(bits, &c * &sh),
        }
    }

    pub fn cos(&self) -> Self {
        let bits = self.prec();
        let (s, c) = Real::with_val(bits, &self.re).sin_cos(Real::new(bits));
        let (sh, ch) = Real::with_val(bits, &self.im).sinh_cosh(Real::new(bits));
        Complex {
            re: Real::with_val(bits, &c * &ch),
            im: -Real::with_val(bits, &s * &sh),
        }
    }

    pub fn cot(&self) -> Self {
        &self.cos() / &self.sin()
    }

    /// Format as `a+bi` with `digits` significant digits per part.
    pub fn to_decimal(&self, digits: usize) -> String {
        let re = real_to_decimal(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im = real_to_decimal(&self.im, digits);
        if im.starts_with('-') {
            format!("{re}{im}i")
        } else {
            format!("{re}+{im}i")
        }
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(17))
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(self.prec_digits() as usize))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait<&Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                let f: fn(&Complex, &Complex) -> Complex = $imp;
                f(self, rhs)
            }
        }
        impl $trait<Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&Complex> for Complex {
            type Output = Complex;
            fn $method(self, rhs: &Complex) -> Complex {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<Complex> for &Complex {
            type Output = Complex;
            fn $method(self, rhs: Complex) -> Complex {
                $trait::$method(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Complex, b: &Complex| {
    let bits = a.prec().max(b.prec());
    Complex {
        re: Real::with_val(bits, &a.re + &b.re),
        im: Real::with_val(bits, &a.im + &b.im),
    }
});

binop!(Sub, sub, |a: &Complex, b: &Complex| {
    let bits = a.prec().max(b.prec());
    Complex {
        re: Real::with_val(bits, &a.re - &b.re),
        im: Real::with_val(bits, &a.im - &b.im),
    }
});

binop!(Mul, mul, |a: &Complex, b: &Complex| {
    let bits = a.prec().max(b.prec());
    let re = Real::with_val(bits, &a.re * &b.re) - Real::with_val(bits, &a.im * &b.im);
    let im = Real::with_val(bits, &a.re * &b.im) + Real::with_val(bits, &a.im * &b.re);
    Complex {
        re: Real::with_val(bits, re),
        im: Real::with_val(bits, im),
    }
});

binop!(Div, div, |a: &Complex, b: &Complex| {
    let bits = a.prec().max(b.prec());
    let n = Real::with_val(bits, b.norm_sqr());
    let re = Real::with_val(bits, &a.re * &b.re) + Real::with_val(bits, &a.im * &b.im);
    let im = Real::with_val(bits, &a.im * &b.re) - Real::with_val(bits, &a.re * &b.im);
    Complex {
        re: Real::with_val(bits, re / &n),
        im: Real::with_val(bits, im / &n),
    }
});

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

impl num_traits::Zero for Complex {
    fn zero() -> Self {
        Complex::new(bits_for(crate::num::MIN_DIGITS))
    }
    fn is_zero(&self) -> bool {
        Complex::is_zero(self)
    }
}

impl num_traits::One for Complex {
    fn one() -> Self {
        Complex::with_val(bits_for(crate::num::MIN_DIGITS), 1)
    }
}

impl num_traits::FromPrimitive for Complex {
    fn from_i64(n: i64) -> Option<Self> {
        Some(Complex::with_val(64, n))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(Complex::with_val(64, n))
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(Complex::with_val(64, n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::working_bits;

    fn c(re: f64, im: f64) -> Complex {
        Complex {
            re: Real::with_val(128, re),
            im: Real::with_val(128, im),
        }
    }

    #[test]
    fn field_ops() {
        let a = c(3.0, -2.0);
        let b = c(-1.0, 5.0);
        let prod = &a * &b;
        assert_eq!(prod.re.to_f64(), 7.0); // 3*-1 - (-2)*5
        assert_eq!(prod.im.to_f64(), 17.0); // 3*5 + (-2)*(-1)
        let back = &prod / &b;
        assert!((back.re.to_f64() - 3.0).abs() < 1e-30);
        assert!((back.im.to_f64() + 2.0).abs() < 1e-30);
    }

    #[test]
    fn principal_branches() {
        // log 1 = 0 on the principal branch
        assert!(c(1.0, 0.0).ln().unwrap().abs().is_zero());
        let m1 = c(-1.0, 0.0);
        // log(-1) = iπ on the cut (limit from above)
        let l = m1.ln().unwrap();
        assert!(l.re.to_f64().abs() < 1e-35);
        assert!((l.im.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        // sqrt(-4) = 2i
        let s = c(-4.0, 0.0).sqrt();
        assert!(s.re.to_f64().abs() < 1e-35);
        assert!((s.im.to_f64() - 2.0).abs() < 1e-30);
        // sqrt agrees with squaring
        let z = c(1.25, -0.75);
        let r = z.sqrt();
        let diff = &(&r * &r) - &z;
        assert!(diff.abs().to_f64() < 1e-35);
    }

    #[test]
    fn euler_identity() {
        // exp(iπ) = -1, the identity behind several registered checks
        let bits = working_bits(40);
        let ipi = Complex::from_parts(Real::new(bits), crate::num::pi(40));
        let e = ipi.exp();
        let one = Complex::with_val(bits, 1);
        let defect = (&e + &one).abs();
        assert!(defect < crate::num::pow10(-39));
    }

    #[test]
    fn log_zero_is_domain_error() {
        assert!(Complex::new(64).ln().is_err());
    }
}
