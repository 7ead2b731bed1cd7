//! Twisted de Rham cohomology H¹(X, f) with differential d_f = d − df∧·.
//!
//! Two instances: f = xⁿ on the affine line, with basis {dx, …, x^{n−2}dx},
//! and the Bessel twist f = x + 1/x on G_m, with basis {dx/x, dx}.

use crate::error::{Error, Result};
use crate::laurent::{Laurent, RatLaurent};
use crate::num::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Twist {
    /// f = xⁿ on A¹, n ≥ 2.
    Power(u32),
    /// f = x + 1/x on G_m.
    Bessel,
}

/// A 1-form `form`·dx in a twisted complex.
#[derive(Clone, Debug, PartialEq)]
pub struct TwistedClass {
    pub form: RatLaurent,
    pub twist: Twist,
}

impl TwistedClass {
    pub fn new(form: RatLaurent, twist: Twist) -> Result<Self> {
        match &twist {
            Twist::Power(n) if *n < 2 => {
                return Err(Error::domain("power twist needs n ≥ 2"));
            }
            Twist::Power(_) if form.min_deg() < 0 => {
                return Err(Error::domain(
                    "power-twist forms live on A¹: no negative exponents",
                ));
            }
            _ => {}
        }
        Ok(TwistedClass { form, twist })
    }
}

/// Basis coordinates plus the certificate P with
/// input − Σ cᵢ·basisᵢ = d_f(P).
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedTwisted {
    pub coords: Vec<Rational>,
    pub cert: RatLaurent,
}

/// d_f(P)·(dx)⁻¹ for the given twist, symbolically.
pub fn twisted_differential(twist: &Twist, p: &RatLaurent) -> RatLaurent {
    match twist {
        Twist::Power(n) => {
            // (P' − n x^{n-1} P) dx
            let df = p.scale(&Rational::from(*n as i64)).shift(*n as i64 - 1);
            p.derivative().sub(&df)
        }
        Twist::Bessel => {
            // (P' − P + P/x²) dx
            p.derivative().sub(p).add(&p.shift(-2))
        }
    }
}

/// Reduce a twisted class to the canonical basis.
///
/// Power case: x^m dx ≡ ((m−n+1)/n)·x^{m−n} dx via d_f(−x^{m−n+1}/n),
/// applied from the top degree down. Bessel case: xⁿdx = n·x^{n−1}dx +
/// x^{n−2}dx − d_f(xⁿ) pushes positive exponents down and (rearranged)
/// negative exponents up until only dx/x and dx remain.
pub fn reduce_twisted(cls: &TwistedClass) -> ReducedTwisted {
    let mut form = cls.form.clone();
    let mut cert = RatLaurent::zero();
    match &cls.twist {
        Twist::Power(np) => {
            let n = *np as i64;
            while let Some(m) = form.max_deg() {
                if m < n - 1 {
                    break;
                }
                let c = form.get(m);
                // certificate gains −(c/n)·x^{m−n+1}
                cert = cert.add(&Laurent::monomial(
                    -Rational::from(&c / &Rational::from(n)),
                    m - n + 1,
                ));
                let repl =
                    Laurent::monomial(Rational::from(&c * &Rational::from((m - n + 1, n))), m - n);
                form = form.sub(&Laurent::monomial(c, m)).add(&repl);
            }
            let coords = (0..*np as usize - 1).map(|k| form.get(k as i64)).collect();
            ReducedTwisted { coords, cert }
        }
        Twist::Bessel => {
            // positive exponents downward
            while let Some(m) = form.max_deg() {
                if m < 1 {
                    break;
                }
                let c = form.get(m);
                cert = cert.add(&Laurent::monomial(-c.clone(), m));
                let repl = Laurent::monomial(Rational::from(&c * &Rational::from(m)), m - 1)
                    .add(&Laurent::monomial(c.clone(), m - 2));
                form = form.sub(&Laurent::monomial(c, m)).add(&repl);
            }
            // negative exponents upward: x^k dx = x^{k+2}dx − (k+2)x^{k+1}dx
            // + d_f(x^{k+2}) for k ≤ −2
            loop {
                let k = form.min_deg();
                if form.is_zero() || k >= -1 {
                    break;
                }
                let c = form.get(k);
                cert = cert.add(&Laurent::monomial(c.clone(), k + 2));
                let repl = Laurent::monomial(c.clone(), k + 2).sub(&Laurent::monomial(
                    Rational::from(&c * &Rational::from(k + 2)),
                    k + 1,
                ));
                form = form.sub(&Laurent::monomial(c, k)).add(&repl);
            }
            ReducedTwisted {
                coords: vec![form.get(-1), form.get(0)],
                cert,
            }
        }
    }
}
