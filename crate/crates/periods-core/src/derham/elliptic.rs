//! The affine elliptic curve y² = 4x³ − ax − b: reduction to the basis
//! {ω, xω} with ω = dx/y, local expansions at infinity, residues, and the
//! cup product via those expansions.

use crate::error::{Error, Result};
use crate::num::Rational;
use crate::poly::{Poly, RatPoly};
use crate::series::RatSeries;

/// y² = 4x³ − a·x − b over ℚ with nonzero discriminant a³ − 27b².
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticCurveQ {
    a: Rational,
    b: Rational,
}

impl EllipticCurveQ {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let disc = Self::disc_of(&a, &b);
        if disc == 0u32 {
            return Err(Error::domain("discriminant a³ − 27b² vanishes"));
        }
        Ok(EllipticCurveQ { a, b })
    }

    fn disc_of(a: &Rational, b: &Rational) -> Rational {
        let a3 = Rational::from(a * a) * a;
        let b2 = Rational::from(b * b) * Rational::from(27);
        a3 - b2
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn discriminant(&self) -> Rational {
        Self::disc_of(&self.a, &self.b)
    }

    /// f(x) = 4x³ − ax − b.
    pub fn f(&self) -> RatPoly {
        Poly::from_coeffs(vec![
            -self.b.clone(),
            -self.a.clone(),
            Rational::new(),
            Rational::from(4),
        ])
    }
}

/// The 1-form (R + S·y)·ω on the affine curve, ω = dx/y.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticClass {
    pub r: RatPoly,
    pub s: RatPoly,
}

impl EllipticClass {
    pub fn new(r: RatPoly, s: RatPoly) -> Self {
        EllipticClass { r, s }
    }
}

/// Result of reducing to c0·[ω] + c1·[xω], with the exact primitive
/// T + U·y certifying input − (c0 + c1x)ω = d(T + Uy).
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedElliptic {
    pub c0: Rational,
    pub c1: Rational,
    pub cert_t: RatPoly,
    pub cert_u: RatPoly,
}

impl ReducedElliptic {
    pub fn from_coords(c0: Rational, c1: Rational) -> Self {
        ReducedElliptic {
            c0,
            c1,
            cert_t: RatPoly::zero(),
            cert_u: RatPoly::zero(),
        }
    }
}

/// Reduce (R + Sy)ω to the basis {ω, xω}.
///
/// The S·y·ω part equals S·dx and is killed by T = ∫S. The R part drops
/// degree two at a time through d(x^r y) = ((4r+6)x^{r+2} − a(r+½)x^r −
/// b·r·x^{r−1})·ω.
pub fn reduce_elliptic(e: &EllipticCurveQ, cls: &EllipticClass) -> ReducedElliptic {
    let cert_t = cls.s.antiderivative();
    let mut r = cls.r.clone();
    let mut cert_u = RatPoly::zero();
    while let Some(deg) = r.degree() {
        if deg < 2 {
            break;
        }
        let m = deg - 2; // exponent of the certificate monomial x^m y
        let c = r.leading().unwrap().clone();
        let denom = Rational::from(4 * m as i64 + 6);
        let scale = Rational::from(&c / &denom);
        cert_u = cert_u.add(&Poly::monomial(scale.clone(), m));
        // replace c·x^(m+2) by c·(a(m+1/2)x^m + b·m·x^(m-1))/(4m+6)
        let mut repl = Poly::monomial(
            Rational::from(&scale * e.a()) * Rational::from((2 * m as i64 + 1, 2)),
            m,
        );
        if m >= 1 {
            repl = repl.add(&Poly::monomial(
                Rational::from(&scale * e.b()) * Rational::from(m as i64),
                m - 1,
            ));
        }
        r = r.sub(&Poly::monomial(c, deg)).add(&repl);
    }
    ReducedElliptic {
        c0: r.get(0),
        c1: r.get(1),
        cert_t,
        cert_u,
    }
}

/// Local data at the point at infinity: x = z⁻²g(z), y = z⁻³h(z) in the
/// canonical coordinate z = 2x/y, normalized to g(0) = 1, h(0) = 2 (whence
/// h = 2g identically and the curve equation reads 4g²(g−1) = az⁴g + bz⁶).
#[derive(Clone, Debug)]
pub struct InfinitySeries {
    pub g: RatSeries,
    pub h: RatSeries,
    pub order: i64,
}

/// Expand the curve at infinity through z-order `order` (≥ 3). Each new
/// coefficient of g appears linearly, so the solve is a fixed-point
/// iteration gaining four orders per pass.
pub fn expand_at_infinity(e: &EllipticCurveQ, order: i64) -> InfinitySeries {
    assert!(order >= 3, "expansion order must be at least 3");
    let w = order + 1; // working order
    let one = RatSeries::constant(Rational::from(1), w);
    let az4 = RatSeries::from_laurent(&crate::laurent::Laurent::monomial(e.a().clone(), 4), w);
    let bz6 = RatSeries::from_laurent(&crate::laurent::Laurent::monomial(e.b().clone(), 6), w);
    let quarter = Rational::from((1, 4));
    let mut u = RatSeries::zero_through(0, w);
    let passes = (w / 4 + 2) as usize;
    for _ in 0..passes {
        let g = one.add(&u);
        let num = az4.mul(&g).add(&bz6).truncate_to(w);
        let den_inv = g
            .mul(&g)
            .truncate_to(w)
            .inverse()
            .expect("unit leading term");
        u = num.mul(&den_inv).scale(&quarter).truncate_to(w);
    }
    let g = one.add(&u).truncate_to(order);
    let h = g.scale(&Rational::from(2));
    InfinitySeries { g, h, order }
}

impl InfinitySeries {
    /// x(z) = z⁻² g(z).
    pub fn x(&self) -> RatSeries {
        self.g.shift(-2)
    }

    /// y(z) = z⁻³ h(z).
    pub fn y(&self) -> RatSeries {
        self.h.shift(-3)
    }

    /// dx/dz as a series.
    pub fn dx(&self) -> RatSeries {
        self.x().derivative()
    }
}

/// A 1-form (N(x) + M(x)·y)/f(x)^m · dx on the curve minus the zeros of y.
#[derive(Clone, Debug)]
pub struct CurveForm {
    pub n: RatPoly,
    pub m: RatPoly,
    pub denom_pow: u32,
}

impl CurveForm {
    pub fn new(n: RatPoly, m: RatPoly, denom_pow: u32) -> Self {
        CurveForm { n, m, denom_pow }
    }

    /// dx/y.
    pub fn omega() -> Self {
        CurveForm::new(RatPoly::zero(), RatPoly::one(), 1)
    }

    /// x·dx/y.
    pub fn eta() -> Self {
        CurveForm::new(RatPoly::zero(), RatPoly::x(), 1)
    }

    fn pole_order_estimate(&self) -> i64 {
        let dn = self.n.degree().map_or(0, |d| 2 * d as i64);
        let dm = self.m.degree().map_or(0, |d| 2 * d as i64 + 3);
        dn.max(dm) + 3 + 6 * self.denom_pow as i64
    }

    /// Expand the coefficient of dz at infinity through the series order.
    fn dz_series(&self, inf: &InfinitySeries) -> Result<RatSeries> {
        let x = inf.x();
        let y = inf.y();
        let dx = inf.dx();
        let mut num = eval_poly_at(&self.n, &x, inf.order);
        num = num.add(&eval_poly_at(&self.m, &x, inf.order).mul(&y));
        let mut out = num.mul(&dx);
        if self.denom_pow > 0 {
            // f(x) = y² on the curve
            let f_inv = y.mul(&y).inverse()?;
            for _ in 0..self.denom_pow {
                out = out.mul(&f_inv);
            }
        }
        Ok(out)
    }
}

fn eval_poly_at(p: &RatPoly, x: &RatSeries, order: i64) -> RatSeries {
    let mut acc = RatSeries::constant(Rational::new(), order + 2 * p.coeffs().len() as i64);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x);
        acc = acc.add(&RatSeries::constant(c.clone(), x.order() + 2));
    }
    acc
}

/// Residue at the point at infinity: the z⁻¹ coefficient of the local
/// expansion. Starts at a degree-based order and doubles on demand.
pub fn residue_at_infinity(e: &EllipticCurveQ, form: &CurveForm) -> Result<Rational> {
    let mut order = form
        .pole_order_estimate()
        .max(6)
        .max(4 + 6 * form.denom_pow as i64);
    for _ in 0..6 {
        let inf = expand_at_infinity(e, order);
        match form.dz_series(&inf).and_then(|s| s.get(-1)) {
            Ok(c) => return Ok(c),
            Err(Error::OrderTooSmall { .. }) => {
                order *= 2;
            }
            Err(err) => return Err(err),
        }
    }
    Err(Error::OrderTooSmall {
        have: order,
        need: -1,
    })
}

/// Cup product of two reduced classes via Res_O((∫u)·v). The z⁻¹ term of u
/// vanishes (second kind), so the primitive is again a Laurent series;
/// bilinear and antisymmetric.
pub fn cup_product_elliptic(
    e: &EllipticCurveQ,
    u: &ReducedElliptic,
    v: &ReducedElliptic,
) -> Result<Rational> {
    let mut order = 8i64;
    for _ in 0..6 {
        let inf = expand_at_infinity(e, order);
        let attempt = (|| -> Result<Rational> {
            let omega = inf.dx().mul(&inf.y().inverse()?);
            let x = inf.x();
            let build = |c0: &Rational, c1: &Rational| -> RatSeries {
                let coeff = RatSeries::constant(c0.clone(), order + 8).add(&x.scale(c1));
                coeff.mul(&omega)
            };
            let us = build(&u.c0, &u.c1);
            let vs = build(&v.c0, &v.c1);
            let primitive = us.antiderivative()?;
            primitive.mul(&vs).get(-1)
        })();
        match attempt {
            Ok(c) => return Ok(c),
            Err(Error::OrderTooSmall { .. }) => order *= 2,
            Err(err) => return Err(err),
        }
    }
    Err(Error::OrderTooSmall {
        have: order,
        need: -1,
    })
}
