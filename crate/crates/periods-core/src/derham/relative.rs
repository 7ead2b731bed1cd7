//! Relative cohomology of (G_m, {1, q}): the cohomological home of log(q).
//!
//! A relative 1-cochain is a Laurent form on G_m together with a value at
//! each of the two marked points. Coboundaries are a(h) = (h'dx, (h(1),
//! h(q))) and the pairing against a relative cycle σ is ∫_σ ω − Σ_{∂σ} g,
//! the sign fixed so that coboundaries pair to zero. The canonical basis is
//! {[dx/(q−1)], [dx/x]}.

use crate::error::{Error, Result};
use crate::laurent::{Laurent, RatLaurent};
use crate::num::Rational;

/// A relative 1-cochain: form·dx plus prescribed values at 1 and q.
#[derive(Clone, Debug, PartialEq)]
pub struct RelativeLogClass {
    pub form: RatLaurent,
    pub at_one: Rational,
    pub at_q: Rational,
}

impl RelativeLogClass {
    pub fn new(form: RatLaurent, at_one: Rational, at_q: Rational) -> Self {
        RelativeLogClass { form, at_one, at_q }
    }

    pub fn from_form(form: RatLaurent) -> Self {
        RelativeLogClass::new(form, Rational::new(), Rational::new())
    }
}

/// Reduction of a relative class to α·[dx/(q−1)] + β·[dx/x], with the
/// coboundary certificate h.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedRelativeLog {
    pub alpha: Rational,
    pub beta: Rational,
    pub cert: RatLaurent,
}

/// Evaluate a Laurent polynomial at a nonzero rational point.
fn eval_laurent(l: &RatLaurent, x: &Rational) -> Rational {
    let mut acc = Rational::new();
    for (k, c) in l.terms() {
        let mut p = Rational::from(1);
        if k >= 0 {
            for _ in 0..k {
                p *= x;
            }
        } else {
            let inv = Rational::from(x.clone().recip());
            for _ in 0..(-k) {
                p *= &inv;
            }
        }
        acc += Rational::from(c * &p);
    }
    acc
}

/// Reduce modulo coboundaries: β is the x⁻¹ coefficient; every other
/// monomial is cleared with a(x^{k+1}/(k+1)); the leftover point values are
/// collapsed with a(1) and a((x−q)/(q−1)).
pub fn reduce_relative_log(q: &Rational, cls: &RelativeLogClass) -> Result<ReducedRelativeLog> {
    if !(*q > 1u32) {
        return Err(Error::domain("relative log space needs rational q > 1"));
    }
    let beta = cls.form.get(-1);
    // clear monomials other than x^-1
    let mut h = RatLaurent::zero();
    for (k, c) in cls.form.terms() {
        if k == -1 || c == &Rational::new() {
            continue;
        }
        h = h.add(&Laurent::monomial(
            Rational::from(c / &Rational::from(k + 1)),
            k + 1,
        ));
    }
    let u1 = cls.at_one.clone() - eval_laurent(&h, &Rational::from(1));
    let v1 = cls.at_q.clone() - eval_laurent(&h, q);
    // collapse (0,(u1,v1)): subtract u1·a(1), then trade (0,(0,w)) for
    // −w·[dx/(q−1)] + w·a((x−1)/(q−1))
    h = h.add(&Laurent::monomial(u1.clone(), 0));
    let w = v1 - &u1;
    let qm1 = Rational::from(q - &Rational::from(1));
    let lin = RatLaurent::from_coeffs(
        0,
        vec![-Rational::from(&w / &qm1), Rational::from(&w / &qm1)],
    );
    h = h.add(&lin);
    Ok(ReducedRelativeLog {
        alpha: -w,
        beta,
        cert: h,
    })
}
