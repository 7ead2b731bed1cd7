//! Property tests for the exact algebra layer: field axioms, Bézout
//! certificates, reduction linearity, and root-reconstruction bounds.

use periods_core::derham::{reduce_elliptic, EllipticClass, EllipticCurveQ};
use periods_core::num::{pow10, working_bits, Complex, Rational};
use periods_core::poly::{ext_gcd, Poly, RatPoly};
use periods_core::roots::poly_roots;
use periods_core::series::RatSeries;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::from((n, d)))
}

fn small_poly(max_deg: usize) -> impl Strategy<Value = RatPoly> {
    proptest::collection::vec(small_rational(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        // commutativity, associativity, distributivity, inverses, all exact
        prop_assert_eq!(Rational::from(&a + &b), Rational::from(&b + &a));
        prop_assert_eq!(Rational::from(&a * &b), Rational::from(&b * &a));
        let ab_c = Rational::from(&Rational::from(&a + &b) + &c);
        let a_bc = Rational::from(&a + &Rational::from(&b + &c));
        prop_assert_eq!(ab_c, a_bc);
        let left = Rational::from(&a * &Rational::from(&b + &c));
        let right = Rational::from(&Rational::from(&a * &b) + &Rational::from(&a * &c));
        prop_assert_eq!(left, right);
        prop_assert_eq!(Rational::from(&a + &Rational::from(-a.clone())), Rational::new());
        if a != 0u32 {
            prop_assert_eq!(Rational::from(&a * &Rational::from(a.clone().recip())), Rational::from(1));
        }
    }

    #[test]
    fn ext_gcd_bezout_certificate(f in small_poly(8), g in small_poly(8)) {
        prop_assume!(!(f.is_zero() && g.is_zero()));
        let (d, u, v) = ext_gcd(&f, &g).unwrap();
        // u·f + v·g − d = 0 exactly
        prop_assert_eq!(u.mul(&f).add(&v.mul(&g)), d.clone());
        // d divides both inputs exactly
        if !f.is_zero() {
            let (_, r) = f.div_rem(&d);
            prop_assert!(r.is_zero());
        }
        if !g.is_zero() {
            let (_, r) = g.div_rem(&d);
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn elliptic_reduction_is_linear_and_certified(
        r1 in small_poly(10), s1 in small_poly(9),
        r2 in small_poly(10), s2 in small_poly(9),
        a in small_rational(), b in small_rational(),
    ) {
        let e = EllipticCurveQ::new(Rational::from(8), Rational::from(1)).unwrap();
        let u = EllipticClass::new(r1, s1);
        let v = EllipticClass::new(r2, s2);
        let ru = reduce_elliptic(&e, &u);
        let rv = reduce_elliptic(&e, &v);
        let combo = EllipticClass::new(
            u.r.scale(&a).add(&v.r.scale(&b)),
            u.s.scale(&a).add(&v.s.scale(&b)),
        );
        let rc = reduce_elliptic(&e, &combo);
        prop_assert_eq!(rc.c0, Rational::from(&ru.c0 * &a) + Rational::from(&rv.c0 * &b));
        prop_assert_eq!(rc.c1, Rational::from(&ru.c1 * &a) + Rational::from(&rv.c1 * &b));
        // certificate reproduces u exactly under d(T + Uy)
        let f = e.f();
        let d_r = ru.cert_u.derivative().mul(&f)
            .add(&ru.cert_u.mul(&f.derivative()).scale(&Rational::from((1, 2))));
        let basis = Poly::from_coeffs(vec![ru.c0.clone(), ru.c1.clone()]);
        prop_assert_eq!(u.r.sub(&basis), d_r);
        prop_assert_eq!(u.s.clone(), ru.cert_t.derivative());
    }

    #[test]
    fn series_inverse_is_two_sided(coeffs in proptest::collection::vec(small_rational(), 1..8), shift in -3i64..=3) {
        let mut cs = coeffs;
        if cs[0] == 0u32 {
            cs[0] = Rational::from(1);
        }
        let order = shift + cs.len() as i64;
        let s = RatSeries::new(shift, cs);
        let inv = s.inverse().unwrap();
        let prod = s.mul(&inv);
        prop_assert_eq!(prod.get(0).unwrap(), Rational::from(1));
        for k in 1..prod.order() {
            prop_assert_eq!(prod.get(k).unwrap(), Rational::new());
        }
        let _ = order;
    }

    #[test]
    fn roots_rebuild_the_polynomial(coeffs in proptest::collection::vec(-9i64..=9, 3..=5)) {
        let mut cs = coeffs;
        if *cs.last().unwrap() == 0 {
            *cs.last_mut().unwrap() = 1;
        }
        // multiple roots hit the usual √ε accuracy floor; the coefficient
        // reconstruction bound applies to squarefree inputs
        let as_poly: RatPoly = Poly::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect());
        prop_assume!(as_poly.gcd(&as_poly.derivative()).degree() == Some(0));
        let digits = 30;
        let bits = working_bits(digits);
        let cpx: Vec<Complex> = cs.iter().map(|&c| Complex::with_val(bits, c)).collect();
        let roots = poly_roots(&cpx, digits).unwrap();
        prop_assert_eq!(roots.len(), cs.len() - 1);
        let mut rebuilt = Poly::from_coeffs(vec![cpx.last().unwrap().clone()]);
        for r in &roots {
            rebuilt = rebuilt.mul(&Poly::from_coeffs(vec![-r.clone(), Complex::with_val(bits, 1)]));
        }
        let bound = pow10(5 - digits as i64);
        for (k, c) in cpx.iter().enumerate() {
            let gap = (&rebuilt.get(k) - c).abs();
            prop_assert!(gap < bound, "coefficient {k} off by {:?}", gap.to_f64());
        }
    }
}
