//! Elliptic period lattices by AGM and the Weierstrass functions by
//! q-series.
//!
//! Quasi-periods follow the convention η(λ) = ζ(z) − ζ(z+λ) (so that
//! η₁ = −G₂(τ)/ω₁ and the Legendre relation reads ω₁η₂ − ω₂η₁ = +2πi);
//! η₂ comes from the Weierstrass-zeta q-series seeded by η₁, never from the
//! Legendre relation, which stays available as a free end-to-end check.

use crate::agm::agm;
use crate::derham::EllipticCurveQ;
use crate::error::{Error, Result};
use crate::num::{pi, pow10, working_bits, Complex, Real};
use crate::quad::{integrate_real, Endpoint};
use crate::roots::poly_roots;
use crate::special::eisenstein::{eisenstein, nome};

/// Λ = ℤω₁ ⊕ ℤω₂ with τ = ω₂/ω₁ in the upper half-plane.
#[derive(Clone, Debug)]
pub struct Lattice {
    pub omega1: Complex,
    pub omega2: Complex,
    pub tau: Complex,
}

impl Lattice {
    pub fn new(omega1: Complex, omega2: Complex) -> Result<Self> {
        let tau = &omega2 / &omega1;
        if !(tau.im.clone() > 0u32) {
            return Err(Error::domain("need Im(ω₂/ω₁) > 0"));
        }
        Ok(Lattice {
            omega1,
            omega2,
            tau,
        })
    }
}

/// Period lattice plus quasi-periods and the real roots e₁ > e₂ > e₃.
#[derive(Clone, Debug)]
pub struct EllipticPeriodData {
    pub lattice: Lattice,
    pub eta1: Complex,
    pub eta2: Complex,
    pub roots: [Real; 3],
}

/// Real period of y² = 4x³ − ax − b by quadrature: 2∫_{e₁}^∞ dx/√f(x).
/// Serves as the independent cross-check of the AGM route.
pub fn real_period_by_quadrature(e: &EllipticCurveQ, digits: u32) -> Result<Real> {
    let (_, roots) = curve_roots(e, digits)?;
    let bits = working_bits(digits);
    let [e1, e2, e3] = roots;
    let v = integrate_real(
        |n| {
            // f(x) = 4(x−e1)(x−e2)(x−e3); x−e1 through the node distance
            let d1 = n.left.as_ref().unwrap();
            let d2 = Real::with_val(bits, &n.x - &e2);
            let d3 = Real::with_val(bits, &n.x - &e3);
            let prod = Real::with_val(bits, Real::with_val(bits, &d2 * &d3) * d1) * 4u32;
            Real::with_val(bits, prod).sqrt().recip()
        },
        Endpoint::Finite(e1.clone()),
        Endpoint::PosInf,
        digits,
    )?;
    Ok(v << 1)
}

fn curve_roots(e: &EllipticCurveQ, digits: u32) -> Result<(u32, [Real; 3])> {
    if !(e.discriminant() > 0u32) {
        return Err(Error::unsupported(
            "elliptic periods need Δ = a³ − 27b² > 0 (three real roots)",
        ));
    }
    let bits = working_bits(digits);
    let f = e.f();
    let coeffs: Vec<Complex> = f
        .coeffs()
        .iter()
        .map(|c| Complex::from_rational(c, bits))
        .collect();
    let rts = poly_roots(&coeffs, digits + 5)?;
    let imag_tol = pow10(-(digits as i64) / 2);
    let mut reals: Vec<Real> = Vec::with_capacity(3);
    for r in &rts {
        if !(r.im.clone().abs() < imag_tol) {
            return Err(Error::unsupported("complex roots: unsupported domain"));
        }
        reals.push(r.re.clone());
    }
    reals.sort_by(|a, b| b.partial_cmp(a).unwrap());
    Ok((bits, [reals[0].clone(), reals[1].clone(), reals[2].clone()]))
}

/// ω₁ = π/agm(√(e₁−e₃), √(e₁−e₂)) (real), ω₂ = iπ/agm(√(e₁−e₃), √(e₂−e₃))
/// (purely imaginary); the AGM value is cross-validated against the
/// quadrature route at modest precision on every call.
pub fn elliptic_periods(e: &EllipticCurveQ, digits: u32) -> Result<(Lattice, [Real; 3])> {
    let (bits, roots) = curve_roots(e, digits)?;
    let [e1, e2, e3] = roots.clone();
    let s13 = Real::with_val(bits, &e1 - &e3).sqrt();
    let s12 = Real::with_val(bits, &e1 - &e2).sqrt();
    let s23 = Real::with_val(bits, &e2 - &e3).sqrt();
    let p = pi(digits);
    let w1 = Real::with_val(bits, &p / &agm(&s13, &s12, digits)?);
    let w2_im = Real::with_val(bits, &p / &agm(&s13, &s23, digits)?);

    let check_digits = digits.min(16);
    let by_quad = real_period_by_quadrature(e, check_digits)?;
    let gap = Real::with_val(bits, &w1 - &by_quad).abs();
    if !(gap < pow10(-(check_digits as i64) + 6)) {
        return Err(Error::NoConvergence {
            context: "AGM and quadrature periods disagree".into(),
            best: format!("{:?}", w1.to_f64()),
            gap: format!("{:.3e}", gap.to_f64()),
        });
    }

    let omega1 = Complex::from_real(w1);
    let omega2 = Complex::from_parts(Real::new(bits), w2_im);
    let lattice = Lattice::new(omega1, omega2)?;
    Ok((lattice, roots))
}

/// Σ-part of the ζ q-series: G₂(τ)·w + π·cot(πw) + 4π·Σ q^k/(1−q^k)·sin(2πkw),
/// i.e. ζ(w; ℤ⊕ℤτ).
fn zeta_tau(w: &Complex, tau: &Complex, g2: &Complex, digits: u32) -> Complex {
    let bits = working_bits(digits);
    let p = pi(digits);
    let q = nome(tau, digits);
    let pw = w.scale_real(&p);
    let mut acc = &(g2 * w) + &pw.cot().scale_real(&p);
    // e^(2πiw) and its inverse, advanced multiplicatively
    let e2w = pw.scale_i64(2).mul_i().exp();
    let e2w_inv = e2w.recip();
    let eps = pow10(-(digits as i64) - 12);
    let four_pi = Real::with_val(bits, &p * &Real::with_val(bits, 4));
    let mut qk = Complex::with_val(bits, 1);
    let mut ek = Complex::with_val(bits, 1);
    let mut ek_inv = Complex::with_val(bits, 1);
    let two_i = Complex::from_parts(Real::new(bits), Real::with_val(bits, 2));
    let mut small = 0u32;
    for _ in 1..50_000 {
        qk = &qk * &q;
        ek = &ek * &e2w;
        ek_inv = &ek_inv * &e2w_inv;
        let sin_k = &(&ek - &ek_inv) / &two_i;
        let frac = &qk / &(&Complex::with_val(bits, 1) - &qk);
        let term = (&frac * &sin_k).scale_real(&four_pi);
        acc = &acc + &term;
        if term.abs() < eps {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
    }
    acc
}

/// ℘(w; ℤ⊕ℤτ) = −G₂ + π²/sin²(πw) − 8π²·Σ k·q^k/(1−q^k)·cos(2πkw),
/// and its w-derivative when `derivative` is set.
fn wp_tau(w: &Complex, tau: &Complex, g2: &Complex, digits: u32, derivative: bool) -> Complex {
    let bits = working_bits(digits);
    let p = pi(digits);
    let q = nome(tau, digits);
    let pw = w.scale_real(&p);
    let sin = pw.sin();
    let p2 = Real::with_val(bits, p.clone().square());
    let mut acc = if derivative {
        // −2π³ cos(πw)/sin³(πw)
        let p3 = Real::with_val(bits, &p2 * &p);
        let s3 = &(&sin * &sin) * &sin;
        (&pw.cos() / &s3).scale_real(&Real::with_val(bits, &p3 * &Real::with_val(bits, -2)))
    } else {
        &(&Complex::from_real(p2.clone()) / &(&sin * &sin)) - g2
    };
    let e2w = pw.scale_i64(2).mul_i().exp();
    let e2w_inv = e2w.recip();
    let eps = pow10(-(digits as i64) - 12);
    let mut qk = Complex::with_val(bits, 1);
    let mut ek = Complex::with_val(bits, 1);
    let mut ek_inv = Complex::with_val(bits, 1);
    let two = Complex::with_val(bits, 2);
    let two_i = Complex::from_parts(Real::new(bits), Real::with_val(bits, 2));
    let mut small = 0u32;
    for k in 1i64..50_000 {
        qk = &qk * &q;
        ek = &ek * &e2w;
        ek_inv = &ek_inv * &e2w_inv;
        let frac = &qk / &(&Complex::with_val(bits, 1) - &qk);
        let term = if derivative {
            // +16π³ k² q^k/(1−q^k) sin(2πkw)
            let sin_k = &(&ek - &ek_inv) / &two_i;
            let p3 = Real::with_val(bits, &p2 * &p);
            (&frac * &sin_k).scale_i64(16 * k * k).scale_real(&p3)
        } else {
            // −8π² k q^k/(1−q^k) cos(2πkw)
            let cos_k = &(&ek + &ek_inv) / &two;
            (&frac * &cos_k).scale_i64(-8 * k).scale_real(&p2)
        };
        acc = &acc + &term;
        if term.abs() < eps {
            small += 1;
            if small >= 2 {
                break;
            }
        } else {
            small = 0;
        }
    }
    acc
}

/// Write z = αω₁ + βω₂ and peel off the nearest lattice point; returns the
/// reduced point and the integer multiples removed.
/// Points more than ~10¹² cells out are rejected: the lattice multiples
/// would no longer survive the integer conversion.
fn reduce_to_fundamental(z: &Complex, lat: &Lattice, bits: u32) -> Result<(Complex, i64, i64)> {
    let (w1, w2) = (&lat.omega1, &lat.omega2);
    let det = Real::with_val(bits, &w1.re * &w2.im) - Real::with_val(bits, &w1.im * &w2.re);
    let alpha =
        (Real::with_val(bits, &z.re * &w2.im) - Real::with_val(bits, &z.im * &w2.re)) / &det;
    let beta = (Real::with_val(bits, &z.im * &w1.re) - Real::with_val(bits, &z.re * &w1.im)) / &det;
    let (alpha, beta) = (Real::with_val(bits, alpha), Real::with_val(bits, beta));
    if alpha.clone().abs() > 1e12 || beta.clone().abs() > 1e12 {
        return Err(Error::domain(
            "z lies too many lattice cells from the origin",
        ));
    }
    let m = alpha.round().to_f64() as i64;
    let n = beta.round().to_f64() as i64;
    let shift = &w1.scale_i64(m) + &w2.scale_i64(n);
    Ok((z - &shift, m, n))
}

fn guard_tau(lat: &Lattice) -> Result<()> {
    if !(lat.tau.im.clone() > 0.05f64) {
        return Err(Error::Conditioning("Im(τ) < 0.05".into()));
    }
    Ok(())
}

/// Weierstrass ζ (the standard odd function with ζ' = −℘ and residue-1
/// poles on Λ).
pub fn wzeta(z: &Complex, lat: &Lattice, digits: u32) -> Result<Complex> {
    guard_tau(lat)?;
    let bits = working_bits(digits);
    let g2 = eisenstein(2, &lat.tau, digits)?;
    let (z0, m, n) = reduce_to_fundamental(z, lat, bits)?;
    if z0.abs() < Real::with_val(bits, lat.omega1.abs() * &pow10(-(digits as i64))) {
        return Err(Error::domain("ζ pole: z lies on the lattice"));
    }
    let w = &z0 / &lat.omega1;
    let mut acc = &zeta_tau(&w, &lat.tau, &g2, digits) / &lat.omega1;
    if m != 0 {
        let eta1_std = &(&g2 / &lat.omega1).scale_i64(m);
        acc = &acc + eta1_std;
    }
    if n != 0 {
        let half = &lat.omega2 / &Complex::with_val(bits, 2);
        let wh = &half / &lat.omega1;
        let eta2_std = (&zeta_tau(&wh, &lat.tau, &g2, digits) / &lat.omega1).scale_i64(2);
        acc = &acc + &eta2_std.scale_i64(n);
    }
    Ok(acc)
}

/// Weierstrass ℘.
pub fn wp(z: &Complex, lat: &Lattice, digits: u32) -> Result<Complex> {
    wp_inner(z, lat, digits, false)
}

/// Weierstrass ℘′.
pub fn wp_prime(z: &Complex, lat: &Lattice, digits: u32) -> Result<Complex> {
    wp_inner(z, lat, digits, true)
}

fn wp_inner(z: &Complex, lat: &Lattice, digits: u32, derivative: bool) -> Result<Complex> {
    guard_tau(lat)?;
    let bits = working_bits(digits);
    let g2 = eisenstein(2, &lat.tau, digits)?;
    let (z0, _, _) = reduce_to_fundamental(z, lat, bits)?;
    if z0.abs() < Real::with_val(bits, lat.omega1.abs() * &pow10(-(digits as i64))) {
        return Err(Error::domain("℘ pole: z lies on the lattice"));
    }
    let w = &z0 / &lat.omega1;
    let v = wp_tau(&w, &lat.tau, &g2, digits, derivative);
    let w1_sq = &lat.omega1 * &lat.omega1;
    Ok(if derivative {
        &v / &(&w1_sq * &lat.omega1)
    } else {
        &v / &w1_sq
    })
}

/// Quasi-periods (η₁, η₂) in the convention η(λ) = ζ(z) − ζ(z+λ):
/// η₁ = −G₂(τ)/ω₁ and
/// η₂ = −2ζ(ω₂/2), satisfying ω₁η₂ − ω₂η₁ = 2πi (checked elsewhere, never
/// assumed here).
pub fn quasi_periods(lat: &Lattice, digits: u32) -> Result<(Complex, Complex)> {
    guard_tau(lat)?;
    let g2 = eisenstein(2, &lat.tau, digits)?;
    let eta1 = -(&g2 / &lat.omega1);
    let bits = working_bits(digits);
    let half = &lat.omega2 / &Complex::with_val(bits, 2);
    let wh = &half / &lat.omega1;
    let zeta_half = &zeta_tau(&wh, &lat.tau, &g2, digits) / &lat.omega1;
    let eta2 = zeta_half.scale_i64(-2);
    Ok((eta1, eta2))
}

/// Full period package for a curve with Δ > 0.
pub fn elliptic_period_data(e: &EllipticCurveQ, digits: u32) -> Result<EllipticPeriodData> {
    let (lattice, roots) = elliptic_periods(e, digits)?;
    let (eta1, eta2) = quasi_periods(&lattice, digits)?;
    Ok(EllipticPeriodData {
        lattice,
        eta1,
        eta2,
        roots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::Rational;

    fn curve(a: i64, b: i64) -> EllipticCurveQ {
        EllipticCurveQ::new(Rational::from(a), Rational::from(b)).unwrap()
    }

    fn two_pi_i(digits: u32) -> Complex {
        Complex::from_parts(Real::new(working_bits(digits)), pi(digits) << 1)
    }

    #[test]
    fn lemniscatic_periods() {
        let digits = 50;
        let bits = working_bits(digits);
        let (lat, roots) = elliptic_periods(&curve(4, 0), digits).unwrap();
        assert!((roots[0].to_f64() - 1.0).abs() < 1e-40);
        assert!(roots[1].to_f64().abs() < 1e-40);
        let frozen = Real::with_val(
            bits,
            Real::parse("2.62205755429211981046483958989111941368275495143162316281682170380079058707041425023029553296142909344613575").unwrap(),
        );
        let d = Real::with_val(bits, &lat.omega1.re - &frozen).abs();
        assert!(d < pow10(-48), "omega1 defect {:.3e}", d.to_f64());
        // ω₂ = iω₁ on the square lattice
        let diff = (&lat.omega2 - &lat.omega1.mul_i()).abs();
        assert!(diff < pow10(-48));
    }

    #[test]
    fn generic_curve_agrees_with_quadrature() {
        let digits = 30;
        let e = curve(8, 1);
        let (lat, _) = elliptic_periods(&e, digits).unwrap();
        let by_quad = real_period_by_quadrature(&e, digits).unwrap();
        let d = Real::with_val(lat.omega1.re.prec(), &lat.omega1.re - &by_quad).abs();
        assert!(d < pow10(-(digits as i64) + 10));
    }

    #[test]
    fn legendre_relation_free_check() {
        // ω₁η₂ − ω₂η₁ = 2πi on both test curves, with η's from q-series only
        for (a, b, digits) in [(4i64, 0i64, 50u32), (8, 1, 50)] {
            let data = elliptic_period_data(&curve(a, b), digits).unwrap();
            let lhs = &(&data.lattice.omega1 * &data.eta2) - &(&data.lattice.omega2 * &data.eta1);
            let defect = (&lhs - &two_pi_i(digits)).abs();
            assert!(
                defect < pow10(-(digits as i64) + 10),
                "curve ({a},{b}): defect {:.3e}",
                defect.to_f64()
            );
        }
    }

    #[test]
    fn square_lattice_eta_rotation() {
        // on ω₂ = iω₁: η₂ = −i·η₁
        let digits = 40;
        let data = elliptic_period_data(&curve(4, 0), digits).unwrap();
        let expect = -data.eta1.mul_i();
        let d = (&data.eta2 - &expect).abs();
        assert!(d < pow10(-(digits as i64) + 10));
    }

    #[test]
    fn eta_additivity_via_wzeta() {
        // η(ω₁+ω₂) = η₁ + η₂ with η(λ) = ζ(z) − ζ(z+λ)
        let digits = 35;
        let bits = working_bits(digits);
        let data = elliptic_period_data(&curve(8, 1), digits).unwrap();
        let lat = &data.lattice;
        let z = &lat.omega1.scale_real(&Real::with_val(bits, 0.23f64))
            + &lat.omega2.scale_real(&Real::with_val(bits, 0.31f64));
        let lam = &lat.omega1 + &lat.omega2;
        let eta_lam = &wzeta(&z, lat, digits).unwrap() - &wzeta(&(&z + &lam), lat, digits).unwrap();
        let expect = &data.eta1 + &data.eta2;
        assert!((&eta_lam - &expect).abs() < pow10(-(digits as i64) + 10));
    }

    #[test]
    fn wp_differential_equation() {
        // (℘′)² = 4℘³ − a℘ − b at a generic point
        let digits = 40;
        let bits = working_bits(digits);
        let e = curve(8, 1);
        let (lat, _) = elliptic_periods(&e, digits).unwrap();
        let z = &lat.omega1.scale_real(&Real::with_val(bits, 0.31f64))
            + &lat.omega2.scale_real(&Real::with_val(bits, 0.17f64));
        let p = wp(&z, &lat, digits).unwrap();
        let dp = wp_prime(&z, &lat, digits).unwrap();
        let lhs = &dp * &dp;
        let rhs = &(&(&p * &p) * &p).scale_i64(4)
            - &(&p.scale_real(&Real::with_val(bits, 8)) + &Complex::with_val(bits, 1));
        assert!((&lhs - &rhs).abs() < pow10(-(digits as i64) + 8));
    }

    #[test]
    fn wp_half_period_is_largest_root() {
        let digits = 30;
        let bits = working_bits(digits);
        for (a, b) in [(4i64, 0i64), (8, 1)] {
            let (lat, roots) = elliptic_periods(&curve(a, b), digits).unwrap();
            let half = &lat.omega1 / &Complex::with_val(bits, 2);
            let v = wp(&half, &lat, digits).unwrap();
            let d = Real::with_val(bits, &v.re - &roots[0]).abs();
            assert!(d < pow10(-(digits as i64) + 8));
            assert!(v.im.clone().abs() < pow10(-(digits as i64) + 8));
        }
    }

    #[test]
    fn parity() {
        let digits = 30;
        let bits = working_bits(digits);
        let (lat, _) = elliptic_periods(&curve(8, 1), digits).unwrap();
        let z = &lat.omega1.scale_real(&Real::with_val(bits, 0.2f64))
            + &lat.omega2.scale_real(&Real::with_val(bits, 0.4f64));
        let mz = -&z;
        let p1 = wp(&z, &lat, digits).unwrap();
        let p2 = wp(&mz, &lat, digits).unwrap();
        assert!((&p1 - &p2).abs() < pow10(-(digits as i64) + 8));
        let z1 = wzeta(&z, &lat, digits).unwrap();
        let z2 = wzeta(&mz, &lat, digits).unwrap();
        assert!((&(&z1 + &z2)).abs() < pow10(-(digits as i64) + 8));
    }

    /// Truncated lattice-sum oracles in plain f64: the defining series of ℘
    /// and ζ over a symmetric box, with ±λ paired to kill cancellation.
    mod lattice_oracle {
        #[derive(Clone, Copy)]
        pub struct C64(pub f64, pub f64);
        impl C64 {
            pub fn add(self, o: C64) -> C64 {
                C64(self.0 + o.0, self.1 + o.1)
            }
            pub fn sub(self, o: C64) -> C64 {
                C64(self.0 - o.0, self.1 - o.1)
            }
            pub fn mul(self, o: C64) -> C64 {
                C64(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
            }
            pub fn div(self, o: C64) -> C64 {
                let n = o.0 * o.0 + o.1 * o.1;
                C64(
                    (self.0 * o.0 + self.1 * o.1) / n,
                    (self.1 * o.0 - self.0 * o.1) / n,
                )
            }
            pub fn scale(self, s: f64) -> C64 {
                C64(self.0 * s, self.1 * s)
            }
        }

        /// ℘(z) ≈ 1/z² + Σ_{±λ pairs} 2z²(3λ²−z²)/(λ²(z²−λ²)²)
        pub fn wp_sum(z: C64, w1: C64, w2: C64, m_box: i64) -> C64 {
            let z2 = z.mul(z);
            let mut acc = C64(1.0, 0.0).div(z2);
            for m in -m_box..=m_box {
                for n in 0..=m_box {
                    if n == 0 && m <= 0 {
                        continue; // pair representative: n > 0, or n = 0 ∧ m > 0
                    }
                    let lam = w1.scale(m as f64).add(w2.scale(n as f64));
                    let l2 = lam.mul(lam);
                    let d = z2.sub(l2);
                    let num = z2.mul(l2.scale(3.0).sub(z2)).scale(2.0);
                    acc = acc.add(num.div(l2.mul(d).mul(d)));
                }
            }
            acc
        }

        /// ζ(z) ≈ 1/z + Σ_{±λ pairs} 2z³/(λ²(z²−λ²))
        pub fn zeta_sum(z: C64, w1: C64, w2: C64, m_box: i64) -> C64 {
            let z2 = z.mul(z);
            let z3 = z2.mul(z);
            let mut acc = C64(1.0, 0.0).div(z);
            for m in -m_box..=m_box {
                for n in 0..=m_box {
                    if n == 0 && m <= 0 {
                        continue;
                    }
                    let lam = w1.scale(m as f64).add(w2.scale(n as f64));
                    let l2 = lam.mul(lam);
                    acc = acc.add(z3.scale(2.0).div(l2.mul(z2.sub(l2))));
                }
            }
            acc
        }
    }

    #[test]
    fn wp_against_lattice_sum_oracle() {
        use lattice_oracle::*;
        let digits = 12;
        let (lat, roots) = elliptic_periods(&curve(4, 0), digits).unwrap();
        let w1 = C64(lat.omega1.re.to_f64(), lat.omega1.im.to_f64());
        let w2 = C64(lat.omega2.re.to_f64(), lat.omega2.im.to_f64());
        // ℘(ω₁/2) = e₁
        let half = C64(w1.0 / 2.0, w1.1 / 2.0);
        let oracle = wp_sum(half, w1, w2, 500);
        assert!((oracle.0 - roots[0].to_f64()).abs() < 1e-4);
        let bits = working_bits(digits);
        let ours = wp(&(&lat.omega1 / &Complex::with_val(bits, 2)), &lat, digits).unwrap();
        assert!((ours.re.to_f64() - oracle.0).abs() < 1e-4);
    }

    #[test]
    fn eta2_against_zeta_lattice_sum_oracle() {
        use lattice_oracle::*;
        let digits = 15;
        let data = elliptic_period_data(&curve(4, 0), digits).unwrap();
        let lat = &data.lattice;
        let w1 = C64(lat.omega1.re.to_f64(), lat.omega1.im.to_f64());
        let w2 = C64(lat.omega2.re.to_f64(), lat.omega2.im.to_f64());
        // η₂ = −2ζ(ω₂/2)
        let half = C64(w2.0 / 2.0, w2.1 / 2.0);
        let oracle = zeta_sum(half, w1, w2, 2000).scale(-2.0);
        let d_re = (oracle.0 - data.eta2.re.to_f64()).abs();
        let d_im = (oracle.1 - data.eta2.im.to_f64()).abs();
        assert!(
            d_re < 1e-6 && d_im < 1e-6,
            "oracle ({},{})",
            oracle.0,
            oracle.1
        );
    }

    #[test]
    fn distant_points_are_rejected() {
        let digits = 20;
        let bits = working_bits(digits);
        let (lat, _) = elliptic_periods(&curve(4, 0), digits).unwrap();
        let far = lat.omega1.scale_real(&Real::with_val(bits, 1e18f64));
        assert!(wp(&far, &lat, digits).is_err());
    }

    #[test]
    fn unsupported_domains() {
        // Δ < 0: complex roots
        assert!(elliptic_periods(&curve(1, 1), 20).is_err());
        // pole at a lattice point
        let digits = 20;
        let (lat, _) = elliptic_periods(&curve(4, 0), digits).unwrap();
        assert!(wp(&lat.omega1, &lat, digits).is_err());
        assert!(wzeta(&Complex::new(working_bits(digits)), &lat, digits).is_err());
    }
}
