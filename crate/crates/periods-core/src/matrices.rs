//! Assembly of the named period matrices, with the structural and
//! determinant checks that make them useful as test fixtures.

use rug::ops::Pow;

use crate::error::{Error, Result};
use crate::linalg::{complex_det, rational_det};
use crate::num::{pi, pow10, real_to_decimal, working_bits, Complex, Rational, Real};
use crate::poly::RatPoly;
use crate::quad::{integrate_real, Endpoint};
use crate::roots::poly_roots;
use crate::special::{beta_fn, gamma_fn, BetaMethod};

/// Labeled matrix of period values at uniform precision.
#[derive(Clone, Debug)]
pub struct PeriodMatrix {
    pub name: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub entries: Vec<Vec<Complex>>,
    pub digits: u32,
}

impl PeriodMatrix {
    pub fn det(&self) -> Complex {
        complex_det(&self.entries)
    }

    pub fn is_square(&self) -> bool {
        self.entries.iter().all(|r| r.len() == self.entries.len())
    }

    pub fn entry(&self, i: usize, j: usize) -> &Complex {
        &self.entries[i][j]
    }
}

/// Outcome of one named identity check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    /// Measured magnitude of the defect (0 for exact checks that pass).
    pub defect: Real,
    pub tolerance: Real,
    pub elapsed_s: f64,
    /// Diagnostic on failure or skip.
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn defect_str(&self) -> String {
        real_to_decimal(&self.defect, 3)
    }

    pub fn tolerance_str(&self) -> String {
        real_to_decimal(&self.tolerance, 3)
    }
}

/// Exact discriminant of a rational polynomial via the Sylvester resultant:
/// disc(f) = (−1)^(d(d−1)/2)·Res(f, f′)/lc(f).
pub fn discriminant(f: &RatPoly) -> Result<Rational> {
    let d = f
        .degree()
        .filter(|&d| d >= 1)
        .ok_or_else(|| Error::domain("discriminant needs degree ≥ 1"))?;
    if d == 1 {
        return Ok(Rational::from(1));
    }
    let df = f.derivative();
    let res = resultant(f, &df);
    let lc = f.leading().unwrap().clone();
    let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(Rational::from(&res / &lc) * Rational::from(sign))
}

/// Resultant by the Sylvester matrix determinant (exact).
fn resultant(f: &RatPoly, g: &RatPoly) -> Rational {
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    let size = m + n;
    let mut rows = vec![vec![Rational::new(); size]; size];
    for i in 0..n {
        for k in 0..=m {
            rows[i][i + k] = f.get(m - k);
        }
    }
    for i in 0..m {
        for k in 0..=n {
            rows[n + i][i + k] = g.get(n - k);
        }
    }
    rational_det(&rows)
}

/// Degree-0 period matrix of ℚ[x]/(f): the Vandermonde (αᵢ^j) over the
/// complex roots, sorted by (Re, Im); det² equals disc(f).
pub fn vandermonde_matrix(f: &RatPoly, digits: u32) -> Result<PeriodMatrix> {
    let d = f
        .degree()
        .filter(|&d| (1..=8).contains(&d))
        .ok_or_else(|| Error::domain("vandermonde: need 1 ≤ deg f ≤ 8"))?;
    crate::derham::numberfield_h0_basis(f)?; // irreducibility gate
    let bits = working_bits(digits);
    let coeffs: Vec<Complex> = f
        .coeffs()
        .iter()
        .map(|c| Complex::from_rational(c, bits))
        .collect();
    let roots = poly_roots(&coeffs, digits)?;
    let entries: Vec<Vec<Complex>> = roots
        .iter()
        .map(|alpha| {
            let mut row = Vec::with_capacity(d);
            let mut p = Complex::with_val(bits, 1);
            for _ in 0..d {
                row.push(p.clone());
                p = &p * alpha;
            }
            row
        })
        .collect();
    let m = PeriodMatrix {
        name: format!("vandermonde({f})"),
        row_labels: (1..=d).map(|i| format!("alpha_{i}")).collect(),
        col_labels: (0..d).map(|j| format!("x^{j}")).collect(),
        entries,
        digits,
    };
    // det² must match the exact discriminant
    let det = m.det();
    let disc = discriminant(f)?;
    let det2 = &det * &det;
    let gap = (&det2 - &Complex::from_rational(&disc, bits)).abs();
    if !(gap < pow10(8 - digits as i64)) {
        return Err(Error::NoConvergence {
            context: "vandermonde det² vs discriminant".into(),
            best: det2.to_decimal(20),
            gap: format!("{:.3e}", gap.to_f64()),
        });
    }
    Ok(m)
}

/// Period matrix of (G_m, {1, q}): rows σ₀ (path 1→q), σ₁ (loop);
/// columns dx/(q−1), dx/x. The log entry is cross-checked by quadrature.
pub fn log_period_matrix(q: &Rational, digits: u32) -> Result<PeriodMatrix> {
    if !(*q > 1u32) {
        return Err(Error::domain("log matrix needs q > 1"));
    }
    let bits = working_bits(digits);
    let qr = Real::with_val(bits, q);
    let logq = Real::with_val(bits, qr.clone().ln());
    // quadrature cross-check of ∫₁^q dx/x
    let by_quad = integrate_real(
        |n| Real::with_val(bits, n.x.clone().recip()),
        Endpoint::Finite(Real::with_val(bits, 1)),
        Endpoint::Finite(qr.clone()),
        digits,
    )?;
    let gap = Real::with_val(bits, &logq - &by_quad).abs();
    if !(gap < pow10(5 - digits as i64)) {
        return Err(Error::NoConvergence {
            context: "log(q) vs quadrature".into(),
            best: real_to_decimal(&logq, 20),
            gap: format!("{:.3e}", gap.to_f64()),
        });
    }
    let two_pi_i = Complex::from_parts(Real::new(bits), pi(digits) << 1);
    Ok(PeriodMatrix {
        name: format!("log_pairing(q={q})"),
        row_labels: vec!["sigma0".into(), "sigma1".into()],
        col_labels: vec!["dx/(q-1)".into(), "dx/x".into()],
        entries: vec![
            vec![Complex::with_val(bits, 1), Complex::from_real(logq)],
            vec![Complex::new(bits), two_pi_i],
        ],
        digits,
    })
}

/// Li₂(α) by the series Σ αⁿ/n² for rational 0 < α < 1.
pub fn dilog_series(alpha: &Rational, digits: u32) -> Result<Real> {
    if !(*alpha > 0u32 && *alpha < 1u32) {
        return Err(Error::domain("dilog series route needs 0 < α < 1"));
    }
    let bits = working_bits(digits);
    let a = Real::with_val(bits, alpha);
    let eps = pow10(-(digits as i64) - 10);
    let mut pow = Real::with_val(bits, 1);
    let mut acc = Real::new(bits);
    for n in 1u32..1_000_000 {
        pow *= &a;
        let term = Real::with_val(bits, &pow / &Real::with_val(bits, n).square());
        acc += &term;
        if term < eps {
            break;
        }
    }
    Ok(acc)
}

/// Li₂(α) as the 2D integral ∬ α dxdy/(1−αxy), iterated quadrature.
pub fn dilog_double_integral(alpha: &Rational, digits: u32) -> Result<Real> {
    let bits = working_bits(digits);
    let a = Real::with_val(bits, alpha);
    let inner_digits = digits + 3;
    integrate_real(
        |nx| {
            let ax = Real::with_val(bits, &a * &nx.x);
            integrate_real(
                move |ny| {
                    let den = Real::with_val(bits, 1u32) - Real::with_val(bits, &ax * &ny.x);
                    Real::with_val(bits, den).recip()
                },
                Endpoint::Finite(Real::new(bits)),
                Endpoint::Finite(Real::with_val(bits, 1)),
                inner_digits,
            )
            .unwrap_or_else(|_| Real::with_val(bits, rug::float::Special::Nan))
        },
        Endpoint::Finite(Real::new(bits)),
        Endpoint::Finite(Real::with_val(bits, 1)),
        digits,
    )
    .map(|v| Real::with_val(bits, &v * &a))
}

/// 3×3 relative period matrix of the dilogarithm geometry at rational
/// 0 < α < 1: rows [0,1]², σ, T; columns dx∧dy, αdx∧dy/(1−αxy)²,
/// αdx∧dy/(1−αxy). Li₂ enters by series and by double integral (must agree
/// within 10^(3−digits)) and the −log(1−α) entry is cross-checked against
/// the squared-denominator quadrature.
pub fn dilog_period_matrix(alpha: &Rational, digits: u32) -> Result<PeriodMatrix> {
    if digits > 25 {
        return Err(Error::domain("dilog matrix is capped at 25 digits"));
    }
    if !(*alpha > 0u32 && *alpha < 1u32) {
        return Err(Error::domain("dilog matrix needs 0 < α < 1"));
    }
    let bits = working_bits(digits);
    let li2 = dilog_series(alpha, digits)?;
    let li2_quad = dilog_double_integral(alpha, digits)?;
    let gap = Real::with_val(bits, &li2 - &li2_quad).abs();
    if !(gap < pow10(3 - digits as i64)) {
        return Err(Error::NoConvergence {
            context: "Li₂ series vs double integral".into(),
            best: real_to_decimal(&li2, 20),
            gap: format!("{:.3e}", gap.to_f64()),
        });
    }
    let a = Real::with_val(bits, alpha);
    let one_minus = Real::with_val(bits, Real::with_val(bits, 1u32) - &a);
    let minus_log = -one_minus.clone().ln();
    // cross-check −log(1−α) = α∬ dxdy/(1−αxy)²
    let by_quad = {
        let inner_digits = digits + 3;
        let av = a.clone();
        integrate_real(
            |nx| {
                let ax = Real::with_val(bits, &av * &nx.x);
                integrate_real(
                    move |ny| {
                        let den = Real::with_val(bits, 1u32) - Real::with_val(bits, &ax * &ny.x);
                        Real::with_val(bits, den).square().recip()
                    },
                    Endpoint::Finite(Real::new(bits)),
                    Endpoint::Finite(Real::with_val(bits, 1)),
                    inner_digits,
                )
                .unwrap_or_else(|_| Real::with_val(bits, rug::float::Special::Nan))
            },
            Endpoint::Finite(Real::new(bits)),
            Endpoint::Finite(Real::with_val(bits, 1)),
            digits,
        )
        .map(|v| Real::with_val(bits, &v * &a))?
    };
    let gap2 = Real::with_val(bits, &minus_log - &by_quad).abs();
    if !(gap2 < pow10(3 - digits as i64)) {
        return Err(Error::NoConvergence {
            context: "−log(1−α) vs squared-denominator quadrature".into(),
            best: real_to_decimal(&minus_log, 20),
            gap: format!("{:.3e}", gap2.to_f64()),
        });
    }
    let two_pi_i = Complex::from_parts(Real::new(bits), pi(digits) << 1);
    let log_alpha = Complex::from_real(Real::with_val(bits, a.clone().ln()));
    let zero = || Complex::new(bits);
    Ok(PeriodMatrix {
        name: format!("dilog_pairing(alpha={alpha})"),
        row_labels: vec!["square".into(), "sigma".into(), "tube".into()],
        col_labels: vec![
            "dx^dy".into(),
            "a dx^dy/(1-axy)^2".into(),
            "a dx^dy/(1-axy)".into(),
        ],
        entries: vec![
            vec![
                Complex::with_val(bits, 1),
                Complex::from_real(minus_log),
                Complex::from_real(li2),
            ],
            vec![zero(), two_pi_i.clone(), &two_pi_i * &log_alpha],
            vec![zero(), zero(), &two_pi_i * &two_pi_i],
        ],
        digits,
    })
}

/// [[ω₁, η₁], [ω₂, η₂]] plus the measured Legendre defect
/// |ω₁η₂ − ω₂η₁ − 2πi|.
pub fn elliptic_period_matrix(
    e: &crate::derham::EllipticCurveQ,
    digits: u32,
) -> Result<(PeriodMatrix, Real)> {
    let data = crate::special::elliptic_period_data(e, digits)?;
    let bits = working_bits(digits);
    let two_pi_i = Complex::from_parts(Real::new(bits), pi(digits) << 1);
    let lhs = &(&data.lattice.omega1 * &data.eta2) - &(&data.lattice.omega2 * &data.eta1);
    let defect = (&lhs - &two_pi_i).abs();
    let m = PeriodMatrix {
        name: format!("elliptic_periods(g2={}, g3={})", e.a(), e.b()),
        row_labels: vec!["sigma1".into(), "sigma2".into()],
        col_labels: vec!["dx/y".into(), "x dx/y".into()],
        entries: vec![
            vec![data.lattice.omega1.clone(), data.eta1.clone()],
            vec![data.lattice.omega2.clone(), data.eta2.clone()],
        ],
        digits,
    };
    Ok((m, defect))
}

/// Exponential period matrix of (A¹, xⁿ): P_ij = (ζ^(ij) − 1)/n · Γ(j/n)
/// for 1 ≤ i, j ≤ n−1, ζ = e^(2πi/n).
pub fn gamma_twisted_matrix(n: u32, digits: u32) -> Result<PeriodMatrix> {
    if !(2..=8).contains(&n) {
        return Err(Error::domain("gamma twisted matrix needs 2 ≤ n ≤ 8"));
    }
    let bits = working_bits(digits);
    let zeta = root_of_unity(n, 1, digits);
    let nn = Real::with_val(bits, n);
    let mut gammas = Vec::with_capacity(n as usize - 1);
    for j in 1..n {
        let arg = Complex::from_rational(&Rational::from((j, n)), bits);
        gammas.push(gamma_fn(&arg, digits)?);
    }
    let mut entries = Vec::with_capacity(n as usize - 1);
    for i in 1..n {
        let mut row = Vec::with_capacity(n as usize - 1);
        for j in 1..n {
            let zij = pow_c(&zeta, (i as u64 * j as u64) % n as u64, bits);
            let factor = (&zij - &Complex::with_val(bits, 1)).scale_real(&nn.clone().recip());
            row.push(&factor * &gammas[(j - 1) as usize]);
        }
        entries.push(row);
    }
    Ok(PeriodMatrix {
        name: format!("gamma_twisted(n={n})"),
        row_labels: (1..n).map(|i| format!("sigma_{i}")).collect(),
        col_labels: (1..n).map(|j| format!("x^{}dx", j - 1)).collect(),
        entries,
        digits,
    })
}

/// Closed form the twisted determinant must match:
/// n^(1/2−n)·(2π)^((n−1)/2)·V with V = det(ζ^(ij))_{0≤i,j≤n−1}
/// = ∏_{i<j}(ζ^j − ζ^i), the cyclotomic Vandermonde.
pub fn gamma_twisted_det_formula(n: u32, digits: u32) -> Complex {
    let bits = working_bits(digits);
    let zeta = root_of_unity(n, 1, digits);
    let mut v = Complex::with_val(bits, 1);
    for i in 0..n {
        for j in (i + 1)..n {
            let d = &pow_c(&zeta, j as u64, bits) - &pow_c(&zeta, i as u64, bits);
            v = &v * &d;
        }
    }
    let two_pi: Real = pi(digits) << 1;
    let nf = Real::with_val(bits, n);
    let n_pow: Real = Real::with_val(bits, nf.clone().sqrt()) / Real::with_val(bits, nf.pow(n));
    let tp_pow = Real::with_val(bits, two_pi.pow(n - 1)).sqrt();
    v.scale_real(&Real::with_val(bits, &n_pow * &tp_pow))
}

fn root_of_unity(n: u32, k: u32, digits: u32) -> Complex {
    let bits = working_bits(digits);
    let ang =
        Real::with_val(bits, pi(digits) << 1) * Real::with_val(bits, k) / Real::with_val(bits, n);
    let (s, c) = Real::with_val(bits, ang).sin_cos(Real::new(bits));
    Complex::from_parts(c, s)
}

fn pow_c(z: &Complex, e: u64, bits: u32) -> Complex {
    let mut acc = Complex::with_val(bits, 1);
    for _ in 0..e {
        acc = &acc * z;
    }
    acc
}

/// [[2πi·I₀(2), −2πi·I₀′(2)], [2K₀(2), −2K₀′(2)]]; det = 2πi.
pub fn bessel_period_matrix(digits: u32) -> Result<PeriodMatrix> {
    use crate::special::{bessel, BesselKind};
    let bits = working_bits(digits);
    let z = Real::with_val(bits, 2);
    let i0 = bessel(BesselKind::I0, &z, digits)?;
    let i0p = bessel(BesselKind::I0Prime, &z, digits)?;
    let k0 = bessel(BesselKind::K0, &z, digits)?;
    let k0p = bessel(BesselKind::K0Prime, &z, digits)?;
    let two_pi_i = Complex::from_parts(Real::new(bits), pi(digits) << 1);
    Ok(PeriodMatrix {
        name: "bessel_pairing(f=x+1/x)".into(),
        row_labels: vec!["sigma".into(), "R>0".into()],
        col_labels: vec!["dx/x".into(), "dx".into()],
        entries: vec![
            vec![&two_pi_i * &i0, -(&two_pi_i * &i0p)],
            vec![k0.scale_i64(2), k0p.scale_i64(-2)],
        ],
        digits,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FermatKind {
    /// r+s < d: no pole.
    First,
    /// r+s > d: pole with zero residue.
    Second,
    /// r+s = d: nonzero residue, value an algebraic multiple of 2πi.
    Third,
}

/// Period of ω_{r,s} over the Fermat loop κ:
/// (1−ζ^r)(1−ζ^s)/d · B(r/d, s/d) with ζ = e^(2πi/d).
pub fn fermat_period(d: u32, r: u32, s: u32, digits: u32) -> Result<(Complex, FermatKind)> {
    if d < 2 || r < 1 || s < 1 || r > d - 1 || s > d - 1 {
        return Err(Error::domain("fermat_period needs d ≥ 2, 1 ≤ r,s ≤ d−1"));
    }
    let bits = working_bits(digits);
    let zeta = root_of_unity(d, 1, digits);
    let one = Complex::with_val(bits, 1);
    let fr = &one - &pow_c(&zeta, r as u64, bits);
    let fs = &one - &pow_c(&zeta, s as u64, bits);
    let b = beta_fn(
        &Complex::from_rational(&Rational::from((r, d)), bits),
        &Complex::from_rational(&Rational::from((s, d)), bits),
        digits,
        BetaMethod::Gamma,
    )?;
    let value = (&(&fr * &fs) * &b).scale_real(&Real::with_val(bits, d).recip());
    let kind = if r + s < d {
        FermatKind::First
    } else if r + s > d {
        FermatKind::Second
    } else {
        FermatKind::Third
    };
    Ok((value, kind))
}

/// The third-kind closed form −(ξ^r + ξ^s)/d·2πi with ξ = e^(πi/d),
/// valid when r + s = d.
pub fn fermat_third_kind_form(d: u32, r: u32, s: u32, digits: u32) -> Result<Complex> {
    if r + s != d {
        return Err(Error::domain("third-kind form needs r + s = d"));
    }
    let bits = working_bits(digits);
    let xi = root_of_unity(2 * d, 1, digits);
    let sum = &pow_c(&xi, r as u64, bits) + &pow_c(&xi, s as u64, bits);
    let two_pi_i = Complex::from_parts(Real::new(bits), pi(digits) << 1);
    Ok((-(&sum * &two_pi_i)).scale_real(&Real::with_val(bits, d).recip()))
}

/// Pairing of the winding-n relative cycle σ₀ + n·σ₁ with dx/x:
/// log q + n·2πi (monodromy of the logarithm, represented by explicit
/// offsets rather than branch tracking).
pub fn log_monodromy(q: &Rational, winding: i64, digits: u32) -> Result<Complex> {
    let m = log_period_matrix(q, digits)?;
    let base = m.entry(0, 1);
    let loop_part = m.entry(1, 1).scale_i64(winding);
    Ok(base + &loop_part)
}
