//! High-precision special functions and lattice-theoretic quantities.

pub mod bessel;
pub mod eisenstein;
pub mod elliptic;
pub mod euler;
pub mod gamma;
pub mod hyp;
pub mod mzv;
pub mod zeta;

pub use bessel::{bessel, BesselKind};
pub use eisenstein::{eisenstein, nome};
pub use elliptic::{
    elliptic_period_data, elliptic_periods, quasi_periods, real_period_by_quadrature, wp, wp_prime,
    wzeta, EllipticPeriodData, Lattice,
};
pub use euler::{euler_gamma, EulerGammaMethod};
pub use gamma::{beta_fn, gamma_fn, BetaMethod};
pub use hyp::{hyp2f1, hyp2f1_euler};
pub use mzv::mzv;
pub use zeta::{bernoulli, zeta_fn, zeta_real};
