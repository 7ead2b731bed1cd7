//! Symbolic algebraic de Rham cohomology for a family of example spaces,
//! high-precision special functions, and the period matrices and identity
//! checks built on top of them.
//!
//! Layers, bottom up:
//!
//! * [`num`]: exact rationals and arbitrary-precision real/complex scalars;
//! * [`poly`], [`laurent`], [`series`]: dense (Laurent) polynomial and
//!   truncated-series algebra, generic over the coefficient scalar;
//! * [`quad`], [`roots`], [`agm`]: double-exponential quadrature,
//!   simultaneous polynomial root refinement, AGM iteration;
//! * [`derham`]: canonical bases and reduction-to-basis with exactness
//!   certificates for the example spaces (number fields, A¹, G_m, P¹,
//!   affine elliptic curves, relative and twisted variants);
//! * [`special`]: Γ, B, ζ, multiple zeta values, ₂F₁, elliptic period
//!   lattices, Weierstrass ℘/ζ, Eisenstein series, Bessel I₀/K₀, Euler γ;
//! * [`matrices`]: named period matrices with structural checks;
//! * [`verify`]: the registry of identity checks behind the CLI.

// `!(a < b)` rather than `a >= b` throughout the numeric layer: a NaN
// defect must land on the failure side of every tolerance gate.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod num;

pub mod laurent;
pub mod poly;
pub mod series;

pub mod agm;
pub mod linalg;
pub mod quad;
pub mod roots;

pub mod derham;
pub mod matrices;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::{Laurent, RatLaurent};
pub use num::{Complex, Integer, Rational, Real};
pub use poly::{ext_gcd, Poly, RatPoly};
pub use series::{RatSeries, TruncSeries};
