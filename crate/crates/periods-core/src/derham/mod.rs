//! Algebraic de Rham cohomology of the example spaces, by explicit
//! polynomial reduction.
//!
//! Every reduction returns, besides the coordinates of the class in the
//! canonical basis, an explicit primitive certifying exactness of the
//! difference; the certificates are exact rational objects that tests verify
//! by symbolic differentiation.

mod elliptic;
mod gm;
mod numberfield;
mod projective;
mod relative;
mod twisted;

pub use elliptic::{
    cup_product_elliptic, expand_at_infinity, reduce_elliptic, residue_at_infinity, CurveForm,
    EllipticClass, EllipticCurveQ, InfinitySeries, ReducedElliptic,
};
pub use gm::reduce_gm;
pub use numberfield::{numberfield_h0_basis, NumberFieldH0};
pub use projective::{verify_p1_truncated, P1Report};
pub use relative::{reduce_relative_log, ReducedRelativeLog, RelativeLogClass};
pub use twisted::{reduce_twisted, twisted_differential, ReducedTwisted, Twist, TwistedClass};
