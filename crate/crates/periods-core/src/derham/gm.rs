//! H¹ of the punctured affine line: ℚ[dx/x], everything else exact.

use crate::laurent::RatLaurent;
use crate::num::Rational;

/// Class of `form`·dx in H¹(G_m) = ℚ[dx/x]: the coefficient of x⁻¹,
/// together with the Laurent antiderivative of the rest as certificate.
pub fn reduce_gm(form: &RatLaurent) -> (Rational, RatLaurent) {
    let residue = form.get(-1);
    let rest = form.sub(&RatLaurent::monomial(residue.clone(), -1));
    let cert = rest
        .antiderivative()
        .expect("x^-1 term was removed, antiderivative exists");
    (residue, cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn spec_examples() {
        // dx/x → 1 (the basis class)
        let (c, cert) = reduce_gm(&RatLaurent::monomial(q(1, 1), -1));
        assert_eq!(c, q(1, 1));
        assert!(cert.is_zero());

        // x³dx is exact
        let (c, cert) = reduce_gm(&RatLaurent::monomial(q(1, 1), 3));
        assert_eq!(c, q(0, 1));
        assert_eq!(cert, RatLaurent::monomial(q(1, 4), 4));

        // (2/x + 5x)dx → 2 with certificate 5x²/2
        let form = RatLaurent::from_coeffs(-1, vec![q(2, 1), q(0, 1), q(5, 1)]);
        let (c, cert) = reduce_gm(&form);
        assert_eq!(c, q(2, 1));
        assert_eq!(cert, RatLaurent::monomial(q(5, 2), 2));
    }

    #[test]
    fn certificate_reproduces_input() {
        let form = RatLaurent::from_coeffs(
            -4,
            vec![q(3, 2), q(-1, 1), q(0, 1), q(7, 5), q(2, 1), q(1, 3)],
        );
        let (c, cert) = reduce_gm(&form);
        let rebuilt = cert.derivative().add(&RatLaurent::monomial(c, -1));
        assert_eq!(rebuilt, form);
    }
}
