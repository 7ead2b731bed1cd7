//! Strict parser for the exact-rational form grammar used on the command
//! line: sums of terms like `3/2*x^2`, `- x`, `5`, `x^-1`. Integers,
//! fractions, monomials and +/− only; anything else is a parse error.

use periods_core::laurent::RatLaurent;
use periods_core::num::Rational;
use periods_core::poly::RatPoly;
use periods_core::Laurent;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "form parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

/// Parse a rational scalar: `7`, `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseError("empty rational".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n: periods_core::Integer = num
        .parse()
        .map_err(|_| ParseError(format!("bad integer '{num}'")))?;
    match den {
        None => Ok(Rational::from(n)),
        Some(d) => {
            let dv: periods_core::Integer = d
                .parse()
                .map_err(|_| ParseError(format!("bad integer '{d}'")))?;
            if dv == 0u32 {
                return Err(ParseError("zero denominator".into()));
            }
            Ok(Rational::from((n, dv)))
        }
    }
}

/// Parse a Laurent polynomial in x.
pub fn parse_laurent(s: &str) -> Result<RatLaurent, ParseError> {
    let mut out = RatLaurent::zero();
    for (coeff, deg) in parse_terms(s)? {
        out = out.add(&Laurent::monomial(coeff, deg));
    }
    Ok(out)
}

/// Parse an ordinary polynomial (negative exponents rejected).
pub fn parse_poly(s: &str) -> Result<RatPoly, ParseError> {
    let terms = parse_terms(s)?;
    if terms.iter().any(|(_, d)| *d < 0) {
        return Err(ParseError("negative exponent in a polynomial".into()));
    }
    let deg = terms.iter().map(|(_, d)| *d).max().unwrap_or(0) as usize;
    let mut coeffs = vec![Rational::new(); deg + 1];
    for (c, d) in terms {
        coeffs[d as usize] += c;
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

fn parse_terms(s: &str) -> Result<Vec<(Rational, i64)>, ParseError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(ParseError("empty form".into()));
    }
    let bytes = compact.as_bytes();
    let mut i = 0usize;
    let mut terms = Vec::new();
    let mut sign = 1i64;
    // optional leading sign
    if bytes[0] == b'+' || bytes[0] == b'-' {
        sign = if bytes[0] == b'-' { -1 } else { 1 };
        i = 1;
    }
    loop {
        let (coeff, deg, next) = parse_one_term(&compact, i)?;
        let signed = if sign < 0 { -coeff } else { coeff };
        terms.push((signed, deg));
        i = next;
        if i == compact.len() {
            break;
        }
        sign = match bytes[i] {
            b'+' => 1,
            b'-' => -1,
            c => {
                return Err(ParseError(format!(
                    "expected + or - at byte {i}, found '{}'",
                    c as char
                )))
            }
        };
        i += 1;
        if i == compact.len() {
            return Err(ParseError("dangling sign".into()));
        }
    }
    Ok(terms)
}

/// One term starting at byte `i`: returns (coefficient, degree, next index).
fn parse_one_term(s: &str, i: usize) -> Result<(Rational, i64, usize), ParseError> {
    let bytes = s.as_bytes();
    let mut j = i;
    // numeric part
    let num_start = j;
    while j < bytes.len() && bytes[j].is_ascii_digit() {
        j += 1;
    }
    let mut coeff = if j > num_start {
        let mut c = Rational::from(
            s[num_start..j]
                .parse::<periods_core::Integer>()
                .map_err(|_| ParseError("bad integer".into()))?,
        );
        if j < bytes.len() && bytes[j] == b'/' {
            let d_start = j + 1;
            let mut k = d_start;
            while k < bytes.len() && bytes[k].is_ascii_digit() {
                k += 1;
            }
            if k == d_start {
                return Err(ParseError("missing denominator".into()));
            }
            let den: periods_core::Integer = s[d_start..k]
                .parse()
                .map_err(|_| ParseError("bad denominator".into()))?;
            if den == 0u32 {
                return Err(ParseError("zero denominator".into()));
            }
            c /= Rational::from(den);
            j = k;
        }
        Some(c)
    } else {
        None
    };
    // optional '*' then x-part
    let mut deg = 0i64;
    let had_star = j < bytes.len() && bytes[j] == b'*';
    if had_star {
        j += 1;
    }
    if j < bytes.len() && bytes[j] == b'x' {
        if coeff.is_some() && !had_star {
            return Err(ParseError("missing '*' between coefficient and x".into()));
        }
        j += 1;
        deg = 1;
        if j < bytes.len() && bytes[j] == b'^' {
            j += 1;
            let e_start = j;
            if j < bytes.len() && (bytes[j] == b'-' || bytes[j] == b'+') {
                j += 1;
            }
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            deg = s[e_start..j]
                .parse::<i64>()
                .map_err(|_| ParseError("bad exponent".into()))?;
        }
        if coeff.is_none() {
            coeff = Some(Rational::from(1));
        }
    } else if had_star {
        return Err(ParseError("'*' not followed by x".into()));
    } else if coeff.is_none() {
        return Err(ParseError(format!("expected a term at byte {i}")));
    }
    Ok((coeff.unwrap(), deg, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_rational("4").unwrap(), q(4, 1));
        assert_eq!(parse_rational("-8/3").unwrap(), q(-8, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn polynomials() {
        let p = parse_poly("3/2*x^2 - x + 5").unwrap();
        assert_eq!(p.get(2), q(3, 2));
        assert_eq!(p.get(1), q(-1, 1));
        assert_eq!(p.get(0), q(5, 1));
        // round-trip with Display
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
        assert!(parse_poly("x^-1").is_err());
    }

    #[test]
    fn laurent_forms() {
        let l = parse_laurent("2*x^-1 + 5*x").unwrap();
        assert_eq!(l.get(-1), q(2, 1));
        assert_eq!(l.get(1), q(5, 1));
        assert_eq!(parse_laurent(&l.to_string()).unwrap(), l);
        assert_eq!(parse_laurent("x^-1").unwrap().get(-1), q(1, 1));
        assert_eq!(parse_laurent("-x").unwrap().get(1), q(-1, 1));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "3**x", "x^", "2x", "1 + ", "y", "3.5", "2 x"] {
            assert!(parse_laurent(bad).is_err(), "{bad:?} should fail");
        }
    }
}
