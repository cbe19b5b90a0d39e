//! Parser for the textual polynomial form `rat*u^a*v^b+...`.

use std::str::FromStr;

use hl_core::uvpoly::{UVPoly, Q};
use num_bigint::BigInt;

/// A parse failure at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {col}: {msg}")]
pub struct PolyParseError {
    pub col: usize,
    pub msg: String,
}

fn err(col: usize, msg: impl Into<String>) -> PolyParseError {
    PolyParseError { col, msg: msg.into() }
}

pub fn parse_rational(s: &str, col: usize) -> Result<Q, PolyParseError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let valid_int = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(err(col, format!("bad integer `{num}`")));
    }
    let n = BigInt::from_str(num).map_err(|e| err(col, e.to_string()))?;
    let d = match den {
        None => BigInt::from(1),
        Some(d) => {
            if !valid_int(d, false) {
                return Err(err(col, format!("bad denominator `{d}`")));
            }
            let d = BigInt::from_str(d).map_err(|e| err(col, e.to_string()))?;
            if d == BigInt::from(0) {
                return Err(err(col, "zero denominator"));
            }
            d
        }
    };
    Ok(Q::new(n, d))
}

fn parse_power(s: &str, var: char, col: usize) -> Result<u32, PolyParseError> {
    let rest = s
        .strip_prefix(var)
        .and_then(|r| r.strip_prefix('^'))
        .ok_or_else(|| err(col, format!("expected `{var}^<int>`, found `{s}`")))?;
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(col, format!("bad exponent `{rest}`")));
    }
    rest.parse().map_err(|_| err(col, format!("exponent out of range `{rest}`")))
}

/// Parses `0` or `term(+term)*` with `term := rat*u^a*v^b`.
pub fn parse_uvpoly(s: &str) -> Result<UVPoly, PolyParseError> {
    if s == "0" {
        return Ok(UVPoly::zero());
    }
    if s.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut out = UVPoly::zero();
    let mut col = 0;
    for term in s.split('+') {
        let pieces: Vec<&str> = term.split('*').collect();
        if pieces.len() != 3 {
            return Err(err(col, format!("expected `rat*u^a*v^b`, found `{term}`")));
        }
        let c = parse_rational(pieces[0], col)?;
        let a = parse_power(pieces[1], 'u', col + pieces[0].len() + 1)?;
        let b = parse_power(pieces[2], 'v', col + pieces[0].len() + pieces[1].len() + 2)?;
        out.add_term(a, b, c);
        col += term.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hl_core::uvpoly::qf;

    #[test]
    fn round_trip() {
        let p = parse_uvpoly("1*u^1*v^1+1/2*u^0*v^3+-2*u^0*v^0").unwrap();
        assert_eq!(p.coeff(0, 3), qf(1, 2));
        assert_eq!(p.coeff(0, 0), qf(-2, 1));
        assert_eq!(p.to_string(), "1*u^1*v^1+1/2*u^0*v^3+-2*u^0*v^0");
        assert_eq!(parse_uvpoly("0").unwrap(), UVPoly::zero());
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_uvpoly("").is_err());
        assert!(parse_uvpoly("1*u^1").is_err());
        assert!(parse_uvpoly("1*v^1*u^1").is_err());
        assert!(parse_uvpoly("1/0*u^0*v^0").is_err());
        assert!(parse_uvpoly("x*u^0*v^0").is_err());
        let e = parse_uvpoly("1*u^0*v^0+2*u^q*v^0").unwrap_err();
        assert_eq!(e.col, 12);
    }
}
