//! Human-style polynomials such as `u^4v^4+7u^3v^3+13u^2v^2+7uv+1` or `t^6+4t^4+4t^2+1`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use hl_core::uvpoly::{TPoly, UVPoly, Q};
use num_traits::{One, Signed, Zero};

use crate::uvparse::{parse_rational, PolyParseError};

/// Exponents of `u`, `v`, `t` in one monomial.
pub type Exps = (u32, u32, u32);

/// Parses a sum of monomials `[coef]var^k var^k ...` in the variables `u`, `v`, `t`.
pub fn parse_pretty(s: &str) -> Result<BTreeMap<Exps, Q>, PolyParseError> {
    let err = |col: usize, msg: String| PolyParseError { col, msg };
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err(0, "empty polynomial".into()));
    }
    let bytes = s.as_bytes();
    let mut out: BTreeMap<Exps, Q> = BTreeMap::new();
    let mut i = 0;
    while i < bytes.len() {
        let start = i;
        let mut sign = Q::one();
        if bytes[i] == b'+' || bytes[i] == b'-' {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        } else if i != 0 {
            return Err(err(i, "expected `+` or `-`".into()));
        }
        let cstart = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let coef = if i > cstart { parse_rational(&s[cstart..i], cstart)? } else { Q::one() };
        let mut e = (0, 0, 0);
        let mut any_var = false;
        while i < bytes.len() && matches!(bytes[i], b'u' | b'v' | b't') {
            let var = bytes[i];
            i += 1;
            let mut k = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let ks = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                k = s[ks..i].parse().map_err(|_| err(ks, "bad exponent".into()))?;
            }
            match var {
                b'u' => e.0 += k,
                b'v' => e.1 += k,
                _ => e.2 += k,
            }
            any_var = true;
        }
        if i == cstart && !any_var {
            return Err(err(start, format!("empty term in `{s}`")));
        }
        let entry = out.entry(e).or_insert_with(Q::zero);
        *entry += sign * coef;
        if entry.is_zero() {
            out.remove(&e);
        }
    }
    Ok(out)
}

pub fn pretty_to_uv(m: &BTreeMap<Exps, Q>) -> Option<UVPoly> {
    let mut p = UVPoly::zero();
    for (&(a, b, t), c) in m {
        if t != 0 {
            return None;
        }
        p.add_term(a, b, c.clone());
    }
    Some(p)
}

pub fn pretty_to_t(m: &BTreeMap<Exps, Q>) -> Option<TPoly> {
    let mut p = TPoly::zero();
    for (&(a, b, t), c) in m {
        if a != 0 || b != 0 {
            return None;
        }
        p.add_term(t, c.clone());
    }
    Some(p)
}

fn push_coef(out: &mut String, c: &Q, first: bool, is_unit_monomial: bool) {
    let neg = c.is_negative();
    if first {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    if !a.is_one() || is_unit_monomial {
        write!(out, "{a}").unwrap();
    }
}

fn var_pow(out: &mut String, var: char, k: u32) {
    match k {
        0 => {}
        1 => out.push(var),
        _ => write!(out, "{var}^{k}").unwrap(),
    }
}

/// Descending by total degree, then by the power of `u`.
pub fn pretty_uv(p: &UVPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by_key(|(&(a, b), _)| std::cmp::Reverse((a + b, a)));
    let mut out = String::new();
    for (i, (&(a, b), c)) in terms.into_iter().enumerate() {
        push_coef(&mut out, c, i == 0, a == 0 && b == 0);
        var_pow(&mut out, 'u', a);
        var_pow(&mut out, 'v', b);
    }
    out
}

pub fn pretty_t(p: &TPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (&k, c)) in p.terms().rev().enumerate() {
        push_coef(&mut out, c, i == 0, k == 0);
        var_pow(&mut out, 't', k);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hl_core::uvpoly::q;

    #[test]
    fn parses_table_style() {
        let m = parse_pretty("u^4v^4 + 7u^3v^3 + 13u^2v^2 + 7uv + 1").unwrap();
        let p = pretty_to_uv(&m).unwrap();
        assert_eq!(p.coeff(2, 2), q(13));
        assert_eq!(p.coeff(1, 1), q(7));
        assert_eq!(pretty_uv(&p), "u^4v^4 + 7u^3v^3 + 13u^2v^2 + 7uv + 1");
        let m = parse_pretty("-u^11-v^11+2").unwrap();
        assert_eq!(m[&(11, 0, 0)], q(-1));
        let t = pretty_to_t(&parse_pretty("t^6+4t^4+4t^2+1").unwrap()).unwrap();
        assert_eq!(pretty_t(&t), "t^6 + 4t^4 + 4t^2 + 1");
        assert_eq!(pretty_t(&pretty_to_t(&parse_pretty("-3").unwrap()).unwrap()), "-3");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_pretty("").is_err());
        assert!(parse_pretty("u^x").is_err());
        assert!(parse_pretty("2u 3v").is_err());
        assert!(parse_pretty("+").is_err());
    }
}
