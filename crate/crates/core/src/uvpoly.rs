//! Exact polynomials in the Hodge variables `u`, `v`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational numbers.
pub type Q = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`.
pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial `Σ c_{a,b} u^a v^b` with rational coefficients; zero terms are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UVPoly {
    terms: BTreeMap<(u32, u32), Q>,
}

impl UVPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(q(n))
    }

    pub fn monomial(c: Q, a: u32, b: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    pub fn u() -> Self {
        Self::monomial(Q::one(), 1, 0)
    }

    pub fn v() -> Self {
        Self::monomial(Q::one(), 0, 1)
    }

    /// `(uv)^k`
    pub fn uv_pow(k: u32) -> Self {
        Self::monomial(Q::one(), k, k)
    }

    /// Builds `Σ c_k (uv)^k` from integer coefficients, lowest degree first.
    pub fn from_uv_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(k as u32, k as u32, q(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c u^a v^b`, pruning a cancelled term.
    pub fn add_term(&mut self, a: u32, b: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, a: u32, b: u32) -> Q {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn constant_term(&self) -> Q {
        self.coeff(0, 0)
    }

    /// Terms in ascending `(a, b)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(u32, u32), &Q)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UVPoly { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    /// Adds `c * other` in place.
    pub fn add_scaled(&mut self, other: &UVPoly, c: &Q) {
        for (&(a, b), v) in &other.terms {
            self.add_term(a, b, v * c);
        }
    }

    /// Adds `x * y` in place.
    pub fn add_product(&mut self, x: &UVPoly, y: &UVPoly) {
        for (&(a1, b1), c1) in &x.terms {
            for (&(a2, b2), c2) in &y.terms {
                self.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
    }

    /// The Adams substitution `u ↦ u^k`, `v ↦ v^k`.
    pub fn adams(&self, k: u32) -> Self {
        if k == 1 {
            return self.clone();
        }
        UVPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((a * k, b * k), c.clone())).collect() }
    }

    pub fn eval(&self, u0: &Q, v0: &Q) -> Q {
        let mut s = Q::zero();
        for (&(a, b), c) in &self.terms {
            s += c * pow_q(u0, a) * pow_q(v0, b);
        }
        s
    }

    /// Sum of coefficients; the value at `u = v = 1`.
    pub fn at_one(&self) -> Q {
        self.terms.values().fold(Q::zero(), |acc, c| acc + c)
    }

    /// Exchanges `u` and `v`.
    pub fn swap_uv(&self) -> Self {
        UVPoly { terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect() }
    }

    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|(a, b)| a == b)
    }

    /// Largest total degree `a + b`, or `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    /// Rewrites `c (uv)^a` as `c t^{2a}`.
    pub fn to_poincare(&self) -> Result<TPoly> {
        let mut t = TPoly::zero();
        for (&(a, b), c) in &self.terms {
            if a != b {
                return Err(Error::NotDiagonal { a, b });
            }
            t.add_term(2 * a, c.clone());
        }
        Ok(t)
    }

    /// Exact quotient `self / d`; fails if the remainder is nonzero.
    pub fn div_exact(&self, d: &UVPoly) -> Result<UVPoly> {
        let Some((&(da, db), dc)) = d.terms.iter().next_back() else {
            return Err(Error::NotDivisible(format!("{self} by zero")));
        };
        let mut rem = self.clone();
        let mut quot = UVPoly::zero();
        // Leading term in lexicographic order on (a, b).
        while let Some((&(ra, rb), rc)) = rem.terms.iter().next_back() {
            if ra < da || rb < db {
                return Err(Error::NotDivisible(format!("{self} by {d}")));
            }
            let c = rc / dc;
            let step = UVPoly::monomial(c, ra - da, rb - db);
            rem = &rem - &(&step * d);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    pub fn pow(&self, e: u32) -> UVPoly {
        let mut acc = UVPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The coefficient as a rational, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }
}

fn pow_q(x: &Q, e: u32) -> Q {
    let mut acc = Q::one();
    for _ in 0..e {
        acc *= x;
    }
    acc
}

impl fmt::Display for UVPoly {
    /// `c*u^a*v^b+...` with terms in descending `(a, b)` order; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{}*u^{a}*v^{b}", fmt_rat(c))?;
        }
        Ok(())
    }
}

impl fmt::Debug for UVPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `n` or `n/d` with a leading minus sign when negative.
pub fn fmt_rat(c: &Q) -> alloc::string::String {
    if c.is_integer() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Add for &UVPoly {
    type Output = UVPoly;
    fn add(self, rhs: &UVPoly) -> UVPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &UVPoly {
    type Output = UVPoly;
    fn sub(self, rhs: &UVPoly) -> UVPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &UVPoly {
    type Output = UVPoly;
    fn mul(self, rhs: &UVPoly) -> UVPoly {
        let mut out = UVPoly::zero();
        out.add_product(self, rhs);
        out
    }
}

impl Neg for &UVPoly {
    type Output = UVPoly;
    fn neg(self) -> UVPoly {
        UVPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl AddAssign<&UVPoly> for UVPoly {
    fn add_assign(&mut self, rhs: &UVPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, c.clone());
        }
    }
}

impl SubAssign<&UVPoly> for UVPoly {
    fn sub_assign(&mut self, rhs: &UVPoly) {
        for (&(a, b), c) in &rhs.terms {
            self.add_term(a, b, -c);
        }
    }
}

/// A polynomial in one variable `t`, produced by the `uv = t²` rewriting.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TPoly {
    terms: BTreeMap<u32, Q>,
}

impl TPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: &[(u32, i64)]) -> Self {
        let mut t = Self::zero();
        for &(e, c) in terms {
            t.add_term(e, q(c));
        }
        t
    }

    pub fn add_term(&mut self, e: u32, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coeff(&self, e: u32) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&u32, &Q)> {
        self.terms.iter()
    }

    /// True when `c_e = c_{d-e}` for the top degree `d`.
    pub fn is_palindromic(&self) -> bool {
        let Some(d) = self.degree() else { return true };
        let low = *self.terms.keys().next().unwrap();
        self.is_palindromic_about(d + low)
    }

    /// `[t^e] = [t^{s-e}]` for every `e`.
    pub fn is_palindromic_about(&self, s: u32) -> bool {
        self.terms.iter().all(|(&e, c)| e <= s && self.coeff(s - e) == *c)
    }
}

impl fmt::Display for TPoly {
    /// Descending powers in the paper-table style, e.g. `t^4+2t^2+1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { "-" } else { "+" })?;
            } else if neg {
                f.write_str("-")?;
            }
            let a = c.abs();
            let unit = a.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{}", fmt_rat(&a))?,
                (1, true) => f.write_str("t")?,
                (1, false) => write!(f, "{}t", fmt_rat(&a))?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{}t^{e}", fmt_rat(&a))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Collects polynomial coefficients of `(uv)^k`, lowest first; `None` if not diagonal.
pub fn diagonal_coeffs(p: &UVPoly) -> Option<Vec<Q>> {
    if !p.is_diagonal() {
        return None;
    }
    let top = p.terms().map(|(&(a, _), _)| a).max().unwrap_or(0);
    Some((0..=top).map(|k| p.coeff(k, k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn uv() -> UVPoly {
        UVPoly::uv_pow(1)
    }

    #[test]
    fn adams_examples() {
        let f = &uv() + &UVPoly::one();
        assert_eq!(f.adams(2), &UVPoly::uv_pow(2) + &UVPoly::one());
        let g = &UVPoly::monomial(q(1), 2, 0) - &UVPoly::monomial(q(2), 0, 1);
        assert_eq!(g.adams(3), &UVPoly::monomial(q(1), 6, 0) - &UVPoly::monomial(q(2), 0, 3));
        assert!(UVPoly::zero().adams(5).is_zero());
    }

    #[test]
    fn eval_examples() {
        let p = UVPoly::from_uv_coeffs(&[1, 7, 13, 7, 1]);
        assert_eq!(p.eval(&q(1), &q(1)), q(29));
        assert_eq!(p.eval(&q(0), &q(0)), q(1));
        let m04 = &uv() - &UVPoly::int(2);
        assert_eq!(m04.eval(&q(1), &q(1)), q(-1));
    }

    #[test]
    fn poincare_rewrite() {
        let p = UVPoly::from_uv_coeffs(&[1, 2, 1]);
        assert_eq!(p.to_poincare().unwrap().to_string(), "t^4+2t^2+1");
        assert_eq!(UVPoly::one().to_poincare().unwrap().to_string(), "1");
        let off = &UVPoly::u() + &UVPoly::v();
        assert!(matches!(off.to_poincare(), Err(Error::NotDiagonal { .. })));
    }

    #[test]
    fn display_grammar() {
        let p = &(&UVPoly::uv_pow(1) - &UVPoly::int(2)) + &UVPoly::monomial(qf(1, 2), 0, 3);
        assert_eq!(p.to_string(), "1*u^1*v^1+1/2*u^0*v^3+-2*u^0*v^0");
        assert_eq!(UVPoly::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let qq = uv();
        let d = &qq - &(&qq * &qq);
        let n = &(&qq.pow(3) - &qq) * &UVPoly::int(5);
        let quo = n.div_exact(&d).unwrap();
        // (q^3 - q) / (q - q^2) = -(1 + q)
        assert_eq!(quo, (&(&UVPoly::one() + &qq) * &UVPoly::int(-5)));
        assert!(UVPoly::one().div_exact(&d).is_err());
    }

    #[test]
    fn palindromic_t() {
        assert!(TPoly::from_terms(&[(0, 1), (2, 4), (4, 4), (6, 1)]).is_palindromic());
        assert!(TPoly::from_terms(&[(2, 1), (4, 1)]).is_palindromic());
        assert!(!TPoly::from_terms(&[(0, 1), (2, 2)]).is_palindromic());
    }
}
