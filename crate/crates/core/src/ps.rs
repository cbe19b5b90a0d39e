//! Truncated formal power series in one or two variables over `Q[u, v]`.
//!
//! Every value carries its truncation order; binary operations keep the
//! smaller of the two orders.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::factorial;
use crate::uvpoly::{q, UVPoly, Q};

/// `Σ_{n ≤ order} c_n y^n`.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalPS1 {
    var: String,
    coeffs: Vec<UVPoly>,
}

impl FormalPS1 {
    pub fn zero(var: &str, order: usize) -> Self {
        FormalPS1 { var: var.to_string(), coeffs: alloc::vec![UVPoly::zero(); order + 1] }
    }

    /// Builds a series from its first coefficients, padding with zeros up to `order`.
    pub fn from_coeffs(var: &str, mut coeffs: Vec<UVPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, UVPoly::zero());
        FormalPS1 { var: var.to_string(), coeffs }
    }

    pub fn from_fn(var: &str, order: usize, f: impl FnMut(usize) -> UVPoly) -> Self {
        FormalPS1 { var: var.to_string(), coeffs: (0..=order).map(f).collect() }
    }

    /// The series `y` itself.
    pub fn variable(var: &str, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = UVPoly::one();
        }
        s
    }

    pub fn constant(var: &str, c: UVPoly, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &UVPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[UVPoly] {
        &self.coeffs
    }

    /// `n! · [y^n]`, the exponential generating function coefficient.
    pub fn egf_coeff(&self, n: usize) -> UVPoly {
        self.coeffs[n].scale(&q(factorial(n) as i64))
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        FormalPS1 { var: self.var.clone(), coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn rename(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(&self.var, n, |i| &self.coeffs[i] + &other.coeffs[i])
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(&self.var, n, |i| &self.coeffs[i] - &other.coeffs[i])
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(&self.var, self.order(), |i| -&self.coeffs[i])
    }

    pub fn scale(&self, c: &UVPoly) -> Self {
        Self::from_fn(&self.var, self.order(), |i| &self.coeffs[i] * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = Self::zero(&self.var, n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                out.coeffs[i + j].add_product(&self.coeffs[i], &other.coeffs[j]);
            }
        }
        out
    }

    pub fn derivative(&self) -> Self {
        let n = self.order().saturating_sub(1);
        Self::from_fn(&self.var, n, |i| {
            self.coeffs.get(i + 1).map(|c| c.scale(&q(i as i64 + 1))).unwrap_or_default()
        })
    }

    /// `exp(f)`, requiring a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let mut e = Self::zero(&self.var, n);
        e.coeffs[0] = UVPoly::one();
        for m in 1..=n {
            let mut acc = UVPoly::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let t = &self.coeffs[k] * &e.coeffs[m - k];
                acc.add_scaled(&t, &q(k as i64));
            }
            e.coeffs[m] = acc.scale(&Q::new(1.into(), (m as i64).into()));
        }
        Ok(e)
    }

    /// `log(f)`, requiring constant term 1.
    pub fn log(&self) -> Result<Self> {
        if self.coeffs[0] != UVPoly::one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut l = Self::zero(&self.var, n);
        for m in 1..=n {
            let mut acc = UVPoly::zero();
            for k in 1..m {
                if l.coeffs[k].is_zero() {
                    continue;
                }
                let t = &l.coeffs[k] * &self.coeffs[m - k];
                acc.add_scaled(&t, &q(k as i64));
            }
            let mut c = self.coeffs[m].clone();
            c.add_scaled(&acc, &-Q::new(1.into(), (m as i64).into()));
            l.coeffs[m] = c;
        }
        Ok(l)
    }

    /// `self(inner(y))`, requiring `inner` to have a zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order().min(inner.order());
        let mut acc = Self::zero(&inner.var, n);
        for c in self.coeffs[..=n].iter().rev() {
            acc = acc.mul(&inner.truncate(n));
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// The compositional inverse `g` with `self(g(y)) = y`.
    ///
    /// The linear coefficient must be a nonzero constant.
    pub fn reversion(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let n = self.order();
        let lead = self.coeffs.get(1).and_then(|c| c.as_constant()).unwrap_or_else(Q::zero);
        if lead.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv = lead.recip();
        let mut g = Self::zero(&self.var, n);
        if n >= 1 {
            g.coeffs[1] = UVPoly::constant(inv.clone());
        }
        for m in 2..=n {
            let fg = self.truncate(m).compose(&g.truncate(m))?;
            let err = fg.coeffs[m].scale(&inv);
            g.coeffs[m] -= &err;
        }
        Ok(g)
    }

    /// Value of every coefficient at `u = v = 1`, as constant polynomials.
    pub fn at_one(&self) -> Self {
        Self::from_fn(&self.var, self.order(), |i| UVPoly::constant(self.coeffs[i].at_one()))
    }

    /// `log(1 + y)` truncated.
    pub fn log1p(var: &str, order: usize) -> Self {
        Self::from_fn(var, order, |n| {
            if n == 0 {
                UVPoly::zero()
            } else {
                let s = if n % 2 == 1 { 1 } else { -1 };
                UVPoly::constant(Q::new(s.into(), (n as i64).into()))
            }
        })
    }

    /// `e^{c y}` truncated.
    pub fn exp_scaled(var: &str, c: &UVPoly, order: usize) -> Self {
        let mut pw = UVPoly::one();
        Self::from_fn(var, order, |n| {
            let out = pw.scale(&Q::new(1.into(), (factorial(n) as i64).into()));
            pw = &pw * c;
            out
        })
    }
}

impl fmt::Display for FormalPS1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*{}^{n}", self.var)?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({}^{})", self.var, self.order() + 1)
    }
}

impl fmt::Debug for FormalPS1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Σ_{i+j ≤ order} c_{ij} x^i y^j`.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalPS2 {
    vars: (String, String),
    coeffs: BTreeMap<(u32, u32), UVPoly>,
    order: usize,
}

impl FormalPS2 {
    pub fn zero(x: &str, y: &str, order: usize) -> Self {
        FormalPS2 { vars: (x.to_string(), y.to_string()), coeffs: BTreeMap::new(), order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vars(&self) -> (&str, &str) {
        (&self.vars.0, &self.vars.1)
    }

    pub fn coeff(&self, i: u32, j: u32) -> UVPoly {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// `i! j! · [x^i y^j]`.
    pub fn egf_coeff(&self, i: u32, j: u32) -> UVPoly {
        let f = factorial(i as usize) * factorial(j as usize);
        self.coeff(i, j).scale(&q(f as i64))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &UVPoly)> {
        self.coeffs.iter()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: &UVPoly) {
        if (i + j) as usize > self.order || c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        let coeffs =
            self.coeffs.iter().filter(|((i, j), _)| (i + j) as usize <= order).map(|(k, c)| (*k, c.clone())).collect();
        FormalPS2 { vars: self.vars.clone(), coeffs, order }
    }

    /// Embeds a one-variable series as a series in the first variable.
    pub fn from_x(s: &FormalPS1, y: &str) -> Self {
        let mut out = Self::zero(s.var(), y, s.order());
        for (n, c) in s.coeffs().iter().enumerate() {
            out.add_term(n as u32, 0, c);
        }
        out
    }

    /// Embeds a one-variable series as a series in the second variable.
    pub fn from_y(x: &str, s: &FormalPS1) -> Self {
        let mut out = Self::zero(x, s.var(), s.order());
        for (n, c) in s.coeffs().iter().enumerate() {
            out.add_term(0, n as u32, c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.order.min(other.order));
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.order.min(other.order));
        for (&(i, j), c) in &other.coeffs {
            out.add_term(i, j, &-c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let mut out = Self::zero(&self.vars.0, &self.vars.1, order);
        for (&(i1, j1), c1) in &self.coeffs {
            for (&(i2, j2), c2) in &other.coeffs {
                if (i1 + i2 + j1 + j2) as usize <= order {
                    out.add_term(i1 + i2, j1 + j2, &(c1 * c2));
                }
            }
        }
        out
    }

    pub fn has_zero_constant(&self) -> bool {
        self.coeff(0, 0).is_zero()
    }

    /// `Σ_n s_n w^n` for a one-variable outer series and a two-variable inner series.
    pub fn substitute_into(outer: &FormalPS1, inner: &FormalPS2) -> Result<Self> {
        if !inner.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = outer.order().min(inner.order);
        let mut acc = Self::zero(&inner.vars.0, &inner.vars.1, order);
        for c in outer.coeffs()[..=order].iter().rev() {
            acc = acc.mul(inner);
            acc.add_term(0, 0, c);
        }
        Ok(acc)
    }

    /// `self(x, g(x, y))`, substituting for the second variable.
    pub fn compose_y(&self, g: &FormalPS2) -> Result<Self> {
        if !g.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(g.order);
        let max_j = self.coeffs.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut powers = alloc::vec![Self::monomial(&self.vars, 0, 0, order)];
        for j in 1..=max_j {
            let next = powers[j as usize - 1].mul(g);
            powers.push(next);
        }
        let mut out = Self::zero(&self.vars.0, &self.vars.1, order);
        for (&(i, j), c) in &self.coeffs {
            for (&(a, b), d) in &powers[j as usize].coeffs {
                out.add_term(i + a, b, &(c * d));
            }
        }
        Ok(out)
    }

    /// `self(g(x, y), y)`, substituting for the first variable.
    pub fn compose_x(&self, g: &FormalPS2) -> Result<Self> {
        self.swap().compose_y(&g.swap()).map(|s| s.swap())
    }

    /// Exchanges the roles of the two variables.
    pub fn swap(&self) -> Self {
        FormalPS2 {
            vars: (self.vars.1.clone(), self.vars.0.clone()),
            coeffs: self.coeffs.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
            order: self.order,
        }
    }

    fn monomial(vars: &(String, String), i: u32, j: u32, order: usize) -> Self {
        let mut s = Self::zero(&vars.0, &vars.1, order);
        s.add_term(i, j, &UVPoly::one());
        s
    }

    /// The slice `[x^i] self` as a series in `y`.
    pub fn x_slice(&self, i: u32) -> FormalPS1 {
        let n = self.order.saturating_sub(i as usize);
        FormalPS1::from_fn(&self.vars.1, n, |j| self.coeff(i, j as u32))
    }
}

impl fmt::Debug for FormalPS2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((i, j), c) in &self.coeffs {
            write!(f, "({c})*{}^{i}*{}^{j} + ", self.vars.0, self.vars.1)?;
        }
        write!(f, "O({})", self.order + 1)
    }
}

/// `C(uv, k)`: the binomial coefficient polynomial `uv(uv-1)...(uv-k+1)/k!`.
pub fn binomial_uv(k: usize) -> UVPoly {
    let qq = UVPoly::uv_pow(1);
    let mut acc = UVPoly::one();
    for i in 0..k {
        acc = &acc * &(&qq - &UVPoly::int(i as i64));
    }
    acc.scale(&Q::new(1.into(), (factorial(k) as i64).into()))
}

pub(crate) fn one_over(n: u64) -> Q {
    Q::new(One::one(), (n as i64).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uvpoly::qf;

    fn consts(v: &[Q]) -> Vec<UVPoly> {
        v.iter().cloned().map(UVPoly::constant).collect()
    }

    #[test]
    fn exp_and_log_examples() {
        let y = FormalPS1::variable("y", 3);
        let e = y.exp().unwrap();
        assert_eq!(e.coeffs(), &consts(&[q(1), q(1), qf(1, 2), qf(1, 6)])[..]);
        let l = y.neg().log1p_shift();
        assert_eq!(l.coeffs(), &consts(&[q(0), q(-1), qf(-1, 2), qf(-1, 3)])[..]);
        let half = l.scale(&UVPoly::constant(qf(-1, 2)));
        assert_eq!(*half.coeff(2), UVPoly::constant(qf(1, 4)));
    }

    impl FormalPS1 {
        fn log1p_shift(&self) -> FormalPS1 {
            let mut one_plus = self.clone();
            one_plus.coeffs[0] = &one_plus.coeffs[0] + &UVPoly::one();
            one_plus.log().unwrap()
        }
    }

    #[test]
    fn exp_log_round_trip() {
        let g = FormalPS1::from_coeffs(
            "y",
            alloc::vec![UVPoly::zero(), UVPoly::uv_pow(1), UVPoly::int(-3), UVPoly::zero(), UVPoly::u()],
            7,
        );
        let one_plus = {
            let mut s = g.clone();
            s.coeffs[0] = UVPoly::one();
            s
        };
        let back = one_plus.log().unwrap().exp().unwrap();
        assert_eq!(back, one_plus);
    }

    #[test]
    fn preconditions() {
        let c = FormalPS1::constant("y", UVPoly::one(), 3);
        assert_eq!(c.exp(), Err(Error::NonzeroConstantTerm));
        assert_eq!(FormalPS1::variable("y", 3).log(), Err(Error::ConstantTermNotOne));
        assert_eq!(c.compose(&c), Err(Error::NonzeroConstantTerm));
    }

    #[test]
    fn reversion_of_log1p() {
        // the inverse of log(1+y) is e^y - 1
        let l = FormalPS1::log1p("y", 8);
        let r = l.reversion().unwrap();
        let e = FormalPS1::exp_scaled("y", &UVPoly::one(), 8);
        assert_eq!(r.coeffs()[1..], e.coeffs()[1..]);
        assert!(r.coeff(0).is_zero());
    }

    #[test]
    fn substitution_matches_product() {
        let outer = FormalPS1::exp_scaled("x", &UVPoly::one(), 5);
        let mut inner = FormalPS2::zero("x", "y", 5);
        inner.add_term(1, 0, &UVPoly::one());
        inner.add_term(0, 1, &UVPoly::one());
        // e^{x+y} = e^x e^y
        let lhs = FormalPS2::substitute_into(&outer, &inner).unwrap();
        let ex = FormalPS2::from_x(&outer, "y");
        let ey = FormalPS2::from_y("x", &outer.clone().rename("y"));
        assert_eq!(lhs, ex.mul(&ey));
    }

    #[test]
    fn binomial_uv_values() {
        assert_eq!(binomial_uv(0), UVPoly::one());
        let b3 = binomial_uv(3);
        assert_eq!(b3.eval(&q(5), &q(1)), q(10));
    }
}
