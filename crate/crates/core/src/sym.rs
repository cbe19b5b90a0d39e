//! Truncated symmetric function series `Λ[[u, v]]` in the power-sum basis.

use alloc::collections::BTreeMap;
use alloc::format;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{gen_partitions, z_of, CharacterCache, Partition};
use crate::ps::{one_over, FormalPS1};
use crate::uvpoly::{q, UVPoly, Q};

/// `Σ_λ c_λ p_λ` with `|λ| ≤ trunc`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SymSeries {
    terms: BTreeMap<Partition, UVPoly>,
    trunc: usize,
}

impl SymSeries {
    pub fn zero(trunc: usize) -> Self {
        SymSeries { terms: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(Partition::empty(), UVPoly::one(), trunc)
    }

    /// `c · p_λ`, or zero if `|λ|` exceeds the truncation.
    pub fn monomial(lambda: Partition, c: UVPoly, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(lambda, c);
        s
    }

    /// The power sum `p_k`.
    pub fn p(k: u32, trunc: usize) -> Self {
        Self::monomial(Partition::row(k), UVPoly::one(), trunc)
    }

    /// `h_n = Σ_{λ ⊢ n} p_λ / z_λ`.
    pub fn homogeneous_h(n: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for l in gen_partitions(n) {
            let z = z_of(&l);
            s.add_term(l, UVPoly::constant(one_over(z)));
        }
        s
    }

    /// `Σ_{1 ≤ n ≤ trunc} h_n`, the series whose plethysm is `Exp`.
    pub fn h_sum(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        for n in 1..=trunc {
            s = s.add(&Self::homogeneous_h(n, trunc));
        }
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &UVPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> UVPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    /// Adds `c p_λ`; ignored beyond the truncation.
    pub fn add_term(&mut self, lambda: Partition, c: UVPoly) {
        if lambda.size() > self.trunc || c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Accumulates `a·b` into `p_λ`; callers prune zeros afterwards.
    fn add_product_term(&mut self, lambda: Partition, a: &UVPoly, b: &UVPoly) {
        if lambda.size() > self.trunc {
            return;
        }
        self.terms.entry(lambda).or_default().add_product(a, b);
    }

    /// Lowers the truncation, dropping terms above it.
    pub fn truncate(&self, trunc: usize) -> Self {
        let trunc = trunc.min(self.trunc);
        let terms = self.terms.iter().filter(|(l, _)| l.size() <= trunc).map(|(l, c)| (l.clone(), c.clone())).collect();
        SymSeries { terms, trunc }
    }

    /// The homogeneous part of arity `n`.
    pub fn arity_part(&self, n: usize) -> Self {
        let terms = self.terms.iter().filter(|(l, _)| l.size() == n).map(|(l, c)| (l.clone(), c.clone())).collect();
        SymSeries { terms, trunc: self.trunc }
    }

    pub fn has_zero_constant(&self) -> bool {
        !self.terms.contains_key(&Partition::empty())
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&UVPoly) -> UVPoly) -> Self {
        let mut out = Self::zero(self.trunc);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), f(c));
        }
        out
    }

    /// Specializes every coefficient at `u = v = 0`.
    pub fn at_zero(&self) -> Self {
        self.map_coeffs(|c| UVPoly::constant(c.constant_term()))
    }

    /// Specializes every coefficient at `u = v = 1`.
    pub fn at_one(&self) -> Self {
        self.map_coeffs(|c| UVPoly::constant(c.at_one()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.trunc);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.trunc);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &UVPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    /// Product with `p_λ · p_μ = p_{λ ∪ μ}`, truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for (l1, c1) in &self.terms {
            let room = match trunc.checked_sub(l1.size()) {
                Some(r) => r,
                None => break,
            };
            for (l2, c2) in &other.terms {
                if l2.size() > room {
                    break;
                }
                out.add_product_term(l1.union(l2), c1, c2);
            }
        }
        out.prune();
        out
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    /// `p_k ∘ self`: `p_j ↦ p_{jk}` together with `u ↦ u^k`, `v ↦ v^k`.
    pub fn adams(&self, k: u32) -> Self {
        let mut out = Self::zero(self.trunc);
        for (l, c) in &self.terms {
            out.add_term(l.scale(k), c.adams(k));
        }
        out
    }

    /// Plethysm `self ∘ g`; `g` must have no constant term.
    pub fn plethysm(&self, g: &Self) -> Result<Self> {
        if !g.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let trunc = self.trunc.min(g.trunc);
        let g = g.truncate(trunc);
        let mut powers = PowerCache::new(&g, trunc);
        let mut out = Self::zero(trunc);
        for (l, c) in &self.terms {
            if l.size() > trunc {
                break;
            }
            let pw = powers.get(l);
            for (m, d) in &pw.terms {
                out.add_product_term(m.clone(), c, d);
            }
        }
        out.prune();
        Ok(out)
    }

    /// `Σ_{n ≥ 1} h_n ∘ self`.
    pub fn exp_series(&self) -> Result<Self> {
        Self::h_sum(self.trunc).plethysm(self)
    }

    /// The plethystic inverse of `Exp`, applied to `self`.
    pub fn log_series(&self) -> Result<Self> {
        let inv = Self::h_sum(self.trunc).pleth_inverse()?;
        inv.plethysm(self)
    }

    /// The unique `g` with `self ∘ g = p_1`, solved one arity at a time.
    pub fn pleth_inverse(&self) -> Result<Self> {
        let n = self.trunc;
        let p1 = Self::p(1, n);
        if self.arity_part(1) != p1.arity_part(1) || !self.has_zero_constant() {
            return Err(Error::NotIdentityLeading);
        }
        let mut g = p1.clone();
        for d in 2..=n {
            let image = self.truncate(d).plethysm(&g.truncate(d))?;
            for (l, c) in image.arity_part(d).terms() {
                g.add_term(l.clone(), -c);
            }
        }
        Ok(g)
    }

    /// `∂/∂p_k`.
    pub fn d_dpk(&self, k: u32) -> Self {
        let mut out = Self::zero(self.trunc.saturating_sub(k as usize));
        for (l, c) in &self.terms {
            let m = l.multiplicity(k);
            if m == 0 {
                continue;
            }
            let rest = l.remove_part(k).unwrap();
            out.add_term(rest, c.scale(&q(m as i64)));
        }
        out
    }

    /// `∂/∂p_1`.
    pub fn d_dp1(&self) -> Self {
        self.d_dpk(1)
    }

    /// Coefficients in the Schur basis: `a_λ = Σ_μ c_μ χ^λ(μ)`.
    pub fn to_schur(&self, cache: &mut CharacterCache) -> BTreeMap<Partition, UVPoly> {
        let mut out: BTreeMap<Partition, UVPoly> = BTreeMap::new();
        for n in 0..=self.trunc {
            let part = self.arity_part(n);
            if part.is_zero() {
                continue;
            }
            let table = cache.table(n);
            for (li, lambda) in table.partitions().iter().enumerate() {
                let mut acc = UVPoly::zero();
                for (mu, c) in &part.terms {
                    let chi = table.row(li)[table.index_of(mu).unwrap()];
                    if chi != 0 {
                        acc.add_scaled(c, &q(chi));
                    }
                }
                if !acc.is_zero() {
                    out.insert(lambda.clone(), acc);
                }
            }
        }
        out
    }

    /// Inverse of [`SymSeries::to_schur`]: `s_λ = Σ_μ χ^λ(μ)/z_μ p_μ`.
    pub fn from_schur(
        coeffs: &BTreeMap<Partition, UVPoly>,
        trunc: usize,
        cache: &mut CharacterCache,
    ) -> Self {
        let mut out = Self::zero(trunc);
        for (lambda, a) in coeffs {
            let n = lambda.size();
            if n > trunc {
                continue;
            }
            let table = cache.table(n);
            let li = table.index_of(lambda).unwrap();
            for (mi, mu) in table.partitions().iter().enumerate() {
                let chi = table.row(li)[mi];
                if chi != 0 {
                    out.add_term(mu.clone(), a.scale(&Q::new(chi.into(), (z_of(mu) as i64).into())));
                }
            }
        }
        out
    }

    /// The Schur function `s_λ` in power sums.
    pub fn schur(lambda: &Partition, trunc: usize, cache: &mut CharacterCache) -> Self {
        let mut m = BTreeMap::new();
        m.insert(lambda.clone(), UVPoly::one());
        Self::from_schur(&m, trunc, cache)
    }

    /// Frobenius characteristic `Σ_λ tr(λ)/z_λ p_λ` of a class function on `S_n`.
    pub fn frobenius_from_traces(
        n: usize,
        traces: &BTreeMap<Partition, UVPoly>,
        trunc: usize,
    ) -> Result<Self> {
        let mut out = Self::zero(trunc);
        for lambda in gen_partitions(n) {
            let tr = traces.get(&lambda).ok_or_else(|| Error::MissingClass(format!("{lambda}")))?;
            out.add_term(lambda.clone(), tr.scale(&one_over(z_of(&lambda))));
        }
        Ok(out)
    }

    /// The trace of a permutation of cycle type `λ`: `z_λ [p_λ] self`.
    pub fn trace_from_ch(&self, lambda: &Partition) -> UVPoly {
        self.coeff(lambda).scale(&q(z_of(lambda) as i64))
    }

    /// The rank map `p_1 ↦ x`, `p_k ↦ 0` for `k ≥ 2`.
    pub fn rank1(&self) -> FormalPS1 {
        let mut coeffs = alloc::vec![UVPoly::zero(); self.trunc + 1];
        for (l, c) in &self.terms {
            if l.parts().iter().all(|&p| p == 1) {
                coeffs[l.size()] = c.clone();
            }
        }
        FormalPS1::from_coeffs("x", coeffs, self.trunc)
    }
}

impl fmt::Display for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) * p{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [trunc {}]", self.trunc)
    }
}

/// Memoized `p_λ ∘ g = ∏ adams(λ_i, g)` for a fixed inner series `g`.
pub(crate) struct PowerCache<'a> {
    g: &'a SymSeries,
    trunc: usize,
    adams: BTreeMap<u32, SymSeries>,
    powers: BTreeMap<Partition, SymSeries>,
}

impl<'a> PowerCache<'a> {
    pub(crate) fn new(g: &'a SymSeries, trunc: usize) -> Self {
        PowerCache { g, trunc, adams: BTreeMap::new(), powers: BTreeMap::new() }
    }

    pub(crate) fn get(&mut self, lambda: &Partition) -> SymSeries {
        if let Some(p) = self.powers.get(lambda) {
            return p.clone();
        }
        let value = match lambda.parts().split_first() {
            None => SymSeries::one(self.trunc),
            Some((&k, rest)) => {
                let rest = Partition::from_decreasing(rest.to_vec()).unwrap();
                let tail = self.get(&rest);
                let g = self.g;
                let trunc = self.trunc;
                let a = self.adams.entry(k).or_insert_with(|| g.adams(k).truncate(trunc));
                a.mul(&tail)
            }
        };
        self.powers.insert(lambda.clone(), value.clone());
        value
    }
}

/// Sums `Σ c_i s_i` skipping zero coefficients; used when assembling closed forms.
pub fn linear_combination(items: &[(Q, &SymSeries)], trunc: usize) -> SymSeries {
    let mut out = SymSeries::zero(trunc);
    for (c, s) in items {
        if c.is_zero() {
            continue;
        }
        out = out.add(&s.scale_q(c));
    }
    out
}
