//! Truncated bisymmetric series `Λ⁽²⁾[[u, v]]` in the basis `p⁽¹⁾_λ p⁽²⁾_μ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::partition::{z_of, CharacterCache, Partition};
use crate::ps::FormalPS2;
use crate::sym::SymSeries;
use crate::uvpoly::{q, UVPoly, Q};

/// A basis element `p⁽¹⁾_λ p⁽²⁾_μ`. Ordered by total size, then `|λ|`, then `λ`, then `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BiKey {
    pub left: Partition,
    pub right: Partition,
}

impl BiKey {
    pub fn new(left: Partition, right: Partition) -> Self {
        BiKey { left, right }
    }

    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.left.size(), self.right.size())
    }

    fn union(&self, other: &BiKey) -> BiKey {
        BiKey { left: self.left.union(&other.left), right: self.right.union(&other.right) }
    }
}

impl Ord for BiKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then(self.left.size().cmp(&other.left.size()))
            .then_with(|| self.left.cmp(&other.left))
            .then_with(|| self.right.cmp(&other.right))
    }
}

impl PartialOrd for BiKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bisymmetric series truncated at total arity `trunc`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSymSeries {
    terms: BTreeMap<BiKey, UVPoly>,
    trunc: usize,
}

impl BiSymSeries {
    pub fn zero(trunc: usize) -> Self {
        BiSymSeries { terms: BTreeMap::new(), trunc }
    }

    pub fn one(trunc: usize) -> Self {
        Self::monomial(Partition::empty(), Partition::empty(), UVPoly::one(), trunc)
    }

    pub fn monomial(left: Partition, right: Partition, c: UVPoly, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.add_term(BiKey::new(left, right), c);
        s
    }

    /// `p_k` in factor `j` (1 or 2).
    pub fn p(j: u8, k: u32, trunc: usize) -> Self {
        let (l, r) = if j == 1 {
            (Partition::row(k), Partition::empty())
        } else {
            (Partition::empty(), Partition::row(k))
        };
        Self::monomial(l, r, UVPoly::one(), trunc)
    }

    /// Places `f` in factor `j` (1 or 2).
    pub fn inject(f: &SymSeries, j: u8) -> Self {
        let mut s = Self::zero(f.trunc());
        for (l, c) in f.terms() {
            let key = if j == 1 {
                BiKey::new(l.clone(), Partition::empty())
            } else {
                BiKey::new(Partition::empty(), l.clone())
            };
            s.add_term(key, c.clone());
        }
        s
    }

    /// `Δ f = f(p⁽¹⁾ + p⁽²⁾)`, expanding `∏ (p⁽¹⁾_i + p⁽²⁾_i)^{m_i}` binomially.
    pub fn coproduct(f: &SymSeries) -> Self {
        let mut out = Self::zero(f.trunc());
        for (lambda, c) in f.terms() {
            let mut mult: Vec<(u32, usize)> = Vec::new();
            for &p in lambda.parts() {
                match mult.last_mut() {
                    Some((k, m)) if *k == p => *m += 1,
                    _ => mult.push((p, 1)),
                }
            }
            let mut splits: Vec<(Vec<u32>, Vec<u32>, Q)> = alloc::vec![(Vec::new(), Vec::new(), q(1))];
            for &(k, m) in &mult {
                let binom = binomial_row(m);
                let mut next = Vec::new();
                for (l, r, w) in &splits {
                    for (a, b) in binom.iter().enumerate() {
                        let mut l2 = l.clone();
                        let mut r2 = r.clone();
                        l2.extend(core::iter::repeat_n(k, a));
                        r2.extend(core::iter::repeat_n(k, m - a));
                        next.push((l2, r2, w * b));
                    }
                }
                splits = next;
            }
            for (l, r, w) in splits {
                let key = BiKey::new(Partition::from_decreasing(l).unwrap(), Partition::from_decreasing(r).unwrap());
                out.add_term(key, c.scale(&w));
            }
        }
        out
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BiKey, &UVPoly)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> UVPoly {
        self.terms.get(&BiKey::new(left.clone(), right.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: BiKey, c: UVPoly) {
        if key.size() > self.trunc || c.is_zero() {
            return;
        }
        let e = self.terms.entry(key.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let trunc = trunc.min(self.trunc);
        let terms = self.terms.iter().filter(|(k, _)| k.size() <= trunc).map(|(k, c)| (k.clone(), c.clone())).collect();
        BiSymSeries { terms, trunc }
    }

    pub fn has_zero_constant(&self) -> bool {
        !self.terms.contains_key(&BiKey::new(Partition::empty(), Partition::empty()))
    }

    /// True when no term involves factor 1.
    pub fn is_pure_factor2(&self) -> bool {
        self.terms.keys().all(|k| k.left.is_empty())
    }

    /// The part of bidegree `(m, n)`.
    pub fn component(&self, m: usize, n: usize) -> Self {
        let terms = self.terms.iter().filter(|(k, _)| k.bidegree() == (m, n)).map(|(k, c)| (k.clone(), c.clone())).collect();
        BiSymSeries { terms, trunc: self.trunc }
    }

    /// The bidegrees that carry at least one term.
    pub fn support(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.terms.keys().map(|k| k.bidegree()).collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&UVPoly) -> UVPoly) -> Self {
        let mut out = Self::zero(self.trunc);
        for (k, c) in &self.terms {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    pub fn at_zero(&self) -> Self {
        self.map_coeffs(|c| UVPoly::constant(c.constant_term()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.trunc);
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.truncate(other.trunc);
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &UVPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut out = Self::zero(trunc);
        for (k1, c1) in &self.terms {
            let room = match trunc.checked_sub(k1.size()) {
                Some(r) => r,
                None => break,
            };
            for (k2, c2) in &other.terms {
                if k2.size() > room {
                    break;
                }
                out.terms.entry(k1.union(k2)).or_default().add_product(c1, c2);
            }
        }
        out.prune();
        out
    }

    /// Exchanges the two factors.
    pub fn swap(&self) -> Self {
        let mut out = Self::zero(self.trunc);
        for (k, c) in &self.terms {
            out.add_term(BiKey::new(k.right.clone(), k.left.clone()), c.clone());
        }
        out
    }

    /// `p_k ∘ self` acting on both factors and on `u, v`.
    pub fn adams(&self, k: u32) -> Self {
        let mut out = Self::zero(self.trunc);
        for (key, c) in &self.terms {
            out.add_term(BiKey::new(key.left.scale(k), key.right.scale(k)), c.adams(k));
        }
        out
    }

    /// Plethysm in the second factor: `p⁽²⁾_k ↦ p_k ∘ g`, factor 1 untouched.
    pub fn pleth2(&self, g: &Self) -> Result<Self> {
        if !g.has_zero_constant() {
            return Err(Error::NonzeroConstantTerm);
        }
        let trunc = self.trunc.min(g.trunc);
        let g = g.truncate(trunc);
        let mut cache = BiPowerCache { g: &g, trunc, adams: BTreeMap::new(), powers: BTreeMap::new() };
        let mut out = Self::zero(trunc);
        for (key, c) in &self.terms {
            if key.size() > trunc {
                break;
            }
            let lsize = key.left.size();
            let pw = cache.get(&key.right);
            for (k2, d) in &pw.terms {
                if k2.size() + lsize > trunc {
                    break;
                }
                let k = BiKey::new(key.left.union(&k2.left), k2.right.clone());
                out.terms.entry(k).or_default().add_product(c, d);
            }
        }
        out.prune();
        Ok(out)
    }

    /// Plethysm in the first factor.
    pub fn pleth1(&self, g: &Self) -> Result<Self> {
        Ok(self.swap().pleth2(&g.swap())?.swap())
    }

    /// `Exp` in the second factor: `(Σ h_n)⁽²⁾ ∘₂ self`.
    pub fn exp2(&self) -> Result<Self> {
        Self::inject(&SymSeries::h_sum(self.trunc), 2).pleth2(self)
    }

    pub fn exp1(&self) -> Result<Self> {
        Ok(self.swap().exp2()?.swap())
    }

    /// `Log` in the second factor, inverse to [`BiSymSeries::exp2`].
    pub fn log2(&self) -> Result<Self> {
        let inv = SymSeries::h_sum(self.trunc).pleth_inverse()?;
        Self::inject(&inv, 2).pleth2(self)
    }

    /// `p⁽¹⁾_1 ↦ x`, `p⁽²⁾_1 ↦ y`, all higher power sums to 0.
    pub fn rank2(&self) -> FormalPS2 {
        let mut out = FormalPS2::zero("x", "y", self.trunc);
        for (k, c) in &self.terms {
            let ones = |p: &Partition| p.parts().iter().all(|&x| x == 1);
            if ones(&k.left) && ones(&k.right) {
                out.add_term(k.left.size() as u32, k.right.size() as u32, c);
            }
        }
        out
    }

    /// `∂/∂p⁽ʲ⁾_k`.
    pub fn d_dp(&self, j: u8, k: u32) -> Self {
        let mut out = Self::zero(self.trunc.saturating_sub(k as usize));
        for (key, c) in &self.terms {
            let side = if j == 1 { &key.left } else { &key.right };
            let m = side.multiplicity(k);
            if m == 0 {
                continue;
            }
            let rest = side.remove_part(k).unwrap();
            let nk = if j == 1 { BiKey::new(rest, key.right.clone()) } else { BiKey::new(key.left.clone(), rest) };
            out.add_term(nk, c.scale(&q(m as i64)));
        }
        out
    }

    /// Drops every term involving factor 2 and reads the rest as a series in factor 1.
    pub fn factor1_part(&self) -> SymSeries {
        let mut out = SymSeries::zero(self.trunc);
        for (k, c) in &self.terms {
            if k.right.is_empty() {
                out.add_term(k.left.clone(), c.clone());
            }
        }
        out
    }

    /// The `S_m × S_n` character of a bidegree as a map of Schur pairs `(λ, μ)`.
    pub fn to_schur_pairs(&self, cache: &mut CharacterCache) -> BTreeMap<BiKey, UVPoly> {
        let mut out = BTreeMap::new();
        for (m, n) in self.support() {
            let comp = self.component(m, n);
            let tm = cache.table(m).clone();
            let tn = cache.table(n).clone();
            for (li, lambda) in tm.partitions().iter().enumerate() {
                for (mi, mu) in tn.partitions().iter().enumerate() {
                    let mut acc = UVPoly::zero();
                    for (k, c) in &comp.terms {
                        let a = tm.row(li)[tm.index_of(&k.left).unwrap()];
                        let b = tn.row(mi)[tn.index_of(&k.right).unwrap()];
                        if a * b != 0 {
                            acc.add_scaled(c, &q(a * b));
                        }
                    }
                    if !acc.is_zero() {
                        out.insert(BiKey::new(lambda.clone(), mu.clone()), acc);
                    }
                }
            }
        }
        out
    }

    /// Inverse of [`BiSymSeries::to_schur_pairs`].
    pub fn from_schur_pairs(coeffs: &BTreeMap<BiKey, UVPoly>, trunc: usize, cache: &mut CharacterCache) -> Self {
        let mut out = Self::zero(trunc);
        for (key, a) in coeffs {
            let (m, n) = key.bidegree();
            if m + n > trunc {
                continue;
            }
            let tm = cache.table(m).clone();
            let tn = cache.table(n).clone();
            let li = tm.index_of(&key.left).unwrap();
            let mi = tn.index_of(&key.right).unwrap();
            for (ai, alpha) in tm.partitions().iter().enumerate() {
                for (bi, beta) in tn.partitions().iter().enumerate() {
                    let chi = tm.row(li)[ai] * tn.row(mi)[bi];
                    if chi != 0 {
                        let z = (z_of(alpha) * z_of(beta)) as i64;
                        out.add_term(BiKey::new(alpha.clone(), beta.clone()), a.scale(&Q::new(chi.into(), z.into())));
                    }
                }
            }
        }
        out
    }
}

fn binomial_row(m: usize) -> Vec<Q> {
    let mut row = alloc::vec![q(1)];
    for a in 0..m {
        let next = &row[a] * Q::new(((m - a) as i64).into(), ((a + 1) as i64).into());
        row.push(next);
    }
    row
}

struct BiPowerCache<'a> {
    g: &'a BiSymSeries,
    trunc: usize,
    adams: BTreeMap<u32, BiSymSeries>,
    powers: BTreeMap<Partition, BiSymSeries>,
}

impl BiPowerCache<'_> {
    fn get(&mut self, mu: &Partition) -> BiSymSeries {
        if let Some(p) = self.powers.get(mu) {
            return p.clone();
        }
        let value = match mu.parts().split_first() {
            None => BiSymSeries::one(self.trunc),
            Some((&k, rest)) => {
                let rest = Partition::from_decreasing(rest.to_vec()).unwrap();
                let tail = self.get(&rest);
                let g = self.g;
                let trunc = self.trunc;
                let a = self.adams.entry(k).or_insert_with(|| g.adams(k).truncate(trunc));
                a.mul(&tail)
            }
        };
        self.powers.insert(mu.clone(), value.clone());
        value
    }
}

impl fmt::Display for BiSymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) * p1{}*p2{}", k.left, k.right)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiSymSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [trunc {}]", self.trunc)
    }
}
