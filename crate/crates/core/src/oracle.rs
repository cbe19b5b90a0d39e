//! Brute-force checks at small arity: Burnside sums over set partitions, Stirling numbers,
//! and the heavy/light vertex stability predicate.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bisym::{BiKey, BiSymSeries};
use crate::error::{Error, Result};
use crate::hassett::cor_b_open;
use crate::partition::{factorial, gen_partitions, z_of, Partition};
use crate::ps::FormalPS1;
use crate::sym::SymSeries;
use crate::uvpoly::{q, UVPoly, Q};

/// Largest `m + n` the enumerations accept.
pub const ENUMERATION_CAP: usize = 7;

/// A set partition of `{0, .., n-1}`; blocks are sorted and listed by smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<u32>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<u32>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in blocks.iter_mut() {
            if b.is_empty() {
                return Err(Error::InvalidPartition);
            }
            b.sort_unstable();
            for &x in b.iter() {
                let x = x as usize;
                if x >= n || seen[x] {
                    return Err(Error::InvalidPartition);
                }
                seen[x] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidPartition);
        }
        blocks.sort();
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<u32>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    fn block_of(&self, n: usize) -> Vec<usize> {
        let mut at = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                at[x as usize] = i;
            }
        }
        at
    }

    /// The permutation of blocks induced by `tau`, if `tau` maps blocks onto blocks.
    pub fn induced(&self, tau: &[u32]) -> Option<Vec<usize>> {
        let at = self.block_of(tau.len());
        let mut beta = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            let target = at[tau[b[0] as usize] as usize];
            if b.iter().any(|&x| at[tau[x as usize] as usize] != target) || self.blocks[target].len() != b.len() {
                return None;
            }
            beta.push(target);
        }
        Some(beta)
    }
}

/// Every set partition of an `n`-set, via restricted growth strings.
pub fn set_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); if n == 0 { 0 } else { k }];
        for (i, &b) in rgs.iter().enumerate() {
            blocks[b].push(i as u32);
        }
        out.push(SetPartition { blocks });
        if !next_rgs(&mut rgs) {
            return out;
        }
    }
}

fn next_rgs(rgs: &mut [usize]) -> bool {
    let n = rgs.len();
    for i in (1..n).rev() {
        let max_prefix = rgs[..i].iter().max().copied().unwrap_or(0);
        if rgs[i] <= max_prefix {
            rgs[i] += 1;
            for r in rgs[i + 1..].iter_mut() {
                *r = 0;
            }
            return true;
        }
    }
    false
}

/// `S(n, k)` by direct enumeration of restricted growth strings.
pub fn stirling2(n: usize, k: usize) -> u64 {
    if n == 0 {
        return u64::from(k == 0);
    }
    let mut rgs = vec![0usize; n];
    let mut count = 0;
    loop {
        if rgs.iter().max().unwrap() + 1 == k {
            count += 1;
        }
        if !next_rgs(&mut rgs) {
            return count;
        }
    }
}

/// `S(n, k)` by the recurrence `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
pub fn stirling2_recurrence(n: usize, k: usize) -> u64 {
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = j as u64 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// A pair `(σ, τ) ∈ S_m × S_n` in one-line notation (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermPair {
    pub sigma: Vec<u32>,
    pub tau: Vec<u32>,
}

impl PermPair {
    pub fn new(sigma: Vec<u32>, tau: Vec<u32>) -> Result<Self> {
        if !is_permutation(&sigma) || !is_permutation(&tau) {
            return Err(Error::InvalidPartition);
        }
        Ok(PermPair { sigma, tau })
    }

    pub fn of_types(alpha: &Partition, beta: &Partition) -> Self {
        PermPair { sigma: permutation_of_type(alpha), tau: permutation_of_type(beta) }
    }

    pub fn cycle_types(&self) -> (Partition, Partition) {
        (cycle_type(&self.sigma), cycle_type(&self.tau))
    }
}

fn is_permutation(p: &[u32]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| (x as usize) < p.len() && !core::mem::replace(&mut seen[x as usize], true))
}

/// A permutation whose cycles have lengths `λ_1, λ_2, ...` on consecutive points.
pub fn permutation_of_type(lambda: &Partition) -> Vec<u32> {
    let mut p = Vec::with_capacity(lambda.size());
    let mut start = 0u32;
    for &k in lambda.parts() {
        for i in 0..k {
            p.push(start + (i + 1) % k);
        }
        start += k;
    }
    p
}

pub fn cycle_type(p: &[u32]) -> Partition {
    let mut seen = vec![false; p.len()];
    let mut parts = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        parts.push(len);
    }
    Partition::new(parts)
}

/// All permutations of `0..j` in lexicographic order.
fn permutations(j: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..j).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..j).rev().find(|&i| cur[i - 1] < cur[i]) else { return out };
        let k = (i..j).rev().find(|&k| cur[k] > cur[i - 1]).unwrap();
        cur.swap(i - 1, k);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Number of orderings `(B_1, .., B_j)` of the blocks with `τ(B_i) = B_{π(i)}`, counted by
/// trying every labeling.
fn fixed_orderings(beta: &[usize], pi: &[u32], labelings: &[Vec<usize>]) -> u64 {
    labelings
        .iter()
        .filter(|phi| (0..phi.len()).all(|i| beta[phi[i]] == phi[pi[i] as usize]))
        .count() as u64
}

/// `ch_{m,n}` of the open heavy/light space from the arity-`(m + j)` parts of `b`,
/// averaging over `(σ, τ)` classes without any plethysm.
pub fn oracle_open_ch(_g: u32, m: usize, n: usize, b: &SymSeries) -> Result<BiSymSeries> {
    if m + n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap(m + n));
    }
    let top = if n == 0 { m } else { m + n };
    if b.trunc() < top {
        return Err(Error::Truncation { needed: top, available: b.trunc() });
    }
    let parts = set_partitions(n);
    let mut labelings: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    let mut pis: BTreeMap<usize, Vec<(Partition, Vec<u32>)>> = BTreeMap::new();
    for p in &parts {
        let j = p.num_blocks();
        labelings.entry(j).or_insert_with(|| permutations(j));
        pis.entry(j).or_insert_with(|| gen_partitions(j).into_iter().map(|r| {
            let rep = permutation_of_type(&r);
            (r, rep)
        }).collect());
    }
    let mut out = BiSymSeries::zero(m + n);
    for alpha in gen_partitions(m) {
        for beta_type in gen_partitions(n) {
            let tau = permutation_of_type(&beta_type);
            let mut trace = UVPoly::zero();
            for p in &parts {
                let Some(beta) = p.induced(&tau) else { continue };
                let j = p.num_blocks();
                let labs = &labelings[&j];
                // (1/j!) Σ_{π ∈ S_j}, grouped by conjugacy class of size j!/z_ρ
                for (rho, pi) in &pis[&j] {
                    let count = fixed_orderings(&beta, pi, labs);
                    if count == 0 {
                        continue;
                    }
                    let w = Q::new((count as i64).into(), (z_of(rho) as i64).into());
                    let lam = alpha.union(rho);
                    trace.add_scaled(&b.trace_from_ch(&lam), &w);
                }
            }
            if trace.is_zero() {
                continue;
            }
            let z = (z_of(&alpha) * z_of(&beta_type)) as i64;
            out.add_term(BiKey::new(alpha.clone(), beta_type.clone()), trace.scale(&Q::new(One::one(), z.into())));
        }
    }
    Ok(out)
}

/// Compares `h_{g,m|n}` from the substitution `x → x + e^y - 1` with `Σ_k S(n, k) h_{g,m+k}`.
pub fn stirling_rank_check(m: usize, n: usize, b: &FormalPS1) -> bool {
    if b.order() < m + n {
        return false;
    }
    let Ok(a) = cor_b_open(b) else { return false };
    let lhs = a.egf_coeff(m as u32, n as u32);
    let mut rhs = UVPoly::zero();
    for k in 0..=n {
        let s = stirling2(n, k);
        if s != 0 {
            rhs.add_scaled(&b.egf_coeff(m + k), &q(s as i64));
        }
    }
    lhs == rhs
}

/// `2g(E) - 2 + #special + Σ a_i > 0`.
pub fn vertex_stable(g_e: u32, special: u32, weights: &[Q]) -> bool {
    let mut total = q(2 * g_e as i64 - 2 + special as i64);
    for w in weights {
        total += w;
    }
    total > Q::zero()
}

/// The number of permutations of each cycle type, for sanity checks of class sums.
pub fn class_size(lambda: &Partition) -> u64 {
    factorial(lambda.size()) / z_of(lambda)
}
