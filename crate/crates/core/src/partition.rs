//! Integer partitions, the `z_λ` normalizer and symmetric group characters.
//!
//! Partitions are ordered canonically: first by size, then lexicographically
//! decreasing within a size. `BTreeMap<Partition, _>` therefore iterates in
//! the same order as [`gen_partitions`].

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// The empty partition of zero.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Builds a partition from parts that must already be weakly decreasing and positive.
    pub fn from_decreasing(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition);
        }
        Ok(Partition { parts })
    }

    /// The one-part partition `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: u32) -> Self {
        Partition::new(alloc::vec![n])
    }

    /// `(1, 1, ..., 1)` with `n` ones.
    pub fn column(n: u32) -> Self {
        Partition { parts: alloc::vec![1; n as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.parts.iter().filter(|&&p| p == i).count()
    }

    /// Multiset union of parts; the cycle type of a product of disjoint permutations.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: u32) -> Partition {
        Partition { parts: self.parts.iter().map(|&p| p * k).collect() }
    }

    /// Removes one copy of the part `i`, if present.
    pub fn remove_part(&self, i: u32) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == i)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    /// The conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn gen_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n as u32, n as u32, &mut cur, &mut out);
    out
}

fn fill(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(gen_partitions).collect()
}

/// `z_λ = ∏ i^{m_i} m_i!`, the order of the centralizer of a permutation of cycle type `λ`.
pub fn z_of(lambda: &Partition) -> u64 {
    let mut z = 1u64;
    let parts = lambda.parts();
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i] as u64;
        let mut m = 0u64;
        while i < parts.len() && parts[i] as u64 == p {
            m += 1;
            z *= p * m;
            i += 1;
        }
    }
    z
}

/// `n!`
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The irreducible character `χ^λ` on the class of cycle type `μ`, by the
/// Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { left: lambda.size(), right: mu.size() });
    }
    let mut memo = BTreeMap::new();
    Ok(mn_rec(&beta_set(lambda), mu.parts(), &mut memo))
}

// Beta-set of λ with exactly ℓ(λ) beads: positions λ_i + ℓ - i.
fn beta_set(lambda: &Partition) -> Vec<u32> {
    let l = lambda.len() as u32;
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

// Removing a border strip of length k is moving one bead from b to b - k onto
// an empty position; the leg length is the number of beads jumped over.
fn mn_rec(beads: &[u32], mu: &[u32], memo: &mut BTreeMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (beads.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (idx, &b) in beads.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beads.contains(&target) {
            continue;
        }
        let jumped = beads.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<u32> = beads.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&next, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The full character table of `S_n`, indexed `[λ][μ]` over [`gen_partitions`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = gen_partitions(n);
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mut memo = BTreeMap::new();
        let values = partitions
            .iter()
            .map(|l| {
                let beads = beta_set(l);
                partitions.iter().map(|m| mn_rec(&beads, m.parts(), &mut memo)).collect()
            })
            .collect();
        CharacterTable { n, partitions, index, values }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`; both partitions must have size `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        match (self.index.get(lambda), self.index.get(mu)) {
            (Some(&i), Some(&j)) => Ok(self.values[i][j]),
            _ => Err(Error::SizeMismatch { left: lambda.size(), right: self.n }),
        }
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }
}

/// Character tables for several sizes, built on first use.
///
/// Not shared between threads; each worker owns its own cache.
#[derive(Clone, Debug, Default)]
pub struct CharacterCache {
    tables: BTreeMap<usize, CharacterTable>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table(&mut self, n: usize) -> &CharacterTable {
        self.tables.entry(n).or_insert_with(|| CharacterTable::new(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::vec;

    fn p(v: &[u32]) -> Partition {
        Partition::from_decreasing(v.to_vec()).unwrap()
    }

    // Independent count of weakly decreasing sequences summing to n.
    fn brute_count(n: u32, max: u32) -> usize {
        if n == 0 {
            return 1;
        }
        (1..=max.min(n)).map(|k| brute_count(n - k, k)).sum()
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(gen_partitions(0), vec![Partition::empty()]);
        assert_eq!(gen_partitions(1), vec![p(&[1])]);
        let five = gen_partitions(5);
        assert_eq!(five.len(), 7);
        assert_eq!(five[0], p(&[5]));
        assert_eq!(five[1], p(&[4, 1]));
        assert_eq!(five[2], p(&[3, 2]));
        assert_eq!(five[6], p(&[1, 1, 1, 1, 1]));
        for n in 0..=15u32 {
            assert_eq!(gen_partitions(n as usize).len(), brute_count(n, n));
        }
    }

    #[test]
    fn canonical_order_matches_btree() {
        let all = partitions_up_to(6);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn z_values() {
        assert_eq!(z_of(&Partition::empty()), 1);
        assert_eq!(z_of(&p(&[1, 1, 1])), 6);
        assert_eq!(z_of(&p(&[2, 1])), 2);
        assert_eq!(z_of(&p(&[2, 2, 1])), 8);
        for n in 0..=8 {
            let sum: u64 = gen_partitions(n).iter().map(|l| factorial(n) / z_of(l)).sum();
            assert_eq!(sum, factorial(n));
        }
    }

    #[test]
    fn character_examples() {
        assert_eq!(mn_character(&p(&[3]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn trivial_character_is_one() {
        for n in 1..=7 {
            let t = CharacterTable::new(n);
            for mu in t.partitions() {
                assert_eq!(t.value(&Partition::row(n as u32), mu).unwrap(), 1);
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=7 {
            let t = CharacterTable::new(n);
            let k = t.partitions().len();
            for a in 0..k {
                for b in 0..k {
                    let s: i64 = (0..k).map(|l| t.row(l)[a] * t.row(l)[b]).sum();
                    let expected = if a == b { z_of(&t.partitions()[a]) as i64 } else { 0 };
                    assert_eq!(s, expected, "n={n}");
                }
            }
        }
    }

    #[test]
    fn dimensions_positive_and_square_sum() {
        for n in 0..=7 {
            let t = CharacterTable::new(n);
            let id = t.index_of(&Partition::column(n as u32)).unwrap();
            let mut sq = 0i64;
            for l in 0..t.partitions().len() {
                let d = t.row(l)[id];
                assert!(d > 0);
                sq += d * d;
            }
            assert_eq!(sq as u64, factorial(n));
        }
    }

    #[test]
    fn conjugate_and_union() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).union(&p(&[3, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(format!("{}", p(&[2, 1, 1])), "[2,1,1]");
        assert_eq!(format!("{}", Partition::empty()), "[]");
    }
}
