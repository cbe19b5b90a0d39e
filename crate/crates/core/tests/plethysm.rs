use std::collections::BTreeMap;

use hl_core::bisym::{BiKey, BiSymSeries};
use hl_core::partition::{gen_partitions, partitions_up_to, CharacterCache, Partition};
use hl_core::sym::SymSeries;
use hl_core::uvpoly::{q, UVPoly};
use proptest::prelude::*;

const N: usize = 5;

fn series(lo: usize, hi: usize, trunc: usize) -> impl Strategy<Value = SymSeries> {
    let parts: Vec<Partition> = partitions_up_to(hi).into_iter().filter(|p| p.size() >= lo).collect();
    let len = parts.len();
    prop::collection::vec((0..len, -3i64..=3, 0u32..=1, 0u32..=1), 0..8).prop_map(move |ts| {
        let mut s = SymSeries::zero(trunc);
        for (i, c, a, b) in ts {
            s.add_term(parts[i].clone(), UVPoly::monomial(q(c), a, b));
        }
        s
    })
}

fn schur(l: &[u32], trunc: usize, cache: &mut CharacterCache) -> SymSeries {
    SymSeries::schur(&Partition::new(l.to_vec()), trunc, cache)
}

#[test]
fn classical_plethysms() {
    let mut cache = CharacterCache::new();
    let h2 = schur(&[2], 4, &mut cache);
    let e2 = schur(&[1, 1], 4, &mut cache);
    let h2h2 = schur(&[4], 4, &mut cache).add(&schur(&[2, 2], 4, &mut cache));
    assert_eq!(h2.plethysm(&h2).unwrap(), h2h2);
    assert_eq!(e2.plethysm(&h2).unwrap(), schur(&[3, 1], 4, &mut cache));
    // h_2[h_3] = s_6 + s_{4,2}
    let h2 = schur(&[2], 6, &mut cache);
    let h3 = schur(&[3], 6, &mut cache);
    assert_eq!(h2.plethysm(&h3).unwrap(), schur(&[6], 6, &mut cache).add(&schur(&[4, 2], 6, &mut cache)));
}

#[test]
fn coefficients_are_line_elements() {
    // p_2 ∘ (u p_1) = u² p_2
    let u = SymSeries::monomial(Partition::row(1), UVPoly::u(), 3);
    let got = SymSeries::p(2, 3).plethysm(&u).unwrap();
    assert_eq!(got, SymSeries::monomial(Partition::row(2), UVPoly::monomial(q(1), 2, 0), 3));
}

#[test]
fn pleth_inverse_keeps_truncation() {
    let mut f = SymSeries::p(1, 6);
    f.add_term(Partition::new(vec![1, 1]), UVPoly::int(1));
    f.add_term(Partition::row(2), UVPoly::uv_pow(1));
    let inv = f.pleth_inverse().unwrap();
    assert_eq!(inv.trunc(), 6);
    assert_eq!(f.plethysm(&inv).unwrap(), SymSeries::p(1, 6));
    assert!(SymSeries::p(2, 6).pleth_inverse().is_err());
}

#[test]
fn inner_constant_term_rejected() {
    assert!(SymSeries::p(1, 3).plethysm(&SymSeries::one(3)).is_err());
}

#[test]
fn schur_expansion_of_small_powers() {
    let mut cache = CharacterCache::new();
    // p_1² = s_2 + s_{1,1}, p_2 = s_2 - s_{1,1}
    let p11 = SymSeries::monomial(Partition::new(vec![1, 1]), UVPoly::one(), 2).to_schur(&mut cache);
    assert_eq!(p11[&Partition::row(2)], UVPoly::one());
    assert_eq!(p11[&Partition::column(2)], UVPoly::one());
    let p2 = SymSeries::p(2, 2).to_schur(&mut cache);
    assert_eq!(p2[&Partition::column(2)], UVPoly::int(-1));
}

#[test]
fn coproduct_splits_h_n() {
    // Δh_n = Σ h_i ⊗ h_{n-i}
    let mut cache = CharacterCache::new();
    let n = 4;
    let d = BiSymSeries::coproduct(&SymSeries::homogeneous_h(n, n)).to_schur_pairs(&mut cache);
    let mut want = BTreeMap::new();
    for i in 0..=n {
        want.insert(BiKey::new(Partition::row(i as u32), Partition::row((n - i) as u32)), UVPoly::one());
    }
    let d: BTreeMap<_, _> = d.into_iter().filter(|(k, c)| k.size() == n && !c.is_zero()).collect();
    assert_eq!(d, want);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn associativity(f in series(0, N, N), g in series(1, N, N), h in series(1, N, N)) {
        let lhs = f.plethysm(&g).unwrap().plethysm(&h).unwrap();
        let rhs = f.plethysm(&g.plethysm(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_map(f in series(0, N, N), f2 in series(0, N, N), g in series(1, N, N)) {
        prop_assert_eq!(f.add(&f2).plethysm(&g).unwrap(), f.plethysm(&g).unwrap().add(&f2.plethysm(&g).unwrap()));
        prop_assert_eq!(f.mul(&f2).plethysm(&g).unwrap(), f.plethysm(&g).unwrap().mul(&f2.plethysm(&g).unwrap()));
        prop_assert_eq!(SymSeries::p(3, N).plethysm(&g).unwrap(), g.adams(3));
    }

    #[test]
    fn inverse_round_trip(tail in series(2, 6, 6)) {
        let f = SymSeries::p(1, 6).add(&tail);
        let inv = f.pleth_inverse().unwrap();
        prop_assert_eq!(inv.trunc(), 6);
        prop_assert_eq!(inv.plethysm(&f).unwrap(), SymSeries::p(1, 6));
    }

    #[test]
    fn exp_log_round_trip(g in series(1, 6, 6)) {
        prop_assert_eq!(g.exp_series().unwrap().log_series().unwrap(), g);
    }

    #[test]
    fn schur_round_trip(f in series(0, 6, 6)) {
        let mut cache = CharacterCache::new();
        prop_assert_eq!(SymSeries::from_schur(&f.to_schur(&mut cache), 6, &mut cache), f);
    }

    #[test]
    fn coproduct_is_multiplicative_and_symmetric(f in series(0, N, N), g in series(0, N, N)) {
        let d = |s: &SymSeries| BiSymSeries::coproduct(s);
        prop_assert_eq!(d(&f.mul(&g)), d(&f).mul(&d(&g)));
        prop_assert_eq!(d(&f).swap(), d(&f));
    }

    #[test]
    fn pleth2_of_injected_series(f in series(0, N, N), g in series(1, N, N)) {
        // (f ⊗ 1) ∘₂ g⁽²⁾ leaves the first factor alone; (1 ⊗ f) ∘₂ g⁽²⁾ = (f ∘ g)⁽²⁾
        let left = BiSymSeries::inject(&f, 1);
        let g2 = BiSymSeries::inject(&g, 2);
        prop_assert_eq!(left.pleth2(&g2).unwrap(), left.clone());
        prop_assert_eq!(BiSymSeries::inject(&f, 2).pleth2(&g2).unwrap(), BiSymSeries::inject(&f.plethysm(&g).unwrap(), 2));
    }

    #[test]
    fn bisym_schur_round_trip(f in series(0, 4, 4)) {
        let mut cache = CharacterCache::new();
        let b = BiSymSeries::coproduct(&f);
        let back = BiSymSeries::from_schur_pairs(&b.to_schur_pairs(&mut cache), 4, &mut cache);
        prop_assert_eq!(back, b);
    }
}

#[test]
fn gen_partitions_counts() {
    let counts: Vec<usize> = (0..=8).map(|n| gen_partitions(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22]);
}
