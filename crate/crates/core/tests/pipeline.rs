use hl_core::bisym::BiSymSeries;
use hl_core::hassett::{
    closed_series, exp_light, legendre_check, mstar_series, open_series, slice_n1, stability_ok, tropical_euler,
    SeriesFixture, Variant,
};
use hl_core::oracle::oracle_open_ch;
use hl_core::partition::{partitions_up_to, Partition};
use hl_core::sym::SymSeries;
use hl_core::uvpoly::{q, UVPoly};
use hl_core::Error;
use proptest::prelude::*;

const T: usize = 5;

fn series(lo: usize, hi: usize) -> impl Strategy<Value = SymSeries> {
    let parts: Vec<Partition> = partitions_up_to(hi).into_iter().filter(|p| p.size() >= lo).collect();
    let len = parts.len();
    prop::collection::vec((0..len, -3i64..=3, 0u32..=1), 1..10).prop_map(move |ts| {
        let mut s = SymSeries::zero(hi);
        for (i, c, k) in ts {
            s.add_term(parts[i].clone(), UVPoly::monomial(q(c), k, k));
        }
        s
    })
}

fn fixture(name: &str, g: u32, variant: Variant, data: SymSeries) -> SeriesFixture {
    SeriesFixture::new(name, g, variant, data).unwrap()
}

/// `h^{S_4}(M_{0,4}) = uv·s_4 - s_{2,2}` and `h^{S_3}(M_{0,3}) = s_3`.
fn toy_b0() -> SeriesFixture {
    let mut c = hl_core::partition::CharacterCache::new();
    let s = |l: &[u32], c: &mut _| SymSeries::schur(&Partition::new(l.to_vec()), 4, c);
    let data = s(&[3], &mut c).add(&s(&[4], &mut c).scale(&UVPoly::uv_pow(1))).sub(&s(&[2, 2], &mut c));
    fixture("b0", 0, Variant::Open, data)
}

#[test]
fn stability_examples() {
    assert!(!stability_ok(0, 2, 0));
    assert!(!stability_ok(0, 1, 5));
    assert!(stability_ok(0, 2, 1));
    assert!(stability_ok(0, 3, 0));
    assert!(!stability_ok(1, 0, 0));
    assert!(stability_ok(1, 0, 1));
    assert!(stability_ok(2, 0, 0));
}

#[test]
fn unstable_fixture_rejected() {
    assert!(SeriesFixture::new("x", 0, Variant::Open, SymSeries::p(1, 3)).is_err());
    assert!(SeriesFixture::new("x", 1, Variant::Open, SymSeries::p(1, 3)).is_ok());
}

#[test]
fn wrong_variant_rejected() {
    let b = toy_b0();
    assert!(matches!(closed_series(&b, &b), Err(Error::WrongVariant { .. })));
}

#[test]
fn genus0_open_small_values() {
    // M_{0,2|1} and M_{0,3} are points; M_{0,1|2} is unstable
    let a = open_series(&toy_b0()).unwrap();
    assert_eq!(a.numeric(2, 1).unwrap(), UVPoly::one());
    assert!(a.component(1, 2).unwrap().is_zero());
    assert_eq!(a.numeric(3, 0).unwrap(), UVPoly::one());
    // (2,2): Σ_k S(2,k) h(M_{0,2+k}) = h(M_{0,3}) + h(M_{0,4}) = 1 + (uv - 2)
    assert_eq!(a.numeric(2, 2).unwrap(), &UVPoly::uv_pow(1) - &UVPoly::one());
    assert!(matches!(a.component(3, 3), Err(Error::Truncation { .. })));
}

#[test]
fn tropical_guard() {
    let a = open_series(&toy_b0()).unwrap();
    assert!(matches!(tropical_euler(&a, 2, 2), Err(Error::Guard(_))));
}

#[test]
fn tropical_genus1_matches_definition() {
    let mut b = SymSeries::zero(3);
    b.add_term(Partition::row(1), UVPoly::uv_pow(1));
    b.add_term(Partition::column(2), UVPoly::monomial(q(1), 2, 2));
    let a = open_series(&fixture("b1", 1, Variant::Open, b)).unwrap();
    let t = tropical_euler(&a, 1, 1).unwrap();
    // s_1 ⊗ s_1 minus the weight-zero part of h_{1,1|1}, which vanishes here
    assert_eq!(t.coeff(&Partition::row(1), &Partition::row(1)), UVPoly::one());
}

#[test]
fn legendre_detects_corruption() {
    let b0 = toy_b0();
    let mut bad = b0.data.clone();
    bad.add_term(Partition::row(4), UVPoly::one());
    let bad = fixture("b0bar", 0, Variant::Closed, bad);
    assert!(!legendre_check(&b0, &bad));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn slice_n1_matches_open_pipeline(data in series(1, T)) {
        let b = fixture("b1", 1, Variant::Open, data);
        let a = open_series(&b).unwrap();
        for m in 0..T {
            let s = slice_n1(&b, m).unwrap();
            prop_assert!(s.sub(&a.component(m, 1).unwrap()).is_zero(), "m = {}", m);
        }
    }

    #[test]
    fn slice_n1_matches_closed_pipeline(data in series(1, T), b0 in series(3, T + 1)) {
        let bbar = fixture("b1bar", 1, Variant::Closed, data);
        let b0 = fixture("b0", 0, Variant::Open, b0);
        let a = closed_series(&bbar, &b0).unwrap();
        for m in 0..T {
            prop_assert!(slice_n1(&bbar, m).unwrap().sub(&a.component(m, 1).unwrap()).is_zero(), "m = {}", m);
        }
    }

    #[test]
    fn closed_series_composition_order(data in series(1, T), b0 in series(3, T + 1)) {
        let bbar = fixture("b1bar", 1, Variant::Closed, data);
        let b0 = fixture("b0", 0, Variant::Open, b0);
        let fast = closed_series(&bbar, &b0).unwrap();
        let slow = mstar_series(&bbar, &b0).unwrap().pleth2(&exp_light(T)).unwrap();
        for (m, n) in slow.support() {
            if stability_ok(1, m, n) {
                prop_assert!(slow.component(m, n).sub(&fast.component(m, n).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn oracle_matches_open_pipeline(data in series(1, 4)) {
        let b = fixture("b1", 1, Variant::Open, data);
        let a = open_series(&b).unwrap();
        for total in 0..=4 {
            for m in 0..=total {
                let n = total - m;
                if stability_ok(1, m, n) {
                    let o = oracle_open_ch(1, m, n, &b.data).unwrap();
                    prop_assert!(o.sub(&a.component(m, n).unwrap()).is_zero(), "({}, {})", m, n);
                }
            }
        }
    }

    #[test]
    fn open_pipeline_is_linear(x in series(1, T), y in series(1, T)) {
        let f = |d: SymSeries| open_series(&fixture("b", 1, Variant::Open, d)).unwrap().data;
        prop_assert_eq!(f(x.add(&y)), f(x).add(&f(y)));
    }
}

#[test]
fn exp_light_is_h_sum() {
    let e = exp_light(4);
    assert_eq!(e, BiSymSeries::inject(&SymSeries::h_sum(4), 2));
    assert!(e.is_pure_factor2());
}
