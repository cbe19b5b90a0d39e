use hl_core::hassett::{euler_genfun_prop51, euler_genus1_closed, genus0_rank_closedform, z_shift};
use hl_core::partition::factorial;
use hl_core::uvpoly::{q, qf, UVPoly};

fn egf(s: &hl_core::ps::FormalPS1, n: usize) -> hl_core::Q {
    s.coeff(n).as_constant().unwrap() * q(factorial(n) as i64)
}

#[test]
fn prop51_small_values() {
    let f = euler_genfun_prop51(11).unwrap();
    assert_eq!(egf(&f, 1), q(2));
    assert_eq!(egf(&f, 2), q(4));
    assert_eq!(egf(&f, 4), q(29));
    assert_eq!(egf(&f, 10), q(232076));
}

#[test]
fn genus1_closed_euler() {
    let f = euler_genus1_closed(10).unwrap();
    assert_eq!(egf(&f, 1), q(2));
    assert_eq!(egf(&f, 10), q(16275872));
}

#[test]
fn genus0_closedform_low_terms() {
    let s = genus0_rank_closedform(4).unwrap();
    assert_eq!(s.coeff(1), &UVPoly::one());
    assert_eq!(s.coeff(2), &UVPoly::constant(qf(-1, 2)));
    let expect = (&UVPoly::int(2) - &UVPoly::uv_pow(1)).scale(&qf(1, 6));
    assert_eq!(s.coeff(3), &expect);
}

#[test]
fn genus0_closedform_limit() {
    // 2y - (1 + y) log(1 + y) = y - Σ_{k≥2} (-1)^k y^k / (k(k-1))
    let s = genus0_rank_closedform(9).unwrap().at_one();
    for k in 2..=9i64 {
        let sign = if k % 2 == 0 { -1 } else { 1 };
        assert_eq!(s.coeff(k as usize).as_constant().unwrap(), qf(sign, k * (k - 1)));
    }
}

#[test]
fn z_shift_coefficients() {
    // [y^k/k!] = 1 - (1 + q + ... + q^{k-2}) for k >= 2
    let z = z_shift(6).unwrap();
    assert_eq!(z.coeff(1), &UVPoly::one());
    for k in 2..=6u32 {
        let mut expect = UVPoly::one();
        for i in 0..=k - 2 {
            expect -= &UVPoly::uv_pow(i);
        }
        assert_eq!(z.egf_coeff(k as usize), expect);
    }
}
