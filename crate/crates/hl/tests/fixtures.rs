use hl::fixture::{fixture_dir, load_fixture_from, parse_fixture, write_fixture};
use hl::pretty::{parse_pretty, pretty_to_uv, pretty_uv};
use hl::uvparse::parse_uvpoly;
use hl_core::uvpoly::{qf, UVPoly};
use proptest::prelude::*;

const NAMES: [&str; 5] = ["b0", "b0bar", "b1", "b1bar", "b2w0"];

#[test]
fn shipped_files_are_canonical() {
    let dir = fixture_dir();
    for name in NAMES {
        let raw = std::fs::read_to_string(dir.join(format!("{name}.fix"))).unwrap();
        let body: String = raw.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        let f = load_fixture_from(&dir, name).unwrap();
        assert_eq!(write_fixture(&f), body, "{name}");
    }
}

#[test]
fn malformed_fixtures_rejected() {
    let head = "series b1\ngenus 1\nvariant open\ntruncation 3\n";
    assert!(parse_fixture(&format!("{head}term n=2 lambda=[2] poly=1*u^0*v^0\n"), "t").is_ok());
    assert!(parse_fixture(&format!("{head}term n=3 lambda=[2] poly=1*u^0*v^0\n"), "t").is_err());
    assert!(parse_fixture(&format!("{head}term n=4 lambda=[4] poly=1*u^0*v^0\n"), "t").is_err());
    assert!(parse_fixture(&format!("{head}term n=2 lambda=[2] poly=1*w^0\n"), "t").is_err());
    assert!(parse_fixture("genus 1\nvariant open\ntruncation 3\n", "t").is_err());
}

fn uvpoly() -> impl Strategy<Value = UVPoly> {
    prop::collection::vec((-20i64..=20, 1i64..=6, 0u32..=4, 0u32..=4), 0..6).prop_map(|ts| {
        ts.into_iter().fold(UVPoly::zero(), |acc, (n, d, a, b)| &acc + &UVPoly::monomial(qf(n, d), a, b))
    })
}

proptest! {
    #[test]
    fn canonical_poly_round_trip(p in uvpoly()) {
        prop_assert_eq!(parse_uvpoly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn pretty_poly_round_trip(p in uvpoly()) {
        let back = pretty_to_uv(&parse_pretty(&pretty_uv(&p)).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}
