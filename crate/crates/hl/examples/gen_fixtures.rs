//! Regenerates the shipped fixture files.
//!
//! Usage: `cargo run --release -p hl --example gen_fixtures [OUT_DIR]`
//!
//! Sources:
//! - open genus 0 from the configuration spaces of the projective line modulo `PGL_2`;
//! - closed genus 0 by the tree recursion `b̄₀ = b₀∘(p₁ + b̄₀') - h₂∘b̄₀'`;
//! - open genus 1 from configuration spaces of an elliptic curve modulo translation,
//!   integrated over `M_{1,1}` with the Eichler-Shimura values;
//! - closed genus 1 from trees on `b₁` plus the necklace term;
//! - weight-zero genus 2 from the graph-sum identity `b̄ = Log(exp(Δ) Exp(b))` at `u = v = 0`.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use hl::fixture::{names, write_fixture};
use hl_core::hassett::{SeriesFixture, Variant};
use hl_core::partition::Partition;
use hl_core::sym::SymSeries;
use hl_core::uvpoly::{q, qf, UVPoly, Q};
use num_traits::{One, Zero};

const B0_TRUNC: usize = 13;
const B1_TRUNC: usize = 11;
const B2_TRUNC: usize = 6;
const GK_WEIGHT: i32 = 8;

fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut res = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if n > 1 {
        res = -res;
    }
    res
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u32
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `M_k(X) = (1/k) Σ_{d|k} μ(k/d) ψ_d(X)`.
fn necklace(k: u32, x: &UVPoly) -> UVPoly {
    let mut out = UVPoly::zero();
    for d in (1..=k).filter(|d| k % d == 0) {
        let m = mobius(k / d);
        if m != 0 {
            out.add_scaled(&x.adams(d), &q(m));
        }
    }
    out.scale(&qf(1, k as i64))
}

/// `c (c - 1) ... (c - r + 1) / r!`.
fn binom_poly(c: &UVPoly, r: usize) -> UVPoly {
    let mut acc = UVPoly::one();
    for i in 0..r {
        acc = &acc * &(c - &UVPoly::int(i as i64));
    }
    acc.scale(&Q::new(One::one(), (1..=r as i64).product::<i64>().into()))
}

/// `Σ_n e^{S_n}(F(X, n)) = ∏_k (1 + p_k)^{M_k(e(X))}`.
fn configurations(e: &UVPoly, trunc: usize) -> SymSeries {
    let mut out = SymSeries::one(trunc);
    for k in 1..=trunc as u32 {
        let m = necklace(k, e);
        let mut factor = SymSeries::zero(trunc);
        for r in 0..=trunc / k as usize {
            factor.add_term(Partition::new(vec![k; r]), binom_poly(&m, r));
        }
        out = out.mul(&factor);
    }
    out
}

fn divide_arity_at_least(s: &SymSeries, min: usize, d: &UVPoly) -> SymSeries {
    let mut out = SymSeries::zero(s.trunc());
    for (l, c) in s.terms() {
        if l.size() >= min {
            out.add_term(l.clone(), c.div_exact(d).expect("exact division"));
        }
    }
    out
}

fn gen_b0(trunc: usize) -> SymSeries {
    let qq = UVPoly::uv_pow(1);
    let pgl2 = &qq.pow(3) - &qq;
    let b0 = divide_arity_at_least(&configurations(&(&UVPoly::one() + &qq), trunc), 3, &pgl2);
    // ∂b₀/∂p₁ is the configuration series of the affine line modulo its affine group.
    let aff = &qq.pow(2) - &qq;
    let d = divide_arity_at_least(&configurations(&qq, trunc - 1), 2, &aff);
    assert_eq!(b0.d_dp1(), d, "derivative identity for genus 0");
    b0
}

fn gen_b0bar(b0: &SymSeries) -> SymSeries {
    let n = b0.trunc();
    let h2 = SymSeries::homogeneous_h(2, n);
    let mut bbar = SymSeries::zero(n);
    for _ in 0..=n {
        // arity n of the result only sees b̄₀' up to arity n - 2
        let d = extend(&bbar.d_dp1(), n);
        let inner = SymSeries::p(1, n).add(&d);
        let next = b0.plethysm(&inner).unwrap().sub(&h2.plethysm(&d).unwrap());
        if next == bbar {
            break;
        }
        bbar = next;
    }
    bbar
}

/// Re-reads `s` at a larger nominal truncation (its higher terms are unknown, hence zero).
fn extend(s: &SymSeries, trunc: usize) -> SymSeries {
    let mut out = SymSeries::zero(trunc);
    for (l, c) in s.terms() {
        out.add_term(l.clone(), c.clone());
    }
    out
}

/// Eichler-Shimura: `e_c(M_{1,1}, V_a ⊗ L^k)`.
fn integrate_m11(k: u32, a: u32) -> UVPoly {
    let twist = UVPoly::uv_pow(k);
    let base = if a == 0 {
        UVPoly::uv_pow(1)
    } else if a % 2 == 1 {
        UVPoly::zero()
    } else {
        let w = a + 2;
        let cusp = match w {
            0..=11 | 14 => UVPoly::zero(),
            12 => &UVPoly::monomial(q(1), 11, 0) + &UVPoly::monomial(q(1), 0, 11),
            _ => panic!("cusp forms of weight {w} not tabulated"),
        };
        &(-&UVPoly::one()) - &cusp
    };
    &twist * &base
}

/// Writes a symmetric polynomial as `Σ c_{k,a} (uv)^k h_a(u, v)`.
fn sl2_decompose(p: &UVPoly) -> Vec<(u32, u32, Q)> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    while !rest.is_zero() {
        let (&(i, j), c) = rest
            .terms()
            .max_by_key(|(&(i, j), _)| (i + j, i))
            .unwrap();
        assert!(i >= j, "polynomial is not symmetric in u, v");
        let c = c.clone();
        let (k, a) = (j, i - j);
        let mut piece = UVPoly::zero();
        for t in 0..=a {
            piece.add_term(k + t, k + a - t, c.clone());
        }
        rest = &rest - &piece;
        out.push((k, a, c));
    }
    out
}

fn gen_b1(trunc: usize) -> SymSeries {
    let e = &(&UVPoly::one() - &UVPoly::u()) * &(&UVPoly::one() - &UVPoly::v());
    let conf = configurations(&e, trunc);
    let mut out = SymSeries::zero(trunc);
    for (l, c) in conf.terms() {
        if l.is_empty() {
            continue;
        }
        let quot = c.div_exact(&e).expect("translation quotient");
        let mut val = UVPoly::zero();
        for (k, a, coef) in sl2_decompose(&quot) {
            val.add_scaled(&integrate_m11(k, a), &coef);
        }
        out.add_term(l.clone(), val);
    }
    out
}

/// `log(1 - X) = -Σ_r X^r / r`.
fn log_one_minus(x: &SymSeries) -> SymSeries {
    let n = x.trunc();
    let mut out = SymSeries::zero(n);
    let mut pw = SymSeries::one(n);
    for r in 1..=n {
        pw = pw.mul(x);
        out = out.sub(&pw.scale_q(&qf(1, r as i64)));
    }
    out
}

/// `1 / (1 - X)`.
fn geometric(x: &SymSeries) -> SymSeries {
    let n = x.trunc();
    let mut out = SymSeries::one(n);
    let mut pw = SymSeries::one(n);
    for _ in 1..=n {
        pw = pw.mul(x);
        out = out.add(&pw);
    }
    out
}

fn gen_b1bar(b1: &SymSeries, b0: &SymSeries, b0bar: &SymSeries) -> SymSeries {
    let n = b1.trunc();
    let bp = extend(&b0bar.d_dp1().truncate(n), n);
    let inner = SymSeries::p(1, n).add(&bp);
    let trees = b1.plethysm(&inner).unwrap();
    let v = extend(&b0.d_dp1().d_dp1(), n).truncate(n).plethysm(&inner).unwrap();
    let vi = extend(&b0.d_dpk(2), n).truncate(n).scale_q(&q(2)).plethysm(&inner).unwrap();
    let mut cyc = SymSeries::zero(n);
    for d in 1..=n as u32 {
        let w = Q::new((euler_phi(d) as i64).into(), (d as i64).into());
        cyc = cyc.add(&log_one_minus(&v.adams(d)).scale_q(&w));
    }
    let cyc = cyc.scale_q(&qf(-1, 2));
    let v2 = v.adams(2);
    let num = vi.scale_q(&q(2)).add(&vi.mul(&vi)).add(&v2);
    let refl = num.mul(&geometric(&v2)).scale_q(&qf(1, 4));
    trees.add(&cyc).add(&refl)
}

/// Series in `ħ^e p_λ` with rational coefficients, truncated at weight `2e + |λ| ≤ W`.
#[derive(Clone, Debug, PartialEq)]
struct HSeries {
    terms: BTreeMap<(i32, i32, Partition), Q>,
}

fn weight(e: i32, l: &Partition) -> i32 {
    2 * e + l.size() as i32
}

impl HSeries {
    fn zero() -> Self {
        HSeries { terms: BTreeMap::new() }
    }

    fn add_term(&mut self, e: i32, l: Partition, c: Q) {
        let w = weight(e, &l);
        if w > GK_WEIGHT || c.is_zero() {
            return;
        }
        let key = (w, e, l);
        let entry = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    fn from_sym(s: &SymSeries, e: i32) -> Self {
        let mut out = Self::zero();
        for (l, c) in s.terms() {
            out.add_term(e, l.clone(), c.constant_term());
        }
        out
    }

    fn part(&self, e: i32, trunc: usize) -> SymSeries {
        let mut out = SymSeries::zero(trunc);
        for ((_, ee, l), c) in &self.terms {
            if *ee == e {
                out.add_term(l.clone(), UVPoly::constant(c.clone()));
            }
        }
        out
    }

    fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((_, e, l), c) in &o.terms {
            out.add_term(*e, l.clone(), c.clone());
        }
        out
    }

    fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero();
        for ((_, e, l), d) in &self.terms {
            out.add_term(*e, l.clone(), d * c);
        }
        out
    }

    fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<(i32, i32, Partition), Q> = BTreeMap::new();
        for ((w1, e1, l1), c1) in &self.terms {
            for ((w2, e2, l2), c2) in &o.terms {
                if w1 + w2 > GK_WEIGHT {
                    break;
                }
                *acc.entry((w1 + w2, e1 + e2, l1.union(l2))).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        HSeries { terms: acc }
    }

    fn psi(&self, k: u32) -> Self {
        let mut out = Self::zero();
        for ((_, e, l), c) in &self.terms {
            out.add_term(e * k as i32, l.scale(k), c.clone());
        }
        out
    }

    fn min_weight(&self) -> i32 {
        self.terms.keys().next().map_or(i32::MAX, |k| k.0)
    }

    /// `Σ_r X^r / r!` for `X` of positive weight.
    fn exp_ord(&self) -> Self {
        assert!(self.min_weight() >= 1);
        let mut out = Self::zero();
        out.add_term(0, Partition::empty(), q(1));
        let mut pw = out.clone();
        for r in 1..=GK_WEIGHT {
            pw = pw.mul(self).scale(&qf(1, r as i64));
            out = out.add(&pw);
        }
        out
    }

    /// `log(1 + X)` for `X` of positive weight.
    fn log_ord(&self) -> Self {
        assert!(self.min_weight() >= 1);
        let mut out = Self::zero();
        let mut pw = Self::zero();
        pw.add_term(0, Partition::empty(), q(1));
        for r in 1..=GK_WEIGHT {
            pw = pw.mul(self);
            let s = if r % 2 == 1 { 1 } else { -1 };
            out = out.add(&pw.scale(&qf(s, r as i64)));
        }
        out
    }

    fn exp_pleth(&self) -> Self {
        let mut arg = Self::zero();
        for k in 1..=GK_WEIGHT as u32 {
            arg = arg.add(&self.psi(k).scale(&qf(1, k as i64)));
        }
        arg.exp_ord()
    }

    fn log_pleth(&self) -> Self {
        let mut x = self.clone();
        x.add_term(0, Partition::empty(), q(-1));
        let l = x.log_ord();
        let mut out = Self::zero();
        for k in 1..=GK_WEIGHT as u32 {
            let m = mobius(k);
            if m != 0 {
                out = out.add(&l.psi(k).scale(&qf(m, k as i64)));
            }
        }
        out
    }

    /// `Δ = Σ_n ħ^n ((n/2) ∂²/∂p_n² + ∂/∂p_{2n})`.
    fn laplacian(&self) -> Self {
        let mut out = Self::zero();
        for ((_, e, l), c) in &self.terms {
            let mut distinct: Vec<u32> = l.parts().to_vec();
            distinct.dedup();
            for &n in &distinct {
                let m = l.multiplicity(n) as i64;
                if m >= 2 {
                    let rest = l.remove_part(n).unwrap().remove_part(n).unwrap();
                    out.add_term(e + n as i32, rest, c * qf(m * (m - 1) * n as i64, 2));
                }
                if n % 2 == 0 {
                    let rest = l.remove_part(n).unwrap();
                    out.add_term(e + n as i32 / 2, rest, c * q(m));
                }
            }
        }
        out
    }

    fn exp_laplacian(&self) -> Self {
        let mut out = self.clone();
        let mut t = self.clone();
        for r in 1.. {
            t = t.laplacian().scale(&qf(1, r));
            if t.terms.is_empty() {
                break;
            }
            out = out.add(&t);
        }
        out
    }
}

fn h_sum_from(start: usize, trunc: usize) -> SymSeries {
    let mut s = SymSeries::zero(trunc);
    for n in start..=trunc {
        s = s.add(&SymSeries::homogeneous_h(n, trunc));
    }
    s
}

/// Genus-2 part of `Log(exp(Δ) Exp(ħ⁻¹b₀ + b₁ + ħb₂))` at `u = v = 0`, with a check of
/// the genus-0 and genus-1 parts.
fn gk_genus2(b0: &SymSeries, b1: &SymSeries, b2: Option<&SymSeries>) -> SymSeries {
    let mut b = HSeries::from_sym(b0, -1).add(&HSeries::from_sym(b1, 0));
    if let Some(b2) = b2 {
        b = b.add(&HSeries::from_sym(b2, 1));
    }
    let t = Instant::now();
    let ex = b.exp_pleth();
    eprintln!("  Exp: {} terms, {:?}", ex.terms.len(), t.elapsed());
    let lap = ex.exp_laplacian();
    eprintln!("  exp(Δ): {} terms, {:?}", lap.terms.len(), t.elapsed());
    let out = lap.log_pleth();
    eprintln!("  Log: {} terms, {:?}", out.terms.len(), t.elapsed());
    let g0 = out.part(-1, 10);
    assert_eq!(g0, h_sum_from(3, 10), "weight-zero genus 0 must be trivial");
    let g1 = out.part(0, 8);
    assert_eq!(g1, h_sum_from(1, 8), "weight-zero genus 1 must be trivial");
    out.part(1, B2_TRUNC)
}

fn gen_b2_weight0(b0: &SymSeries, b1: &SymSeries) -> SymSeries {
    let n = B2_TRUNC;
    let f = gk_genus2(&b0.at_zero(), &b1.at_zero(), None);
    let target = h_sum_from(0, n).sub(&f);
    let inv = SymSeries::h_sum(n).pleth_inverse().unwrap();
    let b2 = target.plethysm(&inv).unwrap();
    let full = gk_genus2(&b0.at_zero(), &b1.at_zero(), Some(&b2));
    assert_eq!(full, h_sum_from(0, n), "weight-zero genus 2 must be trivial");
    b2
}

fn main() {
    let out_dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures")));
    std::fs::create_dir_all(&out_dir).unwrap();
    let t = Instant::now();
    let save = |f: SeriesFixture| {
        let path = out_dir.join(format!("{}.fix", f.name));
        let mut text = String::from("# generated by examples/gen_fixtures.rs\n");
        text.push_str(&write_fixture(&f));
        std::fs::write(&path, text).unwrap();
        eprintln!("wrote {} ({} terms)", path.display(), f.data.num_terms());
    };

    let b0 = gen_b0(B0_TRUNC);
    eprintln!("b0 {:?}", t.elapsed());
    let b0bar = gen_b0bar(&b0);
    eprintln!("b0bar {:?}", t.elapsed());
    let b1 = gen_b1(B1_TRUNC);
    eprintln!("b1 {:?}", t.elapsed());
    let b1bar = gen_b1bar(&b1, &b0, &b0bar);
    eprintln!("b1bar {:?}", t.elapsed());
    let b2 = gen_b2_weight0(&b0, &b1);
    eprintln!("b2 {:?}", t.elapsed());

    save(SeriesFixture::new(names::B0, 0, Variant::Open, b0).unwrap());
    save(SeriesFixture::new(names::B0BAR, 0, Variant::Closed, b0bar).unwrap());
    save(SeriesFixture::new(names::B1, 1, Variant::Open, b1).unwrap());
    save(SeriesFixture::new(names::B1BAR, 1, Variant::Closed, b1bar).unwrap());
    save(SeriesFixture::new(names::B2_WEIGHT0, 2, Variant::Weight0, b2).unwrap());
}
