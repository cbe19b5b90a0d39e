//! Heavy/light Hassett pipelines: equivariant and numeric generating series.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bisym::{BiKey, BiSymSeries};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ps::{binomial_uv, FormalPS1, FormalPS2};
use crate::sym::SymSeries;
use crate::uvpoly::{q, qf, UVPoly, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    Open,
    Closed,
    Weight0,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Open => "open",
            Variant::Closed => "closed",
            Variant::Weight0 => "weight0",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "open" => Some(Variant::Open),
            "closed" => Some(Variant::Closed),
            "weight0" => Some(Variant::Weight0),
            _ => None,
        }
    }
}

/// A generating series `Σ_n h^{S_n}(M_{g,n})` (or its closed or weight-zero analogue).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesFixture {
    pub name: String,
    pub genus: u32,
    pub variant: Variant,
    pub data: SymSeries,
}

impl SeriesFixture {
    /// Checks that every arity present satisfies `2g - 2 + n > 0`.
    pub fn new(name: &str, genus: u32, variant: Variant, data: SymSeries) -> Result<Self> {
        for (l, _) in data.terms() {
            if 2 * genus as i64 - 2 + l.size() as i64 <= 0 {
                return Err(Error::Fixture {
                    name: name.into(),
                    reason: format!("unstable arity {} in genus {genus}", l.size()),
                });
            }
        }
        Ok(SeriesFixture { name: name.into(), genus, variant, data })
    }

    pub fn trunc(&self) -> usize {
        self.data.trunc()
    }

    fn expect(&self, variants: &[Variant]) -> Result<()> {
        if variants.contains(&self.variant) {
            Ok(())
        } else {
            Err(Error::WrongVariant { expected: variants[0].as_str(), found: self.variant.as_str() })
        }
    }
}

/// An `S_m × S_n`-equivariant series over all `(m, n)` up to a total truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeavyLightResult {
    pub genus: u32,
    pub variant: Variant,
    pub data: BiSymSeries,
    pub provenance: Vec<String>,
}

impl HeavyLightResult {
    pub fn trunc(&self) -> usize {
        self.data.trunc()
    }

    /// The bidegree `(m, n)` part; errors when it lies beyond the truncation.
    pub fn component(&self, m: usize, n: usize) -> Result<BiSymSeries> {
        if m + n > self.trunc() {
            return Err(Error::Truncation { needed: m + n, available: self.trunc() });
        }
        Ok(self.data.component(m, n))
    }

    /// The numeric polynomial `m! n! [p⁽¹⁾_{1^m} p⁽²⁾_{1^n}]`.
    pub fn numeric(&self, m: usize, n: usize) -> Result<UVPoly> {
        let c = self.component(m, n)?;
        let f = Q::from_integer((crate::partition::factorial(m) as i64 * crate::partition::factorial(n) as i64).into());
        Ok(c.coeff(&Partition::column(m as u32), &Partition::column(n as u32)).scale(&f))
    }
}

pub fn stability_ok(g: u32, m: usize, n: usize) -> bool {
    2 * g as i64 - 2 + m as i64 + n.min(1) as i64 > 0
}

fn stable_part(s: &BiSymSeries, g: u32) -> BiSymSeries {
    let mut out = BiSymSeries::zero(s.trunc());
    for (k, c) in s.terms() {
        let (m, n) = k.bidegree();
        if stability_ok(g, m, n) {
            out.add_term(k.clone(), c.clone());
        }
    }
    out
}

/// `Exp⁽²⁾(p⁽²⁾_1) = Σ_{n ≥ 1} h⁽²⁾_n`.
pub fn exp_light(trunc: usize) -> BiSymSeries {
    BiSymSeries::inject(&SymSeries::h_sum(trunc), 2)
}

/// `a_g = Δ(b_g) ∘₂ Exp⁽²⁾(p⁽²⁾_1)`.
pub fn open_series(b: &SeriesFixture) -> Result<HeavyLightResult> {
    b.expect(&[Variant::Open, Variant::Weight0])?;
    let n = b.trunc();
    let data = BiSymSeries::coproduct(&b.data).pleth2(&exp_light(n))?;
    Ok(HeavyLightResult {
        genus: b.genus,
        variant: b.variant,
        data: stable_part(&data, b.genus),
        provenance: vec![b.name.clone(), format!("truncation {n}")],
    })
}

/// `p_1 - ∂b₀/∂p_1`, the plethystic inverse of `p_1 + ∂b̄₀/∂p_1`.
pub fn genus0_correction(b0: &SeriesFixture) -> Result<SymSeries> {
    if b0.genus != 0 {
        return Err(Error::Fixture { name: b0.name.clone(), reason: "expected genus 0".into() });
    }
    b0.expect(&[Variant::Open, Variant::Weight0])?;
    Ok(SymSeries::p(1, b0.trunc() - 1).sub(&b0.data.d_dp1()))
}

fn closed_inputs(bbar: &SeriesFixture, b0: &SeriesFixture) -> Result<(usize, SymSeries)> {
    bbar.expect(&[Variant::Closed])?;
    let corr = genus0_correction(b0)?;
    let n = bbar.trunc().min(corr.trunc());
    Ok((n, corr.truncate(n)))
}

/// `Δ(b̄_g) ∘₂ (p⁽²⁾_1 - ∂b⁽²⁾₀/∂p⁽²⁾_1)`.
pub fn mstar_series(bbar: &SeriesFixture, b0: &SeriesFixture) -> Result<BiSymSeries> {
    let (n, corr) = closed_inputs(bbar, b0)?;
    BiSymSeries::coproduct(&bbar.data.truncate(n)).pleth2(&BiSymSeries::inject(&corr, 2))
}

/// `ā_g = Δ(b̄_g) ∘₂ (p⁽²⁾_1 - ∂b⁽²⁾₀/∂p⁽²⁾_1) ∘₂ Exp⁽²⁾(p⁽²⁾_1)`.
///
/// The two inner factors are composed first in `Λ`, which is cheaper than
/// applying them one at a time to the bisymmetric series.
pub fn closed_series(bbar: &SeriesFixture, b0: &SeriesFixture) -> Result<HeavyLightResult> {
    let (n, corr) = closed_inputs(bbar, b0)?;
    let inner = corr.plethysm(&SymSeries::h_sum(n))?;
    let data = BiSymSeries::coproduct(&bbar.data.truncate(n)).pleth2(&BiSymSeries::inject(&inner, 2))?;
    Ok(HeavyLightResult {
        genus: bbar.genus,
        variant: Variant::Closed,
        data: stable_part(&data, bbar.genus),
        provenance: vec![bbar.name.clone(), b0.name.clone(), format!("truncation {n}")],
    })
}

/// `y + ((1 + y)^{uv} - uv·y - 1) / (uv - u²v²)` as an ordinary power series in `y`.
pub fn genus0_rank_closedform(order: usize) -> Result<FormalPS1> {
    let qq = UVPoly::uv_pow(1);
    let den = &qq - &qq.pow(2);
    let mut coeffs = vec![UVPoly::zero(); order + 1];
    if order >= 1 {
        coeffs[1] = UVPoly::one();
    }
    for (k, c) in coeffs.iter_mut().enumerate().skip(2) {
        *c = binomial_uv(k).div_exact(&den)?;
    }
    Ok(FormalPS1::from_coeffs("y", coeffs, order))
}

/// Whether `(p_1 - ∂b₀/∂p_1) ∘ (p_1 + ∂b̄₀/∂p_1) = p_1` up to the common truncation.
pub fn legendre_check(b0: &SeriesFixture, b0bar: &SeriesFixture) -> bool {
    let Ok(corr) = genus0_correction(b0) else { return false };
    let n = corr.trunc().min(b0bar.trunc().saturating_sub(1));
    let fwd = SymSeries::p(1, n).add(&b0bar.data.d_dp1().truncate(n));
    match corr.truncate(n).plethysm(&fwd) {
        Ok(comp) => comp == SymSeries::p(1, n),
        Err(_) => false,
    }
}

/// The rank of the open light-point substitution, `w - x = e^y - 1`.
fn w_shift(order: usize) -> FormalPS1 {
    let mut e = FormalPS1::exp_scaled("y", &UVPoly::one(), order);
    e = e.sub(&FormalPS1::constant("y", UVPoly::one(), order));
    e
}

/// The rank of the closed light-point substitution,
/// `z - x = e^y - 1 + (e^{uvy} - uv·e^y + uv - 1) / (uv - u²v²)`.
pub fn z_shift(order: usize) -> Result<FormalPS1> {
    let qq = UVPoly::uv_pow(1);
    let den = &qq - &qq.pow(2);
    let e_qy = FormalPS1::exp_scaled("y", &qq, order);
    let e_y = FormalPS1::exp_scaled("y", &UVPoly::one(), order);
    let mut frac = e_qy.sub(&e_y.scale(&qq));
    let mut c0 = frac.coeff(0).clone();
    c0 += &(&qq - &UVPoly::one());
    let mut coeffs: Vec<UVPoly> = frac.coeffs().to_vec();
    coeffs[0] = c0;
    for c in coeffs.iter_mut() {
        *c = c.div_exact(&den)?;
    }
    frac = FormalPS1::from_coeffs("y", coeffs, order);
    Ok(w_shift(order).add(&frac))
}

fn substitute_x(b: &FormalPS1, shift: &FormalPS1) -> Result<FormalPS2> {
    let order = b.order().min(shift.order());
    let x = FormalPS2::from_x(&FormalPS1::variable("x", order), "y");
    let inner = x.add(&FormalPS2::from_y("x", &shift.truncate(order)));
    FormalPS2::substitute_into(&b.truncate(order), &inner)
}

/// `a_g = b_g|_{x → w}` with `w = x + e^y - 1`.
pub fn cor_b_open(b: &FormalPS1) -> Result<FormalPS2> {
    substitute_x(b, &w_shift(b.order()))
}

/// `ā_g = b̄_g|_{x → z}`.
pub fn cor_b_closed(bbar: &FormalPS1) -> Result<FormalPS2> {
    substitute_x(bbar, &z_shift(bbar.order())?)
}

/// `ε(y) = (19y + 23y²/2 + 10y³/3 + y⁴/2) / 12`.
fn epsilon(order: usize) -> FormalPS1 {
    let c = [q(0), qf(19, 12), qf(23, 24), qf(10, 36), qf(1, 24)];
    FormalPS1::from_fn("y", order, |i| c.get(i).cloned().map(UVPoly::constant).unwrap_or_default())
}

fn const_ps(c: Q, order: usize) -> FormalPS1 {
    FormalPS1::constant("y", UVPoly::constant(c), order)
}

/// `-y/12 - log(1 - y)/2 + ε(e^y - 1)`, whose `yⁿ/n!` coefficient is `χ(M̄_{1,0|n})`.
pub fn euler_genfun_prop51(order: usize) -> Result<FormalPS1> {
    let y = FormalPS1::variable("y", order);
    let log1my = FormalPS1::log1p("y", order).compose(&y.neg())?;
    let eps = epsilon(order).compose(&w_shift(order))?;
    Ok(y.scale(&UVPoly::constant(qf(-1, 12))).sub(&log1my.scale(&UVPoly::constant(qf(1, 2)))).add(&eps))
}

/// `Σ χ(M̄_{1,n}) yⁿ/n! = -log(1 + g)/12 - log(1 - log(1 + g))/2 + ε(g)`,
/// with `g` the compositional inverse of `2y - (1 + y) log(1 + y)`.
pub fn euler_genus1_closed(order: usize) -> Result<FormalPS1> {
    let g = genus0_rank_closedform(order)?.at_one().reversion()?;
    let l = FormalPS1::log1p("y", order).compose(&g)?;
    let one = const_ps(q(1), order);
    let inner = one.sub(&l).log()?;
    let eps = epsilon(order).compose(&g)?;
    Ok(l.scale(&UVPoly::constant(qf(-1, 12))).sub(&inner.scale(&UVPoly::constant(qf(1, 2)))).add(&eps))
}

/// `h^{S_m × S_1}_{g, m|1} = (∂h^{S_{m+1}}_{g, m+1}/∂p_1)⁽¹⁾ · s⁽²⁾_1`.
pub fn slice_n1(fixture: &SeriesFixture, m: usize) -> Result<BiSymSeries> {
    if fixture.trunc() < m + 1 {
        return Err(Error::Truncation { needed: m + 1, available: fixture.trunc() });
    }
    let trunc = m + 1;
    if !stability_ok(fixture.genus, m, 1) {
        return Ok(BiSymSeries::zero(trunc));
    }
    let d = fixture.data.arity_part(m + 1).d_dp1();
    let mut out = BiSymSeries::zero(trunc);
    for (l, c) in d.terms() {
        out.add_term(BiKey::new(l.clone(), Partition::row(1)), c.clone());
    }
    Ok(out)
}

/// `χ^{S_m × S_n}(Δ_{g,m|n}) = s⁽¹⁾_m s⁽²⁾_n - h^{S_m × S_n}_{g,m|n}(0, 0)`, valid when the
/// tropical space is connected.
pub fn tropical_euler(open: &HeavyLightResult, m: usize, n: usize) -> Result<BiSymSeries> {
    if open.genus == 0 && m + n <= 4 {
        return Err(Error::Guard("tropical space may be disconnected for g = 0, m + n <= 4"));
    }
    let comp = open.component(m, n)?.at_zero();
    let hm = SymSeries::homogeneous_h(m, m + n);
    let hn = SymSeries::homogeneous_h(n, m + n);
    let prod = BiSymSeries::inject(&hm, 1).mul(&BiSymSeries::inject(&hn, 2));
    Ok(prod.sub(&comp))
}
