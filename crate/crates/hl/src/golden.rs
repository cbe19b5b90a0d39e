//! Reference tables shipped with the crate, compared monomial by monomial.
//!
//! ```text
//! kind equivariant-poincare | numeric-hodge | weight0
//! genus 1
//! variant closed
//! row <m> <n> [partial|inferred]
//! value <poly>
//! prefix <poly>
//! term <heavy partition> <light partition> <poly>
//! ```

use std::collections::{BTreeMap, BTreeSet};

use hl_core::bisym::BiKey;
use hl_core::hassett::{HeavyLightResult, Variant};
use hl_core::partition::CharacterCache;
use hl_core::uvpoly::{UVPoly, Q};
use num_traits::Zero;

use crate::fixture::parse_partition;
use crate::pretty::{parse_pretty, Exps};

pub const GENUS1_CLOSED_EQUIVARIANT: &str = include_str!("../golden/genus1_closed_equivariant.golden");
pub const GENUS1_CLOSED_NUMERIC: &str = include_str!("../golden/genus1_closed_numeric.golden");
pub const GENUS2_WEIGHT0: &str = include_str!("../golden/genus2_weight0.golden");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    EquivariantPoincare,
    NumericHodge,
    Weight0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowMode {
    Full,
    /// Only the listed monomials are compared.
    Partial,
    /// Completed from a printed prefix by symmetry.
    Inferred,
}

pub type Monomials = BTreeMap<Exps, Q>;

#[derive(Clone, Debug)]
pub struct GoldenRow {
    pub m: usize,
    pub n: usize,
    pub mode: RowMode,
    pub value: Option<Monomials>,
    pub prefix: Option<Monomials>,
    pub terms: Vec<(BiKey, Monomials)>,
}

#[derive(Clone, Debug)]
pub struct GoldenTable {
    pub kind: Kind,
    pub genus: u32,
    pub variant: Variant,
    pub rows: Vec<GoldenRow>,
}

#[derive(Debug, thiserror::Error)]
#[error("{file}:{line}: {msg}")]
pub struct GoldenError {
    pub file: String,
    pub line: usize,
    pub msg: String,
}

pub fn parse_golden(text: &str, file: &str) -> Result<GoldenTable, GoldenError> {
    let mut kind = None;
    let mut genus = None;
    let mut variant = None;
    let mut rows: Vec<GoldenRow> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let err = |msg: String| GoldenError { file: file.to_string(), line: i + 1, msg };
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let key = words.next().unwrap_or_default();
        let args: Vec<&str> = words.collect();
        let poly = |s: &str| parse_pretty(s).map_err(|e| err(format!("column {}: {}", e.col, e.msg)));
        match (key, args.as_slice()) {
            ("kind", [k]) => {
                kind = Some(match *k {
                    "equivariant-poincare" => Kind::EquivariantPoincare,
                    "numeric-hodge" => Kind::NumericHodge,
                    "weight0" => Kind::Weight0,
                    other => return Err(err(format!("unknown kind `{other}`"))),
                })
            }
            ("genus", [g]) => genus = Some(g.parse().map_err(|_| err(format!("bad genus `{g}`")))?),
            ("variant", [v]) => variant = Some(Variant::parse(v).ok_or_else(|| err(format!("unknown variant `{v}`")))?),
            ("row", [m, n, rest @ ..]) => {
                let m = m.parse().map_err(|_| err(format!("bad m `{m}`")))?;
                let n = n.parse().map_err(|_| err(format!("bad n `{n}`")))?;
                let mode = match rest {
                    [] => RowMode::Full,
                    ["partial"] => RowMode::Partial,
                    ["inferred"] => RowMode::Inferred,
                    _ => return Err(err(format!("bad row flags {rest:?}"))),
                };
                if rows.iter().any(|r| (r.m, r.n) == (m, n)) {
                    return Err(err(format!("duplicate row ({m},{n})")));
                }
                rows.push(GoldenRow { m, n, mode, value: None, prefix: None, terms: Vec::new() });
            }
            ("value" | "prefix", _) | ("term", [_, _, ..]) => {
                let row = rows.last_mut().ok_or_else(|| err(format!("`{key}` before any `row`")))?;
                match key {
                    "value" => row.value = Some(poly(&args.concat())?),
                    "prefix" => row.prefix = Some(poly(&args.concat())?),
                    _ => {
                        let left = parse_partition(args[0]).ok_or_else(|| err(format!("bad partition `{}`", args[0])))?;
                        let right = parse_partition(args[1]).ok_or_else(|| err(format!("bad partition `{}`", args[1])))?;
                        if (left.size(), right.size()) != (row.m, row.n) {
                            return Err(err(format!("term {left} {right} does not belong to row ({},{})", row.m, row.n)));
                        }
                        let key = BiKey::new(left, right);
                        if row.terms.iter().any(|(k, _)| *k == key) {
                            return Err(err("duplicate term".into()));
                        }
                        row.terms.push((key, poly(&args[2..].concat())?));
                    }
                }
            }
            _ => return Err(err(format!("cannot parse `{line}`"))),
        }
    }
    let eof = |msg: &str| GoldenError { file: file.to_string(), line: text.lines().count(), msg: msg.into() };
    Ok(GoldenTable {
        kind: kind.ok_or_else(|| eof("missing `kind`"))?,
        genus: genus.ok_or_else(|| eof("missing `genus`"))?,
        variant: variant.ok_or_else(|| eof("missing `variant`"))?,
        rows,
    })
}

pub fn genus1_closed_equivariant() -> GoldenTable {
    parse_golden(GENUS1_CLOSED_EQUIVARIANT, "genus1_closed_equivariant.golden").expect("shipped golden table parses")
}

pub fn genus1_closed_numeric() -> GoldenTable {
    parse_golden(GENUS1_CLOSED_NUMERIC, "genus1_closed_numeric.golden").expect("shipped golden table parses")
}

pub fn genus2_weight0() -> GoldenTable {
    parse_golden(GENUS2_WEIGHT0, "genus2_weight0.golden").expect("shipped golden table parses")
}

/// Outcome of comparing one row.
#[derive(Clone, Debug)]
pub struct RowReport {
    pub m: usize,
    pub n: usize,
    pub mode: RowMode,
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl RowReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn uv_monomials(p: &UVPoly) -> Monomials {
    p.terms().map(|(&(a, b), c)| ((a, b, 0), c.clone())).collect()
}

fn t_monomials(p: &UVPoly) -> hl_core::Result<Monomials> {
    Ok(p.to_poincare()?.terms().map(|(&k, c)| ((0, 0, k), c.clone())).collect())
}

fn show(e: &Exps) -> String {
    match e {
        (0, 0, 0) => "1".into(),
        (0, 0, t) => format!("t^{t}"),
        (a, b, _) => format!("u^{a}v^{b}"),
    }
}

fn compare_monomials(label: &str, want: &Monomials, got: &Monomials, only_listed: bool, out: &mut Vec<String>) -> usize {
    let keys: BTreeSet<&Exps> = if only_listed { want.keys().collect() } else { want.keys().chain(got.keys()).collect() };
    for e in &keys {
        let w = want.get(e).cloned().unwrap_or_else(Q::zero);
        let g = got.get(e).cloned().unwrap_or_else(Q::zero);
        if w != g {
            out.push(format!("{label} {}: expected {w}, computed {g}", show(e)));
        }
    }
    keys.len()
}

/// Compares every row except those with exactly one light point in the equivariant tables.
pub fn compare(table: &GoldenTable, result: &HeavyLightResult, cache: &mut CharacterCache) -> hl_core::Result<Vec<RowReport>> {
    let mut reports = Vec::new();
    for row in &table.rows {
        if row.n == 1 && table.kind != Kind::NumericHodge {
            continue;
        }
        let mut rep = RowReport { m: row.m, n: row.n, mode: row.mode, checked: 0, mismatches: Vec::new() };
        let only_listed = row.mode == RowMode::Partial;
        if let Some(want) = &row.value {
            let num = result.numeric(row.m, row.n)?;
            let got = match table.kind {
                Kind::Weight0 => uv_monomials(&UVPoly::constant(num.constant_term())),
                Kind::NumericHodge => uv_monomials(&num),
                Kind::EquivariantPoincare => t_monomials(&num)?,
            };
            rep.checked += compare_monomials("value", want, &got, only_listed, &mut rep.mismatches);
        }
        if let (Some(prefix), Some(value)) = (&row.prefix, &row.value) {
            for (e, c) in prefix {
                if value.get(e) != Some(c) {
                    rep.mismatches.push(format!("completed value disagrees with printed prefix at {}", show(e)));
                }
            }
        }
        if !row.terms.is_empty() {
            let comp = result.component(row.m, row.n)?;
            let comp = if table.kind == Kind::Weight0 { comp.at_zero() } else { comp };
            let pairs = comp.to_schur_pairs(cache);
            let keys: BTreeSet<&BiKey> = if only_listed {
                row.terms.iter().map(|(k, _)| k).collect()
            } else {
                row.terms.iter().map(|(k, _)| k).chain(pairs.keys()).collect()
            };
            let empty = Monomials::new();
            for k in keys {
                let want = row.terms.iter().find(|(kk, _)| kk == k).map(|(_, m)| m).unwrap_or(&empty);
                let p = pairs.get(k).cloned().unwrap_or_else(UVPoly::zero);
                let got = match table.kind {
                    Kind::EquivariantPoincare => t_monomials(&p)?,
                    _ => uv_monomials(&p),
                };
                let label = format!("s{}*s{}", k.left, k.right);
                rep.checked += compare_monomials(&label, want, &got, only_listed, &mut rep.mismatches);
            }
        }
        reports.push(rep);
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_parse() {
        assert_eq!(genus1_closed_equivariant().rows.len(), 10);
        assert_eq!(genus1_closed_numeric().rows.len(), 11);
        assert_eq!(genus2_weight0().rows.len(), 15);
    }

    #[test]
    fn inferred_row_extends_prefix() {
        let t = genus1_closed_numeric();
        let r = t.rows.last().unwrap();
        assert_eq!(r.mode, RowMode::Inferred);
        let v = r.value.as_ref().unwrap();
        for (e, c) in r.prefix.as_ref().unwrap() {
            assert_eq!(v.get(e), Some(c));
        }
        // reflection of the uv-degree about 11
        for (&(a, b, _), c) in v {
            if a == b {
                assert_eq!(v.get(&(11 - a, 11 - b, 0)), Some(c));
            }
        }
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(parse_golden("kind weight0\ngenus 2\nvariant weight0\nterm [] [2] -1\n", "x").is_err());
        assert!(parse_golden("kind weight0\ngenus 2\nvariant weight0\nrow 0 2\nterm [] [3] -1\n", "x").is_err());
        assert!(parse_golden("kind nope\n", "x").is_err());
    }
}
