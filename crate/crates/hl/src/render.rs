//! Table rendering in text, CSV and LaTeX.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use hl_core::bisym::BiKey;
use hl_core::hassett::{stability_ok, HeavyLightResult, Variant};
use hl_core::partition::{CharacterCache, Partition};
use hl_core::uvpoly::{TPoly, UVPoly};
use num_traits::One;

use crate::pretty::{pretty_t, pretty_uv};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Schur,
    Power,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    Hodge,
    Poincare,
    Numeric,
    Weight0,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Latex,
}

#[derive(Clone, Debug)]
pub struct TableSpec {
    pub genus: u32,
    pub variant: Variant,
    pub basis: Basis,
    pub form: Form,
    pub arity: RangeInclusive<usize>,
    pub format: Format,
}

#[derive(Debug, thiserror::Error)]
pub enum RenderError {
    #[error("{0}")]
    Core(#[from] hl_core::Error),
    #[error("invalid table spec: {0}")]
    Spec(String),
}

/// Largest `m + n` for which the genus-1 closed coefficients are known to be diagonal.
pub const POINCARE_MAX_ARITY: usize = 10;

impl TableSpec {
    pub fn validate(&self, result: &HeavyLightResult) -> Result<(), RenderError> {
        if result.genus != self.genus || result.variant != self.variant {
            return Err(RenderError::Spec(format!(
                "result is genus {} {}, spec asks for genus {} {}",
                result.genus,
                result.variant.as_str(),
                self.genus,
                self.variant.as_str()
            )));
        }
        if *self.arity.end() > result.trunc() {
            return Err(hl_core::Error::Truncation { needed: *self.arity.end(), available: result.trunc() }.into());
        }
        if self.form == Form::Poincare
            && (self.variant != Variant::Closed || self.genus != 1 || *self.arity.end() > POINCARE_MAX_ARITY)
        {
            return Err(RenderError::Spec(format!(
                "poincare form needs genus 1 closed with max arity <= {POINCARE_MAX_ARITY}"
            )));
        }
        if self.form == Form::Weight0 && self.variant != Variant::Weight0 {
            return Err(RenderError::Spec("weight0 form needs a weight-zero result".into()));
        }
        Ok(())
    }
}

/// A coefficient after the form has been applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coef {
    UV(UVPoly),
    T(TPoly),
}

impl Coef {
    fn is_one(&self) -> bool {
        match self {
            Coef::UV(p) => p.as_constant().is_some_and(|c| c.is_one()),
            Coef::T(p) => p.degree() == Some(0) && p.coeff(0).is_one(),
        }
    }

    fn is_minus_one(&self) -> bool {
        match self {
            Coef::UV(p) => p.as_constant().is_some_and(|c| (-c).is_one()),
            Coef::T(p) => p.degree() == Some(0) && (-p.coeff(0)).is_one(),
        }
    }

    fn plain(&self) -> String {
        match self {
            Coef::UV(p) => pretty_uv(p).replace(' ', ""),
            Coef::T(p) => pretty_t(p).replace(' ', ""),
        }
    }

    fn latex(&self) -> String {
        latex_exponents(&self.plain())
    }
}

/// `t^10` becomes `t^{10}`.
fn latex_exponents(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        out.push(c);
        if c == '^' {
            out.push('{');
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                out.push(*d);
                chars.next();
            }
            out.push('}');
        }
    }
    out
}

pub struct Row {
    pub m: usize,
    pub n: usize,
    pub terms: Vec<(BiKey, Coef)>,
    /// Only for the numeric form.
    pub value: Option<Coef>,
}

fn apply_form(form: Form, p: &UVPoly) -> Result<Coef, RenderError> {
    Ok(match form {
        Form::Poincare => Coef::T(p.to_poincare()?),
        Form::Weight0 => Coef::UV(UVPoly::constant(p.constant_term())),
        Form::Hodge | Form::Numeric => Coef::UV(p.clone()),
    })
}

/// `(m, n)` pairs in table order: by `m + n`, then by `m`.
pub fn row_order(g: u32, arity: &RangeInclusive<usize>) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in arity.clone() {
        for m in 0..=total {
            if stability_ok(g, m, total - m) {
                out.push((m, total - m));
            }
        }
    }
    out
}

/// Rows of the table; empty components are omitted.
pub fn table_rows(spec: &TableSpec, result: &HeavyLightResult, cache: &mut CharacterCache) -> Result<Vec<Row>, RenderError> {
    spec.validate(result)?;
    let mut rows = Vec::new();
    for (m, n) in row_order(spec.genus, &spec.arity) {
        let comp = result.component(m, n)?;
        let comp = if spec.form == Form::Weight0 { comp.at_zero() } else { comp };
        if comp.is_zero() {
            continue;
        }
        if spec.form == Form::Numeric {
            let v = result.numeric(m, n)?;
            rows.push(Row { m, n, terms: Vec::new(), value: Some(Coef::UV(v)) });
            continue;
        }
        let raw: Vec<(BiKey, UVPoly)> = match spec.basis {
            Basis::Schur => comp.to_schur_pairs(cache).into_iter().collect(),
            Basis::Power => comp.terms().map(|(k, c)| (k.clone(), c.clone())).collect(),
        };
        let mut terms = Vec::with_capacity(raw.len());
        for (k, c) in raw {
            if !c.is_zero() {
                terms.push((k, apply_form(spec.form, &c)?));
            }
        }
        terms.sort_by(|(a, _), (b, _)| display_order(a, b));
        let value = match spec.form {
            Form::Weight0 => Some(Coef::UV(UVPoly::constant(result.numeric(m, n)?.constant_term()))),
            _ => None,
        };
        rows.push(Row { m, n, terms, value });
    }
    Ok(rows)
}

/// Light label first, then heavy label, each with parts compared as increasing sequences,
/// so `s_{2,1}` precedes `s_3`.
pub fn display_order(a: &BiKey, b: &BiKey) -> std::cmp::Ordering {
    a.right.parts().cmp(b.right.parts()).then_with(|| a.left.parts().cmp(b.left.parts()))
}

fn part_label(l: &Partition, braces_always: bool) -> String {
    let inner = l.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
    if !braces_always && l.len() == 1 && l.parts()[0] < 10 {
        inner
    } else {
        format!("{{{inner}}}")
    }
}

fn basis_label(basis: Basis, k: &BiKey, latex: bool) -> String {
    let sym = match basis {
        Basis::Schur => "s",
        Basis::Power => "p",
    };
    let mut out = String::new();
    // Rows without heavy points carry factor-2 labels only.
    let only_right = k.left.is_empty() && !latex;
    if !k.left.is_empty() {
        write!(out, "{sym}_{}^{{(1)}}", part_label(&k.left, latex)).unwrap();
    }
    if !k.right.is_empty() {
        if only_right {
            write!(out, "{sym}_{}", part_label(&k.right, latex)).unwrap();
        } else {
            write!(out, "{sym}_{}^{{(2)}}", part_label(&k.right, latex)).unwrap();
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

fn render_terms(basis: Basis, terms: &[(BiKey, Coef)], latex: bool) -> String {
    let mut out = String::new();
    for (i, (k, c)) in terms.iter().enumerate() {
        let label = basis_label(basis, k, latex);
        let body = if label == "1" {
            if latex { c.latex() } else { c.plain() }
        } else if c.is_one() {
            label
        } else if c.is_minus_one() {
            format!("-{label}")
        } else {
            let s = if latex { c.latex() } else { c.plain() };
            format!("({s}){label}")
        };
        match (i, body.strip_prefix('-')) {
            (0, _) => out.push_str(&body),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn render_rows(spec: &TableSpec, rows: &[Row]) -> String {
    let mut out = String::new();
    match spec.format {
        Format::Text => {
            for r in rows {
                let mut line = format!("({},{}): ", r.m, r.n);
                match (&r.value, r.terms.is_empty()) {
                    (Some(v), true) => line.push_str(&v.plain()),
                    (Some(v), false) => write!(line, "{}  [numeric {}]", render_terms(spec.basis, &r.terms, false), v.plain()).unwrap(),
                    (None, _) => line.push_str(&render_terms(spec.basis, &r.terms, false)),
                }
                writeln!(out, "{line}").unwrap();
            }
        }
        Format::Csv => {
            if spec.form == Form::Numeric {
                writeln!(out, "m,n,value").unwrap();
                for r in rows {
                    writeln!(out, "{},{},{}", r.m, r.n, r.value.as_ref().map(Coef::plain).unwrap_or_default()).unwrap();
                }
            } else {
                writeln!(out, "m,n,left,right,coeff").unwrap();
                for r in rows {
                    for (k, c) in &r.terms {
                        writeln!(out, "{},{},{},{},{}", r.m, r.n, csv_field(&k.left.to_string()), csv_field(&k.right.to_string()), c.plain())
                            .unwrap();
                    }
                }
            }
        }
        Format::Latex => {
            let numeric_col = rows.iter().any(|r| r.value.is_some() && !r.terms.is_empty());
            writeln!(out, "\\begin{{tabular}}{{{}}}", if numeric_col { "lll" } else { "ll" }).unwrap();
            writeln!(out, "\\hline").unwrap();
            for r in rows {
                let body = if r.terms.is_empty() {
                    r.value.as_ref().map(Coef::latex).unwrap_or_default()
                } else {
                    render_terms(spec.basis, &r.terms, true)
                };
                if numeric_col {
                    let v = r.value.as_ref().map(Coef::latex).unwrap_or_default();
                    writeln!(out, "$({},{})$ & ${body}$ & ${v}$ \\\\", r.m, r.n).unwrap();
                } else {
                    writeln!(out, "$({},{})$ & ${body}$ \\\\", r.m, r.n).unwrap();
                }
            }
            writeln!(out, "\\hline").unwrap();
            writeln!(out, "\\end{{tabular}}").unwrap();
        }
    }
    out
}

pub fn render_table(spec: &TableSpec, result: &HeavyLightResult, cache: &mut CharacterCache) -> Result<String, RenderError> {
    let rows = table_rows(spec, result, cache)?;
    Ok(render_rows(spec, &rows))
}

/// One bisymmetric series as a Schur-pair expression in the text style.
pub fn schur_pair_text(s: &hl_core::bisym::BiSymSeries, cache: &mut CharacterCache) -> String {
    let mut terms: Vec<(BiKey, Coef)> =
        s.to_schur_pairs(cache).into_iter().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, Coef::UV(c))).collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|(a, _), (b, _)| display_order(a, b));
    render_terms(Basis::Schur, &terms, false)
}
