//! Line-oriented fixture files holding a truncated symmetric series.
//!
//! ```text
//! # comment
//! series b1bar
//! genus 1
//! variant closed
//! truncation 11
//! term n=3 lambda=[2,1] poly=1*u^1*v^1
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use hl_core::hassett::{SeriesFixture, Variant};
use hl_core::partition::Partition;
use hl_core::sym::SymSeries;

use crate::uvparse::parse_uvpoly;

#[derive(Debug, thiserror::Error)]
pub enum FixtureError {
    #[error("{file}:{line}:{col}: {msg}")]
    Parse { file: String, line: usize, col: usize, msg: String },
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("{0}")]
    Invalid(#[from] hl_core::Error),
}

struct Ctx<'a> {
    file: &'a str,
    line: usize,
}

impl Ctx<'_> {
    fn err(&self, col: usize, msg: impl Into<String>) -> FixtureError {
        FixtureError::Parse { file: self.file.to_string(), line: self.line, col: col + 1, msg: msg.into() }
    }
}

fn parse_int<T: std::str::FromStr>(ctx: &Ctx, s: &str, col: usize) -> Result<T, FixtureError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ctx.err(col, format!("expected a nonnegative integer, found `{s}`")));
    }
    s.parse().map_err(|_| ctx.err(col, format!("integer out of range `{s}`")))
}

pub fn parse_partition(s: &str) -> Option<Partition> {
    let inner = s.strip_prefix('[')?.strip_suffix(']')?;
    if inner.is_empty() {
        return Some(Partition::empty());
    }
    let mut parts = Vec::new();
    for p in inner.split(',') {
        if p.is_empty() || !p.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        parts.push(p.parse().ok()?);
    }
    Partition::from_decreasing(parts).ok()
}

/// Parses fixture text; `file` is only used in error messages.
pub fn parse_fixture(text: &str, file: &str) -> Result<SeriesFixture, FixtureError> {
    let mut name = None;
    let mut genus = None;
    let mut variant = None;
    let mut trunc: Option<usize> = None;
    let mut terms = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let ctx = Ctx { file, line: i + 1 };
        let line = raw.trim_end();
        if line.trim_start().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (key, rest) = line.split_once(' ').ok_or_else(|| ctx.err(0, format!("missing value after `{line}`")))?;
        let vcol = key.len() + 1;
        let dup = |ctx: &Ctx| ctx.err(0, format!("duplicate `{key}` line"));
        match key {
            "series" => {
                if name.replace(rest.to_string()).is_some() {
                    return Err(dup(&ctx));
                }
            }
            "genus" => {
                if genus.replace(parse_int::<u32>(&ctx, rest, vcol)?).is_some() {
                    return Err(dup(&ctx));
                }
            }
            "variant" => {
                let v = Variant::parse(rest).ok_or_else(|| ctx.err(vcol, format!("unknown variant `{rest}`")))?;
                if variant.replace(v).is_some() {
                    return Err(dup(&ctx));
                }
            }
            "truncation" => {
                if trunc.replace(parse_int::<usize>(&ctx, rest, vcol)?).is_some() {
                    return Err(dup(&ctx));
                }
            }
            "term" => {
                let t = trunc.ok_or_else(|| ctx.err(0, "`term` before `truncation`"))?;
                let mut col = vcol;
                let mut fields = rest.split(' ');
                let mut field = |prefix: &str, col: &mut usize| -> Result<(usize, &str), FixtureError> {
                    let f = fields.next().ok_or_else(|| ctx.err(*col, format!("missing `{prefix}`")))?;
                    let at = *col;
                    *col += f.len() + 1;
                    f.strip_prefix(prefix).map(|v| (at + prefix.len(), v)).ok_or_else(|| ctx.err(at, format!("expected `{prefix}`")))
                };
                let (ncol, nstr) = field("n=", &mut col)?;
                let n: usize = parse_int(&ctx, nstr, ncol)?;
                let (lcol, lstr) = field("lambda=", &mut col)?;
                let lambda = parse_partition(lstr).ok_or_else(|| ctx.err(lcol, format!("bad partition `{lstr}`")))?;
                let (pcol, pstr) = field("poly=", &mut col)?;
                if fields.next().is_some() {
                    return Err(ctx.err(col, "trailing fields"));
                }
                if lambda.size() != n {
                    return Err(ctx.err(ncol, format!("n={n} but {lambda} has size {}", lambda.size())));
                }
                if n > t {
                    return Err(ctx.err(ncol, format!("arity {n} exceeds truncation {t}")));
                }
                let poly = parse_uvpoly(pstr).map_err(|e| ctx.err(pcol + e.col, e.msg))?;
                if !seen.insert(lambda.clone()) {
                    return Err(ctx.err(lcol, format!("duplicate term {lambda}")));
                }
                terms.push((lambda, poly));
            }
            _ => return Err(ctx.err(0, format!("unknown key `{key}`"))),
        }
    }
    let eof = Ctx { file, line: text.lines().count() };
    let name = name.ok_or_else(|| eof.err(0, "missing `series`"))?;
    let genus = genus.ok_or_else(|| eof.err(0, "missing `genus`"))?;
    let variant = variant.ok_or_else(|| eof.err(0, "missing `variant`"))?;
    let trunc = trunc.ok_or_else(|| eof.err(0, "missing `truncation`"))?;
    let mut data = SymSeries::zero(trunc);
    for (l, c) in terms {
        data.add_term(l, c);
    }
    Ok(SeriesFixture::new(&name, genus, variant, data)?)
}

/// Canonical text form: header, then terms in partition order.
pub fn write_fixture(f: &SeriesFixture) -> String {
    let mut s = String::new();
    writeln!(s, "series {}", f.name).unwrap();
    writeln!(s, "genus {}", f.genus).unwrap();
    writeln!(s, "variant {}", f.variant.as_str()).unwrap();
    writeln!(s, "truncation {}", f.trunc()).unwrap();
    for (l, c) in f.data.terms() {
        writeln!(s, "term n={} lambda={} poly={}", l.size(), l, c).unwrap();
    }
    s
}

/// `HL_FIXTURE_DIR`, or the fixtures shipped with this crate.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os("HL_FIXTURE_DIR") {
        Some(d) => PathBuf::from(d),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

pub fn load_fixture_from(dir: &Path, name: &str) -> Result<SeriesFixture, FixtureError> {
    let path = dir.join(format!("{name}.fix"));
    let text = std::fs::read_to_string(&path).map_err(|e| FixtureError::Io(path.clone(), e))?;
    parse_fixture(&text, &path.display().to_string())
}

pub fn load_fixture(name: &str) -> Result<SeriesFixture, FixtureError> {
    load_fixture_from(&fixture_dir(), name)
}

/// The shipped fixture names.
pub mod names {
    pub const B0: &str = "b0";
    pub const B0BAR: &str = "b0bar";
    pub const B1: &str = "b1";
    pub const B1BAR: &str = "b1bar";
    pub const B2_WEIGHT0: &str = "b2w0";

    /// Open fixture for a genus, weight-zero for genus 2.
    pub fn open(genus: u32) -> Option<&'static str> {
        match genus {
            0 => Some(B0),
            1 => Some(B1),
            2 => Some(B2_WEIGHT0),
            _ => None,
        }
    }

    pub fn closed(genus: u32) -> Option<&'static str> {
        match genus {
            0 => Some(B0BAR),
            1 => Some(B1BAR),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "# toy\nseries t\ngenus 0\nvariant open\ntruncation 3\nterm n=3 lambda=[3] poly=1*u^0*v^0\n";

    #[test]
    fn minimal_round_trip() {
        let f = parse_fixture(MINIMAL, "t").unwrap();
        assert_eq!(f.data.num_terms(), 1);
        let w = write_fixture(&f);
        assert_eq!(write_fixture(&parse_fixture(&w, "t").unwrap()), w);
        assert_eq!(w, MINIMAL.replace("# toy\n", ""));
    }

    #[test]
    fn duplicate_term_rejected() {
        let t = format!("{MINIMAL}term n=3 lambda=[3] poly=2*u^0*v^0\n");
        let e = parse_fixture(&t, "t").unwrap_err().to_string();
        assert!(e.contains("t:7:"), "{e}");
        assert!(e.contains("duplicate"), "{e}");
    }

    #[test]
    fn duplicate_header_rejected() {
        let t = MINIMAL.replace("genus 0\n", "genus 0\ngenus 1\n");
        assert!(parse_fixture(&t, "t").unwrap_err().to_string().contains("duplicate `genus`"));
    }

    #[test]
    fn arity_beyond_truncation_rejected() {
        let t = format!("{MINIMAL}term n=4 lambda=[4] poly=1*u^0*v^0\n");
        assert!(parse_fixture(&t, "t").unwrap_err().to_string().contains("exceeds truncation"));
    }

    #[test]
    fn positioned_poly_error() {
        let t = MINIMAL.replace("poly=1*u^0*v^0", "poly=1*u^0*w^0");
        let e = parse_fixture(&t, "t").unwrap_err();
        match e {
            FixtureError::Parse { line, col, .. } => {
                assert_eq!(line, 6);
                assert_eq!(col, "term n=3 lambda=[3] poly=1*u^0*".len() + 1);
            }
            other => panic!("{other}"),
        }
    }

    #[test]
    fn size_mismatch_and_bad_partition() {
        assert!(parse_fixture(&MINIMAL.replace("n=3 lambda=[3]", "n=2 lambda=[3]"), "t").is_err());
        assert!(parse_fixture(&MINIMAL.replace("lambda=[3]", "lambda=[1,2]"), "t").is_err());
    }

    #[test]
    fn unstable_arity_rejected() {
        let t = MINIMAL.replace("truncation 3", "truncation 3\nterm n=2 lambda=[2] poly=1*u^0*v^0");
        assert!(parse_fixture(&t, "t").is_err());
    }
}
