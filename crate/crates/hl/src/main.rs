use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hl::fixture::{fixture_dir, load_fixture, names, FixtureError};
use hl::pretty::pretty_uv;
use hl::render::{render_table, schur_pair_text, Basis, Form, Format, TableSpec};
use hl::verify::{self, Inputs, Suite};
use hl_core::hassett::{
    closed_series, euler_genfun_prop51, euler_genus1_closed, open_series, slice_n1, tropical_euler, SeriesFixture,
    Variant,
};
use hl_core::oracle::ENUMERATION_CAP;
use hl_core::partition::CharacterCache;

#[derive(Parser)]
#[command(name = "hl", about = "Hodge polynomials of heavy/light Hassett spaces", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Schur,
    Power,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Hodge,
    Poincare,
    Numeric,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Open,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Fixtures,
    Tables,
    Properties,
}

#[derive(Subcommand)]
enum Cmd {
    /// Equivariant Hodge polynomials of the compactified spaces.
    ClosedTable {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_arity: usize,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "hodge")]
        form: FormArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Equivariant Hodge polynomials of the open spaces.
    OpenTable {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_arity: usize,
        /// Weight-zero part only (constant terms).
        #[arg(long)]
        weight0: bool,
        #[arg(long, value_enum, default_value = "schur")]
        basis: BasisArg,
        #[arg(long, value_enum, default_value = "hodge")]
        form: FormArg,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Euler characteristics of the genus-1 spaces from the closed formulas.
    EulerGenfun {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        order: usize,
    },
    /// The `n = 1` column, from the derivative of the heavy-only series.
    SliceN1 {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum)]
        variant: VariantArg,
    },
    /// Equivariant Euler characteristic of the tropical space.
    Tropical {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run validation suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = verify::SEED)]
        seed: u64,
    },
    /// Compare the brute-force open characteristic with the pipeline for every `(m, n)`.
    OracleCompare {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_arity: usize,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<FixtureError> for Failure {
    fn from(e: FixtureError) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<hl_core::Error> for Failure {
    fn from(e: hl_core::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<hl::render::RenderError> for Failure {
    fn from(e: hl::render::RenderError) -> Self {
        match e {
            hl::render::RenderError::Spec(s) => Failure::Usage(s),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn truncated(f: &SeriesFixture, n: usize) -> Result<SeriesFixture, Failure> {
    if n > f.trunc() {
        return Err(Failure::Runtime(format!("fixture {} has truncation {}, need {n}", f.name, f.trunc())));
    }
    Ok(SeriesFixture::new(&f.name, f.genus, f.variant, f.data.truncate(n))?)
}

fn fixture_name(name: Option<&'static str>, what: &str, genus: u32) -> Result<&'static str, Failure> {
    name.ok_or_else(|| Failure::Usage(format!("no {what} fixture for genus {genus}")))
}

fn basis(b: BasisArg) -> Basis {
    match b {
        BasisArg::Schur => Basis::Schur,
        BasisArg::Power => Basis::Power,
    }
}

fn format(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Csv => Format::Csv,
        FormatArg::Latex => Format::Latex,
    }
}

fn form(f: FormArg) -> Form {
    match f {
        FormArg::Hodge => Form::Hodge,
        FormArg::Poincare => Form::Poincare,
        FormArg::Numeric => Form::Numeric,
    }
}

fn closed_result(genus: u32, k: usize) -> Result<hl_core::hassett::HeavyLightResult, Failure> {
    let bbar = load_fixture(fixture_name(names::closed(genus), "closed", genus)?)?;
    let b0 = load_fixture(names::B0)?;
    Ok(closed_series(&truncated(&bbar, k)?, &truncated(&b0, k + 1)?)?)
}

fn open_result(genus: u32, k: usize, weight0: bool) -> Result<hl_core::hassett::HeavyLightResult, Failure> {
    let b = load_fixture(fixture_name(names::open(genus), "open", genus)?)?;
    let b = truncated(&b, k)?;
    if weight0 && b.variant != Variant::Weight0 {
        let w = SeriesFixture::new(&b.name, b.genus, Variant::Weight0, b.data.at_zero())?;
        return Ok(open_series(&w)?);
    }
    if !weight0 && b.variant == Variant::Weight0 {
        return Err(Failure::Usage(format!("only the weight-zero part is available in genus {genus}; pass --weight0")));
    }
    Ok(open_series(&b)?)
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let mut cache = CharacterCache::new();
    match cli.cmd {
        Cmd::ClosedTable { genus, max_arity, basis: b, form: f, format: fmt } => {
            let result = closed_result(genus, max_arity)?;
            let spec = TableSpec { genus, variant: Variant::Closed, basis: basis(b), form: form(f), arity: 0..=max_arity, format: format(fmt) };
            print!("{}", render_table(&spec, &result, &mut cache)?);
        }
        Cmd::OpenTable { genus, max_arity, weight0, basis: b, form: f, format: fmt } => {
            let result = open_result(genus, max_arity, weight0)?;
            let (variant, form) = if weight0 {
                (Variant::Weight0, if matches!(f, FormArg::Numeric) { Form::Numeric } else { Form::Weight0 })
            } else {
                (Variant::Open, form(f))
            };
            let spec = TableSpec { genus, variant, basis: basis(b), form, arity: 0..=max_arity, format: format(fmt) };
            print!("{}", render_table(&spec, &result, &mut cache)?);
        }
        Cmd::EulerGenfun { genus, order } => {
            if genus != 1 {
                return Err(Failure::Usage("closed Euler formulas are implemented for genus 1 only".into()));
            }
            let light = euler_genfun_prop51(order)?;
            let full = euler_genus1_closed(order)?;
            println!("n,chi_light_only,chi_all_heavy");
            for n in 1..=order {
                println!("{n},{},{}", pretty_uv(&light.egf_coeff(n)), pretty_uv(&full.egf_coeff(n)));
            }
        }
        Cmd::SliceN1 { genus, m, variant } => {
            let name = match variant {
                VariantArg::Open => fixture_name(names::open(genus), "open", genus)?,
                VariantArg::Closed => fixture_name(names::closed(genus), "closed", genus)?,
            };
            let s = slice_n1(&load_fixture(name)?, m)?;
            println!("({m},1): {}", schur_pair_text(&s, &mut cache));
        }
        Cmd::Tropical { genus, m, n } => {
            let result = open_result(genus, m + n, genus == 2)?;
            let s = tropical_euler(&result, m, n)?;
            println!("({m},{n}): {}", schur_pair_text(&s, &mut cache));
        }
        Cmd::Verify { suite, seed } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Fixtures => Suite::Fixtures,
                SuiteArg::Tables => Suite::Tables,
                SuiteArg::Properties => Suite::Properties,
            };
            let inputs = Inputs::load(&fixture_dir())?;
            let checks = verify::run(suite, &inputs, seed);
            for c in &checks {
                println!("{c}");
            }
            let failed = checks.iter().filter(|c| !c.ok).count();
            println!("{} checks, {failed} failed", checks.len());
            return Ok(failed == 0);
        }
        Cmd::OracleCompare { genus, max_arity } => {
            if max_arity > ENUMERATION_CAP {
                return Err(Failure::Usage(format!("max arity is capped at {ENUMERATION_CAP}")));
            }
            let b = load_fixture(fixture_name(names::open(genus), "open", genus)?)?;
            let rows = verify::oracle_table(&b, max_arity).map_err(Failure::Runtime)?;
            let mut all = true;
            for (m, n, ok) in rows {
                println!("({m},{n}) {}", if ok { "PASS" } else { "FAIL" });
                all &= ok;
            }
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("hl: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("hl: {msg}");
            ExitCode::from(1)
        }
    }
}
