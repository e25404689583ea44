//! The `lhcone` command line.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on usage or
//! budget errors.

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::closed_form::{self, Family};
use crate::ehrhart::{self, FormulaFlag};
use crate::error::{Error, Result};
use crate::gorenstein;
use crate::model::{parse_int_list, HilbertBasis, LatticePoint, Sequence};
use crate::oracle::{self, Budget};
use crate::report::{render_sweep, CountReport, Format, GorensteinSection, Int, Report, SweepRow, VerificationSection};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lhcone", version, about = "Hilbert bases of lecture hall cones")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hilbert basis from the closed form, or the oracle when no family matches
    Basis(CommonArgs),
    /// Hilbert basis from the brute-force oracle
    Oracle(CommonArgs),
    /// Compare closed forms, oracle, generation, minimality and cardinality formulas
    Verify(CommonArgs),
    /// Lattice points in the t-th dilate of P or R
    Ehrhart(EhrhartArgs),
    /// Gorenstein detection, certificate and shift check
    Gorenstein(CommonArgs),
    /// Run a family over a parameter grid
    Sweep(CommonArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyKind {
    Modk,
    Lseq,
    Dim2,
    Dim3,
    Dim4,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Polytope {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Comma-separated sequence, e.g. 1,3,5
    #[arg(long, conflicts_with = "family")]
    seq: Option<String>,
    #[arg(long, value_enum)]
    family: Option<FamilyKind>,
    #[arg(long)]
    k: Option<String>,
    #[arg(long)]
    l: Option<String>,
    #[arg(long)]
    n: Option<String>,
    #[arg(long)]
    s: Option<String>,
    /// u-vector for dim4, e.g. 2,2,2
    #[arg(long)]
    u: Option<String>,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CommonArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Last-coordinate bound for exhaustive checks
    #[arg(long)]
    bound: Option<BigInt>,
    /// Largest fundamental box volume the oracle may enumerate
    #[arg(long, default_value = "1000000")]
    max_volume: BigInt,
}

#[derive(Debug, Args)]
struct EhrhartArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, value_enum, default_value = "P")]
    polytope: Polytope,
    #[arg(long)]
    t: u64,
}

/// Runs the command line on `args` (program name first). Reports go to
/// `out` (or `--out`), diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (output, result) = match cli.command {
        Command::Basis(a) => (format_of(&a.output), cmd_basis(&a, err)),
        Command::Oracle(a) => (format_of(&a.output), cmd_oracle(&a)),
        Command::Verify(a) => (format_of(&a.output), cmd_verify(&a)),
        Command::Ehrhart(a) => (format_of(&a.output), cmd_ehrhart(&a)),
        Command::Gorenstein(a) => (format_of(&a.output), cmd_gorenstein(&a)),
        Command::Sweep(a) => (format_of(&a.output), cmd_sweep(&a)),
    };
    let (format, path) = output;
    let (text, code) = match result.and_then(|(render, code)| Ok((render(format)?, code))) {
        Ok(done) => done,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    match path {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
        }
    }
    code
}

type Rendered = (Box<dyn Fn(Format) -> Result<String>>, i32);

fn format_of(o: &OutputArgs) -> (Format, Option<PathBuf>) {
    let format = match o.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
        FormatArg::Plain => Format::Plain,
    };
    (format, o.out.clone())
}

fn rendered(report: Report, code: i32) -> Rendered {
    (Box::new(move |f| report.render(f)), code)
}

fn single(text: &Option<String>, name: &str) -> Result<BigInt> {
    let text = text
        .as_deref()
        .ok_or_else(|| Error::InvalidParameters(format!("--{name} is required for this family")))?;
    text.trim()
        .parse()
        .map_err(|_| Error::InvalidParameters(format!("--{name} expects an integer, got {text:?}")))
}

fn small(x: &BigInt, name: &str) -> Result<usize> {
    usize::try_from(x).map_err(|_| Error::InvalidParameters(format!("--{name} out of range: {x}")))
}

fn family_from(kind: FamilyKind, k: BigInt, l: BigInt, n: BigInt, s: BigInt, u: Vec<BigInt>) -> Result<Family> {
    let family = match kind {
        FamilyKind::Modk => Family::ModK { k, n: small(&n, "n")? },
        FamilyKind::Lseq => Family::LSeq { ell: l, n: small(&n, "n")? },
        FamilyKind::Dim2 => Family::Dim2 { s, k },
        FamilyKind::Dim3 => Family::Dim3 { s, k, ell: l },
        FamilyKind::Dim4 => {
            if u.len() != 3 {
                return Err(Error::InvalidParameters(format!("--u needs three entries, got {}", u.len())));
            }
            let case = closed_form::Dim4Case::classify(&s, &u[0])?;
            Family::Dim4 {
                s1: s,
                u: [u[0].clone(), u[1].clone(), u[2].clone()],
                case,
            }
        }
    };
    family.sequence()?;
    Ok(family)
}

/// Reads either `--seq` or `--family` with its parameters.
fn resolve(input: &InputArgs) -> Result<(Sequence, Option<Family>)> {
    if let Some(text) = &input.seq {
        return Ok((text.parse()?, None));
    }
    let kind = input
        .family
        .ok_or_else(|| Error::InvalidParameters("either --seq or --family is required".into()))?;
    let get = |t: &Option<String>, name: &str| -> Result<BigInt> {
        match t {
            None => Ok(BigInt::zero()),
            Some(_) => single(t, name),
        }
    };
    let need: &[&str] = match kind {
        FamilyKind::Modk => &["k", "n"],
        FamilyKind::Lseq => &["l", "n"],
        FamilyKind::Dim2 => &["s", "k"],
        FamilyKind::Dim3 => &["s", "k", "l"],
        FamilyKind::Dim4 => &["s", "u"],
    };
    for name in need {
        let present = match *name {
            "k" => input.k.is_some(),
            "l" => input.l.is_some(),
            "n" => input.n.is_some(),
            "s" => input.s.is_some(),
            _ => input.u.is_some(),
        };
        if !present {
            return Err(Error::InvalidParameters(format!("--{name} is required for this family")));
        }
    }
    let u = match &input.u {
        Some(t) => parse_int_list(t)?,
        None => Vec::new(),
    };
    let family = family_from(
        kind,
        get(&input.k, "k")?,
        get(&input.l, "l")?,
        get(&input.n, "n")?,
        get(&input.s, "s")?,
        u,
    )?;
    Ok((family.sequence()?, Some(family)))
}

fn budget(a: &CommonArgs) -> Budget {
    Budget::new(a.max_volume.clone())
}

/// Basis for the input: the named family's closed form, otherwise
/// recognition with oracle fallback.
fn basis_for(s: &Sequence, family: Option<Family>, budget: &Budget) -> Result<(Option<Family>, HilbertBasis)> {
    match family {
        Some(f) => {
            let b = f.basis()?;
            Ok((Some(f), b))
        }
        None => closed_form::hilbert_basis(s, budget),
    }
}

fn cmd_basis(a: &CommonArgs, err: &mut dyn Write) -> Result<Rendered> {
    let (s, family) = resolve(&a.input)?;
    let (family, basis) = basis_for(&s, family, &budget(a))?;
    if family.is_none() {
        let _ = writeln!(err, "note: no closed form matches {s}; computed with the oracle");
    }
    Ok(rendered(Report::new(family.as_ref(), &basis), EXIT_OK))
}

fn cmd_oracle(a: &CommonArgs) -> Result<Rendered> {
    let (s, _) = resolve(&a.input)?;
    let basis = oracle::hilbert_basis_oracle(&s.normalize(), &budget(a))?.with_sequence(s);
    Ok(rendered(Report::new(None, &basis), EXIT_OK))
}

fn points(list: &[LatticePoint]) -> String {
    let parts: Vec<String> = list.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// Runs every check `verify` performs and returns the report.
pub fn verify_sequence(
    s: &Sequence,
    family: Option<Family>,
    bound: Option<BigInt>,
    budget: &Budget,
) -> Result<Report> {
    let norm = s.normalize();
    let families = match family {
        Some(f) => vec![f],
        None => closed_form::recognize(&norm),
    };
    let oracle_basis = oracle::hilbert_basis_oracle(&norm, budget)?;
    let bound = bound.unwrap_or_else(|| oracle::default_bound(&norm, 2));
    let mut passed = true;
    let mut witnesses: Vec<LatticePoint> = Vec::new();
    let mut notes = Vec::new();

    let mut primary: Option<(Family, HilbertBasis)> = None;
    for f in &families {
        let basis = f.basis()?;
        if basis.same_elements(&oracle_basis) {
            notes.push(format!("closed form {f} equals the oracle ({} elements)", basis.len()));
        } else {
            passed = false;
            let extra: Vec<LatticePoint> =
                basis.elements().iter().filter(|p| !oracle_basis.contains(p)).cloned().collect();
            let missing: Vec<LatticePoint> =
                oracle_basis.elements().iter().filter(|p| !basis.contains(p)).cloned().collect();
            notes.push(format!(
                "closed form {f} differs from the oracle: extra {} missing {}",
                points(&extra),
                points(&missing)
            ));
            witnesses.extend(extra);
            witnesses.extend(missing);
        }
        let literal = closed_form::reducible_in_literal_list(f)?;
        if !literal.is_empty() {
            notes.push(format!("{f}: listed elements pruned as reducible {}", points(&literal)));
        }
        let (value, flag) = ehrhart::cardinality_formula(f)?;
        let actual = BigInt::from(oracle_basis.len());
        match (flag, value == actual) {
            (_, true) => notes.push(format!("{f}: cardinality formula {value} ({flag}) matches")),
            (FormulaFlag::Authoritative, false) => {
                passed = false;
                notes.push(format!("{f}: cardinality formula {value} ({flag}) differs from {actual}"));
            }
            (_, false) => notes.push(format!("{f}: cardinality formula {value} flagged {flag}; actual {actual}")),
        }
        if primary.is_none() {
            primary = Some((f.clone(), basis));
        }
    }
    if families.is_empty() {
        notes.push("no closed form matches; checking the oracle basis".to_string());
    }
    let (family, basis) = match primary {
        Some((f, b)) => (Some(f), b),
        None => (None, oracle_basis.clone()),
    };

    for p in basis.elements() {
        let coeffs = oracle::box_coefficients(&norm, p)?;
        let zero = num_rational::BigRational::zero();
        let one = num_rational::BigRational::one();
        if coeffs.iter().any(|a| a < &zero || a > &one) {
            passed = false;
            witnesses.push(p.clone());
            notes.push(format!("{p} lies outside the closed fundamental box"));
        }
    }

    let generation = oracle::generates_up_to(&norm, basis.elements(), &bound);
    notes.push(format!("generation up to last coordinate {bound}: {} points checked", generation.checks_run));
    if !generation.passed {
        passed = false;
        notes.push("generation failed".to_string());
        witnesses.extend(generation.witnesses.iter().cloned());
    } else {
        let mut minimal = true;
        for p in basis.elements() {
            let rest: Vec<LatticePoint> = basis.elements().iter().filter(|q| *q != p).cloned().collect();
            let check = oracle::generates_up_to(&norm, &rest, p.last());
            if check.passed || check.witnesses.first() != Some(p) {
                minimal = false;
                witnesses.push(p.clone());
                notes.push(format!("removing {p} does not break generation"));
            }
        }
        if minimal {
            notes.push(format!("minimality: all {} single removals break generation", basis.len()));
        } else {
            passed = false;
        }
    }

    let mut report = Report::new(family.as_ref(), &basis.with_sequence(s.clone()));
    report.verification = Some(VerificationSection::new(passed, &witnesses, notes));
    Ok(report)
}

fn cmd_verify(a: &CommonArgs) -> Result<Rendered> {
    let (s, family) = resolve(&a.input)?;
    let report = verify_sequence(&s, family, a.bound.clone(), &budget(a))?;
    let passed = report.verification.as_ref().is_some_and(|v| v.passed);
    Ok(rendered(report, if passed { EXIT_OK } else { EXIT_FAILED }))
}

fn cmd_ehrhart(a: &EhrhartArgs) -> Result<Rendered> {
    let (s, _) = resolve(&a.input)?;
    let (name, count) = match a.polytope {
        Polytope::P => ("P", ehrhart::count_p(&s, a.t)),
        Polytope::R => ("R", ehrhart::count_r(&s, a.t)),
    };
    let report = CountReport::new(&s, name, a.t, count);
    Ok((Box::new(move |f| report.render(f)), EXIT_OK))
}

/// Gorenstein classification report: certificate from the recurrences,
/// the geometric candidate, and whether the two routes agree.
pub fn gorenstein_report(s: &Sequence, bound: Option<BigInt>, budget: &Budget) -> Result<Report> {
    let bound = bound.unwrap_or_else(|| oracle::default_bound(s, 3));
    let u = gorenstein::detect_u_generated(s);
    let mut notes = Vec::new();
    let mut witnesses = Vec::new();
    match &u {
        Some(u) => notes.push(format!("u-generated by u = {u}")),
        None => notes.push("not u-generated".to_string()),
    }
    let certified = match gorenstein::certificate(s) {
        Some(cert) => {
            let (cert, check) = gorenstein::verify_certificate(s, cert, &bound)?;
            notes.push(format!(
                "{} gives c = {}; shift check up to {bound}: {}",
                cert.method,
                cert.c,
                if check.passed { "passed" } else { "failed" }
            ));
            witnesses.extend(check.witnesses.iter().cloned());
            Some((cert, check.passed))
        }
        None => {
            notes.push("no recurrence certificate".to_string());
            None
        }
    };
    let (geometric, geo_check) = gorenstein::geometric_certificate(s, &bound)?;
    notes.push(format!(
        "geometric candidate {}: shift check {}",
        oracle::minimal_interior_point(s),
        if geo_check.passed { "passed" } else { "failed" }
    ));
    let agree = match (&certified, &geometric) {
        (Some((cert, ok)), Some(g)) => *ok && cert.c == g.c,
        (None, None) => true,
        _ => false,
    };
    if agree {
        let verdict = if geometric.is_some() { "Gorenstein" } else { "not Gorenstein" };
        notes.push(format!("{verdict}; recurrence and geometric routes agree"));
    } else {
        notes.push("recurrence and geometric routes disagree".to_string());
        witnesses.extend(geo_check.witnesses.iter().cloned());
    }
    let (family, basis) = closed_form::hilbert_basis(s, budget)?;
    let mut report = Report::new(family.as_ref(), &basis);
    let cert = certified.map(|(c, _)| c);
    report.gorenstein = Some(GorensteinSection::from_certificate(
        cert.as_ref(),
        u.as_ref().map(|u| u.entries()),
    ));
    report.verification = Some(VerificationSection::new(agree, &witnesses, notes));
    Ok(report)
}

fn cmd_gorenstein(a: &CommonArgs) -> Result<Rendered> {
    let (s, _) = resolve(&a.input)?;
    let report = gorenstein_report(&s, a.bound.clone(), &budget(a))?;
    let passed = report.verification.as_ref().is_some_and(|v| v.passed);
    Ok(rendered(report, if passed { EXIT_OK } else { EXIT_FAILED }))
}

/// Parses `3`, `1..4` (inclusive) into a range.
fn parse_range(text: &str, name: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::InvalidParameters(format!("--{name} expects N or A..B, got {text:?}"));
    let text = text.trim();
    let (lo, hi) = match text.split_once("..") {
        Some((lo, hi)) => (lo.trim(), hi.trim().trim_start_matches('=')),
        None => (text, text),
    };
    let lo: i64 = lo.parse().map_err(|_| bad())?;
    let hi: i64 = hi.parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn range_of(t: &Option<String>, name: &str) -> Result<RangeInclusive<i64>> {
    match t {
        Some(t) => parse_range(t, name),
        None => Ok(0..=0),
    }
}

/// Every valid family instance in the grid given by the range flags.
fn sweep_families(input: &InputArgs) -> Result<Vec<Family>> {
    let kind = input
        .family
        .ok_or_else(|| Error::InvalidParameters("sweep needs --family".into()))?;
    let ks = range_of(&input.k, "k")?;
    let ls = range_of(&input.l, "l")?;
    let ns = range_of(&input.n, "n")?;
    let ss = range_of(&input.s, "s")?;
    let us: Vec<RangeInclusive<i64>> = match &input.u {
        Some(t) => t.split(',').map(|part| parse_range(part, "u")).collect::<Result<_>>()?,
        None => vec![0..=0; 3],
    };
    if us.len() != 3 {
        return Err(Error::InvalidParameters("--u needs three ranges".into()));
    }
    let mut out = Vec::new();
    for k in ks.clone() {
        for l in ls.clone() {
            for n in ns.clone() {
                for s in ss.clone() {
                    for u1 in us[0].clone() {
                        for u2 in us[1].clone() {
                            for u3 in us[2].clone() {
                                let u = vec![u1.into(), u2.into(), u3.into()];
                                if let Ok(f) = family_from(kind, k.into(), l.into(), n.into(), s.into(), u) {
                                    if !out.contains(&f) {
                                        out.push(f);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn cmd_sweep(a: &CommonArgs) -> Result<Rendered> {
    if a.input.seq.is_some() {
        return Err(Error::InvalidParameters("sweep takes --family with parameter ranges".into()));
    }
    let budget = budget(a);
    let mut rows = Vec::new();
    let mut code = EXIT_OK;
    for f in sweep_families(&a.input)? {
        let seq = f.sequence()?;
        let truth = oracle::hilbert_basis_oracle(&seq.normalize(), &budget)?;
        if !f.basis()?.same_elements(&truth) {
            code = EXIT_FAILED;
        }
        let (formula, flag) = ehrhart::cardinality_formula(&f)?;
        let matches = formula == BigInt::from(truth.len());
        if flag == FormulaFlag::Authoritative && !matches {
            code = EXIT_FAILED;
        }
        rows.push(SweepRow {
            parameters: f.to_string(),
            cardinality: truth.len(),
            formula: Int(formula),
            flag,
            matches,
        });
    }
    Ok((Box::new(move |format| render_sweep(&rows, format)), code))
}
