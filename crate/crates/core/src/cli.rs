//! The `deltakit` command line. [`run`] takes the argument vector and two
//! writers so it can be driven from tests as well as from `main`.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{now_ts, Catalog};
use crate::embdim3::ed3_report;
use crate::error::{Error, Result};
use crate::factorization::{factorizations_of, Factorization};
use crate::families::{verify_family, FamilyId, FamilyInstance};
use crate::lengths::{delta_of_element, delta_semigroup, length_set, DeltaSet, LengthSet};
use crate::presentation::{betti_elements, verify_presentation, PresentationRelation};
use crate::search::{realize_with_catalog, SearchQuery, TargetKind};
use crate::semigroup::{parse_generators, NumericalSemigroup};
use crate::verify::{run_all, VerifyOptions, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "deltakit", version, about = "Delta sets, Betti elements and presentations of numerical semigroups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; output does not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Generators {
    /// Generators as `6,13,14,16` or `<6,13,14,16>`.
    #[arg(value_name = "GENERATORS")]
    generators: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Delta set of the semigroup.
    Delta {
        #[command(flatten)]
        gens: Generators,
        /// Scan only elements up to this bound (the result is then partial).
        #[arg(long)]
        bound: Option<u64>,
    },
    /// Set of lengths of one element.
    Lengths {
        #[command(flatten)]
        gens: Generators,
        #[arg(long)]
        element: u64,
    },
    /// All factorizations of one element.
    Factorizations {
        #[command(flatten)]
        gens: Generators,
        #[arg(long)]
        element: u64,
    },
    /// Betti elements with their R-classes.
    Betti {
        #[command(flatten)]
        gens: Generators,
        #[arg(long)]
        bound: Option<u64>,
    },
    /// A minimal presentation.
    Minpres {
        #[command(flatten)]
        gens: Generators,
        /// Also check that the relations generate every fiber up to this bound.
        #[arg(long)]
        verify_bound: Option<u64>,
    },
    /// Embedding dimension three invariants and classification.
    Ed3 {
        #[command(flatten)]
        gens: Generators,
    },
    /// Build a named family member and optionally verify its predictions.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        /// Family parameters in the order listed by `--help`.
        #[arg(allow_negative_numbers = true, required = true)]
        params: Vec<i64>,
        #[arg(long)]
        verify: bool,
        /// Read the power family as three generators (the endpoints only).
        #[arg(long)]
        three_generator: bool,
    },
    /// Search for semigroups or elements realizing a target.
    Search {
        #[arg(long, value_enum)]
        target_kind: Kind,
        /// Target set, comma separated.
        #[arg(long)]
        target: String,
        #[arg(long)]
        max_gen: u64,
        #[arg(long)]
        max_e: usize,
        #[arg(long)]
        max_frobenius: Option<i64>,
        /// Report every witness instead of the first.
        #[arg(long)]
        exhaustive: bool,
        /// JSON-lines catalog to read from and append to.
        #[arg(long)]
        catalog: Option<std::path::PathBuf>,
    },
    /// Run the acceptance suite.
    VerifyAll {
        /// Reduced parameter grid.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Print every check, not just the verdicts.
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    /// p x
    Minpres,
    /// n d
    Arith48,
    /// n
    Gap49,
    /// d p
    SymmetricD,
    /// m k
    CompleteIntersection,
    /// x
    Con3a,
    /// x
    Con3b,
    /// x
    Con3c,
    /// c x [n]
    Con3d,
    /// c h n x
    Power,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    DeltaS,
    DeltaX,
    LengthsX,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(argv: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let sink: &mut (dyn Write + Send) = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let threads = cli.threads.unwrap_or(0);
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_FAILURE;
        }
    };
    match pool.install(|| dispatch(&cli, out, err)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) | Error::Json(_) | Error::Internal(_) => EXIT_FAILURE,
        _ => EXIT_INVALID,
    }
}

fn semigroup(g: &Generators, err: &mut (dyn Write + Send)) -> Result<NumericalSemigroup> {
    let raw = parse_generators(&g.generators)?;
    let c = NumericalSemigroup::construct(&raw)?;
    if !c.input_was_minimal {
        writeln!(err, "note: input minimalized to {}", c.semigroup)?;
    }
    Ok(c.semigroup)
}

// JSON shapes; field order here is the output order.

#[derive(Serialize)]
struct DeltaOutput<'a> {
    generators: &'a [u64],
    delta: &'a DeltaSet,
    bound: u64,
    partial: bool,
}

#[derive(Serialize)]
struct LengthsOutput<'a> {
    generators: &'a [u64],
    element: u64,
    lengths: &'a LengthSet,
    delta: DeltaSet,
}

#[derive(Serialize)]
struct FactorizationsOutput<'a> {
    generators: &'a [u64],
    element: u64,
    factorizations: &'a [Factorization],
}

#[derive(Serialize)]
struct BettiRow<'a> {
    value: u64,
    factorizations: usize,
    classes: &'a [Vec<Factorization>],
}

#[derive(Serialize)]
struct BettiOutput<'a> {
    generators: &'a [u64],
    betti: Vec<BettiRow<'a>>,
    scan_bound: u64,
    complete: bool,
}

#[derive(Serialize)]
struct MinpresOutput<'a> {
    generators: &'a [u64],
    relations: &'a [PresentationRelation],
    size: usize,
    uniquely_presented: bool,
    verified: Option<bool>,
}

fn emit<T: Serialize>(out: &mut (dyn Write + Send), value: &T) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(value)?)?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    match &cli.command {
        Command::Delta { gens, bound } => {
            let s = semigroup(gens, err)?;
            let scan = delta_semigroup(&s, *bound)?;
            if cli.json {
                emit(
                    out,
                    &DeltaOutput {
                        generators: s.generators(),
                        delta: &scan.delta,
                        bound: scan.bound,
                        partial: scan.partial,
                    },
                )?;
            } else if scan.partial {
                writeln!(out, "Δ(S) ⊇ {} (partial scan up to {})", scan.delta, scan.bound)?;
            } else {
                writeln!(out, "Δ(S) = {}", scan.delta)?;
            }
        }
        Command::Lengths { gens, element } => {
            let s = semigroup(gens, err)?;
            if !s.contains(*element) {
                return Err(Error::NotAMember(*element));
            }
            let lengths = length_set(&s, *element);
            if cli.json {
                emit(
                    out,
                    &LengthsOutput {
                        generators: s.generators(),
                        element: *element,
                        lengths: &lengths,
                        delta: delta_of_element(&s, *element),
                    },
                )?;
            } else {
                writeln!(out, "{lengths}")?;
            }
        }
        Command::Factorizations { gens, element } => {
            let s = semigroup(gens, err)?;
            if !s.contains(*element) {
                return Err(Error::NotAMember(*element));
            }
            let fiber = factorizations_of(&s, *element);
            if cli.json {
                emit(
                    out,
                    &FactorizationsOutput {
                        generators: s.generators(),
                        element: *element,
                        factorizations: &fiber,
                    },
                )?;
            } else {
                for f in &fiber {
                    writeln!(out, "{f}  length {}", f.length())?;
                }
            }
        }
        Command::Betti { gens, bound } => {
            let s = semigroup(gens, err)?;
            let scan = betti_elements(&s, *bound)?;
            if cli.json {
                let betti = scan
                    .records
                    .iter()
                    .map(|r| BettiRow {
                        value: r.value,
                        factorizations: r.factorization_count,
                        classes: &r.partition.classes,
                    })
                    .collect();
                emit(
                    out,
                    &BettiOutput {
                        generators: s.generators(),
                        betti,
                        scan_bound: scan.scan_bound,
                        complete: scan.complete,
                    },
                )?;
            } else {
                writeln!(out, "{:>10}  {:>14}  {:>7}", "element", "factorizations", "classes")?;
                for r in &scan.records {
                    writeln!(
                        out,
                        "{:>10}  {:>14}  {:>7}",
                        r.value,
                        r.factorization_count,
                        r.partition.classes.len()
                    )?;
                }
                if !scan.complete {
                    writeln!(out, "incomplete below {}", scan.scan_bound)?;
                }
            }
        }
        Command::Minpres { gens, verify_bound } => {
            let s = semigroup(gens, err)?;
            let scan = betti_elements(&s, None)?;
            if !scan.complete {
                return Err(Error::Internal(format!("Betti scan of {s} incomplete")));
            }
            let relations = scan.relations();
            let unique = scan.records.iter().all(|r| r.factorization_count == 2);
            let verified = verify_bound
                .map(|b| verify_presentation(&s, &relations, b))
                .transpose()?;
            if cli.json {
                emit(
                    out,
                    &MinpresOutput {
                        generators: s.generators(),
                        relations: &relations,
                        size: relations.len(),
                        uniquely_presented: unique,
                        verified,
                    },
                )?;
            } else {
                for r in &relations {
                    writeln!(out, "{r}")?;
                }
                writeln!(
                    out,
                    "size {}, {}uniquely presented",
                    relations.len(),
                    if unique { "" } else { "not " }
                )?;
                if let (Some(b), Some(ok)) = (verify_bound, verified) {
                    writeln!(out, "generates every fiber up to {b}: {ok}")?;
                }
            }
            if verified == Some(false) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Ed3 { gens } => {
            let s = semigroup(gens, err)?;
            let report = ed3_report(&s)?;
            if cli.json {
                emit(out, &report)?;
            } else {
                writeln!(out, "S = {s}, symmetric: {}", report.symmetric)?;
                if let Some(inv) = &report.invariants {
                    writeln!(out, "c = {:?}", inv.c)?;
                    writeln!(out, "r = {:?}", inv.r)?;
                    writeln!(out, "δ = ({}, {}, {})", inv.delta1, inv.delta2, inv.delta3)?;
                }
                if let Some(d) = &report.decomposition {
                    writeln!(
                        out,
                        "a = {}, m1 = {}, m2 = {}, b = {}, c = {}, r = {}, s = {}",
                        d.a, d.m1, d.m2, d.b, d.c, d.r, d.s
                    )?;
                }
                for r in &report.presentation {
                    writeln!(out, "{r}")?;
                }
                let c = &report.classification;
                writeln!(out, "Δ(S) = {}, d = {}, shape {:?}", c.delta, c.d, c.kind)?;
            }
        }
        Command::Family {
            name,
            params,
            verify,
            three_generator,
        } => {
            let id = family_id(*name, params, *three_generator)?;
            let family = FamilyInstance::build(&id)?;
            if *verify {
                let report = verify_family(&family)?;
                if cli.json {
                    emit(out, &report)?;
                } else {
                    writeln!(out, "{id}: {}", family.semigroup)?;
                    for c in &report.checks {
                        writeln!(out, "{:<12} {}", c.status.to_string(), c.name)?;
                    }
                    let inconsistent = report.inconsistencies().count();
                    let summary = if !report.passed() {
                        "FAIL"
                    } else if inconsistent > 0 {
                        "INCONSISTENT"
                    } else if report.conjectural {
                        "CONSISTENT"
                    } else {
                        "PASS"
                    };
                    writeln!(out, "{summary} ({} checks)", report.checks.len())?;
                }
                if !report.passed() {
                    return Ok(EXIT_VERIFY_FAILED);
                }
            } else if cli.json {
                emit(out, &family)?;
            } else {
                writeln!(out, "{id}: {}", family.semigroup)?;
                let p = &family.predictions;
                let tag = if p.conjectural { "conjectured" } else { "predicted" };
                if let Some(d) = &p.delta {
                    writeln!(out, "{tag} Δ(S) = {d}")?;
                }
                if let Some(b) = &p.betti {
                    writeln!(out, "{tag} Betti elements {b:?}")?;
                }
                for r in p.presentation.iter().flatten() {
                    writeln!(out, "{tag} relation {r}")?;
                }
            }
        }
        Command::Search {
            target_kind,
            target,
            max_gen,
            max_e,
            max_frobenius,
            exhaustive,
            catalog,
        } => {
            let kind = match target_kind {
                Kind::DeltaS => TargetKind::DeltaOfSemigroup,
                Kind::DeltaX => TargetKind::DeltaOfElement,
                Kind::LengthsX => TargetKind::LengthSetOfElement,
            };
            let values = parse_set(target)?;
            let mut query = SearchQuery::new(kind, &values, *max_gen, *max_e);
            if *exhaustive {
                query = query.exhaustive();
            }
            if let Some(f) = max_frobenius {
                query = query.with_max_frobenius(*f);
            }
            let mut opened = catalog.as_ref().map(Catalog::open).transpose()?;
            let outcome = realize_with_catalog(&query, opened.as_mut(), now_ts())?;
            if cli.json {
                emit(out, &outcome)?;
            } else {
                writeln!(out, "{}", outcome.summary())?;
            }
        }
        Command::VerifyAll { quick, seed, verbose } => {
            let reports = run_all(&VerifyOptions {
                quick: *quick,
                seed: *seed,
            });
            if cli.json {
                emit(out, &reports)?;
            } else {
                for r in &reports {
                    writeln!(out, "{r}")?;
                    for d in &r.details {
                        if *verbose || !r.passed && d.starts_with("FAIL") {
                            writeln!(out, "    {d}")?;
                        }
                    }
                    for f in &r.findings {
                        writeln!(out, "    finding: {f}")?;
                    }
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_set(text: &str) -> Result<Vec<u64>> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse(format!("not a positive integer: {t:?}"))))
        .collect()
}

fn family_id(name: FamilyName, params: &[i64], three_generator: bool) -> Result<FamilyId> {
    let want = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::BadParameters(format!("{name:?} takes {n} parameters, got {}", params.len())))
        }
    };
    let u = |i: usize| -> Result<u64> {
        u64::try_from(params[i]).map_err(|_| Error::NegativeInput(params[i]))
    };
    let small = |i: usize| -> Result<u32> {
        u32::try_from(params[i]).map_err(|_| Error::BadParameters(format!("parameter {} out of range", params[i])))
    };
    Ok(match name {
        FamilyName::Minpres => {
            want(2)?;
            FamilyId::MinPres { p: u(0)?, x: small(1)? }
        }
        FamilyName::Arith48 => {
            want(2)?;
            FamilyId::Arith48 { n: u(0)?, d: u(1)? }
        }
        FamilyName::Gap49 => {
            want(1)?;
            FamilyId::Gap49 { n: u(0)? }
        }
        FamilyName::SymmetricD => {
            want(2)?;
            FamilyId::SymmetricD { d: u(0)?, p: u(1)? }
        }
        FamilyName::CompleteIntersection => {
            want(2)?;
            FamilyId::CompleteIntersection { m: small(0)?, k: small(1)? }
        }
        FamilyName::Con3a => {
            want(1)?;
            FamilyId::Con3A { x: small(0)? }
        }
        FamilyName::Con3b => {
            want(1)?;
            FamilyId::Con3B { x: small(0)? }
        }
        FamilyName::Con3c => {
            want(1)?;
            FamilyId::Con3C { x: small(0)? }
        }
        FamilyName::Con3d => match params.len() {
            2 => FamilyId::Con3D { c: u(0)?, x: small(1)? },
            _ => {
                want(3)?;
                FamilyId::Con3DScaled {
                    c: u(0)?,
                    x: small(1)?,
                    n: u(2)?,
                }
            }
        },
        FamilyName::Power => {
            want(4)?;
            FamilyId::PowerFamily {
                c: u(0)?,
                h: params[1],
                n: u(2)?,
                x: small(3)?,
                three_generator,
            }
        }
    })
}
