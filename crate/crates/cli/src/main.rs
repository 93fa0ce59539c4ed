//! Command-line front end for the finite-monoid workbench: enumeration
//! with caching, single-instance checks, suite execution, and
//! counterexample search, with stable JSON output for scripting.
//!
//! Exit codes: 0 = success (for `check`: the property holds; for
//! `verify`: zero violations), 1 = property fails / violations found,
//! 2 = invalid input (bad file, unknown suite, parse error, I/O failure).

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schreier_core::enumerate::enumerate_monoids;
use schreier_core::io::{self, CacheHeader};
use schreier_core::par;
use schreier_core::points;
use schreier_core::verify::{self, Corpus, CorpusParams};

#[derive(Parser)]
#[command(name = "schreier", version, about = "finite-monoid workbench for Schreier points")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate monoids of a given order into a JSON-lines cache.
    Enumerate(EnumerateArgs),
    /// Run one checker on a point, generalized-point, or homomorphism file.
    Check(CheckArgs),
    /// Run a verification suite over an enumerated corpus.
    Verify(VerifyArgs),
    /// Search the corpus for instances matching a checker expression.
    Search(SearchArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of elements.
    #[arg(long)]
    order: usize,
    /// Keep one representative per isomorphism class.
    #[arg(long)]
    up_to_iso: bool,
    /// Cache file; the stream goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CheckKind {
    /// Schreier point (input: point file).
    PointSchreier,
    /// Schreier generalized point (input: generalized-point file).
    GpSchreier,
    /// Strong generalized point (input: generalized-point file).
    GpStrong,
    /// Schreier epimorphism (input: homomorphism file).
    EpiSchreier,
    /// Regular Schreier epimorphism (input: homomorphism file).
    EpiRegularSchreier,
}

#[derive(Args)]
struct CheckArgs {
    /// Which checker to run.
    #[arg(long, value_enum)]
    kind: CheckKind,
    /// Input file.
    #[arg(long)]
    input: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name from the manifest, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest monoid order in the corpus.
    #[arg(long, default_value_t = 3)]
    max_order: usize,
    /// Seed for sampled corpora and sampled closure checks.
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Class name for the conditions suite: schreier-point, schreier-gp,
    /// strong-gp, all, or none.
    #[arg(long)]
    class: Option<String>,
    /// Print the suite manifest and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Expression over checker names, e.g. "schreier-epi & !regular-schreier".
    #[arg(long)]
    expr: String,
    /// Largest monoid order in the corpus.
    #[arg(long, default_value_t = 4)]
    max_order: usize,
    /// Seed for sampled corpora.
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Check(args) => cmd_check(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
    }
}

fn fail(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn cmd_enumerate(args: EnumerateArgs) -> ExitCode {
    if args.order == 0 {
        return fail("--order must be at least 1");
    }
    let monoids = enumerate_monoids(args.order, args.up_to_iso);
    let header = CacheHeader::new(args.order, args.up_to_iso, monoids.len());
    match args.out {
        Some(path) => {
            let file = match std::fs::File::create(&path) {
                Ok(f) => f,
                Err(e) => return fail(e),
            };
            if let Err(e) = io::write_monoid_lines(std::io::BufWriter::new(file), &header, &monoids)
            {
                return fail(e);
            }
            println!("{}", monoids.len());
        }
        None => {
            let stdout = std::io::stdout();
            if let Err(e) = io::write_monoid_lines(stdout.lock(), &header, &monoids) {
                return fail(e);
            }
            eprintln!("{}", monoids.len());
        }
    }
    ExitCode::SUCCESS
}

fn cmd_check(args: CheckArgs) -> ExitCode {
    let (json, holds) = match run_check(args.kind, &args.input) {
        Ok(d) => d,
        Err(e) => return fail(e),
    };
    println!("{json}");
    if holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_check(kind: CheckKind, input: &std::path::Path) -> schreier_core::Result<(String, bool)> {
    Ok(match kind {
        CheckKind::PointSchreier => {
            let p = io::load_point(input)?;
            let d = points::is_schreier_point(&p);
            (serde_json::to_string(&d)?, d.holds)
        }
        CheckKind::GpSchreier => {
            let gp = io::load_gp(input)?;
            let d = points::is_schreier_gp(&gp);
            (serde_json::to_string(&d)?, d.holds)
        }
        CheckKind::GpStrong => {
            let gp = io::load_gp(input)?;
            let d = points::is_strong_gp(&gp);
            (serde_json::to_string(&d)?, d.holds)
        }
        CheckKind::EpiSchreier => {
            let f = io::load_hom(input)?;
            let d = points::is_schreier_epi(&f)?;
            (serde_json::to_string(&d)?, d.holds)
        }
        CheckKind::EpiRegularSchreier => {
            let f = io::load_hom(input)?;
            let d = points::is_regular_schreier_epi(&f)?;
            (serde_json::to_string(&d)?, d.holds)
        }
    })
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    if args.list {
        println!(
            "{}",
            serde_json::to_string(&verify::manifest()).expect("manifest serializes")
        );
        return ExitCode::SUCCESS;
    }
    if args.max_order == 0 {
        return fail("--max-order must be at least 1");
    }
    if args.class.is_some() && args.suite != "conditions" {
        return fail("--class applies only to the conditions suite");
    }
    let params = CorpusParams::new(args.max_order).with_seed(args.seed);
    let reports = par::with_jobs(args.jobs, || {
        let corpus = Corpus::build(params);
        match &args.class {
            None => verify::run_suite(&args.suite, &corpus),
            Some(name) => conditions_with_class(&corpus, name),
        }
    });
    let reports = match reports {
        Ok(r) => r,
        Err(e) => return fail(e),
    };
    let out = if reports.len() == 1 {
        serde_json::to_string_pretty(&reports[0])
    } else {
        serde_json::to_string_pretty(&reports)
    };
    println!("{}", out.expect("reports serialize"));
    if reports.iter().all(|r| r.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn conditions_with_class(
    corpus: &Corpus,
    name: &str,
) -> schreier_core::Result<Vec<verify::Report>> {
    use schreier_core::constructions::{GpClass, PointClass};
    use schreier_core::verify::suites;
    match name {
        "schreier-point" => Ok(vec![suites::conditions_for_point_class(
            corpus,
            &PointClass::Schreier,
        )]),
        "schreier-gp" => Ok(vec![suites::conditions_for_gp_class(
            corpus,
            &GpClass::Schreier,
        )]),
        "strong-gp" => Ok(vec![suites::conditions_for_gp_class(
            corpus,
            &GpClass::Strong,
        )]),
        "all" => Ok(vec![
            suites::conditions_for_point_class(corpus, &PointClass::All),
            suites::conditions_for_gp_class(corpus, &GpClass::All),
        ]),
        "none" => Ok(vec![
            suites::conditions_for_point_class(corpus, &PointClass::None),
            suites::conditions_for_gp_class(corpus, &GpClass::None),
        ]),
        other => Err(schreier_core::Error::UnknownClass(other.into())),
    }
}

fn cmd_search(args: SearchArgs) -> ExitCode {
    if args.max_order == 0 {
        return fail("--max-order must be at least 1");
    }
    let params = CorpusParams::new(args.max_order).with_seed(args.seed);
    let outcome = par::with_jobs(args.jobs, || {
        let corpus = Corpus::build(params);
        verify::search(&args.expr, &corpus)
    });
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let stdout = std::io::stdout();
    let mut w = stdout.lock();
    for hit in &outcome.hits {
        if writeln!(w, "{}", serde_json::to_string(hit).expect("hit serializes")).is_err() {
            return ExitCode::from(2);
        }
    }
    let summary = serde_json::json!({
        "expr": outcome.expr,
        "max_order": args.max_order,
        "seed": args.seed,
        "checked": outcome.checked,
        "hits": outcome.hits.len(),
    });
    if writeln!(w, "{summary}").is_err() {
        return ExitCode::from(2);
    }
    ExitCode::SUCCESS
}
