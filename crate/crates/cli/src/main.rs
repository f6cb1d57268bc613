mod render;

use std::io::{IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use nbox::bounds::{bounds_table, pascal_audit};
use nbox::constructions::{
    ball_family, canonical, extremal_dminus1, fragmented, m_value, mbar_value, product, realize_mbar,
};
use nbox::search::{enumerate_max_families, max_family, SearchConfig};
use nbox::{best_bounds, BicliqueCover, BigExact, Family, FragmentPlan};
use serde_json::json;

use render::Format;

/// Neighborly families of boxes: constructions, verification, bounds and
/// exact search.
#[derive(Parser)]
#[command(name = "nbox", version)]
struct Cli {
    /// Worker threads for parallel work (defaults to all cores).
    #[arg(long, global = true, env = "NBOX_THREADS")]
    threads: Option<usize>,
    /// Emit JSON.
    #[arg(long, global = true, conflicts_with = "tsv")]
    json: bool,
    /// Emit tab-separated values (the default when stdout is not a terminal).
    #[arg(long, global = true)]
    tsv: bool,
    /// Sequential, reproducible exploration wherever order could vary.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family and print it in .nbx format.
    #[command(subcommand)]
    Construct(Construct),
    /// Check that a family is k-neighborly. Exits 1 if it is not.
    Verify {
        /// .nbx file, or - for stdin
        file: String,
        k: usize,
    },
    /// Best known lower and upper bounds on n(k,d).
    Bounds { k: usize, d: usize },
    /// Bounds for every 1 <= k <= min(kmax, d), d <= dmax.
    Table {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        dmax: usize,
    },
    /// Exact maximum family by branch and bound.
    Search(SearchArgs),
    /// m(k,d) and mbar(k,d) with their optimal parameters.
    Mkd { k: usize, d: usize },
    /// Translate between families and biclique covers.
    #[command(subcommand)]
    Convert(Convert),
    /// Check lower(k,d) <= upper(k-1,d-1) + upper(k,d-1) over the bounds
    /// table. Exits 1 on a violation.
    Audit {
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        dmax: usize,
    },
    /// Merge twin pairs down to a single string. Exits 1 if the family is
    /// not a partition or gets stuck.
    Reduce {
        /// .nbx file, or - for stdin
        file: String,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// The 1-neighborly family C_d of size d+1.
    Canonical { d: usize },
    /// Binary strings of weight at most k/2.
    Ball { k: usize, d: usize },
    /// Concatenations xy for x in A, y in B.
    Product { a: String, b: String },
    /// The fragmented construction; defaults to the plan achieving m(k,d).
    Fragmented {
        k: usize,
        d: usize,
        /// Number of blocks; widths are balanced unless --a is given.
        #[arg(long)]
        m: Option<usize>,
        /// Block widths, comma separated.
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
    },
    /// A (d-1)-neighborly family of size 3*2^(d-2).
    Extremal { d: usize },
    /// Product of fragmented constructions achieving mbar(k,d).
    Mbar { k: usize, d: usize },
}

#[derive(Args)]
struct SearchArgs {
    k: usize,
    d: usize,
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_secs: Option<f64>,
    /// Allow strings with more than d-k jokers.
    #[arg(long)]
    no_joker_prune: bool,
    /// Search from every root instead of orbit representatives.
    #[arg(long)]
    no_symmetry: bool,
    /// List every maximum family.
    #[arg(long)]
    enumerate: bool,
    /// Ignore the candidate capacity limit.
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Convert {
    /// .nbx family to a JSON biclique cover.
    ToCover { file: String },
    /// JSON biclique cover to a .nbx family.
    ToFamily { file: String },
}

enum Outcome {
    Success,
    Failure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = if cli.json {
        Format::Json
    } else if cli.tsv || !std::io::stdout().is_terminal() {
        Format::Tsv
    } else {
        Format::Human
    };
    let mut out = String::new();
    let code = match run(cli.command, format, cli.deterministic, &mut out) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::Failure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    };
    // a reader that stops early (e.g. `head`) is not an error
    match std::io::stdout().lock().write_all(out.as_bytes()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        _ => code,
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(PathBuf::from(path)).with_context(|| format!("reading {path}"))
    }
}

fn read_family(path: &str) -> Result<Family> {
    Family::from_nbx(&read_input(path)?).with_context(|| format!("parsing {path}"))
}

fn run(command: Command, format: Format, deterministic: bool, out: &mut String) -> Result<Outcome> {
    match command {
        Command::Construct(c) => construct(c, format, out),
        Command::Verify { file, k } => {
            let family = read_family(&file)?;
            let report = family.verify_neighborly(k)?;
            render::verify(out, &family, &report, format);
            Ok(if report.valid {
                Outcome::Success
            } else {
                Outcome::Failure
            })
        }
        Command::Bounds { k, d } => {
            let entry = best_bounds::<BigExact>(k, d)?;
            render::bounds(out, &[entry], format, false);
            Ok(Outcome::Success)
        }
        Command::Table { kmax, dmax } => {
            render::bounds(out, &bounds_table::<BigExact>(kmax, dmax), format, true);
            Ok(Outcome::Success)
        }
        Command::Search(args) => search(args, format, deterministic, out),
        Command::Mkd { k, d } => {
            let m = m_value::<BigExact>(k, d)?;
            let mbar = mbar_value::<BigExact>(k, d)?;
            render::mkd(out, k, d, &m, &mbar, format);
            Ok(Outcome::Success)
        }
        Command::Convert(Convert::ToCover { file }) => {
            let cover = BicliqueCover::from_family(&read_family(&file)?);
            *out = serde_json::to_string_pretty(&cover)? + "\n";
            Ok(Outcome::Success)
        }
        Command::Convert(Convert::ToFamily { file }) => {
            let cover: BicliqueCover =
                serde_json::from_str(&read_input(&file)?).with_context(|| format!("parsing {file}"))?;
            *out = cover.to_family()?.to_nbx();
            Ok(Outcome::Success)
        }
        Command::Audit { kmax, dmax } => {
            let findings = pascal_audit(&bounds_table::<BigExact>(kmax, dmax))?;
            render::audit(out, &findings, format);
            Ok(if findings.iter().any(|f| f.violated) {
                Outcome::Failure
            } else {
                Outcome::Success
            })
        }
        Command::Reduce { file } => {
            let family = read_family(&file)?;
            match family.reduce_to_trivial() {
                Ok(trace) => {
                    render::families(out, &trace, format);
                    Ok(Outcome::Success)
                }
                Err(e) => {
                    eprintln!("cannot reduce: {e}");
                    Ok(Outcome::Failure)
                }
            }
        }
    }
}

fn construct(c: Construct, format: Format, out: &mut String) -> Result<Outcome> {
    let (name, k, family) = match c {
        Construct::Canonical { d } => ("canonical", Some(1), canonical(d)?),
        Construct::Ball { k, d } => ("ball", Some(k), ball_family(k, d)?),
        Construct::Product { a, b } => {
            if a == "-" && b == "-" {
                bail!("at most one product operand can be stdin");
            }
            ("product", None, product(&read_family(&a)?, &read_family(&b)?))
        }
        Construct::Fragmented { k, d, m, a } => {
            let plan = match (m, a) {
                (Some(m), Some(a)) if a.len() != m => bail!("--m {m} but {} widths in --a", a.len()),
                (_, Some(a)) => FragmentPlan::new(k, d, a)?,
                (Some(m), None) => FragmentPlan::balanced(k, d, m)?,
                (None, None) => m_value::<BigExact>(k, d)?.plan,
            };
            ("fragmented", Some(k), fragmented(&plan)?)
        }
        Construct::Extremal { d } => ("extremal", Some(d.saturating_sub(1)), extremal_dminus1(d)?),
        Construct::Mbar { k, d } => ("mbar", Some(k), realize_mbar(k, d)?),
    };
    match format {
        Format::Json => {
            let members: Vec<String> = family.iter().map(ToString::to_string).collect();
            let value = json!({
                "construction": name,
                "k": k,
                "d": family.dim(),
                "size": family.len(),
                "members": members,
            });
            *out = serde_json::to_string_pretty(&value)? + "\n";
        }
        _ => *out = family.to_nbx(),
    }
    Ok(Outcome::Success)
}

fn search(args: SearchArgs, format: Format, deterministic: bool, out: &mut String) -> Result<Outcome> {
    let mut cfg = SearchConfig {
        joker_prune: !args.no_joker_prune,
        symmetry: !args.no_symmetry,
        deterministic,
        ..SearchConfig::default()
    };
    if let Some(n) = args.budget_nodes {
        cfg.node_budget = n;
    }
    if let Some(secs) = args.budget_secs {
        if !(secs > 0.0 && secs.is_finite()) {
            bail!("--budget-secs must be positive");
        }
        cfg.time_budget = Duration::from_secs_f64(secs);
    }
    if args.force {
        cfg.capacity = usize::MAX;
    }
    if args.enumerate {
        let families = enumerate_max_families(args.k, args.d, &cfg)?;
        render::enumeration(out, args.k, args.d, &families, format);
    } else {
        let result = max_family(args.k, args.d, &cfg)?;
        render::search(out, &result, format);
    }
    Ok(Outcome::Success)
}
