//! Command-line front end for `qcontext`.
//!
//! Exit codes: 0 success or non-contextual, 10 contextual (`check`),
//! 2 invalid input or usage, 1 other failures.

pub mod file;
pub mod report;

use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Duration;

use anyhow::{anyhow, ensure, Context, Result};
use clap::{Parser, Subcommand};
use qcontext::contextuality::{build_system, check_contextual, degree, negative_context_count};
use qcontext::geometry::{GeometryFamily, GeometryFamilyId};
use qcontext::gf2::{default_threads, SearchBudget};
use qcontext::{polar_space, QuantumConfiguration};

pub use file::{ConfigurationFile, FileFormat};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_CONTEXTUAL: i32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "qcontext",
    version,
    about = "Contextuality of multi-qubit Pauli configurations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write one configuration file per member of a geometry family.
    Generate {
        #[arg(short = 'n', long)]
        n: usize,
        #[arg(long)]
        family: GeometryFamily,
        /// Base point or center as a Pauli string (`Q0` for the hyperbolic form itself).
        #[arg(long)]
        base_point: Option<String>,
        /// Output directory.
        #[arg(short = 'o', long, default_value = ".")]
        output: PathBuf,
        #[arg(long, value_enum, default_value_t = FileFormat::Json)]
        format: FileFormat,
        /// Permit n = 5, whose families are large.
        #[arg(long)]
        allow_large: bool,
    },
    /// Decide contextuality; exit 0 if non-contextual, 10 if contextual.
    Check { input: PathBuf },
    /// Compute the contextuality degree and the derived inequality bounds.
    Degree {
        input: PathBuf,
        /// Stop the search after this many seconds and report an upper bound.
        #[arg(long)]
        max_seconds: Option<f64>,
        #[arg(long, env = "CONTEXTUALITY_THREADS")]
        threads: Option<usize>,
    },
    /// Print the cardinality, degree and inequality tables.
    Tables {
        /// A rank `k` or an inclusive range `a..b`.
        #[arg(short = 'n', long, default_value = "2..3", value_parser = parse_range)]
        n: RangeInclusive<usize>,
        /// Seconds allowed for each degree search.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        #[arg(long, env = "CONTEXTUALITY_THREADS")]
        threads: Option<usize>,
        /// Emit one CSV row per family member instead of aligned tables.
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        allow_large: bool,
    },
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let k = parse(s)?;
            (k, k)
        }
    };
    if lo > hi || lo < 2 || hi > 5 {
        return Err(format!("range {s:?} must lie within 2..5"));
    }
    Ok(lo..=hi)
}

fn budget(max_seconds: Option<f64>, threads: Option<usize>) -> Result<SearchBudget> {
    let mut b = SearchBudget::unlimited().with_threads(threads.unwrap_or_else(default_threads).max(1));
    if let Some(s) = max_seconds {
        ensure!(s.is_finite() && s >= 0.0, "--max-seconds must be a non-negative number");
        b = b.with_max_duration(Duration::from_secs_f64(s));
    }
    Ok(b)
}

/// Parses `args` and runs the command, writing human-readable output to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e:#}");
            EXIT_INVALID
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            EXIT_FAILURE
        }
    }
}

enum Failure {
    Invalid(anyhow::Error),
    Other(anyhow::Error),
}

fn invalid(e: anyhow::Error) -> Failure {
    Failure::Invalid(e)
}

fn other(e: impl Into<anyhow::Error>) -> Failure {
    Failure::Other(e.into())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Generate {
            n,
            family,
            base_point,
            output,
            format,
            allow_large,
        } => generate(n, family, base_point.as_deref(), &output, format, allow_large, out),
        Command::Check { input } => {
            let config = load(&input)?;
            check(&config, out).map_err(other)
        }
        Command::Degree {
            input,
            max_seconds,
            threads,
        } => {
            let config = load(&input)?;
            let budget = budget(max_seconds, threads).map_err(invalid)?;
            degree_report(&config, &budget, out).map_err(other)?;
            Ok(EXIT_OK)
        }
        Command::Tables {
            n,
            budget,
            threads,
            csv,
            allow_large,
        } => {
            if *n.end() == 5 && !allow_large {
                return Err(invalid(anyhow!("n = 5 needs --allow-large")));
            }
            if !(budget.is_finite() && budget >= 0.0) {
                return Err(invalid(anyhow!("--budget must be a non-negative number")));
            }
            let threads = threads.unwrap_or_else(default_threads).max(1);
            tables(n, Duration::from_secs_f64(budget), threads, csv, out).map_err(other)?;
            Ok(EXIT_OK)
        }
    }
}

fn load(path: &std::path::Path) -> Result<QuantumConfiguration, Failure> {
    ConfigurationFile::read(path)
        .and_then(|f| f.to_configuration())
        .map_err(invalid)
}

fn generate(
    n: usize,
    family: GeometryFamily,
    base_point: Option<&str>,
    output: &std::path::Path,
    format: FileFormat,
    allow_large: bool,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    if n == 5 && !allow_large {
        return Err(invalid(anyhow!("n = 5 needs --allow-large")));
    }
    let space = polar_space(n).map_err(|e| invalid(e.into()))?;
    let geometries = match base_point {
        None => space.enumerate_family(family),
        Some(label) => {
            let base = if family == GeometryFamily::Hyperbolic && label.eq_ignore_ascii_case("q0") {
                None
            } else {
                Some(
                    space
                        .point_by_label(label)
                        .ok_or_else(|| invalid(anyhow!("{label:?} is not a point of W_{n}")))?,
                )
            };
            let id = GeometryFamilyId::new(family, base);
            vec![space.geometry(&id).map_err(|e| invalid(e.into()))?]
        }
    };
    std::fs::create_dir_all(output)
        .with_context(|| format!("creating {}", output.display()))
        .map_err(other)?;
    for g in &geometries {
        let config = QuantumConfiguration::from_geometry(&space, g);
        let text = ConfigurationFile::from_configuration(&config)
            .and_then(|f| f.render(format))
            .map_err(other)?;
        let path = output.join(format!("w{n}-{}.{}", g.id.label(&space), format.extension()));
        std::fs::write(&path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(other)?;
        writeln!(out, "{}", path.display()).map_err(other)?;
    }
    Ok(EXIT_OK)
}

fn check(config: &QuantumConfiguration, out: &mut dyn Write) -> Result<i32> {
    let sys = build_system(config)?;
    let verdict = check_contextual(&sys);
    writeln!(out, "source: {}", config.source())?;
    writeln!(
        out,
        "points: {}, contexts: {}",
        config.num_points(),
        config.num_contexts()
    )?;
    match verdict.witness {
        None => {
            writeln!(out, "contextual: no non-contextual valuation exists")?;
            Ok(EXIT_CONTEXTUAL)
        }
        Some(w) => {
            writeln!(out, "non-contextual; valuation f:")?;
            for (j, v) in w.values().iter().enumerate() {
                writeln!(out, "  {} {:+}", config.label(j), v)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn degree_report(config: &QuantumConfiguration, budget: &SearchBudget, out: &mut dyn Write) -> Result<()> {
    let sys = build_system(config)?;
    let r = degree(&sys, budget);
    writeln!(out, "source: {}", config.source())?;
    writeln!(
        out,
        "points: {}, contexts: {}, rank: {}",
        config.num_points(),
        r.contexts,
        r.rank
    )?;
    writeln!(out, "negative contexts: {}", negative_context_count(&sys))?;
    if r.no_contexts {
        writeln!(out, "d = 0 (no contexts)")?;
        return Ok(());
    }
    if r.proven {
        writeln!(out, "d = {}", r.degree)?;
    } else {
        writeln!(out, "d ≤ {} (unproven)", r.degree)?;
    }
    let qualifier = if r.proven { "" } else { " (from the upper bound on d)" };
    writeln!(out, "b = l - 2d = {}{qualifier}", r.bound_b())?;
    if let Some(eps) = r.epsilon() {
        writeln!(out, "epsilon = 2d/l = {eps} = {:.4}{qualifier}", eps.value())?;
    }
    let violated: Vec<String> = r
        .witness
        .violated
        .iter()
        .map(|&i| {
            let labels: Vec<String> = config.contexts()[i].iter().map(|&p| config.label(p)).collect();
            format!("{i}:{{{}}}", labels.join(","))
        })
        .collect();
    writeln!(out, "violated contexts ({}): {}", violated.len(), violated.join(" "))?;
    Ok(())
}

fn tables(
    ns: RangeInclusive<usize>,
    per_member: Duration,
    threads: usize,
    csv: bool,
    out: &mut dyn Write,
) -> Result<()> {
    let spaces = ns.clone().map(polar_space).collect::<Result<Vec<_>, _>>()?;
    let mut by_n = Vec::new();
    for space in &spaces {
        let mut families = Vec::new();
        for family in GeometryFamily::ALL {
            families.push((family, report::family_rows(space, family, Some(per_member), threads)?));
        }
        by_n.push((space.n(), families));
    }
    if csv {
        let rows: Vec<_> = by_n
            .iter()
            .flat_map(|(_, f)| f.iter().flat_map(|(_, r)| r.iter().cloned()))
            .collect();
        write!(out, "{}", report::rows_to_csv(&rows)?)?;
        return Ok(());
    }
    writeln!(out, "Cardinalities\n")?;
    write!(out, "{}", report::cardinality_table(&spaces))?;
    writeln!(
        out,
        "\nContextuality degrees (C = contextual, degree not computed; (m) = members)\n"
    )?;
    write!(out, "{}", report::degree_table(&by_n))?;
    if let Some((_, families)) = by_n.iter().find(|(n, _)| *n == 3) {
        let first = |f: GeometryFamily| families.iter().find(|(g, _)| *g == f).and_then(|(_, r)| r.first());
        let rows: Vec<_> = [GeometryFamily::Hyperbolic, GeometryFamily::Elliptic]
            .into_iter()
            .filter_map(first)
            .collect();
        writeln!(out, "\nInequality bounds for n=3 quadrics (N = contexts)\n")?;
        write!(out, "{}", report::inequality_table(&rows))?;
    }
    Ok(())
}
