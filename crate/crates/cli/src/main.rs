mod commands;
mod table;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::num::NonZeroUsize;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};

use commands::{Report, UsageError};

/// Legendrian and transverse torus knots in overtwisted contact 3-spheres.
#[derive(Parser)]
#[command(name = "torus-contact", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON output to FILE.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<NonZeroUsize>,
    /// Omit headings and summaries.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Args, Clone, Copy)]
struct Knot {
    p: i64,
    q: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Negative continued fraction expansion of NUM/DEN.
    Cf { num: i64, den: i64 },
    /// Seifert data and chain expansions of T(p,q).
    Params(Knot),
    /// All presentations with ELL stabilizations and their invariants.
    Enumerate {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, default_value_t = 0)]
        ell: u32,
    },
    /// Equivalence classes of presentations with ELL stabilizations.
    Classify {
        #[command(flatten)]
        knot: Knot,
        #[arg(long, default_value_t = 1)]
        ell: u32,
    },
    /// Strongly non-loose transverse realizations.
    Transverse(Knot),
    /// HFK^- of T(p,q) as a sum of towers.
    Hfk(Knot),
    /// Positions of the transverse invariants inside HFK^-.
    Match(Knot),
    /// Reduction of the surgered diagrams to lens space chains.
    Lens(Knot),
    /// Run every reference check; exits 1 if any fails.
    Verify,
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match cli.command {
        Command::Cf { num, den } => commands::cf(num, den),
        Command::Params(k) => commands::params(k.p, k.q),
        Command::Enumerate { knot, ell } => commands::enumerate(knot.p, knot.q, ell),
        Command::Classify { knot, ell } => commands::classify(knot.p, knot.q, ell),
        Command::Transverse(k) => commands::transverse(k.p, k.q),
        Command::Hfk(k) => commands::hfk(k.p, k.q),
        Command::Match(k) => commands::match_report(k.p, k.q),
        Command::Lens(k) => commands::lens(k.p, k.q),
        Command::Verify => verify::run(),
    }
}

fn render(report: &Report, quiet: bool) -> String {
    let mut text = String::new();
    if !quiet {
        if let Some(h) = &report.heading {
            text.push_str(h);
            text.push('\n');
        }
    }
    text.push_str(&report.body);
    if !quiet {
        if let Some(s) = &report.summary {
            text.push_str(s);
            text.push('\n');
        }
    }
    text
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n.get())
            .build_global()
        {
            eprintln!("error: --threads: {e}");
            return ExitCode::from(2);
        }
    }
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    };
    let json = serde_json::to_string_pretty(&report.json).expect("reports serialize");
    if let Some(path) = &cli.out {
        if let Err(e) = fs::write(path, format!("{json}\n"))
            .with_context(|| format!("--out {}", path.display()))
        {
            eprintln!("error: {e:#}");
            return ExitCode::from(1);
        }
    }
    let text = if cli.json {
        format!("{json}\n")
    } else {
        render(&report, cli.quiet)
    };
    if let Err(e) = io::stdout().lock().write_all(text.as_bytes()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
