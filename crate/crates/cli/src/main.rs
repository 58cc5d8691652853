use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use affwhit::engine::Mode;
use affwhit::Cocycle;
use affwhit_cli::commands::{self, Outcome};
use affwhit_cli::config::{self, RunConfig};
use anyhow::Result;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "affwhit", version, about = "Whittaker modules over affine sl(n): exact experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// JSON run configuration
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in configuration (sl2, sl3-borel, sl3-abelian, sl2-loop,
    /// sl2-tensor, sl2-tensor-neg, geometric-family)
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args)]
struct Overrides {
    /// Maximum total monomial degree
    #[arg(short = 'D')]
    degree: Option<u32>,
    /// Maximum |t-exponent| of a factor
    #[arg(short = 'E')]
    exponent: Option<u32>,
    /// Condition window: X_α ⊗ t^j for |j| <= J
    #[arg(short = 'J')]
    window: Option<u32>,
    #[arg(long)]
    mode: Option<Mode>,
    #[arg(long)]
    cocycle: Option<Cocycle>,
    /// Add wall time to the report (reports are otherwise byte-stable)
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct Output {
    /// Write the JSON report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the JSON report instead of the text summary
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Roots, nilradical, strata and generator order of the configured algebra
    Describe {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Genericity verdicts and window ranks for sequences
    CheckSeq {
        #[command(flatten)]
        source: Source,
        /// Translate bound S
        #[arg(short = 'S', default_value_t = 6)]
        shifts: u32,
        /// Coordinate window W
        #[arg(short = 'W', default_value_t = 20)]
        window: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Whittaker vectors of M(Λ, θ) within a truncation (exit 2 if more than one)
    Whittaker {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        overrides: Overrides,
        #[command(flatten)]
        output: Output,
    },
    /// Whittaker vectors of M(Λ, θ) ⊗ M(Λ', θ') (exit 2 if more than one)
    Tensor {
        #[command(flatten)]
        source: Source,
        /// Config of the second factor; overrides the `partner` field
        #[arg(long)]
        partner: Option<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
        #[command(flatten)]
        output: Output,
    },
    /// Bracket of two generator literals such as `X[a1]@t^2` and `d`
    Bracket {
        left: String,
        right: String,
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        mode: Option<Mode>,
        #[arg(long)]
        cocycle: Option<Cocycle>,
        #[command(flatten)]
        output: Output,
    },
}

fn resolve(source: &Source, fallback: Option<&str>) -> Result<RunConfig> {
    config::select(source.config.as_deref(), source.preset.as_deref(), fallback)
}

fn apply(cfg: &mut RunConfig, o: &Overrides) {
    if let Some(d) = o.degree {
        cfg.truncation.degree = d;
    }
    if let Some(e) = o.exponent {
        cfg.truncation.exponent = e.into();
    }
    if let Some(j) = o.window {
        cfg.truncation.window = j.into();
    }
    if let Some(m) = o.mode {
        cfg.mode = m;
    }
    if let Some(c) = o.cocycle {
        cfg.cocycle = c;
    }
}

fn emit(outcome: &Outcome, output: &Output) -> Result<()> {
    let json = affwhit_cli::report::to_pretty(&outcome.report);
    if let Some(path) = &output.out {
        std::fs::write(path, &json)?;
    }
    let mut stdout = std::io::stdout().lock();
    if output.json {
        stdout.write_all(json.as_bytes())?;
    } else {
        stdout.write_all(outcome.text.as_bytes())?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    let (outcome, output) = match cli.command {
        Command::Describe { source, output } => (commands::describe(&resolve(&source, None)?)?, output),
        Command::CheckSeq { source, shifts, window, output } => {
            let cfg = resolve(&source, None)?;
            (commands::check_sequences(&cfg, shifts.into(), window.into())?, output)
        }
        Command::Whittaker { source, overrides, output } => {
            let mut cfg = resolve(&source, None)?;
            apply(&mut cfg, &overrides);
            (commands::whittaker(&cfg, overrides.timing)?, output)
        }
        Command::Tensor { source, partner, overrides, output } => {
            let mut cfg = resolve(&source, None)?;
            apply(&mut cfg, &overrides);
            let partner = partner.map(|p| config::load(&p)).transpose()?;
            (commands::tensor(&cfg, partner.as_ref(), overrides.timing)?, output)
        }
        Command::Bracket { left, right, source, mode, cocycle, output } => {
            let mut cfg = resolve(&source, Some("sl2"))?;
            if let Some(m) = mode {
                cfg.mode = m;
            }
            if let Some(c) = cocycle {
                cfg.cocycle = c;
            }
            (commands::bracket(&cfg, &left, &right)?, output)
        }
    };
    emit(&outcome, &output)?;
    Ok(outcome.code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
