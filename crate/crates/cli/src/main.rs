use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{bail, Context as _, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use qpair::algebra::Algebra;
use qpair::cartan::{CartanDatum, RootVector, Weight};
use qpair::harness::{run_suite, CheckConfig, CHECKS};
use qpair::pairing::Pairing;
use qpair::par::ExecMode;
use qpair::repr::WeightModule;

/// Exact checks for quantized enveloping algebras over Q(q).
#[derive(Parser)]
#[command(name = "qpair", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct TypeArgs {
    /// Preset Cartan type: A1, A2, B2, G2, A1xA1.
    #[arg(long = "type", value_name = "TYPE", conflicts_with = "gcm")]
    cartan_type: Option<String>,
    /// File holding a generalized Cartan matrix, one row per line.
    #[arg(long, value_name = "FILE")]
    gcm: Option<PathBuf>,
}

impl TypeArgs {
    fn datum(&self) -> Result<CartanDatum> {
        match (&self.cartan_type, &self.gcm) {
            (Some(t), _) => Ok(CartanDatum::preset(t)?),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "gcm".into());
                Ok(CartanDatum::from_gcm_text(name, &text)?)
            }
            (None, None) => bail!("one of --type or --gcm is required"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run named checks and print a report; exits nonzero if any fails.
    Verify {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, default_value_t = 6)]
        max_height: i32,
        /// Height bound of the braid-invariance check (default 5, or 4 for G2).
        #[arg(long)]
        theorem_height: Option<i32>,
        /// Comma-separated check names (default: all).
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random instances per sampled property.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Omit wall times so reports compare byte for byte.
        #[arg(long)]
        no_timings: bool,
        /// Run every check on the calling thread.
        #[arg(long)]
        sequential: bool,
        /// List the available checks and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print the normal form of an expression.
    Eval {
        #[command(flatten)]
        ty: TypeArgs,
        expr: String,
    },
    /// Evaluate tau(x, y) for x in U>=0 and y in U<=0.
    Tau {
        #[command(flatten)]
        ty: TypeArgs,
        x: String,
        y: String,
    },
    /// Apply T_i (or T_i^{-1}) to an expression; indices are 1-based.
    Braid {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        inverse: bool,
        expr: String,
    },
    /// Print the Gram block of tau at a weight as `weight; e-word; f-word; value` lines.
    Gram {
        #[command(flatten)]
        ty: TypeArgs,
        /// Weight as comma-separated coordinates in the simple roots.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Vec<i32>,
    },
    /// Finite-dimensional modules.
    Module {
        #[command(subcommand)]
        command: ModuleCommand,
    },
}

#[derive(Subcommand)]
enum ModuleCommand {
    /// Print basis, weights and generator matrices of an irreducible module.
    Dump {
        #[command(flatten)]
        ty: TypeArgs,
        /// Highest weight as comma-separated coordinates in the fundamental weights.
        #[arg(long, value_delimiter = ',')]
        highest: Vec<i32>,
        /// Dump the lowest-weight module with lowest weight minus the given weight.
        #[arg(long)]
        lowest: bool,
    },
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Verify { ty, max_height, theorem_height, checks, seed, samples, format, no_timings, sequential, list } => {
            if list {
                for (name, statement) in CHECKS {
                    println!("{name}: {statement}");
                }
                return Ok(true);
            }
            let mut cfg = CheckConfig::new(ty.datum()?);
            cfg.max_height = max_height;
            if let Some(h) = theorem_height {
                cfg.theorem_height = h;
            }
            if !checks.is_empty() {
                cfg.checks = checks;
            }
            cfg.seed = seed;
            cfg.samples = samples;
            if sequential {
                cfg.mode = ExecMode::Sequential;
            }
            let mut report = run_suite(cfg)?;
            if no_timings {
                report = report.without_timings();
            }
            match format {
                Format::Text => print!("{}", report.to_text()),
                Format::Json => println!("{}", report.to_json()),
            }
            Ok(report.passed())
        }
        Command::Eval { ty, expr } => {
            let alg = Algebra::new(ty.datum()?);
            println!("{}", alg.parse(&expr)?);
            Ok(true)
        }
        Command::Tau { ty, x, y } => {
            let alg = Arc::new(Algebra::new(ty.datum()?));
            let (x, y) = (alg.parse(&x)?, alg.parse(&y)?);
            println!("{}", Pairing::new(alg).tau(&x, &y)?);
            Ok(true)
        }
        Command::Braid { ty, index, inverse, expr } => {
            let alg = Algebra::new(ty.datum()?);
            if index == 0 {
                bail!("braid indices are 1-based");
            }
            alg.check_index(index - 1)?;
            let x = alg.parse(&expr)?;
            let y = if inverse { alg.braid_t_inv(index - 1, &x) } else { alg.braid_t(index - 1, &x) };
            println!("{y}");
            Ok(true)
        }
        Command::Gram { ty, weight } => {
            let alg = Arc::new(Algebra::new(ty.datum()?));
            if weight.len() != alg.rank() {
                bail!("weight needs {} coordinates, got {}", alg.rank(), weight.len());
            }
            for line in Pairing::new(alg).gram_lines(&RootVector(weight))? {
                println!("{line}");
            }
            Ok(true)
        }
        Command::Module { command: ModuleCommand::Dump { ty, highest, lowest } } => {
            let datum = ty.datum()?;
            let w = Weight(highest);
            let m = if lowest { WeightModule::lowest(&datum, &w)? } else { WeightModule::highest(&datum, &w)? };
            print!("{}", m.dump());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
