mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use confcoh::dga::{cohomology_degree_weight_dims, cohomology_reps, FilteredBasis, Model};
use confcoh::qformula::{
    betti, build_q, build_q_numerator, euler_series, genus0_table, mixed_tables,
};
use confcoh::repr::{label_dim, CharacterEngine, RepLabel};
use confcoh::verify::verify;

use render::Format;

/// Largest genus the character engine handles.
const REPS_MAX_GENUS: u32 = 3;
/// Largest genus accepted by the brute-force oracle.
const ORACLE_MAX_GENUS: u32 = 6;

#[derive(Debug, Parser)]
#[command(
    name = "confcoh",
    version,
    about = "Weight-graded cohomology of unordered configuration spaces of closed surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the master series Q_g up to u^max_n.
    QSeries {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_n: u32,
        /// Replace representations by their dimensions.
        #[arg(long)]
        dims: bool,
        /// Print (1-u)·Q_g instead of Q_g.
        #[arg(long)]
        numerator: bool,
    },
    /// Mixed Hodge table of UConf_n, or of every n up to --max-n.
    Table(TableArgs),
    /// Betti numbers b_0 .. b_top.
    Betti {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: u32,
    },
    /// Dimension of the irreducible V(i, j) of sp(2g).
    Dim {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        j: u32,
    },
    /// Euler characteristics for n = 0 .. max_n.
    Euler {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_n: u32,
    },
    /// Cohomology of the filtered model, by exact linear algebra.
    Oracle {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value_t = ModelArg::A)]
        model: ModelArg,
        /// Decompose into irreducibles (model A only).
        #[arg(long)]
        reps: bool,
        /// Dump every block of the differential as Matrix Market files.
        #[arg(long)]
        debug_dir: Option<PathBuf>,
    },
    /// Compare the series tables with the oracle.
    Verify {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        max_n: u32,
        /// Compare decompositions too, not only dimensions.
        #[arg(long)]
        reps: bool,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long, conflicts_with = "max_n", required_unless_present = "max_n")]
    n: Option<u32>,
    #[arg(long)]
    max_n: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModelArg {
    A,
    B,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Model {
        match m {
            ModelArg::A => Model::A,
            ModelArg::B => Model::B,
        }
    }
}

/// Arguments clap cannot reject on its own.
fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(anyhow::anyhow!(msg.into()))
}

/// What a command produced: the rendered data and whether a check failed.
struct Output {
    text: String,
    mismatch: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output {
            text,
            mismatch: false,
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Output> {
    let format = cli.format;
    match &cli.command {
        Command::QSeries {
            genus,
            max_n,
            dims,
            numerator,
        } => {
            if *genus == 0 {
                return usage(
                    "q-series needs genus >= 1; for the sphere use `confcoh betti --genus 0 --n N`",
                );
            }
            let q = if *numerator {
                build_q_numerator(*genus, *max_n)?
            } else {
                build_q(*genus, *max_n)?
            };
            Ok(render::series(&q, *genus, *dims, format)?.into())
        }
        Command::Table(args) => {
            let (lo, hi) = match (args.n, args.max_n) {
                (Some(n), _) => (n, n),
                (None, Some(m)) => (0, m),
                (None, None) => return usage("table needs --n or --max-n"),
            };
            let tables = if args.genus == 0 {
                (lo..=hi).map(genus0_table).collect()
            } else {
                mixed_tables(args.genus, hi)?
                    .into_iter()
                    .filter(|t| t.n >= lo)
                    .collect::<Vec<_>>()
            };
            Ok(render::tables(&tables, format)?.into())
        }
        Command::Betti { genus, n } => {
            let b: Vec<BigInt> = betti(*genus, *n)?.into_iter().map(BigInt::from).collect();
            let meta = json!({"genus": genus, "n": n});
            Ok(render::sequence("betti", "k", meta, &b, format)?.into())
        }
        Command::Dim { genus, i, j } => {
            if *genus == 0 || j > genus {
                return usage(format!("V({i},{j}) needs genus >= 1 and j <= genus"));
            }
            let label = RepLabel::new(*genus, i64::from(*i), i64::from(*j));
            if label.is_zero() {
                return usage(format!("V({i},{j}) is not a representation"));
            }
            let d = BigInt::from(label_dim(*genus, label)?);
            Ok(match format {
                Format::Text => format!("{d}\n"),
                Format::Json => format!(
                    "{}\n",
                    json!({"genus": genus, "i": i, "j": j, "dim": render::big(&d)})
                ),
                Format::Csv => format!("genus,i,j,dim\n{genus},{i},{j},{d}\n"),
            }
            .into())
        }
        Command::Euler { genus, max_n } => {
            let chi = euler_series(*genus, *max_n)?;
            let meta = json!({"genus": genus, "max_n": max_n});
            Ok(render::sequence("euler", "n", meta, &chi, format)?.into())
        }
        Command::Oracle {
            genus,
            n,
            model,
            reps,
            debug_dir,
        } => {
            if *genus > ORACLE_MAX_GENUS {
                return usage(format!("the oracle handles genus <= {ORACLE_MAX_GENUS}"));
            }
            if *genus == 0 && *n == 1 {
                return usage("the model does not compute UConf_1(S^2); use n != 1");
            }
            if *reps && (*model == ModelArg::B || *genus > REPS_MAX_GENUS || *genus == 0) {
                return usage(format!(
                    "--reps needs model A and 1 <= genus <= {REPS_MAX_GENUS}"
                ));
            }
            if let Some(dir) = debug_dir {
                let basis = FilteredBasis::new(*genus, *n, (*model).into());
                let count = basis
                    .dump_blocks(dir)
                    .with_context(|| format!("writing blocks to {}", dir.display()))?;
                log::info!("wrote {count} blocks to {}", dir.display());
            }
            if *reps {
                let table = cohomology_reps(*genus, *n, &CharacterEngine::new(REPS_MAX_GENUS))?;
                Ok(render::tables(&[table], format)?.into())
            } else {
                let dims = cohomology_degree_weight_dims(*genus, *n, (*model).into())?;
                Ok(render::dims(*genus, *n, &dims, format)?.into())
            }
        }
        Command::Verify {
            genus,
            max_n,
            reps,
        } => {
            if *genus > ORACLE_MAX_GENUS {
                return usage(format!("the oracle handles genus <= {ORACLE_MAX_GENUS}"));
            }
            if *reps && *genus > REPS_MAX_GENUS {
                return usage(format!("--reps needs genus <= {REPS_MAX_GENUS}"));
            }
            let report = verify(*genus, *max_n, *reps, &CharacterEngine::new(REPS_MAX_GENUS))?;
            for m in &report.mismatches {
                eprintln!("mismatch: {m}");
            }
            Ok(Output {
                text: render::report(&report, *reps, format)?,
                mismatch: !report.passed(),
            })
        }
    }
}

fn init_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("CONFCOH_THREADS") else {
        return Ok(());
    };
    let threads: usize = match raw.trim().parse() {
        Ok(t) if t > 0 => t,
        _ => return usage(format!("CONFCOH_THREADS must be a positive integer, got {raw:?}")),
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .context("configuring the worker pool")?;
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = init_threads().and_then(|()| run(&cli)).and_then(|out| {
        match &cli.out {
            Some(path) => fs::write(path, &out.text)
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("{}", out.text),
        }
        Ok(out.mismatch)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
