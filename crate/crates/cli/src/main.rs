use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use diagram_ops::characters::{CACHE_DIR_ENV, DEFAULT_CACHE_DIR, MAX_TABLE_DEGREE};
use diagram_ops::selftest::{self, Suite};
use diagram_ops::{CharTableCache, Error};

mod commands;

#[derive(Parser, Debug)]
#[command(
    name = "diagram-ops",
    version,
    about = "Exact computations in the algebra of Young diagrams"
)]
struct Cli {
    #[command(flatten)]
    config: CliConfig,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest degree any command may touch (at most 14)
    #[arg(long, global = true, default_value_t = 10)]
    pub max_degree: u32,

    /// Directory holding cached character tables
    #[arg(long, global = true, env = CACHE_DIR_ENV, default_value = DEFAULT_CACHE_DIR)]
    pub cache_dir: PathBuf,

    /// Seed for randomized sampling
    #[arg(long, global = true, default_value_t = selftest::DEFAULT_SEED)]
    pub seed: u64,
}

impl CliConfig {
    pub fn cache(&self) -> CharTableCache {
        CharTableCache::new(&self.cache_dir)
            .with_max_degree(self.max_degree)
            .with_seed(self.seed)
    }

    pub fn check_degree(&self, what: &str, degree: u32) -> diagram_ops::Result<()> {
        if degree > self.max_degree {
            return Err(Error::Resource(format!(
                "{what} has degree {degree}, above --max-degree {}",
                self.max_degree
            )));
        }
        Ok(())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of two diagram sums in the algebra of all diagrams
    Mult { a: String, b: String },
    /// Character table of S_n
    Chartable { n: u32 },
    /// Schur function s_R in power sums
    Schur { shape: String },
    /// Eigenvalue of W(D) on s_R
    Eigenvalue { diagram: String, shape: String },
    /// Apply W(D) to a polynomial in power sums
    Wapply {
        diagram: String,
        poly: String,
        /// Use the explicit differential operator (degree <= 3 diagrams only)
        #[arg(long)]
        explicit: bool,
    },
    /// Hurwitz number with each branch type padded to degree n
    Hurwitz {
        #[arg(long)]
        n: u32,
        /// Branch types, each of degree at most n
        #[arg(required = true)]
        branches: Vec<String>,
        /// Ramification over the last point, of degree n (default [1^n])
        #[arg(long = "final")]
        final_diagram: Option<String>,
    },
    /// Truncated generating function of Hurwitz numbers
    Evolve {
        /// Active directions
        #[arg(required = true)]
        directions: Vec<String>,
        #[arg(long, default_value_t = 4)]
        p_bound: u32,
        #[arg(long, default_value_t = 2)]
        order: u32,
    },
    /// Cross-check fast paths against enumeration oracles
    Selftest {
        #[arg(default_value = "quick")]
        level: String,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Argument(_) => 2,
        Error::Resource(_) => 3,
        Error::Internal(_) => 4,
        Error::Io { .. } => 1,
    }
}

fn run(cli: &Cli) -> diagram_ops::Result<(String, bool)> {
    let config = &cli.config;
    if config.max_degree > MAX_TABLE_DEGREE {
        return Err(Error::Resource(format!(
            "--max-degree {} exceeds the hard limit {MAX_TABLE_DEGREE}",
            config.max_degree
        )));
    }
    let out = match &cli.command {
        Command::Mult { a, b } => commands::mult(config, a, b)?,
        Command::Chartable { n } => commands::chartable(config, *n)?,
        Command::Schur { shape } => commands::schur(config, shape)?,
        Command::Eigenvalue { diagram, shape } => commands::eigenvalue(config, diagram, shape)?,
        Command::Wapply {
            diagram,
            poly,
            explicit,
        } => commands::wapply(config, diagram, poly, *explicit)?,
        Command::Hurwitz {
            n,
            branches,
            final_diagram,
        } => commands::hurwitz(config, *n, branches, final_diagram.as_deref())?,
        Command::Evolve {
            directions,
            p_bound,
            order,
        } => commands::evolve(config, directions, *p_bound, *order)?,
        Command::Selftest { level } => {
            let suite: Suite = level.parse()?;
            return commands::selftest(config, suite);
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            println!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(4)
            }
        }
        Err(e) => {
            if cli.config.json {
                let envelope =
                    serde_json::json!({"error": {"kind": e.kind(), "msg": e.to_string()}});
                println!("{envelope}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(exit_code(&e))
        }
    }
}
