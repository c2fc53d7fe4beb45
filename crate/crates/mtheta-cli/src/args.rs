use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mtheta::catalog::MockThetaId;
use mtheta::density::SequenceId;
use mtheta::verify::Profile;

#[derive(Parser, Debug)]
#[command(
    name = "mtheta",
    version,
    about = "Coefficients, parities and verified parity theorems of the classical mock theta functions"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Output format [default: json for verify, identities and counts; plain otherwise].
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 or unset: all cores).
    #[arg(long, env = "MTHETA_THREADS", global = true)]
    pub threads: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

impl Command {
    pub fn default_format(&self) -> Format {
        match self {
            Command::Verify { .. } | Command::Identities { .. } | Command::Counts { .. } => {
                Format::Json
            }
            _ => Format::Plain,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Coefficients c(id; 0..N-1).
    Expand {
        #[arg(value_parser = parse_id)]
        id: MockThetaId,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        /// A form label, or a kind: eulerian, hecke, appell-lerch, product.
        #[arg(long, default_value = "eulerian")]
        rep: String,
    },
    /// Indices n < N with c(id; n) odd.
    Parity {
        #[arg(value_parser = parse_id)]
        id: MockThetaId,
        #[arg(long, default_value_t = 100)]
        terms: usize,
    },
    /// Run registered claims.
    Verify {
        /// Every registered claim.
        #[arg(long, conflicts_with_all = ["claim", "kind"])]
        all: bool,
        /// Claim ids to run.
        #[arg(long)]
        claim: Vec<String>,
        /// Claim kind to run.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Odd-coefficient density of one or more sequences (`id`, `id:2n`, `id:2n+1`).
    Density {
        #[arg(required = true, value_parser = parse_seq)]
        seq: Vec<SequenceId>,
        #[arg(long, default_value_t = 100_000)]
        limit: u64,
        /// Also sample at limit + k*step up to --upto.
        #[arg(long, conflicts_with = "factor")]
        step: Option<u64>,
        /// Also sample at limit * factor^k up to --upto.
        #[arg(long)]
        factor: Option<u64>,
        #[arg(long)]
        upto: Option<u64>,
    },
    /// The fifteen-sequence density table.
    Table1 {
        #[arg(long, default_value_t = mtheta::density::TABLE1_DEFAULT_X)]
        limit: u64,
    },
    /// Special-form test A n + B = p^(4a+1) m^2 for a registered function.
    Predicate {
        #[arg(long, value_parser = parse_id)]
        cond: MockThetaId,
        #[arg(long)]
        n: i64,
        /// Test every index from --n to --to inclusive.
        #[arg(long)]
        to: Option<i64>,
    },
    /// Run the identity claims.
    Identities {
        #[command(flatten)]
        run: RunOpts,
    },
    /// Run the closed count formulas.
    Counts {
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RunOpts {
    /// `default` or a uniform depth N.
    #[arg(long, default_value = "default", value_parser = parse_profile)]
    pub depth: Profile,
    /// Run claims one at a time.
    #[arg(long)]
    pub sequential: bool,
    /// Report measured wall time (otherwise 0, keeping output reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Characterization,
    Congruence,
    Identity,
    Count,
}

fn parse_id(s: &str) -> Result<MockThetaId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_seq(s: &str) -> Result<SequenceId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_profile(s: &str) -> Result<Profile, String> {
    match s {
        "default" => Ok(Profile::default()),
        n => n
            .parse::<usize>()
            .map(Profile::uniform)
            .map_err(|_| format!("depth must be `default` or a non-negative integer, got `{n}`")),
    }
}
