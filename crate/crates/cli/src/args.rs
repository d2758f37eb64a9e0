use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use roughdep_core::dataset::MissingPolicy;
use roughdep_core::selection::Direction;
use roughdep_core::Measure;

#[derive(Debug, Parser)]
#[command(
    name = "roughdep",
    version,
    about = "Rough-set dependency analysis, reduct search and evaluation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dependency degrees of the decision on attribute subsets.
    Measure {
        #[command(flatten)]
        common: Common,
        /// Comma-separated attribute names; repeat for more subsets, "" for the empty set.
        /// Defaults to every single attribute plus the full set.
        #[arg(long = "subset", value_name = "NAME[,NAME...]")]
        subsets: Vec<String>,
    },
    /// Greedy forward selection or backward elimination.
    Select {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_measure, default_value = "ecd")]
        measure: Measure,
        #[arg(long, value_parser = parse_direction, default_value = "forward")]
        direction: Direction,
    },
    /// Block-majority evaluation of a subset, or of a freshly selected one.
    Evaluate {
        #[command(flatten)]
        common: Common,
        /// Subset to evaluate; without it a selection run picks one.
        #[arg(long, value_name = "NAME[,NAME...]")]
        subset: Option<String>,
        #[arg(long, value_parser = parse_measure, default_value = "ecd")]
        measure: Measure,
        #[arg(long, value_parser = parse_direction, default_value = "forward")]
        direction: Direction,
        /// Number of stratified folds; 0 evaluates on the training data.
        #[arg(long, default_value_t = 5)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// All minimal reducts by exhaustive enumeration.
    Oracle {
        #[command(flatten)]
        common: Common,
        /// Restrict to one measure; all four by default.
        #[arg(long, value_parser = parse_measure)]
        measure: Option<Measure>,
        /// Subsets to check for reduct-hood.
        #[arg(long = "subset", value_name = "NAME[,NAME...]")]
        subsets: Vec<String>,
        /// Largest number of conditional attributes to enumerate over.
        #[arg(long, default_value_t = roughdep_core::selection::DEFAULT_REDUCT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_name = "PATH")]
    pub input: PathBuf,
    /// Decision column; may come from --config instead.
    #[arg(long, value_name = "NAME")]
    pub decision: Option<String>,
    /// key = value file with loader settings; flags override it.
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
    #[arg(long, value_name = "STR")]
    pub missing_token: Option<String>,
    #[arg(long, value_parser = parse_policy)]
    pub missing_policy: Option<MissingPolicy>,
    /// Numeric columns to discretize; comma-separated and repeatable.
    #[arg(long, value_name = "NAME[,NAME...]", value_delimiter = ',')]
    pub numeric: Vec<String>,
    #[arg(long)]
    pub bins: Option<usize>,
    #[arg(long, value_enum, default_value_t = Encoding::Native)]
    pub encode: Encoding,
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Encoding {
    Native,
    Onehot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl Encoding {
    pub fn as_str(self) -> &'static str {
        match self {
            Encoding::Native => "native",
            Encoding::Onehot => "onehot",
        }
    }
}

impl Format {
    pub fn as_str(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
        }
    }
}

fn parse_measure(s: &str) -> Result<Measure, String> {
    s.parse()
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse()
}

fn parse_policy(s: &str) -> Result<MissingPolicy, String> {
    s.parse()
}
