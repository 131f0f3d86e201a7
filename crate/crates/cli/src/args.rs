use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "pathdepth", version, about = "Depth and Stanley depth of monomial ideals, with path-ideal sweeps and lemma checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// depth(S/I), depth(I) and pd(S/I) from the Betti table
    Depth(DepthArgs),
    /// Stanley depth with an interval-partition certificate
    Sdepth(SdepthArgs),
    /// Multigraded Betti numbers of S/I
    Betti(BettiArgs),
    /// Engine values against the closed forms over an (n, m, t) grid
    Sweep(SweepArgs),
    /// Check one lemma instance
    Check(CheckArgs),
    /// Exploratory table for sdepth(S/I_{n,2}^t)
    ExploreStefan(StefanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Markdown,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldArg {
    Rational,
    Char2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Quotient,
    Ideal,
    Pair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Sat,
    Backtrack,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
    /// Wall-clock budget per Stanley depth instance
    #[arg(long, default_value_t = 60)]
    pub timeout_secs: u64,
    /// Cap on the bounding box of a characteristic poset
    #[arg(long, default_value_t = 2_000_000)]
    pub max_poset: usize,
    /// Cap on the number of minimal generators
    #[arg(long, default_value_t = 22)]
    pub max_gens: usize,
    #[arg(long, value_enum, default_value = "rational")]
    pub field: FieldArg,
    #[arg(long, value_enum, default_value = "sat")]
    pub engine: EngineArg,
    /// Result cache directory
    #[arg(long, env = "PATHDEPTH_CACHE")]
    pub cache_dir: Option<PathBuf>,
    /// Re-verify cached certificates before using them
    #[arg(long)]
    pub paranoid: bool,
    /// Run everything on the calling thread
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// I_{n,m}: products of m consecutive variables of x1..xn
    #[arg(long, num_args = 2, value_names = ["N", "M"])]
    pub path: Option<Vec<usize>>,
    /// Ideal in the text format
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct DepthArgs {
    #[command(flatten)]
    pub source: Source,
    /// Power of the ideal
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct BettiArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SdepthArgs {
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = 1)]
    pub t: u32,
    #[arg(long, value_enum, default_value = "quotient")]
    pub mode: ModeArg,
    /// The smaller ideal J for pair mode (I/J)
    #[arg(long)]
    pub sub: Option<PathBuf>,
    /// Bounding degree g, a monomial such as x1^2*x2
    #[arg(long)]
    pub g: Option<String>,
    /// First k to try
    #[arg(long)]
    pub hint: Option<usize>,
    /// Write the certificate as JSON to this path
    #[arg(long)]
    pub certificate: Option<PathBuf>,
    /// Check a stored certificate instead of searching
    #[arg(long, conflicts_with = "certificate")]
    pub check_certificate: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Range such as 1..6, or a single value
    #[arg(long, default_value = "1..6")]
    pub n: String,
    #[arg(long, default_value = "1..6")]
    pub m: String,
    #[arg(long, default_value = "1..3")]
    pub t: String,
    /// Also compute sdepth(S/I^t)
    #[arg(long)]
    pub sdepth: bool,
    /// Also compute sdepth(I^t)
    #[arg(long)]
    pub sdepth_ideal: bool,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    /// colon-power, truncation, ladder, colon-w, umt or vIv
    pub lemma: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub t: usize,
    /// Truncation depth; all 2 <= k <= m when absent
    #[arg(long)]
    pub k: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct StefanArgs {
    #[arg(long, default_value = "2..7")]
    pub n: String,
    #[arg(long, default_value = "1..3")]
    pub t: String,
    #[command(flatten)]
    pub common: Common,
}
