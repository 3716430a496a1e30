use clap::{Args, Parser, Subcommand, ValueEnum};
use reis::AxisFilter;

#[derive(Debug, Parser)]
#[command(
    name = "reis",
    version,
    about = "Count and enumerate cyclic configurations up to rotation and reflection",
    after_help = "Set REIS_WORKERS to cap the number of worker threads."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the classes matching a query.
    Count(CountArgs),
    /// List one representative per matching class.
    Enumerate(EnumerateArgs),
    /// Regenerate a reference table and optionally diff it against the stored copy.
    Tables(TablesArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct Filters {
    /// Number of points on the circle.
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    pub alphabet: u8,
    /// Minimum run of zeros between consecutive nonzero symbols.
    #[arg(long, default_value_t = 0)]
    pub gap: usize,
    /// Exact number of nonzero symbols.
    #[arg(long)]
    pub k: Option<usize>,
    /// Only rotation-symmetric classes.
    #[arg(long)]
    pub rotsym: bool,
    /// Only classes with a diameter of symmetry.
    #[arg(long)]
    pub diameter: bool,
    /// no-axis, gap-gap-only or connecting-A-B.
    #[arg(long)]
    pub axis: Option<AxisFilter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Formula,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Tsv,
    Json,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[command(flatten)]
    pub filters: Filters,
    /// Defaults to the closed form for binary queries without an axis
    /// filter, the oracle otherwise.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Evaluate the ternary closed forms, which disagree with exhaustive counts.
    #[arg(long)]
    pub allow_approx: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub filters: Filters,
    #[arg(long, value_enum, default_value_t = ListFormat::Tsv)]
    pub format: ListFormat,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// 1: binary, 24 points, isolated ones. 2: ternary, 12 points.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub which: u8,
    /// Diff against the stored table; exit 1 on any difference.
    #[arg(long)]
    pub check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Identities between binomial sums, recurrences and class totals.
    Lemmas,
    /// Every closed form against the oracle.
    Cross,
    /// Ternary closed forms against the oracle.
    Ternary,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    #[arg(long)]
    pub n_max: Option<usize>,
    #[arg(long)]
    pub gap_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
