use clap::{Args, Parser, Subcommand, ValueEnum};
use nrr_core::{Identity, Mode};

#[derive(Debug, Parser)]
#[command(name = "nrr", version, about = "Neighborly partitions, signatures and Rogers-Ramanujan checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List a partition family of n with its count.
    Partitions(PartitionsArgs),
    /// Signature of a partition's graph by both routes.
    Signature(SignatureArgs),
    /// Emit the coefficients of a named series.
    Series(SeriesArgs),
    /// Check identities through a truncation order.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct PartitionsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_mode)]
    pub mode: Mode,
    #[arg(long, value_enum, default_value = "all")]
    pub family: Family,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SignatureArgs {
    /// Comma-separated parts in any order, e.g. 1,2,2.
    #[arg(long)]
    pub partition: String,
    #[arg(long, value_parser = parse_mode)]
    pub mode: Mode,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum)]
    pub which: Which,
    #[arg(long, value_parser = parse_mode)]
    pub mode: Mode,
    #[arg(long, default_value_t = 50)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long, value_enum, default_value = "both")]
    pub mode: ModeChoice,
    #[arg(long, default_value_t = 50)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Adds 1 to this coefficient of the left side of every check.
    #[arg(long, hide = true)]
    pub corrupt_coefficient: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Neighborly,
    #[value(name = "T")]
    T,
    #[value(name = "E")]
    E,
    #[value(name = "R")]
    R,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Numerator,
    SignedGf,
    RrSum,
    RrProduct,
    #[value(name = "hp-R")]
    HpR,
    #[value(name = "hilbert-P")]
    HilbertP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Theorem,
    Corollary,
    Rr,
    LemmaEnum,
    LemmaHilb,
    Polarization,
    Proposition,
    All,
}

impl Target {
    pub fn identities(self) -> Vec<Identity> {
        match self {
            Target::Theorem => vec![Identity::Theorem],
            Target::Corollary => vec![Identity::Corollary],
            Target::Rr => vec![Identity::RogersRamanujan],
            Target::LemmaEnum => vec![Identity::LemmaEnumeration],
            Target::LemmaHilb => vec![Identity::LemmaHilbert],
            Target::Polarization => vec![Identity::Polarization],
            Target::Proposition => vec![Identity::Proposition],
            Target::All => Identity::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeChoice {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    Both,
}

impl ModeChoice {
    pub fn modes(self) -> Vec<Mode> {
        match self {
            ModeChoice::One => vec![Mode::One],
            ModeChoice::Two => vec![Mode::Two],
            ModeChoice::Both => Mode::ALL.to_vec(),
        }
    }
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse::<Mode>().map_err(|e| e.to_string())
}
