use clap::{Args, Parser, Subcommand, ValueEnum};
use ordkit_core::circular::{default_deformation, LiftConvention, RepKind};
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Debug, Parser)]
#[command(name = "ordkit", version, about = "Exact computations with left and circular orders")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// b3, psl2z, z, z2, sum:K, klein, tararin:N or dyadic:K. Defaults to
    /// b3, or klein for `tararin`.
    #[arg(long, global = true)]
    pub group: Option<GroupSel>,
    /// Order label: dd or c<k> on b3; natural or reciprocal on sum and
    /// dyadic groups; a signature such as +- on Tararin groups.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// Ball radius.
    #[arg(long, global = true)]
    pub radius: Option<usize>,
    /// Seed for sampled checks and shuffled enumerations.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compare two elements under the order.
    Compare { left: String, right: String },
    /// List the ball of the given radius in shortlex order.
    Ball,
    /// Build the dynamical realization of the first N elements.
    Realize(RealizeArgs),
    /// Enumerate partial positive cones on a ball.
    Cones(ConesArgs),
    /// Count the partial cones containing a finite set.
    Isolation(IsolationArgs),
    /// List the orders of a Tararin group.
    Tararin,
    /// Cyclic order of an orbit on the boundary circle.
    Circular(RepArgs),
    /// Check the ping-pong inclusions for the guardian intervals.
    Pingpong(PingpongArgs),
    /// Rotation number of a lifted element on the k-fold cover.
    Rot(RotArgs),
    /// Lifted position and sign of a braid under the induced left order.
    Lift(LiftArgs),
    /// Rebuild the orbit configuration generation by generation.
    Reconstruct(ReconstructArgs),
    /// Draw the orbit on the boundary circle.
    SvgCircle(RepArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RealizeArgs {
    /// Number of enumerated elements.
    #[arg(short = 'n', long, default_value_t = 500)]
    pub count: usize,
    /// Base point, a dyadic such as 0, 3/8 or -5/2^4.
    #[arg(long, default_value = "0")]
    pub x0: String,
    /// Also draw the orbit into this SVG file.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Shuffle the enumeration after the identity, using --seed.
    #[arg(long)]
    pub shuffle: bool,
}

#[derive(Debug, Clone, Args)]
pub struct ConesArgs {
    /// Comma-separated words required to be positive.
    #[arg(long, value_delimiter = ',')]
    pub require: Vec<String>,
    #[arg(long, default_value_t = ordkit_core::orders::DEFAULT_BALL_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Clone, Args)]
pub struct IsolationArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub require: Vec<String>,
    #[arg(long, default_value_t = ordkit_core::orders::DEFAULT_BALL_BUDGET)]
    pub budget: usize,
}

#[derive(Debug, Clone, Args)]
pub struct RepArgs {
    /// modular, deformed or deformed:c,d with rationals such as 5/4,-3/4.
    #[arg(long, default_value = "deformed")]
    pub rep: RepSel,
    /// Ball radius in PSL(2,Z); overrides --radius.
    #[arg(long)]
    pub ball: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct PingpongArgs {
    #[arg(long, default_value = "deformed")]
    pub rep: RepSel,
}

#[derive(Debug, Clone, Args)]
pub struct RotArgs {
    #[arg(long, default_value = "deformed")]
    pub rep: RepSel,
    #[arg(long)]
    pub k: u32,
    /// PSL(2,Z) word.
    #[arg(long, default_value = "al.be")]
    pub element: String,
    /// Deck turns composed with the lift.
    #[arg(long, default_value_t = 0)]
    pub turns: i64,
    /// Largest period searched; defaults to 2k.
    #[arg(long)]
    pub max_period: Option<u32>,
}

#[derive(Debug, Clone, Args)]
pub struct LiftArgs {
    #[arg(long, default_value = "deformed")]
    pub rep: RepSel,
    /// Cover degree.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// B3 word.
    #[arg(long)]
    pub element: String,
    #[arg(long, value_enum, default_value = "normalized")]
    pub convention: ConventionSel,
}

#[derive(Debug, Clone, Args)]
pub struct ReconstructArgs {
    #[arg(long, default_value = "deformed")]
    pub rep: RepSel,
    #[arg(long, default_value_t = 2)]
    pub depth: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionSel {
    Normalized,
    Raw,
}

impl From<ConventionSel> for LiftConvention {
    fn from(c: ConventionSel) -> Self {
        match c {
            ConventionSel::Normalized => LiftConvention::Normalized,
            ConventionSel::Raw => LiftConvention::Raw,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSel {
    B3,
    Psl2z,
    Sum(u32),
    Tararin(usize),
    Dyadic(u32),
}

fn suffix<T: FromStr>(s: &str, prefix: &str) -> Option<T> {
    s.strip_prefix(prefix).and_then(|n| n.parse().ok())
}

impl FromStr for GroupSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let sel = match s {
            "b3" => Some(GroupSel::B3),
            "psl2z" => Some(GroupSel::Psl2z),
            "z" => Some(GroupSel::Sum(1)),
            "z2" => Some(GroupSel::Sum(2)),
            "klein" => Some(GroupSel::Tararin(1)),
            _ => suffix(s, "sum:")
                .filter(|&k| k > 0)
                .map(GroupSel::Sum)
                .or_else(|| suffix(s, "tararin:").filter(|&n| n < 4).map(GroupSel::Tararin))
                .or_else(|| suffix(s, "dyadic:").filter(|&k| k < 31).map(GroupSel::Dyadic)),
        };
        sel.ok_or_else(|| format!("unknown group `{s}`"))
    }
}

/// A representation given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSel(pub RepKind);

fn parse_fraction(s: &str) -> Option<(i64, i64)> {
    match s.split_once('/') {
        Some((n, d)) => Some((n.trim().parse().ok()?, d.trim().parse().ok()?)),
        None => Some((s.trim().parse().ok()?, 1)),
    }
}

impl FromStr for RepSel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "modular" => Ok(RepSel(RepKind::Modular)),
            "deformed" => Ok(RepSel(default_deformation())),
            _ => {
                let bad = || format!("unknown representation `{s}`");
                let params = s.strip_prefix("deformed:").ok_or_else(bad)?;
                let (c, d) = params.split_once(',').ok_or_else(bad)?;
                Ok(RepSel(RepKind::deformed(
                    parse_fraction(c).ok_or_else(bad)?,
                    parse_fraction(d).ok_or_else(bad)?,
                )))
            }
        }
    }
}
