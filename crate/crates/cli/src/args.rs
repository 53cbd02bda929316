use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permutree::{normalize_decoration, InversionSet, Normalized};

#[derive(Debug, Parser)]
#[command(name = "permutree", version, about = "Permutree rotation lattices, vectors and realizations")]
pub struct Cli {
    /// Refuse to enumerate decorations longer than this.
    #[arg(long, global = true, default_value_t = permutree::lattice::DEFAULT_MAX_N)]
    pub max_n: usize,

    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Progress and timing on standard error (repeat for more).
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All permutrees of a decoration with their cover relations.
    Enumerate {
        #[command(flatten)]
        delta: DeltaArg,
        #[arg(long, value_enum, default_value_t = LatticeFormat::Json)]
        format: LatticeFormat,
    },
    /// Greatest lower bound of two inversion sets.
    Meet(PairArgs),
    /// Least upper bound of two inversion sets.
    Join(PairArgs),
    /// Inversion, cubic and polytope vectors of every node, as CSV.
    Vectors {
        #[command(flatten)]
        delta: DeltaArg,
    },
    /// Permutreehedron and cubical realization.
    Geometry {
        #[arg(long, value_parser = parse_delta, required_unless_present = "from_lattice", conflicts_with = "from_lattice")]
        delta: Option<Normalized>,
        /// Rebuild from a lattice written by `enumerate --format json`.
        #[arg(long)]
        from_lattice: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GeometryFormat::Json)]
        format: GeometryFormat,
    },
    /// The permutree at each corner of the stretched cube.
    Corners {
        #[command(flatten)]
        delta: DeltaArg,
    },
    /// Run the oracle suite; exits 1 if any check fails.
    Verify {
        /// A decoration word, or `all` for every decoration of length `--n`.
        #[arg(long, value_parser = parse_delta_or_all)]
        delta: DeltaChoice,
        #[arg(long, required_if_eq("delta", "all"))]
        n: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct DeltaArg {
    /// Decoration word over n, d, u, b (case-insensitive).
    #[arg(long = "delta", value_parser = parse_delta)]
    pub delta: Normalized,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub delta: DeltaArg,
    /// Pairs `i-j` separated by commas; empty for the empty set.
    #[arg(long, value_parser = parse_pairs)]
    pub left: PairList,
    #[arg(long, value_parser = parse_pairs)]
    pub right: PairList,
}

/// A parsed pair-set literal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairList(pub Vec<(usize, usize)>);

#[derive(Debug, Clone)]
pub enum DeltaChoice {
    All,
    One(Normalized),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LatticeFormat {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GeometryFormat {
    Json,
    Off,
}

pub fn parse_delta(raw: &str) -> Result<Normalized, String> {
    normalize_decoration(raw).map_err(|e| e.to_string())
}

fn parse_delta_or_all(raw: &str) -> Result<DeltaChoice, String> {
    if raw.eq_ignore_ascii_case("all") {
        Ok(DeltaChoice::All)
    } else {
        parse_delta(raw).map(DeltaChoice::One)
    }
}

fn parse_pairs(raw: &str) -> Result<PairList, String> {
    pair_list(raw).map(PairList)
}

/// `pairs := pair ("," pair)*`, `pair := int "-" int`; blank is empty.
pub fn pair_list(raw: &str) -> Result<Vec<(usize, usize)>, String> {
    let raw = raw.trim();
    if raw.is_empty() {
        return Ok(Vec::new());
    }
    raw.split(',')
        .map(|item| {
            let (i, j) = item
                .trim()
                .split_once('-')
                .ok_or_else(|| format!("pair '{item}' is not of the form i-j"))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("'{s}' in pair '{item}' is not a positive integer"))
            };
            Ok((parse(i)?, parse(j)?))
        })
        .collect()
}

impl PairArgs {
    pub fn sets(&self) -> Result<(InversionSet, InversionSet), String> {
        let n = self.delta.delta.decoration.len();
        let build = |flag: &str, pairs: &PairList| {
            InversionSet::from_pairs(n, pairs.0.iter().copied()).map_err(|e| format!("--{flag}: {e}"))
        };
        Ok((build("left", &self.left)?, build("right", &self.right)?))
    }
}
