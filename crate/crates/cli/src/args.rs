use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use szeged_core::generators::{CorpusKind, CorpusSpec, Parity, Probability};

#[derive(Debug, Parser)]
#[command(name = "szeged", version, about = "Wiener and Szeged indices of graphs, with cactus-graph bound checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute W, Sz and Sz* of an edge-list file.
    Compute(ComputeArgs),
    /// Check identities and inequalities on built-in, generated or on-disk graphs.
    Verify(VerifyArgs),
    /// Write named or random graphs as edge-list files plus a JSON manifest.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    pub file: PathBuf,
    /// Also run the theorem checks.
    #[arg(long)]
    pub verify: bool,
    #[arg(long)]
    pub json: bool,
    /// Run the O(n²·m) vertex-sum cross-checks even above 200 vertices.
    #[arg(long)]
    pub full_cross_check: bool,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("source").required(true).args(["paper", "family", "gen", "path"])))]
pub struct VerifyArgs {
    /// Rebuild the two reference graphs and check their published index values.
    #[arg(long)]
    pub paper: bool,
    /// Parametric family to sweep.
    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,
    /// Inclusive size range for --family, e.g. 3..30.
    #[arg(long, value_name = "A..B")]
    pub n: Option<RangeArg>,
    /// Generate a seeded corpus of the given kind.
    #[arg(long, value_name = "KIND")]
    pub gen: Option<CorpusKind>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
    /// Edge-list file, or directory of `*.edges` files.
    pub path: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
    /// Worker threads; output is identical for every value.
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long)]
    pub full_cross_check: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycles,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("what").required(true).args(["named", "cactus", "corpus_kind"])))]
pub struct GenArgs {
    #[arg(long, value_name = "fig2|fig3")]
    pub named: Option<szeged_core::generators::NamedGraph>,
    /// One random cactus from --blocks and --seed.
    #[arg(long)]
    pub cactus: bool,
    /// With --cactus: attach cycles only.
    #[arg(long, requires = "cactus")]
    pub cycles_only: bool,
    /// A whole seeded corpus of the given kind.
    #[arg(long = "corpus", value_name = "KIND")]
    pub corpus_kind: Option<CorpusKind>,
    #[command(flatten)]
    pub corpus: CorpusArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CorpusArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cactus block count, `N` or `A..B`.
    #[arg(long, default_value = "0..8")]
    pub blocks: RangeArg,
    /// Admissible cycle lengths.
    #[arg(long, default_value = "3..8")]
    pub cycle_lengths: RangeArg,
    /// Probability of a pendant edge instead of a cycle, `p/q` or decimal.
    #[arg(long, default_value = "1/3")]
    pub edge_prob: Probability,
    #[arg(long, default_value = "any")]
    pub parity: Parity,
    /// Vertex count range for tree / connected corpora.
    #[arg(long, default_value = "1..40")]
    pub vertices: RangeArg,
    /// Extra-edge probability for connected corpora.
    #[arg(long, default_value = "1/5")]
    pub extra_edge_prob: Probability,
}

impl CorpusArgs {
    pub fn spec(&self, kind: CorpusKind) -> CorpusSpec {
        CorpusSpec {
            kind,
            count: self.count,
            seed: self.seed,
            min_blocks: self.blocks.lo,
            max_blocks: self.blocks.hi,
            min_cycle_length: self.cycle_lengths.lo,
            max_cycle_length: self.cycle_lengths.hi,
            edge_block_probability: self.edge_prob,
            parity: self.parity,
            min_vertices: self.vertices.lo,
            max_vertices: self.vertices.hi,
            extra_edge_probability: self.extra_edge_prob,
        }
    }
}

/// Inclusive range written `A..B` (or a single `N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for RangeArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("bad range {s:?}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

impl fmt::Display for RangeArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}
