use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spcrystal::{Direction, Partition};

#[derive(Debug, Parser)]
#[command(name = "spcrystal", version, about = "Symplectic tableaux, oscillating tableaux and their crystals")]
pub struct Cli {
    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List King or oscillating tableaux.
    #[command(subcommand)]
    Enumerate(Enumerate),
    /// Transport an object along one of the bijections.
    Map(MapArgs),
    /// Crystal operators, graphs and highest weight decompositions.
    #[command(subcommand)]
    Crystal(CrystalCmd),
    /// Characters and their decompositions.
    #[command(subcommand)]
    Char(CharCmd),
    /// Run an invariant battery.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum Enumerate {
    /// King tableaux of a shape.
    King {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        m: usize,
    },
    /// Oscillating tableaux with at most m strips and at most g columns.
    Ssot {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        g: usize,
        /// Inside shape.
        #[arg(long, default_value = "[]")]
        lambda: Partition,
        /// Outside shape; every shape in the m x g box when omitted.
        #[arg(long)]
        nu: Option<Partition>,
        /// Strip sizes, e.g. `[2,1,0]`.
        #[arg(long)]
        weight: Option<List>,
        /// Also print strip sizes and crystal weight.
        #[arg(long)]
        weights: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapKind {
    Psi,
    PsiInv,
    Phi,
    PhiInv,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    pub kind: MapKind,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub g: Option<usize>,
    /// With phi-inv, also print the insertion and deletion tableaux at every step.
    #[arg(long)]
    pub trace: bool,
    /// Read from this file instead of stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Ssot,
    King,
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Dot,
    Adj,
    Tsv,
}

#[derive(Debug, Subcommand)]
pub enum CrystalCmd {
    /// Apply one raising or lowering operator.
    Apply {
        #[arg(long, value_enum, default_value_t = Model::Ssot)]
        model: Model,
        #[arg(long, value_parser = parse_direction)]
        op: Direction,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        g: usize,
        /// Rank; defaults to the number of strips or matrix rows.
        #[arg(long)]
        m: Option<usize>,
        /// Apply the operator this many times.
        #[arg(long, default_value_t = 1)]
        times: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Export the crystal graph.
    Graph {
        #[command(flatten)]
        set: VertexSet,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Highest weights with multiplicities.
    Decompose {
        #[command(flatten)]
        set: VertexSet,
    },
}

#[derive(Debug, Args)]
pub struct VertexSet {
    #[arg(long, value_enum, default_value_t = Model::Ssot)]
    pub model: Model,
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub g: usize,
    /// Restrict to the component of this highest weight.
    #[arg(long)]
    pub mu: Option<Partition>,
    /// Inside shape for skew oscillating tableaux; only indices 1.. act.
    #[arg(long)]
    pub lambda: Option<Partition>,
    /// Outside shape for skew oscillating tableaux.
    #[arg(long)]
    pub nu: Option<Partition>,
    /// Operator indices, e.g. `[0,1]`; all by default.
    #[arg(long)]
    pub indices: Option<List>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PieriRule {
    /// Complete symmetric power.
    H,
    /// Exterior power.
    E,
}

#[derive(Debug, Subcommand)]
pub enum CharCmd {
    /// Irreducible character of highest weight mu.
    Chi {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        m: usize,
        /// Sum over King tableaux instead of the alternant quotient.
        #[arg(long)]
        king: bool,
    },
    /// Schur polynomial restricted to the symplectic torus.
    Schur {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        m: usize,
    },
    /// Decompose chi_lambda * s_mu and compare with the skew tableau count.
    Decompose {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        m: usize,
    },
    /// Compare a Pieri rule against decomposition coefficients.
    Pieri {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = PieriRule::H)]
        rule: PieriRule,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Bijections,
    Crystal,
    Characters,
    Conjecture,
    Rsk,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Tsv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: Suite,
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    #[arg(long, default_value_t = 2)]
    pub g: usize,
    #[arg(long, default_value_t = 4)]
    pub max_size: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
}

/// Comma-separated numbers, optionally bracketed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct List(pub Vec<usize>);

impl FromStr for List {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        inner
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad entry {t:?}")))
            .collect::<Result<_, _>>()
            .map(List)
    }
}

fn parse_direction(s: &str) -> Result<Direction, String> {
    s.parse().map_err(|e: spcrystal::Error| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_accept_brackets() {
        assert_eq!("[2,3,0]".parse::<List>().unwrap().0, vec![2, 3, 0]);
        assert_eq!("1, 2".parse::<List>().unwrap().0, vec![1, 2]);
        assert_eq!("[]".parse::<List>().unwrap().0, Vec::<usize>::new());
        assert!("[a]".parse::<List>().is_err());
    }
}
