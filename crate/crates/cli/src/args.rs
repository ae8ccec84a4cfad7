use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "kgraph", version, about = "Homology and cocycle tools for higher-rank graphs")]
pub struct Cli {
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the factorization axioms of a graph file.
    Validate {
        graph: PathBuf,
        /// Degree bound for the confluence check, e.g. `2,2`.
        #[arg(long)]
        bound: Option<String>,
    },
    /// Counts of vertices, edges, squares and cubes.
    Info { graph: PathBuf },
    /// Cubical homology groups.
    Homology {
        graph: PathBuf,
        #[command(flatten)]
        opts: GroupOpts,
        #[arg(long)]
        reduced: bool,
    },
    /// Cubical cohomology groups.
    Cohomology {
        graph: PathBuf,
        #[command(flatten)]
        opts: GroupOpts,
    },
    /// Homology of the categorical (bar) complex of a finite graph.
    CatHomology {
        graph: PathBuf,
        #[command(flatten)]
        opts: GroupOpts,
        /// Degree beyond which a monochrome path proves the category infinite.
        #[arg(long)]
        probe_bound: String,
        #[arg(long)]
        reduced: bool,
        /// Largest allowed number of tuples in one chain group.
        #[arg(long, default_value_t = 20_000)]
        max_generators: usize,
    },
    /// Check the chain-map identities between the two complexes.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        bound: String,
        /// Also check naturality along the graph morphism in this file.
        #[arg(long)]
        naturality: Option<PathBuf>,
    },
    /// Translate cocycles between cubical and categorical cohomology.
    Translate {
        graph: PathBuf,
        #[arg(long, value_enum)]
        direction: Direction,
        /// Cubical cochain table (cub2cat).
        #[arg(long)]
        cocycle: Option<PathBuf>,
        /// Tuples to evaluate on (cub2cat).
        #[arg(long)]
        tuples: Option<PathBuf>,
        /// Named categorical cochain (cat2cub).
        #[arg(long)]
        evaluator: Option<String>,
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, default_value = "Z")]
        coeff: String,
        #[arg(long, value_enum, default_value_t = Order::Forward)]
        color_order: Order,
    },
    /// Compare cohomology with ℤ/m against the universal coefficient formula.
    Uct {
        graph: PathBuf,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: Option<i64>,
    },
}

#[derive(Debug, Args)]
pub struct GroupOpts {
    /// `Z` or `Z/m`.
    #[arg(long, default_value = "Z")]
    pub coeff: String,
    /// Report only this degree.
    #[arg(long)]
    pub n: Option<i64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    #[value(name = "cub2cat")]
    CubToCat,
    #[value(name = "cat2cub")]
    CatToCub,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Forward,
    Reversed,
}
