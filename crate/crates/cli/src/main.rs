mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Witnessing partitions, exact counts and graph censuses.
#[derive(Debug, Parser)]
#[command(name = "wpn-lab", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the parallel commands; defaults to all cores.
    #[arg(long, global = true, env = "WPNLAB_THREADS")]
    pub threads: Option<usize>,
    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Witnessing partition number of a graph.
    Wpn {
        /// graph6 string, or a file holding graph6 or adjacency text.
        graph: String,
    },
    /// Searches for a partition certified by one of the cycle theorems.
    Certify {
        /// c6, c8, c10 or c2l:<l> with l > 5.
        #[arg(long)]
        theorem: String,
        graph: String,
    },
    /// Enumerates minimal really canonical witnessing sequences.
    Sequences {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        /// Search-node budget; exceeding it exits with status 3.
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Checks the partition facts about an even cycle.
    VerifyClaims {
        /// Cycle length 2l, at least 6.
        #[arg(long)]
        cycle: usize,
    },
    /// Exact counting functions.
    Count {
        #[arg(long = "fn", value_enum)]
        function: CountFn,
        #[arg(long)]
        n: usize,
    },
    /// Lower bound on the number of C_2l-free graphs.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
    },
    /// Uniform random set partitions.
    SamplePartitions(SampleArgs),
    /// Exhaustive H-free census.
    Census(CensusArgs),
    /// Girth-5 statistics over all graphs on n vertices.
    Girth5 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "labeled")]
        mode: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountFn {
    Bell,
    F1,
    F2,
    F3,
    Cographs,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Report block statistics instead of the partitions.
    #[arg(long)]
    pub stats: bool,
    /// Block size above which elements count as heavy; default floor((ln n)^3).
    #[arg(long)]
    pub threshold: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    /// Forbidden graph in graph6.
    #[arg(long)]
    pub forbid: String,
    /// c6, c8, c10 or c2l:<l>.
    #[arg(long)]
    pub theorem: String,
    #[arg(long, default_value = "labeled")]
    pub mode: String,
    /// Number of shards, a power of two.
    #[arg(long, default_value_t = 1)]
    pub shards: u64,
    /// Manifest file; an existing one is resumed, otherwise it is created.
    #[arg(long)]
    pub resume: Option<std::path::PathBuf>,
    /// Also write per-shard counts as CSV.
    #[arg(long)]
    pub shard_csv: Option<std::path::PathBuf>,
    /// Stop after this many shards (exit status 4); resume later.
    #[arg(long, hide = true)]
    pub stop_after: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("wpn-lab: cannot set up {t} threads: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("wpn-lab: {e}");
            ExitCode::from(e.status())
        }
    }
}
