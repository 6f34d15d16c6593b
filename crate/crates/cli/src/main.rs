//! `gcsum`: exact chromatic sums, degree-extensions and claim sweeps for
//! small graphs.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "gcsum", version, about = "Exact chromatic sums and degree-extensions of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Also write the resulting graph in DOT format to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub dot: Option<PathBuf>,
}

/// Exactly one of a graph file and a named family.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Edge-list (`n <count>` then `u v` lines) or JSON graph file.
    pub file: Option<PathBuf>,

    /// Named family such as `path:7`, `cycle:6`, `complete:4`,
    /// `complete_bipartite:3,3`.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the chromatic number.
    Chi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Exact minimum and maximum color sums over colorings with χ colors.
    Sums {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Sums over every complete extension, with the per-extension table.
        #[arg(long)]
        extensions: bool,
    },
    /// Degree-extensions of a graph.
    Extend {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: ExtendMode,
        /// With `--incomplete`, hold out a minimum-degree vertex instead.
        #[arg(long, requires = "incomplete")]
        min_pivot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Extensions of bipartite graphs built from cross non-adjacencies.
    Bipartite {
        #[command(flatten)]
        input: Input,
        /// One side of the bipartition, e.g. `0,2,4`.
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<usize>,
        #[command(flatten)]
        mode: BipartiteMode,
        #[arg(long)]
        json: bool,
    },
    /// Build a composition of copies of a base graph from a JSON spec.
    Pattern {
        #[arg(long, value_name = "FILE")]
        spec: PathBuf,
        /// Check that the composition keeps the base chromatic number.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Published closed forms next to exact values for a named family.
    Family {
        /// `path`, `cycle`, or a predictor name such as `hall_bipartite`
        /// or `bipartite_ext_even`.
        kind: String,
        /// `n`, or `n m ell` for the bipartite predictors.
        #[arg(required = true, num_args = 1..=3)]
        params: Vec<usize>,
        /// Sums over all complete extensions (paths and cycles).
        #[arg(long)]
        extended: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sweep a claim over a parameter range and print MATCH/MISMATCH rows.
    Verify {
        /// Claim name (see `--list`) or its short code.
        #[arg(required_unless_present = "list")]
        claim: Option<String>,
        /// Parameter range such as `2..10`, `2..=10` or `7`.
        #[arg(long)]
        n: Option<String>,
        /// List the known claims.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ExtendMode {
    /// Every complete extension with isomorphism classes (default).
    #[arg(long)]
    pub all: bool,
    /// One extension from a spanning path of the complement.
    #[arg(long)]
    pub spanning_path: bool,
    /// One extension assembled per part, e.g. `0:1:2:3,4:5:6:7`.
    #[arg(long, value_name = "PARTS")]
    pub partition: Option<String>,
    /// Regularize an almost regular graph.
    #[arg(long)]
    pub partial: bool,
    /// Odd-order extension that holds one vertex out.
    #[arg(long)]
    pub incomplete: bool,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct BipartiteMode {
    /// Construct a complete extension from bi-distinct pairs (default).
    #[arg(long)]
    pub construct: bool,
    /// Extension that keeps the bipartition.
    #[arg(long)]
    pub preserve: bool,
    /// Extension with one pair swap, which breaks bipartiteness.
    #[arg(long)]
    pub swap: bool,
    /// Maximum number of bi-distinct non-adjacent cross pairs.
    #[arg(long)]
    pub ell: bool,
    /// Hall's condition on non-neighbourhoods.
    #[arg(long)]
    pub hall: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
