use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use degspread_core::constructions::Family;

#[derive(Debug, Parser)]
#[command(name = "degspread", version, about = "Degree spread of graphs: compute, bound, construct, search, verify")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for every random choice (only `verify` draws randomness).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for sharded searches; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Lift the size guards on exhaustive searches.
    #[arg(long, global = true)]
    pub force: bool,
    /// Input graph encoding.
    #[arg(long = "format-in", global = true, value_enum, default_value_t = InputFormat::Auto)]
    pub format_in: InputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// Edge list if the first non-blank character is a digit, else graph6.
    Auto,
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphOut {
    Graph6,
    EdgeList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    Mop,
    Tree,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// sp(G, k) with its window and witness vertices.
    Compute {
        /// Graph file, or - for standard input.
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long, default_value_t = 0)]
        k: usize,
    },
    /// Every applicable bound on sp(G, k), checked against the computed value.
    Bounds {
        #[arg(default_value = "-")]
        input: String,
        #[arg(short, long, default_value_t = 0)]
        k: usize,
    },
    /// Generate a member of an extremal family.
    Construct {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(short, long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Encoding of the generated graph.
        #[arg(long, value_enum, default_value_t = GraphOut::Graph6)]
        out: GraphOut,
    },
    /// Exact minimum of sp(G, k) over a class, one row per order.
    Search {
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Order or inclusive range, e.g. 8, 6..13 or 6..=13.
        #[arg(long = "n", value_parser = parse_range)]
        range: RangeInclusive<usize>,
        #[arg(short, long, default_value_t = 0)]
        k: usize,
        /// Add minimum/n and the k = 2 bracket columns (maximal outerplanar, k = 2 only).
        #[arg(long)]
        trend: bool,
    },
    /// Fuzz the general bounds on seeded random graphs.
    Verify {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long = "n-max", default_value_t = 40)]
        n_max: usize,
        #[arg(long = "k-max", default_value_t = 5)]
        k_max: usize,
        /// Harness self-test: shift one check's threshold, as CHECK=SHIFT with
        /// CHECK one of baseline, gap, refined, rep-upper, complement.
        #[arg(long, hide = true)]
        tamper: Option<String>,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
        format!("unknown family {s:?}; expected one of {}", names.join(", "))
    })
}

pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid order {t:?}"));
    let range = if let Some((a, b)) = s.split_once("..=") {
        num(a)?..=num(b)?
    } else if let Some((a, b)) = s.split_once("..") {
        num(a)?..=num(b)?
    } else {
        let n = num(s)?;
        n..=n
    };
    if range.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}
