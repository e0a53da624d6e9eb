use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Exact computations with permutation groups, Burnside rings and
/// finite-index subgroups of the free group on two generators.
///
/// Groups are catalog names (see `groups`) or `DEGREE:[generators]`.
/// Subgroups are catalog subgroup names, `G`, `e`, or generator lists such
/// as `"<(1,2),(3,4)>"`.
#[derive(Debug, Parser)]
#[command(name = "pullbacklab", version)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Catalog file whose entries extend or replace the bundled ones.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    /// Largest group order to enumerate [default: $PULLBACKLAB_MAX_ORDER or 200].
    #[arg(long, global = true)]
    pub order_cap: Option<usize>,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the catalog.
    Groups,
    /// Conjugacy classes of subgroups.
    Lattice { group: String },
    /// The restriction matrix of B(G) to B(H).
    Resmat { group: String, subgroup: String },
    /// The primitive idempotents of the rational Burnside algebra.
    Idempotents { group: String },
    /// The deviation of H in G.
    Deviation { group: String, subgroup: String },
    /// Whether restriction has nullity zero.
    Nullity { group: String, subgroup: String },
    /// Whether restriction is essentially injective.
    Essinj { group: String, subgroup: String },
    /// Whether restriction is essentially surjective.
    Esssurj { group: String, subgroup: String },
    /// Restrict a G-set, e.g. `"2*<(1,2)> + e"` or `mult:1,0,2,0`.
    Pullback { group: String, subgroup: String, gset: String },
    /// Subgroups of the free group on x, y.
    F2 {
        #[command(subcommand)]
        command: F2Command,
    },
    /// Property sweeps over catalog pairs.
    Sweep {
        #[command(subcommand)]
        command: SweepCommand,
    },
    /// Built-in checks of worked examples.
    Verify {
        #[command(subcommand)]
        command: VerifyCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum F2Command {
    /// All block covers of index n.
    Blocks { n: usize },
    /// Every subgroup of index n, bucketed.
    Census {
        n: usize,
        /// Largest index to enumerate [default: $PULLBACKLAB_CENSUS_CAP or 7].
        #[arg(long)]
        cap: Option<usize>,
    },
    /// The closed-form count c(n).
    Cformula { n: usize },
}

#[derive(Debug, Subcommand)]
pub enum SweepCommand {
    /// Deviation conjectures over every catalog pair.
    Conjectures {
        #[arg(long, default_value_t = 48)]
        max_order: usize,
        /// Worker threads [default: available parallelism].
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Replay the worked examples.
    PaperExamples,
}
