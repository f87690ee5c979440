mod commands;
mod fixtures;
mod input;
mod output;

use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use output::Format;

#[derive(Parser)]
#[command(name = "cgraph", version, about = "Colored graphs of colored tensor models")]
pub struct Cli {
    /// Output style for reports.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Fixture directory; relative input paths that do not exist are also
    /// looked up here.
    #[arg(long, global = true, env = "CGRAPH_FIXTURES", default_value = "fixtures")]
    pub fixtures_dir: PathBuf,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct OutArg {
    /// Output file, `-` for standard output.
    #[arg(short, long, default_value = "-")]
    pub output: PathBuf,
}

#[derive(Subcommand)]
pub enum Command {
    /// Check color regularity and bipartiteness.
    Validate { file: PathBuf },
    /// Integer homology of a closed graph.
    Homology { file: PathBuf },
    /// Euler characteristic of a closed graph.
    Euler { file: PathBuf },
    /// List the bubbles of one color set, e.g. `--colors 01`.
    Bubbles {
        file: PathBuf,
        #[arg(long)]
        colors: String,
    },
    /// Jackets with their face counts and genera.
    Jackets { file: PathBuf },
    /// Degree, jackets, faces and amplitude exponent.
    Degree { file: PathBuf },
    /// Whether the degree vanishes.
    Melonic { file: PathBuf },
    /// Boundary graph of an open graph.
    Boundary {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Degree of the boundary graph.
    BoundaryDegree { file: PathBuf },
    /// Genus of a ribbon file or closed 3-colored graph.
    Genus { file: PathBuf },
    /// Number of boundary components of a ribbon file or closed 3-colored graph.
    Bc { file: PathBuf },
    /// Connected sum along two edges of equal color.
    Sum {
        a: PathBuf,
        e: String,
        b: PathBuf,
        f: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Crystallization sum at two vertices of opposite parity.
    CrysSum {
        a: PathBuf,
        p: String,
        b: PathBuf,
        q: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Cut a color-0 edge into two legs.
    Open {
        file: PathBuf,
        edge: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Join two legs, or every `<e>.w`/`<e>.b` pair with `--all`.
    Cap {
        file: PathBuf,
        #[arg(required_unless_present = "all", conflicts_with = "all")]
        l1: Option<String>,
        #[arg(requires = "l1")]
        l2: Option<String>,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Cone over a closed graph.
    Cone {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Test two graphs for isomorphism.
    Iso {
        a: PathBuf,
        b: PathBuf,
        /// Allow one global renaming of colors.
        #[arg(long)]
        up_to_permutation: bool,
    },
    /// Feynman-graph membership in a model.
    Member {
        file: PathBuf,
        #[arg(long)]
        model: String,
    },
    /// Build a family member: `qg 2`, `qg --genus 2`, `qgbc(2,2,3)`,
    /// `ribbon-w`.
    Build {
        family: String,
        params: Vec<usize>,
        #[arg(long)]
        genus: Option<usize>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Vacuum graphs from `k` interaction vertices.
    Enumerate {
        #[arg(long)]
        model: String,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        connected: bool,
        /// Directory receiving one file per graph.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Search for the separator graphs P and M.
    FindSeparators {
        #[arg(long)]
        model: String,
        #[arg(long, default_value_t = 2)]
        max_vertices: usize,
        /// Directory receiving `p.cg` and `m.cg`.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Graphviz rendering.
    ExportDot {
        file: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Full analysis of one graph.
    Report { file: PathBuf },
    /// Check or regenerate the fixture directory from its manifest.
    Fixtures {
        #[arg(value_enum)]
        action: fixtures::Action,
    },
}

/// Failure of a well-formed command; exit status 1.
#[derive(Debug)]
pub struct CliError(pub String);

impl CliError {
    pub fn io(what: impl Display, e: std::io::Error) -> CliError {
        CliError(format!("{what}: {e}"))
    }
}

impl From<colorgraph::Error> for CliError {
    fn from(e: colorgraph::Error) -> CliError {
        CliError(e.to_string())
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
