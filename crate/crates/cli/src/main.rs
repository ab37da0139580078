use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gzcone::io::{parse_graph, parse_heights};
use gzcone::{Error, Graph, HeightVectorQ};
use gzcone_cli::{
    cmd_check, cmd_decompose, cmd_describe, cmd_verify, cmd_verify_all, cmd_vertices, exit_code,
    Format, Report, EXIT_INPUT,
};

#[derive(Parser)]
#[command(name = "gzcone", version, about = "Deformation cones of graphical zonotopes")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: FormatArg,

    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Equations, facet inequalities and dimension counts of the cone.
    Describe {
        graph: PathBuf,
        /// Emit every wall-crossing form instead of the facet description.
        #[arg(long)]
        redundant: bool,
    },
    /// Membership of a height vector; exit code 1 when it is outside the cone.
    Check { graph: PathBuf, heights: PathBuf },
    /// Coefficients of a height vector in the clique basis.
    Decompose {
        graph: PathBuf,
        heights: PathBuf,
        /// Translation plus edge segments, for triangle-free graphs.
        #[arg(long)]
        zonotopal: bool,
    },
    /// Vertices of the polytope, one per acyclic orientation.
    Vertices { graph: PathBuf, heights: PathBuf },
    /// Certify the closed-form description against the polyhedral oracle.
    Verify {
        #[arg(required_unless_present = "all_n", conflicts_with = "all_n")]
        graph: Option<PathBuf>,
        /// Run over every labeled graph on this many vertices.
        #[arg(long, value_name = "K")]
        all_n: Option<usize>,
    },
}

fn read(path: &Path) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph, (i32, String)> {
    let text = read(path).map_err(|m| (EXIT_INPUT, m))?;
    parse_graph(&text).map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn load_heights(path: &Path, n: usize) -> Result<HeightVectorQ, (i32, String)> {
    let text = read(path).map_err(|m| (EXIT_INPUT, m))?;
    parse_heights(&text, n).map_err(|e| (EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn lib(r: Result<Report, Error>) -> Result<Report, (i32, String)> {
    r.map_err(|e| (exit_code(&e), e.to_string()))
}

fn run(cli: &Cli) -> Result<Report, (i32, String)> {
    match &cli.command {
        Command::Describe { graph, redundant } => lib(cmd_describe(&load_graph(graph)?, *redundant)),
        Command::Check { graph, heights } => {
            let g = load_graph(graph)?;
            let h = load_heights(heights, g.n())?;
            lib(cmd_check(&g, &h))
        }
        Command::Decompose {
            graph,
            heights,
            zonotopal,
        } => {
            let g = load_graph(graph)?;
            let h = load_heights(heights, g.n())?;
            lib(cmd_decompose(&g, &h, *zonotopal))
        }
        Command::Vertices { graph, heights } => {
            let g = load_graph(graph)?;
            let h = load_heights(heights, g.n())?;
            lib(cmd_vertices(&g, &h))
        }
        Command::Verify { graph, all_n } => match (graph, all_n) {
            (_, Some(k)) => lib(cmd_verify_all(*k)),
            (Some(path), None) => Ok(cmd_verify(&[load_graph(path)?])),
            (None, None) => unreachable!("clap requires one of them"),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Json => Format::Json,
        FormatArg::Text => Format::Text,
    };
    let (code, body) = match run(&cli) {
        Ok(report) => (report.code, report.render(format)),
        Err((code, message)) => {
            eprintln!("gzcone: {message}");
            return ExitCode::from(code as u8);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("gzcone: {}: {e}", path.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{body}"),
    }
    ExitCode::from(code as u8)
}
