use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use punctile_cli::{
    construct, describe_report, parse_cell, parse_dims, props, render_document, solve,
    verify_document, CliError, Exit, PieceKind, SolveRequest, Target,
};
use punctile_core::solver::DEFAULT_NODE_BUDGET;
use punctile_core::{Region, TorusShape};

#[derive(Parser)]
#[command(name = "punctile", version, about = "Tilings of Z^d by the punctured interval")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a certified periodic tiling and write it as a document.
    Construct {
        #[arg(long)]
        k: usize,
        /// auto, z3-odd, z4 or z3-mod8.
        #[arg(long, default_value = "auto")]
        target: Target,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a document is an exact cover of its torus.
    Verify { path: PathBuf },
    /// Draw one 2-D slice of a document.
    Render {
        path: PathBuf,
        /// Axis to hold fixed; pair each with --slice.
        #[arg(long = "axis")]
        axes: Vec<usize>,
        #[arg(long = "slice")]
        slices: Vec<usize>,
    },
    /// Search for an exact cover of a small region.
    Solve {
        #[arg(long)]
        k: usize,
        /// Torus extents, e.g. 6x6.
        #[arg(long, conflicts_with = "box_dims", required_unless_present = "box_dims")]
        torus: Option<String>,
        /// Box extents (no wraparound), e.g. 3x8.
        #[arg(long = "box")]
        box_dims: Option<String>,
        #[arg(long, default_value = "tile")]
        pieces: PieceKind,
        /// Cell to leave out, e.g. 1,2. Repeatable.
        #[arg(long = "remove")]
        removed: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Where to write the tiling document when a whole torus is tiled.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the property suites.
    Props {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 15)]
        max_k_3d: usize,
        #[arg(long, default_value_t = 10)]
        max_k_4d: usize,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_out(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Exit, CliError> {
    match cli.command {
        Command::Construct { k, target, out } => {
            let (doc, report) = construct(k, target)?;
            eprint!("{}", describe_report(&doc, &report));
            if !report.is_ok() {
                return Ok(Exit::Failed);
            }
            write_out(out.as_deref(), &doc.write())?;
            Ok(Exit::Ok)
        }
        Command::Verify { path } => {
            let (exit, _, text) = verify_document(&read(&path)?)?;
            print!("{text}");
            Ok(exit)
        }
        Command::Render { path, axes, slices } => {
            if axes.len() != slices.len() {
                return Err(CliError::Usage("every --axis needs a matching --slice".into()));
            }
            let fixed: Vec<(usize, usize)> = axes.into_iter().zip(slices).collect();
            print!("{}", render_document(&read(&path)?, &fixed)?);
            Ok(Exit::Ok)
        }
        Command::Solve { k, torus, box_dims, pieces, removed, budget, out } => {
            let region = match (torus, box_dims) {
                (Some(t), _) => Region::Torus(TorusShape::new(parse_dims(&t).map_err(CliError::Usage)?)?),
                (None, Some(b)) => Region::Box(parse_dims(&b).map_err(CliError::Usage)?),
                (None, None) => unreachable!("clap requires a region"),
            };
            let removed = removed
                .iter()
                .map(|c| parse_cell(c))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::Usage)?;
            let result = solve(&SolveRequest { k, region, pieces, removed, budget })?;
            match (&result.document, out.as_deref()) {
                (Some(doc), Some(path)) => {
                    print!("{}", result.text);
                    write_out(Some(path), &doc.write())?;
                }
                (Some(doc), None) => {
                    eprint!("{}", result.text);
                    print!("{}", doc.write());
                }
                (None, _) => print!("{}", result.text),
            }
            Ok(result.exit)
        }
        Command::Props { seed, max_k_3d, max_k_4d } => {
            let (exit, text) = props(seed, max_k_3d, max_k_4d);
            print!("{text}");
            Ok(exit)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exit = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit()
    });
    ExitCode::from(exit as u8)
}
