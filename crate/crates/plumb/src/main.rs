//! `plumb`: analysis of plumbing graphs from the command line.
//!
//! Math outcomes (including inapplicable hypotheses) are data and exit
//! with status 0; only I/O, parse and usage failures are nonzero.

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use plumbing::format::{emit_graph, parse_graph, parse_move_spec, MoveSpec};
use plumbing::graph::PlumbingGraph;
use plumbing::moves;
use plumbing::presentation::{abelianization, build_presentation, export_text};
use report::TheoremChoice;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "plumb", version, about = "Analyze plumbing graphs of curve configurations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremFlag {
    A,
    B,
    C,
    Auto,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleFlag {
    Off,
    Check,
}

#[derive(Subcommand)]
enum Command {
    /// Print the boundary group presentation of a graph file.
    Present { file: PathBuf },
    /// Decide nontriviality and order of the meridian loops.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        theorem: TheoremFlag,
        #[arg(long, value_enum, default_value = "off")]
        oracle: OracleFlag,
        #[arg(long, default_value_t = 1_000_000)]
        max_cosets: usize,
        /// Human-readable rendering instead of the JSON report.
        #[arg(long)]
        pretty: bool,
    },
    /// Apply a blow-up or blow-down and print the resulting graph file.
    Moves {
        file: PathBuf,
        /// e.g. `blowup-edge 2 3`, `blowup-point 4`, `blowdown 5`
        #[arg(trailing_var_arg = true, required = true)]
        spec: Vec<String>,
    },
    /// Print the abelianization invariant factors and meridian images.
    Abelianize { file: PathBuf },
}

fn load_graph(path: &PathBuf) -> Result<PlumbingGraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run() -> Result<(), String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Present { file } => {
            let g = load_graph(&file)?;
            println!("{}", export_text(&build_presentation(&g)));
        }
        Command::Analyze {
            file,
            theorem,
            oracle,
            max_cosets,
            pretty,
        } => {
            let g = load_graph(&file)?;
            let choice = match theorem {
                TheoremFlag::A => TheoremChoice::A,
                TheoremFlag::B => TheoremChoice::B,
                TheoremFlag::C => TheoremChoice::C,
                TheoremFlag::Auto => TheoremChoice::Auto,
            };
            let check = matches!(oracle, OracleFlag::Check);
            let report = report::analyze_report(&g, &choice, check, max_cosets);
            if pretty {
                print!("{}", report::render_pretty(&report));
            } else {
                let json = serde_json::to_string_pretty(&report)
                    .map_err(|e| format!("serialization failed: {e}"))?;
                println!("{json}");
            }
        }
        Command::Moves { file, spec } => {
            let g = load_graph(&file)?;
            let spec = parse_move_spec(&spec.join(" ")).map_err(|e| e.to_string())?;
            let (out, _) = match spec {
                MoveSpec::BlowUpEdge(a, b) => moves::blow_up_edge(&g, (a, b)),
                MoveSpec::BlowUpPoint(v) => moves::blow_up_point(&g, v),
                MoveSpec::BlowDown(v) => moves::blow_down(&g, v),
            }
            .map_err(|e| e.to_string())?;
            print!("{}", emit_graph(&out));
        }
        Command::Abelianize { file } => {
            let g = load_graph(&file)?;
            let ab = abelianization(&build_presentation(&g));
            let factors: Vec<String> = ab.factors.iter().map(|f| f.to_string()).collect();
            let images: std::collections::BTreeMap<u32, Vec<String>> = ab
                .gamma_images
                .iter()
                .map(|(&v, coords)| (v, coords.iter().map(|c| c.to_string()).collect()))
                .collect();
            let doc = serde_json::json!({
                "invariant_factors": factors,
                "gamma_images": images,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&doc)
                    .map_err(|e| format!("serialization failed: {e}"))?
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}
