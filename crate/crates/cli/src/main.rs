use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use oddcut_cli::commands::{self, Family, FindOptions};
use oddcut_cli::experiments;
use oddcut_cli::RunReport;

#[derive(Parser)]
#[command(name = "oddcut", version, about = "Circuits through prescribed edges, or the odd cut that blocks them")]
struct Cli {
    /// Print the full JSON report.
    #[arg(long, global = true, conflicts_with = "quiet")]
    json: bool,
    /// Print nothing; the exit code carries the verdict.
    #[arg(long, global = true)]
    quiet: bool,
    /// Seed for every random choice (required by random families).
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum odd cut, and whether every k edges lie on a circuit.
    Check {
        graph: PathBuf,
        #[arg(short, long)]
        k: usize,
    },
    /// Circuit through the given edges, or an odd cut certificate.
    Find {
        graph: PathBuf,
        /// Comma-separated edge ids (file order, from 0).
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<usize>,
        /// Re-verify the result before printing it.
        #[arg(long)]
        certify: bool,
        /// On a certificate, also decide this edge set exhaustively.
        #[arg(long)]
        oracle_fallback: bool,
    },
    /// Recheck a result JSON written by `find` or `oracle`.
    Verify {
        graph: PathBuf,
        result: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<usize>,
    },
    /// Exhaustive feasibility of a circuit through the given edges.
    Oracle {
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        edges: Vec<usize>,
    },
    /// Write a named graph family in the edge-list format.
    Generate {
        #[command(subcommand)]
        family: FamilyArg,
        /// Directory for `<name>.txt` and the `<name>.json` sidecar; stdout if absent.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    #[command(subcommand)]
    Experiment(ExperimentArg),
}

#[derive(Subcommand)]
enum FamilyArg {
    Ladder { r: usize },
    DoubleClique { l: usize },
    TwoCyclesBridge { p: usize, q: usize },
    GkWitness { k: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Random {
        n: usize,
        m: usize,
        #[arg(long, default_value_t = 1)]
        threshold: usize,
    },
    Eulerian { n: usize, cycles: usize },
    NineFour { core: usize, extra: usize },
}

impl From<&FamilyArg> for Family {
    fn from(f: &FamilyArg) -> Family {
        match *f {
            FamilyArg::Ladder { r } => Family::Ladder(r),
            FamilyArg::DoubleClique { l } => Family::DoubleClique(l),
            FamilyArg::TwoCyclesBridge { p, q } => Family::TwoCyclesBridge(p, q),
            FamilyArg::GkWitness { k } => Family::GkWitness(k),
            FamilyArg::Cycle { n } => Family::Cycle(n),
            FamilyArg::Complete { n } => Family::Complete(n),
            FamilyArg::Random { n, m, threshold } => Family::Random { n, m, threshold },
            FamilyArg::Eulerian { n, cycles } => Family::Eulerian { n, cycles },
            FamilyArg::NineFour { core, extra } => Family::NineFour { core, extra },
        }
    }
}

#[derive(Subcommand)]
enum ExperimentArg {
    /// Component lower bound for rung sets of ladders.
    Ladder {
        #[arg(long, default_value_t = 4)]
        from: usize,
        #[arg(long, default_value_t = 6)]
        to: usize,
    },
    /// Extendable but infeasible witnesses at edge-connectivity 1, 2, 3.
    GkWitness,
    /// Every 2k-1 edges on a circuit implies every 2k edges on one.
    Corollary {
        #[arg(long, default_value_t = 2)]
        max_k: usize,
        /// Extra seeded random graphs on top of the corpus.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
}

/// Writes to stdout, giving up quietly if the reader went away.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn label_of(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn run(cli: &Cli) -> Result<Option<RunReport>> {
    let report = match &cli.command {
        Command::Check { graph, k } => commands::check(&commands::load_graph(graph)?, &label_of(graph), *k)?,
        Command::Find { graph, edges, certify, oracle_fallback } => {
            let g = commands::load_graph(graph)?;
            let s = commands::edge_set(&g, edges)?;
            let opts = FindOptions { certify: *certify, oracle_fallback: *oracle_fallback };
            commands::find(&g, &label_of(graph), &s, &opts)?
        }
        Command::Verify { graph, result, edges } => {
            let g = commands::load_graph(graph)?;
            let s = commands::edge_set(&g, edges)?;
            let text = std::fs::read_to_string(result).with_context(|| format!("reading {}", result.display()))?;
            let value = serde_json::from_str(&text).with_context(|| format!("parsing {}", result.display()))?;
            commands::verify(&g, &label_of(graph), &s, &value)?
        }
        Command::Oracle { graph, edges } => {
            let g = commands::load_graph(graph)?;
            let s = commands::edge_set(&g, edges)?;
            commands::oracle(&g, &label_of(graph), &s)?
        }
        Command::Generate { family, out } => {
            let inst = commands::generate(&family.into(), cli.seed)?;
            match out {
                None => {
                    if !cli.quiet {
                        emit(&inst.graph.to_text());
                    }
                }
                Some(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let stem = commands::file_stem(&inst.label);
                    let graph_path = dir.join(format!("{stem}.txt"));
                    let side_path = dir.join(format!("{stem}.json"));
                    std::fs::write(&graph_path, inst.graph.to_text())?;
                    std::fs::write(&side_path, commands::sidecar_json(&inst))?;
                    if !cli.quiet {
                        emit(&format!("wrote {} and {}\n", graph_path.display(), side_path.display()));
                    }
                }
            }
            return Ok(None);
        }
        Command::Experiment(e) => {
            let mut r = match e {
                ExperimentArg::Ladder { from, to } => experiments::ladder_experiment(*from, *to)?,
                ExperimentArg::GkWitness => experiments::gk_witness_experiment()?,
                ExperimentArg::Corollary { max_k, random } => {
                    experiments::corollary_experiment(*max_k, *random, cli.seed)?
                }
            };
            r.seed = cli.seed;
            r
        }
    };
    Ok(Some(report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(report)) => {
            if cli.json {
                emit(&format!("{}\n", report.to_json()));
            } else if !cli.quiet {
                emit(&report.lines.iter().map(|l| format!("{l}\n")).collect::<String>());
            }
            ExitCode::from(report.status.exit_code() as u8)
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(1)
        }
    }
}
