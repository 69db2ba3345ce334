//! Command-line entry point for signed-network paradox analytics.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use signed_paradox::generators::{generate, reference_fixtures, GeneratorSpec};
use signed_paradox::graph::{make_view, Sign, ViewMode};
use signed_paradox::measures::node_location_embedding;
use signed_paradox::rewire::{maximize_strength, Objective};
use signed_paradox_cli::analysis::{analyze_directory, analyze_file, AnalysisOptions};
use signed_paradox_cli::error::{CliError, Result};
use signed_paradox_cli::io::{load_edges, write_edges};
use signed_paradox_cli::oracle::run_oracle;
use signed_paradox_cli::report::write_delta_csv;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SignArg {
    Positive,
    Negative,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Positive => Sign::Positive,
            SignArg::Negative => Sign::Negative,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Symmetrized,
    Reciprocated,
    Directed,
}

impl From<ModeArg> for ViewMode {
    fn from(m: ModeArg) -> ViewMode {
        match m {
            ModeArg::Symmetrized => ViewMode::Symmetrized,
            ModeArg::Reciprocated => ViewMode::Reciprocated,
            ModeArg::Directed => ViewMode::Directed,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    Global,
    Local,
}

#[derive(Parser)]
#[command(name = "signed-paradox", version, about = "Signed-network paradox analytics")]
struct Cli {
    /// Seed for anything randomized; the flag beats the environment.
    #[arg(long, global = true, env = "SIGNED_PARADOX_SEED")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one edge list, or every edge list in a directory.
    Analyze {
        /// Edge-list file, or a directory of them (batch mode).
        input: PathBuf,
        /// Output JSON file (single input) or directory (batch).
        #[arg(long)]
        output: Option<PathBuf>,
        /// Node attribute table applied to every input.
        #[arg(long)]
        attributes: Option<PathBuf>,
        /// View modes to analyze.
        #[arg(long, value_enum, value_delimiter = ',',
              default_values_t = [ModeArg::Symmetrized, ModeArg::Reciprocated, ModeArg::Directed])]
        modes: Vec<ModeArg>,
        /// Sign worlds to analyze.
        #[arg(long, value_enum, value_delimiter = ',',
              default_values_t = [SignArg::Negative, SignArg::Positive])]
        signs: Vec<SignArg>,
        /// Keep per-node local delta vectors in the document.
        #[arg(long)]
        per_node: bool,
        /// Also write the flat delta table here.
        #[arg(long)]
        delta_csv: Option<PathBuf>,
        /// Record a wall-clock timestamp (off by default for reproducible
        /// output).
        #[arg(long)]
        timestamp: bool,
    },
    /// Generate a synthetic signed network from a JSON spec.
    Generate {
        /// Path to a generator spec (JSON).
        spec: PathBuf,
        /// Where to write the edge list.
        #[arg(long)]
        output: PathBuf,
    },
    /// Greedily rewire a view toward maximal paradox strength.
    Rewire {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SignArg::Negative)]
        sign: SignArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Symmetrized)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = ObjectiveArg::Global)]
        objective: ObjectiveArg,
        #[arg(long, default_value_t = 1000)]
        budget: usize,
        /// Where to write the rewired edge list.
        #[arg(long)]
        output: PathBuf,
        /// Optional CSV of accepted moves.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Per-node distance embedding (mean/SD of distances over diameter).
    Embed {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = SignArg::Negative)]
        sign: SignArg,
        #[arg(long, value_enum, default_value_t = ModeArg::Symmetrized)]
        mode: ModeArg,
        #[arg(long)]
        output: PathBuf,
    },
    /// Cross-check fast paths against naive reimplementations.
    Oracle {
        /// Optional extra edge list to verify (n <= 60).
        input: Option<PathBuf>,
        /// Number of random graphs in the seeded sweep.
        #[arg(long, default_value_t = 20)]
        random: usize,
        /// Write the full residual table here (JSON).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the built-in fixture graphs, or emit them as edge lists.
    Fixtures {
        /// Directory to write `<name>.csv` edge lists into.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    let seed = cli.seed;
    match cli.command {
        Command::Analyze {
            input,
            output,
            attributes,
            modes,
            signs,
            per_node,
            delta_csv,
            timestamp,
        } => {
            let opts = AnalysisOptions {
                modes: modes.into_iter().map(Into::into).collect(),
                signs: signs.into_iter().map(Into::into).collect(),
                include_per_node: per_node,
                seed,
                with_timestamp: timestamp,
            };
            if input.is_dir() {
                let out_dir = output.unwrap_or_else(|| PathBuf::from("reports"));
                let mut rows =
                    analyze_directory(&input, &out_dir, attributes.as_deref(), &opts)?;
                let csv_path = delta_csv.unwrap_or_else(|| out_dir.join("deltas.csv"));
                write_delta_csv(&csv_path, &mut rows)?;
                println!("wrote {} documents and {}", rows.len(), csv_path.display());
            } else {
                let doc = analyze_file(&input, attributes.as_deref(), &opts)?;
                if let Some(path) = delta_csv {
                    write_delta_csv(&path, &mut doc.delta_rows())?;
                }
                match output {
                    Some(path) => doc.write_json(&path)?,
                    None => println!("{}", serde_json::to_string_pretty(&doc).expect("report")),
                }
            }
            Ok(())
        }
        Command::Generate { spec, output } => {
            let text = std::fs::read_to_string(&spec)?;
            let mut parsed: GeneratorSpec =
                serde_json::from_str(&text).map_err(|e| CliError::BadInput {
                    path: spec.display().to_string(),
                    message: e.to_string(),
                })?;
            if let Some(s) = seed {
                parsed.seed = s;
            }
            let g = generate(&parsed)
                .map_err(|e| CliError::core(spec.display().to_string(), e))?;
            write_edges(&output, &g)?;
            println!(
                "wrote {} ({} positive, {} negative arcs)",
                output.display(),
                g.arc_count(Sign::Positive),
                g.arc_count(Sign::Negative)
            );
            Ok(())
        }
        Command::Rewire { input, sign, mode, objective, budget, output, trace } => {
            let loaded = load_edges(&input)?;
            let v = make_view(&loaded.graph, sign.into(), mode.into(), false)
                .map_err(|e| CliError::core(input.display().to_string(), e))?;
            let objective = match objective {
                ObjectiveArg::Global => Objective::Global,
                ObjectiveArg::Local => Objective::Local,
            };
            let (end, t) = maximize_strength(&v, objective, budget, seed.unwrap_or(0))
                .map_err(|e| CliError::core(input.display().to_string(), e))?;
            write_view_edges(&output, &end, &loaded.graph, sign.into())?;
            if let Some(path) = trace {
                let mut w = csv::Writer::from_path(&path)?;
                w.write_record([
                    "step",
                    "move",
                    "delta_g",
                    "delta_l",
                    "degree_variance",
                    "estrada",
                ])?;
                for (i, s) in t.steps.iter().enumerate() {
                    w.write_record([
                        (i + 1).to_string(),
                        s.description.clone(),
                        s.delta_g.to_string(),
                        s.delta_l.to_string(),
                        s.degree_variance.to_string(),
                        s.estrada.to_string(),
                    ])?;
                }
                w.flush()?;
            }
            println!(
                "accepted {} moves, rejected {} candidates, stopped: {:?}",
                t.accepted, t.rejected, t.stop_reason
            );
            Ok(())
        }
        Command::Embed { input, sign, mode, output } => {
            let loaded = load_edges(&input)?;
            let v = make_view(&loaded.graph, sign.into(), mode.into(), false)
                .map_err(|e| CliError::core(input.display().to_string(), e))?;
            let emb = node_location_embedding(&v);
            let mut w = csv::Writer::from_path(&output)?;
            w.write_record(["node", "component", "mean_distance", "sd_distance"])?;
            for i in 0..v.n() {
                let label = loaded.graph.label(v.original_id(i));
                let fmt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
                w.write_record([
                    label,
                    emb.component[i].to_string(),
                    fmt(emb.mean_distance[i]),
                    fmt(emb.sd_distance[i]),
                ])?;
            }
            w.flush()?;
            Ok(())
        }
        Command::Oracle { input, random, output } => {
            let mut user = Vec::new();
            if let Some(path) = input {
                let loaded = load_edges(&path)?;
                user.push((path.display().to_string(), loaded.graph));
            }
            let report = run_oracle(&user, random, seed.unwrap_or(1))?;
            println!(
                "oracle: {} comparisons, {} above tolerance {}",
                report.rows.len(),
                report.failures,
                report.tolerance
            );
            if let Some(path) = output {
                let mut text =
                    serde_json::to_string_pretty(&report).expect("report serializes");
                text.push('\n');
                std::fs::write(path, text)?;
            }
            if report.failures > 0 {
                for r in report.rows.iter().filter(|r| !r.pass) {
                    eprintln!(
                        "FAIL {} {}: fast {} reference {} residual {}",
                        r.dataset, r.quantity, r.fast, r.reference, r.residual
                    );
                }
                return Err(CliError::OracleFailure { failures: report.failures });
            }
            Ok(())
        }
        Command::Fixtures { output } => {
            let fixtures = reference_fixtures();
            match output {
                Some(dir) => {
                    std::fs::create_dir_all(&dir)?;
                    for f in &fixtures {
                        write_edges(&dir.join(format!("{}.csv", f.name)), &f.graph)?;
                    }
                    println!("wrote {} fixtures to {}", fixtures.len(), dir.display());
                }
                None => {
                    for f in &fixtures {
                        let expected: Vec<String> = f
                            .expected
                            .iter()
                            .map(|(k, v)| format!("{k}={v}"))
                            .collect();
                        println!("{}: {}", f.name, expected.join(", "));
                    }
                }
            }
            Ok(())
        }
    }
}

/// Writes an undirected view back out as an edge list, one row per edge,
/// using the source graph's labels.
fn write_view_edges(
    path: &Path,
    v: &signed_paradox::graph::GraphView,
    source: &signed_paradox::graph::SignedDigraph,
    sign: Sign,
) -> Result<()> {
    let token = match sign {
        Sign::Positive => "+1",
        Sign::Negative => "-1",
    };
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["src", "dst", "sign"])?;
    for (a, b) in v.undirected_edges() {
        w.write_record([
            source.label(v.original_id(a as usize)),
            source.label(v.original_id(b as usize)),
            token.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
