use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::json;
use thickness_core::bounds::{multipartite_arboricity, theta4_lower_bound};
use thickness_core::bowtie::bowtie_product;
use thickness_core::decomposer::{decompose_even_multipartite, theta4_formula, Decomposition, DecompositionJson};
use thickness_core::graph::{complete_multipartite, Girth, Graph, GraphJson, MultipartiteSpec};
use thickness_core::json::to_canonical_string;
use thickness_core::oracle::{exact_girth_thickness, OracleOutcome};
use thickness_core::verify::audit_decomposition;

#[derive(Parser)]
#[command(name = "thickness", version, about = "Planar girth-4 decompositions of even complete multipartite graphs")]
struct Cli {
    /// Print errors to stderr as JSON objects
    #[arg(long, global = true)]
    json_errors: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lower bound, closed-form value and arboricity for a spec such as 2,2,2
    Bound { spec: String },
    /// Build the minimum decomposition of K_{spec}
    Decompose {
        spec: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Audit a decomposition file; exits 1 if any check fails
    Verify { file: PathBuf },
    /// Exact girth-thickness by exhaustive search (spec or graph JSON file)
    Oracle {
        input: String,
        #[arg(long, default_value = "4")]
        girth: String,
        #[arg(long, default_value_t = 4)]
        max: usize,
        /// Include the witness partition
        #[arg(long)]
        witness: bool,
    },
    /// Emit the doubled graph G ⋈ G for a graph JSON file
    Bowtie { graph: PathBuf },
}

/// Completed commands either succeed or report a failed audit.
enum Status {
    Ok,
    AuditFailed,
}

fn parse_spec(text: &str) -> anyhow::Result<MultipartiteSpec> {
    text.parse().with_context(|| format!("invalid spec {text:?}"))
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let json: GraphJson = serde_json::from_str(&text).with_context(|| format!("{} is not graph JSON", path.display()))?;
    Ok(Graph::try_from(json)?)
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> anyhow::Result<Status> {
    match command {
        Command::Bound { spec } => {
            let spec = parse_spec(&spec)?;
            let (target, _) = complete_multipartite(&spec);
            let formula = theta4_formula(&spec).ok();
            let arboricity = multipartite_arboricity(&spec).ok();
            let value = json!({
                "arboricity": arboricity,
                "formula": formula,
                "lower_bound": theta4_lower_bound(&target),
            });
            print!("{}", to_canonical_string(&value)?);
        }
        Command::Decompose { spec, out, dot } => {
            let spec = parse_spec(&spec)?;
            let d = decompose_even_multipartite(&spec)?;
            if let Some(path) = dot {
                fs::write(&path, d.to_dot()).with_context(|| format!("cannot write {}", path.display()))?;
            }
            emit(&to_canonical_string(&d.to_json())?, out.as_deref())?;
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file).with_context(|| format!("cannot read {}", file.display()))?;
            let json: DecompositionJson =
                serde_json::from_str(&text).with_context(|| format!("{} is not a decomposition", file.display()))?;
            let d = Decomposition::from_json(json)?;
            let report = audit_decomposition(&d);
            print!("{}", to_canonical_string(&report)?);
            if !report.passed {
                return Ok(Status::AuditFailed);
            }
        }
        Command::Oracle {
            input,
            girth,
            max,
            witness,
        } => {
            let girth: Girth = girth.parse()?;
            let path = Path::new(&input);
            let (graph, spec) = if path.is_file() || input.ends_with(".json") {
                (read_graph(path)?, None)
            } else {
                let spec = parse_spec(&input)?;
                (complete_multipartite(&spec).0, Some(spec))
            };
            let outcome = exact_girth_thickness(&graph, girth, max)?;
            let mut value = json!({
                "girth": girth.to_string(),
                "max": max,
                "spec": spec.map(|s| s.parts().to_vec()),
            });
            match outcome {
                OracleOutcome::Found { count, witness: classes } => {
                    value["count"] = json!(count);
                    if witness {
                        value["classes"] = classes
                            .iter()
                            .map(|c| json!({ "edges": c.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>() }))
                            .collect();
                    }
                }
                OracleOutcome::Exceeded => {
                    value["count"] = json!(null);
                    value["exceeded"] = json!(true);
                }
            }
            print!("{}", to_canonical_string(&value)?);
        }
        Command::Bowtie { graph } => {
            let g = read_graph(&graph)?;
            let (doubled, _) = bowtie_product(&g);
            print!("{}", to_canonical_string(&doubled.to_json())?);
        }
    }
    Ok(Status::Ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::AuditFailed) => ExitCode::from(1),
        Err(err) => {
            if cli.json_errors {
                let value = json!({ "error": format!("{err:#}"), "kind": "invalid_input" });
                eprint!("{}", to_canonical_string(&value).unwrap_or_else(|_| format!("{err:#}\n")));
            } else {
                eprintln!("error: {err:#}");
            }
            ExitCode::from(2)
        }
    }
}

