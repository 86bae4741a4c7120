use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use halfroot::io::{
    bigraph_to_dot, bigraph_to_json, bigraph_to_text, bisplit_root_from_text, bisplit_root_to_json,
    certificate_from_json, certificate_to_json, graph_to_dot, graph_to_json, graph_to_text,
    outcome_to_json, parse_bigraph, parse_graph, to_pretty,
};
use halfroot::oracle::{self, EnumerationSpec};
use halfroot::{
    build_root_from_cover, extract_cover_from_root, half_square, hs_balanced_bisplit, recognize,
    reduce_ecc, solve_ecc, verify_root, BipartiteGraph, ClassTag, CliqueCover, EccInstance, Graph,
    RecognitionOutcome, Side,
};

#[derive(Parser)]
#[command(
    name = "halfroot",
    version,
    about = "Half-square recognition with certificates"
)]
struct Cli {
    /// Output format for graphs
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
    /// Write the main output here instead of stdout
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    X,
    Y,
}

#[derive(Subcommand)]
enum Command {
    /// Decide membership and print a certificate or an obstruction
    Recognize {
        #[arg(long)]
        class: ClassTag,
        #[arg(short, long)]
        input: PathBuf,
        /// Also write the certificate JSON to this file
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Accept forests for the tree class
        #[arg(long)]
        forest: bool,
    },
    /// Print the half-square of a bipartite graph on one side
    HalfSquare {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "x")]
        side: SideArg,
    },
    /// Print only the root graph of a successful recognition
    BuildRoot {
        #[arg(long)]
        class: ClassTag,
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        forest: bool,
    },
    /// Check a certificate against a graph
    VerifyRoot {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(long)]
        cert: PathBuf,
    },
    /// Edge clique cover tools
    Ecc {
        #[command(subcommand)]
        command: EccCommand,
    },
    /// Brute-force ground truth
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Subcommand)]
enum EccCommand {
    /// Find a cover with at most k cliques
    Solve {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Print the gadget graph with k added universal vertices
    Reduce {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
    },
    /// Build the balanced bisplit root of the gadget from a cover
    BuildRoot {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        cover: PathBuf,
    },
    /// Read a cover of the original graph off a gadget root
    Extract {
        #[arg(short, long)]
        input: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        root: PathBuf,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Class-level ground truth plus an exhaustive root search
    Check {
        #[arg(long)]
        class: ClassTag,
        #[arg(short, long)]
        input: PathBuf,
        /// Largest root side searched; defaults to the vertex count
        #[arg(long)]
        wmax: Option<usize>,
        #[arg(long)]
        forest: bool,
        /// Search every multiset of cliques instead of antichains only
        #[arg(long)]
        unpruned: bool,
    },
    /// Compare the recognizer with the oracle on all graphs of one order
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: ClassTag,
        #[arg(long)]
        forest: bool,
    },
}

/// A failure reported as `token: message` on one stderr line.
struct Failure {
    token: &'static str,
    message: String,
}

impl Failure {
    fn new(token: &'static str, message: impl Display) -> Self {
        Failure {
            token,
            message: message.to_string().replace('\n', " "),
        }
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::new("io_error", format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new("io_error", format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::new("parse_error", e))
}

fn load_bigraph(path: &Path) -> Result<BipartiteGraph, Failure> {
    parse_bigraph(&read(path)?).map_err(|e| Failure::new("parse_error", e))
}

fn oracle_failure(e: halfroot::OracleError) -> Failure {
    let token = match e {
        halfroot::OracleError::CapExceeded { .. } => "cap_exceeded",
        halfroot::OracleError::BudgetExceeded { .. } => "budget_exceeded",
        halfroot::OracleError::TooLarge(_) => "too_large",
    };
    Failure::new(token, e)
}

fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => to_pretty(&graph_to_json(g)),
        Format::Text => graph_to_text(g),
        Format::Dot => graph_to_dot(g),
    }
}

fn render_bigraph(b: &BipartiteGraph, format: Format) -> String {
    match format {
        Format::Json => to_pretty(&bigraph_to_json(b)),
        Format::Text => bigraph_to_text(b),
        Format::Dot => bigraph_to_dot(b),
    }
}

fn outcome_for(g: &Graph, class: ClassTag, forest: bool) -> RecognitionOutcome {
    recognize(g, class, forest).unwrap_or_else(|| match hs_balanced_bisplit(g) {
        Some(cert) => RecognitionOutcome::Yes(cert),
        None => RecognitionOutcome::No(halfroot::Obstruction::new(
            halfroot::ObstructionKind::TooFewUniversal,
            g.universal_vertices(),
        )),
    })
}

fn run(cli: &Cli) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Recognize {
            class,
            input,
            cert,
            forest,
        } => {
            let g = load_graph(input)?;
            let out = outcome_for(&g, *class, *forest);
            if let (Some(path), Some(c)) = (cert, out.certificate()) {
                write(path, &to_pretty(&certificate_to_json(c)))?;
            }
            Ok((to_pretty(&outcome_to_json(&out)), out.is_yes()))
        }
        Command::HalfSquare { input, side } => {
            let b = load_bigraph(input)?;
            let side = match side {
                SideArg::X => Side::X,
                SideArg::Y => Side::Y,
            };
            Ok((render_graph(&half_square(&b, side), format), true))
        }
        Command::BuildRoot {
            class,
            input,
            forest,
        } => {
            let g = load_graph(input)?;
            match outcome_for(&g, *class, *forest) {
                RecognitionOutcome::Yes(c) => Ok((render_bigraph(&c.root, format), true)),
                no => Ok((to_pretty(&outcome_to_json(&no)), false)),
            }
        }
        Command::VerifyRoot { input, cert } => {
            let g = load_graph(input)?;
            let c =
                certificate_from_json(&read(cert)?).map_err(|e| Failure::new("parse_error", e))?;
            verify_root(&g, &c).map_err(|e| Failure::new(e.token(), e))?;
            let report = json!({"valid": true, "class": c.class, "witness_kind": c.witness.kind()});
            Ok((to_pretty(&report), true))
        }
        Command::Ecc { command } => run_ecc(command, format),
        Command::Oracle { command } => run_oracle(command, format),
    }
}

fn run_ecc(command: &EccCommand, format: Format) -> Outcome {
    let instance = |input: &Path, k: usize| -> Result<EccInstance, Failure> {
        Ok(EccInstance {
            g: load_graph(input)?,
            k,
        })
    };
    let hardness = |e: halfroot::HardnessError| Failure::new(e.token(), e);
    match command {
        EccCommand::Solve { input, k } => {
            let inst = instance(input, *k)?;
            match solve_ecc(&inst) {
                Some(cover) => Ok((to_pretty(&json!(cover)), true)),
                None => Ok((to_pretty(&json!(null)), false)),
            }
        }
        EccCommand::Reduce { input, k } => {
            let red = reduce_ecc(&instance(input, *k)?).map_err(hardness)?;
            Ok((render_graph(&red.g_prime, format), true))
        }
        EccCommand::BuildRoot { input, k, cover } => {
            let red = reduce_ecc(&instance(input, *k)?).map_err(hardness)?;
            let cover: CliqueCover =
                serde_json::from_str(&read(cover)?).map_err(|e| Failure::new("parse_error", e))?;
            let root = build_root_from_cover(&red, &cover).map_err(hardness)?;
            Ok((to_pretty(&bisplit_root_to_json(&root)), true))
        }
        EccCommand::Extract { input, k, root } => {
            let red = reduce_ecc(&instance(input, *k)?).map_err(hardness)?;
            let root =
                bisplit_root_from_text(&read(root)?).map_err(|e| Failure::new("parse_error", e))?;
            let cover = extract_cover_from_root(&red, &root).map_err(hardness)?;
            Ok((to_pretty(&json!(cover)), true))
        }
    }
}

fn run_oracle(command: &OracleCommand, format: Format) -> Outcome {
    match command {
        OracleCommand::Check {
            class,
            input,
            wmax,
            forest,
            unpruned,
        } => {
            let g = load_graph(input)?;
            let member = oracle::class_oracle(&g, *class, *forest).map_err(oracle_failure)?;
            let w_max = wmax.unwrap_or(g.n());
            let root =
                oracle::brute_root_search(&g, *class, w_max, !unpruned).map_err(oracle_failure)?;
            let root_json = root.as_ref().map(|b| match format {
                Format::Json => bigraph_to_json(b),
                Format::Text => json!(bigraph_to_text(b)),
                Format::Dot => json!(bigraph_to_dot(b)),
            });
            let report = json!({
                "class": class,
                "member": member,
                "w_max": w_max,
                "root": root_json,
            });
            Ok((to_pretty(&report), member))
        }
        OracleCommand::Sweep { n, class, forest } => {
            let graphs =
                oracle::enumerate_graphs(&EnumerationSpec::all(*n)).map_err(oracle_failure)?;
            let (mut total, mut yes, mut refused) = (0usize, 0usize, 0usize);
            let mut disagreements = Vec::new();
            let mut invalid = Vec::new();
            for g in graphs {
                total += 1;
                let out = outcome_for(&g, *class, *forest);
                if let Some(c) = out.certificate() {
                    if let Err(e) = verify_root(&g, c) {
                        invalid.push(json!({"edges": g.edges(), "error": e.to_string()}));
                    }
                }
                match oracle::class_oracle(&g, *class, *forest) {
                    Ok(truth) => {
                        yes += usize::from(truth);
                        if truth != out.is_yes() {
                            disagreements.push(json!({
                                "edges": g.edges(),
                                "recognizer": out.is_yes(),
                                "oracle": truth,
                            }));
                        }
                    }
                    Err(_) => refused += 1,
                }
            }
            let clean = disagreements.is_empty() && invalid.is_empty();
            let report = json!({
                "n": n,
                "class": class,
                "graphs": total,
                "yes": yes,
                "refused": refused,
                "disagreements": disagreements,
                "invalid_certificates": invalid,
            });
            Ok((to_pretty(&report), clean))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or_default();
            eprintln!("usage_error: {}", line.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    match run(&cli) {
        Ok((text, positive)) => {
            let written = match &cli.output {
                Some(path) => write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::from(if positive { 0 } else { 1 }),
                Err(f) => {
                    eprintln!("{}: {}", f.token, f.message);
                    ExitCode::from(2)
                }
            }
        }
        Err(f) => {
            eprintln!("{}: {}", f.token, f.message);
            ExitCode::from(2)
        }
    }
}
