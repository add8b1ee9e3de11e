use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use srg_cli::census::{census, render_table};
use srg_cli::input::{read_graph6_file, split_labels, LabelledGraph, Sidecar};
use srg_cli::report::{decide, Kappa2Json, Report};
use srg_cli::{CliError, Tuning, EXIT_BUDGET, EXIT_INVALID_INPUT};
use srg_core::connectivity::{clique_cut_certificate, kappa2_bruteforce, verify_cut};
use srg_core::constructions::QuadricSign;
use srg_core::geometry::delta_counterexample_test;
use srg_core::{graph6, FamilySpec};

#[derive(Parser)]
#[command(
    name = "kappa2",
    version,
    about = "Restricted vertex connectivity of strongly regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph6 line and a JSON label map for a named graph.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        /// graph6 output; the label map goes to `<out>.labels.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute connectivity, kappa2 and the verdict for one graph.
    Decide {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        tuning: TuningArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the table of strongly regular graphs on at most 30 vertices.
    Census {
        #[arg(long, default_value_t = 30)]
        max_v: usize,
        /// JSON output; the text table always goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        tuning: TuningArgs,
    },
    /// Decide every graph in a graph6 file, one JSON report per line.
    Batch {
        #[arg(long)]
        input: PathBuf,
        /// Number of input lines to skip.
        #[arg(long, default_value_t = 0)]
        skip: usize,
        #[command(flatten)]
        tuning: TuningArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that removing the given vertices leaves no singleton and at least two components.
    VerifyCut {
        #[command(flatten)]
        source: SourceArgs,
        /// Comma-separated vertex labels.
        #[arg(long, allow_hyphen_values = true)]
        cut: String,
    },
    /// Evaluate the line-neighborhood counterexample test on a graph with lines.
    DeltaCheck {
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Exhaustive kappa2 over all vertex subsets (at most 21 vertices).
    Oracle {
        #[command(flatten)]
        source: SourceArgs,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Triangular,
    Lattice,
    Latin,
    Paley,
    Symplectic,
    HyperbolicQuadric,
    EllipticQuadric,
    TwentySevenLines,
    Schlafli,
    Clebsch,
    Shrikhande,
    Chang,
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Option<Family>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Chang graph index, 1 to 3.
    #[arg(long)]
    index: Option<usize>,
    /// File with one row of whitespace-separated symbols per line.
    #[arg(long)]
    latin: Option<PathBuf>,
    #[arg(long)]
    complement: bool,
}

#[derive(Args)]
struct SourceArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// graph6 file; only the first line is read.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Label map written by `construct`.
    #[arg(long, requires = "input")]
    labels: Option<PathBuf>,
}

#[derive(Args)]
struct TuningArgs {
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, default_value_t = 1_000_000_000)]
    node_budget: u64,
}

impl TuningArgs {
    fn tuning(&self) -> Tuning {
        Tuning {
            threads: self.threads.max(1),
            node_budget: self.node_budget,
        }
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("--family {family} needs --{flag}")))
}

fn read_latin(path: &Path) -> Result<Vec<Vec<usize>>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse()
                        .map_err(|_| CliError::Usage(format!("latin square entry {t:?} is not a number")))
                })
                .collect()
        })
        .collect()
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec, CliError> {
        let family = self
            .family
            .ok_or_else(|| CliError::Usage("give --family or --input".into()))?;
        let spec = match family {
            Family::Triangular => FamilySpec::Triangular {
                m: need(self.m, "m", "triangular")?,
            },
            Family::Lattice => FamilySpec::Lattice {
                n: need(self.n, "n", "lattice")?,
            },
            Family::Latin => match &self.latin {
                Some(path) => {
                    let square = read_latin(path)?;
                    FamilySpec::LatinSquare {
                        n: square.len(),
                        square: Some(square),
                    }
                }
                None => FamilySpec::LatinSquare {
                    n: need(self.n, "n", "latin")?,
                    square: None,
                },
            },
            Family::Paley => FamilySpec::Paley {
                q: need(self.q, "q", "paley")?,
            },
            Family::Symplectic => FamilySpec::Symplectic {
                r: need(self.r, "r", "symplectic")?,
                q: need(self.q, "q", "symplectic")?,
            },
            Family::HyperbolicQuadric => FamilySpec::Quadric {
                sign: QuadricSign::Plus,
                r: need(self.r, "r", "hyperbolic-quadric")?,
            },
            Family::EllipticQuadric => FamilySpec::Quadric {
                sign: QuadricSign::Minus,
                r: need(self.r, "r", "elliptic-quadric")?,
            },
            Family::TwentySevenLines => FamilySpec::TwentySevenLines,
            Family::Schlafli => FamilySpec::Schlafli,
            Family::Clebsch => FamilySpec::Clebsch,
            Family::Shrikhande => FamilySpec::Shrikhande,
            Family::Chang => FamilySpec::Chang {
                index: need(self.index, "index", "chang")?,
            },
        };
        Ok(if self.complement { spec.complement() } else { spec })
    }

    fn build(&self) -> Result<LabelledGraph, CliError> {
        Ok(LabelledGraph::from_constructed(self.spec()?.build()?))
    }
}

impl SourceArgs {
    fn load(&self) -> Result<LabelledGraph, CliError> {
        match &self.input {
            Some(path) => read_graph6_file(path, self.labels.as_deref()),
            None => self.family.build(),
        }
    }
}

fn write_text(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::io("<stdout>", e))
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

#[derive(Serialize)]
struct BatchRecord {
    line: usize,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct CutCheck {
    id: String,
    cut: Vec<String>,
    valid: bool,
    error: Option<String>,
    size: usize,
    components: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct DeltaReport {
    id: String,
    s: usize,
    applies: bool,
    predicted_cut_size: usize,
    bound: usize,
    lines: usize,
    lines_valid_at_predicted_size: usize,
    certificate: Option<serde_json::Value>,
}

#[derive(Serialize)]
struct OracleReport {
    id: String,
    kappa2: Kappa2Json,
    optimal_cuts: usize,
    separators: Vec<Vec<String>>,
    subsets_tested: u64,
}

/// Returns the exit code on success.
fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Construct { family, out } => {
            let g = family.build()?;
            let line = graph6::encode_string(&g.graph) + "\n";
            match out {
                Some(path) => {
                    write_text(Some(&path), &line)?;
                    let mut side = path.clone().into_os_string();
                    side.push(".labels.json");
                    write_text(Some(Path::new(&side)), &pretty(&Sidecar::of(&g))?)?;
                }
                None => write_text(None, &line)?,
            }
            Ok(0)
        }
        Command::Decide { source, tuning, out } => {
            let report = decide(&source.load()?, &tuning.tuning())?;
            write_text(out.as_deref(), &pretty(&report)?)?;
            Ok(if report.is_undecided() { EXIT_BUDGET as u8 } else { 0 })
        }
        Command::Census { max_v, out, tuning } => {
            let rows = census(max_v, &tuning.tuning())?;
            write_text(None, &render_table(&rows))?;
            if let Some(path) = out {
                write_text(Some(&path), &pretty(&rows)?)?;
            }
            let undecided = rows
                .iter()
                .any(|r| r.graphs.iter().any(|g| !g.closed && g.verdict == "Undecided"));
            Ok(if undecided { EXIT_BUDGET as u8 } else { 0 })
        }
        Command::Batch {
            input,
            skip,
            tuning,
            out,
        } => {
            let text = std::fs::read_to_string(&input).map_err(|e| CliError::io(&input, e))?;
            let tuning = tuning.tuning();
            let mut lines = String::new();
            let mut undecided = false;
            for (i, line) in text.lines().enumerate().skip(skip) {
                if line.trim().is_empty() {
                    continue;
                }
                let result = LabelledGraph::from_graph6(line).and_then(|g| decide(&g, &tuning));
                let record = match result {
                    Ok(report) => {
                        undecided |= report.is_undecided();
                        BatchRecord {
                            line: i + 1,
                            report: Some(report),
                            error: None,
                        }
                    }
                    Err(e) => BatchRecord {
                        line: i + 1,
                        report: None,
                        error: Some(e.to_string()),
                    },
                };
                lines += &serde_json::to_string(&record)?;
                lines.push('\n');
            }
            write_text(out.as_deref(), &lines)?;
            Ok(if undecided { EXIT_BUDGET as u8 } else { 0 })
        }
        Command::VerifyCut { source, cut } => {
            let g = source.load()?;
            let labels = split_labels(&cut);
            let s = g.set_of(&labels)?;
            let result = verify_cut(&g.graph, &s);
            let components = g
                .graph
                .components(&s.complement())
                .iter()
                .map(|c| g.labels_of(c))
                .collect();
            let check = CutCheck {
                id: g.id.clone(),
                cut: g.labels_of(&s),
                valid: result.is_ok(),
                error: result.as_ref().err().map(|e| e.to_string()),
                size: s.len(),
                components,
            };
            write_text(None, &pretty(&check)?)?;
            Ok(if check.valid { 0 } else { 1 })
        }
        Command::DeltaCheck { source } => {
            let spec = source.family.spec();
            let cg = match (&source.input, spec) {
                (None, Ok(spec)) => spec.build()?,
                _ => return Err(CliError::Usage("delta-check needs --family".into())),
            };
            let t = delta_counterexample_test(&cg)?;
            let n_lines = cg.lines.as_ref().map_or(0, Vec::len);
            let certs: Vec<_> = (0..n_lines)
                .filter_map(|i| clique_cut_certificate(&cg, i).ok())
                .collect();
            let valid = certs.iter().filter(|c| c.size() == t.predicted_cut_size).count();
            let g = LabelledGraph::from_constructed(cg.clone());
            let report = DeltaReport {
                id: g.id.clone(),
                s: t.s,
                applies: t.applies,
                predicted_cut_size: t.predicted_cut_size,
                bound: cg.expected_params.edge_neighborhood_size(),
                lines: n_lines,
                lines_valid_at_predicted_size: valid,
                certificate: certs.first().map(
                    |c| serde_json::json!({ "A": g.labels_of(&c.a), "S": g.labels_of(&c.s), "B": g.labels_of(&c.b) }),
                ),
            };
            write_text(None, &pretty(&report)?)?;
            Ok(0)
        }
        Command::Oracle { source } => {
            let g = source.load()?;
            let r = kappa2_bruteforce(&g.graph)?;
            let cuts = r.optimal_cuts.unwrap_or_default();
            let report = OracleReport {
                id: g.id.clone(),
                kappa2: Kappa2Json {
                    value: r.value.value(),
                    closed: r.closed,
                },
                optimal_cuts: cuts.len(),
                separators: cuts.iter().map(|c| g.labels_of(&c.s)).collect(),
                subsets_tested: r.stats.nodes,
            };
            write_text(None, &pretty(&report)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID_INPUT as u8)
        }
    }
}
