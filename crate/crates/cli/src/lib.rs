//! Command-line front end for `triplesys`.
//!
//! Exit codes: 0 success, 1 I/O or parse failure, 2 usage or precondition
//! failure, 3 internal contradiction (including a search that beats a proven
//! bound).

pub mod certificate;
pub mod format;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;
use triplesys::search::{exact_copos_ex_with_jobs, local_search_lower_bound, SearchOutcome};
use triplesys::witness::{analyze_half_degree, find_c5_witness, find_c5minus_witness, HalfDegreeOutcome, WitnessError};
use triplesys::{construct_complete_k_partite, find_embedding, theorem_value, PatternKind, Triple, TripleSystem};

pub use certificate::{CertificateError, CertificateJson, Validated};
pub use format::{parse, serialize, ParseError};

#[derive(Debug, Parser)]
#[command(name = "triplesys", version, about = "Positive co-degree toolkit for 3-uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

fn pattern_arg(s: &str) -> Result<PatternKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the complete balanced k-partite host on n vertices.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        output: PathBuf,
    },
    /// Print co-degree statistics of a host.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
    /// Report whether a host avoids a pattern; `--output` receives the embedding certificate if not.
    Free {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = pattern_arg)]
        pattern: PatternKind,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Extract a C5 or C5-minus from a host above the extremal co-degree.
    Witness {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = pattern_arg)]
        pattern: PatternKind,
        #[arg(long)]
        output: PathBuf,
    },
    /// Find a C5 or certify 4 | n for a host with co-degree at least n/2.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: PathBuf,
    },
    /// Exact extremal co-degree for 4 <= n <= 7.
    Exact {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = pattern_arg)]
        pattern: PatternKind,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write the extremal host.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Randomized hill climbing for pattern-free hosts with large co-degree.
    Localsearch {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = pattern_arg)]
        pattern: PatternKind,
        #[arg(long, default_value_t = 20_000)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Contradiction(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } => 1,
            CliError::Usage(_) | CliError::Precondition(_) => 2,
            CliError::Contradiction(_) => 3,
        }
    }
}

impl From<triplesys::Error> for CliError {
    fn from(e: triplesys::Error) -> Self {
        match e {
            triplesys::Error::TheoremFalsified { .. } => CliError::Contradiction(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<WitnessError> for CliError {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::PreconditionViolated(m) => CliError::Precondition(m),
            WitnessError::InternalContradiction(c) => CliError::Contradiction(format!("internal contradiction: {c}")),
        }
    }
}

pub fn read_host(path: &Path) -> Result<TripleSystem, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn stdout_error(source: std::io::Error) -> CliError {
    CliError::Io {
        path: PathBuf::from("<stdout>"),
        source,
    }
}

fn optional(value: Option<usize>) -> String {
    value.map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

fn joined(values: &[usize]) -> String {
    values.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct DecisionJson {
    k: usize,
    found: bool,
    nodes: u64,
}

#[derive(Serialize)]
struct HostJson<'a> {
    n: usize,
    edges: &'a [Triple],
}

/// Search outcome without the wall-clock time, so repeated runs print the
/// same bytes.
#[derive(Serialize)]
struct SearchOutcomeJson<'a> {
    n: usize,
    pattern: &'static str,
    value: usize,
    nodes_explored: u64,
    decisions: Vec<DecisionJson>,
    extremal: HostJson<'a>,
}

impl<'a> From<&'a SearchOutcome> for SearchOutcomeJson<'a> {
    fn from(o: &'a SearchOutcome) -> Self {
        SearchOutcomeJson {
            n: o.n,
            pattern: o.pattern.name(),
            value: o.value,
            nodes_explored: o.nodes_explored,
            decisions: o
                .decisions
                .iter()
                .map(|d| DecisionJson {
                    k: d.k,
                    found: d.found,
                    nodes: d.nodes,
                })
                .collect(),
            extremal: HostJson {
                n: o.extremal.n(),
                edges: o.extremal.edges(),
            },
        }
    }
}

#[derive(Serialize)]
struct LocalSearchJson {
    n: usize,
    pattern: &'static str,
    seed: u64,
    budget: u64,
    min_positive_codegree: Option<usize>,
    theorem_value: Option<usize>,
    accepted_moves: u64,
    edge_count: usize,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("plain data serializes");
    text.push('\n');
    text
}

/// Runs one parsed command, writing results to `out` and progress to `err`.
pub fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Construct { n, k, output } => {
            let (host, _) = construct_complete_k_partite(n, k)?;
            write_file(&output, &serialize(&host))?;
            writeln!(out, "edges {}", host.edge_count()).map_err(stdout_error)?;
            writeln!(out, "min_positive_codegree {}", optional(host.min_positive_codegree())).map_err(stdout_error)?;
        }
        Command::Stats { input } => {
            let host = read_host(&input)?;
            let table = host.codegree_table();
            let report = format!(
                "n {}\nedges {}\nmin_positive_codegree {}\nsupport_pairs {}\nmin_support_codegree {}\nmax_support_codegree {}\n",
                host.n(),
                host.edge_count(),
                optional(table.min_positive_codegree()),
                table.support_pairs().len(),
                optional(table.min_positive_codegree()),
                optional(table.max_positive_codegree()),
            );
            out.write_all(report.as_bytes()).map_err(stdout_error)?;
        }
        Command::Free { input, pattern, output } => {
            let host = read_host(&input)?;
            match find_embedding(&host, pattern) {
                None => writeln!(out, "free {pattern}").map_err(stdout_error)?,
                Some(e) => {
                    writeln!(out, "contains {pattern}\nmap {}", joined(&e.map)).map_err(stdout_error)?;
                    if let Some(path) = output {
                        write_file(&path, &CertificateJson::from_embedding(&e).to_json())?;
                    }
                }
            }
        }
        Command::Witness { input, pattern, output } => {
            let host = read_host(&input)?;
            let e = match pattern {
                PatternKind::C5Minus => find_c5minus_witness(&host)?,
                PatternKind::C5 => find_c5_witness(&host)?,
                other => return Err(CliError::Usage(format!("no witness extractor for {other}; use c5minus or c5"))),
            };
            write_file(&output, &CertificateJson::from_embedding(&e).to_json())?;
            writeln!(out, "kind embedding\npattern {pattern}\nmap {}", joined(&e.map)).map_err(stdout_error)?;
        }
        Command::Analyze { input, output } => {
            let host = read_host(&input)?;
            let n = host.n();
            let above = host.min_positive_codegree().is_some_and(|d| d > n / 2);
            let (cert, facts) = if above {
                (CertificateJson::from_embedding(&find_c5_witness(&host)?), Vec::new())
            } else {
                let analysis = analyze_half_degree(&host)?;
                let facts: Vec<usize> = analysis.facts_exercised().iter().map(|f| f.number() as usize).collect();
                let cert = match &analysis.outcome {
                    HalfDegreeOutcome::C5(e) => CertificateJson::from_embedding(e),
                    HalfDegreeOutcome::Structure(s) => CertificateJson::from_structure(s),
                };
                (cert, facts)
            };
            write_file(&output, &cert.to_json())?;
            let kind = match &cert {
                CertificateJson::Embedding { .. } => "embedding",
                CertificateJson::Structure { .. } => "structure",
            };
            let facts = if facts.is_empty() { "none".to_string() } else { joined(&facts) };
            writeln!(out, "kind {kind}\nfacts_exercised {facts}").map_err(stdout_error)?;
            if let CertificateJson::Structure { conclusion, .. } = &cert {
                writeln!(out, "conclusion {conclusion}").map_err(stdout_error)?;
            }
        }
        Command::Exact { n, pattern, jobs, sidecar } => {
            if jobs == 0 {
                return Err(CliError::Usage("--jobs must be at least 1".into()));
            }
            let outcome = exact_copos_ex_with_jobs(n, pattern, jobs)?;
            for d in &outcome.decisions {
                let _ = writeln!(err, "k {}: {} after {} nodes", d.k, if d.found { "found" } else { "exhausted" }, d.nodes);
            }
            let _ = writeln!(err, "elapsed {:.3}s", outcome.elapsed.as_secs_f64());
            if let Some(path) = sidecar {
                write_file(&path, &serialize(&outcome.extremal))?;
            }
            out.write_all(to_json(&SearchOutcomeJson::from(&outcome)).as_bytes())
                .map_err(stdout_error)?;
        }
        Command::Localsearch {
            n,
            pattern,
            budget,
            seed,
            output,
        } => {
            let result = local_search_lower_bound(n, pattern, budget, seed)?;
            if let Some(path) = output {
                write_file(&path, &serialize(&result.host))?;
            }
            let report = LocalSearchJson {
                n,
                pattern: pattern.name(),
                seed,
                budget,
                min_positive_codegree: result.min_positive_codegree,
                theorem_value: theorem_value(n, pattern).ok(),
                accepted_moves: result.accepted_moves,
                edge_count: result.host.edge_count(),
            };
            out.write_all(to_json(&report).as_bytes()).map_err(stdout_error)?;
        }
    }
    Ok(())
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
