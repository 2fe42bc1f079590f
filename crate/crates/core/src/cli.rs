//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 unparsable or empty
//! input, 4 invalid parameter, 5 oracle enumeration truncated.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bench::{self, BenchConfig, BenchRow};
use crate::error::Error;
use crate::generators::Model;
use crate::graph::{parse_edge_list, to_bipartite, DirectedGraph};
use crate::hubs::control_hubs;
use crate::matching::maximum_matching;
use crate::oracle::{self, DEFAULT_LIMIT};
use crate::output::{DriverOutput, Envelope, HubOutput, OracleOutput, SchemeOutput, TextReport, TOOL_NAME};
use crate::scheme::extract_scheme;

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INPUT: i32 = 3;
    pub const PARAMETER: i32 = 4;
    pub const TRUNCATED: i32 = 5;
}

#[derive(Debug, Parser)]
#[command(name = TOOL_NAME, version, about = "Find the control hubs of a directed network")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file, or `-` for standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Heads, tails and control hubs.
    Hubs(InputArgs),
    /// All possible driver nodes, minimum driver count and one minimum driver set.
    Drivers(InputArgs),
    /// Control paths and cycles of one maximum matching.
    Scheme(InputArgs),
    /// Brute-force hub sets over every maximum matching, checked against `hubs`.
    Oracle {
        #[command(flatten)]
        io: InputArgs,
        /// Give up once more than this many maximum matchings exist.
        #[arg(long, default_value_t = DEFAULT_LIMIT as u64, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Generate a random directed network as an edge list.
    Gen {
        #[arg(long, value_enum, default_value = "er")]
        model: Model,
        /// Number of nodes.
        #[arg(short = 'n', long)]
        nodes: usize,
        /// Number of edges.
        #[arg(short = 'l', long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        allow_self_loops: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Time the hub pipeline over a ladder of graph sizes.
    Bench {
        #[arg(long, value_enum, default_value = "er")]
        model: Model,
        /// Strictly ascending node counts, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Edges per node (l = k * n).
        #[arg(long, default_value_t = 5)]
        edges_per_node: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep the fastest of this many runs per size.
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn io(message: String) -> Self {
        Failure { code: exit::IO, message }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::Parse { .. } | Error::EmptyGraph => exit::INPUT,
            _ => exit::PARAMETER,
        };
        Failure { code, message: err.to_string() }
    }
}

/// Runs one command; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return exit::USAGE;
            }
            let _ = write!(stdout, "{}", e.render());
            return exit::SUCCESS;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "{TOOL_NAME}: {}", failure.message);
            failure.code
        }
    }
}

struct Loaded {
    bytes: Vec<u8>,
    graph: DirectedGraph,
}

fn load(path: &PathBuf, stdin: &mut dyn Read) -> Result<Loaded, Failure> {
    let bytes = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        stdin.read_to_end(&mut buf).map_err(|e| Failure::io(format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?
    };
    let text = std::str::from_utf8(&bytes).map_err(|e| {
        let line = bytes[..e.valid_up_to()].iter().filter(|&&b| b == b'\n').count() + 1;
        Error::Parse { line, message: "input is not valid UTF-8".into() }
    });
    let graph = text.map_err(Failure::from).and_then(|t| parse_edge_list(t).map_err(Failure::from));
    let graph = graph.map_err(|f| Failure { message: format!("{}: {}", path.display(), f.message), ..f })?;
    Ok(Loaded { bytes, graph })
}

fn emit(text: &str, output: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
        }
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::io(format!("cannot write output: {e}"))),
    }
}

fn render<T: Serialize + TextReport>(input: &[u8], report: T, format: Format) -> String {
    match format {
        Format::Json => Envelope::new(input, report).to_json(),
        Format::Text => report.to_text(),
    }
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Hubs(io) => {
            let Loaded { bytes, graph } = load(&io.input, stdin)?;
            let report = HubOutput::new(&graph, &control_hubs(&graph)?);
            emit(&render(&bytes, report, io.format), io.output.as_ref(), stdout)?;
        }
        Command::Drivers(io) => {
            let Loaded { bytes, graph } = load(&io.input, stdin)?;
            let report = DriverOutput::new(&graph)?;
            emit(&render(&bytes, report, io.format), io.output.as_ref(), stdout)?;
        }
        Command::Scheme(io) => {
            let Loaded { bytes, graph } = load(&io.input, stdin)?;
            let matching = maximum_matching(&to_bipartite(&graph));
            let scheme = extract_scheme(&graph, &matching)?;
            emit(&render(&bytes, SchemeOutput::new(&graph, &scheme), io.format), io.output.as_ref(), stdout)?;
        }
        Command::Oracle { io, limit } => {
            let Loaded { bytes, graph } = load(&io.input, stdin)?;
            let limit = usize::try_from(limit).unwrap_or(usize::MAX);
            let oracle = oracle::oracle_hubs(&graph, limit)?;
            let fast = control_hubs(&graph)?;
            let report = OracleOutput::new(&graph, &oracle, &fast);
            emit(&render(&bytes, report, io.format), io.output.as_ref(), stdout)?;
            if oracle.truncated {
                return Ok(exit::TRUNCATED);
            }
        }
        Command::Gen { model, nodes, edges, seed, allow_self_loops, output } => {
            let graph = model.generate(nodes, edges, seed, allow_self_loops)?;
            emit(&graph.to_edge_list(), output.as_ref(), stdout)?;
        }
        Command::Bench { model, sizes, edges_per_node, seed, repeats, format, output } => {
            let config = BenchConfig { model, edges_per_node, seed, repeats };
            let rows = bench::run(&config, &sizes)?;
            let report = BenchOutput {
                tool: TOOL_NAME,
                version: env!("CARGO_PKG_VERSION"),
                model: model.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default(),
                edges_per_node,
                seed,
                log_log_slope: bench::log_log_slope(&rows),
                rows,
            };
            let text = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("bench report serializes");
                    s.push('\n');
                    s
                }
                Format::Text => report.to_text(),
            };
            emit(&text, output.as_ref(), stdout)?;
        }
    }
    Ok(exit::SUCCESS)
}

#[derive(Debug, Serialize)]
struct BenchOutput {
    tool: &'static str,
    version: &'static str,
    model: String,
    edges_per_node: usize,
    seed: u64,
    rows: Vec<BenchRow>,
    log_log_slope: Option<f64>,
}

impl BenchOutput {
    fn to_text(&self) -> String {
        let mut s = format!("{:>10} {:>11} {:>12}\n", "n", "l", "seconds");
        for row in &self.rows {
            s.push_str(&format!("{:>10} {:>11} {:>12.6}\n", row.n, row.l, row.seconds));
        }
        if let Some(slope) = self.log_log_slope {
            s.push_str(&format!("log-log slope: {slope:.3}\n"));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], input: &str) -> (i32, String, String) {
        let mut stdin = input.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once(TOOL_NAME).chain(args.iter().copied()), &mut stdin, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hubs_from_stdin() {
        let (code, out, _) = run_with(&["hubs", "-"], "1 2\n2 3\n");
        assert_eq!(code, exit::SUCCESS);
        assert!(out.contains("hubs (1): 2\n"), "{out}");
    }

    #[test]
    fn parse_error_names_the_line() {
        let (code, _, err) = run_with(&["hubs", "-"], "1 2\nx\n");
        assert_eq!(code, exit::INPUT);
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn invalid_utf8_is_an_input_error() {
        let mut stdin: &[u8] = b"a b\n\xff c\n";
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run([TOOL_NAME, "hubs", "-"], &mut stdin, &mut out, &mut err);
        assert_eq!(code, exit::INPUT);
        assert!(String::from_utf8(err).unwrap().contains("line 2"));
    }

    #[test]
    fn empty_input_fails() {
        let (code, _, err) = run_with(&["drivers", "-"], "# nothing\n");
        assert_eq!(code, exit::INPUT);
        assert!(err.contains("no nodes"), "{err}");
    }

    #[test]
    fn usage_errors_and_help() {
        assert_eq!(run_with(&["hubs"], "").0, exit::USAGE);
        assert_eq!(run_with(&["oracle", "-", "--limit", "0"], "a b").0, exit::USAGE);
        assert_eq!(run_with(&["--help"], "").0, exit::SUCCESS);
    }

    #[test]
    fn gen_parameter_error() {
        let (code, _, err) = run_with(&["gen", "-n", "10", "-l", "0"], "");
        assert_eq!(code, exit::PARAMETER);
        assert!(err.contains("edge count"), "{err}");
    }

    #[test]
    fn bench_rejects_descending_sizes() {
        assert_eq!(run_with(&["bench", "--sizes", "100,10"], "").0, exit::PARAMETER);
        let (code, out, _) = run_with(&["bench", "--sizes", "50", "--format", "json"], "");
        assert_eq!(code, exit::SUCCESS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    }
}
