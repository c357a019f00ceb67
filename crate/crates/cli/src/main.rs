use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use edds_cli::crosscheck::{self, Options};
use edds_cli::input::{graph6_lines, parse_vertex_list, read_source, InputLine};
use edds_cli::render::{self, DecideTarget, LineError};
use edds_core::generate::{enumerate_up_to, ENUMERATION_MAX_ORDER};
use edds_core::transforms;
use edds_core::{gen_family, to_graph6, Family, Graph, Solver, TaggedGraph, Target, VertexSet};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exhaustive exact double domination checks on graphs and their transforms.
#[derive(Parser)]
#[command(name = "edds", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 line of a named graph family.
    Gen {
        /// One of path, cycle, star, complete, empty.
        #[arg(long)]
        family: Family,
        #[arg(short = 'n', long = "order")]
        n: usize,
    },
    /// Apply a construction to every input graph.
    Transform {
        #[arg(long, value_enum)]
        op: TransformOp,
        /// graph6 input file (default: standard input).
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Write a JSON Lines sidecar mapping output indices to vertex tags.
        #[arg(long)]
        tags: Option<PathBuf>,
    },
    /// Enumerate every EDDS of each input graph.
    Solve {
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Decide EDDS existence on a transform of each input graph.
    Decide {
        /// One of s, s-bar, mu, mu-bar, m, m-bar, path, cycle.
        #[arg(long)]
        target: DecideTarget,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Check whether a vertex set is an EDDS of each input graph.
    Verify {
        /// Comma-separated 0-based vertex indices.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        /// A single graph6 graph given inline instead of --in/standard input.
        #[arg(long, conflicts_with = "input")]
        graph: Option<String>,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Compare every decider against the exhaustive solver.
    Crosscheck {
        /// Sweep all labeled graphs on min-n..=max-n vertices.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Comma-separated targets (default: all six).
        #[arg(long, value_delimiter = ',')]
        targets: Option<Vec<Target>>,
        /// graph6 corpus file to check instead of the exhaustive sweep.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Permit exhaustive sweeps above 6 vertices.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Add per-record elapsed milliseconds.
        #[arg(long)]
        timing: bool,
        /// Include passing records, not only failures.
        #[arg(long)]
        records: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Subdivision,
    Mycielskian,
    Middle,
    Line,
    Complement,
}

impl TransformOp {
    fn apply(self, g: &Graph) -> Result<TaggedGraph, edds_core::GraphError> {
        match self {
            TransformOp::Subdivision => transforms::subdivision(g),
            TransformOp::Mycielskian => transforms::mycielskian(g),
            TransformOp::Middle => transforms::middle(g),
            TransformOp::Line => transforms::line_graph(g),
            TransformOp::Complement => Ok(TaggedGraph::identity(g.complement())),
        }
    }
}

fn solver_from_env() -> Result<Solver> {
    match std::env::var("EDDS_MAX_N") {
        Ok(v) => {
            let n = v
                .trim()
                .parse()
                .with_context(|| format!("EDDS_MAX_N=`{v}` is not a vertex count"))?;
            Ok(Solver::with_max_n(n))
        }
        Err(_) => Ok(Solver::default()),
    }
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Runs `f` on every parsed input line, writing one JSON object per line.
/// Returns whether every line succeeded.
fn each_line<T: Serialize>(
    lines: &[InputLine],
    mut f: impl FnMut(&InputLine, &Graph) -> Result<T, String>,
) -> Result<bool> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut ok = true;
    for l in lines {
        let res = l.graph.as_ref().map_err(|e| e.to_string()).and_then(|g| f(l, g));
        match res {
            Ok(rec) => emit(&mut out, &rec)?,
            Err(error) => {
                ok = false;
                emit(
                    &mut out,
                    &LineError {
                        line: l.line,
                        graph6: l.text.clone(),
                        error,
                    },
                )?;
            }
        }
    }
    out.flush()?;
    Ok(ok)
}

fn status(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen { family, n } => match gen_family(family, n) {
            Ok(g) => {
                println!("{}", to_graph6(&g)?);
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                eprintln!("error: {e}");
                Ok(ExitCode::from(EXIT_USAGE))
            }
        },

        Command::Transform { op, input, tags } => {
            let lines = graph6_lines(&read_source(input.as_deref())?);
            let mut sidecar = match &tags {
                Some(p) => Some(BufWriter::new(
                    File::create(p).with_context(|| format!("creating {}", p.display()))?,
                )),
                None => None,
            };
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let mut ok = true;
            for l in &lines {
                let result = l
                    .graph
                    .as_ref()
                    .map_err(|e| e.to_string())
                    .and_then(|g| op.apply(g).map_err(|e| e.to_string()))
                    .and_then(|t| to_graph6(&t.graph).map(|s| (t, s)).map_err(|e| e.to_string()));
                match result {
                    Ok((t, line)) => {
                        writeln!(out, "{line}")?;
                        if let Some(side) = sidecar.as_mut() {
                            emit(side, &TagSidecar::new(l.line, &t))?;
                        }
                    }
                    Err(e) => {
                        ok = false;
                        eprintln!("line {}: {e}", l.line);
                    }
                }
            }
            out.flush()?;
            if let Some(mut side) = sidecar {
                side.flush()?;
            }
            Ok(status(ok))
        }

        Command::Solve { input } => {
            let solver = solver_from_env()?;
            let lines = graph6_lines(&read_source(input.as_deref())?);
            let ok = each_line(&lines, |l, g| render::solve(&solver, l.line, &l.text, g))?;
            Ok(status(ok))
        }

        Command::Decide { target, input } => {
            let lines = graph6_lines(&read_source(input.as_deref())?);
            let ok = each_line(&lines, |l, g| render::decide(target, l.line, &l.text, g))?;
            Ok(status(ok))
        }

        Command::Verify { set, graph, input } => {
            let set: VertexSet = match parse_vertex_list(&set) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: --set: {e}");
                    return Ok(ExitCode::from(EXIT_USAGE));
                }
            };
            let text = match graph {
                Some(g) => g,
                None => read_source(input.as_deref())?,
            };
            let lines = graph6_lines(&text);
            let mut all_valid = true;
            let ok = each_line(&lines, |l, g| {
                let rec = render::verify(l.line, &l.text, g, set)?;
                all_valid &= rec.valid;
                Ok(rec)
            })?;
            Ok(status(ok && all_valid))
        }

        Command::Crosscheck {
            max_n,
            min_n,
            targets,
            corpus,
            allow_large,
            jobs,
            timing,
            records,
        } => {
            let graphs: Vec<Graph> = match corpus {
                Some(path) => {
                    let lines = graph6_lines(&read_source(Some(&path))?);
                    let mut graphs = Vec::with_capacity(lines.len());
                    for l in lines {
                        match l.graph {
                            Ok(g) => graphs.push(g),
                            Err(e) => bail!("{}:{}: {e}", path.display(), l.line),
                        }
                    }
                    graphs
                }
                None => {
                    if max_n > 6 && !allow_large {
                        eprintln!("error: --max-n above 6 requires --allow-large");
                        return Ok(ExitCode::from(EXIT_USAGE));
                    }
                    if max_n > ENUMERATION_MAX_ORDER {
                        eprintln!("error: exhaustive sweeps stop at {ENUMERATION_MAX_ORDER} vertices");
                        return Ok(ExitCode::from(EXIT_USAGE));
                    }
                    enumerate_up_to(max_n)?
                        .filter(|g| g.order() >= min_n)
                        .collect()
                }
            };
            let opts = Options {
                targets: targets.unwrap_or_else(|| Target::ALL.to_vec()),
                solver: solver_from_env()?,
                jobs,
                timing,
                keep_records: records,
            };
            let report = crosscheck::run(&graphs, &opts)?;
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            out.flush()?;
            Ok(status(report.passed))
        }
    }
}

#[derive(Serialize)]
struct TagSidecar {
    line: usize,
    order: usize,
    tags: Vec<String>,
}

impl TagSidecar {
    fn new(line: usize, t: &TaggedGraph) -> Self {
        TagSidecar {
            line,
            order: t.graph.order(),
            tags: t.tags.iter().map(|t| t.to_string()).collect(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_FAIL)
        }
    }
}
