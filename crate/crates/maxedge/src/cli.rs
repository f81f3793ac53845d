//! The `maxedge` command line.
//!
//! Exit codes: 0 yes or success, 1 no (or an invalid coloring), 2 usage,
//! input or format errors, 3 refusals (oracle edge limit, 4-cycle found by
//! the C4-free kernel, too many colors for the solver).

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use maxedge_core::oracle::DEFAULT_EDGE_LIMIT;
use maxedge_core::{
    gen_random, gen_two_factor, kernelize_c4free, kernelize_dual, kernelize_standard,
    matching_coloring, maximal_matching, pendant_transform, reduce_mcis, sigma_exact,
    verify_coloring, Decision, KernelError, KernelResult, OracleError,
    ValidityProfile, Verdict,
};

use crate::format::{
    parse_coloring, parse_graph_document, parse_lifting, parse_mcis, render_coloring,
    render_graph, render_graph_document, render_lifting, GraphDocument,
};
use crate::parallel::solve_parallel;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_REFUSED: i32 = 3;

/// Environment variable overriding the oracle's edge limit.
pub const EDGE_LIMIT_VAR: &str = "MEC_EDGE_LIMIT";

#[derive(Debug, Parser)]
#[command(name = "maxedge", version, about = "Maximum edge 2-coloring toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a 2-valid coloring with k colors exists
    Solve {
        #[arg(long)]
        k: usize,
        /// Apply the standard kernel first and lift the witness back
        #[arg(long)]
        kernelize: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        out: OutArg,
        /// Graph file, or `-` for stdin
        graph: String,
    },
    /// Compute the maximum number of colors exhaustively
    Sigma {
        /// Uniform capacity; defaults to the file's `f` lines, else 2
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        edge_limit: Option<usize>,
        #[command(flatten)]
        out: OutArg,
        graph: String,
    },
    /// Reduce an instance and write a lifting sidecar
    Kernel {
        #[arg(long, value_enum)]
        rule: Rule,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutArg,
        /// Sidecar path; defaults to `<out>.lift` when `--out` is given
        #[arg(long)]
        lifting: Option<PathBuf>,
        graph: String,
    },
    /// Check a coloring against a graph
    Verify {
        #[arg(long)]
        q: Option<usize>,
        graph: String,
        coloring: String,
    },
    /// Emit the matching coloring, a lower bound on the maximum
    Approx {
        #[command(flatten)]
        out: OutArg,
        graph: String,
    },
    /// Carry a coloring of a reduced graph back to the original
    Lift {
        #[arg(long)]
        original: String,
        #[arg(long)]
        reduced: String,
        #[arg(long)]
        lifting: String,
        #[command(flatten)]
        out: OutArg,
        coloring: String,
    },
    /// Generate instances
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Each pair becomes an edge with probability p
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random disjoint union of cycles on n vertices
    TwoFactor {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Capacity-annotated instance from a multicolored independent set file
    Mcis {
        /// Attach pendants and emit a plain instance instead
        #[arg(long)]
        pendant: bool,
        mcis: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rule {
    Standard,
    Dual,
    C4free,
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Write the result file here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Failure carried to the exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.to_string(),
    }
}

fn refused(msg: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_REFUSED,
        msg: msg.to_string(),
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))
        }
    }

    fn line(&mut self, s: &str) -> Result<(), Failure> {
        writeln!(self.stdout, "{s}").map_err(|e| usage(format!("stdout: {e}")))
    }

    /// Writes `body` to `out`, or to stdout after the status line.
    fn emit(&mut self, out: &OutArg, body: &str) -> Result<(), Failure> {
        match &out.out {
            Some(p) => fs::write(p, body).map_err(|e| usage(format!("{}: {e}", p.display()))),
            None => self
                .stdout
                .write_all(body.as_bytes())
                .map_err(|e| usage(format!("stdout: {e}"))),
        }
    }

    fn graph(&mut self, path: &str) -> Result<GraphDocument, Failure> {
        let text = self.read(path)?;
        parse_graph_document(&text).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn edge_limit(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(l) = flag {
        return Ok(l);
    }
    match std::env::var(EDGE_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{EDGE_LIMIT_VAR} must be a number, got `{v}`"))),
        Err(_) => Ok(DEFAULT_EDGE_LIMIT),
    }
}

fn profile(doc: &GraphDocument, q: Option<usize>) -> Result<ValidityProfile, Failure> {
    match (q, &doc.f) {
        (Some(q), _) => ValidityProfile::uniform(q).map_err(usage),
        (None, Some(f)) => ValidityProfile::per_vertex(f.clone()).map_err(usage),
        (None, None) => Ok(ValidityProfile::TWO),
    }
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::Profile(_) => usage(e),
        _ => refused(e),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, Failure> {
    match command {
        Command::Solve {
            k,
            kernelize,
            threads,
            out,
            graph,
        } => solve(io, &graph, k, kernelize, threads, &out),
        Command::Sigma {
            q,
            edge_limit: flag,
            out,
            graph,
        } => {
            let doc = io.graph(&graph)?;
            let profile = profile(&doc, q)?;
            let r = sigma_exact(&doc.graph, &profile, edge_limit(flag)?).map_err(oracle_failure)?;
            io.line(&format!("sigma={}", r.sigma))?;
            io.emit(&out, &render_coloring(&doc.graph, &r.witness))?;
            Ok(EXIT_YES)
        }
        Command::Kernel {
            rule,
            k,
            out,
            lifting,
            graph,
        } => kernel(io, &graph, rule, k, &out, lifting),
        Command::Verify { q, graph, coloring } => {
            let doc = io.graph(&graph)?;
            let text = io.read(&coloring)?;
            let c = parse_coloring(&text, &doc.graph).map_err(|e| usage(format!("{coloring}: {e}")))?;
            let report = verify_coloring(&doc.graph, &c, &profile(&doc, q)?).map_err(usage)?;
            if report.valid {
                io.line(&format!("VALID colors={}", report.colors_used))?;
                Ok(EXIT_YES)
            } else {
                io.line("INVALID")?;
                let list: Vec<String> = report.violations.iter().map(|v| (v + 1).to_string()).collect();
                io.line(&format!("violations: {}", list.join(" ")))?;
                Ok(EXIT_NO)
            }
        }
        Command::Approx { out, graph } => {
            let doc = io.graph(&graph)?;
            let m = maximal_matching(&doc.graph);
            let c = matching_coloring(&doc.graph, &m);
            io.line(&format!("LOWER-BOUND colors={} matching={}", c.num_colors(), m.len()))?;
            io.emit(&out, &render_coloring(&doc.graph, &c))?;
            Ok(EXIT_YES)
        }
        Command::Lift {
            original,
            reduced,
            lifting,
            out,
            coloring,
        } => {
            let g = io.graph(&original)?.graph;
            let h = io.graph(&reduced)?.graph;
            let text = io.read(&lifting)?;
            let l = parse_lifting(&text).map_err(|e| usage(format!("{lifting}: {e}")))?;
            let text = io.read(&coloring)?;
            let c = parse_coloring(&text, &h).map_err(|e| usage(format!("{coloring}: {e}")))?;
            let lifted = l.lift(&g, &h, &c).map_err(usage)?;
            io.line(&format!("LIFTED colors={}", lifted.num_colors()))?;
            io.emit(&out, &render_coloring(&g, &lifted))?;
            Ok(EXIT_YES)
        }
        Command::Gen { kind } => {
            let text = match kind {
                GenKind::Random { n, p, seed } => render_graph(&gen_random(n, p, seed).map_err(usage)?),
                GenKind::TwoFactor { n, seed } => render_graph(&gen_two_factor(n, seed).map_err(usage)?),
                GenKind::Mcis { pendant, mcis } => {
                    let text = io.read(&mcis)?;
                    let inst = parse_mcis(&text).map_err(|e| usage(format!("{mcis}: {e}")))?;
                    let annotated = reduce_mcis(&inst);
                    let doc = if pendant {
                        let (graph, t) = pendant_transform(&annotated);
                        GraphDocument {
                            graph,
                            f: None,
                            threshold: Some(t),
                        }
                    } else {
                        GraphDocument {
                            graph: annotated.graph,
                            f: Some(annotated.f),
                            threshold: Some(annotated.threshold),
                        }
                    };
                    render_graph_document(&doc)
                }
            };
            io.stdout
                .write_all(text.as_bytes())
                .map_err(|e| usage(format!("stdout: {e}")))?;
            Ok(EXIT_YES)
        }
    }
}

fn solve(
    io: &mut Io<'_>,
    path: &str,
    k: usize,
    kernelize: bool,
    threads: usize,
    out: &OutArg,
) -> Result<i32, Failure> {
    let g = io.graph(path)?.graph;
    let decision = if kernelize {
        let r = kernelize_standard(&g, k);
        match r.verdict {
            Verdict::ForcedNo => Decision::No,
            Verdict::ForcedYes(w) => Decision::Yes(w),
            Verdict::Reduced { ref graph, .. } => {
                match solve_parallel(graph, k, threads).map_err(refused)?.0 {
                    Decision::No => Decision::No,
                    Decision::Yes(w) => Decision::Yes(r.lifting.lift(&g, graph, &w).map_err(usage)?),
                }
            }
        }
    } else {
        solve_parallel(&g, k, threads).map_err(refused)?.0
    };
    match decision {
        Decision::Yes(w) => {
            io.line(&format!("YES k={k}"))?;
            io.emit(out, &render_coloring(&g, &w))?;
            Ok(EXIT_YES)
        }
        Decision::No => {
            io.line("NO")?;
            Ok(EXIT_NO)
        }
    }
}

fn kernel(
    io: &mut Io<'_>,
    path: &str,
    rule: Rule,
    k: usize,
    out: &OutArg,
    lifting: Option<PathBuf>,
) -> Result<i32, Failure> {
    let g = io.graph(path)?.graph;
    let r: KernelResult = match rule {
        Rule::Standard => kernelize_standard(&g, k),
        Rule::Dual => kernelize_dual(&g, k),
        Rule::C4free => kernelize_c4free(&g, k).map_err(|KernelError::HasC4(c)| {
            let ids: Vec<String> = c.iter().map(|v| (v + 1).to_string()).collect();
            refused(format!("graph contains the 4-cycle {}", ids.join(" ")))
        })?,
    };
    match r.verdict {
        Verdict::ForcedNo => {
            io.line("NO")?;
            Ok(EXIT_NO)
        }
        Verdict::ForcedYes(w) => {
            io.line(&format!("YES k={k}"))?;
            io.emit(out, &render_coloring(&g, &w))?;
            Ok(EXIT_YES)
        }
        Verdict::Reduced { graph, k } => {
            io.line(&format!("REDUCED n={} m={} k={}", graph.n(), graph.m(), k))?;
            io.emit(out, &render_graph(&graph))?;
            let sidecar = lifting.or_else(|| {
                out.out.as_ref().map(|p| {
                    let mut s = p.clone().into_os_string();
                    s.push(".lift");
                    PathBuf::from(s)
                })
            });
            if let Some(p) = sidecar {
                fs::write(&p, render_lifting(&r.lifting))
                    .map_err(|e| usage(format!("{}: {e}", p.display())))?;
            }
            Ok(EXIT_YES)
        }
    }
}
