use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use kdiv_core::coloring::{chi_bound, color_from_certificate, compress_colors, verify_coloring};
use kdiv_core::corpus::{enumerate_graphs, write_graph6_lines};
use kdiv_core::divisibility::{Decider, DEFAULT_DECISION_CAP};
use kdiv_core::scan::{Check, Execution, Limits};
use kdiv_core::{parse_graph6, Corpus, CorpusSource, Graph, PerfectMethod, ScanSpec};

/// Exit status for usage and parse errors.
const USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "kdiv", version, about = "Perfect k-divisibility of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print ω, α and χ.
    Invariants { graph6: String },
    /// Decide whether the graph is perfect.
    Perfect {
        graph6: String,
        #[arg(long, default_value = "hole")]
        method: PerfectMethod,
    },
    /// Decide perfect k-divisibility, optionally writing a certificate.
    Kdiv {
        graph6: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "OUT_JSON")]
        certificate: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DECISION_CAP)]
        cap: usize,
    },
    /// Smallest k for which the graph is perfectly k-divisible.
    Index {
        graph6: String,
        #[arg(long, default_value_t = DEFAULT_DECISION_CAP)]
        cap: usize,
    },
    /// Color the graph along a level-k certificate.
    Color {
        graph6: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_name = "OUT_JSON")]
        out: Option<PathBuf>,
        /// Greedily merge color classes afterwards.
        #[arg(long)]
        compress: bool,
        #[arg(long, default_value_t = DEFAULT_DECISION_CAP)]
        cap: usize,
    },
    /// Scan a corpus for bound violations and conjecture counterexamples.
    #[command(group(ArgGroup::new("source").required(true).args(["n", "file"])))]
    Scan {
        /// bound | conj1-p3 | conj1-p4 | pk2:P | alpha | anticomplete
        #[arg(long)]
        check: String,
        /// Scan every graph with 1..=N vertices.
        #[arg(long)]
        n: Option<usize>,
        /// Scan a newline-separated graph6 file.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        kmax: usize,
        #[arg(long, value_name = "REPORT_JSON")]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_DECISION_CAP)]
        cap: usize,
        /// Process graphs on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Write one graph per isomorphism class on N vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: USAGE,
        message: message.to_string(),
    }
}

fn graph(text: &str) -> Result<Graph, Failure> {
    parse_graph6(text).map_err(|e| usage(format!("bad graph6 `{text}`: {e}")))
}

fn warn_cap(cap: usize) {
    if cap > DEFAULT_DECISION_CAP {
        eprintln!("warning: decision cap raised to {cap}; tables hold 2^n entries per level");
    }
}

fn write_json(path: &PathBuf, value: &impl serde::Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    fs::write(path, text + "\n").map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Invariants { graph6 } => {
            let g = graph(&graph6)?;
            let inv = g.invariants();
            println!("n={} omega={} alpha={} chi={}", g.n(), inv.omega, inv.alpha, inv.chi);
        }
        Command::Perfect { graph6, method } => {
            let g = graph(&graph6)?;
            println!("{}", kdiv_core::is_perfect(&g, method));
        }
        Command::Kdiv {
            graph6,
            k,
            certificate,
            cap,
        } => {
            let g = graph(&graph6)?;
            warn_cap(cap);
            let mut decider = Decider::with_cap(&g, cap).map_err(usage)?;
            let divisible = decider.is_divisible(k).map_err(usage)?;
            println!("{divisible}");
            if let Some(path) = certificate {
                match decider.certificate(k).map_err(usage)? {
                    Some(cert) => write_json(&path, &cert)?,
                    None => eprintln!("no certificate: graph is not perfectly {k}-divisible"),
                }
            }
        }
        Command::Index { graph6, cap } => {
            let g = graph(&graph6)?;
            warn_cap(cap);
            let index = Decider::with_cap(&g, cap).and_then(|mut d| d.index()).map_err(usage)?;
            println!("{index}");
        }
        Command::Color {
            graph6,
            k,
            out,
            compress,
            cap,
        } => {
            let g = graph(&graph6)?;
            warn_cap(cap);
            let mut decider = Decider::with_cap(&g, cap).map_err(usage)?;
            let cert = decider
                .certificate(k)
                .map_err(usage)?
                .ok_or_else(|| usage(format!("graph is not perfectly {k}-divisible")))?;
            let mut coloring = color_from_certificate(&g, &cert).map_err(usage)?;
            if compress {
                coloring = compress_colors(&g, &coloring);
            }
            let bound = chi_bound(g.clique_number() as u64, k as u64).map_err(usage)?;
            if let Err(e) = verify_coloring(&g, &coloring, usize::try_from(bound).unwrap_or(usize::MAX)) {
                eprintln!("coloring violates the bound: {e}");
                return Ok(1);
            }
            println!(
                "palette_size={} bound={} colors={:?}",
                coloring.palette_size, bound, coloring.colors
            );
            if let Some(path) = out {
                write_json(&path, &coloring)?;
            }
        }
        Command::Scan {
            check,
            n,
            file,
            kmax,
            json,
            cap,
            sequential,
        } => {
            let check = Check::parse(&check, kmax).map_err(usage)?;
            warn_cap(cap);
            let source = match (n, file) {
                (Some(n), _) => CorpusSource::UpTo(n),
                (None, Some(path)) => CorpusSource::File(path),
                (None, None) => unreachable!("clap requires a source"),
            };
            let mut spec = ScanSpec::new(check, Corpus::new(source));
            spec.limits = Limits { decision_cap: cap };
            if sequential {
                spec.execution = Execution::Sequential;
            }
            let report = kdiv_core::run_scan(&spec).map_err(usage)?;
            let s = &report.summary;
            println!("check: {}", report.check);
            println!("corpus: {} ({} graphs, {} in scope)", report.corpus, s.corpus_size, s.tested);
            for (n, t) in &s.by_n {
                println!(
                    "  n={n}: pass={} fail={} finding={} skip={}",
                    t.pass, t.fail, t.finding, t.skip
                );
            }
            println!(
                "claims: pass={} fail={} finding={} skip={}",
                s.claims.pass, s.claims.fail, s.claims.finding, s.claims.skip
            );
            for cx in &s.counterexamples {
                println!(
                    "  {:?} {} {} k={:?} lhs={:?} rhs={:?} {}",
                    cx.result.outcome,
                    cx.graph6,
                    cx.result.claim,
                    cx.result.k,
                    cx.result.lhs,
                    cx.result.rhs,
                    cx.result.detail.as_deref().unwrap_or("")
                );
            }
            println!("wall time: {:.1} ms", s.wall_time_ms);
            if let Some(path) = json {
                write_json(&path, &report)?;
            }
            return Ok(report.exit_code() as u8);
        }
        Command::Enumerate { n, out } => {
            let graphs = enumerate_graphs(n).map_err(usage)?;
            let text = write_graph6_lines(&graphs).map_err(usage)?;
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?
                }
                None => print!("{text}"),
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}
