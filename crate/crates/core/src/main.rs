use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use splay_deque::compression::{parse_trace, write_trace};
use splay_deque::pattern::{
    ex_bruteforce, find_pattern, parse_sequence_file, write_sequence_file, ExLimits, SymbolSequence,
};
use splay_deque::transcription::{epochs_csv, transcribe, TranscribeOptions};
use splay_deque::workload::{
    generate, report_csv, run, RunOptions, WorkloadKind, WorkloadTrace, RNG_NAME,
};

#[derive(Parser)]
#[command(name = "splay-deque", version, about = "Splay-tree deque experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a workload trace.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Execute a workload, optionally mirroring it on the compression model.
    Run {
        /// Workload trace file; generated from the flags when absent.
        input: Option<PathBuf>,
        #[command(flatten)]
        gen: GenArgs,
        #[arg(long)]
        mirror: bool,
        /// Exit with status 1 on any correspondence mismatch.
        #[arg(long)]
        strict: bool,
        /// Validate the splay tree after every operation.
        #[arg(long)]
        check_invariants: bool,
        /// Cost CSV destination.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compression trace destination (implies --mirror).
        #[arg(long)]
        trace_out: Option<PathBuf>,
    },
    /// Transcribe a compression trace into S' and S.
    Transcribe {
        input: PathBuf,
        #[arg(long)]
        block_size: Option<usize>,
        #[arg(long)]
        split_bound: Option<usize>,
        /// Exit with status 1 if a transcription property fails.
        #[arg(long)]
        strict: bool,
        /// Sequence file destination: S' on the first line, S on the second.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Per-epoch CSV destination.
        #[arg(long)]
        epochs: Option<PathBuf>,
    },
    /// Test each sequence of a file for a pattern.
    CheckPattern {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        input: PathBuf,
        /// Exit with status 1 if any sequence contains the pattern.
        #[arg(long)]
        strict: bool,
    },
    /// Exhaustive extremal function of a pattern.
    Ex {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 16)]
        cap: usize,
        #[arg(long, default_value_t = 50_000_000)]
        budget: u64,
    },
    /// Cost table over several sizes.
    Report {
        #[arg(long, default_value = "pop-only")]
        kind: String,
        /// Comma-separated initial sizes.
        #[arg(long, value_delimiter = ',', default_value = "4096,65536")]
        sizes: Vec<usize>,
        /// Operations per run; defaults to the size.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        block_size: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value = "random-mix")]
    kind: String,
    #[arg(long, default_value_t = 16)]
    n: usize,
    #[arg(long, default_value_t = 64)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Block size for period-hold workloads.
    #[arg(long)]
    block_size: Option<usize>,
}

/// Usage and input problems exit with 2, property violations with 1.
enum Failure {
    Usage(String),
    Violation(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn kind(name: &str, block: Option<usize>) -> Result<WorkloadKind, Failure> {
    let mut k: WorkloadKind = name.parse()?;
    if let (WorkloadKind::PeriodHold { block: b }, Some(x)) = (&mut k, block) {
        *b = x;
    }
    Ok(k)
}

fn make_trace(g: &GenArgs) -> Result<WorkloadTrace, Failure> {
    Ok(generate(kind(&g.kind, g.block_size)?, g.n, g.m, g.seed)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(p: &Path) -> Result<String, Failure> {
    fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
}

fn pattern(s: &str) -> Result<SymbolSequence, Failure> {
    let p = SymbolSequence::from_letters(s)?;
    if p.is_empty() {
        return Err(Failure::Usage("empty pattern".into()));
    }
    Ok(p)
}

fn execute(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Gen { gen, out } => emit(out.as_deref(), &make_trace(&gen)?.to_text()),
        Command::Run {
            input,
            gen,
            mirror,
            strict,
            check_invariants,
            out,
            trace_out,
        } => {
            let trace = match &input {
                Some(p) => {
                    let t: WorkloadTrace = read(p)?.parse()?;
                    t.validate()?;
                    t
                }
                None => make_trace(&gen)?,
            };
            let outcome = run(
                &trace,
                RunOptions {
                    mirror,
                    record_trace: trace_out.is_some(),
                    check_invariants,
                },
            );
            if let Some(p) = &trace_out {
                emit(Some(p), &write_trace(&outcome.trace))?;
            }
            let csv = report_csv(std::slice::from_ref(&outcome.cost));
            emit(out.as_deref(), &csv)?;
            if let Some(seed) = trace.seed {
                eprintln!("seed {seed} rng {RNG_NAME}");
            }
            eprintln!(
                "ops {} rotations {} phases {} checked {} mismatches {}",
                outcome.cost.m,
                outcome.cost.total_rotations,
                outcome.phases,
                outcome.checked,
                outcome.mismatches.len()
            );
            if let Some(first) = outcome.mismatches.first() {
                eprintln!(
                    "first mismatch: {} {}: {}",
                    first.op.as_str(),
                    first.subject,
                    first.mismatch.as_deref().unwrap_or("")
                );
            }
            if let Some((i, e)) = &outcome.invariant_failure {
                eprintln!("invariant failure after op {i}: {e}");
            }
            if strict && !outcome.is_clean() {
                return Err(Failure::Violation("correspondence check failed".into()));
            }
            Ok(())
        }
        Command::Transcribe {
            input,
            block_size,
            split_bound,
            strict,
            out,
            epochs,
        } => {
            let records = parse_trace(&read(&input)?)?;
            let t = transcribe(
                &records,
                TranscribeOptions {
                    block_size,
                    split_bound,
                },
            )?;
            if let Some(p) = &out {
                emit(Some(p), &write_sequence_file([&t.s_prime, &t.s]))?;
            }
            if let Some(p) = &epochs {
                emit(Some(p), &epochs_csv(&t.epochs))?;
            }
            print!("{}", t.report.to_text());
            if strict && !t.report.holds() {
                return Err(Failure::Violation("transcription property failed".into()));
            }
            Ok(())
        }
        Command::CheckPattern {
            pattern: pat,
            input,
            strict,
        } => {
            let p = pattern(&pat)?;
            let seqs = parse_sequence_file(&read(&input)?)?;
            let mut hits = 0;
            for (i, s) in seqs.iter().enumerate() {
                match find_pattern(&p, s) {
                    Some(w) => {
                        hits += 1;
                        let pos: Vec<String> = w.iter().map(usize::to_string).collect();
                        println!("{}: contains at {}", i + 1, pos.join(" "));
                    }
                    None => println!("{}: free", i + 1),
                }
            }
            if strict && hits > 0 {
                return Err(Failure::Violation(format!(
                    "{hits} sequences contain {pat}"
                )));
            }
            Ok(())
        }
        Command::Ex {
            pattern: pat,
            n,
            cap,
            budget,
        } => {
            let p = pattern(&pat)?;
            let r = ex_bruteforce(
                &p,
                n,
                ExLimits {
                    length_cap: cap,
                    node_budget: budget,
                },
            );
            match r.value {
                Some(v) => println!("ex {v}"),
                None => println!("ex none"),
            }
            println!("exact {}", r.exact);
            if let Some(w) = &r.witness {
                println!("witness {w}");
            }
            println!("nodes {}", r.nodes_visited);
            Ok(())
        }
        Command::Report {
            kind: k,
            sizes,
            m,
            seed,
            block_size,
            out,
        } => {
            let k = kind(&k, block_size)?;
            let traces = sizes
                .iter()
                .map(|&n| generate(k, n, m.unwrap_or(n), seed))
                .collect::<Result<Vec<_>, _>>()?;
            let costs: Vec<_> = traces
                .par_iter()
                .map(|t| run(t, RunOptions::default()).cost)
                .collect();
            emit(out.as_deref(), &report_csv(&costs))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation(m)) => {
            eprintln!("violation: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
