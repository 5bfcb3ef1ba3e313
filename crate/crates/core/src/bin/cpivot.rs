//! Command-line front end: parses a problem file, runs the solver, prints
//! the trace and solution, and optionally cross-checks against the oracle
//! or runs a seeded random verification suite.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, ValueEnum};

use cpivot::engine::{solve, SolveOutcome, SolverConfig, TraceLevel};
use cpivot::formats::{findings_jsonl, fmt_scalar, parse_problem, FileFormat};
use cpivot::model::{fold_back, normalize};
use cpivot::oracle::{cross_check, run_random_suite, verify_tol};
use cpivot::scalar::{Rational, Scalar};

const EXIT_OK: u8 = 0;
const EXIT_NO_SOLUTION: u8 = 1;
const EXIT_FINDINGS: u8 = 2;
const EXIT_BREAKDOWN: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    PaperText,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ArithmeticArg {
    Float,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TraceArg {
    Columns,
    Tableaux,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PrecisionArg {
    Fixed,
    Full,
}

#[derive(Debug, Parser)]
#[command(name = "cpivot", about = "LP solver via complementary pivoting")]
struct Args {
    /// Problem file to solve.
    #[arg(long)]
    input: Option<PathBuf>,

    /// Input format; default inferred from the file extension.
    #[arg(long, value_enum)]
    format: Option<FormatArg>,

    #[arg(long, value_enum, default_value_t = ArithmeticArg::Float)]
    arithmetic: ArithmeticArg,

    /// Zero tolerance; defaults to 1e-9 (float) or exact 0 (rational).
    #[arg(long)]
    tol: Option<String>,

    /// Iteration cap; defaults to k+n.
    #[arg(long)]
    max_iter: Option<usize>,

    #[arg(long, value_enum, default_value_t = TraceArg::Columns)]
    trace: TraceArg,

    /// Cross-check the outcome against the independent oracle.
    #[arg(long)]
    oracle_check: bool,

    /// Run COUNT seeded random instances against the oracle instead of
    /// solving a file.
    #[arg(long, value_name = "COUNT")]
    random_suite: Option<usize>,

    /// First seed of the random suite.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Largest constraint count in the random suite.
    #[arg(long, default_value_t = 5)]
    kmax: usize,

    /// Largest variable count in the random suite.
    #[arg(long, default_value_t = 5)]
    nmax: usize,

    /// Destination for the report (solve mode) or findings records
    /// (suite mode); stdout keeps the human-readable output either way.
    #[arg(long)]
    out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = PrecisionArg::Fixed)]
    precision: PrecisionArg,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) if e.use_stderr() => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(e) => {
            // --help / --version
            print!("{e}");
            return ExitCode::from(EXIT_OK);
        }
    };
    let code = match args.arithmetic {
        ArithmeticArg::Float => run::<f64>(&args),
        ArithmeticArg::Rational => run::<Rational>(&args),
    };
    ExitCode::from(code)
}

fn run<S: Scalar>(args: &Args) -> u8 {
    let epsilon = match &args.tol {
        Some(text) => match S::parse(text) {
            Some(v) => v,
            None => {
                eprintln!("error: cannot parse --tol value '{text}'");
                return EXIT_USAGE;
            }
        },
        None => S::default_epsilon(),
    };
    let cfg = SolverConfig {
        epsilon,
        max_iterations: args.max_iter,
        trace_level: match args.trace {
            TraceArg::Columns => TraceLevel::Columns,
            TraceArg::Tableaux => TraceLevel::Tableaux,
            TraceArg::None => TraceLevel::None,
        },
    };

    if let Some(count) = args.random_suite {
        return run_suite(args, &cfg, count);
    }
    let Some(input) = &args.input else {
        eprintln!("error: either --input or --random-suite is required");
        return EXIT_USAGE;
    };
    let text = match std::fs::read_to_string(input) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", input.display());
            return EXIT_USAGE;
        }
    };
    let format = match args.format {
        Some(FormatArg::Json) => FileFormat::Json,
        Some(FormatArg::PaperText) => FileFormat::PaperText,
        None => FileFormat::from_path(&input.to_string_lossy()),
    };
    let gp = match parse_problem::<S>(&text, format) {
        Ok(gp) => gp,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_USAGE;
        }
    };
    let (lp, map) = match normalize(&gp) {
        Ok(v) => v,
        Err(e) => {
            eprintln!("error: {}: {e}", input.display());
            return EXIT_USAGE;
        }
    };

    let full = args.precision == PrecisionArg::Full;
    let started = Instant::now();
    let outcome = solve(&lp, &cfg);
    let elapsed = started.elapsed();

    let mut report = String::new();
    report.push_str(&format!(
        "problem: k={} n={} ({} after normalization: k={} n={})\n",
        gp.constraints.len(),
        gp.objective.len(),
        if map.is_identity() {
            "unchanged"
        } else {
            "rewritten"
        },
        lp.k(),
        lp.n()
    ));
    let trace = outcome.trace();
    if args.trace == TraceArg::Tableaux {
        for (label, snapshot) in &trace.tableaux {
            report.push_str(&format!("--- {label} ---\n{snapshot}"));
        }
    }
    if args.trace != TraceArg::None {
        report.push_str(&trace.table());
    }
    report.push_str(&format!("iterations: {}\n", trace.iterations));
    for note in &trace.notes {
        report.push_str(&format!("note: {note}\n"));
    }

    let mut findings = Vec::new();
    if args.oracle_check {
        findings = cross_check(&lp, &outcome, &verify_tol(&cfg));
        for f in &findings {
            report.push_str(&format!("finding: {f:?}\n"));
        }
    }

    let code = match &outcome {
        SolveOutcome::Optimal { x, y, .. } => {
            let objective = lp.objective_value(x);
            match fold_back(&map, x, y, &objective) {
                Ok(sol) => {
                    let vec_fmt = |v: &[S]| {
                        v.iter()
                            .map(|s| fmt_scalar(s, full))
                            .collect::<Vec<_>>()
                            .join(", ")
                    };
                    report.push_str(&format!("x = ({})\n", vec_fmt(&sol.x)));
                    report.push_str(&format!("y = ({})\n", vec_fmt(&sol.y)));
                    report.push_str(&format!(
                        "objective = {}\n",
                        fmt_scalar(&sol.objective, full)
                    ));
                    report.push_str("status: solved\n");
                    if findings.is_empty() {
                        EXIT_OK
                    } else {
                        EXIT_FINDINGS
                    }
                }
                Err(e) => {
                    report.push_str(&format!("status: breakdown ({e})\n"));
                    EXIT_BREAKDOWN
                }
            }
        }
        SolveOutcome::NoSolution { .. } => {
            report.push_str("status: no solution (infeasible or unbounded)\n");
            if findings.is_empty() {
                EXIT_NO_SOLUTION
            } else {
                EXIT_FINDINGS
            }
        }
        SolveOutcome::IterationLimit { trace } => {
            report.push_str(&format!(
                "status: iteration limit reached after {} iterations\n",
                trace.iterations
            ));
            EXIT_FINDINGS
        }
        SolveOutcome::Breakdown { reason, .. } => {
            report.push_str(&format!("status: breakdown ({reason})\n"));
            EXIT_BREAKDOWN
        }
    };
    report.push_str(&format!("elapsed: {:.3} ms\n", elapsed.as_secs_f64() * 1e3));

    print!("{report}");
    if let Some(out) = &args.out {
        if let Err(e) = std::fs::write(out, &report) {
            eprintln!("error: cannot write {}: {e}", out.display());
            return EXIT_USAGE;
        }
    }
    code
}

fn run_suite<S: Scalar>(args: &Args, cfg: &SolverConfig<S>, count: usize) -> u8 {
    let summary = run_random_suite::<S>(args.seed, count, args.kmax, args.nmax, cfg);
    println!(
        "suite: {} instances (seeds {}..{}), {} optimal, {} no-solution, {} clean",
        summary.total,
        args.seed,
        args.seed + count as u64,
        summary.optimal,
        summary.no_solution,
        summary.clean
    );
    let jsonl = findings_jsonl(&summary.findings);
    if let Some(out) = &args.out {
        if let Err(e) = std::fs::write(out, &jsonl) {
            eprintln!("error: cannot write {}: {e}", out.display());
            return EXIT_USAGE;
        }
    } else {
        print!("{jsonl}");
    }
    if summary.findings.is_empty() {
        println!("findings: none");
        EXIT_OK
    } else {
        println!("findings: {}", summary.findings.len());
        EXIT_FINDINGS
    }
}
