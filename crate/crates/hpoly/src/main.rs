//! Command-line surface: `compute` index reports for piped graphs,
//! `generate` named families against their closed forms, `verify` the check
//! registry over an exhaustive corpus, and `mine-collisions` for
//! equal-polynomial pairs.
//!
//! Exit status: 0 on success with nothing failed, 1 when a check fails, an
//! oracle mismatches, or input data is bad, 2 for usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use hpoly::families::{ClosedForm, FamilySpec};
use hpoly::graph::Graph;
use hpoly::indices::{harmonic_polynomial, index_report, ChiExponent};
use hpoly::io::{parse_edge_list, parse_graph6, parse_sparse6, write_edge_list, write_graph6};
use hpoly::verifier::{mine_collisions, verify_corpus, CheckId, VerifierError};
use std::fs;
use std::io::{BufRead, BufReader, Read};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hpoly",
    version,
    about = "Harmonic polynomials and degree-based indices of simple graphs, in exact arithmetic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    /// graph6 lines
    G6,
    /// sparse6 lines
    S6,
    /// edge-list text (one graph per input)
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    G6,
    Edgelist,
}

#[derive(Subcommand)]
enum Command {
    /// Read graphs and print their polynomial, structure, and index report
    Compute {
        /// Input path, or `-` for stdin (graph6/sparse6: one graph per line)
        #[arg(long, default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = InputFormat::G6)]
        format: InputFormat,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        /// Comma-separated chi exponents, e.g. `-2,-1,-1/2,0,1/2,1,2`
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Generate a named family graph and compare it with its closed form
    Generate {
        /// Family spec: complete:n, cycle:n, hypercube:n, kbip:n1,n2,
        /// path:n, wheel:n, star:n, trtree:r, grunion:r
        #[arg(long)]
        family: String,
        #[arg(long, value_enum)]
        emit: Option<EmitFormat>,
        /// Print the closed-form oracle comparison
        #[arg(long)]
        report: bool,
    },
    /// Run the check registry over every labeled graph with 1 <= n <= nmax
    Verify {
        #[arg(long)]
        nmax: usize,
        /// Restrict the corpus to connected graphs
        #[arg(long)]
        connected: bool,
        /// `all` or a comma-separated list of check tags
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Worker threads (default: HP_WORKERS or 1)
        #[arg(long)]
        workers: Option<usize>,
        /// Also write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Allow the n = 8 corpus (268,435,456 graphs)
        #[arg(long)]
        allow_large: bool,
    },
    /// List non-isomorphic graphs sharing a harmonic polynomial
    MineCollisions {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: Option<PathBuf>,
        /// Allow the n = 8 corpus
        #[arg(long)]
        allow_large: bool,
    },
}

enum CliError {
    /// Wrong invocation: bad flag values, unknown tags, out-of-range requests.
    Usage(String),
    /// The run itself failed: bad input data, a failed check, a broken oracle.
    Failure(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Failure(_) => ExitCode::from(1),
        }
    }
}

fn verifier_error(e: VerifierError) -> CliError {
    match e {
        VerifierError::InvariantViolation(_) => CliError::Failure(e.to_string()),
        _ => CliError::Usage(e.to_string()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            match &e {
                CliError::Usage(msg) | CliError::Failure(msg) => eprintln!("error: {msg}"),
            }
            e.exit_code()
        }
    }
}

fn run(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Compute {
            input,
            format,
            report,
            alpha,
        } => compute(&input, format, report, alpha.as_deref()),
        Command::Generate {
            family,
            emit,
            report,
        } => generate(&family, emit, report),
        Command::Verify {
            nmax,
            connected,
            theorems,
            workers,
            json,
            allow_large,
        } => verify(nmax, connected, &theorems, workers, json, allow_large),
        Command::MineCollisions {
            nmax,
            json,
            allow_large,
        } => collisions(nmax, json, allow_large),
    }
}

fn parse_alphas(text: Option<&str>) -> Result<Vec<ChiExponent>, CliError> {
    text.map_or(Ok(Vec::new()), |t| {
        t.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| ChiExponent::parse(s).map_err(CliError::Usage))
            .collect()
    })
}

fn read_input(input: &str) -> Result<Box<dyn BufRead>, CliError> {
    if input == "-" {
        Ok(Box::new(BufReader::new(std::io::stdin())))
    } else {
        let file = fs::File::open(input)
            .map_err(|e| CliError::Failure(format!("cannot open {input}: {e}")))?;
        Ok(Box::new(BufReader::new(file)))
    }
}

fn emit_report(g: &Graph, alphas: &[ChiExponent], format: ReportFormat) {
    let report = index_report(g, alphas);
    match format {
        ReportFormat::Json => println!("{}", report.to_json()),
        ReportFormat::Text => print!("{}", report.render_text()),
    }
}

fn compute(
    input: &str,
    format: InputFormat,
    report: ReportFormat,
    alpha: Option<&str>,
) -> Result<ExitCode, CliError> {
    let alphas = parse_alphas(alpha)?;
    match format {
        InputFormat::Edgelist => {
            let mut text = String::new();
            read_input(input)?
                .read_to_string(&mut text)
                .map_err(|e| CliError::Failure(format!("read error: {e}")))?;
            let parsed =
                parse_edge_list(&text).map_err(|e| CliError::Failure(e.to_string()))?;
            if parsed.collapsed_duplicates {
                eprintln!("warning: duplicate edges were collapsed");
            }
            emit_report(&parsed.graph, &alphas, report);
        }
        InputFormat::G6 | InputFormat::S6 => {
            // one graph per line, constant memory
            let mut line_no = 0usize;
            for line in read_input(input)?.lines() {
                let line = line.map_err(|e| CliError::Failure(format!("read error: {e}")))?;
                line_no += 1;
                if line.trim().is_empty() {
                    continue;
                }
                let g = match format {
                    InputFormat::G6 => parse_graph6(&line),
                    _ => parse_sparse6(&line),
                }
                .map_err(|e| CliError::Failure(format!("line {line_no}: {e}")))?;
                if matches!(report, ReportFormat::Text) {
                    println!("graph {line_no}: {}", line.trim_end());
                }
                emit_report(&g, &alphas, report);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(family: &str, emit: Option<EmitFormat>, report: bool) -> Result<ExitCode, CliError> {
    let spec = FamilySpec::parse(family).map_err(|e| CliError::Usage(e.to_string()))?;
    let graph = spec.generate().map_err(|e| CliError::Usage(e.to_string()))?;
    match emit {
        Some(EmitFormat::G6) => println!("{}", write_graph6(&graph)),
        Some(EmitFormat::Edgelist) => print!("{}", write_edge_list(&graph)),
        None if !report => println!("{}", write_graph6(&graph)),
        None => {}
    }
    if !report {
        return Ok(ExitCode::SUCCESS);
    }
    let computed = harmonic_polynomial(&graph);
    println!("family {family}: n = {}, m = {}", graph.n(), graph.m());
    println!("computed:    {computed}");
    let matched = match spec.closed_form().map_err(|e| CliError::Usage(e.to_string()))? {
        ClosedForm::Polynomial(expected) => {
            println!("closed form: {expected}");
            expected == computed
        }
        ClosedForm::SupportOnly {
            low_exponent,
            high_exponent,
            nonzero_count,
        } => {
            println!(
                "closed form: support {{x^{low_exponent}, x^{high_exponent}}} with {nonzero_count} nonzero coefficients"
            );
            computed.min_degree() == Some(low_exponent)
                && computed.degree() == Some(high_exponent)
                && computed.nonzero_count() == nonzero_count
        }
    };
    println!("oracle match: {}", if matched { "yes" } else { "NO" });
    if matched {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(CliError::Failure(format!(
            "closed form disagrees with the generated graph for {family}"
        )))
    }
}

fn resolve_workers(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(w) = flag {
        return Ok(w.max(1));
    }
    match std::env::var("HP_WORKERS") {
        Ok(value) => value
            .trim()
            .parse::<usize>()
            .map(|w| w.max(1))
            .map_err(|_| CliError::Usage(format!("HP_WORKERS is not a number: {value}"))),
        Err(_) => Ok(1),
    }
}

fn write_json(path: &PathBuf, value: &serde_json::Value) -> Result<(), CliError> {
    fs::write(path, format!("{value}\n"))
        .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", path.display())))
}

fn verify(
    nmax: usize,
    connected: bool,
    theorems: &str,
    workers: Option<usize>,
    json: Option<PathBuf>,
    allow_large: bool,
) -> Result<ExitCode, CliError> {
    let registry = CheckId::parse_registry(theorems).map_err(verifier_error)?;
    let workers = resolve_workers(workers)?;
    let report =
        verify_corpus(nmax, connected, &registry, workers, allow_large).map_err(verifier_error)?;
    print!("{}", report.render_text());
    if let Some(path) = json {
        write_json(&path, &report.to_json())?;
    }
    if report.failure_count() > 0 {
        return Err(CliError::Failure(format!(
            "{} check failure(s)",
            report.failure_count()
        )));
    }
    Ok(ExitCode::SUCCESS)
}

fn collisions(
    nmax: usize,
    json: Option<PathBuf>,
    allow_large: bool,
) -> Result<ExitCode, CliError> {
    let report = mine_collisions(nmax, allow_large).map_err(verifier_error)?;
    print!("{}", report.render_text());
    if let Some(path) = json {
        write_json(&path, &report.to_json())?;
    }
    Ok(ExitCode::SUCCESS)
}
