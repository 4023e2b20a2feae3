//! `pichar`: partitions, character degrees, π′-classifications and prime
//! graphs from the command line.

mod families;

use std::fmt::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use pichar_core::gltype::{gamma_prime_gl, gl_character_degrees, gl_only_linear, Eps, GLParams};
use pichar_core::piclass::{
    alt_extendible_exists, alt_extendible_exists_brute, alt_witness, irr_pi_prime_sym, sym_only_linear, sym_witness,
    WitnessReport,
};
use pichar_core::symdeg::{alt_constituents, alt_degrees, degree_hook_formula, DegreeRecord, Label};
use pichar_core::verify::{self, VerifyConfig};
use pichar_core::{enumerate_partitions, Partition, PrimePair};

const DEFAULT_MAX_N: usize = 60;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] pichar_core::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Sym,
    Alt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassifyKind {
    Sym,
    AltExt,
}

#[derive(Parser)]
#[command(name = "pichar", version, about = "Characters of π′-degree and prime graphs of finite groups")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Tsv, global = true)]
    format: Format,
    /// Worker threads for exhaustive scans.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of N.
    Partitions { n: usize },
    /// Degree of the character labelled by a partition such as 5,1^4.
    Degree {
        lambda: String,
        /// Degrees of the A_n constituents instead.
        #[arg(long)]
        alt: bool,
    },
    /// Irreducible characters of degree prime to p and q.
    PiIrr {
        n: usize,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(long, value_enum, default_value_t = Group::Sym)]
        group: Group,
    },
    /// Whether only linear characters have {p,q}′-degree (sym), or whether a
    /// non-trivial one extends from A_n to S_n (alt-ext).
    Classify {
        #[arg(value_enum)]
        kind: ClassifyKind,
        n: usize,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
    },
    /// A non-linear character of {p,q}′-degree.
    Witness {
        #[arg(value_enum)]
        group: Group,
        n: usize,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
    },
    /// Prime graph of a group family: sym N, alt N, nilpotent P:a|n ..., gl N QF [EPS].
    Graph {
        family: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<String>,
    },
    /// General linear and unitary groups.
    Gl {
        #[command(subcommand)]
        action: GlCommand,
    },
    /// Run verification suites.
    Verify {
        /// Suite name, or "all".
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GlCommand {
    /// Closed-form criterion for GL_n^ε(QF) and π = {p, q}.
    Classify {
        n: usize,
        qf: u64,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        q: u64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        eps: String,
    },
    /// Degree table of GL_n(QF).
    Degrees { n: usize, qf: u64 },
    /// Prime graph with the closed form and the degree table side by side.
    Graph {
        n: usize,
        qf: u64,
        #[arg(long, default_value = "1", allow_negative_numbers = true)]
        eps: String,
    },
}

/// Upper bound on `n` for commands that enumerate partitions.
pub struct Limits {
    max_n: usize,
}

impl Limits {
    fn from_env() -> Result<Limits, CliError> {
        let max_n = match std::env::var("PICHAR_MAX_N") {
            Ok(v) => parse_number(&v, "PICHAR_MAX_N")?,
            Err(_) => DEFAULT_MAX_N,
        };
        Ok(Limits { max_n })
    }

    pub fn check(&self, n: usize) -> Result<usize, CliError> {
        if n > self.max_n {
            return Err(CliError::Usage(format!(
                "n = {n} exceeds the scan limit {} (raise PICHAR_MAX_N to allow it)",
                self.max_n
            )));
        }
        Ok(n)
    }
}

pub fn parse_number<T: FromStr>(text: &str, what: &str) -> Result<T, CliError> {
    text.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what} must be a non-negative integer, got '{text}'")))
}

pub fn parse_eps(text: &str) -> Result<Eps, CliError> {
    match text {
        "1" | "+1" | "+" => Ok(Eps::Plus),
        "-1" | "-" => Ok(Eps::Minus),
        _ => Err(CliError::Usage(format!("EPS must be 1 or -1, got '{text}'"))),
    }
}

/// Only graphs have a DOT rendering.
fn no_dot(format: Format) -> Result<(), CliError> {
    if format == Format::Dot {
        return Err(CliError::Usage("dot output is only available for graphs".into()));
    }
    Ok(())
}

/// Whether the closed forms apply without a scan: `n >= 5`, both primes at
/// most `n`.
fn in_regime(n: usize, pair: PrimePair) -> bool {
    n >= 5 && pair.primes().iter().all(|&r| r <= n as u64)
}

fn records(format: Format, records: &[DegreeRecord]) -> String {
    let mut out = String::new();
    for r in records {
        match format {
            Format::Json => out.push_str(&r.to_json()),
            _ => {
                let _ = write!(out, "{}\t{}", r.label, r.degree);
            }
        }
        out.push('\n');
    }
    out
}

fn witness_output(format: Format, report: &WitnessReport) -> String {
    match (&report.witness, format) {
        (None, Format::Json) => "{\"classification\":\"only-linear\"}\n".into(),
        (None, _) => "only-linear\n".into(),
        (Some(w), Format::Json) => {
            let line = serde_json::json!({
                "classification": "witness",
                "witness": w.to_string(),
                "degree": report.degree.as_ref().map(|d| d.to_string()),
                "construction": report.construction.map(|c| format!("{c:?}")),
                "split": report.split,
            });
            format!("{line}\n")
        }
        (Some(w), _) => format!(
            "witness\t{w}\t{}\t{:?}{}\n",
            report.degree.as_ref().map(|d| d.to_string()).unwrap_or_default(),
            report.construction.expect("witness has a construction"),
            if report.split { "\tsplit" } else { "" }
        ),
    }
}

fn boolean_output(format: Format, key: &str, value: bool, yes: &str, no: &str) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::json!({ key: value })),
        _ => format!("{}\n", if value { yes } else { no }),
    }
}

fn graph_output(format: Format, graph: &pichar_core::PrimeGraph) -> String {
    match format {
        Format::Tsv => graph.to_tsv(),
        Format::Json => format!("{}\n", graph.to_json()),
        Format::Dot => graph.to_dot(),
    }
}

/// Output text and exit status of a successful run.
struct Done {
    stdout: String,
    failed: bool,
}

impl From<String> for Done {
    fn from(stdout: String) -> Self {
        Done { stdout, failed: false }
    }
}

fn run(cli: Cli, limits: &Limits) -> Result<Done, CliError> {
    let format = cli.format;
    let out = match cli.command {
        Command::Partitions { n } => {
            no_dot(format)?;
            let n = limits.check(n)?;
            let mut out = String::new();
            for lambda in enumerate_partitions(n) {
                match format {
                    Format::Json => {
                        let _ = writeln!(out, "{}", serde_json::json!({ "partition": lambda.to_string() }));
                    }
                    _ => {
                        let _ = writeln!(out, "{lambda}");
                    }
                }
            }
            out
        }
        Command::Degree { lambda, alt } => {
            no_dot(format)?;
            let lambda: Partition = lambda.parse()?;
            if alt {
                records(format, &alt_constituents(&lambda))
            } else {
                let degree = degree_hook_formula(&lambda);
                match format {
                    Format::Json => {
                        let rec = DegreeRecord {
                            label: Label::Sym(lambda),
                            degree,
                            multiplicity: 1,
                        };
                        format!("{}\n", rec.to_json())
                    }
                    _ => format!("{degree}\n"),
                }
            }
        }
        Command::PiIrr { n, p, q, group } => {
            no_dot(format)?;
            let pair = PrimePair::new(p, q)?;
            let n = limits.check(n)?;
            let selected: Vec<DegreeRecord> = match group {
                Group::Sym => {
                    if n == 0 {
                        return Err(CliError::Usage("n must be positive".into()));
                    }
                    irr_pi_prime_sym(n, pair)
                        .into_iter()
                        .map(|lambda| DegreeRecord {
                            degree: degree_hook_formula(&lambda),
                            label: Label::Sym(lambda),
                            multiplicity: 1,
                        })
                        .collect()
                }
                Group::Alt => alt_degrees(n)?.into_iter().filter(|r| pair.coprime_to(&r.degree)).collect(),
            };
            records(format, &selected)
        }
        Command::Classify { kind, n, p, q } => {
            no_dot(format)?;
            let pair = PrimePair::new(p, q)?;
            if !in_regime(n, pair) {
                limits.check(n)?;
            }
            match kind {
                ClassifyKind::Sym => {
                    if n == 0 {
                        return Err(CliError::Usage("n must be positive".into()));
                    }
                    let only = sym_only_linear(n, pair);
                    boolean_output(format, "only_linear", only, "only-linear", "non-linear-exists")
                }
                ClassifyKind::AltExt => {
                    let exists = if in_regime(n, pair) {
                        alt_extendible_exists(n, pair)?
                    } else {
                        if n == 0 {
                            return Err(CliError::Usage("n must be positive".into()));
                        }
                        alt_extendible_exists_brute(n, pair)
                    };
                    boolean_output(format, "extendible_exists", exists, "extendible-exists", "none")
                }
            }
        }
        Command::Witness { group, n, p, q } => {
            no_dot(format)?;
            let pair = PrimePair::new(p, q)?;
            if !in_regime(n, pair) {
                limits.check(n)?;
            }
            if n == 0 {
                return Err(CliError::Usage("n must be positive".into()));
            }
            match group {
                Group::Sym => witness_output(format, &sym_witness(n, pair)),
                Group::Alt if n >= 5 => witness_output(format, &alt_witness(n, pair)?),
                Group::Alt => {
                    // A_1 .. A_4: scan the few characters directly
                    let found = if n >= 3 {
                        alt_degrees(n)?
                            .into_iter()
                            .find(|r| r.degree > 1u32.into() && pair.coprime_to(&r.degree))
                    } else {
                        None
                    };
                    match found {
                        None => witness_output(format, &WitnessReport::only_linear()),
                        Some(r) => {
                            let line = match format {
                                Format::Json => r.to_json(),
                                _ => format!("witness\t{}\t{}\tSearch", r.label, r.degree),
                            };
                            format!("{line}\n")
                        }
                    }
                }
            }
        }
        Command::Graph { family, args } => {
            let graph = families::family(&family)?.build(&args, limits)?;
            graph_output(format, &graph)
        }
        Command::Gl { action } => match action {
            GlCommand::Classify { n, qf, p, q, eps } => {
                no_dot(format)?;
                let params = GLParams::from_field_order(n, qf, parse_eps(&eps)?)?;
                let only = gl_only_linear(&params, PrimePair::new(p, q)?)?;
                boolean_output(format, "only_linear", only, "only-linear", "non-linear-exists")
            }
            GlCommand::Degrees { n, qf } => {
                no_dot(format)?;
                let table = gl_character_degrees(limits.check(n)?, qf)?;
                match format {
                    Format::Json => format!("{}\n", table.to_json()),
                    _ => table.to_tsv(),
                }
            }
            GlCommand::Graph { n, qf, eps } => {
                let params = GLParams::from_field_order(limits.check(n)?, qf, parse_eps(&eps)?)?;
                let report = gamma_prime_gl(&params)?;
                let source = if report.oracle.is_some() { "table" } else { "closed-form" };
                match format {
                    Format::Dot => report.graph.to_dot(),
                    Format::Json => {
                        let line = serde_json::json!({
                            "source": source,
                            "graph": report.graph,
                            "closed_form": report.closed_form,
                            "disagreements": report.disagreements,
                        });
                        format!("{line}\n")
                    }
                    Format::Tsv => {
                        let mut out = format!("source\t{source}\n");
                        out.push_str(&report.graph.to_tsv());
                        for (p, q) in &report.disagreements {
                            let _ = writeln!(out, "disagreement\t{p}\t{q}");
                        }
                        out
                    }
                }
            }
        },
        Command::Verify {
            suite,
            max_n,
            samples,
            seed,
        } => {
            no_dot(format)?;
            if max_n > limits.max_n {
                eprintln!("note: --max-n {max_n} capped to {}", limits.max_n);
            }
            let config = VerifyConfig {
                max_n: max_n.min(limits.max_n),
                seed,
                samples,
            };
            let reports = verify::run(&suite, &config).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown suite '{suite}' (expected all or one of {})",
                    verify::suite_names().join(", ")
                ))
            })?;
            let mut out = String::new();
            for report in &reports {
                match format {
                    Format::Json => {
                        out.push_str(&report.to_json());
                        out.push('\n');
                    }
                    _ => out.push_str(&report.to_tsv()),
                }
            }
            return Ok(Done {
                stdout: out,
                failed: reports.iter().any(|r| !r.passed()),
            });
        }
    };
    Ok(out.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("usage error");
            eprintln!("{}", first.trim());
            return ExitCode::from(2);
        }
    };
    let result = Limits::from_env().and_then(|limits| match cli.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))?;
            pool.install(|| run(cli, &limits))
        }
        None => run(cli, &limits),
    });
    match result {
        Ok(done) => {
            print!("{}", done.stdout);
            if done.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
