use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use u3codes::codes::DEFAULT_BUDGET;
use u3codes::poly::factor_xn_minus_1;
use u3codes::quantum::{search_quantum, DistanceOptions, SearchOptions};
use u3codes::report::{to_csv, verify_paper, ResultLine, VerifyOptions};
use u3codes::{CodeSpec, Error};

#[derive(Parser)]
#[command(
    name = "u3codes",
    version,
    about = "Cyclic codes over F2[u]/(u^3+u) and their CSS quantum codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible factors of x^n + 1
    Factor {
        #[arg(long)]
        n: usize,
    },
    /// Build a code from (g1, a1, g2) and report size, distance, containment
    Construct {
        #[command(flatten)]
        spec: SpecArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dual of a code and the closed-form generator comparison
    Dual {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// All dual-containing codes of length n
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 63)]
        max_n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Golden reproductions and oracle agreement checks
    VerifyPaper {
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    g1: String,
    #[arg(long)]
    a1: String,
    #[arg(long)]
    g2: String,
}

impl SpecArgs {
    fn parse(&self) -> Result<CodeSpec, Error> {
        CodeSpec::parse(self.n, &self.g1, &self.a1, &self.g2)
    }
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Failed(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::EvenLength(_)
            | Error::LengthTooLarge { .. }
            | Error::InvalidSpec(_)
            | Error::ZeroPolynomial(_) => Failure::Usage(e.to_string()),
            _ => Failure::Failed(e.to_string()),
        }
    }
}

fn render(lines: &[ResultLine], emit: Emit) -> String {
    match emit {
        Emit::Json => lines.iter().map(|l| l.to_json() + "\n").collect(),
        Emit::Csv => to_csv(lines),
    }
}

fn write_out(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Failed(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn distance_opts(budget: usize) -> DistanceOptions {
    DistanceOptions {
        budget,
        ..Default::default()
    }
}

#[derive(Serialize)]
struct DualLine {
    n: usize,
    g1: String,
    a1: String,
    g2: String,
    code_size_log2: usize,
    dual_size_log2: usize,
    dual_basis: Vec<String>,
    closed_form_generator: String,
    closed_form_matches: bool,
    generator: String,
    generator_matches: bool,
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Factor { n } => {
            let factors = factor_xn_minus_1(n)?;
            let text: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
            println!("{}", text.join(", "));
        }
        Command::Construct { spec, output } => {
            let spec = spec.parse()?;
            let line = ResultLine::from_spec(&spec, distance_opts(output.budget))?;
            write_out(&render(&[line], output.emit), &output.out)?;
        }
        Command::Dual { spec } => {
            let spec = spec.parse()?;
            let dual = spec.code().dual();
            let check = spec.dual_generator_formula()?;
            let line = DualLine {
                n: spec.n(),
                g1: spec.g1().to_string(),
                a1: spec.a1().to_string(),
                g2: spec.g2().to_string(),
                code_size_log2: spec.size_log2(),
                dual_size_log2: dual.size_log2(),
                dual_basis: dual
                    .vectors()
                    .iter()
                    .map(|v| {
                        v.iter()
                            .map(|x| format!("({x})"))
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect(),
                closed_form_generator: check.generator.to_string(),
                closed_form_matches: check.matches_dual,
                generator: check.full_generator.to_string(),
                generator_matches: check.full_matches_dual,
            };
            println!(
                "{}",
                serde_json::to_string(&line).expect("plain data serializes")
            );
        }
        Command::Search { n, max_n, output } => {
            let opts = SearchOptions {
                distance: distance_opts(output.budget),
                max_n,
            };
            let records = search_quantum(n, opts)?;
            let mut bad = Vec::new();
            for r in &records {
                if !r.reverify(opts.distance)? {
                    bad.push(r.spec.to_string());
                }
            }
            let lines: Vec<ResultLine> = records.iter().map(ResultLine::from_record).collect();
            write_out(&render(&lines, output.emit), &output.out)?;

            let mut best: BTreeMap<u32, &ResultLine> = BTreeMap::new();
            for l in &lines {
                let q = l.quantum.expect("search records carry parameters");
                best.entry(q.distance.value)
                    .and_modify(|b| {
                        if b.quantum.expect("present").dimension < q.dimension {
                            *b = l;
                        }
                    })
                    .or_insert(l);
            }
            let mut summary = format!(
                "{} dual-containing codes of length {n}\ndistance  best\n",
                lines.len()
            );
            for (d, l) in best.iter().rev() {
                let q = l.quantum.expect("present");
                summary += &format!(
                    "{d:>8}  {q}  n={} g1={} a1={} g2={}\n",
                    l.n, l.g1, l.a1, l.g2
                );
            }
            if output.out.is_some() {
                print!("{summary}");
            } else {
                eprint!("{summary}");
            }
            if !bad.is_empty() {
                return Err(Failure::Failed(format!(
                    "re-verification failed for {}",
                    bad.join("; ")
                )));
            }
        }
        Command::VerifyPaper { budget } => {
            let opts = VerifyOptions {
                distance: distance_opts(budget),
                ..Default::default()
            };
            let report = verify_paper(&opts)?;
            print!("{report}");
            if !report.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
