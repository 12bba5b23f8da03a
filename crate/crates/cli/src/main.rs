use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use xsquare::report::to_json;
use xsquare::{
    build_report, compare_report, homotopy_report, verify_report, ConstructionData, CoreError, FieldSpec, Skeleton2,
};
use xsquare_algebra::{MonomialOrder, DEFAULT_BUDGET};

/// Free crossed squares from 2-dimensional construction data.
#[derive(Parser, Debug)]
#[command(name = "xsquare", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the skeleton, Moore ideals, P1, P2 and the crossed square.
    Build(Job),
    /// Run the crossed module and crossed square axiom suites.
    Verify(Job),
    /// Filtered dimensions of pi_0, pi_1, pi_2 and of H2(B, B).
    Homotopy(Job),
    /// Tensor corner, P2 routes, X/Y complexes and stability comparisons.
    Compare(Job),
}

#[derive(Args, Debug)]
struct Job {
    /// Construction data file (JSON).
    input: PathBuf,
    /// Degree bound for filtered dimensions [default: 6, and 8 for H2].
    #[arg(long)]
    max_degree: Option<u64>,
    /// Step budget for each Gröbner basis computation.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Order::Degrevlex)]
    order: Order,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Coefficient field, overriding the file: `Q` or a prime `p`.
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldSpec>,
    /// Replace the pairing h by zero (negative control).
    #[arg(long, hide = true)]
    break_h: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Order {
    Degrevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Q);
    }
    let digits = s.strip_prefix("F_").or_else(|| s.strip_prefix("Fp")).unwrap_or(s);
    digits.parse().map(FieldSpec::Fp).map_err(|_| format!("expected `Q` or a prime, got `{s}`"))
}

struct Outcome {
    text: String,
    passed: bool,
}

fn render<T: Serialize + std::fmt::Display>(value: &T, format: Format, passed: bool) -> Outcome {
    let text = match format {
        Format::Text => value.to_string(),
        Format::Json => to_json(value),
    };
    Outcome { text, passed }
}

fn load(job: &Job) -> Result<Skeleton2> {
    let text = std::fs::read_to_string(&job.input).with_context(|| format!("reading {}", job.input.display()))?;
    let mut data = ConstructionData::from_json(&text).map_err(CoreError::from)?;
    if let Some(f) = job.field {
        data.field = f;
    }
    let order = match job.order {
        Order::Degrevlex => MonomialOrder::DegRevLex,
        Order::Lex => MonomialOrder::Lex,
    };
    Ok(Skeleton2::build(&data, order, job.budget)?)
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Build(job) => {
            let sk = load(job)?;
            let rep = build_report(&sk)?;
            let ok = rep.identities.passed() && rep.explicit_forms.iter().all(|c| c.passed());
            Ok(render(&rep, job.format, ok))
        }
        Command::Verify(job) => {
            let sk = load(job)?;
            let rep = verify_report(&sk, job.break_h)?;
            let ok = rep.passed();
            Ok(render(&rep, job.format, ok))
        }
        Command::Homotopy(job) => {
            let sk = load(job)?;
            let rep = homotopy_report(&sk, job.max_degree.unwrap_or(6), job.max_degree.unwrap_or(8))?;
            let ok = rep.passed();
            Ok(render(&rep, job.format, ok))
        }
        Command::Compare(job) => {
            let sk = load(job)?;
            let rep = compare_report(&sk, job.max_degree.unwrap_or(6))?;
            let ok = rep.passed();
            Ok(render(&rep, job.format, ok))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<CoreError>() {
        Some(e) if e.is_budget() => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
