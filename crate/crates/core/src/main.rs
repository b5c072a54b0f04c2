use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use octosigma::commands::{self, Suite, TableName};
use octosigma::cubic::SigmaAssignment;
use octosigma::dirac::{FourInterval, FourMomentum, SolutionParams};
use octosigma::gamma::{GammaCase, ProjectionPolicy};
use octosigma::report::{OutputFormat, RunReport};

#[derive(Parser)]
#[command(name = "octosigma", version, about = "Octonion, split-octonion and cubic sigma-matrix toolkit")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Also write the rendered report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "tableI")]
    TableI,
    #[value(name = "tableII")]
    TableII,
    Constants,
    Ternaries,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    #[value(name = "tableI")]
    TableI,
    Nonassoc,
    Norms,
    Peculiar,
    Constants,
    #[value(name = "tableII")]
    TableII,
}

#[derive(Subcommand)]
enum Command {
    /// Print a generated table.
    Tables {
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Assignment or reconstruction artifact checked by the tableII suite.
        #[arg(long)]
        assignment: Option<PathBuf>,
        /// Where the tableI suite writes its 64-entry oracle diff.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Solve for projections constrained by the listed ternary blocks.
    Reconstruct {
        /// Comma-separated ternary ids in 1..=7.
        #[arg(long, value_parser = parse_scope)]
        scope: BTreeSet<u8>,
        /// Write all solutions (projections and lifted cubes) here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Build a gamma family and its anticommutator report.
    Gamma {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        case: u8,
        /// axis-I, distribution, or explicit:A,B,C
        #[arg(long, default_value = "axis-I", value_parser = parse_policy)]
        policy: ProjectionPolicy,
        /// Projections to use instead of the printed anchors.
        #[arg(long)]
        assignment: Option<PathBuf>,
    },
    /// Evaluate the phase and the exponential solution forms.
    Dirac {
        /// E,p1,p2,p3
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
        momentum: [f64; 4],
        /// t,r1,r2,r3
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
        interval: [f64; 4],
        /// a0,a1,a2,a3
        #[arg(long, value_parser = parse_four, allow_hyphen_values = true)]
        a: Option<[f64; 4]>,
        /// S1,S2,S3
        #[arg(long, value_parser = parse_three, allow_hyphen_values = true)]
        s: Option<[f64; 3]>,
        #[arg(long, default_value_t = 1.0)]
        hbar: f64,
    },
}

fn parse_scope(s: &str) -> Result<BTreeSet<u8>, String> {
    let scope = s
        .split(',')
        .map(|t| match t.trim().parse::<u8>() {
            Ok(k @ 1..=7) => Ok(k),
            _ => Err(format!("ternary ids must be in 1..=7, got {t:?}")),
        })
        .collect::<Result<BTreeSet<u8>, String>>()?;
    Ok(scope)
}

fn parse_policy(s: &str) -> Result<ProjectionPolicy, String> {
    ProjectionPolicy::parse(s).map_err(|e| e.to_string())
}

fn parse_reals<const N: usize>(s: &str) -> Result<[f64; N], String> {
    let v = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().ok().filter(|x| x.is_finite()).ok_or(format!("not a finite number: {t:?}")))
        .collect::<Result<Vec<f64>, String>>()?;
    v.try_into().map_err(|v: Vec<f64>| format!("expected {N} comma-separated values, got {}", v.len()))
}

fn parse_four(s: &str) -> Result<[f64; 4], String> {
    parse_reals::<4>(s)
}

fn parse_three(s: &str) -> Result<[f64; 3], String> {
    parse_reals::<3>(s)
}

fn run(cli: &Cli) -> octosigma::Result<RunReport> {
    match &cli.command {
        Command::Tables { which } => commands::tables(match which {
            Which::TableI => TableName::TableI,
            Which::TableII => TableName::TableII,
            Which::Constants => TableName::Constants,
            Which::Ternaries => TableName::Ternaries,
        }),
        Command::Verify { suite, assignment, emit } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::TableI => Suite::TableI,
                SuiteArg::Nonassoc => Suite::Nonassoc,
                SuiteArg::Norms => Suite::Norms,
                SuiteArg::Peculiar => Suite::Peculiar,
                SuiteArg::Constants => Suite::Constants,
                SuiteArg::TableII => Suite::TableII,
            };
            commands::verify(suite, assignment.as_deref(), emit.as_deref())
        }
        Command::Reconstruct { scope, emit } => commands::reconstruct(scope, emit.as_deref()),
        Command::Gamma { case, policy, assignment } => {
            let loaded = match assignment {
                Some(p) => Some(serde_json::from_str::<SigmaAssignment>(&std::fs::read_to_string(p)?)?),
                None => None,
            };
            commands::gamma(GammaCase::from_number(*case)?, *policy, loaded.as_ref())
        }
        Command::Dirac { momentum, interval, a, s, hbar } => {
            let p = FourMomentum::new(momentum[0], [momentum[1], momentum[2], momentum[3]]);
            let r = FourInterval::new(interval[0], [interval[1], interval[2], interval[3]]);
            let params = (a.is_some() || s.is_some()).then(|| SolutionParams::new(a.unwrap_or([0.0; 4]), s.unwrap_or([0.0; 3])));
            commands::dirac(p, r, params, *hbar)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        Format::Json => OutputFormat::Json,
        Format::Text => OutputFormat::Text,
    };
    let result = run(&cli).and_then(|mut report| {
        report.stamp(std::env::args().collect());
        let rendered = report.render(format)?;
        if let Some(out) = &cli.out {
            std::fs::write(out, &rendered)?;
        }
        print!("{rendered}");
        Ok(report.exit_code())
    });
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
