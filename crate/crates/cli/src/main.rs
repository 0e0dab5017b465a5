mod commands;
mod output;
mod reproduce;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Certified step-size coefficients for boundedness of linear multistep methods.
#[derive(Parser, Debug)]
#[command(name = "scb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct MethodArg {
    /// catalog method (see `scb catalog`)
    #[arg(long, conflicts_with = "custom", required_unless_present = "custom")]
    pub method: Option<String>,
    /// JSON file with fields k, a, b, name
    #[arg(long)]
    pub custom: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// write the report here instead of stdout
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct PrecisionArgs {
    /// starting precision in decimal digits
    #[arg(long, default_value_t = 64)]
    pub precision: u32,
    /// escalation cap in decimal digits
    #[arg(long, env = "SCB_PRECISION_CAP", default_value_t = 20_000)]
    pub precision_cap: u32,
    /// exact scan length before the closed form is used
    #[arg(long, default_value_t = 1000)]
    pub horizon: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in methods
    Catalog {
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether gamma is an SCB
    Check {
        #[command(flatten)]
        method: MethodArg,
        /// exact rational: p/q, decimal or scientific
        #[arg(long)]
        gamma: String,
        #[command(flatten)]
        prec: PrecisionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Enclose the optimal SCB
    GammaSup {
        #[command(flatten)]
        method: MethodArg,
        /// enclosure width
        #[arg(long, default_value = "1e-9")]
        tol: String,
        #[command(flatten)]
        prec: PrecisionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Starting values tau_n and the existence verdict
    Tau {
        #[command(flatten)]
        method: MethodArg,
        /// number of tau values to print
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[command(flatten)]
        prec: PrecisionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Does any positive SCB exist
    Exists {
        #[command(flatten)]
        method: MethodArg,
        #[command(flatten)]
        prec: PrecisionArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute a reference table and compare
    Reproduce {
        #[arg(long, value_enum)]
        target: reproduce::Target,
        #[command(flatten)]
        common: Common,
    },
    /// Sample gamma -> mu_n(gamma) for plotting
    MuCurve {
        #[command(flatten)]
        method: MethodArg,
        /// inclusive range `a..b`
        #[arg(long, default_value = "1..21")]
        n: String,
        /// grid `start:end:step`
        #[arg(long)]
        gamma: String,
        /// extra marker rows at this gamma
        #[arg(long)]
        mark: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

/// Exit codes: 0 positive outcome, 1 negative, 2 inconclusive.
pub const EXIT_USAGE: u8 = 10;
pub const EXIT_INTERNAL: u8 = 11;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (common, result) = match cli.command {
        Command::Catalog { common } => (common.clone(), commands::catalog()),
        Command::Check { method, gamma, prec, common } => (common, commands::check(&method, &gamma, &prec)),
        Command::GammaSup { method, tol, prec, common } => (common, commands::gamma_sup(&method, &tol, &prec)),
        Command::Tau { method, n, prec, common } => (common, commands::tau(&method, n, &prec)),
        Command::Exists { method, prec, common } => (common, commands::exists(&method, &prec)),
        Command::Reproduce { target, common } => (common, reproduce::run(target)),
        Command::MuCurve { method, n, gamma, mark, common } => {
            (common, commands::mu_curve(&method, &n, &gamma, mark.as_deref()))
        }
    };
    match result {
        Ok(report) => {
            let fmt = Format::from(common.format);
            if let Err(e) = output::emit(&report, fmt, common.output.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_INTERNAL);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
