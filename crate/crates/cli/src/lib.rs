//! The `ssalg` command line: JSON in, JSON, ASCII or SVG out.
//!
//! Exit codes: 0 for success or agreement, 1 for a failed check (the JSON
//! report is still printed), 2 for invalid input.

mod commands;
mod input;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn check(passed: bool, stdout: String) -> Self {
        Outcome {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: if passed { String::new() } else { "check failed\n".into() },
        }
    }

    fn invalid(message: impl std::fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "ssalg", version, about = "Steenrod algebra, unstable Ext charts, Bockstein, totalization and André–Quillen computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Json,
    Ascii,
    Svg,
}

#[derive(Args, Debug)]
pub(crate) struct ChartArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Page to draw for ascii/svg output: a number or `inf`
    #[arg(long)]
    pub page: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ext chart over unstable modules for the periodic resolution
    Ext {
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        smax: u32,
        #[arg(long)]
        tmax: i64,
        /// Trivial coefficients as `{"degree": dim}`; defaults to F_p in degree 0
        #[arg(long)]
        coeff: Option<String>,
        #[command(flatten)]
        chart: ChartArgs,
    },
    /// Verify exactness of the periodic resolution through a degree bound
    ResolveCheck {
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        bound: i64,
    },
    /// Bockstein spectral sequence of a graded abelian group or chain complex
    Bockstein {
        #[arg(long)]
        prime: u32,
        /// Groups as `{"degree": ["Z", "Z/m", ...]}`
        #[arg(long)]
        groups: Option<String>,
        #[arg(long)]
        pages: u32,
        /// Integral chain complex as `{"ranks": {...}, "boundaries": {...}}`
        #[arg(long)]
        chain: Option<String>,
        #[command(flatten)]
        chart: ChartArgs,
    },
    /// Chart for a product of Eilenberg–MacLane spaces
    UassEm {
        #[arg(long)]
        prime: u32,
        /// Homotopy as `[{"degree": n, "group": "Z/m"}, ...]`
        #[arg(long)]
        homotopy: String,
        #[arg(long)]
        smax: i64,
        #[arg(long)]
        pages: u32,
        #[command(flatten)]
        chart: ChartArgs,
    },
    /// Compare Bockstein spectral sequences with Eilenberg–MacLane charts
    Compare {
        #[arg(long)]
        prime: u32,
        #[arg(long)]
        groups: String,
        #[arg(long)]
        pages: u32,
    },
    /// Cosimplicial checks
    Cosimp {
        #[arg(value_enum)]
        check: CosimpCheck,
        /// Double complex (ez, totss) or bicosimplicial set (pi00)
        #[arg(long)]
        input: Option<String>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Field for random instances
        #[arg(long, default_value_t = 2)]
        prime: u32,
        /// Truncation level for ez on an input double complex
        #[arg(long, default_value_t = 3)]
        top: usize,
    },
    /// André–Quillen cohomology in degrees 0 and 1
    Aq {
        #[arg(long)]
        presentation: String,
        #[arg(long)]
        coeff: String,
        #[arg(long)]
        bound: u32,
    },
    /// Genus lifting report for a free source
    Genus {
        #[arg(long)]
        source: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        assign: String,
        #[arg(long)]
        bound: u32,
    },
    /// Write the chart figures as SVG
    Figures {
        #[arg(long, default_value = "figures")]
        out: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum CosimpCheck {
    Ez,
    Pi00,
    Totss,
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    let result = match cli.command {
        Command::Ext {
            prime,
            n,
            smax,
            tmax,
            coeff,
            chart,
        } => commands::ext(prime, n, smax, tmax, coeff.as_deref(), &chart),
        Command::ResolveCheck { prime, n, bound } => commands::resolve_check(prime, n, bound),
        Command::Bockstein {
            prime,
            groups,
            pages,
            chain,
            chart,
        } => commands::bockstein(prime, groups.as_deref(), pages, chain.as_deref(), &chart),
        Command::UassEm {
            prime,
            homotopy,
            smax,
            pages,
            chart,
        } => commands::uass_em(prime, &homotopy, smax, pages, &chart),
        Command::Compare { prime, groups, pages } => commands::compare(prime, &groups, pages),
        Command::Cosimp {
            check,
            input,
            trials,
            seed,
            prime,
            top,
        } => commands::cosimp(check, input.as_deref(), trials, seed, prime, top),
        Command::Aq {
            presentation,
            coeff,
            bound,
        } => commands::aq(&presentation, &coeff, bound),
        Command::Genus {
            source,
            target,
            assign,
            bound,
        } => commands::genus(&source, &target, &assign, bound),
        Command::Figures { out } => commands::figures(&out),
    };
    result.unwrap_or_else(Outcome::invalid)
}
