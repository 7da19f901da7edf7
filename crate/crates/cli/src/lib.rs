//! Command dispatch for the `xmodkit` binary.
//!
//! [`run_command`] parses an argument vector, runs one subcommand and returns the report
//! together with the exit code: 0 when every check passes, 1 when a check fails (the
//! report carries the witness), 2 on input errors.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

pub mod commands;
pub mod report;

pub use report::{
    ErrorInfo, Report, Section, Status, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConvertTarget {
    #[value(name = "2group")]
    TwoGroup,
    #[value(name = "xmod")]
    XMod,
    #[value(name = "2lie")]
    TwoLie,
    #[value(name = "liexmod")]
    LieXMod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FunctorName {
    U,
    P,
    Kg,
    Grouplikes,
    Kfun,
    Chi,
    Cat1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RoundTripPath {
    #[value(name = "u.p")]
    UP,
    #[value(name = "kg.gl")]
    KgGl,
    #[value(name = "kfun.chi")]
    KfunChi,
    #[value(name = "xmod.2g.xmod")]
    XModTwoGroup,
}

#[derive(Debug, Parser)]
#[command(
    name = "xmodkit",
    version,
    about = "Exact checks for crossed modules of groups, Lie algebras and Hopf algebras"
)]
struct Cli {
    /// Report format on stdout.
    #[arg(long, value_enum, default_value = "text", global = true)]
    report: ReportFormat,
    /// PBW degree bound for enveloping algebras, at most 8 since the basis grows like d^dim.
    #[arg(long, default_value_t = 4, global = true, value_parser = clap::value_parser!(u8).range(1..=8))]
    max_degree: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a document with the checker for its kind.
    Check {
        file: PathBuf,
        /// Lie algebra for module, ses and cocycle documents.
        #[arg(long)]
        lie: Option<PathBuf>,
        /// Coefficient module for cocycle documents.
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Pass between crossed modules and strict 2-objects.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Apply a functor and check its output.
    Functor {
        file: PathBuf,
        #[arg(long, value_enum)]
        apply: FunctorName,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Splice a module extension with an abelian extension into a Lie crossed module.
    Splice {
        g: PathBuf,
        ses: PathBuf,
        cocycle: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Dimension of Lie algebra cohomology with coefficients in a module.
    Cohomology {
        g: PathBuf,
        module: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Compose functors or conversions and certify the round trip.
    Roundtrip {
        file: PathBuf,
        #[arg(long, value_enum)]
        path: RoundTripPath,
    },
}

/// A finished command: the report, its exit code and how to print it.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub exit_code: i32,
    pub format: ReportFormat,
    /// Help or version text, printed verbatim instead of the report.
    pub verbatim: Option<String>,
}

impl Outcome {
    pub fn render(&self) -> String {
        match (&self.verbatim, self.format) {
            (Some(text), _) => text.clone(),
            (None, ReportFormat::Json) => self.report.to_json() + "\n",
            (None, ReportFormat::Text) => self.report.to_text(),
        }
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let start = Instant::now();
    let mut report = Report::new(argv.clone());
    let format = if argv
        .windows(2)
        .any(|w| w[0] == "--report" && w[1] == "json")
        || argv.iter().any(|a| a == "--report=json")
    {
        ReportFormat::Json
    } else {
        ReportFormat::Text
    };
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome {
                    report,
                    exit_code: EXIT_PASS,
                    format,
                    verbatim: Some(e.to_string()),
                };
            }
            report.fail_with(ErrorInfo::input("usage", e.to_string()), EXIT_INPUT_ERROR);
            let exit_code = report.exit_code;
            return Outcome {
                report,
                exit_code,
                format,
                verbatim: None,
            };
        }
    };
    let d = usize::from(cli.max_degree);
    let result = match &cli.command {
        Command::Check { file, lie, module } => {
            commands::check(&mut report, file, lie.as_deref(), module.as_deref(), d)
        }
        Command::Convert { file, to, output } => {
            commands::convert(&mut report, file, *to, output.as_ref())
        }
        Command::Functor {
            file,
            apply,
            output,
        } => commands::functor(&mut report, file, *apply, d, output.as_ref()),
        Command::Splice {
            g,
            ses,
            cocycle,
            output,
        } => commands::splice_cmd(&mut report, g, ses, cocycle, output.as_ref()),
        Command::Cohomology { g, module, degree } => {
            commands::cohomology(&mut report, g, module, *degree)
        }
        Command::Roundtrip { file, path } => commands::roundtrip(&mut report, file, *path, d),
    };
    if let Err(abort) = result {
        abort.record(&mut report);
    }
    report.finish();
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    let exit_code = report.exit_code;
    Outcome {
        report,
        exit_code,
        format: cli.report,
        verbatim: None,
    }
}
