//! The `invariants` command-line tool.

use std::io::Write;
use std::process::ExitCode;

use bead_engine::Mode;
use clap::{Parser, Subcommand, ValueEnum};
use diagram::{linking_matrix, parse, trade_handles, GKirbyDiagram};
use invariants_cli::output::approx;
use invariants_cli::{
    boundary_invariant, corpus, decomposition_check, parse_omega, parse_scalar, rescale, rescale_check, verify_suite, Calculator, CliError,
    InvariantOutput, Report, StructureKind, VariantChoice,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "invariants", version, about = "Quantum invariants of 4-dimensional 2-handlebodies")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InvariantMode {
    /// One labeling: the labels in the file, or `--omega`.
    Refined,
    /// Sum over every labeling satisfying the cocycle condition.
    Unrefined,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Evaluation {
    /// Rewrite beads in `U` and use the integral of `U`.
    Graded,
    /// Use the integral of the ribbon extension.
    Full,
}

impl Evaluation {
    fn mode(self) -> Mode {
        match self {
            Evaluation::Graded => Mode::GradedInU,
            Evaluation::Full => Mode::FullTilde,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Computes the refined or unrefined invariant of a diagram.
    Invariant {
        /// Diagram file, or `corpus:NAME` for a built-in diagram.
        file: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_enum, default_value_t = VariantChoice::Restricted)]
        variant: VariantChoice,
        #[arg(long, value_enum, default_value_t = InvariantMode::Refined)]
        mode: InvariantMode,
        /// Label vector over Z2, such as `1,0`, replacing the labels in the file.
        #[arg(long)]
        omega: Option<String>,
        #[arg(long, value_enum, default_value_t = Evaluation::Graded)]
        evaluation: Evaluation,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Computes the invariant of the boundary with a spin structure or cohomology class.
    Boundary {
        /// Diagram file, or `corpus:NAME`; dotted circles are traded first.
        file: String,
        #[arg(long, default_value_t = 4)]
        p: u32,
        /// Sublink of the traded link describing the structure.
        #[arg(long)]
        omega: String,
        /// Kind of structure; it must match `p` modulo 4.
        #[arg(long, value_enum)]
        mode: Option<StructureKind>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Checks the decomposition formulas on a diagram.
    Decompose {
        /// Diagram file, or `corpus:NAME`.
        file: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Checks how the invariant scales when the integral is rescaled.
    RescaleCheck {
        /// Diagram file, or `corpus:NAME`.
        file: String,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_enum, default_value_t = VariantChoice::Restricted)]
        variant: VariantChoice,
        /// Rescaling factors (`-1`, `i`, `i^k`, `z^k`); defaults to -1, i and i^(p-1).
        #[arg(long, allow_hyphen_values = true)]
        xi: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Runs the verification suite.
    Verify {
        /// Values of p; defaults to 2.
        #[arg(long)]
        p: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Trades every dotted circle for a 0-framed circle and prints the link.
    Trade {
        /// Diagram file, or `corpus:NAME`.
        file: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn read_diagram(file: &str) -> Result<GKirbyDiagram, CliError> {
    if let Some(name) = file.strip_prefix("corpus:") {
        let text = corpus::source(name).ok_or_else(|| CliError::Io { path: file.into(), message: "no such corpus diagram".into() })?;
        return Ok(parse(text)?);
    }
    let text = std::fs::read_to_string(file).map_err(|e| CliError::Io { path: file.into(), message: e.to_string() })?;
    Ok(parse(&text)?)
}

fn sigma(d: &GKirbyDiagram) -> i64 {
    linking_matrix(&trade_handles(d).link).signature()
}

fn describe(d: &GKirbyDiagram) -> String {
    format!("{} components, {} dotted circles, {} crossings", d.component_count(), d.dotted_count(), d.crossing_count())
}

#[derive(Serialize)]
struct ReportOutput<'a> {
    p: Vec<u32>,
    passed: bool,
    checks: &'a Report,
}

/// Writes to standard output; a closed pipe ends the output quietly.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
        }
    }
}

fn print_report(p: Vec<u32>, report: &Report, format: Format) -> bool {
    match format {
        Format::Json => {
            let out = ReportOutput { p, passed: report.passed(), checks: report };
            emit(&format!("{}\n", serde_json::to_string_pretty(&out).expect("plain data serializes")));
        }
        Format::Text => emit(&report.to_text()),
    }
    report.passed()
}

fn print_value(out: &InvariantOutput, format: Format) {
    match format {
        Format::Json => emit(&format!("{}\n", out.to_json())),
        Format::Text => emit(&out.to_text()),
    }
}

fn run(command: Command) -> Result<bool, CliError> {
    match command {
        Command::Invariant { file, p, variant, mode, omega, evaluation, format } => {
            let d = read_diagram(&file)?;
            let calc = Calculator::new(variant, p, evaluation.mode())?;
            let mut diagnostics = vec![describe(&d)];
            let (value, omega, mode_name) = match mode {
                InvariantMode::Refined => {
                    let omega = match omega {
                        Some(text) => parse_omega(&text)?,
                        None => d.label_residues(),
                    };
                    (calc.refined_at(&d, &omega)?, Some(omega), "refined")
                }
                InvariantMode::Unrefined => {
                    if omega.is_some() {
                        return Err(CliError::Unsupported("--omega applies to the refined invariant only".into()));
                    }
                    diagnostics.push(format!("{} labelings summed", calc.labelings(&d)?.len()));
                    (calc.unrefined(&d)?, None, "unrefined")
                }
            };
            let out = InvariantOutput {
                p,
                variant: variant.name().into(),
                mode: mode_name.into(),
                omega,
                value_exact: value.to_string(),
                value_approx: approx(&value),
                sigma: sigma(&d),
                chi: d.euler_characteristic(),
                diagnostics,
            };
            print_value(&out, format);
            Ok(true)
        }
        Command::Boundary { file, p, omega, mode, format } => {
            let d = read_diagram(&file)?;
            let calc = Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU)?;
            let omega = parse_omega(&omega)?;
            let b = boundary_invariant(&calc, &d, &omega, mode)?;
            let mode = match b.kind {
                StructureKind::Spin => "boundary-spin",
                StructureKind::Cohomological => "boundary-coh",
            };
            let out = InvariantOutput {
                p,
                variant: "restricted".into(),
                mode: mode.into(),
                omega: Some(b.omega),
                value_exact: b.value.to_string(),
                value_approx: approx(&b.value),
                sigma: b.sigma,
                chi: d.euler_characteristic(),
                diagnostics: vec![describe(&d)],
            };
            print_value(&out, format);
            Ok(true)
        }
        Command::Decompose { file, p, format } => {
            let d = read_diagram(&file)?;
            let calc = Calculator::new(VariantChoice::Restricted, p, Mode::GradedInU)?;
            let report = decomposition_check(&calc, &d, &file)?;
            Ok(print_report(vec![p], &report, format))
        }
        Command::RescaleCheck { file, p, variant, xi, format } => {
            let d = read_diagram(&file)?;
            let calc = Calculator::new(variant, p, Mode::GradedInU)?;
            let factors = if xi.is_empty() {
                rescale::default_factors(&calc)
            } else {
                xi.iter().map(|t| Ok((t.clone(), parse_scalar(&calc, t)?))).collect::<Result<_, CliError>>()?
            };
            let mut report = Report::new();
            for (name, x) in factors {
                report.extend(rescale_check(&calc, &d, &file, &x, &name)?);
            }
            Ok(print_report(vec![p], &report, format))
        }
        Command::Verify { p, format } => {
            let ps = if p.is_empty() { vec![2] } else { p };
            let mut report = Report::new();
            for &p in &ps {
                if p < 2 {
                    return Err(CliError::Unsupported(format!("p = {p}; p must be at least 2")));
                }
                report.extend(verify_suite(p));
            }
            Ok(print_report(ps, &report, format))
        }
        Command::Trade { file, format } => {
            let d = read_diagram(&file)?;
            let traded = trade_handles(&d);
            #[derive(Serialize)]
            struct TradeOutput {
                link: String,
                kept: Vec<usize>,
                fresh: Vec<usize>,
                sigma: i64,
                chi: i64,
            }
            let out = TradeOutput {
                link: traded.link.render(),
                kept: traded.kept,
                fresh: traded.fresh,
                sigma: linking_matrix(&traded.link).signature(),
                chi: d.euler_characteristic(),
            };
            match format {
                Format::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&out).expect("plain data serializes"))),
                Format::Text => {
                    let mut text = out.link.clone();
                    if !text.ends_with('\n') {
                        text.push('\n');
                    }
                    text += &format!("# kept components: {:?}\n", out.kept.iter().map(|i| i + 1).collect::<Vec<_>>());
                    text += &format!("# traded circles: {:?}\n", out.fresh.iter().map(|i| i + 1).collect::<Vec<_>>());
                    emit(&text);
                }
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
