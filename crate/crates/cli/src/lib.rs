//! Command-line reports for fsind-core: structure, characters, indicators and a full
//! verification run.

pub mod error;
pub mod report;
pub mod verify;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use fsind_core::group_indicators::{nu_group_bruteforce_with, nu_group_closed, PowerTables};
use fsind_core::{DoubleGroup, Group, GroupParams, IndicatorPath, Structure};

pub use error::CliError;
pub use report::{Format, Report, Section};
pub use verify::{cmd_verify, render_verification, Status, VerificationReport};

use report::{character_rows, class_rows, IndicatorRow, LabelRef, ParamsOut};

#[derive(Debug, Parser)]
#[command(name = "fsind", version, about = "Frobenius-Schur indicators for Z_{2^l} x| D_k and its Drinfeld double")]
pub struct Cli {
    /// Exponent of the cyclic part Z_{2^l} (at least 3).
    #[arg(long, global = true, env = "FSIND_L")]
    pub l: Option<u32>,
    /// Order parameter of the dihedral part (a positive multiple of 4).
    #[arg(long, global = true, env = "FSIND_K")]
    pub k: Option<u32>,
    /// Largest m to evaluate; defaults to twice the group exponent.
    #[arg(long, global = true, env = "FSIND_MAX_M")]
    pub max_m: Option<u64>,
    #[arg(long, global = true, env = "FSIND_FORMAT", value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Allowed orthogonality defect of the character tables.
    #[arg(long, global = true, env = "FSIND_TOLERANCE", default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Seed for the randomized checks.
    #[arg(long, global = true, env = "FSIND_SEED", default_value_t = 0)]
    pub seed: u64,
    /// Write to this file instead of stdout.
    #[arg(long, global = true, env = "FSIND_OUT")]
    pub out: Option<PathBuf>,
    /// Include per-check wall-clock times (makes output run-dependent).
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Group,
    Double,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes, center and centralizers.
    Structure,
    /// Irreducible characters of G and of every centralizer.
    Characters,
    /// Indicator values from every computation path.
    Indicators {
        #[arg(long, value_enum, default_value_t = Target::Double)]
        target: Target,
    },
    /// Run every check and report per-claim verdicts.
    Verify {
        /// Shift n2 by 2 before building the group (negative control).
        #[arg(long)]
        inject_fault: bool,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub l: u32,
    pub k: u32,
    pub max_m: Option<u64>,
    pub format: Format,
    pub tolerance: f64,
    pub seed: u64,
    pub timings: bool,
}

impl RunConfig {
    pub fn new(l: u32, k: u32) -> Self {
        RunConfig { l, k, max_m: None, format: Format::Text, tolerance: 1e-9, seed: 0, timings: false }
    }

    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let (Some(l), Some(k)) = (cli.l, cli.k) else {
            return Err(CliError::Usage("both --l and --k are required".into()));
        };
        let config = RunConfig {
            l,
            k,
            max_m: cli.max_m,
            format: cli.format,
            tolerance: cli.tolerance,
            seed: cli.seed,
            timings: cli.timings,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        GroupParams::new(self.l, self.k)?;
        if self.max_m == Some(0) {
            return Err(CliError::Usage("--max-m must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 || self.tolerance.is_infinite() {
            return Err(CliError::Usage("--tolerance must be a positive number".into()));
        }
        Ok(())
    }

    pub fn group(&self) -> Result<Group, CliError> {
        Ok(Group::build(self.l, self.k)?)
    }

    pub fn max_m_for(&self, group: &Group) -> Result<u64, CliError> {
        match self.max_m {
            Some(m) => Ok(m),
            None => Ok(2 * group.exponent()?),
        }
    }
}

pub fn cmd_structure(config: &RunConfig) -> Result<Report, CliError> {
    let group = config.group()?;
    let structure = Structure::build(&group)?;
    let mut report = Report::new(ParamsOut::new(&group, config.max_m_for(&group)?)?);
    report.classes = class_rows(&group, &structure);
    Ok(report)
}

pub fn cmd_characters(config: &RunConfig) -> Result<Report, CliError> {
    let group = config.group()?;
    let max_m = config.max_m_for(&group)?;
    let double = DoubleGroup::build(group)?;
    let mut report = Report::new(ParamsOut::new(double.group(), max_m)?);
    report.classes = class_rows(double.group(), double.structure());
    report.characters = character_rows(&double);
    Ok(report)
}

/// One row per character (or simple module) per m. Disagreements are kept as rows with
/// `agree = false`; the caller decides the exit status.
pub fn cmd_indicators(config: &RunConfig, target: Target) -> Result<Report, CliError> {
    let group = config.group()?;
    let max_m = config.max_m_for(&group)?;
    let double = DoubleGroup::build(group)?;
    let group = double.group();
    let mut report = Report::new(ParamsOut::new(group, max_m)?);
    match target {
        Target::Group => {
            let tables = PowerTables::new(group, max_m);
            let rep = group.identity().to_string();
            for (e, (chi, label)) in double.g_table().irreducibles.iter().zip(&double.g_table().labels).enumerate() {
                for m in 1..=max_m {
                    let powers = tables.get(m).expect("m ≤ max_m");
                    let mut value = nu_group_bruteforce_with(chi, m, powers)?;
                    let closed = nu_group_closed(group.params(), label, m)?;
                    value.paths.insert(IndicatorPath::ClosedForm, closed);
                    report.indicators.push(IndicatorRow {
                        target: "group".into(),
                        label: LabelRef { class_rep: rep.clone(), eta_id: e },
                        m,
                        value: value.rounded,
                        agree: value.agree(),
                        paths: value.paths.iter().map(|(p, v)| (p.to_string(), *v)).collect(),
                    });
                }
            }
        }
        Target::Double => {
            let ms: Vec<u64> = (1..=max_m).collect();
            for row in double.sweep(&ms)? {
                report.indicators.push(IndicatorRow {
                    target: "double".into(),
                    label: LabelRef {
                        class_rep: double.class(&row.label).representative.to_string(),
                        eta_id: row.label.eta_index,
                    },
                    m: row.value.m,
                    value: row.value.rounded,
                    agree: row.agree(),
                    paths: row.value.paths.iter().map(|(p, v)| (p.to_string(), *v)).collect(),
                });
            }
        }
    }
    Ok(report)
}

/// Parses, runs and writes; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match execute(&cli) {
        Ok((text, code)) => match write_output(&cli, &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("fsind: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("fsind: {e}");
            e.exit_code()
        }
    }
}

/// Rendered output and exit code for a parsed command line.
pub fn execute(cli: &Cli) -> Result<(String, i32), CliError> {
    let config = RunConfig::from_cli(cli)?;
    match cli.command {
        Command::Structure => {
            let report = cmd_structure(&config)?;
            Ok((report::render(&report, config.format, Section::Classes)?, 0))
        }
        Command::Characters => {
            let report = cmd_characters(&config)?;
            Ok((report::render(&report, config.format, Section::Characters)?, 0))
        }
        Command::Indicators { target } => {
            let report = cmd_indicators(&config, target)?;
            let code = if report.disagreements() == 0 { 0 } else { 1 };
            Ok((report::render(&report, config.format, Section::Indicators)?, code))
        }
        Command::Verify { inject_fault } => {
            let report = cmd_verify(&config, inject_fault)?;
            let code = if report.passed { 0 } else { 1 };
            Ok((render_verification(&report, config.format)?, code))
        }
    }
}

fn write_output(cli: &Cli, text: &str) -> Result<(), CliError> {
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
