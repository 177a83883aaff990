//! The `insider` command line. Exit status: 0 when the checked property
//! holds (or the command succeeded), 1 when it fails, 2 on any usage, input
//! or evaluation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use insider_core::airplane::{build_airplane_model, ScenarioVariant};
use insider_core::door::door_run;
use insider_core::risk::{risk_compare, RiskInputs};
use insider_core::{
    check, extract_trace, reachable, CtlFormula, ExploreOptions, FoeControl, KripkeModel, Model, Trace, TraceMode,
};

use crate::dot::{state_summary, write_dot};
use crate::{door_script, formula, json, model_file};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "insider",
    version,
    about = "Explicit-state CTL checking of insider threat models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct ModelArgs {
    /// Model file
    model: PathBuf,
    /// Policy variant to activate (defaults to the file's `variant`)
    #[arg(long)]
    variant: Option<String>,
    /// Extra assumption `foe:LOC:ACTION:ID`; repeatable
    #[arg(long = "assume", value_name = "foe:LOC:ACTION:ID")]
    assume: Vec<String>,
    /// Abort when more than N states are reachable
    #[arg(long, value_name = "N")]
    max_states: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check that every initial state satisfies a CTL formula
    Check {
        #[command(flatten)]
        model: ModelArgs,
        /// CTL formula, e.g. "AG eve_ok"
        formula: String,
        /// Also print a witness when an `EF` formula holds
        #[arg(long)]
        trace: bool,
    },
    /// Build the reachable state space and print its size
    Reach {
        #[command(flatten)]
        model: ModelArgs,
        /// Write the state space in Graphviz format to FILE
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
    },
    /// Print a shortest path from an initial state for an `EF g` formula
    Witness {
        #[command(flatten)]
        model: ModelArgs,
        formula: String,
    },
    /// Compare the one-person and two-person cockpit rules
    Risk {
        /// Probability that a single pilot is an insider
        #[arg(long)]
        p0: f64,
        /// Probability of an outside attack under the one-person rule
        #[arg(long)]
        p1: f64,
        /// Probability of an outside attack under the two-person rule
        #[arg(long)]
        p2: f64,
    },
    /// Run a cockpit door event script and print the trace as TSV
    DoorSim { script: PathBuf },
    /// Built-in scenarios
    Scenario {
        #[command(subcommand)]
        command: ScenarioCommand,
    },
}

#[derive(Debug, Subcommand)]
enum ScenarioCommand {
    /// Print the built-in airplane model
    Export {
        #[arg(value_parser = parse_variant)]
        variant: ScenarioVariant,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_variant(s: &str) -> Result<ScenarioVariant, String> {
    s.parse()
        .map_err(|_| format!("unknown scenario variant `{s}` (expected baseline or four_eyes)"))
}

/// A failure to report on the error stream with exit status 2.
struct Failure(String);

impl<T: std::fmt::Display> From<T> for Failure {
    fn from(e: T) -> Self {
        Failure(e.to_string())
    }
}

/// Runs the command line `args` (program name first), writing results to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_ERROR
            } else {
                let _ = write!(out, "{text}");
                EXIT_HOLDS
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn parse_assumption(s: &str, m: &Model) -> Result<FoeControl, Failure> {
    let bad = || Failure(format!("assumption `{s}` is not of the form foe:LOC:ACTION:ID"));
    let parts: Vec<&str> = s.split(':').collect();
    let ["foe", loc, act, who] = parts.as_slice() else {
        return Err(bad());
    };
    Ok(FoeControl {
        location: m
            .location_named(loc)
            .ok_or_else(|| Failure(format!("assumption `{s}`: unknown location `{loc}`")))?,
        action: act
            .parse()
            .map_err(|_| Failure(format!("assumption `{s}`: unknown action `{act}`")))?,
        foe: m
            .identity_named(who)
            .ok_or_else(|| Failure(format!("assumption `{s}`: unknown identity `{who}`")))?,
    })
}

fn load(args: &ModelArgs) -> Result<(Model, KripkeModel), Failure> {
    let path = &args.model;
    let text = read(path)?;
    let mut m = model_file::parse_model(&text).map_err(|d| {
        Failure(
            d.0.iter()
                .map(|d| format!("{}:{d}", path.display()))
                .collect::<Vec<_>>()
                .join("\n"),
        )
    })?;
    if let Some(v) = &args.variant {
        m = m.with_variant(v)?;
    }
    if !args.assume.is_empty() {
        let mut extra = m.assumptions.clone();
        for a in &args.assume {
            extra.push(parse_assumption(a, &m)?);
        }
        m = m.with_assumptions(extra)?;
    }
    let k = reachable(
        &m,
        ExploreOptions {
            max_states: args.max_states,
        },
    )?;
    Ok((m, k))
}

fn parse_formula(text: &str) -> Result<CtlFormula, Failure> {
    formula::parse_formula(text).map_err(|d| Failure(format!("formula: {d}")))
}

/// Writes a trace, one state per line with the transition leading to it.
pub fn write_trace(out: &mut dyn Write, k: &KripkeModel, m: &Model, t: &Trace) -> std::io::Result<()> {
    let reference = &m.initial;
    writeln!(out, "  s{}: {}", t.start, state_summary(m, k.graph(t.start), reference))?;
    for step in &t.steps {
        writeln!(out, "  -- {} -->", step.label.describe(m))?;
        writeln!(
            out,
            "  s{}: {}",
            step.target,
            state_summary(m, k.graph(step.target), reference)
        )?;
    }
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Check { model, formula, trace } => {
            let f = parse_formula(&formula)?;
            let (m, k) = load(&model)?;
            let v = check(&k, &f, &m)?;
            writeln!(out, "{}: {f}", if v.holds { "holds" } else { "fails" })?;
            writeln!(out, "states: {}", k.len())?;
            let shown = match (&f, v.holds) {
                (CtlFormula::AG(_), false) => Some(("counterexample", TraceMode::Counterexample)),
                (CtlFormula::EF(_), true) if trace => Some(("witness", TraceMode::Witness)),
                _ => None,
            };
            if let Some((what, mode)) = shown {
                let t = extract_trace(&k, &f, &m, mode)?;
                writeln!(out, "{what} ({} steps):", t.len())?;
                write_trace(out, &k, &m, &t)?;
            }
            Ok(if v.holds { EXIT_HOLDS } else { EXIT_FAILS })
        }
        Command::Reach { model, dot } => {
            let (m, k) = load(&model)?;
            writeln!(out, "states: {}", k.len())?;
            writeln!(out, "transitions: {}", k.edge_count())?;
            writeln!(
                out,
                "initial: {}",
                k.init().iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
            )?;
            if let Some(path) = dot {
                std::fs::write(&path, write_dot(&k, &m)).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            }
            Ok(EXIT_HOLDS)
        }
        Command::Witness { model, formula } => {
            let f = parse_formula(&formula)?;
            if !matches!(f, CtlFormula::EF(_)) {
                return Err(Failure(format!(
                    "witness needs a formula of the form `EF g`, got `{f}`"
                )));
            }
            let (m, k) = load(&model)?;
            if !check(&k, &f, &m)?.holds {
                writeln!(out, "fails: {f}")?;
                writeln!(out, "no initial state has a witness")?;
                return Ok(EXIT_FAILS);
            }
            let t = extract_trace(&k, &f, &m, TraceMode::Witness)?;
            writeln!(out, "holds: {f}")?;
            writeln!(out, "witness ({} steps):", t.len())?;
            write_trace(out, &k, &m, &t)?;
            Ok(EXIT_HOLDS)
        }
        Command::Risk { p0, p1, p2 } => {
            let r = risk_compare(RiskInputs { p0, p1, p2 })?;
            writeln!(out, "one_person\t{}", r.one_person)?;
            writeln!(out, "two_person\t{}", r.two_person)?;
            writeln!(out, "recommend\t{}", r.recommend)?;
            Ok(EXIT_HOLDS)
        }
        Command::DoorSim { script } => {
            let text = read(&script)?;
            let events = door_script::parse_script(&text).map_err(|d| {
                Failure(
                    d.0.iter()
                        .map(|d| format!("{}:{d}", script.display()))
                        .collect::<Vec<_>>()
                        .join("\n"),
                )
            })?;
            write!(out, "{}", door_script::write_trace(&door_run(&events)))?;
            Ok(EXIT_HOLDS)
        }
        Command::Scenario {
            command: ScenarioCommand::Export { variant, format },
        } => {
            let m = build_airplane_model(variant);
            match format {
                Format::Text => write!(out, "{}", model_file::write_model(&m))?,
                Format::Json => write!(out, "{}", json::write_json(&m))?,
            }
            Ok(EXIT_HOLDS)
        }
    }
}
