//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a verified negative result (rejected
//! certificate, no representing code, failed probe), `2` usage or input error.

use std::fmt::Display;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::exec::Strategy;
use crate::files;
use crate::frame::{diag_refute, negfp, FrameError};
use crate::hilbert::{check, conclusion, deduction, synth, CheckOutcome, Context, Proof, Witness};
use crate::obstruction::{diagonal_collapse, profile, LemChoice, ObstructionError};
use crate::regulator::{mp_closure, probe, soundness_with, Derivation, Property, Side};
use crate::semantics::truth;
use crate::syntax::{parse, Formula};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "aporetic",
    version,
    about = "Closure-predicate kernel for the closed bot/-> fragment"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a formula in canonical form
    Parse { formula: String },
    /// Truth value of a closed formula
    Eval { formula: String },
    /// Check a proof certificate against a goal
    Check {
        proof: PathBuf,
        #[arg(long)]
        theory: Option<PathBuf>,
        #[arg(long)]
        context: Option<PathBuf>,
        #[arg(long)]
        goal: String,
    },
    /// Synthesise a proof or refutation
    Synth {
        formula: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Discharge the last hypothesis of a proof
    Deduce {
        proof: PathBuf,
        #[arg(long)]
        context: PathBuf,
        #[arg(long)]
        theory: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Saturate a base under modus ponens
    Closure { base: PathBuf },
    /// Search a frame for a negation fixed point
    Negfp {
        #[arg(long)]
        frame: PathBuf,
    },
    /// Diagonal collapse to bot
    Collapse {
        #[arg(long)]
        frame: PathBuf,
        /// left | right | classifier:<spec>
        #[arg(long)]
        branch: String,
    },
    /// Refute representation of x -> ~eval(x, x) code by code
    DiagCheck {
        #[arg(long)]
        frame: PathBuf,
        #[arg(long)]
        max_codes: usize,
        #[arg(long, default_value = "taut")]
        classifier: String,
        /// Fragment size for the precondition probes
        #[arg(long, default_value_t = 7)]
        probe_bound: usize,
    },
    /// Probe a structural property on a bounded fragment
    Probe {
        /// mp | cons | lem | dec | ref
        property: String,
        #[arg(long)]
        regulator: String,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        classifier: Option<String>,
    },
    /// Obstruction verdicts for every frame in a configuration
    Profile {
        #[arg(long)]
        config: PathBuf,
    },
}

struct Failure(i32, String);

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{}", rendered.lines().next().unwrap_or("usage error"));
                let _ = writeln!(err);
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

fn formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| Failure(EXIT_USAGE, format!("`{text}`: {e}")))
}

fn load_proof(path: &Path) -> Result<Proof, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    text.parse::<Proof>()
        .map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Parse { formula: text } => {
            writeln!(out, "{}", formula(&text)?)?;
            Ok(EXIT_OK)
        }
        Command::Eval { formula: text } => {
            writeln!(out, "{}", truth(&formula(&text)?))?;
            Ok(EXIT_OK)
        }
        Command::Check {
            proof,
            theory,
            context,
            goal,
        } => {
            let p = load_proof(&proof)?;
            let th = theory.map(|t| files::load_theory(&t)).transpose()?.unwrap_or_default();
            let ctx = context
                .map(|c| files::load_context(&c))
                .transpose()?
                .unwrap_or_default();
            let outcome = check(&p, &th, &ctx, &formula(&goal)?);
            writeln!(out, "{outcome}")?;
            Ok(if matches!(outcome, CheckOutcome::Accept) {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Synth {
            formula: text,
            out: target,
        } => {
            let a = formula(&text)?;
            let main = match synth(&a) {
                Witness::Pos(p) => {
                    writeln!(out, "positive\nproof={p}")?;
                    p
                }
                Witness::Neg { refutation, embedding } => {
                    writeln!(out, "negative\nrefutation={refutation}\nembedding={embedding}")?;
                    refutation
                }
            };
            if let Some(path) = target {
                write_file(&path, &format!("{main}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Deduce {
            proof,
            context,
            theory,
            out: target,
        } => {
            let p = load_proof(&proof)?;
            let ctx = files::load_context(&context)?;
            let th = theory.map(|t| files::load_theory(&t)).transpose()?.unwrap_or_default();
            let d = deduction(&p, &th, &ctx)?;
            let rest = ctx.discharge().map(|(rest, _)| rest).unwrap_or_else(Context::empty);
            let c = conclusion(&d, &th, &rest)?;
            writeln!(out, "conclusion={c}\nproof={d}")?;
            if let Some(path) = target {
                write_file(&path, &format!("{d}\n"))?;
            }
            Ok(EXIT_OK)
        }
        Command::Closure { base } => {
            let set = mp_closure(&files::load_formulas(&base)?);
            for (i, (m, t)) in set.members().iter().zip(set.traces()).enumerate() {
                match t {
                    Derivation::Base => writeln!(out, "{i} base {m}")?,
                    Derivation::Mp { major, minor } => writeln!(out, "{i} mp {major} {minor} {m}")?,
                }
            }
            writeln!(out, "members={}", set.len())?;
            Ok(EXIT_OK)
        }
        Command::Negfp { frame } => {
            let fr = files::load_frame(&frame)?;
            match negfp(&fr) {
                Ok(cert) => {
                    writeln!(out, "{cert}")?;
                    Ok(EXIT_OK)
                }
                Err(FrameError::NoCode { failures, .. }) => {
                    for (c, x) in failures {
                        writeln!(out, "code={c} fails_at={x}")?;
                    }
                    writeln!(out, "eval: no code")?;
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Collapse { frame, branch } => {
            let fr = files::load_frame(&frame)?;
            let choice = match branch.as_str() {
                "left" => LemChoice::Always(Side::Left),
                "right" => LemChoice::Always(Side::Right),
                other => match other.strip_prefix("classifier:") {
                    Some(spec) => LemChoice::Classifier(files::classifier_from_spec(spec)?),
                    None => return Err(Failure(EXIT_USAGE, format!("unknown branch `{other}`"))),
                },
            };
            match diagonal_collapse(&fr, &choice) {
                Ok(cert) => {
                    writeln!(out, "{cert}")?;
                    Ok(EXIT_OK)
                }
                Err(e @ (ObstructionError::Probe(_) | ObstructionError::RegulatorMismatch { .. })) => Err(e.into()),
                Err(e) => {
                    writeln!(out, "collapse: blocked: {e}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::DiagCheck {
            frame,
            max_codes,
            classifier,
            probe_bound,
        } => {
            let fr = files::load_frame(&frame)?.with_code_bound(max_codes);
            let d = files::classifier_from_spec(&classifier)?;
            let report = diag_refute(&fr, &d, probe_bound)?;
            writeln!(out, "{report}")?;
            Ok(if report.refuted() { EXIT_NEGATIVE } else { EXIT_OK })
        }
        Command::Probe {
            property,
            regulator,
            max_size,
            classifier,
        } => {
            let prop: Property = property.parse().map_err(|e: String| Failure(EXIT_USAGE, e))?;
            let r = files::regulator_from_spec(&regulator)?;
            let report = match (prop, classifier) {
                (Property::Dec | Property::Ref, Some(spec)) => soundness_with(
                    Strategy::default(),
                    prop,
                    &files::classifier_from_spec(&spec)?,
                    &r,
                    max_size,
                )?,
                (Property::Ref, None) => soundness_with(
                    Strategy::default(),
                    prop,
                    &crate::regulator::refutation_trivial(),
                    &r,
                    max_size,
                )?,
                (_, Some(_)) if prop != Property::Dec => {
                    return Err(Failure(
                        EXIT_USAGE,
                        format!("--classifier does not apply to `{property}`"),
                    ))
                }
                _ => probe(&r, prop, max_size)?,
            };
            writeln!(out, "{report}")?;
            Ok(if report.holds() { EXIT_OK } else { EXIT_NEGATIVE })
        }
        Command::Profile { config } => {
            let (bound, frames) = files::load_profile_config(&config)?;
            let p = profile(&frames, bound)?;
            writeln!(out, "{p}")?;
            Ok(EXIT_OK)
        }
    }
}
