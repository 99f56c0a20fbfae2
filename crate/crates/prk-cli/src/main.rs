//! `prk`: command-line front end for the prk workbench.
//!
//! Exit status 0 means success (valid, provable, well-typed), 1 a
//! well-formed negative answer, 2 a usage or parse error.

mod output;

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

use prk::classical::{decide_oplus, embed_nk, nk_context, parse_nk, ClassicalError, NKParseError};
use prk::kripke::{countermodel_search, forces, KripkeError, KripkeModel};
use prk::rewrite::{classify, normalize, Calculus, Canonicity, ClassicalShape, RewriteError, StrongShape};
use prk::syntax::{parse_judgment, parse_mprop, parse_sequent, Judgment, MProp, Mode, Sequent};
use prk::systemf::{f_infer, ftype_equiv, translate_context, translate_prop, translate_term};
use prk::typing::type_of;

use output::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "prk", version, about = "Proof terms, rewriting and models for the logic PRK")]
struct Cli {
    /// Human-readable text or line-oriented key=value output.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type-check a judgment file and print the conclusion.
    Check { file: PathBuf },
    /// Normalize the term of a judgment file.
    Normalize {
        /// Include the eta rule.
        #[arg(long)]
        eta: bool,
        /// Print every contraction.
        #[arg(long)]
        trace: bool,
        /// Maximum number of steps.
        #[arg(long, default_value_t = 100_000)]
        fuel: usize,
        file: PathBuf,
    },
    /// Report the normal, neutral and canonical status of a term.
    Classify { file: PathBuf },
    /// Translate a typed term into System F.
    Translate { file: PathBuf },
    /// Kripke model operations.
    Kripke {
        #[command(subcommand)]
        command: KripkeCommand,
    },
    /// Decide a sequent whose formulas are all affirmed classically.
    Decide {
        /// `P1, ..., Pn |- Q`, or a file containing it.
        sequent: String,
    },
    /// Embed a natural-deduction proof and print the resulting judgment.
    Embed { file: PathBuf },
    /// Print the dual of a judgment.
    Dual { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum KripkeCommand {
    /// Does a world force a proposition?
    Eval { model: PathBuf, world: String, prop: String },
    /// Check the partial-order, monotonicity and stabilization conditions.
    Validate { model: PathBuf },
    /// Search small models for a world forcing the hypotheses but not the goal.
    Countermodel {
        /// A sequent, a file containing one, or a judgment file with an expected type.
        judgment: String,
        #[arg(long, default_value_t = 3)]
        max_worlds: usize,
    },
}

/// Failures that end in exit status 2.
#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
    #[error(transparent)]
    Model(#[from] KripkeError),
    #[error("{0}")]
    Refused(String),
}

struct Outcome {
    report: Report,
    positive: bool,
}

impl Outcome {
    fn yes(report: Report) -> Outcome {
        Outcome { report, positive: true }
    }

    fn no(report: Report) -> Outcome {
        Outcome { report, positive: false }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn judgment(path: &Path) -> Result<Judgment, CliError> {
    let src = read(path)?;
    parse_judgment(&src).map_err(|e| CliError::Parse { path: path.display().to_string(), message: e.to_string() })
}

/// A literal sequent, or the contents of the file it names.
fn sequent(arg: &str) -> Result<Sequent, CliError> {
    let path = Path::new(arg);
    if !path.is_file() {
        return parse_sequent(arg).map_err(|e| CliError::Parse { path: "<argument>".into(), message: e.to_string() });
    }
    let src = read(path)?;
    if let Ok(s) = parse_sequent(&src) {
        return Ok(s);
    }
    let j = judgment(path)?;
    let goal = j.expected.ok_or_else(|| CliError::Refused(format!("{arg}: the judgment has no expected type")))?;
    Ok(Sequent { hyps: j.context.iter().map(|(_, p)| p.clone()).collect(), goal })
}

fn model(path: &Path) -> Result<KripkeModel, CliError> {
    Ok(KripkeModel::from_toml(&read(path)?)?)
}

fn canonicity_text(c: Option<Canonicity>) -> String {
    let Some(c) = c else { return "untyped".into() };
    let shape = match c {
        Canonicity::Closed { canonical: true } => "closed, canonical",
        Canonicity::Closed { canonical: false } => "closed, not canonical",
        Canonicity::ClassicalStrong(StrongShape::Canonical) => "classical context, strong type, canonical",
        Canonicity::ClassicalStrong(StrongShape::CaseOverOpenExplosion) => {
            "classical context, strong type, case over an open explosion"
        }
        Canonicity::ClassicalStrong(StrongShape::Other) => "classical context, strong type, unexpected shape",
        Canonicity::ClassicalClassical(ClassicalShape::ClassicalLambda) => {
            "classical context, classical type, classical lambda"
        }
        Canonicity::ClassicalClassical(ClassicalShape::ElimOverVariable) => {
            "classical context, classical type, eliminations over a variable"
        }
        Canonicity::ClassicalClassical(ClassicalShape::ElimOverOpenExplosion) => {
            "classical context, classical type, eliminations over an open explosion"
        }
        Canonicity::ClassicalClassical(ClassicalShape::Other) => "classical context, classical type, unexpected shape",
        Canonicity::NotApplicable => "strong assumption in context, no clause applies",
    };
    shape.into()
}

fn run(command: Command, format: Format) -> Result<Outcome, CliError> {
    let mut r = Report::default();
    match command {
        Command::Check { file } => {
            let j = judgment(&file)?;
            match type_of(&j.context, &j.term, j.expected.as_ref()) {
                Ok(d) => {
                    r.value("type", &d.conclusion);
                    Ok(Outcome::yes(r))
                }
                Err(e) => {
                    r.labelled("error", "ill-typed", e);
                    Ok(Outcome::no(r))
                }
            }
        }
        Command::Normalize { eta, trace, fuel, file } => {
            let j = judgment(&file)?;
            if let Err(e) = type_of(&j.context, &j.term, j.expected.as_ref()) {
                r.labelled("error", "ill-typed", e);
                return Ok(Outcome::no(r));
            }
            let calc = if eta { Calculus::Eta } else { Calculus::Plain };
            match normalize(&j.term, calc, fuel) {
                Ok((nf, tr)) => {
                    if trace {
                        for s in &tr.steps {
                            r.labelled("step", "step", s);
                        }
                        r.labelled("steps", "steps", tr.len());
                    }
                    r.value("normal_form", nf);
                    Ok(Outcome::yes(r))
                }
                Err(RewriteError::FuelExhausted { steps, last }) => {
                    r.labelled("error", "fuel exhausted", format!("after {steps} steps"));
                    r.labelled("last", "last term", last);
                    Ok(Outcome::no(r))
                }
            }
        }
        Command::Classify { file } => {
            let j = judgment(&file)?;
            let d = type_of(&j.context, &j.term, j.expected.as_ref()).ok();
            let rep = classify(&j.term, d.as_ref()).expect("derivation is for this term");
            if let Some(d) = &d {
                r.labelled("type", "type", &d.conclusion);
            }
            r.labelled("normal", "normal", rep.normal)
                .labelled("neutral", "neutral", rep.neutral)
                .labelled("canonical", "canonical", rep.canonical)
                .labelled("canonicity", "canonicity", canonicity_text(rep.canonicity));
            if let Some(c) = rep.canonicity {
                r.labelled("canonicity_holds", "canonicity holds", c.holds());
            }
            Ok(Outcome::yes(r))
        }
        Command::Translate { file } => {
            let j = judgment(&file)?;
            let d = match type_of(&j.context, &j.term, j.expected.as_ref()) {
                Ok(d) => d,
                Err(e) => {
                    r.labelled("error", "ill-typed", e);
                    return Ok(Outcome::no(r));
                }
            };
            let ft = translate_term(&d).map_err(|e| CliError::Refused(e.to_string()))?;
            let want = translate_prop(&d.conclusion);
            r.value("term", &ft).labelled("type", "type", &want);
            match f_infer(&translate_context(&d.context), &ft) {
                Ok(ty) => {
                    let agree = ftype_equiv(&ty, &want);
                    r.labelled("inferred", "inferred", ty).labelled("equivalent", "equivalent to the type", agree);
                    Ok(Outcome { report: r, positive: agree })
                }
                Err(e) => {
                    r.labelled("error", "System F type error", e);
                    Ok(Outcome::no(r))
                }
            }
        }
        Command::Kripke { command } => kripke(command, r),
        Command::Decide { sequent: s } => {
            let s = sequent(&s)?;
            match decide_oplus(&s.hyps, &s.goal) {
                Ok(valid) => {
                    r.worded("valid", if valid { "valid" } else { "invalid" }, valid);
                    Ok(Outcome { report: r, positive: valid })
                }
                Err(ClassicalError::WrongMode(p)) => Err(CliError::Refused(format!(
                    "only sequents whose formulas all have mode ^c+ are decided; `{p}` does not"
                ))),
                Err(e) => Err(CliError::Refused(e.to_string())),
            }
        }
        Command::Embed { file } => {
            let src = read(&file)?;
            let proof = match parse_nk(&src) {
                Ok(p) => p,
                Err(NKParseError::Syntax(e)) => {
                    return Err(CliError::Parse { path: file.display().to_string(), message: e.to_string() })
                }
                Err(NKParseError::Invalid(e)) => {
                    r.labelled("error", "invalid proof", e);
                    return Ok(Outcome::no(r));
                }
            };
            let term = match embed_nk(&proof) {
                Ok(t) => t,
                Err(e) => {
                    r.labelled("error", "invalid proof", e);
                    return Ok(Outcome::no(r));
                }
            };
            let context = nk_context(&proof.hyps);
            let goal = MProp::new(proof.conclusion.clone(), Mode::CLASSICAL_POS);
            let d = type_of(&context, &term, Some(&goal))
                .map_err(|e| CliError::Refused(format!("embedding is ill-typed: {e}")))?;
            // plain output is itself a judgment file `prk check` accepts
            if format == Format::Machine {
                for (x, p) in context.iter() {
                    r.value("hyp", format!("{x} : {p}"));
                }
                r.value("term", &term).value("type", &d.conclusion);
            } else {
                r.value("judgment", Judgment { context, term, expected: Some(d.conclusion) });
            }
            Ok(Outcome::yes(r))
        }
        Command::Dual { file } => {
            let j = judgment(&file)?;
            let dual =
                Judgment { context: j.context.dual(), term: j.term.dual(), expected: j.expected.map(|p| p.dual()) };
            r.value("judgment", dual);
            Ok(Outcome::yes(r))
        }
    }
}

fn kripke(command: KripkeCommand, mut r: Report) -> Result<Outcome, CliError> {
    match command {
        KripkeCommand::Eval { model: path, world, prop } => {
            let m = model(&path)?;
            let p = parse_mprop(&prop)
                .map_err(|e| CliError::Parse { path: "<argument>".into(), message: e.to_string() })?;
            r.value("forces", forces(&m, &world, &p)?);
            Ok(Outcome::yes(r))
        }
        KripkeCommand::Validate { model: path } => {
            let report = model(&path)?.validate();
            r.worded("valid", if report.is_valid() { "valid" } else { "invalid" }, report.is_valid());
            for v in &report.violations {
                r.labelled("violation", "violation", v);
            }
            Ok(Outcome { report: r, positive: report.is_valid() })
        }
        KripkeCommand::Countermodel { judgment, max_worlds } => {
            let s = sequent(&judgment)?;
            match countermodel_search(&s.hyps, &s.goal, max_worlds) {
                Some((m, w)) => {
                    r.worded("countermodel", "countermodel found", true).labelled("world", "world", w).worded(
                        "model",
                        m.to_toml().trim_end(),
                        m.to_toml(),
                    );
                    Ok(Outcome::no(r))
                }
                None => {
                    r.worded("countermodel", &format!("no countermodel with at most {max_worlds} worlds"), false)
                        .worded("max_worlds", "(larger models were not searched)", max_worlds);
                    Ok(Outcome::yes(r))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, cli.format) {
        Ok(o) => {
            print!("{}", o.report.render(cli.format));
            ExitCode::from(if o.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
