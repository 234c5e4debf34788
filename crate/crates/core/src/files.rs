//! Line-oriented input files: formula lists, frames, classifier tables and
//! profile configurations. Blank lines and `#` comments are ignored
//! everywhere; relative paths inside a file resolve against its directory.
//!
//! Frame file:
//!
//! ```text
//! codebound 10
//! regulator taut                 # total | taut | closure <basefile> | theory <axiomfile>
//! eval constant bot              # or: eval affine <a> <b> <k> <m> <formula>
//! ```
//!
//! or, for a table,
//!
//! ```text
//! eval table
//! 0 0 bot -> bot
//! default bot
//! ```

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::frame::{EvalFrame, EvalRule};
use crate::hilbert::{parse_formula_list, Context, Theory};
use crate::regulator::{Classifier, Regulator, TheoryRegulator};
use crate::semantics::Decision;
use crate::syntax::{parse, Formula};

/// Synthesis bound for `theory:` regulators.
pub const THEORY_SEARCH_BOUND: usize = 8;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}: {msg}")]
    Syntax { path: String, line: usize, msg: String },
    #[error("{0}")]
    Spec(String),
}

fn read(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn relative(base: &Path, target: &str) -> PathBuf {
    let t = Path::new(target);
    if t.is_absolute() {
        t.to_path_buf()
    } else {
        base.parent().unwrap_or(Path::new(".")).join(t)
    }
}

/// Formula-per-line file; surface or s-expression syntax.
pub fn load_formulas(path: &Path) -> Result<Vec<Formula>, FileError> {
    let text = read(path)?;
    parse_formula_list(&text).map_err(|msg| FileError::Syntax {
        path: path.display().to_string(),
        line: 0,
        msg,
    })
}

pub fn load_theory(path: &Path) -> Result<Theory, FileError> {
    Ok(Theory::new(load_formulas(path)?))
}

pub fn load_context(path: &Path) -> Result<Context, FileError> {
    Ok(Context::new(load_formulas(path)?))
}

/// `total`, `taut`, `closure:<basefile>` or `theory:<axiomfile>`.
pub fn regulator_from_spec(spec: &str) -> Result<Regulator, FileError> {
    regulator_from_spec_at(spec, Path::new("."))
}

fn regulator_from_spec_at(spec: &str, origin: &Path) -> Result<Regulator, FileError> {
    let (kind, arg) = match spec.split_once([':', ' ']) {
        Some((k, a)) => (k, Some(a.trim())),
        None => (spec, None),
    };
    match (kind, arg) {
        ("total", None) => Ok(Regulator::Total),
        ("taut", None) => Ok(Regulator::SemanticTaut),
        ("closure", Some(file)) => Ok(Regulator::closure(&load_formulas(&relative(origin, file))?)),
        ("theory", Some(file)) => Ok(Regulator::HilbertTheory(TheoryRegulator::new(
            load_theory(&relative(origin, file))?,
            Context::empty(),
            THEORY_SEARCH_BOUND,
        ))),
        _ => Err(FileError::Spec(format!("unknown regulator `{spec}`"))),
    }
}

/// `taut`, `not-taut`, `const-tt`, `const-ff` or `table:<file>`.
pub fn classifier_from_spec(spec: &str) -> Result<Classifier, FileError> {
    match spec {
        "taut" => Ok(Classifier::Taut),
        "not-taut" => Ok(Classifier::NotTaut),
        "const-tt" => Ok(Classifier::Const(Decision::Tt)),
        "const-ff" => Ok(Classifier::Const(Decision::Ff)),
        _ => match spec.strip_prefix("table:") {
            Some(file) => load_classifier_table(Path::new(file)),
            None => Err(FileError::Spec(format!("unknown classifier `{spec}`"))),
        },
    }
}

fn decision(word: &str) -> Option<Decision> {
    match word {
        "tt" => Some(Decision::Tt),
        "ff" => Some(Decision::Ff),
        _ => None,
    }
}

/// Lines `tt <formula>` / `ff <formula>`, plus an optional `default tt|ff`
/// (`ff` if absent).
pub fn load_classifier_table(path: &Path) -> Result<Classifier, FileError> {
    let text = read(path)?;
    let err = |line, msg: String| FileError::Syntax {
        path: path.display().to_string(),
        line,
        msg,
    };
    let mut entries = BTreeMap::new();
    let mut default = Decision::Ff;
    for (n, line) in lines(&text) {
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        if head == "default" {
            default = decision(rest.trim()).ok_or_else(|| err(n, format!("bad default `{rest}`")))?;
            continue;
        }
        let d = decision(head).ok_or_else(|| err(n, format!("expected tt or ff, found `{head}`")))?;
        let f = parse(rest).map_err(|e| err(n, e.to_string()))?;
        entries.insert(f, d);
    }
    Ok(Classifier::Table { entries, default })
}

type TableRows = BTreeMap<(usize, usize), Formula>;

pub fn load_frame(path: &Path) -> Result<EvalFrame, FileError> {
    let text = read(path)?;
    let err = |line, msg: String| FileError::Syntax {
        path: path.display().to_string(),
        line,
        msg,
    };
    let formula = |line, s: &str| parse(s).map_err(|e| err(line, e.to_string()));

    let mut code_bound = None;
    let mut regulator = None;
    let mut rule = None;
    let mut table: Option<(TableRows, Option<Formula>)> = None;

    for (n, line) in lines(&text) {
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or("");
        let rest = line[head.len()..].trim();
        match head {
            "codebound" => {
                code_bound = Some(
                    rest.parse::<usize>()
                        .map_err(|_| err(n, format!("bad code bound `{rest}`")))?,
                );
            }
            "regulator" => {
                regulator = Some(regulator_from_spec_at(rest, path).map_err(|e| err(n, e.to_string()))?);
            }
            "eval" => {
                let (kind, args) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                match kind {
                    "constant" => rule = Some(EvalRule::Constant(formula(n, args)?)),
                    "table" => table = Some((BTreeMap::new(), None)),
                    "affine" => {
                        let parts: Vec<&str> = args.splitn(5, char::is_whitespace).collect();
                        let nums: Option<Vec<usize>> = parts.iter().take(4).map(|p| p.parse().ok()).collect();
                        match (nums, parts.get(4)) {
                            (Some(nums), Some(base)) if nums.len() == 4 && nums[3] > 0 => {
                                rule = Some(EvalRule::Affine {
                                    code: nums[0],
                                    arg: nums[1],
                                    offset: nums[2],
                                    modulus: nums[3],
                                    base: formula(n, base)?,
                                });
                            }
                            _ => {
                                return Err(err(
                                    n,
                                    "expected `eval affine <a> <b> <k> <m> <formula>` with m > 0".into(),
                                ))
                            }
                        }
                    }
                    _ => return Err(err(n, format!("unknown eval rule `{kind}`"))),
                }
            }
            "default" => match table.as_mut() {
                Some((_, default)) => *default = Some(formula(n, rest)?),
                None => return Err(err(n, "`default` outside an eval table".into())),
            },
            _ if head.bytes().all(|b| b.is_ascii_digit()) => {
                let Some((rows, _)) = table.as_mut() else {
                    return Err(err(n, "table row outside an eval table".into()));
                };
                let c: usize = head.parse().map_err(|_| err(n, format!("bad code `{head}`")))?;
                let x_word = words.next().unwrap_or("");
                let x: usize = x_word
                    .parse()
                    .map_err(|_| err(n, format!("bad argument code `{x_word}`")))?;
                let f_text = rest[x_word.len()..].trim();
                rows.insert((c, x), formula(n, f_text)?);
            }
            _ => return Err(err(n, format!("unknown directive `{head}`"))),
        }
    }
    if let Some((rows, default)) = table {
        let default = default.ok_or_else(|| err(0, "eval table without `default`".into()))?;
        rule = Some(EvalRule::Table { rows, default });
    }
    Ok(EvalFrame::new(
        code_bound.ok_or_else(|| err(0, "missing `codebound`".into()))?,
        rule.ok_or_else(|| err(0, "missing `eval`".into()))?,
        regulator.ok_or_else(|| err(0, "missing `regulator`".into()))?,
    ))
}

/// `bound N` and one `frame <path>` per row.
pub fn load_profile_config(path: &Path) -> Result<(usize, Vec<EvalFrame>), FileError> {
    let text = read(path)?;
    let err = |line, msg: String| FileError::Syntax {
        path: path.display().to_string(),
        line,
        msg,
    };
    let mut bound = None;
    let mut frames = Vec::new();
    for (n, line) in lines(&text) {
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match head {
            "bound" => bound = Some(rest.trim().parse().map_err(|_| err(n, format!("bad bound `{rest}`")))?),
            "frame" => frames.push(load_frame(&relative(path, rest.trim()))?),
            _ => return Err(err(n, format!("unknown directive `{head}`"))),
        }
    }
    Ok((bound.ok_or_else(|| err(0, "missing `bound`".into()))?, frames))
}
