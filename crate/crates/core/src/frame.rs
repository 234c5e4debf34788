//! Evaluation frames and diagonal fixed points.
//!
//! Codes are the naturals `0..=code_bound`. A frame is complete for a
//! behaviour `f : Code -> Formula` when some code `c` has `eval(c, x)`
//! closure-equivalent to `f(x)` for every code `x`. Only the diagonal
//! behaviours `x -> g(eval(x, x))` are ever searched; self-application at the
//! representing code then yields a fixed point of `g` up to equivalence.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exec::Strategy;
use crate::regulator::{dec_soundness, probe, Acceptance, Classifier, ProbeError, Property, PropertyReport, Regulator};
use crate::syntax::Formula;

/// How `eval(c, x)` is computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalRule {
    Constant(Formula),
    Table {
        rows: BTreeMap<(usize, usize), Formula>,
        default: Formula,
    },
    /// `base` negated `(code * c + arg * x + offset) mod modulus` times.
    Affine {
        code: usize,
        arg: usize,
        offset: usize,
        modulus: usize,
        base: Formula,
    },
}

impl EvalRule {
    pub fn eval(&self, c: usize, x: usize) -> Formula {
        match self {
            EvalRule::Constant(f) => f.clone(),
            EvalRule::Table { rows, default } => rows.get(&(c, x)).unwrap_or(default).clone(),
            EvalRule::Affine {
                code,
                arg,
                offset,
                modulus,
                base,
            } => {
                let m = (*modulus).max(1);
                let k = (code.wrapping_mul(c) % m + arg.wrapping_mul(x) % m + offset % m) % m;
                base.neg_n(k)
            }
        }
    }

    pub fn family(&self) -> &'static str {
        match self {
            EvalRule::Constant(_) => "constant",
            EvalRule::Table { .. } => "table",
            EvalRule::Affine { .. } => "affine",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalFrame {
    pub code_bound: usize,
    pub rule: EvalRule,
    pub regulator: Regulator,
}

impl EvalFrame {
    pub fn new(code_bound: usize, rule: EvalRule, regulator: Regulator) -> Self {
        EvalFrame {
            code_bound,
            rule,
            regulator,
        }
    }

    pub fn eval(&self, c: usize, x: usize) -> Formula {
        self.rule.eval(c, x)
    }

    pub fn with_code_bound(&self, code_bound: usize) -> EvalFrame {
        EvalFrame {
            code_bound,
            ..self.clone()
        }
    }

    fn codes(&self) -> Vec<usize> {
        (0..=self.code_bound).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transformer {
    Negation,
    Identity,
    /// `A -> G`
    Goal(Formula),
}

impl Transformer {
    pub fn apply(&self, a: &Formula) -> Formula {
        match self {
            Transformer::Negation => a.neg(),
            Transformer::Identity => a.clone(),
            Transformer::Goal(g) => Formula::imp(a.clone(), g.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointCert {
    pub code: usize,
    pub transformer: Transformer,
    pub b: Formula,
    /// `b -> g(b)`
    pub forward: Acceptance,
    /// `g(b) -> b`
    pub backward: Acceptance,
    pub verified_up_to: usize,
}

impl FixedPointCert {
    pub fn verify(&self, fr: &EvalFrame) -> bool {
        let gb = self.transformer.apply(&self.b);
        self.b == fr.eval(self.code, self.code)
            && *self.forward.formula() == Formula::imp(self.b.clone(), gb.clone())
            && *self.backward.formula() == Formula::imp(gb, self.b.clone())
            && self.forward.verify(&fr.regulator)
            && self.backward.verify(&fr.regulator)
    }
}

impl fmt::Display for FixedPointCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code={}", self.code)?;
        writeln!(f, "b={}", self.b)?;
        writeln!(f, "fwd={}", self.forward.formula())?;
        writeln!(f, "bwd={}", self.backward.formula())?;
        write!(f, "verified_up_to={}", self.verified_up_to)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    /// `(code, first x at which the code fails to represent the behaviour)`.
    #[error("no code up to {code_bound} represents the diagonal behaviour")]
    NoCode {
        code_bound: usize,
        failures: Vec<(usize, usize)>,
    },
    #[error("precondition failed: {0}")]
    Precondition(PropertyReport),
    #[error(transparent)]
    Probe(#[from] ProbeError),
}

pub fn fixed_point(fr: &EvalFrame, g: &Transformer) -> Result<FixedPointCert, FrameError> {
    fixed_point_with(Strategy::default(), fr, g)
}

/// Smallest code representing `x -> g(eval(x, x))` on `0..=code_bound`.
pub fn fixed_point_with(strategy: Strategy, fr: &EvalFrame, g: &Transformer) -> Result<FixedPointCert, FrameError> {
    let codes = fr.codes();
    let first_failure = |c: usize| -> Option<usize> {
        (0..=fr.code_bound).find(|&x| !fr.regulator.equiv(&fr.eval(c, x), &g.apply(&fr.eval(x, x))))
    };
    let Some(code) = strategy.find_first(&codes, |&c| first_failure(c).is_none().then_some(c)) else {
        let failures = strategy
            .map(&codes, |&c| (c, first_failure(c).expect("no code represents")))
            .into_iter()
            .collect();
        return Err(FrameError::NoCode {
            code_bound: fr.code_bound,
            failures,
        });
    };
    let b = fr.eval(code, code);
    let gb = g.apply(&b);
    let forward = fr.regulator.acceptance(&Formula::imp(b.clone(), gb.clone()));
    let backward = fr.regulator.acceptance(&Formula::imp(gb, b.clone()));
    let (Some(forward), Some(backward)) = (forward, backward) else {
        unreachable!("representation at x = code implies both directions");
    };
    Ok(FixedPointCert {
        code,
        transformer: g.clone(),
        b,
        forward,
        backward,
        verified_up_to: fr.code_bound,
    })
}

/// Negation fixed point: `b` with `b` equivalent to `~b`.
pub fn negfp(fr: &EvalFrame) -> Result<FixedPointCert, FrameError> {
    fixed_point(fr, &Transformer::Negation)
}

pub fn negfp_with(strategy: Strategy, fr: &EvalFrame) -> Result<FixedPointCert, FrameError> {
    fixed_point_with(strategy, fr, &Transformer::Negation)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeFailure {
    pub code: usize,
    /// `eval(code, code)`
    pub b: Formula,
    /// Implications between `b` and `~b` the regulator rejects; never empty.
    pub rejected: Vec<Formula>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalReport {
    pub code_bound: usize,
    pub failures: Vec<CodeFailure>,
    /// Codes whose diagonal value the regulator accepts as equivalent to its
    /// own negation, so the per-code check does not refute them.
    pub represented: Vec<usize>,
}

impl DiagonalReport {
    /// No code represents `x -> ~eval(x, x)`.
    pub fn refuted(&self) -> bool {
        self.represented.is_empty()
    }

    pub fn verify(&self, fr: &EvalFrame) -> bool {
        self.failures.iter().all(|fail| {
            let nb = fail.b.neg();
            fail.b == fr.eval(fail.code, fail.code)
                && !fail.rejected.is_empty()
                && fail.rejected.iter().all(|imp| {
                    let is_direction = *imp == Formula::imp(fail.b.clone(), nb.clone())
                        || *imp == Formula::imp(nb.clone(), fail.b.clone());
                    is_direction && !fr.regulator.accepts(imp)
                })
        })
    }
}

impl fmt::Display for DiagonalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for fail in &self.failures {
            let rejected: Vec<String> = fail.rejected.iter().map(Formula::to_string).collect();
            writeln!(f, "code={} b={} rejected={}", fail.code, fail.b, rejected.join(" ; "))?;
        }
        for c in &self.represented {
            writeln!(f, "code={c} represented")?;
        }
        if self.refuted() {
            write!(f, "eval: refuted")
        } else {
            write!(f, "eval: not refuted")
        }
    }
}

/// Per-code check of `b ~ ~b` at `b = eval(c, c)`, with no preconditions.
pub fn diagonal_report(fr: &EvalFrame) -> DiagonalReport {
    diagonal_report_with(Strategy::default(), fr)
}

pub fn diagonal_report_with(strategy: Strategy, fr: &EvalFrame) -> DiagonalReport {
    let per_code = strategy.map(&fr.codes(), |&c| {
        let b = fr.eval(c, c);
        let nb = b.neg();
        let rejected: Vec<Formula> = [Formula::imp(b.clone(), nb.clone()), Formula::imp(nb, b.clone())]
            .into_iter()
            .filter(|imp| !fr.regulator.accepts(imp))
            .collect();
        (c, b, rejected)
    });
    let mut report = DiagonalReport {
        code_bound: fr.code_bound,
        failures: Vec::new(),
        represented: Vec::new(),
    };
    for (code, b, rejected) in per_code {
        if rejected.is_empty() {
            report.represented.push(code);
        } else {
            report.failures.push(CodeFailure { code, b, rejected });
        }
    }
    report
}

/// Checks that the regulator is MP-closed, consistent and decided by `d` on
/// formulas up to `probe_bound`, then refutes the diagonal behaviour code by
/// code. Under those hypotheses the frame's completeness is what fails.
pub fn diag_refute(fr: &EvalFrame, d: &Classifier, probe_bound: usize) -> Result<DiagonalReport, FrameError> {
    let checks = [
        probe(&fr.regulator, Property::Mp, probe_bound)?,
        probe(&fr.regulator, Property::Cons, probe_bound)?,
        dec_soundness(d, &fr.regulator, probe_bound)?,
    ];
    if let Some(failed) = checks.into_iter().find(|rep| !rep.holds()) {
        return Err(FrameError::Precondition(failed));
    }
    Ok(diagonal_report(fr))
}
