use std::fmt;

use thiserror::Error;

use super::{Context, Proof, Theory};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("axiom index {index} out of range (theory has {len})")]
    AxiomOutOfRange { index: usize, len: usize },
    #[error("hypothesis index {index} out of range (context has {len})")]
    HypOutOfRange { index: usize, len: usize },
    #[error("modus ponens mismatch: major concludes `{major}`, minor concludes `{minor}`")]
    MpMismatch { major: Formula, minor: Formula },
}

pub fn conclusion(p: &Proof, th: &Theory, ctx: &Context) -> Result<Formula, KernelError> {
    match p {
        Proof::K(a, b) => Ok(Formula::imp(a.clone(), Formula::imp(b.clone(), a.clone()))),
        Proof::S(a, b, c) => {
            let abc = Formula::imp(a.clone(), Formula::imp(b.clone(), c.clone()));
            let ab = Formula::imp(a.clone(), b.clone());
            let ac = Formula::imp(a.clone(), c.clone());
            Ok(Formula::imp(abc, Formula::imp(ab, ac)))
        }
        Proof::Ax(i) => th.axioms.get(*i).cloned().ok_or(KernelError::AxiomOutOfRange {
            index: *i,
            len: th.axioms.len(),
        }),
        Proof::Hyp(i) => ctx.hypotheses.get(*i).cloned().ok_or(KernelError::HypOutOfRange {
            index: *i,
            len: ctx.hypotheses.len(),
        }),
        Proof::Mp(major, minor) => {
            let maj = conclusion(major, th, ctx)?;
            let min = conclusion(minor, th, ctx)?;
            match &maj {
                Formula::Imp(a, b) if **a == min => Ok((**b).clone()),
                _ => Err(KernelError::MpMismatch { major: maj, minor: min }),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    Accept,
    Reject(String),
}

impl CheckOutcome {
    pub fn is_accept(&self) -> bool {
        matches!(self, CheckOutcome::Accept)
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::Accept => f.write_str("accept"),
            CheckOutcome::Reject(reason) => write!(f, "reject: {reason}"),
        }
    }
}

pub fn check(p: &Proof, th: &Theory, ctx: &Context, goal: &Formula) -> CheckOutcome {
    match conclusion(p, th, ctx) {
        Ok(c) if c == *goal => CheckOutcome::Accept,
        Ok(c) => CheckOutcome::Reject(format!("wrong conclusion: proved `{c}`, goal `{goal}`")),
        Err(e) => CheckOutcome::Reject(e.to_string()),
    }
}
