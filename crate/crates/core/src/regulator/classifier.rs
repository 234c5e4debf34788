use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::{Acceptance, Regulator};
use crate::semantics::{taut_decide, truth, Decision};
use crate::syntax::Formula;

/// A total Boolean classifier on formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classifier {
    /// `tt` exactly on tautologies.
    Taut,
    /// `tt` exactly on non-tautologies.
    NotTaut,
    Const(Decision),
    Table {
        entries: BTreeMap<Formula, Decision>,
        default: Decision,
    },
}

impl Classifier {
    pub fn classify(&self, a: &Formula) -> Decision {
        match self {
            Classifier::Taut => taut_decide(a),
            Classifier::NotTaut => Decision::from_bool(!truth(a)),
            Classifier::Const(d) => *d,
            Classifier::Table { entries, default } => entries.get(a).copied().unwrap_or(*default),
        }
    }
}

impl fmt::Display for Classifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classifier::Taut => f.write_str("taut"),
            Classifier::NotTaut => f.write_str("not-taut"),
            Classifier::Const(d) => write!(f, "const-{}", d.as_str()),
            Classifier::Table { entries, default } => {
                write!(f, "table[{} entries, default {}]", entries.len(), default.as_str())
            }
        }
    }
}

/// The constant-`ff` refuter. Its soundness condition never fires.
pub fn refutation_trivial() -> Classifier {
    Classifier::Const(Decision::Ff)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// One verified disjunct of `C(a) or C(~a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemWitness {
    pub side: Side,
    pub accepted: Acceptance,
}

impl LemWitness {
    /// Left carries `a`, right carries `~a`.
    pub fn for_formula(side: Side, a: &Formula, r: &Regulator) -> Option<LemWitness> {
        let target = match side {
            Side::Left => a.clone(),
            Side::Right => a.neg(),
        };
        r.acceptance(&target).map(|accepted| LemWitness { side, accepted })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("classifier unsound at `{formula}`: answered {} but `{claimed}` is not accepted", .decision.as_str())]
pub struct LemError {
    pub formula: Formula,
    pub decision: Decision,
    pub claimed: Formula,
}

/// Case analysis on `d(a)`: `tt` yields `C(a)`, `ff` yields `C(~a)`.
pub fn dec_to_lem(d: &Classifier, r: &Regulator, a: &Formula) -> Result<LemWitness, LemError> {
    let decision = d.classify(a);
    let side = match decision {
        Decision::Tt => Side::Left,
        Decision::Ff => Side::Right,
    };
    LemWitness::for_formula(side, a, r).ok_or_else(|| LemError {
        formula: a.clone(),
        decision,
        claimed: match side {
            Side::Left => a.clone(),
            Side::Right => a.neg(),
        },
    })
}
