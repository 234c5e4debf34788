//! Structural property probes over bounded fragments.
//!
//! A probe enumerates every formula up to the size bound and searches for a
//! counterexample; the earliest one in enumeration order is reported.

use std::fmt;

use thiserror::Error;

use super::{Classifier, Regulator};
use crate::exec::Strategy;
use crate::semantics::Decision;
use crate::syntax::{enumerate_up_to, Formula, SyntaxError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Property {
    Mp,
    Cons,
    Lem,
    Dec,
    Ref,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::Mp => "mp",
            Property::Cons => "cons",
            Property::Lem => "lem",
            Property::Dec => "dec",
            Property::Ref => "ref",
        }
    }
}

impl std::str::FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mp" => Ok(Property::Mp),
            "cons" => Ok(Property::Cons),
            "lem" => Ok(Property::Lem),
            "dec" => Ok(Property::Dec),
            "ref" => Ok(Property::Ref),
            _ => Err(format!("unknown property `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    HoldsOnFragment,
    /// Witness layout per property: mp `[x -> y, x, y]`; cons `[bot]`;
    /// lem/dec/ref `[a]`.
    Fails {
        witness: Vec<Formula>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub bound: usize,
    pub verdict: Verdict,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::HoldsOnFragment)
    }

    pub fn witness(&self) -> Option<&[Formula]> {
        match &self.verdict {
            Verdict::HoldsOnFragment => None,
            Verdict::Fails { witness } => Some(witness),
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "property={} bound={} verdict=", self.property.as_str(), self.bound)?;
        match &self.verdict {
            Verdict::HoldsOnFragment => f.write_str("holds"),
            Verdict::Fails { witness } => {
                let parts: Vec<String> = witness.iter().map(Formula::to_string).collect();
                write!(f, "fails witness={}", parts.join(" ; "))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProbeError {
    #[error(transparent)]
    Cap(#[from] SyntaxError),
    #[error("property `{}` needs a classifier", .0.as_str())]
    NeedsClassifier(Property),
}

fn report(property: Property, bound: usize, witness: Option<Vec<Formula>>) -> PropertyReport {
    PropertyReport {
        property,
        bound,
        verdict: match witness {
            None => Verdict::HoldsOnFragment,
            Some(witness) => Verdict::Fails { witness },
        },
    }
}

pub fn probe(r: &Regulator, property: Property, n: usize) -> Result<PropertyReport, ProbeError> {
    probe_with(Strategy::default(), r, property, n)
}

pub fn probe_with(
    strategy: Strategy,
    r: &Regulator,
    property: Property,
    n: usize,
) -> Result<PropertyReport, ProbeError> {
    let witness = match property {
        Property::Cons => {
            // cap still applies so bad bounds are rejected uniformly
            enumerate_up_to(n)?;
            r.accepts(&Formula::Falsum).then(|| vec![Formula::Falsum])
        }
        Property::Mp => {
            let fragment = enumerate_up_to(n)?;
            strategy.find_first(&fragment, |x| {
                let (u, v) = x.as_imp()?;
                (r.accepts(x) && r.accepts(u) && !r.accepts(v)).then(|| vec![x.clone(), u.clone(), v.clone()])
            })
        }
        Property::Lem => {
            let fragment = enumerate_up_to(n)?;
            strategy.find_first(&fragment, |a| {
                (!r.accepts(a) && !r.accepts(&a.neg())).then(|| vec![a.clone()])
            })
        }
        Property::Dec | Property::Ref => return Err(ProbeError::NeedsClassifier(property)),
    };
    Ok(report(property, n, witness))
}

/// Both branches: `d(a) = tt` needs `C(a)`, `d(a) = ff` needs `C(~a)`.
pub fn dec_soundness(d: &Classifier, r: &Regulator, n: usize) -> Result<PropertyReport, ProbeError> {
    soundness_with(Strategy::default(), Property::Dec, d, r, n)
}

/// Only the `tt` branch is constrained: `rc(a) = tt` needs `C(~a)`.
pub fn ref_soundness(rc: &Classifier, r: &Regulator, n: usize) -> Result<PropertyReport, ProbeError> {
    soundness_with(Strategy::default(), Property::Ref, rc, r, n)
}

pub fn soundness_with(
    strategy: Strategy,
    property: Property,
    d: &Classifier,
    r: &Regulator,
    n: usize,
) -> Result<PropertyReport, ProbeError> {
    let fragment = enumerate_up_to(n)?;
    let witness = match property {
        Property::Dec => strategy.find_first(&fragment, |a| {
            let ok = match d.classify(a) {
                Decision::Tt => r.accepts(a),
                Decision::Ff => r.accepts(&a.neg()),
            };
            (!ok).then(|| vec![a.clone()])
        }),
        Property::Ref => strategy.find_first(&fragment, |a| {
            let ok = match d.classify(a) {
                Decision::Tt => r.accepts(&a.neg()),
                Decision::Ff => true,
            };
            (!ok).then(|| vec![a.clone()])
        }),
        other => return probe_with(strategy, r, other, n),
    };
    Ok(report(property, n, witness))
}
