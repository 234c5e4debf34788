//! Checked derivability over the K/S Hilbert system with modus ponens.
//!
//! A [`Proof`] is a certificate tree. Its conclusion is recomputed by the
//! kernel ([`conclusion`]) relative to a [`Theory`] and a [`Context`]; nothing
//! about a certificate is trusted until it has been checked.

mod kernel;
mod synth;
mod text;
mod transform;

pub use kernel::{check, conclusion, CheckOutcome, KernelError};
pub use synth::{identity, synth, Witness};
pub use text::{parse_formula_list, render_formula_list};
pub use transform::{deduction, reductio, TransformError};

use crate::syntax::Formula;

/// The axioms `T` of a regulator theory.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Theory {
    pub axioms: Vec<Formula>,
}

/// Local hypotheses; only the last one can be discharged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context {
    pub hypotheses: Vec<Formula>,
}

impl Theory {
    pub fn new(axioms: Vec<Formula>) -> Self {
        Theory { axioms }
    }

    pub fn empty() -> Self {
        Theory::default()
    }
}

impl Context {
    pub fn new(hypotheses: Vec<Formula>) -> Self {
        Context { hypotheses }
    }

    pub fn empty() -> Self {
        Context::default()
    }

    /// Splits off the last hypothesis.
    pub fn discharge(&self) -> Option<(Context, &Formula)> {
        let (last, rest) = self.hypotheses.split_last()?;
        Some((Context::new(rest.to_vec()), last))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Proof {
    /// `a -> (b -> a)`
    K(Formula, Formula),
    /// `(a -> (b -> c)) -> ((a -> b) -> (a -> c))`
    S(Formula, Formula, Formula),
    Ax(usize),
    Hyp(usize),
    /// Major premise first.
    Mp(Box<Proof>, Box<Proof>),
}

impl Proof {
    pub fn mp(major: Proof, minor: Proof) -> Proof {
        Proof::Mp(Box::new(major), Box::new(minor))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Proof::Mp(p, q) => 1 + p.node_count() + q.node_count(),
            _ => 1,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Proof::Mp(p, q) => 1 + p.depth().max(q.depth()),
            _ => 0,
        }
    }

    /// Whether the certificate references hypothesis `index`.
    pub fn uses_hyp(&self, index: usize) -> bool {
        match self {
            Proof::Hyp(i) => *i == index,
            Proof::Mp(p, q) => p.uses_hyp(index) || q.uses_hyp(index),
            _ => false,
        }
    }
}
