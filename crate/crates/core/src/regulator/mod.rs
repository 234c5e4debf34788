//! Closure predicates with decidable acceptance.
//!
//! A [`Regulator`] is a bare acceptance test on formulas. Four families are
//! shipped: the total predicate, semantic tautologyhood, the MP-closure of a
//! finite base, and certificate-relative derivability in a Hilbert theory.

mod classifier;
mod closure;
mod probe;

pub use classifier::{dec_to_lem, refutation_trivial, Classifier, LemError, LemWitness, Side};
pub use closure::{mp_closure, ClosureSet, Derivation};
pub use probe::{
    dec_soundness, probe, probe_with, ref_soundness, soundness_with, ProbeError, Property, PropertyReport, Verdict,
};

use std::fmt;

use crate::hilbert::{check, synth, Context, Proof, Theory, Witness};
use crate::semantics::truth;
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Regulator {
    Total,
    SemanticTaut,
    MpClosure(ClosureSet),
    HilbertTheory(TheoryRegulator),
}

impl Regulator {
    /// MP-closure regulator over `base`; saturation runs once, here.
    pub fn closure(base: &[Formula]) -> Regulator {
        Regulator::MpClosure(mp_closure(base))
    }

    pub fn accepts(&self, a: &Formula) -> bool {
        match self {
            Regulator::Total => true,
            Regulator::SemanticTaut => truth(a),
            Regulator::MpClosure(set) => set.contains(a),
            Regulator::HilbertTheory(t) => t.accepts(a),
        }
    }

    /// A re-checkable record of `accepts(a)`, if it holds.
    pub fn acceptance(&self, a: &Formula) -> Option<Acceptance> {
        self.accepts(a).then(|| Acceptance(a.clone()))
    }

    /// Mutual acceptance of `a -> b` and `b -> a`.
    pub fn equiv(&self, a: &Formula, b: &Formula) -> bool {
        self.accepts(&Formula::imp(a.clone(), b.clone())) && self.accepts(&Formula::imp(b.clone(), a.clone()))
    }
}

impl fmt::Display for Regulator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Regulator::Total => f.write_str("total"),
            Regulator::SemanticTaut => f.write_str("taut"),
            Regulator::MpClosure(set) => write!(f, "closure[{}]", set.base().len()),
            Regulator::HilbertTheory(t) => write!(f, "theory[{}]", t.theory.axioms.len()),
        }
    }
}

/// Claim that a regulator accepts a formula.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Acceptance(Formula);

impl Acceptance {
    pub fn formula(&self) -> &Formula {
        &self.0
    }

    pub fn verify(&self, r: &Regulator) -> bool {
        r.accepts(&self.0)
    }

    /// Unchecked claim, for building records to be verified later.
    pub fn claim(f: Formula) -> Acceptance {
        Acceptance(f)
    }
}

/// Acceptance by checked derivability: `a` is accepted when a certificate
/// for it is on hand and checks.
///
/// Certificates come from the axioms and hypotheses themselves, from the
/// supplied store, from modus-ponens saturation over all of those, and from
/// [`synth`] for formulas of size at most `search_bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoryRegulator {
    pub theory: Theory,
    pub context: Context,
    pub search_bound: usize,
    store: Vec<Proof>,
    saturated: ClosureSet,
    sources: Vec<Proof>,
}

impl TheoryRegulator {
    pub fn new(theory: Theory, context: Context, search_bound: usize) -> Self {
        Self::with_certificates(theory, context, search_bound, Vec::new())
    }

    /// Certificates that fail to check are dropped.
    pub fn with_certificates(theory: Theory, context: Context, search_bound: usize, store: Vec<Proof>) -> Self {
        let mut seeds: Vec<(Formula, Proof)> = Vec::new();
        for (i, a) in theory.axioms.iter().enumerate() {
            seeds.push((a.clone(), Proof::Ax(i)));
        }
        for (i, h) in context.hypotheses.iter().enumerate() {
            seeds.push((h.clone(), Proof::Hyp(i)));
        }
        let store: Vec<Proof> = store
            .into_iter()
            .filter(|p| crate::hilbert::conclusion(p, &theory, &context).is_ok())
            .collect();
        for p in &store {
            let c = crate::hilbert::conclusion(p, &theory, &context).expect("filtered above");
            seeds.push((c, p.clone()));
        }
        let base: Vec<Formula> = seeds.iter().map(|(f, _)| f.clone()).collect();
        let saturated = mp_closure(&base);
        // one source proof per deduplicated base entry, first occurrence wins
        let sources = saturated
            .base()
            .iter()
            .map(|b| {
                seeds
                    .iter()
                    .find(|(f, _)| f == b)
                    .expect("base entry has a seed")
                    .1
                    .clone()
            })
            .collect();
        TheoryRegulator {
            theory,
            context,
            search_bound,
            store,
            saturated,
            sources,
        }
    }

    pub fn store(&self) -> &[Proof] {
        &self.store
    }

    /// A certificate for `a`, not yet checked.
    pub fn certificate(&self, a: &Formula) -> Option<Proof> {
        if let Some(i) = self.saturated.position(a) {
            return Some(self.rebuild(i));
        }
        if a.size() <= self.search_bound {
            if let Witness::Pos(p) = synth(a) {
                return Some(p);
            }
        }
        None
    }

    fn rebuild(&self, i: usize) -> Proof {
        match self.saturated.traces()[i] {
            Derivation::Base => {
                let base_pos = self.saturated.traces()[..i]
                    .iter()
                    .filter(|t| matches!(t, Derivation::Base))
                    .count();
                self.sources[base_pos].clone()
            }
            Derivation::Mp { major, minor } => Proof::mp(self.rebuild(major), self.rebuild(minor)),
        }
    }

    pub fn accepts(&self, a: &Formula) -> bool {
        self.certificate(a)
            .is_some_and(|p| check(&p, &self.theory, &self.context, a).is_accept())
    }
}
