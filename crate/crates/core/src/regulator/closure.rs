//! Least MP-closed superset of a finite base.

use std::collections::HashMap;

use crate::syntax::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Derivation {
    Base,
    /// Indices into [`ClosureSet::members`] of `x -> y` and `x`.
    Mp {
        major: usize,
        minor: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSet {
    base: Vec<Formula>,
    members: Vec<Formula>,
    traces: Vec<Derivation>,
    index: HashMap<Formula, usize>,
}

impl ClosureSet {
    pub fn base(&self) -> &[Formula] {
        &self.base
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[Formula] {
        &self.members
    }

    pub fn traces(&self) -> &[Derivation] {
        &self.traces
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains_key(f)
    }

    pub fn position(&self, f: &Formula) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members added by detachment, in the order they were derived.
    pub fn derived(&self) -> impl Iterator<Item = (usize, &Formula, usize, usize)> {
        self.members
            .iter()
            .zip(&self.traces)
            .enumerate()
            .filter_map(|(i, (f, t))| match t {
                Derivation::Mp { major, minor } => Some((i, f, *major, *minor)),
                Derivation::Base => None,
            })
    }

    /// Number of modus ponens steps needed to reach `f` along recorded traces.
    pub fn trace_len(&self, f: &Formula) -> Option<usize> {
        let i = self.position(f)?;
        let mut seen = vec![false; self.members.len()];
        let mut stack = vec![i];
        let mut steps = 0;
        while let Some(j) = stack.pop() {
            if std::mem::replace(&mut seen[j], true) {
                continue;
            }
            if let Derivation::Mp { major, minor } = self.traces[j] {
                steps += 1;
                stack.push(major);
                stack.push(minor);
            }
        }
        Some(steps)
    }

    /// Rebuilds the member list from base entries and traces alone. Returns
    /// `None` if any trace is not a valid detachment from earlier members.
    pub fn replay(&self) -> Option<Vec<Formula>> {
        let mut out: Vec<Formula> = Vec::with_capacity(self.members.len());
        let mut base = self.base.iter();
        for t in &self.traces {
            match *t {
                Derivation::Base => out.push(base.next()?.clone()),
                Derivation::Mp { major, minor } => {
                    let (maj, min) = (out.get(major)?, out.get(minor)?);
                    match maj {
                        Formula::Imp(a, b) if **a == *min => out.push((**b).clone()),
                        _ => return None,
                    }
                }
            }
        }
        Some(out)
    }
}

/// Forward-chaining saturation. The worklist is processed in insertion order
/// and the first derivation of a formula is the one recorded.
pub fn mp_closure(base: &[Formula]) -> ClosureSet {
    let mut set = ClosureSet {
        base: Vec::new(),
        members: Vec::new(),
        traces: Vec::new(),
        index: HashMap::new(),
    };
    for b in base {
        if !set.index.contains_key(b) {
            set.index.insert(b.clone(), set.members.len());
            set.members.push(b.clone());
            set.traces.push(Derivation::Base);
            set.base.push(b.clone());
        }
    }
    let mut cursor = 0;
    while cursor < set.members.len() {
        for other in 0..=cursor {
            // current as the major premise, then as the minor premise
            let candidates = [(cursor, other), (other, cursor)];
            for (major, minor) in candidates {
                if let Formula::Imp(a, b) = &set.members[major] {
                    if **a == set.members[minor] && !set.index.contains_key(&**b) {
                        let b = (**b).clone();
                        set.index.insert(b.clone(), set.members.len());
                        set.members.push(b);
                        set.traces.push(Derivation::Mp { major, minor });
                    }
                }
                if major == minor {
                    break;
                }
            }
        }
        cursor += 1;
    }
    set
}
