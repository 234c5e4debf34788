//! The unique truth valuation of the closed fragment.

use crate::syntax::Formula;

/// Output of a Boolean classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Decision {
    Tt,
    Ff,
}

impl Decision {
    pub fn from_bool(b: bool) -> Decision {
        if b {
            Decision::Tt
        } else {
            Decision::Ff
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Decision::Tt => "tt",
            Decision::Ff => "ff",
        }
    }
}

/// `bot` is false; `x -> y` is true unless `x` is true and `y` false.
pub fn truth(a: &Formula) -> bool {
    match a {
        Formula::Falsum => false,
        Formula::Imp(x, y) => !truth(x) || truth(y),
    }
}

pub fn taut_decide(a: &Formula) -> Decision {
    Decision::from_bool(truth(a))
}

/// Mutual truth of the two implications between `a` and `b`.
pub fn semantic_equiv(a: &Formula, b: &Formula) -> bool {
    truth(a) == truth(b)
}

/// The same relation computed literally through both implications.
pub fn semantic_equiv_via_implications(a: &Formula, b: &Formula) -> bool {
    truth(&Formula::imp(a.clone(), b.clone())) && truth(&Formula::imp(b.clone(), a.clone()))
}
