//! Proof synthesis for closed formulas.
//!
//! Every closed formula is either provable or refutable in K/S alone. The
//! negative case carries both directions of the equivalence with `bot`, which
//! keeps the recursion total without an ex-falso axiom.

use super::transform::deduction;
use super::{Context, Proof, Theory};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Proof of `a`.
    Pos(Proof),
    /// Proofs of `a -> bot` and `bot -> a`.
    Neg { refutation: Proof, embedding: Proof },
}

impl Witness {
    pub fn is_pos(&self) -> bool {
        matches!(self, Witness::Pos(_))
    }

    pub fn node_count(&self) -> usize {
        match self {
            Witness::Pos(p) => p.node_count(),
            Witness::Neg { refutation, embedding } => refutation.node_count() + embedding.node_count(),
        }
    }
}

/// `S K K`-style proof of `a -> a`.
pub fn identity(a: &Formula) -> Proof {
    let aa = Formula::imp(a.clone(), a.clone());
    Proof::mp(
        Proof::mp(Proof::S(a.clone(), aa.clone(), a.clone()), Proof::K(a.clone(), aa)),
        Proof::K(a.clone(), a.clone()),
    )
}

/// All embedded proofs check under the empty theory and context.
pub fn synth(a: &Formula) -> Witness {
    let (x, y) = match a {
        Formula::Falsum => {
            return Witness::Neg {
                refutation: identity(a),
                embedding: identity(a),
            }
        }
        Formula::Imp(x, y) => (&**x, &**y),
    };
    let (ny, iy) = match synth(y) {
        Witness::Pos(py) => return Witness::Pos(Proof::mp(Proof::K(y.clone(), x.clone()), py)),
        Witness::Neg { refutation, embedding } => (refutation, embedding),
    };
    let th = Theory::empty();
    match synth(x) {
        Witness::Pos(px) => {
            // [x -> y] |- bot, by ny (hyp px)
            let ctx = Context::new(vec![a.clone()]);
            let to_bot = Proof::mp(ny, Proof::mp(Proof::Hyp(0), px));
            let refutation = discharge(&to_bot, &th, &ctx);
            // [bot] |- x -> y, by K-lifting iy hyp
            let ctx = Context::new(vec![Formula::Falsum]);
            let lifted = Proof::mp(Proof::K(y.clone(), x.clone()), Proof::mp(iy, Proof::Hyp(0)));
            let embedding = discharge(&lifted, &th, &ctx);
            Witness::Neg { refutation, embedding }
        }
        Witness::Neg { refutation: nx, .. } => {
            // [x] |- y, by iy (nx hyp)
            let ctx = Context::new(vec![x.clone()]);
            let body = Proof::mp(iy, Proof::mp(nx, Proof::Hyp(0)));
            Witness::Pos(discharge(&body, &th, &ctx))
        }
    }
}

fn discharge(p: &Proof, th: &Theory, ctx: &Context) -> Proof {
    deduction(p, th, ctx).expect("synthesised subproofs check by construction")
}
