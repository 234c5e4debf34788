//! Deduction and reductio by bracket abstraction.

use thiserror::Error;

use super::kernel::{conclusion, KernelError};
use super::synth::identity;
use super::{Context, Proof, Theory};
use crate::syntax::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("nothing to discharge: context is empty")]
    EmptyContext,
    #[error("input proof does not check: {0}")]
    Unchecked(#[from] KernelError),
    #[error("conclusion is `{0}`, not bot")]
    ConclusionNotFalsum(Formula),
}

/// Discharges the last hypothesis `A` of `ctx`: a proof of `B` under `ctx`
/// becomes a proof of `A -> B` under `ctx` without `A`.
pub fn deduction(p: &Proof, th: &Theory, ctx: &Context) -> Result<Proof, TransformError> {
    let (_, discharged) = ctx.discharge().ok_or(TransformError::EmptyContext)?;
    conclusion(p, th, ctx)?;
    let index = ctx.hypotheses.len() - 1;
    abstract_hyp(p, th, ctx, index, discharged)
}

fn abstract_hyp(p: &Proof, th: &Theory, ctx: &Context, index: usize, hyp: &Formula) -> Result<Proof, TransformError> {
    if !p.uses_hyp(index) {
        let x = conclusion(p, th, ctx)?;
        return Ok(Proof::mp(Proof::K(x, hyp.clone()), p.clone()));
    }
    match p {
        Proof::Hyp(_) => Ok(identity(hyp)),
        Proof::Mp(major, minor) => {
            let x = conclusion(minor, th, ctx)?;
            let y = match conclusion(major, th, ctx)? {
                Formula::Imp(_, y) => (*y).clone(),
                // unreachable for a checked proof
                other => return Err(KernelError::MpMismatch { major: other, minor: x }.into()),
            };
            let major = abstract_hyp(major, th, ctx, index, hyp)?;
            let minor = abstract_hyp(minor, th, ctx, index, hyp)?;
            Ok(Proof::mp(Proof::mp(Proof::S(hyp.clone(), x, y), major), minor))
        }
        _ => unreachable!("only Hyp and Mp nodes can mention a hypothesis"),
    }
}

/// Deduction specialised to a proof of `bot`: yields `~A`.
pub fn reductio(p: &Proof, th: &Theory, ctx: &Context) -> Result<Proof, TransformError> {
    if ctx.hypotheses.is_empty() {
        return Err(TransformError::EmptyContext);
    }
    let c = conclusion(p, th, ctx)?;
    if !c.is_falsum() {
        return Err(TransformError::ConclusionNotFalsum(c));
    }
    deduction(p, th, ctx)
}
