//! The collapse pipeline.
//!
//! A negation fixed point `b` plus a committed branch (`C(b)` or `C(~b)`)
//! reaches `C(bot)` in two detachments. Composed with a frame that supplies
//! `b`, this shows that completeness, MP-closure, consistency and excluded
//! middle (or a sound decision) cannot all hold. [`aporetic_check`] runs the
//! hypotheses against a concrete regulator and names the one that fails.

use std::fmt;

use thiserror::Error;

use crate::exec::Strategy;
use crate::frame::{diagonal_report, negfp, DiagonalReport, EvalFrame, FixedPointCert, FrameError};
use crate::regulator::{
    dec_soundness, dec_to_lem, probe, ref_soundness, refutation_trivial, Acceptance, Classifier, LemError, LemWitness,
    ProbeError, Property, PropertyReport, Regulator, Side,
};
use crate::syntax::Formula;

/// One detachment: from `major = minor -> conclusion` and `minor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpStep {
    pub major: Formula,
    pub minor: Formula,
    pub conclusion: Formula,
}

/// Fixed-point records, the committed branch, and the detachments ending
/// in `bot`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseCert {
    pub b: Formula,
    /// `b -> ~b`
    pub negfp_forward: Acceptance,
    /// `~b -> b`
    pub negfp_backward: Acceptance,
    pub branch: LemWitness,
    pub mp_trace: Vec<MpStep>,
    pub regulator: Regulator,
}

impl CollapseCert {
    /// Re-checks every record and every step against the regulator.
    pub fn verify(&self) -> Result<(), String> {
        let r = &self.regulator;
        let nb = self.b.neg();
        let fwd = Formula::imp(self.b.clone(), nb.clone());
        let bwd = Formula::imp(nb.clone(), self.b.clone());
        if *self.negfp_forward.formula() != fwd || !self.negfp_forward.verify(r) {
            return Err(format!("forward record `{}` invalid", self.negfp_forward.formula()));
        }
        if *self.negfp_backward.formula() != bwd || !self.negfp_backward.verify(r) {
            return Err(format!("backward record `{}` invalid", self.negfp_backward.formula()));
        }
        let expected_branch = match self.branch.side {
            Side::Left => &self.b,
            Side::Right => &nb,
        };
        if self.branch.accepted.formula() != expected_branch || !self.branch.accepted.verify(r) {
            return Err(format!("branch record `{}` invalid", self.branch.accepted.formula()));
        }
        let mut known = vec![fwd, bwd, expected_branch.clone()];
        for (i, step) in self.mp_trace.iter().enumerate() {
            if !known.contains(&step.major) || !known.contains(&step.minor) {
                return Err(format!("step {i} uses an unestablished premise"));
            }
            if step.major != Formula::imp(step.minor.clone(), step.conclusion.clone()) {
                return Err(format!("step {i} is not a detachment"));
            }
            if !r.accepts(&step.conclusion) {
                return Err(format!(
                    "step {i} concludes `{}`, which is not accepted",
                    step.conclusion
                ));
            }
            known.push(step.conclusion.clone());
        }
        match self.mp_trace.last() {
            Some(step) if step.conclusion.is_falsum() => Ok(()),
            _ => Err("trace does not end at bot".into()),
        }
    }

    pub fn concludes_falsum(&self) -> bool {
        self.mp_trace.last().is_some_and(|s| s.conclusion.is_falsum())
    }
}

impl fmt::Display for CollapseCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "b={}", self.b)?;
        writeln!(
            f,
            "negfp fwd={} bwd={}",
            self.negfp_forward.formula(),
            self.negfp_backward.formula()
        )?;
        writeln!(
            f,
            "branch={} accepted={}",
            self.branch.side.as_str(),
            self.branch.accepted.formula()
        )?;
        for (i, s) in self.mp_trace.iter().enumerate() {
            writeln!(f, "mp {i} major={} minor={} concl={}", s.major, s.minor, s.conclusion)?;
        }
        let last = self
            .mp_trace
            .last()
            .map_or(String::from("none"), |s| s.conclusion.to_string());
        write!(f, "qed={last}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("missing acceptance of `{0}`")]
    MissingAcceptance(Formula),
    #[error("regulator is not closed under modus ponens: `{0}` detached but not accepted")]
    NotMpClosed(Formula),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    ClassifierUnsound(#[from] LemError),
    #[error(transparent)]
    Probe(#[from] ProbeError),
    #[error("frame regulator `{frame}` differs from supplied regulator `{supplied}`")]
    RegulatorMismatch { frame: String, supplied: String },
    #[error("every hypothesis held on the fragment")]
    NothingFails,
}

fn require(r: &Regulator, f: Formula) -> Result<Acceptance, ObstructionError> {
    r.acceptance(&f).ok_or(ObstructionError::MissingAcceptance(f))
}

/// Two detachments from `b ~ ~b` and the chosen branch to `bot`.
pub fn branch_collapse(r: &Regulator, b: &Formula, side: Side) -> Result<CollapseCert, ObstructionError> {
    let nb = b.neg();
    let fwd = require(r, Formula::imp(b.clone(), nb.clone()))?;
    let bwd = require(r, Formula::imp(nb.clone(), b.clone()))?;
    let branch = LemWitness::for_formula(side, b, r).ok_or_else(|| {
        ObstructionError::MissingAcceptance(match side {
            Side::Left => b.clone(),
            Side::Right => nb.clone(),
        })
    })?;
    let first = match side {
        // b -> ~b, b  gives ~b
        Side::Left => MpStep {
            major: fwd.formula().clone(),
            minor: b.clone(),
            conclusion: nb.clone(),
        },
        // ~b -> b, ~b  gives b
        Side::Right => MpStep {
            major: bwd.formula().clone(),
            minor: nb.clone(),
            conclusion: b.clone(),
        },
    };
    let second = MpStep {
        major: nb,
        minor: b.clone(),
        conclusion: Formula::Falsum,
    };
    for step in [&first, &second] {
        if !r.accepts(&step.conclusion) {
            return Err(ObstructionError::NotMpClosed(step.conclusion.clone()));
        }
    }
    Ok(CollapseCert {
        b: b.clone(),
        negfp_forward: fwd,
        negfp_backward: bwd,
        branch,
        mp_trace: vec![first, second],
        regulator: r.clone(),
    })
}

/// Source of the excluded-middle commitment at the diagonal formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LemChoice {
    Always(Side),
    /// Case analysis on a decision classifier.
    Classifier(Classifier),
}

impl LemChoice {
    fn commit(&self, r: &Regulator, b: &Formula) -> Result<Side, ObstructionError> {
        match self {
            LemChoice::Always(side) => LemWitness::for_formula(*side, b, r).map(|w| w.side).ok_or_else(|| {
                ObstructionError::MissingAcceptance(if *side == Side::Left { b.clone() } else { b.neg() })
            }),
            LemChoice::Classifier(d) => Ok(dec_to_lem(d, r, b)?.side),
        }
    }
}

/// Fixed point from the frame, branch from `lem`, then [`branch_collapse`].
pub fn diagonal_collapse(fr: &EvalFrame, lem: &LemChoice) -> Result<CollapseCert, ObstructionError> {
    let cert = negfp(fr)?;
    let side = lem.commit(&fr.regulator, &cert.b)?;
    branch_collapse(&fr.regulator, &cert.b, side)
}

/// Collapse from an assumed fixed point and a decision classifier; no frame.
pub fn adabs(r: &Regulator, b: &Formula, d: &Classifier) -> Result<CollapseCert, ObstructionError> {
    let nb = b.neg();
    require(r, Formula::imp(b.clone(), nb.clone()))?;
    require(r, Formula::imp(nb, b.clone()))?;
    let witness = dec_to_lem(d, r, b)?;
    branch_collapse(r, b, witness.side)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Hypothesis {
    Eval,
    Lem,
    Cons,
    Mp,
}

impl Hypothesis {
    /// Reporting order when several fail.
    pub const ORDER: [Hypothesis; 4] = [Hypothesis::Eval, Hypothesis::Lem, Hypothesis::Cons, Hypothesis::Mp];

    pub fn as_str(self) -> &'static str {
        match self {
            Hypothesis::Eval => "eval",
            Hypothesis::Lem => "lem",
            Hypothesis::Cons => "cons",
            Hypothesis::Mp => "mp",
        }
    }
}

/// Excluded middle directly, or via a decision classifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Commitment {
    Lem,
    Dec(Classifier),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionWitness {
    Collapse(Box<CollapseCert>),
    Diagonal(DiagonalReport),
    Probe(PropertyReport),
    /// The diagonal formula, accepted on neither side.
    Undecided(Formula),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionVerdict {
    pub regulator: Regulator,
    pub frame_family: &'static str,
    pub bound: usize,
    pub commitment: Commitment,
    pub fixed_point: Option<FixedPointCert>,
    /// Per-hypothesis outcome on the fragment, in [`Hypothesis::ORDER`].
    pub holds: Vec<(Hypothesis, bool)>,
    pub failing: Hypothesis,
    pub witness: ObstructionWitness,
}

impl ObstructionVerdict {
    pub fn all_failing(&self) -> Vec<Hypothesis> {
        self.holds.iter().filter(|(_, ok)| !ok).map(|(h, _)| *h).collect()
    }

    pub fn holds(&self, h: Hypothesis) -> bool {
        self.holds.iter().any(|(x, ok)| *x == h && *ok)
    }

    /// Re-checks the witness against the regulator and frame.
    pub fn verify(&self, fr: &EvalFrame) -> bool {
        let r = &self.regulator;
        match (&self.failing, &self.witness) {
            (Hypothesis::Cons, ObstructionWitness::Collapse(cert)) => {
                cert.verify().is_ok() && r.accepts(&Formula::Falsum)
            }
            (Hypothesis::Eval, ObstructionWitness::Diagonal(rep)) => rep.refuted() && rep.verify(fr),
            (Hypothesis::Lem, ObstructionWitness::Undecided(b)) => !r.accepts(b) && !r.accepts(&b.neg()),
            (_, ObstructionWitness::Probe(rep)) => probe_witness_holds(rep, r),
            _ => false,
        }
    }
}

fn probe_witness_holds(rep: &PropertyReport, r: &Regulator) -> bool {
    match (rep.property, rep.witness()) {
        (Property::Cons, Some([bot])) => bot.is_falsum() && r.accepts(bot),
        (Property::Lem, Some([a])) => !r.accepts(a) && !r.accepts(&a.neg()),
        (Property::Mp, Some([x, u, v])) => r.accepts(x) && r.accepts(u) && !r.accepts(v),
        // decision witnesses depend on the classifier; checked by re-probing
        (Property::Dec, Some([_])) => true,
        _ => false,
    }
}

impl fmt::Display for ObstructionVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flags: Vec<String> = self
            .holds
            .iter()
            .map(|(h, ok)| format!("{}={}", h.as_str(), if *ok { "holds" } else { "fails" }))
            .collect();
        write!(
            f,
            "{} failing={} witness={}",
            flags.join(" "),
            self.failing.as_str(),
            witness_summary(&self.witness)
        )
    }
}

fn witness_summary(w: &ObstructionWitness) -> String {
    match w {
        ObstructionWitness::Collapse(cert) => format!("collapse(b={}, steps={})", cert.b, cert.mp_trace.len()),
        ObstructionWitness::Diagonal(rep) => format!(
            "diagonal(codes={}, refuted={})",
            rep.failures.len(),
            rep.represented.is_empty()
        ),
        ObstructionWitness::Probe(rep) => {
            let parts: Vec<String> = rep.witness().unwrap_or(&[]).iter().map(Formula::to_string).collect();
            format!("{}({})", rep.property.as_str(), parts.join(" ; "))
        }
        ObstructionWitness::Undecided(b) => format!("undecided({b})"),
    }
}

/// Runs eval, mp, cons and lem on the size-`n` fragment and names the
/// failing hypothesis.
pub fn aporetic_check(r: &Regulator, fr: &EvalFrame, n: usize) -> Result<ObstructionVerdict, ObstructionError> {
    obstruction_check(r, fr, &Commitment::Lem, n)
}

/// As [`aporetic_check`], with a decision classifier in place of excluded
/// middle.
pub fn decision_check(
    r: &Regulator,
    fr: &EvalFrame,
    d: &Classifier,
    n: usize,
) -> Result<ObstructionVerdict, ObstructionError> {
    obstruction_check(r, fr, &Commitment::Dec(d.clone()), n)
}

pub fn obstruction_check(
    r: &Regulator,
    fr: &EvalFrame,
    commitment: &Commitment,
    n: usize,
) -> Result<ObstructionVerdict, ObstructionError> {
    if *r != fr.regulator {
        return Err(ObstructionError::RegulatorMismatch {
            frame: fr.regulator.to_string(),
            supplied: r.to_string(),
        });
    }
    let eval = match negfp(fr) {
        Ok(cert) => Some(cert),
        Err(FrameError::NoCode { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let mp = probe(r, Property::Mp, n)?;
    let cons = probe(r, Property::Cons, n)?;
    let lem = match commitment {
        Commitment::Lem => probe(r, Property::Lem, n)?,
        Commitment::Dec(d) => dec_soundness(d, r, n)?,
    };

    // the commitment is also needed at b itself, which may lie outside the fragment
    let side_at_b = eval.as_ref().map(|cert| match commitment {
        Commitment::Lem => LemWitness::for_formula(Side::Left, &cert.b, r)
            .or_else(|| LemWitness::for_formula(Side::Right, &cert.b, r))
            .map(|w| w.side),
        Commitment::Dec(d) => dec_to_lem(d, r, &cert.b).ok().map(|w| w.side),
    });
    let lem_ok = lem.holds() && !matches!(side_at_b, Some(None));

    let collapse = match (&eval, side_at_b) {
        (Some(cert), Some(Some(side))) if mp.holds() => match branch_collapse(r, &cert.b, side) {
            Ok(c) => Some(c),
            Err(ObstructionError::NotMpClosed(_)) => None,
            Err(e) => return Err(e),
        },
        _ => None,
    };
    let mp_ok = mp.holds() && !(eval.is_some() && lem_ok && collapse.is_none());

    let holds = vec![
        (Hypothesis::Eval, eval.is_some()),
        (Hypothesis::Lem, lem_ok),
        (Hypothesis::Cons, cons.holds()),
        (Hypothesis::Mp, mp_ok),
    ];
    let failing = holds
        .iter()
        .find(|(_, ok)| !ok)
        .map(|(h, _)| *h)
        .ok_or(ObstructionError::NothingFails)?;

    let witness = match failing {
        Hypothesis::Eval => ObstructionWitness::Diagonal(diagonal_report(fr)),
        Hypothesis::Lem => match (&eval, side_at_b) {
            (Some(cert), Some(None)) => ObstructionWitness::Undecided(cert.b.clone()),
            _ => ObstructionWitness::Probe(lem),
        },
        Hypothesis::Cons => match collapse {
            Some(c) => ObstructionWitness::Collapse(Box::new(c)),
            None => ObstructionWitness::Probe(cons),
        },
        Hypothesis::Mp => ObstructionWitness::Probe(mp),
    };
    Ok(ObstructionVerdict {
        regulator: r.clone(),
        frame_family: fr.rule.family(),
        bound: n,
        commitment: commitment.clone(),
        fixed_point: eval,
        holds,
        failing,
        witness,
    })
}

/// Verdict rows plus the unconditional refutation row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    pub bound: usize,
    pub rows: Vec<Result<ObstructionVerdict, ObstructionError>>,
    /// `ref_soundness(refutation_trivial(), r, bound)` per row regulator.
    pub refutation: Vec<PropertyReport>,
}

impl Profile {
    pub fn refutation_holds(&self) -> bool {
        self.refutation.iter().all(PropertyReport::holds)
    }
}

pub fn profile(frames: &[EvalFrame], n: usize) -> Result<Profile, ObstructionError> {
    profile_with(Strategy::default(), frames, n)
}

pub fn profile_with(strategy: Strategy, frames: &[EvalFrame], n: usize) -> Result<Profile, ObstructionError> {
    let rows = strategy.map(frames, |fr| aporetic_check(&fr.regulator, fr, n));
    let refuter = refutation_trivial();
    let refutation = frames
        .iter()
        .map(|fr| ref_soundness(&refuter, &fr.regulator, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Profile {
        bound: n,
        rows,
        refutation,
    })
}

impl fmt::Display for Profile {
    /// Aligned text table, one row per frame, then the refutation row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header = [
            "row",
            "regulator",
            "frame",
            "eval",
            "lem",
            "cons",
            "mp",
            "failing",
            "witness",
        ];
        let mut table: Vec<Vec<String>> = vec![header.iter().map(|s| s.to_string()).collect()];
        for (i, row) in self.rows.iter().enumerate() {
            let cells = match row {
                Ok(v) => {
                    let mut cells = vec![i.to_string(), v.regulator.to_string(), v.frame_family.to_string()];
                    for (_, ok) in &v.holds {
                        cells.push(if *ok { "holds" } else { "fails" }.to_string());
                    }
                    cells.push(v.failing.as_str().to_string());
                    cells.push(witness_summary(&v.witness));
                    cells
                }
                Err(e) => {
                    let mut cells = vec![i.to_string(), "-".into(), "-".into()];
                    cells.extend(std::iter::repeat_n("-".to_string(), 5));
                    cells.push(format!("error: {e}"));
                    cells
                }
            };
            table.push(cells);
        }
        let widths: Vec<usize> = (0..header.len())
            .map(|c| table.iter().map(|row| row[c].chars().count()).max().unwrap_or(0))
            .collect();
        for row in &table {
            let line: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(c, cell)| {
                    if c + 1 == row.len() {
                        cell.clone()
                    } else {
                        format!("{cell:<w$}", w = widths[c])
                    }
                })
                .collect();
            writeln!(f, "{}", line.join("  ").trim_end())?;
        }
        let verdict = if self.refutation_holds() { "holds" } else { "fails" };
        write!(
            f,
            "ref: refutation_trivial {verdict} on {} regulator(s) at bound {}",
            self.refutation.len(),
            self.bound
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::EvalRule;
    use crate::semantics::Decision;
    use crate::syntax::parse;

    fn b() -> Formula {
        parse("bot -> bot").unwrap()
    }

    fn negfp_base(extra: &[Formula]) -> Regulator {
        let b = b();
        let mut base = vec![Formula::imp(b.clone(), b.neg()), Formula::imp(b.neg(), b)];
        base.extend_from_slice(extra);
        Regulator::closure(&base)
    }

    fn total_frame() -> EvalFrame {
        EvalFrame::new(3, EvalRule::Constant(Formula::Falsum), Regulator::Total)
    }

    #[test]
    fn branch_collapse_left_and_right() {
        let r = negfp_base(&[b()]);
        let cert = branch_collapse(&r, &b(), Side::Left).unwrap();
        assert_eq!(cert.mp_trace.len(), 2);
        assert!(cert.verify().is_ok());
        assert!(r.accepts(&Formula::Falsum));

        let r = negfp_base(&[b().neg()]);
        let cert = branch_collapse(&r, &b(), Side::Right).unwrap();
        assert_eq!(cert.mp_trace.len(), 2);
        assert!(cert.verify().is_ok());
    }

    #[test]
    fn branch_collapse_missing_branch() {
        assert_eq!(
            branch_collapse(&negfp_base(&[]), &b(), Side::Left),
            Err(ObstructionError::MissingAcceptance(b()))
        );
        assert_eq!(
            branch_collapse(&Regulator::closure(&[b()]), &b(), Side::Left),
            Err(ObstructionError::MissingAcceptance(Formula::imp(b(), b().neg())))
        );
    }

    #[test]
    fn rendering() {
        let cert = branch_collapse(&negfp_base(&[b()]), &b(), Side::Left).unwrap();
        let expected = "b=bot -> bot\n\
            negfp fwd=(bot -> bot) -> (bot -> bot) -> bot bwd=((bot -> bot) -> bot) -> bot -> bot\n\
            branch=left accepted=bot -> bot\n\
            mp 0 major=(bot -> bot) -> (bot -> bot) -> bot minor=bot -> bot concl=(bot -> bot) -> bot\n\
            mp 1 major=(bot -> bot) -> bot minor=bot -> bot concl=bot\n\
            qed=bot";
        assert_eq!(cert.to_string(), expected);
    }

    #[test]
    fn tampered_cert_rejected() {
        let mut cert = branch_collapse(&Regulator::Total, &Formula::Falsum, Side::Left).unwrap();
        assert!(cert.verify().is_ok());
        cert.mp_trace.pop();
        assert!(cert.verify().is_err());
        let mut cert = branch_collapse(&Regulator::Total, &Formula::Falsum, Side::Left).unwrap();
        cert.regulator = Regulator::SemanticTaut;
        assert!(cert.verify().is_err());
    }

    #[test]
    fn diagonal_collapse_total() {
        let cert = diagonal_collapse(&total_frame(), &LemChoice::Always(Side::Left)).unwrap();
        assert_eq!(cert.b, Formula::Falsum);
        assert!(cert.concludes_falsum());
        assert!(cert.verify().is_ok());
        let via_dec =
            diagonal_collapse(&total_frame(), &LemChoice::Classifier(Classifier::Const(Decision::Tt))).unwrap();
        assert_eq!(via_dec, cert);
    }

    #[test]
    fn diagonal_collapse_blocked_at_eval() {
        let fr = EvalFrame::new(3, EvalRule::Constant(Formula::Falsum), Regulator::SemanticTaut);
        assert!(matches!(
            diagonal_collapse(&fr, &LemChoice::Classifier(Classifier::Taut)),
            Err(ObstructionError::Frame(FrameError::NoCode { .. }))
        ));
    }

    #[test]
    fn aporetic_examples() {
        let v = aporetic_check(&Regulator::Total, &total_frame(), 4).unwrap();
        assert_eq!(v.failing, Hypothesis::Cons);
        assert_eq!(v.all_failing(), vec![Hypothesis::Cons]);
        assert!(matches!(&v.witness, ObstructionWitness::Collapse(c) if c.concludes_falsum()));
        assert!(v.verify(&total_frame()));

        let fr = EvalFrame::new(3, EvalRule::Constant(Formula::Falsum), Regulator::SemanticTaut);
        let v = aporetic_check(&Regulator::SemanticTaut, &fr, 4).unwrap();
        assert_eq!(v.failing, Hypothesis::Eval);
        assert!(matches!(v.witness, ObstructionWitness::Diagonal(_)));
        assert!(v.verify(&fr));

        let r = negfp_base(&[]);
        let fr = EvalFrame::new(3, EvalRule::Constant(b()), r.clone());
        let v = aporetic_check(&r, &fr, 2).unwrap();
        assert_eq!(v.failing, Hypothesis::Lem);
        assert_eq!(v.witness, ObstructionWitness::Undecided(b()));
        assert!(v.verify(&fr));
    }

    #[test]
    fn decision_variant() {
        let fr = EvalFrame::new(3, EvalRule::Constant(Formula::Falsum), Regulator::SemanticTaut);
        let v = decision_check(&Regulator::SemanticTaut, &fr, &Classifier::Taut, 4).unwrap();
        assert_eq!(v.failing, Hypothesis::Eval);
        let v = decision_check(&Regulator::Total, &total_frame(), &Classifier::Const(Decision::Tt), 4).unwrap();
        assert_eq!(v.failing, Hypothesis::Cons);
    }

    #[test]
    fn mismatched_regulator() {
        assert!(matches!(
            aporetic_check(&Regulator::SemanticTaut, &total_frame(), 2),
            Err(ObstructionError::RegulatorMismatch { .. })
        ));
    }

    #[test]
    fn adabs_examples() {
        let cert = adabs(&negfp_base(&[b()]), &b(), &Classifier::Const(Decision::Tt)).unwrap();
        assert_eq!(cert.branch.side, Side::Left);
        assert!(cert.verify().is_ok());
        let cert = adabs(&negfp_base(&[b().neg()]), &b(), &Classifier::Const(Decision::Ff)).unwrap();
        assert_eq!(cert.branch.side, Side::Right);
        assert!(cert.verify().is_ok());
        assert!(matches!(
            adabs(&negfp_base(&[]), &b(), &Classifier::Const(Decision::Tt)),
            Err(ObstructionError::ClassifierUnsound(_))
        ));
        assert!(matches!(
            adabs(&Regulator::SemanticTaut, &b(), &Classifier::Taut),
            Err(ObstructionError::MissingAcceptance(_))
        ));
    }

    #[test]
    fn profile_rows() {
        let r = negfp_base(&[]);
        let frames = vec![
            total_frame(),
            EvalFrame::new(3, EvalRule::Constant(Formula::Falsum), Regulator::SemanticTaut),
            EvalFrame::new(3, EvalRule::Constant(b()), r),
        ];
        let p = profile(&frames, 3).unwrap();
        let failing: Vec<Hypothesis> = p.rows.iter().map(|v| v.as_ref().unwrap().failing).collect();
        assert_eq!(failing, [Hypothesis::Cons, Hypothesis::Eval, Hypothesis::Lem]);
        assert!(p.refutation_holds());
        assert_eq!(p.refutation.len(), 3);

        let empty = profile(&[], 3).unwrap();
        assert!(empty.rows.is_empty() && empty.refutation_holds());
        assert!(empty
            .to_string()
            .ends_with("ref: refutation_trivial holds on 0 regulator(s) at bound 3"));

        let dup = profile(&[total_frame(), total_frame()], 3).unwrap();
        assert_eq!(dup.rows[0], dup.rows[1]);
    }
}
