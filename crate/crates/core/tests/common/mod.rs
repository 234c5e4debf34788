//! Independent oracles and generators shared by the integration tests.
//!
//! Nothing here calls into the library's enumerator or evaluator: formulas are
//! built as fully parenthesised strings and evaluated with a small stack
//! machine.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use aporetic::hilbert::{check, Context, Proof, Theory};
use aporetic::syntax::parse;
use aporetic::Formula;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Frozen oracle values: formulas per size 0..=6.
pub const CATALAN: [usize; 7] = [1, 1, 2, 5, 14, 42, 132];
/// Frozen oracle values: tautologies per size 0..=6.
pub const TAUTOLOGIES: [usize; 7] = [0, 1, 1, 4, 9, 31, 91];

/// All formulas of exactly `n` implications, as `(A -> B)` strings.
pub fn brute_trees(n: usize) -> Vec<String> {
    let mut by_size: Vec<Vec<String>> = vec![vec!["bot".to_string()]];
    for k in 1..=n {
        let mut level = Vec::new();
        for i in 0..k {
            for a in &by_size[i] {
                for b in &by_size[k - 1 - i] {
                    level.push(format!("({a} -> {b})"));
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(n)
}

/// Distinct trees, with duplicates detected by string identity.
pub fn brute_count(n: usize) -> usize {
    brute_trees(n).into_iter().collect::<HashSet<_>>().len()
}

/// Truth value of a fully parenthesised string.
pub fn stack_truth(text: &str) -> bool {
    let mut stack: Vec<Option<bool>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if let Some(r) = rest.strip_prefix("bot") {
            stack.push(Some(false));
            rest = r;
        } else if let Some(r) = rest.strip_prefix("->") {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('(') {
            stack.push(None);
            rest = r;
        } else if let Some(r) = rest.strip_prefix(')') {
            let y = stack.pop().flatten().expect("consequent");
            let x = stack.pop().flatten().expect("antecedent");
            assert_eq!(stack.pop(), Some(None), "unbalanced");
            stack.push(Some(!x || y));
            rest = r;
        } else if rest.is_empty() {
            break;
        } else {
            panic!("oracle cannot read `{rest}`");
        }
    }
    assert_eq!(stack.len(), 1);
    stack[0].expect("value")
}

/// Fully parenthesised rendering, independent of the library printer.
pub fn full_parens(f: &Formula) -> String {
    match f.as_imp() {
        None => "bot".to_string(),
        Some((a, b)) => format!("({} -> {})", full_parens(a), full_parens(b)),
    }
}

pub fn oracle_truth(f: &Formula) -> bool {
    stack_truth(&full_parens(f))
}

/// `T(n) = sum_i C(i) C(n-1-i) - T(i) F(n-1-i)`: an implication is false
/// exactly when its antecedent is true and its consequent false.
pub fn tautology_recurrence(n: usize) -> Vec<usize> {
    let mut c = vec![1usize];
    let mut t = vec![0usize];
    for k in 1..=n {
        let (mut ck, mut tk) = (0, 0);
        for i in 0..k {
            let j = k - 1 - i;
            ck += c[i] * c[j];
            tk += c[i] * c[j] - t[i] * (c[j] - t[j]);
        }
        c.push(ck);
        t.push(tk);
    }
    t
}

pub fn f(s: &str) -> Formula {
    parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn random_formula(rng: &mut ChaCha8Rng, size: usize) -> Formula {
    if size == 0 {
        return Formula::Falsum;
    }
    let left = rng.gen_range(0..size);
    Formula::imp(random_formula(rng, left), random_formula(rng, size - 1 - left))
}

pub fn small_formula(rng: &mut ChaCha8Rng, max: usize) -> Formula {
    let size = rng.gen_range(0..=max);
    random_formula(rng, size)
}

pub fn true_formula(rng: &mut ChaCha8Rng, max: usize) -> Formula {
    loop {
        let a = small_formula(rng, max);
        if oracle_truth(&a) {
            return a;
        }
    }
}

/// Well-typed proofs grown from hypothesis, axiom and schema leaves by
/// detachment, `K`-weakening and `S`-composition, never deeper than
/// `max_depth`.
pub struct ProofPool {
    pub theory: Theory,
    pub context: Context,
    pub proofs: Vec<(Proof, Formula)>,
}

impl ProofPool {
    pub fn grow(rng: &mut ChaCha8Rng, theory: Theory, context: Context, max_depth: usize, rounds: usize) -> ProofPool {
        let mut atoms: Vec<Formula> = theory.axioms.iter().chain(&context.hypotheses).cloned().collect();
        for _ in 0..3 {
            atoms.push(small_formula(rng, 2));
        }
        let mut proofs: Vec<(Proof, Formula)> = Vec::new();
        proofs.extend((0..context.hypotheses.len()).map(|i| (Proof::Hyp(i), context.hypotheses[i].clone())));
        proofs.extend((0..theory.axioms.len()).map(|i| (Proof::Ax(i), theory.axioms[i].clone())));
        for _ in 0..4 {
            let (a, b) = (pick(rng, &atoms), pick(rng, &atoms));
            proofs.push((
                Proof::K(a.clone(), b.clone()),
                Formula::imp(a.clone(), Formula::imp(b, a)),
            ));
            let (a, b, c) = (pick(rng, &atoms), pick(rng, &atoms), pick(rng, &atoms));
            let s = Formula::imp(
                Formula::imp(a.clone(), Formula::imp(b.clone(), c.clone())),
                Formula::imp(Formula::imp(a.clone(), b.clone()), Formula::imp(a.clone(), c.clone())),
            );
            proofs.push((Proof::S(a, b, c), s));
        }
        let mut seen: HashSet<Formula> = HashSet::new();
        for _ in 0..rounds {
            let by_conclusion: HashMap<&Formula, usize> = proofs.iter().enumerate().map(|(i, (_, c))| (c, i)).collect();
            let mut fresh = Vec::new();
            let (q, u) = &proofs[rng.gen_range(0..proofs.len())];
            if q.depth() + 2 <= max_depth {
                let w = pick(rng, &atoms);
                fresh.push((
                    Proof::mp(Proof::K(u.clone(), w.clone()), q.clone()),
                    Formula::imp(w, u.clone()),
                ));
            }
            let (p, t) = &proofs[rng.gen_range(0..proofs.len())];
            if let Some((x, y)) = t.as_imp() {
                if let Some(&j) = by_conclusion.get(x) {
                    let minor = &proofs[j].0;
                    if p.depth().max(minor.depth()) < max_depth {
                        fresh.push((Proof::mp(p.clone(), minor.clone()), y.clone()));
                    }
                }
                if let Some((yy, z)) = y.as_imp() {
                    let want = Formula::imp(x.clone(), yy.clone());
                    if let Some(&j) = by_conclusion.get(&want) {
                        let minor = &proofs[j].0;
                        if p.depth().max(minor.depth()) + 2 < max_depth {
                            let major = Proof::mp(Proof::S(x.clone(), yy.clone(), z.clone()), p.clone());
                            fresh.push((Proof::mp(major, minor.clone()), Formula::imp(x.clone(), z.clone())));
                        }
                    }
                }
            }
            drop(by_conclusion);
            for (proof, concl) in fresh {
                if seen.insert(concl.clone()) {
                    proofs.push((proof, concl));
                }
            }
        }
        ProofPool {
            theory,
            context,
            proofs,
        }
    }

    /// A proof with at least one detachment, if the pool has one.
    pub fn pick_compound(&self, rng: &mut ChaCha8Rng) -> Option<&(Proof, Formula)> {
        let compound: Vec<&(Proof, Formula)> = self.proofs.iter().filter(|(p, _)| matches!(p, Proof::Mp(..))).collect();
        compound.choose(rng).copied()
    }
}

fn pick(rng: &mut ChaCha8Rng, atoms: &[Formula]) -> Formula {
    atoms.choose(rng).expect("atoms").clone()
}

/// A checked proof of `goal` exists in `pool`.
pub fn certified(pool: &ProofPool, p: &Proof, goal: &Formula) -> bool {
    check(p, &pool.theory, &pool.context, goal).is_accept()
}
