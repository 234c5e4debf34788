//! Certificate text format.
//!
//! A proof is one s-expression: `(k F G)`, `(s F G H)`, `(ax N)`, `(hyp N)`
//! or `(mp P Q)`, with formulas written `bot` / `(imp F G)`. Theory and
//! context files hold one formula s-expression per line.

use std::fmt;
use std::str::FromStr;

use super::Proof;
use crate::sexp::{self, Sexp, SexpError};
use crate::syntax::Formula;

impl fmt::Display for Proof {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proof::K(a, b) => write!(f, "(k {} {})", a.to_sexp(), b.to_sexp()),
            Proof::S(a, b, c) => write!(f, "(s {} {} {})", a.to_sexp(), b.to_sexp(), c.to_sexp()),
            Proof::Ax(i) => write!(f, "(ax {i})"),
            Proof::Hyp(i) => write!(f, "(hyp {i})"),
            Proof::Mp(p, q) => write!(f, "(mp {p} {q})"),
        }
    }
}

impl FromStr for Proof {
    type Err = SexpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Proof::from_sexp(&sexp::parse(s)?)
    }
}

impl Proof {
    pub fn from_sexp(tree: &Sexp) -> Result<Proof, SexpError> {
        let items = match tree {
            Sexp::List(items) => items,
            Sexp::Atom(a) => return Err(SexpError::Shape(format!("expected proof node, found atom `{a}`"))),
        };
        let (head, args) = match items.split_first() {
            Some((Sexp::Atom(head), args)) => (head.as_str(), args),
            _ => return Err(SexpError::Shape(format!("expected proof node, found {tree}"))),
        };
        match (head, args) {
            ("k", [a, b]) => Ok(Proof::K(Formula::from_sexp(a)?, Formula::from_sexp(b)?)),
            ("s", [a, b, c]) => Ok(Proof::S(
                Formula::from_sexp(a)?,
                Formula::from_sexp(b)?,
                Formula::from_sexp(c)?,
            )),
            ("ax", [n]) => Ok(Proof::Ax(index(n)?)),
            ("hyp", [n]) => Ok(Proof::Hyp(index(n)?)),
            ("mp", [p, q]) => Ok(Proof::mp(Proof::from_sexp(p)?, Proof::from_sexp(q)?)),
            _ => Err(SexpError::Shape(format!("unknown proof node {tree}"))),
        }
    }
}

fn index(n: &Sexp) -> Result<usize, SexpError> {
    match n {
        Sexp::Atom(a) if a.bytes().all(|b| b.is_ascii_digit()) => a
            .parse()
            .map_err(|_| SexpError::Shape(format!("index `{a}` out of range"))),
        _ => Err(SexpError::Shape(format!("expected index, found {n}"))),
    }
}

/// Reads a theory or context file. Blank lines and `#` comments are skipped;
/// lines may use either the s-expression or the surface syntax.
pub fn parse_formula_list(text: &str) -> Result<Vec<Formula>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let formula = Formula::parse_sexp(line)
            .or_else(|_| crate::syntax::parse(line))
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        out.push(formula);
    }
    Ok(out)
}

pub fn render_formula_list(formulas: &[Formula]) -> String {
    formulas.iter().map(|f| f.to_sexp() + "\n").collect()
}
