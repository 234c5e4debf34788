//! Formulas of the closed falsum/implication fragment.
//!
//! There are no propositional variables: every formula is a finite binary
//! tree whose leaves are all `bot`. The surface syntax is
//!
//! ```text
//! F ::= G | G -> F        (arrow is right-associative)
//! G ::= bot | ~ G | ( F )
//! ```
//!
//! where `~ G` is sugar for `G -> bot`. Certificates use a separate
//! s-expression form, `bot | (imp F G)`, see [`Formula::to_sexp`].

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::sexp::{self, Sexp};

/// Default upper bound for [`enumerate`].
pub const ENUMERATION_CAP: usize = 10;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Falsum,
    Imp(Arc<Formula>, Arc<Formula>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("syntax error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("enumeration size {requested} exceeds cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

impl Formula {
    pub fn bot() -> Formula {
        Formula::Falsum
    }

    pub fn imp(antecedent: Formula, consequent: Formula) -> Formula {
        Formula::Imp(Arc::new(antecedent), Arc::new(consequent))
    }

    /// `A -> bot`.
    pub fn neg(&self) -> Formula {
        Formula::imp(self.clone(), Formula::Falsum)
    }

    /// Applies [`Formula::neg`] `times` times.
    pub fn neg_n(&self, times: usize) -> Formula {
        (0..times).fold(self.clone(), |f, _| f.neg())
    }

    pub fn is_falsum(&self) -> bool {
        matches!(self, Formula::Falsum)
    }

    pub fn as_imp(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Falsum => None,
            Formula::Imp(a, b) => Some((a, b)),
        }
    }

    /// Number of implication nodes.
    pub fn size(&self) -> usize {
        let mut total = 0;
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if let Formula::Imp(a, b) = f {
                total += 1;
                stack.push(a);
                stack.push(b);
            }
        }
        total
    }

    /// All subterms, including `self`, without duplicates.
    pub fn subterms(&self) -> Vec<Formula> {
        let mut out: Vec<Formula> = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if out.contains(f) {
                continue;
            }
            out.push(f.clone());
            if let Formula::Imp(a, b) = f {
                stack.push(a);
                stack.push(b);
            }
        }
        out
    }

    pub fn to_sexp(&self) -> String {
        let mut out = String::new();
        self.write_sexp(&mut out);
        out
    }

    fn write_sexp(&self, out: &mut String) {
        match self {
            Formula::Falsum => out.push_str("bot"),
            Formula::Imp(a, b) => {
                out.push_str("(imp ");
                a.write_sexp(out);
                out.push(' ');
                b.write_sexp(out);
                out.push(')');
            }
        }
    }

    pub fn from_sexp(tree: &Sexp) -> Result<Formula, sexp::SexpError> {
        match tree {
            Sexp::Atom(a) if a == "bot" => Ok(Formula::Falsum),
            Sexp::List(items) => match items.as_slice() {
                [Sexp::Atom(head), a, b] if head == "imp" => {
                    Ok(Formula::imp(Formula::from_sexp(a)?, Formula::from_sexp(b)?))
                }
                _ => Err(sexp::SexpError::Shape(format!("expected (imp F G), found {tree}"))),
            },
            Sexp::Atom(a) => Err(sexp::SexpError::Shape(format!("expected formula, found atom `{a}`"))),
        }
    }

    pub fn parse_sexp(text: &str) -> Result<Formula, sexp::SexpError> {
        Formula::from_sexp(&sexp::parse(text)?)
    }
}

impl fmt::Display for Formula {
    /// Canonical surface form: no `~` sugar, parentheses only around
    /// implications in antecedent position.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Falsum => f.write_str("bot"),
            Formula::Imp(a, b) => {
                if a.is_falsum() {
                    write!(f, "bot -> {b}")
                } else {
                    write!(f, "({a}) -> {b}")
                }
            }
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl std::str::FromStr for Formula {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

pub fn print(f: &Formula) -> String {
    f.to_string()
}

pub fn neg(a: &Formula) -> Formula {
    a.neg()
}

pub fn size(a: &Formula) -> usize {
    a.size()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Bot,
    Arrow,
    Tilde,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SyntaxError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'(' => {
                out.push((i, Token::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Token::RParen));
                i += 1;
            }
            b'~' => {
                out.push((i, Token::Tilde));
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                out.push((i, Token::Arrow));
                i += 2;
            }
            _ if text[i..].starts_with("bot") => {
                let next = bytes.get(i + 3);
                if next.is_some_and(|n| n.is_ascii_alphanumeric() || *n == b'_') {
                    return Err(SyntaxError::Parse {
                        pos: i,
                        msg: "unknown identifier".into(),
                    });
                }
                out.push((i, Token::Bot));
                i += 3;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(SyntaxError::Parse {
                    pos: i,
                    msg: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<Token> {
        self.tokens.get(self.pos).map(|t| t.1)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn error<T>(&self, msg: &str) -> Result<T, SyntaxError> {
        Err(SyntaxError::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn implication(&mut self) -> Result<Formula, SyntaxError> {
        // Collect the right spine iteratively so long chains do not recurse.
        let mut spine = vec![self.atom()?];
        while self.peek() == Some(Token::Arrow) {
            self.pos += 1;
            spine.push(self.atom()?);
        }
        let mut acc = spine.pop().expect("spine is nonempty");
        while let Some(lhs) = spine.pop() {
            acc = Formula::imp(lhs, acc);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Formula, SyntaxError> {
        let mut negations = 0;
        while self.peek() == Some(Token::Tilde) {
            self.pos += 1;
            negations += 1;
        }
        let base = match self.peek() {
            Some(Token::Bot) => {
                self.pos += 1;
                Formula::Falsum
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.implication()?;
                if self.peek() != Some(Token::RParen) {
                    return self.error("expected `)`");
                }
                self.pos += 1;
                inner
            }
            Some(_) => return self.error("expected `bot`, `~` or `(`"),
            None => return self.error("unexpected end of input"),
        };
        Ok(base.neg_n(negations))
    }
}

/// Parses the surface syntax. `~` binds tighter than `->`.
pub fn parse(text: &str) -> Result<Formula, SyntaxError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let f = parser.implication()?;
    if parser.pos != parser.tokens.len() {
        return parser.error("trailing input");
    }
    Ok(f)
}

/// Every formula with exactly `n` implication nodes, in antecedent-size-major
/// order. Fails above [`ENUMERATION_CAP`].
pub fn enumerate(n: usize) -> Result<Vec<Formula>, SyntaxError> {
    enumerate_capped(n, ENUMERATION_CAP)
}

pub fn enumerate_capped(n: usize, cap: usize) -> Result<Vec<Formula>, SyntaxError> {
    if n > cap {
        return Err(SyntaxError::CapExceeded { requested: n, cap });
    }
    Ok(levels(n).pop().unwrap_or_default())
}

/// All formulas of size `0..=n`, concatenated level by level.
pub fn enumerate_up_to(n: usize) -> Result<Vec<Formula>, SyntaxError> {
    if n > ENUMERATION_CAP {
        return Err(SyntaxError::CapExceeded {
            requested: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(levels(n).into_iter().flatten().collect())
}

fn levels(n: usize) -> Vec<Vec<Formula>> {
    let mut table: Vec<Vec<Formula>> = vec![vec![Formula::Falsum]];
    for k in 1..=n {
        let mut level = Vec::new();
        for left in 0..k {
            for a in &table[left] {
                for b in &table[k - 1 - left] {
                    level.push(Formula::imp(a.clone(), b.clone()));
                }
            }
        }
        table.push(level);
    }
    table
}
