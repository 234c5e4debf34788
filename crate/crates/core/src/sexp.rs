//! Minimal s-expression reader shared by the formula and proof codecs.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexpError {
    #[error("s-expression error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("malformed s-expression: {0}")]
    Shape(String),
}

impl fmt::Display for Sexp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sexp::Atom(a) => f.write_str(a),
            Sexp::List(items) => {
                f.write_str("(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// Parses exactly one s-expression; surrounding whitespace is allowed.
pub fn parse(text: &str) -> Result<Sexp, SexpError> {
    let bytes = text.as_bytes();
    let mut stack: Vec<Vec<Sexp>> = Vec::new();
    let mut result: Option<Sexp> = None;
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if result.is_some() && stack.is_empty() {
            return Err(SexpError::Syntax {
                pos: i,
                msg: "trailing input".into(),
            });
        }
        let finished = match c {
            b'(' => {
                stack.push(Vec::new());
                i += 1;
                None
            }
            b')' => {
                let items = stack.pop().ok_or(SexpError::Syntax {
                    pos: i,
                    msg: "unbalanced `)`".into(),
                })?;
                i += 1;
                Some(Sexp::List(items))
            }
            _ => {
                let start = i;
                while i < bytes.len() && !bytes[i].is_ascii_whitespace() && bytes[i] != b'(' && bytes[i] != b')' {
                    i += 1;
                }
                Some(Sexp::Atom(text[start..i].to_string()))
            }
        };
        if let Some(node) = finished {
            match stack.last_mut() {
                Some(parent) => parent.push(node),
                None => result = Some(node),
            }
        }
    }
    if !stack.is_empty() {
        return Err(SexpError::Syntax {
            pos: text.len(),
            msg: "unclosed `(`".into(),
        });
    }
    result.ok_or(SexpError::Syntax {
        pos: text.len(),
        msg: "empty input".into(),
    })
}
