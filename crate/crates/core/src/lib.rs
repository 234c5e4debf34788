//! A kernel for closure predicates over the closed falsum/implication
//! fragment.
//!
//! The crate builds negation fixed points from evaluation frames, turns an
//! excluded-middle commitment at the diagonal formula into acceptance of
//! `bot` by two detachments, and certifies that the semantic tautology
//! regulator, which is MP-closed, consistent and decidable, admits no
//! evaluation frame. Refutation classifiers, by contrast, are always
//! inhabited.
//!
//! Modules, bottom-up: [`syntax`], [`semantics`], [`hilbert`], [`regulator`],
//! [`frame`], [`obstruction`], with [`files`] and [`cli`] on top.

pub mod cli;
pub mod exec;
pub mod files;
pub mod frame;
pub mod hilbert;
pub mod obstruction;
pub mod regulator;
pub mod semantics;
pub mod sexp;
pub mod syntax;

pub use syntax::Formula;
