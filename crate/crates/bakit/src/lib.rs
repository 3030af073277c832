//! Workbench for a weak arithmetic whose logic lacks Modus Ponens: formula
//! syntax and classes, checkers for its sequent-style proof calculus and
//! for a classical LK calculus with arithmetic, the standard translation
//! passes between them, and Kripke-model machinery for building the
//! countermodels that separate the theories.
//!
//! The `examples/` directory has one runnable example per major
//! capability; the `bakit` binary exposes the same functionality as a
//! small CLI.

pub mod ba;
pub mod lk;
pub mod scenarios;
pub mod semantics;
pub mod syntax;
pub mod transforms;

pub mod cli;
