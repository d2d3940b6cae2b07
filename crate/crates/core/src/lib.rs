//! A checker kernel for intensional Martin-Löf type theory in logical-framework
//! presentation, with configurable dependent-product rule sets, a library of
//! kernel-checked derived rules, the sum-based reinterpretation of dependent
//! products together with its disjointness pipeline, and a small surface
//! language.

pub mod derive;
pub mod error;
pub mod kernel;
pub mod pi_prime;
pub mod rules;
pub mod surface;
pub mod term;

pub use error::{ErrorKind, TypeError};
pub use rules::{PiMode, RuleSet};
pub use term::{Con, Context, Sort, Term};
