//! Type checker and definitional-equality engine for the fixed signature,
//! parameterized by a rule set. Equality is decided by normalization by
//! evaluation with read-back, comparing normal forms structurally.

mod check;
mod eval;
pub mod value;

pub use check::{
    check, check_context, check_sort, defeq, defeq_sorts, infer, inferable, normalize,
    normalize_sort, normalize_with_fuel, Checker,
};
pub use eval::{Fuel, DEFAULT_FUEL};
