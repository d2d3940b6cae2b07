//! Semantic domain for normalization by evaluation.
//!
//! Canonical constant applications keep their evaluated arguments; binders
//! become closures; stuck eliminations accumulate in spines. A spine is
//! normally headed by a variable, but a non-redex `ext` or `L` application is
//! itself a legitimate stuck head (its arguments need not mention any
//! variable), so heads carry those two cases as well.

use crate::term::{Con, Term};

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Neutral(Neutral),
    /// Framework abstraction as a closure.
    FwLam(Closure),
    /// Canonical object constant with evaluated arguments.
    Con(Con, Vec<Value>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Neutral {
    pub head: Head,
    pub spine: Vec<Elim>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Head {
    /// Free variable as a de Bruijn level.
    Var(usize),
    /// `ext(m, n, k)` whose arguments do not form the computation redex.
    StuckExt(Box<[Value; 3]>),
    /// `L(C, d, m, n, k)` whose last three arguments do not form the redex.
    StuckPiIdElim(Box<[Value; 5]>),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Elim {
    /// Framework application to an argument.
    FwApp(Value),
    /// `app(-, a)`.
    ObApp(Value),
    /// `funsplit(C, d, -)`.
    Funsplit { motive: Value, branch: Value },
    /// `J(C, d, a, b, -)`.
    J {
        motive: Value,
        base: Value,
        lhs: Value,
        rhs: Value,
    },
    /// `split(C, d, -)`.
    Split { motive: Value, branch: Value },
    /// `case(C, f, g, -)`.
    Case {
        motive: Value,
        left: Value,
        right: Value,
    },
    /// `zeroElim(C, -)`.
    ZeroElim { motive: Value },
    /// `Decode(-)`.
    Decode,
    /// `eta(-)`.
    Eta,
}

/// A suspended framework body together with its captured environment.
#[derive(Debug, Clone, PartialEq)]
pub struct Closure {
    pub env: Env,
    pub body: Term,
}

pub type Env = Vec<Value>;

impl Value {
    pub fn var(level: usize) -> Value {
        Value::Neutral(Neutral {
            head: Head::Var(level),
            spine: Vec::new(),
        })
    }

    /// The framework-function argument of a canonical `lam`, if that is what
    /// this value is.
    pub fn lam_body(&self) -> Option<&Value> {
        match self {
            Value::Con(Con::Lam, args) => args.first(),
            _ => None,
        }
    }
}

impl Neutral {
    pub fn extended(mut self, elim: Elim) -> Value {
        self.spine.push(elim);
        Value::Neutral(self)
    }
}
