//! Kernel errors.

use crate::term::Sort;
use std::fmt;
use thiserror::Error;

/// What went wrong.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ErrorKind {
    /// A term does not have the sort demanded of it.
    Mismatch,
    /// A de Bruijn index points outside the context.
    UnboundVariable,
    /// The term's head constant is not licensed by the active rule set.
    RuleNotEnabled,
    /// Framework application of something without a function sort.
    NotAFunctionSort,
    /// A context entry's sort fails to check in its prefix.
    IllFormedContext,
    /// The rewrite budget ran out; reported as a defect, never as inequality.
    FuelExhausted,
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ErrorKind::Mismatch => "sort mismatch",
            ErrorKind::UnboundVariable => "unbound variable",
            ErrorKind::RuleNotEnabled => "rule not enabled",
            ErrorKind::NotAFunctionSort => "not a function sort",
            ErrorKind::IllFormedContext => "ill-formed context",
            ErrorKind::FuelExhausted => "rewrite fuel exhausted",
        };
        f.write_str(s)
    }
}

/// A checking failure, with the path from the root of the offending input to
/// the subterm that failed (child indices; framework bodies are child 0).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct TypeError {
    pub kind: ErrorKind,
    pub path: Vec<usize>,
    pub expected: Option<Sort>,
    pub actual: Option<Sort>,
    pub message: String,
}

impl TypeError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> TypeError {
        TypeError {
            kind,
            path: Vec::new(),
            expected: None,
            actual: None,
            message: message.into(),
        }
    }

    pub fn mismatch(message: impl Into<String>, expected: Option<Sort>, actual: Option<Sort>) -> TypeError {
        TypeError {
            kind: ErrorKind::Mismatch,
            path: Vec::new(),
            expected,
            actual,
            message: message.into(),
        }
    }

    /// Record that the error happened inside child `index` of the current node.
    pub fn at_child(mut self, index: usize) -> TypeError {
        self.path.insert(0, index);
        self
    }
}

impl fmt::Display for TypeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.kind, self.message)?;
        if let Some(e) = &self.expected {
            write!(f, "\n  expected: {e}")?;
        }
        if let Some(a) = &self.actual {
            write!(f, "\n  actual:   {a}")?;
        }
        if !self.path.is_empty() {
            let path = self
                .path
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(".");
            write!(f, "\n  at subterm path {path}")?;
        }
        Ok(())
    }
}

pub type Result<T> = std::result::Result<T, TypeError>;
