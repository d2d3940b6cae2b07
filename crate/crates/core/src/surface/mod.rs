//! Surface syntax: named expressions, a resolver to de Bruijn terms, a
//! pretty-printer, and the file-level parser and checker driver.
//!
//! Grammar notes: object application `m · a` (ASCII alias `m @ a`) binds
//! tighter than juxtaposition; `[x] e` extends as far right as possible, so a
//! bracket abstraction may stand bare only as the final argument of an
//! application. `Pi`/`Sigma` support the binder form `Pi (x : A) B`.

mod elab;
mod lex;
mod parse;
mod print;

pub use elab::{check_file, resolve_expr, resolve_sort_expr, CheckedFile};
pub use parse::{parse_expr_str, parse_file, parse_sort_str};
pub use print::{
    print_context, print_decls, print_sort, print_sort_raw, print_term, print_term_raw,
};

use crate::term::Con;

/// A named surface expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Name(String),
    /// `[x] body`
    FwLam(String, Box<Expr>),
    /// Head applied to arguments by juxtaposition (constants take exactly
    /// their arity; anything else folds as framework application).
    Apply(Box<Expr>, Vec<Expr>),
}

/// A named surface sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SortExpr {
    Type,
    El(Box<Expr>),
    Fun(String, Box<SortExpr>, Box<SortExpr>),
}

/// One declaration of a `.mltt` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Assume {
        name: String,
        sort: SortExpr,
        pos: Pos,
    },
    Def {
        name: String,
        sort: SortExpr,
        body: Expr,
        pos: Pos,
    },
    /// Parameterised type abbreviation; expands to a framework function.
    TypeDef {
        name: String,
        params: Vec<(String, SortExpr)>,
        body: Expr,
        pos: Pos,
    },
}

/// A reported problem with position information into the source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub severity: Severity,
    pub file: String,
    pub line: usize,
    pub col: usize,
    pub message: String,
    pub expected: Option<String>,
    pub actual: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Severity {
    Error,
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}:{}:{}: error: {}",
            self.file, self.line, self.col, self.message
        )?;
        if let Some(e) = &self.expected {
            write!(f, "\n  expected: {e}")?;
        }
        if let Some(a) = &self.actual {
            write!(f, "\n  actual:   {a}")?;
        }
        Ok(())
    }
}

/// Expression builders used by the derivation library and tests.
pub mod ex {
    use super::{Expr, ExprKind, Pos};

    pub fn name(s: impl Into<String>) -> Expr {
        Expr {
            kind: ExprKind::Name(s.into()),
            pos: Pos::default(),
        }
    }

    pub fn fw_lam(x: impl Into<String>, body: Expr) -> Expr {
        Expr {
            kind: ExprKind::FwLam(x.into(), Box::new(body)),
            pos: Pos::default(),
        }
    }

    /// Nested framework abstraction `[x1] [x2] ... body`.
    pub fn fw_lams<I: IntoIterator<Item = &'static str>>(xs: I, body: Expr) -> Expr {
        let names: Vec<_> = xs.into_iter().collect();
        names
            .into_iter()
            .rev()
            .fold(body, |acc, x| fw_lam(x, acc))
    }

    pub fn apply(head: Expr, args: Vec<Expr>) -> Expr {
        if args.is_empty() {
            return head;
        }
        Expr {
            kind: ExprKind::Apply(Box::new(head), args),
            pos: Pos::default(),
        }
    }

    /// `head a1 a2 ...` with a named head.
    pub fn call(head: &str, args: Vec<Expr>) -> Expr {
        apply(name(head), args)
    }

    pub fn v(s: &str) -> Expr {
        name(s)
    }

    use super::SortExpr;

    pub fn st_type() -> SortExpr {
        SortExpr::Type
    }

    pub fn st_el(e: Expr) -> SortExpr {
        SortExpr::El(Box::new(e))
    }

    pub fn st_fun(x: impl Into<String>, dom: SortExpr, cod: SortExpr) -> SortExpr {
        SortExpr::Fun(x.into(), Box::new(dom), Box::new(cod))
    }
}

impl Expr {
    /// Does the expression mention `Con::App`-headed applications or other
    /// app-formulation spellings? Only used by diagnostics/tests.
    pub fn mentions(&self, con: Con) -> bool {
        match &self.kind {
            ExprKind::Name(n) => Con::from_name(n) == Some(con),
            ExprKind::FwLam(_, b) => b.mentions(con),
            ExprKind::Apply(h, args) => h.mentions(con) || args.iter().any(|a| a.mentions(con)),
        }
    }

    pub fn occurs_free(&self, name: &str) -> bool {
        match &self.kind {
            ExprKind::Name(n) => n == name,
            ExprKind::FwLam(x, b) => x != name && b.occurs_free(name),
            ExprKind::Apply(h, args) => {
                h.occurs_free(name) || args.iter().any(|a| a.occurs_free(name))
            }
        }
    }

    /// Capture-avoiding substitution of `value` for the free name `name`.
    pub fn subst_name(&self, name: &str, value: &Expr) -> Expr {
        match &self.kind {
            ExprKind::Name(n) => {
                if n == name {
                    value.clone()
                } else {
                    self.clone()
                }
            }
            ExprKind::FwLam(x, b) => {
                if x == name {
                    self.clone()
                } else if value.occurs_free(x) {
                    let mut fresh = format!("{x}'");
                    while value.occurs_free(&fresh) || b.occurs_free(&fresh) {
                        fresh.push('\'');
                    }
                    let renamed = b.subst_name(
                        x,
                        &Expr {
                            kind: ExprKind::Name(fresh.clone()),
                            pos: Pos::default(),
                        },
                    );
                    Expr {
                        kind: ExprKind::FwLam(fresh, Box::new(renamed.subst_name(name, value))),
                        pos: self.pos,
                    }
                } else {
                    Expr {
                        kind: ExprKind::FwLam(x.clone(), Box::new(b.subst_name(name, value))),
                        pos: self.pos,
                    }
                }
            }
            ExprKind::Apply(h, args) => Expr {
                kind: ExprKind::Apply(
                    Box::new(h.subst_name(name, value)),
                    args.iter().map(|a| a.subst_name(name, value)).collect(),
                ),
                pos: self.pos,
            },
        }
    }
}

/// Apply a family expression to one argument, β-reducing when the head is a
/// literal abstraction so no framework redex lands in a synthesizing position.
pub fn apply_family(f: &Expr, arg: Expr) -> Expr {
    if let ExprKind::FwLam(x, body) = &f.kind {
        return body.subst_name(x, &arg);
    }
    ex::apply(f.clone(), vec![arg])
}
