//! Name resolution and file-level checking.

use super::{Decl, Diagnostic, Expr, ExprKind, Pos, Severity, SortExpr};
use crate::error::TypeError;
use crate::kernel::{self, Checker, Fuel};
use crate::rules::RuleSet;
use crate::term::build::*;
use crate::term::{Con, Context, Sort, Term};
use std::collections::HashMap;

/// A definition recorded while checking a file: the elaborated term and the
/// context length it was elaborated at (uses shift by the difference).
#[derive(Debug, Clone)]
struct DefEntry {
    term: Term,
    ctx_len: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Scope {
    names: Vec<String>,
    defs: HashMap<String, DefEntry>,
}

impl Scope {
    fn from_names(names: Vec<String>) -> Scope {
        Scope {
            names,
            defs: HashMap::new(),
        }
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.names
            .iter()
            .rev()
            .position(|n| n == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolveError {
    pub pos: Pos,
    pub message: String,
}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ResolveError> {
    Err(ResolveError {
        pos,
        message: message.into(),
    })
}

fn resolve(e: &Expr, scope: &Scope) -> Result<Term, ResolveError> {
    match &e.kind {
        ExprKind::Name(n) => resolve_name(n, e.pos, scope),
        ExprKind::FwLam(x, body) => {
            let mut inner = scope.clone();
            inner.names.push(x.clone());
            Ok(fw_lam(resolve(body, &inner)?))
        }
        ExprKind::Apply(head, args) => {
            // A constant head consumes exactly its arity.
            if let ExprKind::Name(n) = &head.kind {
                if scope.index_of(n).is_none() && !scope.defs.contains_key(n.as_str()) {
                    if let Some(c) = Con::from_name(n) {
                        if args.len() < c.arity() {
                            return err(
                                e.pos,
                                format!(
                                    "constant `{}` takes {} arguments, got {}",
                                    n,
                                    c.arity(),
                                    args.len()
                                ),
                            );
                        }
                        let (own, rest) = args.split_at(c.arity());
                        let own = own
                            .iter()
                            .map(|a| resolve(a, scope))
                            .collect::<Result<Vec<_>, _>>()?;
                        let mut t = Term::con(c, own);
                        for r in rest {
                            t = fw_app(t, resolve(r, scope)?);
                        }
                        return Ok(t);
                    }
                }
            }
            let mut t = resolve(head, scope)?;
            for a in args {
                t = fw_app(t, resolve(a, scope)?);
            }
            Ok(t)
        }
    }
}

fn resolve_name(n: &str, pos: Pos, scope: &Scope) -> Result<Term, ResolveError> {
    if let Some(i) = scope.index_of(n) {
        return Ok(var(i));
    }
    if let Some(entry) = scope.defs.get(n) {
        return Ok(entry.term.shift_up(scope.names.len() - entry.ctx_len));
    }
    if let Some(c) = Con::from_name(n) {
        if c.arity() == 0 {
            return Ok(Term::con(c, vec![]));
        }
        return err(
            pos,
            format!("constant `{n}` takes {} arguments", c.arity()),
        );
    }
    err(pos, format!("unknown name `{n}`"))
}

fn resolve_sort(s: &SortExpr, scope: &Scope) -> Result<Sort, ResolveError> {
    match s {
        SortExpr::Type => Ok(Sort::Type),
        SortExpr::El(e) => Ok(Sort::El(resolve(e, scope)?)),
        SortExpr::Fun(x, d, c) => {
            let dom = resolve_sort(d, scope)?;
            let mut inner = scope.clone();
            inner.names.push(x.clone());
            Ok(Sort::fun(dom, resolve_sort(c, &inner)?))
        }
    }
}

/// Resolve a standalone expression against the names of a context.
pub fn resolve_expr(e: &Expr, names: &[String]) -> Result<Term, ResolveError> {
    resolve(e, &Scope::from_names(names.to_vec()))
}

/// Resolve a standalone sort expression against the names of a context.
pub fn resolve_sort_expr(s: &SortExpr, names: &[String]) -> Result<Sort, ResolveError> {
    resolve_sort(s, &Scope::from_names(names.to_vec()))
}

/// Result of checking a whole file.
#[derive(Debug)]
pub struct CheckedFile {
    pub context: Context,
    /// Elaborated definition bodies in declaration order.
    pub defs: Vec<(String, Term, Sort)>,
    pub diagnostics: Vec<Diagnostic>,
}

impl CheckedFile {
    pub fn ok(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

fn type_error_diag(file: &str, pos: Pos, ctx: &Context, e: &TypeError) -> Diagnostic {
    Diagnostic {
        severity: Severity::Error,
        file: file.to_string(),
        line: pos.line,
        col: pos.col,
        message: e.message.clone(),
        expected: e.expected.as_ref().map(|s| super::print_sort(ctx, s)),
        actual: e.actual.as_ref().map(|s| super::print_sort(ctx, s)),
    }
}

/// Check a parsed file under the given rule set. Declarations see only what
/// precedes them; names must be unique per file.
pub fn check_file(file: &str, decls: &[Decl], cfg: &RuleSet, fuel: u64) -> CheckedFile {
    let mut scope = Scope::default();
    let mut ctx = Context::new();
    let mut defs = Vec::new();
    let mut diagnostics = Vec::new();
    let mut seen: HashMap<String, ()> = HashMap::new();

    for decl in decls {
        let (name, pos) = match decl {
            Decl::Assume { name, pos, .. }
            | Decl::Def { name, pos, .. }
            | Decl::TypeDef { name, pos, .. } => (name.clone(), *pos),
        };
        if seen.insert(name.clone(), ()).is_some() {
            diagnostics.push(Diagnostic {
                severity: Severity::Error,
                file: file.to_string(),
                line: pos.line,
                col: pos.col,
                message: format!("duplicate name `{name}`"),
                expected: None,
                actual: None,
            });
            continue;
        }
        let mut checker = Checker::new(cfg, Fuel::new(fuel));
        match decl {
            Decl::Assume { name, sort, pos } => {
                let resolved = match resolve_sort(sort, &scope) {
                    Ok(s) => s,
                    Err(e) => {
                        diagnostics.push(resolve_diag(file, &e));
                        continue;
                    }
                };
                if let Err(e) = checker.check_sort(&ctx, &resolved) {
                    diagnostics.push(type_error_diag(file, *pos, &ctx, &e));
                    continue;
                }
                ctx.push(name.clone(), resolved);
                scope.names.push(name.clone());
            }
            Decl::Def { name, sort, body, pos } => {
                let resolved_sort = match resolve_sort(sort, &scope) {
                    Ok(s) => s,
                    Err(e) => {
                        diagnostics.push(resolve_diag(file, &e));
                        continue;
                    }
                };
                let resolved_body = match resolve(body, &scope) {
                    Ok(t) => t,
                    Err(e) => {
                        diagnostics.push(resolve_diag(file, &e));
                        continue;
                    }
                };
                if let Err(e) = checker.check_sort(&ctx, &resolved_sort) {
                    diagnostics.push(type_error_diag(file, *pos, &ctx, &e));
                    continue;
                }
                if let Err(e) = checker.check(&ctx, &resolved_body, &resolved_sort) {
                    diagnostics.push(type_error_diag(file, *pos, &ctx, &e));
                    continue;
                }
                scope.defs.insert(
                    name.clone(),
                    DefEntry {
                        term: resolved_body.clone(),
                        ctx_len: ctx.len(),
                    },
                );
                defs.push((name.clone(), resolved_body, resolved_sort));
            }
            Decl::TypeDef {
                name,
                params,
                body,
                pos,
            } => {
                let mut inner = scope.clone();
                let mut doms = Vec::new();
                let mut fail = None;
                for (p, ps) in params {
                    match resolve_sort(ps, &inner) {
                        Ok(s) => {
                            doms.push(s);
                            inner.names.push(p.clone());
                        }
                        Err(e) => {
                            fail = Some(e);
                            break;
                        }
                    }
                }
                if let Some(e) = fail {
                    diagnostics.push(resolve_diag(file, &e));
                    continue;
                }
                let resolved_body = match resolve(body, &inner) {
                    Ok(t) => t,
                    Err(e) => {
                        diagnostics.push(resolve_diag(file, &e));
                        continue;
                    }
                };
                let mut term = resolved_body;
                let mut sort = Sort::Type;
                for dom in doms.into_iter().rev() {
                    term = fw_lam(term);
                    sort = Sort::fun(dom, sort);
                }
                if let Err(e) = checker.check_sort(&ctx, &sort) {
                    diagnostics.push(type_error_diag(file, *pos, &ctx, &e));
                    continue;
                }
                if let Err(e) = checker.check(&ctx, &term, &sort) {
                    diagnostics.push(type_error_diag(file, *pos, &ctx, &e));
                    continue;
                }
                scope.defs.insert(
                    name.clone(),
                    DefEntry {
                        term: term.clone(),
                        ctx_len: ctx.len(),
                    },
                );
                defs.push((name.clone(), term, sort));
            }
        }
    }

    let _ = kernel::check_context(cfg, &ctx);
    CheckedFile {
        context: ctx,
        defs,
        diagnostics,
    }
}

fn resolve_diag(file: &str, e: &ResolveError) -> Diagnostic {
    Diagnostic {
        severity: Severity::Error,
        file: file.to_string(),
        line: e.pos.line,
        col: e.pos.col,
        message: e.message.clone(),
        expected: None,
        actual: None,
    }
}
