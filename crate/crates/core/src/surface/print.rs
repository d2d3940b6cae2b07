//! Canonical pretty-printer. `parse ∘ print` is the identity on well-scoped
//! terms, and printed output is stable under a reparse/reprint pass.

use super::{Decl, Expr, ExprKind, SortExpr};
use crate::term::{Con, Context, Sort, Term};
use std::collections::HashSet;

const NAME_POOL: [&str; 15] = [
    "x", "y", "z", "u", "v", "w", "f", "g", "h", "k", "p", "q", "r", "s", "t",
];

struct Namer {
    used: HashSet<String>,
    counter: usize,
}

impl Namer {
    fn new() -> Namer {
        Namer {
            used: HashSet::new(),
            counter: 0,
        }
    }

    fn fresh(&mut self, hint: &str) -> String {
        let ok = |s: &str, used: &HashSet<String>| {
            !s.is_empty() && !used.contains(s) && Con::from_name(s).is_none() && !is_keyword(s)
        };
        if ok(hint, &self.used) {
            self.used.insert(hint.to_string());
            return hint.to_string();
        }
        for cand in NAME_POOL {
            if ok(cand, &self.used) {
                self.used.insert(cand.to_string());
                return cand.to_string();
            }
        }
        loop {
            self.counter += 1;
            let cand = format!("x{}", self.counter);
            if ok(&cand, &self.used) {
                self.used.insert(cand.clone());
                return cand;
            }
        }
    }
}

fn is_keyword(s: &str) -> bool {
    matches!(s, "assume" | "def" | "type" | "Type" | "El")
}

/// Convert a term back to named surface syntax, inventing binder names.
fn term_to_expr(t: &Term, names: &mut Vec<String>, namer: &mut Namer) -> Expr {
    use super::ex;
    match t {
        Term::Var(i) => {
            let name = if *i < names.len() {
                names[names.len() - 1 - i].clone()
            } else {
                format!("#{}", i - names.len())
            };
            ex::name(name)
        }
        Term::FwLam(b) => {
            let x = namer.fresh("");
            names.push(x.clone());
            let body = term_to_expr(b, names, namer);
            names.pop();
            ex::fw_lam(x, body)
        }
        Term::FwApp(..) => {
            // Flatten an application spine.
            let mut args = Vec::new();
            let mut head = t;
            while let Term::FwApp(f, a) = head {
                args.push(a);
                head = f;
            }
            let head = term_to_expr(head, names, namer);
            let args = args
                .into_iter()
                .rev()
                .map(|a| term_to_expr(a, names, namer))
                .collect();
            flatten_apply(head, args)
        }
        Term::Con(c, args) => {
            let args = args
                .iter()
                .map(|a| term_to_expr(a, names, namer))
                .collect::<Vec<_>>();
            ex::call(c.name(), args)
        }
    }
}

fn flatten_apply(head: Expr, mut args: Vec<Expr>) -> Expr {
    use super::ex;
    if let ExprKind::Apply(h, existing) = head.kind {
        let mut all = existing;
        all.append(&mut args);
        ex::apply(*h, all)
    } else {
        ex::apply(head, args)
    }
}

fn level(e: &Expr) -> u8 {
    match &e.kind {
        ExprKind::Name(_) => 0,
        ExprKind::FwLam(..) => 3,
        ExprKind::Apply(h, args) => {
            if let ExprKind::Name(n) = &h.kind {
                if n == "app" && args.len() == 2 {
                    return 1;
                }
                if (n == "Pi" || n == "Sigma")
                    && args.len() == 2
                    && matches!(args[1].kind, ExprKind::FwLam(..))
                {
                    return 3;
                }
                if n == "lam" && args.len() == 1 && matches!(args[0].kind, ExprKind::FwLam(..)) {
                    return 3;
                }
            }
            2
        }
    }
}

fn print_expr(e: &Expr, max: u8, out: &mut String) {
    if level(e) > max {
        out.push('(');
        print_expr(e, 3, out);
        out.push(')');
        return;
    }
    match &e.kind {
        ExprKind::Name(n) => out.push_str(n),
        ExprKind::FwLam(x, b) => {
            out.push('[');
            out.push_str(x);
            out.push_str("] ");
            print_expr(b, 3, out);
        }
        ExprKind::Apply(h, args) => {
            if let ExprKind::Name(n) = &h.kind {
                if n == "app" && args.len() == 2 {
                    print_expr(&args[0], 1, out);
                    out.push_str(" · ");
                    print_expr(&args[1], 0, out);
                    return;
                }
                if (n == "Pi" || n == "Sigma") && args.len() == 2 {
                    if let ExprKind::FwLam(x, b) = &args[1].kind {
                        out.push_str(n);
                        out.push_str(" (");
                        out.push_str(x);
                        out.push_str(" : ");
                        print_expr(&args[0], 3, out);
                        out.push_str(") ");
                        print_expr(b, 3, out);
                        return;
                    }
                }
                if n == "lam" && args.len() == 1 {
                    if let ExprKind::FwLam(..) = &args[0].kind {
                        out.push_str("lam ");
                        print_expr(&args[0], 3, out);
                        return;
                    }
                }
            }
            print_expr(h, 2, out);
            for a in args {
                out.push(' ');
                print_expr(a, 0, out);
            }
        }
    }
}

pub fn expr_to_string(e: &Expr) -> String {
    let mut s = String::new();
    print_expr(e, 3, &mut s);
    s
}

fn sort_expr_to_string(s: &SortExpr) -> String {
    match s {
        SortExpr::Type => "Type".to_string(),
        SortExpr::El(e) => {
            let mut out = String::from("El ");
            print_expr(e, 0, &mut out);
            out
        }
        SortExpr::Fun(x, d, c) => {
            format!("({} : {}) {}", x, sort_expr_to_string(d), sort_expr_to_string(c))
        }
    }
}

fn sort_to_expr(s: &Sort, names: &mut Vec<String>, namer: &mut Namer) -> SortExpr {
    match s {
        Sort::Type => SortExpr::Type,
        Sort::El(t) => SortExpr::El(Box::new(term_to_expr(t, names, namer))),
        Sort::Fun(d, c) => {
            let dom = sort_to_expr(d, names, namer);
            let x = namer.fresh("");
            names.push(x.clone());
            let cod = sort_to_expr(c, names, namer);
            names.pop();
            SortExpr::Fun(x, Box::new(dom), Box::new(cod))
        }
    }
}

fn ctx_names(ctx: &Context, namer: &mut Namer) -> Vec<String> {
    ctx.entries()
        .iter()
        .map(|(hint, _)| namer.fresh(hint))
        .collect()
}

/// Print a term whose free variables come from `ctx`.
pub fn print_term(ctx: &Context, t: &Term) -> String {
    let mut namer = Namer::new();
    let mut names = ctx_names(ctx, &mut namer);
    expr_to_string(&term_to_expr(t, &mut names, &mut namer))
}

/// Print a sort whose free variables come from `ctx`.
pub fn print_sort(ctx: &Context, s: &Sort) -> String {
    let mut namer = Namer::new();
    let mut names = ctx_names(ctx, &mut namer);
    sort_expr_to_string(&sort_to_expr(s, &mut names, &mut namer))
}

/// Context-free printing; stray free variables show as `#i`.
pub fn print_term_raw(t: &Term) -> String {
    let mut namer = Namer::new();
    expr_to_string(&term_to_expr(t, &mut Vec::new(), &mut namer))
}

pub fn print_sort_raw(s: &Sort) -> String {
    let mut namer = Namer::new();
    sort_expr_to_string(&sort_to_expr(s, &mut Vec::new(), &mut namer))
}

/// `x : S, y : T, ...`
pub fn print_context(ctx: &Context) -> String {
    let mut namer = Namer::new();
    let mut names: Vec<String> = Vec::new();
    let mut parts = Vec::new();
    for (hint, sort) in ctx.entries() {
        let rendered = sort_expr_to_string(&sort_to_expr(sort, &mut names, &mut namer));
        let name = namer.fresh(hint);
        parts.push(format!("{name} : {rendered}"));
        names.push(name);
    }
    parts.join(", ")
}

/// Canonical form of a whole file.
pub fn print_decls(decls: &[Decl]) -> String {
    let mut out = String::new();
    for d in decls {
        match d {
            Decl::Assume { name, sort, .. } => {
                out.push_str(&format!("assume {} : {}\n", name, sort_expr_to_string(sort)));
            }
            Decl::Def {
                name, sort, body, ..
            } => {
                out.push_str(&format!(
                    "def {} : {} := {}\n",
                    name,
                    sort_expr_to_string(sort),
                    expr_to_string(body)
                ));
            }
            Decl::TypeDef {
                name, params, body, ..
            } => {
                let params = params
                    .iter()
                    .map(|(p, s)| format!(" ({} : {})", p, sort_expr_to_string(s)))
                    .collect::<String>();
                out.push_str(&format!(
                    "type {}{} := {}\n",
                    name,
                    params,
                    expr_to_string(body)
                ));
            }
        }
    }
    out
}
