//! Kernel-checked derived rules.
//!
//! Each entry constructs a closed-over proof term as a term-level macro, then
//! verification checks it against its declared sort under a rule set and
//! validates every declared computation equality by definitional equality.

pub mod builders;
mod registry;

pub use registry::{
    build, d_ext_cong, d_ext_from_xi_eta, d_l_from_ext_mu, registry, Entry, ExtMuSource, XiSource,
};

use crate::error::{ErrorKind, Result, TypeError};
use crate::kernel::{Checker, Fuel, DEFAULT_FUEL};
use crate::rules::RuleSet;
use crate::surface::{resolve_expr, resolve_sort_expr, Expr, SortExpr};
use crate::term::{Con, Context, Sort, Term};

/// A computation equality the derivation promises to hold definitionally.
#[derive(Debug, Clone)]
pub struct CompEquality {
    pub label: String,
    pub context: Context,
    pub lhs: Term,
    pub rhs: Term,
    pub sort: Sort,
}

/// A named, kernel-checkable derived rule.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub name: String,
    pub required: RuleSet,
    pub context: Context,
    pub term: Term,
    pub sort: Sort,
    pub comp_equalities: Vec<CompEquality>,
    /// Free-form records, e.g. which steps are propositional rather than
    /// definitional.
    pub notes: Vec<String>,
}

impl Derivation {
    /// The gated constants the derivation actually mentions, across its
    /// context, term, sort and computation equalities.
    pub fn mentioned_gated_constants(&self) -> Vec<Con> {
        let mut found = Vec::new();
        let mut see = |t: &Term| collect_gated(t, &mut found);
        for (_, s) in self.context.entries() {
            collect_gated_sort(s, &mut see);
        }
        see(&self.term);
        collect_gated_sort(&self.sort, &mut see);
        for ce in &self.comp_equalities {
            for (_, s) in ce.context.entries() {
                collect_gated_sort(s, &mut see);
            }
            see(&ce.lhs);
            see(&ce.rhs);
            collect_gated_sort(&ce.sort, &mut see);
        }
        found.sort();
        found.dedup();
        found
    }

    /// Would `cfg` license every constant this derivation mentions?
    pub fn licensed_under(&self, cfg: &RuleSet) -> bool {
        self.mentioned_gated_constants()
            .iter()
            .all(|c| cfg.licenses(*c))
    }
}

fn collect_gated(t: &Term, out: &mut Vec<Con>) {
    match t {
        Term::Var(_) => {}
        Term::FwLam(b) => collect_gated(b, out),
        Term::FwApp(f, a) => {
            collect_gated(f, out);
            collect_gated(a, out);
        }
        Term::Con(c, args) => {
            if matches!(
                c,
                Con::App | Con::Funsplit | Con::Ext | Con::PiIdElim | Con::Eta
            ) {
                out.push(*c);
            }
            args.iter().for_each(|a| collect_gated(a, out));
        }
    }
}

fn collect_gated_sort(s: &Sort, see: &mut impl FnMut(&Term)) {
    match s {
        Sort::Type => {}
        Sort::El(t) => see(t),
        Sort::Fun(d, c) => {
            collect_gated_sort(d, see);
            collect_gated_sort(c, see);
        }
    }
}

/// Outcome of checking one computation equality.
#[derive(Debug)]
pub struct CompReport {
    pub label: String,
    pub result: Result<bool>,
}

impl CompReport {
    pub fn holds(&self) -> bool {
        matches!(self.result, Ok(true))
    }
}

/// Outcome of verifying a derivation under a rule set.
#[derive(Debug)]
pub struct VerifyReport {
    pub name: String,
    pub ruleset: RuleSet,
    pub term_check: Result<()>,
    pub comp_checks: Vec<CompReport>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.term_check.is_ok() && self.comp_checks.iter().all(|c| c.holds())
    }

    /// The error kind that sank the check, if any.
    pub fn failure_kind(&self) -> Option<ErrorKind> {
        if let Err(e) = &self.term_check {
            return Some(e.kind.clone());
        }
        for c in &self.comp_checks {
            if let Err(e) = &c.result {
                return Some(e.kind.clone());
            }
        }
        None
    }
}

/// Check the derivation's context, term and computation equalities under `cfg`.
pub fn verify(d: &Derivation, cfg: &RuleSet) -> VerifyReport {
    verify_with_fuel(d, cfg, DEFAULT_FUEL)
}

pub fn verify_with_fuel(d: &Derivation, cfg: &RuleSet, fuel: u64) -> VerifyReport {
    let term_check = (|| -> Result<()> {
        let mut checker = Checker::new(cfg, Fuel::new(fuel));
        // Check context entries directly so gating errors surface raw.
        let mut prefix = Context::new();
        for (name, sort) in d.context.entries() {
            checker.check_sort(&prefix, sort)?;
            prefix.push(name.clone(), sort.clone());
        }
        checker.check_sort(&d.context, &d.sort)?;
        checker.check(&d.context, &d.term, &d.sort)
    })();

    let comp_checks = d
        .comp_equalities
        .iter()
        .map(|ce| {
            let result = (|| -> Result<bool> {
                let mut checker = Checker::new(cfg, Fuel::new(fuel));
                let mut prefix = Context::new();
                for (name, sort) in ce.context.entries() {
                    checker.check_sort(&prefix, sort)?;
                    prefix.push(name.clone(), sort.clone());
                }
                checker.check_sort(&ce.context, &ce.sort)?;
                checker.check(&ce.context, &ce.lhs, &ce.sort)?;
                checker.check(&ce.context, &ce.rhs, &ce.sort)?;
                checker.defeq(&ce.context, &ce.lhs, &ce.rhs)
            })();
            CompReport {
                label: ce.label.clone(),
                result,
            }
        })
        .collect();

    VerifyReport {
        name: d.name.clone(),
        ruleset: *cfg,
        term_check,
        comp_checks,
    }
}

/// Incrementally resolved context used while assembling a derivation.
pub(crate) struct Scope {
    names: Vec<String>,
    ctx: Context,
}

impl Scope {
    pub(crate) fn new() -> Scope {
        Scope {
            names: Vec::new(),
            ctx: Context::new(),
        }
    }

    pub(crate) fn add(&mut self, name: &str, sort: SortExpr) -> &mut Scope {
        let resolved = resolve_sort_expr(&sort, &self.names)
            .unwrap_or_else(|e| panic!("derivation context `{name}`: {}", e.message));
        self.ctx.push(name, resolved);
        self.names.push(name.to_string());
        self
    }

    pub(crate) fn term(&self, e: &Expr) -> Term {
        resolve_expr(e, &self.names).unwrap_or_else(|err| panic!("derivation term: {}", err.message))
    }

    pub(crate) fn sort(&self, s: &SortExpr) -> Sort {
        resolve_sort_expr(s, &self.names)
            .unwrap_or_else(|err| panic!("derivation sort: {}", err.message))
    }

    pub(crate) fn ctx(&self) -> Context {
        self.ctx.clone()
    }

    pub(crate) fn comp(&self, label: &str, lhs: &Expr, rhs: &Expr, sort: &SortExpr) -> CompEquality {
        CompEquality {
            label: label.to_string(),
            context: self.ctx(),
            lhs: self.term(lhs),
            rhs: self.term(rhs),
            sort: self.sort(sort),
        }
    }

}

/// Mark the error kinds used by lattice tests.
pub fn is_rule_not_enabled(e: &TypeError) -> bool {
    e.kind == ErrorKind::RuleNotEnabled
}
