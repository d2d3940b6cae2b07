//! Bidirectional checking and definitional equality.
//!
//! Eliminators and constants infer; framework abstractions, `lam`, `pair` and
//! the injections check against an expected sort. Motives are always explicit.
//! Inferred sorts come back in normal form, and `check` falls back to
//! inference followed by sort-level definitional equality.

use super::eval::{nf_sort, nf_term, Fuel};
use crate::error::{ErrorKind, Result, TypeError};
use crate::rules::RuleSet;
use crate::term::build::*;
use crate::term::{Con, Context, Sort, Term};

pub struct Checker<'a> {
    cfg: &'a RuleSet,
    fuel: Fuel,
}

trait AtChild<T> {
    fn child(self, index: usize) -> Result<T>;
}

impl<T> AtChild<T> for Result<T> {
    fn child(self, index: usize) -> Result<T> {
        self.map_err(|e| e.at_child(index))
    }
}

/// Can the term synthesize its sort, syntactically speaking?
pub fn inferable(t: &Term) -> bool {
    match t {
        Term::Var(_) => true,
        Term::FwLam(_) => false,
        Term::FwApp(f, _) => inferable(f),
        Term::Con(c, args) => match c {
            Con::Lam | Con::Refl | Con::Decode | Con::Eta => inferable(&args[0]),
            Con::Pair | Con::Inl | Con::Inr => false,
            Con::App | Con::Funsplit => inferable(&args[args.len() - 1]),
            Con::J => inferable(&args[2]),
            Con::Split | Con::Case => inferable(&args[args.len() - 1]),
            Con::Ext => args.iter().any(inferable),
            Con::PiIdElim => args[2..].iter().any(inferable),
            _ => true,
        },
    }
}

impl<'a> Checker<'a> {
    pub fn new(cfg: &'a RuleSet, fuel: Fuel) -> Checker<'a> {
        Checker { cfg, fuel }
    }

    fn nf(&mut self, ctx_len: usize, t: &Term) -> Result<Term> {
        nf_term(ctx_len, &mut self.fuel, t)
    }

    fn nf_sort(&mut self, ctx_len: usize, s: &Sort) -> Result<Sort> {
        nf_sort(ctx_len, &mut self.fuel, s)
    }

    /// Normal form of a term with `ctx_len` free variables.
    pub fn nf_pub(&mut self, ctx_len: usize, t: &Term) -> Result<Term> {
        self.nf(ctx_len, t)
    }

    /// Normal form of a sort with `ctx_len` free variables.
    pub fn nf_sort_pub(&mut self, ctx_len: usize, s: &Sort) -> Result<Sort> {
        self.nf_sort(ctx_len, s)
    }

    pub fn defeq_sorts(&mut self, ctx: &Context, s1: &Sort, s2: &Sort) -> Result<bool> {
        Ok(self.nf_sort(ctx.len(), s1)? == self.nf_sort(ctx.len(), s2)?)
    }

    pub fn defeq(&mut self, ctx: &Context, t: &Term, u: &Term) -> Result<bool> {
        Ok(self.nf(ctx.len(), t)? == self.nf(ctx.len(), u)?)
    }

    pub fn check_sort(&mut self, ctx: &Context, s: &Sort) -> Result<()> {
        match s {
            Sort::Type => Ok(()),
            Sort::El(t) => self.check(ctx, t, &Sort::Type),
            Sort::Fun(d, c) => {
                self.check_sort(ctx, d)?;
                self.check_sort(&ctx.extended("x", (**d).clone()), c)
            }
        }
    }

    pub fn check_context(&mut self, ctx: &Context) -> Result<()> {
        let mut prefix = Context::new();
        for (i, (name, sort)) in ctx.entries().iter().enumerate() {
            self.check_sort(&prefix, sort).map_err(|e| TypeError {
                kind: ErrorKind::IllFormedContext,
                path: e.path.clone(),
                expected: e.expected.clone(),
                actual: e.actual.clone(),
                message: format!("entry {i} ({name}): {}", e.message),
            })?;
            prefix.push(name.clone(), sort.clone());
        }
        Ok(())
    }

    pub fn infer(&mut self, ctx: &Context, t: &Term) -> Result<Sort> {
        match t {
            Term::Var(i) => ctx.lookup(*i).ok_or_else(|| {
                TypeError::new(
                    ErrorKind::UnboundVariable,
                    format!("index {i} in a context of length {}", ctx.len()),
                )
            }),
            Term::FwLam(_) => Err(TypeError::mismatch(
                "a framework abstraction does not synthesize a sort",
                None,
                None,
            )),
            Term::FwApp(f, a) => {
                let sf = self.infer(ctx, f).child(0)?;
                let Sort::Fun(dom, cod) = sf else {
                    return Err(TypeError {
                        kind: ErrorKind::NotAFunctionSort,
                        path: vec![0],
                        expected: None,
                        actual: Some(sf),
                        message: "framework application head".into(),
                    });
                };
                self.check(ctx, a, &dom).child(1)?;
                self.nf_sort(ctx.len(), &cod.instantiate(a))
            }
            Term::Con(c, args) => {
                if !self.cfg.licenses(*c) {
                    return Err(TypeError::new(
                        ErrorKind::RuleNotEnabled,
                        format!(
                            "constant `{}` is not licensed by rule set `{}`",
                            c.name(),
                            self.cfg
                        ),
                    ));
                }
                if args.len() != c.arity() {
                    return Err(TypeError::mismatch(
                        format!("constant `{}` expects {} arguments", c.name(), c.arity()),
                        None,
                        None,
                    ));
                }
                let raw = self.infer_con(ctx, *c, args)?;
                self.nf_sort(ctx.len(), &raw)
            }
        }
    }

    fn infer_con(&mut self, ctx: &Context, c: Con, args: &[Term]) -> Result<Sort> {
        match c {
            Con::Pi | Con::Sigma => {
                self.check(ctx, &args[0], &Sort::Type).child(0)?;
                let fam = Sort::fun(Sort::El(args[0].clone()), Sort::Type);
                self.check(ctx, &args[1], &fam).child(1)?;
                Ok(Sort::Type)
            }
            Con::Sum => {
                self.check(ctx, &args[0], &Sort::Type).child(0)?;
                self.check(ctx, &args[1], &Sort::Type).child(1)?;
                Ok(Sort::Type)
            }
            Con::Id => {
                self.check(ctx, &args[0], &Sort::Type).child(0)?;
                let el = Sort::El(args[0].clone());
                self.check(ctx, &args[1], &el).child(1)?;
                self.check(ctx, &args[2], &el).child(2)?;
                Ok(Sort::Type)
            }
            Con::Zero | Con::One | Con::Univ => Ok(Sort::Type),
            Con::Star => Ok(Sort::El(one())),
            Con::Code0 | Con::Code1 => Ok(Sort::El(universe())),
            Con::Decode => {
                self.check(ctx, &args[0], &Sort::El(universe())).child(0)?;
                Ok(Sort::Type)
            }
            Con::Refl => {
                let sa = self.infer(ctx, &args[0]).child(0)?;
                let Sort::El(a_ty) = sa else {
                    return Err(TypeError::mismatch(
                        "refl applies to an element",
                        None,
                        Some(sa),
                    )
                    .at_child(0));
                };
                let na = self.nf(ctx.len(), &args[0])?;
                Ok(Sort::El(id_ty(a_ty, na.clone(), na)))
            }
            Con::Lam => {
                let sf = self.infer(ctx, &args[0]).child(0)?;
                match sf {
                    Sort::Fun(dom, cod) => match (*dom, *cod) {
                        (Sort::El(a), Sort::El(b)) => Ok(Sort::El(pi(a, fw_lam(b)))),
                        (d, c) => Err(TypeError::mismatch(
                            "lam needs a family of elements",
                            None,
                            Some(Sort::fun(d, c)),
                        )
                        .at_child(0)),
                    },
                    other => Err(TypeError::mismatch(
                        "lam applies to a framework function",
                        None,
                        Some(other),
                    )
                    .at_child(0)),
                }
            }
            Con::App => {
                let (a_ty, b_fam) = self.infer_pi_sort(ctx, &args[0]).child(0)?;
                self.check(ctx, &args[1], &Sort::El(a_ty)).child(1)?;
                Ok(Sort::El(fw_app(b_fam, args[1].clone())))
            }
            Con::Funsplit => {
                let (a_ty, b_fam) = self.infer_pi_sort(ctx, &args[2]).child(2)?;
                let pi_ty = pi(a_ty.clone(), b_fam.clone());
                let motive_sort = Sort::fun(Sort::El(pi_ty.clone()), Sort::Type);
                self.check(ctx, &args[0], &motive_sort).child(0)?;
                let branch_sort = Sort::fun(
                    fn_sort(&a_ty, &b_fam),
                    Sort::El(fw_app(args[0].shift_up(1), lam(var(0)))),
                );
                self.check(ctx, &args[1], &branch_sort).child(1)?;
                Ok(Sort::El(fw_app(args[0].clone(), args[2].clone())))
            }
            Con::J => {
                let sa = self.infer(ctx, &args[2]).child(2)?;
                let Sort::El(a_ty) = sa else {
                    return Err(
                        TypeError::mismatch("J endpoint must be an element", None, Some(sa))
                            .at_child(2),
                    );
                };
                let motive_sort = Sort::fun(
                    Sort::El(a_ty.clone()),
                    Sort::fun(
                        Sort::El(a_ty.shift_up(1)),
                        Sort::fun(
                            Sort::El(id_ty(a_ty.shift_up(2), var(1), var(0))),
                            Sort::Type,
                        ),
                    ),
                );
                self.check(ctx, &args[0], &motive_sort).child(0)?;
                let base_sort = Sort::fun(
                    Sort::El(a_ty.clone()),
                    Sort::El(fw_apps(
                        args[0].shift_up(1),
                        [var(0), var(0), refl(var(0))],
                    )),
                );
                self.check(ctx, &args[1], &base_sort).child(1)?;
                self.check(ctx, &args[3], &Sort::El(a_ty.clone())).child(3)?;
                self.check(
                    ctx,
                    &args[4],
                    &Sort::El(id_ty(a_ty, args[2].clone(), args[3].clone())),
                )
                .child(4)?;
                Ok(Sort::El(fw_apps(
                    args[0].clone(),
                    [args[2].clone(), args[3].clone(), args[4].clone()],
                )))
            }
            Con::Split => {
                let sp = self.infer(ctx, &args[2]).child(2)?;
                let (a_ty, b_fam) = match sp {
                    Sort::El(Term::Con(Con::Sigma, parts)) => {
                        let mut it = parts.into_iter();
                        (it.next().unwrap(), it.next().unwrap())
                    }
                    other => {
                        return Err(TypeError::mismatch(
                            "split scrutinee must be a dependent pair",
                            None,
                            Some(other),
                        )
                        .at_child(2))
                    }
                };
                let sig_ty = sigma(a_ty.clone(), b_fam.clone());
                self.check(ctx, &args[0], &Sort::fun(Sort::El(sig_ty), Sort::Type))
                    .child(0)?;
                let branch_sort = Sort::fun(
                    Sort::El(a_ty),
                    Sort::fun(
                        Sort::El(fw_app(b_fam.shift_up(1), var(0))),
                        Sort::El(fw_app(args[0].shift_up(2), pair(var(1), var(0)))),
                    ),
                );
                self.check(ctx, &args[1], &branch_sort).child(1)?;
                Ok(Sort::El(fw_app(args[0].clone(), args[2].clone())))
            }
            Con::Case => {
                let ss = self.infer(ctx, &args[3]).child(3)?;
                let (a_ty, b_ty) = match ss {
                    Sort::El(Term::Con(Con::Sum, parts)) => {
                        let mut it = parts.into_iter();
                        (it.next().unwrap(), it.next().unwrap())
                    }
                    other => {
                        return Err(TypeError::mismatch(
                            "case scrutinee must be a disjoint union",
                            None,
                            Some(other),
                        )
                        .at_child(3))
                    }
                };
                let sum_ty = sum(a_ty.clone(), b_ty.clone());
                self.check(ctx, &args[0], &Sort::fun(Sort::El(sum_ty), Sort::Type))
                    .child(0)?;
                let left_sort = Sort::fun(
                    Sort::El(a_ty),
                    Sort::El(fw_app(args[0].shift_up(1), inl(var(0)))),
                );
                self.check(ctx, &args[1], &left_sort).child(1)?;
                let right_sort = Sort::fun(
                    Sort::El(b_ty),
                    Sort::El(fw_app(args[0].shift_up(1), inr(var(0)))),
                );
                self.check(ctx, &args[2], &right_sort).child(2)?;
                Ok(Sort::El(fw_app(args[0].clone(), args[3].clone())))
            }
            Con::ZeroElim => {
                self.check(ctx, &args[1], &Sort::El(zero())).child(1)?;
                self.check(ctx, &args[0], &Sort::fun(Sort::El(zero()), Sort::Type))
                    .child(0)?;
                Ok(Sort::El(fw_app(args[0].clone(), args[1].clone())))
            }
            Con::Eta => {
                let (a_ty, b_fam) = self.infer_pi_sort(ctx, &args[0]).child(0)?;
                let pi_ty = pi(a_ty, b_fam);
                Ok(Sort::El(id_ty(
                    pi_ty,
                    args[0].clone(),
                    lam(fw_lam(app(args[0].shift_up(1), var(0)))),
                )))
            }
            Con::Ext => {
                let (a_ty, b_fam) = self.reconstruct_pi(ctx, &args[0], &args[1], &args[2], 0)?;
                self.check_ext_parts(ctx, &a_ty, &b_fam, &args[0], &args[1], &args[2], 0)?;
                Ok(Sort::El(id_ty(
                    pi(a_ty, b_fam),
                    args[0].clone(),
                    args[1].clone(),
                )))
            }
            Con::PiIdElim => {
                let (a_ty, b_fam) = self.reconstruct_pi(ctx, &args[2], &args[3], &args[4], 2)?;
                let pi_ty = pi(a_ty.clone(), b_fam.clone());
                // motive: (u v : el Π(A,B)) (w : el Π x. Id(B x, u·x, v·x)) type
                let w_ty = pi(
                    a_ty.shift_up(2),
                    fw_lam(id_ty(
                        fw_app(b_fam.shift_up(3), var(0)),
                        app(var(2), var(0)),
                        app(var(1), var(0)),
                    )),
                );
                let motive_sort = Sort::fun(
                    Sort::El(pi_ty.clone()),
                    Sort::fun(
                        Sort::El(pi_ty.shift_up(1)),
                        Sort::fun(Sort::El(w_ty), Sort::Type),
                    ),
                );
                self.check(ctx, &args[0], &motive_sort).child(0)?;
                let branch_sort = Sort::fun(
                    fn_sort(&a_ty, &b_fam),
                    Sort::El(fw_apps(
                        args[0].shift_up(1),
                        [
                            lam(var(0)),
                            lam(var(0)),
                            lam(fw_lam(refl(fw_app(var(1), var(0))))),
                        ],
                    )),
                );
                self.check(ctx, &args[1], &branch_sort).child(1)?;
                self.check_ext_parts(ctx, &a_ty, &b_fam, &args[2], &args[3], &args[4], 2)?;
                Ok(Sort::El(fw_apps(
                    args[0].clone(),
                    [args[2].clone(), args[3].clone(), args[4].clone()],
                )))
            }
            Con::Pair | Con::Inl | Con::Inr => Err(TypeError::mismatch(
                format!("`{}` does not synthesize a sort; check it against one", c.name()),
                None,
                None,
            )),
        }
    }

    /// Infer an element of some `Π(A, B)` and return `(A, B)`.
    fn infer_pi_sort(&mut self, ctx: &Context, t: &Term) -> Result<(Term, Term)> {
        let s = self.infer(ctx, t)?;
        match s {
            Sort::El(Term::Con(Con::Pi, parts)) => {
                let mut it = parts.into_iter();
                Ok((it.next().unwrap(), it.next().unwrap()))
            }
            other => Err(TypeError::mismatch(
                "expected an element of a dependent product",
                None,
                Some(other),
            )),
        }
    }

    /// Recover the `Π(A, B)` governing an `ext`/`L` triple from whichever of
    /// the three arguments synthesizes.
    fn reconstruct_pi(
        &mut self,
        ctx: &Context,
        m: &Term,
        n: &Term,
        k: &Term,
        base_child: usize,
    ) -> Result<(Term, Term)> {
        if inferable(m) {
            return self.infer_pi_sort(ctx, m).child(base_child);
        }
        if inferable(n) {
            return self.infer_pi_sort(ctx, n).child(base_child + 1);
        }
        if inferable(k) {
            let s = self.infer(ctx, k).child(base_child + 2)?;
            if let Sort::El(Term::Con(Con::Pi, parts)) = &s {
                if let Term::FwLam(w) = &parts[1] {
                    if let Term::Con(Con::Id, id_args) = &**w {
                        return Ok((parts[0].clone(), fw_lam(id_args[0].clone())));
                    }
                }
            }
            return Err(TypeError::mismatch(
                "expected a family of pointwise identity proofs",
                None,
                Some(s),
            )
            .at_child(base_child + 2));
        }
        Err(TypeError::mismatch(
            "cannot reconstruct the dependent product; no argument synthesizes a sort",
            None,
            None,
        ))
    }

    /// Check the `(m, n, k)` triple of `ext`/`L` against `Π(A, B)`.
    fn check_ext_parts(
        &mut self,
        ctx: &Context,
        a_ty: &Term,
        b_fam: &Term,
        m: &Term,
        n: &Term,
        k: &Term,
        base_child: usize,
    ) -> Result<()> {
        let pi_ty = pi(a_ty.clone(), b_fam.clone());
        self.check(ctx, m, &Sort::El(pi_ty.clone())).child(base_child)?;
        self.check(ctx, n, &Sort::El(pi_ty)).child(base_child + 1)?;
        let k_sort = Sort::El(pi(
            a_ty.clone(),
            fw_lam(id_ty(
                fw_app(b_fam.shift_up(1), var(0)),
                app(m.shift_up(1), var(0)),
                app(n.shift_up(1), var(0)),
            )),
        ));
        self.check(ctx, k, &k_sort).child(base_child + 2)
    }

    pub fn check(&mut self, ctx: &Context, t: &Term, s: &Sort) -> Result<()> {
        if let Term::Con(c, _) = t {
            if !self.cfg.licenses(*c) {
                return Err(TypeError::new(
                    ErrorKind::RuleNotEnabled,
                    format!(
                        "constant `{}` is not licensed by rule set `{}`",
                        c.name(),
                        self.cfg
                    ),
                ));
            }
        }
        match t {
            Term::FwLam(b) => match s {
                Sort::Fun(dom, cod) => {
                    let inner = ctx.extended(fresh_hint(ctx), (**dom).clone());
                    self.check(&inner, b, cod).child(0)
                }
                _ => Err(TypeError::mismatch(
                    "framework abstraction against a non-function sort",
                    Some(s.clone()),
                    None,
                )),
            },
            Term::Con(Con::Lam, args) => {
                let ty = self.expect_el(s)?;
                let tn = self.nf(ctx.len(), ty)?;
                match tn {
                    Term::Con(Con::Pi, parts) => {
                        let f_sort = fn_sort(&parts[0], &parts[1]);
                        self.check(ctx, &args[0], &f_sort).child(0)
                    }
                    other => Err(TypeError::mismatch(
                        "lam against a non-product type",
                        Some(Sort::El(other)),
                        None,
                    )),
                }
            }
            Term::Con(Con::Pair, args) => {
                let ty = self.expect_el(s)?;
                let tn = self.nf(ctx.len(), ty)?;
                match tn {
                    Term::Con(Con::Sigma, parts) => {
                        self.check(ctx, &args[0], &Sort::El(parts[0].clone())).child(0)?;
                        let snd = Sort::El(fw_app(parts[1].clone(), args[0].clone()));
                        self.check(ctx, &args[1], &snd).child(1)
                    }
                    other => Err(TypeError::mismatch(
                        "pair against a non-sum-of-families type",
                        Some(Sort::El(other)),
                        None,
                    )),
                }
            }
            Term::Con(Con::Inl, args) | Term::Con(Con::Inr, args) => {
                let ty = self.expect_el(s)?;
                let tn = self.nf(ctx.len(), ty)?;
                match tn {
                    Term::Con(Con::Sum, parts) => {
                        let side = if matches!(t, Term::Con(Con::Inl, _)) {
                            0
                        } else {
                            1
                        };
                        self.check(ctx, &args[0], &Sort::El(parts[side].clone())).child(0)
                    }
                    other => Err(TypeError::mismatch(
                        "injection against a non-union type",
                        Some(Sort::El(other)),
                        None,
                    )),
                }
            }
            Term::Con(Con::Ext, args) if !inferable(t) => {
                // Non-synthesizing ext: read the product and both endpoints
                // off the expected identity type.
                let ty = self.expect_el(s)?;
                let tn = self.nf(ctx.len(), ty)?;
                match tn {
                    Term::Con(Con::Id, id_args) => {
                        let p_nf = id_args[0].clone();
                        if let Term::Con(Con::Pi, parts) = &p_nf {
                            self.check_ext_parts(
                                ctx, &parts[0], &parts[1], &args[0], &args[1], &args[2], 0,
                            )?;
                            let lhs_ok = self.defeq(ctx, &args[0], &id_args[1])?;
                            let rhs_ok = self.defeq(ctx, &args[1], &id_args[2])?;
                            if lhs_ok && rhs_ok {
                                Ok(())
                            } else {
                                Err(TypeError::mismatch(
                                    "ext endpoints differ from the expected identity type",
                                    Some(Sort::El(Term::con(Con::Id, id_args))),
                                    None,
                                ))
                            }
                        } else {
                            Err(TypeError::mismatch(
                                "ext against an identity over a non-product",
                                Some(Sort::El(p_nf)),
                                None,
                            ))
                        }
                    }
                    other => Err(TypeError::mismatch(
                        "ext against a non-identity type",
                        Some(Sort::El(other)),
                        None,
                    )),
                }
            }
            _ => {
                let actual = self.infer(ctx, t)?;
                if self.defeq_sorts(ctx, &actual, s)? {
                    Ok(())
                } else {
                    Err(TypeError::mismatch(
                        "inferred sort differs from the expected one",
                        Some(self.nf_sort(ctx.len(), s)?),
                        Some(actual),
                    ))
                }
            }
        }
    }

    fn expect_el<'s>(&mut self, s: &'s Sort) -> Result<&'s Term> {
        match s {
            Sort::El(t) => Ok(t),
            _ => Err(TypeError::mismatch(
                "an object-level term checks against an element sort",
                Some(s.clone()),
                None,
            )),
        }
    }
}

/// `(x : el A) el B(x)` for a family `B`.
fn fn_sort(a_ty: &Term, b_fam: &Term) -> Sort {
    Sort::fun(
        Sort::El(a_ty.clone()),
        Sort::El(fw_app(b_fam.shift_up(1), var(0))),
    )
}

fn fresh_hint(ctx: &Context) -> String {
    format!("x{}", ctx.len())
}

// Public entry points with the standard fuel budget.

pub fn check_context(cfg: &RuleSet, ctx: &Context) -> Result<()> {
    Checker::new(cfg, Fuel::standard()).check_context(ctx)
}

pub fn check_sort(cfg: &RuleSet, ctx: &Context, s: &Sort) -> Result<()> {
    Checker::new(cfg, Fuel::standard()).check_sort(ctx, s)
}

pub fn infer(cfg: &RuleSet, ctx: &Context, t: &Term) -> Result<Sort> {
    Checker::new(cfg, Fuel::standard()).infer(ctx, t)
}

pub fn check(cfg: &RuleSet, ctx: &Context, t: &Term, s: &Sort) -> Result<()> {
    Checker::new(cfg, Fuel::standard()).check(ctx, t, s)
}

/// β-normal form with respect to framework β/η and the object computation
/// rules, oriented left to right.
pub fn normalize(cfg: &RuleSet, ctx: &Context, t: &Term) -> Result<Term> {
    let _ = cfg;
    nf_term(ctx.len(), &mut Fuel::standard(), t)
}

pub fn normalize_with_fuel(cfg: &RuleSet, ctx: &Context, t: &Term, fuel: u64) -> Result<Term> {
    let _ = cfg;
    nf_term(ctx.len(), &mut Fuel::new(fuel), t)
}

/// Definitional equality at a sort: compare normal forms structurally.
pub fn defeq(cfg: &RuleSet, ctx: &Context, t: &Term, u: &Term, s: &Sort) -> Result<bool> {
    let _ = s;
    Checker::new(cfg, Fuel::standard()).defeq(ctx, t, u)
}

pub fn defeq_sorts(cfg: &RuleSet, ctx: &Context, s1: &Sort, s2: &Sort) -> Result<bool> {
    Checker::new(cfg, Fuel::standard()).defeq_sorts(ctx, s1, s2)
}

pub fn normalize_sort(cfg: &RuleSet, ctx: &Context, s: &Sort) -> Result<Sort> {
    let _ = cfg;
    nf_sort(ctx.len(), &mut Fuel::standard(), s)
}
