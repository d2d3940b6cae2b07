//! The sum-based reinterpretation of dependent products: every product type
//! becomes a disjoint union of two copies of the real product, abstraction
//! becomes a left injection, and application becomes a case split whose
//! branches apply. The β-rule survives definitionally; the propositional
//! η-rule does not survive, which is what the refutation pipeline
//! (`theta`, `refute-eta-prime` in the derivation registry) exploits.
//!
//! Translation is type-directed: the case split needs the result type of each
//! application, so the translator mirrors the bidirectional checker and works
//! in the translated context.

use crate::error::{ErrorKind, Result, TypeError};
use crate::kernel::{inferable, Checker, Fuel, DEFAULT_FUEL};
use crate::rules::RuleSet;
use crate::term::build::*;
use crate::term::{Con, Context, Sort, Term};

pub struct Translator<'a> {
    checker: Checker<'a>,
}

fn app_fragment(c: Con) -> bool {
    !matches!(c, Con::Funsplit | Con::Ext | Con::PiIdElim | Con::Eta)
}

fn not_in_fragment(c: Con) -> TypeError {
    TypeError::new(
        ErrorKind::RuleNotEnabled,
        format!(
            "constant `{}` is outside the application fragment and cannot be reinterpreted",
            c.name()
        ),
    )
}

impl<'a> Translator<'a> {
    pub fn new() -> Translator<'a> {
        Translator {
            checker: Checker::new(&RuleSet::APP, Fuel::new(DEFAULT_FUEL)),
        }
    }

    /// Translate a context entry-wise.
    pub fn context(&mut self, src: &Context) -> Result<Context> {
        let mut out = Context::new();
        for (name, sort) in src.entries() {
            let translated = self.sort(&out, sort)?;
            out.push(name.clone(), translated);
        }
        Ok(out)
    }

    /// Translate a sort; `ctx` is the already-translated prefix.
    pub fn sort(&mut self, ctx: &Context, s: &Sort) -> Result<Sort> {
        Ok(match s {
            Sort::Type => Sort::Type,
            Sort::El(t) => Sort::El(self.check(ctx, t, &Sort::Type)?),
            Sort::Fun(d, c) => {
                let dom = self.sort(ctx, d)?;
                let inner = ctx.extended("x", dom.clone());
                Sort::fun(dom, self.sort(&inner, c)?)
            }
        })
    }

    /// Translate and synthesize; returns the translated term and its
    /// (translated, normalized) sort.
    pub fn infer(&mut self, ctx: &Context, t: &Term) -> Result<(Term, Sort)> {
        match t {
            Term::Var(i) => {
                let s = ctx.lookup(*i).ok_or_else(|| {
                    TypeError::new(ErrorKind::UnboundVariable, format!("index {i}"))
                })?;
                Ok((var(*i), s))
            }
            Term::FwLam(_) => Err(TypeError::mismatch(
                "a framework abstraction does not synthesize; translate it against a sort",
                None,
                None,
            )),
            Term::FwApp(f, a) => {
                let (f2, sf) = self.infer(ctx, f)?;
                let Sort::Fun(dom, cod) = sf else {
                    return Err(TypeError::new(
                        ErrorKind::NotAFunctionSort,
                        "framework application head",
                    ));
                };
                let a2 = self.check(ctx, a, &dom)?;
                let s = self.checker.nf_sort_pub(ctx.len(), &cod.instantiate(&a2))?;
                Ok((fw_app(f2, a2), s))
            }
            Term::Con(c, args) => {
                if !app_fragment(*c) {
                    return Err(not_in_fragment(*c));
                }
                self.infer_con(ctx, *c, args)
            }
        }
    }

    fn infer_con(&mut self, ctx: &Context, c: Con, args: &[Term]) -> Result<(Term, Sort)> {
        match c {
            Con::Pi => {
                let a2 = self.check(ctx, &args[0], &Sort::Type)?;
                let b2 = self.check(
                    ctx,
                    &args[1],
                    &Sort::fun(Sort::El(a2.clone()), Sort::Type),
                )?;
                let p = pi(a2, b2);
                Ok((sum(p.clone(), p), Sort::Type))
            }
            Con::Sigma => {
                let a2 = self.check(ctx, &args[0], &Sort::Type)?;
                let b2 = self.check(
                    ctx,
                    &args[1],
                    &Sort::fun(Sort::El(a2.clone()), Sort::Type),
                )?;
                Ok((sigma(a2, b2), Sort::Type))
            }
            Con::Sum => {
                let a2 = self.check(ctx, &args[0], &Sort::Type)?;
                let b2 = self.check(ctx, &args[1], &Sort::Type)?;
                Ok((sum(a2, b2), Sort::Type))
            }
            Con::Id => {
                let a2 = self.check(ctx, &args[0], &Sort::Type)?;
                let x2 = self.check(ctx, &args[1], &Sort::El(a2.clone()))?;
                let y2 = self.check(ctx, &args[2], &Sort::El(a2.clone()))?;
                Ok((id_ty(a2, x2, y2), Sort::Type))
            }
            Con::Zero | Con::One | Con::Univ | Con::Star | Con::Code0 | Con::Code1 => {
                let s = match c {
                    Con::Star => Sort::El(one()),
                    Con::Code0 | Con::Code1 => Sort::El(universe()),
                    _ => Sort::Type,
                };
                Ok((Term::con(c, vec![]), s))
            }
            Con::Decode => {
                let u2 = self.check(ctx, &args[0], &Sort::El(universe()))?;
                Ok((decode(u2), Sort::Type))
            }
            Con::Refl => {
                let (a2, sa) = self.infer(ctx, &args[0])?;
                let Sort::El(ty) = sa else {
                    return Err(TypeError::mismatch("refl of a non-element", None, Some(sa)));
                };
                let na = self.checker.nf_pub(ctx.len(), &a2)?;
                Ok((refl(a2), Sort::El(id_ty(ty, na.clone(), na))))
            }
            Con::Lam => {
                let (f2, sf) = self.infer(ctx, &args[0])?;
                match sf {
                    Sort::Fun(d, cod) => match (*d, *cod) {
                        (Sort::El(a2), Sort::El(b2)) => {
                            let p = pi(a2, fw_lam(b2));
                            Ok((inl(lam(f2)), Sort::El(sum(p.clone(), p))))
                        }
                        _ => Err(TypeError::mismatch(
                            "abstraction over a non-element family",
                            None,
                            None,
                        )),
                    },
                    other => Err(TypeError::mismatch(
                        "abstraction of a non-function",
                        None,
                        Some(other),
                    )),
                }
            }
            Con::App => {
                if inferable(&args[0]) {
                    let (m2, sm) = self.infer(ctx, &args[0])?;
                    let (a_ty, b_fam) = decompose_translated_pi(&sm)?;
                    let a2 = self.check(ctx, &args[1], &Sort::El(a_ty))?;
                    let res = self
                        .checker
                        .nf_pub(ctx.len(), &fw_app(b_fam, a2.clone()))?;
                    Ok((self.case_app(m2, a2, res.clone()), Sort::El(res)))
                } else if let Term::Con(Con::Lam, lam_args) = &args[0] {
                    // A β-redex: recover the family from the body.
                    let Term::FwLam(body) = &lam_args[0] else {
                        return Err(TypeError::mismatch(
                            "unsupported abstraction shape in redex position",
                            None,
                            None,
                        ));
                    };
                    let (a2, sa) = self.infer(ctx, &args[1])?;
                    let Sort::El(a_ty) = sa else {
                        return Err(TypeError::mismatch(
                            "application argument is not an element",
                            None,
                            None,
                        ));
                    };
                    let inner = ctx.extended("x", Sort::El(a_ty.clone()));
                    let (body2, sb) = self.infer(&inner, body)?;
                    let Sort::El(b_body) = sb else {
                        return Err(TypeError::mismatch(
                            "abstraction body is not an element",
                            None,
                            None,
                        ));
                    };
                    let res = self
                        .checker
                        .nf_pub(ctx.len(), &b_body.instantiate(&a2))?;
                    let m2 = inl(lam(fw_lam(body2)));
                    Ok((self.case_app(m2, a2, res.clone()), Sort::El(res)))
                } else {
                    Err(TypeError::mismatch(
                        "application head does not synthesize a sort",
                        None,
                        None,
                    ))
                }
            }
            Con::J => {
                let (a2, sa) = self.infer(ctx, &args[2])?;
                let Sort::El(a_ty) = sa else {
                    return Err(TypeError::mismatch("endpoint of a non-element", None, None));
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
                let c2 = self.check(ctx, &args[0], &motive_sort)?;
                let base_sort = Sort::fun(
                    Sort::El(a_ty.clone()),
                    Sort::El(fw_apps(c2.shift_up(1), [var(0), var(0), refl(var(0))])),
                );
                let d2 = self.check(ctx, &args[1], &base_sort)?;
                let b2 = self.check(ctx, &args[3], &Sort::El(a_ty.clone()))?;
                let p2 = self.check(
                    ctx,
                    &args[4],
                    &Sort::El(id_ty(a_ty, a2.clone(), b2.clone())),
                )?;
                let res = self.checker.nf_pub(
                    ctx.len(),
                    &fw_apps(c2.clone(), [a2.clone(), b2.clone(), p2.clone()]),
                )?;
                Ok((j(c2, d2, a2, b2, p2), Sort::El(res)))
            }
            Con::Split => {
                let (p2, sp) = self.infer(ctx, &args[2])?;
                let Sort::El(Term::Con(Con::Sigma, parts)) = sp else {
                    return Err(TypeError::mismatch(
                        "split of a non-pair element",
                        None,
                        None,
                    ));
                };
                let (a_ty, b_fam) = (parts[0].clone(), parts[1].clone());
                let c2 = self.check(
                    ctx,
                    &args[0],
                    &Sort::fun(Sort::El(sigma(a_ty.clone(), b_fam.clone())), Sort::Type),
                )?;
                let d2 = self.check(
                    ctx,
                    &args[1],
                    &Sort::fun(
                        Sort::El(a_ty),
                        Sort::fun(
                            Sort::El(fw_app(b_fam.shift_up(1), var(0))),
                            Sort::El(fw_app(c2.shift_up(2), pair(var(1), var(0)))),
                        ),
                    ),
                )?;
                let res = self
                    .checker
                    .nf_pub(ctx.len(), &fw_app(c2.clone(), p2.clone()))?;
                Ok((split(c2, d2, p2), Sort::El(res)))
            }
            Con::Case => {
                let (s2, ss) = self.infer(ctx, &args[3])?;
                let Sort::El(Term::Con(Con::Sum, parts)) = ss else {
                    return Err(TypeError::mismatch(
                        "case of a non-union element",
                        None,
                        None,
                    ));
                };
                let (a_ty, b_ty) = (parts[0].clone(), parts[1].clone());
                let c2 = self.check(
                    ctx,
                    &args[0],
                    &Sort::fun(Sort::El(sum(a_ty.clone(), b_ty.clone())), Sort::Type),
                )?;
                let f2 = self.check(
                    ctx,
                    &args[1],
                    &Sort::fun(
                        Sort::El(a_ty),
                        Sort::El(fw_app(c2.shift_up(1), inl(var(0)))),
                    ),
                )?;
                let g2 = self.check(
                    ctx,
                    &args[2],
                    &Sort::fun(
                        Sort::El(b_ty),
                        Sort::El(fw_app(c2.shift_up(1), inr(var(0)))),
                    ),
                )?;
                let res = self
                    .checker
                    .nf_pub(ctx.len(), &fw_app(c2.clone(), s2.clone()))?;
                Ok((case(c2, f2, g2, s2), Sort::El(res)))
            }
            Con::ZeroElim => {
                let z2 = self.check(ctx, &args[1], &Sort::El(zero()))?;
                let c2 = self.check(ctx, &args[0], &Sort::fun(Sort::El(zero()), Sort::Type))?;
                let res = self
                    .checker
                    .nf_pub(ctx.len(), &fw_app(c2.clone(), z2.clone()))?;
                Ok((zero_elim(c2, z2), Sort::El(res)))
            }
            Con::Pair | Con::Inl | Con::Inr => Err(TypeError::mismatch(
                format!("`{}` does not synthesize; translate it against a sort", c.name()),
                None,
                None,
            )),
            _ => Err(not_in_fragment(c)),
        }
    }

    /// `case([z] T, [u] app(u, a), [v] app(v, a), m)`.
    fn case_app(&self, m2: Term, a2: Term, result_ty: Term) -> Term {
        case(
            fw_lam(result_ty.shift_up(1)),
            fw_lam(app(var(0), a2.shift_up(1))),
            fw_lam(app(var(0), a2.shift_up(1))),
            m2,
        )
    }

    /// Translate against an expected (already translated) sort.
    pub fn check(&mut self, ctx: &Context, t: &Term, expected: &Sort) -> Result<Term> {
        match (t, expected) {
            (Term::FwLam(b), Sort::Fun(dom, cod)) => {
                let inner = ctx.extended("x", (**dom).clone());
                Ok(fw_lam(self.check(&inner, b, cod)?))
            }
            (Term::Con(Con::Lam, args), Sort::El(ty)) => {
                let tn = self.checker.nf_pub(ctx.len(), ty)?;
                let (a_ty, b_fam) = decompose_translated_pi(&Sort::El(tn))?;
                let f2 = self.check(
                    ctx,
                    &args[0],
                    &Sort::fun(
                        Sort::El(a_ty),
                        Sort::El(fw_app(b_fam.shift_up(1), var(0))),
                    ),
                )?;
                Ok(inl(lam(f2)))
            }
            (Term::Con(Con::Pair, args), Sort::El(ty)) => {
                let tn = self.checker.nf_pub(ctx.len(), ty)?;
                let Term::Con(Con::Sigma, parts) = tn else {
                    return Err(TypeError::mismatch(
                        "pair against a non-pair type",
                        Some(expected.clone()),
                        None,
                    ));
                };
                let a2 = self.check(ctx, &args[0], &Sort::El(parts[0].clone()))?;
                let b2 = self.check(
                    ctx,
                    &args[1],
                    &Sort::El(fw_app(parts[1].clone(), a2.clone())),
                )?;
                Ok(pair(a2, b2))
            }
            (Term::Con(con @ (Con::Inl | Con::Inr), args), Sort::El(ty)) => {
                let tn = self.checker.nf_pub(ctx.len(), ty)?;
                let Term::Con(Con::Sum, parts) = tn else {
                    return Err(TypeError::mismatch(
                        "injection against a non-union type",
                        Some(expected.clone()),
                        None,
                    ));
                };
                let side = if *con == Con::Inl { 0 } else { 1 };
                let a2 = self.check(ctx, &args[0], &Sort::El(parts[side].clone()))?;
                Ok(Term::con(*con, vec![a2]))
            }
            _ => {
                let (t2, actual) = self.infer(ctx, t)?;
                if self.checker.defeq_sorts(ctx, &actual, expected)? {
                    Ok(t2)
                } else {
                    Err(TypeError::mismatch(
                        "translated sort differs from the expected one",
                        Some(expected.clone()),
                        Some(actual),
                    ))
                }
            }
        }
    }
}

impl<'a> Default for Translator<'a> {
    fn default() -> Self {
        Translator::new()
    }
}

fn decompose_translated_pi(s: &Sort) -> Result<(Term, Term)> {
    if let Sort::El(Term::Con(Con::Sum, parts)) = s {
        if let Term::Con(Con::Pi, pi_parts) = &parts[0] {
            return Ok((pi_parts[0].clone(), pi_parts[1].clone()));
        }
    }
    Err(TypeError::mismatch(
        "expected the reinterpretation of a dependent product",
        None,
        Some(s.clone()),
    ))
}

/// Translate a context.
pub fn translate_context(src: &Context) -> Result<Context> {
    Translator::new().context(src)
}

/// Translate a well-typed term of the application fragment, synthesizing its
/// translated sort.
pub fn translate(src_ctx: &Context, t: &Term) -> Result<(Term, Sort)> {
    let mut tr = Translator::new();
    let ctx = tr.context(src_ctx)?;
    tr.infer(&ctx, t)
}

/// Translate a term against a source-side sort.
pub fn translate_at(src_ctx: &Context, t: &Term, s: &Sort) -> Result<Term> {
    let mut tr = Translator::new();
    let ctx = tr.context(src_ctx)?;
    let expected = tr.sort(&ctx, s)?;
    tr.check(&ctx, t, &expected)
}

/// Translate a source-side sort.
pub fn translate_sort(src_ctx: &Context, s: &Sort) -> Result<Sort> {
    let mut tr = Translator::new();
    let ctx = tr.context(src_ctx)?;
    tr.sort(&ctx, s)
}
