//! Evaluation and read-back.
//!
//! Terms evaluate into the semantic domain with every enabled computation rule
//! applied as an oriented rewrite; read-back produces β-normal terms and
//! contracts framework-level η-redexes, so structural equality of read-back
//! terms decides definitional equality. Object-level Π has no η rule of any
//! kind here.
//!
//! `ext`, `L` and `eta` contract only on the exact shapes of their computation
//! rules, where "exact" means up to definitional equality of the (already
//! evaluated) arguments; anything else is stuck.

use super::value::{Closure, Elim, Env, Head, Neutral, Value};
use crate::error::{ErrorKind, Result, TypeError};
use crate::term::{Con, Sort, Term};

/// Default rewrite budget.
pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Rewrite budget. Running out is a defect report, never an equality verdict.
#[derive(Debug, Clone)]
pub struct Fuel {
    remaining: u64,
}

impl Fuel {
    pub fn new(steps: u64) -> Fuel {
        Fuel { remaining: steps }
    }

    pub fn standard() -> Fuel {
        Fuel::new(DEFAULT_FUEL)
    }

    fn burn(&mut self) -> Result<()> {
        if self.remaining == 0 {
            return Err(TypeError::new(
                ErrorKind::FuelExhausted,
                "rewrite step budget exhausted during normalization",
            ));
        }
        self.remaining -= 1;
        Ok(())
    }
}

fn ill_typed(msg: &str) -> TypeError {
    TypeError::new(
        ErrorKind::Mismatch,
        format!("normalization reached an ill-typed configuration: {msg}"),
    )
}

/// Environment mapping each context slot to itself as a neutral variable.
pub fn env_of_vars(n: usize) -> Env {
    (0..n).map(Value::var).collect()
}

pub fn eval(env: &Env, depth: usize, fuel: &mut Fuel, t: &Term) -> Result<Value> {
    match t {
        Term::Var(i) => env
            .get(env.len().wrapping_sub(1 + *i))
            .cloned()
            .ok_or_else(|| TypeError::new(ErrorKind::UnboundVariable, format!("index {i}"))),
        Term::FwLam(b) => Ok(Value::FwLam(Closure {
            env: env.clone(),
            body: (**b).clone(),
        })),
        Term::FwApp(f, a) => {
            let fv = eval(env, depth, fuel, f)?;
            let av = eval(env, depth, fuel, a)?;
            apply_fw(fv, av, depth, fuel)
        }
        Term::Con(c, args) => {
            let mut vals = Vec::with_capacity(args.len());
            for a in args {
                vals.push(eval(env, depth, fuel, a)?);
            }
            step_con(*c, vals, depth, fuel)
        }
    }
}

impl Closure {
    pub fn apply(&self, arg: Value, depth: usize, fuel: &mut Fuel) -> Result<Value> {
        let mut env = self.env.clone();
        env.push(arg);
        eval(&env, depth, fuel, &self.body)
    }
}

/// Framework-level application.
pub fn apply_fw(f: Value, a: Value, depth: usize, fuel: &mut Fuel) -> Result<Value> {
    match f {
        Value::FwLam(cl) => {
            fuel.burn()?;
            cl.apply(a, depth, fuel)
        }
        Value::Neutral(n) => Ok(n.extended(Elim::FwApp(a))),
        Value::Con(..) => Err(ill_typed("framework application of an object constant")),
    }
}

fn step_con(c: Con, mut args: Vec<Value>, depth: usize, fuel: &mut Fuel) -> Result<Value> {
    match c {
        Con::App => {
            let a = args.pop().unwrap();
            let m = args.pop().unwrap();
            match m {
                Value::Con(Con::Lam, mut l) => {
                    fuel.burn()?;
                    apply_fw(l.pop().unwrap(), a, depth, fuel)
                }
                Value::Neutral(n) => Ok(n.extended(Elim::ObApp(a))),
                _ => Err(ill_typed("app of a non-function")),
            }
        }
        Con::Funsplit => {
            let m = args.pop().unwrap();
            let branch = args.pop().unwrap();
            let motive = args.pop().unwrap();
            match m {
                Value::Con(Con::Lam, mut l) => {
                    fuel.burn()?;
                    apply_fw(branch, l.pop().unwrap(), depth, fuel)
                }
                Value::Neutral(n) => Ok(n.extended(Elim::Funsplit { motive, branch })),
                _ => Err(ill_typed("funsplit of a non-function")),
            }
        }
        Con::J => {
            let p = args.pop().unwrap();
            let rhs = args.pop().unwrap();
            let lhs = args.pop().unwrap();
            let base = args.pop().unwrap();
            let motive = args.pop().unwrap();
            match p {
                Value::Con(Con::Refl, mut r) => {
                    fuel.burn()?;
                    apply_fw(base, r.pop().unwrap(), depth, fuel)
                }
                Value::Neutral(n) => Ok(n.extended(Elim::J {
                    motive,
                    base,
                    lhs,
                    rhs,
                })),
                _ => Err(ill_typed("J of a non-proof")),
            }
        }
        Con::Split => {
            let p = args.pop().unwrap();
            let branch = args.pop().unwrap();
            let motive = args.pop().unwrap();
            match p {
                Value::Con(Con::Pair, mut pr) => {
                    fuel.burn()?;
                    let b = pr.pop().unwrap();
                    let a = pr.pop().unwrap();
                    let fa = apply_fw(branch, a, depth, fuel)?;
                    apply_fw(fa, b, depth, fuel)
                }
                Value::Neutral(n) => Ok(n.extended(Elim::Split { motive, branch })),
                _ => Err(ill_typed("split of a non-pair")),
            }
        }
        Con::Case => {
            let s = args.pop().unwrap();
            let right = args.pop().unwrap();
            let left = args.pop().unwrap();
            let motive = args.pop().unwrap();
            match s {
                Value::Con(Con::Inl, mut i) => {
                    fuel.burn()?;
                    apply_fw(left, i.pop().unwrap(), depth, fuel)
                }
                Value::Con(Con::Inr, mut i) => {
                    fuel.burn()?;
                    apply_fw(right, i.pop().unwrap(), depth, fuel)
                }
                Value::Neutral(n) => Ok(n.extended(Elim::Case {
                    motive,
                    left,
                    right,
                })),
                _ => Err(ill_typed("case of a non-injection")),
            }
        }
        Con::ZeroElim => {
            let z = args.pop().unwrap();
            let motive = args.pop().unwrap();
            match z {
                Value::Neutral(n) => Ok(n.extended(Elim::ZeroElim { motive })),
                _ => Err(ill_typed("zeroElim of a canonical value")),
            }
        }
        Con::Decode => {
            let u = args.pop().unwrap();
            match u {
                Value::Con(Con::Code0, _) => {
                    fuel.burn()?;
                    Ok(Value::Con(Con::Zero, vec![]))
                }
                Value::Con(Con::Code1, _) => {
                    fuel.burn()?;
                    Ok(Value::Con(Con::One, vec![]))
                }
                Value::Neutral(n) => Ok(n.extended(Elim::Decode)),
                _ => Err(ill_typed("Decode of a non-code")),
            }
        }
        Con::Eta => {
            let m = args.pop().unwrap();
            match m {
                Value::Con(Con::Lam, _) => {
                    fuel.burn()?;
                    Ok(Value::Con(Con::Refl, vec![m]))
                }
                Value::Neutral(n) => Ok(n.extended(Elim::Eta)),
                _ => Err(ill_typed("eta of a non-function")),
            }
        }
        Con::Ext => {
            let k = args.pop().unwrap();
            let n = args.pop().unwrap();
            let m = args.pop().unwrap();
            if ext_redex(&m, &n, &k, depth, fuel)?.is_some() {
                fuel.burn()?;
                Ok(Value::Con(Con::Refl, vec![m]))
            } else {
                Ok(Value::Neutral(Neutral {
                    head: Head::StuckExt(Box::new([m, n, k])),
                    spine: Vec::new(),
                }))
            }
        }
        Con::PiIdElim => {
            let k = args.pop().unwrap();
            let n = args.pop().unwrap();
            let m = args.pop().unwrap();
            let branch = args.pop().unwrap();
            let motive = args.pop().unwrap();
            if let Some(f) = ext_redex(&m, &n, &k, depth, fuel)? {
                fuel.burn()?;
                apply_fw(branch, f, depth, fuel)
            } else {
                Ok(Value::Neutral(Neutral {
                    head: Head::StuckPiIdElim(Box::new([motive, branch, m, n, k])),
                    spine: Vec::new(),
                }))
            }
        }
        _ => Ok(Value::Con(c, args)),
    }
}

/// Shared redex test for `ext` and `L`: the triple must be
/// `(lam(f), lam(g), lam(p))` with `f ≡ g` and `p` pointwise `refl` over `f`.
/// Returns the underlying framework function on success.
fn ext_redex(
    m: &Value,
    n: &Value,
    k: &Value,
    depth: usize,
    fuel: &mut Fuel,
) -> Result<Option<Value>> {
    let (f, g, p) = match (m.lam_body(), n.lam_body(), k.lam_body()) {
        (Some(f), Some(g), Some(p)) => (f, g, p),
        _ => return Ok(None),
    };
    if !conv(f, g, depth, fuel)? {
        return Ok(None);
    }
    let fresh = Value::var(depth);
    let px = apply_fw(p.clone(), fresh.clone(), depth + 1, fuel)?;
    let fx = apply_fw(f.clone(), fresh, depth + 1, fuel)?;
    let want = Value::Con(Con::Refl, vec![fx]);
    if conv(&px, &want, depth + 1, fuel)? {
        Ok(Some(f.clone()))
    } else {
        Ok(None)
    }
}

/// Semantic equality via read-back.
fn conv(a: &Value, b: &Value, depth: usize, fuel: &mut Fuel) -> Result<bool> {
    Ok(readback(a, depth, fuel)? == readback(b, depth, fuel)?)
}

pub fn readback(v: &Value, depth: usize, fuel: &mut Fuel) -> Result<Term> {
    match v {
        Value::FwLam(cl) => {
            let body_v = cl.apply(Value::var(depth), depth + 1, fuel)?;
            let body = readback(&body_v, depth + 1, fuel)?;
            Ok(eta_contract(body))
        }
        Value::Con(c, args) => {
            let mut out = Vec::with_capacity(args.len());
            for a in args {
                out.push(readback(a, depth, fuel)?);
            }
            Ok(Term::Con(*c, out))
        }
        Value::Neutral(n) => {
            let mut t = match &n.head {
                Head::Var(l) => {
                    if *l >= depth {
                        return Err(ill_typed("variable level escaped its scope"));
                    }
                    Term::Var(depth - 1 - l)
                }
                Head::StuckExt(mnk) => Term::Con(
                    Con::Ext,
                    mnk.iter()
                        .map(|v| readback(v, depth, fuel))
                        .collect::<Result<Vec<_>>>()?,
                ),
                Head::StuckPiIdElim(parts) => Term::Con(
                    Con::PiIdElim,
                    parts
                        .iter()
                        .map(|v| readback(v, depth, fuel))
                        .collect::<Result<Vec<_>>>()?,
                ),
            };
            for e in &n.spine {
                t = readback_elim(t, e, depth, fuel)?;
            }
            Ok(t)
        }
    }
}

fn readback_elim(head: Term, e: &Elim, depth: usize, fuel: &mut Fuel) -> Result<Term> {
    let rb = |v: &Value, fuel: &mut Fuel| readback(v, depth, fuel);
    Ok(match e {
        Elim::FwApp(a) => Term::FwApp(Box::new(head), Box::new(rb(a, fuel)?)),
        Elim::ObApp(a) => Term::con(Con::App, vec![head, rb(a, fuel)?]),
        Elim::Funsplit { motive, branch } => {
            Term::con(Con::Funsplit, vec![rb(motive, fuel)?, rb(branch, fuel)?, head])
        }
        Elim::J {
            motive,
            base,
            lhs,
            rhs,
        } => Term::con(
            Con::J,
            vec![rb(motive, fuel)?, rb(base, fuel)?, rb(lhs, fuel)?, rb(rhs, fuel)?, head],
        ),
        Elim::Split { motive, branch } => {
            Term::con(Con::Split, vec![rb(motive, fuel)?, rb(branch, fuel)?, head])
        }
        Elim::Case {
            motive,
            left,
            right,
        } => Term::con(
            Con::Case,
            vec![rb(motive, fuel)?, rb(left, fuel)?, rb(right, fuel)?, head],
        ),
        Elim::ZeroElim { motive } => Term::con(Con::ZeroElim, vec![rb(motive, fuel)?, head]),
        Elim::Decode => Term::con(Con::Decode, vec![head]),
        Elim::Eta => Term::con(Con::Eta, vec![head]),
    })
}

/// Framework η as an oriented rewrite: `[x] f(x)` with `x` not free in `f`
/// contracts to `f`. Object-level application never contracts.
fn eta_contract(body: Term) -> Term {
    if let Term::FwApp(f, a) = &body {
        if matches!(**a, Term::Var(0)) && !f.occurs(0) {
            return f.shift(-1, 0).expect("contracted variable does not occur");
        }
    }
    Term::FwLam(Box::new(body))
}

/// Normal form of a term with `ctx_len` free variables.
pub fn nf_term(ctx_len: usize, fuel: &mut Fuel, t: &Term) -> Result<Term> {
    let v = eval(&env_of_vars(ctx_len), ctx_len, fuel, t)?;
    readback(&v, ctx_len, fuel)
}

/// Normal form of a sort: normalize the embedded terms at the right depths.
pub fn nf_sort(ctx_len: usize, fuel: &mut Fuel, s: &Sort) -> Result<Sort> {
    Ok(match s {
        Sort::Type => Sort::Type,
        Sort::El(t) => Sort::El(nf_term(ctx_len, fuel, t)?),
        Sort::Fun(d, c) => Sort::fun(
            nf_sort(ctx_len, fuel, d)?,
            nf_sort(ctx_len + 1, fuel, c)?,
        ),
    })
}
