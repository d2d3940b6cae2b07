//! The term language: framework-level abstraction/application plus the fixed
//! signature of object-level constants, with de Bruijn binding machinery.
//!
//! All binding is de Bruijn indexed (`Var(0)` is the innermost binder), so
//! structural equality of terms is exactly α-equivalence. The only binders are
//! framework abstractions and function-sort codomains; object-level constants
//! take their higher-order premises as framework-function-sorted subterms.

use std::fmt;
use thiserror::Error;

/// Object-level constants of the fixed signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Con {
    /// Dependent product former `Pi(A, B)`.
    Pi,
    /// Abstraction `lam(f)` with `f` a framework function.
    Lam,
    /// Application `app(m, a)`.
    App,
    /// Eliminator `funsplit(C, d, m)`: induction over λ-images.
    Funsplit,
    /// Identity type former `Id(A, a, b)`.
    Id,
    /// Reflexivity `refl(a)`.
    Refl,
    /// Identity eliminator `J(C, d, a, b, p)`.
    J,
    /// Dependent sum former `Sigma(A, B)`.
    Sigma,
    /// Pairing `pair(a, b)`.
    Pair,
    /// Sum eliminator `split(C, d, p)`.
    Split,
    /// Empty type.
    Zero,
    /// Empty-type eliminator `zeroElim(C, z)`.
    ZeroElim,
    /// Unit type.
    One,
    /// Canonical unit element.
    Star,
    /// Disjoint union former `Sum(A, B)`.
    Sum,
    /// Left injection `inl(a)`.
    Inl,
    /// Right injection `inr(b)`.
    Inr,
    /// Union eliminator `case(C, f, g, c)`.
    Case,
    /// Universe of codes.
    Univ,
    /// Code for the empty type.
    Code0,
    /// Code for the unit type.
    Code1,
    /// Decoding family `Decode(u)`.
    Decode,
    /// Extensionality `ext(m, n, k)`.
    Ext,
    /// Pointwise-identity eliminator `L(C, d, m, n, k)`.
    PiIdElim,
    /// Primitive propositional η witness `eta(m)`.
    Eta,
}

impl Con {
    /// Number of arguments the constant takes.
    pub fn arity(self) -> usize {
        use Con::*;
        match self {
            Zero | One | Star | Univ | Code0 | Code1 => 0,
            Lam | Refl | Inl | Inr | Decode | Eta => 1,
            Pi | App | Sigma | Pair | Sum | ZeroElim => 2,
            Funsplit | Id | Split | Ext => 3,
            Case => 4,
            J | PiIdElim => 5,
        }
    }

    /// Surface keyword for the constant.
    pub fn name(self) -> &'static str {
        use Con::*;
        match self {
            Pi => "Pi",
            Lam => "lam",
            App => "app",
            Funsplit => "funsplit",
            Id => "Id",
            Refl => "refl",
            J => "J",
            Sigma => "Sigma",
            Pair => "pair",
            Split => "split",
            Zero => "Zero",
            ZeroElim => "zeroElim",
            One => "One",
            Star => "star",
            Sum => "Sum",
            Inl => "inl",
            Inr => "inr",
            Case => "case",
            Univ => "U",
            Code0 => "c0",
            Code1 => "c1",
            Decode => "Decode",
            Ext => "ext",
            PiIdElim => "L",
            Eta => "eta",
        }
    }

    pub fn all() -> &'static [Con] {
        use Con::*;
        &[
            Pi, Lam, App, Funsplit, Id, Refl, J, Sigma, Pair, Split, Zero, ZeroElim, One, Star,
            Sum, Inl, Inr, Case, Univ, Code0, Code1, Decode, Ext, PiIdElim, Eta,
        ]
    }

    pub fn from_name(s: &str) -> Option<Con> {
        Con::all().iter().copied().find(|c| c.name() == s)
    }
}

/// A framework- or object-level expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    /// De Bruijn index into the ambient context.
    Var(usize),
    /// Framework abstraction `[x] b`.
    FwLam(Box<Term>),
    /// Framework application `f(a)`.
    FwApp(Box<Term>, Box<Term>),
    /// Object constant applied to its full argument list.
    Con(Con, Vec<Term>),
}

/// Raised when a downward shift would push a free index below zero.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("shift would make a free de Bruijn index negative")]
pub struct NegativeIndex;

impl Term {
    /// Build a constant application, rejecting wrong arities outright.
    pub fn con(c: Con, args: Vec<Term>) -> Term {
        assert_eq!(
            args.len(),
            c.arity(),
            "constant {} takes {} arguments, got {}",
            c.name(),
            c.arity(),
            args.len()
        );
        Term::Con(c, args)
    }

    /// Move free indices `>= cutoff` by `amount`.
    pub fn shift(&self, amount: i64, cutoff: usize) -> Result<Term, NegativeIndex> {
        match self {
            Term::Var(i) => {
                if *i >= cutoff {
                    let j = *i as i64 + amount;
                    if j < 0 {
                        return Err(NegativeIndex);
                    }
                    Ok(Term::Var(j as usize))
                } else {
                    Ok(Term::Var(*i))
                }
            }
            Term::FwLam(b) => Ok(Term::FwLam(Box::new(b.shift(amount, cutoff + 1)?))),
            Term::FwApp(f, a) => Ok(Term::FwApp(
                Box::new(f.shift(amount, cutoff)?),
                Box::new(a.shift(amount, cutoff)?),
            )),
            Term::Con(c, args) => {
                let shifted = args
                    .iter()
                    .map(|t| t.shift(amount, cutoff))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Term::Con(*c, shifted))
            }
        }
    }

    /// Upward shift; total.
    pub fn shift_up(&self, amount: usize) -> Term {
        self.shift(amount as i64, 0).expect("upward shift is total")
    }

    /// Capture-avoiding substitution of `arg` for index 0, shifting the
    /// remaining free indices down by one.
    pub fn instantiate(&self, arg: &Term) -> Term {
        self.instantiate_at(arg, 0)
    }

    fn instantiate_at(&self, arg: &Term, depth: usize) -> Term {
        match self {
            Term::Var(i) => {
                if *i == depth {
                    arg.shift_up(depth)
                } else if *i > depth {
                    Term::Var(*i - 1)
                } else {
                    Term::Var(*i)
                }
            }
            Term::FwLam(b) => Term::FwLam(Box::new(b.instantiate_at(arg, depth + 1))),
            Term::FwApp(f, a) => Term::FwApp(
                Box::new(f.instantiate_at(arg, depth)),
                Box::new(a.instantiate_at(arg, depth)),
            ),
            Term::Con(c, args) => Term::Con(
                *c,
                args.iter().map(|t| t.instantiate_at(arg, depth)).collect(),
            ),
        }
    }

    /// Does index `idx` occur free?
    pub fn occurs(&self, idx: usize) -> bool {
        match self {
            Term::Var(i) => *i == idx,
            Term::FwLam(b) => b.occurs(idx + 1),
            Term::FwApp(f, a) => f.occurs(idx) || a.occurs(idx),
            Term::Con(_, args) => args.iter().any(|t| t.occurs(idx)),
        }
    }

    /// Largest free index plus one; 0 for closed terms.
    pub fn free_bound(&self) -> usize {
        fn go(t: &Term, depth: usize, best: &mut usize) {
            match t {
                Term::Var(i) => {
                    if *i >= depth {
                        *best = (*best).max(*i - depth + 1);
                    }
                }
                Term::FwLam(b) => go(b, depth + 1, best),
                Term::FwApp(f, a) => {
                    go(f, depth, best);
                    go(a, depth, best);
                }
                Term::Con(_, args) => args.iter().for_each(|a| go(a, depth, best)),
            }
        }
        let mut best = 0;
        go(self, 0, &mut best);
        best
    }

    pub fn head_con(&self) -> Option<Con> {
        match self {
            Term::Con(c, _) => Some(*c),
            _ => None,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::surface::print_term_raw(self))
    }
}

/// A sort of the framework: the category `type`, elementhood `el A`, or a
/// function sort `(x : S) T` whose codomain binds one extra variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Sort {
    Type,
    El(Term),
    Fun(Box<Sort>, Box<Sort>),
}

impl Sort {
    pub fn el(t: Term) -> Sort {
        Sort::El(t)
    }

    pub fn fun(dom: Sort, cod: Sort) -> Sort {
        Sort::Fun(Box::new(dom), Box::new(cod))
    }

    pub fn shift(&self, amount: i64, cutoff: usize) -> Result<Sort, NegativeIndex> {
        match self {
            Sort::Type => Ok(Sort::Type),
            Sort::El(t) => Ok(Sort::El(t.shift(amount, cutoff)?)),
            Sort::Fun(d, c) => Ok(Sort::fun(d.shift(amount, cutoff)?, c.shift(amount, cutoff + 1)?)),
        }
    }

    pub fn shift_up(&self, amount: usize) -> Sort {
        self.shift(amount as i64, 0).expect("upward shift is total")
    }

    pub fn instantiate(&self, arg: &Term) -> Sort {
        self.instantiate_at(arg, 0)
    }

    fn instantiate_at(&self, arg: &Term, depth: usize) -> Sort {
        match self {
            Sort::Type => Sort::Type,
            Sort::El(t) => Sort::El(t.instantiate_at(arg, depth)),
            Sort::Fun(d, c) => Sort::fun(d.instantiate_at(arg, depth), c.instantiate_at(arg, depth + 1)),
        }
    }
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::surface::print_sort_raw(self))
    }
}

/// A telescope of variable bindings. Entry sorts are stored as they were at
/// binding time: looking index `i` up shifts its sort by `i + 1`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Context {
    entries: Vec<(String, Sort)>,
}

impl Context {
    pub fn new() -> Context {
        Context::default()
    }

    pub fn of(entries: Vec<(String, Sort)>) -> Context {
        Context { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, name: impl Into<String>, sort: Sort) {
        self.entries.push((name.into(), sort));
    }

    pub fn extended(&self, name: impl Into<String>, sort: Sort) -> Context {
        let mut ctx = self.clone();
        ctx.push(name, sort);
        ctx
    }

    /// Sort of de Bruijn index `idx`, shifted to be valid in the full context.
    pub fn lookup(&self, idx: usize) -> Option<Sort> {
        if idx >= self.entries.len() {
            return None;
        }
        let pos = self.entries.len() - 1 - idx;
        Some(self.entries[pos].1.shift_up(idx + 1))
    }

    pub fn name_hint(&self, idx: usize) -> Option<&str> {
        if idx >= self.entries.len() {
            return None;
        }
        let pos = self.entries.len() - 1 - idx;
        Some(&self.entries[pos].0)
    }

    /// Entries in binding order, sorts as bound (valid in their prefix).
    pub fn entries(&self) -> &[(String, Sort)] {
        &self.entries
    }
}

/// Convenience constructors for the fixed signature.
pub mod build {
    use super::{Con, Term};

    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn fw_lam(b: Term) -> Term {
        Term::FwLam(Box::new(b))
    }

    pub fn fw_app(f: Term, a: Term) -> Term {
        Term::FwApp(Box::new(f), Box::new(a))
    }

    pub fn fw_apps(f: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(f, fw_app)
    }

    pub fn pi(a: Term, b: Term) -> Term {
        Term::con(Con::Pi, vec![a, b])
    }

    pub fn lam(f: Term) -> Term {
        Term::con(Con::Lam, vec![f])
    }

    pub fn app(m: Term, a: Term) -> Term {
        Term::con(Con::App, vec![m, a])
    }

    pub fn funsplit(c: Term, d: Term, m: Term) -> Term {
        Term::con(Con::Funsplit, vec![c, d, m])
    }

    pub fn id_ty(a: Term, x: Term, y: Term) -> Term {
        Term::con(Con::Id, vec![a, x, y])
    }

    pub fn refl(a: Term) -> Term {
        Term::con(Con::Refl, vec![a])
    }

    pub fn j(c: Term, d: Term, a: Term, b: Term, p: Term) -> Term {
        Term::con(Con::J, vec![c, d, a, b, p])
    }

    pub fn sigma(a: Term, b: Term) -> Term {
        Term::con(Con::Sigma, vec![a, b])
    }

    pub fn pair(a: Term, b: Term) -> Term {
        Term::con(Con::Pair, vec![a, b])
    }

    pub fn split(c: Term, d: Term, p: Term) -> Term {
        Term::con(Con::Split, vec![c, d, p])
    }

    pub fn zero() -> Term {
        Term::con(Con::Zero, vec![])
    }

    pub fn zero_elim(c: Term, z: Term) -> Term {
        Term::con(Con::ZeroElim, vec![c, z])
    }

    pub fn one() -> Term {
        Term::con(Con::One, vec![])
    }

    pub fn star() -> Term {
        Term::con(Con::Star, vec![])
    }

    pub fn sum(a: Term, b: Term) -> Term {
        Term::con(Con::Sum, vec![a, b])
    }

    pub fn inl(a: Term) -> Term {
        Term::con(Con::Inl, vec![a])
    }

    pub fn inr(b: Term) -> Term {
        Term::con(Con::Inr, vec![b])
    }

    pub fn case(c: Term, f: Term, g: Term, s: Term) -> Term {
        Term::con(Con::Case, vec![c, f, g, s])
    }

    pub fn universe() -> Term {
        Term::con(Con::Univ, vec![])
    }

    pub fn code0() -> Term {
        Term::con(Con::Code0, vec![])
    }

    pub fn code1() -> Term {
        Term::con(Con::Code1, vec![])
    }

    pub fn decode(u: Term) -> Term {
        Term::con(Con::Decode, vec![u])
    }

    pub fn ext(m: Term, n: Term, k: Term) -> Term {
        Term::con(Con::Ext, vec![m, n, k])
    }

    pub fn pi_id_elim(c: Term, d: Term, m: Term, n: Term, k: Term) -> Term {
        Term::con(Con::PiIdElim, vec![c, d, m, n, k])
    }

    pub fn eta(m: Term) -> Term {
        Term::con(Con::Eta, vec![m])
    }
}

#[cfg(test)]
mod tests {
    use super::build::*;
    use super::*;

    #[test]
    fn shift_free_variable() {
        assert_eq!(var(0).shift(1, 0).unwrap(), var(1));
    }

    #[test]
    fn shift_leaves_bound_variable() {
        assert_eq!(fw_lam(var(0)).shift(5, 0).unwrap(), fw_lam(var(0)));
    }

    #[test]
    fn shift_under_binder() {
        assert_eq!(fw_lam(var(1)).shift(2, 0).unwrap(), fw_lam(var(3)));
    }

    #[test]
    fn shift_negative_index_rejected() {
        assert_eq!(var(0).shift(-1, 0), Err(NegativeIndex));
    }

    #[test]
    fn instantiate_identity_body() {
        assert_eq!(var(0).instantiate(&star()), star());
    }

    #[test]
    fn instantiate_non_occurring_index() {
        assert_eq!(var(1).instantiate(&star()), var(0));
    }

    #[test]
    fn instantiate_under_application() {
        // [x] x(y) at x := lam([z] z) leaves y pointing one binder lower.
        let body = fw_app(var(0), var(1));
        let arg = lam(fw_lam(var(0)));
        assert_eq!(body.instantiate(&arg), fw_app(arg.clone(), var(0)));
    }

    #[test]
    fn context_lookup_shifts() {
        let mut ctx = Context::new();
        ctx.push("A", Sort::Type);
        ctx.push("a", Sort::el(var(0)));
        assert_eq!(ctx.lookup(0), Some(Sort::el(var(1))));
        assert_eq!(ctx.lookup(1), Some(Sort::Type));
        assert_eq!(ctx.lookup(2), None);
    }

    #[test]
    #[should_panic(expected = "takes")]
    fn wrong_arity_rejected() {
        Term::con(Con::App, vec![star()]);
    }
}
