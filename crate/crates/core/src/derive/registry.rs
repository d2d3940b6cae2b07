//! The derivation registry: every derived rule the library constructs, with
//! its rule-set requirements and computation equalities.

use super::builders::*;
use super::{Derivation, Scope};
use crate::rules::RuleSet;
use crate::surface::ex::*;
use crate::surface::apply_family;
use crate::surface::Expr;

/// Registry entry. `build` is deterministic and pure.
pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    pub build: fn() -> Derivation,
}

pub fn registry() -> Vec<Entry> {
    vec![
        Entry {
            name: "app-from-funsplit",
            summary: "application and its β-rule from the eliminator",
            build: d_app_from_funsplit,
        },
        Entry {
            name: "eta-from-funsplit",
            summary: "propositional η from the eliminator",
            build: d_eta_from_funsplit,
        },
        Entry {
            name: "subst",
            summary: "transport along an identity proof",
            build: d_subst,
        },
        Entry {
            name: "funsplit-from-app-eta",
            summary: "the eliminator from application plus propositional η",
            build: d_funsplit_from_app_eta,
        },
        Entry {
            name: "psi",
            summary: "propositional equality of the eliminator and its round-trip derivation",
            build: d_psi,
        },
        Entry {
            name: "trans",
            summary: "composition of identity proofs",
            build: d_trans,
        },
        Entry {
            name: "symm",
            summary: "inverse of an identity proof",
            build: d_symm,
        },
        Entry {
            name: "eta-from-ext",
            summary: "propositional η from extensionality",
            build: d_eta_from_ext,
        },
        Entry {
            name: "xi-from-ext",
            summary: "propositional ξ from extensionality",
            build: d_xi_from_ext,
        },
        Entry {
            name: "ext-from-xi-eta",
            summary: "extensionality from propositional ξ and η",
            build: || d_ext_from_xi_eta(XiSource::PrimitiveExt),
        },
        Entry {
            name: "star",
            summary: "pointwise application of an identity proof",
            build: d_star,
        },
        Entry {
            name: "ext-from-l",
            summary: "extensionality from the pointwise-identity eliminator",
            build: d_ext_from_l,
        },
        Entry {
            name: "mu",
            summary: "pointwise computation of extensionality proofs",
            build: d_mu,
        },
        Entry {
            name: "ext-cong",
            summary: "congruence of extensionality in its proof argument",
            build: || d_ext_cong(ExtRoute::Primitive),
        },
        Entry {
            name: "nu",
            summary: "extensionality commutes with composition, up to propositional equality",
            build: d_nu,
        },
        Entry {
            name: "l-from-ext-mu",
            summary: "the pointwise-identity eliminator from extensionality and its pointwise computation",
            build: || d_l_from_ext_mu(ExtMuSource::FromL),
        },
        Entry {
            name: "theta",
            summary: "disjointness of the two injections, via the code universe",
            build: d_theta,
        },
        Entry {
            name: "refute-eta-prime",
            summary: "an inhabitant of the empty type from a hypothetical η for the sum-based products",
            build: d_refute_eta_prime,
        },
        Entry {
            name: "pi-prime-translate",
            summary: "sample of the sum-based reinterpretation of application",
            build: d_pi_prime_translate,
        },
    ]
}

pub fn build(name: &str) -> Option<Derivation> {
    registry()
        .into_iter()
        .find(|e| e.name == name)
        .map(|e| (e.build)())
}

fn fam_ab() -> Fam {
    Fam::new(v("A"), v("B"))
}

/// `A : Type, B : (x : El A) Type`.
fn scope_ab() -> Scope {
    let mut sc = Scope::new();
    sc.add("A", st_type());
    sc.add("B", st_fun("x", st_el(v("A")), st_type()));
    sc
}

/// Sort of a framework function `(x : El A) El (B x)`.
fn fn_ab_sort() -> crate::surface::SortExpr {
    st_fun("x", st_el(v("A")), st_el(apply(v("B"), vec![v("x")])))
}

/// `λ(rf) = lam [x] refl (f x)` for a framework variable `f`.
fn lam_refl(f: &str) -> Expr {
    lam_x("$rg_x", refl(apply(v(f), vec![v("$rg_x")])))
}

fn lam_of(f: &str) -> Expr {
    call("lam", vec![v(f)])
}

fn d_app_from_funsplit() -> Derivation {
    let fam = fam_ab();
    let mut sc = scope_ab();
    sc.add("m", st_el(fam.pi()));
    sc.add("a", st_el(v("A")));
    let term = ob_app(AppRoute::Funsplit, &fam, v("m"), v("a"));
    let sort = st_el(fam.at(v("a")));

    let mut sc2 = scope_ab();
    sc2.add("f", fn_ab_sort());
    sc2.add("a", st_el(v("A")));
    let comp = sc2.comp(
        "app-beta",
        &ob_app(AppRoute::Funsplit, &fam, lam_of("f"), v("a")),
        &apply(v("f"), vec![v("a")]),
        &st_el(fam.at(v("a"))),
    );

    Derivation {
        name: "app-from-funsplit".into(),
        required: RuleSet::FUNSPLIT,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_eta_from_funsplit() -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Funsplit;
    let mut sc = scope_ab();
    sc.add("m", st_el(fam.pi()));
    let term = eta(EtaRoute::Funsplit, route, &fam, v("m"));
    let sort = st_el(id_ty(fam.pi(), v("m"), eta_expand(route, &fam, &v("m"))));

    let mut sc2 = scope_ab();
    sc2.add("f", fn_ab_sort());
    let comp1 = sc2.comp(
        "eta-comp",
        &eta(EtaRoute::Funsplit, route, &fam, lam_of("f")),
        &refl(lam_of("f")),
        &st_el(id_ty(fam.pi(), lam_of("f"), lam_of("f"))),
    );
    let comp2 = sc2.comp(
        "motive-at-lambda",
        &id_ty(fam.pi(), lam_of("f"), eta_expand(route, &fam, &lam_of("f"))),
        &id_ty(fam.pi(), lam_of("f"), lam_of("f")),
        &st_type(),
    );

    Derivation {
        name: "eta-from-funsplit".into(),
        required: RuleSet::FUNSPLIT,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp1, comp2],
        notes: vec![],
    }
}

fn d_subst() -> Derivation {
    let mut sc = scope_ab();
    sc.add("a1", st_el(v("A")));
    sc.add("a2", st_el(v("A")));
    sc.add("p", st_el(id_ty(v("A"), v("a1"), v("a2"))));
    sc.add("b2", st_el(apply(v("B"), vec![v("a2")])));
    let term = subst(
        AppRoute::Primitive,
        &v("B"),
        v("a1"),
        v("a2"),
        v("p"),
        v("b2"),
    );
    let sort = st_el(apply(v("B"), vec![v("a1")]));

    let mut sc2 = scope_ab();
    sc2.add("a", st_el(v("A")));
    sc2.add("b", st_el(apply(v("B"), vec![v("a")])));
    let comp = sc2.comp(
        "subst-comp",
        &subst(
            AppRoute::Primitive,
            &v("B"),
            v("a"),
            v("a"),
            refl(v("a")),
            v("b"),
        ),
        &v("b"),
        &st_el(apply(v("B"), vec![v("a")])),
    );

    Derivation {
        name: "subst".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

/// Motive sort `(y : El (Pi A B)) Type`.
fn motive_ab_sort() -> crate::surface::SortExpr {
    st_fun("y", st_el(call("Pi", vec![v("A"), v("B")])), st_type())
}

/// Branch sort `(f : (x : El A) El (B x)) El (C (lam f))`.
fn branch_c_sort() -> crate::surface::SortExpr {
    st_fun(
        "f",
        st_fun("x", st_el(v("A")), st_el(apply(v("B"), vec![v("x")]))),
        st_el(apply(v("C"), vec![call("lam", vec![v("f")])])),
    )
}

fn funsplit_prime(route: AppRoute, eta_route: EtaRoute, y: &Expr) -> Expr {
    let fam = fam_ab();
    let t = apply(
        v("d"),
        vec![fw_lam(
            "$fp_x",
            ob_app(route, &fam, y.clone(), v("$fp_x")),
        )],
    );
    subst(
        route,
        &v("C"),
        y.clone(),
        eta_expand(route, &fam, y),
        eta(eta_route, route, &fam, y.clone()),
        t,
    )
}

fn d_funsplit_from_app_eta() -> Derivation {
    let mut sc = scope_ab();
    sc.add("C", motive_ab_sort());
    sc.add("d", branch_c_sort());
    sc.add("m", st_el(call("Pi", vec![v("A"), v("B")])));
    let term = funsplit_prime(AppRoute::Primitive, EtaRoute::Primitive, &v("m"));
    let sort = st_el(apply(v("C"), vec![v("m")]));

    let mut sc2 = scope_ab();
    sc2.add("C", motive_ab_sort());
    sc2.add("d", branch_c_sort());
    sc2.add("f", fn_ab_sort());
    let comp = sc2.comp(
        "funsplit-comp",
        &funsplit_prime(AppRoute::Primitive, EtaRoute::Primitive, &lam_of("f")),
        &apply(v("d"), vec![v("f")]),
        &st_el(apply(v("C"), vec![lam_of("f")])),
    );

    Derivation {
        name: "funsplit-from-app-eta".into(),
        required: RuleSet::APP.with_eta(),
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_psi() -> Derivation {
    let route = AppRoute::Funsplit;
    let eta_route = EtaRoute::Funsplit;
    let psi_of = |m: Expr| {
        call(
            "funsplit",
            vec![
                fw_lam(
                    "$ps_y",
                    id_ty(
                        apply(v("C"), vec![v("$ps_y")]),
                        call("funsplit", vec![v("C"), v("d"), v("$ps_y")]),
                        funsplit_prime(route, eta_route, &v("$ps_y")),
                    ),
                ),
                fw_lam("$ps_g", refl(apply(v("d"), vec![v("$ps_g")]))),
                m,
            ],
        )
    };

    let mut sc = scope_ab();
    sc.add("C", motive_ab_sort());
    sc.add("d", branch_c_sort());
    sc.add("m", st_el(call("Pi", vec![v("A"), v("B")])));
    let term = psi_of(v("m"));
    let sort = st_el(id_ty(
        apply(v("C"), vec![v("m")]),
        call("funsplit", vec![v("C"), v("d"), v("m")]),
        funsplit_prime(route, eta_route, &v("m")),
    ));

    let mut sc2 = scope_ab();
    sc2.add("C", motive_ab_sort());
    sc2.add("d", branch_c_sort());
    sc2.add("g", fn_ab_sort());
    let comp = sc2.comp(
        "psi-base",
        &psi_of(lam_of("g")),
        &refl(apply(v("d"), vec![v("g")])),
        &st_el(id_ty(
            apply(v("C"), vec![lam_of("g")]),
            call("funsplit", vec![v("C"), v("d"), lam_of("g")]),
            funsplit_prime(route, eta_route, &lam_of("g")),
        )),
    );

    Derivation {
        name: "psi".into(),
        required: RuleSet::FUNSPLIT,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec!["equality of the two eliminators holds at provability level only; they are not definitionally equal on neutral scrutinees".into()],
    }
}

fn d_trans() -> Derivation {
    let mut sc = Scope::new();
    sc.add("A", st_type());
    sc.add("a1", st_el(v("A")));
    sc.add("a2", st_el(v("A")));
    sc.add("a3", st_el(v("A")));
    sc.add("p", st_el(id_ty(v("A"), v("a1"), v("a2"))));
    sc.add("q", st_el(id_ty(v("A"), v("a2"), v("a3"))));
    let term = trans(
        AppRoute::Primitive,
        &v("A"),
        v("a1"),
        v("a2"),
        v("a3"),
        v("p"),
        v("q"),
    );
    let sort = st_el(id_ty(v("A"), v("a1"), v("a3")));

    let mut sc2 = Scope::new();
    sc2.add("A", st_type());
    sc2.add("a1", st_el(v("A")));
    sc2.add("a2", st_el(v("A")));
    sc2.add("p", st_el(id_ty(v("A"), v("a1"), v("a2"))));
    let comp = sc2.comp(
        "unit-right",
        &trans(
            AppRoute::Primitive,
            &v("A"),
            v("a1"),
            v("a1"),
            v("a2"),
            refl(v("a1")),
            v("p"),
        ),
        &v("p"),
        &st_el(id_ty(v("A"), v("a1"), v("a2"))),
    );

    Derivation {
        name: "trans".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec!["elimination is on the first leg, so composing with reflexivity on the right is definitional; the other unit law is propositional".into()],
    }
}

fn d_symm() -> Derivation {
    let mut sc = Scope::new();
    sc.add("A", st_type());
    sc.add("a1", st_el(v("A")));
    sc.add("a2", st_el(v("A")));
    sc.add("p", st_el(id_ty(v("A"), v("a1"), v("a2"))));
    let term = symm(&v("A"), v("a1"), v("a2"), v("p"));
    let sort = st_el(id_ty(v("A"), v("a2"), v("a1")));

    let mut sc2 = Scope::new();
    sc2.add("A", st_type());
    sc2.add("a", st_el(v("A")));
    let comp = sc2.comp(
        "symm-comp",
        &symm(&v("A"), v("a"), v("a"), refl(v("a"))),
        &refl(v("a")),
        &st_el(id_ty(v("A"), v("a"), v("a"))),
    );

    Derivation {
        name: "symm".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_eta_from_ext() -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;
    let eta_route = EtaRoute::FromExt(ExtRoute::Primitive);
    let mut sc = scope_ab();
    sc.add("m", st_el(fam.pi()));
    let term = eta(eta_route, route, &fam, v("m"));
    let sort = st_el(id_ty(fam.pi(), v("m"), eta_expand(route, &fam, &v("m"))));

    let mut sc2 = scope_ab();
    sc2.add("f", fn_ab_sort());
    let comp = sc2.comp(
        "eta-comp",
        &eta(eta_route, route, &fam, lam_of("f")),
        &refl(lam_of("f")),
        &st_el(id_ty(fam.pi(), lam_of("f"), lam_of("f"))),
    );

    Derivation {
        name: "eta-from-ext".into(),
        required: RuleSet::APP.with_ext(),
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_xi_from_ext() -> Derivation {
    let fam = fam_ab();
    let mut sc = scope_ab();
    sc.add("f", fn_ab_sort());
    sc.add("g", fn_ab_sort());
    sc.add(
        "p",
        st_fun(
            "x",
            st_el(v("A")),
            st_el(id_ty(
                apply(v("B"), vec![v("x")]),
                apply(v("f"), vec![v("x")]),
                apply(v("g"), vec![v("x")]),
            )),
        ),
    );
    let term = ext(
        ExtRoute::Primitive,
        &fam,
        lam_of("f"),
        lam_of("g"),
        call("lam", vec![v("p")]),
    );
    let sort = st_el(id_ty(fam.pi(), lam_of("f"), lam_of("g")));

    let mut sc2 = scope_ab();
    sc2.add("f", fn_ab_sort());
    let comp1 = sc2.comp(
        "xi-comp",
        &ext(
            ExtRoute::Primitive,
            &fam,
            lam_of("f"),
            lam_of("f"),
            lam_refl("f"),
        ),
        &refl(lam_of("f")),
        &st_el(id_ty(fam.pi(), lam_of("f"), lam_of("f"))),
    );

    let mut sc3 = scope_ab();
    sc3.add("f", fn_ab_sort());
    sc3.add("g", fn_ab_sort());
    let comp2 = sc3.comp(
        "premise-sort-beta",
        &fam.pointwise_id(AppRoute::Primitive, &lam_of("f"), &lam_of("g")),
        &call(
            "Pi",
            vec![
                v("A"),
                fw_lam(
                    "$xi_x",
                    id_ty(
                        apply(v("B"), vec![v("$xi_x")]),
                        apply(v("f"), vec![v("$xi_x")]),
                        apply(v("g"), vec![v("$xi_x")]),
                    ),
                ),
            ],
        ),
        &st_type(),
    );

    Derivation {
        name: "xi-from-ext".into(),
        required: RuleSet::APP.with_ext(),
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp1, comp2],
        notes: vec![],
    }
}

/// Where the ξ-rule of the extensionality construction comes from.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum XiSource {
    /// ξ built from the primitive ext constant, so the computation rule holds.
    PrimitiveExt,
    /// ξ assumed as a context hypothesis; the construction still checks but
    /// its computation equality is not definitional.
    Hypothesis,
}

pub fn d_ext_from_xi_eta(source: XiSource) -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;

    let ext_prime = |m: Expr, n: Expr, k: Expr| {
        let f = fw_lam("$xe_f", call("app", vec![m.clone(), v("$xe_f")]));
        let g = fw_lam("$xe_g", call("app", vec![n.clone(), v("$xe_g")]));
        let pp = fw_lam("$xe_p", call("app", vec![k, v("$xe_p")]));
        let xi = match source {
            XiSource::PrimitiveExt => ext(
                ExtRoute::Primitive,
                &fam,
                call("lam", vec![f]),
                call("lam", vec![g]),
                call("lam", vec![pp]),
            ),
            XiSource::Hypothesis => apply(v("xi"), vec![f, g, pp]),
        };
        let x = trans(
            route,
            &fam.pi(),
            m.clone(),
            eta_expand(route, &fam, &m),
            eta_expand(route, &fam, &n),
            eta(EtaRoute::Primitive, route, &fam, m.clone()),
            xi,
        );
        trans(
            route,
            &fam.pi(),
            m,
            eta_expand(route, &fam, &n),
            n.clone(),
            x,
            symm(
                &fam.pi(),
                n.clone(),
                eta_expand(route, &fam, &n),
                eta(EtaRoute::Primitive, route, &fam, n),
            ),
        )
    };

    let mut sc = scope_ab();
    if source == XiSource::Hypothesis {
        sc.add(
            "xi",
            st_fun(
                "f",
                st_fun("x", st_el(v("A")), st_el(apply(v("B"), vec![v("x")]))),
                st_fun(
                    "g",
                    st_fun("x", st_el(v("A")), st_el(apply(v("B"), vec![v("x")]))),
                    st_fun(
                        "p",
                        st_fun(
                            "x",
                            st_el(v("A")),
                            st_el(id_ty(
                                apply(v("B"), vec![v("x")]),
                                apply(v("f"), vec![v("x")]),
                                apply(v("g"), vec![v("x")]),
                            )),
                        ),
                        st_el(id_ty(fam.pi(), lam_of("f"), lam_of("g"))),
                    ),
                ),
            ),
        );
    }
    sc.add("m", st_el(fam.pi()));
    sc.add("n", st_el(fam.pi()));
    sc.add(
        "k",
        st_el(fam.pointwise_id(AppRoute::Primitive, &v("m"), &v("n"))),
    );
    let term = ext_prime(v("m"), v("n"), v("k"));
    let sort = st_el(id_ty(fam.pi(), v("m"), v("n")));

    let mut comp_equalities = Vec::new();
    if source == XiSource::PrimitiveExt {
        let mut sc2 = scope_ab();
        sc2.add("h", fn_ab_sort());
        comp_equalities.push(sc2.comp(
            "ext-comp",
            &ext_prime(lam_of("h"), lam_of("h"), lam_refl("h")),
            &refl(lam_of("h")),
            &st_el(id_ty(fam.pi(), lam_of("h"), lam_of("h"))),
        ));
    }

    let notes = match source {
        XiSource::PrimitiveExt => vec![],
        XiSource::Hypothesis => vec![
            "with a hypothetical ξ the term checks, but the computation equality is not definitional (the hypothesis is stuck)".into(),
        ],
    };

    Derivation {
        name: "ext-from-xi-eta".into(),
        required: match source {
            XiSource::PrimitiveExt => RuleSet::APP.with_eta().with_ext(),
            XiSource::Hypothesis => RuleSet::APP.with_eta(),
        },
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities,
        notes,
    }
}

fn d_star() -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;
    let mut sc = scope_ab();
    sc.add("m", st_el(fam.pi()));
    sc.add("n", st_el(fam.pi()));
    sc.add("p", st_el(id_ty(fam.pi(), v("m"), v("n"))));
    sc.add("a", st_el(v("A")));
    let term = star_at(route, &fam, v("m"), v("n"), v("p"), v("a"));
    let sort = st_el(id_ty(
        fam.at(v("a")),
        call("app", vec![v("m"), v("a")]),
        call("app", vec![v("n"), v("a")]),
    ));

    let mut sc2 = scope_ab();
    sc2.add("m", st_el(fam.pi()));
    sc2.add("a", st_el(v("A")));
    let comp = sc2.comp(
        "star-comp",
        &star_at(route, &fam, v("m"), v("m"), refl(v("m")), v("a")),
        &refl(call("app", vec![v("m"), v("a")])),
        &st_el(id_ty(
            fam.at(v("a")),
            call("app", vec![v("m"), v("a")]),
            call("app", vec![v("m"), v("a")]),
        )),
    );

    Derivation {
        name: "star".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_ext_from_l() -> Derivation {
    let fam = fam_ab();
    let mut sc = scope_ab();
    sc.add("m", st_el(fam.pi()));
    sc.add("n", st_el(fam.pi()));
    sc.add(
        "k",
        st_el(fam.pointwise_id(AppRoute::Primitive, &v("m"), &v("n"))),
    );
    let term = ext(ExtRoute::FromL, &fam, v("m"), v("n"), v("k"));
    let sort = st_el(id_ty(fam.pi(), v("m"), v("n")));

    let mut sc2 = scope_ab();
    sc2.add("f", fn_ab_sort());
    let comp = sc2.comp(
        "ext-comp",
        &ext(ExtRoute::FromL, &fam, lam_of("f"), lam_of("f"), lam_refl("f")),
        &refl(lam_of("f")),
        &st_el(id_ty(fam.pi(), lam_of("f"), lam_of("f"))),
    );

    Derivation {
        name: "ext-from-l".into(),
        required: RuleSet::APP.with_pi_id_elim(),
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_mu() -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;
    let ext_route = ExtRoute::FromL;
    let mut sc = scope_ab();
    sc.add("m", st_el(fam.pi()));
    sc.add("n", st_el(fam.pi()));
    sc.add("k", st_el(fam.pointwise_id(route, &v("m"), &v("n"))));
    sc.add("a", st_el(v("A")));
    let term = mu(ext_route, route, &fam, v("m"), v("n"), v("k"), v("a"));
    let sort = st_el(id_ty(
        id_ty(
            fam.at(v("a")),
            call("app", vec![v("m"), v("a")]),
            call("app", vec![v("n"), v("a")]),
        ),
        star_at(
            route,
            &fam,
            v("m"),
            v("n"),
            ext(ext_route, &fam, v("m"), v("n"), v("k")),
            v("a"),
        ),
        call("app", vec![v("k"), v("a")]),
    ));

    let mut sc2 = scope_ab();
    sc2.add("f", fn_ab_sort());
    sc2.add("a", st_el(v("A")));
    let comp1 = sc2.comp(
        "mu-comp",
        &mu(
            ext_route,
            route,
            &fam,
            lam_of("f"),
            lam_of("f"),
            lam_refl("f"),
            v("a"),
        ),
        &refl(refl(apply(v("f"), vec![v("a")]))),
        &st_el(id_ty(
            id_ty(
                fam.at(v("a")),
                apply(v("f"), vec![v("a")]),
                apply(v("f"), vec![v("a")]),
            ),
            refl(apply(v("f"), vec![v("a")])),
            refl(apply(v("f"), vec![v("a")])),
        )),
    );

    // The motive collapses on the canonical triple.
    let mut sc3 = scope_ab();
    sc3.add("f", fn_ab_sort());
    let motive_at_canonical = call(
        "Pi",
        vec![
            v("A"),
            fw_lam(
                "$mc_x",
                id_ty(
                    id_ty(
                        fam.at(v("$mc_x")),
                        call("app", vec![lam_of("f"), v("$mc_x")]),
                        call("app", vec![lam_of("f"), v("$mc_x")]),
                    ),
                    star_at(
                        route,
                        &fam,
                        lam_of("f"),
                        lam_of("f"),
                        ext(ext_route, &fam, lam_of("f"), lam_of("f"), lam_refl("f")),
                        v("$mc_x"),
                    ),
                    call("app", vec![lam_refl("f"), v("$mc_x")]),
                ),
            ),
        ],
    );
    let collapsed = call(
        "Pi",
        vec![
            v("A"),
            fw_lam(
                "$mc_x",
                id_ty(
                    id_ty(
                        fam.at(v("$mc_x")),
                        apply(v("f"), vec![v("$mc_x")]),
                        apply(v("f"), vec![v("$mc_x")]),
                    ),
                    refl(apply(v("f"), vec![v("$mc_x")])),
                    refl(apply(v("f"), vec![v("$mc_x")])),
                ),
            ),
        ],
    );
    let comp2 = sc3.comp("motive-chain", &motive_at_canonical, &collapsed, &st_type());

    Derivation {
        name: "mu".into(),
        required: RuleSet::APP.with_pi_id_elim(),
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp1, comp2],
        notes: vec![],
    }
}

pub fn d_ext_cong(ext_route: ExtRoute) -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;
    let pw = |a: &str, b: &str| fam.pointwise_id(route, &v(a), &v(b));
    let mut sc = scope_ab();
    sc.add("a", st_el(fam.pi()));
    sc.add("b", st_el(fam.pi()));
    sc.add("c", st_el(pw("a", "b")));
    sc.add("d", st_el(pw("a", "b")));
    sc.add("p", st_el(id_ty(pw("a", "b"), v("c"), v("d"))));
    let term = ext_cong(
        ext_route,
        route,
        &fam,
        v("a"),
        v("b"),
        v("c"),
        v("d"),
        v("p"),
    );
    let sort = st_el(id_ty(
        id_ty(fam.pi(), v("a"), v("b")),
        ext(ext_route, &fam, v("a"), v("b"), v("c")),
        ext(ext_route, &fam, v("a"), v("b"), v("d")),
    ));

    let mut sc2 = scope_ab();
    sc2.add("a", st_el(fam.pi()));
    sc2.add("b", st_el(fam.pi()));
    sc2.add("c", st_el(pw("a", "b")));
    let comp = sc2.comp(
        "cong-comp",
        &ext_cong(
            ext_route,
            route,
            &fam,
            v("a"),
            v("b"),
            v("c"),
            v("c"),
            refl(v("c")),
        ),
        &refl(ext(ext_route, &fam, v("a"), v("b"), v("c"))),
        &st_el(id_ty(
            id_ty(fam.pi(), v("a"), v("b")),
            ext(ext_route, &fam, v("a"), v("b"), v("c")),
            ext(ext_route, &fam, v("a"), v("b"), v("c")),
        )),
    );

    Derivation {
        name: "ext-cong".into(),
        required: match ext_route {
            ExtRoute::Primitive => RuleSet::APP.with_ext(),
            ExtRoute::FromL => RuleSet::APP.with_pi_id_elim(),
        },
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}

fn d_nu() -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;
    let xr = ExtRoute::FromL;
    let ext_l = |m: Expr, n: Expr, k: Expr| ext(xr, &fam, m, n, k);
    // Pointwise-identity family between a context function and an element.
    let pw_ty = |m: &Expr, n: &Expr| fam.pointwise_id(route, m, n);

    // The base case of the eliminator, as a function of the abstraction body
    // `h` and the pointwise proof `j` (both names in scope at the call site).
    let lam_h = |h: &Expr| call("lam", vec![h.clone()]);
    let rh = |h: &Expr| lam_x("$nu_r", refl(apply(h.clone(), vec![v("$nu_r")])));
    let s0 = |h: &Expr, j: &Expr| {
        trans(
            route,
            &fam.pi(),
            v("l"),
            lam_h(h),
            lam_h(h),
            ext_l(v("l"), lam_h(h), j.clone()),
            ext_l(lam_h(h), lam_h(h), rh(h)),
        )
    };
    let j_expanded = |j: &Expr| lam_x("$nu_a", call("app", vec![j.clone(), v("$nu_a")]));
    let j_padded = |h: &Expr, j: &Expr| {
        // λx. refl(h x) ∘ j·x
        lam_x(
            "$nu_b",
            trans(
                route,
                &fam.at(v("$nu_b")),
                call("app", vec![v("l"), v("$nu_b")]),
                apply(h.clone(), vec![v("$nu_b")]),
                apply(h.clone(), vec![v("$nu_b")]),
                call("app", vec![j.clone(), v("$nu_b")]),
                refl(apply(h.clone(), vec![v("$nu_b")])),
            ),
        )
    };
    let x1 = |h: &Expr, j: &Expr| ext_l(v("l"), lam_h(h), j_expanded(j));
    let x2 = |h: &Expr, j: &Expr| ext_l(v("l"), lam_h(h), j_padded(h, j));
    // Family of pointwise proofs between l and λh, for the η-witness on j.
    let pfam = |h: &Expr| {
        Fam::new(
            v("A"),
            fw_lam(
                "$nu_w",
                id_ty(
                    fam.at(v("$nu_w")),
                    call("app", vec![v("l"), v("$nu_w")]),
                    apply(h.clone(), vec![v("$nu_w")]),
                ),
            ),
        )
    };
    let body = |h: &Expr, j: &Expr| {
        let idpi = id_ty(fam.pi(), v("l"), lam_h(h));
        let e_ = ext_l(v("l"), lam_h(h), j.clone());
        let u1 = unit_lemma(route, &fam.pi(), v("l"), lam_h(h), e_.clone());
        let e1 = ext_cong(
            xr,
            route,
            &fam,
            v("l"),
            lam_h(h),
            j.clone(),
            j_expanded(j),
            eta(EtaRoute::FromExt(xr), route, &pfam(h), j.clone()),
        );
        let q2 = ext(
            xr,
            &pfam(h),
            j_expanded(j),
            j_padded(h, j),
            lam_x(
                "$nu_c",
                symm(
                    &id_ty(
                        fam.at(v("$nu_c")),
                        call("app", vec![v("l"), v("$nu_c")]),
                        apply(h.clone(), vec![v("$nu_c")]),
                    ),
                    trans(
                        route,
                        &fam.at(v("$nu_c")),
                        call("app", vec![v("l"), v("$nu_c")]),
                        apply(h.clone(), vec![v("$nu_c")]),
                        apply(h.clone(), vec![v("$nu_c")]),
                        call("app", vec![j.clone(), v("$nu_c")]),
                        refl(apply(h.clone(), vec![v("$nu_c")])),
                    ),
                    call("app", vec![j.clone(), v("$nu_c")]),
                    unit_lemma(
                        route,
                        &fam.at(v("$nu_c")),
                        call("app", vec![v("l"), v("$nu_c")]),
                        apply(h.clone(), vec![v("$nu_c")]),
                        call("app", vec![j.clone(), v("$nu_c")]),
                    ),
                ),
            ),
        );
        let e2 = ext_cong(
            xr,
            route,
            &fam,
            v("l"),
            lam_h(h),
            j_expanded(j),
            j_padded(h, j),
            q2,
        );
        let w1 = trans(
            route,
            &idpi,
            s0(h, j),
            e_,
            x1(h, j),
            u1,
            e1,
        );
        trans(route, &idpi, s0(h, j), x1(h, j), x2(h, j), w1, e2)
    };

    let motive = fw_lam(
        "$nu_u",
        fw_lam(
            "$nu_v",
            fw_lam(
                "$nu_m",
                call(
                    "Pi",
                    vec![
                        pw_ty(&v("l"), &v("$nu_u")),
                        fw_lam(
                            "$nu_j",
                            id_ty(
                                id_ty(fam.pi(), v("l"), v("$nu_v")),
                                trans(
                                    route,
                                    &fam.pi(),
                                    v("l"),
                                    v("$nu_u"),
                                    v("$nu_v"),
                                    ext_l(v("l"), v("$nu_u"), v("$nu_j")),
                                    ext_l(v("$nu_u"), v("$nu_v"), v("$nu_m")),
                                ),
                                ext_l(
                                    v("l"),
                                    v("$nu_v"),
                                    lam_x(
                                        "$nu_t",
                                        trans(
                                            route,
                                            &fam.at(v("$nu_t")),
                                            call("app", vec![v("l"), v("$nu_t")]),
                                            call("app", vec![v("$nu_u"), v("$nu_t")]),
                                            call("app", vec![v("$nu_v"), v("$nu_t")]),
                                            call("app", vec![v("$nu_j"), v("$nu_t")]),
                                            call("app", vec![v("$nu_m"), v("$nu_t")]),
                                        ),
                                    ),
                                ),
                            ),
                        ),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$nu_h",
        lam_x("$nu_j2", body(&v("$nu_h"), &v("$nu_j2"))),
    );

    let mut sc = scope_ab();
    sc.add("l", st_el(fam.pi()));
    sc.add("m", st_el(fam.pi()));
    sc.add("n", st_el(fam.pi()));
    sc.add(
        "f",
        st_fun(
            "x",
            st_el(v("A")),
            st_el(id_ty(
                apply(v("B"), vec![v("x")]),
                call("app", vec![v("l"), v("x")]),
                call("app", vec![v("m"), v("x")]),
            )),
        ),
    );
    sc.add(
        "g",
        st_fun(
            "x",
            st_el(v("A")),
            st_el(id_ty(
                apply(v("B"), vec![v("x")]),
                call("app", vec![v("m"), v("x")]),
                call("app", vec![v("n"), v("x")]),
            )),
        ),
    );
    let term = call(
        "app",
        vec![
            call(
                "L",
                vec![
                    motive.clone(),
                    base.clone(),
                    v("m"),
                    v("n"),
                    call("lam", vec![v("g")]),
                ],
            ),
            call("lam", vec![v("f")]),
        ],
    );
    let sort = st_el(id_ty(
        id_ty(fam.pi(), v("l"), v("n")),
        trans(
            route,
            &fam.pi(),
            v("l"),
            v("m"),
            v("n"),
            ext_l(v("l"), v("m"), call("lam", vec![v("f")])),
            ext_l(v("m"), v("n"), call("lam", vec![v("g")])),
        ),
        ext_l(
            v("l"),
            v("n"),
            lam_x(
                "$nu_q",
                trans(
                    route,
                    &fam.at(v("$nu_q")),
                    call("app", vec![v("l"), v("$nu_q")]),
                    call("app", vec![v("m"), v("$nu_q")]),
                    call("app", vec![v("n"), v("$nu_q")]),
                    apply(v("f"), vec![v("$nu_q")]),
                    apply(v("g"), vec![v("$nu_q")]),
                ),
            ),
        ),
    ));

    // The computation the proof leans on: under a binder, extensionality of
    // the canonical triple reduces, and the base case lands at the stated
    // identity type.
    let mut sc2 = scope_ab();
    sc2.add("h", fn_ab_sort());
    let comp1 = sc2.comp(
        "ext-comp-under-binder",
        &ext_l(lam_of("h"), lam_of("h"), lam_refl("h")),
        &refl(lam_of("h")),
        &st_el(id_ty(fam.pi(), lam_of("h"), lam_of("h"))),
    );

    let mut sc3 = scope_ab();
    sc3.add("l", st_el(fam.pi()));
    sc3.add("h", fn_ab_sort());
    sc3.add(
        "j",
        st_el(pw_ty(&v("l"), &lam_of("h"))),
    );
    let nu_prime_base = call(
        "app",
        vec![
            call(
                "L",
                vec![
                    motive,
                    base,
                    lam_of("h"),
                    lam_of("h"),
                    lam_refl("h"),
                ],
            ),
            v("j"),
        ],
    );
    let comp2 = sc3.comp(
        "base-case",
        &nu_prime_base,
        &body(&v("h"), &v("j")),
        &st_el(id_ty(
            id_ty(fam.pi(), v("l"), lam_of("h")),
            s0(&v("h"), &v("j")),
            x2(&v("h"), &v("j")),
        )),
    );

    Derivation {
        name: "nu".into(),
        required: RuleSet::APP.with_pi_id_elim(),
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp1, comp2],
        notes: vec![
            "the unit law `refl ∘ p = p` needed in the base case is propositional here and witnessed by elimination".into(),
            "the extensionality computation rule fires definitionally under the binder in the base case".into(),
        ],
    }
}

/// Where the extensionality operator and its pointwise computation come from.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ExtMuSource {
    /// Both derived from the primitive pointwise-identity eliminator.
    FromL,
    /// Extensionality primitive, its pointwise computation still via the
    /// eliminator.
    PrimitiveExt,
}

pub fn d_l_from_ext_mu(source: ExtMuSource) -> Derivation {
    let fam = fam_ab();
    let route = AppRoute::Primitive;
    let xr = match source {
        ExtMuSource::FromL => ExtRoute::FromL,
        ExtMuSource::PrimitiveExt => ExtRoute::Primitive,
    };

    // λt. u·t and λt. refl(u·t) for an element u of the product.
    let lam_via = |u: &Expr| lam_x("$lf_t", call("app", vec![u.clone(), v("$lf_t")]));
    let refl_via = |u: &Expr| lam_x("$lf_s", refl(call("app", vec![u.clone(), v("$lf_s")])));
    let c_src = |u: &Expr| apply(v("C"), vec![lam_via(u), lam_via(u), refl_via(u)]);
    let c_star = |x: &Expr, y: &Expr, z: &Expr| {
        apply(
            v("C"),
            vec![
                x.clone(),
                y.clone(),
                lam_x(
                    "$lf_r",
                    star_at(route, &fam, x.clone(), y.clone(), z.clone(), v("$lf_r")),
                ),
            ],
        )
    };

    let phi_motive = fw_lam(
        "$lf_x",
        fw_lam(
            "$lf_y",
            fw_lam(
                "$lf_z",
                call(
                    "Pi",
                    vec![
                        c_src(&v("$lf_x")),
                        fw_lam("$lf_c", c_star(&v("$lf_x"), &v("$lf_y"), &v("$lf_z"))),
                    ],
                ),
            ),
        ),
    );
    let phi_inner_motive = fw_lam(
        "$lf_n",
        call(
            "Pi",
            vec![
                c_src(&v("$lf_n")),
                fw_lam(
                    "$lf_m",
                    c_star(&v("$lf_n"), &v("$lf_n"), &refl(v("$lf_n"))),
                ),
            ],
        ),
    );
    let phi_base = fw_lam(
        "$lf_b",
        call(
            "funsplit",
            vec![
                phi_inner_motive,
                fw_lam("$lf_g", lam_x("$lf_i", v("$lf_i"))),
                v("$lf_b"),
            ],
        ),
    );
    let phi = |u: &Expr, v_: &Expr, p: &Expr, c: &Expr| {
        let j = call(
            "J",
            vec![
                phi_motive.clone(),
                phi_base.clone(),
                u.clone(),
                v_.clone(),
                p.clone(),
            ],
        );
        let out_fam = Fam::new(c_src(u), fw_lam("$lf_o", c_star(u, v_, p)));
        ob_app(route, &out_fam, j, c.clone())
    };

    let build = |m: &Expr, n: &Expr, k: &Expr| {
        let e_mnk = ext(xr, &fam, m.clone(), n.clone(), k.clone());
        let b = phi(
            m,
            n,
            &e_mnk,
            &apply(v("d"), vec![fw_lam("$lf_a", call("app", vec![m.clone(), v("$lf_a")]))]),
        );
        let pointwise = Fam::new(
            v("A"),
            fw_lam(
                "$lf_p",
                id_ty(
                    fam.at(v("$lf_p")),
                    call("app", vec![m.clone(), v("$lf_p")]),
                    call("app", vec![n.clone(), v("$lf_p")]),
                ),
            ),
        );
        let starred = lam_x(
            "$lf_q",
            star_at(route, &fam, m.clone(), n.clone(), e_mnk.clone(), v("$lf_q")),
        );
        let p_path = ext(
            xr,
            &pointwise,
            starred.clone(),
            k.clone(),
            lam_x(
                "$lf_u",
                mu(xr, route, &fam, m.clone(), n.clone(), k.clone(), v("$lf_u")),
            ),
        );
        subst(
            route,
            &fw_lam("$lf_w", apply(v("C"), vec![m.clone(), n.clone(), v("$lf_w")])),
            k.clone(),
            starred.clone(),
            symm(&pointwise.pi(), starred, k.clone(), p_path),
            b,
        )
    };

    let motive_sort = st_fun(
        "u",
        st_el(fam.pi()),
        st_fun(
            "v",
            st_el(fam.pi()),
            st_fun(
                "w",
                st_el(fam.pointwise_id(route, &v("u"), &v("v"))),
                st_type(),
            ),
        ),
    );
    let branch_sort = st_fun(
        "f",
        st_fun("x", st_el(v("A")), st_el(apply(v("B"), vec![v("x")]))),
        st_el(apply(
            v("C"),
            vec![lam_of("f"), lam_of("f"), lam_refl("f")],
        )),
    );

    let mut sc = scope_ab();
    sc.add("C", motive_sort.clone());
    sc.add("d", branch_sort.clone());
    sc.add("m", st_el(fam.pi()));
    sc.add("n", st_el(fam.pi()));
    sc.add("k", st_el(fam.pointwise_id(route, &v("m"), &v("n"))));
    let term = build(&v("m"), &v("n"), &v("k"));
    let sort = st_el(apply(v("C"), vec![v("m"), v("n"), v("k")]));

    let mut sc2 = scope_ab();
    sc2.add("C", motive_sort.clone());
    sc2.add("d", branch_sort.clone());
    sc2.add("f", fn_ab_sort());
    let canonical_sort = st_el(apply(
        v("C"),
        vec![lam_of("f"), lam_of("f"), lam_refl("f")],
    ));
    let comp1 = sc2.comp(
        "l-comp",
        &build(&lam_of("f"), &lam_of("f"), &lam_refl("f")),
        &apply(v("d"), vec![v("f")]),
        &canonical_sort,
    );
    let comp2 = sc2.comp(
        "b-comp",
        &phi(
            &lam_of("f"),
            &lam_of("f"),
            &ext(xr, &fam, lam_of("f"), lam_of("f"), lam_refl("f")),
            &apply(
                v("d"),
                vec![fw_lam("$lf_a", call("app", vec![lam_of("f"), v("$lf_a")]))],
            ),
        ),
        &apply(v("d"), vec![v("f")]),
        &canonical_sort,
    );

    let mut sc3 = scope_ab();
    sc3.add("C", motive_sort);
    sc3.add("f", fn_ab_sort());
    sc3.add(
        "c",
        st_el(apply(
            v("C"),
            vec![lam_of("f"), lam_of("f"), lam_refl("f")],
        )),
    );
    let comp3 = sc3.comp(
        "phi-comp",
        &phi(&lam_of("f"), &lam_of("f"), &refl(lam_of("f")), &v("c")),
        &v("c"),
        &st_el(apply(
            v("C"),
            vec![lam_of("f"), lam_of("f"), lam_refl("f")],
        )),
    );

    Derivation {
        name: "l-from-ext-mu".into(),
        required: match source {
            ExtMuSource::FromL => RuleSet::BOTH.with_pi_id_elim(),
            ExtMuSource::PrimitiveExt => RuleSet::BOTH.with_ext().with_pi_id_elim(),
        },
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp1, comp2, comp3],
        notes: vec![
            "transport runs along the inverse of the displayed pointwise path so it lands on the given proof argument".into(),
            "the lemma's inner case split is by the eliminator, so this construction needs both product formulations".into(),
        ],
    }
}

fn d_theta() -> Derivation {
    // λz. Decode(case([_] U, [_] c1, [_] c0, z)) over Sum C C: the left
    // injection decodes to the unit type so transport can start at `star`,
    // and the right injection decodes to the empty type.
    let t_fam = fw_lam(
        "$th_z",
        call(
            "Decode",
            vec![call(
                "case",
                vec![
                    fw_lam("$th_w", v("U")),
                    fw_lam("$th_a", v("c1")),
                    fw_lam("$th_b", v("c0")),
                    v("$th_z"),
                ],
            )],
        ),
    );
    let sum_cc = call("Sum", vec![v("C"), v("C")]);

    let mut sc = Scope::new();
    sc.add("C", st_type());
    sc.add("c", st_el(v("C")));
    sc.add(
        "p",
        st_el(id_ty(
            sum_cc.clone(),
            call("inr", vec![v("c")]),
            call("inl", vec![v("c")]),
        )),
    );
    let term = subst(
        AppRoute::Primitive,
        &t_fam,
        call("inr", vec![v("c")]),
        call("inl", vec![v("c")]),
        v("p"),
        v("star"),
    );
    let sort = st_el(v("Zero"));

    let mut sc2 = Scope::new();
    sc2.add("C", st_type());
    sc2.add("c", st_el(v("C")));
    let comp1 = sc2.comp(
        "decode-inl",
        &apply_family(&t_fam, call("inl", vec![v("c")])),
        &v("One"),
        &st_type(),
    );
    let comp2 = sc2.comp(
        "decode-inr",
        &apply_family(&t_fam, call("inr", vec![v("c")])),
        &v("Zero"),
        &st_type(),
    );

    Derivation {
        name: "theta".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp1, comp2],
        notes: vec![
            "the branch codes are chosen so transport along the given proof direction lands in the empty type".into(),
        ],
    }
}

fn d_refute_eta_prime() -> Derivation {
    // The hypothetical η for the sum-based products, as a framework-function
    // hypothesis abstracting the type, the family and the element.
    let pi_ab = call("Pi", vec![v("A2"), v("B2")]);
    let sum_pi = call("Sum", vec![pi_ab.clone(), pi_ab.clone()]);
    let lam_prime = call(
        "inl",
        vec![lam_x(
            "$re_x",
            call(
                "case",
                vec![
                    fw_lam("$re_z", apply(v("B2"), vec![v("$re_x")])),
                    fw_lam("$re_u", call("app", vec![v("$re_u"), v("$re_x")])),
                    fw_lam("$re_v", call("app", vec![v("$re_v"), v("$re_x")])),
                    v("m2"),
                ],
            ),
        )],
    );
    let eta_prime_sort = st_fun(
        "A2",
        st_type(),
        st_fun(
            "B2",
            st_fun("x", st_el(v("A2")), st_type()),
            st_fun(
                "m2",
                st_el(sum_pi.clone()),
                st_el(id_ty(sum_pi.clone(), v("m2"), lam_prime.clone())),
            ),
        ),
    );

    let idf = lam_x("$re_i", v("$re_i"));
    let hypothetical = apply(
        v("e"),
        vec![v("One"), fw_lam("$re_p", v("One")), call("inr", vec![idf.clone()])],
    );
    let t_fam = fw_lam(
        "$re_t",
        call(
            "Decode",
            vec![call(
                "case",
                vec![
                    fw_lam("$re_w", v("U")),
                    fw_lam("$re_a", v("c1")),
                    fw_lam("$re_b", v("c0")),
                    v("$re_t"),
                ],
            )],
        ),
    );

    let mut sc = Scope::new();
    sc.add("e", eta_prime_sort);
    let term = subst(
        AppRoute::Primitive,
        &t_fam,
        call("inr", vec![idf.clone()]),
        call("inl", vec![idf.clone()]),
        hypothetical,
        v("star"),
    );
    let sort = st_el(v("Zero"));

    let mut sc2 = Scope::new();
    sc2.add("x", st_el(v("One")));
    let comp = sc2.comp(
        "app-prime-chain",
        &call(
            "case",
            vec![
                fw_lam("$re_z2", v("One")),
                fw_lam("$re_u2", call("app", vec![v("$re_u2"), v("x")])),
                fw_lam("$re_v2", call("app", vec![v("$re_v2"), v("x")])),
                call("inr", vec![idf]),
            ],
        ),
        &v("x"),
        &st_el(v("One")),
    );

    Derivation {
        name: "refute-eta-prime".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![
            "the identity-type endpoints of the hypothesis output are rewritten by normalizing the sort before the final check".into(),
        ],
    }
}

fn d_pi_prime_translate() -> Derivation {
    let pi_ab = call("Pi", vec![v("A"), v("B")]);
    let mut sc = scope_ab();
    sc.add("g", st_el(call("Sum", vec![pi_ab.clone(), pi_ab.clone()])));
    sc.add("a", st_el(v("A")));
    let term = call(
        "case",
        vec![
            fw_lam("$pt_z", apply(v("B"), vec![v("a")])),
            fw_lam("$pt_u", call("app", vec![v("$pt_u"), v("a")])),
            fw_lam("$pt_v", call("app", vec![v("$pt_v"), v("a")])),
            v("g"),
        ],
    );
    let sort = st_el(apply(v("B"), vec![v("a")]));

    let sc2 = Scope::new();
    let comp = sc2.comp(
        "beta-prime",
        &call(
            "case",
            vec![
                fw_lam("$pt_z", v("One")),
                fw_lam("$pt_u", call("app", vec![v("$pt_u"), v("star")])),
                fw_lam("$pt_v", call("app", vec![v("$pt_v"), v("star")])),
                call("inl", vec![lam_x("$pt_i", v("$pt_i"))]),
            ],
        ),
        &v("star"),
        &st_el(v("One")),
    );

    Derivation {
        name: "pi-prime-translate".into(),
        required: RuleSet::APP,
        context: sc.ctx(),
        term: sc.term(&term),
        sort: sc.sort(&sort),
        comp_equalities: vec![comp],
        notes: vec![],
    }
}
