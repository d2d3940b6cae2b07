//! Term-level macro combinators shared by the derived rules.
//!
//! Everything here expands to core syntax; no kernel rules are added. Builders
//! are parameterized by which provider supplies object application, the
//! propositional η-witness and extensionality, so one construction can be
//! instantiated under several rule sets.
//!
//! Binder hygiene: internal binders use `$`-prefixed names with a per-builder
//! prefix; context names never start with `$`, so splicing parameter
//! expressions under internal binders cannot capture.

use crate::surface::ex::{apply, call, fw_lam, v};
use crate::surface::{apply_family, Expr};

/// The data of a dependent product: the domain and the family.
#[derive(Clone)]
pub struct Fam {
    pub a: Expr,
    pub b: Expr,
}

impl Fam {
    pub fn new(a: Expr, b: Expr) -> Fam {
        Fam { a, b }
    }

    /// `Pi A B`.
    pub fn pi(&self) -> Expr {
        call("Pi", vec![self.a.clone(), self.b.clone()])
    }

    /// `B t`, reduced when the family is a literal abstraction.
    pub fn at(&self, t: Expr) -> Expr {
        apply_family(&self.b, t)
    }

    /// `Π x : A. Id(B x, m·x, n·x)` for the pointwise-identity family.
    pub fn pointwise_id(&self, route: AppRoute, m: &Expr, n: &Expr) -> Expr {
        call(
            "Pi",
            vec![
                self.a.clone(),
                fw_lam(
                    "$pw_x",
                    call(
                        "Id",
                        vec![
                            self.at(v("$pw_x")),
                            ob_app(route, self, m.clone(), v("$pw_x")),
                            ob_app(route, self, n.clone(), v("$pw_x")),
                        ],
                    ),
                ),
            ],
        )
    }
}

/// How object-level application is spelled.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum AppRoute {
    Primitive,
    /// `app(m, a) := funsplit([y] B(a), [f] f(a), m)`.
    Funsplit,
}

/// How the propositional η-witness is obtained.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum EtaRoute {
    /// The primitive constant.
    Primitive,
    /// Via the eliminator with motive `Id(Π(A,B), y, λx. y·x)`.
    Funsplit,
    /// Via an extensionality provider applied to pointwise reflexivity.
    FromExt(ExtRoute),
}

/// How extensionality is spelled.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ExtRoute {
    Primitive,
    /// `ext(m, n, k) := L([u v w] Id(Π(A,B), u, v), [f] refl(λf), m, n, k)`.
    FromL,
}

/// `lam [x] body`.
pub fn lam_x(x: &str, body: Expr) -> Expr {
    call("lam", vec![fw_lam(x, body)])
}

/// `refl e`.
pub fn refl(e: Expr) -> Expr {
    call("refl", vec![e])
}

/// `Id ty a b`.
pub fn id_ty(ty: Expr, a: Expr, b: Expr) -> Expr {
    call("Id", vec![ty, a, b])
}

/// Object application `m · x` under the chosen route.
pub fn ob_app(route: AppRoute, fam: &Fam, m: Expr, x: Expr) -> Expr {
    match route {
        AppRoute::Primitive => call("app", vec![m, x]),
        AppRoute::Funsplit => call(
            "funsplit",
            vec![
                fw_lam("$oa_y", fam.at(x.clone())),
                fw_lam("$oa_f", apply(v("$oa_f"), vec![x])),
                m,
            ],
        ),
    }
}

/// `λx. m·x`.
pub fn eta_expand(route: AppRoute, fam: &Fam, m: &Expr) -> Expr {
    lam_x("$ex_x", ob_app(route, fam, m.clone(), v("$ex_x")))
}

/// `λx. refl(m·x)`.
pub fn pointwise_refl(route: AppRoute, fam: &Fam, m: &Expr) -> Expr {
    lam_x("$pr_x", refl(ob_app(route, fam, m.clone(), v("$pr_x"))))
}

/// Extensionality `ext(m, n, k) : Id(Π(A,B), m, n)` under the chosen route.
pub fn ext(route: ExtRoute, fam: &Fam, m: Expr, n: Expr, k: Expr) -> Expr {
    match route {
        ExtRoute::Primitive => call("ext", vec![m, n, k]),
        ExtRoute::FromL => call(
            "L",
            vec![
                fw_lam(
                    "$xl_u",
                    fw_lam(
                        "$xl_v",
                        fw_lam("$xl_w", id_ty(fam.pi(), v("$xl_u"), v("$xl_v"))),
                    ),
                ),
                fw_lam("$xl_f", refl(lam_x("$xl_x", apply(v("$xl_f"), vec![v("$xl_x")])))),
                m,
                n,
                k,
            ],
        ),
    }
}

/// Propositional η: `eta(m) : Id(Π(A,B), m, λx. m·x)`.
pub fn eta(route: EtaRoute, app_route: AppRoute, fam: &Fam, m: Expr) -> Expr {
    match route {
        EtaRoute::Primitive => call("eta", vec![m]),
        EtaRoute::Funsplit => call(
            "funsplit",
            vec![
                fw_lam(
                    "$ef_y",
                    id_ty(
                        fam.pi(),
                        v("$ef_y"),
                        eta_expand(app_route, fam, &v("$ef_y")),
                    ),
                ),
                fw_lam("$ef_f", refl(call("lam", vec![v("$ef_f")]))),
                m,
            ],
        ),
        EtaRoute::FromExt(ext_route) => ext(
            ext_route,
            fam,
            m.clone(),
            eta_expand(app_route, fam, &m),
            pointwise_refl(app_route, fam, &m),
        ),
    }
}

/// Composition `q ∘ p : Id(ty, a1, a3)` from `p : Id(ty, a1, a2)` and
/// `q : Id(ty, a2, a3)`, by elimination on the first leg, so composing with
/// reflexivity on the right is a computation rule.
pub fn trans(
    route: AppRoute,
    ty: &Expr,
    a1: Expr,
    a2: Expr,
    a3: Expr,
    p: Expr,
    q: Expr,
) -> Expr {
    let motive = fw_lam(
        "$tr_x",
        fw_lam(
            "$tr_y",
            fw_lam(
                "$tr_z",
                call(
                    "Pi",
                    vec![
                        id_ty(ty.clone(), v("$tr_y"), a3.clone()),
                        fw_lam("$tr_w", id_ty(ty.clone(), v("$tr_x"), a3.clone())),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam("$tr_b", lam_x("$tr_i", v("$tr_i")));
    let j = call("J", vec![motive, base, a1.clone(), a2.clone(), p]);
    let out_fam = Fam::new(
        id_ty(ty.clone(), a2, a3.clone()),
        fw_lam("$tr_o", id_ty(ty.clone(), a1, a3)),
    );
    ob_app(route, &out_fam, j, q)
}

/// Inverse `p⁻¹ : Id(ty, a2, a1)`.
pub fn symm(ty: &Expr, a1: Expr, a2: Expr, p: Expr) -> Expr {
    let motive = fw_lam(
        "$sy_x",
        fw_lam(
            "$sy_y",
            fw_lam("$sy_z", id_ty(ty.clone(), v("$sy_y"), v("$sy_x"))),
        ),
    );
    let base = fw_lam("$sy_b", refl(v("$sy_b")));
    call("J", vec![motive, base, a1, a2, p])
}

/// Transport `subst(p, b2) : B(a1)` from `p : Id(_, a1, a2)`, `b2 : B(a2)`.
pub fn subst(route: AppRoute, b_fam: &Expr, a1: Expr, a2: Expr, p: Expr, b2: Expr) -> Expr {
    let motive = fw_lam(
        "$su_x",
        fw_lam(
            "$su_y",
            fw_lam(
                "$su_z",
                call(
                    "Pi",
                    vec![
                        apply_family(b_fam, v("$su_y")),
                        fw_lam("$su_w", apply_family(b_fam, v("$su_x"))),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam("$su_b", lam_x("$su_i", v("$su_i")));
    let j = call("J", vec![motive, base, a1.clone(), a2.clone(), p]);
    let out_fam = Fam::new(
        apply_family(b_fam, a2),
        fw_lam("$su_o", apply_family(b_fam, a1)),
    );
    ob_app(route, &out_fam, j, b2)
}

/// Pointwise application of an identity proof:
/// `p ∗ a : Id(B(a), m·a, n·a)` from `p : Id(Π(A,B), m, n)`.
pub fn star_at(route: AppRoute, fam: &Fam, m: Expr, n: Expr, p: Expr, a: Expr) -> Expr {
    let pointwise = |x: Expr, y: Expr, t: Expr| {
        id_ty(
            fam.at(t.clone()),
            ob_app(route, fam, x, t.clone()),
            ob_app(route, fam, y, t),
        )
    };
    let motive = fw_lam(
        "$st_x",
        fw_lam(
            "$st_y",
            fw_lam(
                "$st_z",
                call(
                    "Pi",
                    vec![
                        fam.a.clone(),
                        fw_lam("$st_t", pointwise(v("$st_x"), v("$st_y"), v("$st_t"))),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$st_b",
        lam_x(
            "$st_t",
            refl(ob_app(route, fam, v("$st_b"), v("$st_t"))),
        ),
    );
    let j = call("J", vec![motive, base, m.clone(), n.clone(), p]);
    let out_fam = Fam::new(
        fam.a.clone(),
        fw_lam("$st_o", pointwise(m, n, v("$st_o"))),
    );
    ob_app(route, &out_fam, j, a)
}

/// Unit law on the stuck side: `Id(trans(p, refl(a2)), p)`, by elimination
/// on `p`. Composition with reflexivity on the other side is definitional.
pub fn unit_lemma(route: AppRoute, ty: &Expr, a1: Expr, a2: Expr, p: Expr) -> Expr {
    let motive = fw_lam(
        "$un_x",
        fw_lam(
            "$un_y",
            fw_lam(
                "$un_z",
                id_ty(
                    id_ty(ty.clone(), v("$un_x"), v("$un_y")),
                    trans(
                        route,
                        ty,
                        v("$un_x"),
                        v("$un_y"),
                        v("$un_y"),
                        v("$un_z"),
                        refl(v("$un_y")),
                    ),
                    v("$un_z"),
                ),
            ),
        ),
    );
    let base = fw_lam("$un_b", refl(refl(v("$un_b"))));
    call("J", vec![motive, base, a1, a2, p])
}

/// Congruence of extensionality in its proof argument:
/// `Id(ext(a, b, c), ext(a, b, d))` from `p : Id(_, c, d)`, by elimination
/// on `p`.
pub fn ext_cong(
    ext_route: ExtRoute,
    app_route: AppRoute,
    fam: &Fam,
    a: Expr,
    b: Expr,
    c: Expr,
    d: Expr,
    p: Expr,
) -> Expr {
    let motive = fw_lam(
        "$xc_c",
        fw_lam(
            "$xc_d",
            fw_lam(
                "$xc_z",
                id_ty(
                    id_ty(fam.pi(), a.clone(), b.clone()),
                    ext(ext_route, fam, a.clone(), b.clone(), v("$xc_c")),
                    ext(ext_route, fam, a.clone(), b.clone(), v("$xc_d")),
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$xc_b",
        refl(ext(ext_route, fam, a.clone(), b.clone(), v("$xc_b"))),
    );
    let _ = app_route;
    call("J", vec![motive, base, c, d, p])
}

/// `μ(m, n, k, a) : Id(Id(B a, m·a, n·a), ext(m,n,k) ∗ a, k·a)`, by the
/// pointwise-identity eliminator with motive
/// `Π x : A. Id(_, ext(u,v,w) ∗ x, w·x)`.
pub fn mu(
    ext_route: ExtRoute,
    route: AppRoute,
    fam: &Fam,
    m: Expr,
    n: Expr,
    k: Expr,
    a: Expr,
) -> Expr {
    let pointwise_fam = |u: &Expr, v_: &Expr| {
        Fam::new(
            fam.a.clone(),
            fw_lam(
                "$mu_i",
                id_ty(
                    fam.at(v("$mu_i")),
                    ob_app(route, fam, u.clone(), v("$mu_i")),
                    ob_app(route, fam, v_.clone(), v("$mu_i")),
                ),
            ),
        )
    };

    let motive = fw_lam(
        "$mu_u",
        fw_lam(
            "$mu_v",
            fw_lam(
                "$mu_w",
                call(
                    "Pi",
                    vec![
                        fam.a.clone(),
                        fw_lam(
                            "$mu_x",
                            id_ty(
                                id_ty(
                                    fam.at(v("$mu_x")),
                                    ob_app(route, fam, v("$mu_u"), v("$mu_x")),
                                    ob_app(route, fam, v("$mu_v"), v("$mu_x")),
                                ),
                                star_at(
                                    route,
                                    fam,
                                    v("$mu_u"),
                                    v("$mu_v"),
                                    ext(ext_route, fam, v("$mu_u"), v("$mu_v"), v("$mu_w")),
                                    v("$mu_x"),
                                ),
                                ob_app(
                                    route,
                                    &pointwise_fam(&v("$mu_u"), &v("$mu_v")),
                                    v("$mu_w"),
                                    v("$mu_x"),
                                ),
                            ),
                        ),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$mu_f",
        lam_x(
            "$mu_t",
            refl(refl(apply(v("$mu_f"), vec![v("$mu_t")]))),
        ),
    );
    let l = call("L", vec![motive, base, m.clone(), n.clone(), k.clone()]);
    let out_fam = Fam::new(
        fam.a.clone(),
        fw_lam(
            "$mu_o",
            id_ty(
                id_ty(
                    fam.at(v("$mu_o")),
                    ob_app(route, fam, m.clone(), v("$mu_o")),
                    ob_app(route, fam, n.clone(), v("$mu_o")),
                ),
                star_at(
                    route,
                    fam,
                    m.clone(),
                    n.clone(),
                    ext(ext_route, fam, m.clone(), n.clone(), k.clone()),
                    v("$mu_o"),
                ),
                ob_app(route, &pointwise_fam(&m, &n), k.clone(), v("$mu_o")),
            ),
        ),
    );
    ob_app(route, &out_fam, l, a)
}
