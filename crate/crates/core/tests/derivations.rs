//! Per-derivation checks: every registry entry builds, kernel-checks under its
//! declared rule set, and satisfies its computation equalities; plus the
//! worked examples for the individual rules.

use mltt_core::derive::builders::*;
use mltt_core::derive::{build, registry, verify, Derivation};
use mltt_core::kernel::{check, defeq, infer, normalize};
use mltt_core::surface::ex::*;
use mltt_core::surface::{resolve_expr, resolve_sort_expr, Expr, SortExpr};
use mltt_core::term::build as tb;
use mltt_core::{Con, Context, RuleSet, Sort, Term};

fn resolve_in(ctx_names: &[&str], e: &Expr) -> Term {
    let names: Vec<String> = ctx_names.iter().map(|s| s.to_string()).collect();
    resolve_expr(e, &names).expect("resolves")
}

fn resolve_closed(e: &Expr) -> Term {
    resolve_in(&[], e)
}

fn sort_in(ctx_names: &[&str], s: &SortExpr) -> Sort {
    let names: Vec<String> = ctx_names.iter().map(|x| x.to_string()).collect();
    resolve_sort_expr(s, &names).expect("resolves")
}

#[test]
fn every_registry_entry_verifies_under_its_rule_set() {
    for entry in registry() {
        let d = (entry.build)();
        let report = verify(&d, &d.required);
        assert!(
            report.ok(),
            "derivation `{}` failed under `{}`:\nterm: {:?}\ncomps: {:?}",
            entry.name,
            d.required,
            report.term_check,
            report
                .comp_checks
                .iter()
                .map(|c| (c.label.clone(), format!("{:?}", c.result)))
                .collect::<Vec<_>>()
        );
    }
}

#[test]
fn registry_names_are_stable_and_unique() {
    let names: Vec<_> = registry().iter().map(|e| e.name).collect();
    let mut dedup = names.clone();
    dedup.sort();
    dedup.dedup();
    assert_eq!(dedup.len(), names.len());
    for required in [
        "app-from-funsplit",
        "eta-from-funsplit",
        "subst",
        "funsplit-from-app-eta",
        "psi",
        "trans",
        "symm",
        "eta-from-ext",
        "xi-from-ext",
        "ext-from-xi-eta",
        "star",
        "ext-from-l",
        "mu",
        "ext-cong",
        "nu",
        "l-from-ext-mu",
        "theta",
        "refute-eta-prime",
        "pi-prime-translate",
    ] {
        assert!(names.contains(&required), "missing `{required}`");
    }
}

/// Closed instance at the unit type: derived application computes.
#[test]
fn derived_app_computes_at_unit() {
    let fam = Fam::new(v("One"), fw_lam("$t", v("One")));
    let term = resolve_closed(&ob_app(
        AppRoute::Funsplit,
        &fam,
        lam_x("$x", v("$x")),
        v("star"),
    ));
    let cfg = RuleSet::FUNSPLIT;
    let ctx = Context::new();
    assert_eq!(normalize(&cfg, &ctx, &term).unwrap(), tb::star());
    assert_eq!(infer(&cfg, &ctx, &term).unwrap(), Sort::El(tb::one()));
}

#[test]
fn derivation_contexts_are_well_formed() {
    for entry in registry() {
        let d = (entry.build)();
        mltt_core::kernel::check_context(&d.required, &d.context)
            .unwrap_or_else(|e| panic!("{}: ill-formed context: {e}", entry.name));
    }
}

fn sample_motives() -> Vec<(Expr, Expr)> {
    // (motive over y : El (Pi One [_] One), branch) pairs for round-trip tests.
    let pi11 = call("Pi", vec![v("One"), fw_lam("$t", v("One"))]);
    vec![
        (fw_lam("$y", v("One")), fw_lam("$f", v("star"))),
        (
            fw_lam("$y", pi11.clone()),
            fw_lam("$f", lam_x("$x", apply(v("$f"), vec![v("$x")]))),
        ),
        (
            fw_lam("$y", id_ty(pi11.clone(), v("$y"), v("$y"))),
            fw_lam("$f", refl(call("lam", vec![v("$f")]))),
        ),
        (
            fw_lam("$y", call("Sum", vec![v("One"), v("One")])),
            fw_lam("$f", call("inl", vec![v("star")])),
        ),
        (
            fw_lam("$y", call("Sigma", vec![v("One"), fw_lam("$s", v("One"))])),
            fw_lam("$f", call("pair", vec![v("star"), v("star")])),
        ),
    ]
}

/// Round trip of the eliminator through application and propositional η: the
/// computation equality holds definitionally on concrete motives.
#[test]
fn funsplit_round_trip_on_motives() {
    let cfg = RuleSet::FUNSPLIT;
    let fam = Fam::new(v("One"), fw_lam("$t", v("One")));
    for (motive, branch) in sample_motives() {
        for fn_body in [fw_lam("$x", v("$x")), fw_lam("$x", v("star"))] {
            // funsplit'(d, λf) ≡ d(f) with everything derived from funsplit.
            let t = apply(
                fw_lam(
                    "$k",
                    subst(
                        AppRoute::Funsplit,
                        &motive,
                        call("lam", vec![fn_body.clone()]),
                        eta_expand(AppRoute::Funsplit, &fam, &call("lam", vec![fn_body.clone()])),
                        eta(
                            EtaRoute::Funsplit,
                            AppRoute::Funsplit,
                            &fam,
                            call("lam", vec![fn_body.clone()]),
                        ),
                        apply(
                            v("$k"),
                            vec![fw_lam(
                                "$x2",
                                ob_app(
                                    AppRoute::Funsplit,
                                    &fam,
                                    call("lam", vec![fn_body.clone()]),
                                    v("$x2"),
                                ),
                            )],
                        ),
                    ),
                ),
                vec![branch.clone()],
            );
            let rhs = apply(branch.clone(), vec![fn_body.clone()]);
            let lhs = resolve_closed(&t);
            let rhs = resolve_closed(&rhs);
            let sort = Sort::El(
                normalize(
                    &cfg,
                    &Context::new(),
                    &resolve_closed(&apply(motive.clone(), vec![call("lam", vec![fn_body])])),
                )
                .unwrap(),
            );
            assert!(
                defeq(&cfg, &Context::new(), &lhs, &rhs, &sort).unwrap(),
                "round trip failed on motive {motive:?}"
            );
        }
    }
}

/// The two eliminators agree propositionally but not definitionally (their
/// equality is at provability level, not proof level).
#[test]
fn psi_separates_proofs_from_provability() {
    let d = build("psi").unwrap();
    let cfg = RuleSet::FUNSPLIT;
    // On the neutral m of psi's own context the two sides differ.
    let (fs, fs_prime) = match &d.sort {
        Sort::El(Term::Con(Con::Id, parts)) => (parts[1].clone(), parts[2].clone()),
        other => panic!("unexpected sort {other:?}"),
    };
    assert!(!defeq(&cfg, &d.context, &fs, &fs_prime, &Sort::Type).unwrap());
    // While psi itself checks at their identity sort.
    check(&cfg, &d.context, &d.term, &d.sort).unwrap();
}

#[test]
fn psi_base_normalizes_to_refl_at_unit() {
    // ψ(d, λ g) with the constant-unit motive reduces to refl of the branch
    // value.
    let d = build("psi").unwrap();
    let cfg = RuleSet::FUNSPLIT;
    // Instantiate: A := One, B := [_] One, C := [_] One, d := [_] star,
    // m := lam [x] x.
    let inst = instantiate_context(
        &d,
        &[
            v("One"),
            fw_lam("$i", v("One")),
            fw_lam("$i", v("One")),
            fw_lam("$i", v("star")),
            lam_x("$i", v("$i")),
        ],
    );
    let nf = normalize(&cfg, &Context::new(), &inst).unwrap();
    assert_eq!(nf, tb::refl(tb::star()));
}

/// Substitute closed values for every context variable of a derivation's term.
fn instantiate_context(d: &Derivation, values: &[Expr]) -> Term {
    assert_eq!(d.context.len(), values.len());
    let mut t = d.term.clone();
    // Substitute innermost (last-bound) first.
    for value in values.iter().rev() {
        let resolved = resolve_closed(value);
        t = t.instantiate(&resolved);
    }
    t
}

#[test]
fn eta_witnesses_are_stuck_on_neutrals_and_compute_on_canonicals() {
    // Funsplit regime.
    let d = build("eta-from-funsplit").unwrap();
    let cfg = RuleSet::FUNSPLIT;
    let nf = normalize(&cfg, &d.context, &d.term).unwrap();
    assert_eq!(nf.head_con(), Some(Con::Funsplit), "stuck on a variable");
    // Ext regime.
    let d2 = build("eta-from-ext").unwrap();
    let cfg2 = RuleSet::APP.with_ext();
    let nf2 = normalize(&cfg2, &d2.context, &d2.term).unwrap();
    assert_eq!(nf2.head_con(), Some(Con::Ext));
}

#[test]
fn eta_from_ext_agrees_with_funsplit_eta_on_canonicals() {
    // Under the combined rule set, both η-witnesses reduce identically on
    // canonical functions.
    let cfg = RuleSet::BOTH.with_ext();
    let fam = Fam::new(v("One"), fw_lam("$t", v("One")));
    for body in [fw_lam("$x", v("$x")), fw_lam("$x", v("star"))] {
        let m = call("lam", vec![body]);
        let via_ext = resolve_closed(&eta(
            EtaRoute::FromExt(ExtRoute::Primitive),
            AppRoute::Primitive,
            &fam,
            m.clone(),
        ));
        let via_funsplit = resolve_closed(&eta(
            EtaRoute::Funsplit,
            AppRoute::Funsplit,
            &fam,
            m.clone(),
        ));
        let sort = Sort::El(resolve_closed(&id_ty(
            fam.pi(),
            m.clone(),
            m.clone(),
        )));
        assert!(defeq(&cfg, &Context::new(), &via_ext, &via_funsplit, &sort).unwrap());
    }
}

#[test]
fn subst_round_trip_witness_checks() {
    // Transporting forth and back along p is propositionally the identity:
    // witness by elimination on p.
    let names = ["A", "B", "a1", "a2", "p", "b2"];
    let witness = call(
        "J",
        vec![
            fw_lam(
                "$w_x",
                fw_lam(
                    "$w_y",
                    fw_lam(
                        "$w_z",
                        call(
                            "Pi",
                            vec![
                                apply(v("B"), vec![v("$w_y")]),
                                fw_lam(
                                    "$w_b",
                                    id_ty(
                                        apply(v("B"), vec![v("$w_y")]),
                                        subst(
                                            AppRoute::Primitive,
                                            &v("B"),
                                            v("$w_y"),
                                            v("$w_x"),
                                            symm(&v("A"), v("$w_x"), v("$w_y"), v("$w_z")),
                                            subst(
                                                AppRoute::Primitive,
                                                &v("B"),
                                                v("$w_x"),
                                                v("$w_y"),
                                                v("$w_z"),
                                                v("$w_b"),
                                            ),
                                        ),
                                        v("$w_b"),
                                    ),
                                ),
                            ],
                        ),
                    ),
                ),
            ),
            fw_lam("$w_a", lam_x("$w_b2", refl(v("$w_b2")))),
            v("a1"),
            v("a2"),
            v("p"),
        ],
    );
    let d = build("subst").unwrap();
    let cfg = RuleSet::APP;
    let term = resolve_in(&names, &witness);
    let sort = infer(&cfg, &d.context, &term).expect("round-trip witness checks");
    assert!(matches!(sort, Sort::El(_)));
}

#[test]
fn trans_assoc_witness_checks() {
    // ((r∘q)∘p) = (r∘(q∘p)) up to propositional equality, by elimination on
    // the first leg.
    let tr = |a1: &str, a2: &str, a3: &str, p: Expr, q: Expr| {
        trans(
            AppRoute::Primitive,
            &v("A"),
            v(a1),
            v(a2),
            v(a3),
            p,
            q,
        )
    };
    let names = ["A", "a1", "a2", "a3", "a4", "p", "q", "r"];
    let motive = fw_lam(
        "$as_x",
        fw_lam(
            "$as_y",
            fw_lam(
                "$as_z",
                call(
                    "Pi",
                    vec![
                        id_ty(v("A"), v("$as_y"), v("a3")),
                        fw_lam(
                            "$as_q",
                            call(
                                "Pi",
                                vec![
                                    id_ty(v("A"), v("a3"), v("a4")),
                                    fw_lam(
                                        "$as_r",
                                        id_ty(
                                            id_ty(v("A"), v("$as_x"), v("a4")),
                                            trans(
                                                AppRoute::Primitive,
                                                &v("A"),
                                                v("$as_x"),
                                                v("$as_y"),
                                                v("a4"),
                                                v("$as_z"),
                                                trans(
                                                    AppRoute::Primitive,
                                                    &v("A"),
                                                    v("$as_y"),
                                                    v("a3"),
                                                    v("a4"),
                                                    v("$as_q"),
                                                    v("$as_r"),
                                                ),
                                            ),
                                            trans(
                                                AppRoute::Primitive,
                                                &v("A"),
                                                v("$as_x"),
                                                v("a3"),
                                                v("a4"),
                                                trans(
                                                    AppRoute::Primitive,
                                                    &v("A"),
                                                    v("$as_x"),
                                                    v("$as_y"),
                                                    v("a3"),
                                                    v("$as_z"),
                                                    v("$as_q"),
                                                ),
                                                v("$as_r"),
                                            ),
                                        ),
                                    ),
                                ],
                            ),
                        ),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$as_b",
        lam_x(
            "$as_q2",
            lam_x(
                "$as_r2",
                refl(trans(
                    AppRoute::Primitive,
                    &v("A"),
                    v("$as_b"),
                    v("a3"),
                    v("a4"),
                    v("$as_q2"),
                    v("$as_r2"),
                )),
            ),
        ),
    );
    let witness = call(
        "app",
        vec![
            call(
                "app",
                vec![
                    call("J", vec![motive, base, v("a1"), v("a2"), v("p")]),
                    v("q"),
                ],
            ),
            v("r"),
        ],
    );
    let mut ctx = Context::new();
    ctx.push("A", Sort::Type);
    for x in ["a1", "a2", "a3", "a4"] {
        ctx.push(x, sort_in(&["A"], &st_el(v("A"))));
    }
    ctx.push("p", sort_in(&["A", "a1", "a2"], &st_el(id_ty(v("A"), v("a1"), v("a2")))));
    ctx.push(
        "q",
        sort_in(
            &["A", "a1", "a2", "a3"],
            &st_el(id_ty(v("A"), v("a2"), v("a3"))),
        ),
    );
    ctx.push(
        "r",
        sort_in(
            &["A", "a1", "a2", "a3", "a4"],
            &st_el(id_ty(v("A"), v("a3"), v("a4"))),
        ),
    );
    // Entries above give q and r sorts in their own prefixes; expand the
    // context names for the final resolution.
    let term = resolve_in(&names, &witness);
    let cfg = RuleSet::APP;
    mltt_core::kernel::check_context(&cfg, &ctx).unwrap();
    let sort = infer(&cfg, &ctx, &term).expect("associativity witness checks");
    assert!(matches!(sort, Sort::El(_)));
}

#[test]
fn star_is_stuck_on_neutral_proofs() {
    let d = build("star").unwrap();
    let nf = normalize(&RuleSet::APP, &d.context, &d.term).unwrap();
    assert_eq!(nf.head_con(), Some(Con::App));
}

#[test]
fn star_closed_instance_computes() {
    let fam = Fam::new(v("One"), fw_lam("$t", v("One")));
    let idf = lam_x("$x", v("$x"));
    let t = star_at(
        AppRoute::Primitive,
        &fam,
        idf.clone(),
        idf.clone(),
        refl(idf),
        v("star"),
    );
    let nf = normalize(&RuleSet::APP, &Context::new(), &resolve_closed(&t)).unwrap();
    assert_eq!(nf, tb::refl(tb::star()));
}

#[test]
fn star_agrees_with_subst_transport() {
    // subst(symm p, refl(m·a)) and p∗a agree propositionally; witness by
    // elimination on p.
    let names = ["A", "B", "m", "n", "p", "a"];
    let fam = Fam::new(v("A"), v("B"));
    let transport = |x: Expr, y: Expr, z: Expr| {
        subst(
            AppRoute::Primitive,
            &fw_lam(
                "$na_y",
                id_ty(
                    fam.at(v("a")),
                    call("app", vec![x.clone(), v("a")]),
                    call("app", vec![v("$na_y"), v("a")]),
                ),
            ),
            y.clone(),
            x.clone(),
            symm(&fam.pi(), x.clone(), y, z),
            refl(call("app", vec![x, v("a")])),
        )
    };
    let motive = fw_lam(
        "$na_x",
        fw_lam(
            "$na_y2",
            fw_lam(
                "$na_z",
                id_ty(
                    id_ty(
                        fam.at(v("a")),
                        call("app", vec![v("$na_x"), v("a")]),
                        call("app", vec![v("$na_y2"), v("a")]),
                    ),
                    transport(v("$na_x"), v("$na_y2"), v("$na_z")),
                    star_at(
                        AppRoute::Primitive,
                        &fam,
                        v("$na_x"),
                        v("$na_y2"),
                        v("$na_z"),
                        v("a"),
                    ),
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$na_b",
        refl(refl(call("app", vec![v("$na_b"), v("a")]))),
    );
    let witness = call("J", vec![motive, base, v("m"), v("n"), v("p")]);
    let d = build("star").unwrap();
    let term = resolve_in(&names, &witness);
    let cfg = RuleSet::APP;
    let sort = infer(&cfg, &d.context, &term).expect("naturality witness checks");
    assert!(matches!(sort, Sort::El(_)));
}

#[test]
fn ext_from_l_is_stuck_on_neutral_arguments() {
    let d = build("ext-from-l").unwrap();
    let cfg = RuleSet::APP.with_pi_id_elim();
    let nf = normalize(&cfg, &d.context, &d.term).unwrap();
    assert_eq!(nf.head_con(), Some(Con::PiIdElim));
}

#[test]
fn mu_closed_instance_computes() {
    let fam = Fam::new(v("One"), fw_lam("$t", v("One")));
    let idf = fw_lam("$x", v("$x"));
    let t = mu(
        ExtRoute::FromL,
        AppRoute::Primitive,
        &fam,
        call("lam", vec![idf.clone()]),
        call("lam", vec![idf.clone()]),
        lam_x("$x", refl(apply(idf.clone(), vec![v("$x")]))),
        v("star"),
    );
    let cfg = RuleSet::APP.with_pi_id_elim();
    let nf = normalize(&cfg, &Context::new(), &resolve_closed(&t)).unwrap();
    assert_eq!(nf, tb::refl(tb::refl(tb::star())));
}

#[test]
fn ext_cong_composes_propositionally() {
    // cong(q∘p) vs cong(q)∘cong(p): witness by elimination on p.
    let fam = Fam::new(v("A"), v("B"));
    let xr = ExtRoute::Primitive;
    let route = AppRoute::Primitive;
    let pw = fam.pointwise_id(route, &v("a"), &v("b"));
    let cong = |c: Expr, d: Expr, p: Expr| {
        ext_cong(xr, route, &fam, v("a"), v("b"), c, d, p)
    };
    let idty = |x: Expr, y: Expr| {
        id_ty(
            id_ty(fam.pi(), v("a"), v("b")),
            ext(xr, &fam, v("a"), v("b"), x),
            ext(xr, &fam, v("a"), v("b"), y),
        )
    };
    let motive = fw_lam(
        "$cc_c",
        fw_lam(
            "$cc_d",
            fw_lam(
                "$cc_z",
                call(
                    "Pi",
                    vec![
                        id_ty(pw.clone(), v("$cc_d"), v("e")),
                        fw_lam(
                            "$cc_q",
                            id_ty(
                                idty(v("$cc_c"), v("e")),
                                cong(
                                    v("$cc_c"),
                                    v("e"),
                                    trans(
                                        route,
                                        &pw,
                                        v("$cc_c"),
                                        v("$cc_d"),
                                        v("e"),
                                        v("$cc_z"),
                                        v("$cc_q"),
                                    ),
                                ),
                                trans(
                                    route,
                                    &idty(v("$cc_c"), v("e")),
                                    ext(xr, &fam, v("a"), v("b"), v("$cc_c")),
                                    ext(xr, &fam, v("a"), v("b"), v("$cc_d")),
                                    ext(xr, &fam, v("a"), v("b"), v("e")),
                                    cong(v("$cc_c"), v("$cc_d"), v("$cc_z")),
                                    cong(v("$cc_d"), v("e"), v("$cc_q")),
                                ),
                            ),
                        ),
                    ],
                ),
            ),
        ),
    );
    let base = fw_lam(
        "$cc_b",
        lam_x("$cc_q2", refl(cong(v("$cc_b"), v("e"), v("$cc_q2")))),
    );
    let witness = call(
        "app",
        vec![
            call("J", vec![motive, base, v("c"), v("d"), v("p")]),
            v("q"),
        ],
    );

    let mut sc_names = vec!["A", "B", "a", "b", "c", "d", "e", "p", "q"];
    let mut ctx = Context::new();
    ctx.push("A", Sort::Type);
    ctx.push(
        "B",
        sort_in(&["A"], &st_fun("x", st_el(v("A")), st_type())),
    );
    let el_pi = st_el(call("Pi", vec![v("A"), v("B")]));
    ctx.push("a", sort_in(&["A", "B"], &el_pi));
    ctx.push("b", sort_in(&["A", "B", "a"], &el_pi));
    let pw_sort = st_el(fam.pointwise_id(route, &v("a"), &v("b")));
    ctx.push("c", sort_in(&["A", "B", "a", "b"], &pw_sort));
    ctx.push("d", sort_in(&["A", "B", "a", "b", "c"], &pw_sort));
    ctx.push("e", sort_in(&["A", "B", "a", "b", "c", "d"], &pw_sort));
    ctx.push(
        "p",
        sort_in(
            &["A", "B", "a", "b", "c", "d", "e"],
            &st_el(id_ty(fam.pointwise_id(route, &v("a"), &v("b")), v("c"), v("d"))),
        ),
    );
    ctx.push(
        "q",
        sort_in(
            &["A", "B", "a", "b", "c", "d", "e", "p"],
            &st_el(id_ty(fam.pointwise_id(route, &v("a"), &v("b")), v("d"), v("e"))),
        ),
    );
    sc_names.truncate(9);
    let term = resolve_in(&sc_names, &witness);
    let cfg = RuleSet::APP.with_ext();
    mltt_core::kernel::check_context(&cfg, &ctx).unwrap();
    let sort = infer(&cfg, &ctx, &term).expect("congruence composition witness checks");
    assert!(matches!(sort, Sort::El(_)));
}

#[test]
fn nu_closed_instance_normalizes_to_refl_headed_term() {
    let d = build("nu").unwrap();
    let cfg = RuleSet::APP.with_pi_id_elim();
    // l = m = n = identity on One, f = g = pointwise refl.
    let idf = lam_x("$x", v("$x"));
    let rf = fw_lam("$x", refl(v("$x")));
    let inst = instantiate_nu(&d, idf, rf);
    let nf = normalize(&cfg, &Context::new(), &inst).unwrap();
    assert_eq!(nf.head_con(), Some(Con::Refl), "got {nf}");
}

fn instantiate_nu(d: &Derivation, idf: Expr, rf: Expr) -> Term {
    let values = vec![
        v("One"),
        fw_lam("$i", v("One")),
        idf.clone(),
        idf.clone(),
        idf,
        rf.clone(),
        rf,
    ];
    assert_eq!(d.context.len(), values.len());
    let mut t = d.term.clone();
    for value in values.iter().rev() {
        t = t.instantiate(&resolve_closed(value));
    }
    t
}

#[test]
fn refutation_term_depends_on_the_hypothesis() {
    let d = build("refute-eta-prime").unwrap();
    let cfg = RuleSet::APP;
    // Checks in the extended context.
    check(&cfg, &d.context, &d.term, &d.sort).unwrap();
    // Without the hypothesis the same term has a dangling index.
    let err = infer(&cfg, &Context::new(), &d.term).unwrap_err();
    assert_eq!(err.kind, mltt_core::ErrorKind::UnboundVariable);
}

#[test]
fn theta_is_stuck_on_its_neutral_proof() {
    let d = build("theta").unwrap();
    let nf = normalize(&RuleSet::APP, &d.context, &d.term).unwrap();
    assert_eq!(nf.head_con(), Some(Con::App));
}

#[test]
fn hypothesis_variant_of_ext_from_xi_eta_checks() {
    use mltt_core::derive::{d_ext_from_xi_eta, XiSource};
    let d = d_ext_from_xi_eta(XiSource::Hypothesis);
    let report = verify(&d, &d.required);
    assert!(report.ok(), "{:?}", report.term_check);
    assert!(!d.notes.is_empty());
}

#[test]
fn ext_cong_from_l_variant_checks() {
    use mltt_core::derive::d_ext_cong;
    let d = d_ext_cong(ExtRoute::FromL);
    let report = verify(&d, &d.required);
    assert!(report.ok(), "{:?}", report.term_check);
}

#[test]
fn l_from_ext_mu_primitive_ext_variant_checks() {
    use mltt_core::derive::{d_l_from_ext_mu, ExtMuSource};
    let d = d_l_from_ext_mu(ExtMuSource::PrimitiveExt);
    let report = verify(&d, &d.required);
    assert!(
        report.ok(),
        "term: {:?}, comps: {:?}",
        report.term_check,
        report
            .comp_checks
            .iter()
            .map(|c| (c.label.clone(), format!("{:?}", c.result)))
            .collect::<Vec<_>>()
    );
}
