use super::*;
use crate::arith::{parse_poly, Rat, Ring};
use crate::bases::{normal_form, saturate_ideal, DEFAULT_SATURATION_CAP};

fn umbrella() -> (Arc<RingContext>, HypersurfaceProblem) {
    let ctx = RingContext::new(&["x", "y", "z"]).unwrap();
    let a = ctx.a_ring();
    let h = parse_poly(a, "y^2 - x*z^2").unwrap();
    let f = parse_poly(a, "y^2 - (x - z)^2").unwrap();
    let sing = alloc::vec![parse_poly(a, "y").unwrap(), parse_poly(a, "z").unwrap()];
    let p = HypersurfaceProblem::new(&ctx, h, Omega::Function(f), Some(sing)).unwrap();
    (ctx, p)
}

/// Substitutes the chart `s0 = 1, x = z^2 s1^2 / 4, y = -z^2 s1 / 2,
/// s2 = z s1^2 / 2` into a polynomial of `S`.
fn chart(p: &Poly) -> Poly {
    let t = Ring::global(&["s1", "z"]).unwrap();
    let im = |e: &str| parse_poly(&t, e).unwrap();
    let images = [im("1"), im("s1"), im("1/2*z*s1^2"), im("1/4*z^2*s1^2"), im("-1/2*z^2*s1"), im("z")];
    p.substitute(&t, &images)
}

#[test]
fn umbrella_nash_ideal_vanishes_on_chart() {
    let b = Budget::unlimited();
    let (ctx, p) = umbrella();
    let j = nash_ideal(&ctx, p.h(), &p.sing_ideal(), DEFAULT_SATURATION_CAP, &b).unwrap();
    assert!(!j.is_empty());
    for g in j.polys() {
        assert!(chart(&g).is_zero(), "{} does not vanish on the chart", g);
    }
    // saturation is idempotent
    let sing: Vec<Poly> = p.sing_ideal().iter().map(|g| ctx.lift(g).unwrap()).collect();
    let again = saturate_ideal(&j, &sing, DEFAULT_SATURATION_CAP, &b).unwrap();
    assert!(again.same_module(&j, &b).unwrap());
    // the default singular ideal cuts out the same transform
    let jd = nash_ideal(&ctx, p.h(), &default_sing(p.h()), DEFAULT_SATURATION_CAP, &b).unwrap();
    assert!(jd.same_module(&j, &b).unwrap());
}

#[test]
fn hyperplane_nash_ideal_is_constant() {
    let b = Budget::unlimited();
    let ctx = RingContext::new(&["x", "y", "z"]).unwrap();
    let h = parse_poly(ctx.a_ring(), "z").unwrap();
    let j = nash_ideal(&ctx, &h, &default_sing(&h), DEFAULT_SATURATION_CAP, &b).unwrap();
    let s = ctx.s_ring();
    let expected = SubmoduleBasis::ideal(s, &[parse_poly(s, "z").unwrap(), parse_poly(s, "s0").unwrap(), parse_poly(s, "s1").unwrap()])
        .standard_basis(&b)
        .unwrap();
    assert!(j.same_module(&expected, &b).unwrap());
}

#[test]
fn cone_nash_ideal_is_graph_of_gradient() {
    let b = Budget::unlimited();
    let ctx = RingContext::new(&["x", "y", "z"]).unwrap();
    let h = parse_poly(ctx.a_ring(), "x^2 + y^2 - z^2").unwrap();
    let j = nash_ideal(&ctx, &h, &default_sing(&h), DEFAULT_SATURATION_CAP, &b).unwrap();
    let r = |v: i64| Rat::from_int(v);
    for (pt, scale) in [([3, 4, 5], 1), ([5, 12, 13], -2), ([8, 15, 17], 3)] {
        let grad = [2 * pt[0], 2 * pt[1], -2 * pt[2]];
        let on = [r(grad[0] * scale), r(grad[1] * scale), r(grad[2] * scale), r(pt[0]), r(pt[1]), r(pt[2])];
        let off = [r(grad[0] + 1), r(grad[1]), r(grad[2]), r(pt[0]), r(pt[1]), r(pt[2])];
        assert!(j.polys().iter().all(|g| g.eval(&on).is_zero()));
        assert!(j.polys().iter().any(|g| !g.eval(&off).is_zero()));
    }
}

#[test]
fn exterior_quotients() {
    let ctx = RingContext::new(&["x", "y", "z"]).unwrap();
    let (m0, r0) = exterior_quotient(&ctx, 0).unwrap();
    assert!(m0.relations.is_empty());
    assert_eq!(r0.length(), 0);
    let (m2, r2) = exterior_quotient(&ctx, 2).unwrap();
    assert_eq!(m2.relations.len(), 3);
    let twists: Vec<Vec<i32>> = r2.modules.iter().map(|m| m.twists().to_vec()).collect();
    assert_eq!(twists, [alloc::vec![0, 0, 0], alloc::vec![1, 1, 1], alloc::vec![2]]);
    // theta ^ theta = 0
    for c in &r2.maps[1] {
        assert!(r2.apply(0, c).is_zero());
    }
    assert!(exterior_quotient(&ctx, 3).is_err());
}

#[test]
fn pullback_examples() {
    let (ctx, p) = umbrella();
    let a = ctx.a_ring();
    let w = pullback_form(&p);
    let e: Vec<Poly> = ["-2*(x - z)", "2*y", "2*(x - z)"].iter().map(|t| parse_poly(a, t).unwrap()).collect();
    assert_eq!(w, e);
    let ft = parse_poly(a, "y^2 - (x - z)^2 - 3*(x + 2*z)").unwrap();
    let w = pullback_form(&p.with_omega(Omega::Function(ft)).unwrap());
    assert_eq!(w[0], parse_poly(a, "-2*(x - z) - 3").unwrap());
    assert_eq!(w[2], parse_poly(a, "2*(x - z) - 6").unwrap());
    let w = pullback_form(&p.with_omega(Omega::Function(Poly::zero(a))).unwrap());
    assert!(w.iter().all(|c| c.is_zero()));
}

#[test]
fn form_evaluations_on_chart_frame() {
    // contracting the form with the frame v1 = (-s1, 1, 0), v2 = (-s2, 0, 1)
    // of the chart s0 = 1
    let (ctx, p) = umbrella();
    let a = ctx.a_ring();
    let t = Ring::global(&["s1", "z"]).unwrap();
    for tv in [3i64, -5] {
        let ft = parse_poly(a, &alloc::format!("y^2 - (x - z)^2 - ({})*(x + 2*z)", tv)).unwrap();
        let q = p.with_omega(Omega::Function(ft)).unwrap();
        let pres = NashPresentation::from_parts(
            ctx.clone(),
            SubmoduleBasis::ideal(ctx.s_ring(), &[]),
            pullback_form(&q).iter().map(|c| ctx.lift(c).unwrap()).collect(),
            &Budget::unlimited(),
        )
        .unwrap();
        let col = &wedge_differential(&ctx, &pres.w, 0, &pres.modules[1].free)[0];
        let w: Vec<Poly> = pres.modules[1].free.entries(col);
        let s = |i: usize| ctx.s_var(i);
        let v1 = &w[1] - &(&w[0] * &s(1));
        let v2 = &w[2] - &(&w[0] * &s(2));
        let e1 = parse_poly(&t, &alloc::format!("-s1*(z^2 - 1/2*z^2*s1^2 + 2*z - ({}))", tv)).unwrap();
        let e2 = parse_poly(&t, &alloc::format!("(1 + 1/2*z*s1^2)*(1/2*z^2*s1^2 - 2*z) + ({})*(1/2*z*s1^2 - 2)", tv)).unwrap();
        assert_eq!(chart(&v1), e1);
        assert_eq!(chart(&v2), e2);
    }
}

#[test]
fn presentations_are_graded_and_wedge_squares_to_zero() {
    let b = Budget::unlimited();
    let (_, p) = umbrella();
    let pres = NashPresentation::build(&p, &NashOptions::default(), &b).unwrap();
    assert_eq!(pres.modules.len(), 3);
    for m in &pres.modules {
        assert!(m.is_graded());
    }
    let d0 = pres.wedge_differential(0).unwrap();
    assert_eq!(pres.modules[1].free.entries(&d0[0]), pres.w);
    let d1 = pres.wedge_differential(1).unwrap();
    let rel2 = pres.modules[2].relation_module().standard_basis(&b).unwrap();
    let target = &pres.modules[1].free;
    for c in &d0 {
        let img = crate::bases::apply_matrix(&pres.modules[2].free, &d1, &target.adopt(c.clone()));
        assert!(normal_form(&img, &rel2, &b).unwrap().is_zero());
    }
    assert!(pres.wedge_differential(2).is_err());
}

#[test]
fn isolated_zero_examples() {
    let b = Budget::unlimited();
    let (ctx, p) = umbrella();
    let a = ctx.a_ring();
    assert!(isolated_zero_check(&p, DEFAULT_SATURATION_CAP, &b).unwrap().isolated);
    let px = HypersurfaceProblem::new(&ctx, p.h().clone(), Omega::Function(parse_poly(a, "x").unwrap()), None).unwrap();
    let c = isolated_zero_check(&px, DEFAULT_SATURATION_CAP, &b).unwrap();
    assert!(!c.isolated);
    assert_eq!(c.dimension, Dimension::Infinite);
    let smooth = HypersurfaceProblem::new(
        &ctx,
        parse_poly(a, "z").unwrap(),
        Omega::Function(parse_poly(a, "x^2 + y^2 + z").unwrap()),
        None,
    )
    .unwrap();
    assert!(isolated_zero_check(&smooth, DEFAULT_SATURATION_CAP, &b).unwrap().isolated);
}

#[test]
fn problem_validation() {
    let ctx = RingContext::new(&["x", "y"]).unwrap();
    let a = ctx.a_ring();
    let p = |s: &str| parse_poly(a, s).unwrap();
    assert!(HypersurfaceProblem::new(&ctx, p("1 + x"), Omega::Function(p("x")), None).is_err());
    assert!(HypersurfaceProblem::new(&ctx, p("0"), Omega::Function(p("x")), None).is_err());
    assert!(HypersurfaceProblem::new(&ctx, p("y"), Omega::Function(p("x + 1")), None).is_err());
    assert!(HypersurfaceProblem::new(&ctx, p("y"), Omega::Form(alloc::vec![p("1")]), None).is_err());
    let hp = HypersurfaceProblem::new(&ctx, p("y"), Omega::Function(p("x^2 + y")), None).unwrap();
    assert_eq!(hp.sing_ideal().len(), 3);
}
