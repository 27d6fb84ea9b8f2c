use super::*;
use crate::nash::{HypersurfaceProblem, NashOptions, Omega};
use crate::arith::parse_poly;

fn ctx3() -> Arc<RingContext> {
    RingContext::new(&["x", "y", "z"]).unwrap()
}

#[test]
fn monomials_in_lex_order() {
    let m = monomials_of_degree(3, 2);
    assert_eq!(m.len(), 6);
    assert_eq!(m[0], Monomial::from_exps(&[2, 0, 0]));
    assert_eq!(m[1], Monomial::from_exps(&[1, 1, 0]));
    assert_eq!(m[5], Monomial::from_exps(&[0, 0, 2]));
    assert_eq!(monomials_of_degree(2, 0), [Monomial::ONE]);
}

#[test]
fn line_bundles_on_the_plane() {
    let b = Budget::unlimited();
    let ctx = ctx3();
    // h^0 of O(-w) for w <= 0 and h^2 for w >= 3; sum of (-1)^k h^k
    for (w, d, chi) in [(0, 1, 1i64), (1, 1, 0), (3, 1, 1), (4, 2, 3), (-2, 3, 6)] {
        let h = line_bundle_cohomology(&ctx, w, Some(d), &b).unwrap();
        let e: i64 = h.iter().enumerate().map(|(k, v)| if k % 2 == 0 { *v as i64 } else { -(*v as i64) }).sum();
        assert_eq!(e.abs(), chi, "w = {w}");
    }
    assert_eq!(line_bundle_cohomology(&ctx, 4, Some(2), &b).unwrap(), [0, 0, 3]);
}

#[test]
fn twist_bound_of_free_module() {
    let b = Budget::unlimited();
    let ctx = ctx3();
    let gc = GradedComplex::single(&ctx, FpModule::free_module(FreeModule::new(ctx.s_ring(), alloc::vec![5])));
    let t = twist_bound(&gc, None, None, &b).unwrap();
    assert_eq!(t.d, 3);
    assert_eq!(t.raw, Some(3));
    let t = twist_bound(&gc, None, Some(7), &b).unwrap();
    assert!(t.overridden);
    assert_eq!(t.d, 7);
    let gc0 = GradedComplex::single(&ctx, FpModule::free_module(FreeModule::new(ctx.s_ring(), alloc::vec![0])));
    assert_eq!(twist_bound(&gc0, None, None, &b).unwrap().d, 1);
}

#[test]
fn strand_sizes() {
    let b = Budget::unlimited();
    let ctx = ctx3();
    let gc = GradedComplex::single(&ctx, FpModule::free_module(FreeModule::new(ctx.s_ring(), alloc::vec![1])));
    let s = cech_strand(&gc, 0, 1, 2, StrandMode::Formal, &b).unwrap();
    // degree 4 numerators of twist 1: monomials of degree 3, on 3 pieces
    assert_eq!(s.degree, 4);
    assert_eq!(s.ngens(), 10);
    assert_eq!(s.subsets.len(), 3);
    assert_eq!(s.rank(), 30);
    assert!(cech_strand(&gc, 1, 0, 2, StrandMode::Formal, &b).is_err());
}

fn umbrella() -> HypersurfaceProblem {
    let ctx = ctx3();
    let a = ctx.a_ring();
    let h = parse_poly(a, "y^2 - x*z^2").unwrap();
    let f = parse_poly(a, "y^2 - (x - z)^2").unwrap();
    let sing = alloc::vec![parse_poly(a, "y").unwrap(), parse_poly(a, "z").unwrap()];
    HypersurfaceProblem::new(&ctx, h, Omega::Function(f), Some(sing)).unwrap()
}

#[test]
fn umbrella_total_complex_is_a_complex() {
    let b = Budget::unlimited();
    let pres = NashPresentation::build(&umbrella(), &NashOptions::default(), &b).unwrap();
    let gc = GradedComplex::from_presentation(&pres).unwrap();
    let c = cech_total_complex(&gc, 1, StrandMode::Formal, &b).unwrap();
    assert_eq!(c.len(), 5);
    assert!(c.squares_to_zero_exactly());
    assert!(c.is_well_defined(&b).unwrap());
    let p = c.prune();
    assert!(p.ranks().iter().zip(c.ranks()).all(|(a, b)| *a <= b));
    assert!(p.is_well_defined(&b).unwrap());
}

#[test]
fn pruning_free_complex_keeps_fibre_cohomology() {
    let b = Budget::unlimited();
    let ctx = ctx3();
    let gc = GradedComplex::single(&ctx, FpModule::free_module(FreeModule::new(ctx.s_ring(), alloc::vec![4])));
    let c = cech_total_complex(&gc, 2, StrandMode::Formal, &b).unwrap();
    let p = c.prune();
    assert_eq!(p.ranks(), c.ranks());
    assert_eq!(p.fiber_cohomology().unwrap(), c.fiber_cohomology().unwrap());
}

#[test]
fn rational_rank() {
    let r = |v: i64| Rat::from_int(v);
    let rows = alloc::vec![
        alloc::vec![(0, r(1)), (1, r(2))],
        alloc::vec![(0, r(2)), (1, r(4))],
        alloc::vec![(2, r(3))],
    ];
    assert_eq!(rank_over_q(&rows), 2);
    assert_eq!(rank_over_q(&[]), 0);
}
