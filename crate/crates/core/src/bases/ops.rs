//! Syzygies and the ideal/module operations built from them.

use alloc::vec::Vec;

use super::engine::{self, Budget};
use super::module::{FreeModule, SubmoduleBasis};
use crate::arith::{Block, BlockKind, MonomialOrder, Poly, Ring, Term, TermOrder, Vector};
use crate::error::{Error, Result};

/// Default bound on colon iterations during a saturation.
pub const DEFAULT_SATURATION_CAP: usize = 64;

/// Syzygies of `vecs` (elements of `target`), returned as a standard basis
/// of a submodule of the free module with the given twists.
fn syz_with_degrees(target: &FreeModule, vecs: &[Vector], degs: Vec<i32>, budget: &Budget) -> Result<SubmoduleBasis> {
    let r = target.rank();
    let k = vecs.len();
    let ring = target.ring();
    let mut shifts = target.twists().to_vec();
    shifts.extend(degs.iter().copied());
    let mut groups = alloc::vec![1u32; r];
    groups.extend(core::iter::repeat_n(0u32, k));
    let ord = TermOrder::new(ring.order().clone()).with_shifts(shifts).with_groups(groups);
    let lifted: Vec<Vector> = vecs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut terms: Vec<Term> = v.terms().to_vec();
            terms.push(Term::new(crate::arith::Rat::ONE, crate::arith::Monomial::ONE, r + i));
            Vector::from_terms(terms, &ord)
        })
        .collect();
    let sb = engine::standard_basis(&lifted, &ord, budget)?;
    let out_free = FreeModule::new(ring, degs);
    let syz: Vec<Vector> = sb
        .into_iter()
        .filter(|v| v.lead().comp as usize >= r)
        .map(|v| v.map_components(|c| c.checked_sub(r), out_free.order()))
        .collect();
    Ok(SubmoduleBasis::from_standard(&out_free, syz))
}

fn lead_degrees(free: &FreeModule, vecs: &[Vector]) -> Vec<i32> {
    vecs.iter().map(|v| if v.is_zero() { 0 } else { free.term_degree(v.lead()) }).collect()
}

/// First syzygy module of the generators of `m`: all coefficient vectors
/// `(a_i)` with `sum a_i g_i = 0`. The result lives in the free module whose
/// twists are the generator degrees, and is a standard basis there.
pub fn syzygies(m: &SubmoduleBasis, budget: &Budget) -> Result<SubmoduleBasis> {
    let degs = lead_degrees(m.free(), m.gens());
    syz_with_degrees(m.free(), m.gens(), degs, budget)
}

/// Kernel of the map `src -> target / relations` sending `e_j` to
/// `columns[j]`. Not a standard basis.
pub fn kernel(
    src: &FreeModule,
    target: &FreeModule,
    columns: &[Vector],
    relations: &[Vector],
    budget: &Budget,
) -> Result<SubmoduleBasis> {
    assert_eq!(columns.len(), src.rank());
    let mut vecs: Vec<Vector> = columns.iter().map(|c| target.adopt(c.clone())).collect();
    vecs.extend(relations.iter().map(|c| target.adopt(c.clone())));
    let mut degs = src.twists().to_vec();
    degs.extend(lead_degrees(target, relations));
    let syz = syz_with_degrees(target, &vecs, degs, budget)?;
    let m = src.rank();
    let gens = syz
        .gens()
        .iter()
        .map(|v| v.map_components(|c| (c < m).then_some(c), src.order()))
        .filter(|v| !v.is_zero())
        .collect();
    Ok(SubmoduleBasis::new(src, gens))
}

/// `M : g = { v : g v in M }`, as a standard basis.
pub fn colon(m: &SubmoduleBasis, g: &Poly, budget: &Budget) -> Result<SubmoduleBasis> {
    let free = m.free();
    let cols: Vec<Vector> =
        (0..free.rank()).map(|j| free.adopt(g.as_vector().clone().into_component(j))).collect();
    kernel(free, free, &cols, m.gens(), budget)?.standard_basis(budget)
}

/// `M : g^inf`, iterating colons until the module stops growing.
pub fn saturate(m: &SubmoduleBasis, g: &Poly, cap: usize, budget: &Budget) -> Result<SubmoduleBasis> {
    if g.is_zero() {
        return Err(Error::InvalidInput("saturation by the zero polynomial".into()));
    }
    let mut cur = m.standard_basis(budget)?;
    for _ in 0..cap {
        let next = colon(&cur, g, budget)?;
        if cur.contains_module(&next, budget)? {
            return Ok(cur);
        }
        cur = next;
    }
    Err(Error::SaturationCap(cap))
}

/// `M : I^inf` for `I = <gs>`, as the intersection of the saturations by
/// the single generators. Generators multiplying the whole free module into
/// `M` are skipped.
pub fn saturate_ideal(m: &SubmoduleBasis, gs: &[Poly], cap: usize, budget: &Budget) -> Result<SubmoduleBasis> {
    let base = m.standard_basis(budget)?;
    let free = base.free().clone();
    let mut acc: Option<SubmoduleBasis> = None;
    for g in gs {
        if g.is_zero() {
            continue;
        }
        let kills_all = (0..free.rank()).try_fold(true, |ok, j| {
            Ok::<bool, Error>(ok && base.contains(&free.adopt(g.as_vector().clone().into_component(j)), budget)?)
        })?;
        if kills_all {
            continue;
        }
        let s = saturate(&base, g, cap, budget)?;
        acc = Some(match acc {
            None => s,
            Some(a) => intersect(&a, &s, budget)?,
        });
    }
    match acc {
        Some(a) => Ok(a),
        // every generator annihilates F/M, so the saturation is everything
        None if gs.iter().any(|g| !g.is_zero()) => {
            let gens = (0..free.rank()).map(Vector::unit).collect();
            SubmoduleBasis::new(&free, gens).standard_basis(budget)
        }
        None => Err(Error::InvalidInput("saturation by the zero ideal".into())),
    }
}

/// Intersection of two submodules of the same free module, as a standard
/// basis.
pub fn intersect(a: &SubmoduleBasis, b: &SubmoduleBasis, budget: &Budget) -> Result<SubmoduleBasis> {
    let free = a.free();
    let mut vecs: Vec<Vector> = a.gens().to_vec();
    vecs.extend(b.gens().iter().map(|v| free.adopt(v.clone())));
    let degs = lead_degrees(free, &vecs);
    let syz = syz_with_degrees(free, &vecs, degs, budget)?;
    let na = a.len();
    let ord = free.order();
    let mut gens = Vec::new();
    for s in syz.gens() {
        let mut acc = Vector::zero();
        for t in s.terms() {
            let c = t.comp as usize;
            if c < na {
                let coeff = Vector::monomial(t.coeff.clone(), t.mono, 0);
                acc = acc.add(&a.gens()[c].mul_poly(&coeff, ord), ord);
            }
        }
        if !acc.is_zero() {
            gens.push(acc);
        }
    }
    SubmoduleBasis::new(free, gens).standard_basis(budget)
}

/// `I` intersected with the subring of polynomials free of the variables
/// `kill`. The computation uses an order whose first block is global in the
/// killed variables.
pub fn eliminate(ideal: &SubmoduleBasis, kill: &[usize], budget: &Budget) -> Result<SubmoduleBasis> {
    let ring = ideal.ring();
    if kill.iter().any(|&v| v >= ring.nvars()) {
        return Err(Error::InvalidInput("eliminated variable outside the ring".into()));
    }
    let mut blocks = alloc::vec![Block { vars: kill.to_vec(), kind: BlockKind::DegRevLex }];
    for b in ring.order().blocks() {
        blocks.push(Block { vars: b.vars.iter().copied().filter(|v| !kill.contains(v)).collect(), kind: b.kind });
    }
    let elim_ring = ring.reordered(MonomialOrder::new(blocks))?;
    let free = FreeModule::new(&elim_ring, ideal.free().twists().to_vec());
    let sb = super::module::standard_basis(&free, ideal.gens(), budget)?;
    let gens: Vec<Vector> =
        sb.gens().iter().filter(|v| v.terms().iter().all(|t| kill.iter().all(|&k| t.mono.exp(k) == 0))).cloned().collect();
    Ok(SubmoduleBasis::new(ideal.free(), gens))
}

/// [`eliminate`] with variables given by name.
pub fn eliminate_named(ideal: &SubmoduleBasis, kill: &[&str], budget: &Budget) -> Result<SubmoduleBasis> {
    let ring: &Ring = ideal.ring();
    let idx = kill
        .iter()
        .map(|n| ring.var_index(n).ok_or_else(|| Error::UnknownVariable((*n).into())))
        .collect::<Result<Vec<_>>>()?;
    eliminate(ideal, &idx, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;
    use alloc::sync::Arc;

    fn ideal(r: &Arc<Ring>, s: &[&str]) -> SubmoduleBasis {
        SubmoduleBasis::ideal(r, &s.iter().map(|t| parse_poly(r, t).unwrap()).collect::<Vec<_>>())
    }

    fn p(r: &Arc<Ring>, s: &str) -> Poly {
        parse_poly(r, s).unwrap()
    }

    fn same(a: &SubmoduleBasis, b: &SubmoduleBasis) -> bool {
        let bud = Budget::unlimited();
        a.standard_basis(&bud).unwrap().same_module(&b.standard_basis(&bud).unwrap(), &bud).unwrap()
    }

    /// Every syzygy must kill the generator row.
    fn check_syz(m: &SubmoduleBasis, syz: &SubmoduleBasis) {
        let ord = m.free().order();
        for s in syz.gens() {
            let mut acc = Vector::zero();
            for t in s.terms() {
                let c = Vector::monomial(t.coeff.clone(), t.mono, 0);
                acc = acc.add(&m.gens()[t.comp as usize].mul_poly(&c, ord), ord);
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn koszul_syzygy() {
        let b = Budget::unlimited();
        for r in [Ring::local(&["x", "y"]).unwrap(), Ring::global(&["x", "y"]).unwrap()] {
            let m = ideal(&r, &["x", "y"]);
            let syz = syzygies(&m, &b).unwrap();
            check_syz(&m, &syz);
            let f = syz.free().clone();
            let expected = SubmoduleBasis::new(&f, alloc::vec![f.vector(&[p(&r, "y"), p(&r, "-x")])]);
            assert!(same(&syz, &expected));
        }
    }

    #[test]
    fn syzygies_of_three_monomials() {
        let b = Budget::unlimited();
        let r = Ring::global(&["x", "y"]).unwrap();
        let m = ideal(&r, &["x^2", "x*y", "y^2"]);
        let syz = syzygies(&m, &b).unwrap();
        check_syz(&m, &syz);
        let f = syz.free().clone();
        let z = Poly::zero(&r);
        let expected = SubmoduleBasis::new(
            &f,
            alloc::vec![f.vector(&[p(&r, "y"), p(&r, "-x"), z.clone()]), f.vector(&[z, p(&r, "y"), p(&r, "-x")])],
        );
        assert!(same(&syz, &expected));
        assert_eq!(syz.free().twists(), &[2, 2, 2]);
    }

    #[test]
    fn principal_ideal_has_no_syzygies() {
        let b = Budget::unlimited();
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let syz = syzygies(&ideal(&r, &["y^2 - x*z^2"]), &b).unwrap();
        assert!(syz.is_empty());
    }

    #[test]
    fn elimination_examples() {
        let b = Budget::unlimited();
        let r = Ring::global(&["x", "y", "t"]).unwrap();
        let e = eliminate_named(&ideal(&r, &["x - t^2", "y - t^3"]), &["t"], &b).unwrap();
        assert!(same(&e, &ideal(&r, &["x^3 - y^2"])));
        let e = eliminate_named(&ideal(&r, &["x"]), &["t"], &b).unwrap();
        assert!(same(&e, &ideal(&r, &["x"])));
        let e = eliminate_named(&ideal(&r, &["t"]), &["t"], &b).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn saturation_examples() {
        let b = Budget::unlimited();
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let s = saturate(&ideal(&r, &["x*y"]), &p(&r, "y"), DEFAULT_SATURATION_CAP, &b).unwrap();
        assert!(same(&s, &ideal(&r, &["x"])));
        let s = saturate(&ideal(&r, &["x"]), &p(&r, "z"), DEFAULT_SATURATION_CAP, &b).unwrap();
        assert!(same(&s, &ideal(&r, &["x"])));
        let s2 = saturate(&s, &p(&r, "z"), DEFAULT_SATURATION_CAP, &b).unwrap();
        assert!(same(&s, &s2));
        let s = saturate(&ideal(&r, &["x^3*y", "x*y^2"]), &p(&r, "x"), DEFAULT_SATURATION_CAP, &b).unwrap();
        assert!(same(&s, &ideal(&r, &["y"])));
    }

    #[test]
    fn saturation_by_ideal_keeps_components_off_its_zero_set() {
        let b = Budget::unlimited();
        let r = Ring::global(&["x", "y"]).unwrap();
        // <x*y> : <x, y>^inf is <x*y>; saturating by x and then by y would give <1>
        let s = saturate_ideal(&ideal(&r, &["x*y"]), &[p(&r, "x"), p(&r, "y")], DEFAULT_SATURATION_CAP, &b).unwrap();
        assert!(same(&s, &ideal(&r, &["x*y"])));
        let s = saturate_ideal(&ideal(&r, &["x^2*y", "x*y^2"]), &[p(&r, "x"), p(&r, "y")], DEFAULT_SATURATION_CAP, &b)
            .unwrap();
        assert!(same(&s, &ideal(&r, &["x*y"])));
    }

    #[test]
    fn colon_of_modules() {
        let b = Budget::unlimited();
        let r = Ring::global(&["x", "y"]).unwrap();
        let f = FreeModule::untwisted(&r, 2);
        let z = Poly::zero(&r);
        // M = <(x, 0), (0, x*y)>, M : y = <(x, 0), (0, x)>
        let m = SubmoduleBasis::new(&f, alloc::vec![f.vector(&[p(&r, "x"), z.clone()]), f.vector(&[z.clone(), p(&r, "x*y")])]);
        let c = colon(&m, &p(&r, "y"), &b).unwrap();
        let e = SubmoduleBasis::new(&f, alloc::vec![f.vector(&[p(&r, "x"), z.clone()]), f.vector(&[z, p(&r, "x")])]);
        assert!(same(&c, &e));
    }

    #[test]
    fn intersection_of_ideals() {
        let b = Budget::unlimited();
        let r = Ring::local(&["x", "y"]).unwrap();
        let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), &b).unwrap();
        assert!(same(&i, &ideal(&r, &["x*y"])));
    }
}
