use alloc::vec::Vec;

use super::engine::Budget;
use super::module::{FreeModule, SubmoduleBasis};
use super::ops::syzygies;
use crate::arith::Vector;
use crate::error::Result;

/// A finitely presented module `F / <relations>`.
#[derive(Clone, Debug)]
pub struct FpModule {
    pub free: FreeModule,
    pub relations: Vec<Vector>,
}

impl FpModule {
    pub fn new(free: FreeModule, relations: Vec<Vector>) -> FpModule {
        let relations = relations.into_iter().filter(|v| !v.is_zero()).map(|v| free.adopt(v)).collect();
        FpModule { free, relations }
    }

    pub fn free_module(free: FreeModule) -> FpModule {
        FpModule { free, relations: Vec::new() }
    }

    pub fn relation_module(&self) -> SubmoduleBasis {
        SubmoduleBasis::new(&self.free, self.relations.clone())
    }

    /// True when every relation is homogeneous of degree zero, i.e. its
    /// degree equals the twist bookkeeping of its components.
    pub fn is_graded(&self) -> bool {
        self.relations.iter().all(|r| self.free.degree(r).is_some())
    }
}

/// Graded free resolution `K_0 <- K_1 <- ... <- K_L` of a finitely presented
/// module. `maps[p]` lists the images of the generators of `modules[p + 1]`
/// in `modules[p]`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub modules: Vec<FreeModule>,
    pub maps: Vec<Vec<Vector>>,
}

impl Resolution {
    /// Length of the computed part (the index of the last module).
    pub fn length(&self) -> usize {
        self.modules.len() - 1
    }

    /// All twists of all modules.
    pub fn twists(&self) -> impl Iterator<Item = i32> + '_ {
        self.modules.iter().flat_map(|m| m.twists().iter().copied())
    }

    pub fn max_twist(&self) -> Option<i32> {
        self.twists().max()
    }

    /// Image of a vector of `modules[p + 1]` in `modules[p]`.
    pub fn apply(&self, p: usize, v: &Vector) -> Vector {
        apply_matrix(&self.modules[p], &self.maps[p], v)
    }
}

/// `sum_j v_j * columns[j]` for `v` in a free module whose generators map to
/// `columns` (vectors of `target`).
pub fn apply_matrix(target: &FreeModule, columns: &[Vector], v: &Vector) -> Vector {
    let ord = target.order();
    let mut acc = Vector::zero();
    for t in v.terms() {
        let c = &columns[t.comp as usize];
        acc = acc.add_scaled(&t.coeff, &t.mono, c, ord);
    }
    acc
}

/// Drops generators lying in the submodule generated by the others. Over
/// the graded local rings used here the result is a minimal generating set.
pub fn minimize_generators(free: &FreeModule, gens: &[Vector], budget: &Budget) -> Result<Vec<Vector>> {
    let mut gens: Vec<Vector> = gens.iter().filter(|g| !g.is_zero()).map(|g| free.adopt(g.clone())).collect();
    gens.sort_by_key(|g| (free.degree(g).unwrap_or(i32::MAX), g.len()));
    // first pass: keep what is new relative to the earlier generators
    let mut kept: Vec<Vector> = Vec::new();
    let mut sb: Option<SubmoduleBasis> = None;
    for g in gens {
        let redundant = match &sb {
            Some(b) => b.contains(&g, budget)?,
            None => false,
        };
        if !redundant {
            kept.push(g);
            sb = Some(SubmoduleBasis::new(free, kept.clone()).standard_basis(budget)?);
        }
    }
    // second pass: later generators may make earlier ones redundant
    let mut i = kept.len();
    while i > 0 {
        i -= 1;
        if kept.len() == 1 {
            break;
        }
        let others: Vec<Vector> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
        let sb = SubmoduleBasis::new(free, others).standard_basis(budget)?;
        if sb.contains(&kept[i], budget)? {
            kept.remove(i);
        }
    }
    Ok(kept)
}

/// Resolves `m` up to `K_length`, or until the syzygies vanish.
pub fn graded_resolution(m: &FpModule, length: usize, budget: &Budget) -> Result<Resolution> {
    let mut modules = alloc::vec![m.free.clone()];
    let mut maps: Vec<Vec<Vector>> = Vec::new();
    let mut cols = minimize_generators(&m.free, &m.relations, budget)?;
    for _ in 0..length {
        if cols.is_empty() {
            break;
        }
        let cur = modules.last().unwrap().clone();
        let degs = cols.iter().map(|c| cur.term_degree(c.lead())).collect();
        let next = FreeModule::new(cur.ring(), degs);
        let sub = SubmoduleBasis::new(&cur, cols.clone());
        maps.push(cols);
        let syz = syzygies(&sub, budget)?;
        debug_assert_eq!(syz.free().twists(), next.twists());
        cols = minimize_generators(&next, syz.gens(), budget)?;
        modules.push(next);
    }
    Ok(Resolution { modules, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, Block, BlockKind, MonomialOrder, Poly, Ring};
    use alloc::string::ToString;
    use alloc::sync::Arc;

    fn mixed() -> Arc<Ring> {
        let names = ["s0", "s1", "s2", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let order = MonomialOrder::new(alloc::vec![
            Block { vars: alloc::vec![0, 1, 2], kind: BlockKind::DegRevLex },
            Block { vars: alloc::vec![3, 4, 5], kind: BlockKind::NegDegRevLex },
        ]);
        Ring::new(names, order).unwrap()
    }

    fn check_exact(res: &Resolution, b: &Budget) {
        for p in 1..res.maps.len() {
            for c in &res.maps[p] {
                assert!(res.apply(p - 1, c).is_zero(), "composite map is not zero");
            }
            // the kernel of maps[p - 1] is generated by maps[p]
            let sub = SubmoduleBasis::new(&res.modules[p - 1], res.maps[p - 1].clone());
            let syz = syzygies(&sub, b).unwrap();
            let img = SubmoduleBasis::new(&res.modules[p], res.maps[p].clone()).standard_basis(b).unwrap();
            assert!(img.contains_module(&syz, b).unwrap());
        }
    }

    #[test]
    fn cyclic_module() {
        let b = Budget::unlimited();
        let r = mixed();
        let f = FreeModule::untwisted(&r, 1);
        let m = FpModule::new(f.clone(), alloc::vec![parse_poly(&r, "s0").unwrap().into_vector()]);
        let res = graded_resolution(&m, 3, &b).unwrap();
        assert_eq!(res.modules.len(), 2);
        assert_eq!(res.modules[1].twists(), &[1]);
    }

    #[test]
    fn free_module_has_trivial_resolution() {
        let b = Budget::unlimited();
        let r = mixed();
        let m = FpModule::free_module(FreeModule::new(&r, alloc::vec![0, 2]));
        let res = graded_resolution(&m, 3, &b).unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.max_twist(), Some(2));
    }

    #[test]
    fn koszul_quotient_resolution() {
        // Q^1 = coker(theta: S(-1) -> S^3), theta = (s0, s1, s2)
        let b = Budget::unlimited();
        let r = mixed();
        let f = FreeModule::untwisted(&r, 3);
        let s: alloc::vec::Vec<Poly> = (0..3).map(|i| Poly::var(&r, i)).collect();
        let m = FpModule::new(f.clone(), alloc::vec![f.vector(&s)]);
        let res = graded_resolution(&m, 3, &b).unwrap();
        assert_eq!(res.modules.len(), 2);
        assert_eq!(res.modules[1].twists(), &[1]);
        check_exact(&res, &b);
    }

    #[test]
    fn maximal_ideal_resolution() {
        let b = Budget::unlimited();
        let r = mixed();
        let f = FreeModule::untwisted(&r, 1);
        let rels = (0..3).map(|i| Poly::var(&r, i).into_vector()).collect();
        let res = graded_resolution(&FpModule::new(f, rels), 4, &b).unwrap();
        let ranks: alloc::vec::Vec<usize> = res.modules.iter().map(|m| m.rank()).collect();
        assert_eq!(ranks, [1, 3, 3, 1]);
        assert_eq!(res.max_twist(), Some(3));
        check_exact(&res, &b);
    }

    #[test]
    fn minimization_removes_multiples() {
        let b = Budget::unlimited();
        let r = Ring::local(&["x", "y"]).unwrap();
        let f = FreeModule::untwisted(&r, 1);
        let g: alloc::vec::Vec<Vector> =
            ["x", "x*y", "x + x^2", "y"].iter().map(|t| parse_poly(&r, t).unwrap().into_vector()).collect();
        assert_eq!(minimize_generators(&f, &g, &b).unwrap().len(), 2);
    }
}
