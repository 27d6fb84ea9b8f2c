use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::complex::ModuleComplex;
use crate::arith::{Rat, TermOrder, Vector};
use crate::bases::{FpModule, FreeModule};

/// A generator solved for by a relation whose entry there is a unit of the
/// local ring.
struct Pivot {
    gen: usize,
    rel: Vector,
    /// The entry, as a rank-one vector.
    unit: Vector,
}

/// How a pivot entry is used: constants are divided out, other units are
/// multiplied through.
fn unit_entry(v: &Vector, g: usize, ord: &TermOrder) -> Option<Vector> {
    let e = v.component(g, ord);
    e.terms().iter().any(|t| t.mono.is_one()).then_some(e)
}

fn constant(e: &Vector) -> Option<&Rat> {
    match e.terms() {
        [t] if t.mono.is_one() => Some(&t.coeff),
        _ => None,
    }
}

fn comps(v: &Vector) -> BTreeSet<usize> {
    v.terms().iter().map(|t| t.comp as usize).collect()
}

/// `u * v - v_g * rel` for a unit `u`, or `v - (v_g / c) * rel` for a
/// constant; either way the entry `g` vanishes. Images of a differential
/// must be scaled uniformly, relations need not.
fn eliminate(v: &Vector, p: &Pivot, ord: &TermOrder, uniform: bool) -> Vector {
    let e = v.component(p.gen, ord);
    if e.is_zero() {
        return match constant(&p.unit) {
            None if uniform => v.mul_poly(&p.unit, ord),
            _ => v.clone(),
        };
    }
    match constant(&p.unit) {
        Some(c) => v.add(&p.rel.mul_poly(&e.scale(&-c.inv()), ord), ord),
        None => v.mul_poly(&p.unit, ord).sub(&p.rel.mul_poly(&e, ord), ord),
    }
}

/// Eliminates generators of `F / R` that some relation expresses through
/// the others, preferring constant pivots and sparse columns. Returns the
/// pivots in elimination order and the remaining relations, which no longer
/// involve eliminated generators.
fn eliminate_term(rank: usize, rels: &[Vector], ord: &TermOrder, units: bool) -> (Vec<Pivot>, Vec<Vector>) {
    let mut rels: Vec<Option<Vector>> = rels.iter().cloned().map(Some).collect();
    let mut occ: Vec<BTreeSet<usize>> = alloc::vec![BTreeSet::new(); rank];
    for (i, r) in rels.iter().enumerate() {
        for c in comps(r.as_ref().unwrap()) {
            occ[c].insert(i);
        }
    }
    let mut pivots = Vec::new();
    for pass_units in [false, true] {
        if pass_units && !units {
            break;
        }
        loop {
            let mut progress = false;
            let mut order: Vec<usize> = (0..rels.len()).filter(|&i| rels[i].is_some()).collect();
            order.sort_by_key(|&i| rels[i].as_ref().unwrap().len());
            for r in order {
                let Some(v) = rels[r].as_ref() else { continue };
                if v.is_zero() {
                    rels[r] = None;
                    continue;
                }
                let best = comps(v)
                    .into_iter()
                    .filter_map(|g| {
                        let e = unit_entry(v, g, ord)?;
                        let is_const = constant(&e).is_some();
                        (is_const || pass_units).then(|| ((!is_const, e.len(), occ[g].len(), g), e))
                    })
                    .min_by(|a, b| a.0.cmp(&b.0));
                let Some(((_, _, _, g), unit)) = best else { continue };
                let v = rels[r].take().unwrap();
                for cc in comps(&v) {
                    occ[cc].remove(&r);
                }
                let p = Pivot { gen: g, rel: v, unit };
                let others: Vec<usize> = occ[g].iter().copied().collect();
                for s in others {
                    let old = rels[s].take().unwrap();
                    let new = eliminate(&old, &p, ord, false);
                    for cc in comps(&old) {
                        occ[cc].remove(&s);
                    }
                    if !new.is_zero() {
                        for cc in comps(&new) {
                            occ[cc].insert(s);
                        }
                        rels[s] = Some(new);
                    }
                }
                debug_assert!(occ[g].is_empty());
                pivots.push(p);
                progress = true;
            }
            if !progress {
                break;
            }
        }
    }
    (pivots, rels.into_iter().flatten().collect())
}

impl ModuleComplex {
    /// Removes every generator that a relation with a constant coefficient
    /// solves for. The result is isomorphic term by term.
    pub fn prune(&self) -> ModuleComplex {
        self.prune_with(false)
    }

    /// Like [`ModuleComplex::prune`], but also pivots on entries that are
    /// units of the local ring. Differentials may be multiplied by units, so
    /// the result has the same homology over the local ring but is not
    /// isomorphic as a complex of polynomial modules.
    pub fn prune_local(&self) -> ModuleComplex {
        self.prune_with(true)
    }

    fn prune_with(&self, units: bool) -> ModuleComplex {
        let ring = self.ring().clone();
        let ord = FreeModule::untwisted(&ring, 1).order().clone();
        let mut pivots = Vec::with_capacity(self.len());
        let mut new_index = Vec::with_capacity(self.len());
        let mut terms = Vec::with_capacity(self.len());
        for t in &self.terms {
            let rank = t.free.rank();
            let (piv, rels) = eliminate_term(rank, &t.relations, &ord, units);
            let mut gone = alloc::vec![false; rank];
            for p in &piv {
                gone[p.gen] = true;
            }
            let mut idx = alloc::vec![None; rank];
            let mut next = 0;
            for g in 0..rank {
                if !gone[g] {
                    idx[g] = Some(next);
                    next += 1;
                }
            }
            let rels = rels.iter().map(|r| r.map_components(|c| idx[c], &ord)).collect();
            terms.push(FpModule::new(FreeModule::untwisted(&ring, next), rels));
            pivots.push(piv);
            new_index.push(idx);
        }
        let maps = self
            .maps
            .iter()
            .enumerate()
            .map(|(k, cols)| {
                cols.iter()
                    .enumerate()
                    .filter(|(g, _)| new_index[k][*g].is_some())
                    .map(|(_, c)| {
                        let idx = &new_index[k + 1];
                        let v = pivots[k + 1].iter().fold(c.clone(), |v, p| eliminate(&v, p, &ord, true));
                        v.map_components(|c| idx[c], &ord)
                    })
                    .collect()
            })
            .collect();
        ModuleComplex::new(&ring, terms, maps)
    }
}
