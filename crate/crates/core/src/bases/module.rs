use alloc::sync::Arc;
use alloc::vec::Vec;

use super::engine::{self, Budget, Elem};
use crate::arith::{Poly, Ring, Term, TermOrder, Vector};
use crate::error::{Error, Result};

/// A graded free module `S(-w_0) + ... + S(-w_{m-1})`.
///
/// The grading is the degree in the ring's global variables; a generator
/// with twist `w` has degree `w`. Over a ring without global variables every
/// element has degree zero and the twists only order the components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule {
    ring: Arc<Ring>,
    twists: Vec<i32>,
    order: TermOrder,
}

impl FreeModule {
    pub fn new(ring: &Arc<Ring>, twists: Vec<i32>) -> FreeModule {
        let order = TermOrder::new(ring.order().clone()).with_shifts(twists.clone());
        FreeModule { ring: ring.clone(), twists, order }
    }

    /// Rank `m` with all twists zero.
    pub fn untwisted(ring: &Arc<Ring>, rank: usize) -> FreeModule {
        FreeModule::new(ring, alloc::vec![0; rank])
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// Term order used for every vector of this module.
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    /// Builds a vector from its entries.
    pub fn vector(&self, entries: &[Poly]) -> Vector {
        assert_eq!(entries.len(), self.rank(), "entry count differs from rank");
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for (c, m) in p.terms() {
                terms.push(Term::new(c.clone(), *m, i));
            }
        }
        Vector::from_terms(terms, &self.order)
    }

    /// Entries of `v` as polynomials.
    pub fn entries(&self, v: &Vector) -> Vec<Poly> {
        let ord = self.ring.term_order();
        (0..self.rank()).map(|i| Poly::from_vector(&self.ring, v.component(i, ord))).collect()
    }

    pub fn entry(&self, v: &Vector, i: usize) -> Poly {
        Poly::from_vector(&self.ring, v.component(i, self.ring.term_order()))
    }

    /// Degree of a term in the grading.
    pub fn term_degree(&self, t: &Term) -> i32 {
        let g = self.ring.global_vars();
        t.mono.deg_in(&g) as i32 + self.twists[t.comp as usize]
    }

    /// Degree of a homogeneous vector; `None` for zero or inhomogeneous
    /// vectors.
    pub fn degree(&self, v: &Vector) -> Option<i32> {
        let g = self.ring.global_vars();
        let mut it = v.terms().iter().map(|t| t.mono.deg_in(&g) as i32 + self.twists[t.comp as usize]);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Re-sorts a vector that was built under another order.
    pub fn adopt(&self, mut v: Vector) -> Vector {
        v.resort(&self.order);
        v
    }
}

/// A submodule of a free module given by generators. Once the flag
/// `is_standard` is set, the generators form a standard basis for the
/// module's term order.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    free: FreeModule,
    gens: Vec<Vector>,
    standard: bool,
}

impl SubmoduleBasis {
    /// Generators are re-sorted for the module order; zeros are dropped.
    pub fn new(free: &FreeModule, gens: Vec<Vector>) -> SubmoduleBasis {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).map(|g| free.adopt(g)).collect();
        SubmoduleBasis { free: free.clone(), gens, standard: false }
    }

    /// Ideal of a ring, as a submodule of the rank-one free module.
    pub fn ideal(ring: &Arc<Ring>, gens: &[Poly]) -> SubmoduleBasis {
        let free = FreeModule::untwisted(ring, 1);
        SubmoduleBasis::new(&free, gens.iter().map(|p| p.as_vector().clone()).collect())
    }

    pub(crate) fn from_standard(free: &FreeModule, gens: Vec<Vector>) -> SubmoduleBasis {
        SubmoduleBasis { free: free.clone(), gens, standard: true }
    }

    pub fn free(&self) -> &FreeModule {
        &self.free
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.free.ring()
    }

    pub fn gens(&self) -> &[Vector] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Vector> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_standard(&self) -> bool {
        self.standard
    }

    /// Generators of an ideal as polynomials.
    pub fn polys(&self) -> Vec<Poly> {
        self.gens.iter().map(|g| Poly::from_vector(self.ring(), g.clone())).collect()
    }

    /// Standard basis of the same module (itself if already standard).
    pub fn standard_basis(&self, budget: &Budget) -> Result<SubmoduleBasis> {
        if self.standard {
            return Ok(self.clone());
        }
        standard_basis(&self.free, &self.gens, budget)
    }

    /// Normal form; fails unless the basis is standard.
    pub fn normal_form(&self, v: &Vector, budget: &Budget) -> Result<Vector> {
        normal_form(v, self, budget)
    }

    /// Membership test (requires a standard basis).
    pub fn contains(&self, v: &Vector, budget: &Budget) -> Result<bool> {
        Ok(self.normal_form(v, budget)?.is_zero())
    }

    /// True when every generator of `other` lies in `self` (standard).
    pub fn contains_module(&self, other: &SubmoduleBasis, budget: &Budget) -> Result<bool> {
        if !self.standard {
            return Err(Error::NotStandard);
        }
        let elems = engine::elems(&self.gens);
        engine::all_reduce_to_zero(&other.gens, &elems, self.free.order(), budget)
    }

    /// Mutual containment of two standard bases.
    pub fn same_module(&self, other: &SubmoduleBasis, budget: &Budget) -> Result<bool> {
        Ok(self.contains_module(other, budget)? && other.contains_module(self, budget)?)
    }

    /// Leading terms of the generators.
    pub fn leading_terms(&self) -> Vec<Term> {
        self.gens.iter().map(|g| g.lead().clone()).collect()
    }

    /// For a global order: the reduced standard basis (monic, tails fully
    /// reduced, sorted by leading term). Other orders return a copy with
    /// primitive integer coefficients, sorted.
    pub fn canonical(&self, budget: &Budget) -> Result<SubmoduleBasis> {
        let sb = self.standard_basis(budget)?;
        let ord = sb.free.order().clone();
        let mut out: Vec<Vector> = if ord.is_global() {
            let mut acc = Vec::new();
            for i in 0..sb.gens.len() {
                let others: Vec<Elem> =
                    sb.gens.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| Elem::new(g.clone())).collect();
                let lead = sb.gens[i].lead().clone();
                let tail = Vector::from_sorted_unchecked(sb.gens[i].terms()[1..].to_vec());
                let tail = engine::nf_full_global(tail, &others, &ord, budget)?;
                let mut v = Vector::monomial(lead.coeff, lead.mono, lead.comp as usize).add(&tail, &ord);
                v.make_monic();
                acc.push(v);
            }
            acc
        } else {
            sb.gens.iter().map(engine::primitive).collect()
        };
        out.sort_by(|a, b| {
            let (ta, tb) = (a.lead(), b.lead());
            ord.cmp(&ta.mono, ta.comp as usize, &tb.mono, tb.comp as usize)
        });
        Ok(SubmoduleBasis { free: sb.free, gens: out, standard: true })
    }
}

/// Standard basis of the submodule of `free` generated by `gens`.
pub fn standard_basis(free: &FreeModule, gens: &[Vector], budget: &Budget) -> Result<SubmoduleBasis> {
    let gens: Vec<Vector> = gens.iter().map(|g| free.adopt(g.clone())).collect();
    let sb = engine::standard_basis(&gens, free.order(), budget)?;
    Ok(SubmoduleBasis::from_standard(free, sb))
}

/// Normal form of `v` against a standard basis. Under a local order this is
/// a weak normal form: `u * v - sum q_i b_i` for a unit `u`.
pub fn normal_form(v: &Vector, basis: &SubmoduleBasis, budget: &Budget) -> Result<Vector> {
    if !basis.standard {
        return Err(Error::NotStandard);
    }
    let elems = engine::elems(&basis.gens);
    engine::nf(basis.free.adopt(v.clone()), &elems, basis.free.order(), budget)
}

/// Reusable reducer for many normal forms against the same basis.
pub struct Reducer {
    elems: Vec<Elem>,
    order: TermOrder,
}

impl Reducer {
    pub fn new(basis: &SubmoduleBasis) -> Result<Reducer> {
        if !basis.standard {
            return Err(Error::NotStandard);
        }
        Ok(Reducer { elems: engine::elems(&basis.gens), order: basis.free.order().clone() })
    }

    pub fn reduce(&self, v: Vector, budget: &Budget) -> Result<Vector> {
        engine::nf(v, &self.elems, &self.order, budget)
    }

    pub fn is_member(&self, v: &Vector, budget: &Budget) -> Result<bool> {
        Ok(self.reduce(v.clone(), budget)?.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    fn polys(r: &Arc<Ring>, s: &[&str]) -> Vec<Poly> {
        s.iter().map(|t| parse_poly(r, t).unwrap()).collect()
    }

    #[test]
    fn normal_form_examples() {
        let b = Budget::unlimited();
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let sb = SubmoduleBasis::ideal(&r, &polys(&r, &["x"])).standard_basis(&b).unwrap();
        let x2 = parse_poly(&r, "x^2").unwrap();
        assert!(normal_form(x2.as_vector(), &sb, &b).unwrap().is_zero());

        let h = polys(&r, &["y^2 - x*z^2"]);
        let sb = SubmoduleBasis::ideal(&r, &h).standard_basis(&b).unwrap();
        assert!(normal_form(h[0].as_vector(), &sb, &b).unwrap().is_zero());

        let sb = SubmoduleBasis::ideal(&r, &polys(&r, &["x - x^2"])).standard_basis(&b).unwrap();
        let x = parse_poly(&r, "x").unwrap();
        assert!(normal_form(x.as_vector(), &sb, &b).unwrap().is_zero());
        // {x - x^2} is equivalent to {x}
        let sx = SubmoduleBasis::ideal(&r, &[x]).standard_basis(&b).unwrap();
        assert!(sb.same_module(&sx, &b).unwrap());
    }

    #[test]
    fn requires_standard_basis() {
        let r = Ring::local(&["x"]).unwrap();
        let m = SubmoduleBasis::ideal(&r, &polys(&r, &["x"]));
        assert_eq!(normal_form(&Vector::unit(0), &m, &Budget::unlimited()), Err(Error::NotStandard));
    }

    #[test]
    fn monomial_ideal_is_standard() {
        let b = Budget::unlimited();
        for r in [Ring::local(&["x", "y"]).unwrap(), Ring::global(&["x", "y"]).unwrap()] {
            let g = polys(&r, &["x^2", "x*y", "y^2"]);
            let sb = SubmoduleBasis::ideal(&r, &g).standard_basis(&b).unwrap();
            assert_eq!(sb.len(), 3);
        }
    }

    #[test]
    fn unit_makes_unit_ideal_locally() {
        let b = Budget::unlimited();
        let r = Ring::local(&["x", "y"]).unwrap();
        let sb = SubmoduleBasis::ideal(&r, &polys(&r, &["2*x*y", "x^2 + 1"])).standard_basis(&b).unwrap();
        assert!(sb.contains(&Vector::unit(0), &b).unwrap());
        let g = Ring::global(&["x", "y"]).unwrap();
        let sb = SubmoduleBasis::ideal(&g, &polys(&g, &["2*x*y", "x^2 + 1"])).standard_basis(&b).unwrap();
        assert!(!sb.contains(&Vector::unit(0), &b).unwrap());
    }

    #[test]
    fn global_reduced_basis() {
        let b = Budget::unlimited();
        let r = Ring::global(&["x", "y"]).unwrap();
        let sb = SubmoduleBasis::ideal(&r, &polys(&r, &["x^2 + y", "x*y - 1"])).canonical(&b).unwrap();
        for g in polys(&r, &["x^2 + y", "x*y - 1"]) {
            assert!(sb.contains(g.as_vector(), &b).unwrap());
        }
        // reduced bases are unique: recompute from a different generating set
        let sb2 = SubmoduleBasis::ideal(&r, &polys(&r, &["x^2 + y", "x*y - 1", "x^3 + x*y"])).canonical(&b).unwrap();
        assert_eq!(sb.gens(), sb2.gens());
    }
}
