//! Sparse elements of free modules over a polynomial ring.
//!
//! A [`Vector`] is a list of terms `c * m * e_i` kept sorted in descending
//! order for some [`TermOrder`]; polynomials are the rank-one case. The
//! vector does not remember which order sorted it, so every operation that
//! depends on the order takes it explicitly and callers re-sort with
//! [`Vector::resort`] when they switch orders.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::monomial::Monomial;
use super::order::TermOrder;
use super::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub comp: u32,
    pub coeff: Rat,
}

impl Term {
    pub fn new(coeff: Rat, mono: Monomial, comp: usize) -> Term {
        Term { mono, comp: comp as u32, coeff }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Vector {
        Vector { terms: Vec::new() }
    }

    /// Builds a canonical vector: like terms merged, zeros dropped, sorted.
    pub fn from_terms(mut terms: Vec<Term>, ord: &TermOrder) -> Vector {
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|a, b| ord.cmp(&b.mono, b.comp as usize, &a.mono, a.comp as usize));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.comp == t.comp => {
                    last.coeff = &last.coeff + &t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Vector { terms: out }
    }

    /// Trusts that `terms` is already sorted, merged and zero-free.
    pub fn from_sorted_unchecked(terms: Vec<Term>) -> Vector {
        Vector { terms }
    }

    pub fn unit(comp: usize) -> Vector {
        Vector { terms: alloc::vec![Term::new(Rat::ONE, Monomial::ONE, comp)] }
    }

    pub fn monomial(coeff: Rat, mono: Monomial, comp: usize) -> Vector {
        if coeff.is_zero() {
            return Vector::zero();
        }
        Vector { terms: alloc::vec![Term::new(coeff, mono, comp)] }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn resort(&mut self, ord: &TermOrder) {
        let terms = core::mem::take(&mut self.terms);
        *self = Vector::from_terms(terms, ord);
    }

    /// Largest total degree of a term (the sugar of a homogenized element).
    pub fn max_deg(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.deg()).max().unwrap_or(0)
    }

    /// Total degree spread between the whole vector and its leading term.
    pub fn ecart(&self) -> u32 {
        if self.terms.is_empty() {
            return 0;
        }
        self.max_deg() - self.terms[0].mono.deg()
    }

    pub fn scale(&self, c: &Rat) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector {
            terms: self.terms.iter().map(|t| Term { mono: t.mono, comp: t.comp, coeff: &t.coeff * c }).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(&-Rat::ONE)
    }

    /// Multiplies by a monomial; term orders are compatible with
    /// multiplication so the result needs no re-sort.
    pub fn mul_mono(&self, m: &Monomial) -> Vector {
        Vector {
            terms: self.terms.iter().map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coeff: t.coeff.clone() }).collect(),
        }
    }

    /// Makes the leading coefficient one.
    pub fn make_monic(&mut self) {
        if let Some(t) = self.terms.first() {
            if !t.coeff.is_one() {
                let inv = t.coeff.inv();
                for t in self.terms.iter_mut() {
                    t.coeff = &t.coeff * &inv;
                }
            }
        }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, c: &Rat, m: &Monomial, other: &Vector, ord: &TermOrder) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        let mut bj: Option<Term> = b.first().map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coeff: &t.coeff * c });
        while i < a.len() || bj.is_some() {
            match (&a.get(i), &bj) {
                (Some(ta), Some(tb)) => match ord.cmp(&ta.mono, ta.comp as usize, &tb.mono, tb.comp as usize) {
                    Ordering::Greater => {
                        out.push((*ta).clone());
                        i += 1;
                    }
                    Ordering::Less => {
                        out.push(bj.take().unwrap());
                        j += 1;
                        bj = b.get(j).map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coeff: &t.coeff * c });
                    }
                    Ordering::Equal => {
                        let s = &ta.coeff + &tb.coeff;
                        if !s.is_zero() {
                            out.push(Term { mono: ta.mono, comp: ta.comp, coeff: s });
                        }
                        i += 1;
                        j += 1;
                        bj = b.get(j).map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coeff: &t.coeff * c });
                    }
                },
                (Some(ta), None) => {
                    out.push((*ta).clone());
                    i += 1;
                }
                (None, Some(_)) => {
                    out.push(bj.take().unwrap());
                    j += 1;
                    bj = b.get(j).map(|t| Term { mono: t.mono.mul(m), comp: t.comp, coeff: &t.coeff * c });
                }
                (None, None) => unreachable!(),
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector, ord: &TermOrder) -> Vector {
        self.add_scaled(&Rat::ONE, &Monomial::ONE, other, ord)
    }

    pub fn sub(&self, other: &Vector, ord: &TermOrder) -> Vector {
        self.add_scaled(&-Rat::ONE, &Monomial::ONE, other, ord)
    }

    /// Multiplies every entry by the polynomial `p` (given as a rank-one
    /// vector with component 0).
    pub fn mul_poly(&self, p: &Vector, ord: &TermOrder) -> Vector {
        let mut terms = Vec::with_capacity(self.terms.len() * p.terms.len());
        for a in &self.terms {
            for b in &p.terms {
                terms.push(Term { mono: a.mono.mul(&b.mono), comp: a.comp, coeff: &a.coeff * &b.coeff });
            }
        }
        Vector::from_terms(terms, ord)
    }

    /// Entry `comp` as a rank-one vector (component 0).
    pub fn component(&self, comp: usize, ord: &TermOrder) -> Vector {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.comp as usize == comp)
            .map(|t| Term { mono: t.mono, comp: 0, coeff: t.coeff.clone() })
            .collect();
        Vector::from_terms(terms, ord)
    }

    /// Renumbers components through `f`; `None` drops the term.
    pub fn map_components(&self, f: impl Fn(usize) -> Option<usize>, ord: &TermOrder) -> Vector {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| f(t.comp as usize).map(|c| Term { mono: t.mono, comp: c as u32, coeff: t.coeff.clone() }))
            .collect();
        Vector::from_terms(terms, ord)
    }

    pub fn max_comp(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp as usize).max()
    }

    /// Evaluates to a rank-one vector placing `self` (a polynomial) in `comp`.
    pub fn into_component(self, comp: usize) -> Vector {
        Vector {
            terms: self.terms.into_iter().map(|t| Term { mono: t.mono, comp: comp as u32, coeff: t.coeff }).collect(),
        }
    }
}
