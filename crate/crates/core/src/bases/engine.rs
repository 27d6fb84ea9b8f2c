//! Normal forms and standard bases for submodules of free modules.
//!
//! When the order is global this is Buchberger's algorithm with top
//! reduction. As soon as one block is local, reductions follow Mora: the
//! reducer with the smallest ecart is chosen and intermediate remainders of
//! larger ecart join the reducer set, which makes the loop terminate at the
//! price of a weak normal form (`u * v - sum q_i g_i` for a unit `u`).

use alloc::vec::Vec;
use core::cell::Cell;
use core::cmp::Ordering;

use crate::arith::{Monomial, Rat, TermOrder, Vector};
use crate::error::{Error, Result};

/// Shared counter of reduction steps with an optional ceiling.
#[derive(Debug, Default)]
pub struct Budget {
    limit: Option<u64>,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: Option<u64>) -> Budget {
        Budget { limit, used: Cell::new(0) }
    }

    pub fn unlimited() -> Budget {
        Budget::new(None)
    }

    #[inline]
    pub fn tick(&self) -> Result<()> {
        let u = self.used.get() + 1;
        self.used.set(u);
        match self.limit {
            Some(l) if u > l => Err(Error::WorkLimit(l)),
            _ => Ok(()),
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Elem {
    pub v: Vector,
    pub lm: Monomial,
    pub comp: u32,
    pub sev: u64,
    pub ecart: u32,
}

impl Elem {
    pub fn new(v: Vector) -> Elem {
        let lt = v.lead();
        Elem { lm: lt.mono, comp: lt.comp, sev: lt.mono.sev(), ecart: v.ecart(), v }
    }

    #[inline]
    fn reduces(&self, m: &Monomial, comp: u32, sev: u64) -> bool {
        self.comp == comp && self.sev & !sev == 0 && self.lm.divides(m)
    }
}

/// `h - (lc(h)/lc(g)) * (lm(h)/lm(g)) * g`, cancelling the leading term.
#[inline]
fn reduce_step(h: &Vector, g: &Vector, ord: &TermOrder) -> Vector {
    let th = h.lead();
    let tg = g.lead();
    let q = tg.mono.quotient_of(&th.mono);
    let c = -(&th.coeff / &tg.coeff);
    let mut out = h.add_scaled(&c, &q, g, ord);
    debug_assert!(out.is_zero() || ord.cmp(&out.lead().mono, out.lead().comp as usize, &th.mono, th.comp as usize) == Ordering::Less);
    if !out.is_empty() && out.lead().coeff.signum() == 0 {
        out = Vector::zero();
    }
    out
}

/// Weak normal form of `v` with respect to `basis`.
pub(crate) fn nf(v: Vector, basis: &[Elem], ord: &TermOrder, budget: &Budget) -> Result<Vector> {
    if ord.is_global() {
        nf_global(v, basis, ord, budget)
    } else {
        nf_mora(v, basis, ord, budget)
    }
}

fn nf_global(mut h: Vector, basis: &[Elem], ord: &TermOrder, budget: &Budget) -> Result<Vector> {
    while !h.is_zero() {
        let lt = h.lead();
        let sev = lt.mono.sev();
        let found = basis.iter().find(|g| g.reduces(&lt.mono, lt.comp, sev));
        match found {
            Some(g) => {
                budget.tick()?;
                h = reduce_step(&h, &g.v, ord);
            }
            None => break,
        }
    }
    Ok(h)
}

fn nf_mora(mut h: Vector, basis: &[Elem], ord: &TermOrder, budget: &Budget) -> Result<Vector> {
    let mut extra: Vec<Elem> = Vec::new();
    while !h.is_zero() {
        let lt = h.lead();
        let sev = lt.mono.sev();
        let mut best: Option<&Elem> = None;
        for g in basis.iter().chain(extra.iter()) {
            if g.reduces(&lt.mono, lt.comp, sev) && best.is_none_or(|b| g.ecart < b.ecart) {
                best = Some(g);
                if g.ecart == 0 {
                    break;
                }
            }
        }
        let Some(g) = best else { break };
        budget.tick()?;
        let h_ecart = h.ecart();
        let next = reduce_step(&h, &g.v, ord);
        if g.ecart > h_ecart {
            extra.push(Elem::new(h));
        }
        h = next;
    }
    Ok(h)
}

/// Full reduction for global orders: every term, not only the leading one,
/// is reduced. Used to make outputs canonical.
pub(crate) fn nf_full_global(h: Vector, basis: &[Elem], ord: &TermOrder, budget: &Budget) -> Result<Vector> {
    let mut h = nf_global(h, basis, ord, budget)?;
    let mut done: Vec<crate::arith::Term> = Vec::new();
    while !h.is_zero() {
        let mut terms = h.into_terms();
        let lt = terms.remove(0);
        done.push(lt);
        h = nf_global(Vector::from_sorted_unchecked(terms), basis, ord, budget)?;
    }
    Ok(Vector::from_sorted_unchecked(done))
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: u32,
    sugar: u32,
}

enum Work {
    Input(Vector),
    Pair(Pair),
}

/// Computes a standard basis of the submodule generated by `gens`.
///
/// The result is minimal: no leading term divides another. Input vectors
/// must be sorted for `ord`.
pub(crate) fn standard_basis(gens: &[Vector], ord: &TermOrder, budget: &Budget) -> Result<Vec<Vector>> {
    // the product criterion needs a global order and genuine polynomials
    let product_ok = ord.is_global() && gens.iter().all(|g| g.max_comp().unwrap_or(0) == 0);
    let mut basis: Vec<Elem> = Vec::new();
    let mut sugars: Vec<u32> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut inputs: Vec<(u32, Vector)> = gens.iter().filter(|g| !g.is_zero()).map(|g| (g.max_deg(), g.clone())).collect();
    // process lowest sugar first; stable for determinism
    inputs.sort_by_key(|a| a.0);
    inputs.reverse();

    loop {
        // pick the cheapest pending item
        let best_pair = pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar.cmp(&b.sugar).then_with(|| ord.cmp(&a.lcm, a.comp as usize, &b.lcm, b.comp as usize))
            })
            .map(|(k, p)| (k, p.sugar));
        let next_input = inputs.last().map(|(s, _)| *s);
        let work = match (best_pair, next_input) {
            (None, None) => break,
            (Some((k, ps)), Some(is)) if ps < is => Work::Pair(pairs.swap_remove(k)),
            (Some((k, _)), None) => Work::Pair(pairs.swap_remove(k)),
            (_, Some(_)) => Work::Input(inputs.pop().unwrap().1),
        };
        let (h, sugar) = match work {
            Work::Input(v) => {
                let s = v.max_deg();
                (v, s)
            }
            Work::Pair(p) => (spoly(&basis[p.i].v, &basis[p.j].v, ord), p.sugar),
        };
        budget.tick()?;
        let mut h = nf(h, &basis, ord, budget)?;
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        let k = basis.len();
        let e = Elem::new(h);
        let sugar = sugar.max(e.v.max_deg());
        basis.push(e);
        sugars.push(sugar);
        update_pairs(&mut pairs, &basis, &sugars, k, product_ok);
    }

    // minimize
    let mut keep = alloc::vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let (a, b) = (&basis[j], &basis[i]);
            if a.comp == b.comp && a.lm.divides(&b.lm) && (a.lm != b.lm || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let out: Vec<Vector> = basis.into_iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| e.v).collect();
    Ok(out)
}

fn spoly(f: &Vector, g: &Vector, ord: &TermOrder) -> Vector {
    let (tf, tg) = (f.lead(), g.lead());
    let l = tf.mono.lcm(&tg.mono);
    let mf = tf.mono.quotient_of(&l);
    let mg = tg.mono.quotient_of(&l);
    let a = f.mul_mono(&mf).scale(&tg.coeff);
    a.add_scaled(&-tf.coeff.clone(), &mg, g, ord)
}

fn update_pairs(pairs: &mut Vec<Pair>, basis: &[Elem], sugars: &[u32], k: usize, product_ok: bool) {
    let h = &basis[k];
    // candidate pairs with the new element
    let mut cand: Vec<(Pair, bool)> = Vec::new();
    for (i, g) in basis[..k].iter().enumerate() {
        if g.comp != h.comp {
            continue;
        }
        let lcm = g.lm.lcm(&h.lm);
        let sugar = (sugars[i] + g.lm.quotient_of(&lcm).deg()).max(sugars[k] + h.lm.quotient_of(&lcm).deg());
        let coprime = product_ok && g.lm.is_coprime(&h.lm);
        cand.push((Pair { i, j: k, lcm, comp: h.comp, sugar }, coprime));
    }
    // old pairs killed by the new leading term (criterion B)
    pairs.retain(|p| {
        if p.comp != h.comp || !h.lm.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i].lm.lcm(&h.lm);
        let lj = basis[p.j].lm.lcm(&h.lm);
        li == p.lcm || lj == p.lcm
    });
    // chain criterion among the new pairs
    let mut kept: Vec<(Pair, bool)> = Vec::new();
    let mut rest = cand;
    while let Some((p, coprime)) = rest.pop() {
        let dominated = !coprime
            && rest.iter().chain(kept.iter()).any(|(q, _)| q.lcm.divides(&p.lcm));
        if !dominated {
            kept.push((p, coprime));
        }
    }
    for (p, coprime) in kept {
        if !coprime {
            pairs.push(p);
        }
    }
}

/// Reduced leading-term test: `true` when every `v` reduces to zero.
pub(crate) fn all_reduce_to_zero(vs: &[Vector], basis: &[Elem], ord: &TermOrder, budget: &Budget) -> Result<bool> {
    for v in vs {
        if !nf(v.clone(), basis, ord, budget)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn elems(vs: &[Vector]) -> Vec<Elem> {
    vs.iter().filter(|v| !v.is_zero()).map(|v| Elem::new(v.clone())).collect()
}

/// Scales by the least common denominator and content so that the
/// coefficients are coprime integers with a positive leading coefficient.
pub fn primitive(v: &Vector) -> Vector {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};
    if v.is_zero() {
        return v.clone();
    }
    let den = crate::arith::rat::common_denominator(v.terms().iter().map(|t| &t.coeff));
    let mut g = num_bigint::BigInt::zero();
    for t in v.terms() {
        let n = (t.coeff.numer() * (&den / t.coeff.denom())).abs();
        g = g.gcd(&n);
    }
    if g.is_zero() {
        g = num_bigint::BigInt::one();
    }
    let mut c = Rat::from_big(num_rational::BigRational::new(den, g));
    if v.lead().coeff.signum() < 0 {
        c = -c;
    }
    v.scale(&c)
}
