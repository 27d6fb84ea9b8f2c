//! Vector-space dimensions of quotients over the local ring.
//!
//! With a local degree ordering the leading module determines the
//! Hilbert-Samuel function, so dimensions are read off monomial data:
//! standard monomials for `dim F / I`, and Hilbert series numerators for the
//! relative dimension `dim Z / B` of nested submodules that are individually
//! of infinite codimension.

use alloc::vec::Vec;

use super::module::SubmoduleBasis;
use crate::arith::Monomial;
use crate::error::{Error, Result};

/// A dimension over the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

impl Dimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }
}

fn require_local(b: &SubmoduleBasis) -> Result<()> {
    if !b.is_standard() {
        return Err(Error::NotStandard);
    }
    if !b.ring().global_vars().is_empty() {
        return Err(Error::InvalidInput("local dimension needs a ring with only local variables".into()));
    }
    Ok(())
}

fn leading_by_component(b: &SubmoduleBasis) -> Vec<Vec<Monomial>> {
    let mut out = alloc::vec![Vec::new(); b.free().rank()];
    for t in b.leading_terms() {
        out[t.comp as usize].push(t.mono);
    }
    out
}

/// `dim_Q F / I` for a standard basis of `I` under a local order: the number
/// of standard monomials, or infinite if some component is not cofinite.
pub fn local_vdim(b: &SubmoduleBasis) -> Result<Dimension> {
    require_local(b)?;
    let n = b.ring().nvars();
    let mut total = 0usize;
    for lms in leading_by_component(b) {
        let mut bounds = Vec::with_capacity(n);
        for v in 0..n {
            let pure = lms.iter().filter(|m| m.deg() == m.exp(v)).map(|m| m.exp(v)).min();
            match pure {
                Some(e) => bounds.push(e),
                None => return Ok(Dimension::Infinite),
            }
        }
        total += count_standard(&lms, &bounds, 0, &mut [0u32; crate::arith::MAX_VARS], n);
    }
    Ok(Dimension::Finite(total))
}

fn count_standard(lms: &[Monomial], bounds: &[u32], var: usize, exps: &mut [u32], n: usize) -> usize {
    if var == n {
        return 1;
    }
    let mut total = 0;
    for e in 0..bounds[var] {
        exps[var] = e;
        // with the remaining exponents zero the monomial is the smallest in
        // its branch; once it lies in the ideal so does everything above it
        let m = Monomial::from_exps(&exps[..n]);
        if lms.iter().any(|l| l.divides(&m)) {
            break;
        }
        total += count_standard(lms, bounds, var + 1, exps, n);
    }
    exps[var] = 0;
    total
}

/// Numerator `N(t)` of the Hilbert series `N(t) / (1 - t)^n` of `K[x] / L`
/// for the monomial ideal `L` generated by `gens`.
pub fn hilbert_numerator(gens: &[Monomial], nvars: usize) -> Vec<i128> {
    let mut g: Vec<Monomial> = gens.to_vec();
    minimize_monomials(&mut g);
    numerator_rec(g, nvars)
}

fn minimize_monomials(g: &mut Vec<Monomial>) {
    g.sort_by_key(|m| m.deg());
    g.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(g.len());
    for m in g.iter() {
        if !out.iter().any(|o| o.divides(m)) {
            out.push(*m);
        }
    }
    *g = out;
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = alloc::vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_add(a: &mut Vec<i128>, b: &[i128], shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (i, y) in b.iter().enumerate() {
        a[i + shift] += y;
    }
}

fn numerator_rec(gens: Vec<Monomial>, nvars: usize) -> Vec<i128> {
    if gens.is_empty() {
        return alloc::vec![1];
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        let mut acc = alloc::vec![1i128];
        for m in &gens {
            let mut f = alloc::vec![0i128; m.deg() as usize + 1];
            f[0] = 1;
            f[m.deg() as usize] -= 1;
            acc = poly_mul(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring in the most generators
    let var = (0..nvars).max_by_key(|&v| (gens.iter().filter(|m| m.exp(v) > 0).count(), core::cmp::Reverse(v))).unwrap();
    let e = gens.iter().map(|m| m.exp(var)).filter(|&e| e > 0).min().unwrap();
    let p = Monomial::var(var, e);
    let mut plus: Vec<Monomial> = gens.iter().filter(|m| !p.divides(m)).copied().collect();
    plus.push(p);
    minimize_monomials(&mut plus);
    let mut colon: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            let mut q = *m;
            q.set_exp(var, m.exp(var).saturating_sub(e));
            q
        })
        .collect();
    minimize_monomials(&mut colon);
    let mut out = numerator_rec(plus, nvars);
    let c = numerator_rec(colon, nvars);
    poly_add(&mut out, &c, e as usize);
    out
}

/// `p(t) / (1 - t)^k` when the division is exact.
fn divide_by_one_minus_t(mut p: Vec<i128>, k: usize) -> Option<Vec<i128>> {
    for _ in 0..k {
        while p.len() > 1 && *p.last().unwrap() == 0 {
            p.pop();
        }
        if p.iter().all(|c| *c == 0) {
            return Some(alloc::vec![0]);
        }
        // q = p / (1 - t): q_i = p_0 + ... + p_i, remainder is the full sum
        let mut q = Vec::with_capacity(p.len());
        let mut acc = 0i128;
        for c in &p {
            acc += c;
            q.push(acc);
        }
        if q.pop() != Some(0) {
            return None;
        }
        if q.is_empty() {
            q.push(0);
        }
        p = q;
    }
    Some(p)
}

/// `dim_Q Z / B` for standard bases `B` contained in `Z` of the same free
/// module over a local ring: the number of monomials in the leading module
/// of `Z` but not in that of `B`.
pub fn relative_dim(z: &SubmoduleBasis, b: &SubmoduleBasis) -> Result<Dimension> {
    require_local(z)?;
    require_local(b)?;
    if z.free() != b.free() {
        return Err(Error::ContextMismatch);
    }
    let n = z.ring().nvars();
    let lz = leading_by_component(z);
    let lb = leading_by_component(b);
    let mut diff: Vec<i128> = alloc::vec![0];
    for (cz, cb) in lz.iter().zip(lb.iter()) {
        if cz.len() == cb.len() && cz.iter().all(|m| cb.contains(m)) {
            continue;
        }
        let nb = hilbert_numerator(cb, n);
        let nz = hilbert_numerator(cz, n);
        poly_add(&mut diff, &nb, 0);
        let neg: Vec<i128> = nz.iter().map(|c| -c).collect();
        poly_add(&mut diff, &neg, 0);
    }
    match divide_by_one_minus_t(diff, n) {
        Some(q) => {
            let v: i128 = q.iter().sum();
            if v < 0 {
                return Err(Error::Inconsistent("negative relative dimension".into()));
            }
            Ok(Dimension::Finite(v as usize))
        }
        None => Ok(Dimension::Infinite),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, BlockKind, Poly, Ring};
    use crate::bases::{Budget, SubmoduleBasis};
    use alloc::sync::Arc;

    fn sb(r: &Arc<Ring>, s: &[&str]) -> SubmoduleBasis {
        let g: Vec<Poly> = s.iter().map(|t| parse_poly(r, t).unwrap()).collect();
        SubmoduleBasis::ideal(r, &g).standard_basis(&Budget::unlimited()).unwrap()
    }

    #[test]
    fn vdim_examples() {
        let r = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(local_vdim(&sb(&r, &["x^2", "y^3"])).unwrap(), Dimension::Finite(6));
        assert_eq!(local_vdim(&sb(&r, &["2*x*y", "x^2 + 1"])).unwrap(), Dimension::Finite(0));
        assert_eq!(local_vdim(&sb(&r, &["x*y"])).unwrap(), Dimension::Infinite);
        let r3 = Ring::local(&["x", "y", "z"]).unwrap();
        assert_eq!(local_vdim(&sb(&r3, &["2*x", "2*y", "2*z"])).unwrap(), Dimension::Finite(1));
    }

    #[test]
    fn vdim_does_not_depend_on_local_tie_break() {
        let battery: &[&[&str]] = &[
            &["x^2", "y^3"],
            &["3*x^2", "3*y^2"],
            &["2*x", "5*y^4"],
            &["x^2 - y^3", "x*y"],
            &["x^3 + y^3 + x*y", "x - y^2"],
            &["x*y - x^3", "y^2 + x^4"],
        ];
        for gens in battery {
            let a = Ring::with_kind(&["x", "y"], BlockKind::NegDegRevLex).unwrap();
            let b = Ring::with_kind(&["x", "y"], BlockKind::NegDegLex).unwrap();
            assert_eq!(local_vdim(&sb(&a, gens)).unwrap(), local_vdim(&sb(&b, gens)).unwrap(), "{:?}", gens);
        }
    }

    #[test]
    fn hilbert_numerators() {
        let x = Monomial::var(0, 1);
        let y = Monomial::var(1, 1);
        assert_eq!(hilbert_numerator(&[], 2), [1]);
        assert_eq!(hilbert_numerator(&[x], 2), [1, -1]);
        // <x, y>: (1 - t)^2
        assert_eq!(hilbert_numerator(&[x, y], 2), [1, -2, 1]);
        // <x^2, xy, y^2>: 1 - 3t^2 + 2t^3
        let g = [Monomial::var(0, 2), x.mul(&y), Monomial::var(1, 2)];
        assert_eq!(hilbert_numerator(&g, 2), [1, 0, -3, 2]);
    }

    #[test]
    fn relative_dimension_of_nested_ideals() {
        let r = Ring::local(&["x", "y"]).unwrap();
        // <x> / <x^2, x*y> is spanned by x
        let z = sb(&r, &["x"]);
        assert_eq!(relative_dim(&z, &sb(&r, &["x^2", "x*y"])).unwrap(), Dimension::Finite(1));
        assert_eq!(relative_dim(&z, &sb(&r, &["x*y"])).unwrap(), Dimension::Infinite);
        assert_eq!(relative_dim(&z, &z).unwrap(), Dimension::Finite(0));
        // agrees with a difference of finite colengths
        let big = sb(&r, &["x^2", "y^2"]);
        let small = sb(&r, &["x^3", "y^3", "x^2*y"]);
        let d = local_vdim(&small).unwrap().finite().unwrap() - local_vdim(&big).unwrap().finite().unwrap();
        assert_eq!(relative_dim(&big, &small).unwrap(), Dimension::Finite(d));
    }
}
