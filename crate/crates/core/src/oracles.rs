//! Independent cross-checks of the homological index.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith::{Poly, Ring};
use crate::bases::{local_vdim, saturate_ideal, Budget, SubmoduleBasis, DEFAULT_SATURATION_CAP};
use crate::error::{Error, Result};
use crate::index::koszul_index_smooth;
use crate::nash::{default_sing, minors2};

/// Milnor number of `f` at the origin: the colength of its Jacobian ideal.
pub fn classical_milnor(f: &Poly, budget: &Budget) -> Result<usize> {
    let r = f.ring();
    if !r.global_vars().is_empty() {
        return Err(Error::InvalidInput("the Milnor number needs a local ring".into()));
    }
    if !f.constant_term().is_zero() {
        return Err(Error::InvalidInput("f does not vanish at the origin".into()));
    }
    let partials: Vec<Poly> = (0..r.nvars()).map(|i| f.derivative(i)).collect();
    if partials.iter().all(|p| p.is_zero()) {
        return Ok(0);
    }
    koszul_index_smooth(&partials, budget).map_err(|e| match e {
        Error::InfiniteDimension(_) => Error::InfiniteDimension("the singularity is not isolated".into()),
        e => e,
    })
}

/// Restricts `f` to the smooth germ `{x_v = g_v}` given by `graph`
/// (pairs of a variable index and a function of the remaining variables),
/// returned in the local ring of the remaining variables.
pub fn restrict_to_graph(f: &Poly, graph: &[(usize, Poly)]) -> Result<Poly> {
    let r = f.ring();
    let n = r.nvars();
    let mut dropped = alloc::vec![false; n];
    for (v, g) in graph {
        if *v >= n || dropped[*v] {
            return Err(Error::InvalidInput("graph variables must be distinct ring variables".into()));
        }
        if !g.same_ring(f) {
            return Err(Error::ContextMismatch);
        }
        dropped[*v] = true;
    }
    for (_, g) in graph {
        if (0..n).any(|i| dropped[i] && g.terms().any(|(_, m)| m.exp(i) > 0)) {
            return Err(Error::InvalidInput("graph functions must not involve the solved variables".into()));
        }
        if !g.constant_term().is_zero() {
            return Err(Error::InvalidInput("the graph does not pass through the origin".into()));
        }
    }
    let keep: Vec<usize> = (0..n).filter(|i| !dropped[*i]).collect();
    let names: Vec<&str> = keep.iter().map(|&i| r.names()[i].as_str()).collect();
    let target = Ring::local(&names)?;
    let var_map: Vec<Option<usize>> = (0..n).map(|i| keep.iter().position(|&k| k == i)).collect();
    let mut images = Vec::with_capacity(n);
    for i in 0..n {
        match graph.iter().find(|(v, _)| *v == i) {
            Some((_, g)) => images.push(g.map_into(&target, &var_map)?),
            None => images.push(Poly::var(&target, var_map[i].unwrap())),
        }
    }
    Ok(f.substitute(&target, &images))
}

/// Milnor number of `f` restricted to the smooth hypersurface
/// `x_n = g(x_1, ..., x_{n-1})`.
pub fn smooth_restriction_milnor(g: &Poly, f: &Poly, budget: &Budget) -> Result<usize> {
    let n = f.ring().nvars();
    classical_milnor(&restrict_to_graph(f, &[(n - 1, g.clone())])?, budget)
}

/// Milnor number of `f` on the smooth germ given by `graph`.
pub fn graph_restriction_milnor(f: &Poly, graph: &[(usize, Poly)], budget: &Budget) -> Result<usize> {
    classical_milnor(&restrict_to_graph(f, graph)?, budget)
}

/// A morsification `f_t = f - t l` of a function on a hypersurface.
#[derive(Clone, Debug)]
pub struct PencilSpec {
    pub h: Poly,
    pub f: Poly,
    /// Linear form in the affine variables.
    pub l: Poly,
    /// Singular locus generators; the default is `<h> + Jac(h)`.
    pub sing: Option<Vec<Poly>>,
}

impl PencilSpec {
    pub fn new(h: Poly, f: Poly, l: Poly, sing: Option<Vec<Poly>>) -> Result<PencilSpec> {
        if !h.same_ring(&f) || !h.same_ring(&l) || sing.iter().flatten().any(|g| !g.same_ring(&h)) {
            return Err(Error::ContextMismatch);
        }
        if l.is_zero() || l.terms().any(|(_, m)| m.deg() != 1) {
            return Err(Error::InvalidInput("the direction must be a nonzero linear form".into()));
        }
        Ok(PencilSpec { h, f, l, sing })
    }
}

/// Number of critical points of `f_t` on the regular part of the
/// hypersurface that tend to the origin as `t -> 0`, counted with
/// multiplicity: the local colength of `I_Gamma + <t>`, where `I_Gamma` is
/// the saturated polar curve of the pencil.
pub fn branch_count(p: &PencilSpec, budget: &Budget) -> Result<usize> {
    let a = p.h.ring();
    let n = a.nvars();
    let mut t_name = String::from("t");
    while a.names().contains(&t_name) {
        t_name.insert(0, '_');
    }
    let mut names: Vec<&str> = a.names().iter().map(|s| s.as_str()).collect();
    names.push(&t_name);
    let g: Arc<Ring> = Ring::global(&names)?;
    let map: Vec<Option<usize>> = (0..n).map(Some).collect();
    let up = |q: &Poly| q.map_into(&g, &map);
    let t = Poly::var(&g, n);
    let h = up(&p.h)?;
    let grad_h: Vec<Poly> = (0..n).map(|i| h.derivative(i)).collect();
    let f = up(&p.f)?;
    let l = up(&p.l)?;
    let grad_ft: Vec<Poly> = (0..n).map(|i| &f.derivative(i) - &(&t * &l.derivative(i))).collect();
    let mut gens = alloc::vec![h.clone()];
    gens.extend(minors2(&grad_h, &grad_ft));
    let sing = match &p.sing {
        Some(s) => s.clone(),
        None => default_sing(&p.h),
    };
    let sing: Vec<Poly> = sing.iter().map(up).collect::<Result<_>>()?;
    // saturation commutes with localization, so it is done globally
    let gamma = saturate_ideal(&SubmoduleBasis::ideal(&g, &gens), &sing, DEFAULT_SATURATION_CAP, budget)?;
    let r: Arc<Ring> = Ring::local(&names)?;
    let same: Vec<Option<usize>> = (0..=n).map(Some).collect();
    let mut fibre: Vec<Poly> = gamma.polys().iter().map(|q| q.map_into(&r, &same)).collect::<Result<_>>()?;
    fibre.push(Poly::var(&r, n));
    let sb = SubmoduleBasis::ideal(&r, &fibre).standard_basis(budget)?;
    local_vdim(&sb)?
        .finite()
        .ok_or_else(|| Error::InfiniteDimension("the polar curve meets t = 0 in a positive-dimensional set".into()))
}
