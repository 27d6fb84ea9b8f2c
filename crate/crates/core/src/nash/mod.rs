//! The Nash transform of a hypersurface germ and the modules of exterior
//! powers of its dual Nash bundle.
//!
//! For `X = V(h)` the Nash modification lives in `P^{n-1} x (C^n, 0)`; the
//! projective coordinate `s_i` is paired with `dh/dx_i`, so over the regular
//! part the point `[s]` is the conormal direction `[grad h]`.

mod context;

use alloc::sync::Arc;
use alloc::vec::Vec;

pub use context::RingContext;

use crate::arith::{subsets, wedge, ExtIndex, Poly, Vector};
use crate::bases::{
    local_vdim, minimize_generators, saturate_ideal, Budget, Dimension, FpModule, FreeModule, Resolution,
    SubmoduleBasis,
};
use crate::error::{Error, Result};

/// The 1-form: the differential of a function or explicit components.
#[derive(Clone, Debug, PartialEq)]
pub enum Omega {
    Function(Poly),
    Form(Vec<Poly>),
}

/// A hypersurface germ `X = V(h)` with a 1-form on it.
#[derive(Clone, Debug)]
pub struct HypersurfaceProblem {
    ctx: Arc<RingContext>,
    h: Poly,
    omega: Omega,
    sing: Option<Vec<Poly>>,
}

impl HypersurfaceProblem {
    /// Validates: `h` nonconstant with `h(0) = 0`, a function `f` with
    /// `f(0) = 0` or exactly `n` form components, everything in `A`.
    pub fn new(ctx: &Arc<RingContext>, h: Poly, omega: Omega, sing: Option<Vec<Poly>>) -> Result<HypersurfaceProblem> {
        let a = ctx.a_ring();
        let in_a = |p: &Poly| Arc::ptr_eq(p.ring(), a) || **p.ring() == **a;
        if !in_a(&h) {
            return Err(Error::ContextMismatch);
        }
        if h.is_zero() || h.is_constant() {
            return Err(Error::InvalidInput("the hypersurface equation must be nonconstant".into()));
        }
        if !h.constant_term().is_zero() {
            return Err(Error::InvalidInput("the hypersurface does not pass through the origin".into()));
        }
        match &omega {
            Omega::Function(f) => {
                if !in_a(f) {
                    return Err(Error::ContextMismatch);
                }
                if !f.constant_term().is_zero() {
                    return Err(Error::InvalidInput("the function must vanish at the origin".into()));
                }
            }
            Omega::Form(w) => {
                if w.len() != ctx.n() {
                    return Err(Error::InvalidInput(alloc::format!(
                        "the form has {} components, expected {}",
                        w.len(),
                        ctx.n()
                    )));
                }
                if !w.iter().all(in_a) {
                    return Err(Error::ContextMismatch);
                }
            }
        }
        if let Some(s) = &sing {
            if !s.iter().all(in_a) {
                return Err(Error::ContextMismatch);
            }
        }
        Ok(HypersurfaceProblem { ctx: ctx.clone(), h, omega, sing })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn h(&self) -> &Poly {
        &self.h
    }

    pub fn omega(&self) -> &Omega {
        &self.omega
    }

    /// The user-supplied singular ideal, if any.
    pub fn sing_override(&self) -> Option<&[Poly]> {
        self.sing.as_deref()
    }

    /// Generators of the ideal used for saturation: the given one, or the
    /// Jacobian ideal of `h` together with `h`.
    pub fn sing_ideal(&self) -> Vec<Poly> {
        match &self.sing {
            Some(s) => s.clone(),
            None => default_sing(&self.h),
        }
    }

    /// Same germ and singular ideal with another form.
    pub fn with_omega(&self, omega: Omega) -> Result<HypersurfaceProblem> {
        HypersurfaceProblem::new(&self.ctx, self.h.clone(), omega, self.sing.clone())
    }
}

/// `<dh/dx_1, ..., dh/dx_n, h>`.
pub fn default_sing(h: &Poly) -> Vec<Poly> {
    let mut g: Vec<Poly> = (0..h.ring().nvars()).map(|i| h.derivative(i)).collect();
    g.push(h.clone());
    g
}

/// Components of the 1-form: the gradient of `f`, or the given vector.
pub fn pullback_form(problem: &HypersurfaceProblem) -> Vec<Poly> {
    match &problem.omega {
        Omega::Function(f) => (0..problem.ctx.n()).map(|i| f.derivative(i)).collect(),
        Omega::Form(w) => w.clone(),
    }
}

/// 2x2 minors `a_i b_j - a_j b_i` for `i < j`.
pub fn minors2(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut out = Vec::new();
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            let m = &(&a[i] * &b[j]) - &(&a[j] * &b[i]);
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// The Nash ideal `J = (<h> + L) : sing^inf` in `S`, where `L` is generated
/// by the 2x2 minors of the matrix with rows `(s_0..s_{n-1})` and
/// `(dh/dx_1..dh/dx_n)`. Returned as a standard basis.
pub fn nash_ideal(ctx: &RingContext, h: &Poly, sing: &[Poly], cap: usize, budget: &Budget) -> Result<SubmoduleBasis> {
    if h.is_zero() || h.is_constant() {
        return Err(Error::InvalidInput("the hypersurface equation must be nonconstant".into()));
    }
    let n = ctx.n();
    let hs = ctx.lift(h)?;
    let grad: Vec<Poly> = (0..n).map(|i| ctx.lift(&h.derivative(i))).collect::<Result<_>>()?;
    let s: Vec<Poly> = (0..n).map(|i| ctx.s_var(i)).collect();
    let mut gens = alloc::vec![hs];
    gens.extend(minors2(&s, &grad));
    let base = SubmoduleBasis::ideal(ctx.s_ring(), &gens);
    let sing_s: Vec<Poly> = sing.iter().map(|g| ctx.lift(g)).collect::<Result<_>>()?;
    saturate_ideal(&base, &sing_s, cap, budget)
}

/// `Lambda^q S^n` with all twists equal to `twist`; basis `e_K` for the
/// `q`-subsets `K` in lexicographic order.
pub fn exterior_power(ctx: &RingContext, q: usize, twist: i32) -> FreeModule {
    let rank = crate::arith::binomial(ctx.n(), q);
    FreeModule::new(ctx.s_ring(), alloc::vec![twist; rank])
}

/// Columns of `v ^ - : Lambda^q -> Lambda^{q+1}` for a vector `v` of `S^n`.
/// Column `k` is the image of the `k`-th basis element of `Lambda^q`.
pub fn wedge_columns(ctx: &RingContext, v: &[Poly], q: usize, target: &FreeModule) -> Vec<Vector> {
    let n = ctx.n();
    let src = subsets(n, q);
    let dst = subsets(n, q + 1);
    src.iter()
        .map(|k| {
            let mut terms = Vec::new();
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                let (sign, merged) = wedge(&ExtIndex::single(i), k);
                let Some(merged) = merged else { continue };
                let pos = dst.binary_search(&merged).expect("subset present");
                let c = crate::arith::Rat::from_int(sign as i64);
                for (coeff, m) in vi.terms() {
                    terms.push(crate::arith::Term::new(coeff * &c, *m, pos));
                }
            }
            Vector::from_terms(terms, target.order())
        })
        .collect()
}

/// `Q^q = coker(theta ^ : Lambda^{q-1} S^n(-1) -> Lambda^q S^n)` together
/// with its Koszul resolution `Lambda^{q-k} S^n(-k)`, differential `theta ^`.
pub fn exterior_quotient(ctx: &RingContext, q: usize) -> Result<(FpModule, Resolution)> {
    if q > ctx.d_x() {
        return Err(Error::InvalidInput(alloc::format!("form degree {} exceeds {}", q, ctx.d_x())));
    }
    let theta: Vec<Poly> = (0..ctx.n()).map(|i| ctx.s_var(i)).collect();
    let mut modules = Vec::new();
    let mut maps = Vec::new();
    for k in 0..=q {
        modules.push(exterior_power(ctx, q - k, k as i32));
    }
    for k in 0..q {
        maps.push(wedge_columns(ctx, &theta, q - k - 1, &modules[k]));
    }
    let m = FpModule::new(modules[0].clone(), maps.first().cloned().unwrap_or_default());
    Ok((m, Resolution { modules, maps }))
}

/// Construction options shared by the pipeline stages.
#[derive(Clone, Debug)]
pub struct NashOptions {
    pub saturation_cap: usize,
}

impl Default for NashOptions {
    fn default() -> Self {
        NashOptions { saturation_cap: crate::bases::DEFAULT_SATURATION_CAP }
    }
}

/// Graded presentations of the exterior powers of the dual Nash bundle and
/// the lifted form.
#[derive(Clone, Debug)]
pub struct NashPresentation {
    pub ctx: Arc<RingContext>,
    /// Standard basis of the Nash ideal.
    pub j: SubmoduleBasis,
    /// Minimal generators of the Nash ideal, used in the presentations.
    pub j_gens: Vec<Poly>,
    /// `modules[q]` presents `Q^q (x) S/J` for `q = 0..=d_X`.
    pub modules: Vec<FpModule>,
    /// The tautological section `sum s_i e_i`.
    pub theta: Vec<Poly>,
    /// Components of the lifted form (affine, degree zero) in `S`.
    pub w: Vec<Poly>,
}

impl NashPresentation {
    pub fn build(problem: &HypersurfaceProblem, opts: &NashOptions, budget: &Budget) -> Result<NashPresentation> {
        let ctx = problem.context().clone();
        let j = nash_ideal(&ctx, problem.h(), &problem.sing_ideal(), opts.saturation_cap, budget)?;
        let w: Vec<Poly> = pullback_form(problem).iter().map(|p| ctx.lift(p)).collect::<Result<_>>()?;
        NashPresentation::from_parts(ctx, j, w, budget)
    }

    /// Assembles the presentation from a known Nash ideal.
    pub fn from_parts(ctx: Arc<RingContext>, j: SubmoduleBasis, w: Vec<Poly>, budget: &Budget) -> Result<NashPresentation> {
        let j = j.standard_basis(budget)?;
        let ideal_free = FreeModule::untwisted(ctx.s_ring(), 1);
        let j_gens: Vec<Poly> = minimize_generators(&ideal_free, j.gens(), budget)?
            .into_iter()
            .map(|v| Poly::from_vector(ctx.s_ring(), crate::bases::primitive(&v)))
            .collect();
        let theta: Vec<Poly> = (0..ctx.n()).map(|i| ctx.s_var(i)).collect();
        let mut modules = Vec::new();
        for q in 0..=ctx.d_x() {
            let free = exterior_power(&ctx, q, 0);
            let mut rels = if q > 0 {
                wedge_columns(&ctx, &theta, q - 1, &free)
            } else {
                Vec::new()
            };
            for g in &j_gens {
                for k in 0..free.rank() {
                    rels.push(free.adopt(g.as_vector().clone().into_component(k)));
                }
            }
            modules.push(FpModule::new(free, rels));
        }
        Ok(NashPresentation { ctx, j, j_gens, modules, theta, w })
    }

    /// Columns of `w ^ - : M^q -> M^{q+1}`.
    pub fn wedge_differential(&self, q: usize) -> Result<Vec<Vector>> {
        if q >= self.ctx.d_x() {
            return Err(Error::InvalidInput(alloc::format!("no differential out of degree {}", q)));
        }
        Ok(wedge_differential(&self.ctx, &self.w, q, &self.modules[q + 1].free))
    }
}

/// Matrix of the lifted form wedged on, `Lambda^q -> Lambda^{q+1}`.
pub fn wedge_differential(ctx: &RingContext, w: &[Poly], q: usize, target: &FreeModule) -> Vec<Vector> {
    wedge_columns(ctx, w, q, target)
}

/// Outcome of the isolated-zero test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ZeroCheck {
    pub isolated: bool,
    /// Local dimension of the critical ideal after saturation.
    pub dimension: Dimension,
}

/// Tests whether the form has an isolated zero on the regular part of `X`
/// near the origin: `<h> + minors(omega, grad h)` saturated by the singular
/// ideal must have finite local dimension.
pub fn isolated_zero_check(problem: &HypersurfaceProblem, cap: usize, budget: &Budget) -> Result<ZeroCheck> {
    let h = problem.h();
    let a = problem.context().a_ring();
    let w = pullback_form(problem);
    let grad: Vec<Poly> = (0..a.nvars()).map(|i| h.derivative(i)).collect();
    let mut gens = alloc::vec![h.clone()];
    gens.extend(minors2(&w, &grad));
    let crit = SubmoduleBasis::ideal(a, &gens);
    let sat = saturate_ideal(&crit, &problem.sing_ideal(), cap, budget)?;
    let dimension = local_vdim(&sat)?;
    Ok(ZeroCheck { isolated: dimension.is_finite(), dimension })
}

#[cfg(test)]
mod tests;
