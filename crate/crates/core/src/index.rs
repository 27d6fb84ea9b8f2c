//! Homology of complexes over the local ring and the homological index.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::arith::Poly;
use crate::bases::{kernel, local_vdim, relative_dim, Budget, Dimension, SubmoduleBasis, DEFAULT_SATURATION_CAP};
use crate::cech::{cech_strands, cech_maps, totalize, twist_bound, GradedComplex, ModuleComplex, StrandMode};
use crate::error::{Error, Result};
use crate::nash::{isolated_zero_check, HypersurfaceProblem, NashOptions, NashPresentation};

/// Dimensions over `Q` of the cohomology modules `H^k`, finite or not.
pub fn homology(c: &ModuleComplex, budget: &Budget) -> Result<Vec<Dimension>> {
    let mut out = Vec::with_capacity(c.len());
    for k in 0..c.len() {
        let term = &c.terms[k];
        let free = &term.free;
        if free.rank() == 0 {
            out.push(Dimension::Finite(0));
            continue;
        }
        let z = if k + 1 < c.len() {
            let next = &c.terms[k + 1];
            kernel(free, &next.free, &c.maps[k], &next.relations, budget)?.standard_basis(budget)?
        } else {
            let units = (0..free.rank()).map(crate::arith::Vector::unit).collect();
            SubmoduleBasis::new(free, units).standard_basis(budget)?
        };
        let mut b = term.relations.clone();
        if k > 0 {
            b.extend(c.maps[k - 1].iter().cloned());
        }
        let b = SubmoduleBasis::new(free, b).standard_basis(budget)?;
        out.push(relative_dim(&z, &b)?);
    }
    Ok(out)
}

/// Like [`homology`], but every dimension must be finite.
pub fn homology_dims(c: &ModuleComplex, budget: &Budget) -> Result<Vec<usize>> {
    homology(c, budget)?
        .into_iter()
        .enumerate()
        .map(|(k, d)| d.finite().ok_or_else(|| Error::InfiniteDimension(alloc::format!("H^{} of the total complex", k))))
        .collect()
}

/// Alternating sum of the homology dimensions.
pub fn euler_characteristic(c: &ModuleComplex, budget: &Budget) -> Result<i64> {
    Ok(alternating_sum(&homology_dims(c, budget)?))
}

fn alternating_sum(dims: &[usize]) -> i64 {
    dims.iter().enumerate().map(|(k, d)| if k % 2 == 0 { *d as i64 } else { -(*d as i64) }).sum()
}

/// Settings of [`homological_index`].
#[derive(Clone, Debug)]
pub struct IndexOptions {
    pub bound_override: Option<u32>,
    /// Skip the isolated-zero precondition.
    pub force: bool,
    pub work_limit: Option<u64>,
    pub saturation_cap: usize,
    pub mode: StrandMode,
    pub prune: bool,
}

impl Default for IndexOptions {
    fn default() -> Self {
        IndexOptions {
            bound_override: None,
            force: false,
            work_limit: None,
            saturation_cap: DEFAULT_SATURATION_CAP,
            mode: StrandMode::Formal,
            prune: true,
        }
    }
}

/// Result of [`homological_index`] with diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexReport {
    pub index: i64,
    pub chi: i64,
    /// The sign is `(-1)^sign_exponent`, the dimension of the hypersurface.
    pub sign_exponent: usize,
    pub homology_dims: BTreeMap<usize, usize>,
    /// Minimal generators of the Nash ideal.
    pub nash_ideal_size: usize,
    pub twist_bound: u32,
    /// Ranks of the total complex before and after pruning.
    pub total_ranks: Vec<usize>,
    pub pruned_ranks: Vec<usize>,
    /// Reduction steps spent.
    pub work: u64,
}

/// The homological index of the 1-form of `problem` on the hypersurface at
/// the origin: `(-1)^{n-1}` times the Euler characteristic of the degree-zero
/// strand of the truncated Cech complex of the Nash modules.
pub fn homological_index(problem: &HypersurfaceProblem, opts: &IndexOptions) -> Result<IndexReport> {
    let budget = Budget::new(opts.work_limit);
    if !opts.force {
        let check = isolated_zero_check(problem, opts.saturation_cap, &budget)?;
        if !check.isolated {
            return Err(Error::NonIsolatedZero("the zero locus on the top stratum is not isolated".to_string()));
        }
    }
    let pres = NashPresentation::build(problem, &NashOptions { saturation_cap: opts.saturation_cap }, &budget)?;
    index_of_presentation(&pres, opts, &budget)
}

/// Runs the Cech and homology stages on a prepared presentation.
pub fn index_of_presentation(pres: &NashPresentation, opts: &IndexOptions, budget: &Budget) -> Result<IndexReport> {
    let gc = GradedComplex::from_presentation(pres)?;
    let tb = twist_bound(&gc, None, opts.bound_override, budget)?;
    let strands = cech_strands(&gc, tb.d, opts.mode, budget)?;
    let maps = cech_maps(&gc, &strands, tb.d)?;
    let total = totalize(&pres.ctx, &strands, &maps)?;
    let total_ranks = total.ranks();
    let reduced = if opts.prune { total.prune() } else { total };
    let dims = homology_dims(&reduced, budget)?;
    let chi = alternating_sum(&dims);
    let sign_exponent = pres.ctx.d_x();
    let index = if sign_exponent.is_multiple_of(2) { chi } else { -chi };
    Ok(IndexReport {
        index,
        chi,
        sign_exponent,
        homology_dims: dims.into_iter().enumerate().collect(),
        nash_ideal_size: pres.j_gens.len(),
        twist_bound: tb.d,
        total_ranks,
        pruned_ranks: reduced.ranks(),
        work: budget.used(),
    })
}

/// Homological index at a smooth point: the colength of the ideal of the
/// components of the form in the local ring.
pub fn koszul_index_smooth(components: &[Poly], budget: &Budget) -> Result<usize> {
    let Some(first) = components.first() else {
        return Err(Error::InvalidInput("no components".into()));
    };
    let sb = SubmoduleBasis::ideal(first.ring(), components).standard_basis(budget)?;
    local_vdim(&sb)?
        .finite()
        .ok_or_else(|| Error::InfiniteDimension("the components do not define an isolated zero".into()))
}
