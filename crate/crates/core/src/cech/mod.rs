//! Truncated Cech complexes of graded modules and their degree-zero strands.
//!
//! For a graded `S`-module `M` and the standard cover of `P^{n-1}`, the
//! truncated Cech term in degree `p` is the sum over `(p+1)`-subsets `I` of
//! `M_{d(p+1)}`, an element `a` standing for `a / (s_I)^d`. Every strand is a
//! finitely presented module over `A`: generators `e_K s^alpha` with
//! `|alpha| = d(p+1) - twist(K)`, relations `s^beta * rho` for the
//! relations `rho` of `M`.

mod complex;
mod prune;

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

pub use complex::{rank_over_q, ModuleComplex};

use crate::arith::{subsets, wedge, ExtIndex, Monomial, Poly, Rat, Term, Vector, MAX_VARS, TermOrder};
use crate::bases::{graded_resolution, saturate, Budget, DEFAULT_SATURATION_CAP, FpModule, FreeModule, Resolution};
use crate::error::{Error, Result};
use crate::nash::{NashPresentation, RingContext};

/// How a Cech piece treats `s_I`-torsion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum StrandMode {
    /// `M_{d(p+1)}` itself; torsion is left in and cancels in cohomology.
    #[default]
    Formal,
    /// `(M / Gamma_{s_I} M)_{d(p+1)}`, the image in the localization.
    Localized,
}

/// A complex of graded modules `M^0 -> M^1 -> ...` with degree-zero maps;
/// the input of the Cech construction.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    pub ctx: Arc<RingContext>,
    pub modules: Vec<FpModule>,
    /// `vertical[q]`: images of the generators of `modules[q]` in
    /// `modules[q + 1]`.
    pub vertical: Vec<Vec<Vector>>,
}

impl GradedComplex {
    pub fn from_presentation(p: &NashPresentation) -> Result<GradedComplex> {
        let vertical = (0..p.ctx.d_x()).map(|q| p.wedge_differential(q)).collect::<Result<_>>()?;
        Ok(GradedComplex { ctx: p.ctx.clone(), modules: p.modules.clone(), vertical })
    }

    /// A single module in degree zero.
    pub fn single(ctx: &Arc<RingContext>, m: FpModule) -> GradedComplex {
        GradedComplex { ctx: ctx.clone(), modules: alloc::vec![m], vertical: Vec::new() }
    }
}

/// The twist bound `d` together with the twists it was read from.
#[derive(Clone, Debug)]
pub struct TwistBound {
    pub d: u32,
    /// `max twist - (n - 1)` before clamping; `None` without twists.
    pub raw: Option<i32>,
    pub source_twists: Vec<i32>,
    pub overridden: bool,
    /// Resolutions the twists were harvested from, one per module.
    pub resolutions: Vec<Resolution>,
}

/// Resolves every module to homological depth `depth` (default `n`) and
/// returns `d = max twist - (n - 1)`, at least 1. An override replaces the
/// computed value but the twists are still reported.
pub fn twist_bound(
    gc: &GradedComplex,
    depth: Option<usize>,
    override_d: Option<u32>,
    budget: &Budget,
) -> Result<TwistBound> {
    let n = gc.ctx.n();
    let depth = depth.unwrap_or(n);
    let mut twists = Vec::new();
    let mut resolutions = Vec::new();
    for m in &gc.modules {
        let res = graded_resolution(m, depth, budget)?;
        twists.extend(res.twists());
        resolutions.push(res);
    }
    let raw = twists.iter().max().map(|t| t - (n as i32 - 1));
    let computed = raw.unwrap_or(1).max(1) as u32;
    let (d, overridden) = match override_d {
        Some(d) if d >= 1 => (d, true),
        Some(_) => return Err(Error::InvalidInput("the twist bound must be positive".into())),
        None => (computed, false),
    };
    Ok(TwistBound { d, raw, source_twists: twists, overridden, resolutions })
}

/// All monomials of degree `deg` in `n` variables, in lexicographic order
/// (largest exponent of the first variable first).
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exps(&cur[..n]));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, 0, deg, &mut [0; MAX_VARS], &mut out);
    out
}

type GenKey = (usize, [u16; MAX_VARS]);

/// The degree-zero strand of the Cech term `(p, q)`: one piece per
/// `(p+1)`-subset `I`, all sharing the generators `e_K s^alpha`.
#[derive(Clone, Debug)]
pub struct CechStrand {
    pub p: usize,
    pub q: usize,
    /// `s`-degree `d(p+1)` of the numerators.
    pub degree: u32,
    /// Generators `(K, alpha)` in lexicographic order; `alpha` is an
    /// `s`-monomial in the indexing of `A` (first `n` variables).
    pub gens: Vec<(usize, Monomial)>,
    pub subsets: Vec<ExtIndex>,
    /// Relations of each piece over `A` (same length as `subsets`).
    pub relations: Vec<Vec<Vector>>,
    index: BTreeMap<GenKey, usize>,
}

impl CechStrand {
    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    /// Total number of generators over all pieces.
    pub fn rank(&self) -> usize {
        self.gens.len() * self.subsets.len()
    }

    pub fn gen_index(&self, k: usize, alpha: &Monomial) -> Option<usize> {
        self.index.get(&(k, *alpha.exps())).copied()
    }

    /// The piece for `subsets[i]` as a module over `A`.
    pub fn piece(&self, ctx: &RingContext, i: usize) -> FpModule {
        FpModule::new(FreeModule::untwisted(ctx.a_ring(), self.ngens()), self.relations[i].clone())
    }
}

/// Converts a vector of the graded module (over `S`) of degree `deg` into the
/// strand's free `A`-module, or fails if a generator is missing.
fn to_strand_vector(ctx: &RingContext, strand: &CechStrand, v: &Vector, shift: &Monomial, ord: &TermOrder) -> Result<Vector> {
    let mut terms = Vec::with_capacity(v.len());
    for t in v.terms() {
        let (sm, xm) = ctx.split(&t.mono);
        let alpha = sm.mul(shift);
        let g = strand
            .gen_index(t.comp as usize, &alpha)
            .ok_or_else(|| Error::Inconsistent("relation leaves the strand".into()))?;
        terms.push(Term::new(t.coeff.clone(), xm, g));
    }
    Ok(Vector::from_terms(terms, ord))
}

/// Builds the strand `(p, q)` for truncation `d`.
pub fn cech_strand(gc: &GradedComplex, q: usize, p: usize, d: u32, mode: StrandMode, budget: &Budget) -> Result<CechStrand> {
    let ctx = &gc.ctx;
    let n = ctx.n();
    if q >= gc.modules.len() || p >= n {
        return Err(Error::InvalidInput(alloc::format!("no Cech strand ({}, {})", p, q)));
    }
    let m = &gc.modules[q];
    let degree = d * (p as u32 + 1);
    let mut gens = Vec::new();
    let mut index = BTreeMap::new();
    for (k, &tw) in m.free.twists().iter().enumerate() {
        let left = degree as i64 - tw as i64;
        if left < 0 {
            continue;
        }
        for alpha in monomials_of_degree(n, left as u32) {
            index.insert((k, *alpha.exps()), gens.len());
            gens.push((k, alpha));
        }
    }
    let subs = subsets(n, p + 1);
    let mut strand = CechStrand { p, q, degree, gens, subsets: subs.clone(), relations: Vec::new(), index };
    let a_free = FreeModule::untwisted(ctx.a_ring(), strand.ngens());
    let formal_rels = || -> Result<Vec<Vector>> { strand_relations(ctx, &strand, &m.free, &m.relations, &a_free) };
    let mut relations = Vec::with_capacity(subs.len());
    match mode {
        StrandMode::Formal => {
            let r = formal_rels()?;
            for _ in &subs {
                relations.push(r.clone());
            }
        }
        StrandMode::Localized => {
            for i in &subs {
                let mut prod = Poly::one(ctx.s_ring());
                for &j in i.indices() {
                    prod = &prod * &ctx.s_var(j);
                }
                let sat = saturate(&m.relation_module(), &prod, DEFAULT_SATURATION_CAP, budget)?;
                relations.push(strand_relations(ctx, &strand, &m.free, sat.gens(), &a_free)?);
            }
        }
    }
    strand.relations = relations;
    Ok(strand)
}

/// `s^beta * rho` for every relation `rho` and `|beta| = degree - deg(rho)`.
fn strand_relations(
    ctx: &RingContext,
    strand: &CechStrand,
    free: &FreeModule,
    rels: &[Vector],
    a_free: &FreeModule,
) -> Result<Vec<Vector>> {
    let n = ctx.n();
    let mut out = Vec::new();
    for rho in rels {
        let Some(deg) = free.degree(rho) else {
            return Err(Error::InvalidInput("relation is not homogeneous".into()));
        };
        let left = strand.degree as i64 - deg as i64;
        if left < 0 {
            continue;
        }
        for beta in monomials_of_degree(n, left as u32) {
            let v = to_strand_vector(ctx, strand, rho, &beta, a_free.order())?;
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    Ok(out)
}

/// Differentials of the Cech double complex.
#[derive(Clone, Debug)]
pub struct CechMaps {
    /// `horizontal[p][q]`: strand `(p, q)` to `(p + 1, q)`.
    pub horizontal: Vec<Vec<Vec<Vector>>>,
    /// `vertical[p][q]`: strand `(p, q)` to `(p, q + 1)`.
    pub vertical: Vec<Vec<Vec<Vector>>>,
}

/// All strands, indexed `[p][q]`.
pub fn cech_strands(gc: &GradedComplex, d: u32, mode: StrandMode, budget: &Budget) -> Result<Vec<Vec<CechStrand>>> {
    let n = gc.ctx.n();
    (0..n)
        .map(|p| (0..gc.modules.len()).map(|q| cech_strand(gc, q, p, d, mode, budget)).collect())
        .collect()
}

/// Horizontal Cech maps (multiplication by `s_j^d` with alternating signs)
/// and the vertical maps induced by the graded complex.
pub fn cech_maps(gc: &GradedComplex, strands: &[Vec<CechStrand>], d: u32) -> Result<CechMaps> {
    let ctx = &gc.ctx;
    let n = ctx.n();
    let ord = FreeModule::untwisted(ctx.a_ring(), 1).order().clone();
    let mut horizontal = Vec::new();
    let mut vertical = Vec::new();
    for p in 0..strands.len() {
        let mut hrow = Vec::new();
        let mut vrow = Vec::new();
        for q in 0..strands[p].len() {
            let src = &strands[p][q];
            let mut hcols = Vec::new();
            if p + 1 < strands.len() {
                let dst = &strands[p + 1][q];
                for i in &src.subsets {
                    for (k, alpha) in &src.gens {
                        let mut terms = Vec::new();
                        for j in 0..n {
                            let (_, Some(big)) = wedge(i, &ExtIndex::single(j)) else { continue };
                            let pos = big.indices().iter().position(|&x| x == j).unwrap();
                            let sign = if pos % 2 == 0 { 1 } else { -1 };
                            let piece = dst.subsets.binary_search(&big).expect("subset present");
                            let target = alpha.mul(&Monomial::var(j, d));
                            let g = dst
                                .gen_index(*k, &target)
                                .ok_or_else(|| Error::Inconsistent("Cech map leaves the strand".into()))?;
                            terms.push(Term::new(Rat::from_int(sign), Monomial::ONE, piece * dst.ngens() + g));
                        }
                        hcols.push(Vector::from_terms(terms, &ord));
                    }
                }
            }
            hrow.push(hcols);
            let mut vcols = Vec::new();
            if q + 1 < strands[p].len() {
                let dst = &strands[p][q + 1];
                let w = &gc.vertical[q];
                for piece in 0..src.subsets.len() {
                    for (k, alpha) in &src.gens {
                        let col = &w[*k];
                        let mut terms = Vec::new();
                        for t in col.terms() {
                            let (sm, xm) = ctx.split(&t.mono);
                            let target = alpha.mul(&sm);
                            let g = dst
                                .gen_index(t.comp as usize, &target)
                                .ok_or_else(|| Error::Inconsistent("vertical map leaves the strand".into()))?;
                            terms.push(Term::new(t.coeff.clone(), xm, piece * dst.ngens() + g));
                        }
                        vcols.push(Vector::from_terms(terms, &ord));
                    }
                }
            }
            vrow.push(vcols);
        }
        horizontal.push(hrow);
        vertical.push(vrow);
    }
    Ok(CechMaps { horizontal, vertical })
}

/// Total complex: degree `k` collects the strands with `p + q = k` (ordered
/// by `p`), with differential `horizontal + (-1)^p vertical`. Verifies
/// `D^2 = 0` exactly on the free modules.
pub fn totalize(ctx: &RingContext, strands: &[Vec<CechStrand>], maps: &CechMaps) -> Result<ModuleComplex> {
    let np = strands.len();
    let nq = strands.first().map(|r| r.len()).unwrap_or(0);
    if np == 0 || nq == 0 {
        return Ok(ModuleComplex::empty(ctx.a_ring()));
    }
    let top = np + nq - 2;
    // offsets of each (p, q) block inside its total degree
    let mut offset = alloc::vec![alloc::vec![0usize; nq]; np];
    let mut ranks = alloc::vec![0usize; top + 1];
    for k in 0..=top {
        for p in 0..np {
            if k < p || k - p >= nq {
                continue;
            }
            let q = k - p;
            offset[p][q] = ranks[k];
            ranks[k] += strands[p][q].rank();
        }
    }
    let a = ctx.a_ring();
    let mut terms = Vec::new();
    for k in 0..=top {
        let free = FreeModule::untwisted(a, ranks[k]);
        let mut rels = Vec::new();
        for p in 0..np {
            if k < p || k - p >= nq {
                continue;
            }
            let q = k - p;
            let s = &strands[p][q];
            for (piece, rs) in s.relations.iter().enumerate() {
                let base = offset[p][q] + piece * s.ngens();
                rels.extend(rs.iter().map(|r| shift_components(r, base)));
            }
        }
        terms.push(FpModule::new(free, rels));
    }
    let ord = FreeModule::untwisted(a, 1).order().clone();
    let mut dmaps = Vec::new();
    for k in 0..top {
        let mut cols = alloc::vec![Vector::zero(); ranks[k]];
        for p in 0..np {
            if k < p || k - p >= nq {
                continue;
            }
            let q = k - p;
            let base = offset[p][q];
            if p + 1 < np {
                let tb = offset[p + 1][q];
                for (c, v) in maps.horizontal[p][q].iter().enumerate() {
                    cols[base + c] = cols[base + c].add(&shift_components(v, tb), &ord);
                }
            }
            if q + 1 < nq {
                let tb = offset[p][q + 1];
                let sign = if p % 2 == 0 { Rat::ONE } else { -Rat::ONE };
                for (c, v) in maps.vertical[p][q].iter().enumerate() {
                    let sv = shift_components(v, tb).scale(&sign);
                    cols[base + c] = cols[base + c].add(&sv, &ord);
                }
            }
        }
        dmaps.push(cols);
    }
    let complex = ModuleComplex::new(a, terms, dmaps);
    if !complex.squares_to_zero_exactly() {
        return Err(Error::Inconsistent("the total differential does not square to zero".into()));
    }
    Ok(complex)
}

fn shift_components(v: &Vector, by: usize) -> Vector {
    let terms = v.terms().iter().map(|t| Term::new(t.coeff.clone(), t.mono, t.comp as usize + by)).collect();
    Vector::from_sorted_unchecked(terms)
}

/// Strands, maps and totalization in one step.
pub fn cech_total_complex(gc: &GradedComplex, d: u32, mode: StrandMode, budget: &Budget) -> Result<ModuleComplex> {
    let strands = cech_strands(gc, d, mode, budget)?;
    let maps = cech_maps(gc, &strands, d)?;
    totalize(&gc.ctx, &strands, &maps)
}

/// Euler characteristic of `O(-w)` on `P^{n-1}` through the truncated Cech
/// complex of the free module `S(-w)`, read off the fibre at the origin.
/// Returns the cohomology dimensions `h^0, ..., h^{n-1}`.
pub fn line_bundle_cohomology(ctx: &Arc<RingContext>, w: i32, d: Option<u32>, budget: &Budget) -> Result<Vec<usize>> {
    let free = FreeModule::new(ctx.s_ring(), alloc::vec![w]);
    let gc = GradedComplex::single(ctx, FpModule::free_module(free));
    let d = match d {
        Some(d) => d,
        None => twist_bound(&gc, None, None, budget)?.d,
    };
    let c = cech_total_complex(&gc, d, StrandMode::Formal, budget)?;
    c.fiber_cohomology()
}

#[cfg(test)]
mod tests;
