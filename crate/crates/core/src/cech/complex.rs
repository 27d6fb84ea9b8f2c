use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith::{Rat, Ring, Vector};
use crate::bases::{apply_matrix, normal_form, Budget, FpModule, FreeModule};
use crate::error::{Error, Result};

/// A cochain complex `C^0 -> C^1 -> ...` of finitely presented modules over
/// one ring. `maps[k]` holds the images of the generators of `terms[k]` in
/// the free module of `terms[k + 1]`.
#[derive(Clone, Debug)]
pub struct ModuleComplex {
    ring: Arc<Ring>,
    pub terms: Vec<FpModule>,
    pub maps: Vec<Vec<Vector>>,
}

impl ModuleComplex {
    pub fn new(ring: &Arc<Ring>, terms: Vec<FpModule>, maps: Vec<Vec<Vector>>) -> ModuleComplex {
        debug_assert_eq!(maps.len() + 1, terms.len().max(1));
        ModuleComplex { ring: ring.clone(), terms, maps }
    }

    pub fn empty(ring: &Arc<Ring>) -> ModuleComplex {
        ModuleComplex { ring: ring.clone(), terms: Vec::new(), maps: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Ranks of the free modules.
    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(|t| t.free.rank()).collect()
    }

    /// Total number of relations.
    pub fn relation_count(&self) -> usize {
        self.terms.iter().map(|t| t.relations.len()).sum()
    }

    /// Image of a vector of `terms[k]` in `terms[k + 1]`.
    pub fn apply(&self, k: usize, v: &Vector) -> Vector {
        apply_matrix(&self.terms[k + 1].free, &self.maps[k], v)
    }

    /// `D^2 = 0` on the free modules, term by term.
    pub fn squares_to_zero_exactly(&self) -> bool {
        (0..self.maps.len().saturating_sub(1)).all(|k| self.maps[k].iter().all(|c| self.apply(k + 1, c).is_zero()))
    }

    /// `D^2 = 0` modulo relations, and `D` maps relations into relations.
    pub fn is_well_defined(&self, budget: &Budget) -> Result<bool> {
        let sbs = self
            .terms
            .iter()
            .map(|t| t.relation_module().standard_basis(budget))
            .collect::<Result<Vec<_>>>()?;
        for k in 0..self.maps.len() {
            for r in &self.terms[k].relations {
                if !normal_form(&self.apply(k, r), &sbs[k + 1], budget)?.is_zero() {
                    return Ok(false);
                }
            }
            if k + 1 < self.maps.len() {
                for c in &self.maps[k] {
                    if !normal_form(&self.apply(k + 1, c), &sbs[k + 2], budget)?.is_zero() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Cohomology dimensions of the fibre at the origin, `C (x) A / m`, for
    /// a complex of free modules.
    pub fn fiber_cohomology(&self) -> Result<Vec<usize>> {
        if self.relation_count() > 0 {
            return Err(Error::InvalidInput("fibre cohomology needs free terms".into()));
        }
        let ranks = self.ranks();
        let map_ranks: Vec<usize> = self
            .maps
            .iter()
            .map(|cols| {
                let rows: Vec<Vec<(usize, Rat)>> = cols
                    .iter()
                    .map(|c| c.terms().iter().filter(|t| t.mono.is_one()).map(|t| (t.comp as usize, t.coeff.clone())).collect())
                    .collect();
                rank_over_q(&rows)
            })
            .collect();
        Ok((0..ranks.len())
            .map(|k| {
                let out = map_ranks.get(k).copied().unwrap_or(0);
                let inc = if k > 0 { map_ranks[k - 1] } else { 0 };
                ranks[k] - out - inc
            })
            .collect())
    }

    /// Free module of term `k`.
    pub fn free(&self, k: usize) -> &FreeModule {
        &self.terms[k].free
    }
}

/// Rank of a rational matrix given as sparse rows.
pub fn rank_over_q(rows: &[Vec<(usize, Rat)>]) -> usize {
    let ncols = rows.iter().flat_map(|r| r.iter().map(|(c, _)| c + 1)).max().unwrap_or(0);
    let mut m: Vec<Vec<Rat>> = rows
        .iter()
        .map(|r| {
            let mut dense = alloc::vec![Rat::ZERO; ncols];
            for (c, v) in r {
                dense[*c] = &dense[*c] + v;
            }
            dense
        })
        .collect();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let inv = m[rank][col].inv();
        for i in rank + 1..m.len() {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for j in col..ncols {
                let sub = &f * &m[rank][j];
                m[i][j] = &m[i][j] - &sub;
            }
        }
        rank += 1;
    }
    rank
}
