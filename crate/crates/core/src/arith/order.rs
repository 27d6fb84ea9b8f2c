//! Block monomial orders and their extension to free modules.
//!
//! A [`MonomialOrder`] is a sequence of blocks compared lexicographically.
//! Each block is graded: global blocks prefer larger degree (1 is the
//! smallest monomial), local blocks prefer smaller degree (1 is the largest).
//! The pipeline's order is a global degree-revlex block on the projective
//! variables followed by a local negative-degree-revlex block on the affine
//! ones.

use alloc::vec::Vec;
use core::cmp::Ordering;

use super::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockKind {
    /// Degree, then reverse lexicographic. Global.
    DegRevLex,
    /// Degree, then lexicographic. Global.
    DegLex,
    /// Negative degree, then reverse lexicographic. Local.
    NegDegRevLex,
    /// Negative degree, then lexicographic. Local.
    NegDegLex,
}

impl BlockKind {
    pub fn is_global(self) -> bool {
        matches!(self, BlockKind::DegRevLex | BlockKind::DegLex)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub vars: Vec<usize>,
    pub kind: BlockKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    blocks: Vec<Block>,
}

impl MonomialOrder {
    pub fn new(blocks: Vec<Block>) -> MonomialOrder {
        MonomialOrder { blocks: blocks.into_iter().filter(|b| !b.vars.is_empty()).collect() }
    }

    pub fn single(nvars: usize, kind: BlockKind) -> MonomialOrder {
        MonomialOrder::new(alloc::vec![Block { vars: (0..nvars).collect(), kind }])
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// True when 1 is the smallest monomial (every block is global).
    pub fn is_global(&self) -> bool {
        self.blocks.iter().all(|b| b.kind.is_global())
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_shifted(a, 0, b, 0)
    }

    /// Compare with integer shifts added to the degree of the first block;
    /// used for graded free modules whose generators carry twists.
    #[inline]
    pub fn cmp_shifted(&self, a: &Monomial, sa: i32, b: &Monomial, sb: i32) -> Ordering {
        for (i, block) in self.blocks.iter().enumerate() {
            let (mut da, mut db) = (block_deg(a, &block.vars) as i64, block_deg(b, &block.vars) as i64);
            if i == 0 {
                da += sa as i64;
                db += sb as i64;
            }
            let by_deg = if block.kind.is_global() { da.cmp(&db) } else { db.cmp(&da) };
            if by_deg != Ordering::Equal {
                return by_deg;
            }
            let tie = match block.kind {
                BlockKind::DegRevLex | BlockKind::NegDegRevLex => {
                    let mut r = Ordering::Equal;
                    for &v in block.vars.iter().rev() {
                        let (ea, eb) = (a.exp(v), b.exp(v));
                        if ea != eb {
                            r = eb.cmp(&ea);
                            break;
                        }
                    }
                    r
                }
                BlockKind::DegLex | BlockKind::NegDegLex => {
                    let mut r = Ordering::Equal;
                    for &v in block.vars.iter() {
                        let (ea, eb) = (a.exp(v), b.exp(v));
                        if ea != eb {
                            r = ea.cmp(&eb);
                            break;
                        }
                    }
                    r
                }
            };
            if tie != Ordering::Equal {
                return tie;
            }
        }
        Ordering::Equal
    }
}

#[inline]
fn block_deg(m: &Monomial, vars: &[usize]) -> u32 {
    m.deg_in(vars)
}

/// Extension of a monomial order to terms `m * e_i` of a free module.
///
/// Components are first split into priority groups (higher group compares
/// greater); within a group the order is term-over-position by default,
/// with the generator twist added to the degree of the first block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub mono: MonomialOrder,
    shifts: Vec<i32>,
    groups: Vec<u32>,
    pot: bool,
}

impl TermOrder {
    pub fn new(mono: MonomialOrder) -> TermOrder {
        TermOrder { mono, shifts: Vec::new(), groups: Vec::new(), pot: false }
    }

    pub fn with_shifts(mut self, shifts: Vec<i32>) -> TermOrder {
        self.shifts = shifts;
        self
    }

    /// Components with a larger group number dominate all others.
    pub fn with_groups(mut self, groups: Vec<u32>) -> TermOrder {
        self.groups = groups;
        self
    }

    pub fn position_over_term(mut self) -> TermOrder {
        self.pot = true;
        self
    }

    #[inline]
    pub fn shift(&self, comp: usize) -> i32 {
        self.shifts.get(comp).copied().unwrap_or(0)
    }

    pub fn shifts(&self) -> &[i32] {
        &self.shifts
    }

    #[inline]
    pub fn group(&self, comp: usize) -> u32 {
        self.groups.get(comp).copied().unwrap_or(0)
    }

    pub fn is_global(&self) -> bool {
        self.mono.is_global()
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, ca: usize, b: &Monomial, cb: usize) -> Ordering {
        if ca != cb {
            let g = self.group(ca).cmp(&self.group(cb));
            if g != Ordering::Equal {
                return g;
            }
            if self.pot {
                return cb.cmp(&ca);
            }
        }
        match self.mono.cmp_shifted(a, self.shift(ca), b, self.shift(cb)) {
            Ordering::Equal => cb.cmp(&ca),
            o => o,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::single(3, BlockKind::DegRevLex);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
        assert!(o.is_global());
    }

    #[test]
    fn local_prefers_low_degree() {
        let o = MonomialOrder::single(2, BlockKind::NegDegRevLex);
        assert_eq!(o.cmp(&Monomial::ONE, &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[1, 1])), Ordering::Greater);
        assert!(!o.is_global());
    }

    #[test]
    fn mixed_block_order() {
        // s0, s1 global; x local
        let o = MonomialOrder::new(vec![
            Block { vars: vec![0, 1], kind: BlockKind::DegRevLex },
            Block { vars: vec![2], kind: BlockKind::NegDegRevLex },
        ]);
        assert_eq!(o.cmp(&m(&[1, 0, 5]), &m(&[0, 0, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[0, 0, 0])), Ordering::Less);
    }

    #[test]
    fn term_order_groups_and_shifts() {
        let o = TermOrder::new(MonomialOrder::single(1, BlockKind::DegRevLex))
            .with_shifts(vec![0, 2])
            .with_groups(vec![1, 0]);
        // group 1 dominates regardless of degree
        assert_eq!(o.cmp(&m(&[0]), 0, &m(&[9]), 1), Ordering::Greater);
        let o = TermOrder::new(MonomialOrder::single(1, BlockKind::DegRevLex)).with_shifts(vec![0, 2]);
        assert_eq!(o.cmp(&m(&[1]), 0, &m(&[0]), 1), Ordering::Less);
    }
}
