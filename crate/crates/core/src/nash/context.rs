use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::arith::{Block, BlockKind, Monomial, MonomialOrder, Poly, Ring, MAX_VARS};
use crate::error::{Error, Result};

/// The two rings of the pipeline for an ambient dimension `n`.
///
/// `A` is the polynomial ring in the affine variables `x_1..x_n` with a
/// local order (a model of the local ring at the origin). `S = A[s_0..s_{n-1}]`
/// carries the projective variables first, in a global degree-revlex block,
/// followed by the affine ones in a local block; it is graded by `s`-degree.
#[derive(Debug, PartialEq, Eq)]
pub struct RingContext {
    x_names: Vec<String>,
    s_names: Vec<String>,
    a: Arc<Ring>,
    s: Arc<Ring>,
}

impl RingContext {
    /// Context with projective variables named `s0, s1, ...` (renamed if
    /// they collide with an affine name).
    pub fn new(x_names: &[&str]) -> Result<Arc<RingContext>> {
        let mut s_names = Vec::new();
        for i in 0..x_names.len() {
            let mut name = alloc::format!("s{}", i);
            while x_names.contains(&name.as_str()) {
                name.insert(0, '_');
            }
            s_names.push(name);
        }
        let s: Vec<&str> = s_names.iter().map(|s| s.as_str()).collect();
        RingContext::with_names(x_names, &s)
    }

    pub fn with_names(x_names: &[&str], s_names: &[&str]) -> Result<Arc<RingContext>> {
        let n = x_names.len();
        if n < 2 {
            return Err(Error::InvalidInput("at least two affine variables are required".into()));
        }
        if s_names.len() != n {
            return Err(Error::InvalidInput("need as many projective as affine variables".into()));
        }
        if 2 * n > MAX_VARS {
            return Err(Error::InvalidInput(alloc::format!("at most {} affine variables are supported", MAX_VARS / 2)));
        }
        let a = Ring::local(x_names)?;
        let mut names: Vec<String> = s_names.iter().map(|s| s.to_string()).collect();
        names.extend(x_names.iter().map(|s| s.to_string()));
        let order = MonomialOrder::new(alloc::vec![
            Block { vars: (0..n).collect(), kind: BlockKind::DegRevLex },
            Block { vars: (n..2 * n).collect(), kind: BlockKind::NegDegRevLex },
        ]);
        let s = Ring::new(names, order)?;
        Ok(Arc::new(RingContext {
            x_names: x_names.iter().map(|s| s.to_string()).collect(),
            s_names: s_names.iter().map(|s| s.to_string()).collect(),
            a,
            s,
        }))
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.x_names.len()
    }

    /// Dimension of the hypersurface.
    pub fn d_x(&self) -> usize {
        self.n() - 1
    }

    pub fn x_names(&self) -> &[String] {
        &self.x_names
    }

    pub fn s_names(&self) -> &[String] {
        &self.s_names
    }

    /// The local ring `A` (affine variables only).
    pub fn a_ring(&self) -> &Arc<Ring> {
        &self.a
    }

    /// The graded ring `S = A[s]`.
    pub fn s_ring(&self) -> &Arc<Ring> {
        &self.s
    }

    /// Embeds a polynomial of `A` into `S`.
    pub fn lift(&self, p: &Poly) -> Result<Poly> {
        if !Arc::ptr_eq(p.ring(), &self.a) && **p.ring() != *self.a {
            return Err(Error::ContextMismatch);
        }
        let n = self.n();
        let map: Vec<Option<usize>> = (0..n).map(|i| Some(n + i)).collect();
        p.map_into(&self.s, &map)
    }

    /// The projective variable `s_i` as an element of `S`.
    pub fn s_var(&self, i: usize) -> Poly {
        Poly::var(&self.s, i)
    }

    /// Splits a monomial of `S` into its `s`-part (in `S` indexing) and its
    /// affine part (in `A` indexing).
    pub fn split(&self, m: &Monomial) -> (Monomial, Monomial) {
        let n = self.n();
        let mut se = [0u32; MAX_VARS];
        let mut xe = [0u32; MAX_VARS];
        for i in 0..n {
            se[i] = m.exp(i);
            xe[i] = m.exp(n + i);
        }
        (Monomial::from_exps(&se[..n]), Monomial::from_exps(&xe[..n]))
    }

    /// True if the polynomial of `S` involves no projective variable.
    pub fn is_affine(&self, p: &Poly) -> bool {
        let n = self.n();
        p.terms().all(|(_, m)| (0..n).all(|i| m.exp(i) == 0))
    }

    /// Moves an affine polynomial of `S` down to `A`.
    pub fn lower(&self, p: &Poly) -> Result<Poly> {
        let n = self.n();
        if !self.is_affine(p) {
            return Err(Error::InvalidInput("polynomial involves projective variables".into()));
        }
        let map: Vec<Option<usize>> = (0..2 * n).map(|i| i.checked_sub(n)).collect();
        p.map_into(&self.a, &map)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_poly;

    #[test]
    fn context_rings() {
        let c = RingContext::new(&["x", "y", "z"]).unwrap();
        assert_eq!(c.n(), 3);
        assert_eq!(c.d_x(), 2);
        assert_eq!(c.s_names(), ["s0", "s1", "s2"]);
        let h = parse_poly(c.a_ring(), "y^2 - x*z^2").unwrap();
        let hs = c.lift(&h).unwrap();
        assert_eq!(hs, parse_poly(c.s_ring(), "y^2 - x*z^2").unwrap());
        assert_eq!(c.lower(&hs).unwrap(), h);
        assert!(RingContext::new(&["x"]).is_err());
        let c = RingContext::new(&["s0", "y"]).unwrap();
        assert_eq!(c.s_names(), ["_s0", "s1"]);
    }

    #[test]
    fn split_monomials() {
        let c = RingContext::new(&["x", "y"]).unwrap();
        let m = Monomial::from_exps(&[1, 2, 3, 4]);
        let (s, x) = c.split(&m);
        assert_eq!(s, Monomial::from_exps(&[1, 2]));
        assert_eq!(x, Monomial::from_exps(&[3, 4]));
    }
}
