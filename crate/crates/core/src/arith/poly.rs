use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::monomial::Monomial;
use super::rat::Rat;
use super::ring::Ring;
use super::vector::{Term, Vector};
use crate::error::{Error, Result};

/// A sparse polynomial with rational coefficients, terms sorted descending
/// under its ring's order.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<Ring>,
    v: Vector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Exact sum, difference or product of two polynomials of the same ring.
pub fn poly_arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly> {
    if !a.same_ring(b) {
        return Err(Error::ContextMismatch);
    }
    let ord = a.ring.term_order();
    let v = match op {
        ArithOp::Add => a.v.add(&b.v, ord),
        ArithOp::Sub => a.v.sub(&b.v, ord),
        ArithOp::Mul => a.v.mul_poly(&b.v, ord),
    };
    Ok(Poly { ring: a.ring.clone(), v })
}

impl Poly {
    pub fn zero(ring: &Arc<Ring>) -> Poly {
        Poly { ring: ring.clone(), v: Vector::zero() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Rat) -> Poly {
        Poly { ring: ring.clone(), v: Vector::monomial(c, Monomial::ONE, 0) }
    }

    pub fn one(ring: &Arc<Ring>) -> Poly {
        Poly::constant(ring, Rat::ONE)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Poly {
        assert!(i < ring.nvars());
        Poly { ring: ring.clone(), v: Vector::monomial(Rat::ONE, Monomial::var(i, 1), 0) }
    }

    pub fn var_named(ring: &Arc<Ring>, name: &str) -> Result<Poly> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Poly::var(ring, i))
    }

    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Rat, Monomial)>) -> Poly {
        let terms: Vec<Term> = terms.into_iter().map(|(c, m)| Term::new(c, m, 0)).collect();
        Poly { ring: ring.clone(), v: Vector::from_terms(terms, ring.term_order()) }
    }

    /// Wraps a rank-one vector; component indices are forced to zero.
    pub fn from_vector(ring: &Arc<Ring>, v: Vector) -> Poly {
        let terms: Vec<Term> = v.into_terms().into_iter().map(|t| Term { comp: 0, ..t }).collect();
        Poly { ring: ring.clone(), v: Vector::from_terms(terms, ring.term_order()) }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn same_ring(&self, other: &Poly) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    pub fn as_vector(&self) -> &Vector {
        &self.v
    }

    pub fn into_vector(self) -> Vector {
        self.v
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Rat, &Monomial)> {
        self.v.terms().iter().map(|t| (&t.coeff, &t.mono))
    }

    pub fn nterms(&self) -> usize {
        self.v.len()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.v.terms().first().map(|t| t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.v.terms().first().map(|t| &t.coeff)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rat {
        self.v.terms().iter().find(|t| t.mono.is_one()).map(|t| t.coeff.clone()).unwrap_or(Rat::ZERO)
    }

    pub fn is_constant(&self) -> bool {
        self.v.terms().iter().all(|t| t.mono.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.v.terms().iter().map(|t| t.mono.deg()).max()
    }

    /// Degree in the variables `vars` of every term, if all terms agree.
    pub fn homogeneous_degree_in(&self, vars: &[usize]) -> Option<u32> {
        let mut it = self.v.terms().iter().map(|t| t.mono.deg_in(vars));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// True when no term involves a variable outside `vars`.
    pub fn only_involves(&self, vars: &[usize]) -> bool {
        self.v.terms().iter().all(|t| (0..self.ring.nvars()).all(|i| vars.contains(&i) || t.mono.exp(i) == 0))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly { ring: self.ring.clone(), v: self.v.scale(c) }
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rat::ONE)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to variable index `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        let terms = self.v.terms().iter().filter(|t| t.mono.exp(var) > 0).map(|t| {
            let e = t.mono.exp(var);
            let mut m = t.mono;
            m.set_exp(var, e - 1);
            (&t.coeff * &Rat::from_int(e as i64), m)
        });
        Poly::from_terms(&self.ring, terms.collect::<Vec<_>>())
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn partial_derivative(&self, name: &str) -> Result<Poly> {
        let i = self.ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(self.derivative(i))
    }

    /// Substitutes polynomials (all in `target`) for every variable.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars());
        let mut out = Poly::zero(target);
        // cache powers per variable
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| alloc::vec![Poly::one(target), p.clone()]).collect();
        for (c, m) in self.terms() {
            let mut t = Poly::constant(target, c.clone());
            for (i, pw) in powers.iter_mut().enumerate() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while pw.len() <= e {
                    let next = &pw[pw.len() - 1] * &pw[1];
                    pw.push(next);
                }
                t = &t * &pw[e];
            }
            out = &out + &t;
        }
        out
    }

    /// Moves the polynomial into `target` renaming variable `i` to
    /// `var_map[i]`; fails if a variable in use has no image.
    pub fn map_into(&self, target: &Arc<Ring>, var_map: &[Option<usize>]) -> Result<Poly> {
        let mut terms = Vec::with_capacity(self.nterms());
        for (c, m) in self.terms() {
            let mut exps = [0u32; super::monomial::MAX_VARS];
            for i in 0..self.ring.nvars() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                match var_map.get(i).copied().flatten() {
                    Some(j) => exps[j] += e,
                    None => return Err(Error::InvalidInput(alloc::format!("variable `{}` has no image", self.ring.names()[i]))),
                }
            }
            terms.push((c.clone(), Monomial::from_exps(&exps[..target.nvars()])));
        }
        Ok(Poly::from_terms(target, terms))
    }

    /// Moves the polynomial into `target`, matching variables by name.
    pub fn map_by_name(&self, target: &Arc<Ring>) -> Result<Poly> {
        let map: Vec<Option<usize>> = self.ring.names().iter().map(|n| target.var_index(n)).collect();
        self.map_into(target, &map)
    }

    /// Value at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::ZERO;
        for (c, m) in self.terms() {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn to_string_with_names(&self) -> String {
        alloc::format!("{}", self)
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Poly) -> bool {
        self.same_ring(other) && self.v == other.v
    }
}

impl Eq for Poly {}

macro_rules! poly_op {
    ($tr:ident, $m:ident, $op:expr) => {
        impl<'a> core::ops::$tr<&'a Poly> for &'a Poly {
            type Output = Poly;
            /// Panics if the operands live in different rings; use
            /// [`poly_arith`] for a fallible version.
            fn $m(self, rhs: &Poly) -> Poly {
                poly_arith(self, rhs, $op).expect("polynomials from different rings")
            }
        }
        impl core::ops::$tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                poly_arith(&self, &rhs, $op).expect("polynomials from different rings")
            }
        }
    };
}
poly_op!(Add, add, ArithOp::Add);
poly_op!(Sub, sub, ArithOp::Sub);
poly_op!(Mul, mul, ArithOp::Mul);

impl core::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// Writes a monomial as `x^2*y`; empty for the constant monomial.
pub fn fmt_monomial(m: &Monomial, names: &[String]) -> String {
    let mut s = String::new();
    for (i, name) in names.iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(name);
        if e > 1 {
            s.push_str(&alloc::format!("^{}", e));
        }
    }
    s
}

/// Formats rank-one vector terms with the given variable names.
pub fn fmt_terms(terms: &[Term], names: &[String], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, t) in terms.iter().enumerate() {
        let neg = t.coeff.signum() < 0;
        let abs = t.coeff.abs();
        if k == 0 {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mono = fmt_monomial(&t.mono, names);
        if mono.is_empty() {
            write!(f, "{}", abs)?;
        } else if abs.is_one() {
            write!(f, "{}", mono)?;
        } else {
            write!(f, "{}*{}", abs, mono)?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(self.v.terms(), self.ring.names(), f)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}
