use core::fmt;

/// Hard cap on the number of variables of a ring: exponent vectors are
/// stored inline so that monomials are `Copy`.
pub const MAX_VARS: usize = 16;

/// A power product over the variables of a ring. Which variables belong to
/// which block (affine `x`, projective `s`, auxiliary) is recorded by the ring,
/// not by the monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS], deg: 0 };

    pub fn from_exps(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        for (i, &e) in exps.iter().enumerate() {
            let e = u16::try_from(e).expect("exponent overflow");
            m.exps[i] = e;
            m.deg += e as u32;
        }
        m
    }

    pub fn var(i: usize, e: u32) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = u16::try_from(e).expect("exponent overflow");
        m.deg = e;
        m
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    #[inline]
    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.exps
    }

    #[inline]
    pub fn deg(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Sum of exponents over `vars`.
    #[inline]
    pub fn deg_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v] as u32).sum()
    }

    pub fn set_exp(&mut self, i: usize, e: u32) {
        let e = u16::try_from(e).expect("exponent overflow");
        self.deg = self.deg - self.exps[i] as u32 + e as u32;
        self.exps[i] = e;
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].checked_add(other.exps[i]).expect("exponent overflow");
        }
        m.deg = self.deg + other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.deg > other.deg {
            return false;
        }
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut m = *other;
        for i in 0..MAX_VARS {
            m.exps[i] -= self.exps[i];
        }
        m.deg = other.deg - self.deg;
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::ONE;
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit signature used to reject divisibility quickly: if `a | b` then
    /// `a.sev() & !b.sev() == 0`.
    #[inline]
    pub fn sev(&self) -> u64 {
        let mut s = 0u64;
        for i in 0..MAX_VARS {
            let e = self.exps[i];
            // four bits per variable: e >= 1, 2, 3, 5
            let bits = (e >= 1) as u64 | ((e >= 2) as u64) << 1 | ((e >= 3) as u64) << 2 | ((e >= 5) as u64) << 3;
            s |= bits << (4 * i);
        }
        s
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.exps.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        write!(f, "{:?}", &self.exps[..last])
    }
}
