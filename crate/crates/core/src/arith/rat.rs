//! Exact rationals with an inline `i64` fast path.
//!
//! Almost every coefficient met during a standard basis computation over the
//! test corpus fits in a machine word, so values are kept as a reduced
//! `i64 / i64` pair and promoted to a `BigRational` only on overflow. The
//! representation is canonical: a value that fits in the small form is never
//! stored big, which keeps `Eq`/`Hash` structural.

use alloc::boxed::Box;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    /// numerator, denominator; denominator > 0, gcd = 1
    Small(i64, i64),
    Big(Box<BigRational>),
}

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(Repr);

#[inline]
fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rat {
    pub const ZERO: Rat = Rat(Repr::Small(0, 1));
    pub const ONE: Rat = Rat(Repr::Small(1, 1));

    pub fn from_int(n: i64) -> Rat {
        Rat(Repr::Small(n, 1))
    }

    /// `num / den`; panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::from_i128(num as i128, den as i128)
    }

    pub fn from_big(r: BigRational) -> Rat {
        Rat::normalize_big(r)
    }

    pub fn from_bigint(n: BigInt) -> Rat {
        Rat::normalize_big(BigRational::from_integer(n))
    }

    fn from_i128(num: i128, den: i128) -> Rat {
        if num == 0 {
            return Rat::ZERO;
        }
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        if d != 1 {
            let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
            if g > 1 {
                n /= g;
                d /= g;
            }
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat(Repr::Small(n, d)),
            _ => Rat(Repr::Big(Box::new(BigRational::new_raw(BigInt::from(n), BigInt::from(d))))),
        }
    }

    fn normalize_big(r: BigRational) -> Rat {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            return Rat(Repr::Small(n, d));
        }
        Rat(Repr::Big(Box::new(r)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    /// True when stored inline (numerator and denominator fit in `i64`).
    #[inline]
    pub fn is_small(&self) -> bool {
        matches!(self.0, Repr::Small(..))
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "inverse of zero");
                Rat::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(b) => Rat::normalize_big(b.recip()),
        }
    }

    pub fn pow(&self, e: u32) -> Rat {
        let mut acc = Rat::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Small-integer value, if this is one.
    pub fn as_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::ZERO
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Rat {
        Rat::from_int(n as i64)
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_add(*c) {
                Some(s) => Rat(Repr::Small(s, 1)),
                None => Rat::from_i128(*a as i128 + *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                match a.checked_mul(d).zip(c.checked_mul(b)) {
                    Some((x, y)) => match x.checked_add(y) {
                        Some(num) => Rat::from_i128(num, b * d),
                        None => Rat::normalize_big(self.to_big() + rhs.to_big()),
                    },
                    None => Rat::normalize_big(self.to_big() + rhs.to_big()),
                }
            }
            _ => Rat::normalize_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, 1), Repr::Small(c, 1)) => match a.checked_mul(*c) {
                Some(p) => Rat(Repr::Small(p, 1)),
                None => Rat::from_i128(*a as i128 * *c as i128, 1),
            },
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Rat::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Rat::normalize_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &Rat) -> Rat {
        self * &rhs.inv()
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rat(Repr::Small(m, *d)),
                None => Rat::from_i128(-(*n as i128), *d as i128),
            },
            Repr::Big(b) => Rat::normalize_big(-(**b).clone()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, rhs: Rat) -> Rat {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{}", n),
            Repr::Small(n, d) => write!(f, "{}/{}", n, d),
            Repr::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Least common multiple of the denominators of `values`.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = l.lcm(&v.denom());
    }
    if l.is_zero() {
        BigInt::one()
    } else {
        l
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &a, Rat::ZERO);
        assert_eq!(&a * &Rat::from_int(4), Rat::from_int(2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(3, -6), Rat::new(-1, 2));
        assert_eq!(Rat::new(2, 3).inv(), Rat::new(3, 2));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::from_int(i64::MAX);
        let sum = &big + &big;
        assert_eq!(sum.to_big(), BigRational::from_integer(BigInt::from(i64::MAX) * 2));
        let back = &sum - &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
        let sq = &big * &big;
        assert_eq!(&sq / &big, big);
        assert_eq!(-Rat::from_int(i64::MIN), Rat::from_bigint(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn ordering_and_display() {
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-1, 2) < Rat::ZERO);
        assert_eq!(alloc::format!("{}", Rat::new(-3, 4)), "-3/4");
        assert_eq!(alloc::format!("{}", Rat::from_int(7)), "7");
    }
}
