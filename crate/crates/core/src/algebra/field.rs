//! Coefficient fields: prime fields `F_p` with a runtime modulus and the
//! rationals.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub const DEFAULT_CHARACTERISTIC: u32 = 32003;

/// A field acting on its own element type. Elements carry no context, the
/// field value does.
pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Integer or `a/b` text; prime-field elements print their signed representative.
    fn render(&self, a: &Self::Elem) -> String;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    /// Residue class of `num / den`; `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: i64, den: i64) -> Option<Self::Elem> {
        let d = self.from_i64(den);
        if self.is_zero(&d) {
            return None;
        }
        Some(self.div(&self.from_i64(num), &d))
    }
}

/// `Z/pZ` for a prime `p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// `None` unless `p` is a prime below `2^31`.
    pub fn new(p: u32) -> Option<Self> {
        (p >= 2 && p < (1 << 31) && is_prime(p)).then_some(PrimeField { p })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    fn pow(&self, mut base: u32, mut exp: u32) -> u32 {
        let mut acc: u64 = 1;
        let p = self.p as u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_CHARACTERISTIC }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 4 {
        return p >= 2;
    }
    if p % 2 == 0 {
        return false;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        self.pow(*a, self.p - 2)
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn render(&self, a: &u32) -> String {
        self.signed(*a).to_string()
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
}

/// The field of rationals, exact and slow; for cross-checks on small inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in Q");
        a.recip()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            let sign = if a.is_negative() { "-" } else { "" };
            format!("{sign}{}/{}", a.numer().abs(), a.denom())
        }
    }
    fn characteristic(&self) -> u64 {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        assert!(PrimeField::new(32003).is_some());
        assert!(PrimeField::new(101).is_some());
        assert!(PrimeField::new(32004).is_none());
        assert!(PrimeField::new(1).is_none());
        let f = PrimeField::new(101).unwrap();
        assert_eq!(f.from_i64(-1), 100);
        assert_eq!(f.signed(100), -1);
        for a in 1..101 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_ratio(1, 2), Some(51));
        assert_eq!(f.from_ratio(1, 101), None);
    }

    #[test]
    fn rationals_render() {
        let q = Rationals;
        assert_eq!(q.render(&q.from_ratio(-3, 6).unwrap()), "-1/2");
        assert_eq!(q.render(&q.from_i64(7)), "7");
    }
}
