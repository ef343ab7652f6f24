//! Arithmetic in the prime field `F_p`.
//!
//! Scalars are plain `u32` values holding canonical residues in `[0, p)`.
//! The field handle is `Copy` and carries only the modulus, so it can be
//! stored freely inside matrices and algebras.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// A scalar of some prime field, always a canonical residue.
pub type Scalar = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Builds `F_p`, requiring a primitive `n`-th root of unity to exist.
    pub fn new(p: u64, n: u64) -> Result<Self> {
        if !is_prime(p) || p >= (1 << 31) {
            return Err(Error::NotPrime(p));
        }
        if n == 0 || !(p - 1).is_multiple_of(n) {
            return Err(Error::NoRootOfUnity { p, n });
        }
        Ok(PrimeField { p: p as u32 })
    }

    /// The default field for the order-`n` family: 17 for `n = 2`, 163 for
    /// `n = 3`, otherwise the smallest prime above `n^4` congruent to 1 mod `n`.
    pub fn default_for(n: u64) -> Result<Self> {
        if n == 3 {
            return PrimeField::new(163, 3);
        }
        let mut p = n.pow(4) + 1;
        loop {
            if is_prime(p) && (p - 1).is_multiple_of(n) {
                return PrimeField::new(p, n);
            }
            p += 1;
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a as u64 + b as u64;
        (if s >= self.p as u64 {
            s - self.p as u64
        } else {
            s
        }) as u32
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(&self, a: Scalar, b: Scalar, c: Scalar) -> Scalar {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(&self, a: Scalar, mut e: u64) -> Scalar {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Reduces an arbitrary integer to its canonical residue.
    pub fn from_i64(&self, a: i64) -> Scalar {
        a.rem_euclid(self.p as i64) as u32
    }

    /// Signed representative in `(-p/2, p/2]`, handy for display.
    pub fn to_signed(&self, a: Scalar) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// The smallest residue of exact multiplicative order `n`.
    pub fn primitive_root_of_unity(&self, n: u64) -> Result<Scalar> {
        let p = self.p as u64;
        if n == 0 || !(p - 1).is_multiple_of(n) {
            return Err(Error::NoRootOfUnity { p, n });
        }
        (1..self.p)
            .find(|&a| self.pow(a, n) == 1 && (1..n).all(|m| self.pow(a, m) != 1))
            .ok_or(Error::NoRootOfUnity { p, n })
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        0..self.p
    }
}

/// Free-function form of [`PrimeField::new`].
pub fn make_prime_field(p: u64, n: u64) -> Result<PrimeField> {
    PrimeField::new(p, n)
}

/// Free-function form of [`PrimeField::primitive_root_of_unity`].
pub fn primitive_root_of_unity(field: &PrimeField, n: u64) -> Result<Scalar> {
    field.primitive_root_of_unity(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn construction() {
        let f = make_prime_field(17, 2).unwrap();
        assert_eq!(f.primitive_root_of_unity(2).unwrap(), 16);
        assert!(make_prime_field(163, 3).is_ok());
        assert_eq!(
            make_prime_field(5, 3),
            Err(Error::NoRootOfUnity { p: 5, n: 3 })
        );
        assert_eq!(make_prime_field(15, 2), Err(Error::NotPrime(15)));
    }

    #[test]
    fn roots_of_unity() {
        // brute force: 3^3 = 27 = 1 mod 13, and 3 is the smallest residue of order 3
        let f13 = make_prime_field(13, 3).unwrap();
        let brute = (1..13u32)
            .find(|&a| (a * a * a) % 13 == 1 && a != 1)
            .unwrap();
        assert_eq!(brute, 3);
        assert_eq!(f13.primitive_root_of_unity(3).unwrap(), brute);
        let f17 = make_prime_field(17, 2).unwrap();
        assert!(matches!(
            f17.primitive_root_of_unity(3),
            Err(Error::NoRootOfUnity { .. })
        ));
    }

    #[test]
    fn defaults() {
        assert_eq!(PrimeField::default_for(2).unwrap().p(), 17);
        assert_eq!(PrimeField::default_for(3).unwrap().p(), 163);
    }

    proptest! {
        #[test]
        fn field_axioms(a in 0u32..163, b in 0u32..163, c in 0u32..163) {
            let f = make_prime_field(163, 3).unwrap();
            prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            prop_assert_eq!(f.add(a, f.neg(a)), 0);
            prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
            if a != 0 {
                prop_assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }
}
