//! Points of the projective line over a prime field.

use crate::error::{Error, Result};
use crate::field::{PrimeField, Scalar};
use std::fmt;

/// A point `(α:β)` normalized so the first nonzero coordinate is 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    alpha: Scalar,
    beta: Scalar,
}

impl ProjPoint {
    /// Normalizes a raw pair; fails on `(0, 0)`.
    pub fn new(field: &PrimeField, alpha: Scalar, beta: Scalar) -> Result<Self> {
        let (a, b) = (alpha % field.p(), beta % field.p());
        if a != 0 {
            let inv = field.inv(a);
            Ok(ProjPoint {
                alpha: 1,
                beta: field.mul(b, inv),
            })
        } else if b != 0 {
            Ok(ProjPoint { alpha: 0, beta: 1 })
        } else {
            Err(Error::Invariant("(0, 0) is not a projective point".into()))
        }
    }

    pub fn alpha(&self) -> Scalar {
        self.alpha
    }

    pub fn beta(&self) -> Scalar {
        self.beta
    }

    /// Position in [`projective_line`] order.
    pub fn index(&self, field: &PrimeField) -> usize {
        if self.alpha == 1 {
            self.beta as usize
        } else {
            field.p() as usize
        }
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.alpha, self.beta)
    }
}

/// All `p + 1` points: `(1,0), (1,1), …, (1,p-1), (0,1)`.
pub fn projective_line(field: &PrimeField) -> Vec<ProjPoint> {
    let mut pts: Vec<ProjPoint> = (0..field.p())
        .map(|b| ProjPoint { alpha: 1, beta: b })
        .collect();
    pts.push(ProjPoint { alpha: 0, beta: 1 });
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn line_over_f3() {
        let f = PrimeField::new(3, 2).unwrap();
        let pts: Vec<(u32, u32)> = projective_line(&f)
            .iter()
            .map(|p| (p.alpha(), p.beta()))
            .collect();
        assert_eq!(pts, vec![(1, 0), (1, 1), (1, 2), (0, 1)]);
    }

    #[test]
    fn normalization() {
        let f = PrimeField::new(17, 2).unwrap();
        let pt = ProjPoint::new(&f, 2, 6).unwrap();
        assert_eq!((pt.alpha(), pt.beta()), (1, 3));
        assert_eq!(projective_line(&f).len(), 18);
        assert!(ProjPoint::new(&f, 0, 0).is_err());
    }

    proptest! {
        #[test]
        fn scaling_invariance(a in 0u32..17, b in 0u32..17, c in 1u32..17) {
            prop_assume!(a != 0 || b != 0);
            let f = PrimeField::new(17, 2).unwrap();
            let pt = ProjPoint::new(&f, a, b).unwrap();
            let scaled = ProjPoint::new(&f, f.mul(c, a), f.mul(c, b)).unwrap();
            prop_assert_eq!(pt, scaled);
            prop_assert_eq!(ProjPoint::new(&f, pt.alpha(), pt.beta()).unwrap(), pt);
            prop_assert_eq!(projective_line(&f)[pt.index(&f)], pt);
        }
    }
}
