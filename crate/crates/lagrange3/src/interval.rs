//! Closed intervals with exact quadratic-surd endpoints.

use std::cmp::Ordering;
use std::fmt;

use crate::{Quad, Rational};

/// `[lo, hi]` with `lo <= hi` under exact comparison. The endpoints may live
/// in different quadratic fields; only comparisons ever mix them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: Quad,
    hi: Quad,
}

impl Interval {
    pub fn new(lo: Quad, hi: Quad) -> Interval {
        assert!(lo.cmp_quad(&hi) != Ordering::Greater, "inverted interval");
        Interval { lo, hi }
    }

    /// Interval from two endpoints in unknown order.
    pub fn from_unordered(a: Quad, b: Quad) -> Interval {
        if a.cmp_quad(&b) == Ordering::Greater {
            Interval { lo: b, hi: a }
        } else {
            Interval { lo: a, hi: b }
        }
    }

    pub fn point(x: Quad) -> Interval {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn lo(&self) -> &Quad {
        &self.lo
    }

    pub fn hi(&self) -> &Quad {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Quad) -> bool {
        self.lo.cmp_quad(x) != Ordering::Greater && self.hi.cmp_quad(x) != Ordering::Less
    }

    pub fn contains_rational(&self, x: &Rational) -> bool {
        self.contains(&Quad::from_rational(x))
    }

    /// Both endpoints strictly above `x`.
    pub fn entirely_above_int(&self, x: i64) -> bool {
        self.lo.cmp_int(x) == Ordering::Greater
    }

    /// Both endpoints at most `x`.
    pub fn entirely_at_most_int(&self, x: i64) -> bool {
        self.hi.cmp_int(x) != Ordering::Greater
    }

    /// Translate by an exact rational.
    pub fn shift(&self, x: &Rational) -> Interval {
        Interval {
            lo: self.lo.add_rational(x),
            hi: self.hi.add_rational(x),
        }
    }

    /// Pointwise sum; requires compatible endpoint fields on each side.
    pub fn add(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.add(&other.lo),
            hi: self.hi.add(&other.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn ordering_and_membership() {
        let lo = Quad::new(1.into(), 1.into(), 2.into(), 3.into()); // (1+sqrt3)/2
        let hi = Quad::new(1.into(), 1.into(), 1.into(), 3.into()); // 1+sqrt3
        let iv = Interval::new(lo.clone(), hi.clone());
        assert!(iv.contains(&lo));
        assert!(iv.contains(&Quad::sqrt_int(BigInt::from(3)))); // 1.732...
        assert!(!iv.contains(&Quad::from_int(3)));
        assert!(iv.entirely_at_most_int(3));
        assert!(iv.entirely_above_int(1));
        assert!(!iv.entirely_above_int(2));
    }

    #[test]
    #[should_panic]
    fn rejects_inverted() {
        Interval::new(Quad::from_int(2), Quad::from_int(1));
    }
}
