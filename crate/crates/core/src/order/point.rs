//! Point addresses for order terms.

use super::OrderTerm;
use num::BigRational;
use num::{One, Zero};
use std::fmt;
use thiserror::Error;

/// A finite address identifying one element of an [`OrderTerm`].
///
/// The address mirrors the term shape: an index for `Finite`, a natural
/// for `Omega`/`OmegaStar` (the `OmegaStar` order reads the naturals
/// backwards), an integer for `Zeta`, a rational strictly between 0 and 1
/// for `Eta`, and pairs for `Sum` and `Replace`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Index(u32),
    Nat(u64),
    Int(i64),
    Rat(BigRational),
    InSum(usize, Box<Point>),
    InReplace(Box<Point>, Box<Point>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("point address does not fit the term shape")]
    InvalidAddress,
}

impl Point {
    pub fn in_sum(part: usize, sub: Point) -> Point {
        Point::InSum(part, Box::new(sub))
    }

    pub fn in_replace(major: Point, minor: Point) -> Point {
        Point::InReplace(Box::new(major), Box::new(minor))
    }

    pub fn rational(num: i64, den: i64) -> Point {
        Point::Rat(BigRational::new(num.into(), den.into()))
    }

    /// Whether the address is a valid point of `term`.
    pub fn is_valid_for(&self, term: &OrderTerm) -> bool {
        match (term, self) {
            (OrderTerm::Finite(k), Point::Index(i)) => i < k,
            (OrderTerm::Omega, Point::Nat(_)) => true,
            (OrderTerm::OmegaStar, Point::Nat(_)) => true,
            (OrderTerm::Zeta, Point::Int(_)) => true,
            (OrderTerm::Eta, Point::Rat(r)) => r > &BigRational::zero() && r < &BigRational::one(),
            (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
                *j < parts.len() && sub.is_valid_for(&parts[*j])
            }
            (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
                a.is_valid_for(major) && b.is_valid_for(minor)
            }
            _ => false,
        }
    }

    pub fn check(&self, term: &OrderTerm) -> Result<(), PointError> {
        if self.is_valid_for(term) {
            Ok(())
        } else {
            Err(PointError::InvalidAddress)
        }
    }

    /// The same point inside `term.reversed()`.
    pub fn mirrored_in(&self, term: &OrderTerm) -> Point {
        match (term, self) {
            (OrderTerm::Finite(k), Point::Index(i)) => Point::Index(k - 1 - i),
            (OrderTerm::Omega, Point::Nat(n)) | (OrderTerm::OmegaStar, Point::Nat(n)) => {
                Point::Nat(*n)
            }
            (OrderTerm::Zeta, Point::Int(i)) => Point::Int(-i),
            (OrderTerm::Eta, Point::Rat(r)) => Point::Rat(BigRational::one() - r),
            (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
                Point::in_sum(parts.len() - 1 - j, sub.mirrored_in(&parts[*j]))
            }
            (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
                Point::in_replace(a.mirrored_in(major), b.mirrored_in(minor))
            }
            _ => panic!("mirrored_in: point does not fit term"),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Index(i) => write!(f, "{i}"),
            Point::Nat(n) => write!(f, "{n}"),
            Point::Int(i) => write!(f, "{i}"),
            Point::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Point::InSum(j, sub) => write!(f, "({j},{sub})"),
            Point::InReplace(a, b) => write!(f, "({a},{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity() {
        let t = OrderTerm::sum(vec![OrderTerm::Finite(2), OrderTerm::Eta]);
        assert!(Point::in_sum(0, Point::Index(1)).is_valid_for(&t));
        assert!(!Point::in_sum(0, Point::Index(2)).is_valid_for(&t));
        assert!(Point::in_sum(1, Point::rational(1, 2)).is_valid_for(&t));
        assert!(!Point::in_sum(1, Point::rational(3, 2)).is_valid_for(&t));
        assert!(!Point::Nat(0).is_valid_for(&t));
    }

    #[test]
    fn mirror_is_involutive() {
        let t = OrderTerm::sum(vec![OrderTerm::Finite(3), OrderTerm::Eta, OrderTerm::Zeta]);
        let p = Point::in_sum(1, Point::rational(1, 3));
        let r = t.reversed();
        assert_eq!(p.mirrored_in(&t).mirrored_in(&r), p);
        let q = Point::in_sum(2, Point::Int(-4));
        assert_eq!(q.mirrored_in(&t), Point::in_sum(0, Point::Int(4)));
    }
}
