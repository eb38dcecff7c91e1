//! Decidable point comparison.

use super::{OrderTerm, Point, PointError};
use std::cmp::Ordering;

/// Compare two points of `term`. Constant structural depth: one descent
/// along the common address shape.
pub fn compare(term: &OrderTerm, p: &Point, q: &Point) -> Result<Ordering, PointError> {
    match (term, p, q) {
        (OrderTerm::Finite(k), Point::Index(i), Point::Index(j)) if i < k && j < k => {
            Ok(i.cmp(j))
        }
        (OrderTerm::Omega, Point::Nat(m), Point::Nat(n)) => Ok(m.cmp(n)),
        // larger address lies further down
        (OrderTerm::OmegaStar, Point::Nat(m), Point::Nat(n)) => Ok(n.cmp(m)),
        (OrderTerm::Zeta, Point::Int(m), Point::Int(n)) => Ok(m.cmp(n)),
        (OrderTerm::Eta, Point::Rat(r), Point::Rat(s)) => {
            Point::Rat(r.clone()).check(term)?;
            Point::Rat(s.clone()).check(term)?;
            Ok(r.cmp(s))
        }
        (OrderTerm::Sum(parts), Point::InSum(a, ps), Point::InSum(b, qs)) => {
            if *a >= parts.len() || *b >= parts.len() {
                return Err(PointError::InvalidAddress);
            }
            if a != b {
                ps.check(&parts[*a])?;
                qs.check(&parts[*b])?;
                Ok(a.cmp(b))
            } else {
                compare(&parts[*a], ps, qs)
            }
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a1, b1), Point::InReplace(a2, b2)) => {
            match compare(major, a1, a2)? {
                Ordering::Equal => compare(minor, b1, b2),
                major_ord => {
                    b1.check(minor)?;
                    b2.check(minor)?;
                    Ok(major_ord)
                }
            }
        }
        _ => Err(PointError::InvalidAddress),
    }
}
