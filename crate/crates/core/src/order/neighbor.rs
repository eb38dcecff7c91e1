//! Immediate successor and predecessor queries.

use super::{OrderTerm, Point, PointError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Succ,
    Pred,
}

/// The immediate neighbor of `p` in `term`, if one exists. When a point is
/// returned, no point of the order lies strictly between it and `p`.
pub fn neighbor(term: &OrderTerm, p: &Point, dir: Direction) -> Result<Option<Point>, PointError> {
    p.check(term)?;
    Ok(match dir {
        Direction::Succ => succ(term, p),
        Direction::Pred => pred(term, p),
    })
}

fn is_greatest(term: &OrderTerm, p: &Point) -> bool {
    match (term, p) {
        (OrderTerm::Finite(k), Point::Index(i)) => *i == k - 1,
        (OrderTerm::Omega, _) => false,
        (OrderTerm::OmegaStar, Point::Nat(n)) => *n == 0,
        (OrderTerm::Zeta, _) | (OrderTerm::Eta, _) => false,
        (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
            *j == parts.len() - 1 && is_greatest(&parts[*j], sub)
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            is_greatest(major, a) && is_greatest(minor, b)
        }
        _ => false,
    }
}

fn is_least(term: &OrderTerm, p: &Point) -> bool {
    match (term, p) {
        (OrderTerm::Finite(_), Point::Index(i)) => *i == 0,
        (OrderTerm::Omega, Point::Nat(n)) => *n == 0,
        (OrderTerm::OmegaStar, _) => false,
        (OrderTerm::Zeta, _) | (OrderTerm::Eta, _) => false,
        (OrderTerm::Sum(parts), Point::InSum(j, sub)) => *j == 0 && is_least(&parts[*j], sub),
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            is_least(major, a) && is_least(minor, b)
        }
        _ => false,
    }
}

fn succ(term: &OrderTerm, p: &Point) -> Option<Point> {
    match (term, p) {
        (OrderTerm::Finite(k), Point::Index(i)) => (i + 1 < *k).then(|| Point::Index(i + 1)),
        (OrderTerm::Omega, Point::Nat(n)) => Some(Point::Nat(n + 1)),
        (OrderTerm::OmegaStar, Point::Nat(n)) => (*n > 0).then(|| Point::Nat(n - 1)),
        (OrderTerm::Zeta, Point::Int(i)) => Some(Point::Int(i + 1)),
        (OrderTerm::Eta, _) => None,
        (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
            if let Some(s) = succ(&parts[*j], sub) {
                Some(Point::in_sum(*j, s))
            } else if is_greatest(&parts[*j], sub) && j + 1 < parts.len() {
                // the next part's least element, when it has one
                parts[j + 1].least().map(|l| Point::in_sum(j + 1, l))
            } else {
                None
            }
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            if let Some(s) = succ(minor, b) {
                Some(Point::in_replace((**a).clone(), s))
            } else if is_greatest(minor, b) {
                match (succ(major, a), minor.least()) {
                    (Some(a2), Some(l)) => Some(Point::in_replace(a2, l)),
                    _ => None,
                }
            } else {
                None
            }
        }
        _ => unreachable!("validated above"),
    }
}

fn pred(term: &OrderTerm, p: &Point) -> Option<Point> {
    match (term, p) {
        (OrderTerm::Finite(_), Point::Index(i)) => (*i > 0).then(|| Point::Index(i - 1)),
        (OrderTerm::Omega, Point::Nat(n)) => (*n > 0).then(|| Point::Nat(n - 1)),
        (OrderTerm::OmegaStar, Point::Nat(n)) => Some(Point::Nat(n + 1)),
        (OrderTerm::Zeta, Point::Int(i)) => Some(Point::Int(i - 1)),
        (OrderTerm::Eta, _) => None,
        (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
            if let Some(s) = pred(&parts[*j], sub) {
                Some(Point::in_sum(*j, s))
            } else if is_least(&parts[*j], sub) && *j > 0 {
                parts[j - 1].greatest().map(|g| Point::in_sum(j - 1, g))
            } else {
                None
            }
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            if let Some(s) = pred(minor, b) {
                Some(Point::in_replace((**a).clone(), s))
            } else if is_least(minor, b) {
                match (pred(major, a), minor.greatest()) {
                    (Some(a2), Some(g)) => Some(Point::in_replace(a2, g)),
                    _ => None,
                }
            } else {
                None
            }
        }
        _ => unreachable!("validated above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_successor() {
        assert_eq!(
            neighbor(&OrderTerm::Omega, &Point::Nat(3), Direction::Succ),
            Ok(Some(Point::Nat(4)))
        );
        assert_eq!(
            neighbor(&OrderTerm::Omega, &Point::Nat(0), Direction::Pred),
            Ok(None)
        );
    }

    #[test]
    fn density_gives_no_neighbor() {
        assert_eq!(
            neighbor(&OrderTerm::Eta, &Point::rational(1, 2), Direction::Succ),
            Ok(None)
        );
    }

    #[test]
    fn across_sum_boundary() {
        let t = OrderTerm::sum(vec![OrderTerm::Finite(1), OrderTerm::Finite(1), OrderTerm::Eta]);
        let first = Point::in_sum(0, Point::Index(0));
        assert_eq!(
            neighbor(&t, &first, Direction::Succ),
            Ok(Some(Point::in_sum(1, Point::Index(0))))
        );
        // boundary into a part without a least element
        let second = Point::in_sum(1, Point::Index(0));
        assert_eq!(neighbor(&t, &second, Direction::Succ), Ok(None));
    }

    #[test]
    fn across_replace_boundary() {
        let t = OrderTerm::replace(OrderTerm::Omega, OrderTerm::Finite(2));
        let top = Point::in_replace(Point::Nat(0), Point::Index(1));
        assert_eq!(
            neighbor(&t, &top, Direction::Succ),
            Ok(Some(Point::in_replace(Point::Nat(1), Point::Index(0))))
        );
        let t2 = OrderTerm::replace(OrderTerm::Omega, OrderTerm::Eta);
        let q = Point::in_replace(Point::Nat(0), Point::rational(1, 2));
        assert_eq!(neighbor(&t2, &q, Direction::Succ), Ok(None));
    }
}
