//! Upward-closed views `[from, ∞)` of a term.

use super::{compare, neighbor, points, Direction, OrderTerm, Point, PointError};
use std::cmp::Ordering;

/// The suborder of all points greater than or equal to `from`.
///
/// The view is never empty (it contains its base). Because it is
/// upward-closed, successors agree with the underlying term; only
/// predecessors at the base are cut off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailView {
    term: OrderTerm,
    from: Point,
}

impl TailView {
    pub fn new(term: OrderTerm, from: Point) -> Result<TailView, PointError> {
        from.check(&term)?;
        Ok(TailView { term, from })
    }

    pub fn term(&self) -> &OrderTerm {
        &self.term
    }

    pub fn base(&self) -> &Point {
        &self.from
    }

    pub fn contains(&self, p: &Point) -> Result<bool, PointError> {
        Ok(compare(&self.term, p, &self.from)? != Ordering::Less)
    }

    pub fn compare(&self, p: &Point, q: &Point) -> Result<Ordering, PointError> {
        for r in [p, q] {
            if !self.contains(r)? {
                return Err(PointError::InvalidAddress);
            }
        }
        compare(&self.term, p, q)
    }

    /// Enumeration of the view: the term enumeration filtered to members.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        points(&self.term).filter(move |p| {
            compare(&self.term, p, &self.from).is_ok_and(|o| o != Ordering::Less)
        })
    }

    pub fn neighbor(&self, p: &Point, dir: Direction) -> Result<Option<Point>, PointError> {
        if !self.contains(p)? {
            return Err(PointError::InvalidAddress);
        }
        let n = neighbor(&self.term, p, dir)?;
        Ok(match dir {
            Direction::Succ => n,
            Direction::Pred => match n {
                Some(q) if self.contains(&q)? => Some(q),
                _ => None,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_of_omega() {
        let v = TailView::new(OrderTerm::Omega, Point::Nat(5)).unwrap();
        assert!(!v.contains(&Point::Nat(4)).unwrap());
        assert!(v.contains(&Point::Nat(5)).unwrap());
        let first: Vec<Point> = v.points().take(3).collect();
        assert_eq!(first, [Point::Nat(5), Point::Nat(6), Point::Nat(7)]);
        assert_eq!(v.neighbor(&Point::Nat(5), Direction::Pred), Ok(None));
        assert_eq!(
            v.neighbor(&Point::Nat(6), Direction::Pred),
            Ok(Some(Point::Nat(5)))
        );
    }

    #[test]
    fn base_is_member() {
        let t = OrderTerm::sum(vec![OrderTerm::Eta, OrderTerm::Finite(1)]);
        let base = Point::in_sum(0, Point::rational(1, 2));
        let v = TailView::new(t, base.clone()).unwrap();
        assert!(v.contains(&base).unwrap());
        assert!(v.contains(&Point::in_sum(1, Point::Index(0))).unwrap());
    }

    /// The tail of eta + 1 from an interior rational is 1 + eta + 1: the
    /// explicit rescaling map witnesses the isomorphism on samples and
    /// neighbor queries agree across it.
    #[test]
    fn tail_of_eta_plus_one_rescales_to_bounded_eta() {
        use num::BigRational;
        let term = OrderTerm::sum(vec![OrderTerm::Eta, OrderTerm::Finite(1)]);
        let base_rat = BigRational::new(1.into(), 2.into());
        let base = Point::in_sum(0, Point::Rat(base_rat.clone()));
        let view = TailView::new(term.clone(), base.clone()).unwrap();
        let image_term = OrderTerm::sum(vec![
            OrderTerm::Finite(1),
            OrderTerm::Eta,
            OrderTerm::Finite(1),
        ]);
        let one = BigRational::from_integer(1.into());
        let map = |p: &Point| -> Point {
            match p {
                Point::InSum(0, sub) => {
                    let Point::Rat(q) = &**sub else { panic!("shape") };
                    if *q == base_rat {
                        Point::in_sum(0, Point::Index(0))
                    } else {
                        let rescaled = (q - &base_rat) / (&one - &base_rat);
                        Point::in_sum(1, Point::Rat(rescaled))
                    }
                }
                Point::InSum(1, _) => Point::in_sum(2, Point::Index(0)),
                _ => panic!("shape"),
            }
        };
        let sample: Vec<Point> = view.points().take(200).collect();
        for p in &sample {
            let ip = map(p);
            assert!(ip.is_valid_for(&image_term));
            for q in &sample {
                assert_eq!(
                    view.compare(p, q),
                    compare(&image_term, &ip, &map(q)),
                    "at {p},{q}"
                );
            }
            for dir in [Direction::Succ, Direction::Pred] {
                let via_view = view.neighbor(p, dir).unwrap().map(|n| map(&n));
                let via_image = neighbor(&image_term, &ip, dir).unwrap();
                assert_eq!(via_view, via_image, "{p} {dir:?}");
            }
        }
        assert_eq!(
            sample
                .iter()
                .min_by(|a, b| view.compare(a, b).unwrap())
                .unwrap(),
            &base
        );
    }
}
