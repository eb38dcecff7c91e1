//! The order `X`, the expansion map `f`, the stacking map `g`, and the
//! class of stacked images where tail isomorphism and isomorphism agree.
//!
//! `f` expands every point of its argument into a copy of `X`; `g` stacks
//! ω copies of its argument with a separating point after each copy. The
//! composite `g(f(L))` is the class-`T` construction: its separators are
//! recoverable from the bare order (see [`crate::logic`]), which is what
//! makes tail isomorphism on the image class decide isomorphism of the
//! sources.

mod tailiso;

pub use tailiso::{tail_iso_from, tail_iso_from_with, tail_iso_t, TailIsoError};

use crate::order::{OrderTerm, Point, PointError};
use thiserror::Error;

/// The five-block order `{0} ∪ [1,2]_Q ∪ {3}`: a point, an endpoint, a
/// dense open interior, an endpoint, a point.
pub fn make_x() -> OrderTerm {
    OrderTerm::sum(vec![
        OrderTerm::Finite(1),
        OrderTerm::Finite(1),
        OrderTerm::Eta,
        OrderTerm::Finite(1),
        OrderTerm::Finite(1),
    ])
}

/// Expand every point of `order` into a copy of [`make_x`].
pub fn apply_f(order: &OrderTerm) -> OrderTerm {
    OrderTerm::replace(order.clone(), make_x())
}

/// Stack ω copies of `order`, each followed by one separator point.
pub fn apply_g(order: &OrderTerm) -> OrderTerm {
    OrderTerm::replace(
        OrderTerm::Omega,
        OrderTerm::sum(vec![order.clone(), OrderTerm::Finite(1)]),
    )
}

/// A `g(f(L))` image together with its source.
///
/// Every point of the result carries exactly one construction role,
/// recoverable from its address; see [`ClassTCertificate::provenance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTCertificate {
    pub source: OrderTerm,
    pub result: OrderTerm,
}

/// Construction role of one point of a `g(f(L))` image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    /// Separator between consecutive stacked copies.
    Separator { omega_index: u64 },
    /// A point inside the expanded copy of the source.
    Expanded {
        omega_index: u64,
        source_coord: Point,
        x_coord: Point,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassTError {
    #[error("term is not of the stacked-expansion shape")]
    NotClassT,
    #[error(transparent)]
    Point(#[from] PointError),
}

/// Form `g(f(source))` with provenance.
pub fn make_t(source: &OrderTerm) -> ClassTCertificate {
    ClassTCertificate {
        source: source.clone(),
        result: apply_g(&apply_f(source)),
    }
}

/// Recover the source of a class-`T` term from its syntactic shape.
///
/// This is the label-free route: it inspects the result term only, and
/// checks that the expansion block really is a copy of `X` per source
/// point.
pub fn extract_source(result: &OrderTerm) -> Result<OrderTerm, ClassTError> {
    let OrderTerm::Replace(major, block) = result else {
        return Err(ClassTError::NotClassT);
    };
    if **major != OrderTerm::Omega {
        return Err(ClassTError::NotClassT);
    }
    let OrderTerm::Sum(parts) = &**block else {
        return Err(ClassTError::NotClassT);
    };
    if parts.len() != 2 || parts[1] != OrderTerm::Finite(1) {
        return Err(ClassTError::NotClassT);
    }
    let OrderTerm::Replace(source, x) = &parts[0] else {
        return Err(ClassTError::NotClassT);
    };
    if **x != make_x() {
        return Err(ClassTError::NotClassT);
    }
    Ok((**source).clone())
}

impl ClassTCertificate {
    /// The construction role of `point`. Total on valid points.
    pub fn provenance(&self, point: &Point) -> Result<Role, ClassTError> {
        point.check(&self.result)?;
        let Point::InReplace(omega, inner) = point else {
            return Err(ClassTError::NotClassT);
        };
        let Point::Nat(n) = **omega else {
            return Err(ClassTError::NotClassT);
        };
        match &**inner {
            Point::InSum(1, _) => Ok(Role::Separator { omega_index: n }),
            Point::InSum(0, expanded) => {
                let Point::InReplace(src, x) = &**expanded else {
                    return Err(ClassTError::NotClassT);
                };
                Ok(Role::Expanded {
                    omega_index: n,
                    source_coord: (**src).clone(),
                    x_coord: (**x).clone(),
                })
            }
            _ => Err(ClassTError::NotClassT),
        }
    }

    /// The separator point at stack index `n`.
    pub fn separator(&self, n: u64) -> Point {
        Point::in_replace(Point::Nat(n), Point::in_sum(1, Point::Index(0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{compare, neighbor, Direction};
    use std::cmp::Ordering;

    #[test]
    fn x_shape() {
        let x = make_x();
        assert_eq!(x.bounds(), (true, true));
        // the predecessor of the last point is the right endpoint of the
        // dense block
        let last = x.greatest().unwrap();
        let prev = neighbor(&x, &last, Direction::Pred).unwrap().unwrap();
        assert_eq!(prev, Point::in_sum(3, Point::Index(0)));
    }

    #[test]
    fn t_is_the_composite() {
        let t = make_t(&OrderTerm::Finite(1));
        assert_eq!(
            t.result,
            OrderTerm::replace(
                OrderTerm::Omega,
                OrderTerm::sum(vec![
                    OrderTerm::replace(OrderTerm::Finite(1), make_x()),
                    OrderTerm::Finite(1)
                ])
            )
        );
        assert_eq!(extract_source(&t.result).unwrap(), OrderTerm::Finite(1));
    }

    #[test]
    fn provenance_is_total_and_split() {
        let t = make_t(&OrderTerm::Eta);
        let sep = t.separator(3);
        assert_eq!(t.provenance(&sep).unwrap(), Role::Separator { omega_index: 3 });
        let inner = Point::in_replace(
            Point::Nat(0),
            Point::in_sum(
                0,
                Point::in_replace(Point::rational(1, 2), Point::in_sum(2, Point::rational(1, 3))),
            ),
        );
        match t.provenance(&inner).unwrap() {
            Role::Expanded { omega_index: 0, .. } => {}
            other => panic!("unexpected role {other:?}"),
        }
    }

    #[test]
    fn separators_sit_in_omega_order() {
        let t = make_t(&OrderTerm::Eta);
        for n in 0..5u64 {
            let a = t.separator(n);
            let b = t.separator(n + 1);
            assert_eq!(compare(&t.result, &a, &b), Ok(Ordering::Less));
        }
    }

    #[test]
    fn g_of_dense_has_no_least() {
        assert_eq!(apply_g(&OrderTerm::Eta).bounds(), (false, false));
        assert_eq!(apply_g(&OrderTerm::Finite(1)).bounds(), (true, false));
    }

    #[test]
    fn single_point_images_absorb() {
        // one expanded point is a copy of X; stacking singleton blocks
        // relabels the naturals
        assert!(crate::iso::decide_iso(&apply_f(&OrderTerm::Finite(1)), &make_x()).is_iso());
        assert!(crate::iso::decide_iso(&apply_g(&OrderTerm::Finite(1)), &OrderTerm::Omega).is_iso());
    }
}
