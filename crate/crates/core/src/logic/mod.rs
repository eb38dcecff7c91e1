//! First-order point classification on order terms.
//!
//! A point of a linear order is *dense* when it has neither an immediate
//! successor nor an immediate predecessor. An interval is *pure dense*
//! when every point in it is dense. The classifier evaluates five
//! defining formulas:
//!
//! | class       | formula                                                        |
//! |-------------|----------------------------------------------------------------|
//! | `PureDense` | some open neighborhood around `v` is pure dense                 |
//! | `P1`        | not pure dense, some nonempty right-neighborhood is pure dense  |
//! | `P2`        | not pure dense, some nonempty left-neighborhood is pure dense   |
//! | `P0`        | `v` has an immediate successor satisfying `P1`                  |
//! | `P3`        | `v` has an immediate predecessor satisfying `P2`                |
//! | `Phi`       | the simultaneous negation of all five                           |
//!
//! Each formula reduces to the *edge character* of the regions strictly
//! above and strictly below the point: empty, bounded by an immediate
//! neighbor, approached by a pure dense segment, or approached by a
//! segment that always contains a non-dense point. The characters are
//! computed exactly by structural recursion ([`chars`]), not by sampling,
//! so the labels agree with the semantic truth of the formulas in the full
//! infinite order. A bounded sampling cross-check lives in the tests.

pub mod chars;

use crate::order::{neighbor, Direction, OrderTerm, Point, PointError, TailView};
use chars::{region_above_point, region_below_point, RegionChar};
use serde::Serialize;
use thiserror::Error;

/// Classification label. `Other` is returned when more than one defining
/// formula holds — possible on ad-hoc terms, never on class-`T` members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PointClass {
    PureDense,
    P0,
    P1,
    P2,
    P3,
    Phi,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error(transparent)]
    Point(#[from] PointError),
    #[error("expected a stacked-expansion (class-T) term")]
    NotClassT,
}

/// Evaluation scope: a whole term, or a tail view of it. Regions above a
/// point are unaffected by the cut; regions below are cut at the base.
#[derive(Debug, Clone, Copy)]
pub struct Scope<'a> {
    term: &'a OrderTerm,
    base: Option<&'a Point>,
}

impl<'a> Scope<'a> {
    pub fn whole(term: &'a OrderTerm) -> Self {
        Scope { term, base: None }
    }

    pub fn tail(view: &'a TailView) -> Self {
        Scope {
            term: view.term(),
            base: Some(view.base()),
        }
    }

    fn above(&self, p: &Point) -> RegionChar {
        region_above_point(self.term, p)
    }

    fn below(&self, p: &Point) -> RegionChar {
        match self.base {
            Some(b) if b == p => RegionChar::Empty,
            // for members strictly above the base, an immediate
            // predecessor is never cut away and density is unchanged
            _ => region_below_point(self.term, p),
        }
    }
}

/// Classify a point of a whole term.
pub fn classify_point(term: &OrderTerm, p: &Point) -> Result<PointClass, LogicError> {
    p.check(term)?;
    Ok(classify_in(Scope::whole(term), p))
}

/// Classify a point inside a tail view.
pub fn classify_in_tail(view: &TailView, p: &Point) -> Result<PointClass, LogicError> {
    if !view.contains(p)? {
        return Err(LogicError::Point(PointError::InvalidAddress));
    }
    Ok(classify_in(Scope::tail(view), p))
}

fn classify_in(scope: Scope, p: &Point) -> PointClass {
    let up = scope.above(p);
    let down = scope.below(p);

    let pd = up == RegionChar::OpenDense && down == RegionChar::OpenDense;
    let p1 = !pd && up == RegionChar::OpenDense;
    let p2 = !pd && down == RegionChar::OpenDense;
    let p0 = up == RegionChar::Adjacent && {
        let s = neighbor(scope.term, p, Direction::Succ)
            .expect("valid point")
            .expect("adjacent region has a least point");
        scope.above(&s) == RegionChar::OpenDense
    };
    let p3 = down == RegionChar::Adjacent && {
        let s = neighbor(scope.term, p, Direction::Pred)
            .expect("valid point")
            .expect("adjacent region has a greatest point");
        scope.below(&s) == RegionChar::OpenDense
    };

    let hits = [pd, p0, p1, p2, p3];
    match hits.iter().filter(|h| **h).count() {
        0 => PointClass::Phi,
        1 => {
            if pd {
                PointClass::PureDense
            } else if p0 {
                PointClass::P0
            } else if p1 {
                PointClass::P1
            } else if p2 {
                PointClass::P2
            } else {
                PointClass::P3
            }
        }
        _ => PointClass::Other,
    }
}

/// The least separator point of a class-`T` term at or after the view's
/// base. Above it, [`classify_in_tail`] returns `Phi` exactly on the
/// construction separators.
pub fn locate_phi_base(view: &TailView) -> Result<Point, LogicError> {
    // shape check stands in for certificate provenance
    crate::reduce::extract_source(view.term()).map_err(|_| LogicError::NotClassT)?;
    let Point::InReplace(omega, inner) = view.base() else {
        return Err(LogicError::NotClassT);
    };
    let Point::Nat(n) = **omega else {
        return Err(LogicError::NotClassT);
    };
    Ok(match &**inner {
        Point::InSum(1, _) => view.base().clone(),
        _ => Point::in_replace(Point::Nat(n), Point::in_sum(1, Point::Index(0))),
    })
}
