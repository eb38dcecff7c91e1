//! Edge characters: what a region of an order looks like from one side.
//!
//! For a point `p` of a term, the region strictly above `p` has exactly
//! one of four characters, and the classification formulas of the parent
//! module are functions of the characters above and below:
//!
//! * `Empty` — no points there;
//! * `Adjacent` — the region has a least point (an immediate successor);
//! * `OpenDense` — no least point, and some nonempty initial segment of
//!   the region consists of dense points of the ambient order;
//! * `OpenNonDense` — no least point, and every initial segment contains
//!   a point with an immediate neighbor.
//!
//! The recursion below computes the character exactly. Two facts keep it
//! context-free where it matters: points interior to a subterm keep their
//! immediate-neighbor structure under embedding, and any witness segment
//! can be shrunk away from the subterm's own endpoints.

use crate::order::{OrderTerm, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionChar {
    Empty,
    Adjacent,
    OpenDense,
    OpenNonDense,
}

/// How a nonempty order looks from below: bounded by a least point, or
/// open with or without a pred-free / succ-free initial segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeChar {
    Bounded,
    Open { pred_free: bool, succ_free: bool },
}

/// Character of `term` itself viewed as a region from below.
fn low_edge(term: &OrderTerm) -> EdgeChar {
    match term {
        OrderTerm::Finite(_) | OrderTerm::Omega => EdgeChar::Bounded,
        OrderTerm::OmegaStar | OrderTerm::Zeta => EdgeChar::Open {
            pred_free: false,
            succ_free: false,
        },
        OrderTerm::Eta => EdgeChar::Open {
            pred_free: true,
            succ_free: true,
        },
        OrderTerm::Sum(parts) => {
            if parts[0].has_least() {
                EdgeChar::Bounded
            } else {
                low_edge(&parts[0])
            }
        }
        OrderTerm::Replace(major, minor) => {
            if major.has_least() {
                if minor.has_least() {
                    EdgeChar::Bounded
                } else {
                    low_edge(minor)
                }
            } else {
                // the bottom is approached through whole copies of the
                // minor; cross-copy immediate pairs need both minor
                // endpoints and an immediate pair in the major
                let EdgeChar::Open {
                    pred_free: pf,
                    succ_free: sf,
                } = low_edge(major)
                else {
                    unreachable!("major has no least");
                };
                let dense = minor.is_dense_order();
                let both_ends = minor.has_least() && minor.has_greatest();
                EdgeChar::Open {
                    pred_free: dense && (pf || !both_ends),
                    succ_free: dense && (sf || !both_ends),
                }
            }
        }
    }
}

/// Character, seen from below, of a nonempty order placed as a region.
fn bottom_region(term: &OrderTerm) -> RegionChar {
    match low_edge(term) {
        EdgeChar::Bounded => RegionChar::Adjacent,
        EdgeChar::Open {
            pred_free,
            succ_free,
        } => {
            if pred_free && succ_free {
                RegionChar::OpenDense
            } else {
                RegionChar::OpenNonDense
            }
        }
    }
}

/// Character of the region strictly above `p` in `term`, given the
/// character `above` of whatever follows this occurrence of `term`.
fn region_above(term: &OrderTerm, p: &Point, above: RegionChar) -> RegionChar {
    match (term, p) {
        (OrderTerm::Finite(k), Point::Index(i)) => {
            if i + 1 < *k {
                RegionChar::Adjacent
            } else {
                above
            }
        }
        (OrderTerm::Omega, Point::Nat(_)) => RegionChar::Adjacent,
        (OrderTerm::OmegaStar, Point::Nat(n)) => {
            if *n == 0 {
                above
            } else {
                RegionChar::Adjacent
            }
        }
        (OrderTerm::Zeta, Point::Int(_)) => RegionChar::Adjacent,
        (OrderTerm::Eta, Point::Rat(_)) => RegionChar::OpenDense,
        (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
            let after = if j + 1 < parts.len() {
                bottom_region(&parts[j + 1])
            } else {
                above
            };
            region_above(&parts[*j], sub, after)
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            let over_copies = match region_above(major, a, RegionChar::Empty) {
                RegionChar::Empty => above,
                RegionChar::Adjacent => bottom_region(minor),
                RegionChar::OpenDense => {
                    // copies over major-dense positions carry no
                    // cross-copy pairs
                    if minor.is_dense_order() {
                        RegionChar::OpenDense
                    } else {
                        RegionChar::OpenNonDense
                    }
                }
                RegionChar::OpenNonDense => {
                    if !minor.is_dense_order() {
                        RegionChar::OpenNonDense
                    } else if minor.has_least() && minor.has_greatest() {
                        // every initial segment of the major region has an
                        // immediate pair, and both minor endpoints turn it
                        // into a cross-copy immediate pair
                        RegionChar::OpenNonDense
                    } else {
                        RegionChar::OpenDense
                    }
                }
            };
            region_above(minor, b, over_copies)
        }
        _ => panic!("region_above: point does not fit term"),
    }
}

/// Character of the region strictly above `p`.
pub fn region_above_point(term: &OrderTerm, p: &Point) -> RegionChar {
    region_above(term, p, RegionChar::Empty)
}

/// Character of the region strictly below `p`, by mirror symmetry.
/// `Adjacent` then means "has a greatest point", i.e. an immediate
/// predecessor of `p`.
pub fn region_below_point(term: &OrderTerm, p: &Point) -> RegionChar {
    let rev = term.reversed();
    let q = p.mirrored_in(term);
    region_above(&rev, &q, RegionChar::Empty)
}

/// Construct the bound of the dense segment the `OpenDense` character
/// asserts: a point `c > p` with `(p, c)` nonempty and all-dense.
/// Returns `Some` exactly when [`region_above_point`] is `OpenDense`;
/// the tests falsify the character analysis against this witness with
/// exact neighbor queries.
pub fn dense_witness_above(term: &OrderTerm, p: &Point) -> Option<Point> {
    use num::BigRational;
    use num::One;
    match (term, p) {
        (OrderTerm::Eta, Point::Rat(r)) => {
            let half = BigRational::new(1.into(), 2.into());
            Some(Point::Rat((r + BigRational::one()) * half))
        }
        (OrderTerm::Finite(_), _)
        | (OrderTerm::Omega, _)
        | (OrderTerm::OmegaStar, _)
        | (OrderTerm::Zeta, _) => None,
        (OrderTerm::Sum(parts), Point::InSum(j, q)) => {
            match region_above(&parts[*j], q, RegionChar::Empty) {
                RegionChar::OpenDense => {
                    dense_witness_above(&parts[*j], q).map(|w| Point::in_sum(*j, w))
                }
                RegionChar::Empty if j + 1 < parts.len() => {
                    low_dense_witness(&parts[j + 1]).map(|w| Point::in_sum(j + 1, w))
                }
                _ => None,
            }
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            match region_above(minor, b, RegionChar::Empty) {
                RegionChar::OpenDense => {
                    dense_witness_above(minor, b).map(|w| Point::in_replace((**a).clone(), w))
                }
                RegionChar::Empty => match region_above(major, a, RegionChar::Empty) {
                    RegionChar::Empty => None,
                    RegionChar::Adjacent => {
                        let a2 = crate::order::neighbor(major, a, crate::order::Direction::Succ)
                            .ok()??;
                        low_dense_witness(minor).map(|w| Point::in_replace(a2, w))
                    }
                    RegionChar::OpenDense => {
                        if minor.is_dense_order() {
                            let am = dense_witness_above(major, a)?;
                            Some(Point::in_replace(am, safe_minor_point(minor)))
                        } else {
                            None
                        }
                    }
                    RegionChar::OpenNonDense => {
                        if minor.is_dense_order()
                            && !(minor.has_least() && minor.has_greatest())
                        {
                            let am = first_point_above(major, a)?;
                            Some(Point::in_replace(am, safe_minor_point(minor)))
                        } else {
                            None
                        }
                    }
                },
                _ => None,
            }
        }
        _ => None,
    }
}

/// Mirror of [`dense_witness_above`].
pub fn dense_witness_below(term: &OrderTerm, p: &Point) -> Option<Point> {
    let rev = term.reversed();
    let q = p.mirrored_in(term);
    dense_witness_above(&rev, &q).map(|w| w.mirrored_in(&rev))
}

/// A bound `c` with the initial segment of `term` below `c` nonempty and
/// all-dense; defined when the bottom region character is `OpenDense`.
fn low_dense_witness(term: &OrderTerm) -> Option<Point> {
    match term {
        OrderTerm::Eta => Some(Point::rational(1, 2)),
        OrderTerm::Finite(_) | OrderTerm::Omega | OrderTerm::OmegaStar | OrderTerm::Zeta => None,
        OrderTerm::Sum(parts) => low_dense_witness(&parts[0]).map(|w| Point::in_sum(0, w)),
        OrderTerm::Replace(major, minor) => {
            if let Some(a0) = major.least() {
                return low_dense_witness(minor).map(|w| Point::in_replace(a0, w));
            }
            if !minor.is_dense_order() {
                return None;
            }
            if !(minor.has_least() && minor.has_greatest()) {
                // no cross-copy pairs anywhere, any copy prefix is dense
                let a = crate::order::points(major).next()?;
                Some(Point::in_replace(a, safe_minor_point(minor)))
            } else {
                low_dense_witness(major).map(|c| Point::in_replace(c, safe_minor_point(minor)))
            }
        }
    }
}

/// A minor coordinate whose partial copy below it is either empty or
/// provably dense: the least point when one exists, any point otherwise.
fn safe_minor_point(minor: &OrderTerm) -> Point {
    minor
        .least()
        .unwrap_or_else(|| crate::order::points(minor).next().expect("orders are nonempty"))
}

/// Some major point strictly above `a`, found by bounded enumeration.
fn first_point_above(major: &OrderTerm, a: &Point) -> Option<Point> {
    use std::cmp::Ordering;
    crate::order::points(major)
        .take(4096)
        .find(|q| crate::order::compare(major, q, a) == Ok(Ordering::Greater))
}
