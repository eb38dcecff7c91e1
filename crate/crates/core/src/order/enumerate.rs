//! Enumeration of term points and the inverse index.
//!
//! The enumeration scheme is fixed so that golden tests stay stable:
//!
//! * `Finite`, `Omega`: ascending index.
//! * `OmegaStar`: ascending address (descending in the order).
//! * `Zeta`: the zigzag 0, 1, -1, 2, -2, ...
//! * `Eta`: reduced fractions by ascending denominator, then ascending
//!   numerator: 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
//! * `Sum`: round-robin over the parts, skipping exhausted parts.
//! * `Replace`: anti-diagonal walk over (major index, minor index) pairs,
//!   major index ascending within a diagonal, skipping out-of-range pairs.

use super::{Cardinality, OrderTerm, Point, PointError};
use num::integer::gcd;
use num::BigRational;

/// Iterator over every point of `term`, in enumeration order.
pub fn points(term: &OrderTerm) -> PointIter {
    PointIter::new(term)
}

/// The `i`-th point of `term`, or `None` when the term is finite with at
/// most `i` points.
pub fn enumerate(term: &OrderTerm, i: u64) -> Option<Point> {
    points(term).nth(i as usize)
}

/// Inverse of [`enumerate`]: the index at which `p` appears.
pub fn index_of(term: &OrderTerm, p: &Point) -> Result<u128, PointError> {
    p.check(term)?;
    Ok(index_of_unchecked(term, p))
}

fn index_of_unchecked(term: &OrderTerm, p: &Point) -> u128 {
    match (term, p) {
        (OrderTerm::Finite(_), Point::Index(i)) => u128::from(*i),
        (OrderTerm::Omega, Point::Nat(n)) | (OrderTerm::OmegaStar, Point::Nat(n)) => {
            u128::from(*n)
        }
        (OrderTerm::Zeta, Point::Int(i)) => {
            if *i == 0 {
                0
            } else if *i > 0 {
                2 * (*i as u128) - 1
            } else {
                2 * (i.unsigned_abs() as u128)
            }
        }
        (OrderTerm::Eta, Point::Rat(r)) => eta_index(r),
        (OrderTerm::Sum(parts), Point::InSum(j, sub)) => {
            let s = index_of_unchecked(&parts[*j], sub);
            // points emitted in rounds before s, plus earlier parts still
            // alive in round s
            let mut count: u128 = 0;
            for part in parts {
                count += match part.size() {
                    Cardinality::Finite(n) => n.min(s),
                    Cardinality::Infinite => s,
                };
            }
            for part in &parts[..*j] {
                if part.size().exceeds(s) {
                    count += 1;
                }
            }
            count
        }
        (OrderTerm::Replace(major, minor), Point::InReplace(a, b)) => {
            let ia = index_of_unchecked(major, a);
            let ib = index_of_unchecked(minor, b);
            let d = ia + ib;
            let mut count: u128 = 0;
            for dd in 0..d {
                count += diagonal_len(dd, &major.size(), &minor.size());
            }
            count + (ia - diagonal_lo(d, &minor.size()))
        }
        _ => unreachable!("validated above"),
    }
}

fn diagonal_lo(d: u128, minor: &Cardinality) -> u128 {
    match minor {
        Cardinality::Finite(m) => d.saturating_sub(m - 1),
        Cardinality::Infinite => 0,
    }
}

fn diagonal_len(d: u128, major: &Cardinality, minor: &Cardinality) -> u128 {
    let lo = diagonal_lo(d, minor);
    let hi = match major {
        Cardinality::Finite(n) => d.min(n - 1),
        Cardinality::Infinite => d,
    };
    if hi >= lo {
        hi - lo + 1
    } else {
        0
    }
}

fn eta_index(r: &BigRational) -> u128 {
    // exact small rationals in practice; the loop is linear in the denominator
    let num: u128 = r.numer().try_into().expect("eta numerator out of range");
    let den: u128 = r.denom().try_into().expect("eta denominator out of range");
    let mut idx: u128 = 0;
    for b in 2..den {
        for a in 1..b {
            if gcd(a, b) == 1 {
                idx += 1;
            }
        }
    }
    for a in 1..num {
        if gcd(a, den) == 1 {
            idx += 1;
        }
    }
    idx
}

enum IterState {
    Finite { k: u32, next: u32 },
    Omega { next: u64 },
    OmegaStar { next: u64 },
    Zeta { next: u128 },
    Eta { den: u64, num: u64 },
    Sum { children: Vec<PointIter>, dead: Vec<bool>, at: usize },
    Replace {
        major: Box<PointIter>,
        minor: Box<PointIter>,
        major_pts: Vec<Point>,
        minor_pts: Vec<Point>,
        major_done: bool,
        minor_done: bool,
        diag: usize,
        pos: usize,
    },
}

pub struct PointIter {
    state: IterState,
}

impl PointIter {
    fn new(term: &OrderTerm) -> PointIter {
        let state = match term {
            OrderTerm::Finite(k) => IterState::Finite { k: *k, next: 0 },
            OrderTerm::Omega => IterState::Omega { next: 0 },
            OrderTerm::OmegaStar => IterState::OmegaStar { next: 0 },
            OrderTerm::Zeta => IterState::Zeta { next: 0 },
            OrderTerm::Eta => IterState::Eta { den: 2, num: 1 },
            OrderTerm::Sum(parts) => IterState::Sum {
                children: parts.iter().map(PointIter::new).collect(),
                dead: vec![false; parts.len()],
                at: 0,
            },
            OrderTerm::Replace(major, minor) => IterState::Replace {
                major: Box::new(PointIter::new(major)),
                minor: Box::new(PointIter::new(minor)),
                major_pts: Vec::new(),
                minor_pts: Vec::new(),
                major_done: false,
                minor_done: false,
                diag: 0,
                pos: 0,
            },
        };
        PointIter { state }
    }
}

impl Iterator for PointIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        match &mut self.state {
            IterState::Finite { k, next } => {
                if next < k {
                    let p = Point::Index(*next);
                    *next += 1;
                    Some(p)
                } else {
                    None
                }
            }
            IterState::Omega { next } | IterState::OmegaStar { next } => {
                let p = Point::Nat(*next);
                *next += 1;
                Some(p)
            }
            IterState::Zeta { next } => {
                let i = *next;
                *next += 1;
                Some(Point::Int(if i == 0 {
                    0
                } else if i % 2 == 1 {
                    (i.div_ceil(2)) as i64
                } else {
                    -((i / 2) as i64)
                }))
            }
            IterState::Eta { den, num } => {
                let p = Point::Rat(BigRational::new((*num as i64).into(), (*den as i64).into()));
                loop {
                    *num += 1;
                    if *num >= *den {
                        *den += 1;
                        *num = 1;
                        break;
                    }
                    if gcd(*num, *den) == 1 {
                        break;
                    }
                }
                Some(p)
            }
            IterState::Sum { children, dead, at } => loop {
                if dead.iter().all(|d| *d) {
                    return None;
                }
                let j = *at;
                *at = (*at + 1) % children.len();
                if dead[j] {
                    continue;
                }
                match children[j].next() {
                    Some(p) => return Some(Point::in_sum(j, p)),
                    None => dead[j] = true,
                }
            },
            IterState::Replace {
                major,
                minor,
                major_pts,
                minor_pts,
                major_done,
                minor_done,
                diag,
                pos,
            } => loop {
                if *pos > *diag {
                    if *major_done
                        && *minor_done
                        && *diag + 1 > (major_pts.len() - 1) + (minor_pts.len() - 1)
                    {
                        return None;
                    }
                    *diag += 1;
                    *pos = 0;
                }
                let i = *pos;
                let j = *diag - i;
                while major_pts.len() <= i && !*major_done {
                    match major.next() {
                        Some(p) => major_pts.push(p),
                        None => *major_done = true,
                    }
                }
                if major_pts.len() <= i {
                    // rest of this diagonal has even larger major indices
                    *pos = *diag + 1;
                    continue;
                }
                while minor_pts.len() <= j && !*minor_done {
                    match minor.next() {
                        Some(p) => minor_pts.push(p),
                        None => *minor_done = true,
                    }
                }
                if minor_pts.len() <= j {
                    *pos += 1;
                    continue;
                }
                let out = Point::in_replace(major_pts[i].clone(), minor_pts[j].clone());
                *pos += 1;
                return Some(out);
            },
        }
    }
}
