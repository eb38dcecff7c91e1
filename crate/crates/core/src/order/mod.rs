//! Countable linear orders represented as finite terms.
//!
//! A term denotes a nonempty countable linear order built from finite
//! chains, `ω`, `ω*`, `ζ`, `η`, concatenation (`Sum`) and lexicographic
//! replacement (`Replace`). Every query on a term — point comparison,
//! enumeration, immediate neighbors, endpoints — is decided by structural
//! recursion on the term, so everything here is exact.

mod compare;
mod enumerate;
mod neighbor;
mod parse;
mod point;
mod tail;

pub use compare::compare;
pub use enumerate::{enumerate, index_of, points, PointIter};
pub use neighbor::{neighbor, Direction};
pub use parse::{parse_point, parse_term, ParseError};
pub use point::{Point, PointError};
pub use tail::TailView;

use std::fmt;

/// A countable linear order, as a finite term.
///
/// `Finite(k)` is the `k`-element chain (`k >= 1`). `Sum` concatenates its
/// parts left to right. `Replace(major, minor)` substitutes a copy of
/// `minor` for every point of `major`, ordered lexicographically with the
/// major coordinate significant. `Eta` is the rationals strictly between
/// 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderTerm {
    Finite(u32),
    Omega,
    OmegaStar,
    Zeta,
    Eta,
    Sum(Vec<OrderTerm>),
    Replace(Box<OrderTerm>, Box<OrderTerm>),
}

/// Number of points of a term; `Infinite` as soon as any infinite
/// constructor appears.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cardinality {
    Finite(u128),
    Infinite,
}

impl Cardinality {
    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinality::Finite(_))
    }

    /// True when the cardinality exceeds index `i` (so a point with that
    /// enumeration index exists).
    pub fn exceeds(&self, i: u128) -> bool {
        match self {
            Cardinality::Finite(n) => *n > i,
            Cardinality::Infinite => true,
        }
    }
}

impl OrderTerm {
    /// n-ary concatenation. Nested sums are flattened and a singleton
    /// collapses, so equal orders built by different groupings compare
    /// syntactically equal.
    pub fn sum(parts: Vec<OrderTerm>) -> OrderTerm {
        let mut flat = Vec::with_capacity(parts.len());
        for p in parts {
            match p {
                OrderTerm::Sum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        assert!(!flat.is_empty(), "sum of no parts denotes the empty order");
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            OrderTerm::Sum(flat)
        }
    }

    pub fn replace(major: OrderTerm, minor: OrderTerm) -> OrderTerm {
        OrderTerm::Replace(Box::new(major), Box::new(minor))
    }

    pub fn size(&self) -> Cardinality {
        match self {
            OrderTerm::Finite(k) => Cardinality::Finite(u128::from(*k)),
            OrderTerm::Omega | OrderTerm::OmegaStar | OrderTerm::Zeta | OrderTerm::Eta => {
                Cardinality::Infinite
            }
            OrderTerm::Sum(parts) => {
                let mut total: u128 = 0;
                for p in parts {
                    match p.size() {
                        Cardinality::Finite(n) => {
                            total = total.checked_add(n).expect("order size overflow")
                        }
                        Cardinality::Infinite => return Cardinality::Infinite,
                    }
                }
                Cardinality::Finite(total)
            }
            OrderTerm::Replace(major, minor) => match (major.size(), minor.size()) {
                (Cardinality::Finite(a), Cardinality::Finite(b)) => {
                    Cardinality::Finite(a.checked_mul(b).expect("order size overflow"))
                }
                _ => Cardinality::Infinite,
            },
        }
    }

    pub fn has_least(&self) -> bool {
        match self {
            OrderTerm::Finite(_) | OrderTerm::Omega => true,
            OrderTerm::OmegaStar | OrderTerm::Zeta | OrderTerm::Eta => false,
            OrderTerm::Sum(parts) => parts[0].has_least(),
            OrderTerm::Replace(major, minor) => major.has_least() && minor.has_least(),
        }
    }

    pub fn has_greatest(&self) -> bool {
        match self {
            OrderTerm::Finite(_) | OrderTerm::OmegaStar => true,
            OrderTerm::Omega | OrderTerm::Zeta | OrderTerm::Eta => false,
            OrderTerm::Sum(parts) => parts.last().unwrap().has_greatest(),
            OrderTerm::Replace(major, minor) => major.has_greatest() && minor.has_greatest(),
        }
    }

    /// `(has_least, has_greatest)` by structural recursion.
    pub fn bounds(&self) -> (bool, bool) {
        (self.has_least(), self.has_greatest())
    }

    pub fn least(&self) -> Option<Point> {
        match self {
            OrderTerm::Finite(_) => Some(Point::Index(0)),
            OrderTerm::Omega => Some(Point::Nat(0)),
            OrderTerm::OmegaStar | OrderTerm::Zeta | OrderTerm::Eta => None,
            OrderTerm::Sum(parts) => parts[0].least().map(|p| Point::in_sum(0, p)),
            OrderTerm::Replace(major, minor) => {
                let a = major.least()?;
                let b = minor.least()?;
                Some(Point::in_replace(a, b))
            }
        }
    }

    pub fn greatest(&self) -> Option<Point> {
        match self {
            OrderTerm::Finite(k) => Some(Point::Index(k - 1)),
            OrderTerm::OmegaStar => Some(Point::Nat(0)),
            OrderTerm::Omega | OrderTerm::Zeta | OrderTerm::Eta => None,
            OrderTerm::Sum(parts) => {
                let j = parts.len() - 1;
                parts[j].greatest().map(|p| Point::in_sum(j, p))
            }
            OrderTerm::Replace(major, minor) => {
                let a = major.greatest()?;
                let b = minor.greatest()?;
                Some(Point::in_replace(a, b))
            }
        }
    }

    /// No two points of the order form an immediate pair. The singleton
    /// counts as dense (vacuously). A `Replace` has a cross-copy immediate
    /// pair exactly when the major has one and the minor carries both
    /// endpoints.
    pub fn is_dense_order(&self) -> bool {
        match self {
            OrderTerm::Finite(k) => *k == 1,
            OrderTerm::Omega | OrderTerm::OmegaStar | OrderTerm::Zeta => false,
            OrderTerm::Eta => true,
            OrderTerm::Sum(parts) => {
                parts.iter().all(|p| p.is_dense_order())
                    && parts
                        .windows(2)
                        .all(|w| !(w[0].has_greatest() && w[1].has_least()))
            }
            OrderTerm::Replace(major, minor) => {
                minor.is_dense_order()
                    && (major.is_dense_order() || !(minor.has_least() && minor.has_greatest()))
            }
        }
    }

    /// The order-reversed term. Reversal is an involution and maps every
    /// structural query to its mirror, which the tests exploit.
    pub fn reversed(&self) -> OrderTerm {
        match self {
            OrderTerm::Finite(k) => OrderTerm::Finite(*k),
            OrderTerm::Omega => OrderTerm::OmegaStar,
            OrderTerm::OmegaStar => OrderTerm::Omega,
            OrderTerm::Zeta => OrderTerm::Zeta,
            OrderTerm::Eta => OrderTerm::Eta,
            OrderTerm::Sum(parts) => {
                OrderTerm::Sum(parts.iter().rev().map(|p| p.reversed()).collect())
            }
            OrderTerm::Replace(major, minor) => {
                OrderTerm::replace(major.reversed(), minor.reversed())
            }
        }
    }
}

impl fmt::Display for OrderTerm {
    /// Canonical printer: lowercase, comma-separated, no spaces. Parsing
    /// the output reproduces the term exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Finite(k) => write!(f, "n:{k}"),
            OrderTerm::Omega => write!(f, "w"),
            OrderTerm::OmegaStar => write!(f, "w*"),
            OrderTerm::Zeta => write!(f, "z"),
            OrderTerm::Eta => write!(f, "eta"),
            OrderTerm::Sum(parts) => {
                write!(f, "sum(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            OrderTerm::Replace(major, minor) => write!(f, "rep({major},{minor})"),
        }
    }
}
