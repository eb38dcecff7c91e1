//! Elements of the discrete chain models: one integer line per point of
//! the index order, ordered lexicographically with the chain significant.

use crate::order::{compare, OrderTerm, Point, PointError};
use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscreteElement {
    pub chain: Point,
    pub offset: i64,
}

impl DiscreteElement {
    pub fn new(chain: Point, offset: i64) -> DiscreteElement {
        DiscreteElement { chain, offset }
    }

    pub fn check(&self, index: &OrderTerm) -> Result<(), PointError> {
        self.chain.check(index)
    }

    pub fn cmp_in(&self, other: &DiscreteElement, index: &OrderTerm) -> Ordering {
        match compare(index, &self.chain, &other.chain).expect("validated chains") {
            Ordering::Equal => self.offset.cmp(&other.offset),
            ord => ord,
        }
    }

    pub fn shifted(&self, by: i64) -> DiscreteElement {
        DiscreteElement {
            chain: self.chain.clone(),
            offset: self.offset + by,
        }
    }
}

impl fmt::Display for DiscreteElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.chain, self.offset)
    }
}
