//! Finitely supported rational vectors over the points of an index order,
//! ordered by leading coefficient, plus exact-span machinery.

use crate::order::{compare, OrderTerm, Point, PointError};
use num::BigRational;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(num.into(), den.into())
}

/// A finitely supported function from index points to nonzero rationals.
/// Entries are kept sorted by descending index position, so the first
/// entry is the leading term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HahnVector {
    entries: Vec<(Point, Rat)>,
}

impl HahnVector {
    pub fn zero() -> HahnVector {
        HahnVector { entries: Vec::new() }
    }

    /// The generator with unit coefficient at `at`.
    pub fn unit(at: Point) -> HahnVector {
        HahnVector {
            entries: vec![(at, Rat::one())],
        }
    }

    pub fn from_entries(
        index: &OrderTerm,
        entries: Vec<(Point, Rat)>,
    ) -> Result<HahnVector, PointError> {
        for (p, _) in &entries {
            p.check(index)?;
        }
        let mut v = HahnVector { entries };
        v.normalize(index);
        Ok(v)
    }

    fn normalize(&mut self, index: &OrderTerm) {
        self.entries
            .sort_by(|a, b| compare(index, &b.0, &a.0).expect("validated entries"));
        let mut out: Vec<(Point, Rat)> = Vec::with_capacity(self.entries.len());
        for (p, c) in self.entries.drain(..) {
            if let Some(last) = out.last_mut() {
                if last.0 == p {
                    last.1 += c;
                    continue;
                }
            }
            out.push((p, c));
        }
        out.retain(|(_, c)| !c.is_zero());
        self.entries = out;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Point, Rat)] {
        &self.entries
    }

    /// Leading term: the largest support point and its coefficient.
    pub fn leading(&self) -> Option<(&Point, &Rat)> {
        self.entries.first().map(|(p, c)| (p, c))
    }

    pub fn leading_index(&self) -> Option<&Point> {
        self.entries.first().map(|(p, _)| p)
    }

    pub fn is_positive(&self) -> bool {
        self.leading().is_some_and(|(_, c)| c.is_positive())
    }

    pub fn add(&self, other: &HahnVector, index: &OrderTerm) -> HahnVector {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        let mut v = HahnVector { entries };
        v.normalize(index);
        v
    }

    pub fn neg(&self) -> HahnVector {
        HahnVector {
            entries: self.entries.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &HahnVector, index: &OrderTerm) -> HahnVector {
        self.add(&other.neg(), index)
    }

    pub fn scale(&self, q: &Rat) -> HahnVector {
        if q.is_zero() {
            return HahnVector::zero();
        }
        HahnVector {
            entries: self.entries.iter().map(|(p, c)| (p.clone(), c * q)).collect(),
        }
    }

    /// Group order: the sign of the leading coefficient of the difference.
    pub fn cmp_in(&self, other: &HahnVector, index: &OrderTerm) -> Ordering {
        let diff = self.sub(other, index);
        match diff.leading() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Greater,
            _ => Ordering::Less,
        }
    }

    /// Sum of coefficients — the affine carrier keeps this at one.
    pub fn coeff_sum(&self) -> Rat {
        self.entries.iter().map(|(_, c)| c).sum()
    }
}

impl fmt::Display for HahnVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}·e[{p}]")?;
        }
        Ok(())
    }
}

/// Reduced echelon basis of a rational span, pivoted on descending
/// leading indices. The leading indices of the rows are exactly the
/// leading indices realized by nonzero span members.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    index: OrderTerm,
    rows: Vec<HahnVector>,
}

impl SpanBasis {
    pub fn new(index: OrderTerm) -> SpanBasis {
        SpanBasis {
            index,
            rows: Vec::new(),
        }
    }

    pub fn rows(&self) -> &[HahnVector] {
        &self.rows
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &HahnVector) -> HahnVector {
        let mut v = v.clone();
        loop {
            let Some(lead) = v.leading_index().cloned() else {
                return v;
            };
            let Some(row) = self
                .rows
                .iter()
                .find(|r| r.leading_index() == Some(&lead))
            else {
                return v;
            };
            let coeff = v.leading().unwrap().1.clone();
            v = v.sub(&row.scale(&coeff), &self.index);
        }
    }

    /// Insert `v`; returns true when the span grew.
    pub fn insert(&mut self, v: &HahnVector) -> bool {
        let mut r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let pivot = r.leading().unwrap().1.clone();
        r = r.scale(&pivot.recip());
        // keep rows reduced against the new pivot
        let lead = r.leading_index().unwrap().clone();
        let index = self.index.clone();
        for row in &mut self.rows {
            if let Some((p, c)) = row
                .entries()
                .iter()
                .find(|(p, _)| *p == lead)
                .map(|(p, c)| (p.clone(), c.clone()))
            {
                debug_assert_eq!(p, lead);
                *row = row.sub(&r.scale(&c), &index);
            }
        }
        self.rows.push(r);
        self.rows.sort_by(|a, b| {
            compare(
                &self.index,
                b.leading_index().unwrap(),
                a.leading_index().unwrap(),
            )
            .expect("valid leads")
        });
        true
    }

    pub fn contains(&self, v: &HahnVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Leading indices realized in the span, descending.
    pub fn leads(&self) -> Vec<&Point> {
        self.rows.iter().filter_map(|r| r.leading_index()).collect()
    }

    /// Is there a span member whose leading index is >= `at`?
    pub fn some_lead_at_least(&self, at: &Point) -> bool {
        self.leads().iter().any(|l| {
            compare(&self.index, l, at).is_ok_and(|o| o != Ordering::Less)
        })
    }

    pub fn some_lead_at_most(&self, at: &Point) -> bool {
        self.leads().iter().any(|l| {
            compare(&self.index, l, at).is_ok_and(|o| o != Ordering::Greater)
        })
    }
}
