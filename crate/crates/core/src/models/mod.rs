//! Concrete ordered structures with computable model theory: discrete
//! chain models, Hahn-style ordered divisible abelian groups, and the
//! affinized variant.
//!
//! Instead of a general prime-model construction (not computable for
//! arbitrary theories), each theory fixes an explicit carrier generated
//! from an index order:
//!
//! * `DiscreteOrder` — one integer chain per index point, lexicographic;
//!   definable functions are the shifts.
//! * `Odag` — finitely supported rational vectors over the index, ordered
//!   by leading coefficient, with designated positive generators; the
//!   rational span of the generators is the carrier and definable closure
//!   is exact linear algebra. The designated type is "positive".
//! * `AffineOdag` — the same vectors over `2 + L` restricted to
//!   coefficient sum one; only affine combinations are definable, and the
//!   unique 1-type `x = x` is the designated one.

mod arch;
mod checks;
mod closure;
mod discrete;
mod hahn;
mod ladder;
mod nonsimple;

pub use arch::{
    arch_sim, arch_sim_affine_witness_oracle, arch_sim_discrete_witness_oracle,
    arch_sim_hahn_witness_oracle,
};
pub use checks::{canonical_tail_check, faithfulness_check, CheckReport};
pub use closure::{closure, ClosureDescriptor};
pub use discrete::DiscreteElement;
pub use hahn::{rat, HahnVector, Rat, SpanBasis};
pub use ladder::{ladder, LadderPresentation};
pub use nonsimple::{nonsimplicity_search, NonsimplicityCertificate, SearchExhausted, WitnessFn};

use crate::order::{enumerate, OrderTerm, Point, PointError};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TheoryId {
    DiscreteOrder,
    Odag,
    AffineOdag,
}

impl TheoryId {
    pub fn parse(name: &str) -> Option<TheoryId> {
        match name {
            "discrete" | "discrete-order" => Some(TheoryId::DiscreteOrder),
            "odag" => Some(TheoryId::Odag),
            "affine" | "affine-odag" => Some(TheoryId::AffineOdag),
            _ => None,
        }
    }
}

impl fmt::Display for TheoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoryId::DiscreteOrder => write!(f, "discrete-order"),
            TheoryId::Odag => write!(f, "odag"),
            TheoryId::AffineOdag => write!(f, "affine-odag"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("element does not belong to this structure")]
    MixedStructures,
    #[error("element does not realize the designated type")]
    TypePrecondition,
    #[error("parameter set unsupported for this operation: {0}")]
    UnsupportedParams(String),
    #[error(transparent)]
    Point(#[from] PointError),
}

/// An immutable model built over an index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Structure {
    pub theory: TheoryId,
    /// The index order the model was requested over.
    pub base_index: OrderTerm,
    /// The effective index of the carrier: equal to `base_index` except
    /// for the affine theory, which prepends a two-point prefix.
    pub index: OrderTerm,
}

/// Build the model of `theory` over the index order `base`.
pub fn build_model(theory: TheoryId, base: &OrderTerm) -> Structure {
    let index = match theory {
        TheoryId::AffineOdag => {
            OrderTerm::sum(vec![OrderTerm::Finite(2), base.clone()])
        }
        _ => base.clone(),
    };
    Structure {
        theory,
        base_index: base.clone(),
        index,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelElement {
    Discrete(DiscreteElement),
    Hahn(HahnVector),
}

impl fmt::Display for ModelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelElement::Discrete(e) => write!(f, "{e}"),
            ModelElement::Hahn(v) => write!(f, "{v}"),
        }
    }
}

impl Structure {
    /// Carrier membership and shape check.
    pub fn check(&self, e: &ModelElement) -> Result<(), ModelError> {
        match (self.theory, e) {
            (TheoryId::DiscreteOrder, ModelElement::Discrete(d)) => {
                d.check(&self.index).map_err(ModelError::Point)
            }
            (TheoryId::Odag, ModelElement::Hahn(v)) => {
                for (p, _) in v.entries() {
                    p.check(&self.index)?;
                }
                Ok(())
            }
            (TheoryId::AffineOdag, ModelElement::Hahn(v)) => {
                for (p, _) in v.entries() {
                    p.check(&self.index)?;
                }
                if v.coeff_sum() != rat(1, 1) {
                    return Err(ModelError::MixedStructures);
                }
                Ok(())
            }
            _ => Err(ModelError::MixedStructures),
        }
    }

    pub fn cmp_elements(&self, a: &ModelElement, b: &ModelElement) -> Result<Ordering, ModelError> {
        self.check(a)?;
        self.check(b)?;
        match (a, b) {
            (ModelElement::Discrete(x), ModelElement::Discrete(y)) => Ok(x.cmp_in(y, &self.index)),
            (ModelElement::Hahn(x), ModelElement::Hahn(y)) => Ok(x.cmp_in(y, &self.index)),
            _ => Err(ModelError::MixedStructures),
        }
    }

    /// Whether `e` realizes the theory's designated type.
    pub fn realizes_designated_type(&self, e: &ModelElement) -> Result<bool, ModelError> {
        self.check(e)?;
        Ok(match (self.theory, e) {
            (TheoryId::DiscreteOrder, _) => true,
            (TheoryId::Odag, ModelElement::Hahn(v)) => v.is_positive(),
            (TheoryId::AffineOdag, _) => true,
            _ => false,
        })
    }

    /// The `i`-th designated generator.
    pub fn generator(&self, i: u64) -> Option<ModelElement> {
        let p = enumerate(&self.index, i)?;
        Some(match self.theory {
            TheoryId::DiscreteOrder => ModelElement::Discrete(DiscreteElement::new(p, 0)),
            TheoryId::Odag | TheoryId::AffineOdag => ModelElement::Hahn(HahnVector::unit(p)),
        })
    }

    /// A seeded random carrier element: support of size at most four,
    /// coefficient heights at most eight.
    pub fn random_element(&self, rng: &mut ChaCha8Rng) -> ModelElement {
        match self.theory {
            TheoryId::DiscreteOrder => {
                let chain = self.random_index_point(rng);
                let offset = rng.gen_range(-8..=8);
                ModelElement::Discrete(DiscreteElement::new(chain, offset))
            }
            TheoryId::Odag => ModelElement::Hahn(self.random_vector(rng, false)),
            TheoryId::AffineOdag => ModelElement::Hahn(self.random_vector(rng, true)),
        }
    }

    pub fn random_index_point(&self, rng: &mut ChaCha8Rng) -> Point {
        let span = match self.index.size() {
            crate::order::Cardinality::Finite(n) => n.min(48) as u64,
            crate::order::Cardinality::Infinite => 48,
        };
        enumerate(&self.index, rng.gen_range(0..span)).expect("index within card")
    }

    fn random_vector(&self, rng: &mut ChaCha8Rng, affine: bool) -> HahnVector {
        loop {
            let k = rng.gen_range(1..=4usize);
            let mut entries = Vec::with_capacity(k);
            for _ in 0..k {
                let p = self.random_index_point(rng);
                let num = loop {
                    let n: i64 = rng.gen_range(-8..=8);
                    if n != 0 {
                        break n;
                    }
                };
                let den: i64 = rng.gen_range(1..=8);
                entries.push((p, rat(num, den)));
            }
            let mut v = HahnVector::from_entries(&self.index, entries).expect("valid points");
            if affine {
                // fix the last coefficient so the weights sum to one
                let s = v.coeff_sum();
                let correction = rat(1, 1) - s;
                if let Some((p, _)) = v.entries().last().map(|(p, c)| (p.clone(), c.clone())) {
                    let fix = HahnVector::unit(p).scale(&correction);
                    v = v.add(&fix, &self.index);
                }
                if v.coeff_sum() != rat(1, 1) {
                    continue;
                }
            }
            if !v.is_zero() {
                return v;
            }
        }
    }
}

/// A finite set of parameters drawn from one structure.
#[derive(Debug, Clone)]
pub struct ParamSet {
    pub theory: TheoryId,
    pub elements: Vec<ModelElement>,
}

impl ParamSet {
    pub fn empty(theory: TheoryId) -> ParamSet {
        ParamSet {
            theory,
            elements: Vec::new(),
        }
    }

    pub fn new(structure: &Structure, elements: Vec<ModelElement>) -> Result<ParamSet, ModelError> {
        for e in &elements {
            structure.check(e)?;
        }
        Ok(ParamSet {
            theory: structure.theory,
            elements,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_model_orders_lexicographically() {
        let m = build_model(TheoryId::DiscreteOrder, &OrderTerm::Finite(2));
        let a = ModelElement::Discrete(DiscreteElement::new(Point::Index(0), 5));
        let b = ModelElement::Discrete(DiscreteElement::new(Point::Index(1), -3));
        assert_eq!(m.cmp_elements(&a, &b), Ok(Ordering::Less));
    }

    #[test]
    fn odag_leading_coefficient_dominates() {
        let m = build_model(TheoryId::Odag, &OrderTerm::Finite(3));
        let e0 = m.generator(0).unwrap();
        let (ModelElement::Hahn(v0), Some(ModelElement::Hahn(v1)), Some(ModelElement::Hahn(v2))) =
            (e0.clone(), m.generator(1), m.generator(2))
        else {
            panic!("hahn generators");
        };
        let a = v0.add(&v2.scale(&rat(2, 1)), &m.index);
        let b = v1.scale(&rat(7, 1));
        assert_eq!(a.cmp_in(&b, &m.index), Ordering::Greater);
    }

    #[test]
    fn affine_index_gets_the_two_point_prefix() {
        let m = build_model(TheoryId::AffineOdag, &OrderTerm::Eta);
        assert_eq!(
            m.index,
            OrderTerm::sum(vec![OrderTerm::Finite(2), OrderTerm::Eta])
        );
        // generators are affine carrier members
        let g = m.generator(0).unwrap();
        assert!(m.check(&g).is_ok());
    }

    #[test]
    fn random_elements_live_in_the_carrier() {
        use rand::SeedableRng;
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for theory in [TheoryId::DiscreteOrder, TheoryId::Odag, TheoryId::AffineOdag] {
            let m = build_model(theory, &OrderTerm::Eta);
            for _ in 0..40 {
                let e = m.random_element(&mut rng);
                assert!(m.check(&e).is_ok(), "{theory}: {e}");
            }
        }
    }
}
