//! Definable closure, per theory: shift orbits, rational spans, affine
//! hulls. Membership is decided by exact arithmetic.

use super::{HahnVector, ModelElement, ModelError, ParamSet, SpanBasis, Structure, TheoryId};
use crate::order::Point;

#[derive(Debug, Clone)]
pub enum ClosureDescriptor {
    /// Discrete theory: the union of the parameters' integer chains.
    ShiftOrbits {
        index: crate::order::OrderTerm,
        chains: Vec<Point>,
    },
    /// Group theory: the rational span of the parameters.
    RationalSpan { basis: SpanBasis },
    /// Affine theory: base point plus the span of pairwise differences;
    /// the hull of the empty set is empty.
    AffineHull {
        index: crate::order::OrderTerm,
        base: Option<HahnVector>,
        diffs: SpanBasis,
    },
}

/// Closure of `params` together with an optional extra element.
pub fn closure(
    structure: &Structure,
    params: &ParamSet,
    extra: Option<&ModelElement>,
) -> Result<ClosureDescriptor, ModelError> {
    if params.theory != structure.theory {
        return Err(ModelError::MixedStructures);
    }
    let mut all: Vec<&ModelElement> = params.elements.iter().collect();
    if let Some(e) = extra {
        all.push(e);
    }
    for e in &all {
        structure.check(e)?;
    }
    match structure.theory {
        TheoryId::DiscreteOrder => {
            let mut chains = Vec::new();
            for e in all {
                let ModelElement::Discrete(d) = e else {
                    return Err(ModelError::MixedStructures);
                };
                if !chains.contains(&d.chain) {
                    chains.push(d.chain.clone());
                }
            }
            Ok(ClosureDescriptor::ShiftOrbits {
                index: structure.index.clone(),
                chains,
            })
        }
        TheoryId::Odag => {
            let mut basis = SpanBasis::new(structure.index.clone());
            for e in all {
                let ModelElement::Hahn(v) = e else {
                    return Err(ModelError::MixedStructures);
                };
                basis.insert(v);
            }
            Ok(ClosureDescriptor::RationalSpan { basis })
        }
        TheoryId::AffineOdag => {
            let mut vecs = Vec::new();
            for e in all {
                let ModelElement::Hahn(v) = e else {
                    return Err(ModelError::MixedStructures);
                };
                vecs.push(v.clone());
            }
            let mut diffs = SpanBasis::new(structure.index.clone());
            let base = vecs.first().cloned();
            if let Some(b) = &base {
                for v in &vecs[1..] {
                    diffs.insert(&v.sub(b, &structure.index));
                }
            }
            Ok(ClosureDescriptor::AffineHull {
                index: structure.index.clone(),
                base,
                diffs,
            })
        }
    }
}

impl ClosureDescriptor {
    /// Exact membership.
    pub fn contains(&self, e: &ModelElement) -> Result<bool, ModelError> {
        match (self, e) {
            (ClosureDescriptor::ShiftOrbits { chains, .. }, ModelElement::Discrete(d)) => {
                Ok(chains.contains(&d.chain))
            }
            (ClosureDescriptor::RationalSpan { basis }, ModelElement::Hahn(v)) => {
                Ok(basis.contains(v))
            }
            (
                ClosureDescriptor::AffineHull { index, base, diffs },
                ModelElement::Hahn(v),
            ) => match base {
                None => Ok(false),
                Some(b) => Ok(diffs.contains(&v.sub(b, index))),
            },
            _ => Err(ModelError::MixedStructures),
        }
    }
}
