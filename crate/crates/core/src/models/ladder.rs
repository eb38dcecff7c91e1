//! Archimedean ladders: the quotient of the designated type's
//! realizations by the equivalence of [`super::arch_sim`], presented by
//! an enumerated prefix of class representatives.

use super::{arch_sim, HahnVector, ModelElement, ModelError, ParamSet, Structure, TheoryId};
use crate::order::{compare, enumerate, OrderTerm, Point};
use std::cmp::Ordering;

/// An enumerated prefix of the ladder, with the order it claims to form.
///
/// For the discrete and group theories over no parameters the claimed
/// order is the whole index; for the affine theory over a two-element
/// parameter set it is the part of the index strictly above
/// `above_index` — the ladder of the non-cut sitting over the hull.
#[derive(Debug, Clone)]
pub struct LadderPresentation {
    pub theory: TheoryId,
    pub claimed_order: OrderTerm,
    /// When set, the ladder corresponds to the claimed order strictly
    /// above this point.
    pub above_index: Option<Point>,
    /// `(position in claimed order, class representative)`.
    pub classes: Vec<(Point, ModelElement)>,
}

/// Enumerate `count` ladder classes of `structure` over `params`.
pub fn ladder(
    structure: &Structure,
    params: &ParamSet,
    count: usize,
) -> Result<LadderPresentation, ModelError> {
    if params.theory != structure.theory {
        return Err(ModelError::MixedStructures);
    }
    match structure.theory {
        TheoryId::DiscreteOrder | TheoryId::Odag => {
            if !params.is_empty() {
                return Err(ModelError::UnsupportedParams(
                    "ladders for these theories are taken over no parameters".into(),
                ));
            }
            let mut classes = Vec::new();
            for i in 0.. {
                if classes.len() >= count {
                    break;
                }
                let Some(p) = enumerate(&structure.index, i) else {
                    break;
                };
                let rep = match structure.theory {
                    TheoryId::DiscreteOrder => ModelElement::Discrete(
                        super::DiscreteElement::new(p.clone(), 0),
                    ),
                    _ => ModelElement::Hahn(HahnVector::unit(p.clone())),
                };
                classes.push((p, rep));
            }
            Ok(LadderPresentation {
                theory: structure.theory,
                claimed_order: structure.base_index.clone(),
                above_index: None,
                classes,
            })
        }
        TheoryId::AffineOdag => {
            if params.len() != 2 {
                return Err(ModelError::UnsupportedParams(
                    "the affine ladder takes exactly two parameters".into(),
                ));
            }
            let (ModelElement::Hahn(p1), ModelElement::Hahn(p2)) =
                (&params.elements[0], &params.elements[1])
            else {
                return Err(ModelError::MixedStructures);
            };
            let diff = p2.sub(p1, &structure.index);
            let Some(beta) = diff.leading_index().cloned() else {
                return Err(ModelError::UnsupportedParams(
                    "parameters must be distinct".into(),
                ));
            };
            let e_beta = HahnVector::unit(beta.clone());
            let mut classes = Vec::new();
            let mut i = 0u64;
            while classes.len() < count {
                let Some(gamma) = enumerate(&structure.index, i) else {
                    break;
                };
                i += 1;
                if compare(&structure.index, &gamma, &beta)? != Ordering::Greater {
                    continue;
                }
                // the class of elements whose offset from the hull leads
                // at gamma
                let rep = p1
                    .add(&HahnVector::unit(gamma.clone()), &structure.index)
                    .sub(&e_beta, &structure.index);
                classes.push((gamma, ModelElement::Hahn(rep)));
                if i > 100_000 {
                    break;
                }
            }
            Ok(LadderPresentation {
                theory: structure.theory,
                claimed_order: structure.index.clone(),
                above_index: Some(beta),
                classes,
            })
        }
    }
}

impl LadderPresentation {
    /// Check the presentation invariants on the enumerated prefix:
    /// representatives pairwise inequivalent, and the class order matches
    /// the claimed order positionwise.
    pub fn verify_prefix(
        &self,
        structure: &Structure,
        params: &ParamSet,
    ) -> Result<(), String> {
        for (i, (pos_a, rep_a)) in self.classes.iter().enumerate() {
            if let Some(base) = &self.above_index {
                if compare(&self.claimed_order, pos_a, base) != Ok(Ordering::Greater) {
                    return Err(format!("class position {pos_a} not above the base"));
                }
            }
            for (pos_b, rep_b) in self.classes.iter().skip(i + 1) {
                let equivalent = arch_sim(structure, params, rep_a, rep_b)
                    .map_err(|e| e.to_string())?;
                if equivalent {
                    return Err(format!(
                        "representatives at {pos_a} and {pos_b} are equivalent"
                    ));
                }
                let class_ord = structure
                    .cmp_elements(rep_a, rep_b)
                    .map_err(|e| e.to_string())?;
                let index_ord =
                    compare(&self.claimed_order, pos_a, pos_b).map_err(|e| e.to_string())?;
                if class_ord != index_ord {
                    return Err(format!(
                        "class order at ({pos_a},{pos_b}) disagrees with the claimed order"
                    ));
                }
            }
        }
        Ok(())
    }
}
