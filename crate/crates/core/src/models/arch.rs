//! Archimedean equivalence relative to a parameter set.
//!
//! Two realizations of the designated type are equivalent over `B` when
//! each is flanked by definable images of the other over `B`. The
//! definition quantifies over an infinite closure, so the decision
//! procedure uses structural rules — chain equality for shifts, leading
//! indices against span pivots for the group and affine theories — and
//! the definitional unfolding is kept as a bounded witness-search oracle
//! that the suites replay against the rules.

use super::{
    closure, rat, ClosureDescriptor, ModelElement, ModelError, ParamSet, Structure, TheoryId,
};
use std::cmp::Ordering;

/// Structural decision of `a ~_B b`.
pub fn arch_sim(
    structure: &Structure,
    params: &ParamSet,
    a: &ModelElement,
    b: &ModelElement,
) -> Result<bool, ModelError> {
    if params.theory != structure.theory {
        return Err(ModelError::MixedStructures);
    }
    if !structure.realizes_designated_type(a)? || !structure.realizes_designated_type(b)? {
        return Err(ModelError::TypePrecondition);
    }
    for e in &params.elements {
        structure.check(e)?;
    }
    match structure.theory {
        TheoryId::DiscreteOrder => {
            let (ModelElement::Discrete(x), ModelElement::Discrete(y)) = (a, b) else {
                return Err(ModelError::MixedStructures);
            };
            if x.chain == y.chain {
                return Ok(true);
            }
            let chains: Vec<_> = params
                .elements
                .iter()
                .map(|e| match e {
                    ModelElement::Discrete(d) => Ok(d.chain.clone()),
                    _ => Err(ModelError::MixedStructures),
                })
                .collect::<Result<_, _>>()?;
            Ok(chains.contains(&x.chain) && chains.contains(&y.chain))
        }
        TheoryId::Odag => {
            let (ModelElement::Hahn(x), ModelElement::Hahn(y)) = (a, b) else {
                return Err(ModelError::MixedStructures);
            };
            let flank = |from: &ModelElement, target: &super::HahnVector| {
                let cl = closure(structure, params, Some(from))?;
                let ClosureDescriptor::RationalSpan { basis } = cl else {
                    return Err(ModelError::MixedStructures);
                };
                let lead = target.leading_index().expect("positive element");
                Ok(basis.some_lead_at_least(lead) && basis.some_lead_at_most(lead))
            };
            Ok(flank(a, y)? && flank(b, x)?)
        }
        TheoryId::AffineOdag => {
            let (ModelElement::Hahn(x), ModelElement::Hahn(y)) = (a, b) else {
                return Err(ModelError::MixedStructures);
            };
            let diff = x.sub(y, &structure.index);
            if diff.is_zero() {
                return Ok(true);
            }
            let lead = diff.leading_index().unwrap().clone();
            let flank = |from: &ModelElement| {
                let cl = closure(structure, params, Some(from))?;
                let ClosureDescriptor::AffineHull { diffs, .. } = cl else {
                    return Err(ModelError::MixedStructures);
                };
                Ok(diffs.some_lead_at_least(&lead))
            };
            Ok(flank(a)? && flank(b)?)
        }
    }
}

/// Definitional oracle for the discrete theory: search shift witnesses
/// over offsets in `[-50, 50]` from every parameter and from the other
/// element.
pub fn arch_sim_discrete_witness_oracle(
    structure: &Structure,
    params: &ParamSet,
    a: &ModelElement,
    b: &ModelElement,
) -> Result<bool, ModelError> {
    let (ModelElement::Discrete(x), ModelElement::Discrete(y)) = (a, b) else {
        return Err(ModelError::MixedStructures);
    };
    let bases = |own: &super::DiscreteElement| {
        let mut v = vec![own.clone()];
        for e in &params.elements {
            if let ModelElement::Discrete(d) = e {
                v.push(d.clone());
            }
        }
        v
    };
    let flanked = |target: &super::DiscreteElement, sources: &[super::DiscreteElement]| {
        let mut below = false;
        let mut above = false;
        for s in sources {
            for k in -50..=50i64 {
                let w = s.shifted(k);
                match w.cmp_in(target, &structure.index) {
                    Ordering::Less | Ordering::Equal => below = true,
                    Ordering::Greater => above = true,
                }
            }
        }
        below && above
    };
    Ok(flanked(y, &bases(x)) && flanked(x, &bases(y)))
}

/// Definitional oracle for the group theory over the empty parameter
/// set: search flanking witnesses among rational multiples `q·a` with
/// `q = n` or `q = 1/n`, `n <= 1000`.
pub fn arch_sim_hahn_witness_oracle(
    structure: &Structure,
    a: &ModelElement,
    b: &ModelElement,
) -> Result<bool, ModelError> {
    let (ModelElement::Hahn(x), ModelElement::Hahn(y)) = (a, b) else {
        return Err(ModelError::MixedStructures);
    };
    if !x.is_positive() || !y.is_positive() {
        return Err(ModelError::TypePrecondition);
    }
    let flanked = |from: &super::HahnVector, target: &super::HahnVector| {
        let mut below = false;
        let mut above = false;
        for n in 1..=1000i64 {
            for q in [rat(n, 1), rat(1, n)] {
                let w = from.scale(&q);
                match w.cmp_in(target, &structure.index) {
                    Ordering::Less | Ordering::Equal => below = true,
                    Ordering::Greater => above = true,
                }
                if below && above {
                    return true;
                }
            }
        }
        below && above
    };
    Ok(flanked(x, y) && flanked(y, x))
}

/// Definitional oracle for the affine theory: flanking witnesses of the
/// form `from + t·r` with `r` a hull-difference basis row and `t` on a
/// bounded grid — each such point is an affine combination of the
/// parameters and `from`.
pub fn arch_sim_affine_witness_oracle(
    structure: &Structure,
    params: &ParamSet,
    a: &ModelElement,
    b: &ModelElement,
) -> Result<bool, ModelError> {
    let (ModelElement::Hahn(x), ModelElement::Hahn(y)) = (a, b) else {
        return Err(ModelError::MixedStructures);
    };
    let flanked = |from: &super::HahnVector, target: &super::HahnVector| {
        let cl = closure(structure, params, Some(&ModelElement::Hahn(from.clone())))?;
        let ClosureDescriptor::AffineHull { diffs, .. } = cl else {
            return Err(ModelError::MixedStructures);
        };
        let mut below = from.cmp_in(target, &structure.index) != Ordering::Greater;
        let mut above = from.cmp_in(target, &structure.index) != Ordering::Less;
        for row in diffs.rows() {
            for n in 1..=128i64 {
                for t in [rat(n, 1), rat(-n, 1), rat(1, n), rat(-1, n)] {
                    let w = from.add(&row.scale(&t), &structure.index);
                    match w.cmp_in(target, &structure.index) {
                        Ordering::Less | Ordering::Equal => below = true,
                        Ordering::Greater => above = true,
                    }
                    if below && above {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(below && above)
    };
    Ok(flanked(x, y)? && flanked(y, x)?)
}
