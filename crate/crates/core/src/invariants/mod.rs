//! Invariants for countable models of a dense theory with designated
//! cuts and no nonsimple types.
//!
//! The concrete theory is a dense order without endpoints plus constant
//! families: for each designated cut, an ascending and a descending
//! family closing in on it. A model is determined up to isomorphism by
//! which cuts are realized and by the order type of each realization
//! set, and each realization set is one of six countable orders. The
//! published enumeration of the six is:
//!
//! | index | order    |
//! |-------|----------|
//! | 0     | empty    |
//! | 1     | 1        |
//! | 2     | η        |
//! | 3     | 1 + η    |
//! | 4     | η + 1    |
//! | 5     | 1 + η + 1|
//!
//! The invariant is the cut-indexed vector of these indices when the
//! theory names finitely many cuts, and the *set* of
//! `(cut code, index)` pairs when cuts are indexed by rationals.

use crate::iso::{normalize_dense, IsoEngine, IsoError};
use crate::models::Rat;
use crate::order::OrderTerm;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleTheorySpec {
    /// Finitely many named cuts, in line order.
    Cuts(Vec<String>),
    /// Cuts named by rational codes; a model realizes countably many.
    RationalIndexed,
}

/// One of the six realization order types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SixType(pub u8);

impl SixType {
    pub const EMPTY: SixType = SixType(0);

    pub fn new(index: u8) -> Option<SixType> {
        (index <= 5).then_some(SixType(index))
    }

    /// The order term of this type; `None` for the empty type.
    pub fn term(&self) -> Option<OrderTerm> {
        use OrderTerm::*;
        match self.0 {
            0 => None,
            1 => Some(Finite(1)),
            2 => Some(Eta),
            3 => Some(OrderTerm::sum(vec![Finite(1), Eta])),
            4 => Some(OrderTerm::sum(vec![Eta, Finite(1)])),
            5 => Some(OrderTerm::sum(vec![Finite(1), Eta, Finite(1)])),
            _ => unreachable!("validated index"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimpleModelSpec {
    /// Cut name to realized type; absent cuts are unrealized.
    Fillings(BTreeMap<String, SixType>),
    /// Realized rational-coded cuts. Presentation order is irrelevant
    /// and duplicates collapse.
    Listing(Vec<(Rat, SixType)>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvError {
    #[error("unknown cut name `{0}`")]
    UnknownCut(String),
    #[error("model spec does not fit the theory kind")]
    SpecKindMismatch,
    #[error("operation applies to the finitely-many-cuts case only")]
    NotSmallCase,
    #[error("operation applies to the rational-indexed case only")]
    NotRationalIndexed,
    #[error("segment is not a realization order of a simple type: {0}")]
    NotASimpleRealization(String),
    #[error(transparent)]
    Iso(#[from] IsoError),
}

/// A realized model presentation: the full order term and, per cut, the
/// realization segment spliced in for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelPresentation {
    pub term: OrderTerm,
    /// `(cut key, segment)` in line order; `None` marks an unrealized cut.
    pub segments: Vec<(String, Option<OrderTerm>)>,
}

fn ascending_family() -> OrderTerm {
    OrderTerm::replace(
        OrderTerm::Omega,
        OrderTerm::sum(vec![OrderTerm::Finite(1), OrderTerm::Eta]),
    )
}

fn descending_family() -> OrderTerm {
    OrderTerm::replace(
        OrderTerm::OmegaStar,
        OrderTerm::sum(vec![OrderTerm::Eta, OrderTerm::Finite(1)]),
    )
}

/// Splice each cut's filling between its constant families. Every
/// segment is buffered by dense blocks on both sides, so the result
/// stays a dense order without endpoints and the filling is exactly the
/// cut's realization set.
pub fn realize_model(
    theory: &SimpleTheorySpec,
    spec: &SimpleModelSpec,
) -> Result<ModelPresentation, InvError> {
    let cuts: Vec<(String, SixType)> = match (theory, spec) {
        (SimpleTheorySpec::Cuts(names), SimpleModelSpec::Fillings(fillings)) => {
            for name in fillings.keys() {
                if !names.contains(name) {
                    return Err(InvError::UnknownCut(name.clone()));
                }
            }
            names
                .iter()
                .map(|n| {
                    (
                        n.clone(),
                        fillings.get(n).copied().unwrap_or(SixType::EMPTY),
                    )
                })
                .collect()
        }
        (SimpleTheorySpec::RationalIndexed, SimpleModelSpec::Listing(listing)) => {
            let mut set: BTreeMap<Rat, SixType> = BTreeMap::new();
            for (code, six) in listing {
                if *six != SixType::EMPTY {
                    set.insert(code.clone(), *six);
                }
            }
            set.into_iter()
                .map(|(code, six)| (rat_code(&code), six))
                .collect()
        }
        _ => return Err(InvError::SpecKindMismatch),
    };
    let mut parts = vec![OrderTerm::Eta];
    let mut segments = Vec::with_capacity(cuts.len());
    for (key, six) in cuts {
        parts.push(ascending_family());
        let segment = six.term();
        if let Some(seg) = &segment {
            // guard: a filling may only sit between dense approaches;
            // the construction buffers every cut with the families'
            // dense sides, so this cannot trip here
            debug_assert!(parts.last().unwrap().has_least());
            parts.push(seg.clone());
        }
        parts.push(descending_family());
        parts.push(OrderTerm::Eta);
        segments.push((key, segment));
    }
    Ok(ModelPresentation {
        term: OrderTerm::sum(parts),
        segments,
    })
}

pub fn rat_code(code: &Rat) -> String {
    format!("{}/{}", code.numer(), code.denom())
}

/// Classify a dense-fragment segment into the six-type enumeration.
pub fn classify_segment(segment: &OrderTerm) -> Result<SixType, InvError> {
    let normal = normalize_dense(segment)
        .map_err(|_| InvError::NotASimpleRealization(segment.to_string()))?;
    for idx in 1..=5u8 {
        if SixType(idx).term().as_ref() == Some(&normal) {
            return Ok(SixType(idx));
        }
    }
    Err(InvError::NotASimpleRealization(normal.to_string()))
}

/// Recover the realized type at `cut` from a presentation.
pub fn classify_filling(
    presentation: &ModelPresentation,
    cut: &str,
) -> Result<SixType, InvError> {
    let (_, segment) = presentation
        .segments
        .iter()
        .find(|(key, _)| key == cut)
        .ok_or_else(|| InvError::UnknownCut(cut.to_string()))?;
    match segment {
        None => Ok(SixType::EMPTY),
        Some(seg) => classify_segment(seg),
    }
}

/// The total vector of six-type indices over the theory's cut list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantVector(pub Vec<(String, SixType)>);

pub fn smooth_invariant(
    theory: &SimpleTheorySpec,
    spec: &SimpleModelSpec,
) -> Result<InvariantVector, InvError> {
    let SimpleTheorySpec::Cuts(names) = theory else {
        return Err(InvError::NotSmallCase);
    };
    let SimpleModelSpec::Fillings(fillings) = spec else {
        return Err(InvError::SpecKindMismatch);
    };
    for name in fillings.keys() {
        if !names.contains(name) {
            return Err(InvError::UnknownCut(name.clone()));
        }
    }
    Ok(InvariantVector(
        names
            .iter()
            .map(|n| {
                (
                    n.clone(),
                    fillings.get(n).copied().unwrap_or(SixType::EMPTY),
                )
            })
            .collect(),
    ))
}

/// The countable-set invariant: realized `(cut code, six-type)` pairs,
/// with set semantics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct F2Set(pub BTreeSet<(String, SixType)>);

pub fn f2_invariant(
    theory: &SimpleTheorySpec,
    spec: &SimpleModelSpec,
) -> Result<F2Set, InvError> {
    if *theory != SimpleTheorySpec::RationalIndexed {
        return Err(InvError::NotRationalIndexed);
    }
    let SimpleModelSpec::Listing(listing) = spec else {
        return Err(InvError::SpecKindMismatch);
    };
    Ok(F2Set(
        listing
            .iter()
            .filter(|(_, six)| *six != SixType::EMPTY)
            .map(|(code, six)| (rat_code(code), *six))
            .collect(),
    ))
}

/// Two models are apparently isomorphic when their invariants coincide.
pub fn apparent_iso(
    theory: &SimpleTheorySpec,
    a: &SimpleModelSpec,
    b: &SimpleModelSpec,
) -> Result<bool, InvError> {
    match theory {
        SimpleTheorySpec::Cuts(_) => {
            Ok(smooth_invariant(theory, a)? == smooth_invariant(theory, b)?)
        }
        SimpleTheorySpec::RationalIndexed => Ok(f2_invariant(theory, a)? == f2_invariant(theory, b)?),
    }
}

/// EF equivalence of two realized models *as labeled structures*: the
/// constants are named, so a game position must respect them, and the
/// game decomposes into the independent segment games at each cut. The
/// shared family and buffer segments cancel; what remains is segmentwise
/// equivalence of the fillings.
pub fn model_ef_equivalent(
    theory: &SimpleTheorySpec,
    a: &SimpleModelSpec,
    b: &SimpleModelSpec,
    depth: u8,
    engine: &mut IsoEngine,
) -> Result<bool, InvError> {
    let SimpleTheorySpec::Cuts(names) = theory else {
        return Err(InvError::NotSmallCase);
    };
    let pa = realize_model(theory, a)?;
    let pb = realize_model(theory, b)?;
    for name in names {
        let sa = segment_of(&pa, name);
        let sb = segment_of(&pb, name);
        let eq = match (sa, sb) {
            (None, None) => true,
            // a point against an empty segment loses at any depth >= 1
            (None, Some(_)) | (Some(_), None) => depth == 0,
            (Some(x), Some(y)) => {
                let mut agree = true;
                for k in 1..=depth {
                    if !engine.ef_equivalent(x, y, k)? {
                        agree = false;
                        break;
                    }
                }
                agree
            }
        };
        if !eq {
            return Ok(false);
        }
    }
    Ok(true)
}

fn segment_of<'a>(p: &'a ModelPresentation, cut: &str) -> Option<&'a OrderTerm> {
    p.segments
        .iter()
        .find(|(key, _)| key == cut)
        .and_then(|(_, seg)| seg.as_ref())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::rat;
    use crate::order::{neighbor, points, Direction};

    fn two_cut_theory() -> SimpleTheorySpec {
        SimpleTheorySpec::Cuts(vec!["c1".into(), "c2".into()])
    }

    fn fillings(c1: u8, c2: u8) -> SimpleModelSpec {
        let mut m = BTreeMap::new();
        if c1 > 0 {
            m.insert("c1".to_string(), SixType(c1));
        }
        if c2 > 0 {
            m.insert("c2".to_string(), SixType(c2));
        }
        SimpleModelSpec::Fillings(m)
    }

    #[test]
    fn round_trip_all_two_cut_specs() {
        let theory = two_cut_theory();
        for c1 in 0..=5u8 {
            for c2 in 0..=5u8 {
                let spec = fillings(c1, c2);
                let p = realize_model(&theory, &spec).unwrap();
                assert_eq!(classify_filling(&p, "c1").unwrap(), SixType(c1));
                assert_eq!(classify_filling(&p, "c2").unwrap(), SixType(c2));
            }
        }
    }

    #[test]
    fn classify_segment_uses_the_normal_form() {
        let weird = OrderTerm::sum(vec![OrderTerm::Eta, OrderTerm::Finite(1), OrderTerm::Eta]);
        assert_eq!(classify_segment(&weird).unwrap(), SixType(2));
        let plain = OrderTerm::sum(vec![OrderTerm::Finite(1), OrderTerm::Eta]);
        assert_eq!(classify_segment(&plain).unwrap(), SixType(3));
        assert!(matches!(
            classify_segment(&OrderTerm::Finite(2)),
            Err(InvError::NotASimpleRealization(_))
        ));
    }

    #[test]
    fn smooth_vectors() {
        let theory = two_cut_theory();
        let v = smooth_invariant(&theory, &fillings(5, 0)).unwrap();
        assert_eq!(
            v.0,
            vec![("c1".to_string(), SixType(5)), ("c2".to_string(), SixType(0))]
        );
        assert_ne!(
            smooth_invariant(&theory, &fillings(0, 2)).unwrap(),
            smooth_invariant(&theory, &fillings(0, 0)).unwrap()
        );
        assert!(matches!(
            smooth_invariant(&SimpleTheorySpec::RationalIndexed, &fillings(1, 1)),
            Err(InvError::NotSmallCase)
        ));
    }

    #[test]
    fn f2_sets_have_set_semantics() {
        let theory = SimpleTheorySpec::RationalIndexed;
        let a = SimpleModelSpec::Listing(vec![(rat(1, 2), SixType(2)), (rat(1, 3), SixType(3))]);
        let b = SimpleModelSpec::Listing(vec![(rat(1, 3), SixType(3)), (rat(1, 2), SixType(2))]);
        let c = SimpleModelSpec::Listing(vec![
            (rat(1, 2), SixType(2)),
            (rat(1, 2), SixType(2)),
            (rat(1, 3), SixType(3)),
        ]);
        let d = SimpleModelSpec::Listing(vec![(rat(1, 4), SixType(2)), (rat(1, 3), SixType(3))]);
        assert_eq!(f2_invariant(&theory, &a), f2_invariant(&theory, &b));
        assert_eq!(f2_invariant(&theory, &a), f2_invariant(&theory, &c));
        assert_ne!(f2_invariant(&theory, &a), f2_invariant(&theory, &d));
        assert!(apparent_iso(&theory, &a, &c).unwrap());
    }

    #[test]
    fn apparent_iso_sees_endpoint_data() {
        let theory = two_cut_theory();
        assert!(!apparent_iso(&theory, &fillings(3, 0), &fillings(4, 0)).unwrap());
        assert!(apparent_iso(&theory, &fillings(3, 2), &fillings(3, 2)).unwrap());
    }

    #[test]
    fn realized_fillings_are_dense_in_themselves() {
        // no immediate pairs inside any realization segment
        for idx in 1..=5u8 {
            let Some(seg) = SixType(idx).term() else {
                continue;
            };
            let pts: Vec<_> = points(&seg).take(40).collect();
            for a in &pts {
                let succ = neighbor(&seg, a, Direction::Succ).unwrap();
                assert!(
                    succ.is_none(),
                    "filling {idx}: {a} has an immediate successor"
                );
            }
        }
    }

    #[test]
    fn segmentwise_ef_matches_apparent_iso_on_assorted_pairs() {
        let theory = two_cut_theory();
        let mut engine = IsoEngine::new();
        for (a, b) in [
            (fillings(0, 0), fillings(0, 0)),
            (fillings(0, 0), fillings(1, 0)),
            (fillings(2, 5), fillings(2, 5)),
            (fillings(3, 2), fillings(4, 2)),
            (fillings(2, 0), fillings(0, 2)),
        ] {
            let app = apparent_iso(&theory, &a, &b).unwrap();
            let ef = model_ef_equivalent(&theory, &a, &b, 6, &mut engine).unwrap();
            assert_eq!(app, ef, "{a:?} vs {b:?}");
        }
    }
}
