//! Normal forms on the dense fragment: terms built from finite chains and
//! `η` under concatenation.
//!
//! The identities are `η + η ≅ η`, `η + 1 + η ≅ η` (a single point
//! between dense blocks has no immediate neighbors), and the merging of
//! adjacent finite blocks. Interior blocks of size two or more are
//! genuine invariants — their points form immediate pairs, which no
//! isomorphism can erase — so the normal form is an alternating sequence
//! of `η`s and finite blocks in which every interior block has at least
//! two points.

use super::IsoError;
use crate::order::OrderTerm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Atom {
    Fin(u64),
    Eta,
}

/// The flattened atom list of a dense-fragment term, or `None` outside
/// the fragment.
fn atoms(term: &OrderTerm) -> Option<Vec<Atom>> {
    match term {
        OrderTerm::Finite(k) => Some(vec![Atom::Fin(u64::from(*k))]),
        OrderTerm::Eta => Some(vec![Atom::Eta]),
        OrderTerm::Sum(parts) => {
            let mut out = Vec::new();
            for p in parts {
                out.extend(atoms(p)?);
            }
            Some(out)
        }
        _ => None,
    }
}

pub fn in_dense_fragment(term: &OrderTerm) -> bool {
    atoms(term).is_some()
}

/// The unique normal form of a dense-fragment term.
pub fn normalize_dense(term: &OrderTerm) -> Result<OrderTerm, IsoError> {
    let mut ats = atoms(term).ok_or(IsoError::OutsideDenseFragment)?;
    loop {
        let mut changed = false;
        let mut out: Vec<Atom> = Vec::with_capacity(ats.len());
        let mut i = 0;
        while i < ats.len() {
            match (ats.get(i), ats.get(i + 1), ats.get(i + 2)) {
                (Some(Atom::Fin(a)), Some(Atom::Fin(b)), _) => {
                    out.push(Atom::Fin(a + b));
                    i += 2;
                    changed = true;
                }
                (Some(Atom::Eta), Some(Atom::Eta), _) => {
                    out.push(Atom::Eta);
                    i += 2;
                    changed = true;
                }
                (Some(Atom::Eta), Some(Atom::Fin(1)), Some(Atom::Eta)) => {
                    out.push(Atom::Eta);
                    i += 3;
                    changed = true;
                }
                (Some(a), _, _) => {
                    out.push(*a);
                    i += 1;
                }
                (None, _, _) => break,
            }
        }
        ats = out;
        if !changed {
            break;
        }
    }
    let parts: Vec<OrderTerm> = ats
        .iter()
        .map(|a| match a {
            Atom::Fin(k) => u32::try_from(*k)
                .map(OrderTerm::Finite)
                .map_err(|_| IsoError::OutsideDenseFragment),
            Atom::Eta => Ok(OrderTerm::Eta),
        })
        .collect::<Result<_, _>>()?;
    Ok(OrderTerm::sum(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use OrderTerm::*;

    #[test]
    fn already_normal() {
        assert_eq!(normalize_dense(&Finite(3)), Ok(Finite(3)));
        assert_eq!(normalize_dense(&Eta), Ok(Eta));
    }

    #[test]
    fn eta_absorbs_neighbors_and_interior_singletons() {
        assert_eq!(normalize_dense(&OrderTerm::sum(vec![Eta, Eta])), Ok(Eta));
        assert_eq!(
            normalize_dense(&OrderTerm::sum(vec![Finite(1), Eta, Finite(1), Eta])),
            Ok(OrderTerm::sum(vec![Finite(1), Eta]))
        );
        assert_eq!(
            normalize_dense(&OrderTerm::sum(vec![Eta, Finite(1), Eta])),
            Ok(Eta)
        );
    }

    #[test]
    fn interior_blocks_of_two_or_more_survive() {
        // their immediate pairs are order invariants
        let blocky = OrderTerm::sum(vec![Finite(2), Eta, Finite(5), Eta, Finite(2)]);
        assert_eq!(normalize_dense(&blocky), Ok(blocky.clone()));
        let collapsing = OrderTerm::sum(vec![Finite(2), Eta, Finite(1), Eta, Finite(2)]);
        assert_eq!(
            normalize_dense(&collapsing),
            Ok(OrderTerm::sum(vec![Finite(2), Eta, Finite(2)]))
        );
    }

    #[test]
    fn finite_merge() {
        assert_eq!(
            normalize_dense(&OrderTerm::sum(vec![Finite(2), Finite(3)])),
            Ok(Finite(5))
        );
    }

    #[test]
    fn fragment_boundary() {
        assert_eq!(normalize_dense(&Omega), Err(IsoError::OutsideDenseFragment));
        assert!(!in_dense_fragment(&OrderTerm::replace(Eta, Finite(1))));
    }
}
