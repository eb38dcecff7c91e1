//! The identity registry: isomorphism-preserving rewrites toward a
//! canonical form.
//!
//! Each entry is data — a named local rule — so adding an identity does
//! not touch the engine. The rewriter applies the rules bottom-up to a
//! fixpoint; two terms that reach the same canonical form are isomorphic
//! because every rule rewrites a subterm to an isomorphic order and both
//! `Sum` and `Replace` respect isomorphism argument-wise.

use super::dense::{in_dense_fragment, normalize_dense};
use crate::order::OrderTerm;

pub struct Rule {
    pub name: &'static str,
    pub apply: fn(&OrderTerm) -> Option<OrderTerm>,
}

/// Upper bound on unrolling `Replace(Finite(k), m)`.
const UNROLL_LIMIT: u32 = 8;

pub const REGISTRY: &[Rule] = &[
    Rule {
        name: "dense-normal-form",
        apply: |t| {
            if !in_dense_fragment(t) {
                return None;
            }
            let n = normalize_dense(t).ok()?;
            (n != *t).then_some(n)
        },
    },
    Rule {
        name: "replace-assoc",
        apply: |t| {
            let OrderTerm::Replace(major, minor) = t else {
                return None;
            };
            let OrderTerm::Replace(m1, m2) = &**major else {
                return None;
            };
            Some(OrderTerm::replace(
                (**m1).clone(),
                OrderTerm::replace((**m2).clone(), (**minor).clone()),
            ))
        },
    },
    Rule {
        name: "replace-singleton-major",
        apply: |t| {
            let OrderTerm::Replace(major, minor) = t else {
                return None;
            };
            (**major == OrderTerm::Finite(1)).then(|| (**minor).clone())
        },
    },
    Rule {
        name: "replace-singleton-minor",
        apply: |t| {
            let OrderTerm::Replace(major, minor) = t else {
                return None;
            };
            (**minor == OrderTerm::Finite(1)).then(|| (**major).clone())
        },
    },
    Rule {
        name: "replace-finite-major-unrolls",
        apply: |t| {
            let OrderTerm::Replace(major, minor) = t else {
                return None;
            };
            let OrderTerm::Finite(k) = **major else {
                return None;
            };
            (2..=UNROLL_LIMIT).contains(&k).then(|| {
                OrderTerm::sum(vec![(**minor).clone(); k as usize])
            })
        },
    },
    Rule {
        // omega-many (or their mirrors) finite blocks relabel to the major
        name: "finite-minor-absorbs",
        apply: |t| {
            let OrderTerm::Replace(major, minor) = t else {
                return None;
            };
            if !matches!(**minor, OrderTerm::Finite(_)) {
                return None;
            }
            matches!(
                **major,
                OrderTerm::Omega | OrderTerm::OmegaStar | OrderTerm::Zeta
            )
            .then(|| (**major).clone())
        },
    },
    Rule {
        // a dense minor without endpoints erases all copy boundaries
        name: "eta-minor-absorbs",
        apply: |t| {
            let OrderTerm::Replace(_, minor) = t else {
                return None;
            };
            (**minor == OrderTerm::Eta).then_some(OrderTerm::Eta)
        },
    },
    Rule {
        // eta-many copies of a dense block are again eta: copy edges
        // never become adjacent under a dense major, so only internal
        // immediate pairs of the minor could obstruct
        name: "eta-major-dense-minor",
        apply: |t| {
            let OrderTerm::Replace(major, minor) = t else {
                return None;
            };
            if **major != OrderTerm::Eta {
                return None;
            }
            let n = normalize_dense(minor).ok()?;
            n.is_dense_order().then_some(OrderTerm::Eta)
        },
    },
];

/// Rewrite to the registry's canonical form.
pub fn rewrite(term: &OrderTerm) -> OrderTerm {
    let mut current = term.clone();
    for _ in 0..64 {
        let next = rewrite_once(&current);
        if next == current {
            return current;
        }
        current = next;
    }
    debug_assert!(false, "rewriting did not reach a fixpoint");
    current
}

fn rewrite_once(term: &OrderTerm) -> OrderTerm {
    // children first
    let mut t = match term {
        OrderTerm::Sum(parts) => OrderTerm::sum(parts.iter().map(rewrite_once).collect()),
        OrderTerm::Replace(major, minor) => {
            OrderTerm::replace(rewrite_once(major), rewrite_once(minor))
        }
        leaf => leaf.clone(),
    };
    loop {
        let mut changed = false;
        for rule in REGISTRY {
            if let Some(next) = (rule.apply)(&t) {
                t = next;
                changed = true;
            }
        }
        if !changed {
            return t;
        }
    }
}
