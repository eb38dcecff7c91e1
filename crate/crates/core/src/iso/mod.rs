//! Deciding and approximating isomorphism of order terms.
//!
//! Exact, sound routes only: equal depth-k invariants never separate
//! isomorphic orders, and the positive certificates (syntactic equality
//! after registry rewriting, dense normal forms) never identify
//! non-isomorphic ones. When neither route fires the verdict is an honest
//! `Unknown`.
//!
//! Memo tables live inside each [`IsoEngine`], never in globals, so
//! concurrent engines return the same results as serial ones.

mod brute;
mod dense;
mod ktype;
mod registry;

pub use brute::{brute_force_ef, MAX_DEPTH as BRUTE_MAX_DEPTH, MAX_SIZE as BRUTE_MAX_SIZE};
pub use dense::{in_dense_fragment, normalize_dense};
pub use ktype::{CodeId, KtCtx, KType};
pub use registry::{rewrite, Rule, REGISTRY};

use crate::order::OrderTerm;
use serde::Serialize;
use thiserror::Error;

/// Default maximum EF depth: the least depth at which every catalog
/// distinction appears, while exhaustive cross-checks stay fast.
pub const DEFAULT_KMAX: u8 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("term is not in the dense fragment")]
    OutsideDenseFragment,
    #[error("order is not finite")]
    NotFinite,
    #[error("finite order exceeds the size guard ({max})")]
    SizeGuard { max: u128 },
    #[error("depth exceeds the resource guard ({max})")]
    DepthGuard { max: u8 },
}

/// Positive identification evidence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IsoWitness {
    /// The inputs are the same term.
    Syntactic,
    /// Both rewrite to this canonical form.
    CanonicalForm(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IsoVerdict {
    Iso { witness: IsoWitness },
    NotIso { depth: u8 },
    Unknown { max_depth: u8 },
}

impl IsoVerdict {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoVerdict::Iso { .. })
    }

    pub fn is_not_iso(&self) -> bool {
        matches!(self, IsoVerdict::NotIso { .. })
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, IsoVerdict::Unknown { .. })
    }

    /// Verdict kind, ignoring witness and depth payloads.
    pub fn kind(&self) -> &'static str {
        match self {
            IsoVerdict::Iso { .. } => "iso",
            IsoVerdict::NotIso { .. } => "not-iso",
            IsoVerdict::Unknown { .. } => "unknown",
        }
    }
}

/// Isomorphism engine with a shared interning context, so batch runs
/// reuse k-type computations across pairs.
pub struct IsoEngine {
    pub kmax: u8,
    ctx: KtCtx,
}

impl IsoEngine {
    pub fn new() -> IsoEngine {
        IsoEngine::with_kmax(DEFAULT_KMAX)
    }

    pub fn with_kmax(kmax: u8) -> IsoEngine {
        IsoEngine {
            kmax,
            ctx: KtCtx::new(),
        }
    }

    /// Equality of depth-`k` invariants; sound for k-round EF equivalence.
    pub fn ef_equivalent(
        &mut self,
        a: &OrderTerm,
        b: &OrderTerm,
        k: u8,
    ) -> Result<bool, IsoError> {
        if k > self.kmax {
            return Err(IsoError::DepthGuard { max: self.kmax });
        }
        Ok(self.ctx.ktype(a, k) == self.ctx.ktype(b, k))
    }

    pub fn ktype(&mut self, term: &OrderTerm, k: u8) -> Result<KType, IsoError> {
        if k > self.kmax {
            return Err(IsoError::DepthGuard { max: self.kmax });
        }
        Ok(self.ctx.ktype_of(term, k))
    }

    pub fn decide_iso(&mut self, a: &OrderTerm, b: &OrderTerm) -> IsoVerdict {
        if a == b {
            return IsoVerdict::Iso {
                witness: IsoWitness::Syntactic,
            };
        }
        for k in 1..=self.kmax {
            if self.ctx.ktype(a, k) != self.ctx.ktype(b, k) {
                return IsoVerdict::NotIso { depth: k };
            }
        }
        let ra = rewrite(a);
        let rb = rewrite(b);
        if ra == rb {
            return IsoVerdict::Iso {
                witness: IsoWitness::CanonicalForm(ra.to_string()),
            };
        }
        IsoVerdict::Unknown {
            max_depth: self.kmax,
        }
    }
}

impl Default for IsoEngine {
    fn default() -> Self {
        IsoEngine::new()
    }
}

/// One-shot wrappers over a fresh engine.
pub fn decide_iso(a: &OrderTerm, b: &OrderTerm) -> IsoVerdict {
    IsoEngine::new().decide_iso(a, b)
}

pub fn ef_equivalent(a: &OrderTerm, b: &OrderTerm, k: u8) -> Result<bool, IsoError> {
    IsoEngine::new().ef_equivalent(a, b, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use OrderTerm::*;

    #[test]
    fn frozen_examples() {
        // expected values computed by the exhaustive game oracle
        assert_eq!(ef_equivalent(&Finite(7), &Finite(8), 3), Ok(true));
        assert_eq!(ef_equivalent(&Finite(6), &Finite(7), 3), Ok(false));
        assert_eq!(ef_equivalent(&Omega, &Zeta, 2), Ok(false));
        assert!(matches!(
            ef_equivalent(&Omega, &Zeta, 7),
            Err(IsoError::DepthGuard { .. })
        ));
    }

    #[test]
    fn engine_agrees_with_game_search_on_finite_orders() {
        let mut eng = IsoEngine::new();
        for m in 1..=12u32 {
            for n in 1..=12u32 {
                for k in 0..=4u8 {
                    let fast = eng.ef_equivalent(&Finite(m), &Finite(n), k).unwrap();
                    let slow = brute_force_ef(&Finite(m), &Finite(n), k).unwrap();
                    assert_eq!(fast, slow, "m={m} n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn decide_iso_verdicts() {
        assert!(decide_iso(&Omega, &Omega).is_iso());
        assert_eq!(decide_iso(&Omega, &OmegaStar), IsoVerdict::NotIso { depth: 2 });
        assert!(decide_iso(&OrderTerm::sum(vec![Eta, Finite(1), Eta]), &Eta).is_iso());
        assert!(decide_iso(&OrderTerm::replace(Omega, Finite(2)), &Omega).is_iso());
    }

    #[test]
    fn sum_of_two_omegas_is_separated_by_ktype() {
        let v = decide_iso(&OrderTerm::sum(vec![Omega, Omega]), &Omega);
        assert!(v.is_not_iso());
    }

    #[test]
    fn finite_against_omega_splits_at_depth_two() {
        // round one: the spoiler plays the finite maximum; round two:
        // anything above the reply. So depth one is the only agreement.
        let mut eng = IsoEngine::new();
        for k in 1..=4u8 {
            for m in 1..=20u32 {
                assert_eq!(
                    eng.ef_equivalent(&Finite(m), &Omega, k).unwrap(),
                    k <= 1,
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn elementarily_equivalent_pairs_stay_unknown() {
        // two unbounded discrete orders agree at every depth; the engine
        // must not fake a verdict either way
        let two_lines = OrderTerm::sum(vec![Zeta, Zeta]);
        let mut eng = IsoEngine::new();
        for k in 0..=6u8 {
            assert!(eng.ef_equivalent(&Zeta, &two_lines, k).unwrap(), "k={k}");
        }
        assert!(decide_iso(&Zeta, &two_lines).is_unknown());
    }

    #[test]
    fn interior_blocks_are_invariants() {
        // only interior singletons absorb into the dense parts
        let blocky = OrderTerm::sum(vec![Finite(2), Eta, Finite(5), Eta, Finite(2)]);
        let smooth = OrderTerm::sum(vec![Finite(2), Eta, Finite(2)]);
        assert!(decide_iso(&blocky, &smooth).is_not_iso());
        let single = OrderTerm::sum(vec![Finite(2), Eta, Finite(1), Eta, Finite(2)]);
        assert!(decide_iso(&single, &smooth).is_iso());
    }
}
