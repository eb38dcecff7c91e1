//! The fixed fourteen-term benchmark catalog used by the verification
//! suites: the chains 1..4, the four classical infinite orders, the three
//! endpointed dense variants, and three composite shapes.

use crate::order::OrderTerm;

pub fn catalog() -> Vec<(&'static str, OrderTerm)> {
    use OrderTerm::*;
    vec![
        ("n1", Finite(1)),
        ("n2", Finite(2)),
        ("n3", Finite(3)),
        ("n4", Finite(4)),
        ("w", Omega),
        ("w*", OmegaStar),
        ("z", Zeta),
        ("eta", Eta),
        ("1+eta", OrderTerm::sum(vec![Finite(1), Eta])),
        ("eta+1", OrderTerm::sum(vec![Eta, Finite(1)])),
        ("1+eta+1", OrderTerm::sum(vec![Finite(1), Eta, Finite(1)])),
        ("w+w*", OrderTerm::sum(vec![Omega, OmegaStar])),
        ("eta+1+eta", OrderTerm::sum(vec![Eta, Finite(1), Eta])),
        ("rep(w,n2)", OrderTerm::replace(Omega, Finite(2))),
    ]
}
