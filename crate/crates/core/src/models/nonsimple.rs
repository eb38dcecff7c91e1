//! Exhaustive search for nonsimplicity witnesses over each theory's
//! finitely parameterized definable-function family.
//!
//! A witness at arity `n` is a definable function taking some ascending
//! `n`-tuple of realizations of the designated type to a realization
//! outside the tuple. The search runs arities in increasing order, so the
//! first hit is the minimal nonsimplicity index within the height bound.
//! Candidates that send ascending tuples above their maximum are tried
//! first, matching the usual normalization of such witnesses.

use super::{
    build_model, closure, rat, ModelElement, ParamSet, Rat, Structure, TheoryId,
};
use crate::order::OrderTerm;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A definable function from the searched family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessFn {
    /// Discrete theory: `x -> x + by`.
    Shift { by: i64 },
    /// Group theory: a rational-linear map.
    Linear { coeffs: Vec<Rat> },
    /// Affine theory: a rational-affine map (coefficients sum to one).
    Affine { coeffs: Vec<Rat> },
}

impl fmt::Display for WitnessFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn vars(n: usize) -> Vec<String> {
            match n {
                1 => vec!["x".into()],
                2 => vec!["x".into(), "y".into()],
                n => (1..=n).map(|i| format!("x{i}")).collect(),
            }
        }
        fn linear(coeffs: &[Rat]) -> String {
            let names = vars(coeffs.len());
            let mut terms: Vec<(bool, String)> = Vec::new();
            for (c, v) in coeffs.iter().zip(names.iter()) {
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                let body = if mag.is_one() {
                    v.clone()
                } else if mag.denom().is_one() {
                    format!("{}{}", mag.numer(), v)
                } else {
                    format!("({}/{}){}", mag.numer(), mag.denom(), v)
                };
                terms.push((c.is_positive(), body));
            }
            // positive terms first
            terms.sort_by_key(|(pos, _)| !*pos);
            let mut out = String::new();
            for (i, (pos, body)) in terms.iter().enumerate() {
                if *pos {
                    if i > 0 {
                        out.push('+');
                    }
                } else {
                    out.push('-');
                }
                out.push_str(body);
            }
            out
        }
        match self {
            WitnessFn::Shift { by } => {
                if *by >= 0 {
                    write!(f, "x -> x+{by}")
                } else {
                    write!(f, "x -> x{by}")
                }
            }
            WitnessFn::Linear { coeffs } => {
                let names = vars(coeffs.len());
                write!(f, "{} -> {}", tuple_of(&names), linear(coeffs))
            }
            WitnessFn::Affine { coeffs } => {
                let names = vars(coeffs.len());
                write!(f, "{} -> {}", tuple_of(&names), linear(coeffs))
            }
        }
    }
}

fn tuple_of(names: &[String]) -> String {
    if names.len() == 1 {
        names[0].clone()
    } else {
        format!("({})", names.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct NonsimplicityCertificate {
    pub theory: TheoryId,
    /// Minimal arity at which a witness was found.
    pub arity: u32,
    pub witness_fn: WitnessFn,
    pub witness_tuple: Vec<ModelElement>,
    pub produced: ModelElement,
    pub height_bound: u32,
    /// `(arity, candidates exhausted)` for every smaller arity.
    pub exhausted_below: Vec<(u32, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchExhausted {
    pub theory: TheoryId,
    pub n_max: u32,
    pub height: u32,
}

impl fmt::Display for SearchExhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no witness of arity <= {} at height <= {} for {}",
            self.n_max, self.height, self.theory
        )
    }
}

/// All reduced rationals with numerator and denominator bounded by
/// `height`, ordered by height then descending value.
fn rationals_up_to(height: u32) -> Vec<Rat> {
    let h = i64::from(height);
    let mut out: Vec<Rat> = Vec::new();
    for den in 1..=h {
        for num in -h..=h {
            if num == 0 {
                continue;
            }
            let q = rat(num, den);
            if !out.contains(&q) {
                out.push(q);
            }
        }
    }
    out.sort_by(|a, b| {
        let ha = a.numer().abs().max(a.denom().abs());
        let hb = b.numer().abs().max(b.denom().abs());
        ha.cmp(&hb).then(b.cmp(a))
    });
    out
}

/// Search for a minimal-arity nonsimplicity witness.
pub fn nonsimplicity_search(
    theory: TheoryId,
    n_max: u32,
    height: u32,
) -> Result<NonsimplicityCertificate, SearchExhausted> {
    let structure = build_model(theory, &OrderTerm::Finite(4));
    let mut exhausted = Vec::new();
    for arity in 1..=n_max {
        let tuple: Vec<ModelElement> = (0..u64::from(arity))
            .map(|i| structure.generator(i).expect("small index"))
            .collect();
        let (found, tried) = search_arity(&structure, &tuple, arity, height);
        if let Some((witness_fn, produced)) = found {
            verify_certificate(&structure, &tuple, &produced);
            return Ok(NonsimplicityCertificate {
                theory,
                arity,
                witness_fn,
                witness_tuple: tuple,
                produced,
                height_bound: height,
                exhausted_below: exhausted,
            });
        }
        exhausted.push((arity, tried));
    }
    Err(SearchExhausted {
        theory,
        n_max,
        height,
    })
}

fn search_arity(
    structure: &Structure,
    tuple: &[ModelElement],
    arity: u32,
    height: u32,
) -> (Option<(WitnessFn, ModelElement)>, u64) {
    let mut tried = 0u64;
    let mut fallback: Option<(WitnessFn, ModelElement)> = None;
    let mut consider =
        |wf: WitnessFn, produced: ModelElement, tried: &mut u64| -> Option<(WitnessFn, ModelElement)> {
            *tried += 1;
            if tuple.contains(&produced) {
                return None;
            }
            if structure.realizes_designated_type(&produced) != Ok(true) {
                return None;
            }
            let above_all = tuple.iter().all(|t| {
                structure.cmp_elements(&produced, t) == Ok(Ordering::Greater)
            });
            if above_all {
                Some((wf, produced))
            } else {
                if fallback.is_none() {
                    fallback = Some((wf, produced));
                }
                None
            }
        };

    match (structure.theory, arity) {
        (TheoryId::DiscreteOrder, 1) => {
            let ModelElement::Discrete(x) = &tuple[0] else {
                unreachable!()
            };
            let mut shifts: Vec<i64> = (1..=i64::from(height))
                .flat_map(|k| [k, -k])
                .collect();
            shifts.sort_by_key(|k| (k.abs(), std::cmp::Reverse(*k)));
            for by in shifts {
                let produced = ModelElement::Discrete(x.shifted(by));
                if let Some(hit) = consider(WitnessFn::Shift { by }, produced, &mut tried) {
                    return (Some(hit), tried);
                }
            }
        }
        (TheoryId::Odag, n) => {
            let candidates = linear_candidates(n as usize, height, false);
            for coeffs in candidates {
                let produced = apply_linear(structure, tuple, &coeffs);
                if let Some(hit) =
                    consider(WitnessFn::Linear { coeffs }, produced, &mut tried)
                {
                    return (Some(hit), tried);
                }
            }
        }
        (TheoryId::AffineOdag, n) => {
            let candidates = linear_candidates(n as usize, height, true);
            for coeffs in candidates {
                let produced = apply_linear(structure, tuple, &coeffs);
                if let Some(hit) =
                    consider(WitnessFn::Affine { coeffs }, produced, &mut tried)
                {
                    return (Some(hit), tried);
                }
            }
        }
        (TheoryId::DiscreteOrder, _) => {
            // shifts are unary; higher arities add nothing to the family
        }
    }
    (fallback, tried)
}

/// Coefficient vectors of the linear (or affine: sum one) family at the
/// given arity and height, identity-like maps excluded, ordered height-
/// first.
fn linear_candidates(arity: usize, height: u32, affine: bool) -> Vec<Vec<Rat>> {
    let rats = rationals_up_to(height);
    let mut out: Vec<Vec<Rat>> = Vec::new();
    match arity {
        1 => {
            for q in &rats {
                if affine && !(q.clone() - rat(1, 1)).is_zero() {
                    continue;
                }
                out.push(vec![q.clone()]);
            }
            if affine {
                // the only unary affine map is the identity
                out.push(vec![rat(1, 1)]);
                out.dedup();
            }
        }
        2 => {
            for q2 in &rats {
                let q1 = if affine {
                    rat(1, 1) - q2
                } else {
                    continue;
                };
                let hq1 = q1.numer().abs().max(q1.denom().abs());
                if q1.is_zero() || hq1 > height.into() {
                    continue;
                }
                out.push(vec![q1, q2.clone()]);
            }
            if !affine {
                for q1 in &rats {
                    for q2 in &rats {
                        out.push(vec![q1.clone(), q2.clone()]);
                    }
                }
            }
        }
        _ => {}
    }
    out.sort_by_key(|coeffs| {
        let h: Rat = coeffs
            .iter()
            .map(|c| Rat::from(c.numer().abs().max(c.denom().abs())))
            .max()
            .unwrap_or_else(Rat::zero);
        // prefer maps whose last coefficient is large and positive: those
        // send ascending tuples upward
        let last = coeffs.last().cloned().unwrap_or_else(Rat::zero);
        (h, std::cmp::Reverse(last))
    });
    out
}

fn apply_linear(structure: &Structure, tuple: &[ModelElement], coeffs: &[Rat]) -> ModelElement {
    let mut acc = super::HahnVector::zero();
    for (c, e) in coeffs.iter().zip(tuple) {
        let ModelElement::Hahn(v) = e else {
            unreachable!()
        };
        acc = acc.add(&v.scale(c), &structure.index);
    }
    ModelElement::Hahn(acc)
}

fn verify_certificate(structure: &Structure, tuple: &[ModelElement], produced: &ModelElement) {
    let params = ParamSet::new(structure, tuple.to_vec()).expect("tuple in carrier");
    let cl = closure(structure, &params, None).expect("closure");
    assert_eq!(
        cl.contains(produced),
        Ok(true),
        "witness output must be definable from the tuple"
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_is_one_nonsimple_under_the_shift() {
        let cert = nonsimplicity_search(TheoryId::DiscreteOrder, 3, 8).unwrap();
        assert_eq!(cert.arity, 1);
        assert_eq!(cert.witness_fn, WitnessFn::Shift { by: 1 });
        assert_eq!(cert.witness_fn.to_string(), "x -> x+1");
    }

    #[test]
    fn odag_is_one_nonsimple_under_doubling() {
        let cert = nonsimplicity_search(TheoryId::Odag, 3, 8).unwrap();
        assert_eq!(cert.arity, 1);
        assert_eq!(cert.witness_fn, WitnessFn::Linear { coeffs: vec![rat(2, 1)] });
        assert_eq!(cert.witness_fn.to_string(), "x -> 2x");
    }

    #[test]
    fn affine_needs_two_arguments() {
        let cert = nonsimplicity_search(TheoryId::AffineOdag, 3, 8).unwrap();
        assert_eq!(cert.arity, 2);
        assert_eq!(
            cert.witness_fn,
            WitnessFn::Affine {
                coeffs: vec![rat(-1, 1), rat(2, 1)]
            }
        );
        assert_eq!(cert.witness_fn.to_string(), "(x,y) -> 2y-x");
        // arity one was exhausted first
        assert_eq!(cert.exhausted_below.len(), 1);
        assert_eq!(cert.exhausted_below[0].0, 1);
        assert!(cert.exhausted_below[0].1 >= 1);
    }

    #[test]
    fn search_reports_exhaustion() {
        let err = nonsimplicity_search(TheoryId::AffineOdag, 1, 8).unwrap_err();
        assert_eq!(
            err,
            SearchExhausted {
                theory: TheoryId::AffineOdag,
                n_max: 1,
                height: 8
            }
        );
    }
}
