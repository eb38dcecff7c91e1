//! The claim-level verification suites over the fixed catalog.
//!
//! Every suite checks one mathematical claim at desk scale and reports
//! machine-readable pass/fail per check. Reports are canonical: checks
//! appear in a fixed order, all randomness is seeded, and reruns with the
//! same seed are byte-identical except for the elapsed-time fields.

use crate::catalog::catalog;
use crate::invariants::{
    apparent_iso, classify_filling, model_ef_equivalent, realize_model, SimpleModelSpec,
    SimpleTheorySpec, SixType,
};
use crate::iso::{brute_force_ef, IsoEngine};
use crate::logic::{classify_in_tail, locate_phi_base, PointClass};
use crate::models::{
    arch_sim, arch_sim_discrete_witness_oracle, arch_sim_hahn_witness_oracle, build_model,
    canonical_tail_check, faithfulness_check, ladder, nonsimplicity_search, rat, ModelElement,
    ParamSet, TheoryId, WitnessFn,
};
use crate::order::{compare, points, OrderTerm, Point, TailView};
use crate::reduce::{apply_f, make_t, tail_iso_from_with, Role};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub id: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claim: String,
    pub seed: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
    pub all_passed: bool,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    fn new(suite: &str, claim: &str, seed: u64) -> SuiteReport {
        SuiteReport {
            suite: suite.into(),
            claim: claim.into(),
            seed,
            passed: 0,
            failed: 0,
            skipped: 0,
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn push(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
        self.checks.push(Check {
            id: id.into(),
            status,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// The canonical serialization zeroes elapsed time, so determinism
    /// can be compared across runs.
    pub fn canonical_json(&self) -> String {
        let mut clone = self.clone();
        clone.elapsed_ms = 0;
        serde_json::to_string(&clone).expect("serializable")
    }
}

pub const SUITES: &[&str] = &[
    "f-lemma",
    "class-t",
    "phi-claim",
    "ef-threshold",
    "discrete-ladder",
    "hahn-ladder",
    "canonical-tail",
    "nonsimplicity",
    "faithfulness",
    "invariants",
];

/// Run one suite by name.
pub fn run_suite(name: &str, seed: u64) -> Option<SuiteReport> {
    let start = Instant::now();
    let mut report = match name {
        "f-lemma" => suite_f_lemma(seed),
        "class-t" => suite_class_t(seed),
        "phi-claim" => suite_phi_claim(seed),
        "ef-threshold" => suite_ef_threshold(seed),
        "discrete-ladder" => suite_discrete_ladder(seed),
        "hahn-ladder" => suite_hahn_ladder(seed),
        "canonical-tail" => suite_canonical_tail(seed),
        "nonsimplicity" => suite_nonsimplicity(seed),
        "faithfulness" => suite_faithfulness(seed),
        "invariants" => suite_invariants(seed),
        _ => return None,
    };
    report.elapsed_ms = start.elapsed().as_millis();
    Some(report)
}

/// Run every suite, in canonical order.
pub fn run_all(seed: u64) -> VerifyReport {
    let start = Instant::now();
    let suites: Vec<SuiteReport> = SUITES
        .iter()
        .map(|name| run_suite(name, seed).expect("known suite"))
        .collect();
    let all_passed = suites.iter().all(|s| s.all_passed());
    VerifyReport {
        suites,
        all_passed,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

fn suite_f_lemma(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "f-lemma",
        "two orders are isomorphic exactly when their pointwise expansions are, with no unknown verdicts on the catalog",
        seed,
    );
    let mut engine = IsoEngine::new();
    for (name_a, a) in catalog() {
        for (name_b, b) in catalog() {
            let plain = engine.decide_iso(&a, &b);
            let expanded = engine.decide_iso(&apply_f(&a), &apply_f(&b));
            let ok = !plain.is_unknown()
                && !expanded.is_unknown()
                && plain.is_iso() == expanded.is_iso();
            report.push(
                format!("pair[{name_a}][{name_b}]"),
                ok,
                format!("sources {}, expansions {}", plain.kind(), expanded.kind()),
            );
        }
    }
    report
}

fn tail_bases(result: &OrderTerm, count: usize) -> Vec<Point> {
    points(result).take(count).collect()
}

fn suite_class_t(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "class-t",
        "on stacked expansions, tail isomorphism from any basepoints agrees with isomorphism of the sources",
        seed,
    );
    let mut engine = IsoEngine::new();
    for (name_a, a) in catalog() {
        for (name_b, b) in catalog() {
            let ta = make_t(&a);
            let tb = make_t(&b);
            let expect = engine.decide_iso(&a, &b).is_iso();
            // whole-image isomorphism must agree with source isomorphism
            let images = engine.decide_iso(&ta.result, &tb.result).is_iso();
            let mut agreements = 0usize;
            let mut failure = None;
            if images != expect {
                failure.get_or_insert(format!(
                    "stacked images decide {} against the sources",
                    if images { "iso" } else { "non-iso" }
                ));
            }
            for (i, pa) in tail_bases(&ta.result, 5).iter().enumerate() {
                for (j, pb) in tail_bases(&tb.result, 5).iter().enumerate() {
                    match tail_iso_from_with(&mut engine, &ta, pa, &tb, pb) {
                        Ok(v) if v.is_iso() == expect => agreements += 1,
                        Ok(v) => {
                            failure
                                .get_or_insert(format!("bases ({i},{j}): got {}", v.kind()));
                        }
                        Err(e) => {
                            failure.get_or_insert(format!("bases ({i},{j}): error {e}"));
                        }
                    }
                }
            }
            report.push(
                format!("pair[{name_a}][{name_b}]"),
                agreements == 25 && images == expect,
                failure.unwrap_or_else(|| "25/25 basepoint combinations agree".to_string()),
            );
        }
    }
    report
}

fn suite_phi_claim(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "phi-claim",
        "above the located bound of any tail, the classifier marks exactly the construction separators",
        seed,
    );
    for (name, l) in catalog() {
        let cert = make_t(&l);
        for (bi, base) in tail_bases(&cert.result, 5).into_iter().enumerate() {
            let view = TailView::new(cert.result.clone(), base).expect("valid base");
            let bound = locate_phi_base(&view).expect("class-T term");
            let mut mismatches = 0usize;
            let mut others = 0usize;
            let mut seen = 0usize;
            let mut first_bad = None;
            for p in view.points() {
                if seen >= 200 {
                    break;
                }
                if compare(&cert.result, &p, &bound).expect("members") != Ordering::Greater {
                    continue;
                }
                seen += 1;
                let class = classify_in_tail(&view, &p).expect("member");
                let is_separator =
                    matches!(cert.provenance(&p), Ok(Role::Separator { .. }));
                if class == PointClass::Other {
                    others += 1;
                }
                if (class == PointClass::Phi) != is_separator {
                    mismatches += 1;
                    first_bad.get_or_insert(format!("point {p} classified {class:?}"));
                }
            }
            report.push(
                format!("labels[{name}][base{bi}]"),
                mismatches == 0 && others == 0 && seen == 200,
                first_bad.unwrap_or_else(|| format!("{seen} points, 0 mismatches")),
            );
        }
    }
    report
}

fn suite_ef_threshold(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "ef-threshold",
        "game search, the compositional invariant, and the analytic rule coincide on finite chains",
        seed,
    );
    let mut engine = IsoEngine::new();
    for k in 0..=4u8 {
        let bound = (1u32 << k) - 1;
        let mut disagreements = 0usize;
        let mut first_bad = None;
        for m in 1..=20u32 {
            for mm in 1..=20u32 {
                let rule = m == mm || (m >= bound && mm >= bound);
                let game = brute_force_ef(&OrderTerm::Finite(m), &OrderTerm::Finite(mm), k)
                    .expect("within guards");
                let fast = engine
                    .ef_equivalent(&OrderTerm::Finite(m), &OrderTerm::Finite(mm), k)
                    .expect("within guards");
                if game != rule || fast != rule {
                    disagreements += 1;
                    first_bad.get_or_insert(format!(
                        "m={m} m'={mm}: rule={rule} game={game} invariant={fast}"
                    ));
                }
            }
        }
        report.push(
            format!("depth[{k}]"),
            disagreements == 0,
            first_bad.unwrap_or_else(|| "400/400 agree".into()),
        );
    }
    report
}

fn suite_discrete_ladder(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "discrete-ladder",
        "the discrete model's ladder over no parameters is the index order, and the chain rule matches the definitional relation",
        seed,
    );
    let mut engine = IsoEngine::new();
    let empty = ParamSet::empty(TheoryId::DiscreteOrder);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, l) in catalog() {
        let m = build_model(TheoryId::DiscreteOrder, &l);
        let present = ladder(&m, &empty, 12).expect("supported");
        let prefix_ok = present.verify_prefix(&m, &empty);
        let claimed_iso = engine.decide_iso(&present.claimed_order, &l).is_iso();
        report.push(
            format!("ladder[{name}]"),
            prefix_ok.is_ok() && claimed_iso,
            prefix_ok.err().unwrap_or_else(|| "prefix verified, claimed order isomorphic".into()),
        );
        let mut disagreements = 0usize;
        let mut first_bad = None;
        for _ in 0..100 {
            let a = m.random_element(&mut rng);
            let b = m.random_element(&mut rng);
            let rule = arch_sim(&m, &empty, &a, &b).expect("realizations");
            let oracle =
                arch_sim_discrete_witness_oracle(&m, &empty, &a, &b).expect("realizations");
            if rule != oracle {
                disagreements += 1;
                first_bad.get_or_insert(format!("a={a} b={b}: rule={rule} oracle={oracle}"));
            }
        }
        report.push(
            format!("oracle[{name}]"),
            disagreements == 0,
            first_bad.unwrap_or_else(|| "100/100 pairs agree".into()),
        );
    }
    report
}

fn suite_hahn_ladder(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "hahn-ladder",
        "positive vectors are equivalent exactly at equal leading indices, and the group ladder over no parameters is the index order",
        seed,
    );
    let mut engine = IsoEngine::new();
    let empty = ParamSet::empty(TheoryId::Odag);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, l) in catalog() {
        let m = build_model(TheoryId::Odag, &l);
        let present = ladder(&m, &empty, 12).expect("supported");
        let prefix_ok = present.verify_prefix(&m, &empty);
        let claimed_iso = engine.decide_iso(&present.claimed_order, &l).is_iso();
        report.push(
            format!("ladder[{name}]"),
            prefix_ok.is_ok() && claimed_iso,
            prefix_ok.err().unwrap_or_else(|| "prefix verified, claimed order isomorphic".into()),
        );
        let mut disagreements = 0usize;
        let mut first_bad = None;
        for _ in 0..72 {
            let (u, v) = (positive_vector(&m, &mut rng), positive_vector(&m, &mut rng));
            let rule = arch_sim(&m, &empty, &u, &v).expect("positive");
            let oracle = arch_sim_hahn_witness_oracle(&m, &u, &v).expect("positive");
            if rule != oracle {
                disagreements += 1;
                first_bad.get_or_insert(format!("u={u} v={v}: rule={rule} oracle={oracle}"));
            }
        }
        report.push(
            format!("oracle[{name}]"),
            disagreements == 0,
            first_bad.unwrap_or_else(|| "72/72 pairs agree".into()),
        );
    }
    report
}

fn positive_vector(m: &crate::models::Structure, rng: &mut ChaCha8Rng) -> ModelElement {
    loop {
        let ModelElement::Hahn(v) = m.random_element(rng) else {
            unreachable!()
        };
        if v.is_zero() {
            continue;
        }
        let v = if v.is_positive() { v } else { v.neg() };
        return ModelElement::Hahn(v);
    }
}

fn suite_canonical_tail(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "canonical-tail",
        "above the joint hull of two parameter pairs, the two relative Archimedean relations coincide",
        seed,
    );
    for (name, l) in [("eta", OrderTerm::Eta), ("w", OrderTerm::Omega)] {
        for run_seed in [seed, seed.wrapping_add(7)] {
            let r = canonical_tail_check(&l, 1000, run_seed).expect("affine checks run");
            report.push(
                format!("agree[{name}][seed{run_seed}]"),
                r.violations == 0 && r.checked > 0,
                r.counterexample.clone().unwrap_or_else(|| {
                    format!(
                        "{} checked, {} skipped, {} oracle cross-checks",
                        r.checked, r.skipped, r.oracle_cross_checks
                    )
                }),
            );
        }
    }
    report
}

fn suite_nonsimplicity(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "nonsimplicity",
        "minimal nonsimplicity witnesses: the shift at arity one, doubling at arity one, and the affine reflection only at arity two",
        seed,
    );
    match nonsimplicity_search(TheoryId::DiscreteOrder, 3, 8) {
        Ok(cert) => report.push(
            "discrete",
            cert.arity == 1 && cert.witness_fn == WitnessFn::Shift { by: 1 },
            format!("n={} witness {}", cert.arity, cert.witness_fn),
        ),
        Err(e) => report.push("discrete", false, e.to_string()),
    }
    match nonsimplicity_search(TheoryId::Odag, 3, 8) {
        Ok(cert) => report.push(
            "odag",
            cert.arity == 1
                && cert.witness_fn
                    == WitnessFn::Linear {
                        coeffs: vec![rat(2, 1)],
                    },
            format!("n={} witness {}", cert.arity, cert.witness_fn),
        ),
        Err(e) => report.push("odag", false, e.to_string()),
    }
    match nonsimplicity_search(TheoryId::AffineOdag, 3, 8) {
        Ok(cert) => {
            let exhausted_unary = cert
                .exhausted_below
                .iter()
                .any(|(arity, tried)| *arity == 1 && *tried >= 1);
            report.push(
                "affine",
                cert.arity == 2
                    && cert.witness_fn
                        == WitnessFn::Affine {
                            coeffs: vec![rat(-1, 1), rat(2, 1)],
                        }
                    && exhausted_unary,
                format!(
                    "n={} witness {}, unary family exhausted at height {}",
                    cert.arity, cert.witness_fn, cert.height_bound
                ),
            );
        }
        Err(e) => report.push("affine", false, e.to_string()),
    }
    report
}

fn suite_faithfulness(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "faithfulness",
        "definable images of class-distinct realizations stay inside the parameters' Archimedean classes",
        seed,
    );
    for (id, theory) in [("odag", TheoryId::Odag), ("discrete", TheoryId::DiscreteOrder)] {
        let r = faithfulness_check(theory, &OrderTerm::Eta, 500, seed).expect("supported");
        report.push(
            id,
            r.violations == 0 && r.checked > 0,
            r.counterexample
                .clone()
                .unwrap_or_else(|| format!("{} checked, {} skipped", r.checked, r.skipped)),
        );
    }
    report
}

fn random_two_cut_spec(rng: &mut ChaCha8Rng) -> SimpleModelSpec {
    let mut m = BTreeMap::new();
    for name in ["c1", "c2"] {
        let idx: u8 = rng.gen_range(0..=5);
        if idx > 0 {
            m.insert(name.to_string(), SixType(idx));
        }
    }
    SimpleModelSpec::Fillings(m)
}

fn suite_invariants(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new(
        "invariants",
        "realized fillings classify back to their specs, apparent isomorphism matches constant-respecting game equivalence, and the set invariant ignores listing order",
        seed,
    );
    let theory = SimpleTheorySpec::Cuts(vec!["c1".into(), "c2".into()]);

    let mut bad_round_trips = 0usize;
    let mut distinct = std::collections::BTreeSet::new();
    let mut first_bad = None;
    for c1 in 0..=5u8 {
        for c2 in 0..=5u8 {
            let mut m = BTreeMap::new();
            if c1 > 0 {
                m.insert("c1".to_string(), SixType(c1));
            }
            if c2 > 0 {
                m.insert("c2".to_string(), SixType(c2));
            }
            let spec = SimpleModelSpec::Fillings(m);
            let p = realize_model(&theory, &spec).expect("consistent");
            let r1 = classify_filling(&p, "c1");
            let r2 = classify_filling(&p, "c2");
            if r1 != Ok(SixType(c1)) || r2 != Ok(SixType(c2)) {
                bad_round_trips += 1;
                first_bad.get_or_insert(format!("fillings ({c1},{c2}) misclassified"));
            }
            distinct.insert(
                crate::invariants::smooth_invariant(&theory, &spec)
                    .expect("small case")
                    .0,
            );
        }
    }
    report.push(
        "round-trips",
        bad_round_trips == 0 && distinct.len() == 36,
        first_bad.unwrap_or_else(|| format!("36/36 round trips, {} distinct vectors", distinct.len())),
    );

    let mut engine = IsoEngine::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0usize;
    let mut equal_pairs = 0usize;
    let mut first_bad = None;
    for i in 0..50 {
        let a = random_two_cut_spec(&mut rng);
        let b = if rng.gen_bool(0.3) {
            a.clone()
        } else {
            random_two_cut_spec(&mut rng)
        };
        let app = apparent_iso(&theory, &a, &b).expect("same theory");
        let ef = model_ef_equivalent(&theory, &a, &b, 6, &mut engine).expect("small case");
        if app {
            equal_pairs += 1;
        }
        if app != ef {
            disagreements += 1;
            first_bad.get_or_insert(format!("pair {i}: apparent={app} game={ef}"));
        }
    }
    report.push(
        "apparent-vs-game",
        disagreements == 0 && equal_pairs > 0 && equal_pairs < 50,
        first_bad.unwrap_or_else(|| format!("50/50 agree ({equal_pairs} isomorphic pairs)")),
    );

    let rational = SimpleTheorySpec::RationalIndexed;
    let mut order_sensitive = 0usize;
    for i in 0..20 {
        let n = rng.gen_range(1..=6usize);
        let listing: Vec<_> = (0..n)
            .map(|_| {
                (
                    rat(rng.gen_range(1..=30), rng.gen_range(1..=30)),
                    SixType(rng.gen_range(1..=5)),
                )
            })
            .collect();
        let mut shuffled = listing.clone();
        // seeded Fisher-Yates
        for j in (1..shuffled.len()).rev() {
            let k = rng.gen_range(0..=j);
            shuffled.swap(j, k);
        }
        let a = SimpleModelSpec::Listing(listing);
        let b = SimpleModelSpec::Listing(shuffled);
        if !apparent_iso(&rational, &a, &b).expect("rational-indexed") {
            order_sensitive += 1;
        }
        let _ = i;
    }
    report.push(
        "set-semantics",
        order_sensitive == 0,
        format!("{} of 20 permuted listings compared equal", 20 - order_sensitive),
    );

    report
}
