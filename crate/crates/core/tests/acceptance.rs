//! The acceptance gate: every claim-level suite over the fixed catalog,
//! one pass/fail line per criterion, with budgets and determinism pinned.

use ordlab::verify::{run_all, run_suite, SuiteReport};
use std::time::{Duration, Instant};

struct Outcome {
    label: &'static str,
    pass: bool,
    detail: String,
}

fn gate(label: &'static str, report: &SuiteReport, budget: Duration, elapsed: Duration) -> Outcome {
    let within = elapsed <= budget;
    let pass = report.all_passed() && within;
    let first_failure = report
        .checks
        .iter()
        .find(|c| c.status == ordlab::verify::CheckStatus::Fail)
        .map(|c| format!("{}: {}", c.id, c.detail));
    let detail = match (report.all_passed(), within) {
        (true, true) => format!(
            "{} checks in {:.1}s (budget {:.0}s)",
            report.passed,
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        ),
        (false, _) => first_failure.unwrap_or_else(|| "checks failed".into()),
        (true, false) => format!(
            "over budget: {:.1}s > {:.0}s",
            elapsed.as_secs_f64(),
            budget.as_secs_f64()
        ),
    };
    Outcome { label, pass, detail }
}

fn run(label: &'static str, suite: &str, seed: u64, budget_s: u64) -> Outcome {
    let start = Instant::now();
    let report = run_suite(suite, seed).expect("known suite");
    gate(label, &report, Duration::from_secs(budget_s), start.elapsed())
}

#[test]
fn acceptance_criteria() {
    let mut outcomes = vec![
        run("1 f-lemma: iso preserved and reflected by expansion", "f-lemma", 0, 60),
        run("2 class-T: tail isomorphism decides source isomorphism", "class-t", 0, 180),
        run("3 phi-claim: separators recovered on tails", "phi-claim", 0, 300),
        run("4 EF threshold: game, invariant, analytic rule agree", "ef-threshold", 0, 30),
        run("5 discrete ladder: index recovered, oracle agrees", "discrete-ladder", 0, 300),
        run("6 hahn ladder: leading-index law, index recovered", "hahn-ladder", 0, 300),
        run("7 canonical tail: relative relations agree above hulls", "canonical-tail", 0, 300),
        run("8 nonsimplicity: minimal witnesses found and pinned", "nonsimplicity", 0, 300),
        run("9 faithfulness: no new classes from definable images", "faithfulness", 0, 300),
        run("10 invariants: round trips, game agreement, set semantics", "invariants", 0, 300),
    ];

    // criterion 11: the whole battery under five minutes, byte-identical
    // per seed up to elapsed-time fields
    let start = Instant::now();
    let first = run_all(0);
    let second = run_all(0);
    let elapsed = start.elapsed();
    let canonical = |r: &ordlab::verify::VerifyReport| {
        r.suites
            .iter()
            .map(|s| s.canonical_json())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let deterministic = canonical(&first) == canonical(&second);
    let within = elapsed <= Duration::from_secs(2 * 300);
    outcomes.push(Outcome {
        label: "11 whole battery: deterministic and under budget",
        pass: first.all_passed && deterministic && within,
        detail: format!(
            "two runs in {:.1}s, byte-identical: {}",
            elapsed.as_secs_f64(),
            deterministic
        ),
    });

    let mut failed = 0;
    for o in &outcomes {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        println!("[{tag}] criterion {} — {}", o.label, o.detail);
        if !o.pass {
            failed += 1;
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
