//! `ordlab` — command-line front end for the order-term laboratory.
//!
//! Exit codes: 0 on success (and on all-pass verification), 1 when a
//! verification check fails, 2 on usage errors.

use clap::{Args, Parser, Subcommand};
use ordlab::invariants::{
    apparent_iso, f2_invariant, smooth_invariant, SimpleModelSpec, SimpleTheorySpec, SixType,
};
use ordlab::iso::{IsoEngine, DEFAULT_KMAX};
use ordlab::logic::{classify_in_tail, classify_point};
use ordlab::models::{
    build_model, canonical_tail_check, faithfulness_check, ladder, nonsimplicity_search,
    DiscreteElement, HahnVector, ModelElement, ParamSet, Rat, Structure, TheoryId,
};
use ordlab::order::{parse_point, parse_term, points, OrderTerm, Point, TailView};
use ordlab::reduce::{apply_f, apply_g, extract_source, make_t, tail_iso_t, ClassTCertificate};
use ordlab::verify::{run_all, run_suite, CheckStatus, SuiteReport, SUITES};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ordlab",
    version,
    about = "Countable linear orders as terms: classification, isomorphism, reductions, models, invariants"
)]
struct Cli {
    /// Emit JSON where a human-readable form is the default.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized check; echoed in reports.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum EF depth for isomorphism decisions.
    #[arg(long, global = true)]
    depth: Option<u8>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a term and print its canonical form.
    Parse { term: String },
    /// Classify a point, or scan the first points of a term.
    Classify(ClassifyArgs),
    /// Decide isomorphism of two terms.
    Iso {
        term_a: String,
        term_b: String,
    },
    /// Apply a reduction map to a term.
    Reduce {
        /// One of `f`, `g`, `T`.
        map: String,
        term: String,
    },
    /// Tail-isomorphism verdict on the stacked-expansion class.
    Tailiso {
        term_a: String,
        term_b: String,
    },
    /// Concrete model operations.
    Model {
        #[command(subcommand)]
        cmd: ModelCmd,
    },
    /// Invariants of the simple dense theory with designated cuts.
    Inv {
        #[command(subcommand)]
        cmd: InvCmd,
    },
    /// Run verification suites.
    Verify {
        /// Suite name; may repeat. Without it, all suites run.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Run every suite (the default when no --suite is given).
        #[arg(long)]
        all: bool,
    },
}

#[derive(Args)]
struct ClassifyArgs {
    term: String,
    /// Point to classify (omit with --scan).
    point: Option<String>,
    /// Scan mode: classify the first points in enumeration order.
    #[arg(long)]
    scan: bool,
    /// How many points to scan.
    #[arg(long, default_value_t = 50)]
    count: u64,
    /// Restrict to the tail view from this point.
    #[arg(long)]
    base: Option<String>,
}

#[derive(Subcommand)]
enum ModelCmd {
    /// Build a model and print its shape.
    Build { theory: String, term: String },
    /// Enumerate an Archimedean ladder prefix.
    Ladder {
        theory: String,
        term: String,
        /// Parameter elements as a JSON array (see README for schemas).
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// Search for a minimal nonsimplicity witness.
    Nonsimple {
        theory: String,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
        #[arg(long, default_value_t = 8)]
        height: u32,
    },
    /// Canonical-tail agreement over the affine theory.
    Cantail {
        term: String,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Faithfulness of the designated type.
    Faithful {
        theory: String,
        #[arg(long, default_value_t = 500)]
        samples: u64,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand)]
enum InvCmd {
    /// Smooth invariant vector (finitely many cuts).
    Smooth { theory_file: String, model_file: String },
    /// Countable-set invariant (rational-indexed cuts).
    F2 { theory_file: String, model_file: String },
    /// Apparent-isomorphism decision.
    Appiso {
        theory_file: String,
        model_a: String,
        model_b: String,
    },
}

fn usage_error(msg: impl std::fmt::Display) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn term_arg(text: &str) -> OrderTerm {
    parse_term(text).unwrap_or_else(|e| usage_error(format!("bad term `{text}`: {e}")))
}

fn point_arg(term: &OrderTerm, text: &str) -> Point {
    parse_point(term, text).unwrap_or_else(|e| usage_error(format!("bad point `{text}`: {e}")))
}

fn theory_arg(name: &str) -> TheoryId {
    TheoryId::parse(name).unwrap_or_else(|| {
        usage_error(format!(
            "unknown theory `{name}` (expected discrete-order, odag, or affine-odag)"
        ))
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Parse { ref term } => {
            let t = term_arg(term);
            if cli.json {
                println!("{}", json!({ "term": t.to_string(), "size": size_json(&t) }));
            } else {
                println!("{t}");
            }
            ExitCode::SUCCESS
        }
        Cmd::Classify(ref args) => classify_cmd(args),
        Cmd::Iso {
            ref term_a,
            ref term_b,
        } => {
            let (a, b) = (term_arg(term_a), term_arg(term_b));
            let mut engine = IsoEngine::with_kmax(cli.depth.unwrap_or(DEFAULT_KMAX));
            let verdict = engine.decide_iso(&a, &b);
            println!(
                "{}",
                json!({ "a": a.to_string(), "b": b.to_string(), "verdict": verdict })
            );
            ExitCode::SUCCESS
        }
        Cmd::Reduce { ref map, ref term } => {
            let t = term_arg(term);
            let out = match map.as_str() {
                "f" => apply_f(&t),
                "g" => apply_g(&t),
                "T" | "t" => make_t(&t).result,
                other => usage_error(format!("unknown map `{other}` (expected f, g, or T)")),
            };
            println!("{out}");
            ExitCode::SUCCESS
        }
        Cmd::Tailiso {
            ref term_a,
            ref term_b,
        } => {
            let a = certificate_arg(term_a);
            let b = certificate_arg(term_b);
            match tail_iso_t(&a, &b) {
                Ok(verdict) => {
                    println!(
                        "{}",
                        json!({
                            "source_a": a.source.to_string(),
                            "source_b": b.source.to_string(),
                            "verdict": verdict,
                        })
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Cmd::Model { ref cmd } => model_cmd(cmd, cli.seed),
        Cmd::Inv { ref cmd } => inv_cmd(cmd),
        Cmd::Verify { ref suites, all } => verify_cmd(suites, all, cli.seed, cli.json),
    }
}

fn size_json(t: &OrderTerm) -> Value {
    match t.size() {
        ordlab::order::Cardinality::Finite(n) => json!(n as u64),
        ordlab::order::Cardinality::Infinite => json!("infinite"),
    }
}

fn classify_cmd(args: &ClassifyArgs) -> ExitCode {
    let term = term_arg(&args.term);
    let view = args.base.as_ref().map(|b| {
        let base = point_arg(&term, b);
        TailView::new(term.clone(), base).unwrap_or_else(|e| usage_error(e))
    });
    if args.scan {
        let mut emitted = 0;
        for p in points(&term) {
            if emitted >= args.count {
                break;
            }
            let class = match &view {
                Some(v) => match v.contains(&p) {
                    Ok(true) => classify_in_tail(v, &p),
                    _ => continue,
                },
                None => classify_point(&term, &p),
            };
            let class = class.unwrap_or_else(|e| usage_error(e));
            println!(
                "{}",
                json!({ "index": emitted, "point": p.to_string(), "class": class })
            );
            emitted += 1;
        }
        return ExitCode::SUCCESS;
    }
    let Some(point_text) = &args.point else {
        usage_error("classify needs a point, or --scan");
    };
    let p = point_arg(&term, point_text);
    let class = match &view {
        Some(v) => classify_in_tail(v, &p),
        None => classify_point(&term, &p),
    };
    match class {
        Ok(c) => {
            println!("{c:?}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

/// Accept either a source order or an already stacked-expansion term.
fn certificate_arg(text: &str) -> ClassTCertificate {
    let t = term_arg(text);
    match extract_source(&t) {
        Ok(source) => ClassTCertificate { source, result: t },
        Err(_) => make_t(&t),
    }
}

fn model_cmd(cmd: &ModelCmd, default_seed: u64) -> ExitCode {
    match cmd {
        ModelCmd::Build { theory, term } => {
            let structure = build_model(theory_arg(theory), &term_arg(term));
            let generators: Vec<String> = (0..4)
                .filter_map(|i| structure.generator(i))
                .map(|g| g.to_string())
                .collect();
            println!(
                "{}",
                json!({
                    "theory": structure.theory.to_string(),
                    "base_index": structure.base_index.to_string(),
                    "index": structure.index.to_string(),
                    "generators": generators,
                })
            );
            ExitCode::SUCCESS
        }
        ModelCmd::Ladder {
            theory,
            term,
            params,
            count,
        } => {
            let structure = build_model(theory_arg(theory), &term_arg(term));
            let param_set = match params {
                None => ParamSet::empty(structure.theory),
                Some(text) => parse_params(&structure, text),
            };
            match ladder(&structure, &param_set, *count) {
                Ok(l) => {
                    let verified = l.verify_prefix(&structure, &param_set);
                    println!(
                        "{}",
                        json!({
                            "theory": l.theory.to_string(),
                            "claimed_order": l.claimed_order.to_string(),
                            "above_index": l.above_index.as_ref().map(|p| p.to_string()),
                            "classes": l
                                .classes
                                .iter()
                                .map(|(p, e)| json!({ "position": p.to_string(), "representative": e.to_string() }))
                                .collect::<Vec<_>>(),
                            "prefix_verified": verified.is_ok(),
                        })
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        ModelCmd::Nonsimple {
            theory,
            nmax,
            height,
        } => match nonsimplicity_search(theory_arg(theory), *nmax, *height) {
            Ok(cert) => {
                println!(
                    "{}",
                    json!({
                        "theory": cert.theory.to_string(),
                        "arity": cert.arity,
                        "witness": cert.witness_fn.to_string(),
                        "tuple": cert.witness_tuple.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
                        "produced": cert.produced.to_string(),
                        "height_bound": cert.height_bound,
                        "exhausted_below": cert.exhausted_below,
                    })
                );
                ExitCode::SUCCESS
            }
            Err(e) => {
                println!(
                    "{}",
                    json!({ "found": false, "n_max": e.n_max, "height": e.height })
                );
                ExitCode::from(1)
            }
        },
        ModelCmd::Cantail { term, trials, seed } => {
            let seed = seed.unwrap_or(default_seed);
            match canonical_tail_check(&term_arg(term), *trials, seed) {
                Ok(report) => {
                    let ok = report.violations == 0;
                    println!("{}", serde_json::to_string(&report).expect("report"));
                    if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage_error(e),
            }
        }
        ModelCmd::Faithful {
            theory,
            samples,
            seed,
        } => {
            let seed = seed.unwrap_or(default_seed);
            match faithfulness_check(theory_arg(theory), &OrderTerm::Eta, *samples, seed) {
                Ok(report) => {
                    let ok = report.violations == 0;
                    println!("{}", serde_json::to_string(&report).expect("report"));
                    if ok {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => usage_error(e),
            }
        }
    }
}

fn parse_rat(text: &str) -> Rat {
    let mut pieces = text.split('/');
    let numer = pieces.next().and_then(|s| s.parse::<i64>().ok());
    let denom = match pieces.next() {
        None => Some(1i64),
        Some(s) => s.parse::<i64>().ok().filter(|d| *d != 0),
    };
    match (numer, denom, pieces.next()) {
        (Some(n), Some(d), None) => ordlab::models::rat(n, d),
        _ => usage_error(format!("bad rational `{text}` (expected p/q)")),
    }
}

/// Parameter elements: for the vector theories
/// `[{"support": [["<point>", "<p/q>"], ...]}, ...]`, for the discrete
/// theory `[{"chain": "<point>", "offset": <int>}, ...]`.
fn parse_params(structure: &Structure, text: &str) -> ParamSet {
    let value: Value =
        serde_json::from_str(text).unwrap_or_else(|e| usage_error(format!("bad --params: {e}")));
    let Value::Array(items) = value else {
        usage_error("--params must be a JSON array");
    };
    let mut elements = Vec::new();
    for item in items {
        let element = match structure.theory {
            TheoryId::DiscreteOrder => {
                let chain = item
                    .get("chain")
                    .and_then(Value::as_str)
                    .unwrap_or_else(|| usage_error("discrete parameter needs \"chain\""));
                let offset = item
                    .get("offset")
                    .and_then(Value::as_i64)
                    .unwrap_or_else(|| usage_error("discrete parameter needs \"offset\""));
                ModelElement::Discrete(DiscreteElement::new(
                    point_arg(&structure.index, chain),
                    offset,
                ))
            }
            TheoryId::Odag | TheoryId::AffineOdag => {
                let support = item
                    .get("support")
                    .and_then(Value::as_array)
                    .unwrap_or_else(|| usage_error("vector parameter needs \"support\""));
                let mut entries = Vec::new();
                for pair in support {
                    let (Some(pt), Some(coeff)) = (
                        pair.get(0).and_then(Value::as_str),
                        pair.get(1).and_then(Value::as_str),
                    ) else {
                        usage_error("support entries are [\"<point>\", \"<p/q>\"]");
                    };
                    entries.push((point_arg(&structure.index, pt), parse_rat(coeff)));
                }
                let v = HahnVector::from_entries(&structure.index, entries)
                    .unwrap_or_else(|e| usage_error(e));
                ModelElement::Hahn(v)
            }
        };
        elements.push(element);
    }
    ParamSet::new(structure, elements).unwrap_or_else(|e| usage_error(e))
}

fn read_json(path: &str) -> Value {
    let text = std::fs::read_to_string(path)
        .unwrap_or_else(|e| usage_error(format!("cannot read {path}: {e}")));
    serde_json::from_str(&text).unwrap_or_else(|e| usage_error(format!("bad JSON in {path}: {e}")))
}

/// Theory files: `{"cuts": ["c1", "c2"]}` or `{"rational_indexed": true}`.
fn parse_theory_file(path: &str) -> SimpleTheorySpec {
    let v = read_json(path);
    if let Some(cuts) = v.get("cuts").and_then(Value::as_array) {
        let names = cuts
            .iter()
            .map(|c| {
                c.as_str()
                    .unwrap_or_else(|| usage_error("cut names are strings"))
                    .to_string()
            })
            .collect();
        return SimpleTheorySpec::Cuts(names);
    }
    if v.get("rational_indexed").and_then(Value::as_bool) == Some(true) {
        return SimpleTheorySpec::RationalIndexed;
    }
    usage_error(format!("{path}: expected \"cuts\" or \"rational_indexed\""));
}

/// Model files: `{"fillings": {"c1": 5}}` or
/// `{"listing": [["1/2", 2], ...]}`.
fn parse_model_file(path: &str) -> SimpleModelSpec {
    let v = read_json(path);
    if let Some(fillings) = v.get("fillings").and_then(Value::as_object) {
        let mut map = BTreeMap::new();
        for (cut, idx) in fillings {
            let idx = idx
                .as_u64()
                .and_then(|i| u8::try_from(i).ok())
                .and_then(SixType::new)
                .unwrap_or_else(|| usage_error("filling indices are 0..=5"));
            if idx != SixType::EMPTY {
                map.insert(cut.clone(), idx);
            }
        }
        return SimpleModelSpec::Fillings(map);
    }
    if let Some(listing) = v.get("listing").and_then(Value::as_array) {
        let mut out = Vec::new();
        for entry in listing {
            let (Some(code), Some(idx)) = (
                entry.get(0).and_then(Value::as_str),
                entry.get(1).and_then(Value::as_u64),
            ) else {
                usage_error("listing entries are [\"<p/q>\", <0..=5>]");
            };
            let idx = u8::try_from(idx)
                .ok()
                .and_then(SixType::new)
                .unwrap_or_else(|| usage_error("listing indices are 0..=5"));
            out.push((parse_rat(code), idx));
        }
        return SimpleModelSpec::Listing(out);
    }
    usage_error(format!("{path}: expected \"fillings\" or \"listing\""));
}

fn inv_cmd(cmd: &InvCmd) -> ExitCode {
    match cmd {
        InvCmd::Smooth {
            theory_file,
            model_file,
        } => {
            let theory = parse_theory_file(theory_file);
            let model = parse_model_file(model_file);
            match smooth_invariant(&theory, &model) {
                Ok(v) => {
                    println!("{}", json!({ "vector": v }));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        InvCmd::F2 {
            theory_file,
            model_file,
        } => {
            let theory = parse_theory_file(theory_file);
            let model = parse_model_file(model_file);
            match f2_invariant(&theory, &model) {
                Ok(s) => {
                    println!("{}", json!({ "set": s }));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        InvCmd::Appiso {
            theory_file,
            model_a,
            model_b,
        } => {
            let theory = parse_theory_file(theory_file);
            let a = parse_model_file(model_a);
            let b = parse_model_file(model_b);
            match apparent_iso(&theory, &a, &b) {
                Ok(result) => {
                    println!("{}", json!({ "apparently_isomorphic": result }));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
    }
}

fn print_suite_line(report: &SuiteReport) {
    let status = if report.all_passed() { "PASS" } else { "FAIL" };
    println!(
        "[{status}] {}: {} passed, {} failed, {} skipped ({} ms, seed {})",
        report.suite, report.passed, report.failed, report.skipped, report.elapsed_ms, report.seed
    );
    for check in &report.checks {
        if check.status == CheckStatus::Fail {
            println!("       {}: {}", check.id, check.detail);
        }
    }
}

fn verify_cmd(suites: &[String], all: bool, seed: u64, as_json: bool) -> ExitCode {
    let reports: Vec<SuiteReport> = if all || suites.is_empty() {
        run_all(seed).suites
    } else {
        suites
            .iter()
            .map(|name| {
                run_suite(name, seed).unwrap_or_else(|| {
                    usage_error(format!(
                        "unknown suite `{name}` (expected one of {})",
                        SUITES.join(", ")
                    ))
                })
            })
            .collect()
    };
    let all_passed = reports.iter().all(|r| r.all_passed());
    if as_json {
        println!(
            "{}",
            json!({ "suites": reports, "all_passed": all_passed, "seed": seed })
        );
    } else {
        for report in &reports {
            print_suite_line(report);
        }
        println!("{}", if all_passed { "all suites passed" } else { "FAILURES" });
    }
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
