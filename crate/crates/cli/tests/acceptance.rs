//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are reported but do not fail the
//! run; every other failure exits non-zero.

use std::process::{Command, ExitCode};

use polymat_core::harness::{
    enumerate_corpus, mixed_random_corpus, run_lexsegment_suite, run_on_entries, run_suite,
    unreproducible_witnesses, violated_properties, CheckReport, CorpusEntry, CorpusSpec,
    RunOptions, Status, SuiteKind,
};
use polymat_core::{
    graded_betti, has_linear_resolution, has_lq_all_orders, is_polymatroidal,
    satisfies_symmetric_exchange, taylor_strand_betti, OrderKind, PermBudget,
};

/// The two-condition lexsegment criterion is incomplete; see README.
const KNOWN_UNATTAINABLE: &[u32] = &[8];

const BIN: &str = env!("CARGO_BIN_EXE_polymat");

fn exhaustive(n: usize, d: u32) -> CorpusSpec {
    CorpusSpec::exhaustive(n, d)
}

fn main_corpora() -> Vec<CorpusSpec> {
    vec![exhaustive(3, 2), exhaustive(3, 3), exhaustive(4, 2)]
}

/// Every corpus the property criteria sweep.
fn all_entries() -> Vec<CorpusEntry> {
    let mut specs = main_corpora();
    specs.extend((1..=5).map(|d| exhaustive(2, d)));
    specs.push(CorpusSpec::random(4, 3, 6, 500, 7));
    specs
        .iter()
        .flat_map(|s| enumerate_corpus(s).expect("corpus within bounds"))
        .collect()
}

fn opts() -> RunOptions {
    RunOptions::default()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(BIN).args(args).output().expect("runs polymat");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

fn criterion_1() -> Outcome {
    let (code, json) = run_cli(&["suite", "remark", "--json", "-"]);
    let report: CheckReport = serde_json::from_str(&json).expect("report parses");
    let clause = |p: &str| {
        report
            .verdicts
            .iter()
            .any(|v| v.outcome == p && v.status == Status::Pass)
    };
    let qwlr = report
        .verdicts
        .iter()
        .filter(|v| v.outcome.starts_with("qwlr_") && v.status == Status::Pass)
        .count();
    let ok = code == 0
        && report.passed()
        && clause("not_polymatroidal")
        && clause("lq_fails_lex_x3>x2>x1")
        && clause("lq_fails_revlex_x3>x2>x1")
        && qwlr == 12
        && unreproducible_witnesses(&report)
            .map(|b| b.is_empty())
            .unwrap_or(false);
    outcome(
        ok,
        format!(
            "exit {code}, {qwlr}/12 qwlr combinations, {}",
            report.summary()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in main_corpora() {
        let r = run_suite(SuiteKind::Theorem, Some(&spec), &opts()).expect("suite runs");
        let mismatches = r.count_outcome("mismatch");
        let expected = (1usize << monomial_count(&spec)) - 1;
        ok &= r.totals.pass == expected && r.totals.total == expected && mismatches == 0;
        ok &= unreproducible_witnesses(&r)
            .expect("witnesses parse")
            .is_empty();
        parts.push(format!(
            "{}/{} (n={}, d={})",
            r.totals.pass, expected, spec.n, spec.d
        ));
    }
    outcome(ok, parts.join(", "))
}

fn monomial_count(spec: &CorpusSpec) -> usize {
    polymat_core::monomials_of_degree(spec.n, spec.d).len()
}

fn criterion_3() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for spec in main_corpora() {
        let r = run_suite(SuiteKind::Conjecture, Some(&spec), &opts()).expect("suite runs");
        ok &= r.passed() && r.totals.counterexample == 0;
        ok &= unreproducible_witnesses(&r)
            .expect("witnesses parse")
            .is_empty();
        parts.push(format!(
            "{} counterexamples in {} (n={}, d={})",
            r.totals.counterexample, r.totals.total, spec.n, spec.d
        ));
    }
    outcome(ok, parts.join(", "))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    let mut bad = 0;
    for d in 1..=5 {
        for e in enumerate_corpus(&exhaustive(2, d)).expect("corpus") {
            let p = is_polymatroidal(&e.ideal).unwrap();
            let r = has_lq_all_orders(&e.ideal, OrderKind::Revlex, PermBudget::default()).unwrap();
            let l = has_linear_resolution(&e.ideal).unwrap();
            checked += 1;
            if p != r || p != l {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{checked} ideals, {bad} disagreements"))
}

fn criterion_5() -> Outcome {
    let random = mixed_random_corpus(150, 2024);
    let mut random_checked = 0;
    let mut corpus_checked = 0;
    let mut bad = 0;
    let mut agree = |entries: &[CorpusEntry], counter: &mut usize| {
        for e in entries.iter().filter(|e| e.ideal.len() <= 8) {
            *counter += 1;
            if graded_betti(&e.ideal).unwrap() != taylor_strand_betti(&e.ideal).unwrap() {
                bad += 1;
            }
        }
    };
    agree(&random, &mut random_checked);
    let mut specs = main_corpora();
    specs.extend((1..=5).map(|d| exhaustive(2, d)));
    for spec in specs {
        agree(&enumerate_corpus(&spec).unwrap(), &mut corpus_checked);
    }
    let suite = run_on_entries(SuiteKind::Betti, &random, None, &opts()).expect("suite runs");
    outcome(
        bad == 0 && random_checked >= 100 && suite.passed(),
        format!("{random_checked} random and {corpus_checked} corpus ideals, {bad} disagreements"),
    )
}

fn criterion_6_and_7(entries: &[CorpusEntry]) -> (Outcome, Outcome) {
    let r = run_on_entries(SuiteKind::Implications, entries, None, &opts()).expect("suite runs");
    let violations = violated_properties(&r);
    let count = |p: &str| violations.iter().filter(|(_, q)| q == p).count();
    let lq = count("lq_without_linear_resolution") + count("lq_without_qwlr");
    let with_lq = r
        .verdicts
        .iter()
        .filter(|v| {
            v.detail["lex_orders_with_lq"].as_u64().unwrap_or(0)
                + v.detail["revlex_orders_with_lq"].as_u64().unwrap_or(0)
                > 0
        })
        .count();
    let six = outcome(
        lq == 0,
        format!("{with_lq} ideals with some LQ order, {lq} violations"),
    );

    let mut poly = 0;
    let mut bad = 0;
    for e in entries {
        if is_polymatroidal(&e.ideal).unwrap() {
            poly += 1;
            if !satisfies_symmetric_exchange(&e.ideal).unwrap() {
                bad += 1;
            }
        }
    }
    let suite_bad = count("symmetric_exchange_violated");
    let seven = outcome(
        bad == 0 && suite_bad == 0,
        format!("{poly} polymatroidal ideals, {bad} violations"),
    );
    (six, seven)
}

fn criterion_8() -> (Outcome, Outcome) {
    let r = run_lexsegment_suite(3, 3, &opts()).expect("suite runs");
    let rows = |o: &str| r.verdicts.iter().filter(|v| v.outcome == o).count();
    let two_cond_bad = rows("criterion_disagrees");
    let full_bad = rows("full_criterion_disagrees");
    let completely = r
        .verdicts
        .iter()
        .filter(|v| v.detail.get("criterion").is_some())
        .count();
    let conj = r.totals.counterexample + rows("known_direction_violated");
    let two_cond = outcome(
        two_cond_bad == 0 && full_bad == 0 && conj == 0,
        format!(
            "{completely} completely lexsegment ideals: two-condition criterion disagrees on {two_cond_bad}, \
             full criterion on {full_bad}; {conj} counterexamples among final and completely \
             lexsegment ideals"
        ),
    );
    let full = outcome(
        full_bad == 0 && conj == 0,
        format!("full criterion disagrees on {full_bad}; {conj} counterexamples"),
    );
    (two_cond, full)
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let runs: &[&[&str]] = &[
        &["remark"],
        &["theorem", "--n", "3", "--d", "3"],
        &["conjecture", "--n", "4", "--d", "2"],
        &[
            "conjecture",
            "--n",
            "4",
            "--d",
            "3",
            "--mode",
            "random",
            "--m",
            "6",
            "--count",
            "200",
            "--seed",
            "7",
        ],
        &["localization", "--n", "3", "--d", "3"],
        &["implications", "--n", "3", "--d", "2"],
        &["betti", "--n", "3", "--d", "3"],
        &["lexsegment", "--n", "3", "--d", "3"],
    ];
    let mut bad = Vec::new();
    for (k, args) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for (rep, jobs) in ["1", "8", "1", "8"].iter().enumerate() {
            let path = dir.path().join(format!("{k}-{rep}.json"));
            let mut full = vec!["suite"];
            full.extend_from_slice(args);
            full.extend_from_slice(&["--jobs", jobs, "--json", path.to_str().unwrap()]);
            run_cli(&full);
            outputs.push(std::fs::read(&path).unwrap_or_default());
        }
        if outputs[0].is_empty() || outputs.iter().any(|o| o != &outputs[0]) {
            bad.push(args[0]);
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} suites x 4 runs at jobs 1 and 8; differing: {bad:?}",
            runs.len()
        ),
    )
}

fn main() -> ExitCode {
    let entries = all_entries();
    let (six, seven) = criterion_6_and_7(&entries);
    let (eight, eight_full) = criterion_8();
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "remark reproduction", criterion_1()),
        (2, "theorem equivalence", criterion_2()),
        (3, "conjecture, proven ranges", criterion_3()),
        (4, "two-variable triple equivalence", criterion_4()),
        (5, "betti oracle agreement", criterion_5()),
        (6, "LQ implies linear resolution and QWLR", six),
        (7, "symmetric exchange", seven),
        (8, "lexsegment suite", eight),
        (9, "determinism", criterion_9()),
    ];
    let mut unexpected = 0;
    for (id, name, o) in &results {
        let known = KNOWN_UNATTAINABLE.contains(id);
        let tag = match (o.ok, known) {
            (true, false) => "PASS",
            (false, false) => {
                unexpected += 1;
                "FAIL"
            }
            (false, true) => "FAIL (known)",
            (true, true) => {
                unexpected += 1;
                "PASS (expected failure)"
            }
        };
        println!("criterion {id} {tag}: {name}: {}", o.detail);
    }
    if !eight_full.ok {
        unexpected += 1;
    }
    println!(
        "note: criterion 8 with the full lexsegment criterion {}: {}",
        if eight_full.ok { "PASS" } else { "FAIL" },
        eight_full.detail
    );
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} unexpected results");
        ExitCode::FAILURE
    }
}
