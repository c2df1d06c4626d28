//! Suite runners. Each suite maps a per-ideal check over a corpus and folds
//! the verdicts into a [`CheckReport`].

use std::collections::HashMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::betti::{
    has_linear_resolution, multigraded_betti, taylor_euler_characteristics,
    taylor_multigraded_betti, BettiTable,
};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lexsegment::{
    default_shadow_depth, final_segment_ideal, first_non_lexsegment_shadow, lexsegment,
    linear_segment_criterion, linear_segment_criterion_full, monomials_of_degree,
};
use crate::monomial::{Monomial, OrderKind, VariableOrder};
use crate::parse::parse_ideal;
use crate::polymatroid::{
    polymatroidal_failure, pure_colon_exchange_failure, symmetric_exchange_failure, ExchangeWitness,
};
use crate::quotients::{
    conjecture_probe, linear_quotients_failure, lq_all_orders_failure, qwlr_failure,
    sort_generators, theorem_equivalence, ConjectureVerdict, OrderFailure, PermBudget,
    TheoremVerdict,
};

use super::corpus::{enumerate_corpus, ideal_from_mask, CorpusEntry, CorpusSpec};
use super::report::{CheckReport, Status, Verdict};

/// The ideal checked by the `remark` suite: `(x1 x3^2, x1^2 x3, x1 x2 x3, x2^2 x3)`.
pub fn remark_ideal() -> MonomialIdeal {
    parse_ideal("x1*x3^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3", Some(3)).expect("literal parses")
}

/// Largest generator count the Betti suite feeds to the Taylor oracle.
pub const BETTI_SUITE_MAX_GENS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Theorem,
    Conjecture,
    Remark,
    Localization,
    Implications,
    Betti,
    Lexsegment,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Theorem => "theorem",
            SuiteKind::Conjecture => "conjecture",
            SuiteKind::Remark => "remark",
            SuiteKind::Localization => "localization",
            SuiteKind::Implications => "implications",
            SuiteKind::Betti => "betti",
            SuiteKind::Lexsegment => "lexsegment",
        }
    }

    /// Whether the suite sweeps a corpus (the others are fixed inputs or
    /// build their own range from `n` and `d`).
    pub fn uses_corpus(self) -> bool {
        !matches!(self, SuiteKind::Remark | SuiteKind::Lexsegment)
    }
}

impl std::str::FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "theorem" => SuiteKind::Theorem,
            "conjecture" => SuiteKind::Conjecture,
            "remark" => SuiteKind::Remark,
            "localization" => SuiteKind::Localization,
            "implications" => SuiteKind::Implications,
            "betti" => SuiteKind::Betti,
            "lexsegment" => SuiteKind::Lexsegment,
            other => return Err(Error::CorpusBounds(format!("unknown suite `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Worker threads; `0` means the machine's parallelism.
    pub jobs: usize,
    pub budget: PermBudget,
    /// Record wall time in the report (breaks byte-identical output).
    pub timing: bool,
}

/// Status, outcome label, detail.
type Checked = (Status, String, Value);

fn pass(outcome: &str, detail: Value) -> Checked {
    (Status::Pass, outcome.to_string(), detail)
}

fn fail(outcome: &str, detail: Value) -> Checked {
    (Status::Fail, outcome.to_string(), detail)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("verdict types serialize")
}

fn sweep<F>(entries: &[CorpusEntry], opts: &RunOptions, check: F) -> Result<Vec<Verdict>>
where
    F: Fn(&MonomialIdeal) -> Result<Checked> + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    // collect() keeps corpus order whatever the completion order
    pool.install(|| {
        entries
            .par_iter()
            .enumerate()
            .map(|(index, e)| {
                let (status, outcome, detail) = match check(&e.ideal) {
                    Ok(c) => c,
                    Err(err) => fail("error", json!({ "error": err.to_string() })),
                };
                Ok(Verdict {
                    index,
                    mask: Some(e.mask),
                    ideal: e.ideal.to_string(),
                    status,
                    outcome,
                    detail,
                })
            })
            .collect()
    })
}

/// Run one suite. Corpus suites need `spec`; `lexsegment` reads `n` and `d`
/// from it as upper bounds; `remark` ignores it.
pub fn run_suite(
    kind: SuiteKind,
    spec: Option<&CorpusSpec>,
    opts: &RunOptions,
) -> Result<CheckReport> {
    let started = Instant::now();
    let need_spec =
        || spec.ok_or_else(|| Error::CorpusBounds(format!("suite {} needs a corpus", kind.name())));
    let mut report = match kind {
        SuiteKind::Remark => reproduce_remark()?,
        SuiteKind::Lexsegment => {
            let s = need_spec()?;
            run_lexsegment_suite(s.n, s.d, opts)?
        }
        _ => {
            let s = need_spec()?;
            let entries = enumerate_corpus(s)?;
            run_on_entries(kind, &entries, Some(s.clone()), opts)?
        }
    };
    if opts.timing {
        report.wall_time_ms = Some(started.elapsed().as_millis() as u64);
    }
    Ok(report)
}

/// Run a corpus suite over explicit entries.
pub fn run_on_entries(
    kind: SuiteKind,
    entries: &[CorpusEntry],
    corpus: Option<CorpusSpec>,
    opts: &RunOptions,
) -> Result<CheckReport> {
    let budget = opts.budget;
    let verdicts = match kind {
        SuiteKind::Theorem => sweep(entries, opts, |i| check_theorem(i, budget))?,
        SuiteKind::Conjecture => sweep(entries, opts, |i| check_conjecture(i, budget))?,
        SuiteKind::Localization => sweep(entries, opts, check_localization)?,
        SuiteKind::Implications => sweep(entries, opts, |i| check_implications(i, budget))?,
        SuiteKind::Betti => sweep(entries, opts, check_betti)?,
        SuiteKind::Remark | SuiteKind::Lexsegment => {
            return Err(Error::Precondition(format!(
                "suite {} does not run over a corpus",
                kind.name()
            )))
        }
    };
    let mut report = CheckReport::new(kind.name(), corpus, verdicts);
    if kind == SuiteKind::Betti {
        report.notes.push(format!(
            "ideals with more than {BETTI_SUITE_MAX_GENS} generators are skipped"
        ));
    }
    Ok(report)
}

pub fn run_theorem_suite(spec: &CorpusSpec, opts: &RunOptions) -> Result<CheckReport> {
    run_suite(SuiteKind::Theorem, Some(spec), opts)
}

pub fn run_conjecture_search(spec: &CorpusSpec, opts: &RunOptions) -> Result<CheckReport> {
    run_suite(SuiteKind::Conjecture, Some(spec), opts)
}

pub fn run_localization_probe(spec: &CorpusSpec, opts: &RunOptions) -> Result<CheckReport> {
    run_suite(SuiteKind::Localization, Some(spec), opts)
}

fn check_theorem(ideal: &MonomialIdeal, budget: PermBudget) -> Result<Checked> {
    let verdict = theorem_equivalence(ideal, budget)?;
    let detail = to_value(&verdict);
    let polymatroidal = match &verdict {
        TheoremVerdict::Mismatch { .. } => return Ok(fail("mismatch", detail)),
        TheoremVerdict::Consistent { polymatroidal, .. } => *polymatroidal,
    };
    if ideal.n() == 2 {
        let revlex = lq_all_orders_failure(ideal, OrderKind::Revlex, budget)?.is_none();
        let linear = has_linear_resolution(ideal)?;
        if revlex != polymatroidal || linear != polymatroidal {
            return Ok(fail(
                "two_variable_mismatch",
                json!({
                    "polymatroidal": polymatroidal,
                    "revlex_all_orders": revlex,
                    "linear_resolution": linear,
                }),
            ));
        }
    }
    let outcome = if polymatroidal {
        "polymatroidal"
    } else {
        "not_polymatroidal"
    };
    Ok(pass(outcome, detail))
}

fn check_conjecture(ideal: &MonomialIdeal, budget: PermBudget) -> Result<Checked> {
    let verdict = conjecture_probe(ideal, budget)?;
    let detail = to_value(&verdict);
    Ok(match verdict {
        ConjectureVerdict::Polymatroidal => pass("polymatroidal", detail),
        ConjectureVerdict::RefutedBySomeOrder { .. } => pass("refuted_by_some_order", detail),
        ConjectureVerdict::Counterexample { .. } => {
            (Status::Counterexample, "counterexample".into(), detail)
        }
        ConjectureVerdict::KnownDirectionViolated { .. } => {
            fail("known_direction_violated", detail)
        }
    })
}

/// Every proper subset of the variables, as zero-based index lists, in
/// ascending bitmask order.
fn proper_variable_subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..(1u64 << n) - 1).map(move |mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
}

fn one_based(c: &[usize]) -> Vec<usize> {
    c.iter().map(|i| i + 1).collect()
}

fn check_localization(ideal: &MonomialIdeal) -> Result<Checked> {
    if polymatroidal_failure(ideal)?.is_some() {
        return Ok(pass("skipped_not_polymatroidal", Value::Null));
    }
    for c in proper_variable_subsets(ideal.n()) {
        let loc = ideal.localize(&c)?;
        if !has_linear_resolution(&loc)? {
            return Ok(fail(
                "nonlinear_localization",
                json!({ "at": one_based(&c), "localization": loc.to_string() }),
            ));
        }
    }
    Ok(pass("all_localizations_linear", Value::Null))
}

fn pure_power_count(ideal: &MonomialIdeal, d: u64) -> usize {
    ideal
        .gens()
        .iter()
        .filter(|g| g.support().count() == 1 && g.degree() == d)
        .count()
}

/// Violations the implications suite can report. The pure-colon exchange
/// statement is recorded separately: it is refuted by small examples, so it
/// is marked as a counterexample rather than a failure.
pub const PURE_COLON_COUNTEREXAMPLE: &str = "pure_colon_exchange_violated";

/// Cross-module implications on one ideal. Every violation found is listed
/// in the detail under `violations`.
fn check_implications(ideal: &MonomialIdeal, budget: PermBudget) -> Result<Checked> {
    let d = ideal.require_equigenerated()?;
    budget.admit(ideal.n())?;
    let polymatroidal = polymatroidal_failure(ideal)?.is_none();
    let mut linear: Option<bool> = None;
    let mut violations: Vec<Value> = Vec::new();
    let mut lq_orders = [0usize; 2];
    let mut revlex_all = true;

    for (k, kind) in OrderKind::BOTH.into_iter().enumerate() {
        for o in VariableOrder::all(ideal.n()) {
            let seq = sort_generators(ideal, kind, &o)?;
            match linear_quotients_failure(&seq) {
                None => {
                    lq_orders[k] += 1;
                    if !*linear.get_or_insert(has_linear_resolution(ideal)?) {
                        violations.push(json!({
                            "property": "lq_without_linear_resolution",
                            "kind": kind,
                            "order": o,
                        }));
                    }
                    if let Some(f) = qwlr_failure(&seq)? {
                        violations.push(json!({
                            "property": "lq_without_qwlr",
                            "kind": kind,
                            "order": o,
                            "qwlr": to_value(&f),
                        }));
                    }
                }
                Some(failure) => {
                    if kind == OrderKind::Revlex {
                        revlex_all = false;
                    }
                    if polymatroidal {
                        violations.push(json!({
                            "property": "polymatroidal_without_lq",
                            "failure": to_value(&OrderFailure { kind, order: o, failure }),
                        }));
                    }
                }
            }
        }
    }

    if polymatroidal {
        if let Some(w) = symmetric_exchange_failure(ideal)? {
            violations.push(json!({ "property": "symmetric_exchange_violated", "witness": w }));
        }
        for c in proper_variable_subsets(ideal.n()) {
            let loc = ideal.localize(&c)?;
            if !loc.is_unit() && polymatroidal_failure(&loc)?.is_some() {
                violations.push(json!({
                    "property": "localization_not_polymatroidal",
                    "at": one_based(&c),
                    "localization": loc.to_string(),
                }));
            }
        }
    }

    // revlex for every order is known to characterize these cases
    let n = ideal.n();
    let known_case = d == 2 || n <= 3 || pure_power_count(ideal, d) + 1 >= n;
    if known_case && revlex_all != polymatroidal {
        violations.push(json!({
            "property": "revlex_characterization_violated",
            "polymatroidal": polymatroidal,
            "revlex_all_orders": revlex_all,
        }));
    }

    let failed = !violations.is_empty();
    let identity_lex = sort_generators(ideal, OrderKind::Lex, &VariableOrder::identity(n))?;
    let mut refuted = false;
    if linear_quotients_failure(&identity_lex).is_none() {
        if let Some((u, v)) = pure_colon_exchange_failure(ideal) {
            refuted = true;
            violations.push(json!({ "property": PURE_COLON_COUNTEREXAMPLE, "u": u, "v": v }));
        }
    }

    let detail = json!({
        "polymatroidal": polymatroidal,
        "lex_orders_with_lq": lq_orders[0],
        "revlex_orders_with_lq": lq_orders[1],
        "violations": violations,
    });
    Ok(if failed {
        fail("violated", detail)
    } else if refuted {
        (
            Status::Counterexample,
            PURE_COLON_COUNTEREXAMPLE.into(),
            detail,
        )
    } else {
        pass(
            if polymatroidal {
                "polymatroidal"
            } else {
                "not_polymatroidal"
            },
            detail,
        )
    })
}

/// Properties named in the `violations` lists of an implications report.
pub fn violated_properties(report: &CheckReport) -> Vec<(usize, String)> {
    report
        .verdicts
        .iter()
        .flat_map(|v| {
            v.detail["violations"]
                .as_array()
                .into_iter()
                .flatten()
                .filter_map(|x| x["property"].as_str())
                .map(move |p| (v.index, p.to_string()))
        })
        .collect()
}

fn check_betti(ideal: &MonomialIdeal) -> Result<Checked> {
    if ideal.len() > BETTI_SUITE_MAX_GENS {
        return Ok(pass("skipped_too_many_generators", Value::Null));
    }
    let koszul = multigraded_betti(ideal)?;
    let taylor = taylor_multigraded_betti(ideal)?;
    if koszul != taylor {
        let show = |b: &crate::betti::MultigradedBetti| {
            b.iter()
                .map(|((i, a), v)| json!([i, a.to_string(), v]))
                .collect::<Vec<_>>()
        };
        return Ok(fail(
            "oracle_disagreement",
            json!({ "koszul": show(&koszul), "taylor": show(&taylor) }),
        ));
    }
    let table = BettiTable::from_multigraded(&koszul);
    if table.total(0) != ideal.len() as u64 {
        return Ok(fail("generator_count_mismatch", table.to_json()));
    }
    // per multidegree: sum_i (-1)^i beta_{i,a} equals the Taylor strand count
    let chi = taylor_euler_characteristics(ideal)?;
    let mut from_betti: HashMap<&Monomial, i64> = HashMap::new();
    for ((i, a), &b) in &koszul {
        let signed = if i % 2 == 0 { b as i64 } else { -(b as i64) };
        *from_betti.entry(a).or_insert(0) += signed;
    }
    for (a, &c) in &chi {
        if from_betti.get(a).copied().unwrap_or(0) != c {
            return Ok(fail(
                "euler_characteristic_mismatch",
                json!({ "multidegree": a.to_string() }),
            ));
        }
    }
    let reversed: Vec<usize> = (0..ideal.n()).rev().collect();
    let renamed = BettiTable::from_multigraded(&multigraded_betti(&ideal.permute(&reversed)?)?);
    if renamed != table {
        return Ok(fail("not_rename_invariant", table.to_json()));
    }
    Ok(pass("agree", table.to_json()))
}

/// Seeded random ideals with mixed shapes: `n` in 1..=4, `d` in 1..=4 and up
/// to eight generators drawn uniformly from `M_d`.
pub fn mixed_random_corpus(count: usize, seed: u64) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=4usize);
            let d = rng.gen_range(1..=4u32);
            let universe = monomials_of_degree(n, d).into_elems();
            let m = rng.gen_range(1..=universe.len().min(BETTI_SUITE_MAX_GENS));
            let mask = rand::seq::index::sample(&mut rng, universe.len(), m)
                .into_iter()
                .fold(0u64, |acc, k| acc | 1 << k);
            CorpusEntry {
                mask,
                ideal: ideal_from_mask(&universe, n, mask),
            }
        })
        .collect()
}

/// The closing-remark reproduction: not polymatroidal, linear quotients fail
/// for lex and revlex under `x3 > x2 > x1`, and quotients with linear
/// resolution hold for both kinds under all six orders.
pub fn reproduce_remark() -> Result<CheckReport> {
    let ideal = remark_ideal();
    let text = ideal.to_string();
    let mut verdicts = Vec::new();
    let mut push = |checked: Checked| {
        let (status, outcome, detail) = checked;
        verdicts.push(Verdict {
            index: verdicts.len(),
            mask: None,
            ideal: text.clone(),
            status,
            outcome,
            detail,
        });
    };

    match polymatroidal_failure(&ideal)? {
        Some(w) => push(pass("not_polymatroidal", to_value(&w))),
        None => push(fail("unexpectedly_polymatroidal", Value::Null)),
    }

    let o321 = VariableOrder::from_one_based(&[3, 2, 1])?;
    for kind in OrderKind::BOTH {
        let seq = sort_generators(&ideal, kind, &o321)?;
        let label = format!("lq_fails_{kind}_x3>x2>x1");
        match linear_quotients_failure(&seq) {
            Some(f) => push(pass(&label, to_value(&f))),
            None => push(fail(&label, json!("linear quotients unexpectedly hold"))),
        }
    }

    for kind in OrderKind::BOTH {
        for o in VariableOrder::all(3) {
            let seq = sort_generators(&ideal, kind, &o)?;
            let label = format!("qwlr_{kind}_{o}");
            match qwlr_failure(&seq)? {
                None => push(pass(&label, Value::Null)),
                Some(f) => push(fail(&label, to_value(&f))),
            }
        }
    }
    Ok(CheckReport::new("remark", None, verdicts))
}

/// Completely lexsegment ideals and final-segment ideals for every `n <= max_n`,
/// `d <= max_d`.
pub fn run_lexsegment_suite(max_n: usize, max_d: u32, opts: &RunOptions) -> Result<CheckReport> {
    let budget = opts.budget;
    let mut rows: Vec<Checked> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut skipped = 0usize;
    for n in 1..=max_n {
        for d in 1..=max_d {
            let md = monomials_of_degree(n, d).into_elems();
            let depth = default_shadow_depth(n, u64::from(d));
            for (a, u) in md.iter().enumerate() {
                for v in &md[a..] {
                    if first_non_lexsegment_shadow(u, v, depth)?.is_some() {
                        skipped += 1;
                        continue;
                    }
                    let ideal = lexsegment(u, v)?.to_ideal()?;
                    labels.push(ideal.to_string());
                    rows.push(check_completely_lexsegment(&ideal, u, v, depth, budget)?);
                }
                let fin = final_segment_ideal(u)?;
                labels.push(fin.to_string());
                rows.push(check_final_segment(&fin, u, budget)?);
            }
        }
    }
    let verdicts = rows
        .into_iter()
        .zip(labels)
        .enumerate()
        .map(|(index, ((status, outcome, detail), ideal))| Verdict {
            index,
            mask: None,
            ideal,
            status,
            outcome,
            detail,
        })
        .collect();
    let mut report = CheckReport::new("lexsegment", None, verdicts);
    report.notes.push(format!(
        "range n <= {max_n}, d <= {max_d}; shadows checked to depth n*d; {skipped} segments not completely lexsegment"
    ));
    Ok(report)
}

fn check_completely_lexsegment(
    ideal: &MonomialIdeal,
    u: &Monomial,
    v: &Monomial,
    depth: usize,
    budget: PermBudget,
) -> Result<Checked> {
    let criterion = linear_segment_criterion(u, v)?;
    let full = linear_segment_criterion_full(u, v)?;
    let linear = has_linear_resolution(ideal)?;
    let polymatroidal = polymatroidal_failure(ideal)?.is_none();
    let revlex = lq_all_orders_failure(ideal, OrderKind::Revlex, budget)?.is_none();
    let detail = json!({
        "u": u.to_string(),
        "v": v.to_string(),
        "shadow_depth": depth,
        "criterion": criterion,
        "full_criterion": full,
        "linear_resolution": linear,
        "polymatroidal": polymatroidal,
        "revlex_all_orders": revlex,
    });
    if revlex && !polymatroidal {
        return Ok((Status::Counterexample, "counterexample".into(), detail));
    }
    if full != linear {
        return Ok(fail("full_criterion_disagrees", detail));
    }
    if criterion != linear {
        return Ok(fail("criterion_disagrees", detail));
    }
    if revlex != polymatroidal {
        return Ok(fail("revlex_characterization_violated", detail));
    }
    Ok(pass("completely_lexsegment", detail))
}

fn check_final_segment(ideal: &MonomialIdeal, v: &Monomial, budget: PermBudget) -> Result<Checked> {
    let verdict = conjecture_probe(ideal, budget)?;
    let detail = json!({ "v": v.to_string(), "probe": to_value(&verdict) });
    Ok(match verdict {
        ConjectureVerdict::Counterexample { .. } => {
            (Status::Counterexample, "counterexample".into(), detail)
        }
        ConjectureVerdict::KnownDirectionViolated { .. } => {
            fail("known_direction_violated", detail)
        }
        _ => pass("final_segment", detail),
    })
}

/// Indices of verdicts whose serialized witness does not reproduce its
/// failure on the ideal it was reported for.
pub fn unreproducible_witnesses(report: &CheckReport) -> Result<Vec<usize>> {
    let n = report.corpus.as_ref().map(|c| c.n);
    let mut bad = Vec::new();
    for v in &report.verdicts {
        let ideal = parse_ideal(&v.ideal, n)?;
        let ok = match (report.suite.as_str(), v.detail.is_null()) {
            (_, true) => true,
            ("theorem", false) if v.outcome != "two_variable_mismatch" => {
                let verdict: TheoremVerdict = serde_json::from_value(v.detail.clone())
                    .map_err(|e| Error::Precondition(e.to_string()))?;
                let (exchange, lex) = match &verdict {
                    TheoremVerdict::Consistent {
                        exchange,
                        lex_failure,
                        ..
                    }
                    | TheoremVerdict::Mismatch {
                        exchange,
                        lex_failure,
                        ..
                    } => (exchange, lex_failure),
                };
                exchange
                    .as_ref()
                    .is_none_or(|w| w.confirms_polymatroidal_failure(&ideal))
                    && lex.as_ref().is_none_or(|f| f.reproduces_on(&ideal))
            }
            ("conjecture", false) => {
                let verdict: ConjectureVerdict = serde_json::from_value(v.detail.clone())
                    .map_err(|e| Error::Precondition(e.to_string()))?;
                match verdict {
                    ConjectureVerdict::Polymatroidal => polymatroidal_failure(&ideal)?.is_none(),
                    ConjectureVerdict::RefutedBySomeOrder {
                        exchange,
                        revlex_failure,
                    } => {
                        exchange.confirms_polymatroidal_failure(&ideal)
                            && revlex_failure.reproduces_on(&ideal)
                    }
                    ConjectureVerdict::Counterexample { exchange, .. } => {
                        exchange.confirms_polymatroidal_failure(&ideal)
                            && lq_all_orders_failure(
                                &ideal,
                                OrderKind::Revlex,
                                PermBudget(u128::MAX),
                            )?
                            .is_none()
                    }
                    ConjectureVerdict::KnownDirectionViolated { revlex_failure } => {
                        revlex_failure.reproduces_on(&ideal)
                    }
                }
            }
            ("remark", false) if v.outcome == "not_polymatroidal" => {
                let w: ExchangeWitness = serde_json::from_value(v.detail.clone())
                    .map_err(|e| Error::Precondition(e.to_string()))?;
                w.confirms_polymatroidal_failure(&ideal)
            }
            _ => true,
        };
        if !ok {
            bad.push(v.index);
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remark_reproduces() {
        let r = reproduce_remark().unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.totals.total, 15);
        assert!(unreproducible_witnesses(&r).unwrap().is_empty());
    }

    #[test]
    fn small_theorem_sweep() {
        let spec = CorpusSpec::exhaustive(3, 2);
        let r = run_theorem_suite(&spec, &RunOptions::default()).unwrap();
        assert_eq!(r.totals.pass, 63, "{}", r.summary());
        assert!(unreproducible_witnesses(&r).unwrap().is_empty());
    }

    #[test]
    fn conjecture_probe_rows() {
        let spec = CorpusSpec::exhaustive(3, 2);
        let r = run_conjecture_search(
            &spec,
            &RunOptions {
                jobs: 2,
                ..RunOptions::default()
            },
        )
        .unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.totals.counterexample, 0);
        assert!(unreproducible_witnesses(&r).unwrap().is_empty());
    }

    #[test]
    fn localization_of_veronese_and_remark() {
        let v = MonomialIdeal::veronese(3, 2);
        assert_eq!(
            check_localization(&v).unwrap().1,
            "all_localizations_linear"
        );
        // recorded only: the remark ideal is not polymatroidal
        assert_eq!(
            check_localization(&remark_ideal()).unwrap().1,
            "skipped_not_polymatroidal"
        );
        let linear: Vec<bool> = proper_variable_subsets(3)
            .map(|c| has_linear_resolution(&remark_ideal().localize(&c).unwrap()).unwrap())
            .collect();
        assert_eq!(linear.len(), 7);
    }

    #[test]
    fn missing_corpus_is_an_error() {
        assert!(run_suite(SuiteKind::Theorem, None, &RunOptions::default()).is_err());
        assert!(run_suite(SuiteKind::Remark, None, &RunOptions::default()).is_ok());
    }

    #[test]
    fn mixed_random_corpus_is_seeded() {
        let a = mixed_random_corpus(50, 9);
        assert_eq!(a, mixed_random_corpus(50, 9));
        assert!(a
            .iter()
            .all(|e| e.ideal.len() <= BETTI_SUITE_MAX_GENS && e.ideal.n() <= 4));
    }
}
