//! Corpus sweeps and JSON reports.

pub mod corpus;
pub mod report;
pub mod suites;

pub use corpus::{enumerate_corpus, CorpusEntry, CorpusMode, CorpusSpec};
pub use report::{CheckReport, Status, Totals, Verdict, SCHEMA_VERSION};
pub use suites::{
    mixed_random_corpus, remark_ideal, reproduce_remark, run_conjecture_search,
    run_lexsegment_suite, run_localization_probe, run_on_entries, run_suite, run_theorem_suite,
    unreproducible_witnesses, violated_properties, RunOptions, SuiteKind,
    PURE_COLON_COUNTEREXAMPLE,
};
