//! Benchmark inputs shared by the bench targets.

use polymat_core::harness::{enumerate_corpus, CorpusSpec};
use polymat_core::MonomialIdeal;

/// Every ideal of the exhaustive `(n, d)` corpus.
pub fn corpus(n: usize, d: u32) -> Vec<MonomialIdeal> {
    enumerate_corpus(&CorpusSpec::exhaustive(n, d))
        .expect("corpus within bounds")
        .into_iter()
        .map(|e| e.ideal)
        .collect()
}
