//! Corpora of equigenerated ideals: every non-empty subset of `M_d`, or a
//! seeded sample of `m`-subsets.
//!
//! A subset is the bitmask over the lex-descending list of `M_d`; bit `k` set
//! means the `k`-th monomial is a generator.

use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{make_ideal, MonomialIdeal};
use crate::lexsegment::monomials_of_degree;
use crate::monomial::{Monomial, VariableOrder};

/// Largest `|M_d|` an exhaustive sweep accepts (`2^20` subsets).
pub const EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

impl std::str::FromStr for CorpusMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(CorpusMode::Exhaustive),
            "random" => Ok(CorpusMode::Random),
            other => Err(Error::CorpusBounds(format!(
                "unknown corpus mode `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub n: usize,
    pub d: u32,
    pub mode: CorpusMode,
    /// Generators per ideal (random mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Sample size (random mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub seed: u64,
    /// Resume an exhaustive sweep from this mask.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub start_mask: Option<u64>,
    /// Keep one representative per orbit under renaming variables.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub reduce_isomorphic: bool,
}

impl CorpusSpec {
    pub fn exhaustive(n: usize, d: u32) -> Self {
        CorpusSpec {
            n,
            d,
            mode: CorpusMode::Exhaustive,
            m: None,
            count: None,
            seed: 0,
            start_mask: None,
            reduce_isomorphic: false,
        }
    }

    pub fn random(n: usize, d: u32, m: usize, count: usize, seed: u64) -> Self {
        CorpusSpec {
            n,
            d,
            mode: CorpusMode::Random,
            m: Some(m),
            count: Some(count),
            seed,
            start_mask: None,
            reduce_isomorphic: false,
        }
    }

    fn universe_size(&self) -> u128 {
        let (n, d) = (self.n as u128, u128::from(self.d));
        // C(n + d - 1, d)
        (0..d).fold(1u128, |acc, i| acc * (n + i) / (i + 1))
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::CorpusBounds("n must be at least 1".into()));
        }
        if self.d == 0 {
            return Err(Error::CorpusBounds("d must be at least 1".into()));
        }
        let size = self.universe_size();
        match self.mode {
            CorpusMode::Exhaustive => {
                if size > EXHAUSTIVE_LIMIT as u128 {
                    return Err(Error::CorpusBounds(format!(
                        "exhaustive mode needs C(n+d-1, d) <= {EXHAUSTIVE_LIMIT}, got {size}"
                    )));
                }
                if let Some(s) = self.start_mask {
                    if s == 0 || s >= 1u64 << size {
                        return Err(Error::CorpusBounds(format!(
                            "start mask {s} outside 1..2^{size}"
                        )));
                    }
                }
            }
            CorpusMode::Random => {
                if size > 64 {
                    return Err(Error::CorpusBounds(format!(
                        "random mode needs C(n+d-1, d) <= 64, got {size}"
                    )));
                }
                let m = self
                    .m
                    .ok_or_else(|| Error::CorpusBounds("random mode needs m".into()))?;
                if m == 0 || m as u128 > size {
                    return Err(Error::CorpusBounds(format!(
                        "random mode needs 1 <= m <= {size}, got {m}"
                    )));
                }
                let count = self
                    .count
                    .ok_or_else(|| Error::CorpusBounds("random mode needs count".into()))?;
                let available = binomial(size, m as u128);
                if count as u128 > available {
                    return Err(Error::CorpusBounds(format!(
                        "only {available} distinct {m}-subsets exist, asked for {count}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    // saturate: only compared against a usize count
    (0..k).fold(1u128, |acc, i| {
        acc.checked_mul(n - i).map_or(u128::MAX, |x| x / (i + 1))
    })
}

/// One corpus member and where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub mask: u64,
    pub ideal: MonomialIdeal,
}

pub fn ideal_from_mask(universe: &[Monomial], n: usize, mask: u64) -> MonomialIdeal {
    let gens = universe
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 1)
        .map(|(_, m)| m.clone());
    make_ideal(n, gens).expect("a non-empty subset of M_d is a generating set")
}

/// Materialize the corpus in canonical order.
pub fn enumerate_corpus(spec: &CorpusSpec) -> Result<Vec<CorpusEntry>> {
    spec.validate()?;
    let universe = monomials_of_degree(spec.n, spec.d).into_elems();
    let masks: Vec<u64> = match spec.mode {
        CorpusMode::Exhaustive => {
            let end = 1u64 << universe.len();
            (spec.start_mask.unwrap_or(1)..end).collect()
        }
        CorpusMode::Random => sample_masks(
            universe.len(),
            spec.m.expect("validated"),
            spec.count.expect("validated"),
            spec.seed,
        ),
    };
    let mut out: Vec<CorpusEntry> = masks
        .into_iter()
        .map(|mask| CorpusEntry {
            mask,
            ideal: ideal_from_mask(&universe, spec.n, mask),
        })
        .collect();
    if spec.reduce_isomorphic {
        let mut seen = HashSet::new();
        out.retain(|e| seen.insert(orbit_key(&e.ideal)));
    }
    Ok(out)
}

/// `count` distinct uniform `m`-subsets of `0..size`, in draw order.
fn sample_masks(size: usize, m: usize, count: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(count);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mask = rand::seq::index::sample(&mut rng, size, m)
            .into_iter()
            .fold(0u64, |acc, k| acc | 1 << k);
        if seen.insert(mask) {
            out.push(mask);
        }
    }
    out
}

/// Smallest generator list over all renamings of the variables.
fn orbit_key(ideal: &MonomialIdeal) -> Vec<Monomial> {
    VariableOrder::all(ideal.n())
        .map(|o| {
            let mut g: Vec<Monomial> = ideal
                .gens()
                .iter()
                .map(|m| m.permute(o.descending()))
                .collect();
            g.sort();
            g
        })
        .min()
        .expect("n >= 1")
}
