//! Graded Betti numbers over the rationals.
//!
//! The main path reads `beta_{i,a}` off the upper Koszul simplicial complex of
//! each multidegree `a` in the lcm lattice. The Taylor path takes homology of
//! the multigraded strands of the Taylor complex and is kept as an oracle.

mod complex;
mod rank;
mod taylor;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

pub use complex::SimplicialComplex;
pub use rank::rank;
pub use taylor::{
    taylor_euler_characteristics, taylor_multigraded_betti, taylor_strand_betti,
    TAYLOR_GENERATOR_LIMIT,
};

/// Largest ambient ring the Koszul path accepts (faces are `u64` masks).
pub const KOSZUL_VARIABLE_LIMIT: usize = 24;

/// `beta_{i,j}`: homological index `i`, internal degree `j`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u64), u64>,
}

/// Betti numbers keyed by `(i, multidegree)`.
pub type MultigradedBetti = BTreeMap<(usize, Monomial), u64>;

impl BettiTable {
    pub fn from_multigraded(multi: &MultigradedBetti) -> Self {
        let mut t = BettiTable::default();
        for ((i, alpha), &b) in multi {
            t.add(*i, alpha.degree(), b);
        }
        t
    }

    fn add(&mut self, i: usize, j: u64, b: u64) {
        if b > 0 {
            *self.entries.entry((i, j)).or_insert(0) += b;
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Non-zero entries sorted by `(i, j)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// `sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, b)| b)
            .sum()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// `sum_i (-1)^i sum_j beta_{i,j}`.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .map(|(&(i, _), &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// All entries sit on the `j = i + d` strand.
    pub fn is_linear(&self, d: u64) -> bool {
        self.entries.keys().all(|&(i, j)| j == i as u64 + d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(BettiJson::from(self)).expect("plain data serializes")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub betti: Vec<(usize, u64, u64)>,
}

impl From<&BettiTable> for BettiJson {
    fn from(t: &BettiTable) -> Self {
        BettiJson {
            betti: t.entries().collect(),
        }
    }
}

/// Macaulay2-style display: columns are homological degrees, rows the
/// degree shift `j - i`, zeros shown as `.`.
impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(pd) = self.projective_dimension() else {
            return writeln!(f, "(zero table)");
        };
        let shifts: Vec<u64> = {
            let mut s: Vec<u64> = self.entries.keys().map(|&(i, j)| j - i as u64).collect();
            s.sort_unstable();
            s.dedup();
            s
        };
        let width = self
            .entries
            .values()
            .chain(std::iter::once(&(pd as u64)))
            .map(|b| b.to_string().len())
            .chain((0..=pd).map(|i| self.total(i).to_string().len()))
            .max()
            .unwrap_or(1);
        let label = shifts
            .iter()
            .map(|s| format!("{s}:").len())
            .max()
            .unwrap_or(2)
            .max("total:".len());
        write!(f, "{:>label$}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>width$}")?;
        }
        writeln!(f)?;
        write!(f, "{:>label$}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>width$}", self.total(i))?;
        }
        writeln!(f)?;
        for s in shifts {
            write!(f, "{:>label$}", format!("{s}:"))?;
            for i in 0..=pd {
                let b = self.get(i, s + i as u64);
                if b == 0 {
                    write!(f, " {:>width$}", ".")?;
                } else {
                    write!(f, " {b:>width$}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn require_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(())
}

/// Every lcm of a non-empty subset of `G(I)`, via closure under `lcm` with
/// single generators.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut frontier: Vec<Monomial> = ideal.gens().to_vec();
    while let Some(m) = frontier.pop() {
        for g in ideal.gens() {
            let l = m.lcm_unchecked(g);
            if seen.insert(l.clone()) {
                frontier.push(l);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// The upper Koszul complex `K^a = { b squarefree : x^(a - b) in I }`, with
/// faces as variable masks.
pub fn koszul_complex(ideal: &MonomialIdeal, alpha: &Monomial) -> Result<SimplicialComplex> {
    let n = ideal.n();
    if n > KOSZUL_VARIABLE_LIMIT {
        return Err(Error::Precondition(format!(
            "Koszul path supports at most {KOSZUL_VARIABLE_LIMIT} variables"
        )));
    }
    if alpha.n() != n {
        return Err(Error::AmbientMismatch {
            left: n,
            right: alpha.n(),
        });
    }
    let supp: u64 = alpha.support().fold(0, |m, i| m | 1 << i);
    let mut faces = Vec::new();
    // enumerate submasks of the support
    let mut b = supp;
    loop {
        let mut exps = alpha.exponents().to_vec();
        for (v, e) in exps.iter_mut().enumerate() {
            if b >> v & 1 == 1 {
                *e -= 1;
            }
        }
        let m = Monomial::new(exps)?;
        if ideal.gens().iter().any(|g| g.divides(&m)) {
            faces.push(b);
        }
        if b == 0 {
            break;
        }
        b = (b - 1) & supp;
    }
    Ok(SimplicialComplex::from_masks_unchecked(n, faces))
}

/// Multigraded Betti numbers through the upper Koszul complexes.
pub fn multigraded_betti(ideal: &MonomialIdeal) -> Result<MultigradedBetti> {
    require_proper(ideal)?;
    let mut out = MultigradedBetti::new();
    for alpha in lcm_lattice(ideal) {
        let k = koszul_complex(ideal, &alpha)?;
        // H~_{i-1}(K^a) = beta_{i,a}; ranks()[0] is H~_{-1}
        for (i, &r) in k.reduced_homology_ranks().iter().enumerate() {
            if r > 0 {
                out.insert((i, alpha.clone()), r as u64);
            }
        }
    }
    Ok(out)
}

/// Graded Betti table of `I` (as a module, so `beta_0` counts generators).
///
/// In debug builds the result is cross-checked against the Taylor oracle when
/// the generator count allows it.
pub fn graded_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let multi = multigraded_betti(ideal)?;
    #[cfg(debug_assertions)]
    if ideal.len() <= 6 {
        debug_assert_eq!(
            Ok(&multi),
            taylor_multigraded_betti(ideal).as_ref(),
            "Koszul and Taylor Betti numbers disagree for {ideal}"
        );
    }
    Ok(BettiTable::from_multigraded(&multi))
}

/// Equigenerated in degree `d` with every `beta_{i,j}` on `j = i + d`.
///
/// The unit ideal counts as linear (its resolution is `S` itself).
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    if ideal.is_unit() {
        return Ok(true);
    }
    let Some(d) = ideal.equigenerated_degree() else {
        return Ok(false);
    };
    if ideal.is_principal() {
        return Ok(true);
    }
    Ok(graded_betti(ideal)?.is_linear(d))
}
