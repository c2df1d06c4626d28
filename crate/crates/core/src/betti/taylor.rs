//! Betti numbers from the Taylor complex, used to validate the Koszul path.
//!
//! After tensoring with the field, the Taylor differential keeps the term
//! `e_S -> e_{S \ s}` only when both subsets have the same lcm, so the complex
//! splits into one strand per multidegree.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

use super::rank::rank;
use super::{BettiTable, MultigradedBetti};

pub const TAYLOR_GENERATOR_LIMIT: usize = 12;

/// `lcm(S)` for every non-empty subset mask `S` of the generators.
fn subset_lcms(gens: &[Monomial]) -> Vec<Monomial> {
    let r = gens.len();
    let mut lcm = vec![Monomial::one(gens[0].n()); 1 << r];
    for mask in 1usize..(1 << r) {
        let low = mask.trailing_zeros() as usize;
        lcm[mask] = lcm[mask & (mask - 1)].lcm_unchecked(&gens[low]);
    }
    lcm
}

pub fn taylor_multigraded_betti(ideal: &MonomialIdeal) -> Result<MultigradedBetti> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let gens = ideal.gens();
    if gens.len() > TAYLOR_GENERATOR_LIMIT {
        return Err(Error::OracleUnavailable {
            gens: gens.len(),
            limit: TAYLOR_GENERATOR_LIMIT,
        });
    }
    let lcm = subset_lcms(gens);
    let mut strands: BTreeMap<&Monomial, Vec<usize>> = BTreeMap::new();
    for (mask, l) in lcm.iter().enumerate().skip(1) {
        strands.entry(l).or_default().push(mask);
    }

    let mut out = MultigradedBetti::new();
    for (alpha, masks) in strands {
        let top = masks
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        // by_size[s]: subsets of size s in this strand (homological index s - 1)
        let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
        for &m in &masks {
            by_size[m.count_ones() as usize].push(m);
        }
        let mut d_rank = vec![0usize; top + 2];
        for s in 2..=top {
            let lower = &by_size[s - 1];
            if by_size[s].is_empty() || lower.is_empty() {
                continue;
            }
            let col: BTreeMap<usize, usize> =
                lower.iter().enumerate().map(|(c, &m)| (m, c)).collect();
            let rows: Vec<Vec<i64>> = by_size[s]
                .iter()
                .map(|&m| {
                    let mut row = vec![0i64; lower.len()];
                    let mut bits = m;
                    let mut k = 0;
                    while bits != 0 {
                        let b = bits & bits.wrapping_neg();
                        if let Some(&c) = col.get(&(m ^ b)) {
                            row[c] = if k % 2 == 0 { 1 } else { -1 };
                        }
                        bits ^= b;
                        k += 1;
                    }
                    row
                })
                .collect();
            d_rank[s] = rank(&rows);
        }
        for s in 1..=top {
            let h = by_size[s].len() - d_rank[s] - d_rank[s + 1];
            if h > 0 {
                out.insert((s - 1, alpha.clone()), h as u64);
            }
        }
    }
    Ok(out)
}

/// Graded Betti table from the Taylor complex strands. Exponential in the
/// number of generators; refused above [`TAYLOR_GENERATOR_LIMIT`].
pub fn taylor_strand_betti(ideal: &MonomialIdeal) -> Result<BettiTable> {
    Ok(BettiTable::from_multigraded(&taylor_multigraded_betti(
        ideal,
    )?))
}

/// `sum over S with lcm(S) = a of (-1)^(|S| - 1)`, per multidegree.
pub fn taylor_euler_characteristics(ideal: &MonomialIdeal) -> Result<BTreeMap<Monomial, i64>> {
    let gens = ideal.gens();
    if gens.len() > TAYLOR_GENERATOR_LIMIT {
        return Err(Error::OracleUnavailable {
            gens: gens.len(),
            limit: TAYLOR_GENERATOR_LIMIT,
        });
    }
    let lcm = subset_lcms(gens);
    let mut chi = BTreeMap::new();
    for (mask, l) in lcm.into_iter().enumerate().skip(1) {
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        *chi.entry(l).or_insert(0) += sign;
    }
    Ok(chi)
}
