//! Exchange-property checks: polymatroidal, matroidal, and the symmetric
//! exchange form `x_i (u / x_j) in I`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A pair of generators and a variable at which an exchange fails.
///
/// For the polymatroidal check `deg_i(u) > deg_i(v)` and no `j` with
/// `deg_j(u) < deg_j(v)` has `x_j (u / x_i)` in the ideal. For the symmetric
/// check `deg_i(v) > deg_i(u)` and no `j` with `deg_j(v) < deg_j(u)` has
/// `x_i (u / x_j)` in the ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeWitness {
    pub u: Monomial,
    pub v: Monomial,
    #[serde(with = "crate::one_based")]
    pub var: usize,
}

/// Generator lookup for an equigenerated ideal. Any degree-`d` monomial lies in
/// the ideal iff it is a minimal generator.
struct GenIndex<'a> {
    ideal: &'a MonomialIdeal,
    set: HashSet<&'a Monomial>,
}

impl<'a> GenIndex<'a> {
    fn new(ideal: &'a MonomialIdeal) -> Self {
        GenIndex {
            ideal,
            set: ideal.gens().iter().collect(),
        }
    }

    fn contains(&self, m: &Monomial) -> bool {
        let hit = self.set.contains(m);
        debug_assert_eq!(hit, self.ideal.contains(m).unwrap_or(false));
        hit
    }
}

/// First exchange failure in canonical generator order, or `None` if the
/// ideal is polymatroidal.
pub fn polymatroidal_failure(ideal: &MonomialIdeal) -> Result<Option<ExchangeWitness>> {
    ideal.require_equigenerated()?;
    let index = GenIndex::new(ideal);
    let n = ideal.n();
    for u in ideal.gens() {
        for v in ideal.gens() {
            for i in 0..n {
                if u.exp(i) <= v.exp(i) {
                    continue;
                }
                let ok = (0..n).filter(|&j| u.exp(j) < v.exp(j)).any(|j| {
                    u.exchange(i, j)
                        .ok()
                        .flatten()
                        .is_some_and(|w| index.contains(&w))
                });
                if !ok {
                    return Ok(Some(ExchangeWitness {
                        u: u.clone(),
                        v: v.clone(),
                        var: i,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(polymatroidal_failure(ideal)?.is_none())
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> Result<bool> {
    ideal.require_equigenerated()?;
    Ok(ideal.gens().iter().all(Monomial::is_squarefree) && is_polymatroidal(ideal)?)
}

/// First failure of: for `u, v` in `G(I)` and `deg_i(v) > deg_i(u)` there is
/// `j` with `deg_j(v) < deg_j(u)` and `x_i (u / x_j)` in `I`.
pub fn symmetric_exchange_failure(ideal: &MonomialIdeal) -> Result<Option<ExchangeWitness>> {
    ideal.require_equigenerated()?;
    let index = GenIndex::new(ideal);
    let n = ideal.n();
    for u in ideal.gens() {
        for v in ideal.gens() {
            for i in 0..n {
                if v.exp(i) <= u.exp(i) {
                    continue;
                }
                let ok = (0..n).filter(|&j| v.exp(j) < u.exp(j)).any(|j| {
                    u.exchange(j, i)
                        .ok()
                        .flatten()
                        .is_some_and(|w| index.contains(&w))
                });
                if !ok {
                    return Ok(Some(ExchangeWitness {
                        u: u.clone(),
                        v: v.clone(),
                        var: i,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn satisfies_symmetric_exchange(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(symmetric_exchange_failure(ideal)?.is_none())
}

impl ExchangeWitness {
    /// Re-check that this witness really is a polymatroidal exchange failure.
    pub fn confirms_polymatroidal_failure(&self, ideal: &MonomialIdeal) -> bool {
        let (u, v, i) = (&self.u, &self.v, self.var);
        let gens = ideal.gens();
        if !gens.contains(u) || !gens.contains(v) || i >= ideal.n() || u.exp(i) <= v.exp(i) {
            return false;
        }
        (0..ideal.n())
            .filter(|&j| u.exp(j) < v.exp(j))
            .all(|j| match u.exchange(i, j) {
                Ok(Some(w)) => !ideal.contains(&w).unwrap_or(true),
                _ => false,
            })
    }
}

/// First generator pair `(u, v)` with `supp(u : v) = {x1}` for which no
/// `i` with `deg_i(v) > deg_i(u)` puts `x_i (u / x1)` in the ideal.
pub fn pure_colon_exchange_failure(ideal: &MonomialIdeal) -> Option<(Monomial, Monomial)> {
    for u in ideal.gens() {
        for v in ideal.gens() {
            let c = u.colon_unchecked(v);
            if c.is_one() || c.support().any(|x| x != 0) {
                continue;
            }
            let ok = (0..ideal.n()).filter(|&i| v.exp(i) > u.exp(i)).any(|i| {
                u.exchange(0, i)
                    .ok()
                    .flatten()
                    .is_some_and(|w| ideal.contains(&w).unwrap_or(false))
            });
            if !ok {
                return Some((u.clone(), v.clone()));
            }
        }
    }
    None
}
