//! Linear quotients for generator orderings induced by a monomial order, swept
//! over every order of the variables.

use serde::{Deserialize, Serialize};

use crate::betti::has_linear_resolution;
use crate::error::{Error, Result};
use crate::ideal::{make_ideal, MonomialIdeal};
use crate::monomial::{Monomial, OrderKind, VariableOrder};
use crate::polymatroid::{polymatroidal_failure, ExchangeWitness};

/// Default cap on the number of variable orders a sweep may visit (`8!`).
pub const DEFAULT_MAX_PERMS: u128 = 40_320;

/// Environment variable overriding [`DEFAULT_MAX_PERMS`].
pub const MAX_PERMS_ENV: &str = "POLYMAT_MAX_PERMS";

/// How many variable orders a sweep is allowed to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PermBudget(pub u128);

impl Default for PermBudget {
    fn default() -> Self {
        PermBudget(DEFAULT_MAX_PERMS)
    }
}

impl PermBudget {
    /// The default, unless `POLYMAT_MAX_PERMS` is set. A value that is not a
    /// non-negative integer is an error.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_PERMS_ENV) {
            Err(_) => Ok(PermBudget::default()),
            Ok(s) => s.trim().parse().map(PermBudget).map_err(|_| {
                Error::Precondition(format!("{MAX_PERMS_ENV} must be an integer, got `{s}`"))
            }),
        }
    }

    /// Refuse when `n!` exceeds the budget.
    pub fn admit(self, n: usize) -> Result<()> {
        let count = (1..=n as u128).try_fold(1u128, |acc, k| acc.checked_mul(k));
        match count {
            Some(c) if c <= self.0 => Ok(()),
            c => Err(Error::PermutationBudget {
                count: c.unwrap_or(u128::MAX),
                budget: self.0,
            }),
        }
    }
}

/// The generators of an ideal in the order they are fed to the quotient check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSequence {
    ideal: MonomialIdeal,
    induced_by: Option<(OrderKind, VariableOrder)>,
    seq: Vec<Monomial>,
}

impl GeneratorSequence {
    /// A free-form ordering of `G(I)`; `seq` must be a permutation of it.
    pub fn from_list(ideal: &MonomialIdeal, seq: Vec<Monomial>) -> Result<Self> {
        let mut sorted = seq.clone();
        sorted.sort();
        let mut gens = ideal.gens().to_vec();
        gens.sort();
        if sorted != gens {
            return Err(Error::Precondition(
                "sequence is not a permutation of the minimal generators".into(),
            ));
        }
        Ok(GeneratorSequence {
            ideal: ideal.clone(),
            induced_by: None,
            seq,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.seq
    }

    pub fn kind(&self) -> Option<OrderKind> {
        self.induced_by.as_ref().map(|(k, _)| *k)
    }

    pub fn variable_order(&self) -> Option<&VariableOrder> {
        self.induced_by.as_ref().map(|(_, o)| o)
    }
}

/// Sort `G(I)` strictly decreasing under the monomial order induced by `o`.
pub fn sort_generators(
    ideal: &MonomialIdeal,
    kind: OrderKind,
    o: &VariableOrder,
) -> Result<GeneratorSequence> {
    ideal.require_equigenerated()?;
    if o.n() != ideal.n() {
        return Err(Error::AmbientMismatch {
            left: ideal.n(),
            right: o.n(),
        });
    }
    let mut seq = ideal.gens().to_vec();
    seq.sort_by(|a, b| kind.cmp_unchecked(b, a, o));
    Ok(GeneratorSequence {
        ideal: ideal.clone(),
        induced_by: Some((kind, o.clone())),
        seq,
    })
}

/// The first place a sequence stops having linear quotients.
///
/// `position` is one-based: the colon `(u_1, ..., u_{j-1}) : u_j` fails for
/// `j = position`, because no variable in it divides `earlier : u_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LqFailure {
    pub position: usize,
    pub generator: Monomial,
    pub earlier: Monomial,
}

/// `None` when every prefix colon ideal is generated by variables.
pub fn linear_quotients_failure(seq: &GeneratorSequence) -> Option<LqFailure> {
    let gens = &seq.seq;
    let n = seq.ideal.n();
    let mut linear = vec![false; n];
    for j in 1..gens.len() {
        let uj = &gens[j];
        let colons: Vec<Monomial> = gens[..j].iter().map(|ui| ui.colon_unchecked(uj)).collect();
        linear.iter_mut().for_each(|f| *f = false);
        for c in &colons {
            if let Some(x) = c.as_variable() {
                linear[x] = true;
            }
        }
        let bad = colons.iter().position(|c| !c.support().any(|x| linear[x]));
        debug_assert_eq!(
            bad.is_none(),
            materialized_colon_is_linear(&gens[..j], uj),
            "pairwise contract disagrees with the materialized colon at position {}",
            j + 1
        );
        if let Some(i) = bad {
            return Some(LqFailure {
                position: j + 1,
                generator: uj.clone(),
                earlier: gens[i].clone(),
            });
        }
    }
    None
}

fn materialized_colon_is_linear(prefix: &[Monomial], u: &Monomial) -> bool {
    let n = u.n();
    make_ideal(n, prefix.iter().cloned())
        .and_then(|p| p.colon(u))
        .map(|c| c.gens().iter().all(|g| g.as_variable().is_some()))
        .unwrap_or(false)
}

pub fn has_linear_quotients(seq: &GeneratorSequence) -> bool {
    linear_quotients_failure(seq).is_none()
}

/// A variable order under which linear quotients fail, with the failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderFailure {
    pub kind: OrderKind,
    pub order: VariableOrder,
    pub failure: LqFailure,
}

/// First variable order (in lexicographic permutation order) whose induced
/// `kind` ordering lacks linear quotients.
pub fn lq_all_orders_failure(
    ideal: &MonomialIdeal,
    kind: OrderKind,
    budget: PermBudget,
) -> Result<Option<OrderFailure>> {
    ideal.require_equigenerated()?;
    budget.admit(ideal.n())?;
    for o in VariableOrder::all(ideal.n()) {
        let seq = sort_generators(ideal, kind, &o)?;
        if let Some(failure) = linear_quotients_failure(&seq) {
            return Ok(Some(OrderFailure {
                kind,
                order: o,
                failure,
            }));
        }
    }
    Ok(None)
}

pub fn has_lq_all_orders(
    ideal: &MonomialIdeal,
    kind: OrderKind,
    budget: PermBudget,
) -> Result<bool> {
    Ok(lq_all_orders_failure(ideal, kind, budget)?.is_none())
}

/// Outcome of comparing "polymatroidal" against "lex linear quotients for
/// every variable order".
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TheoremVerdict {
    Consistent {
        polymatroidal: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        exchange: Option<ExchangeWitness>,
        #[serde(skip_serializing_if = "Option::is_none")]
        lex_failure: Option<OrderFailure>,
    },
    Mismatch {
        polymatroidal: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        exchange: Option<ExchangeWitness>,
        #[serde(skip_serializing_if = "Option::is_none")]
        lex_failure: Option<OrderFailure>,
    },
}

impl TheoremVerdict {
    pub fn is_consistent(&self) -> bool {
        matches!(self, TheoremVerdict::Consistent { .. })
    }
}

pub fn theorem_equivalence(ideal: &MonomialIdeal, budget: PermBudget) -> Result<TheoremVerdict> {
    let exchange = polymatroidal_failure(ideal)?;
    let lex_failure = lq_all_orders_failure(ideal, OrderKind::Lex, budget)?;
    let polymatroidal = exchange.is_none();
    Ok(if polymatroidal == lex_failure.is_none() {
        TheoremVerdict::Consistent {
            polymatroidal,
            exchange,
            lex_failure,
        }
    } else {
        TheoremVerdict::Mismatch {
            polymatroidal,
            exchange,
            lex_failure,
        }
    })
}

/// Outcome of testing "revlex linear quotients for every variable order
/// implies polymatroidal" on one ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConjectureVerdict {
    Polymatroidal,
    RefutedBySomeOrder {
        exchange: ExchangeWitness,
        revlex_failure: OrderFailure,
    },
    /// Revlex linear quotients under every order, yet not polymatroidal.
    Counterexample {
        exchange: ExchangeWitness,
        orders_checked: Vec<VariableOrder>,
    },
    /// Polymatroidal but some revlex ordering lacks linear quotients, which
    /// contradicts the known direction of the equivalence.
    KnownDirectionViolated {
        revlex_failure: OrderFailure,
    },
}

pub fn conjecture_probe(ideal: &MonomialIdeal, budget: PermBudget) -> Result<ConjectureVerdict> {
    let exchange = polymatroidal_failure(ideal)?;
    let revlex = lq_all_orders_failure(ideal, OrderKind::Revlex, budget)?;
    Ok(match (exchange, revlex) {
        (None, None) => ConjectureVerdict::Polymatroidal,
        (None, Some(revlex_failure)) => {
            ConjectureVerdict::KnownDirectionViolated { revlex_failure }
        }
        (Some(exchange), Some(revlex_failure)) => ConjectureVerdict::RefutedBySomeOrder {
            exchange,
            revlex_failure,
        },
        (Some(exchange), None) => ConjectureVerdict::Counterexample {
            exchange,
            orders_checked: VariableOrder::all(ideal.n()).collect(),
        },
    })
}

/// Why a sequence lacks quotients with linear resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QwlrFailure {
    /// One-based `j` of the failing colon `(u_1..u_{j-1}) : u_j`; `0` means
    /// the ideal itself has no linear resolution.
    pub position: usize,
    pub colon: String,
    /// The colon ideal has generators in several degrees, which is counted
    /// as not linear.
    pub mixed_degrees: bool,
}

/// The ideal and every prefix colon ideal have linear resolutions.
pub fn qwlr_failure(seq: &GeneratorSequence) -> Result<Option<QwlrFailure>> {
    let ideal = &seq.ideal;
    if !has_linear_resolution(ideal)? {
        return Ok(Some(QwlrFailure {
            position: 0,
            colon: ideal.to_string(),
            mixed_degrees: ideal.equigenerated_degree().is_none(),
        }));
    }
    let gens = &seq.seq;
    for j in 1..gens.len() {
        let colon = make_ideal(ideal.n(), gens[..j].iter().cloned())?.colon(&gens[j])?;
        debug_assert!(
            !colon.is_unit(),
            "distinct generators never give a unit colon"
        );
        if !has_linear_resolution(&colon)? {
            return Ok(Some(QwlrFailure {
                position: j + 1,
                colon: colon.to_string(),
                mixed_degrees: colon.equigenerated_degree().is_none(),
            }));
        }
    }
    Ok(None)
}

pub fn has_quotients_with_linear_resolution(seq: &GeneratorSequence) -> Result<bool> {
    Ok(qwlr_failure(seq)?.is_none())
}

impl OrderFailure {
    /// Rebuild the sequence and confirm it fails at the recorded place.
    pub fn reproduces_on(&self, ideal: &MonomialIdeal) -> bool {
        sort_generators(ideal, self.kind, &self.order)
            .map(|seq| linear_quotients_failure(&seq).as_ref() == Some(&self.failure))
            .unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        make_ideal(gens[0].len(), gens.iter().map(|e| m(e))).unwrap()
    }

    fn remark() -> MonomialIdeal {
        ideal(&[&[1, 0, 2], &[2, 0, 1], &[1, 1, 1], &[0, 2, 1]])
    }

    fn ord(v: &[usize]) -> VariableOrder {
        VariableOrder::from_one_based(v).unwrap()
    }

    fn shown(seq: &GeneratorSequence) -> Vec<String> {
        seq.generators().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn sorting_examples() {
        let v22 = MonomialIdeal::veronese(2, 2);
        for kind in OrderKind::BOTH {
            let s = sort_generators(&v22, kind, &ord(&[1, 2])).unwrap();
            assert_eq!(shown(&s), ["x1^2", "x1*x2", "x2^2"]);
        }
        let s = sort_generators(&remark(), OrderKind::Lex, &ord(&[3, 2, 1])).unwrap();
        // x3 exponent first, then x2: x2^2*x3 outranks x1*x2*x3
        assert_eq!(shown(&s), ["x1*x3^2", "x2^2*x3", "x1*x2*x3", "x1^2*x3"]);
    }

    #[test]
    fn veronese_has_linear_quotients() {
        let s = sort_generators(
            &MonomialIdeal::veronese(2, 2),
            OrderKind::Lex,
            &ord(&[1, 2]),
        )
        .unwrap();
        assert!(has_linear_quotients(&s));
    }

    #[test]
    fn remark_fails_under_x3_x2_x1() {
        let i = remark();
        for kind in OrderKind::BOTH {
            let s = sort_generators(&i, kind, &ord(&[3, 2, 1])).unwrap();
            assert!(linear_quotients_failure(&s).is_some(), "{kind}");
        }
        let f = lq_all_orders_failure(&i, OrderKind::Revlex, PermBudget::default())
            .unwrap()
            .unwrap();
        assert_eq!(f.order.to_one_based(), vec![3, 2, 1]);
        assert!(f.reproduces_on(&i));
    }

    #[test]
    fn disjoint_edges_fail_somewhere() {
        let i = ideal(&[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(!has_lq_all_orders(&i, OrderKind::Lex, PermBudget::default()).unwrap());
        match conjecture_probe(&i, PermBudget::default()).unwrap() {
            ConjectureVerdict::RefutedBySomeOrder { revlex_failure, .. } => {
                assert!(revlex_failure.reproduces_on(&i));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verdicts() {
        assert!(
            theorem_equivalence(&MonomialIdeal::veronese(3, 3), PermBudget::default())
                .unwrap()
                .is_consistent()
        );
        match theorem_equivalence(&remark(), PermBudget::default()).unwrap() {
            TheoremVerdict::Consistent { polymatroidal, .. } => assert!(!polymatroidal),
            other => panic!("{other:?}"),
        }
        assert_eq!(
            conjecture_probe(&MonomialIdeal::veronese(3, 2), PermBudget::default()).unwrap(),
            ConjectureVerdict::Polymatroidal
        );
        let v = serde_json::to_value(
            conjecture_probe(&MonomialIdeal::veronese(3, 2), PermBudget::default()).unwrap(),
        )
        .unwrap();
        assert_eq!(v, serde_json::json!({"verdict": "polymatroidal"}));
    }

    #[test]
    fn budget_guard() {
        let i = MonomialIdeal::veronese(4, 1);
        assert!(matches!(
            has_lq_all_orders(&i, OrderKind::Lex, PermBudget(23)),
            Err(Error::PermutationBudget {
                count: 24,
                budget: 23
            })
        ));
        assert!(has_lq_all_orders(&i, OrderKind::Lex, PermBudget(24)).unwrap());
    }

    #[test]
    fn qwlr_on_remark_ideal() {
        let i = remark();
        for kind in OrderKind::BOTH {
            for o in VariableOrder::all(3) {
                let s = sort_generators(&i, kind, &o).unwrap();
                assert_eq!(qwlr_failure(&s).unwrap(), None, "{kind} {o}");
            }
        }
        let s = sort_generators(
            &MonomialIdeal::veronese(2, 3),
            OrderKind::Lex,
            &ord(&[2, 1]),
        )
        .unwrap();
        assert!(has_quotients_with_linear_resolution(&s).unwrap());
    }

    #[test]
    fn qwlr_flags_mixed_degree_colons() {
        let i = ideal(&[&[2, 0], &[0, 2]]);
        let s = GeneratorSequence::from_list(&i, i.gens().to_vec()).unwrap();
        assert_eq!(qwlr_failure(&s).unwrap().unwrap().position, 0);

        // (x1^2, x2^2) : x1 x3 = (x1, x2^2)
        let v = MonomialIdeal::veronese(3, 2);
        let order = [
            [2, 0, 0],
            [0, 2, 0],
            [1, 0, 1],
            [1, 1, 0],
            [0, 1, 1],
            [0, 0, 2],
        ];
        let s = GeneratorSequence::from_list(&v, order.iter().map(|e| m(e)).collect()).unwrap();
        assert_eq!(
            qwlr_failure(&s).unwrap(),
            Some(QwlrFailure {
                position: 3,
                colon: "x2^2 + x1".into(),
                mixed_degrees: true
            })
        );
        assert!(!has_linear_quotients(&s));
    }

    #[test]
    fn free_form_sequences_are_validated() {
        let i = remark();
        assert!(GeneratorSequence::from_list(&i, vec![m(&[1, 0, 2])]).is_err());
        let s = GeneratorSequence::from_list(&i, i.gens().iter().rev().cloned().collect()).unwrap();
        assert_eq!(s.kind(), None);
    }
}
