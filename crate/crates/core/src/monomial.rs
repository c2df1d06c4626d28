//! Monomials, variable orders and the lex / revlex monomial orders they induce.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
///
/// Index `i` of the vector is the exponent of the variable printed as `x{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::NoVariables);
        }
        Ok(Monomial { exps })
    }

    /// The unit monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        assert!(n >= 1, "monomial ring needs a variable");
        Monomial { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (zero-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Zero-based indices of the variables dividing this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// If this monomial is a single variable, its index.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub(crate) fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::AmbientMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    /// `self | other`. Callers are expected to share the ambient ring.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exps })
    }

    /// Multiply by the variable with zero-based index `i`.
    pub fn mul_var(&self, i: usize) -> Result<Monomial> {
        let mut m = self.clone();
        m.exps[i] = m.exps[i].checked_add(1).ok_or(Error::ExponentOverflow)?;
        Ok(m)
    }

    /// Divide by the variable `i`, or `None` when it does not divide.
    pub fn div_var(&self, i: usize) -> Option<Monomial> {
        if self.exps[i] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[i] -= 1;
        Some(m)
    }

    /// `(self / x_i) * x_j`, the exchange move. `None` if `x_i` does not divide.
    pub fn exchange(&self, i: usize, j: usize) -> Result<Option<Monomial>> {
        match self.div_var(i) {
            Some(m) => m.mul_var(j).map(Some),
            None => Ok(None),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.zip_with(other, |a, b| a.max(b)))
    }

    /// `u : v = u / gcd(u, v)`; entry `i` is `max(u_i - v_i, 0)`.
    pub fn colon(&self, v: &Monomial) -> Result<Monomial> {
        self.check_ambient(v)?;
        Ok(self.colon_unchecked(v))
    }

    pub(crate) fn colon_unchecked(&self, v: &Monomial) -> Monomial {
        self.zip_with(v, |a, b| a.saturating_sub(b))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| a.max(b))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(u32, u32) -> u32) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    /// Set the exponents at the given zero-based positions to zero.
    pub(crate) fn erase(&self, positions: &[usize]) -> Monomial {
        let mut m = self.clone();
        for &i in positions {
            m.exps[i] = 0;
        }
        m
    }

    /// Rename variables: the exponent of `x_i` moves to `x_{sigma[i]}`.
    pub fn permute(&self, sigma: &[usize]) -> Monomial {
        let mut exps = vec![0; self.n()];
        for (i, &e) in self.exps.iter().enumerate() {
            exps[sigma[i]] = e;
        }
        Monomial { exps }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A descending order of the variables: `perm[0]` is the greatest.
///
/// Stored zero-based; serialized one-based, so `[3,2,1]` means `x3 > x2 > x1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableOrder {
    perm: Vec<usize>,
}

impl VariableOrder {
    pub fn identity(n: usize) -> Self {
        VariableOrder {
            perm: (0..n).collect(),
        }
    }

    /// Build from a zero-based permutation.
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::NoVariables);
        }
        let mut seen = vec![false; perm.len()];
        for &p in &perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidOrder(format!(
                    "{:?} is not a permutation of 0..{}",
                    perm,
                    perm.len()
                )));
            }
        }
        Ok(VariableOrder { perm })
    }

    /// Build from one-based variable indices, e.g. `[3, 2, 1]`.
    pub fn from_one_based(vars: &[usize]) -> Result<Self> {
        if vars.contains(&0) {
            return Err(Error::InvalidOrder("variable indices start at 1".into()));
        }
        Self::new(vars.iter().map(|&v| v - 1).collect())
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Zero-based variable indices from greatest to least.
    pub fn descending(&self) -> &[usize] {
        &self.perm
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p + 1).collect()
    }

    /// All `n!` orders in lexicographic permutation order.
    pub fn all(n: usize) -> impl Iterator<Item = VariableOrder> {
        use itertools::Itertools;
        (0..n).permutations(n).map(|perm| VariableOrder { perm })
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.perm.iter().enumerate() {
            if k > 0 {
                f.write_str(">")?;
            }
            write!(f, "x{}", p + 1)?;
        }
        Ok(())
    }
}

impl Serialize for VariableOrder {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VariableOrder {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vars = Vec::<usize>::deserialize(d)?;
        VariableOrder::from_one_based(&vars).map_err(serde::de::Error::custom)
    }
}

/// Which monomial order a variable order induces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    Revlex,
}

impl OrderKind {
    pub const BOTH: [OrderKind; 2] = [OrderKind::Lex, OrderKind::Revlex];

    pub fn compare(self, u: &Monomial, v: &Monomial, o: &VariableOrder) -> Result<Ordering> {
        u.check_ambient(v)?;
        if o.n() != u.n() {
            return Err(Error::AmbientMismatch {
                left: u.n(),
                right: o.n(),
            });
        }
        Ok(self.cmp_unchecked(u, v, o))
    }

    pub(crate) fn cmp_unchecked(self, u: &Monomial, v: &Monomial, o: &VariableOrder) -> Ordering {
        match self {
            OrderKind::Lex => lex_cmp(u, v, o),
            OrderKind::Revlex => revlex_cmp(u, v, o),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::Revlex => "revlex",
        })
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "revlex" => Ok(OrderKind::Revlex),
            other => Err(Error::parse(0, format!("unknown order kind `{other}`"))),
        }
    }
}

/// Degree first, then the first variable (greatest first) where the exponents
/// differ decides: the larger exponent wins.
pub fn lex_compare(u: &Monomial, v: &Monomial, o: &VariableOrder) -> Result<Ordering> {
    OrderKind::Lex.compare(u, v, o)
}

/// Degree first, then the first variable scanning from the least one where the
/// exponents differ decides: the smaller exponent wins.
pub fn revlex_compare(u: &Monomial, v: &Monomial, o: &VariableOrder) -> Result<Ordering> {
    OrderKind::Revlex.compare(u, v, o)
}

fn lex_cmp(u: &Monomial, v: &Monomial, o: &VariableOrder) -> Ordering {
    u.degree().cmp(&v.degree()).then_with(|| {
        o.perm
            .iter()
            .map(|&p| u.exps[p].cmp(&v.exps[p]))
            .find(|c| c.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn revlex_cmp(u: &Monomial, v: &Monomial, o: &VariableOrder) -> Ordering {
    u.degree().cmp(&v.degree()).then_with(|| {
        o.perm
            .iter()
            .rev()
            .map(|&p| v.exps[p].cmp(&u.exps[p]))
            .find(|c| c.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}
