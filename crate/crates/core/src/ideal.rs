//! Monomial ideals held by their minimal generating set.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, OrderKind, VariableOrder};

/// A monomial ideal represented by `G(I)`.
///
/// Generators are kept in decreasing lex order under `x1 > ... > xn`, so two
/// values compare equal exactly when the ideals are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Minimalize `raw` into an ideal: drop duplicates and anything divisible by
/// another element.
pub fn make_ideal(n: usize, raw: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    let mut raw: Vec<Monomial> = raw.into_iter().collect();
    if raw.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    for m in &raw {
        if m.n() != n {
            return Err(Error::AmbientMismatch {
                left: n,
                right: m.n(),
            });
        }
    }
    // anything dividing m has degree <= deg m, so a degree-ascending pass
    // only needs to look back at what it already kept
    raw.sort_by_key(|m| m.degree());
    raw.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(raw.len());
    for m in raw {
        if !kept.iter().any(|g| g.divides(&m)) {
            kept.push(m);
        }
    }
    Ok(MonomialIdeal::from_minimal(n, kept))
}

impl MonomialIdeal {
    /// `gens` must already be an antichain under divisibility.
    fn from_minimal(n: usize, mut gens: Vec<Monomial>) -> Self {
        let id = VariableOrder::identity(n);
        gens.sort_by(|a, b| OrderKind::Lex.cmp_unchecked(b, a, &id));
        gens.dedup();
        debug_assert!(gens.iter().enumerate().all(|(i, a)| gens
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.divides(b))));
        MonomialIdeal { n, gens }
    }

    /// The unit ideal `(1)`.
    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The ideal generated by all `n` variables.
    pub fn maximal(n: usize) -> Self {
        MonomialIdeal::from_minimal(n, (0..n).map(|i| Monomial::var(n, i)).collect())
    }

    /// `(x_1, ..., x_n)^d`.
    pub fn veronese(n: usize, d: u32) -> Self {
        MonomialIdeal::from_minimal(n, crate::lexsegment::monomials_of_degree(n, d).into_elems())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.n() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: m.n(),
            });
        }
        Ok(())
    }

    fn check_ideal(&self, other: &MonomialIdeal) -> Result<()> {
        if other.n != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.gens.iter().any(|g| g.divides(m)))
    }

    /// `I : v`, generated by `g / gcd(g, v)` over `g` in `G(I)`.
    pub fn colon(&self, v: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(v)?;
        make_ideal(self.n, self.gens.iter().map(|g| g.colon_unchecked(v)))
    }

    /// Monomial localization: substitute `x_i -> 1` for every zero-based `i`
    /// in `at`. Substituting every variable yields the unit ideal.
    pub fn localize(&self, at: &[usize]) -> Result<MonomialIdeal> {
        if let Some(&bad) = at.iter().find(|&&i| i >= self.n) {
            return Err(Error::Precondition(format!(
                "variable index {} out of range for {} variables",
                bad + 1,
                self.n
            )));
        }
        make_ideal(self.n, self.gens.iter().map(|g| g.erase(at)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ideal(other)?;
        make_ideal(self.n, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ideal(other)?;
        let mut prods = Vec::with_capacity(self.len() * other.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        make_ideal(self.n, prods)
    }

    pub fn power(&self, e: u32) -> Result<MonomialIdeal> {
        if e == 0 {
            return Err(Error::Precondition("ideal power needs e >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `Some(d)` when every minimal generator has total degree `d`.
    pub fn equigenerated_degree(&self) -> Option<u64> {
        let d = self.gens.first()?.degree();
        self.gens.iter().all(|g| g.degree() == d).then_some(d)
    }

    pub(crate) fn require_equigenerated(&self) -> Result<u64> {
        self.equigenerated_degree().ok_or(Error::NotEquigenerated)
    }

    /// Rename variables by the zero-based permutation `sigma`.
    pub fn permute(&self, sigma: &[usize]) -> Result<MonomialIdeal> {
        VariableOrder::new(sigma.to_vec())?;
        if sigma.len() != self.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: sigma.len(),
            });
        }
        Ok(MonomialIdeal::from_minimal(
            self.n,
            self.gens.iter().map(|g| g.permute(sigma)).collect(),
        ))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexsegment::monomials_of_degree;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        make_ideal(gens[0].len(), gens.iter().map(|e| m(e))).unwrap()
    }

    fn remark() -> MonomialIdeal {
        ideal(&[&[1, 0, 2], &[2, 0, 1], &[1, 1, 1], &[0, 2, 1]])
    }

    #[test]
    fn make_ideal_minimalizes() {
        let i = ideal(&[&[2, 0], &[1, 1], &[0, 1]]);
        assert_eq!(i.gens(), &[m(&[2, 0]), m(&[0, 1])]);
        assert_eq!(ideal(&[&[1, 1]]).gens(), &[m(&[1, 1])]);
        assert_eq!(make_ideal(2, Vec::new()), Err(Error::EmptyIdeal));
        assert!(matches!(
            make_ideal(2, vec![m(&[1, 0, 0])]),
            Err(Error::AmbientMismatch { .. })
        ));
    }

    #[test]
    fn canonical_order_is_lex_descending() {
        let i = remark();
        let shown: Vec<_> = i.gens().iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x1^2*x3", "x1*x2*x3", "x1*x3^2", "x2^2*x3"]);
    }

    #[test]
    fn membership() {
        let i = remark();
        assert!(!i.contains(&m(&[0, 1, 2])).unwrap());
        for g in i.gens() {
            assert!(i.contains(g).unwrap());
        }
        assert!(ideal(&[&[1, 0]]).contains(&m(&[5, 1])).unwrap());
    }

    #[test]
    fn colon_ideal_examples() {
        let i = ideal(&[&[2, 0], &[1, 1]]);
        assert_eq!(i.colon(&m(&[0, 1])).unwrap(), ideal(&[&[1, 0]]));
        assert_eq!(i.colon(&Monomial::one(2)).unwrap(), i);
        let prefix = ideal(&[&[1, 0, 2], &[2, 0, 1], &[1, 1, 1]]);
        assert_eq!(
            prefix.colon(&m(&[0, 2, 1])).unwrap(),
            ideal(&[&[1, 0, 1], &[2, 0, 0], &[1, 0, 0]])
        );
        // the minimalized form of the above is just (x1)
        assert_eq!(prefix.colon(&m(&[0, 2, 1])).unwrap(), ideal(&[&[1, 0, 0]]));
        let unit = i.colon(&m(&[2, 0])).unwrap();
        assert!(unit.is_unit());
    }

    #[test]
    fn localization_examples() {
        let i = ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(i.localize(&[2]).unwrap(), ideal(&[&[2, 0, 0], &[0, 1, 0]]));
        assert_eq!(i.localize(&[]).unwrap(), i);
        assert!(i.localize(&[0, 1, 2]).unwrap().is_unit());
        assert!(i.localize(&[3]).is_err());
    }

    #[test]
    fn pure_power_localization() {
        // x1^3, x2^3 and the x3-heavy part (x1,x2)^1 * x3^2 in degree 3
        let k = 2;
        let d = 3;
        let mut raw = vec![m(&[3, 0, 0]), m(&[0, 3, 0])];
        raw.push(m(&[1, 0, 2]));
        raw.push(m(&[0, 1, 2]));
        raw.push(m(&[2, 0, 1]));
        let i = make_ideal(3, raw).unwrap();
        let loc = i.localize(&[2]).unwrap();
        let expected = make_ideal(3, vec![m(&[1, 0, 0]), m(&[0, 1, 0])])
            .unwrap()
            .power(d - k)
            .unwrap();
        assert_eq!(loc, expected);
    }

    #[test]
    fn sums_products_powers() {
        let a = ideal(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = ideal(&[&[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            a.product(&b).unwrap(),
            ideal(&[&[1, 1, 0], &[1, 0, 1], &[0, 2, 0], &[0, 1, 1]])
        );
        let sq = MonomialIdeal::maximal(3).power(2).unwrap();
        assert_eq!(sq.len(), 6);
        assert_eq!(sq, MonomialIdeal::veronese(3, 2));
        // x1 (x2, x3) + x1^2
        let x1 = ideal(&[&[1, 0, 0]]);
        let n23 = ideal(&[&[0, 1, 0], &[0, 0, 1]]);
        let s = x1
            .product(&n23)
            .unwrap()
            .sum(&x1.power(2).unwrap())
            .unwrap();
        assert_eq!(s, ideal(&[&[1, 1, 0], &[1, 0, 1], &[2, 0, 0]]));
        assert!(a.power(0).is_err());
        assert!(a.sum(&ideal(&[&[1, 0]])).is_err());
    }

    #[test]
    fn equigenerated() {
        assert_eq!(ideal(&[&[2, 0], &[1, 1]]).equigenerated_degree(), Some(2));
        assert_eq!(ideal(&[&[1, 0], &[0, 2]]).equigenerated_degree(), None);
        assert_eq!(
            MonomialIdeal::veronese(3, 2).equigenerated_degree(),
            Some(2)
        );
        assert_eq!(MonomialIdeal::unit(2).equigenerated_degree(), Some(0));
    }

    fn subset_of_md() -> impl Strategy<Value = Vec<Monomial>> {
        let md = monomials_of_degree(3, 3).into_elems();
        prop::sample::subsequence(md, 1..=10)
    }

    proptest! {
        #[test]
        fn antichain_returned_unchanged(gens in subset_of_md()) {
            let i = make_ideal(3, gens.clone()).unwrap();
            prop_assert_eq!(i.gens(), &gens[..]);
        }

        #[test]
        fn make_ideal_idempotent_and_order_insensitive(
            raw in prop::collection::vec(prop::collection::vec(0u32..3, 3), 1..8),
            seed in any::<u64>(),
        ) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mons: Vec<_> = raw.into_iter().map(|e| Monomial::new(e).unwrap()).collect();
            let i = make_ideal(3, mons.clone()).unwrap();
            let mut shuffled = mons;
            shuffled.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            prop_assert_eq!(&make_ideal(3, shuffled).unwrap(), &i);
            prop_assert_eq!(&make_ideal(3, i.gens().to_vec()).unwrap(), &i);
        }

        #[test]
        fn colon_contains_generator_colons(
            gens in subset_of_md(),
            v in prop::collection::vec(0u32..3, 3),
        ) {
            let i = make_ideal(3, gens).unwrap();
            let v = Monomial::new(v).unwrap();
            let c = i.colon(&v).unwrap();
            for g in i.gens() {
                prop_assert!(c.contains(&g.colon(&v).unwrap()).unwrap());
            }
        }

        #[test]
        fn localization_composes(
            gens in subset_of_md(),
            c1 in prop::sample::subsequence(vec![0usize, 1, 2], 0..=2),
            c2 in prop::sample::subsequence(vec![0usize, 1, 2], 0..=2),
        ) {
            let i = make_ideal(3, gens).unwrap();
            let mut both = c1.clone();
            both.extend(&c2);
            prop_assert_eq!(
                i.localize(&c1).unwrap().localize(&c2).unwrap(),
                i.localize(&both).unwrap()
            );
        }
    }
}
