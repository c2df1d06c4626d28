//! Degree-`d` monomial sets, lexsegments and shadows.
//!
//! Everything here uses the fixed order `x1 > x2 > ... > xn`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ideal::{make_ideal, MonomialIdeal};
use crate::monomial::{Monomial, OrderKind, VariableOrder};

/// Distinct monomials of one degree, sorted lex-descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSet {
    n: usize,
    d: u64,
    elems: Vec<Monomial>,
}

fn lex_desc(a: &Monomial, b: &Monomial) -> Ordering {
    OrderKind::Lex.cmp_unchecked(b, a, &VariableOrder::identity(a.n()))
}

impl MonomialSet {
    /// Sort, deduplicate and validate an equal-degree collection.
    pub fn new(n: usize, elems: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut elems: Vec<Monomial> = elems.into_iter().collect();
        let d = elems.first().ok_or(Error::EmptyIdeal)?.degree();
        for m in &elems {
            if m.n() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: m.n(),
                });
            }
            if m.degree() != d {
                return Err(Error::NotEquigenerated);
            }
        }
        elems.sort_by(lex_desc);
        elems.dedup();
        Ok(MonomialSet { n, d, elems })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> u64 {
        self.d
    }

    pub fn elems(&self) -> &[Monomial] {
        &self.elems
    }

    pub fn into_elems(self) -> Vec<Monomial> {
        self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Lex-greatest element.
    pub fn max(&self) -> Option<&Monomial> {
        self.elems.first()
    }

    /// Lex-least element.
    pub fn min(&self) -> Option<&Monomial> {
        self.elems.last()
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        make_ideal(self.n, self.elems.iter().cloned())
    }
}

/// All `C(n+d-1, d)` monomials of degree `d`, lex-descending.
pub fn monomials_of_degree(n: usize, d: u32) -> MonomialSet {
    assert!(n >= 1, "monomial ring needs a variable");
    let mut elems = Vec::new();
    let mut exps = vec![0u32; n];
    fill(&mut exps, 0, d, &mut elems);
    debug_assert!(elems
        .windows(2)
        .all(|w| lex_desc(&w[0], &w[1]) == Ordering::Less));
    MonomialSet {
        n,
        d: u64::from(d),
        elems,
    }
}

// Largest exponent first at each position yields lex-descending output.
fn fill(exps: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = rest;
        out.push(Monomial::new(exps.clone()).expect("n >= 1"));
        return;
    }
    for e in (0..=rest).rev() {
        exps[pos] = e;
        fill(exps, pos + 1, rest - e, out);
    }
    exps[pos] = 0;
}

fn binomial(top: u64, k: u64) -> u128 {
    if k > top {
        return 0;
    }
    let k = k.min(top - k);
    (0..k).fold(1u128, |acc, i| {
        acc * u128::from(top - i) / u128::from(i + 1)
    })
}

/// Number of degree-`t` monomials in `m` variables.
fn count_monomials(m: usize, t: u64) -> u128 {
    if m == 0 {
        return u128::from(t == 0);
    }
    binomial(t + m as u64 - 1, m as u64 - 1)
}

/// Position of `w` in the lex-descending list of its degree (0 = `x1^d`).
pub fn lex_rank(w: &Monomial) -> u128 {
    let n = w.n();
    let mut rest = w.degree();
    let mut rank = 0u128;
    for k in 0..n.saturating_sub(1) {
        let wk = u64::from(w.exp(k));
        for e in wk + 1..=rest {
            rank += count_monomials(n - k - 1, rest - e);
        }
        rest -= wk;
    }
    rank
}

fn check_segment_ends(u: &Monomial, v: &Monomial) -> Result<()> {
    u.check_ambient(v)?;
    if u.degree() != v.degree() {
        return Err(Error::Precondition(format!(
            "lexsegment ends {u} and {v} differ in degree"
        )));
    }
    if lex_desc(u, v) == Ordering::Greater {
        return Err(Error::Precondition(format!(
            "lexsegment needs {u} >= {v} in lex"
        )));
    }
    Ok(())
}

/// `L(u, v) = { w : u >= w >= v }` in lex.
pub fn lexsegment(u: &Monomial, v: &Monomial) -> Result<MonomialSet> {
    check_segment_ends(u, v)?;
    let d = u32::try_from(u.degree()).map_err(|_| Error::ExponentOverflow)?;
    let all = monomials_of_degree(u.n(), d);
    let lo = lex_rank(u) as usize;
    let hi = lex_rank(v) as usize;
    debug_assert_eq!(&all.elems[lo], u);
    Ok(MonomialSet {
        n: u.n(),
        d: u.degree(),
        elems: all.elems[lo..=hi].to_vec(),
    })
}

/// `{ w * x_i : w in T }`.
pub fn shadow(t: &MonomialSet) -> Result<MonomialSet> {
    let mut out = Vec::with_capacity(t.len() * t.n);
    for w in &t.elems {
        for i in 0..t.n {
            out.push(w.mul_var(i)?);
        }
    }
    out.sort_by(lex_desc);
    out.dedup();
    Ok(MonomialSet {
        n: t.n,
        d: t.d + 1,
        elems: out,
    })
}

pub fn iterated_shadow(t: &MonomialSet, depth: usize) -> Result<MonomialSet> {
    let mut cur = t.clone();
    for _ in 0..depth {
        cur = shadow(&cur)?;
    }
    Ok(cur)
}

/// `T` is the full lex interval between its extremes.
pub fn is_lexsegment(t: &MonomialSet) -> bool {
    match (t.max(), t.min()) {
        (Some(hi), Some(lo)) => lex_rank(lo) - lex_rank(hi) + 1 == t.len() as u128,
        _ => false,
    }
}

/// Shadow depth checked when none is given.
pub fn default_shadow_depth(n: usize, d: u64) -> usize {
    n * d as usize
}

/// Whether `L(u, v)` and its iterated shadows up to `depth` are lexsegments.
pub fn is_completely_lexsegment(u: &Monomial, v: &Monomial, depth: usize) -> Result<bool> {
    Ok(first_non_lexsegment_shadow(u, v, depth)?.is_none())
}

/// The smallest shadow depth `<= depth` at which the shadow of `L(u, v)` is
/// not a lexsegment.
pub fn first_non_lexsegment_shadow(
    u: &Monomial,
    v: &Monomial,
    depth: usize,
) -> Result<Option<usize>> {
    let mut cur = lexsegment(u, v)?;
    for i in 0..=depth {
        if !is_lexsegment(&cur) {
            return Ok(Some(i));
        }
        if i < depth {
            cur = shadow(&cur)?;
        }
    }
    Ok(None)
}

/// `(u in M_d : u >= v)` in lex.
pub fn final_segment_ideal(v: &Monomial) -> Result<MonomialIdeal> {
    let d = u32::try_from(v.degree()).map_err(|_| Error::ExponentOverflow)?;
    let mut top = Monomial::one(v.n()).exponents().to_vec();
    top[0] = d;
    let top = Monomial::new(top)?;
    lexsegment(&top, v)?.to_ideal()
}

/// The linear-resolution criterion for a completely lexsegment `L(u, v)`:
/// either `u = x1^a x2^(d-a)` and `v = x1^a xn^(d-a)` with `0 < a <= d`, or
/// `deg_1(v) <= deg_1(u) - 1`.
pub fn linear_segment_criterion(u: &Monomial, v: &Monomial) -> Result<bool> {
    u.check_ambient(v)?;
    if u.degree() != v.degree() {
        return Err(Error::Precondition(
            "lexsegment ends differ in degree".into(),
        ));
    }
    let n = u.n();
    let d = u.degree();
    let a = u.exp(0);
    let shaped = |m: &Monomial, last: usize| {
        (1..n).all(|k| {
            let want = if k == last { d - u64::from(a) } else { 0 };
            u64::from(m.exp(k)) == want
        })
    };
    let first = a > 0 && v.exp(0) == a && (n == 1 || (shaped(u, 1) && shaped(v, n - 1)));
    let second = v.exp(0) < a;
    Ok(first || second)
}

/// The cited linear-resolution theorem in full. Leading variables dividing
/// neither end are dropped so that `x1 | u`. The second alternative also
/// needs `x1 w / x_max(w) <=_lex u` for the successor `w` of `v` in `M_d`
/// (vacuous when `v` is the last monomial).
pub fn linear_segment_criterion_full(u: &Monomial, v: &Monomial) -> Result<bool> {
    check_segment_ends(u, v)?;
    let Some(lead) = (0..u.n()).find(|&k| u.exp(k) > 0) else {
        return Ok(true);
    };
    let u = Monomial::new(u.exponents()[lead..].to_vec())?;
    let v = Monomial::new(v.exponents()[lead..].to_vec())?;
    if !linear_segment_criterion(&u, &v)? {
        return Ok(false);
    }
    if v.exp(0) >= u.exp(0) {
        return Ok(true);
    }
    let d = u32::try_from(u.degree()).map_err(|_| Error::ExponentOverflow)?;
    let all = monomials_of_degree(u.n(), d);
    let Some(w) = all.elems().get(lex_rank(&v) as usize + 1) else {
        return Ok(true);
    };
    let top = w.support().last().expect("positive degree");
    let lifted = w.exchange(top, 0)?.expect("top variable divides w");
    Ok(lex_desc(&lifted, &u) != Ordering::Less)
}
