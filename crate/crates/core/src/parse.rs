//! Text and JSON forms of monomials and ideals.
//!
//! Text: `x1^2*x3`, unit spelled `1`; ideal generators joined by `+` or one per
//! line. JSON: `{"n": 3, "generators": [[2,0,1],[1,1,1]]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{make_ideal, MonomialIdeal};
use crate::monomial::Monomial;

/// Exponent-vector JSON form of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson {
            n: i.n(),
            generators: i.gens().iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }
}

impl IdealJson {
    pub fn to_ideal(&self) -> Result<MonomialIdeal> {
        let gens = self
            .generators
            .iter()
            .map(|e| {
                if e.len() != self.n {
                    return Err(Error::AmbientMismatch {
                        left: self.n,
                        right: e.len(),
                    });
                }
                Monomial::new(e.clone())
            })
            .collect::<Result<Vec<_>>>()?;
        make_ideal(self.n, gens)
    }
}

/// One `x<i>^<e>` factor; `var` is one-based as written.
struct Factor {
    var: usize,
    exp: u32,
    pos: usize,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn at(&self) -> usize {
        self.pos
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r')) {
            self.pos += 1;
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            return Err(Error::parse(self.at(), "negative numbers are not allowed"));
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(self.at(), "expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<u64>()
            .map_err(|_| Error::parse(start, "number too large"))
    }
}

fn parse_factors(cur: &mut Cursor<'_>) -> Result<Vec<Factor>> {
    cur.skip_ws();
    if cur.peek() == Some(b'1') {
        let pos = cur.at();
        let v = cur.number()?;
        if v != 1 {
            return Err(Error::parse(pos, "only `1` may stand alone as a constant"));
        }
        return Ok(Vec::new());
    }
    let mut factors = Vec::new();
    loop {
        cur.skip_ws();
        let pos = cur.at();
        match cur.peek() {
            Some(b'x' | b'X') => cur.pos += 1,
            Some(c) => {
                return Err(Error::parse(
                    pos,
                    format!("expected a variable `x<i>`, found `{}`", c as char),
                ))
            }
            None => return Err(Error::parse(pos, "expected a variable `x<i>`")),
        }
        let var_pos = cur.at();
        let var = cur.number()?;
        if var == 0 {
            return Err(Error::parse(var_pos, "variable indices start at 1"));
        }
        let var = usize::try_from(var).map_err(|_| Error::parse(var_pos, "index too large"))?;
        cur.skip_ws();
        let mut exp = 1u32;
        if cur.peek() == Some(b'^') {
            cur.pos += 1;
            cur.skip_ws();
            let exp_pos = cur.at();
            let e = cur.number()?;
            exp = u32::try_from(e).map_err(|_| Error::parse(exp_pos, "exponent too large"))?;
        }
        factors.push(Factor { var, exp, pos });
        cur.skip_ws();
        if cur.peek() == Some(b'*') {
            cur.pos += 1;
        } else {
            break;
        }
    }
    Ok(factors)
}

fn build(factors: &[Factor], n: usize) -> Result<Monomial> {
    let mut exps = vec![0u32; n];
    for f in factors {
        if f.var > n {
            return Err(Error::parse(
                f.pos,
                format!("x{} is out of range for {} variables", f.var, n),
            ));
        }
        let slot = &mut exps[f.var - 1];
        *slot = slot.checked_add(f.exp).ok_or(Error::ExponentOverflow)?;
    }
    Monomial::new(exps)
}

fn max_var(factors: &[Factor]) -> usize {
    factors.iter().map(|f| f.var).max().unwrap_or(0)
}

/// Parse a monomial. Without `n`, the ambient ring is the largest index used.
pub fn parse_monomial(src: &str, n: Option<usize>) -> Result<Monomial> {
    let mut cur = Cursor {
        src: src.as_bytes(),
        pos: 0,
    };
    let factors = parse_factors(&mut cur)?;
    cur.skip_ws();
    if cur.pos != cur.src.len() {
        return Err(Error::parse(cur.at(), "unexpected trailing input"));
    }
    let n = n.unwrap_or_else(|| max_var(&factors).max(1));
    build(&factors, n)
}

/// Parse an ideal in either the text form or the JSON form.
pub fn parse_ideal(src: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    if src.trim_start().starts_with('{') {
        let json: IdealJson = serde_json::from_str(src).map_err(|e| {
            let line_start: usize = src
                .split_inclusive('\n')
                .take(e.line().saturating_sub(1))
                .map(str::len)
                .sum();
            Error::parse(line_start + e.column().saturating_sub(1), e.to_string())
        })?;
        if let Some(n) = n {
            if n != json.n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: json.n,
                });
            }
        }
        return json.to_ideal();
    }

    let bytes = src.as_bytes();
    let mut terms: Vec<Vec<Factor>> = Vec::new();
    let mut cur = Cursor { src: bytes, pos: 0 };
    loop {
        // blank lines and leading separators are tolerated
        while matches!(cur.peek(), Some(b' ' | b'\t' | b'\r' | b'\n')) {
            cur.pos += 1;
        }
        if cur.peek().is_none() {
            break;
        }
        terms.push(parse_factors(&mut cur)?);
        cur.skip_ws();
        match cur.peek() {
            Some(b'+' | b'\n') => cur.pos += 1,
            None => break,
            Some(c) => {
                return Err(Error::parse(
                    cur.at(),
                    format!("expected `+` or a newline, found `{}`", c as char),
                ))
            }
        }
    }
    if terms.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let n = n.unwrap_or_else(|| terms.iter().map(|t| max_var(t)).max().unwrap_or(0).max(1));
    let gens = terms
        .iter()
        .map(|t| build(t, n))
        .collect::<Result<Vec<_>>>()?;
    make_ideal(n, gens)
}
