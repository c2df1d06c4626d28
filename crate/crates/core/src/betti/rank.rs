//! Exact matrix rank by fraction-free (Bareiss) elimination.
//!
//! Elimination runs in `i128` with checked arithmetic and restarts over
//! `BigInt` if any intermediate overflows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

trait Exact: Clone + Zero + One + PartialEq {
    /// `(a * b - c * d) / p`, exact division guaranteed by the caller.
    fn cross_div(a: &Self, b: &Self, c: &Self, d: &Self, p: &Self) -> Option<Self>;
}

impl Exact for i128 {
    fn cross_div(a: &i128, b: &i128, c: &i128, d: &i128, p: &i128) -> Option<i128> {
        let q = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        debug_assert_eq!(q % p, 0);
        Some(q / p)
    }
}

impl Exact for BigInt {
    fn cross_div(a: &BigInt, b: &BigInt, c: &BigInt, d: &BigInt, p: &BigInt) -> Option<BigInt> {
        let q = a * b - c * d;
        debug_assert!((&q % p).is_zero());
        Some(q / p)
    }
}

fn bareiss<T: Exact>(mut m: Vec<Vec<T>>, cols: usize) -> Option<usize> {
    let rows = m.len();
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col + 1..cols {
                row[j] = T::cross_div(&pivot_row[col], &row[j], &lead, &pivot_row[j], &prev)?;
            }
            row[col] = T::zero();
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Rank over the rationals of an integer matrix given as rows of equal length.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    if cols == 0 {
        return 0;
    }
    debug_assert!(rows.iter().all(|r| r.len() == cols));
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    if let Some(r) = bareiss(small, cols) {
        return r;
    }
    rank_big(rows)
}

pub(crate) fn rank_big(rows: &[Vec<i64>]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss(big, cols).expect("BigInt elimination cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]), 3);
        // boundary of a triangle, edges x vertices
        assert_eq!(rank(&[vec![-1, 1, 0], vec![-1, 0, 1], vec![0, -1, 1]]), 2);
    }

    #[test]
    fn overflow_falls_back() {
        // Hilbert-like growth: large entries force the i128 path to overflow
        let rows: Vec<Vec<i64>> = (0..12)
            .map(|i| {
                (0..12)
                    .map(|j| ((i + 1) as i64).pow(((j % 6) + 1) as u32) * (1 << 30))
                    .collect()
            })
            .collect();
        assert_eq!(rank(&rows), rank_big(&rows));
    }

    /// Rank by enumerating the largest non-vanishing minor, for tiny matrices.
    fn rank_by_minors(rows: &[Vec<i64>]) -> usize {
        use itertools::Itertools;
        fn det(m: &[Vec<i64>]) -> i64 {
            if m.len() == 1 {
                return m[0][0];
            }
            (0..m.len())
                .map(|c| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| {
                            r.iter()
                                .enumerate()
                                .filter(|(j, _)| *j != c)
                                .map(|(_, &x)| x)
                                .collect()
                        })
                        .collect();
                    let s = if c % 2 == 0 { 1 } else { -1 };
                    s * m[0][c] * det(&minor)
                })
                .sum()
        }
        let (r, c) = (rows.len(), rows[0].len());
        for k in (1..=r.min(c)).rev() {
            for rs in (0..r).combinations(k) {
                for cs in (0..c).combinations(k) {
                    let sub: Vec<Vec<i64>> = rs
                        .iter()
                        .map(|&i| cs.iter().map(|&j| rows[i][j]).collect())
                        .collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    proptest! {
        #[test]
        fn agrees_with_minor_enumeration(
            rows in (1usize..5, 1usize..5).prop_flat_map(|(r, c)|
                prop::collection::vec(prop::collection::vec(-1i64..=1, c), r))
        ) {
            prop_assert_eq!(rank(&rows), rank_by_minors(&rows));
            prop_assert_eq!(rank(&rows), rank_big(&rows));
        }
    }
}
