use alloc::format;
use alloc::vec::Vec;

use super::Field;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Solution<F> {
    pub x: Vec<F>,
    pub rank: usize,
    /// Original indices of the rows that carried a pivot, in pivot order.
    pub pivot_rows: Vec<usize>,
}

struct Echelon<F> {
    rows: Vec<Vec<F>>,
    ids: Vec<usize>,
    pivot_cols: Vec<usize>,
}

/// Forward elimination on `rows` (each of length `width`), pivoting only in
/// the first `cols` columns. At each column the nonzero candidate of least
/// [`Field::pivot_cost`] is chosen.
fn eliminate<F: Field>(mut rows: Vec<Vec<F>>, cols: usize) -> Echelon<F> {
    let n = rows.len();
    let mut ids: Vec<usize> = (0..n).collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let pick = (rank..n)
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| rows[r][col].pivot_cost());
        let Some(p) = pick else { continue };
        rows.swap(rank, p);
        ids.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        for c in col..rows[rank].len() {
            if !rows[rank][c].is_zero() {
                rows[rank][c] = rows[rank][c].clone() * inv.clone();
            }
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in bottom.iter_mut() {
            let f = row[col].clone();
            if f.is_zero() {
                continue;
            }
            for c in col..prow.len() {
                if !prow[c].is_zero() {
                    row[c] = row[c].clone() - f.clone() * prow[c].clone();
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
    }
    Echelon { rows, ids, pivot_cols }
}

/// Exact solution of the overdetermined system `A x = b`.
///
/// Requires at least as many rows as columns. Returns the unique solution
/// when the columns are independent and the system is consistent.
pub fn solve_exact<F: Field>(a: &[Vec<F>], b: &[F]) -> Result<Solution<F>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if rows < cols {
        return Err(Error::Underdetermined { rows, cols });
    }
    if b.len() != rows || a.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!(
            "matrix is {rows}x{cols}, right-hand side has {} entries",
            b.len()
        )));
    }
    let aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    let ech = eliminate(aug, cols);
    let rank = ech.pivot_cols.len();
    if rank < cols {
        return Err(Error::RankDeficient { rank, cols });
    }
    if let Some(r) = (rank..rows).find(|&r| !ech.rows[r][cols].is_zero()) {
        return Err(Error::Inconsistent { row: ech.ids[r] });
    }
    let mut x = alloc::vec![F::zero(); cols];
    for i in (0..rank).rev() {
        let row = &ech.rows[i];
        let mut acc = row[cols].clone();
        for j in i + 1..cols {
            if !row[j].is_zero() {
                acc = acc - row[j].clone() * x[j].clone();
            }
        }
        x[i] = acc;
    }
    Ok(Solution {
        x,
        rank,
        pivot_rows: ech.ids[..rank].to_vec(),
    })
}

/// Rank of a matrix.
pub fn rank<F: Field>(a: &[Vec<F>]) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    eliminate(a.to_vec(), cols).pivot_cols.len()
}

/// Inverse of a square matrix, `None` if singular.
pub fn invert<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let aug: Vec<Vec<F>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { F::one() } else { F::zero() }));
            row
        })
        .collect();
    let mut ech = eliminate(aug, n);
    if ech.pivot_cols.len() < n {
        return None;
    }
    // back elimination to reduced form
    for i in (0..n).rev() {
        let (top, rest) = ech.rows.split_at_mut(i);
        let prow = &rest[0];
        for row in top.iter_mut() {
            let f = row[i].clone();
            if f.is_zero() {
                continue;
            }
            for c in i..2 * n {
                if !prow[c].is_zero() {
                    row[c] = row[c].clone() - f.clone() * prow[c].clone();
                }
            }
        }
    }
    Some(ech.rows.into_iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{int, FieldElement, Rational};
    use num_traits::{One, Zero};

    fn fe(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn identity_system() {
        let a = alloc::vec![alloc::vec![fe(1), fe(0)], alloc::vec![fe(0), fe(1)]];
        let b = alloc::vec![fe(1), FieldElement::t()];
        let s = solve_exact(&a, &b).unwrap();
        assert_eq!(s.x, alloc::vec![fe(1), FieldElement::t()]);
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn duplicated_consistent_row() {
        let a = alloc::vec![
            alloc::vec![fe(1), fe(0)],
            alloc::vec![fe(1), fe(0)],
            alloc::vec![fe(0), fe(1)]
        ];
        let b = alloc::vec![fe(1), fe(1), FieldElement::t()];
        let s = solve_exact(&a, &b).unwrap();
        assert_eq!(s.x, alloc::vec![fe(1), FieldElement::t()]);
        assert_eq!(s.rank, 2);
    }

    #[test]
    fn inconsistent_and_deficient() {
        let a = alloc::vec![alloc::vec![fe(1)], alloc::vec![fe(1)]];
        let b = alloc::vec![fe(1), fe(2)];
        assert!(matches!(solve_exact(&a, &b), Err(Error::Inconsistent { .. })));
        let a = alloc::vec![alloc::vec![fe(1), fe(1)], alloc::vec![fe(2), fe(2)]];
        let b = alloc::vec![fe(1), fe(2)];
        assert_eq!(solve_exact(&a, &b), Err(Error::RankDeficient { rank: 1, cols: 2 }));
        let a = alloc::vec![alloc::vec![fe(1), fe(1)]];
        assert!(matches!(solve_exact(&a, &[fe(1)]), Err(Error::Underdetermined { .. })));
    }

    #[test]
    fn inverse_over_rationals() {
        let a = alloc::vec![alloc::vec![int(2), int(1)], alloc::vec![int(1), int(1)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv, alloc::vec![alloc::vec![int(1), int(-1)], alloc::vec![int(-1), int(2)]]);
        let sing = alloc::vec![alloc::vec![Rational::one(), Rational::one()], alloc::vec![Rational::one(), Rational::one()]];
        assert!(invert(&sing).is_none());
        assert_eq!(rank(&sing), 1);
        assert!(Rational::zero().is_zero());
    }
}
