//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v = diag(diagonal)`, with `diagonal[i]` dividing `diagonal[i+1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// The `min(rows, cols)` diagonal entries, non-negative.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    /// Row transform, present when requested.
    pub u: Option<IntMatrix>,
    /// Column transform, present when requested.
    pub v: Option<IntMatrix>,
}

impl SmithForm {
    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
    }
}

/// Smith normal form with unimodular transforms.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    reduce(m, true)
}

/// Smith normal form without the transforms (cheaper; enough for homology).
pub fn smith_diagonal(m: &IntMatrix) -> SmithForm {
    reduce(m, false)
}

fn reduce(m: &IntMatrix, track: bool) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = track.then(|| IntMatrix::identity(rows));
    let mut v = track.then(|| IntMatrix::identity(cols));
    let n = rows.min(cols);
    let mut rank = 0;
    'outer: for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a.get(bi, bj).abs()) {
                        best = Some((i, j));
                        if x.abs() == BigInt::from(1) {
                            break;
                        }
                    }
                }
            }
            let Some((pi, pj)) = best else { break 'outer };
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }
            let pivot = a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(&pivot);
                a.sub_row(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_row(i, t, &q);
                }
                clean &= a.get(i, t).is_zero();
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(&pivot);
                a.sub_col(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.sub_col(j, t, &q);
                }
                clean &= a.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility: fold an offending row into the pivot row.
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&pivot)));
            if let Some(i) = offending {
                let minus_one = BigInt::from(-1);
                a.sub_row(t, i, &minus_one);
                if let Some(u) = u.as_mut() {
                    u.sub_row(t, i, &minus_one);
                }
                continue;
            }
            break;
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        rank += 1;
    }
    let diagonal = (0..n).map(|i| a.get(i, i).clone()).collect();
    SmithForm { diagonal, rank, u, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(rows: &[&[i64]]) -> Vec<i64> {
        let m = IntMatrix::from_rows(rows);
        let s = smith_normal_form(&m);
        let u = s.u.as_ref().unwrap();
        let v = s.v.as_ref().unwrap();
        let d = u.mul(&m).mul(v);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if i != j {
                    assert!(d.get(i, j).is_zero(), "off-diagonal entry in\n{d}");
                } else {
                    assert_eq!(d.get(i, i), &s.diagonal[i]);
                }
            }
        }
        assert_eq!(u.determinant().abs(), BigInt::from(1));
        assert_eq!(v.determinant().abs(), BigInt::from(1));
        s.diagonal.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(diag(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), vec![1, 1, 1]);
        assert_eq!(diag(&[&[0, 0], &[0, 0]]), vec![0, 0]);
        assert_eq!(diag(&[&[2, 4], &[6, 8]]), vec![2, 4]);
        assert_eq!(diag(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(diag(&[&[4, 6]]), vec![2]);
        assert_eq!(smith_diagonal(&IntMatrix::zeros(3, 0)).rank, 0);
    }
}
