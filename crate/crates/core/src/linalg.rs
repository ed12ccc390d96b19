//! Exact linear algebra on small integer matrices.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Square integer matrix stored by rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: IntMatrix = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn to_rational(m: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

/// Solves `m x = rhs` for each right-hand side column.
pub fn solve_many(m: &[Vec<BigInt>], rhs: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let cols = rhs.len();
    let mut a = to_rational(m);
    for (i, row) in a.iter_mut().enumerate() {
        row.extend(rhs.iter().map(|b| b[i].clone()));
    }
    for c in 0..n {
        let pivot = (c..n)
            .find(|&r| !a[r][c].is_zero())
            .ok_or(Error::SingularMatrix)?;
        a.swap(c, pivot);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    Ok((0..cols)
        .map(|j| (0..n).map(|i| a[i][n + j].clone()).collect())
        .collect())
}

pub fn solve(m: &[Vec<BigInt>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    Ok(solve_many(m, &[rhs.to_vec()])?.remove(0))
}

/// Rational inverse, returned by rows.
pub fn inverse(m: &[Vec<BigInt>]) -> Result<Vec<Vec<Rational>>> {
    let n = m.len();
    let identity: Vec<Vec<Rational>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    // Columns of the inverse; the inverse of a symmetric matrix is symmetric,
    // but transpose anyway so the result is correct in general.
    let cols = solve_many(m, &identity)?;
    Ok((0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect())
}

/// `x^T a y` for a rational matrix.
pub fn bilinear(x: &[Rational], a: &[Vec<Rational>], y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (xi, row) in x.iter().zip(a) {
        if xi.is_zero() {
            continue;
        }
        let mut s = Rational::zero();
        for (aij, yj) in row.iter().zip(y) {
            s += aij * yj;
        }
        acc += xi * s;
    }
    acc
}

pub fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter()
        .zip(y)
        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

/// Signature of a symmetric integer matrix by congruence diagonalization.
pub fn signature(m: &[Vec<BigInt>]) -> i64 {
    let mut a = to_rational(m);
    let n = a.len();
    let mut sig = 0i64;
    for k in 0..n {
        if let Some(r) = (k..n).find(|&r| !a[r][r].is_zero()) {
            symmetric_swap(&mut a, k, r);
        } else if let Some((i, j)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        {
            // a_ii = a_jj = 0, so adding row/column j to i gives 2 a_ij != 0.
            for c in 0..n {
                let v = a[j][c].clone();
                a[i][c] += v;
            }
            for r in 0..n {
                let v = a[r][j].clone();
                a[r][i] += v;
            }
            symmetric_swap(&mut a, k, i);
        } else {
            break;
        }
        let pivot = a[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in k..n {
                let v = &f * &a[k][c];
                a[i][c] -= v;
            }
            for r in k..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
    }
    sig
}

fn symmetric_swap(a: &mut [Vec<Rational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// Nonzero invariant factors (absolute values, dividing chain) of an
/// integer matrix, followed by one zero per unit of corank.
pub fn smith_invariants(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut a: IntMatrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_entry(&a, t) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let f = a[r][t].div_floor(&a[t][t]);
                for c in t..cols {
                    let v = &f * &a[t][c];
                    a[r][c] -= v;
                }
                if !a[r][t].is_zero() {
                    a.swap(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let f = a[t][c].div_floor(&a[t][t]);
                for row in a.iter_mut().skip(t) {
                    let v = &f * &row[t];
                    row[c] -= v;
                }
                if !a[t][c].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, c);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            let bad = (t + 1..rows)
                .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                .find(|&(r, c)| !(&a[r][c] % &a[t][t]).is_zero());
            match bad {
                Some((r, _)) => {
                    for c in t..cols {
                        let v = a[r][c].clone();
                        a[t][c] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag.extend(std::iter::repeat_n(
        BigInt::zero(),
        rows.min(cols) - diag.len(),
    ));
    diag
}

fn smallest_entry(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(br, bc)| x.abs() < a[br][bc].abs()) {
                best = Some((r, c));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn determinants() {
        assert_eq!(
            determinant(&int_matrix(&[vec![2, 1], vec![1, 2]])),
            BigInt::from(3)
        );
        assert_eq!(
            determinant(&int_matrix(&[vec![0, 1], vec![1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            determinant(&int_matrix(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(
            determinant(&int_matrix(&[vec![1, 2], vec![2, 4]])),
            BigInt::zero()
        );
    }

    #[test]
    fn solving() {
        let m = int_matrix(&[vec![2, 1], vec![1, 3]]);
        let x = solve(&m, &[ratio(1, 1), ratio(2, 1)]).unwrap();
        assert_eq!(x, vec![ratio(1, 5), ratio(3, 5)]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv[0][0], ratio(3, 5));
        assert!(solve(
            &int_matrix(&[vec![1, 1], vec![1, 1]]),
            &[ratio(1, 1), ratio(0, 1)]
        )
        .is_err());
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&int_matrix(&[vec![0, 1], vec![1, 0]])), 0);
        assert_eq!(signature(&int_matrix(&[vec![-2, 1], vec![1, -2]])), -2);
        assert_eq!(signature(&int_matrix(&[vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(signature(&int_matrix(&[vec![1, 2], vec![2, 1]])), 0);
        assert_eq!(
            signature(&int_matrix(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]])),
            1
        );
    }

    #[test]
    fn smith() {
        let s = smith_invariants(&int_matrix(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s, vec![BigInt::from(2), BigInt::from(4)]);
        let s = smith_invariants(&int_matrix(&[vec![-4, 1], vec![1, -2]]));
        assert_eq!(s, vec![BigInt::from(1), BigInt::from(7)]);
        let s = smith_invariants(&int_matrix(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s, vec![BigInt::from(1), BigInt::from(6)]);
        let s = smith_invariants(&int_matrix(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(s, vec![BigInt::from(1), BigInt::zero()]);
    }
}
