//! Exact integer linear algebra: determinants and linear solves.
//!
//! Fraction-free (Bareiss) elimination over checked `i128`. Matrices here
//! are small and mostly unimodular, so intermediate values stay modest; any
//! overflow is reported, never wrapped.

use crate::error::{Error, Result};

fn ovf() -> Error {
    Error::Overflow("exact elimination")
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or_else(ovf)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or_else(ovf)
}

/// Determinant of a square integer matrix by singleton elimination plus
/// Bareiss on the dense remainder.
pub fn determinant(matrix: &[Vec<i64>]) -> Result<i128> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::domain("determinant requires a square matrix"));
        }
    }
    let m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut live_rows: Vec<usize> = (0..n).collect();
    let mut live_cols: Vec<usize> = (0..n).collect();
    let mut det: i128 = 1;

    // peel off rows/columns with a single nonzero entry
    loop {
        let mut progress = false;
        'scan: for (ri, &r) in live_rows.iter().enumerate() {
            let mut nonzero = None;
            for (ci, &c) in live_cols.iter().enumerate() {
                if m[r][c] != 0 {
                    if nonzero.is_some() {
                        continue 'scan;
                    }
                    nonzero = Some(ci);
                }
            }
            match nonzero {
                None => return Ok(0),
                Some(ci) => {
                    let c = live_cols[ci];
                    // sign of the permutation moving (ri, ci) to the corner
                    if (ri + ci) % 2 == 1 {
                        det = -det;
                    }
                    det = mul(det, m[r][c])?;
                    live_rows.remove(ri);
                    live_cols.remove(ci);
                    progress = true;
                    break;
                }
            }
        }
        if !progress || live_rows.is_empty() {
            break;
        }
    }
    if live_rows.is_empty() {
        return Ok(det);
    }

    // Bareiss on the remainder
    let k = live_rows.len();
    let mut a: Vec<Vec<i128>> = live_rows
        .iter()
        .map(|&r| live_cols.iter().map(|&c| m[r][c]).collect::<Vec<_>>())
        .collect();
    let mut sign: i128 = 1;
    let mut prev: i128 = 1;
    for piv in 0..k {
        let pr = (piv..k).find(|&r| a[r][piv] != 0);
        let pr = match pr {
            None => return Ok(0),
            Some(pr) => pr,
        };
        if pr != piv {
            a.swap(pr, piv);
            sign = -sign;
        }
        for r in piv + 1..k {
            for c in piv + 1..k {
                let num = sub(mul(a[r][c], a[piv][piv])?, mul(a[r][piv], a[piv][c])?)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[r][c] = num / prev;
            }
            a[r][piv] = 0;
        }
        prev = a[piv][piv];
    }
    mul(det, mul(sign, a[k - 1][k - 1])?)
}

/// Solves `A x = b` exactly over the integers.
///
/// Errors when `A` is singular or the unique rational solution is not
/// integral (which cannot happen for unimodular `A`).
pub fn solve_exact(matrix: &[Vec<i64>], rhs: &[i64]) -> Result<Vec<i64>> {
    let n = matrix.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    for row in matrix {
        if row.len() != n {
            return Err(Error::domain("solve requires a square matrix"));
        }
    }
    if rhs.len() != n {
        return Err(Error::domain("right-hand side length mismatch"));
    }
    // augmented fraction-free forward elimination
    let mut a: Vec<Vec<i128>> = matrix
        .iter()
        .zip(rhs)
        .map(|(r, &b)| r.iter().map(|&x| x as i128).chain([b as i128]).collect())
        .collect();
    let mut prev: i128 = 1;
    for piv in 0..n {
        let pr = (piv..n).find(|&r| a[r][piv] != 0).ok_or_else(|| {
            Error::domain("basis matrix is singular (not a basis of the chain group)")
        })?;
        a.swap(pr, piv);
        for r in piv + 1..n {
            for c in piv + 1..=n {
                let num = sub(mul(a[r][c], a[piv][piv])?, mul(a[r][piv], a[piv][c])?)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                a[r][c] = num / prev;
            }
            a[r][piv] = 0;
        }
        prev = a[piv][piv];
    }
    // back substitution; each step must divide exactly for integral solutions
    let mut x = vec![0i128; n];
    for i in (0..n).rev() {
        let mut acc = a[i][n];
        for j in i + 1..n {
            acc = sub(acc, mul(a[i][j], x[j])?)?;
        }
        if acc % a[i][i] != 0 {
            return Err(Error::domain("solution is not integral in this basis"));
        }
        x[i] = acc / a[i][i];
    }
    x.into_iter()
        .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("solution coordinate")))
        .collect()
}
