//! Dense linear algebra over an exact field.

use crate::exact::Field;

/// Solves `a x = b` for a square nonsingular `a` by Gaussian elimination.
/// Returns `None` when `a` is singular.
pub fn solve<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Option<Vec<F>> {
    let n = a.len();
    assert_eq!(b.len(), n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = a[col][col].inverse()?;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].times(&inv);
            for c in col..n {
                let v = a[col][c].times(&f);
                a[r][c] = a[r][c].minus(&v);
            }
            let v = b[col].times(&f);
            b[r] = b[r].minus(&v);
        }
    }
    Some(
        (0..n)
            .map(|i| b[i].times(&a[i][i].inverse().unwrap()))
            .collect(),
    )
}

/// Inverse of a square matrix, `None` if singular.
pub fn inverse<F: Field>(a: &[Vec<F>]) -> Option<Vec<Vec<F>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<F> = (0..n)
            .map(|i| if i == j { F::one() } else { F::zero() })
            .collect();
        cols.push(solve(a.to_vec(), e)?);
    }
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, BigRational};

    #[test]
    fn two_by_two() {
        let a = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(3, 1)]];
        let x = solve(a.clone(), vec![rat(3, 1), rat(5, 1)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], rat(3, 5));
        let sing: Vec<Vec<BigRational>> =
            vec![vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]];
        assert!(solve(sing, vec![rat(0, 1), rat(0, 1)]).is_none());
    }
}
