//! Gaussian elimination over the rationals: rank, kernel, particular solution.

use super::matrix::Matrix;
use super::scalar::{self, Scalar, Vector};
use crate::error::{dim_err, Result};
use num_traits::{One, Zero};

/// Outcome of [`linear_solve_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub rank: usize,
    /// Basis of the null space; one vector per free column.
    pub kernel_basis: Vec<Vector>,
    /// Some solution of `A x = b` when `b` was given and lies in the column space.
    pub particular_solution: Option<Vector>,
}

/// Reduces `m` to reduced row echelon form, pivoting only in the first
/// `pivot_cols` columns. Returns the pivot column of each pivot row.
pub(crate) fn rref_in_place(m: &mut Matrix, pivot_cols: usize) -> Vec<usize> {
    let rows = m.rows();
    let cols = m.cols();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let inv = Scalar::one() / &m[(r, c)];
        for j in c..cols {
            if !m[(r, j)].is_zero() {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
        }
        let pivot_row: Vec<(usize, Scalar)> = (c..cols)
            .filter(|&j| !m[(r, j)].is_zero())
            .map(|j| (j, m[(r, j)].clone()))
            .collect();
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for (j, v) in &pivot_row {
                let t = &m[(i, *j)] - &f * v;
                m[(i, *j)] = t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank, kernel basis and (when `b` is given and consistent) a particular
/// solution of `A x = b`.
pub fn linear_solve_suite(a: &Matrix, b: Option<&[Scalar]>) -> Result<SolveReport> {
    let n = a.cols();
    if let Some(b) = b {
        if b.len() != a.rows() {
            return dim_err(format!("right-hand side of length {} for {} rows", b.len(), a.rows()));
        }
    }
    let rhs = match b {
        Some(b) => Matrix::from_columns(a.rows(), &[b.to_vec()])?,
        None => Matrix::zeros(a.rows(), 1),
    };
    let mut aug = a.hstack(&rhs);
    let pivots = rref_in_place(&mut aug, n);
    let rank = pivots.len();

    let is_pivot: Vec<bool> = (0..n).map(|c| pivots.contains(&c)).collect();
    let kernel_basis = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = scalar::zeros(n);
            v[f] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -aug[(r, f)].clone();
            }
            v
        })
        .collect();

    let particular_solution = match b {
        None => None,
        Some(_) => {
            let consistent = (rank..a.rows()).all(|r| aug[(r, n)].is_zero());
            consistent.then(|| {
                let mut x = scalar::zeros(n);
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = aug[(r, n)].clone();
                }
                x
            })
        }
    };

    Ok(SolveReport {
        rank,
        kernel_basis,
        particular_solution,
    })
}

/// Basis of the intersection of two subspaces given by spanning vectors.
pub fn intersect_spans(dim: usize, u: &[Vector], w: &[Vector]) -> Result<Vec<Vector>> {
    if u.is_empty() || w.is_empty() {
        return Ok(Vec::new());
    }
    // x in U ∩ W  <=>  x = U a = W b  <=>  [U | -W] (a, b) = 0
    let um = Matrix::from_columns(dim, u)?;
    let wm = Matrix::from_columns(dim, w)?.scale(&-Scalar::one());
    let rep = linear_solve_suite(&um.hstack(&wm), None)?;
    let mut out: Vec<Vector> = rep
        .kernel_basis
        .iter()
        .map(|k| um.apply(&k[..u.len()]))
        .collect();
    out = independent_subset(dim, &out)?;
    Ok(out)
}

/// A maximal linearly independent subfamily, in order.
pub fn independent_subset(dim: usize, vs: &[Vector]) -> Result<Vec<Vector>> {
    if vs.is_empty() {
        return Ok(Vec::new());
    }
    let mut m = Matrix::from_columns(dim, vs)?;
    let cols = m.cols();
    let pivots = rref_in_place(&mut m, cols);
    Ok(pivots.into_iter().map(|c| vs[c].clone()).collect())
}

/// Coordinates of `v` in the (independent) family `basis`, if it lies in the span.
pub fn coordinates_in(dim: usize, basis: &[Vector], v: &[Scalar]) -> Result<Option<Vector>> {
    if basis.is_empty() {
        return Ok(scalar::is_zero_vec(v).then(Vec::new));
    }
    let m = Matrix::from_columns(dim, basis)?;
    Ok(linear_solve_suite(&m, Some(v))?.particular_solution)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    #[test]
    fn identity_system() {
        let rep = linear_solve_suite(&Matrix::identity(2), Some(&[int(3), int(5)])).unwrap();
        assert_eq!(rep.rank, 2);
        assert!(rep.kernel_basis.is_empty());
        assert_eq!(rep.particular_solution, Some(vec![int(3), int(5)]));
    }

    #[test]
    fn single_row_kernel() {
        let rep = linear_solve_suite(&Matrix::from_i64(&[&[1, 1]]), None).unwrap();
        assert_eq!(rep.rank, 1);
        assert_eq!(rep.kernel_basis, vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let a = Matrix::from_i64(&[&[1, 1], &[2, 2]]);
        let rep = linear_solve_suite(&a, Some(&[int(1), int(3)])).unwrap();
        assert_eq!(rep.rank, 1);
        assert!(rep.particular_solution.is_none());
    }

    #[test]
    fn wrong_rhs_length_is_an_error() {
        assert!(linear_solve_suite(&Matrix::identity(2), Some(&[int(1)])).is_err());
    }

    #[test]
    fn intersection_of_planes() {
        let e = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vector>();
        let u = [e(&[1, 0, 0]), e(&[0, 1, 0])];
        let w = [e(&[0, 1, 0]), e(&[0, 0, 1])];
        let i = intersect_spans(3, &u, &w).unwrap();
        assert_eq!(i.len(), 1);
        assert!(i[0][0].is_zero() && i[0][2].is_zero() && !i[0][1].is_zero());
    }
}
