//! Gauss-Jordan elimination and what follows from it.

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    /// Reduced row echelon form. Pivots are taken leftmost-first and from the
    /// topmost available row, so the result is a deterministic function of
    /// the input.
    #[allow(clippy::needless_range_loop)]
    pub fn rref(&self) -> Rref {
        let (rows, cols) = self.shape();
        let field = self.field();
        let mut m: Vec<Vec<Scalar>> = (0..rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, p);
            let inv = m[rank][col].inv().expect("nonzero pivot");
            if !inv.is_one() {
                for s in m[rank][col..].iter_mut() {
                    if !s.is_zero() {
                        *s = &*s * &inv;
                    }
                }
            }
            let pivot_nz: Vec<(usize, Scalar)> = (col..cols)
                .filter(|&j| !m[rank][j].is_zero())
                .map(|j| (j, m[rank][j].clone()))
                .collect();
            for r in 0..rows {
                if r == rank || m[r][col].is_zero() {
                    continue;
                }
                let factor = m[r][col].clone();
                for (j, v) in &pivot_nz {
                    let d = &factor * v;
                    m[r][*j] -= &d;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let reduced = Matrix::from_rows(field, cols, m).expect("shape preserved");
        Rref {
            reduced,
            pivots,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A basis of the null space, as the columns of the returned matrix.
    /// One column per free variable: the free variable set to 1, the other
    /// free variables to 0.
    pub fn kernel_basis(&self) -> Matrix {
        let cols = self.cols();
        let field = self.field();
        let Rref {
            reduced, pivots, ..
        } = self.rref();
        let mut is_pivot = vec![false; cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..cols).filter(|&j| !is_pivot[j]).collect();
        let mut k = Matrix::zeros(field, cols, free.len());
        for (c, &f) in free.iter().enumerate() {
            k.set(f, c, field.one());
            for (r, &p) in pivots.iter().enumerate() {
                let v = reduced.get(r, f);
                if !v.is_zero() {
                    k.set(p, c, -v);
                }
            }
        }
        k
    }

    /// Some `x` with `self · x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        if self.rows() != b.rows() {
            return Err(Error::dims("solve", self.rows(), b.rows()));
        }
        let n = self.cols();
        let aug = self.hstack(b)?;
        let Rref {
            reduced, pivots, ..
        } = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field(), n, b.cols());
        for (r, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols() {
                x.set(p, j, reduced.get(r, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Two-sided inverse of a square full-rank matrix.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.rows();
        if n != self.cols() {
            return None;
        }
        let aug = self
            .hstack(&Matrix::identity(self.field(), n))
            .expect("same row count");
        let Rref {
            reduced, pivots, ..
        } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let right: Vec<usize> = (n..2 * n).collect();
        Some(reduced.select_columns(&right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn rref_examples() {
        let z = Matrix::zeros(Q, 3, 4).rref();
        assert_eq!(z.rank, 0);
        assert!(z.pivots.is_empty());

        let id = Matrix::identity(Q, 4).rref();
        assert_eq!(id.reduced, Matrix::identity(Q, 4));
        assert_eq!(id.pivots, vec![0, 1, 2, 3]);
        assert_eq!(id.rank, 4);

        let p = Matrix::from_i64(Q, &[&[2, 4], &[1, 2]]).rref();
        assert_eq!(p.rank, 1);
        assert_eq!(p.pivots, vec![0]);
        assert_eq!(p.reduced, Matrix::from_i64(Q, &[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel_basis().cols(), 0);
        let k = Matrix::zeros(Q, 2, 3).kernel_basis();
        assert_eq!(k, Matrix::identity(Q, 3));
        let k = Matrix::from_i64(Q, &[&[1, 1]]).kernel_basis();
        assert_eq!(k, Matrix::from_i64(Q, &[&[-1], &[1]]));
    }

    #[test]
    fn solve_examples() {
        let b = Matrix::from_i64(Q, &[&[3], &[-2]]);
        assert_eq!(Matrix::identity(Q, 2).solve(&b).unwrap(), Some(b.clone()));
        let x = Matrix::from_i64(Q, &[&[1, 0]])
            .solve(&Matrix::from_i64(Q, &[&[1]]))
            .unwrap();
        assert_eq!(x, Some(Matrix::from_i64(Q, &[&[1], &[0]])));
        let none = Matrix::from_i64(Q, &[&[1, 1], &[2, 2]])
            .solve(&Matrix::from_i64(Q, &[&[1], &[3]]))
            .unwrap();
        assert_eq!(none, None);
        assert!(Matrix::identity(Q, 2)
            .solve(&Matrix::zeros(Q, 3, 1))
            .is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(
            Matrix::identity(Q, 3).inverse(),
            Some(Matrix::identity(Q, 3))
        );
        let flip = Matrix::swap(Q, 2, 2);
        assert_eq!(flip.inverse(), Some(flip.clone()));
        assert_eq!(Matrix::zeros(Q, 2, 3).inverse(), None);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).inverse(), None);
        let m = Matrix::from_i64(Q, &[&[2, 1], &[7, 4]]);
        assert_eq!(
            m.inverse().unwrap(),
            Matrix::from_i64(Q, &[&[4, -1], &[-7, 2]])
        );
    }

    #[test]
    fn prime_field_elimination() {
        let f = Field::Prime(5);
        let m = Matrix::from_i64(f, &[&[2, 4], &[1, 3]]);
        let inv = m.inverse().unwrap();
        assert!(m.compose(&inv).unwrap().is_identity());
        // rank drops mod 2
        let m = Matrix::from_i64(Field::Prime(2), &[&[1, 1], &[1, 3]]);
        assert_eq!(m.rank(), 1);
    }
}
