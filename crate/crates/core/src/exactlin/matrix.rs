use std::fmt;

use super::scalar::{Field, Scalar};
use crate::error::{Error, Result};

/// A dense matrix of exact scalars, stored row-major.
///
/// A matrix of shape `r × c` represents a linear map from a `c`-dimensional
/// space to an `r`-dimensional one. Basis vector `(i, j)` of `X ⊗ Y` has
/// index `i * dim(Y) + j`; [`Matrix::kron`] follows the same rule, and every
/// structure map in the crate is laid out against it.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(
        field: Field,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Scalar,
    ) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let s = f(i, j);
                assert_eq!(s.field(), field, "entry outside the matrix field");
                data.push(s);
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows. Panics on ragged input; meant for
    /// literals in builders and tests.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged matrix literal"
        );
        Matrix::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    /// Builds a matrix from scalar rows; `cols` fixes the width when there
    /// are no rows.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Matrix> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::dims("matrix row", cols, row.len()));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::FieldMismatch(format!(
                        "entry over {} in a matrix over {field}",
                        s.field()
                    )));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Column vector with a single 1 at `index`.
    pub fn basis_vector(field: Field, dim: usize, index: usize) -> Matrix {
        let mut v = Matrix::zeros(field, dim, 1);
        v.data[index] = field.one();
        v
    }

    /// Matrix with a single 1 at `(i, j)`.
    pub fn unit(field: Field, rows: usize, cols: usize, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(field, rows, cols);
        m.data[i * cols + j] = field.one();
        m
    }

    /// The permutation matrix sending basis vector `j` to `perm[j]`.
    pub fn permutation(field: Field, perm: &[usize]) -> Matrix {
        let n = perm.len();
        let mut m = Matrix::zeros(field, n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.data[i * n + j] = field.one();
        }
        m
    }

    /// The symmetry `X ⊗ Y → Y ⊗ X` for `dim X = x`, `dim Y = y`.
    pub fn swap(field: Field, x: usize, y: usize) -> Matrix {
        let perm: Vec<usize> = (0..x * y).map(|k| (k % y) * x + k / y).collect();
        Matrix::permutation(field, &perm)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.field(), self.field);
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|s| !s.is_zero()).count()
    }

    /// First coordinate where `self` and `other` differ, or `None` if equal.
    /// Shapes must agree.
    pub fn first_difference(&self, other: &Matrix) -> Option<(usize, usize)> {
        assert_eq!(self.shape(), other.shape());
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols, k % self.cols))
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(format!(
                "{} vs {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// `self ∘ g`, the matrix product `self · g`.
    pub fn compose(&self, g: &Matrix) -> Result<Matrix> {
        self.check_field(g)?;
        if self.cols != g.rows {
            return Err(Error::dims(
                "compose",
                format!("{} rows on the right factor", self.cols),
                g.rows,
            ));
        }
        let (n, c) = (self.cols, g.cols);
        let sparse_rows: Vec<Vec<(usize, &Scalar)>> = (0..g.rows)
            .map(|k| {
                g.row(k)
                    .iter()
                    .enumerate()
                    .filter(|(_, s)| !s.is_zero())
                    .collect()
            })
            .collect();
        let mut out = Matrix::zeros(self.field, self.rows, c);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * c..(i + 1) * c];
            for (k, sparse) in sparse_rows.iter().enumerate() {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                if a.is_one() {
                    for &(j, b) in sparse {
                        out_row[j] += b;
                    }
                } else {
                    for &(j, b) in sparse {
                        out_row[j] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Composes a chain of maps applied right to left: `chain(&[f, g, h])`
    /// is `f ∘ g ∘ h`.
    pub fn chain(maps: &[&Matrix]) -> Result<Matrix> {
        let (last, rest) = maps.split_last().expect("empty composition chain");
        let mut acc = (*last).clone();
        for m in rest.iter().rev() {
            acc = m.compose(&acc)?;
        }
        Ok(acc)
    }

    /// Kronecker product: `kron(f, g)[(i·rg + j), (k·cg + l)] = f[i,k]·g[j,l]`.
    pub fn kron(&self, g: &Matrix) -> Matrix {
        assert_eq!(self.field, g.field, "kron across fields");
        let (rf, cf, rg, cg) = (self.rows, self.cols, g.rows, g.cols);
        let cols = cf * cg;
        let mut out = Matrix::zeros(self.field, rf * rg, cols);
        for i in 0..rf {
            for k in 0..cf {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rg {
                    for l in 0..cg {
                        let b = g.get(j, l);
                        if b.is_zero() {
                            continue;
                        }
                        out.data[(i * rg + j) * cols + k * cg + l] = a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of several factors, left to right.
    pub fn kron_all(factors: &[&Matrix]) -> Matrix {
        let (first, rest) = factors.split_first().expect("empty kron");
        rest.iter().fold((*first).clone(), |acc, m| acc.kron(m))
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Matrix,
        context: &'static str,
        f: impl Fn(&Scalar, &Scalar) -> Scalar,
    ) -> Result<Matrix> {
        self.check_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::dims(
                context,
                format!("{:?}", self.shape()),
                format!("{:?}", other.shape()),
            ));
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    /// Columns `cols` of `self`, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j]).clone()
        })
    }

    /// Rows `rows` of `self`, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j).clone()
        })
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.rows != other.rows {
            return Err(Error::dims("hstack", self.rows, other.rows));
        }
        let cols = self.cols + other.cols;
        Ok(Matrix::from_fn(self.field, self.rows, cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    /// Places `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::dims("vstack", self.cols, other.cols));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Flattens the matrix into a column vector, row-major.
    pub fn vectorize(&self) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows * self.cols,
            cols: 1,
            data: self.data.clone(),
        }
    }

    /// Returns a copy with `delta` added to entry `(i, j)`.
    pub fn perturbed(&self, i: usize, j: usize, delta: &Scalar) -> Matrix {
        let mut m = self.clone();
        let k = i * self.cols + j;
        m.data[k] = &m.data[k] + delta;
        m
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Matrix {}x{} over {} [",
            self.rows, self.cols, self.field
        )?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, " [")?;
            for (j, s) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "]")?;
        }
        write!(f, " ]")
    }
}
