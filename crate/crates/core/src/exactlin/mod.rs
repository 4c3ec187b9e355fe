//! Exact scalars and dense linear algebra over them.
//!
//! Everything downstream reduces a commuting diagram to an equality of
//! matrices built here, so arithmetic is exact in both supported fields.

mod matrix;
mod reduce;
mod scalar;

pub use matrix::Matrix;
pub use reduce::Rref;
pub use scalar::{Field, Rational, Scalar};

use crate::error::Result;

/// `f ∘ g`.
pub fn compose(f: &Matrix, g: &Matrix) -> Result<Matrix> {
    f.compose(g)
}

pub fn kron(f: &Matrix, g: &Matrix) -> Matrix {
    f.kron(g)
}

pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

pub fn kernel_basis(m: &Matrix) -> Matrix {
    m.kernel_basis()
}

pub fn solve(m: &Matrix, b: &Matrix) -> Result<Option<Matrix>> {
    m.solve(b)
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    m.inverse()
}
