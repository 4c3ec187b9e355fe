use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// A finite-dimensional unital associative algebra, given by its
/// multiplication `A ⊗ A → A` (an `n × n²` matrix) and unit `k → A`
/// (an `n × 1` matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    mult: Matrix,
    unit: Matrix,
}

impl Algebra {
    pub fn new(mult: Matrix, unit: Matrix) -> Result<Algebra> {
        let n = unit.rows();
        if unit.cols() != 1 {
            return Err(Error::dims("algebra unit", "1 column", unit.cols()));
        }
        if mult.shape() != (n, n * n) {
            return Err(Error::dims(
                "algebra multiplication",
                format!("{n}x{}", n * n),
                format!("{}x{}", mult.rows(), mult.cols()),
            ));
        }
        if mult.field() != unit.field() {
            return Err(Error::FieldMismatch("algebra structure maps".into()));
        }
        Ok(Algebra { dim: n, mult, unit })
    }

    /// The ground field as a one-dimensional algebra.
    pub fn base_field(field: Field) -> Algebra {
        Algebra {
            dim: 1,
            mult: Matrix::identity(field, 1),
            unit: Matrix::identity(field, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.mult.field()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn id(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim)
    }

    pub fn check(&self) -> CheckReport {
        check_algebra(self)
    }
}

/// Associativity and both unit laws.
pub fn check_algebra(a: &Algebra) -> CheckReport {
    let id = a.id();
    let mut r = CheckReport::new();
    r.expect_equal(
        "associativity",
        a.mult.compose(&a.mult.kron(&id)),
        a.mult.compose(&id.kron(&a.mult)),
    );
    r.expect_equal(
        "left unit",
        a.mult.compose(&a.unit.kron(&id)),
        Ok(id.clone()),
    );
    r.expect_equal(
        "right unit",
        a.mult.compose(&id.kron(&a.unit)),
        Ok(id.clone()),
    );
    r
}

/// `f : A → B` preserves multiplication and unit.
pub fn check_algebra_map(f: &Matrix, src: &Algebra, dst: &Algebra) -> CheckReport {
    let mut r = CheckReport::new();
    if f.shape() != (dst.dim, src.dim) {
        r.expect("shape", false, || {
            format!("map is {:?}, expected {:?}", f.shape(), (dst.dim, src.dim))
        });
        return r;
    }
    r.expect_equal(
        "multiplicative",
        f.compose(&src.mult),
        dst.mult.compose(&f.kron(f)),
    );
    r.expect_equal("unital", f.compose(&src.unit), Ok(dst.unit.clone()));
    r
}
