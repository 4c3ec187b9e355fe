use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// A finite-dimensional counital coassociative coalgebra: comultiplication
/// `C → C ⊗ C` (`n² × n`) and counit `C → k` (`1 × n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    dim: usize,
    comult: Matrix,
    counit: Matrix,
}

impl Coalgebra {
    pub fn new(comult: Matrix, counit: Matrix) -> Result<Coalgebra> {
        let n = counit.cols();
        if counit.rows() != 1 {
            return Err(Error::dims("coalgebra counit", "1 row", counit.rows()));
        }
        if comult.shape() != (n * n, n) {
            return Err(Error::dims(
                "coalgebra comultiplication",
                format!("{}x{n}", n * n),
                format!("{}x{}", comult.rows(), comult.cols()),
            ));
        }
        if comult.field() != counit.field() {
            return Err(Error::FieldMismatch("coalgebra structure maps".into()));
        }
        Ok(Coalgebra {
            dim: n,
            comult,
            counit,
        })
    }

    pub fn base_field(field: Field) -> Coalgebra {
        Coalgebra {
            dim: 1,
            comult: Matrix::identity(field, 1),
            counit: Matrix::identity(field, 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.comult.field()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn id(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim)
    }

    pub fn check(&self) -> CheckReport {
        check_coalgebra(self)
    }
}

pub fn check_coalgebra(c: &Coalgebra) -> CheckReport {
    let id = c.id();
    let mut r = CheckReport::new();
    r.expect_equal(
        "coassociativity",
        c.comult.kron(&id).compose(&c.comult),
        id.kron(&c.comult).compose(&c.comult),
    );
    r.expect_equal(
        "left counit",
        c.counit.kron(&id).compose(&c.comult),
        Ok(id.clone()),
    );
    r.expect_equal(
        "right counit",
        id.kron(&c.counit).compose(&c.comult),
        Ok(id.clone()),
    );
    r
}

/// `g : C → D` preserves comultiplication and counit.
pub fn check_coalgebra_map(g: &Matrix, src: &Coalgebra, dst: &Coalgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if g.shape() != (dst.dim, src.dim) {
        r.expect("shape", false, || {
            format!("map is {:?}, expected {:?}", g.shape(), (dst.dim, src.dim))
        });
        return r;
    }
    r.expect_equal(
        "comultiplicative",
        dst.comult.compose(g),
        g.kron(g).compose(&src.comult),
    );
    r.expect_equal("counital", dst.counit.compose(g), Ok(src.counit.clone()));
    r
}
