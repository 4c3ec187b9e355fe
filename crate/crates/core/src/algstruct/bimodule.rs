use super::algebra::Algebra;
use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::exactlin::Matrix;

/// A `B`-`A` bimodule: left action `B ⊗ M → M`, right action `M ⊗ A → M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    left: Algebra,
    right: Algebra,
    dim: usize,
    lact: Matrix,
    ract: Matrix,
}

impl Bimodule {
    pub fn new(left: Algebra, right: Algebra, lact: Matrix, ract: Matrix) -> Result<Bimodule> {
        let m = lact.rows();
        if lact.cols() != left.dim() * m {
            return Err(Error::dims(
                "left action",
                format!("{m}x{}", left.dim() * m),
                format!("{}x{}", lact.rows(), lact.cols()),
            ));
        }
        if ract.shape() != (m, m * right.dim()) {
            return Err(Error::dims(
                "right action",
                format!("{m}x{}", m * right.dim()),
                format!("{}x{}", ract.rows(), ract.cols()),
            ));
        }
        Ok(Bimodule {
            left,
            right,
            dim: m,
            lact,
            ract,
        })
    }

    /// `A` acting on itself from both sides.
    pub fn regular(a: &Algebra) -> Bimodule {
        Bimodule {
            left: a.clone(),
            right: a.clone(),
            dim: a.dim(),
            lact: a.mult().clone(),
            ract: a.mult().clone(),
        }
    }

    /// A left `B`-module seen as a `B`-`k` bimodule.
    pub fn left_module(b: &Algebra, lact: Matrix) -> Result<Bimodule> {
        let k = Algebra::base_field(b.field());
        let m = lact.rows();
        Bimodule::new(b.clone(), k, lact, Matrix::identity(b.field(), m))
    }

    /// A right `A`-module seen as a `k`-`A` bimodule.
    pub fn right_module(a: &Algebra, ract: Matrix) -> Result<Bimodule> {
        let k = Algebra::base_field(a.field());
        let m = ract.rows();
        Bimodule::new(k, a.clone(), Matrix::identity(a.field(), m), ract)
    }

    pub fn left(&self) -> &Algebra {
        &self.left
    }

    pub fn right(&self) -> &Algebra {
        &self.right
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lact(&self) -> &Matrix {
        &self.lact
    }

    pub fn ract(&self) -> &Matrix {
        &self.ract
    }

    pub fn id(&self) -> Matrix {
        Matrix::identity(self.lact.field(), self.dim)
    }

    pub fn check(&self) -> CheckReport {
        check_bimodule(self)
    }
}

/// Two left-module axioms, two right-module axioms, and commutation of the
/// actions.
pub fn check_bimodule(m: &Bimodule) -> CheckReport {
    let id = m.id();
    let (b, a) = (&m.left, &m.right);
    let mut r = CheckReport::new();
    r.expect_equal(
        "left associativity",
        m.lact.compose(&b.mult().kron(&id)),
        m.lact.compose(&b.id().kron(&m.lact)),
    );
    r.expect_equal(
        "left unit",
        m.lact.compose(&b.unit().kron(&id)),
        Ok(id.clone()),
    );
    r.expect_equal(
        "right associativity",
        m.ract.compose(&id.kron(a.mult())),
        m.ract.compose(&m.ract.kron(&a.id())),
    );
    r.expect_equal(
        "right unit",
        m.ract.compose(&id.kron(a.unit())),
        Ok(id.clone()),
    );
    r.expect_equal(
        "actions commute",
        m.lact.compose(&b.id().kron(&m.ract)),
        m.ract.compose(&m.lact.kron(&a.id())),
    );
    r
}

/// `f : M → N` intertwines both actions.
pub fn check_bimodule_map(f: &Matrix, src: &Bimodule, dst: &Bimodule) -> CheckReport {
    let mut r = CheckReport::new();
    if f.shape() != (dst.dim, src.dim) {
        r.expect("shape", false, || {
            format!("map is {:?}, expected {:?}", f.shape(), (dst.dim, src.dim))
        });
        return r;
    }
    r.expect_equal(
        "left linear",
        f.compose(&src.lact),
        dst.lact.compose(&src.left.id().kron(f)),
    );
    r.expect_equal(
        "right linear",
        f.compose(&src.ract),
        dst.ract.compose(&f.kron(&src.right.id())),
    );
    r
}
