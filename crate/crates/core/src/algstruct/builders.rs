//! Canonical example structures.

use super::algebra::Algebra;
use super::coalgebra::Coalgebra;
use super::report::CheckReport;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(format!("{what} needs n >= 1")));
    }
    Ok(())
}

/// The group algebra `k[C_n]`, basis `g^0, …, g^{n-1}`.
pub fn group_algebra(field: Field, n: usize) -> Result<Algebra> {
    require_positive(n, "group_algebra")?;
    let mut mult = Matrix::zeros(field, n, n * n);
    for i in 0..n {
        for j in 0..n {
            mult.set((i + j) % n, i * n + j, field.one());
        }
    }
    Algebra::new(mult, Matrix::basis_vector(field, n, 0))
}

/// `n` grouplike basis vectors: `Δe_i = e_i ⊗ e_i`, `ε(e_i) = 1`.
pub fn grouplike_coalgebra(field: Field, n: usize) -> Result<Coalgebra> {
    require_positive(n, "grouplike_coalgebra")?;
    let mut comult = Matrix::zeros(field, n * n, n);
    for i in 0..n {
        comult.set(i * n + i, i, field.one());
    }
    let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
    Coalgebra::new(comult, counit)
}

/// `k[C_n]` as a bialgebra with every group element grouplike. The
/// compatibility of the two structures is verified before returning.
pub fn cyclic_group_bialgebra(field: Field, n: usize) -> Result<(Algebra, Coalgebra)> {
    let a = group_algebra(field, n)?;
    let c = grouplike_coalgebra(field, n)?;
    let report = check_bialgebra(&a, &c);
    if !report.passed() {
        return Err(Error::NotABialgebra(report.to_string()));
    }
    Ok((a, c))
}

/// `n × n` matrices, basis `e_ij` at index `i·n + j`.
pub fn matrix_algebra(field: Field, n: usize) -> Result<Algebra> {
    require_positive(n, "matrix_algebra")?;
    let d = n * n;
    let mut mult = Matrix::zeros(field, d, d * d);
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                // e_ij e_jl = e_il
                mult.set(i * n + l, (i * n + j) * d + j * n + l, field.one());
            }
        }
    }
    let mut unit = Matrix::zeros(field, d, 1);
    for i in 0..n {
        unit.set(i * n + i, 0, field.one());
    }
    Algebra::new(mult, unit)
}

/// The matrix coalgebra: `Δe_ij = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
pub fn matrix_coalgebra(field: Field, n: usize) -> Result<Coalgebra> {
    require_positive(n, "matrix_coalgebra")?;
    let d = n * n;
    let mut comult = Matrix::zeros(field, d * d, d);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                comult.set((i * n + k) * d + k * n + j, i * n + j, field.one());
            }
        }
    }
    let mut counit = Matrix::zeros(field, 1, d);
    for i in 0..n {
        counit.set(0, i * n + i, field.one());
    }
    Coalgebra::new(comult, counit)
}

/// The linear dual of a coalgebra, an algebra.
pub fn dualize_coalgebra(c: &Coalgebra) -> Algebra {
    Algebra::new(c.comult().transpose(), c.counit().transpose())
        .expect("transpose keeps shapes consistent")
}

/// The linear dual of an algebra, a coalgebra.
pub fn dualize_algebra(a: &Algebra) -> Coalgebra {
    Coalgebra::new(a.mult().transpose(), a.unit().transpose())
        .expect("transpose keeps shapes consistent")
}

/// The augmentation `k[C_n] → k`, sending every group element to 1.
pub fn augmentation(field: Field, n: usize) -> Matrix {
    Matrix::from_fn(field, 1, n, |_, _| field.one())
}

/// `Δ` and `ε` are algebra maps (on a shared underlying space).
pub fn check_bialgebra(a: &Algebra, c: &Coalgebra) -> CheckReport {
    let mut r = CheckReport::new();
    if a.dim() != c.dim() {
        r.expect("same carrier", false, || {
            format!("algebra dim {} vs coalgebra dim {}", a.dim(), c.dim())
        });
        return r;
    }
    let n = a.dim();
    let id = a.id();
    let flip = Matrix::swap(a.field(), n, n);
    let mid = Matrix::kron_all(&[&id, &flip, &id]);
    r.expect_equal(
        "comultiplication is multiplicative",
        c.comult().compose(a.mult()),
        Matrix::chain(&[&a.mult().kron(a.mult()), &mid, &c.comult().kron(c.comult())]),
    );
    r.expect_equal(
        "comultiplication is unital",
        c.comult().compose(a.unit()),
        Ok(a.unit().kron(a.unit())),
    );
    r.expect_equal(
        "counit is multiplicative",
        c.counit().compose(a.mult()),
        Ok(c.counit().kron(c.counit())),
    );
    r.expect_equal(
        "counit is unital",
        c.counit().compose(a.unit()),
        Ok(Matrix::identity(a.field(), 1)),
    );
    r
}
