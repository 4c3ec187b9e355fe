//! The bicategory of entwinings over a fixed field.
//!
//! 0-cells are entwinings `ψ : C ⊗ A → A ⊗ C`, 1-cells `(M, α, γ)` with
//! `α : B ⊗ M → M ⊗ A` and `γ : D ⊗ M → M ⊗ C`, 2-cells are maps `θ : M → N`
//! commuting with the `α`s and `γ`s. Unitors and associators are strict: all
//! tensor products here are over the ground field and the index convention
//! makes `(X ⊗ Y) ⊗ Z` and `X ⊗ (Y ⊗ Z)` literally the same space.

mod ops;

pub use ops::{
    associator, bialgebra_entwining, comodule_one_cell, compose_one_cells, flip_entwining, hcomp,
    identity_one_cell, identity_two_cell, module_one_cell, morphism_one_cell, scalar_two_cell,
    trivial_object, vcomp,
};
pub(crate) use ops::{require_valid_obj, require_valid_two_cell};

use crate::algstruct::{check_algebra, check_coalgebra, Algebra, CheckReport, Coalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// An entwining `(A, C, ψ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwObj {
    algebra: Algebra,
    coalgebra: Coalgebra,
    psi: Matrix,
}

impl EntwObj {
    pub fn new(algebra: Algebra, coalgebra: Coalgebra, psi: Matrix) -> Result<EntwObj> {
        let (a, c) = (algebra.dim(), coalgebra.dim());
        if psi.shape() != (a * c, c * a) {
            return Err(Error::dims(
                "entwining map",
                format!("{}x{}", a * c, c * a),
                format!("{}x{}", psi.rows(), psi.cols()),
            ));
        }
        if algebra.field() != coalgebra.field() || psi.field() != algebra.field() {
            return Err(Error::FieldMismatch("entwining components".into()));
        }
        Ok(EntwObj {
            algebra,
            coalgebra,
            psi,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra {
        &self.coalgebra
    }

    pub fn psi(&self) -> &Matrix {
        &self.psi
    }

    pub fn field(&self) -> Field {
        self.psi.field()
    }

    pub fn check(&self) -> CheckReport {
        check_obj(self)
    }

    pub(crate) fn with_psi(&self, psi: Matrix) -> EntwObj {
        EntwObj {
            psi,
            ..self.clone()
        }
    }
}

/// The algebra and coalgebra axioms, then E1–E4.
pub fn check_obj(e: &EntwObj) -> CheckReport {
    let (a, c, psi) = (&e.algebra, &e.coalgebra, &e.psi);
    let (ia, ic) = (a.id(), c.id());
    let mut r = CheckReport::new();
    r.absorb("algebra", check_algebra(a));
    r.absorb("coalgebra", check_coalgebra(c));
    r.expect_equal(
        "E1 multiplication pentagon",
        psi.compose(&ic.kron(a.mult())),
        Matrix::chain(&[&a.mult().kron(&ic), &ia.kron(psi), &psi.kron(&ia)]),
    );
    r.expect_equal(
        "E2 comultiplication pentagon",
        ia.kron(c.comult()).compose(psi),
        Matrix::chain(&[&psi.kron(&ic), &ic.kron(psi), &c.comult().kron(&ia)]),
    );
    r.expect_equal(
        "E3 unit triangle",
        psi.compose(&ic.kron(a.unit())),
        Ok(a.unit().kron(&ic)),
    );
    r.expect_equal(
        "E4 counit triangle",
        ia.kron(c.counit()).compose(psi),
        Ok(c.counit().kron(&ia)),
    );
    r
}

/// A 1-cell `(M, α, γ) : (A, C, ψ) → (B, D, χ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwOneCell {
    dom: EntwObj,
    cod: EntwObj,
    dim_m: usize,
    alpha: Matrix,
    gamma: Matrix,
}

impl EntwOneCell {
    pub fn new(
        dom: EntwObj,
        cod: EntwObj,
        dim_m: usize,
        alpha: Matrix,
        gamma: Matrix,
    ) -> Result<EntwOneCell> {
        let (a, c) = (dom.algebra.dim(), dom.coalgebra.dim());
        let (b, d) = (cod.algebra.dim(), cod.coalgebra.dim());
        if alpha.shape() != (dim_m * a, b * dim_m) {
            return Err(Error::dims(
                "alpha",
                format!("{}x{}", dim_m * a, b * dim_m),
                format!("{}x{}", alpha.rows(), alpha.cols()),
            ));
        }
        if gamma.shape() != (dim_m * c, d * dim_m) {
            return Err(Error::dims(
                "gamma",
                format!("{}x{}", dim_m * c, d * dim_m),
                format!("{}x{}", gamma.rows(), gamma.cols()),
            ));
        }
        Ok(EntwOneCell {
            dom,
            cod,
            dim_m,
            alpha,
            gamma,
        })
    }

    pub fn dom(&self) -> &EntwObj {
        &self.dom
    }

    pub fn cod(&self) -> &EntwObj {
        &self.cod
    }

    pub fn dim_m(&self) -> usize {
        self.dim_m
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn gamma(&self) -> &Matrix {
        &self.gamma
    }

    pub fn id_m(&self) -> Matrix {
        Matrix::identity(self.alpha.field(), self.dim_m)
    }

    pub fn check(&self) -> CheckReport {
        check_one_cell(self)
    }

    pub(crate) fn with_maps(&self, alpha: Matrix, gamma: Matrix) -> EntwOneCell {
        EntwOneCell {
            alpha,
            gamma,
            ..self.clone()
        }
    }
}

/// The hexagon, the two pentagons and the two triangles.
pub fn check_one_cell(f: &EntwOneCell) -> CheckReport {
    let (alg_a, coal_c, psi) = (&f.dom.algebra, &f.dom.coalgebra, &f.dom.psi);
    let (alg_b, coal_d, chi) = (&f.cod.algebra, &f.cod.coalgebra, &f.cod.psi);
    let (ia, ic, ib, id) = (alg_a.id(), coal_c.id(), alg_b.id(), coal_d.id());
    let im = f.id_m();
    let (alpha, gamma) = (&f.alpha, &f.gamma);
    let mut r = CheckReport::new();
    r.expect_equal(
        "hexagon",
        Matrix::chain(&[&im.kron(psi), &gamma.kron(&ia), &id.kron(alpha)]),
        Matrix::chain(&[&alpha.kron(&ic), &ib.kron(gamma), &chi.kron(&im)]),
    );
    r.expect_equal(
        "alpha pentagon",
        alpha.compose(&alg_b.mult().kron(&im)),
        Matrix::chain(&[&im.kron(alg_a.mult()), &alpha.kron(&ia), &ib.kron(alpha)]),
    );
    r.expect_equal(
        "gamma pentagon",
        im.kron(coal_c.comult()).compose(gamma),
        Matrix::chain(&[
            &gamma.kron(&ic),
            &id.kron(gamma),
            &coal_d.comult().kron(&im),
        ]),
    );
    r.expect_equal(
        "unit triangle",
        alpha.compose(&alg_b.unit().kron(&im)),
        Ok(im.kron(alg_a.unit())),
    );
    r.expect_equal(
        "counit triangle",
        im.kron(coal_c.counit()).compose(gamma),
        Ok(coal_d.counit().kron(&im)),
    );
    r
}

/// A 2-cell `θ : (M, α, γ) ⇒ (N, β, δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntwTwoCell {
    dom: EntwOneCell,
    cod: EntwOneCell,
    theta: Matrix,
}

impl EntwTwoCell {
    pub fn new(dom: EntwOneCell, cod: EntwOneCell, theta: Matrix) -> Result<EntwTwoCell> {
        if dom.dom != cod.dom || dom.cod != cod.cod {
            return Err(Error::NotParallel(
                "2-cell between 1-cells with different endpoints".into(),
            ));
        }
        if theta.shape() != (cod.dim_m, dom.dim_m) {
            return Err(Error::dims(
                "theta",
                format!("{}x{}", cod.dim_m, dom.dim_m),
                format!("{}x{}", theta.rows(), theta.cols()),
            ));
        }
        Ok(EntwTwoCell { dom, cod, theta })
    }

    pub fn dom(&self) -> &EntwOneCell {
        &self.dom
    }

    pub fn cod(&self) -> &EntwOneCell {
        &self.cod
    }

    pub fn theta(&self) -> &Matrix {
        &self.theta
    }

    pub fn check(&self) -> CheckReport {
        check_two_cell(self)
    }
}

/// `(θ⊗A)∘α = β∘(B⊗θ)` and `(θ⊗C)∘γ = δ∘(D⊗θ)`.
pub fn check_two_cell(t: &EntwTwoCell) -> CheckReport {
    let src = &t.dom;
    let dst = &t.cod;
    let ia = src.dom.algebra.id();
    let ic = src.dom.coalgebra.id();
    let ib = src.cod.algebra.id();
    let id = src.cod.coalgebra.id();
    let mut r = CheckReport::new();
    r.expect_equal(
        "alpha square",
        t.theta.kron(&ia).compose(&src.alpha),
        dst.alpha.compose(&ib.kron(&t.theta)),
    );
    r.expect_equal(
        "gamma square",
        t.theta.kron(&ic).compose(&src.gamma),
        dst.gamma.compose(&id.kron(&t.theta)),
    );
    r
}

/// The linear conditions cutting out 2-cells `M ⇒ N` inside `Hom(M, N)`,
/// as a matrix whose kernel is the 2-cell space (coordinates: `θ` row-major).
pub fn two_cell_equations(src: &EntwOneCell, dst: &EntwOneCell) -> Result<Matrix> {
    if src.dom != dst.dom || src.cod != dst.cod {
        return Err(Error::NotParallel(
            "hom-space of non-parallel 1-cells".into(),
        ));
    }
    let field = src.alpha.field();
    let (m, n) = (src.dim_m, dst.dim_m);
    let ia = src.dom.algebra.id();
    let ic = src.dom.coalgebra.id();
    let ib = src.cod.algebra.id();
    let id = src.cod.coalgebra.id();
    let mut columns: Vec<Matrix> = Vec::with_capacity(m * n);
    for i in 0..n {
        for j in 0..m {
            let theta = Matrix::unit(field, n, m, i, j);
            let sq1 = theta
                .kron(&ia)
                .compose(&src.alpha)?
                .sub(&dst.alpha.compose(&ib.kron(&theta))?)?;
            let sq2 = theta
                .kron(&ic)
                .compose(&src.gamma)?
                .sub(&dst.gamma.compose(&id.kron(&theta))?)?;
            columns.push(sq1.vectorize().vstack(&sq2.vectorize())?);
        }
    }
    stack_columns(field, &columns)
}

pub(crate) fn stack_columns(field: Field, columns: &[Matrix]) -> Result<Matrix> {
    let rows = columns.first().map_or(0, Matrix::rows);
    let mut out = Matrix::zeros(field, rows, columns.len());
    for (j, c) in columns.iter().enumerate() {
        if c.rows() != rows {
            return Err(Error::dims("equation column", rows, c.rows()));
        }
        for i in 0..rows {
            let v = c.get(i, 0);
            if !v.is_zero() {
                out.set(i, j, v.clone());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
