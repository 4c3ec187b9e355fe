use super::{check_obj, check_one_cell, check_two_cell, EntwObj, EntwOneCell, EntwTwoCell};
use crate::algstruct::{
    check_algebra_map, check_bialgebra, check_bimodule, check_coalgebra_map, Algebra, Bimodule,
    Coalgebra,
};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};

/// `ψ = τ_{C,A}`, the flip. An entwining for any algebra and coalgebra.
pub fn flip_entwining(a: &Algebra, c: &Coalgebra) -> Result<EntwObj> {
    let psi = Matrix::swap(a.field(), c.dim(), a.dim());
    EntwObj::new(a.clone(), c.clone(), psi)
}

/// The ground field entwined with itself.
pub fn trivial_object(field: Field) -> EntwObj {
    flip_entwining(&Algebra::base_field(field), &Coalgebra::base_field(field)).expect("1x1 flip")
}

/// `ψ(c ⊗ a) = a₍₁₎ ⊗ c·a₍₂₎` for a bialgebra `H`, entwining `H` (as an
/// algebra) with `H` (as a coalgebra).
pub fn bialgebra_entwining(a: &Algebra, c: &Coalgebra) -> Result<EntwObj> {
    let report = check_bialgebra(a, c);
    if !report.passed() {
        return Err(Error::NotABialgebra(report.to_string()));
    }
    let n = a.dim();
    let id = a.id();
    let psi = Matrix::chain(&[
        &id.kron(a.mult()),
        &Matrix::swap(a.field(), n, n).kron(&id),
        &id.kron(c.comult()),
    ])?;
    EntwObj::new(a.clone(), c.clone(), psi)
}

/// The 1-cell with carrier `k` given by an algebra map `f : B → A` and a
/// coalgebra map `g : D → C` (as `α` and `γ`).
pub fn morphism_one_cell(
    dom: &EntwObj,
    cod: &EntwObj,
    f: &Matrix,
    g: &Matrix,
) -> Result<EntwOneCell> {
    let fr = check_algebra_map(f, cod.algebra(), dom.algebra());
    if !fr.passed() {
        return Err(Error::NotAMorphism(format!("algebra map: {fr}")));
    }
    let gr = check_coalgebra_map(g, cod.coalgebra(), dom.coalgebra());
    if !gr.passed() {
        return Err(Error::NotAMorphism(format!("coalgebra map: {gr}")));
    }
    let cell = EntwOneCell::new(dom.clone(), cod.clone(), 1, f.clone(), g.clone())?;
    let report = check_one_cell(&cell);
    if !report.passed() {
        return Err(Error::NotAMorphism(format!(
            "maps do not intertwine: {report}"
        )));
    }
    Ok(cell)
}

/// A right `C`-comodule `M` as a 1-cell `(A, C, ψ) → (k, k, id)` with
/// `α(m) = m ⊗ 1` and `γ` the coaction.
pub fn comodule_one_cell(dom: &EntwObj, coaction: &Matrix) -> Result<EntwOneCell> {
    let field = dom.field();
    let m = coaction.cols();
    let alpha = Matrix::identity(field, m).kron(dom.algebra().unit());
    let cell = EntwOneCell::new(
        dom.clone(),
        trivial_object(field),
        m,
        alpha,
        coaction.clone(),
    )?;
    let report = check_one_cell(&cell);
    if !report.passed() {
        return Err(Error::InvalidOneCell(format!("not a comodule: {report}")));
    }
    Ok(cell)
}

/// A left `B`-module `M` as a 1-cell `(k, k, id) → (B, D, χ)` with `α` the
/// action and `γ = ε ⊗ M`.
pub fn module_one_cell(cod: &EntwObj, action: &Matrix) -> Result<EntwOneCell> {
    let field = cod.field();
    let m = action.rows();
    let module = Bimodule::left_module(cod.algebra(), action.clone())?;
    let mr = check_bimodule(&module);
    if !mr.passed() {
        return Err(Error::InvalidOneCell(format!("not a module: {mr}")));
    }
    let gamma = cod.coalgebra().counit().kron(&Matrix::identity(field, m));
    let cell = EntwOneCell::new(trivial_object(field), cod.clone(), m, action.clone(), gamma)?;
    let report = check_one_cell(&cell);
    if !report.passed() {
        return Err(Error::InvalidOneCell(report.to_string()));
    }
    Ok(cell)
}

/// `(k, id_A, id_C)` under the strict unitors `A ⊗ k = A = k ⊗ A`.
pub fn identity_one_cell(e: &EntwObj) -> EntwOneCell {
    EntwOneCell {
        dom: e.clone(),
        cod: e.clone(),
        dim_m: 1,
        alpha: e.algebra().id(),
        gamma: e.coalgebra().id(),
    }
}

/// `(P, σ, τ) ∘ (M, α, γ) = (P ⊗ M, (P⊗α)∘(σ⊗M), (P⊗γ)∘(τ⊗M))`.
pub fn compose_one_cells(p: &EntwOneCell, m: &EntwOneCell) -> Result<EntwOneCell> {
    if m.cod != p.dom {
        return Err(Error::NotComposable(
            "codomain of the first 1-cell differs from the domain of the second".into(),
        ));
    }
    let (ip, im) = (p.id_m(), m.id_m());
    let alpha = ip.kron(&m.alpha).compose(&p.alpha.kron(&im))?;
    let gamma = ip.kron(&m.gamma).compose(&p.gamma.kron(&im))?;
    Ok(EntwOneCell {
        dom: m.dom.clone(),
        cod: p.cod.clone(),
        dim_m: p.dim_m * m.dim_m,
        alpha,
        gamma,
    })
}

pub fn identity_two_cell(f: &EntwOneCell) -> EntwTwoCell {
    EntwTwoCell {
        dom: f.clone(),
        cod: f.clone(),
        theta: f.id_m(),
    }
}

/// `c · id` on a 1-cell.
pub fn scalar_two_cell(c: &Scalar, f: &EntwOneCell) -> EntwTwoCell {
    EntwTwoCell {
        dom: f.clone(),
        cod: f.clone(),
        theta: f.id_m().scale(c),
    }
}

/// `θ₂ ∘ θ₁`.
pub fn vcomp(t2: &EntwTwoCell, t1: &EntwTwoCell) -> Result<EntwTwoCell> {
    if t1.cod != t2.dom {
        return Err(Error::NotComposable("2-cells do not meet".into()));
    }
    Ok(EntwTwoCell {
        dom: t1.dom.clone(),
        cod: t2.cod.clone(),
        theta: t2.theta.compose(&t1.theta)?,
    })
}

/// `θ′ ⊗ θ` for `θ′ : P ⇒ P′` and `θ : M ⇒ M′`.
pub fn hcomp(t2: &EntwTwoCell, t1: &EntwTwoCell) -> Result<EntwTwoCell> {
    let dom = compose_one_cells(&t2.dom, &t1.dom)?;
    let cod = compose_one_cells(&t2.cod, &t1.cod)?;
    Ok(EntwTwoCell {
        dom,
        cod,
        theta: t2.theta.kron(&t1.theta),
    })
}

/// The associator `Q ∘ (P ∘ M) ⇒ (Q ∘ P) ∘ M`. Both carriers are
/// `Q ⊗ P ⊗ M` with the same basis order, so its component is the identity;
/// whether it is a 2-cell is a real check, because the two bracketings build
/// their `α` and `γ` by different formulas.
pub fn associator(q: &EntwOneCell, p: &EntwOneCell, m: &EntwOneCell) -> Result<EntwTwoCell> {
    let right = compose_one_cells(q, &compose_one_cells(p, m)?)?;
    let left = compose_one_cells(&compose_one_cells(q, p)?, m)?;
    let theta = Matrix::identity(q.alpha.field(), right.dim_m);
    EntwTwoCell::new(right, left, theta)
}

pub(crate) fn require_valid_obj(e: &EntwObj) -> Result<()> {
    let r = check_obj(e);
    if !r.passed() {
        return Err(Error::InvalidObject(r.to_string()));
    }
    Ok(())
}

pub(crate) fn require_valid_two_cell(t: &EntwTwoCell) -> Result<()> {
    let r = check_two_cell(t);
    if !r.passed() {
        return Err(Error::InvalidTwoCell(r.to_string()));
    }
    Ok(())
}
