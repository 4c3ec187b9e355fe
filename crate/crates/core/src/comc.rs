//! The homomorphism of bicategories from entwinings to corings.
//!
//! An entwining `(A, C, ψ)` goes to the coring `A ⊗ C` over `A`; a 1-cell
//! `(M, α, γ)` goes to `(M ⊗ A, ζ)`, where `ζ` is obtained by pushing
//! `ζ̄ = (α⊗ψ)∘(B⊗γ⊗A)` to `ℳ ⊗_A 𝒞` and factoring it through `𝒟 ⊗_B ℳ`;
//! a 2-cell `θ` goes to `θ ⊗ A`.

use crate::algstruct::{Bimodule, CheckReport};
use crate::corcat::{compose_cor_one_cells, identity_cor_one_cell, CorOneCell, CorTwoCell, Coring};
use crate::entwcat::{
    compose_one_cells, identity_one_cell, require_valid_obj, require_valid_two_cell, stack_columns,
    two_cell_equations, EntwObj, EntwOneCell, EntwTwoCell,
};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::qtensor::tensor_bimodules;

/// The composed coring `(A ⊗ C, Δ^ψ, ε^ψ)`.
///
/// `A ⊗ C` carries the actions `a·(x⊗c) = ax⊗c` and
/// `(x⊗c)·a = x·ψ(c⊗a)`; `Δ^ψ(x⊗c) = [x⊗c₍₁₎ ⊗ 1⊗c₍₂₎]` and
/// `ε^ψ(x⊗c) = ε(c)·x`.
pub fn comc_obj(e: &EntwObj) -> Result<Coring> {
    require_valid_obj(e)?;
    let a = e.algebra();
    let c = e.coalgebra();
    let (ia, ic) = (a.id(), c.id());
    let lact = a.mult().kron(&ic);
    let ract = lact.compose(&ia.kron(e.psi()))?;
    let carrier = Bimodule::new(a.clone(), a.clone(), lact, ract)?;
    let square = tensor_bimodules(&carrier, &carrier)?;
    let comult = Matrix::chain(&[
        square.projection(),
        &Matrix::kron_all(&[&ia, &ic, a.unit(), &ic]),
        &ia.kron(c.comult()),
    ])?;
    let counit = ia.kron(c.counit());
    Coring::new(carrier, comult, counit)
}

/// `ℳ = M ⊗ A` as a `B`-`A` bimodule: `b·(m⊗a) = (M⊗μ)(α(b⊗m)⊗a)` and
/// `(m⊗a)·a′ = m⊗aa′`.
pub fn comc_carrier(f: &EntwOneCell) -> Result<Bimodule> {
    let a = f.dom().algebra();
    let b = f.cod().algebra();
    let im = f.id_m();
    let ract = im.kron(a.mult());
    let lact = ract.compose(&f.alpha().kron(&a.id()))?;
    Bimodule::new(b.clone(), a.clone(), lact, ract)
}

/// `ζ̄ = (α⊗ψ)∘(B⊗γ⊗A) : B⊗D⊗M⊗A → M⊗A⊗A⊗C`, before any quotient.
pub fn zeta_bar(f: &EntwOneCell) -> Result<Matrix> {
    let ib = f.cod().algebra().id();
    let ia = f.dom().algebra().id();
    let first = Matrix::kron_all(&[&ib, f.gamma(), &ia]);
    f.alpha().kron(f.dom().psi()).compose(&first)
}

/// `ζ̄` is left `B`-linear and right `A`-linear for the ambient actions on
/// `(B⊗D)⊗(M⊗A)` and `(M⊗A)⊗(A⊗C)` coming from the outer factors.
pub fn zeta_bar_linearity(f: &EntwOneCell) -> Result<CheckReport> {
    let zb = zeta_bar(f)?;
    let (a, b) = (f.dom().algebra(), f.cod().algebra());
    let (c, d) = (f.dom().coalgebra(), f.cod().coalgebra());
    let carrier = comc_carrier(f)?;
    let im = f.id_m();
    let (ia, ib, ic, id) = (a.id(), b.id(), c.id(), d.id());

    let left_src = Matrix::kron_all(&[b.mult(), &id, &im, &ia]);
    let left_dst = Matrix::kron_all(&[carrier.lact(), &ia, &ic]);
    let ract_c = a.mult().kron(&ic).compose(&ia.kron(f.dom().psi()))?;
    let right_src = Matrix::kron_all(&[&ib, &id, &im, a.mult()]);
    let right_dst = Matrix::kron_all(&[&im, &ia, &ract_c]);

    let mut r = CheckReport::new();
    r.expect_equal(
        "zeta_bar left linear",
        zb.compose(&left_src),
        left_dst.compose(&ib.kron(&zb)),
    );
    r.expect_equal(
        "zeta_bar right linear",
        zb.compose(&right_src),
        right_dst.compose(&zb.kron(&ia)),
    );
    Ok(r)
}

/// Whether `ζ̄` itself (not only its image in `ℳ ⊗_A 𝒞`) vanishes on the
/// relations of `𝒟 ⊗_B ℳ`.
pub fn zeta_bar_factors(f: &EntwOneCell) -> Result<bool> {
    let d = comc_obj(f.cod())?;
    let dm = tensor_bimodules(d.carrier(), &comc_carrier(f)?)?;
    match dm.induced(&zeta_bar(f)?) {
        Ok(_) => Ok(true),
        Err(Error::DoesNotFactor(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The coring 1-cell `(M ⊗ A, ζ) : A⊗C → B⊗D`.
///
/// The input is not pre-validated: a cell breaking the hexagon or a
/// pentagon surfaces as [`Error::DoesNotFactor`] here, or as a failing
/// pentagon of the output.
pub fn comc_one_cell(f: &EntwOneCell) -> Result<CorOneCell> {
    let dom = comc_obj(f.dom())?;
    let cod = comc_obj(f.cod())?;
    let carrier = comc_carrier(f)?;
    let dm = tensor_bimodules(cod.carrier(), &carrier)?;
    let mc = tensor_bimodules(&carrier, dom.carrier())?;
    let pushed = mc.projection().compose(&zeta_bar(f)?)?;
    let zeta = dm.induced(&pushed).map_err(|e| match e {
        Error::DoesNotFactor(_) => {
            Error::DoesNotFactor("zeta_bar is not balanced over the codomain algebra".into())
        }
        other => other,
    })?;
    CorOneCell::new(dom, cod, carrier, zeta)
}

/// `θ ↦ θ ⊗ A`.
pub fn comc_two_cell(t: &EntwTwoCell) -> Result<CorTwoCell> {
    require_valid_two_cell(t)?;
    let dom = comc_one_cell(t.dom())?;
    let cod = comc_one_cell(t.cod())?;
    let map = t.theta().kron(&t.dom().dom().algebra().id());
    CorTwoCell::new(dom, cod, map)
}

/// The comparison `comc(P ∘ M) ⇒ comc(P) ∘ comc(M)`, induced by
/// `p⊗m⊗a ↦ [p⊗1 ⊗ m⊗a]`, with inverse induced by
/// `[p⊗b ⊗ m⊗a] ↦ p ⊗ b·(m⊗a)`.
pub fn compositor(p: &EntwOneCell, m: &EntwOneCell) -> Result<CorTwoCell> {
    let pm = compose_one_cells(p, m)?;
    let source = comc_one_cell(&pm)?;
    let (cp, cm) = (comc_one_cell(p)?, comc_one_cell(m)?);
    let target = compose_cor_one_cells(&cp, &cm)?;
    let t = tensor_bimodules(cp.carrier(), cm.carrier())?;
    let b = m.cod().algebra();
    let ip = p.id_m();
    let rest = cm.carrier().id();
    let forward = t
        .projection()
        .compose(&Matrix::kron_all(&[&ip, b.unit(), &rest]))?;
    let inverse = t.induced(&ip.kron(cm.carrier().lact()))?;
    if !forward.compose(&inverse)?.is_identity() || !inverse.compose(&forward)?.is_identity() {
        return Err(Error::NotInvertible("compositor".into()));
    }
    CorTwoCell::new(source, target, forward)
}

/// The comparison `comc(1_e) ⇒ 1_{comc(e)}`. Both carriers are `k ⊗ A = A`
/// with the regular actions, so its component is the identity.
pub fn unitor_comparison(e: &EntwObj) -> Result<CorTwoCell> {
    let source = comc_one_cell(&identity_one_cell(e))?;
    let target = identity_cor_one_cell(&comc_obj(e)?);
    let map = e.algebra().id();
    CorTwoCell::new(source, target, map)
}

/// Dimensions of the 2-cell spaces `entw(M, N)` and `coring(comc M, comc N)`
/// and whether `θ ↦ θ ⊗ A` between them is injective and surjective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDimensionReport {
    pub entw_dim: usize,
    pub coring_dim: usize,
    pub injective: bool,
    pub surjective: bool,
}

/// The linear conditions cutting out coring 2-cells `src ⇒ dst` among maps
/// of carriers (coordinates row-major). Maps of tensors are formed through
/// sections, which is linear and agrees with the induced maps on the
/// bimodule maps cut out by the first block of equations.
pub fn cor_two_cell_equations(src: &CorOneCell, dst: &CorOneCell) -> Result<Matrix> {
    if src.dom() != dst.dom() || src.cod() != dst.cod() {
        return Err(Error::NotParallel(
            "hom-space of non-parallel coring 1-cells".into(),
        ));
    }
    let field = src.zeta().field();
    let (m, n) = (src.dim(), dst.dim());
    let (sm, dm) = (src.carrier(), dst.carrier());
    let (ia, ib) = (sm.right().id(), sm.left().id());
    let (ic, id) = (src.dom().carrier().id(), src.cod().carrier().id());
    let mut columns = Vec::with_capacity(m * n);
    for i in 0..n {
        for j in 0..m {
            let phi = Matrix::unit(field, n, m, i, j);
            let left = phi
                .compose(sm.lact())?
                .sub(&dm.lact().compose(&ib.kron(&phi))?)?;
            let right = phi
                .compose(sm.ract())?
                .sub(&dm.ract().compose(&phi.kron(&ia))?)?;
            let square = src
                .mc()
                .tensor_maps_via_section(&phi, &ic, dst.mc())?
                .compose(src.zeta())?
                .sub(&dst.zeta().compose(&src.dm().tensor_maps_via_section(
                    &id,
                    &phi,
                    dst.dm(),
                )?)?)?;
            columns.push(
                left.vectorize()
                    .vstack(&right.vectorize())?
                    .vstack(&square.vectorize())?,
            );
        }
    }
    stack_columns(field, &columns)
}

pub fn hom_dimension_report(src: &EntwOneCell, dst: &EntwOneCell) -> Result<HomDimensionReport> {
    let entw = two_cell_equations(src, dst)?.kernel_basis();
    let (csrc, cdst) = (comc_one_cell(src)?, comc_one_cell(dst)?);
    let coring = cor_two_cell_equations(&csrc, &cdst)?.kernel_basis();
    let field = entw.field();
    let (m, n) = (src.dim_m(), dst.dim_m());
    let ia = src.dom().algebra().id();
    let images: Vec<Matrix> = (0..entw.cols())
        .map(|k| {
            let theta = Matrix::from_fn(field, n, m, |i, j| entw.get(i * m + j, k).clone());
            theta.kron(&ia).vectorize()
        })
        .collect();
    let image_rank = if images.is_empty() {
        0
    } else {
        stack_columns(field, &images)?.rank()
    };
    let injective = image_rank == entw.cols();
    Ok(HomDimensionReport {
        entw_dim: entw.cols(),
        coring_dim: coring.cols(),
        injective,
        surjective: image_rank == coring.cols(),
    })
}

#[cfg(test)]
mod tests;
