//! The bicategory of corings: 0-cells are corings over algebras, 1-cells
//! `(ℳ, ζ) : 𝒞 → 𝒟` are bimodules with `ζ : 𝒟 ⊗_B ℳ → ℳ ⊗_A 𝒞`, 2-cells are
//! bimodule maps commuting with the `ζ`s.
//!
//! Every map out of a tensor over an algebra is stored on quotient
//! coordinates, so equality of cells is plain matrix equality.

use crate::algstruct::{check_bimodule, check_bimodule_map, Algebra, Bimodule, CheckReport};
use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::qtensor::{
    left_unit_coherence, right_unit_coherence, tensor_bimodules, BimoduleTensor, Iso, TripleTensor,
};

/// An `A`-coring: an `A`-`A` bimodule `𝒞` with `Δ : 𝒞 → 𝒞 ⊗_A 𝒞` and
/// `ε : 𝒞 → A`.
#[derive(Clone, Debug)]
pub struct Coring {
    carrier: Bimodule,
    square: BimoduleTensor,
    comult: Matrix,
    counit: Matrix,
}

impl PartialEq for Coring {
    fn eq(&self, other: &Coring) -> bool {
        self.carrier == other.carrier && self.comult == other.comult && self.counit == other.counit
    }
}

impl Eq for Coring {}

impl Coring {
    /// `comult` is given on the coordinates of the quotient `𝒞 ⊗_A 𝒞`
    /// computed by [`tensor_bimodules`].
    pub fn new(carrier: Bimodule, comult: Matrix, counit: Matrix) -> Result<Coring> {
        if carrier.left() != carrier.right() {
            return Err(Error::InvalidParameter(
                "a coring carrier must be a bimodule over a single algebra".into(),
            ));
        }
        let square = tensor_bimodules(&carrier, &carrier)?;
        if comult.shape() != (square.dim(), carrier.dim()) {
            return Err(Error::dims(
                "coring comultiplication",
                format!("{}x{}", square.dim(), carrier.dim()),
                format!("{}x{}", comult.rows(), comult.cols()),
            ));
        }
        let a = carrier.left().dim();
        if counit.shape() != (a, carrier.dim()) {
            return Err(Error::dims(
                "coring counit",
                format!("{}x{}", a, carrier.dim()),
                format!("{}x{}", counit.rows(), counit.cols()),
            ));
        }
        Ok(Coring {
            carrier,
            square,
            comult,
            counit,
        })
    }

    /// `A` itself: `Δ` is `a ↦ [1 ⊗ a]`, `ε` the identity.
    pub fn regular(a: &Algebra) -> Coring {
        let carrier = Bimodule::regular(a);
        let square = tensor_bimodules(&carrier, &carrier).expect("regular bimodules compose");
        let coh = left_unit_coherence(&square).expect("regular unit coherence");
        Coring {
            carrier,
            square,
            comult: coh.inverse,
            counit: a.id(),
        }
    }

    pub fn base(&self) -> &Algebra {
        self.carrier.left()
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// The presentation of `𝒞 ⊗_A 𝒞` that `comult` lands in.
    pub fn square(&self) -> &BimoduleTensor {
        &self.square
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn check(&self) -> CheckReport {
        check_coring(self)
    }

    pub fn with_counit(&self, counit: Matrix) -> Result<Coring> {
        Coring::new(self.carrier.clone(), self.comult.clone(), counit)
    }

    pub fn with_comult(&self, comult: Matrix) -> Result<Coring> {
        Coring::new(self.carrier.clone(), comult, self.counit.clone())
    }
}

/// Bimodule axioms, `Δ` and `ε` bimodule maps, coassociativity and both
/// counit laws.
pub fn check_coring(c: &Coring) -> CheckReport {
    let mut r = CheckReport::new();
    let a = c.base();
    let regular = Bimodule::regular(a);
    let id = c.carrier.id();
    r.absorb("carrier", check_bimodule(&c.carrier));
    r.absorb(
        "comultiplication",
        check_bimodule_map(&c.comult, &c.carrier, &c.square.module),
    );
    r.absorb(
        "counit",
        check_bimodule_map(&c.counit, &c.carrier, &regular),
    );

    match TripleTensor::from_pairs(c.square.clone(), c.square.clone()) {
        Ok(t) => {
            let lhs = c
                .square
                .tensor_maps(&c.comult, &id, &t.xy_z)
                .and_then(|m| m.compose(&c.comult));
            let rhs = c
                .square
                .tensor_maps(&id, &c.comult, &t.x_yz)
                .and_then(|m| Matrix::chain(&[&t.assoc.forward, &m, &c.comult]));
            r.expect_equal("coassociativity", lhs, rhs);
        }
        Err(e) => r.expect("coassociativity", false, || e.to_string()),
    }

    let left = tensor_bimodules(&regular, &c.carrier).and_then(|lt| {
        let coh = left_unit_coherence(&lt)?;
        let eps = c.square.tensor_maps(&c.counit, &id, &lt)?;
        Matrix::chain(&[&coh.forward, &eps, &c.comult])
    });
    r.expect_equal("left counit", left, Ok(id.clone()));
    let right = tensor_bimodules(&c.carrier, &regular).and_then(|rt| {
        let coh = right_unit_coherence(&rt)?;
        let eps = c.square.tensor_maps(&id, &c.counit, &rt)?;
        Matrix::chain(&[&coh.forward, &eps, &c.comult])
    });
    r.expect_equal("right counit", right, Ok(id));
    r
}

/// A 1-cell `(ℳ, ζ) : 𝒞 → 𝒟` for an `A`-coring `𝒞` and a `B`-coring `𝒟`;
/// `ℳ` is a `B`-`A` bimodule and `ζ : 𝒟 ⊗_B ℳ → ℳ ⊗_A 𝒞`.
#[derive(Clone, Debug)]
pub struct CorOneCell {
    dom: Coring,
    cod: Coring,
    carrier: Bimodule,
    zeta: Matrix,
    dm: BimoduleTensor,
    mc: BimoduleTensor,
}

impl PartialEq for CorOneCell {
    fn eq(&self, other: &CorOneCell) -> bool {
        self.dom == other.dom
            && self.cod == other.cod
            && self.carrier == other.carrier
            && self.zeta == other.zeta
    }
}

impl Eq for CorOneCell {}

impl CorOneCell {
    pub fn new(dom: Coring, cod: Coring, carrier: Bimodule, zeta: Matrix) -> Result<CorOneCell> {
        if carrier.left() != cod.base() || carrier.right() != dom.base() {
            return Err(Error::NotComposable(
                "carrier algebras do not match the coring bases".into(),
            ));
        }
        let dm = tensor_bimodules(&cod.carrier, &carrier)?;
        let mc = tensor_bimodules(&carrier, &dom.carrier)?;
        if zeta.shape() != (mc.dim(), dm.dim()) {
            return Err(Error::dims(
                "zeta",
                format!("{}x{}", mc.dim(), dm.dim()),
                format!("{}x{}", zeta.rows(), zeta.cols()),
            ));
        }
        Ok(CorOneCell {
            dom,
            cod,
            carrier,
            zeta,
            dm,
            mc,
        })
    }

    pub fn dom(&self) -> &Coring {
        &self.dom
    }

    pub fn cod(&self) -> &Coring {
        &self.cod
    }

    pub fn carrier(&self) -> &Bimodule {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn zeta(&self) -> &Matrix {
        &self.zeta
    }

    /// The presentation of `𝒟 ⊗_B ℳ`, the source of `ζ`.
    pub fn dm(&self) -> &BimoduleTensor {
        &self.dm
    }

    /// The presentation of `ℳ ⊗_A 𝒞`, the target of `ζ`.
    pub fn mc(&self) -> &BimoduleTensor {
        &self.mc
    }

    pub fn check(&self) -> CheckReport {
        check_cor_one_cell(self)
    }

    pub fn with_zeta(&self, zeta: Matrix) -> Result<CorOneCell> {
        if zeta.shape() != self.zeta.shape() {
            return Err(Error::dims(
                "zeta",
                format!("{}x{}", self.zeta.rows(), self.zeta.cols()),
                format!("{}x{}", zeta.rows(), zeta.cols()),
            ));
        }
        Ok(CorOneCell {
            zeta,
            ..self.clone()
        })
    }
}

/// `(ℳ⊗Δ^𝒞)∘ζ = (ζ⊗𝒞)∘(𝒟⊗ζ)∘(Δ^𝒟⊗ℳ)`, with the associators written out.
fn pentagon_sides(f: &CorOneCell) -> Result<(Matrix, Matrix)> {
    let (c, d) = (&f.dom, &f.cod);
    let im = f.carrier.id();
    let t_mcc = TripleTensor::from_pairs(f.mc.clone(), c.square.clone())?;
    let lhs = Matrix::chain(&[
        &t_mcc.assoc.forward,
        &f.mc.tensor_maps(&im, &c.comult, &t_mcc.x_yz)?,
        &f.zeta,
    ])?;

    let t_ddm = TripleTensor::from_pairs(d.square.clone(), f.dm.clone())?;
    let t_dmc = TripleTensor::from_pairs(f.dm.clone(), f.mc.clone())?;
    let comult_m = f.dm.tensor_maps(&d.comult, &im, &t_ddm.xy_z)?;
    let d_zeta = t_ddm
        .x_yz
        .tensor_maps(&d.carrier.id(), &f.zeta, &t_dmc.x_yz)?;
    let zeta_c = t_dmc
        .xy_z
        .tensor_maps(&f.zeta, &c.carrier.id(), &t_mcc.xy_z)?;
    let rhs = Matrix::chain(&[
        &zeta_c,
        &t_dmc.assoc.forward,
        &d_zeta,
        &t_ddm.assoc.inverse,
        &comult_m,
    ])?;
    Ok((lhs, rhs))
}

/// Both sides of the counit law as maps `𝒟 ⊗_B ℳ → ℳ`.
fn counit_sides(f: &CorOneCell) -> Result<(Matrix, Matrix)> {
    let im = f.carrier.id();
    let bm = tensor_bimodules(&Bimodule::regular(f.cod.base()), &f.carrier)?;
    let lhs = left_unit_coherence(&bm)?
        .forward
        .compose(&f.dm.tensor_maps(&f.cod.counit, &im, &bm)?)?;
    let ma = tensor_bimodules(&f.carrier, &Bimodule::regular(f.dom.base()))?;
    let rhs = Matrix::chain(&[
        &right_unit_coherence(&ma)?.forward,
        &f.mc.tensor_maps(&im, &f.dom.counit, &ma)?,
        &f.zeta,
    ])?;
    Ok((lhs, rhs))
}

/// Carrier axioms, `ζ` a bimodule map, the pentagon and the counit law.
pub fn check_cor_one_cell(f: &CorOneCell) -> CheckReport {
    let mut r = CheckReport::new();
    r.absorb("carrier", check_bimodule(&f.carrier));
    r.absorb(
        "zeta",
        check_bimodule_map(&f.zeta, &f.dm.module, &f.mc.module),
    );
    match pentagon_sides(f) {
        Ok((lhs, rhs)) => r.expect_equal("pentagon", Ok(lhs), Ok(rhs)),
        Err(e) => r.expect("pentagon", false, || e.to_string()),
    }
    match counit_sides(f) {
        Ok((lhs, rhs)) => r.expect_equal("counit", Ok(lhs), Ok(rhs)),
        Err(e) => r.expect("counit", false, || e.to_string()),
    }
    r
}

/// A 2-cell between parallel coring 1-cells: a bimodule map of carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorTwoCell {
    dom: CorOneCell,
    cod: CorOneCell,
    map: Matrix,
}

impl CorTwoCell {
    pub fn new(dom: CorOneCell, cod: CorOneCell, map: Matrix) -> Result<CorTwoCell> {
        if dom.dom != cod.dom || dom.cod != cod.cod {
            return Err(Error::NotParallel(
                "coring 2-cell between 1-cells with different endpoints".into(),
            ));
        }
        if map.shape() != (cod.dim(), dom.dim()) {
            return Err(Error::dims(
                "coring 2-cell",
                format!("{}x{}", cod.dim(), dom.dim()),
                format!("{}x{}", map.rows(), map.cols()),
            ));
        }
        Ok(CorTwoCell { dom, cod, map })
    }

    pub fn dom(&self) -> &CorOneCell {
        &self.dom
    }

    pub fn cod(&self) -> &CorOneCell {
        &self.cod
    }

    pub fn map(&self) -> &Matrix {
        &self.map
    }

    pub fn check(&self) -> CheckReport {
        check_cor_two_cell(self)
    }

    /// The inverse 2-cell, when the map is invertible.
    pub fn inverse(&self) -> Result<CorTwoCell> {
        let inv = self
            .map
            .inverse()
            .ok_or_else(|| Error::NotInvertible("coring 2-cell".into()))?;
        CorTwoCell::new(self.cod.clone(), self.dom.clone(), inv)
    }
}

/// The two ways of moving from `𝒟 ⊗_B ℳ` to `ℳ' ⊗_A 𝒞`.
fn zeta_square_sides(t: &CorTwoCell) -> Result<(Matrix, Matrix)> {
    let (src, dst) = (&t.dom, &t.cod);
    let lhs = src
        .mc
        .tensor_maps(&t.map, &src.dom.carrier.id(), &dst.mc)?
        .compose(&src.zeta)?;
    let rhs = dst
        .zeta
        .compose(&src.dm.tensor_maps(&src.cod.carrier.id(), &t.map, &dst.dm)?)?;
    Ok((lhs, rhs))
}

/// The map is a bimodule map and commutes with the `ζ`s.
pub fn check_cor_two_cell(t: &CorTwoCell) -> CheckReport {
    let mut r = CheckReport::new();
    r.absorb(
        "map",
        check_bimodule_map(&t.map, &t.dom.carrier, &t.cod.carrier),
    );
    match zeta_square_sides(t) {
        Ok((lhs, rhs)) => r.expect_equal("zeta square", Ok(lhs), Ok(rhs)),
        Err(e) => r.expect("zeta square", false, || e.to_string()),
    }
    r
}

/// `(A, ζ)` with `ζ : 𝒞 ⊗_A A ≅ 𝒞 ≅ A ⊗_A 𝒞`.
pub fn identity_cor_one_cell(c: &Coring) -> CorOneCell {
    let carrier = Bimodule::regular(c.base());
    let dm = tensor_bimodules(&c.carrier, &carrier).expect("same base");
    let mc = tensor_bimodules(&carrier, &c.carrier).expect("same base");
    let right = right_unit_coherence(&dm).expect("regular unit coherence");
    let left = left_unit_coherence(&mc).expect("regular unit coherence");
    let zeta = left.inverse.compose(&right.forward).expect("shapes agree");
    CorOneCell {
        dom: c.clone(),
        cod: c.clone(),
        carrier,
        zeta,
        dm,
        mc,
    }
}

/// `(𝒫, ζ^P) ∘ (ℳ, ζ^M) = (𝒫 ⊗_B ℳ, ζ)` where `ζ` is the composite
/// `ℰ⊗(𝒫⊗ℳ) ≅ (ℰ⊗𝒫)⊗ℳ → (𝒫⊗𝒟)⊗ℳ ≅ 𝒫⊗(𝒟⊗ℳ) → 𝒫⊗(ℳ⊗𝒞) ≅ (𝒫⊗ℳ)⊗𝒞`.
pub fn compose_cor_one_cells(p: &CorOneCell, m: &CorOneCell) -> Result<CorOneCell> {
    if m.cod != p.dom {
        return Err(Error::NotComposable(
            "codomain coring of the first 1-cell differs from the domain of the second".into(),
        ));
    }
    let pm = tensor_bimodules(&p.carrier, &m.carrier)?;
    let t_epm = TripleTensor::from_pairs(p.dm.clone(), pm.clone())?;
    let t_pdm = TripleTensor::from_pairs(p.mc.clone(), m.dm.clone())?;
    let t_pmc = TripleTensor::from_pairs(pm.clone(), m.mc.clone())?;
    let zeta_p_m = t_epm
        .xy_z
        .tensor_maps(&p.zeta, &m.carrier.id(), &t_pdm.xy_z)?;
    let p_zeta_m = t_pdm
        .x_yz
        .tensor_maps(&p.carrier.id(), &m.zeta, &t_pmc.x_yz)?;
    let zeta = Matrix::chain(&[
        &t_pmc.assoc.forward,
        &p_zeta_m,
        &t_pdm.assoc.inverse,
        &zeta_p_m,
        &t_epm.assoc.forward,
    ])?;
    Ok(CorOneCell {
        dom: m.dom.clone(),
        cod: p.cod.clone(),
        carrier: pm.module,
        zeta,
        dm: t_epm.x_yz,
        mc: t_pmc.xy_z,
    })
}

pub fn identity_cor_two_cell(f: &CorOneCell) -> CorTwoCell {
    CorTwoCell {
        dom: f.clone(),
        cod: f.clone(),
        map: f.carrier.id(),
    }
}

pub fn vcomp(t2: &CorTwoCell, t1: &CorTwoCell) -> Result<CorTwoCell> {
    if t1.cod != t2.dom {
        return Err(Error::NotComposable("coring 2-cells do not meet".into()));
    }
    Ok(CorTwoCell {
        dom: t1.dom.clone(),
        cod: t2.cod.clone(),
        map: t2.map.compose(&t1.map)?,
    })
}

/// `θ′ ⊗_B θ` for `θ′ : 𝒫 ⇒ 𝒫′` and `θ : ℳ ⇒ ℳ′`.
pub fn hcomp(t2: &CorTwoCell, t1: &CorTwoCell) -> Result<CorTwoCell> {
    let dom = compose_cor_one_cells(&t2.dom, &t1.dom)?;
    let cod = compose_cor_one_cells(&t2.cod, &t1.cod)?;
    let src = tensor_bimodules(&t2.dom.carrier, &t1.dom.carrier)?;
    let dst = tensor_bimodules(&t2.cod.carrier, &t1.cod.carrier)?;
    let map = src.tensor_maps(&t2.map, &t1.map, &dst)?;
    Ok(CorTwoCell { dom, cod, map })
}

/// `𝒬 ∘ (𝒫 ∘ ℳ) ⇒ (𝒬 ∘ 𝒫) ∘ ℳ`, the associativity iso of the carriers.
pub fn cor_associator(q: &CorOneCell, p: &CorOneCell, m: &CorOneCell) -> Result<CorTwoCell> {
    let right = compose_cor_one_cells(q, &compose_cor_one_cells(p, m)?)?;
    let left = compose_cor_one_cells(&compose_cor_one_cells(q, p)?, m)?;
    let t = TripleTensor::new(&q.carrier, &p.carrier, &m.carrier)?;
    CorTwoCell::new(right, left, t.assoc.forward)
}

fn unitor(f: &CorOneCell, composite: CorOneCell, coh: Iso) -> Result<CorTwoCell> {
    CorTwoCell::new(composite, f.clone(), coh.forward)
}

/// `1 ∘ ℳ ⇒ ℳ`, induced by the action `B ⊗_B ℳ → ℳ`.
pub fn cor_left_unitor(f: &CorOneCell) -> Result<CorTwoCell> {
    let composite = compose_cor_one_cells(&identity_cor_one_cell(&f.cod), f)?;
    let t = tensor_bimodules(&Bimodule::regular(f.cod.base()), &f.carrier)?;
    unitor(f, composite, left_unit_coherence(&t)?)
}

/// `ℳ ∘ 1 ⇒ ℳ`, induced by the action `ℳ ⊗_A A → ℳ`.
pub fn cor_right_unitor(f: &CorOneCell) -> Result<CorTwoCell> {
    let composite = compose_cor_one_cells(f, &identity_cor_one_cell(&f.dom))?;
    let t = tensor_bimodules(&f.carrier, &Bimodule::regular(f.dom.base()))?;
    unitor(f, composite, right_unit_coherence(&t)?)
}
