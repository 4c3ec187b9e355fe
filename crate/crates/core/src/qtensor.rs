//! Tensor products over an algebra, presented as quotients.
//!
//! `M ⊗_A N` is the cokernel of `(m·a) ⊗ n − m ⊗ (a·n)` on `M ⊗ N`. A
//! [`QuotientPresentation`] stores the canonical projection onto it together
//! with a section, so maps out of the quotient are ordinary matrices and every
//! diagram over quotients stays a finite matrix equality.

use crate::algstruct::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// A quotient of an ambient space: `projection ∘ section = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    ambient_dim: usize,
    quotient_dim: usize,
    projection: Matrix,
    section: Matrix,
}

impl QuotientPresentation {
    /// The quotient of `k^n` by the column span of `relations` (`n × r`).
    ///
    /// Coordinates on the quotient are the non-pivot coordinates of the
    /// reduced relation span; the section puts each back at its own position.
    pub fn from_relations(relations: &Matrix) -> QuotientPresentation {
        let field = relations.field();
        let n = relations.rows();
        let rr = relations.transpose().rref();
        let mut is_pivot = vec![false; n];
        for &p in &rr.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&j| !is_pivot[j]).collect();
        let q = free.len();
        let mut projection = Matrix::zeros(field, q, n);
        let mut section = Matrix::zeros(field, n, q);
        for (t, &f) in free.iter().enumerate() {
            projection.set(t, f, field.one());
            section.set(f, t, field.one());
            for (r, &p) in rr.pivots.iter().enumerate() {
                let v = rr.reduced.get(r, f);
                if !v.is_zero() {
                    projection.set(t, p, -v);
                }
            }
        }
        QuotientPresentation {
            ambient_dim: n,
            quotient_dim: q,
            projection,
            section,
        }
    }

    /// No relations: the quotient is the ambient space itself.
    pub fn trivial(field: Field, dim: usize) -> QuotientPresentation {
        QuotientPresentation {
            ambient_dim: dim,
            quotient_dim: dim,
            projection: Matrix::identity(field, dim),
            section: Matrix::identity(field, dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn quotient_dim(&self) -> usize {
        self.quotient_dim
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    pub fn section(&self) -> &Matrix {
        &self.section
    }

    /// A basis of the relation span, i.e. the kernel of the projection.
    pub fn kernel(&self) -> Matrix {
        self.projection.kernel_basis()
    }

    /// Follows this quotient by a further quotient of it.
    pub fn then(&self, outer: &QuotientPresentation) -> Result<QuotientPresentation> {
        if outer.ambient_dim != self.quotient_dim {
            return Err(Error::dims(
                "nested quotient",
                self.quotient_dim,
                outer.ambient_dim,
            ));
        }
        Ok(QuotientPresentation {
            ambient_dim: self.ambient_dim,
            quotient_dim: outer.quotient_dim,
            projection: outer.projection.compose(&self.projection)?,
            section: self.section.compose(&outer.section)?,
        })
    }

    /// `X ⊗ (−)` applied to this presentation, `dim X = dim`.
    pub fn kron_left(&self, dim: usize) -> QuotientPresentation {
        let id = Matrix::identity(self.projection.field(), dim);
        QuotientPresentation {
            ambient_dim: dim * self.ambient_dim,
            quotient_dim: dim * self.quotient_dim,
            projection: id.kron(&self.projection),
            section: id.kron(&self.section),
        }
    }

    /// `(−) ⊗ Z` applied to this presentation, `dim Z = dim`.
    pub fn kron_right(&self, dim: usize) -> QuotientPresentation {
        let id = Matrix::identity(self.projection.field(), dim);
        QuotientPresentation {
            ambient_dim: self.ambient_dim * dim,
            quotient_dim: self.quotient_dim * dim,
            projection: self.projection.kron(&id),
            section: self.section.kron(&id),
        }
    }
}

/// The relation map `M ⊗ A ⊗ N → M ⊗ N`, `m⊗a⊗n ↦ (m·a)⊗n − m⊗(a·n)`.
pub fn balancing_relations(
    ract_m: &Matrix,
    lact_n: &Matrix,
    dim_a: usize,
    dim_m: usize,
    dim_n: usize,
) -> Result<Matrix> {
    if ract_m.shape() != (dim_m, dim_m * dim_a) {
        return Err(Error::dims(
            "right action",
            format!("{dim_m}x{}", dim_m * dim_a),
            format!("{:?}", ract_m.shape()),
        ));
    }
    if lact_n.shape() != (dim_n, dim_a * dim_n) {
        return Err(Error::dims(
            "left action",
            format!("{dim_n}x{}", dim_a * dim_n),
            format!("{:?}", lact_n.shape()),
        ));
    }
    let field = ract_m.field();
    ract_m
        .kron(&Matrix::identity(field, dim_n))
        .sub(&Matrix::identity(field, dim_m).kron(lact_n))
}

/// `M ⊗_A N` as a quotient of `M ⊗ N`.
pub fn tensor_over(
    ract_m: &Matrix,
    lact_n: &Matrix,
    dim_a: usize,
    dim_m: usize,
    dim_n: usize,
) -> Result<QuotientPresentation> {
    let r = balancing_relations(ract_m, lact_n, dim_a, dim_m, dim_n)?;
    Ok(QuotientPresentation::from_relations(&r))
}

/// The unique `g` with `g ∘ q.projection = f`.
///
/// Fails with [`Error::DoesNotFactor`] when `f` does not vanish on the
/// relations; for maps built from cell data that means a balancing axiom of
/// the input is violated.
pub fn induced_map(f: &Matrix, q: &QuotientPresentation) -> Result<Matrix> {
    if f.cols() != q.ambient_dim {
        return Err(Error::dims("induced map source", q.ambient_dim, f.cols()));
    }
    let g = f.compose(&q.section)?;
    if g.compose(&q.projection)? != *f {
        return Err(Error::DoesNotFactor(format!(
            "{}x{} map does not vanish on the relations",
            f.rows(),
            f.cols()
        )));
    }
    Ok(g)
}

/// An isomorphism with its verified inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Iso {
    pub forward: Matrix,
    pub inverse: Matrix,
}

impl Iso {
    fn verified(forward: Matrix, inverse: Matrix, what: &str) -> Result<Iso> {
        let fi = forward.compose(&inverse)?;
        let if_ = inverse.compose(&forward)?;
        if !fi.is_identity() || !if_.is_identity() {
            return Err(Error::NotInvertible(what.to_string()));
        }
        Ok(Iso { forward, inverse })
    }
}

/// A tensor product of bimodules `X ⊗_A Y` with its induced bimodule
/// structure.
#[derive(Clone, Debug)]
pub struct BimoduleTensor {
    pub x: Bimodule,
    pub y: Bimodule,
    pub module: Bimodule,
    pub presentation: QuotientPresentation,
}

/// `X ⊗_A Y` for a `C`-`A` bimodule `X` and an `A`-`B` bimodule `Y`.
pub fn tensor_bimodules(x: &Bimodule, y: &Bimodule) -> Result<BimoduleTensor> {
    if x.right() != y.left() {
        return Err(Error::NotComposable(
            "right algebra of the first factor differs from left algebra of the second".into(),
        ));
    }
    let a = x.right().dim();
    let presentation = tensor_over(x.ract(), y.lact(), a, x.dim(), y.dim())?;
    let left_dim = x.left().dim();
    let right_dim = y.right().dim();
    let lact = induced_map(
        &presentation.projection.compose(&x.lact().kron(&y.id()))?,
        &presentation.kron_left(left_dim),
    )?;
    let ract = induced_map(
        &presentation.projection.compose(&x.id().kron(y.ract()))?,
        &presentation.kron_right(right_dim),
    )?;
    let module = Bimodule::new(x.left().clone(), y.right().clone(), lact, ract)?;
    Ok(BimoduleTensor {
        x: x.clone(),
        y: y.clone(),
        module,
        presentation,
    })
}

impl BimoduleTensor {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn projection(&self) -> &Matrix {
        &self.presentation.projection
    }

    /// Factors a map out of the ambient `X ⊗ Y` through the quotient.
    pub fn induced(&self, f: &Matrix) -> Result<Matrix> {
        induced_map(f, &self.presentation)
    }

    /// `f ⊗_A g` from this quotient to `dst`, for `f : X → X'`, `g : Y → Y'`.
    pub fn tensor_maps(&self, f: &Matrix, g: &Matrix, dst: &BimoduleTensor) -> Result<Matrix> {
        self.induced(&dst.projection().compose(&f.kron(g))?)
    }

    /// Like [`tensor_maps`](Self::tensor_maps) but through sections rather
    /// than a factorization check; linear in `f` and `g` and equal to the
    /// induced map whenever that exists.
    pub fn tensor_maps_via_section(
        &self,
        f: &Matrix,
        g: &Matrix,
        dst: &BimoduleTensor,
    ) -> Result<Matrix> {
        Matrix::chain(&[dst.projection(), &f.kron(g), &self.presentation.section])
    }
}

fn is_regular(m: &Bimodule) -> bool {
    m.left() == m.right() && *m == Bimodule::regular(m.left())
}

/// `A ⊗_A M ≅ M`, induced by `a ⊗ m ↦ a·m`; the inverse is `m ↦ [1 ⊗ m]`.
pub fn left_unit_coherence(t: &BimoduleTensor) -> Result<Iso> {
    if !is_regular(&t.x) {
        return Err(Error::InvalidParameter(
            "left unit coherence needs the regular bimodule on the left".into(),
        ));
    }
    unit_coherence(&t.presentation, t.y.lact(), t.x.left())
}

/// The canonical iso `A ⊗_A M → M` on a presentation of `A ⊗_A M`, given the
/// left action of `A` on `M`.
pub fn unit_coherence(q: &QuotientPresentation, lact: &Matrix, a: &Algebra) -> Result<Iso> {
    let m = lact.rows();
    let forward =
        induced_map(lact, q).map_err(|_| Error::NotInvertible("action is not balanced".into()))?;
    let inverse = q
        .projection
        .compose(&a.unit().kron(&Matrix::identity(a.field(), m)))?;
    Iso::verified(forward, inverse, "left unit coherence")
}

/// `M ⊗_A A ≅ M`, induced by `m ⊗ a ↦ m·a`.
pub fn right_unit_coherence(t: &BimoduleTensor) -> Result<Iso> {
    if !is_regular(&t.y) {
        return Err(Error::InvalidParameter(
            "right unit coherence needs the regular bimodule on the right".into(),
        ));
    }
    let a = t.y.left();
    let m = t.x.dim();
    let forward = t
        .induced(t.x.ract())
        .map_err(|_| Error::NotInvertible("action is not balanced".into()))?;
    let inverse = t
        .projection()
        .compose(&Matrix::identity(a.field(), m).kron(a.unit()))?;
    Iso::verified(forward, inverse, "right unit coherence")
}

/// The associativity iso `X ⊗ (Y ⊗ Z) → (X ⊗ Y) ⊗ Z` between two total
/// presentations of the same ambient `X ⊗ Y ⊗ Z`: the unique map commuting
/// with both projections.
pub fn assoc_coherence(
    q_left: &QuotientPresentation,
    q_right: &QuotientPresentation,
) -> Result<Iso> {
    if q_left.ambient_dim != q_right.ambient_dim {
        return Err(Error::dims(
            "associator ambient",
            q_left.ambient_dim,
            q_right.ambient_dim,
        ));
    }
    let forward = induced_map(&q_left.projection, q_right)?;
    let inverse = induced_map(&q_right.projection, q_left)?;
    Iso::verified(forward, inverse, "associativity coherence")
}

/// Both bracketings of `X ⊗ Y ⊗ Z` and the associator between them.
#[derive(Clone, Debug)]
pub struct TripleTensor {
    pub xy: BimoduleTensor,
    pub xy_z: BimoduleTensor,
    pub yz: BimoduleTensor,
    pub x_yz: BimoduleTensor,
    pub left_total: QuotientPresentation,
    pub right_total: QuotientPresentation,
    /// From `X ⊗ (Y ⊗ Z)` to `(X ⊗ Y) ⊗ Z`.
    pub assoc: Iso,
}

impl TripleTensor {
    pub fn new(x: &Bimodule, y: &Bimodule, z: &Bimodule) -> Result<TripleTensor> {
        let xy = tensor_bimodules(x, y)?;
        let yz = tensor_bimodules(y, z)?;
        TripleTensor::from_pairs(xy, yz)
    }

    /// Builds the triple from already computed `X ⊗ Y` and `Y ⊗ Z`.
    pub fn from_pairs(xy: BimoduleTensor, yz: BimoduleTensor) -> Result<TripleTensor> {
        if xy.y != yz.x {
            return Err(Error::NotComposable("middle factors differ".into()));
        }
        let (x, z) = (xy.x.clone(), yz.y.clone());
        let xy_z = tensor_bimodules(&xy.module, &z)?;
        let x_yz = tensor_bimodules(&x, &yz.module)?;
        let left_total = xy
            .presentation
            .kron_right(z.dim())
            .then(&xy_z.presentation)?;
        let right_total = yz
            .presentation
            .kron_left(x.dim())
            .then(&x_yz.presentation)?;
        let assoc = assoc_coherence(&left_total, &right_total)?;
        Ok(TripleTensor {
            xy,
            xy_z,
            yz,
            x_yz,
            left_total,
            right_total,
            assoc,
        })
    }
}
