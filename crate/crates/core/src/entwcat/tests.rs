use super::*;
use crate::algstruct::{
    augmentation, cyclic_group_bialgebra, group_algebra, grouplike_coalgebra, matrix_algebra,
    matrix_coalgebra,
};
use crate::exactlin::Field;

const Q: Field = Field::Rational;

fn e(n: usize, i: usize) -> Matrix {
    Matrix::basis_vector(Q, n, i)
}

fn bialg(n: usize) -> EntwObj {
    let (a, c) = cyclic_group_bialgebra(Q, n).unwrap();
    bialgebra_entwining(&a, &c).unwrap()
}

fn flip_c2_gl2() -> EntwObj {
    flip_entwining(
        &group_algebra(Q, 2).unwrap(),
        &grouplike_coalgebra(Q, 2).unwrap(),
    )
    .unwrap()
}

fn flip_k_gl2() -> EntwObj {
    flip_entwining(&Algebra::base_field(Q), &grouplike_coalgebra(Q, 2).unwrap()).unwrap()
}

fn swap2() -> Matrix {
    Matrix::from_i64(Q, &[&[0, 1], &[1, 0]])
}

fn negate_g() -> Matrix {
    Matrix::from_i64(Q, &[&[1, 0], &[0, -1]])
}

#[test]
fn flip_examples_pass() {
    let cases = [
        flip_entwining(
            &group_algebra(Q, 2).unwrap(),
            &matrix_coalgebra(Q, 2).unwrap(),
        )
        .unwrap(),
        flip_entwining(
            &matrix_algebra(Q, 2).unwrap(),
            &grouplike_coalgebra(Q, 3).unwrap(),
        )
        .unwrap(),
        trivial_object(Q),
    ];
    for obj in &cases {
        let r = check_obj(obj);
        assert!(r.passed(), "{r}");
    }
    assert_eq!(trivial_object(Q).psi(), &Matrix::identity(Q, 1));
}

#[test]
fn bialgebra_entwining_on_grouplikes() {
    for n in 1..=3 {
        let obj = bialg(n);
        assert!(check_obj(&obj).passed());
        // ψ(g^i ⊗ g^j) = g^j ⊗ g^{i+j}
        for i in 0..n {
            for j in 0..n {
                let image = obj.psi().compose(&e(n, i).kron(&e(n, j))).unwrap();
                assert_eq!(image, e(n, j).kron(&e(n, (i + j) % n)));
            }
        }
    }
}

#[test]
fn zero_psi_fails_unit_triangle() {
    let obj = bialg(2);
    let zero = obj.with_psi(Matrix::zeros(Q, 4, 4));
    let r = check_obj(&zero);
    assert!(r.fails("E3 unit triangle"));
    assert!(r.fails("E4 counit triangle"));
}

#[test]
fn non_bialgebra_is_rejected() {
    let r = bialgebra_entwining(
        &matrix_algebra(Q, 2).unwrap(),
        &matrix_coalgebra(Q, 2).unwrap(),
    );
    assert!(matches!(r, Err(Error::NotABialgebra(_))));
}

#[test]
fn identity_one_cells_pass() {
    for obj in [
        bialg(1),
        bialg(2),
        bialg(3),
        flip_c2_gl2(),
        trivial_object(Q),
    ] {
        let id = identity_one_cell(&obj);
        assert!(check_one_cell(&id).passed());
    }
    let t = identity_one_cell(&trivial_object(Q));
    assert_eq!(t.alpha(), &Matrix::identity(Q, 1));
    assert_eq!(t.gamma(), &Matrix::identity(Q, 1));
}

#[test]
fn morphism_one_cells() {
    let aug = morphism_one_cell(
        &flip_k_gl2(),
        &flip_c2_gl2(),
        &augmentation(Q, 2),
        &Matrix::identity(Q, 2),
    )
    .unwrap();
    assert!(check_one_cell(&aug).passed());

    // a coalgebra map that does not preserve the counit
    let g = Matrix::from_i64(Q, &[&[2, 0], &[0, 1]]);
    let r = morphism_one_cell(&flip_c2_gl2(), &flip_c2_gl2(), &Matrix::identity(Q, 2), &g);
    assert!(matches!(r, Err(Error::NotAMorphism(_))));
    // built unchecked it fails the counit triangle
    let raw = EntwOneCell::new(flip_c2_gl2(), flip_c2_gl2(), 1, Matrix::identity(Q, 2), g).unwrap();
    assert!(check_one_cell(&raw).fails("counit triangle"));
}

#[test]
fn composite_of_morphism_cells_is_morphism_of_composites() {
    let (c2, gl2) = (flip_c2_gl2(), flip_k_gl2());
    let aug = morphism_one_cell(&gl2, &c2, &augmentation(Q, 2), &Matrix::identity(Q, 2)).unwrap();
    let twist = morphism_one_cell(&c2, &c2, &negate_g(), &swap2()).unwrap();
    let composite = compose_one_cells(&twist, &aug).unwrap();
    let expected = morphism_one_cell(
        &gl2,
        &c2,
        &augmentation(Q, 2).compose(&negate_g()).unwrap(),
        &swap2(),
    )
    .unwrap();
    assert_eq!(composite, expected);
    assert!(check_one_cell(&composite).passed());
    assert!(matches!(
        compose_one_cells(&aug, &twist),
        Err(Error::NotComposable(_))
    ));
}

#[test]
fn composing_with_identities_is_strict() {
    let c2 = flip_c2_gl2();
    let twist = morphism_one_cell(&c2, &c2, &negate_g(), &swap2()).unwrap();
    let id = identity_one_cell(&c2);
    assert_eq!(compose_one_cells(&id, &twist).unwrap(), twist);
    assert_eq!(compose_one_cells(&twist, &id).unwrap(), twist);
}

fn regular_module(obj: &EntwObj) -> EntwOneCell {
    module_one_cell(obj, obj.algebra().mult()).unwrap()
}

fn regular_comodule(obj: &EntwObj) -> EntwOneCell {
    comodule_one_cell(obj, obj.coalgebra().comult()).unwrap()
}

#[test]
fn module_and_comodule_cells() {
    let obj = bialg(2);
    let m = regular_module(&obj);
    let c = regular_comodule(&obj);
    assert!(check_one_cell(&m).passed());
    assert!(check_one_cell(&c).passed());
    for (p, q) in [(&m, &c), (&c, &m)] {
        let pq = compose_one_cells(p, q).unwrap();
        assert_eq!(pq.dim_m(), 4);
        let r = check_one_cell(&pq);
        assert!(r.passed(), "{r}");
    }
    let not_action = Matrix::from_i64(Q, &[&[1, 2]]);
    assert!(module_one_cell(&obj, &not_action).is_err());
}

#[test]
fn two_cells() {
    let obj = bialg(2);
    let m = regular_module(&obj);
    let sign = module_one_cell(&obj, &Matrix::from_i64(Q, &[&[1, -1]])).unwrap();
    let id = identity_two_cell(&m);
    assert!(check_two_cell(&id).passed());
    let s = scalar_two_cell(&Q.from_i64(3), &m);
    assert!(check_two_cell(&s).passed());

    let to_sign =
        EntwTwoCell::new(m.clone(), sign.clone(), Matrix::from_i64(Q, &[&[1, -1]])).unwrap();
    assert!(check_two_cell(&to_sign).passed());
    let wrong = EntwTwoCell::new(m.clone(), sign.clone(), Matrix::from_i64(Q, &[&[1, 2]])).unwrap();
    assert!(check_two_cell(&wrong).fails("alpha square"));

    let c = regular_comodule(&obj);
    assert!(matches!(
        EntwTwoCell::new(m.clone(), c.clone(), Matrix::zeros(Q, 2, 2)),
        Err(Error::NotParallel(_))
    ));
}

#[test]
fn vertical_and_horizontal_composition() {
    let obj = bialg(2);
    let m = regular_module(&obj);
    let c = regular_comodule(&obj);
    let two = Q.from_i64(2);
    let three = Q.from_i64(3);
    let sm = scalar_two_cell(&two, &m);
    let sc = scalar_two_cell(&three, &c);
    let v = vcomp(&sm, &sm).unwrap();
    assert_eq!(v.theta(), &m.id_m().scale(&Q.from_i64(4)));
    let h = hcomp(&sm, &sc).unwrap();
    assert_eq!(h.theta(), &Matrix::identity(Q, 4).scale(&Q.from_i64(6)));
    assert!(check_two_cell(&h).passed());
    assert_eq!(
        vcomp(&identity_two_cell(&m), &identity_two_cell(&m)).unwrap(),
        identity_two_cell(&m)
    );
}

#[test]
fn associator_is_a_two_cell() {
    let obj = bialg(2);
    let m = regular_module(&obj);
    let c = regular_comodule(&obj);
    let a = associator(&m, &c, &m).unwrap();
    assert!(a.theta().is_identity());
    assert!(check_two_cell(&a).passed());
    let b = associator(&c, &m, &c).unwrap();
    assert!(check_two_cell(&b).passed());
}

#[test]
fn hom_equations_cut_out_two_cells() {
    let obj = bialg(2);
    let m = regular_module(&obj);
    // endomorphisms of the regular module are right multiplications: dim 2
    let eqs = two_cell_equations(&m, &m).unwrap();
    assert_eq!(eqs.kernel_basis().cols(), 2);
}

#[test]
fn shape_errors() {
    let obj = bialg(2);
    assert!(matches!(
        EntwObj::new(
            obj.algebra().clone(),
            obj.coalgebra().clone(),
            Matrix::zeros(Q, 3, 4)
        ),
        Err(Error::DimensionMismatch { .. })
    ));
    assert!(EntwOneCell::new(
        obj.clone(),
        obj.clone(),
        1,
        Matrix::zeros(Q, 2, 3),
        obj.coalgebra().id()
    )
    .is_err());
}
