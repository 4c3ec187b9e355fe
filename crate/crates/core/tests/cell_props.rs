use entwine_core::comc::{comc_two_cell, compositor};
use entwine_core::corcat::check_cor_two_cell;
use entwine_core::entwcat::{
    check_obj, check_one_cell, check_two_cell, scalar_two_cell, EntwObj, EntwOneCell, EntwTwoCell,
};
use entwine_core::gallery::gallery;
use entwine_core::{Field, Matrix};
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-5i64..=-1, 1i64..=5]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn perturbed_entwinings_fail(idx in 0usize..1000, delta in nonzero(), which in 0usize..6) {
        let g = gallery(Q).unwrap();
        let o = &g.objects[which % g.objects.len()].obj;
        let psi = o.psi();
        let (i, j) = ((idx / psi.cols()) % psi.rows(), idx % psi.cols());
        let bad = EntwObj::new(
            o.algebra().clone(),
            o.coalgebra().clone(),
            psi.perturbed(i, j, &Q.from_i64(delta)),
        )
        .unwrap();
        prop_assert!(!check_obj(&bad).passed());
    }

    #[test]
    fn perturbed_one_cells_fail(idx in 0usize..1000, delta in nonzero(), which in 0usize..20, on_alpha: bool) {
        let g = gallery(Q).unwrap();
        let f = &g.one_cells[which % g.one_cells.len()].cell;
        let (mut alpha, mut gamma) = (f.alpha().clone(), f.gamma().clone());
        let target = if on_alpha { &mut alpha } else { &mut gamma };
        let (i, j) = ((idx / target.cols()) % target.rows(), idx % target.cols());
        *target = target.perturbed(i, j, &Q.from_i64(delta));
        let bad = EntwOneCell::new(f.dom().clone(), f.cod().clone(), f.dim_m(), alpha, gamma).unwrap();
        prop_assert!(!check_one_cell(&bad).passed());
    }

    #[test]
    fn scalar_two_cells_map_to_scalars(c in -6i64..=6, which in 0usize..20) {
        let g = gallery(Q).unwrap();
        let f = &g.one_cells[which % g.one_cells.len()].cell;
        let t = scalar_two_cell(&Q.from_i64(c), f);
        prop_assert!(check_two_cell(&t).passed());
        let ct = comc_two_cell(&t).unwrap();
        prop_assert!(check_cor_two_cell(&ct).passed());
        let n = f.dim_m() * f.dom().algebra().dim();
        prop_assert_eq!(ct.map(), &Matrix::identity(Q, n).scale(&Q.from_i64(c)));
    }

    #[test]
    fn non_equivariant_maps_are_rejected(a in -3i64..=3, b in -3i64..=3) {
        // 2-cells from the regular C2-module to the sign module are multiples of [1, -1]
        let g = gallery(Q).unwrap();
        let m = g.one_cell("mod_C2").unwrap().cell.clone();
        let s = g.one_cell("mod_sign").unwrap().cell.clone();
        let t = EntwTwoCell::new(m, s, Matrix::from_i64(Q, &[&[a, b]])).unwrap();
        prop_assert_eq!(check_two_cell(&t).passed(), a + b == 0);
    }
}

#[test]
fn compositors_invert_on_every_gallery_pair() {
    let g = gallery(Q).unwrap();
    for (p, m) in g.composable_pairs() {
        let phi = compositor(&p.cell, &m.cell).unwrap();
        let inv = phi.inverse().unwrap();
        assert!(phi.map().compose(inv.map()).unwrap().is_identity());
    }
}
