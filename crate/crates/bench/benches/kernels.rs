use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use entwine_core::algstruct::cyclic_group_bialgebra;
use entwine_core::comc::{comc_obj, comc_one_cell};
use entwine_core::entwcat::{bialgebra_entwining, check_obj, compose_one_cells};
use entwine_core::gallery::gallery;
use entwine_core::qtensor::tensor_bimodules;
use entwine_core::{Field, Matrix};

const Q: Field = Field::Rational;

fn rref(c: &mut Criterion) {
    // a dense 12x12 integer matrix
    let m = Matrix::from_fn(Q, 12, 12, |i, j| {
        Q.from_i64(((i * 7 + j * 3) % 11) as i64 - 5)
    });
    c.bench_function("rref 12x12 over Q", |b| b.iter(|| black_box(&m).rref()));
    let p = Field::prime(101).unwrap();
    let mp = Matrix::from_fn(p, 12, 12, |i, j| {
        p.from_i64(((i * 7 + j * 3) % 11) as i64 - 5)
    });
    c.bench_function("rref 12x12 over GF(101)", |b| {
        b.iter(|| black_box(&mp).rref())
    });
}

fn tensor_over(c: &mut Criterion) {
    let (a, co) = cyclic_group_bialgebra(Q, 3).unwrap();
    let coring = comc_obj(&bialgebra_entwining(&a, &co).unwrap()).unwrap();
    let carrier = coring.carrier().clone();
    c.bench_function("tensor over k[C3], 9x9", |b| {
        b.iter(|| tensor_bimodules(black_box(&carrier), black_box(&carrier)).unwrap())
    });
}

fn entwining_checks(c: &mut Criterion) {
    let (a, co) = cyclic_group_bialgebra(Q, 3).unwrap();
    let e = bialgebra_entwining(&a, &co).unwrap();
    c.bench_function("check_obj bialg C3", |b| {
        b.iter(|| check_obj(black_box(&e)))
    });
}

fn comc(c: &mut Criterion) {
    let g = gallery(Q).unwrap();
    let module = &g.one_cell("mod_C2").unwrap().cell;
    let comodule = &g.one_cell("comod_C2").unwrap().cell;
    let composite = compose_one_cells(module, comodule).unwrap();
    c.bench_function("comc_one_cell mod_C2", |b| {
        b.iter(|| comc_one_cell(black_box(module)).unwrap())
    });
    c.bench_function("comc_one_cell mod_C2.comod_C2", |b| {
        b.iter(|| comc_one_cell(black_box(&composite)).unwrap())
    });
}

criterion_group!(benches, rref, tensor_over, entwining_checks, comc);
criterion_main!(benches);
