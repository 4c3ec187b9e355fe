//! `tensor_over` against a direct count: ambient dimension minus the rank of
//! the relation vectors, built elementwise and reduced with plain
//! `BigRational` elimination.

use entwine_core::algstruct::group_algebra;
use entwine_core::exactlin::{Field, Matrix};
use entwine_core::qtensor::tensor_over;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn to_big(m: &Matrix, i: usize, j: usize) -> BigRational {
    let s = m.get(i, j).to_string();
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(n.parse().unwrap(), d.parse().unwrap()),
        None => BigRational::from_integer(s.parse().unwrap()),
    }
}

#[allow(clippy::needless_range_loop)]
fn oracle_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = &rows[r][c] / &pivot;
                for k in 0..cols {
                    let delta = &factor * &rows[rank][k];
                    rows[r][k] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Powers of a generator acting on `k^d`, as an `n`-element cyclic group.
fn cyclic_operator(n: usize, blocks: &[bool], conj: &[i64]) -> Option<Matrix> {
    let mut entries: Vec<Vec<i64>> = Vec::new();
    let mut d = 0;
    let mut place = |block: &[&[i64]]| {
        let size = block.len();
        for row in entries.iter_mut() {
            row.extend(std::iter::repeat_n(0, size));
        }
        for r in block {
            let mut row = vec![0; d];
            row.extend_from_slice(r);
            entries.push(row);
        }
        d += size;
    };
    for &nontrivial in blocks {
        match (n, nontrivial) {
            (_, false) => place(&[&[1]]),
            (2, true) => place(&[&[-1]]),
            (_, true) => place(&[&[0, -1], &[1, -1]]),
        }
    }
    if d == 0 || d > 3 {
        return None;
    }
    let rows: Vec<&[i64]> = entries.iter().map(Vec::as_slice).collect();
    let block = Matrix::from_i64(Q, &rows);
    let p = Matrix::from_fn(Q, d, d, |i, j| {
        Q.from_i64(conj[i * 3 + j] + if i == j { 3 } else { 0 })
    });
    let inv = p.inverse()?;
    Some(Matrix::chain(&[&p, &block, &inv]).unwrap())
}

fn action(t: &Matrix, n: usize, left: bool) -> Matrix {
    let d = t.rows();
    let mut powers = vec![Matrix::identity(Q, d)];
    for k in 1..n {
        powers.push(t.compose(&powers[k - 1]).unwrap());
    }
    Matrix::from_fn(Q, d, n * d, |r, c| {
        let (g, m) = if left { (c / d, c % d) } else { (c % n, c / n) };
        powers[g].get(r, m).clone()
    })
}

fn oracle_quotient_dim(n: usize, tm: &Matrix, tn: &Matrix) -> usize {
    let (dm, dn) = (tm.rows(), tn.rows());
    let mut pm = vec![Matrix::identity(Q, dm)];
    let mut pn = vec![Matrix::identity(Q, dn)];
    for k in 1..n {
        pm.push(tm.compose(&pm[k - 1]).unwrap());
        pn.push(tn.compose(&pn[k - 1]).unwrap());
    }
    let mut rows = Vec::new();
    for i in 0..dm {
        for g in 0..n {
            for j in 0..dn {
                // (e_i·g) ⊗ e_j − e_i ⊗ (g·e_j)
                let mut v = vec![BigRational::zero(); dm * dn];
                for a in 0..dm {
                    v[a * dn + j] += to_big(&pm[g], a, i);
                }
                for b in 0..dn {
                    v[i * dn + b] -= to_big(&pn[g], b, j);
                }
                rows.push(v);
            }
        }
    }
    dm * dn - oracle_rank(rows)
}

fn module_params() -> impl Strategy<Value = (usize, Vec<bool>, Vec<i64>, Vec<bool>, Vec<i64>)> {
    (
        2usize..=3,
        proptest::collection::vec(any::<bool>(), 1..=3),
        proptest::collection::vec(-1i64..=1, 9),
        proptest::collection::vec(any::<bool>(), 1..=3),
        proptest::collection::vec(-1i64..=1, 9),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quotient_dimension_matches_oracle((n, bm, cm, bn, cn) in module_params()) {
        let (Some(tm), Some(tn)) = (cyclic_operator(n, &bm, &cm), cyclic_operator(n, &bn, &cn)) else {
            return Ok(());
        };
        let a = group_algebra(Q, n).unwrap();
        let ract = action(&tm, n, false);
        let lact = action(&tn, n, true);
        let q = tensor_over(&ract, &lact, a.dim(), tm.rows(), tn.rows()).unwrap();
        prop_assert_eq!(q.quotient_dim(), oracle_quotient_dim(n, &tm, &tn));
        prop_assert!(q.projection().compose(q.section()).unwrap().is_identity());
    }
}

#[test]
fn sign_times_trivial_is_zero() {
    let t = Matrix::from_i64(Q, &[&[-1]]);
    let one = Matrix::from_i64(Q, &[&[1]]);
    let q = tensor_over(&action(&t, 2, false), &action(&one, 2, true), 2, 1, 1).unwrap();
    assert_eq!(q.quotient_dim(), 0);
    assert_eq!(oracle_quotient_dim(2, &t, &one), 0);
}
