use std::collections::BTreeSet;

use linarr_core::linalg::{in_span, kernel_basis, rank, RatMatrix};
use linarr_core::poly::{monomials, Var};
use linarr_core::rational::rat;
use linarr_core::syzygy::relation_matrix;
use linarr_core::{Arrangement, Rational};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (0usize..7, 0usize..7).prop_flat_map(|(r, c)| {
        // small entries with many zeros make rank deficiency common
        (Just(r), Just(c), prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], r * c))
    })
}

fn build(r: usize, c: usize, e: &[i64]) -> RatMatrix {
    RatMatrix::new(r, c, e.iter().map(|&v| rat(v)).collect()).unwrap()
}

fn is_normalized(v: &[Rational]) -> bool {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return false;
    };
    let ints = v.iter().all(|x| x.is_integer());
    let gcd = v
        .iter()
        .fold(num_bigint::BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x.numer()));
    ints && first.is_positive() && gcd == 1.into()
}

proptest! {
    #[test]
    fn rank_plus_nullity((r, c, e) in matrix()) {
        let m = build(r, c, &e);
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.len(), c);
        for v in &k {
            prop_assert!(m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()));
            prop_assert!(is_normalized(v));
        }
    }

    #[test]
    fn rank_ignores_permutations(
        (r, c, e) in matrix(),
        row_seed in any::<u64>(),
        col_seed in any::<u64>(),
    ) {
        let m = build(r, c, &e);
        let rows = permutation(r, row_seed);
        let cols = permutation(c, col_seed);
        let mut p = RatMatrix::zeros(r, c);
        for (i, &ri) in rows.iter().enumerate() {
            for (j, &cj) in cols.iter().enumerate() {
                p.set(i, j, m.get(ri, cj).clone());
            }
        }
        prop_assert_eq!(rank(&p), rank(&m));
        prop_assert_eq!(rank(&m.transpose()), rank(&m));
    }

    #[test]
    fn kernel_is_reproducible((r, c, e) in matrix()) {
        let m = build(r, c, &e);
        prop_assert_eq!(kernel_basis(&m), kernel_basis(&m.clone()));
    }
}

fn permutation(n: usize, mut seed: u64) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        p.swap(i, (seed >> 33) as usize % (i + 1));
    }
    p
}

#[test]
fn basic_ranks() {
    assert_eq!(rank(&RatMatrix::identity(2)), 2);
    assert_eq!(rank(&RatMatrix::zeros(3, 5)), 0);
    assert!(kernel_basis(&RatMatrix::identity(3)).is_empty());
    let k = kernel_basis(&RatMatrix::zeros(2, 4));
    assert_eq!(k.len(), 4);
    for (j, v) in k.iter().enumerate() {
        let unit: Vec<Rational> = (0..4).map(|i| rat((i == j) as i64)).collect();
        assert_eq!(v, &unit);
    }
}

#[test]
fn span_membership() {
    let e1 = vec![rat(1), rat(0)];
    let e2 = vec![rat(0), rat(1)];
    assert!(in_span(&[rat(0), rat(0)], &[]).unwrap());
    assert!(!in_span(&e1, std::slice::from_ref(&e2)).unwrap());
    assert!(in_span(&[rat(1), rat(1)], &[e1, e2]).unwrap());
}

#[test]
fn relation_matrix_of_xyz_in_degree_one() {
    let xyz = Arrangement::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
    let m = relation_matrix(&xyz, 1);
    assert_eq!((m.rows(), m.cols()), (10, 9));
    // Oracle: each column is a single monomial (a variable times yz, xz or xy);
    // the rank is the number of distinct monomials they hit.
    let partial_monomials = [[0u32, 1, 1], [1, 0, 1], [1, 1, 0]];
    let mut hit = BTreeSet::new();
    for p in partial_monomials {
        for v in Var::ALL {
            let mut e = p;
            e[v.index()] += 1;
            hit.insert(e);
        }
    }
    assert_eq!(hit.len(), 7);
    assert_eq!(rank(&m), hit.len());
    let k = kernel_basis(&m);
    assert_eq!(k.len(), 9 - hit.len());
    assert!(k.iter().all(|v| m.mul_vec(v).unwrap().iter().all(|x| x.is_zero())));
    assert_eq!(monomials(1).len(), 3);
}
