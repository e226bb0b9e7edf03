mod common;

use common::{gf5, s, vec_of, Q};
use proptest::prelude::*;
use xmod_hopf::linalg::{kernel_basis, kron, mat_mul, solve_linear};
use xmod_hopf::{AlgebraError, Field, Matrix, Scalar};

fn rat(n: i64, d: i64) -> Scalar {
    Scalar::from_ratio(Q, n, d).unwrap()
}

fn small_rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn matrix_entries(rows: usize, cols: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, rows * cols)
}

/// Every vector of GF(p)^n, in lexicographic order.
fn all_vectors(p: i64, n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v| (0..p).map(move |c| [v.clone(), vec![c]].concat())).collect();
    }
    out
}

fn apply_mod(entries: &[i64], rows: usize, cols: usize, v: &[i64], p: i64) -> Vec<i64> {
    (0..rows)
        .map(|i| (0..cols).map(|j| entries[i * cols + j] * v[j]).sum::<i64>().rem_euclid(p))
        .collect()
}

#[test]
fn rational_arithmetic_examples() {
    assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
    assert_eq!(&rat(3, 4) * &Q.one(), rat(3, 4));
    assert!(matches!(Q.zero().inv(), Err(AlgebraError::DivisionByZero)));
    assert!(matches!(rat(1, 2).try_add(&gf5().one()), Err(AlgebraError::MixedFields(..))));
}

#[test]
fn residue_inverse_matches_brute_force() {
    let gf7 = Field::prime(7).unwrap();
    for a in 1..7 {
        let brute = (1..7).find(|x| (a * x) % 7 == 1).unwrap();
        assert_eq!(s(gf7, a).inv().unwrap(), s(gf7, brute));
    }
    assert_eq!(s(gf7, 3).inv().unwrap(), s(gf7, 5));
}

#[test]
fn composite_and_oversized_moduli_are_rejected() {
    assert!(Field::prime(4).is_err());
    assert!(Field::prime(1).is_err());
    assert!(Field::prime((1 << 31) + 11).is_err());
    assert!(Field::prime((1 << 31) - 1).is_ok());
}

#[test]
fn scalar_literals() {
    assert_eq!(Q.parse_scalar("-3/6").ok(), None);
    assert!(Q.parse_scalar("1/0").is_err());
    assert!(Q.parse_scalar("1/-2").is_err());
    assert_eq!(Q.parse_scalar("-1/2").unwrap(), rat(-1, 2));
    assert_eq!(Q.parse_scalar("7").unwrap(), s(Q, 7));
    assert_eq!(gf5().parse_scalar("4").unwrap(), s(gf5(), -1));
    assert!(gf5().parse_scalar("5").is_err());
    assert!(gf5().parse_scalar("1/2").is_err());
    for v in [rat(-7, 3), rat(0, 1), s(gf5(), 3)] {
        assert_eq!(v.field().parse_scalar(&v.literal()).unwrap(), v);
    }
}

#[test]
fn kernel_of_small_matrices() {
    assert!(kernel_basis(&Matrix::identity(Q, 4)).is_empty());
    assert_eq!(kernel_basis(&Matrix::zeros(Q, 2, 3)).len(), 3);
    let a = Matrix::from_i64(Q, 2, 3, &[1, 1, 0, 0, 0, 1]);
    assert_eq!(kernel_basis(&a), vec![vec_of(Q, &[-1, 1, 0])]);
}

#[test]
fn solve_examples() {
    let v = vec_of(Q, &[3, -1, 2]);
    let sol = solve_linear(&Matrix::identity(Q, 3), &v).unwrap().unwrap();
    assert_eq!((sol.vector, sol.unique), (v, true));

    let sol = solve_linear(&Matrix::from_i64(Q, 1, 2, &[1, 1]), &[s(Q, 2)]).unwrap().unwrap();
    assert_eq!((sol.vector, sol.unique), (vec_of(Q, &[2, 0]), false));

    assert!(solve_linear(&Matrix::from_i64(Q, 1, 1, &[0]), &[s(Q, 1)]).unwrap().is_none());
    assert!(matches!(
        solve_linear(&Matrix::identity(Q, 2), &[s(Q, 1)]),
        Err(AlgebraError::ShapeMismatch(_))
    ));
}

#[test]
fn products_of_small_matrices() {
    let m = Matrix::from_i64(Q, 3, 2, &[1, 2, 3, 4, 5, 6]);
    assert_eq!(mat_mul(&Matrix::identity(Q, 3), &m).unwrap(), m);
    let flip = Matrix::from_i64(Q, 2, 2, &[0, 1, 1, 0]);
    assert!((&flip * &flip).is_identity());
    assert!(mat_mul(&m, &m).is_err());
    assert_eq!(kron(&Matrix::identity(Q, 2), &Matrix::identity(Q, 3)).unwrap(), Matrix::identity(Q, 6));
    assert_eq!(Matrix::scalar(s(Q, 2)).kron(&m), m.scale(&s(Q, 2)));
    assert!(kron(&m, &Matrix::identity(gf5(), 1)).is_err());
}

#[test]
fn kron_index_convention_is_left_major() {
    let a = Matrix::from_i64(Q, 2, 1, &[1, 2]);
    let b = Matrix::from_i64(Q, 3, 1, &[10, 20, 30]);
    let k = a.kron(&b);
    for i in 0..2 {
        for j in 0..3 {
            assert_eq!(k.get(i * 3 + j, 0), &(a.get(i, 0) * b.get(j, 0)));
        }
    }
}

#[test]
fn swap_exchanges_tensor_factors() {
    let u = Matrix::from_i64(Q, 2, 1, &[1, 2]);
    let v = Matrix::from_i64(Q, 3, 1, &[5, 7, 11]);
    assert_eq!(&Matrix::swap(Q, 2, 3) * &u.kron(&v), v.kron(&u));
}

proptest! {
    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a - &a, Q.zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(b.try_div(&a).unwrap(), &b * &a.inv().unwrap());
        }
    }

    #[test]
    fn residue_arithmetic_matches_integer_oracle(p in prop::sample::select(vec![2u64, 3, 5, 7, 13, 2_147_483_647]), a in any::<i64>(), b in any::<i64>()) {
        let f = Field::prime(p).unwrap();
        let (x, y) = (Scalar::from_i64(f, a), Scalar::from_i64(f, b));
        let m = p as i128;
        let reduce = |v: i128| Scalar::from_i64(f, v.rem_euclid(m) as i64);
        prop_assert_eq!(&x + &y, reduce(a as i128 + b as i128));
        prop_assert_eq!(&x - &y, reduce(a as i128 - b as i128));
        prop_assert_eq!(&x * &y, reduce((a as i128 % m) * (b as i128 % m)));
        prop_assert_eq!(-&x, reduce(-(a as i128)));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn mat_mul_matches_naive_loops(a in matrix_entries(4, 4), b in matrix_entries(4, 4)) {
        let f = gf5();
        let naive: Vec<i64> = (0..4)
            .flat_map(|i| {
                let (a, b) = (&a, &b);
                (0..4).map(move |j| (0..4).map(|k| a[i * 4 + k] * b[k * 4 + j]).sum::<i64>())
            })
            .collect();
        let got = mat_mul(&Matrix::from_i64(f, 4, 4, &a), &Matrix::from_i64(f, 4, 4, &b)).unwrap();
        prop_assert_eq!(got, Matrix::from_i64(f, 4, 4, &naive));
    }

    #[test]
    fn kron_mixed_product(a in matrix_entries(2, 3), b in matrix_entries(2, 2), c in matrix_entries(3, 2), d in matrix_entries(2, 1)) {
        let m = |r, cl, e: &[i64]| Matrix::from_i64(Q, r, cl, e);
        let (a, b, c, d) = (m(2, 3, &a), m(2, 2, &b), m(3, 2, &c), m(2, 1, &d));
        prop_assert_eq!(&a.kron(&b) * &c.kron(&d), (&a * &c).kron(&(&b * &d)));
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in 1usize..5, cols in 1usize..6, seed in matrix_entries(5, 6)) {
        let a = Matrix::from_i64(Q, rows, cols, &seed[..rows * cols]);
        let basis = kernel_basis(&a);
        prop_assert_eq!(basis.len(), cols - a.rank());
        for v in &basis {
            prop_assert!(a.apply(v).iter().all(Scalar::is_zero));
        }
        let stacked = Matrix::from_rows(Q, cols, basis.clone()).unwrap();
        prop_assert_eq!(stacked.rank(), basis.len());
        prop_assert_eq!(kernel_basis(&a), basis);
    }

    #[test]
    fn kernel_size_matches_enumeration_over_gf3(rows in 1usize..4, cols in 1usize..5, seed in matrix_entries(3, 4)) {
        let f = Field::prime(3).unwrap();
        let entries = &seed[..rows * cols];
        let null_count = all_vectors(3, cols).iter().filter(|v| apply_mod(entries, rows, cols, v, 3).iter().all(|&c| c == 0)).count();
        let dim = kernel_basis(&Matrix::from_i64(f, rows, cols, entries)).len();
        prop_assert_eq!(null_count, 3usize.pow(dim as u32));
    }

    #[test]
    fn solve_agrees_with_enumeration_over_gf3(rows in 1usize..4, cols in 1usize..4, seed in matrix_entries(3, 3), rhs in proptest::collection::vec(0i64..3, 3)) {
        let f = Field::prime(3).unwrap();
        let entries = &seed[..rows * cols];
        let rhs = &rhs[..rows];
        let solutions: Vec<Vec<i64>> = all_vectors(3, cols).into_iter().filter(|v| apply_mod(entries, rows, cols, v, 3) == rhs).collect();
        let a = Matrix::from_i64(f, rows, cols, entries);
        match solve_linear(&a, &vec_of(f, rhs)).unwrap() {
            None => prop_assert!(solutions.is_empty()),
            Some(sol) => {
                prop_assert_eq!(a.apply(&sol.vector), vec_of(f, rhs));
                prop_assert_eq!(sol.unique, solutions.len() == 1);
            }
        }
    }

    #[test]
    fn inverse_is_two_sided(seed in matrix_entries(3, 3)) {
        let a = Matrix::from_i64(Q, 3, 3, &seed);
        match a.inverse() {
            Some(inv) => {
                prop_assert!((&a * &inv).is_identity());
                prop_assert!((&inv * &a).is_identity());
            }
            None => prop_assert!(a.rank() < 3),
        }
    }
}
