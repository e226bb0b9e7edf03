#![allow(dead_code)]

use xmod_hopf::xi::{mk_bicharacter_group_algebra, mk_from_h_action, mk_trivial};
use xmod_hopf::{CrossedModule, Field, FiniteGroup, GradedHopfCoalgebra, HopfXiCoalgebra, Matrix, Scalar};

pub const Q: Field = Field::Rational;

pub fn gf5() -> Field {
    Field::prime(5).unwrap()
}

pub fn fields() -> [Field; 2] {
    [Q, gf5()]
}

pub fn s(field: Field, v: i64) -> Scalar {
    Scalar::from_i64(field, v)
}

pub fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n).unwrap()
}

/// Z/3 = {0, 3, 4} inside S3.
pub fn z3_in_s3() -> CrossedModule {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let (_, emb) = s3.subgroup(&[0, 3, 4]).unwrap();
    CrossedModule::inclusion(emb).unwrap()
}

/// The four crossed modules of the test universe, with short names.
pub fn crossed_modules() -> Vec<(&'static str, CrossedModule)> {
    vec![
        ("1 -> Z/2", CrossedModule::trivial_over(&z(2))),
        ("id Z/2", CrossedModule::identity(&z(2))),
        ("Z/2 -> 1", CrossedModule::abelian_to_point(&z(2)).unwrap()),
        ("Z/3 <| S3", z3_in_s3()),
    ]
}

/// Sign of a permutation from its lexicographic index in S3, by counting
/// inversions of the explicit permutation list.
pub fn sign_s3(x: usize) -> i64 {
    let perms = xmod_hopf::group::permutations(3);
    let p = &perms[x];
    let inversions = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ω(e, g) = (−1)^{eg}` on Z/2 × Z/2.
pub fn k_omega(field: Field) -> HopfXiCoalgebra {
    let (one, m) = (s(field, 1), s(field, -1));
    mk_bicharacter_group_algebra(field, &z(2), &z(2), &[vec![one.clone(), one.clone()], vec![one, m]]).unwrap()
}

pub fn k_xi(field: Field) -> HopfXiCoalgebra {
    mk_trivial(field, &CrossedModule::identity(&z(2)))
}

pub fn k_xi_s3(field: Field) -> HopfXiCoalgebra {
    mk_trivial(field, &z3_in_s3())
}

pub fn diag(field: Field, entries: &[i64]) -> Matrix {
    let n = entries.len();
    Matrix::from_fn(field, n, n, |i, j| if i == j { s(field, entries[i]) } else { field.zero() })
}

/// `ρ_x` on k[Z/2] fixing 1 and sending g to `sign(x)·g`.
pub fn sign_rho(field: Field, signs: &[i64]) -> Vec<Matrix> {
    signs.iter().map(|&v| diag(field, &[1, v])).collect()
}

/// `A_Ξ^ρ` for `ℚ[Z/2]` (or GF(p)[Z/2]) over `id: Z/2 → Z/2`, `ρ_h(g) = −g`.
pub fn a_rho(field: Field) -> HopfXiCoalgebra {
    let hopf = GradedHopfCoalgebra::group_algebra(field, &z(2));
    mk_from_h_action(&CrossedModule::identity(&z(2)), &hopf, &sign_rho(field, &[1, -1])).unwrap()
}

/// `A_Ξ^ρ` over Z/3 ◁ S3 with `ρ_x(g) = sign(x)·g`.
pub fn a_rho_s3(field: Field) -> HopfXiCoalgebra {
    let hopf = GradedHopfCoalgebra::group_algebra(field, &z(2));
    let signs: Vec<i64> = (0..6).map(sign_s3).collect();
    mk_from_h_action(&z3_in_s3(), &hopf, &sign_rho(field, &signs)).unwrap()
}

/// The structures on which the integral and structure theorems are checked.
pub fn integral_universe(field: Field) -> Vec<(&'static str, HopfXiCoalgebra)> {
    vec![
        ("k^w[Z/2]", k_omega(field)),
        ("k_xi id Z/2", k_xi(field)),
        ("k_xi Z/3 <| S3", k_xi_s3(field)),
        ("A_rho", a_rho(field)),
        ("A_rho S3", a_rho_s3(field)),
    ]
}

pub fn vec_of(field: Field, v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| s(field, x)).collect()
}

/// Sweedler's algebra on the basis `1, g, x, gx`: `g² = 1`, `x² = 0`,
/// `xg = −gx`, `Δ(x) = x⊗1 + g⊗x`.
pub fn sweedler(field: Field) -> GradedHopfCoalgebra {
    // products e_i e_j as (coefficient, basis index)
    let table: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (1, 0), (1, 3), (1, 2)],
        [(1, 2), (-1, 3), (0, 0), (0, 0)],
        [(1, 3), (-1, 2), (0, 0), (0, 0)],
    ];
    let c: Vec<Vec<Vec<Scalar>>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let (coef, k) = table[i][j];
                    (0..4).map(|l| if l == k { s(field, coef) } else { field.zero() }).collect()
                })
                .collect()
        })
        .collect();
    let alg = xmod_hopf::ComponentAlgebra::from_structure_constants(field, &c, vec_of(field, &[1, 0, 0, 0])).unwrap();
    let mut delta = Matrix::zeros(field, 16, 4);
    for (col, terms) in [vec![(0, 0)], vec![(1, 1)], vec![(2, 0), (1, 2)], vec![(3, 1), (0, 3)]]
        .into_iter()
        .enumerate()
    {
        for (i, j) in terms {
            delta.set(i * 4 + j, col, field.one());
        }
    }
    let counit = Matrix::from_i64(field, 1, 4, &[1, 1, 0, 0]);
    GradedHopfCoalgebra::classical(alg, delta, counit, None).unwrap().with_antipode().unwrap()
}

/// Sweedler's algebra as a structure over the trivial crossed module.
pub fn sweedler_classical(field: Field) -> HopfXiCoalgebra {
    let one = FiniteGroup::trivial();
    HopfXiCoalgebra::new(CrossedModule::trivial_over(&one), sweedler(field), vec![Matrix::identity(field, 4)]).unwrap()
}

/// `A_Ξ^ρ` of Sweedler's algebra over `id: Z/2 → Z/2` with `ρ_h(x) = −x`.
pub fn sweedler_rho(field: Field) -> HopfXiCoalgebra {
    let rho = vec![Matrix::identity(field, 4), diag(field, &[1, 1, -1, -1])];
    mk_from_h_action(&CrossedModule::identity(&z(2)), &sweedler(field), &rho).unwrap()
}
