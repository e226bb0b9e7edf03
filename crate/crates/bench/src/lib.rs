//! Inputs shared by the benchmarks.

use xmod_hopf::xi::{mk_from_h_action, mk_trivial};
use xmod_hopf::{CrossedModule, Field, FiniteGroup, GradedHopfCoalgebra, HopfXiCoalgebra, Matrix, Scalar};

/// Z/3 = {0, 3, 4} inside S3.
pub fn z3_in_s3() -> CrossedModule {
    let s3 = FiniteGroup::symmetric(3).expect("S3");
    let (_, emb) = s3.subgroup(&[0, 3, 4]).expect("normal subgroup");
    CrossedModule::inclusion(emb).expect("inclusion")
}

pub fn k_xi_s3(field: Field) -> HopfXiCoalgebra {
    mk_trivial(field, &z3_in_s3())
}

/// k[Z/2] over Z/3 ◁ S3, twisted by the sign of each permutation.
pub fn a_rho_s3(field: Field) -> HopfXiCoalgebra {
    let kz2 = GradedHopfCoalgebra::group_algebra(field, &FiniteGroup::cyclic(2).expect("Z/2"));
    let signs = [1, -1, -1, 1, 1, -1];
    let rho: Vec<Matrix> = signs.iter().map(|&s| Matrix::from_i64(field, 2, 2, &[1, 0, 0, s])).collect();
    mk_from_h_action(&z3_in_s3(), &kz2, &rho).expect("h-action")
}

/// A dense `n × n` matrix with small deterministic entries and rank below `n`.
pub fn dense(field: Field, n: usize) -> Matrix {
    Matrix::from_fn(field, n, n, |i, j| {
        let v = ((i * 7 + j * 13) % 11) as i64 - 5;
        if i == n - 1 {
            Scalar::from_i64(field, (j % 3) as i64 + 1)
        } else {
            Scalar::from_i64(field, v)
        }
    })
}
