mod common;

use common::*;
use xmod_hopf::rep::{compose_homs, dual_module, e_direct_sum, hom_space, is_hom, pullback_phi_e, tensor_homs, tensor_modules, validate_module};
use xmod_hopf::xi::{mk_from_h_action, mk_trivial};
use xmod_hopf::{
    AModule, AlgebraError, CrossedModule, FiniteGroup, GradedHom, GradedHopfCoalgebra, GrouplikeFamily, HopfXiCoalgebra, Matrix, Scalar,
};

fn k_at(a: &HopfXiCoalgebra, x: usize) -> AModule {
    AModule::concentrated(a, x, a.counit().clone()).unwrap()
}

/// `k_1`, `k_h`, `k_1 ⊕ k_h` and `k_h ⊕ k_h` over the trivial structure.
fn universe(a: &HopfXiCoalgebra) -> Vec<AModule> {
    let (k1, kh) = (k_at(a, 0), k_at(a, 1));
    vec![
        k1.clone(),
        kh.clone(),
        e_direct_sum(a, &[k1, kh.clone()], 0).module,
        e_direct_sum(a, &[kh.clone(), kh], 0).module,
    ]
}

fn coordinates(h: &GradedHom) -> Vec<Scalar> {
    h.blocks.iter().flat_map(|b| b.data().to_vec()).collect()
}

fn span_contains(basis: &[GradedHom], target: &GradedHom) -> bool {
    if basis.is_empty() {
        return target.is_zero();
    }
    let f = target.blocks.first().map_or(Q, Matrix::field);
    let cols: Vec<Vec<Scalar>> = basis.iter().map(coordinates).collect();
    let m = Matrix::from_rows(f, cols[0].len(), cols).unwrap().transpose();
    m.solve_linear(&coordinates(target)).unwrap().is_some()
}

#[test]
fn hom_dimensions_follow_the_groupoid() {
    let a = k_xi(Q);
    let cm = a.cm().clone();
    for x in 0..2 {
        for y in 0..2 {
            for e in 0..2 {
                let dim = hom_space(&a, &k_at(&a, x), &k_at(&a, y), e).len();
                assert_eq!(dim, usize::from(y == cm.shift(e, x)), "Hom^{e}(k_{x}, k_{y})");
            }
        }
    }
}

#[test]
fn nonzero_homs_force_target_degree() {
    let a = k_xi_s3(Q);
    let cm = a.cm().clone();
    for x in 0..6 {
        for y in 0..6 {
            for e in 0..3 {
                let dim = hom_space(&a, &k_at(&a, x), &k_at(&a, y), e).len();
                if dim > 0 {
                    assert_eq!(y, cm.shift(e, x));
                }
            }
        }
    }
}

#[test]
fn hom_bases_are_homs_and_contain_identity() {
    for a in [k_xi(Q), a_rho(Q), a_rho(gf5())] {
        let mut modules = universe(&a);
        modules.push(AModule::regular(&a, 0));
        modules.push(AModule::regular(&a, 1));
        for m in &modules {
            assert!(validate_module(&a, m).unwrap().is_valid());
            let ends = hom_space(&a, m, m, 0);
            assert!(span_contains(&ends, &GradedHom::identity(&a, m)));
            for n in &modules {
                for e in 0..2 {
                    for f in hom_space(&a, m, n, e) {
                        assert!(is_hom(&a, m, n, &f));
                    }
                }
            }
        }
    }
}

#[test]
fn composition_and_tensor_degree_laws() {
    let a = k_xi(Q);
    let (cm, e_group) = (a.cm().clone(), a.e().clone());
    let objects = universe(&a);
    for m in &objects {
        for n in &objects {
            for p in &objects {
                for e in 0..2 {
                    for f in 0..2 {
                        for alpha in hom_space(&a, m, n, e) {
                            for beta in hom_space(&a, n, p, f) {
                                let c = compose_homs(&a, &beta, &alpha).unwrap();
                                assert_eq!(c.degree, e_group.mul(f, e));
                                assert!(is_hom(&a, m, p, &c));
                            }
                        }
                    }
                }
            }
        }
    }
    for m in &objects {
        for n in &objects {
            for p in &objects {
                for q in &objects {
                    for e in 0..2 {
                        for f in 0..2 {
                            for alpha in hom_space(&a, m, n, e) {
                                for beta in hom_space(&a, p, q, f) {
                                    let result = tensor_homs(&a, (m, n, &alpha), (p, q, &beta));
                                    let Some(x0) = m.degree() else {
                                        assert!(matches!(result, Err(AlgebraError::NotHomogeneous)));
                                        continue;
                                    };
                                    let t = result.unwrap();
                                    assert_eq!(t.degree, cm.twisted_product(e, x0, f));
                                    let (mp, nq) = (tensor_modules(&a, m, p), tensor_modules(&a, n, q));
                                    assert!(is_hom(&a, &mp, &nq, &t));
                                    assert!(!t.is_zero());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn arrow_and_its_inverse_compose_to_identity() {
    let a = k_xi(Q);
    let (k1, kh) = (k_at(&a, 0), k_at(&a, 1));
    let there = hom_space(&a, &k1, &kh, 1).pop().unwrap();
    let back = hom_space(&a, &kh, &k1, 1).pop().unwrap();
    let loop_ = compose_homs(&a, &back, &there).unwrap();
    assert_eq!(loop_.degree, 0);
    let scale = loop_.blocks[0].get(0, 0).clone();
    assert!(!scale.is_zero());
    assert_eq!(
        GradedHom {
            degree: 0,
            blocks: loop_.blocks.iter().map(|b| b.scale(&scale.inv().unwrap())).collect()
        },
        GradedHom::identity(&a, &k1)
    );
    let id = GradedHom::identity(&a, &kh);
    assert_eq!(compose_homs(&a, &id, &there).unwrap(), there);
}

/// `dim Hom^d(⊕^e X_a, ⊕^f Y_b) = Σ_{a,b} dim Hom^{f⁻¹de}(X_a, Y_b)`.
fn check_direct_sum_count(a: &HopfXiCoalgebra, xs: &[AModule], ys: &[AModule]) {
    let g = a.e();
    for d in g.elements() {
        for e in g.elements() {
            for f in g.elements() {
                let left = hom_space(a, &e_direct_sum(a, xs, e).module, &e_direct_sum(a, ys, f).module, d).len();
                let shifted = g.mul(g.mul(g.inv(f), d), e);
                let right: usize = xs
                    .iter()
                    .flat_map(|x| ys.iter().map(move |y| (x, y)))
                    .map(|(x, y)| hom_space(a, x, y, shifted).len())
                    .sum();
                assert_eq!(left, right, "(d,e,f)=({d},{e},{f})");
            }
        }
    }
}

#[test]
fn direct_sum_hom_count() {
    let a = k_xi(Q);
    let objs = universe(&a);
    check_direct_sum_count(&a, &objs[..2], &objs[1..]);
    check_direct_sum_count(&a, &[objs[2].clone()], &[objs[0].clone(), objs[3].clone()]);
}

#[test]
fn direct_sum_hom_count_over_nonabelian_labels() {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let a = mk_trivial(Q, &CrossedModule::identity(&s3));
    let xs = [k_at(&a, 0), k_at(&a, 2)];
    let ys = [k_at(&a, 1), k_at(&a, 4), k_at(&a, 5)];
    check_direct_sum_count(&a, &xs, &ys);
}

#[test]
fn direct_sum_injections_and_projections() {
    for a in [k_xi(Q), a_rho(Q)] {
        let family = vec![AModule::regular(&a, 0), k_at(&a, 1), AModule::unit(&a)];
        for e in 0..2 {
            let sum = e_direct_sum(&a, &family, e);
            assert!(validate_module(&a, &sum.module).unwrap().is_valid());
            let mut total: Option<Vec<Matrix>> = None;
            for (i, (q, m)) in sum.injections.iter().zip(&family).enumerate() {
                assert_eq!(q.degree, e);
                assert!(is_hom(&a, m, &sum.module, q));
                for (j, p) in sum.projections.iter().enumerate() {
                    assert_eq!(p.degree, a.e().inv(e));
                    assert!(is_hom(&a, &sum.module, &family[j], p));
                    let pq = compose_homs(&a, p, q).unwrap();
                    if i == j {
                        assert_eq!(pq, GradedHom::identity(&a, m));
                    } else {
                        assert!(pq.is_zero());
                    }
                }
                let qp = compose_homs(&a, q, &sum.projections[i]).unwrap();
                total = Some(match total {
                    None => qp.blocks,
                    Some(t) => t.iter().zip(&qp.blocks).map(|(x, y)| x + y).collect(),
                });
            }
            assert!(total.unwrap().iter().all(Matrix::is_identity));
        }
        assert_eq!(e_direct_sum(&a, &[], 1).module.total_dim(), 0);
    }
}

#[test]
fn shifted_direct_sum_of_unit() {
    let a = k_xi(Q);
    let sum = e_direct_sum(&a, &[k_at(&a, 0)], 1);
    assert_eq!(sum.module.degree(), Some(1));
    assert_eq!(hom_space(&a, &k_at(&a, 0), &sum.module, 1).len(), 1);
}

#[test]
fn pullbacks_compose() {
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let signs: Vec<i64> = (0..6).map(sign_s3).collect();
    let kz2 = GradedHopfCoalgebra::group_algebra(Q, &z(2));
    let a = mk_from_h_action(&CrossedModule::identity(&s3), &kz2, &sign_rho(Q, &signs)).unwrap();
    let n = e_direct_sum(&a, &[AModule::regular(&a, 1), AModule::regular(&a, 3), AModule::unit(&a)], 0).module;
    let g = a.e();
    for e in g.elements() {
        for f in g.elements() {
            assert_eq!(pullback_phi_e(&a, &pullback_phi_e(&a, &n, e), f), pullback_phi_e(&a, &n, g.mul(e, f)));
        }
        assert!(validate_module(&a, &pullback_phi_e(&a, &n, e)).unwrap().is_valid());
    }
    assert_eq!(pullback_phi_e(&a, &n, 0), n);
}

#[test]
fn pullback_moves_degree() {
    let a = k_xi(Q);
    assert_eq!(pullback_phi_e(&a, &k_at(&a, 1), 1).degree(), Some(0));
}

#[test]
fn tensor_products_of_modules() {
    let a = k_xi(Q);
    for x in 0..2 {
        for y in 0..2 {
            let t = tensor_modules(&a, &k_at(&a, x), &k_at(&a, y));
            assert_eq!(t, k_at(&a, x ^ y));
        }
    }
    let b = a_rho(Q);
    let unit = AModule::unit(&b);
    let (m, n) = (AModule::regular(&b, 0), AModule::regular(&b, 1));
    assert_eq!(tensor_modules(&b, &unit, &n), n);
    assert_eq!(tensor_modules(&b, &n, &unit), n);
    let p = e_direct_sum(&b, &[m.clone(), n.clone()], 0).module;
    let left = tensor_modules(&b, &tensor_modules(&b, &m, &n), &p);
    let right = tensor_modules(&b, &m, &tensor_modules(&b, &n, &p));
    assert_eq!(left.dims(), right.dims());
    assert!(validate_module(&b, &left).unwrap().is_valid());
    let cross = hom_space(&b, &left, &right, 0).len();
    assert_eq!(cross, hom_space(&b, &left, &left, 0).len());
    assert_eq!(cross, hom_space(&b, &right, &right, 0).len());
}

#[test]
fn sign_representation_over_bicharacter_algebra() {
    // α(g·m) = ω(e,g) g·α(m) with g acting by −1 forces ω(e,g) = 1
    let a = k_omega(Q);
    let sign = AModule::new(&a, vec![Matrix::from_i64(Q, 1, 2, &[1, -1])]).unwrap();
    assert!(validate_module(&a, &sign).unwrap().is_valid());
    assert_eq!(hom_space(&a, &sign, &sign, 0).len(), 1);
    assert_eq!(hom_space(&a, &sign, &sign, 1).len(), 0);
    let triv = AModule::unit(&a);
    assert_eq!(hom_space(&a, &triv, &sign, 1).len(), 1);
    assert_eq!(hom_space(&a, &sign, &triv, 1).len(), 1);
}

#[test]
fn broken_module_is_witnessed() {
    let a = a_rho(Q);
    let m = AModule::regular(&a, 0);
    let doubled = AModule::new(&a, m.actions().iter().map(|r| r.scale(&s(Q, 2))).collect()).unwrap();
    let report = validate_module(&a, &doubled).unwrap();
    assert!(report.find("module unit").is_some_and(|c| c.violations > 0));
}

#[test]
fn dual_modules_satisfy_zig_zags() {
    let a = k_xi(Q);
    let pm = GrouplikeFamily(vec![vec_of(Q, &[1]), vec_of(Q, &[-1])]);
    for m in universe(&a) {
        for pivot in [a.base().unit_family(), pm.clone()] {
            match dual_module(&a, &m, &pivot) {
                Ok(d) => {
                    assert!(d.report.is_valid(), "{}", d.report);
                    assert_eq!(d.module.degree(), m.degree().map(|x| a.h().inv(x)));
                    assert!(validate_module(&a, &d.module).unwrap().is_valid());
                }
                Err(err) => {
                    assert!(m.degree().is_none());
                    assert!(matches!(err, AlgebraError::NotHomogeneous));
                }
            }
        }
    }
    let unit = AModule::unit(&a);
    let d = dual_module(&a, &unit, &a.base().unit_family()).unwrap();
    assert_eq!(d.module, unit);
    assert!(d.lev.is_identity() && d.rev.is_identity());

    let b = a_rho(Q);
    for x in 0..2 {
        let d = dual_module(&b, &AModule::regular(&b, x), &b.base().unit_family()).unwrap();
        assert!(d.report.is_valid());
        assert_eq!(d.module.degree(), Some(x));
    }
}

#[test]
fn pivotal_duals_over_sweedler() {
    let a = sweedler_rho(Q);
    let g = GrouplikeFamily(vec![vec_of(Q, &[0, 1, 0, 0]); 2]);
    assert!(a.base().is_pivotal_element(&g).unwrap().is_valid());
    assert!(!a.base().is_pivotal_element(&a.base().unit_family()).unwrap().is_valid());
    for x in 0..2 {
        let m = AModule::regular(&a, x);
        let d = dual_module(&a, &m, &g).unwrap();
        assert!(d.report.is_valid(), "{}", d.report);
        assert!(matches!(dual_module(&a, &m, &a.base().unit_family()), Err(AlgebraError::NotPivotal(_))));
    }
}
