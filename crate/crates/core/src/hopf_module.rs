//! Hopf Ξ-modules, coinvariants, the structure isomorphism `A ⊗ M^{coA} ≅ M`,
//! Ξ-integrals and the distinguished Ξ-grouplike element.

use crate::error::{AlgebraError, Result};
use crate::graded::{expect_eq, GradedHopfCoalgebra, GrouplikeFamily};
use crate::linalg::{Matrix, Scalar};
use crate::report::{Check, ValidationReport};
use crate::xi::HopfXiCoalgebra;

/// Families `r_x: A_x⊗M_x → M_x`, `ρ_{x,y}: M_{xy} → A_x⊗M_y` (at `x·|H|+y`)
/// and `ψ_{x,e}: M_x → M_{Ξ(e)x}` (at `x·|E|+e`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfXiModule {
    dims: Vec<usize>,
    action: Vec<Matrix>,
    coaction: Vec<Matrix>,
    psi: Vec<Matrix>,
}

impl HopfXiModule {
    /// Shape-checked constructor; see [`validate_hopf_xi_module`].
    pub fn new(a: &HopfXiCoalgebra, dims: Vec<usize>, action: Vec<Matrix>, coaction: Vec<Matrix>, psi: Vec<Matrix>) -> Result<Self> {
        let (cm, h, e) = (a.cm(), a.h(), a.e());
        let n = h.order();
        if dims.len() != n || action.len() != n || coaction.len() != n * n || psi.len() != n * e.order() {
            return Err(AlgebraError::shape("family sizes do not match H and E"));
        }
        let f = a.field();
        if let Some(m) = action.iter().chain(&coaction).chain(&psi).find(|m| m.field() != f) {
            return Err(AlgebraError::MixedFields(f, m.field()));
        }
        for x in h.elements() {
            if action[x].shape() != (dims[x], a.dim(x) * dims[x]) {
                return Err(AlgebraError::shape(format!("r_{x} is {:?}", action[x].shape())));
            }
            for y in h.elements() {
                let want = (a.dim(x) * dims[y], dims[h.mul(x, y)]);
                if coaction[x * n + y].shape() != want {
                    return Err(AlgebraError::shape(format!(
                        "ρ_({x},{y}) is {:?}, expected {want:?}",
                        coaction[x * n + y].shape()
                    )));
                }
            }
            for g in e.elements() {
                let want = (dims[cm.shift(g, x)], dims[x]);
                if psi[x * e.order() + g].shape() != want {
                    return Err(AlgebraError::shape(format!(
                        "ψ_({x},{g}) is {:?}, expected {want:?}",
                        psi[x * e.order() + g].shape()
                    )));
                }
            }
        }
        Ok(HopfXiModule { dims, action, coaction, psi })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.action[x]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    pub fn coactions(&self) -> &[Matrix] {
        &self.coaction
    }

    pub fn psis(&self) -> &[Matrix] {
        &self.psi
    }

    pub fn coaction(&self, a: &HopfXiCoalgebra, x: usize, y: usize) -> &Matrix {
        &self.coaction[x * a.h().order() + y]
    }

    pub fn psi(&self, a: &HopfXiCoalgebra, x: usize, e: usize) -> &Matrix {
        &self.psi[x * a.e().order() + e]
    }
}

/// Module, comodule, intertwining and `ψ`-compatibility axioms.
pub fn validate_hopf_xi_module(a: &HopfXiCoalgebra, m: &HopfXiModule) -> Result<ValidationReport> {
    HopfXiModule::new(a, m.dims.clone(), m.action.clone(), m.coaction.clone(), m.psi.clone())?;
    let (cm, h, e, f) = (a.cm(), a.h(), a.e(), a.field());
    let id = |d: usize| Matrix::identity(f, d);
    let ida = |x: usize| id(a.dim(x));
    let idm = |x: usize| id(m.dims[x]);

    let mut massoc = Check::new("module associativity");
    let mut munit = Check::new("module unit");
    for x in h.elements() {
        let (r, alg) = (&m.action[x], a.component(x));
        expect_eq(&mut massoc, &(r * &alg.mul().kron(&idm(x))), &(r * &ida(x).kron(r)), || format!("x={x}"));
        expect_eq(&mut munit, &(r * &alg.unit().kron(&idm(x))), &idm(x), || format!("x={x}"));
    }

    let mut coassoc = Check::new("comodule coassociativity");
    for x in h.elements() {
        for y in h.elements() {
            for z in h.elements() {
                let lhs = &a.coproduct(x, y).kron(&idm(z)) * m.coaction(a, h.mul(x, y), z);
                let rhs = &ida(x).kron(m.coaction(a, y, z)) * m.coaction(a, x, h.mul(y, z));
                expect_eq(&mut coassoc, &lhs, &rhs, || format!("(x,y,z)=({x},{y},{z})"));
            }
        }
    }
    let mut counit = Check::new("comodule counit");
    for x in h.elements() {
        let lhs = &a.counit().kron(&idm(x)) * m.coaction(a, 0, x);
        expect_eq(&mut counit, &lhs, &idm(x), || format!("x={x}"));
    }

    let mut inter = Check::new("coaction is action-compatible");
    for x in h.elements() {
        for y in h.elements() {
            let xy = h.mul(x, y);
            let rho = m.coaction(a, x, y);
            let lhs = rho * &m.action[xy];
            let flip = ida(x).kron(&Matrix::swap(f, a.dim(y), a.dim(x))).kron(&idm(y));
            let rhs = &(&a.component(x).mul().kron(&m.action[y]) * &flip) * &a.coproduct(x, y).kron(rho);
            expect_eq(&mut inter, &lhs, &rhs, || format!("(x,y)=({x},{y})"));
        }
    }

    let mut punit = Check::new("psi unit");
    let mut pcomp = Check::new("psi composition");
    let mut pact = Check::new("psi action");
    for x in h.elements() {
        expect_eq(&mut punit, m.psi(a, x, 0), &idm(x), || format!("ψ_({x},1)"));
        for g in e.elements() {
            let y = cm.shift(g, x);
            let p = m.psi(a, x, g);
            for k in e.elements() {
                expect_eq(&mut pcomp, &(m.psi(a, y, k) * p), m.psi(a, x, e.mul(k, g)), || {
                    format!("(x,e,f)=({x},{g},{k})")
                });
            }
            let rhs = &m.action[y] * &a.phi(x, g).kron(p);
            expect_eq(&mut pact, &(p * &m.action[x]), &rhs, || format!("(x,e)=({x},{g})"));
        }
    }
    let mut pco = Check::new("psi coaction");
    for x in h.elements() {
        for y in h.elements() {
            for g in e.elements() {
                for k in e.elements() {
                    let lhs = &a.phi(x, g).kron(m.psi(a, y, k)) * m.coaction(a, x, y);
                    let rhs = m.coaction(a, cm.shift(g, x), cm.shift(k, y)) * m.psi(a, h.mul(x, y), cm.twisted_product(g, x, k));
                    expect_eq(&mut pco, &lhs, &rhs, || format!("(x,y,e,f)=({x},{y},{g},{k})"));
                }
            }
        }
    }
    Ok(ValidationReport {
        checks: vec![massoc, munit, coassoc, counit, inter, punit, pcomp, pact, pco],
    })
}

/// `A ⊗ V` with `μ_x⊗id`, `Δ_{x,y}⊗id` and `ϕ_{x,e}⊗id`.
pub fn trivial_hopf_module(a: &HopfXiCoalgebra, v_dim: usize) -> HopfXiModule {
    let (h, e, f) = (a.h(), a.e(), a.field());
    let iv = Matrix::identity(f, v_dim);
    let dims = h.elements().map(|x| a.dim(x) * v_dim).collect();
    let action = h.elements().map(|x| a.component(x).mul().kron(&iv)).collect();
    let mut coaction = Vec::new();
    let mut psi = Vec::new();
    for x in h.elements() {
        for y in h.elements() {
            coaction.push(a.coproduct(x, y).kron(&iv));
        }
        for g in e.elements() {
            psi.push(a.phi(x, g).kron(&iv));
        }
    }
    HopfXiModule { dims, action, coaction, psi }
}

/// A basis of `M^{coA}`; each element is a family `(m_x)_x`.
pub fn coinvariants(a: &HopfXiCoalgebra, m: &HopfXiModule) -> Vec<Vec<Vec<Scalar>>> {
    let (cm, h, e, f) = (a.cm(), a.h(), a.e(), a.field());
    let offsets: Vec<usize> = m.dims.iter().scan(0, |acc, &d| Some(std::mem::replace(acc, *acc + d))).collect();
    let total: usize = m.dims.iter().sum();
    let mut blocks: Vec<Matrix> = Vec::new();
    // ρ_{x,y} m_{xy} - (η_x ⊗ id) m_y = 0
    for x in h.elements() {
        for y in h.elements() {
            let xy = h.mul(x, y);
            let mut eq = Matrix::zeros(f, a.dim(x) * m.dims[y], total);
            let rho = m.coaction(a, x, y);
            let unit = a.component(x).unit().kron(&Matrix::identity(f, m.dims[y]));
            add_block(&mut eq, offsets[xy], rho, true);
            add_block(&mut eq, offsets[y], &unit, false);
            blocks.push(eq);
        }
    }
    // ψ_{x,e} m_x - m_{Ξ(e)x} = 0
    for x in h.elements() {
        for g in e.elements() {
            let y = cm.shift(g, x);
            let mut eq = Matrix::zeros(f, m.dims[y], total);
            add_block(&mut eq, offsets[x], m.psi(a, x, g), true);
            add_block(&mut eq, offsets[y], &Matrix::identity(f, m.dims[y]), false);
            blocks.push(eq);
        }
    }
    let refs: Vec<&Matrix> = blocks.iter().collect();
    let system = Matrix::vstack(f, total, &refs).expect("uniform columns");
    system
        .kernel_basis()
        .into_iter()
        .map(|v| h.elements().map(|x| v[offsets[x]..offsets[x] + m.dims[x]].to_vec()).collect())
        .collect()
}

/// Adds (or subtracts) `block` into the columns starting at `col`.
fn add_block(target: &mut Matrix, col: usize, block: &Matrix, add: bool) {
    for i in 0..block.rows() {
        for j in 0..block.cols() {
            let v = block.get(i, j);
            if v.is_zero() {
                continue;
            }
            let cur = target.get(i, col + j).clone();
            target.set(i, col + j, if add { &cur + v } else { &cur - v });
        }
    }
}

/// `ε^x: A_x ⊗ M^{coA} → M_x` and its inverse `ν^x = (id⊗π)ρ_{x,1}`, with
/// `π(m) = (r_z(S_z⊗id)ρ_{z⁻¹,z}(m))_z` written in the coinvariant basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureIso {
    pub coinvariants: Vec<Vec<Vec<Scalar>>>,
    pub epsilon: Vec<Matrix>,
    pub nu: Vec<Matrix>,
}

pub fn structure_iso(a: &HopfXiCoalgebra, m: &HopfXiModule) -> Result<StructureIso> {
    let (h, f) = (a.h(), a.field());
    let basis = coinvariants(a, m);
    let k = basis.len();
    let epsilon: Vec<Matrix> = h
        .elements()
        .map(|x| {
            let c = Matrix::from_fn(f, m.dims[x], k, |i, j| basis[j][x][i].clone());
            &m.action[x] * &Matrix::identity(f, a.dim(x)).kron(&c)
        })
        .collect();

    // π: M_1 → M^{coA}, stacked over z, then solved in basis coordinates
    let offsets: Vec<usize> = m.dims.iter().scan(0, |acc, &d| Some(std::mem::replace(acc, *acc + d))).collect();
    let total: usize = m.dims.iter().sum();
    let mut pi_stack = Matrix::zeros(f, total, m.dims[0]);
    for z in h.elements() {
        let zi = h.inv(z);
        let s = a.antipode_at(z)?;
        let block = &(&m.action[z] * &s.kron(&Matrix::identity(f, m.dims[z]))) * m.coaction(a, zi, z);
        pi_stack.put_block(offsets[z], 0, &block);
    }
    let flat: Vec<Vec<Scalar>> = basis.iter().map(|fam| fam.concat()).collect();
    let basis_matrix = Matrix::from_fn(f, total, k, |i, j| flat[j][i].clone());
    let mut pi = Matrix::zeros(f, k, m.dims[0]);
    for c in 0..m.dims[0] {
        let sol = basis_matrix
            .solve_linear(&pi_stack.col(c))?
            .ok_or(AlgebraError::NotInvertible { component: 0 })?;
        for (r, v) in sol.vector.into_iter().enumerate() {
            pi.set(r, c, v);
        }
    }
    let nu: Vec<Matrix> = h
        .elements()
        .map(|x| &Matrix::identity(f, a.dim(x)).kron(&pi) * m.coaction(a, x, 0))
        .collect();
    for x in h.elements() {
        let en = &epsilon[x] * &nu[x];
        let ne = &nu[x] * &epsilon[x];
        if !en.is_identity() || !ne.is_identity() {
            return Err(AlgebraError::NotInvertible { component: x });
        }
    }
    Ok(StructureIso {
        coinvariants: basis,
        epsilon,
        nu,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A family of covectors `λ_x` (each `1 × d_x`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XiIntegral {
    pub side: Side,
    pub covectors: Vec<Matrix>,
}

impl XiIntegral {
    pub fn is_zero(&self) -> bool {
        self.covectors.iter().all(Matrix::is_zero)
    }
}

/// Stacked integral conditions; unknowns are the concatenated `λ_x`.
fn integral_system(a: &HopfXiCoalgebra, side: Side) -> (Matrix, Vec<usize>) {
    let (cm, h, e, f) = (a.cm(), a.h(), a.e(), a.field());
    let dims = a.dims();
    let offsets: Vec<usize> = dims.iter().scan(0, |acc, &d| Some(std::mem::replace(acc, *acc + d))).collect();
    let total: usize = dims.iter().sum();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for x in h.elements() {
        for y in h.elements() {
            let xy = h.mul(x, y);
            let delta = a.coproduct(x, y);
            let (dx, dy) = (dims[x], dims[y]);
            match side {
                // Σ_j Δ[i·dy + j, k] λ_y[j] - η_x[i] λ_xy[k]
                Side::Left => {
                    let eta = a.component(x).unit();
                    for i in 0..dx {
                        for k in 0..dims[xy] {
                            let mut row = vec![f.zero(); total];
                            for j in 0..dy {
                                row[offsets[y] + j] = &row[offsets[y] + j] + delta.get(i * dy + j, k);
                            }
                            row[offsets[xy] + k] = &row[offsets[xy] + k] - eta.get(i, 0);
                            rows.push(row);
                        }
                    }
                }
                // Σ_i Δ[i·dy + j, k] λ_x[i] - η_y[j] λ_xy[k]
                Side::Right => {
                    let eta = a.component(y).unit();
                    for j in 0..dy {
                        for k in 0..dims[xy] {
                            let mut row = vec![f.zero(); total];
                            for i in 0..dx {
                                row[offsets[x] + i] = &row[offsets[x] + i] + delta.get(i * dy + j, k);
                            }
                            row[offsets[xy] + k] = &row[offsets[xy] + k] - eta.get(j, 0);
                            rows.push(row);
                        }
                    }
                }
            }
        }
    }
    // λ_{Ξ(e)x} ϕ_{x,e} - λ_x = 0
    for x in h.elements() {
        for g in e.elements() {
            let y = cm.shift(g, x);
            let phi = a.phi(x, g);
            for k in 0..dims[x] {
                let mut row = vec![f.zero(); total];
                for i in 0..dims[y] {
                    row[offsets[y] + i] = &row[offsets[y] + i] + phi.get(i, k);
                }
                row[offsets[x] + k] = &row[offsets[x] + k] - &f.one();
                rows.push(row);
            }
        }
    }
    (Matrix::from_rows(f, total, rows).expect("uniform rows"), offsets)
}

/// Basis of left or right Ξ-integrals.
pub fn integral_space(a: &HopfXiCoalgebra, side: Side) -> Vec<XiIntegral> {
    let (system, offsets) = integral_system(a, side);
    let f = a.field();
    system
        .kernel_basis()
        .into_iter()
        .map(|v| XiIntegral {
            side,
            covectors: a
                .h()
                .elements()
                .map(|x| Matrix::row_vector(f, v[offsets[x]..offsets[x] + a.dim(x)].to_vec()))
                .collect(),
        })
        .collect()
}

pub fn is_integral(a: &HopfXiCoalgebra, lambda: &XiIntegral) -> bool {
    if lambda.covectors.len() != a.h().order() || lambda.covectors.iter().enumerate().any(|(x, c)| c.shape() != (1, a.dim(x))) {
        return false;
    }
    let (system, _) = integral_system(a, lambda.side);
    let v: Vec<Scalar> = lambda.covectors.iter().flat_map(|c| c.row(0).to_vec()).collect();
    system.apply(&v).iter().all(Scalar::is_zero)
}

/// `λ^S_x = λ_{x⁻¹} S_{x⁻¹}`, a right integral from a left one.
pub fn antipode_transport(a: &HopfXiCoalgebra, lambda: &XiIntegral) -> Result<XiIntegral> {
    if lambda.side != Side::Left || !is_integral(a, lambda) {
        return Err(AlgebraError::NotIntegral("expected a left Ξ-integral".into()));
    }
    let h = a.h();
    let covectors = h
        .elements()
        .map(|x| Ok(&lambda.covectors[h.inv(x)] * a.antipode_at(h.inv(x))?))
        .collect::<Result<Vec<_>>>()?;
    let out = XiIntegral {
        side: Side::Right,
        covectors,
    };
    if !is_integral(a, &out) || (out.is_zero() && !lambda.is_zero()) {
        return Err(AlgebraError::NotIntegral("transported family is not a right integral".into()));
    }
    Ok(out)
}

/// The distinguished Ξ-grouplike element with its verification report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Distinguished {
    pub family: GrouplikeFamily,
    pub integral: XiIntegral,
    pub report: ValidationReport,
}

/// `g_x = (id⊗λ_1)Δ_{x,1}(a)/λ_x(a)` for a right integral `λ` and a basis
/// vector `a` with `λ_x(a) ≠ 0`, then verified against every `(x, y)`.
pub fn distinguished_grouplike(a: &HopfXiCoalgebra) -> Result<Distinguished> {
    let (h, f) = (a.h(), a.field());
    let fail = |msg: String| AlgebraError::DefiningIdentityFailed(msg);
    let lambda = integral_space(a, Side::Right)
        .into_iter()
        .next()
        .ok_or_else(|| fail("no nonzero right integral".into()))?;
    let contract = |x: usize, y: usize| -> Matrix {
        // (id ⊗ λ_y) Δ_{x,y}
        &Matrix::identity(f, a.dim(x)).kron(&lambda.covectors[y]) * a.coproduct(x, y)
    };
    let mut family = Vec::with_capacity(h.order());
    for x in h.elements() {
        let lx = &lambda.covectors[x];
        let k = (0..a.dim(x))
            .find(|&k| !lx.get(0, k).is_zero())
            .ok_or_else(|| fail(format!("λ_{x} vanishes")))?;
        let col = contract(x, 0).col(k);
        let inv = lx.get(0, k).inv()?;
        family.push(col.iter().map(|v| v * &inv).collect::<Vec<_>>());
    }
    let family = GrouplikeFamily(family);

    let mut defining = Check::new("distinguished grouplike identity");
    for x in h.elements() {
        for y in h.elements() {
            let rhs = &Matrix::column(f, family.0[x].clone()) * &lambda.covectors[h.mul(x, y)];
            expect_eq(&mut defining, &contract(x, y), &rhs, || format!("(x,y)=({x},{y})"));
        }
    }
    let mut xi = Check::new("Ξ-grouplike");
    xi.expect(a.is_xi_grouplike(&family), || family.to_string());
    let mut classical = Check::new("matches classical distinguished grouplike");
    match classical_distinguished(a.base()) {
        Some(g1) => classical.expect(g1 == family.0[0], || format!("{:?} vs {:?}", g1, family.0[0])),
        None => classical.fail(|| "identity component has no nonzero right integral".into()),
    }
    let report = ValidationReport {
        checks: vec![defining, xi, classical],
    };
    if !report.is_valid() {
        return Err(fail(report.to_string().trim_end().to_string()));
    }
    Ok(Distinguished {
        family,
        integral: lambda,
        report,
    })
}

/// Distinguished grouplike of the classical Hopf algebra `A_1`, computed
/// from its own right integral.
pub fn classical_distinguished(a: &GradedHopfCoalgebra) -> Option<Vec<Scalar>> {
    let a1 = a.identity_component().ok()?;
    let f = a1.field();
    let cm = crate::crossed::CrossedModule::trivial_over(a1.group());
    let action = vec![Matrix::identity(f, a1.dim(0))];
    let classical = HopfXiCoalgebra::new(cm, a1, action).ok()?;
    let lambda = integral_space(&classical, Side::Right).into_iter().next()?;
    let l = &lambda.covectors[0];
    let k = (0..classical.dim(0)).find(|&k| !l.get(0, k).is_zero())?;
    let col = (&Matrix::identity(f, classical.dim(0)).kron(l) * classical.coproduct(0, 0)).col(k);
    let inv = l.get(0, k).inv().ok()?;
    Some(col.iter().map(|v| v * &inv).collect())
}

/// The Hopf Ξ-module `M_x = A*_{x⁻¹}` (coordinates in the dual basis):
///
/// * `ρ_{x,y}(φ)(c) = (φ ⊗ id)Δ_{y⁻¹x⁻¹,x}(c)` for `c ∈ A_{y⁻¹}`,
/// * `(a·φ)(c) = φ(S_{x⁻¹}(a) c)`,
/// * `ψ_{x,e}(φ) = φ ∘ ϕ_{x⁻¹Ξ(e)⁻¹, ^{x⁻¹}e}`.
///
/// The output must pass [`validate_hopf_xi_module`]; failure is reported as
/// [`AlgebraError::AxiomCheckFailed`].
pub fn dual_hopf_module(a: &HopfXiCoalgebra) -> Result<HopfXiModule> {
    let (cm, h, e, f) = (a.cm(), a.h(), a.e(), a.field());
    let dims: Vec<usize> = h.elements().map(|x| a.dim(h.inv(x))).collect();
    let mut action = Vec::with_capacity(h.order());
    for x in h.elements() {
        let xi = h.inv(x);
        let (m, dx) = (dims[x], a.dim(x));
        let s = a.antipode_at(xi)?;
        let mu = a.component(xi).mul();
        // r[k, c·m + j] = Σ_l S_{x⁻¹}[l, c] μ_{x⁻¹}[j, l·m + k]
        action.push(Matrix::from_fn(f, m, dx * m, |k, col| {
            let (c, j) = (col / m, col % m);
            (0..m).fold(f.zero(), |acc, l| &acc + &(s.get(l, c) * mu.get(j, l * m + k)))
        }));
    }
    let mut coaction = Vec::with_capacity(h.order() * h.order());
    for x in h.elements() {
        for y in h.elements() {
            let u = h.mul(h.inv(y), h.inv(x));
            let delta = a.coproduct(u, x);
            let (dx, dyi, du) = (a.dim(x), dims[y], dims[h.mul(x, y)]);
            // ρ[i·d_{y⁻¹} + k, j] = Δ_{u,x}[j·d_x + i, k]
            coaction.push(Matrix::from_fn(f, dx * dyi, du, |row, j| {
                let (i, k) = (row / dyi, row % dyi);
                delta.get(j * dx + i, k).clone()
            }));
        }
    }
    let mut psi = Vec::with_capacity(h.order() * e.order());
    for x in h.elements() {
        let xi = h.inv(x);
        for g in e.elements() {
            let w = h.mul(xi, h.inv(cm.xi(g)));
            psi.push(a.phi(w, cm.act(xi, g)).transpose());
        }
    }
    let module = HopfXiModule::new(a, dims, action, coaction, psi)?;
    let report = validate_hopf_xi_module(a, &module)?;
    if !report.is_valid() {
        return Err(AlgebraError::AxiomCheckFailed(report));
    }
    Ok(module)
}

/// `λ ↦ (λ_{x⁻¹})_x`, a right integral as a family in the dual Hopf module.
pub fn integral_to_coinvariant(a: &HopfXiCoalgebra, lambda: &XiIntegral) -> Vec<Vec<Scalar>> {
    let h = a.h();
    h.elements().map(|x| lambda.covectors[h.inv(x)].row(0).to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::CrossedModule;
    use crate::group::FiniteGroup;
    use crate::linalg::Field;
    use crate::xi::{mk_bicharacter_group_algebra, mk_trivial};

    const Q: Field = Field::Rational;

    fn k_xi() -> HopfXiCoalgebra {
        mk_trivial(Q, &CrossedModule::identity(&FiniteGroup::cyclic(2).unwrap()))
    }

    fn bichar() -> HopfXiCoalgebra {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        mk_bicharacter_group_algebra(Q, &z2, &z2, &[vec![Q.one(), Q.one()], vec![Q.one(), -Q.one()]]).unwrap()
    }

    #[test]
    fn trivial_module_and_coinvariants() {
        for a in [k_xi(), bichar()] {
            for v in 0..3 {
                let m = trivial_hopf_module(&a, v);
                assert!(validate_hopf_xi_module(&a, &m).unwrap().is_valid());
                assert_eq!(coinvariants(&a, &m).len(), v);
                let iso = structure_iso(&a, &m).unwrap();
                assert_eq!(iso.coinvariants.len(), v);
            }
        }
    }

    #[test]
    fn integrals() {
        let a = bichar();
        let left = integral_space(&a, Side::Left);
        assert_eq!(left.len(), 1);
        assert_eq!(left[0].covectors[0], Matrix::from_i64(Q, 1, 2, &[1, 0]));
        assert_eq!(integral_space(&a, Side::Right).len(), 1);
        let t = antipode_transport(&a, &left[0]).unwrap();
        assert_eq!(t.covectors, left[0].covectors);

        let k = k_xi();
        let l = integral_space(&k, Side::Left);
        assert_eq!(l.len(), 1);
        assert_eq!(l[0].covectors[0], l[0].covectors[1]);
    }

    #[test]
    fn distinguished_is_unit_for_unimodular_examples() {
        for a in [k_xi(), bichar()] {
            let d = distinguished_grouplike(&a).unwrap();
            assert_eq!(d.family, a.base().unit_family());
        }
    }

    #[test]
    fn dual_hopf_modules() {
        for a in [k_xi(), bichar()] {
            let m = dual_hopf_module(&a).unwrap();
            let co = coinvariants(&a, &m);
            assert_eq!(co.len(), 1);
            structure_iso(&a, &m).unwrap();
        }
    }

    #[test]
    fn zeroed_psi_is_caught() {
        let a = k_xi();
        let m = trivial_hopf_module(&a, 1);
        let mut psi = m.psis().to_vec();
        psi[1] = Matrix::zeros(Q, 1, 1);
        let bad = HopfXiModule::new(&a, m.dims().to_vec(), m.actions().to_vec(), m.coactions().to_vec(), psi).unwrap();
        let r = validate_hopf_xi_module(&a, &bad).unwrap();
        assert!(!r.is_valid());
        assert!(coinvariants(&a, &bad).len() < coinvariants(&a, &m).len());
    }
}
