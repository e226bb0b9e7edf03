//! Graded modules over a Hopf Ξ-coalgebra and degree-`e` morphisms.
//!
//! A module is a family `M_x` with actions `r_x: A_x ⊗ M_x → M_x`
//! (an `m_x × d_x m_x` matrix). A morphism of degree `e` is a family of
//! blocks `α_x: M_x → N_{Ξ(e)x}`.

use crate::error::{AlgebraError, Result};
use crate::graded::{expect_eq, GrouplikeFamily};
use crate::linalg::{Field, Matrix, Scalar};
use crate::report::{Check, ValidationReport};
use crate::xi::HopfXiCoalgebra;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AModule {
    dims: Vec<usize>,
    action: Vec<Matrix>,
}

impl AModule {
    /// Shape-checked constructor; see [`validate_module`].
    pub fn new(a: &HopfXiCoalgebra, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != a.h().order() {
            return Err(AlgebraError::shape("one action matrix per element of H"));
        }
        let dims: Vec<usize> = action.iter().map(Matrix::rows).collect();
        for (x, r) in action.iter().enumerate() {
            if r.cols() != a.dim(x) * dims[x] {
                return Err(AlgebraError::shape(format!("r_{x} is {:?}", r.shape())));
            }
            if r.field() != a.field() {
                return Err(AlgebraError::MixedFields(a.field(), r.field()));
            }
        }
        Ok(AModule { dims, action })
    }

    pub fn zero(a: &HopfXiCoalgebra) -> Self {
        let f = a.field();
        AModule {
            dims: vec![0; a.h().order()],
            action: a.h().elements().map(|_| Matrix::zeros(f, 0, 0)).collect(),
        }
    }

    /// A module concentrated in degree `x` with action `r`.
    pub fn concentrated(a: &HopfXiCoalgebra, x: usize, r: Matrix) -> Result<Self> {
        let mut action: Vec<Matrix> = AModule::zero(a).action;
        action[x] = r;
        AModule::new(a, action)
    }

    /// The unit object: `k` in degree 1 acted on through `ε`.
    pub fn unit(a: &HopfXiCoalgebra) -> Self {
        AModule::concentrated(a, 0, a.counit().clone()).expect("counit shape")
    }

    /// `A_x` acting on itself, concentrated in degree `x`.
    pub fn regular(a: &HopfXiCoalgebra, x: usize) -> Self {
        AModule::concentrated(a, x, a.component(x).mul().clone()).expect("product shape")
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.action[x]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.action
    }

    /// The unique degree with a nonzero component, if there is exactly one.
    pub fn degree(&self) -> Option<usize> {
        let mut nonzero = self.dims.iter().enumerate().filter(|(_, &d)| d > 0).map(|(x, _)| x);
        let x = nonzero.next()?;
        nonzero.next().is_none().then_some(x)
    }

    /// Matrix of `m ↦ a·m` on `M_x`.
    pub fn act_by(&self, a: &HopfXiCoalgebra, x: usize, element: &[Scalar]) -> Matrix {
        let f = a.field();
        &self.action[x] * &Matrix::column(f, element.to_vec()).kron(&Matrix::identity(f, self.dims[x]))
    }
}

pub fn validate_module(a: &HopfXiCoalgebra, m: &AModule) -> Result<ValidationReport> {
    if m.dims.len() != a.h().order() || m.action.iter().enumerate().any(|(x, r)| r.shape() != (m.dims[x], a.dim(x) * m.dims[x])) {
        return Err(AlgebraError::shape("module shapes do not match the algebra"));
    }
    let f = a.field();
    let mut assoc = Check::new("module associativity");
    let mut unit = Check::new("module unit");
    for x in a.h().elements() {
        let (r, alg) = (&m.action[x], a.component(x));
        let idm = Matrix::identity(f, m.dims[x]);
        let lhs = r * &alg.mul().kron(&idm);
        let rhs = r * &Matrix::identity(f, alg.dim()).kron(r);
        expect_eq(&mut assoc, &lhs, &rhs, || format!("x={x}"));
        expect_eq(&mut unit, &(r * &alg.unit().kron(&idm)), &idm, || format!("x={x}"));
    }
    Ok(ValidationReport { checks: vec![assoc, unit] })
}

/// Action matrix on `A ⊗ (⊕_b V_b)` from block actions on `A ⊗ V_b`.
fn direct_sum_action(field: Field, d: usize, blocks: &[(usize, Matrix)]) -> Matrix {
    let total: usize = blocks.iter().map(|(k, _)| k).sum();
    let mut out = Matrix::zeros(field, total, d * total);
    let mut off = 0;
    for (k, r) in blocks {
        for i in 0..*k {
            for a in 0..d {
                for j in 0..*k {
                    out.set(off + i, a * total + off + j, r.get(i, a * k + j).clone());
                }
            }
        }
        off += k;
    }
    out
}

/// Offset of the block `M_y ⊗ N_{y⁻¹x}` inside `(M⊗N)_x`.
fn tensor_offset(a: &HopfXiCoalgebra, m: &AModule, n: &AModule, x: usize, y: usize) -> usize {
    let h = a.h();
    (0..y).map(|w| m.dims[w] * n.dims[h.mul(h.inv(w), x)]).sum()
}

/// `(M⊗N)_x = ⊕_{yz=x} M_y ⊗ N_z`, blocks ordered by ascending `y`.
pub fn tensor_modules(a: &HopfXiCoalgebra, m: &AModule, n: &AModule) -> AModule {
    let (h, f) = (a.h(), a.field());
    let mut action = Vec::with_capacity(h.order());
    for x in h.elements() {
        let blocks: Vec<(usize, Matrix)> = h
            .elements()
            .map(|y| {
                let z = h.mul(h.inv(y), x);
                let (my, nz) = (m.dims[y], n.dims[z]);
                let flip = Matrix::identity(f, a.dim(y))
                    .kron(&Matrix::swap(f, a.dim(z), my))
                    .kron(&Matrix::identity(f, nz));
                let split = a.coproduct(y, z).kron(&Matrix::identity(f, my * nz));
                (my * nz, &(&m.action[y].kron(&n.action[z]) * &flip) * &split)
            })
            .collect();
        action.push(direct_sum_action(f, a.dim(x), &blocks));
    }
    let dims = action.iter().map(Matrix::rows).collect();
    AModule { dims, action }
}

/// `ϕ*_e(N)_x = ϕ_{x,e}*(N_{Ξ(e)x})`.
pub fn pullback_phi_e(a: &HopfXiCoalgebra, n: &AModule, e: usize) -> AModule {
    let (cm, f) = (a.cm(), a.field());
    let action: Vec<Matrix> = a
        .h()
        .elements()
        .map(|x| {
            let y = cm.shift(e, x);
            &n.action[y] * &a.phi(x, e).kron(&Matrix::identity(f, n.dims[y]))
        })
        .collect();
    let dims = action.iter().map(Matrix::rows).collect();
    AModule { dims, action }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedHom {
    pub degree: usize,
    pub blocks: Vec<Matrix>,
}

impl GradedHom {
    pub fn identity(a: &HopfXiCoalgebra, m: &AModule) -> Self {
        GradedHom {
            degree: 0,
            blocks: m.dims.iter().map(|&d| Matrix::identity(a.field(), d)).collect(),
        }
    }

    pub fn zero(a: &HopfXiCoalgebra, m: &AModule, n: &AModule, e: usize) -> Self {
        let blocks = a
            .h()
            .elements()
            .map(|x| Matrix::zeros(a.field(), n.dims[a.cm().shift(e, x)], m.dims[x]))
            .collect();
        GradedHom { degree: e, blocks }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    fn has_shape(&self, a: &HopfXiCoalgebra, m: &AModule, n: &AModule) -> bool {
        self.degree < a.e().order()
            && self.blocks.len() == a.h().order()
            && self
                .blocks
                .iter()
                .enumerate()
                .all(|(x, b)| b.shape() == (n.dims[a.cm().shift(self.degree, x)], m.dims[x]))
    }
}

/// `A_x`-linearity of every block into the pullback `ϕ*_e(N)`.
pub fn hom_check(a: &HopfXiCoalgebra, m: &AModule, n: &AModule, f: &GradedHom) -> ValidationReport {
    let mut check = Check::new(format!("degree {} linearity", f.degree));
    if !f.has_shape(a, m, n) {
        check.fail(|| "blocks do not match the modules".into());
        return ValidationReport { checks: vec![check] };
    }
    let pulled = pullback_phi_e(a, n, f.degree);
    for x in a.h().elements() {
        let b = &f.blocks[x];
        let lhs = b * &m.action[x];
        let rhs = &pulled.action[x] * &Matrix::identity(a.field(), a.dim(x)).kron(b);
        expect_eq(&mut check, &lhs, &rhs, || format!("x={x}"));
    }
    ValidationReport { checks: vec![check] }
}

pub fn is_hom(a: &HopfXiCoalgebra, m: &AModule, n: &AModule, f: &GradedHom) -> bool {
    hom_check(a, m, n, f).is_valid()
}

/// Basis of `Hom^e(M, N)`: the kernel of the stacked linearity conditions,
/// unknowns being the concatenated row-major blocks.
pub fn hom_space(a: &HopfXiCoalgebra, m: &AModule, n: &AModule, e: usize) -> Vec<GradedHom> {
    let (h, f) = (a.h(), a.field());
    let pulled = pullback_phi_e(a, n, e);
    let shapes: Vec<(usize, usize)> = h.elements().map(|x| (pulled.dims[x], m.dims[x])).collect();
    let offsets: Vec<usize> = shapes.iter().scan(0, |acc, &(r, c)| Some(std::mem::replace(acc, *acc + r * c))).collect();
    let unknowns: usize = shapes.iter().map(|&(r, c)| r * c).sum();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for x in h.elements() {
        let (nr, mc) = shapes[x];
        let d = a.dim(x);
        let (rm, rn) = (&m.action[x], &pulled.action[x]);
        // (α r_M)[i, c] = (r_N (id⊗α))[i, c] with c = k·mc + j
        for i in 0..nr {
            for k in 0..d {
                for j in 0..mc {
                    let c = k * mc + j;
                    let mut row = vec![f.zero(); unknowns];
                    for q in 0..mc {
                        row[offsets[x] + i * mc + q] = &row[offsets[x] + i * mc + q] + rm.get(q, c);
                    }
                    for p in 0..nr {
                        row[offsets[x] + p * mc + j] = &row[offsets[x] + p * mc + j] - rn.get(i, k * nr + p);
                    }
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(f, unknowns, rows).expect("uniform rows");
    system
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let blocks = h
                .elements()
                .map(|x| {
                    let (r, c) = shapes[x];
                    Matrix::from_vec(f, r, c, v[offsets[x]..offsets[x] + r * c].to_vec()).expect("block")
                })
                .collect();
            GradedHom { degree: e, blocks }
        })
        .collect()
}

/// `g ∘ f`, of degree `|g|·|f|`.
pub fn compose_homs(a: &HopfXiCoalgebra, g: &GradedHom, f: &GradedHom) -> Result<GradedHom> {
    let cm = a.cm();
    let mut blocks = Vec::with_capacity(a.h().order());
    for x in a.h().elements() {
        let y = cm.shift(f.degree, x);
        let b = g.blocks[y]
            .try_mul(&f.blocks[x])
            .map_err(|_| AlgebraError::NonComposable(format!("blocks at x={x} do not compose")))?;
        blocks.push(b);
    }
    Ok(GradedHom {
        degree: a.e().mul(g.degree, f.degree),
        blocks,
    })
}

/// `α ⊗ β: M⊗P → N⊗Q` of degree `e·^{|M|}f` for `α: M → N` of degree `e`
/// with homogeneous `M`, and `β: P → Q` of degree `f`.
pub fn tensor_homs(
    a: &HopfXiCoalgebra,
    (m, n, alpha): (&AModule, &AModule, &GradedHom),
    (p, q, beta): (&AModule, &AModule, &GradedHom),
) -> Result<GradedHom> {
    let (cm, h, f) = (a.cm(), a.h(), a.field());
    if !alpha.has_shape(a, m, n) || !beta.has_shape(a, p, q) {
        return Err(AlgebraError::NonComposable("morphisms do not match their modules".into()));
    }
    let x0 = match m.degree() {
        Some(x) => x,
        None if m.total_dim() == 0 => 0,
        None => return Err(AlgebraError::NotHomogeneous),
    };
    let degree = cm.twisted_product(alpha.degree, x0, beta.degree);
    let (mp, nq) = (tensor_modules(a, m, p), tensor_modules(a, n, q));
    let mut blocks = Vec::with_capacity(h.order());
    for x in h.elements() {
        let target = cm.shift(degree, x);
        let mut block = Matrix::zeros(f, nq.dims[target], mp.dims[x]);
        let z = h.mul(h.inv(x0), x);
        let y2 = cm.shift(alpha.degree, x0);
        let z2 = cm.shift(beta.degree, z);
        debug_assert_eq!(h.mul(y2, z2), target);
        let piece = alpha.blocks[x0].kron(&beta.blocks[z]);
        if piece.rows() > 0 && piece.cols() > 0 {
            block.put_block(tensor_offset(a, n, q, target, y2), tensor_offset(a, m, p, x, x0), &piece);
        }
        blocks.push(block);
    }
    Ok(GradedHom { degree, blocks })
}

/// A dual object with its evaluation and coevaluation maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualModule {
    pub module: AModule,
    /// Degree of the original module; the dual sits in its inverse.
    pub degree: usize,
    /// `M* ⊗ M → 𝟙`, `φ ⊗ m ↦ φ(m)`.
    pub lev: Matrix,
    /// `𝟙 → M ⊗ M*`, `1 ↦ Σ b_i ⊗ b_i*`.
    pub lcoev: Matrix,
    /// `M ⊗ M* → 𝟙`, `m ⊗ φ ↦ φ(G_x m)`.
    pub rev: Matrix,
    /// `𝟙 → M* ⊗ M`, `1 ↦ Σ b_i* ⊗ G_x⁻¹ b_i`.
    pub rcoev: Matrix,
    pub report: ValidationReport,
}

/// Dual of a homogeneous module through a pivotal element `G`; zig-zag
/// identities and linearity of all four maps are checked exactly.
pub fn dual_module(a: &HopfXiCoalgebra, m: &AModule, pivot: &GrouplikeFamily) -> Result<DualModule> {
    let (h, f) = (a.h(), a.field());
    let x = match m.degree() {
        Some(x) => x,
        None if m.total_dim() == 0 => 0,
        None => return Err(AlgebraError::NotHomogeneous),
    };
    let pivotal = a.base().is_pivotal_element(pivot)?;
    if !pivotal.is_valid() {
        return Err(AlgebraError::NotPivotal(pivotal));
    }
    let ginv = a.base().grouplike_inverse(pivot)?;
    let xi = h.inv(x);
    let d = m.dims[x];
    let s = a.antipode_at(x)?;
    let r = &m.action[x];
    let dx = a.dim(x);
    // (a_k · φ_j)(m_i) = φ_j(S_x(a_k) m_i)
    let dual_action = Matrix::from_fn(f, d, a.dim(xi) * d, |i, c| {
        let (k, j) = (c / d, c % d);
        (0..dx).fold(f.zero(), |acc, l| &acc + &(s.get(l, k) * r.get(j, l * d + i)))
    });
    let dual = AModule::concentrated(a, xi, dual_action)?;

    let ident = Matrix::identity(f, d);
    let delta_vec = Matrix::from_fn(f, d * d, 1, |c, _| if c / d == c % d { f.one() } else { f.zero() });
    let lev = delta_vec.transpose();
    let lcoev = delta_vec;
    let g = m.act_by(a, x, pivot.component(x));
    let gi = m.act_by(a, x, ginv.component(x));
    let rev = Matrix::from_fn(f, 1, d * d, |_, c| g.get(c % d, c / d).clone());
    let rcoev = Matrix::from_fn(f, d * d, 1, |c, _| gi.get(c % d, c / d).clone());

    let mut zig = Check::new("zig-zag identities");
    expect_eq(&mut zig, &(&ident.kron(&lev) * &lcoev.kron(&ident)), &ident, || {
        "(id⊗lev)(lcoev⊗id)".into()
    });
    expect_eq(&mut zig, &(&lev.kron(&ident) * &ident.kron(&lcoev)), &ident, || {
        "(lev⊗id)(id⊗lcoev)".into()
    });
    expect_eq(&mut zig, &(&rev.kron(&ident) * &ident.kron(&rcoev)), &ident, || {
        "(rev⊗id)(id⊗rcoev)".into()
    });
    expect_eq(&mut zig, &(&ident.kron(&rev) * &rcoev.kron(&ident)), &ident, || {
        "(id⊗rev)(rcoev⊗id)".into()
    });

    let unit = AModule::unit(a);
    let mut linear = Check::new("evaluations are module maps");
    let maps = [
        ("lev", tensor_modules(a, &dual, m), unit.clone(), lev.clone()),
        ("rev", tensor_modules(a, m, &dual), unit.clone(), rev.clone()),
        ("lcoev", unit.clone(), tensor_modules(a, m, &dual), lcoev.clone()),
        ("rcoev", unit.clone(), tensor_modules(a, &dual, m), rcoev.clone()),
    ];
    for (name, src, tgt, mat) in maps {
        let mut hom = GradedHom::zero(a, &src, &tgt, 0);
        hom.blocks[0] = mat;
        linear.expect(is_hom(a, &src, &tgt, &hom), || name.to_string());
    }
    let report = ValidationReport { checks: vec![zig, linear] };
    Ok(DualModule {
        module: dual,
        degree: x,
        lev,
        lcoev,
        rev,
        rcoev,
        report,
    })
}

/// `⊕^e_λ M_λ = ⊕_λ ϕ*_{e⁻¹}(M_λ)` with injections `q_λ` (degree `e`) and
/// projections `p_λ` (degree `e⁻¹`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EDirectSum {
    pub module: AModule,
    pub injections: Vec<GradedHom>,
    pub projections: Vec<GradedHom>,
}

pub fn e_direct_sum(a: &HopfXiCoalgebra, modules: &[AModule], e: usize) -> EDirectSum {
    let (cm, h, f) = (a.cm(), a.h(), a.field());
    let einv = a.e().inv(e);
    let pulled: Vec<AModule> = modules.iter().map(|m| pullback_phi_e(a, m, einv)).collect();
    let action = h
        .elements()
        .map(|x| {
            let blocks: Vec<(usize, Matrix)> = pulled.iter().map(|p| (p.dims[x], p.action[x].clone())).collect();
            direct_sum_action(f, a.dim(x), &blocks)
        })
        .collect::<Vec<_>>();
    let dims: Vec<usize> = action.iter().map(Matrix::rows).collect();
    let module = AModule { dims: dims.clone(), action };
    let mut injections = Vec::new();
    let mut projections = Vec::new();
    for (idx, m) in modules.iter().enumerate() {
        // block λ of D_y sits after the blocks of the earlier summands
        let offset = |y: usize| pulled[..idx].iter().map(|p| p.dims[y]).sum::<usize>();
        let q = h
            .elements()
            .map(|x| {
                let y = cm.shift(e, x);
                let mut b = Matrix::zeros(f, dims[y], m.dims[x]);
                b.put_block(offset(y), 0, &Matrix::identity(f, m.dims[x]));
                b
            })
            .collect();
        let p = h
            .elements()
            .map(|x| {
                let y = cm.shift(einv, x);
                let mut b = Matrix::zeros(f, m.dims[y], dims[x]);
                b.put_block(0, offset(x), &Matrix::identity(f, m.dims[y]));
                b
            })
            .collect();
        injections.push(GradedHom { degree: e, blocks: q });
        projections.push(GradedHom { degree: einv, blocks: p });
    }
    EDirectSum {
        module,
        injections,
        projections,
    }
}
