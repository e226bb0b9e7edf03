//! Ξ-actions, Hopf Ξ-coalgebras and Hopf Ξ-algebras.
//!
//! An action is a family `ϕ_{x,e}: A_x → A_{Ξ(e)x}` stored at index
//! `x * |E| + e`.

use crate::crossed::{validate_crossed_module, CrossedModule};
use crate::error::{AlgebraError, Result};
use crate::graded::{expect_eq, ComponentAlgebra, GradedHopfCoalgebra, GrouplikeFamily};
use crate::group::FiniteGroup;
use crate::linalg::{Field, Matrix, Scalar};
use crate::report::{Check, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfXiCoalgebra {
    cm: CrossedModule,
    base: GradedHopfCoalgebra,
    action: Vec<Matrix>,
}

fn check_action_shapes(cm: &CrossedModule, dims: &[usize], field: Field, action: &[Matrix]) -> Result<()> {
    let ne = cm.e().order();
    if action.len() != cm.h().order() * ne {
        return Err(AlgebraError::shape(format!(
            "{} action maps, expected {}",
            action.len(),
            cm.h().order() * ne
        )));
    }
    for x in cm.h().elements() {
        for e in cm.e().elements() {
            let m = &action[x * ne + e];
            let want = (dims[cm.shift(e, x)], dims[x]);
            if m.shape() != want {
                return Err(AlgebraError::shape(format!("ϕ_({x},{e}) is {:?}, expected {want:?}", m.shape())));
            }
            if m.field() != field {
                return Err(AlgebraError::MixedFields(field, m.field()));
            }
        }
    }
    Ok(())
}

impl HopfXiCoalgebra {
    /// Shape-checked constructor; see [`HopfXiCoalgebra::validate`].
    pub fn new(cm: CrossedModule, base: GradedHopfCoalgebra, action: Vec<Matrix>) -> Result<Self> {
        if base.group() != cm.h() {
            return Err(AlgebraError::shape("the coalgebra is graded by a different group than H"));
        }
        check_action_shapes(&cm, &base.dims(), base.field(), &action)?;
        Ok(HopfXiCoalgebra { cm, base, action })
    }

    pub fn cm(&self) -> &CrossedModule {
        &self.cm
    }

    pub fn base(&self) -> &GradedHopfCoalgebra {
        &self.base
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    pub fn h(&self) -> &FiniteGroup {
        self.cm.h()
    }

    pub fn e(&self) -> &FiniteGroup {
        self.cm.e()
    }

    pub fn dim(&self, x: usize) -> usize {
        self.base.dim(x)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.base.dims()
    }

    pub fn component(&self, x: usize) -> &ComponentAlgebra {
        self.base.component(x)
    }

    pub fn coproduct(&self, x: usize, y: usize) -> &Matrix {
        self.base.coproduct(x, y)
    }

    pub fn counit(&self) -> &Matrix {
        self.base.counit()
    }

    pub fn antipode_at(&self, x: usize) -> Result<&Matrix> {
        self.base.antipode_at(x)
    }

    /// `ϕ_{x,e}: A_x → A_{Ξ(e)x}`.
    pub fn phi(&self, x: usize, e: usize) -> &Matrix {
        &self.action[x * self.e().order() + e]
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    fn id(&self, x: usize) -> Matrix {
        Matrix::identity(self.field(), self.dim(x))
    }

    /// Unit, composition and coproduct laws of the action, plus each
    /// `ϕ_{x,e}` being an algebra isomorphism with inverse `ϕ_{Ξ(e)x,e⁻¹}`.
    pub fn validate_xi_action(&self) -> ValidationReport {
        let (cm, h, e) = (&self.cm, self.h(), self.e());
        let mut unit = Check::new("action unit");
        for x in h.elements() {
            expect_eq(&mut unit, self.phi(x, 0), &self.id(x), || format!("ϕ_({x},1)"));
        }
        let mut comp = Check::new("action composition");
        let mut inverse = Check::new("action inverse");
        let mut mult = Check::new("action multiplicative");
        let mut unital = Check::new("action unital");
        for x in h.elements() {
            for a in e.elements() {
                let y = cm.shift(a, x);
                for b in e.elements() {
                    let lhs = self.phi(y, b) * self.phi(x, a);
                    expect_eq(&mut comp, &lhs, self.phi(x, e.mul(b, a)), || format!("(x,e,f)=({x},{a},{b})"));
                }
                let back = self.phi(y, e.inv(a)) * self.phi(x, a);
                expect_eq(&mut inverse, &back, &self.id(x), || format!("(x,e)=({x},{a})"));
                let (ax, ay, p) = (self.component(x), self.component(y), self.phi(x, a));
                expect_eq(&mut mult, &(p * ax.mul()), &(ay.mul() * &p.kron(p)), || format!("(x,e)=({x},{a})"));
                expect_eq(&mut unital, &(p * ax.unit()), ay.unit(), || format!("(x,e)=({x},{a})"));
            }
        }
        let mut coprod = Check::new("action coproduct");
        for x in h.elements() {
            for y in h.elements() {
                let delta = self.coproduct(x, y);
                for a in e.elements() {
                    for b in e.elements() {
                        let lhs = &self.phi(x, a).kron(self.phi(y, b)) * delta;
                        let rhs = self.coproduct(cm.shift(a, x), cm.shift(b, y)) * self.phi(h.mul(x, y), cm.twisted_product(a, x, b));
                        expect_eq(&mut coprod, &lhs, &rhs, || format!("(x,y,e,f)=({x},{y},{a},{b})"));
                    }
                }
            }
        }
        ValidationReport {
            checks: vec![unit, comp, coprod, mult, unital, inverse],
        }
    }

    /// `ϕ_{x,e} S_x = S_{Ξ(e)x} ϕ_{x⁻¹, ^{x⁻¹}(e⁻¹)}`, which holds for every
    /// valid structure.
    pub fn check_antipode_action_compat(&self) -> Result<ValidationReport> {
        let (cm, h, e) = (&self.cm, self.h(), self.e());
        let mut check = Check::new("antipode commutes with action");
        for x in h.elements() {
            let xi = h.inv(x);
            for a in e.elements() {
                let lhs = self.phi(x, a) * self.antipode_at(x)?;
                let rhs = self.antipode_at(cm.shift(a, x))? * self.phi(xi, cm.act(xi, e.inv(a)));
                expect_eq(&mut check, &lhs, &rhs, || format!("(x,e)=({x},{a})"));
            }
        }
        Ok(ValidationReport { checks: vec![check] })
    }

    /// The full validator stack: crossed module, algebras, coalgebra,
    /// bicoalgebra, antipode, action, and the antipode/action identity.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        report.absorb("crossed module", validate_crossed_module(&self.cm));
        report.absorb("", self.base.validate());
        report.absorb("xi-action", self.validate_xi_action());
        if let Ok(r) = self.check_antipode_action_compat() {
            report.absorb("xi-action", r);
        }
        report
    }

    /// `⟨G,e⟩ = ε(ϕ_{Ξ(e⁻¹),e}(G_{Ξ(e⁻¹)}))` and the identity
    /// `ϕ_{x,e}(G_x) = ⟨G,e⟩ G_{Ξ(e)x}`.
    pub fn grouplike_pairing(&self, family: &GrouplikeFamily) -> Result<PairingTable> {
        if !self.base.is_grouplike(family) {
            return Err(AlgebraError::NotGrouplike(family.to_string()));
        }
        let (cm, h, e) = (&self.cm, self.h(), self.e());
        let values: Vec<Scalar> = e
            .elements()
            .map(|a| {
                let x = cm.xi(e.inv(a));
                self.counit().apply(&self.phi(x, a).apply(&family.0[x]))[0].clone()
            })
            .collect();
        let mut check = Check::new("pairing identity");
        for x in h.elements() {
            for a in e.elements() {
                let lhs = self.phi(x, a).apply(&family.0[x]);
                let y = cm.shift(a, x);
                let rhs: Vec<Scalar> = family.0[y].iter().map(|v| v * &values[a]).collect();
                check.expect(lhs == rhs, || format!("(x,e)=({x},{a})"));
            }
        }
        Ok(PairingTable {
            values,
            report: ValidationReport { checks: vec![check] },
        })
    }

    /// Grouplike and fixed by the action.
    pub fn is_xi_grouplike(&self, family: &GrouplikeFamily) -> bool {
        self.grouplike_pairing(family)
            .map(|p| p.report.is_valid() && p.values.iter().all(Scalar::is_one))
            .unwrap_or(false)
    }

    /// Multiplicativity of the pairing in both arguments over `families`.
    pub fn pairing_bicharacter_check(&self, families: &[GrouplikeFamily]) -> Result<ValidationReport> {
        let e = self.e();
        let tables = families.iter().map(|g| self.grouplike_pairing(g)).collect::<Result<Vec<_>>>()?;
        let mut in_e = Check::new("pairing multiplicative in E");
        for (i, t) in tables.iter().enumerate() {
            for a in e.elements() {
                for b in e.elements() {
                    let ok = t.values[e.mul(a, b)] == &t.values[a] * &t.values[b];
                    in_e.expect(ok, || format!("G#{i}, (e,f)=({a},{b})"));
                }
            }
        }
        let mut in_g = Check::new("pairing multiplicative in G");
        for (i, g1) in families.iter().enumerate() {
            for (j, g2) in families.iter().enumerate() {
                let prod = self.base.grouplike_product(g1, g2);
                let t = self.grouplike_pairing(&prod)?;
                for a in e.elements() {
                    let ok = t.values[a] == &tables[i].values[a] * &tables[j].values[a];
                    in_g.expect(ok, || format!("G#{i}·G#{j}, e={a}"));
                }
            }
        }
        Ok(ValidationReport { checks: vec![in_e, in_g] })
    }

    /// Enumerated H-grouplikes that are Ξ-grouplike.
    pub fn enumerate_xi_grouplikes(&self) -> Vec<GrouplikeFamily> {
        self.base.enumerate_grouplikes().into_iter().filter(|g| self.is_xi_grouplike(g)).collect()
    }
}

/// Values `⟨G,e⟩` indexed by `e`, with the check of the defining identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingTable {
    pub values: Vec<Scalar>,
    pub report: ValidationReport,
}

/// `k_Ξ`: all components `k`, all structure maps identities.
pub fn mk_trivial(field: Field, cm: &CrossedModule) -> HopfXiCoalgebra {
    let base = GradedHopfCoalgebra::trivial(field, cm.h());
    let action = vec![Matrix::identity(field, 1); cm.h().order() * cm.e().order()];
    HopfXiCoalgebra {
        cm: cm.clone(),
        base,
        action,
    }
}

/// `k^ω[G]` over `E → 1` with `ϕ_e(g) = ω(e,g) g`; `omega[e][g]`.
pub fn mk_bicharacter_group_algebra(field: Field, e: &FiniteGroup, g: &FiniteGroup, omega: &[Vec<Scalar>]) -> Result<HopfXiCoalgebra> {
    let cm = CrossedModule::abelian_to_point(e)?;
    if omega.len() != e.order() || omega.iter().any(|r| r.len() != g.order()) {
        return Err(AlgebraError::shape(format!("ω must be a {}x{} table", e.order(), g.order())));
    }
    if let Some(v) = omega.iter().flatten().find(|v| v.field() != field) {
        return Err(AlgebraError::MixedFields(field, v.field()));
    }
    let w = |a: usize, b: usize| &omega[a][b];
    for a in e.elements() {
        for b in g.elements() {
            if w(a, b).is_zero() {
                return Err(AlgebraError::NotBicharacter(format!("ω({a},{b}) = 0")));
            }
            if a == 0 && !w(a, b).is_one() || b == 0 && !w(a, b).is_one() {
                return Err(AlgebraError::NotBicharacter(format!("ω({a},{b}) = {} ≠ 1", w(a, b))));
            }
            for c in e.elements() {
                if w(e.mul(a, c), b) != &(w(a, b) * w(c, b)) {
                    return Err(AlgebraError::NotBicharacter(format!("ω({a}·{c},{b}) ≠ ω({a},{b})ω({c},{b})")));
                }
            }
            for c in g.elements() {
                if w(a, g.mul(b, c)) != &(w(a, b) * w(a, c)) {
                    return Err(AlgebraError::NotBicharacter(format!("ω({a},{b}·{c}) ≠ ω({a},{b})ω({a},{c})")));
                }
            }
        }
    }
    let base = GradedHopfCoalgebra::group_algebra(field, g);
    let n = g.order();
    let action = e
        .elements()
        .map(|a| Matrix::from_fn(field, n, n, |i, j| if i == j { w(a, i).clone() } else { field.zero() }))
        .collect();
    HopfXiCoalgebra::new(cm, base, action)
}

/// `A_Ξ^ρ` for a classical Hopf algebra `hopf` (graded by the trivial group)
/// and algebra automorphisms `rho[x]`: every component is `A`,
/// `Δ_{x,y} = (ρ_x⊗ρ_y)δρ_{(xy)⁻¹}`, `S_x = ρ_x s ρ_x`, `ϕ_{x,e} = ρ_{Ξ(e)}`.
/// The result is run through the full validator.
pub fn mk_from_h_action(cm: &CrossedModule, hopf: &GradedHopfCoalgebra, rho: &[Matrix]) -> Result<HopfXiCoalgebra> {
    if hopf.group().order() != 1 {
        return Err(AlgebraError::shape("expected a classical Hopf algebra"));
    }
    let h = cm.h();
    let (f, alg) = (hopf.field(), hopf.component(0));
    let d = alg.dim();
    if rho.len() != h.order() || rho.iter().any(|r| r.shape() != (d, d) || r.field() != f) {
        return Err(AlgebraError::shape(format!("need {} maps of shape {d}x{d}", h.order())));
    }
    for (x, r) in rho.iter().enumerate() {
        if r * alg.mul() != alg.mul() * &r.kron(r) || &(r * alg.unit()) != alg.unit() || r.inverse().is_none() {
            return Err(AlgebraError::NotAlgebraAutomorphism(format!("ρ_{x}")));
        }
    }
    if !rho[0].is_identity() {
        return Err(AlgebraError::NotHomomorphism("ρ_1 is not the identity".into()));
    }
    for x in h.elements() {
        for y in h.elements() {
            if rho[h.mul(x, y)] != &rho[x] * &rho[y] {
                return Err(AlgebraError::NotHomomorphism(format!("ρ_({x}·{y}) ≠ ρ_{x}ρ_{y}")));
            }
        }
    }
    let delta = hopf.coproduct(0, 0);
    let s = hopf.antipode_at(0)?;
    let n = h.order();
    let mut coproduct = Vec::with_capacity(n * n);
    for x in h.elements() {
        for y in h.elements() {
            coproduct.push(&(&rho[x].kron(&rho[y]) * delta) * &rho[h.inv(h.mul(x, y))]);
        }
    }
    let antipode = rho.iter().map(|r| &(r * s) * r).collect();
    let base = GradedHopfCoalgebra::new(f, h.clone(), vec![alg.clone(); n], coproduct, hopf.counit().clone(), Some(antipode))?;
    let mut action = Vec::with_capacity(n * cm.e().order());
    for _ in h.elements() {
        for e in cm.e().elements() {
            action.push(rho[cm.xi(e)].clone());
        }
    }
    let a = HopfXiCoalgebra::new(cm.clone(), base, action)?;
    let report = a.validate();
    if !report.is_valid() {
        return Err(AlgebraError::Invalid(report));
    }
    Ok(a)
}

/// Trivial-action structure from a Hopf coalgebra `b` graded by `Coker Ξ`:
/// `A_x = B_{p(x)}`, `Δ_{x,y} = Δ_{p(x),p(y)}`, `ϕ = id`.
pub fn mk_from_pi_coalgebra(cm: &CrossedModule, b: &GradedHopfCoalgebra) -> Result<HopfXiCoalgebra> {
    let kic = cm.kernel_image_cokernel()?;
    if b.group() != &kic.cokernel.group {
        return Err(AlgebraError::shape("the coalgebra is not graded by the cokernel"));
    }
    let (h, p, f) = (cm.h(), &kic.cokernel.projection, b.field());
    let components = h.elements().map(|x| b.component(p[x]).clone()).collect();
    let mut coproduct = Vec::with_capacity(h.order() * h.order());
    for x in h.elements() {
        for y in h.elements() {
            coproduct.push(b.coproduct(p[x], p[y]).clone());
        }
    }
    let antipode = b.antipode().map(|s| h.elements().map(|x| s[p[x]].clone()).collect());
    let base = GradedHopfCoalgebra::new(f, h.clone(), components, coproduct, b.counit().clone(), antipode)?;
    let mut action = Vec::with_capacity(h.order() * cm.e().order());
    for x in h.elements() {
        for _ in cm.e().elements() {
            action.push(Matrix::identity(f, b.dim(p[x])));
        }
    }
    HopfXiCoalgebra::new(cm.clone(), base, action)
}

/// Inverse of [`mk_from_pi_coalgebra`] along a section `q` of the projection
/// (default: least-index coset representatives). Components are transported
/// with the action where `q` is not multiplicative.
pub fn extract_pi_coalgebra(a: &HopfXiCoalgebra, section: Option<&[usize]>) -> Result<GradedHopfCoalgebra> {
    let cm = a.cm();
    let kic = cm.kernel_image_cokernel()?;
    let (h, pi, p) = (cm.h(), &kic.cokernel.group, &kic.cokernel.projection);
    let q: Vec<usize> = section.map_or_else(|| kic.cokernel.representatives.clone(), <[usize]>::to_vec);
    if q.len() != pi.order() || q.iter().enumerate().any(|(c, &x)| x >= h.order() || p[x] != c) {
        return Err(AlgebraError::shape("not a section of the projection onto the cokernel"));
    }
    // label e with Ξ(e)·from = to
    let label = |from: usize, to: usize| cm.e().elements().find(|&e| cm.shift(e, from) == to).expect("same coset");
    let transport = |from: usize, to: usize| a.phi(from, label(from, to)).clone();
    let n = pi.order();
    let components = q.iter().map(|&x| a.component(x).clone()).collect();
    let mut coproduct = Vec::with_capacity(n * n);
    for c in pi.elements() {
        for d in pi.elements() {
            let (x, y) = (q[c], q[d]);
            coproduct.push(a.coproduct(x, y) * &transport(q[pi.mul(c, d)], h.mul(x, y)));
        }
    }
    let counit = a.counit() * &transport(q[0], 0);
    let antipode = a
        .base()
        .antipode()
        .map(|s| pi.elements().map(|c| &s[q[c]] * &transport(q[pi.inv(c)], h.inv(q[c]))).collect());
    GradedHopfCoalgebra::new(a.field(), pi.clone(), components, coproduct, counit, antipode)
}

/// Hopf Ξ-algebra stored with the same per-component layout as a Hopf
/// Ξ-coalgebra: coproducts `Δ_x`, counits `ε_x`, graded products
/// `μ_{x,y}: A_x⊗A_y → A_{xy}` at `x * |H| + y`, unit in `A_1`,
/// antipodes `S_x: A_x → A_{x⁻¹}` and the action `ϕ_{x,e}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HopfXiAlgebra {
    cm: CrossedModule,
    field: Field,
    coproduct: Vec<Matrix>,
    counit: Vec<Matrix>,
    product: Vec<Matrix>,
    unit: Matrix,
    antipode: Vec<Matrix>,
    action: Vec<Matrix>,
}

impl HopfXiAlgebra {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        cm: CrossedModule,
        field: Field,
        coproduct: Vec<Matrix>,
        counit: Vec<Matrix>,
        product: Vec<Matrix>,
        unit: Matrix,
        antipode: Vec<Matrix>,
        action: Vec<Matrix>,
    ) -> Result<Self> {
        let h = cm.h();
        let n = h.order();
        if counit.len() != n || coproduct.len() != n || product.len() != n * n || antipode.len() != n {
            return Err(AlgebraError::shape("per-component family sizes do not match H"));
        }
        let dims: Vec<usize> = counit.iter().map(Matrix::cols).collect();
        if dims.contains(&0) {
            return Err(AlgebraError::shape("components must be nonzero"));
        }
        let fields = coproduct
            .iter()
            .chain(&counit)
            .chain(&product)
            .chain(&antipode)
            .chain(std::iter::once(&unit));
        for m in fields {
            if m.field() != field {
                return Err(AlgebraError::MixedFields(field, m.field()));
            }
        }
        for x in h.elements() {
            let d = dims[x];
            if counit[x].rows() != 1 || coproduct[x].shape() != (d * d, d) || antipode[x].shape() != (dims[h.inv(x)], d) {
                return Err(AlgebraError::shape(format!("component {x} has inconsistent shapes")));
            }
            for y in h.elements() {
                if product[x * n + y].shape() != (dims[h.mul(x, y)], d * dims[y]) {
                    return Err(AlgebraError::shape(format!("μ_({x},{y}) has shape {:?}", product[x * n + y].shape())));
                }
            }
        }
        if unit.shape() != (dims[0], 1) {
            return Err(AlgebraError::shape("unit must be a column in A_1"));
        }
        check_action_shapes(&cm, &dims, field, &action)?;
        Ok(HopfXiAlgebra {
            cm,
            field,
            coproduct,
            counit,
            product,
            unit,
            antipode,
            action,
        })
    }

    pub fn cm(&self) -> &CrossedModule {
        &self.cm
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, x: usize) -> usize {
        self.counit[x].cols()
    }

    pub fn coproduct(&self, x: usize) -> &Matrix {
        &self.coproduct[x]
    }

    pub fn counit(&self, x: usize) -> &Matrix {
        &self.counit[x]
    }

    pub fn product(&self, x: usize, y: usize) -> &Matrix {
        &self.product[x * self.cm.h().order() + y]
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn antipode(&self, x: usize) -> &Matrix {
        &self.antipode[x]
    }

    pub fn phi(&self, x: usize, e: usize) -> &Matrix {
        &self.action[x * self.cm.e().order() + e]
    }

    fn id(&self, x: usize) -> Matrix {
        Matrix::identity(self.field, self.dim(x))
    }

    pub fn validate(&self) -> ValidationReport {
        let (cm, h, e, f) = (&self.cm, self.cm.h(), self.cm.e(), self.field);
        let one = Matrix::identity(f, 1);
        let mut report = ValidationReport::new();
        report.absorb("crossed module", validate_crossed_module(cm));

        let mut coassoc = Check::new("coassociativity");
        let mut counit = Check::new("counit");
        for x in h.elements() {
            let (d, id) = (&self.coproduct[x], self.id(x));
            expect_eq(&mut coassoc, &(&d.kron(&id) * d), &(&id.kron(d) * d), || format!("x={x}"));
            expect_eq(&mut counit, &(&self.counit[x].kron(&id) * d), &id, || format!("(ε⊗id)Δ_{x}"));
            expect_eq(&mut counit, &(&id.kron(&self.counit[x]) * d), &id, || format!("(id⊗ε)Δ_{x}"));
        }

        let mut assoc = Check::new("product associativity");
        for x in h.elements() {
            for y in h.elements() {
                for z in h.elements() {
                    let lhs = self.product(h.mul(x, y), z) * &self.product(x, y).kron(&self.id(z));
                    let rhs = self.product(x, h.mul(y, z)) * &self.id(x).kron(self.product(y, z));
                    expect_eq(&mut assoc, &lhs, &rhs, || format!("(x,y,z)=({x},{y},{z})"));
                }
            }
        }
        let mut unital = Check::new("product unit");
        for x in h.elements() {
            let id = self.id(x);
            expect_eq(&mut unital, &(self.product(0, x) * &self.unit.kron(&id)), &id, || {
                format!("μ_(1,{x})(η⊗id)")
            });
            expect_eq(&mut unital, &(self.product(x, 0) * &id.kron(&self.unit)), &id, || {
                format!("μ_({x},1)(id⊗η)")
            });
        }

        let mut morph = Check::new("product is a coalgebra morphism");
        for x in h.elements() {
            for y in h.elements() {
                let xy = h.mul(x, y);
                let m = self.product(x, y);
                let lhs = &self.coproduct[xy] * m;
                let middle = self.id(x).kron(&Matrix::swap(f, self.dim(x), self.dim(y))).kron(&self.id(y));
                let rhs = &(&m.kron(m) * &middle) * &self.coproduct[x].kron(&self.coproduct[y]);
                expect_eq(&mut morph, &lhs, &rhs, || format!("Δ: (x,y)=({x},{y})"));
                let lhs = &self.counit[xy] * m;
                expect_eq(&mut morph, &lhs, &self.counit[x].kron(&self.counit[y]), || format!("ε: (x,y)=({x},{y})"));
            }
        }
        let mut unit_morph = Check::new("unit is a coalgebra morphism");
        expect_eq(&mut unit_morph, &(&self.coproduct[0] * &self.unit), &self.unit.kron(&self.unit), || {
            "Δ_1 η".into()
        });
        expect_eq(&mut unit_morph, &(&self.counit[0] * &self.unit), &one, || "ε_1 η".into());

        let mut anti = Check::new("antipode identity");
        for x in h.elements() {
            let xi = h.inv(x);
            let target = &self.unit * &self.counit[x];
            let l = &(self.product(xi, x) * &self.antipode[x].kron(&self.id(x))) * &self.coproduct[x];
            expect_eq(&mut anti, &l, &target, || format!("left, x={x}"));
            let r = &(self.product(x, xi) * &self.id(x).kron(&self.antipode[x])) * &self.coproduct[x];
            expect_eq(&mut anti, &r, &target, || format!("right, x={x}"));
        }

        let mut aunit = Check::new("action unit");
        let mut acomp = Check::new("action composition");
        let mut acoalg = Check::new("action is a coalgebra morphism");
        for x in h.elements() {
            expect_eq(&mut aunit, self.phi(x, 0), &self.id(x), || format!("ϕ_({x},1)"));
            for a in e.elements() {
                let y = cm.shift(a, x);
                let p = self.phi(x, a);
                for b in e.elements() {
                    expect_eq(&mut acomp, &(self.phi(y, b) * p), self.phi(x, e.mul(b, a)), || {
                        format!("(x,e,f)=({x},{a},{b})")
                    });
                }
                expect_eq(&mut acoalg, &(&self.coproduct[y] * p), &(&p.kron(p) * &self.coproduct[x]), || {
                    format!("Δ: (x,e)=({x},{a})")
                });
                expect_eq(&mut acoalg, &(&self.counit[y] * p), &self.counit[x], || format!("ε: (x,e)=({x},{a})"));
            }
        }
        let mut aprod = Check::new("action product");
        for x in h.elements() {
            for y in h.elements() {
                for a in e.elements() {
                    for b in e.elements() {
                        let lhs = self.product(cm.shift(a, x), cm.shift(b, y)) * &self.phi(x, a).kron(self.phi(y, b));
                        let rhs = self.phi(h.mul(x, y), cm.twisted_product(a, x, b)) * self.product(x, y);
                        expect_eq(&mut aprod, &lhs, &rhs, || format!("(x,y,e,f)=({x},{y},{a},{b})"));
                    }
                }
            }
        }
        for c in [coassoc, counit, assoc, unital, morph, unit_morph, anti, aunit, acomp, acoalg, aprod] {
            report.push(c);
        }
        report
    }
}

pub fn validate_hopf_xi_algebra(a: &HopfXiAlgebra) -> ValidationReport {
    a.validate()
}

/// Transposes every structure map. The action dualizes through the inverse,
/// `ϕ'_{x,e} = (ϕ_{Ξ(e)x,e⁻¹})ᵀ`, so that it keeps mapping degree `x` to `Ξ(e)x`.
pub fn dualize_coalgebra(a: &HopfXiCoalgebra) -> Result<HopfXiAlgebra> {
    let (cm, h, e) = (a.cm(), a.h(), a.e());
    let n = h.order();
    let coproduct = h.elements().map(|x| a.component(x).mul().transpose()).collect();
    let counit = h.elements().map(|x| a.component(x).unit().transpose()).collect();
    let mut product = Vec::with_capacity(n * n);
    for x in h.elements() {
        for y in h.elements() {
            product.push(a.coproduct(x, y).transpose());
        }
    }
    let antipode = h
        .elements()
        .map(|x| a.antipode_at(x).map(Matrix::transpose))
        .collect::<Result<Vec<_>>>()?;
    let mut action = Vec::with_capacity(n * e.order());
    for x in h.elements() {
        for g in e.elements() {
            action.push(a.phi(cm.shift(g, x), e.inv(g)).transpose());
        }
    }
    HopfXiAlgebra::new(
        cm.clone(),
        a.field(),
        coproduct,
        counit,
        product,
        a.counit().transpose(),
        antipode,
        action,
    )
}

/// Inverse of [`dualize_coalgebra`].
pub fn dualize_algebra(a: &HopfXiAlgebra) -> Result<HopfXiCoalgebra> {
    let (cm, h, e, f) = (a.cm(), a.cm().h(), a.cm().e(), a.field());
    let components = h
        .elements()
        .map(|x| ComponentAlgebra::new(a.coproduct(x).transpose(), a.counit(x).transpose()))
        .collect::<Result<Vec<_>>>()?;
    let mut coproduct = Vec::with_capacity(h.order() * h.order());
    for x in h.elements() {
        for y in h.elements() {
            coproduct.push(a.product(x, y).transpose());
        }
    }
    let antipode = h.elements().map(|x| a.antipode(x).transpose()).collect();
    let base = GradedHopfCoalgebra::new(f, h.clone(), components, coproduct, a.unit().transpose(), Some(antipode))?;
    let mut action = Vec::with_capacity(h.order() * e.order());
    for x in h.elements() {
        for g in e.elements() {
            action.push(a.phi(cm.shift(g, x), e.inv(g)).transpose());
        }
    }
    HopfXiCoalgebra::new(cm.clone(), base, action)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn q(v: i64) -> Scalar {
        Scalar::from_i64(Q, v)
    }

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    fn sign_omega() -> Vec<Vec<Scalar>> {
        vec![vec![q(1), q(1)], vec![q(1), q(-1)]]
    }

    fn rho_sign() -> Vec<Matrix> {
        vec![Matrix::identity(Q, 2), Matrix::from_i64(Q, 2, 2, &[1, 0, 0, -1])]
    }

    #[test]
    fn trivial_structure_validates() {
        let a = mk_trivial(Q, &CrossedModule::identity(&z2()));
        assert!(a.validate().is_valid(), "{}", a.validate());
    }

    #[test]
    fn bicharacter_example() {
        let a = mk_bicharacter_group_algebra(Q, &z2(), &z2(), &sign_omega()).unwrap();
        assert!(a.validate().is_valid());
        let g = GrouplikeFamily(vec![vec![q(0), q(1)]]);
        let t = a.grouplike_pairing(&g).unwrap();
        assert_eq!(t.values, vec![q(1), q(-1)]);
        assert!(!a.is_xi_grouplike(&g));
        assert_eq!(a.enumerate_xi_grouplikes(), vec![a.base().unit_family()]);
    }

    #[test]
    fn bicharacter_rejections() {
        let two = vec![vec![q(2), q(2)], vec![q(2), q(2)]];
        assert!(matches!(
            mk_bicharacter_group_algebra(Q, &z2(), &z2(), &two),
            Err(AlgebraError::NotBicharacter(_))
        ));
        let ones = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        let a = mk_bicharacter_group_algebra(Q, &z2(), &z2(), &ones).unwrap();
        assert!(a.action().iter().all(Matrix::is_identity));
    }

    #[test]
    fn doubled_action_is_caught() {
        let a = mk_trivial(Q, &CrossedModule::identity(&z2()));
        let action = a.action().iter().map(|m| m.scale(&q(2))).collect();
        let bad = HopfXiCoalgebra::new(a.cm().clone(), a.base().clone(), action).unwrap();
        let r = bad.validate_xi_action();
        assert!(!r.find("action unit").unwrap().passed());
        assert!(!r.find("action composition").unwrap().passed());
    }

    #[test]
    fn h_action_example() {
        let cm = CrossedModule::identity(&z2());
        let hopf = GradedHopfCoalgebra::group_algebra(Q, &z2());
        let a = mk_from_h_action(&cm, &hopf, &rho_sign()).unwrap();
        // Δ_{h,1}(g) = g⊗g and Δ_{h,h}(g) = g⊗g
        let g = [q(0), q(1)];
        let gg = vec![q(0), q(0), q(0), q(1)];
        assert_eq!(a.coproduct(1, 0).apply(&g), gg);
        assert_eq!(a.coproduct(1, 1).apply(&g), gg);

        let shift = vec![Matrix::identity(Q, 2), Matrix::from_i64(Q, 2, 2, &[1, 1, 0, 1])];
        assert!(matches!(
            mk_from_h_action(&cm, &hopf, &shift),
            Err(AlgebraError::NotAlgebraAutomorphism(_))
        ));

        let trivial = vec![Matrix::identity(Q, 2); 2];
        let a = mk_from_h_action(&cm, &hopf, &trivial).unwrap();
        assert!((0..4).all(|i| a.base().coproducts()[i] == *hopf.coproduct(0, 0)));
    }

    #[test]
    fn pi_coalgebra_round_trip() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let (_, emb) = s3.subgroup(&[0, 3, 4]).unwrap();
        let cm = CrossedModule::inclusion(emb).unwrap();
        let b = GradedHopfCoalgebra::trivial(Q, &z2());
        let a = mk_from_pi_coalgebra(&cm, &b).unwrap();
        assert_eq!(a.dims().len(), 6);
        assert!(a.validate().is_valid());
        assert_eq!(extract_pi_coalgebra(&a, None).unwrap(), b);
        assert_eq!(extract_pi_coalgebra(&a, Some(&[4, 5])).unwrap(), b);
    }

    #[test]
    fn duality_round_trip() {
        let a = mk_bicharacter_group_algebra(Q, &z2(), &z2(), &sign_omega()).unwrap();
        let d = dualize_coalgebra(&a).unwrap();
        assert!(d.validate().is_valid(), "{}", d.validate());
        assert_eq!(dualize_algebra(&d).unwrap(), a);

        let cm = CrossedModule::identity(&z2());
        let k = mk_trivial(Q, &cm);
        assert_eq!(dualize_algebra(&dualize_coalgebra(&k).unwrap()).unwrap(), k);
    }
}
