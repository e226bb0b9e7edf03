//! Hopf H-coalgebras: families of algebras `A_x` with coproducts
//! `Δ_{x,y}: A_{xy} → A_x ⊗ A_y`, a counit on `A_1` and antipodes
//! `S_x: A_{x⁻¹} → A_x`.
//!
//! Coproducts are stored at index `x * |H| + y`.

use crate::error::{AlgebraError, Result};
use crate::group::FiniteGroup;
use crate::linalg::{fmt_vector, Field, Matrix, Scalar};
use crate::report::{Check, ValidationReport};

/// Compares two matrices and records the first differing entry as a witness.
pub(crate) fn expect_eq(check: &mut Check, lhs: &Matrix, rhs: &Matrix, ctx: impl FnOnce() -> String) {
    if let Some((i, j)) = lhs.first_difference(rhs) {
        check.fail(|| {
            if i == usize::MAX {
                format!("{}: shapes {:?} vs {:?}", ctx(), lhs.shape(), rhs.shape())
            } else {
                format!("{}: entry ({i},{j}) is {} vs {}", ctx(), lhs.get(i, j), rhs.get(i, j))
            }
        });
    }
}

/// A finite-dimensional algebra given by its product `μ: A ⊗ A → A`
/// (a `d × d²` matrix) and unit (a `d × 1` column).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ComponentAlgebra {
    mul: Matrix,
    unit: Matrix,
}

impl ComponentAlgebra {
    pub fn new(mul: Matrix, unit: Matrix) -> Result<Self> {
        let d = unit.rows();
        if d == 0 {
            return Err(AlgebraError::shape("components must be nonzero"));
        }
        if unit.cols() != 1 || mul.shape() != (d, d * d) {
            return Err(AlgebraError::shape(format!(
                "product {:?} and unit {:?} do not fit one dimension",
                mul.shape(),
                unit.shape()
            )));
        }
        if mul.field() != unit.field() {
            return Err(AlgebraError::MixedFields(mul.field(), unit.field()));
        }
        Ok(ComponentAlgebra { mul, unit })
    }

    /// `e_i · e_j = Σ_k c[i][j][k] e_k`.
    pub fn from_structure_constants(field: Field, c: &[Vec<Vec<Scalar>>], unit: Vec<Scalar>) -> Result<Self> {
        let d = unit.len();
        if c.len() != d || c.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(AlgebraError::shape("structure constants must be d×d×d"));
        }
        let mut mul = Matrix::zeros(field, d, d * d);
        for (i, ci) in c.iter().enumerate() {
            for (j, cij) in ci.iter().enumerate() {
                for (k, v) in cij.iter().enumerate() {
                    if v.field() != field {
                        return Err(AlgebraError::MixedFields(field, v.field()));
                    }
                    mul.set(k, i * d + j, v.clone());
                }
            }
        }
        ComponentAlgebra::new(mul, Matrix::column(field, unit))
    }

    pub fn ground(field: Field) -> Self {
        ComponentAlgebra {
            mul: Matrix::identity(field, 1),
            unit: Matrix::identity(field, 1),
        }
    }

    /// `k[G]` on the basis of group elements.
    pub fn group_algebra(field: Field, g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut mul = Matrix::zeros(field, n, n * n);
        for a in g.elements() {
            for b in g.elements() {
                mul.set(g.mul(a, b), a * n + b, field.one());
            }
        }
        let mut unit = Matrix::zeros(field, n, 1);
        unit.set(0, 0, field.one());
        ComponentAlgebra { mul, unit }
    }

    pub fn dim(&self) -> usize {
        self.unit.rows()
    }

    pub fn field(&self) -> Field {
        self.unit.field()
    }

    pub fn mul(&self) -> &Matrix {
        &self.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn unit_vector(&self) -> Vec<Scalar> {
        self.unit.col(0)
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let ab = Matrix::column(self.field(), a.to_vec()).kron(&Matrix::column(self.field(), b.to_vec()));
        self.mul.apply(&ab.col(0))
    }

    /// Matrix of `b ↦ a·b`.
    pub fn left_multiplication(&self, a: &[Scalar]) -> Matrix {
        let d = self.dim();
        &self.mul * &Matrix::column(self.field(), a.to_vec()).kron(&Matrix::identity(self.field(), d))
    }

    /// Two-sided inverse of `a`, if it exists.
    pub fn inverse_of(&self, a: &[Scalar]) -> Option<Vec<Scalar>> {
        let inv = self.left_multiplication(a).inverse()?;
        let b = inv.apply(&self.unit_vector());
        (self.multiply(&b, a) == self.unit_vector()).then_some(b)
    }

    pub fn validate(&self) -> ValidationReport {
        let (f, d) = (self.field(), self.dim());
        let id = Matrix::identity(f, d);
        let mut assoc = Check::new("associativity");
        expect_eq(&mut assoc, &(&self.mul * &self.mul.kron(&id)), &(&self.mul * &id.kron(&self.mul)), || {
            "μ(μ⊗id) vs μ(id⊗μ)".into()
        });
        let mut unit = Check::new("unit");
        expect_eq(&mut unit, &(&self.mul * &self.unit.kron(&id)), &id, || "μ(η⊗id)".into());
        expect_eq(&mut unit, &(&self.mul * &id.kron(&self.unit)), &id, || "μ(id⊗η)".into());
        ValidationReport { checks: vec![assoc, unit] }
    }
}

/// A family `(G_x)_{x∈H}` of coordinate vectors, `G_x ∈ A_x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrouplikeFamily(pub Vec<Vec<Scalar>>);

impl GrouplikeFamily {
    pub fn component(&self, x: usize) -> &[Scalar] {
        &self.0[x]
    }
}

impl std::fmt::Display for GrouplikeFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| fmt_vector(v)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Result of [`GradedHopfCoalgebra::compute_antipode`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Antipode {
    pub maps: Vec<Matrix>,
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedHopfCoalgebra {
    field: Field,
    group: FiniteGroup,
    components: Vec<ComponentAlgebra>,
    coproduct: Vec<Matrix>,
    counit: Matrix,
    antipode: Option<Vec<Matrix>>,
}

impl GradedHopfCoalgebra {
    /// Shape-checked constructor; the axioms are checked by the validators.
    pub fn new(
        field: Field,
        group: FiniteGroup,
        components: Vec<ComponentAlgebra>,
        coproduct: Vec<Matrix>,
        counit: Matrix,
        antipode: Option<Vec<Matrix>>,
    ) -> Result<Self> {
        let n = group.order();
        if components.len() != n || coproduct.len() != n * n {
            return Err(AlgebraError::shape(format!(
                "{} components and {} coproduct maps for a group of order {n}",
                components.len(),
                coproduct.len()
            )));
        }
        let dims: Vec<usize> = components.iter().map(ComponentAlgebra::dim).collect();
        let all_fields = components
            .iter()
            .map(ComponentAlgebra::field)
            .chain(coproduct.iter().map(Matrix::field))
            .chain(std::iter::once(counit.field()))
            .chain(antipode.iter().flatten().map(Matrix::field));
        for f in all_fields {
            if f != field {
                return Err(AlgebraError::MixedFields(field, f));
            }
        }
        for x in group.elements() {
            for y in group.elements() {
                let want = (dims[x] * dims[y], dims[group.mul(x, y)]);
                if coproduct[x * n + y].shape() != want {
                    return Err(AlgebraError::shape(format!(
                        "Δ_({x},{y}) is {:?}, expected {want:?}",
                        coproduct[x * n + y].shape()
                    )));
                }
            }
        }
        if counit.shape() != (1, dims[0]) {
            return Err(AlgebraError::shape(format!("counit is {:?}, expected (1, {})", counit.shape(), dims[0])));
        }
        if let Some(s) = &antipode {
            check_antipode_shapes(&group, &dims, s)?;
        }
        Ok(GradedHopfCoalgebra {
            field,
            group,
            components,
            coproduct,
            counit,
            antipode,
        })
    }

    /// A classical Hopf algebra, graded by the trivial group.
    pub fn classical(algebra: ComponentAlgebra, coproduct: Matrix, counit: Matrix, antipode: Option<Matrix>) -> Result<Self> {
        GradedHopfCoalgebra::new(
            algebra.field(),
            FiniteGroup::trivial(),
            vec![algebra],
            vec![coproduct],
            counit,
            antipode.map(|s| vec![s]),
        )
    }

    /// `k[G]` with `Δ(g) = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
    pub fn group_algebra(field: Field, g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut delta = Matrix::zeros(field, n * n, n);
        let mut s = Matrix::zeros(field, n, n);
        for a in g.elements() {
            delta.set(a * n + a, a, field.one());
            s.set(g.inv(a), a, field.one());
        }
        let counit = Matrix::from_fn(field, 1, n, |_, _| field.one());
        GradedHopfCoalgebra::classical(ComponentAlgebra::group_algebra(field, g), delta, counit, Some(s)).expect("shapes")
    }

    /// `k_H`: every component `k`, all structure maps the identity of `k`.
    pub fn trivial(field: Field, h: &FiniteGroup) -> Self {
        let n = h.order();
        let one = Matrix::identity(field, 1);
        GradedHopfCoalgebra {
            field,
            group: h.clone(),
            components: vec![ComponentAlgebra::ground(field); n],
            coproduct: vec![one.clone(); n * n],
            counit: one.clone(),
            antipode: Some(vec![one; n]),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn components(&self) -> &[ComponentAlgebra] {
        &self.components
    }

    pub fn component(&self, x: usize) -> &ComponentAlgebra {
        &self.components[x]
    }

    pub fn dim(&self, x: usize) -> usize {
        self.components[x].dim()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(ComponentAlgebra::dim).collect()
    }

    pub fn coproduct(&self, x: usize, y: usize) -> &Matrix {
        &self.coproduct[x * self.group.order() + y]
    }

    pub fn coproducts(&self) -> &[Matrix] {
        &self.coproduct
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn antipode(&self) -> Option<&[Matrix]> {
        self.antipode.as_deref()
    }

    /// `S_x: A_{x⁻¹} → A_x`.
    pub fn antipode_at(&self, x: usize) -> Result<&Matrix> {
        self.antipode.as_ref().map(|s| &s[x]).ok_or(AlgebraError::MissingAntipode)
    }

    pub fn set_antipode(&mut self, antipode: Option<Vec<Matrix>>) -> Result<()> {
        if let Some(s) = &antipode {
            check_antipode_shapes(&self.group, &self.dims(), s)?;
        }
        self.antipode = antipode;
        Ok(())
    }

    /// Computes the antipode and stores it.
    pub fn with_antipode(mut self) -> Result<Self> {
        let s = self.compute_antipode().ok_or(AlgebraError::NoAntipode)?;
        self.antipode = Some(s.maps);
        Ok(self)
    }

    fn id(&self, x: usize) -> Matrix {
        Matrix::identity(self.field, self.dim(x))
    }

    /// Coassociativity and counit laws over all `x, y, z`.
    pub fn validate_h_coalgebra(&self) -> ValidationReport {
        let g = &self.group;
        let mut coassoc = Check::new("coassociativity");
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    let lhs = &self.coproduct(x, y).kron(&self.id(z)) * self.coproduct(g.mul(x, y), z);
                    let rhs = &self.id(x).kron(self.coproduct(y, z)) * self.coproduct(x, g.mul(y, z));
                    expect_eq(&mut coassoc, &lhs, &rhs, || format!("(x,y,z)=({x},{y},{z})"));
                }
            }
        }
        let mut counit = Check::new("counit");
        for x in g.elements() {
            let left = &self.counit.kron(&self.id(x)) * self.coproduct(0, x);
            expect_eq(&mut counit, &left, &self.id(x), || format!("(ε⊗id)Δ_(1,{x})"));
            let right = &self.id(x).kron(&self.counit) * self.coproduct(x, 0);
            expect_eq(&mut counit, &right, &self.id(x), || format!("(id⊗ε)Δ_({x},1)"));
        }
        ValidationReport {
            checks: vec![coassoc, counit],
        }
    }

    /// Algebra axioms of every component.
    pub fn validate_components(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for (x, a) in self.components.iter().enumerate() {
            report.absorb(&format!("A_{x}"), a.validate());
        }
        report
    }

    /// `Δ_{x,y}` and `ε` are unital and multiplicative.
    pub fn validate_bicoalgebra(&self) -> ValidationReport {
        let (g, f) = (&self.group, self.field);
        let mut dmul = Check::new("coproduct multiplicative");
        let mut dunit = Check::new("coproduct unital");
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                let delta = self.coproduct(x, y);
                let (ax, ay, axy) = (self.component(x), self.component(y), self.component(xy));
                let lhs = delta * axy.mul();
                let middle = self.id(x).kron(&Matrix::swap(f, ay.dim(), ax.dim())).kron(&self.id(y));
                let rhs = &(&ax.mul().kron(ay.mul()) * &middle) * &delta.kron(delta);
                expect_eq(&mut dmul, &lhs, &rhs, || format!("(x,y)=({x},{y})"));
                expect_eq(&mut dunit, &(delta * axy.unit()), &ax.unit().kron(ay.unit()), || {
                    format!("(x,y)=({x},{y})")
                });
            }
        }
        let a1 = self.component(0);
        let mut emul = Check::new("counit multiplicative");
        expect_eq(&mut emul, &(&self.counit * a1.mul()), &self.counit.kron(&self.counit), || {
            "εμ_1 vs ε⊗ε".into()
        });
        let mut eunit = Check::new("counit unital");
        expect_eq(&mut eunit, &(&self.counit * a1.unit()), &Matrix::identity(f, 1), || "ε(1)".into());
        ValidationReport {
            checks: vec![dmul, dunit, emul, eunit],
        }
    }

    /// Solves `μ_x(S_x⊗id)Δ_{x⁻¹,x} = η_x ε` for each `S_x`, then checks the
    /// right-handed identity and invertibility. `None` when some step fails.
    pub fn compute_antipode(&self) -> Option<Antipode> {
        let (g, f) = (&self.group, self.field);
        let d1 = self.dim(0);
        let mut maps = Vec::with_capacity(g.order());
        let mut unique = true;
        for x in g.elements() {
            let xi = g.inv(x);
            let (dx, dxi) = (self.dim(x), self.dim(xi));
            let mu = self.component(x).mul();
            let delta = self.coproduct(xi, x);
            let target = self.component(x).unit() * &self.counit;
            // unknown s[i][j] at i * dxi + j; equation (m, k) at m * d1 + k
            let mut system = Matrix::zeros(f, dx * d1, dx * dxi);
            let mut rhs = Vec::with_capacity(dx * d1);
            for m in 0..dx {
                for k in 0..d1 {
                    for i in 0..dx {
                        for j in 0..dxi {
                            let mut acc = f.zero();
                            for l in 0..dx {
                                let (dv, mv) = (delta.get(j * dx + l, k), mu.get(m, i * dx + l));
                                if !dv.is_zero() && !mv.is_zero() {
                                    acc = &acc + &(dv * mv);
                                }
                            }
                            system.set(m * d1 + k, i * dxi + j, acc);
                        }
                    }
                    rhs.push(target.get(m, k).clone());
                }
            }
            let solution = system.solve_linear(&rhs).ok()??;
            unique &= solution.unique;
            let s = Matrix::from_vec(f, dx, dxi, solution.vector).ok()?;
            s.inverse()?;
            maps.push(s);
        }
        let candidate = GradedHopfCoalgebra {
            antipode: Some(maps.clone()),
            ..self.clone()
        };
        let report = candidate.validate_antipode().ok()?;
        report.is_valid().then_some(Antipode { maps, unique })
    }

    /// Both antipode identities and invertibility of each `S_x`.
    pub fn validate_antipode(&self) -> Result<ValidationReport> {
        let s = self.antipode.as_ref().ok_or(AlgebraError::MissingAntipode)?;
        let g = &self.group;
        let mut left = Check::new("antipode left identity");
        let mut right = Check::new("antipode right identity");
        let mut invertible = Check::new("antipode invertible");
        for x in g.elements() {
            let xi = g.inv(x);
            let ax = self.component(x);
            let target = ax.unit() * &self.counit;
            let l = &(ax.mul() * &s[x].kron(&self.id(x))) * self.coproduct(xi, x);
            expect_eq(&mut left, &l, &target, || format!("x={x}"));
            let r = &(ax.mul() * &self.id(x).kron(&s[x])) * self.coproduct(x, xi);
            expect_eq(&mut right, &r, &target, || format!("x={x}"));
            invertible.expect(s[x].inverse().is_some(), || format!("S_{x} is singular"));
        }
        Ok(ValidationReport {
            checks: vec![left, right, invertible],
        })
    }

    /// Anti-multiplicativity, unitality, anti-comultiplicativity and `εS_1 = ε`.
    pub fn antipode_properties(&self) -> Result<ValidationReport> {
        let s = self.antipode.as_ref().ok_or(AlgebraError::MissingAntipode)?;
        let (g, f) = (&self.group, self.field);
        let mut antimul = Check::new("antipode anti-multiplicative");
        let mut unital = Check::new("antipode unital");
        for x in g.elements() {
            let xi = g.inv(x);
            let (ax, axi) = (self.component(x), self.component(xi));
            let lhs = &s[x] * axi.mul();
            let rhs = &(ax.mul() * &Matrix::swap(f, ax.dim(), ax.dim())) * &s[x].kron(&s[x]);
            expect_eq(&mut antimul, &lhs, &rhs, || format!("x={x}"));
            expect_eq(&mut unital, &(&s[x] * axi.unit()), ax.unit(), || format!("x={x}"));
        }
        let mut anticomul = Check::new("antipode anti-comultiplicative");
        for x in g.elements() {
            for y in g.elements() {
                let xy = g.mul(x, y);
                let lhs = self.coproduct(x, y) * &s[xy];
                let (xi, yi) = (g.inv(x), g.inv(y));
                let flip = Matrix::swap(f, self.dim(yi), self.dim(xi));
                let rhs = &(&s[x].kron(&s[y]) * &flip) * self.coproduct(yi, xi);
                expect_eq(&mut anticomul, &lhs, &rhs, || format!("(x,y)=({x},{y})"));
            }
        }
        let mut counit = Check::new("antipode preserves counit");
        expect_eq(&mut counit, &(&self.counit * &s[0]), &self.counit, || "εS_1".into());
        Ok(ValidationReport {
            checks: vec![antimul, unital, anticomul, counit],
        })
    }

    /// Every check of this layer; a missing antipode is a failing check.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        report.absorb("algebra", self.validate_components());
        report.absorb("coalgebra", self.validate_h_coalgebra());
        report.absorb("bicoalgebra", self.validate_bicoalgebra());
        match (self.validate_antipode(), self.antipode_properties()) {
            (Ok(a), Ok(p)) => {
                report.absorb("antipode", a);
                report.absorb("antipode", p);
            }
            _ => {
                let mut c = Check::new("antipode: present");
                c.fail(|| "no antipode supplied".into());
                report.push(c);
            }
        }
        report
    }

    /// `m_B (f ⊗ g) Δ_{x,y}` for maps `f: A_x → B`, `g: A_y → B` and the
    /// product `m_B` of `B`.
    pub fn convolution_product(&self, x: usize, y: usize, f: &Matrix, g: &Matrix, m_b: &Matrix) -> Result<Matrix> {
        let db = m_b.rows();
        if f.shape() != (db, self.dim(x)) || g.shape() != (db, self.dim(y)) || m_b.cols() != db * db {
            return Err(AlgebraError::shape("convolution operands do not fit"));
        }
        m_b.try_mul(&f.try_kron(g)?)?.try_mul(self.coproduct(x, y))
    }

    /// Checks `Δ_{x,y}(G_{xy}) = G_x ⊗ G_y` and `ε(G_1) = 1`.
    pub fn grouplike_check(&self, family: &GrouplikeFamily) -> ValidationReport {
        let g = &self.group;
        let mut shape = Check::new("grouplike shape");
        let fits = family.0.len() == g.order()
            && family
                .0
                .iter()
                .enumerate()
                .all(|(x, v)| v.len() == self.dim(x) && v.iter().all(|s| s.field() == self.field));
        shape.expect(fits, || "family does not match the component dimensions".into());
        if !fits {
            return ValidationReport { checks: vec![shape] };
        }
        let col = |x: usize| Matrix::column(self.field, family.0[x].clone());
        let mut coprod = Check::new("grouplike coproduct");
        for x in g.elements() {
            for y in g.elements() {
                let lhs = self.coproduct(x, y) * &col(g.mul(x, y));
                expect_eq(&mut coprod, &lhs, &col(x).kron(&col(y)), || format!("(x,y)=({x},{y})"));
            }
        }
        let mut counit = Check::new("grouplike counit");
        expect_eq(&mut counit, &(&self.counit * &col(0)), &Matrix::identity(self.field, 1), || {
            "ε(G_1)".into()
        });
        ValidationReport {
            checks: vec![shape, coprod, counit],
        }
    }

    pub fn is_grouplike(&self, family: &GrouplikeFamily) -> bool {
        self.grouplike_check(family).is_valid()
    }

    pub fn unit_family(&self) -> GrouplikeFamily {
        GrouplikeFamily(self.components.iter().map(ComponentAlgebra::unit_vector).collect())
    }

    /// `G⁻¹ = (S_x(G_{x⁻¹}))_x`, verified to be a pointwise inverse.
    pub fn grouplike_inverse(&self, family: &GrouplikeFamily) -> Result<GrouplikeFamily> {
        if !self.is_grouplike(family) {
            return Err(AlgebraError::NotGrouplike(family.to_string()));
        }
        let s = self.antipode.as_ref().ok_or(AlgebraError::MissingAntipode)?;
        let g = &self.group;
        let inv = GrouplikeFamily(g.elements().map(|x| s[x].apply(&family.0[g.inv(x)])).collect());
        for x in g.elements() {
            let a = self.component(x);
            if a.multiply(&family.0[x], &inv.0[x]) != a.unit_vector() || a.multiply(&inv.0[x], &family.0[x]) != a.unit_vector() {
                return Err(AlgebraError::NotGrouplike(format!("{family} is not invertible at x={x}")));
            }
        }
        Ok(inv)
    }

    pub fn grouplike_product(&self, a: &GrouplikeFamily, b: &GrouplikeFamily) -> GrouplikeFamily {
        GrouplikeFamily(self.group.elements().map(|x| self.component(x).multiply(&a.0[x], &b.0[x])).collect())
    }

    /// All grouplike families whose components are ± basis vectors (or the
    /// unit), found by backtracking over components in index order. Sorted.
    pub fn enumerate_grouplikes(&self) -> Vec<GrouplikeFamily> {
        let (g, f) = (&self.group, self.field);
        let candidates: Vec<Vec<Vec<Scalar>>> = g
            .elements()
            .map(|x| {
                let d = self.dim(x);
                let mut c = Vec::new();
                for i in 0..d {
                    for sign in [f.one(), -f.one()] {
                        let mut v = vec![f.zero(); d];
                        v[i] = sign;
                        c.push(v);
                    }
                }
                c.push(self.component(x).unit_vector());
                c.sort();
                c.dedup();
                c
            })
            .collect();
        let mut found = Vec::new();
        let mut chosen: Vec<Vec<Scalar>> = Vec::with_capacity(g.order());
        self.grouplike_search(&candidates, &mut chosen, &mut found);
        found.sort();
        found
    }

    fn grouplike_search(&self, candidates: &[Vec<Vec<Scalar>>], chosen: &mut Vec<Vec<Scalar>>, found: &mut Vec<GrouplikeFamily>) {
        let g = &self.group;
        let k = chosen.len();
        if k == g.order() {
            found.push(GrouplikeFamily(chosen.clone()));
            return;
        }
        for v in &candidates[k] {
            chosen.push(v.clone());
            if self.partial_grouplike_ok(chosen) {
                self.grouplike_search(candidates, chosen, found);
            }
            chosen.pop();
        }
    }

    /// Checks every constraint whose indices are all already assigned and
    /// involve the newest one.
    fn partial_grouplike_ok(&self, chosen: &[Vec<Scalar>]) -> bool {
        let g = &self.group;
        let k = chosen.len() - 1;
        let col = |x: usize| Matrix::column(self.field, chosen[x].clone());
        if k == 0 && !self.counit.apply(&chosen[0])[0].is_one() {
            return false;
        }
        for x in 0..=k {
            for y in 0..=k {
                let xy = g.mul(x, y);
                if xy > k || (x != k && y != k && xy != k) {
                    continue;
                }
                if self.coproduct(x, y) * &col(xy) != col(x).kron(&col(y)) {
                    return false;
                }
            }
        }
        true
    }

    /// `S_x S_{x⁻¹}(a) = G_x a G_x⁻¹` on a basis of every `A_x`.
    pub fn is_pivotal_element(&self, family: &GrouplikeFamily) -> Result<ValidationReport> {
        let inv = self.grouplike_inverse(family)?;
        let s = self.antipode.as_ref().ok_or(AlgebraError::MissingAntipode)?;
        let g = &self.group;
        let mut check = Check::new("pivotal");
        for x in g.elements() {
            let a = self.component(x);
            let lhs = &s[x] * &s[g.inv(x)];
            let rhs = &a.left_multiplication(&family.0[x]) * &right_multiplication(a, &inv.0[x]);
            expect_eq(&mut check, &lhs, &rhs, || format!("x={x}"));
        }
        Ok(ValidationReport { checks: vec![check] })
    }

    /// `(A_1, Δ_{1,1}, ε, S_1)` as a classical Hopf algebra.
    pub fn identity_component(&self) -> Result<GradedHopfCoalgebra> {
        GradedHopfCoalgebra::classical(
            self.component(0).clone(),
            self.coproduct(0, 0).clone(),
            self.counit.clone(),
            self.antipode.as_ref().map(|s| s[0].clone()),
        )
    }
}

/// Matrix of `b ↦ b·a`.
pub fn right_multiplication(alg: &ComponentAlgebra, a: &[Scalar]) -> Matrix {
    let d = alg.dim();
    alg.mul() * &Matrix::identity(alg.field(), d).kron(&Matrix::column(alg.field(), a.to_vec()))
}

fn check_antipode_shapes(group: &FiniteGroup, dims: &[usize], s: &[Matrix]) -> Result<()> {
    if s.len() != group.order() {
        return Err(AlgebraError::shape("one antipode map per group element"));
    }
    for x in group.elements() {
        let want = (dims[x], dims[group.inv(x)]);
        if s[x].shape() != want {
            return Err(AlgebraError::shape(format!("S_{x} is {:?}, expected {want:?}", s[x].shape())));
        }
    }
    Ok(())
}
