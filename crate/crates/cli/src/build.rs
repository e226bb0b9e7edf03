//! Turns document entries into library structures. Constructors that only
//! check shapes are used wherever possible, so that axiom failures surface as
//! validation reports rather than input errors.

use std::cell::RefCell;
use std::collections::BTreeMap;

use xmod_hopf::hopf_module::{dual_hopf_module, trivial_hopf_module};
use xmod_hopf::rep::{pullback_phi_e, tensor_modules};
use xmod_hopf::xi::{dualize_coalgebra, mk_bicharacter_group_algebra, mk_from_h_action, mk_from_pi_coalgebra, mk_trivial};
use xmod_hopf::{
    AModule, ComponentAlgebra, CrossedModule, Field, FiniteGroup, GradedHopfCoalgebra, GroupAction, GroupHom, GrouplikeFamily, HopfXiAlgebra,
    HopfXiCoalgebra, HopfXiModule, Matrix, Scalar, Side, XiIntegral,
};

use crate::document::{parse_lit, Elem, Kind, Lit, Rows, SideSpec, StructureDocument};
use crate::error::{classify, CliResult, InputError};

/// Optional element names of a group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Labels(pub Option<Vec<String>>);

impl Labels {
    fn point() -> Self {
        Labels(Some(vec!["1".into()]))
    }

    pub fn label(&self, i: usize) -> String {
        match &self.0 {
            Some(names) if i < names.len() => names[i].clone(),
            _ => i.to_string(),
        }
    }

    pub fn resolve(&self, e: &Elem, order: usize, path: &str) -> Result<usize, InputError> {
        match e {
            Elem::Index(i) if *i < order => Ok(*i),
            Elem::Index(i) => Err(InputError::shape(path, format!("element {i} out of range for order {order}"))),
            Elem::Name(n) => self
                .0
                .as_ref()
                .and_then(|names| names.iter().position(|m| m == n))
                .ok_or_else(|| InputError::reference(path, format!("no element named {n:?}"))),
        }
    }

    fn pick(&self, indices: &[usize]) -> Labels {
        Labels(self.0.as_ref().map(|names| indices.iter().map(|&i| names[i].clone()).collect()))
    }
}

/// Element names of a crossed module's two groups.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XmLabels {
    pub e: Labels,
    pub h: Labels,
}

/// Lazily built view of a parsed document.
pub struct Workspace<'d> {
    pub doc: &'d StructureDocument,
    pub field: Field,
    coalgebras: RefCell<BTreeMap<String, HopfXiCoalgebra>>,
}

/// Largest group order a directive may produce.
pub const MAX_ORDER: usize = 720;
/// Largest dimension a module directive may produce.
pub const MAX_DIM: usize = 4096;

fn bounded(path: &str, what: &str, value: usize, max: usize) -> Result<usize, InputError> {
    if value > max {
        return Err(InputError::shape(path, format!("{what} {value} exceeds the limit {max}")));
    }
    Ok(value)
}

fn at(kind: Kind, name: &str) -> String {
    format!("{}.{name}", kind.section())
}

impl<'d> Workspace<'d> {
    pub fn new(doc: &'d StructureDocument) -> Result<Self, InputError> {
        Ok(Workspace {
            doc,
            field: doc.field()?,
            coalgebras: RefCell::new(BTreeMap::new()),
        })
    }

    fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: Kind, name: &str) -> Result<&'a T, InputError> {
        map.get(name)
            .ok_or_else(|| InputError::reference(kind.section(), format!("{name:?} is not defined in {}", kind.section())))
    }

    pub fn scalar(&self, lit: &Lit, path: &str) -> Result<Scalar, InputError> {
        parse_lit(self.field, lit, path)
    }

    pub fn vector(&self, v: &[Lit], len: usize, path: &str) -> Result<Vec<Scalar>, InputError> {
        if v.len() != len {
            return Err(InputError::shape(path, format!("expected {len} entries, found {}", v.len())));
        }
        v.iter().map(|l| self.scalar(l, path)).collect()
    }

    pub fn matrix(&self, rows: &Rows, shape: (usize, usize), path: &str) -> Result<Matrix, InputError> {
        let (r, c) = shape;
        if rows.len() != r || rows.iter().any(|row| row.len() != c) {
            return Err(InputError::shape(path, format!("expected a {r}x{c} matrix")));
        }
        let data = rows.iter().flatten().map(|l| self.scalar(l, path)).collect::<Result<Vec<_>, _>>()?;
        Matrix::from_vec(self.field, r, c, data).map_err(|e| InputError::shape(path, e.to_string()))
    }

    fn matrices(&self, list: &[Rows], shapes: &[(usize, usize)], path: &str) -> Result<Vec<Matrix>, InputError> {
        if list.len() != shapes.len() {
            return Err(InputError::shape(
                path,
                format!("expected {} matrices, found {}", shapes.len(), list.len()),
            ));
        }
        list.iter()
            .zip(shapes)
            .enumerate()
            .map(|(i, (m, &s))| self.matrix(m, s, &format!("{path}[{i}]")))
            .collect()
    }

    pub fn group(&self, name: &str) -> CliResult<(FiniteGroup, Labels)> {
        let spec = Self::lookup(&self.doc.groups, Kind::Group, name)?;
        let path = at(Kind::Group, name);
        let err = |e| classify(&path, e);
        let (group, derived) = if let Some(n) = spec.cyclic {
            (FiniteGroup::cyclic(bounded(&path, "order", n, MAX_ORDER)?).map_err(err)?, Labels(None))
        } else if let Some(n) = spec.symmetric {
            let order = (1..=n).try_fold(1usize, |acc, k| acc.checked_mul(k)).unwrap_or(usize::MAX);
            bounded(&path, "order", order, MAX_ORDER)?;
            (FiniteGroup::symmetric(n).map_err(err)?, Labels(None))
        } else if let Some((a, b)) = &spec.product {
            let ((g, lg), (h, lh)) = (self.group(a)?, self.group(b)?);
            bounded(&path, "order", g.order() * h.order(), MAX_ORDER)?;
            let names = match (&lg.0, &lh.0) {
                (Some(x), Some(y)) => Some(x.iter().flat_map(|p| y.iter().map(move |q| format!("({p},{q})"))).collect()),
                _ => None,
            };
            (FiniteGroup::direct_product(&g, &h), Labels(names))
        } else {
            let (order, table) = (spec.order.unwrap_or(0), spec.table.clone().unwrap_or_default());
            if table.len() != order {
                return Err(InputError::shape(&path, format!("order {order} but {} table rows", table.len())).into());
            }
            (FiniteGroup::from_table(table).map_err(err)?, Labels(None))
        };
        let labels = match &spec.names {
            None => derived,
            Some(names) => {
                let mut sorted = names.clone();
                sorted.sort();
                sorted.dedup();
                if names.len() != group.order() || sorted.len() != names.len() {
                    return Err(InputError::invalid(&path, "names must be distinct, one per element").into());
                }
                Labels(Some(names.clone()))
            }
        };
        Ok((group, labels))
    }

    pub fn crossed_module(&self, name: &str) -> CliResult<(CrossedModule, XmLabels)> {
        let spec = Self::lookup(&self.doc.crossed_modules, Kind::CrossedModule, name)?;
        let path = at(Kind::CrossedModule, name);
        let err = |e| classify(&path, e);
        if let Some(g) = &spec.identity {
            let (g, l) = self.group(g)?;
            return Ok((CrossedModule::identity(&g), XmLabels { e: l.clone(), h: l }));
        }
        if let Some(h) = &spec.trivial_over {
            let (h, l) = self.group(h)?;
            return Ok((CrossedModule::trivial_over(&h), XmLabels { e: Labels::point(), h: l }));
        }
        if let Some(e) = &spec.to_point {
            let (e, l) = self.group(e)?;
            return Ok((CrossedModule::abelian_to_point(&e).map_err(err)?, XmLabels { e: l, h: Labels::point() }));
        }
        if let Some(inc) = &spec.inclusion {
            let (g, l) = self.group(&inc.group)?;
            let elements = inc
                .subgroup
                .iter()
                .map(|e| l.resolve(e, g.order(), &path))
                .collect::<Result<Vec<_>, _>>()?;
            let (_, emb) = g.subgroup(&elements).map_err(err)?;
            let cm = CrossedModule::inclusion(emb).map_err(err)?;
            return Ok((cm, XmLabels { e: l.pick(&elements), h: l }));
        }
        let x = spec.explicit.as_ref().ok_or_else(|| InputError::invalid(&path, "no directive"))?;
        let ((e, le), (h, lh)) = (self.group(&x.e)?, self.group(&x.h)?);
        let map = x.xi.iter().map(|v| lh.resolve(v, h.order(), &path)).collect::<Result<Vec<_>, _>>()?;
        let rows = x
            .action
            .iter()
            .map(|row| row.iter().map(|v| le.resolve(v, e.order(), &path)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let xi = GroupHom::new(e.clone(), h.clone(), map).map_err(err)?;
        let action = GroupAction::new(h, e, rows).map_err(err)?;
        Ok((CrossedModule::unchecked(xi, action).map_err(err)?, XmLabels { e: le, h: lh }))
    }

    /// Element names for the crossed module a coalgebra is built over.
    pub fn coalgebra_labels(&self, name: &str) -> CliResult<XmLabels> {
        let spec = Self::lookup(&self.doc.coalgebras, Kind::Coalgebra, name)?;
        let cm = spec
            .trivial
            .as_ref()
            .or(spec.from_h_action.as_ref().map(|r| &r.crossed_module))
            .or(spec.from_pi_coalgebra.as_ref().map(|p| &p.crossed_module))
            .or(spec.explicit.as_ref().map(|x| &x.crossed_module));
        if let Some(cm) = cm {
            return Ok(self.crossed_module(cm)?.1);
        }
        if let Some(b) = &spec.bicharacter {
            return Ok(XmLabels {
                e: self.group(&b.e)?.1,
                h: Labels::point(),
            });
        }
        Ok(XmLabels {
            e: Labels::point(),
            h: Labels::point(),
        })
    }

    pub fn coalgebra(&self, name: &str) -> CliResult<HopfXiCoalgebra> {
        if let Some(a) = self.coalgebras.borrow().get(name) {
            return Ok(a.clone());
        }
        let a = self.build_coalgebra(name)?;
        self.coalgebras.borrow_mut().insert(name.to_string(), a.clone());
        Ok(a)
    }

    fn build_coalgebra(&self, name: &str) -> CliResult<HopfXiCoalgebra> {
        let spec = Self::lookup(&self.doc.coalgebras, Kind::Coalgebra, name)?;
        let path = at(Kind::Coalgebra, name);
        let err = |e| classify(&path, e);
        let f = self.field;
        if let Some(cm) = &spec.trivial {
            return Ok(mk_trivial(f, &self.crossed_module(cm)?.0));
        }
        if let Some(g) = &spec.group_algebra {
            let (g, _) = self.group(g)?;
            let point = CrossedModule::trivial_over(&FiniteGroup::trivial());
            let base = GradedHopfCoalgebra::group_algebra(f, &g);
            return HopfXiCoalgebra::new(point, base, vec![Matrix::identity(f, g.order())]).map_err(err);
        }
        if let Some(b) = &spec.bicharacter {
            let ((e, _), (g, _)) = (self.group(&b.e)?, self.group(&b.g)?);
            let omega = self.matrix(&b.omega, (e.order(), g.order()), &format!("{path}.omega"))?;
            return mk_bicharacter_group_algebra(f, &e, &g, &omega.to_rows()).map_err(err);
        }
        if let Some(r) = &spec.from_h_action {
            let (cm, _) = self.crossed_module(&r.crossed_module)?;
            let hopf = self.coalgebra(&r.hopf)?;
            let d = hopf.dim(0);
            let rho = self.matrices(&r.rho, &vec![(d, d); cm.h().order()], &format!("{path}.rho"))?;
            return mk_from_h_action(&cm, hopf.base(), &rho).map_err(err);
        }
        if let Some(p) = &spec.from_pi_coalgebra {
            let (cm, _) = self.crossed_module(&p.crossed_module)?;
            let b = self.coalgebra(&p.coalgebra)?;
            return mk_from_pi_coalgebra(&cm, b.base()).map_err(err);
        }
        let x = spec.explicit.as_ref().ok_or_else(|| InputError::invalid(&path, "no directive"))?;
        let (cm, _) = self.crossed_module(&x.crossed_module)?;
        let (h, e) = (cm.h().clone(), cm.e().clone());
        if x.components.len() != h.order() {
            return Err(InputError::shape(&path, format!("{} components for a group of order {}", x.components.len(), h.order())).into());
        }
        let mut components = Vec::with_capacity(h.order());
        for (i, c) in x.components.iter().enumerate() {
            let d = c.unit.len();
            let at = format!("{path}.components[{i}]");
            let mul = self.matrix(&c.product, (d, d * d), &format!("{at}.product"))?;
            let unit = Matrix::column(f, self.vector(&c.unit, d, &format!("{at}.unit"))?);
            components.push(ComponentAlgebra::new(mul, unit).map_err(err)?);
        }
        let dims: Vec<usize> = components.iter().map(ComponentAlgebra::dim).collect();
        let pairs: Vec<(usize, usize)> = h.elements().flat_map(|a| h.elements().map(move |b| (a, b))).collect();
        let shapes: Vec<_> = pairs.iter().map(|&(a, b)| (dims[a] * dims[b], dims[h.mul(a, b)])).collect();
        let coproduct = self.matrices(&x.coproduct, &shapes, &format!("{path}.coproduct"))?;
        let counit = Matrix::row_vector(f, self.vector(&x.counit, dims[0], &format!("{path}.counit"))?);
        let antipode = match &x.antipode {
            Some(list) => {
                let shapes: Vec<_> = h.elements().map(|a| (dims[a], dims[h.inv(a)])).collect();
                Some(self.matrices(list, &shapes, &format!("{path}.antipode"))?)
            }
            None => None,
        };
        let shapes: Vec<_> = h
            .elements()
            .flat_map(|a| e.elements().map(move |g| (a, g)))
            .map(|(a, g)| (dims[cm.shift(g, a)], dims[a]))
            .collect();
        let action = self.matrices(&x.action, &shapes, &format!("{path}.action"))?;
        let explicit_antipode = antipode.is_some();
        let mut base = GradedHopfCoalgebra::new(f, h, components, coproduct, counit, antipode).map_err(err)?;
        if !explicit_antipode {
            // left absent when none exists; the validator reports it
            if let Ok(with) = base.clone().with_antipode() {
                base = with;
            }
        }
        HopfXiCoalgebra::new(cm, base, action).map_err(err)
    }

    pub fn algebra(&self, name: &str) -> CliResult<HopfXiAlgebra> {
        let spec = Self::lookup(&self.doc.algebras, Kind::Algebra, name)?;
        let path = at(Kind::Algebra, name);
        let err = |e| classify(&path, e);
        if let Some(c) = &spec.dual_of {
            return dualize_coalgebra(&self.coalgebra(c)?).map_err(err);
        }
        let x = spec.explicit.as_ref().ok_or_else(|| InputError::invalid(&path, "no directive"))?;
        let (cm, _) = self.crossed_module(&x.crossed_module)?;
        let (h, e, f) = (cm.h().clone(), cm.e().clone(), self.field);
        if x.counit.len() != h.order() {
            return Err(InputError::shape(&path, "one counit row per element of H").into());
        }
        let dims: Vec<usize> = x.counit.iter().map(Vec::len).collect();
        let counit = x
            .counit
            .iter()
            .enumerate()
            .map(|(i, row)| Ok(Matrix::row_vector(f, self.vector(row, row.len(), &format!("{path}.counit[{i}]"))?)))
            .collect::<Result<Vec<_>, InputError>>()?;
        let shapes: Vec<_> = dims.iter().map(|&d| (d * d, d)).collect();
        let coproduct = self.matrices(&x.coproduct, &shapes, &format!("{path}.coproduct"))?;
        let shapes: Vec<_> = h
            .elements()
            .flat_map(|a| h.elements().map(move |b| (a, b)))
            .map(|(a, b)| (dims[h.mul(a, b)], dims[a] * dims[b]))
            .collect();
        let product = self.matrices(&x.product, &shapes, &format!("{path}.product"))?;
        let unit = Matrix::column(f, self.vector(&x.unit, dims[0], &format!("{path}.unit"))?);
        let shapes: Vec<_> = h.elements().map(|a| (dims[h.inv(a)], dims[a])).collect();
        let antipode = self.matrices(&x.antipode, &shapes, &format!("{path}.antipode"))?;
        let shapes: Vec<_> = h
            .elements()
            .flat_map(|a| e.elements().map(move |g| (a, g)))
            .map(|(a, g)| (dims[cm.shift(g, a)], dims[a]))
            .collect();
        let action = self.matrices(&x.action, &shapes, &format!("{path}.action"))?;
        HopfXiAlgebra::new(cm, f, coproduct, counit, product, unit, antipode, action).map_err(err)
    }

    /// The coalgebra a module, Hopf module, grouplike or integral lives over.
    pub fn owner(&self, kind: Kind, name: &str) -> Option<&'d str> {
        let d = self.doc;
        match kind {
            Kind::Module => d.modules.get(name).map(|m| m.coalgebra.as_str()),
            Kind::HopfModule => d.hopf_modules.get(name).map(|m| m.coalgebra.as_str()),
            Kind::Grouplike => d.grouplikes.get(name).map(|m| m.coalgebra.as_str()),
            Kind::Integral => d.integrals.get(name).map(|m| m.coalgebra.as_str()),
            _ => None,
        }
    }

    pub fn module(&self, name: &str) -> CliResult<AModule> {
        let spec = Self::lookup(&self.doc.modules, Kind::Module, name)?;
        let path = at(Kind::Module, name);
        let err = |e| classify(&path, e);
        let a = self.coalgebra(&spec.coalgebra)?;
        let labels = self.coalgebra_labels(&spec.coalgebra)?;
        let same_owner = |other: &str| -> Result<(), InputError> {
            match self.owner(Kind::Module, other) {
                Some(c) if c == spec.coalgebra => Ok(()),
                _ => Err(InputError::reference(&path, format!("module {other:?} is not over {:?}", spec.coalgebra))),
            }
        };
        if spec.unit == Some(true) {
            return Ok(AModule::unit(&a));
        }
        if let Some(x) = &spec.regular {
            return Ok(AModule::regular(&a, labels.h.resolve(x, a.h().order(), &path)?));
        }
        if let Some(c) = &spec.concentrated {
            let x = labels.h.resolve(&c.degree, a.h().order(), &path)?;
            let m = c.action.len();
            let r = self.matrix(&c.action, (m, a.dim(x) * m), &format!("{path}.action"))?;
            return AModule::concentrated(&a, x, r).map_err(err);
        }
        if let Some((m, n)) = &spec.tensor {
            same_owner(m)?;
            same_owner(n)?;
            let (m, n) = (self.module(m)?, self.module(n)?);
            bounded(&path, "dimension", m.total_dim() * n.total_dim(), MAX_DIM)?;
            return Ok(tensor_modules(&a, &m, &n));
        }
        if let Some(p) = &spec.pullback {
            same_owner(&p.module)?;
            let e = labels.e.resolve(&p.by, a.e().order(), &path)?;
            return Ok(pullback_phi_e(&a, &self.module(&p.module)?, e));
        }
        let x = spec.explicit.as_ref().ok_or_else(|| InputError::invalid(&path, "no directive"))?;
        if x.dims.len() != a.h().order() {
            return Err(InputError::shape(&path, "one dimension per element of H").into());
        }
        for &d in &x.dims {
            bounded(&path, "dimension", d, MAX_DIM)?;
        }
        let shapes: Vec<_> = a.h().elements().map(|g| (x.dims[g], a.dim(g) * x.dims[g])).collect();
        AModule::new(&a, self.matrices(&x.action, &shapes, &format!("{path}.action"))?).map_err(err)
    }

    pub fn hopf_module(&self, name: &str) -> CliResult<HopfXiModule> {
        let spec = Self::lookup(&self.doc.hopf_modules, Kind::HopfModule, name)?;
        let path = at(Kind::HopfModule, name);
        let err = |e| classify(&path, e);
        let a = self.coalgebra(&spec.coalgebra)?;
        if let Some(n) = spec.trivial {
            return Ok(trivial_hopf_module(&a, bounded(&path, "dimension", n, MAX_DIM)?));
        }
        if spec.dual == Some(true) {
            return dual_hopf_module(&a).map_err(err);
        }
        let x = spec.explicit.as_ref().ok_or_else(|| InputError::invalid(&path, "no directive"))?;
        let (cm, h, e) = (a.cm(), a.h(), a.e());
        if x.dims.len() != h.order() {
            return Err(InputError::shape(&path, "one dimension per element of H").into());
        }
        for &d in &x.dims {
            bounded(&path, "dimension", d, MAX_DIM)?;
        }
        let m = &x.dims;
        let shapes: Vec<_> = h.elements().map(|g| (m[g], a.dim(g) * m[g])).collect();
        let action = self.matrices(&x.action, &shapes, &format!("{path}.action"))?;
        let shapes: Vec<_> = h
            .elements()
            .flat_map(|p| h.elements().map(move |q| (p, q)))
            .map(|(p, q)| (a.dim(p) * m[q], m[h.mul(p, q)]))
            .collect();
        let coaction = self.matrices(&x.coaction, &shapes, &format!("{path}.coaction"))?;
        let shapes: Vec<_> = h
            .elements()
            .flat_map(|p| e.elements().map(move |g| (p, g)))
            .map(|(p, g)| (m[cm.shift(g, p)], m[p]))
            .collect();
        let psi = self.matrices(&x.psi, &shapes, &format!("{path}.psi"))?;
        HopfXiModule::new(&a, m.clone(), action, coaction, psi).map_err(err)
    }

    pub fn grouplike(&self, name: &str) -> CliResult<GrouplikeFamily> {
        let spec = Self::lookup(&self.doc.grouplikes, Kind::Grouplike, name)?;
        let path = at(Kind::Grouplike, name);
        let a = self.coalgebra(&spec.coalgebra)?;
        if spec.family.len() != a.h().order() {
            return Err(InputError::shape(&path, "one vector per element of H").into());
        }
        let family = spec
            .family
            .iter()
            .enumerate()
            .map(|(x, v)| self.vector(v, a.dim(x), &format!("{path}.family[{x}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GrouplikeFamily(family))
    }

    pub fn integral(&self, name: &str) -> CliResult<XiIntegral> {
        let spec = Self::lookup(&self.doc.integrals, Kind::Integral, name)?;
        let path = at(Kind::Integral, name);
        let a = self.coalgebra(&spec.coalgebra)?;
        if spec.covectors.len() != a.h().order() {
            return Err(InputError::shape(&path, "one covector per element of H").into());
        }
        let covectors = spec
            .covectors
            .iter()
            .enumerate()
            .map(|(x, v)| {
                Ok(Matrix::row_vector(
                    self.field,
                    self.vector(v, a.dim(x), &format!("{path}.covectors[{x}]"))?,
                ))
            })
            .collect::<Result<Vec<_>, InputError>>()?;
        let side = match spec.side {
            SideSpec::Left => Side::Left,
            SideSpec::Right => Side::Right,
        };
        Ok(XiIntegral { side, covectors })
    }
}
