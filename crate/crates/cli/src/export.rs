//! Writes built structures back as explicit document entries.

use xmod_hopf::{AModule, CrossedModule, FiniteGroup, HopfXiAlgebra, HopfXiCoalgebra, HopfXiModule, Matrix, Scalar};

use crate::build::{Labels, XmLabels};
use crate::document::{
    ComponentSpec, CrossedModuleSpec, Elem, ExplicitAlgebra, ExplicitCoalgebra, ExplicitCrossedModule, ExplicitHopfModule, ExplicitModule, GroupSpec,
    Lit, Rows,
};

pub fn lit(s: &Scalar) -> Lit {
    match s.to_i64() {
        Some(v) => Lit::Int(v),
        None => Lit::Text(s.literal()),
    }
}

pub fn lits(v: &[Scalar]) -> Vec<Lit> {
    v.iter().map(lit).collect()
}

pub fn rows(m: &Matrix) -> Rows {
    m.to_rows().iter().map(|r| lits(r)).collect()
}

fn all_rows(ms: &[Matrix]) -> Vec<Rows> {
    ms.iter().map(rows).collect()
}

pub fn group(g: &FiniteGroup, labels: &Labels) -> GroupSpec {
    GroupSpec {
        order: Some(g.order()),
        table: Some(g.rows()),
        names: labels.0.clone(),
        ..GroupSpec::default()
    }
}

/// The crossed module over groups named `e` and `h`.
pub fn crossed_module(cm: &CrossedModule, e: &str, h: &str) -> CrossedModuleSpec {
    let xi = cm.e().elements().map(|g| Elem::Index(cm.xi(g))).collect();
    let action = cm.action().rows().into_iter().map(|r| r.into_iter().map(Elem::Index).collect()).collect();
    CrossedModuleSpec {
        explicit: Some(ExplicitCrossedModule {
            e: e.into(),
            h: h.into(),
            xi,
            action,
        }),
        ..CrossedModuleSpec::default()
    }
}

pub fn coalgebra(a: &HopfXiCoalgebra, crossed_module: &str) -> ExplicitCoalgebra {
    let base = a.base();
    ExplicitCoalgebra {
        crossed_module: crossed_module.into(),
        components: base
            .components()
            .iter()
            .map(|c| ComponentSpec {
                product: rows(c.mul()),
                unit: lits(&c.unit_vector()),
            })
            .collect(),
        coproduct: all_rows(base.coproducts()),
        counit: lits(base.counit().row(0)),
        antipode: base.antipode().map(all_rows),
        action: all_rows(a.action()),
    }
}

pub fn algebra(a: &HopfXiAlgebra, crossed_module: &str) -> ExplicitAlgebra {
    let (h, e) = (a.cm().h(), a.cm().e());
    let pairs = || h.elements().flat_map(|x| h.elements().map(move |y| (x, y)));
    ExplicitAlgebra {
        crossed_module: crossed_module.into(),
        counit: h.elements().map(|x| lits(a.counit(x).row(0))).collect(),
        coproduct: h.elements().map(|x| rows(a.coproduct(x))).collect(),
        product: pairs().map(|(x, y)| rows(a.product(x, y))).collect(),
        unit: lits(&a.unit().col(0)),
        antipode: h.elements().map(|x| rows(a.antipode(x))).collect(),
        action: h
            .elements()
            .flat_map(|x| e.elements().map(move |g| (x, g)))
            .map(|(x, g)| rows(a.phi(x, g)))
            .collect(),
    }
}

pub fn module(m: &AModule) -> ExplicitModule {
    ExplicitModule {
        dims: m.dims().to_vec(),
        action: all_rows(m.actions()),
    }
}

pub fn hopf_module(m: &HopfXiModule) -> ExplicitHopfModule {
    ExplicitHopfModule {
        dims: m.dims().to_vec(),
        action: all_rows(m.actions()),
        coaction: all_rows(m.coactions()),
        psi: all_rows(m.psis()),
    }
}

/// Group entries for a crossed module's two groups; `E` and `H` share one
/// entry when the module is an identity.
pub fn groups_of(cm: &CrossedModule, labels: &XmLabels) -> Vec<(String, GroupSpec)> {
    if cm.e() == cm.h() && labels.e == labels.h {
        vec![("G".into(), group(cm.e(), &labels.e))]
    } else {
        vec![("E".into(), group(cm.e(), &labels.e)), ("H".into(), group(cm.h(), &labels.h))]
    }
}
