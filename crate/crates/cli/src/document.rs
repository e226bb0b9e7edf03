//! The structure-document format: a JSON object with one map of named
//! entries per kind. Every entry holds exactly one constructor directive.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use xmod_hopf::Field;

use crate::error::InputError;

/// A scalar as written: a JSON integer or a string such as `"-3/4"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Lit {
    Int(i64),
    Text(String),
}

impl Lit {
    pub fn text(&self) -> String {
        match self {
            Lit::Int(v) => v.to_string(),
            Lit::Text(s) => s.clone(),
        }
    }
}

/// A group element by index or by name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Elem {
    Index(usize),
    Name(String),
}

/// Row-major matrix; the shape is fixed by context.
pub type Rows = Vec<Vec<Lit>>;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    /// `"Q"` or `"GF(p)"`.
    pub field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub groups: BTreeMap<String, GroupSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub crossed_modules: BTreeMap<String, CrossedModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub coalgebras: BTreeMap<String, CoalgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub hopf_modules: BTreeMap<String, HopfModuleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub grouplikes: BTreeMap<String, GrouplikeSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty", deserialize_with = "unique_keys")]
    pub integrals: BTreeMap<String, IntegralSpec>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cyclic: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<usize>,
    /// Direct product; `(a, b)` has index `a * |second| + b`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub product: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial_over: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub to_point: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inclusion: Option<InclusionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitCrossedModule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InclusionSpec {
    pub group: String,
    /// Elements of the normal subgroup, identity first.
    pub subgroup: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitCrossedModule {
    pub e: String,
    pub h: String,
    /// Image of each element of E.
    pub xi: Vec<Elem>,
    /// `action[x][e]` is `ˣe`.
    pub action: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSpec {
    /// `k_Ξ` over a crossed module.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial: Option<String>,
    /// The classical group algebra of a group, graded by the trivial group.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bicharacter: Option<BicharacterSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_h_action: Option<HActionSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub from_pi_coalgebra: Option<PiSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitCoalgebra>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BicharacterSpec {
    pub e: String,
    pub g: String,
    /// `omega[e][g]`.
    pub omega: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HActionSpec {
    pub crossed_module: String,
    /// A coalgebra entry graded by the trivial group.
    pub hopf: String,
    /// One algebra automorphism per element of H.
    pub rho: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiSpec {
    pub crossed_module: String,
    /// A coalgebra entry whose grading group is the cokernel.
    pub coalgebra: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    /// `d × d²` product matrix.
    pub product: Rows,
    pub unit: Vec<Lit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitCoalgebra {
    pub crossed_module: String,
    pub components: Vec<ComponentSpec>,
    /// `Δ_{x,y}` at `x * |H| + y`.
    pub coproduct: Vec<Rows>,
    pub counit: Vec<Lit>,
    /// Computed when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Rows>>,
    /// `ϕ_{x,e}` at `x * |E| + e`.
    pub action: Vec<Rows>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    /// Dual of a coalgebra entry.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual_of: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitAlgebra>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitAlgebra {
    pub crossed_module: String,
    /// One counit row per element of H; fixes the dimensions.
    pub counit: Vec<Vec<Lit>>,
    pub coproduct: Vec<Rows>,
    /// `μ_{x,y}` at `x * |H| + y`.
    pub product: Vec<Rows>,
    pub unit: Vec<Lit>,
    pub antipode: Vec<Rows>,
    pub action: Vec<Rows>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub coalgebra: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub regular: Option<Elem>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub concentrated: Option<ConcentratedSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pullback: Option<PullbackSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitModule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConcentratedSpec {
    pub degree: Elem,
    /// `m × d_x·m`.
    pub action: Rows,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PullbackSpec {
    pub module: String,
    /// Element of E.
    pub by: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitModule {
    pub dims: Vec<usize>,
    pub action: Vec<Rows>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfModuleSpec {
    pub coalgebra: String,
    /// `A ⊗ V` with `dim V` given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial: Option<usize>,
    /// The dual Hopf module `(A*_{x⁻¹})_x`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitHopfModule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitHopfModule {
    pub dims: Vec<usize>,
    pub action: Vec<Rows>,
    /// `ρ_{x,y}: M_{xy} → A_x⊗M_y` at `x * |H| + y`.
    pub coaction: Vec<Rows>,
    /// `ψ_{x,e}` at `x * |E| + e`.
    pub psi: Vec<Rows>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrouplikeSpec {
    pub coalgebra: String,
    pub family: Vec<Vec<Lit>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideSpec {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IntegralSpec {
    pub coalgebra: String,
    pub side: SideSpec,
    pub covectors: Vec<Vec<Lit>>,
}

/// Which section a name lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Group,
    CrossedModule,
    Coalgebra,
    Algebra,
    Module,
    HopfModule,
    Grouplike,
    Integral,
}

impl Kind {
    pub fn section(self) -> &'static str {
        match self {
            Kind::Group => "groups",
            Kind::CrossedModule => "crossed_modules",
            Kind::Coalgebra => "coalgebras",
            Kind::Algebra => "algebras",
            Kind::Module => "modules",
            Kind::HopfModule => "hopf_modules",
            Kind::Grouplike => "grouplikes",
            Kind::Integral => "integrals",
        }
    }
}

/// Parses `"Q"` or `"GF(p)"`.
pub fn parse_field(text: &str) -> Result<Field, InputError> {
    if text == "Q" {
        return Ok(Field::Rational);
    }
    let p = text
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|p| p.parse::<u64>().ok())
        .ok_or_else(|| InputError::invalid("field", format!("expected \"Q\" or \"GF(p)\", found {text:?}")))?;
    Field::prime(p).map_err(|e| InputError::invalid("field", e.to_string()))
}

/// Checks a literal against the document field.
pub fn parse_lit(field: Field, lit: &Lit, path: &str) -> Result<xmod_hopf::Scalar, InputError> {
    let text = lit.text();
    field.parse_scalar(&text).map_err(|e| {
        if field != Field::Rational && Field::Rational.parse_scalar(&text).is_ok() {
            InputError::FieldMismatch {
                path: path.into(),
                message: format!("{text:?} is not an element of {field}"),
            }
        } else {
            InputError::invalid(path, e.to_string())
        }
    })
}

/// Reads a document: JSON syntax, one directive per entry, unique names,
/// referential integrity, acyclic references and the scalar grammar.
pub fn parse(bytes: &[u8]) -> Result<StructureDocument, InputError> {
    let doc: StructureDocument = serde_json::from_slice(bytes).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    doc.check()?;
    Ok(doc)
}

/// Canonical bytes: pretty JSON with sorted names and a trailing newline.
pub fn serialize(doc: &StructureDocument) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(doc).expect("documents always serialize");
    out.push(b'\n');
    out
}

/// A JSON object whose keys must be distinct; a repeated name would
/// otherwise silently replace the earlier entry.
fn unique_keys<'de, D, V>(deserializer: D) -> Result<BTreeMap<String, V>, D::Error>
where
    D: serde::Deserializer<'de>,
    V: Deserialize<'de>,
{
    struct Visitor<V>(std::marker::PhantomData<V>);

    impl<'de, V: Deserialize<'de>> serde::de::Visitor<'de> for Visitor<V> {
        type Value = BTreeMap<String, V>;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("a map of named entries")
        }

        fn visit_map<A: serde::de::MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
            let mut out = BTreeMap::new();
            while let Some(key) = map.next_key::<String>()? {
                if out.contains_key(&key) {
                    return Err(serde::de::Error::custom(format!("name {key:?} is defined twice")));
                }
                let value = map.next_value()?;
                out.insert(key, value);
            }
            Ok(out)
        }
    }

    deserializer.deserialize_map(Visitor(std::marker::PhantomData))
}

fn strip_position(msg: &str) -> String {
    msg.find(" at line ").map_or(msg, |i| &msg[..i]).to_string()
}

fn count(flags: &[bool]) -> usize {
    flags.iter().filter(|&&b| b).count()
}

fn one_directive(path: &str, flags: &[bool], allowed: &str) -> Result<(), InputError> {
    if count(flags) != 1 {
        return Err(InputError::invalid(path, format!("exactly one of {allowed} is required")));
    }
    Ok(())
}

impl StructureDocument {
    /// Every named entry with its kind, in section then name order.
    pub fn names(&self) -> Vec<(Kind, &str)> {
        let mut out = Vec::new();
        out.extend(self.groups.keys().map(|k| (Kind::Group, k.as_str())));
        out.extend(self.crossed_modules.keys().map(|k| (Kind::CrossedModule, k.as_str())));
        out.extend(self.coalgebras.keys().map(|k| (Kind::Coalgebra, k.as_str())));
        out.extend(self.algebras.keys().map(|k| (Kind::Algebra, k.as_str())));
        out.extend(self.modules.keys().map(|k| (Kind::Module, k.as_str())));
        out.extend(self.hopf_modules.keys().map(|k| (Kind::HopfModule, k.as_str())));
        out.extend(self.grouplikes.keys().map(|k| (Kind::Grouplike, k.as_str())));
        out.extend(self.integrals.keys().map(|k| (Kind::Integral, k.as_str())));
        out
    }

    pub fn kind_of(&self, name: &str) -> Option<Kind> {
        self.names().into_iter().find(|&(_, n)| n == name).map(|(k, _)| k)
    }

    pub fn field(&self) -> Result<Field, InputError> {
        parse_field(&self.field)
    }

    fn check(&self) -> Result<(), InputError> {
        let field = self.field()?;
        let mut seen = BTreeSet::new();
        for (kind, name) in self.names() {
            if !seen.insert(name) {
                return Err(InputError::invalid(format!("{}.{name}", kind.section()), "name is defined twice"));
            }
        }
        self.check_directives()?;
        for (kind, name) in self.names() {
            let path = format!("{}.{name}", kind.section());
            for (want, target) in self.references(kind, name) {
                if self.kind_of(target) != Some(want) {
                    return Err(InputError::reference(&path, format!("{target:?} is not defined in {}", want.section())));
                }
            }
            for (i, lit) in self.literals(kind, name).into_iter().enumerate() {
                parse_lit(field, lit, &format!("{path} (scalar {i})"))?;
            }
        }
        self.check_acyclic()
    }

    fn check_directives(&self) -> Result<(), InputError> {
        for (name, g) in &self.groups {
            let table = g.order.is_some() || g.table.is_some();
            if table && (g.order.is_none() || g.table.is_none()) {
                return Err(InputError::invalid(format!("groups.{name}"), "a table needs both order and table"));
            }
            one_directive(
                &format!("groups.{name}"),
                &[g.cyclic.is_some(), g.symmetric.is_some(), g.product.is_some(), table],
                "cyclic, symmetric, product, order/table",
            )?;
        }
        for (name, c) in &self.crossed_modules {
            let flags = [
                c.identity.is_some(),
                c.trivial_over.is_some(),
                c.to_point.is_some(),
                c.inclusion.is_some(),
                c.explicit.is_some(),
            ];
            one_directive(
                &format!("crossed_modules.{name}"),
                &flags,
                "identity, trivial_over, to_point, inclusion, explicit",
            )?;
        }
        for (name, c) in &self.coalgebras {
            let flags = [
                c.trivial.is_some(),
                c.group_algebra.is_some(),
                c.bicharacter.is_some(),
                c.from_h_action.is_some(),
                c.from_pi_coalgebra.is_some(),
                c.explicit.is_some(),
            ];
            one_directive(
                &format!("coalgebras.{name}"),
                &flags,
                "trivial, group_algebra, bicharacter, from_h_action, from_pi_coalgebra, explicit",
            )?;
        }
        for (name, a) in &self.algebras {
            one_directive(
                &format!("algebras.{name}"),
                &[a.dual_of.is_some(), a.explicit.is_some()],
                "dual_of, explicit",
            )?;
        }
        for (name, m) in &self.modules {
            let flags = [
                m.unit == Some(true),
                m.regular.is_some(),
                m.concentrated.is_some(),
                m.tensor.is_some(),
                m.pullback.is_some(),
                m.explicit.is_some(),
            ];
            one_directive(
                &format!("modules.{name}"),
                &flags,
                "unit, regular, concentrated, tensor, pullback, explicit",
            )?;
        }
        for (name, m) in &self.hopf_modules {
            one_directive(
                &format!("hopf_modules.{name}"),
                &[m.trivial.is_some(), m.dual == Some(true), m.explicit.is_some()],
                "trivial, dual, explicit",
            )?;
        }
        Ok(())
    }

    /// Names an entry refers to, with the section each must live in.
    fn references(&self, kind: Kind, name: &str) -> Vec<(Kind, &str)> {
        let mut out: Vec<(Kind, &str)> = Vec::new();
        match kind {
            Kind::Group => {
                if let Some((a, b)) = &self.groups[name].product {
                    out.extend([(Kind::Group, a.as_str()), (Kind::Group, b.as_str())]);
                }
            }
            Kind::CrossedModule => {
                let c = &self.crossed_modules[name];
                out.extend(
                    c.identity
                        .iter()
                        .chain(&c.trivial_over)
                        .chain(&c.to_point)
                        .map(|g| (Kind::Group, g.as_str())),
                );
                if let Some(i) = &c.inclusion {
                    out.push((Kind::Group, &i.group));
                }
                if let Some(x) = &c.explicit {
                    out.extend([(Kind::Group, x.e.as_str()), (Kind::Group, x.h.as_str())]);
                }
            }
            Kind::Coalgebra => {
                let c = &self.coalgebras[name];
                if let Some(t) = &c.trivial {
                    out.push((Kind::CrossedModule, t));
                }
                if let Some(g) = &c.group_algebra {
                    out.push((Kind::Group, g));
                }
                if let Some(b) = &c.bicharacter {
                    out.extend([(Kind::Group, b.e.as_str()), (Kind::Group, b.g.as_str())]);
                }
                if let Some(r) = &c.from_h_action {
                    out.extend([(Kind::CrossedModule, r.crossed_module.as_str()), (Kind::Coalgebra, r.hopf.as_str())]);
                }
                if let Some(p) = &c.from_pi_coalgebra {
                    out.extend([(Kind::CrossedModule, p.crossed_module.as_str()), (Kind::Coalgebra, p.coalgebra.as_str())]);
                }
                if let Some(x) = &c.explicit {
                    out.push((Kind::CrossedModule, &x.crossed_module));
                }
            }
            Kind::Algebra => {
                let a = &self.algebras[name];
                if let Some(d) = &a.dual_of {
                    out.push((Kind::Coalgebra, d));
                }
                if let Some(x) = &a.explicit {
                    out.push((Kind::CrossedModule, &x.crossed_module));
                }
            }
            Kind::Module => {
                let m = &self.modules[name];
                out.push((Kind::Coalgebra, &m.coalgebra));
                if let Some((a, b)) = &m.tensor {
                    out.extend([(Kind::Module, a.as_str()), (Kind::Module, b.as_str())]);
                }
                if let Some(p) = &m.pullback {
                    out.push((Kind::Module, &p.module));
                }
            }
            Kind::HopfModule => out.push((Kind::Coalgebra, &self.hopf_modules[name].coalgebra)),
            Kind::Grouplike => out.push((Kind::Coalgebra, &self.grouplikes[name].coalgebra)),
            Kind::Integral => out.push((Kind::Coalgebra, &self.integrals[name].coalgebra)),
        }
        out
    }

    fn literals(&self, kind: Kind, name: &str) -> Vec<&Lit> {
        fn rows(r: &Rows) -> impl Iterator<Item = &Lit> {
            r.iter().flatten()
        }
        fn many(v: &[Rows]) -> impl Iterator<Item = &Lit> {
            v.iter().flatten().flatten()
        }
        let mut out: Vec<&Lit> = Vec::new();
        match kind {
            Kind::Group | Kind::CrossedModule => {}
            Kind::Coalgebra => {
                let c = &self.coalgebras[name];
                if let Some(b) = &c.bicharacter {
                    out.extend(rows(&b.omega));
                }
                if let Some(r) = &c.from_h_action {
                    out.extend(many(&r.rho));
                }
                if let Some(x) = &c.explicit {
                    for comp in &x.components {
                        out.extend(rows(&comp.product).chain(&comp.unit));
                    }
                    out.extend(many(&x.coproduct).chain(&x.counit).chain(many(&x.action)));
                    out.extend(x.antipode.iter().flat_map(|s| many(s)));
                }
            }
            Kind::Algebra => {
                if let Some(x) = &self.algebras[name].explicit {
                    out.extend(rows(&x.counit).chain(many(&x.coproduct)).chain(many(&x.product)));
                    out.extend(x.unit.iter().chain(many(&x.antipode)).chain(many(&x.action)));
                }
            }
            Kind::Module => {
                let m = &self.modules[name];
                if let Some(c) = &m.concentrated {
                    out.extend(rows(&c.action));
                }
                if let Some(x) = &m.explicit {
                    out.extend(many(&x.action));
                }
            }
            Kind::HopfModule => {
                if let Some(x) = &self.hopf_modules[name].explicit {
                    out.extend(many(&x.action).chain(many(&x.coaction)).chain(many(&x.psi)));
                }
            }
            Kind::Grouplike => out.extend(rows(&self.grouplikes[name].family)),
            Kind::Integral => out.extend(rows(&self.integrals[name].covectors)),
        }
        out
    }

    /// Depth-first search over references; a back edge is a cycle.
    fn check_acyclic(&self) -> Result<(), InputError> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        fn visit<'a>(doc: &'a StructureDocument, kind: Kind, name: &'a str, marks: &mut BTreeMap<&'a str, Mark>) -> Result<(), InputError> {
            match marks.get(name) {
                Some(Mark::Done) => return Ok(()),
                Some(Mark::Open) => return Err(InputError::reference(format!("{}.{name}", kind.section()), "cyclic reference")),
                None => {}
            }
            marks.insert(name, Mark::Open);
            for (k, target) in doc.references(kind, name) {
                visit(doc, k, target, marks)?;
            }
            marks.insert(name, Mark::Done);
            Ok(())
        }
        let mut marks = BTreeMap::new();
        for (kind, name) in self.names() {
            visit(self, kind, name, &mut marks)?;
        }
        Ok(())
    }
}
