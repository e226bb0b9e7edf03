//! The batch commands. Each one parses the document, builds what it needs and
//! returns a report; axiom failures become failing checks, malformed input
//! becomes an [`InputError`].

use xmod_hopf::crossed::validate_crossed_module;
use xmod_hopf::group::validate_group;
use xmod_hopf::hopf_module::{
    antipode_transport, distinguished_grouplike, integral_space, integral_to_coinvariant, is_integral, structure_iso, validate_hopf_xi_module,
};
use xmod_hopf::linalg::fmt_vector;
use xmod_hopf::rep::{hom_space, is_hom, validate_module};
use xmod_hopf::xi::{dualize_algebra, dualize_coalgebra};
use xmod_hopf::{AModule, GrouplikeFamily, HopfXiCoalgebra, HopfXiModule, Matrix, Scalar, Side, XiIntegral};

use crate::build::{Labels, Workspace, XmLabels};
use crate::document::{self, AlgebraSpec, CoalgebraSpec, Elem, HopfModuleSpec, Kind, ModuleSpec, StructureDocument};
use crate::error::{classify, CliError, CliResult, InputError};
use crate::export;
use crate::report::Report;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Every entry when no name is given.
    Verify {
        name: Option<String>,
    },
    Integrals {
        name: String,
        side: Option<Side>,
    },
    Grouplikes {
        name: String,
    },
    Dual {
        name: String,
    },
    StructureTheorem {
        name: String,
        module: String,
    },
    Hom {
        algebra: String,
        source: String,
        target: String,
        degree: Option<String>,
    },
    Report {
        name: String,
    },
    Export {
        name: String,
    },
}

impl Command {
    /// The command line echoed at the top of every report.
    pub fn describe(&self) -> String {
        match self {
            Command::Verify { name } => name.as_ref().map_or("verify".to_string(), |n| format!("verify {n}")),
            Command::Integrals { name, side } => match side {
                Some(s) => format!("integrals {name} --side {s}"),
                None => format!("integrals {name}"),
            },
            Command::Grouplikes { name } => format!("grouplikes {name}"),
            Command::Dual { name } => format!("dual {name}"),
            Command::StructureTheorem { name, module } => format!("structure-theorem {name} {module}"),
            Command::Hom {
                algebra,
                source,
                target,
                degree,
            } => match degree {
                Some(e) => format!("hom {algebra} {source} {target} --degree {e}"),
                None => format!("hom {algebra} {source} {target}"),
            },
            Command::Report { name } => format!("report {name}"),
            Command::Export { name } => format!("export {name}"),
        }
    }
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Report(Report),
    /// An exported document.
    Document(Vec<u8>),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Report(r) => r.exit_code(),
            Outcome::Document(_) => 0,
        }
    }
}

pub fn run(command: &Command, input: &[u8]) -> Result<Outcome, InputError> {
    let doc = document::parse(input)?;
    let ws = Workspace::new(&doc)?;
    let mut report = Report::new(command.describe(), input);
    match command {
        Command::Verify { name: None } => {
            for (kind, name) in doc.names() {
                verify(&ws, &mut report, kind, name)?;
            }
        }
        Command::Verify { name: Some(name) } => verify(&ws, &mut report, kind_of(&doc, name)?, name)?,
        Command::Integrals { name, side } => {
            let sides = side.map_or(vec![Side::Left, Side::Right], |s| vec![s]);
            if let Some(a) = valid_coalgebra(&ws, &mut report, name)? {
                integrals(&ws, &mut report, name, &a, &sides)?;
            }
        }
        Command::Grouplikes { name } => {
            if let Some(a) = valid_coalgebra(&ws, &mut report, name)? {
                grouplikes(&ws, &mut report, name, &a)?;
            }
        }
        Command::Dual { name } => dual(&ws, &mut report, name)?,
        Command::StructureTheorem { name, module } => {
            if ws.owner(Kind::HopfModule, module) != Some(name.as_str()) {
                return Err(InputError::reference(
                    "hopf_modules",
                    format!("{module:?} is not a Hopf module over {name:?}"),
                ));
            }
            if let Some(a) = valid_coalgebra(&ws, &mut report, name)? {
                let m = absorb(&mut report, ws.hopf_module(module))?;
                if let Some(m) = m {
                    let expected = doc.hopf_modules[module.as_str()].trivial;
                    structure_theorem(&ws, &mut report, name, &a, module, &m, expected)?;
                }
            }
        }
        Command::Hom {
            algebra,
            source,
            target,
            degree,
        } => hom(&ws, &mut report, algebra, source, target, degree.as_deref())?,
        Command::Report { name } => {
            let kind = kind_of(&doc, name)?;
            verify(&ws, &mut report, kind, name)?;
            if kind == Kind::Coalgebra {
                if report.passed() {
                    let a = ws.coalgebra(name).map_err(input_only)?;
                    integrals(&ws, &mut report, name, &a, &[Side::Left, Side::Right])?;
                    grouplikes(&ws, &mut report, name, &a)?;
                    dual(&ws, &mut report, name)?;
                    if let Some(m) = absorb(
                        &mut report,
                        xmod_hopf::hopf_module::dual_hopf_module(&a).map_err(|e| classify("dual Hopf module", e)),
                    )? {
                        structure_theorem(&ws, &mut report, name, &a, "dual", &m, None)?;
                    }
                } else {
                    report.skip("integrals, grouplikes, duality, structure theorem", "structure does not validate");
                }
            }
        }
        Command::Export { name } => {
            return match export_entry(&ws, kind_of(&doc, name)?, name) {
                Ok(d) => Ok(Outcome::Document(document::serialize(&d))),
                Err(CliError::Input(e)) => Err(e),
                Err(CliError::Violation(r)) => {
                    report.absorb("", &r);
                    Ok(Outcome::Report(report))
                }
            };
        }
    }
    Ok(Outcome::Report(report))
}

fn kind_of(doc: &StructureDocument, name: &str) -> Result<Kind, InputError> {
    doc.kind_of(name)
        .ok_or_else(|| InputError::reference("command", format!("{name:?} is not defined")))
}

fn input_only(e: CliError) -> InputError {
    match e {
        CliError::Input(e) => e,
        CliError::Violation(r) => InputError::invalid("build", r.to_string()),
    }
}

/// Records a construction failure as failing checks.
fn absorb<T>(report: &mut Report, r: CliResult<T>) -> Result<Option<T>, InputError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(CliError::Violation(v)) => {
            report.absorb("", &v);
            Ok(None)
        }
        Err(CliError::Input(e)) => Err(e),
    }
}

/// Builds and validates a coalgebra; `None` after recording failures.
fn valid_coalgebra(ws: &Workspace, report: &mut Report, name: &str) -> Result<Option<HopfXiCoalgebra>, InputError> {
    if ws.doc.kind_of(name) != Some(Kind::Coalgebra) {
        return Err(InputError::reference("command", format!("{name:?} is not a coalgebra entry")));
    }
    let Some(a) = absorb(report, ws.coalgebra(name))? else {
        return Ok(None);
    };
    let v = a.validate();
    report.absorb(name, &v);
    if v.is_valid() {
        Ok(Some(a))
    } else {
        report.skip(format!("{name}: computations"), "structure does not validate");
        Ok(None)
    }
}

fn verify(ws: &Workspace, report: &mut Report, kind: Kind, name: &str) -> Result<(), InputError> {
    let scope = format!("{} {name}", kind.section());
    match kind {
        Kind::Group => {
            if let Some((g, _)) = absorb(report, ws.group(name))? {
                report.absorb(&scope, &validate_group(&g));
            }
        }
        Kind::CrossedModule => {
            if let Some((cm, _)) = absorb(report, ws.crossed_module(name))? {
                let v = validate_crossed_module(&cm);
                report.absorb(&scope, &v);
                if v.is_valid() {
                    match cm.kernel_image_cokernel() {
                        Ok(k) => report.absorb(&scope, &k.report),
                        Err(e) => report.check(format!("{scope}: cokernel"), false, || e.to_string()),
                    }
                }
            }
        }
        Kind::Coalgebra => {
            if let Some(a) = absorb(report, ws.coalgebra(name))? {
                report.absorb(&scope, &a.validate());
            }
        }
        Kind::Algebra => {
            if let Some(a) = absorb(report, ws.algebra(name))? {
                report.absorb(&scope, &a.validate());
            }
        }
        Kind::Module => {
            if let (Some(a), Some(m)) = owner_and(ws, report, Kind::Module, name, |ws| ws.module(name))? {
                let v = validate_module(&a, &m).map_err(|e| input_only(classify(&scope, e)))?;
                report.absorb(&scope, &v);
            }
        }
        Kind::HopfModule => {
            if let (Some(a), Some(m)) = owner_and(ws, report, Kind::HopfModule, name, |ws| ws.hopf_module(name))? {
                let v = validate_hopf_xi_module(&a, &m).map_err(|e| input_only(classify(&scope, e)))?;
                report.absorb(&scope, &v);
            }
        }
        Kind::Grouplike => {
            if let (Some(a), Some(g)) = owner_and(ws, report, Kind::Grouplike, name, |ws| ws.grouplike(name))? {
                let owner = ws.owner(Kind::Grouplike, name).unwrap_or_default();
                let labels = ws.coalgebra_labels(owner).map_err(input_only)?;
                check_grouplike(report, &scope, &a, &labels.e, &g);
            }
        }
        Kind::Integral => {
            if let (Some(a), Some(l)) = owner_and(ws, report, Kind::Integral, name, |ws| ws.integral(name))? {
                report.check(format!("{scope}: integral identity"), is_integral(&a, &l), || {
                    format!("{} is not a {} integral", covectors(&l), l.side)
                });
                report.check(format!("{scope}: nonzero"), !l.is_zero(), || "all covectors vanish".into());
            }
        }
    }
    Ok(())
}

type Pair<T> = (Option<HopfXiCoalgebra>, Option<T>);

fn owner_and<T>(
    ws: &Workspace,
    report: &mut Report,
    kind: Kind,
    name: &str,
    build: impl Fn(&Workspace) -> CliResult<T>,
) -> Result<Pair<T>, InputError> {
    let owner = ws.owner(kind, name).unwrap_or_default();
    let Some(a) = absorb(report, ws.coalgebra(owner))? else {
        return Ok((None, None));
    };
    let built = absorb(report, build(ws))?;
    Ok((Some(a), built))
}

fn check_grouplike(report: &mut Report, scope: &str, a: &HopfXiCoalgebra, labels: &Labels, g: &GrouplikeFamily) {
    let v = a.base().grouplike_check(g);
    report.absorb(scope, &v);
    if v.is_valid() {
        // not every grouplike is a Ξ-grouplike, so this is an output
        let mut lines = vec![
            format!("family = {g}"),
            format!("Ξ-grouplike: {}", if a.is_xi_grouplike(g) { "yes" } else { "no" }),
        ];
        if let Ok(p) = a.grouplike_pairing(g) {
            report.absorb(scope, &p.report);
            let values: Vec<String> = p
                .values
                .iter()
                .enumerate()
                .map(|(e, v)| format!("⟨G,{}⟩ = {v}", labels.label(e)))
                .collect();
            lines.push(values.join(", "));
        }
        report.section(scope, lines);
    }
}

fn covectors(l: &XiIntegral) -> String {
    let parts: Vec<String> = l.covectors.iter().map(|c| fmt_vector(c.row(0))).collect();
    format!("[{}]", parts.join(", "))
}

fn family_lines(labels: &Labels, family: &[Vec<Scalar>]) -> Vec<String> {
    family
        .iter()
        .enumerate()
        .map(|(x, v)| format!("{} ↦ {}", labels.label(x), fmt_vector(v)))
        .collect()
}

fn integrals(ws: &Workspace, report: &mut Report, name: &str, a: &HopfXiCoalgebra, sides: &[Side]) -> Result<(), InputError> {
    let labels = ws.coalgebra_labels(name).map_err(input_only)?;
    let mut left = None;
    for &side in sides {
        let basis = integral_space(a, side);
        let scope = format!("{side} integrals");
        report.check(format!("{scope}: one-dimensional"), basis.len() == 1, || format!("dim = {}", basis.len()));
        let all_nonzero = basis.iter().all(|l| l.covectors.iter().all(|c| !c.is_zero()));
        report.check(format!("{scope}: every component nonzero"), all_nonzero, || "some λ_x vanishes".into());
        let satisfied = basis.iter().all(|l| is_integral(a, l));
        report.check(format!("{scope}: basis satisfies the defining identity"), satisfied, || {
            "basis vector fails".into()
        });
        let mut lines = vec![format!("dim = {}", basis.len())];
        for (i, l) in basis.iter().enumerate() {
            lines.push(format!("basis vector {i}:"));
            lines.extend(
                l.covectors
                    .iter()
                    .enumerate()
                    .map(|(x, c)| format!("  λ_{} = {}", labels.h.label(x), fmt_vector(c.row(0)))),
            );
        }
        report.section(scope, lines);
        if side == Side::Left && basis.len() == 1 {
            left = basis.into_iter().next();
        }
    }
    if let Some(l) = left.filter(|_| sides.contains(&Side::Right)) {
        match antipode_transport(a, &l) {
            Ok(r) => report.check(
                "antipode transport of the left integral is a right integral",
                is_integral(a, &r) && !r.is_zero(),
                || covectors(&r),
            ),
            Err(e) => report.check("antipode transport of the left integral is a right integral", false, || e.to_string()),
        }
    }
    for (cand, spec) in &ws.doc.integrals {
        if spec.coalgebra != name {
            continue;
        }
        let l = ws.integral(cand).map_err(input_only)?;
        if sides.contains(&l.side) {
            let scope = format!("candidate {cand}");
            report.check(format!("{scope}: integral identity"), is_integral(a, &l), || {
                format!("{} is not a {} integral", covectors(&l), l.side)
            });
            report.check(format!("{scope}: nonzero"), !l.is_zero(), || "all covectors vanish".into());
        }
    }
    Ok(())
}

fn grouplikes(ws: &Workspace, report: &mut Report, name: &str, a: &HopfXiCoalgebra) -> Result<(), InputError> {
    let labels = ws.coalgebra_labels(name).map_err(input_only)?;
    let all = a.base().enumerate_grouplikes();
    let xi = a.enumerate_xi_grouplikes();
    let unit = a.base().unit_family();
    report.check("unit family is a Ξ-grouplike", xi.contains(&unit), || unit.to_string());
    report.check("Ξ-grouplikes are grouplikes", xi.iter().all(|g| all.contains(g)), || {
        "enumeration mismatch".into()
    });
    let mut lines = Vec::new();
    for (i, g) in all.iter().enumerate() {
        let marker = if xi.contains(g) { " (Ξ-grouplike)" } else { "" };
        lines.push(format!("G[{i}] = {g}{marker}"));
        match a.grouplike_pairing(g) {
            Ok(p) => {
                report.absorb(&format!("pairing G[{i}]"), &p.report);
                let values: Vec<String> = a.e().elements().map(|e| format!("⟨G,{}⟩ = {}", labels.e.label(e), p.values[e])).collect();
                lines.push(format!("  {}", values.join(", ")));
            }
            Err(e) => report.check(format!("pairing G[{i}]"), false, || e.to_string()),
        }
    }
    report.section(format!("grouplikes ({} found, {} Ξ-grouplike)", all.len(), xi.len()), lines);
    match a.pairing_bicharacter_check(&all) {
        Ok(v) => report.absorb("pairing", &v),
        Err(e) => report.check("pairing", false, || e.to_string()),
    }
    match distinguished_grouplike(a) {
        Ok(d) => {
            report.absorb("distinguished grouplike", &d.report);
            report.section("distinguished grouplike", family_lines(&labels.h, &d.family.0));
        }
        Err(e) => report.check("distinguished grouplike", false, || e.to_string()),
    }
    for (cand, spec) in &ws.doc.grouplikes {
        if spec.coalgebra == name {
            let g = ws.grouplike(cand).map_err(input_only)?;
            check_grouplike(report, &format!("candidate {cand}"), a, &labels.e, &g);
        }
    }
    Ok(())
}

fn dual(ws: &Workspace, report: &mut Report, name: &str) -> Result<(), InputError> {
    match ws.doc.kind_of(name) {
        Some(Kind::Coalgebra) => {
            let Some(a) = absorb(report, ws.coalgebra(name))? else { return Ok(()) };
            let d = match dualize_coalgebra(&a) {
                Ok(d) => d,
                Err(e) => {
                    report.check("dualize", false, || e.to_string());
                    return Ok(());
                }
            };
            report.absorb("dual algebra", &d.validate());
            let back = dualize_algebra(&d);
            report.check("double dual is the identity", back.as_ref().is_ok_and(|b| b == &a), || {
                "dualizing twice changed the structure".into()
            });
            let dims: Vec<String> = a.h().elements().map(|x| d.dim(x).to_string()).collect();
            report.section("dual algebra", vec![format!("component dimensions = ({})", dims.join(", "))]);
        }
        Some(Kind::Algebra) => {
            let Some(a) = absorb(report, ws.algebra(name))? else { return Ok(()) };
            report.absorb(&format!("algebras {name}"), &a.validate());
            match dualize_algebra(&a) {
                Ok(c) => {
                    report.absorb("dual coalgebra", &c.validate());
                    let back = dualize_coalgebra(&c);
                    report.check("double dual is the identity", back.as_ref().is_ok_and(|b| b == &a), || {
                        "dualizing twice changed the structure".into()
                    });
                }
                Err(e) => report.check("dualize", false, || e.to_string()),
            }
        }
        _ => return Err(InputError::reference("command", format!("{name:?} is not a coalgebra or algebra entry"))),
    }
    Ok(())
}

/// Flattened coinvariant families as columns; used for span tests.
fn span_matrix(a: &HopfXiCoalgebra, families: &[Vec<Vec<Scalar>>], total: usize) -> Matrix {
    let flat: Vec<Vec<Scalar>> = families.iter().map(|f| f.concat()).collect();
    Matrix::from_fn(a.field(), total, flat.len(), |i, j| flat[j][i].clone())
}

fn structure_theorem(
    ws: &Workspace,
    report: &mut Report,
    name: &str,
    a: &HopfXiCoalgebra,
    module: &str,
    m: &HopfXiModule,
    expected: Option<usize>,
) -> Result<(), InputError> {
    let scope = format!("hopf module {module}");
    let v = validate_hopf_xi_module(a, m).map_err(|e| input_only(classify(&scope, e)))?;
    report.absorb(&scope, &v);
    if !v.is_valid() {
        report.skip(format!("{scope}: structure theorem"), "module does not validate");
        return Ok(());
    }
    let iso = match structure_iso(a, m) {
        Ok(iso) => iso,
        Err(e) => {
            report.check(format!("{scope}: A ⊗ M^coA ≅ M"), false, || e.to_string());
            return Ok(());
        }
    };
    report.check(format!("{scope}: A ⊗ M^coA ≅ M"), true, String::new);
    let k = iso.coinvariants.len();
    if let Some(n) = expected {
        report.check(format!("{scope}: coinvariants have the dimension of V"), k == n, || {
            format!("dim = {k}, expected {n}")
        });
    }
    // the dual module of A: coinvariants are spanned by a right integral
    let is_dual = module == "dual" || ws.doc.hopf_modules.get(module).is_some_and(|s| s.dual == Some(true));
    if is_dual {
        report.check(format!("{scope}: coinvariants are one-dimensional"), k == 1, || format!("dim = {k}"));
        if let Some(l) = integral_space(a, Side::Right).into_iter().next() {
            let c = integral_to_coinvariant(a, &l);
            let total: usize = m.dims().iter().sum();
            let basis = span_matrix(a, &iso.coinvariants, total);
            let with = span_matrix(a, &[iso.coinvariants.clone(), vec![c]].concat(), total);
            report.check(format!("{scope}: right integral is coinvariant"), basis.rank() == with.rank(), || {
                "λ lies outside M^coA".into()
            });
        }
    }
    let labels = ws.coalgebra_labels(name).map_err(input_only)?;
    let mut lines = vec![format!("dim = {k}")];
    for (i, fam) in iso.coinvariants.iter().enumerate() {
        lines.push(format!("basis vector {i}:"));
        lines.extend(family_lines(&labels.h, fam).into_iter().map(|s| format!("  {s}")));
    }
    report.section(format!("coinvariants of {module}"), lines);
    Ok(())
}

fn hom(ws: &Workspace, report: &mut Report, algebra: &str, source: &str, target: &str, degree: Option<&str>) -> Result<(), InputError> {
    for m in [source, target] {
        if ws.owner(Kind::Module, m) != Some(algebra) {
            return Err(InputError::reference("modules", format!("{m:?} is not a module over {algebra:?}")));
        }
    }
    let Some(a) = valid_coalgebra(ws, report, algebra)? else { return Ok(()) };
    let labels = ws.coalgebra_labels(algebra).map_err(input_only)?;
    let mut modules: Vec<AModule> = Vec::new();
    for m in [source, target] {
        let Some(built) = absorb(report, ws.module(m))? else { return Ok(()) };
        let v = validate_module(&a, &built).map_err(|e| input_only(classify(m, e)))?;
        report.absorb(&format!("modules {m}"), &v);
        if !v.is_valid() {
            report.skip("hom spaces", "module does not validate");
            return Ok(());
        }
        modules.push(built);
    }
    let degrees = match degree {
        Some(d) => {
            let elem = d.parse::<usize>().map_or_else(|_| Elem::Name(d.to_string()), Elem::Index);
            vec![labels.e.resolve(&elem, a.e().order(), "--degree")?]
        }
        None => a.e().elements().collect(),
    };
    let (m, n) = (&modules[0], &modules[1]);
    for e in degrees {
        let basis = hom_space(&a, m, n, e);
        let el = labels.e.label(e);
        report.check(
            format!("degree {el}: basis maps are homomorphisms"),
            basis.iter().all(|f| is_hom(&a, m, n, f)),
            || "basis map fails".into(),
        );
        let flat: Vec<Vec<Scalar>> = basis.iter().map(|f| f.blocks.iter().flat_map(|b| b.data().to_vec()).collect()).collect();
        let len = flat.first().map_or(0, Vec::len);
        let stacked = Matrix::from_fn(a.field(), len, flat.len(), |i, j| flat[j][i].clone());
        report.check(
            format!("degree {el}: basis is linearly independent"),
            stacked.rank() == basis.len(),
            || "dependent basis".into(),
        );
        let mut lines = vec![format!("basis size = {}", basis.len())];
        for (i, f) in basis.iter().enumerate() {
            let blocks: Vec<String> = f
                .blocks
                .iter()
                .enumerate()
                .filter(|(_, b)| b.rows() * b.cols() > 0)
                .map(|(x, b)| format!("{}: {b}", labels.h.label(x)))
                .collect();
            lines.push(format!("f[{i}] = {{{}}}", blocks.join("; ")));
        }
        report.section(format!("Hom^{el}({source}, {target})"), lines);
    }
    Ok(())
}

/// A standalone document holding `name` and, in explicit form, everything it
/// depends on.
pub fn export_entry(ws: &Workspace, kind: Kind, name: &str) -> CliResult<StructureDocument> {
    let mut doc = StructureDocument {
        field: ws.doc.field.clone(),
        ..StructureDocument::default()
    };
    let mut add_cm = |doc: &mut StructureDocument, cm: &xmod_hopf::CrossedModule, labels: &XmLabels| -> String {
        let groups = export::groups_of(cm, labels);
        let (e, h) = (groups[0].0.clone(), groups[groups.len() - 1].0.clone());
        doc.groups.extend(groups);
        doc.crossed_modules.insert("xm".into(), export::crossed_module(cm, &e, &h));
        "xm".into()
    };
    let coalgebra_into = |doc: &mut StructureDocument,
                          owner: &str,
                          add_cm: &mut dyn FnMut(&mut StructureDocument, &xmod_hopf::CrossedModule, &XmLabels) -> String|
     -> CliResult<()> {
        let a = ws.coalgebra(owner)?;
        let cm = add_cm(doc, a.cm(), &ws.coalgebra_labels(owner)?);
        doc.coalgebras.insert(
            owner.into(),
            CoalgebraSpec {
                explicit: Some(export::coalgebra(&a, &cm)),
                ..CoalgebraSpec::default()
            },
        );
        Ok(())
    };
    match kind {
        Kind::Group => {
            let (g, l) = ws.group(name)?;
            doc.groups.insert(name.into(), export::group(&g, &l));
        }
        Kind::CrossedModule => {
            let (cm, l) = ws.crossed_module(name)?;
            add_cm(&mut doc, &cm, &l);
            let spec = doc.crossed_modules.remove("xm").unwrap_or_default();
            doc.crossed_modules.insert(name.into(), spec);
        }
        Kind::Coalgebra => coalgebra_into(&mut doc, name, &mut add_cm)?,
        Kind::Algebra => {
            let a = ws.algebra(name)?;
            let labels = match &ws.doc.algebras[name] {
                AlgebraSpec { dual_of: Some(c), .. } => ws.coalgebra_labels(c)?,
                AlgebraSpec { explicit: Some(x), .. } => ws.crossed_module(&x.crossed_module)?.1,
                _ => XmLabels::default(),
            };
            let cm = add_cm(&mut doc, a.cm(), &labels);
            doc.algebras.insert(
                name.into(),
                AlgebraSpec {
                    explicit: Some(export::algebra(&a, &cm)),
                    ..AlgebraSpec::default()
                },
            );
        }
        Kind::Module => {
            let owner = ws.owner(kind, name).unwrap_or_default();
            coalgebra_into(&mut doc, owner, &mut add_cm)?;
            let m = ws.module(name)?;
            doc.modules.insert(
                name.into(),
                ModuleSpec {
                    coalgebra: owner.into(),
                    explicit: Some(export::module(&m)),
                    ..ModuleSpec::default()
                },
            );
        }
        Kind::HopfModule => {
            let owner = ws.owner(kind, name).unwrap_or_default();
            coalgebra_into(&mut doc, owner, &mut add_cm)?;
            let m = ws.hopf_module(name)?;
            let spec = HopfModuleSpec {
                coalgebra: owner.into(),
                explicit: Some(export::hopf_module(&m)),
                ..HopfModuleSpec::default()
            };
            doc.hopf_modules.insert(name.into(), spec);
        }
        Kind::Grouplike | Kind::Integral => {
            let owner = ws.owner(kind, name).unwrap_or_default();
            coalgebra_into(&mut doc, owner, &mut add_cm)?;
            if kind == Kind::Grouplike {
                doc.grouplikes.insert(name.into(), ws.doc.grouplikes[name].clone());
            } else {
                doc.integrals.insert(name.into(), ws.doc.integrals[name].clone());
            }
        }
    }
    Ok(doc)
}
