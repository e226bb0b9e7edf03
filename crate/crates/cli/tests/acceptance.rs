//! One test per acceptance criterion. Each prints a single PASS or FAIL line
//! straight to stdout so the verdicts show without `--nocapture`.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::Command as Process;

use common::*;
use xmod_hopf_cli::xmod_hopf::hopf_module::{
    antipode_transport, classical_distinguished, coinvariants, distinguished_grouplike, dual_hopf_module, integral_space, integral_to_coinvariant,
    is_integral, structure_iso, validate_hopf_xi_module,
};
use xmod_hopf_cli::xmod_hopf::rep::{compose_homs, dual_module, e_direct_sum, hom_space, is_hom, tensor_homs, tensor_modules, validate_module};
use xmod_hopf_cli::xmod_hopf::xi::{
    dualize_algebra, dualize_coalgebra, mk_from_h_action, mk_from_pi_coalgebra, mk_trivial, validate_hopf_xi_algebra,
};
use xmod_hopf_cli::xmod_hopf::{AModule, Field, GradedHopfCoalgebra, GrouplikeFamily, HopfXiCoalgebra, Matrix, Scalar, Side};
use xmod_hopf_cli::{parse, run, Command, Outcome};

fn verdict(n: usize, title: &str, detail: String, failures: &[String]) {
    let line = if failures.is_empty() {
        format!("criterion {n} ({title}): PASS {detail}\n")
    } else {
        format!("criterion {n} ({title}): FAIL {} problems, first: {}\n", failures.len(), failures[0])
    };
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

/// Every structure the four constructors produce over the crossed-module
/// universe, plus the bicharacter examples (whose crossed module is Z/2 → 1).
fn constructed(field: Field) -> Vec<(String, HopfXiCoalgebra)> {
    let kz2 = GradedHopfCoalgebra::group_algebra(field, &z(2));
    let mut out = Vec::new();
    for (name, cm) in crossed_modules() {
        out.push((format!("trivial over {name}"), mk_trivial(field, &cm)));
        let signs: Vec<i64> = match cm.h().order() {
            1 => vec![1],
            2 => vec![1, -1],
            _ => (0..6).map(sign_s3).collect(),
        };
        out.push((
            format!("h-action over {name}"),
            mk_from_h_action(&cm, &kz2, &sign_rho(field, &signs)).unwrap(),
        ));
        let pi = cm.kernel_image_cokernel().unwrap().cokernel.group;
        out.push((
            format!("k_pi over {name}"),
            mk_from_pi_coalgebra(&cm, &GradedHopfCoalgebra::trivial(field, &pi)).unwrap(),
        ));
        if pi.order() == 1 {
            out.push((format!("k[Z/2] over {name}"), mk_from_pi_coalgebra(&cm, &kz2).unwrap()));
        }
    }
    out.push(("bicharacter sign".into(), k_omega(field)));
    let one = vec![vec![field.one(); 2]; 2];
    out.push((
        "bicharacter one".into(),
        xmod_hopf_cli::xmod_hopf::xi::mk_bicharacter_group_algebra(field, &z(2), &z(2), &one).unwrap(),
    ));
    out
}

fn in_span(basis: &[Vec<Vec<Scalar>>], family: &[Vec<Scalar>], f: Field) -> bool {
    let target: Vec<Scalar> = family.concat();
    if basis.is_empty() {
        return target.iter().all(Scalar::is_zero);
    }
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.concat()).collect();
    let m = Matrix::from_rows(f, target.len(), cols).unwrap().transpose();
    m.solve_linear(&target).unwrap().is_some()
}

#[test]
fn criterion_1_axiom_suite() {
    let mut failures = Vec::new();
    let mut count = 0;
    for field in fields() {
        for (name, a) in constructed(field) {
            count += 1;
            let mut reports = vec![a.validate(), a.base().validate()];
            match a.check_antipode_action_compat() {
                Ok(r) => reports.push(r),
                Err(e) => failures.push(format!("{name} over {field}: {e}")),
            }
            for r in reports {
                let witnesses: usize = r.checks.iter().map(|c| c.witnesses.len()).sum();
                if r.violations() != 0 || witnesses != 0 {
                    failures.push(format!("{name} over {field}: {r}"));
                }
            }
        }
    }
    verdict(1, "axiom suite", format!("{count} structures over Q and GF(5), 0 witnesses"), &failures);
}

#[test]
fn criterion_2_integrals_are_one_dimensional() {
    let mut failures = Vec::new();
    for field in fields() {
        for (name, a) in integral_universe(field) {
            for side in [Side::Left, Side::Right] {
                let basis = integral_space(&a, side);
                if basis.len() != 1 {
                    failures.push(format!("{name} {side} over {field}: dim {}", basis.len()));
                    continue;
                }
                if !is_integral(&a, &basis[0]) || basis[0].covectors.iter().any(Matrix::is_zero) {
                    failures.push(format!("{name} {side} over {field}: degenerate basis"));
                }
            }
        }
    }
    verdict(
        2,
        "integral spaces",
        "dim 1 on both sides for 5 structures over Q and GF(5)".into(),
        &failures,
    );
}

#[test]
fn criterion_3_structure_theorem() {
    let mut failures = Vec::new();
    for field in fields() {
        for (name, a) in integral_universe(field) {
            let m = dual_hopf_module(&a).unwrap();
            if !validate_hopf_xi_module(&a, &m).unwrap().is_valid() {
                failures.push(format!("{name} over {field}: dual module invalid"));
            }
            let basis = coinvariants(&a, &m);
            if basis.len() != 1 {
                failures.push(format!("{name} over {field}: coinvariants of dim {}", basis.len()));
            }
            let right = integral_space(&a, Side::Right).remove(0);
            if !in_span(&basis, &integral_to_coinvariant(&a, &right), field) {
                failures.push(format!("{name} over {field}: right integral is not coinvariant"));
            }
            let iso = structure_iso(&a, &m).unwrap();
            for x in a.h().elements() {
                if !(&iso.epsilon[x] * &iso.nu[x]).is_identity() || !(&iso.nu[x] * &iso.epsilon[x]).is_identity() {
                    failures.push(format!("{name} over {field}: structure map at {x} is not invertible"));
                }
            }
        }
    }
    verdict(3, "structure theorem", "dual modules trivial with 1-dim coinvariants".into(), &failures);
}

/// `ϕ_{x,e}(G_x)` against `⟨G,e⟩ G_{Ξ(e)x}`, by direct multiplication.
fn pairing_oracle(a: &HopfXiCoalgebra, g: &GrouplikeFamily, values: &[Scalar]) -> bool {
    let (cm, f) = (a.cm(), a.field());
    a.h().elements().all(|x| {
        cm.e().elements().all(|e| {
            let moved = (a.phi(x, e) * &Matrix::column(f, g.0[x].clone())).col(0);
            let target = &g.0[cm.shift(e, x)];
            moved.iter().zip(target).all(|(m, t)| *m == &values[e] * t)
        })
    })
}

#[test]
fn criterion_4_pairing_lemma() {
    let mut failures = Vec::new();
    let mut grouplikes = 0;
    for field in fields() {
        for (name, a) in constructed(field)
            .into_iter()
            .chain(integral_universe(field).into_iter().map(|(n, a)| (n.to_string(), a)))
        {
            if !a.check_antipode_action_compat().unwrap().is_valid() {
                failures.push(format!("{name} over {field}: antipode does not commute with the action"));
            }
            let all = a.base().enumerate_grouplikes();
            grouplikes += all.len();
            if !a.pairing_bicharacter_check(&all).unwrap().is_valid() {
                failures.push(format!("{name} over {field}: pairing is not bimultiplicative"));
            }
            for g in &all {
                let table = a.grouplike_pairing(g).unwrap();
                if !table.report.is_valid() || !pairing_oracle(&a, g, &table.values) {
                    failures.push(format!("{name} over {field}: pairing identity fails for {:?}", g.0));
                }
            }
        }
        let a = k_omega(field);
        let (unit, g) = (a.base().unit_family(), GrouplikeFamily(vec![vec_of(field, &[0, 1])]));
        if a.grouplike_pairing(&g).unwrap().values != vec_of(field, &[1, -1]) {
            failures.push(format!("k^w[Z/2] over {field}: <g,e> is not -1"));
        }
        let all = a.base().enumerate_grouplikes();
        if all.len() != 2 || !all.contains(&unit) || !all.contains(&g) || a.enumerate_xi_grouplikes() != vec![unit] {
            failures.push(format!("k^w[Z/2] over {field}: grouplikes are not {{1}} inside {{1,g}}"));
        }
    }
    verdict(
        4,
        "pairing lemma",
        format!("{grouplikes} grouplikes checked, <g,e> = -1 on k^w[Z/2]"),
        &failures,
    );
}

#[test]
fn criterion_5_duality() {
    let mut failures = Vec::new();
    let mut count = 0;
    for field in fields() {
        for (name, a) in constructed(field).into_iter().chain([("sweedler rho".to_string(), sweedler_rho(field))]) {
            count += 1;
            let dual = dualize_coalgebra(&a).unwrap();
            if !validate_hopf_xi_algebra(&dual).is_valid() {
                failures.push(format!("{name} over {field}: dual algebra invalid"));
            }
            let back = dualize_algebra(&dual).unwrap();
            if back != a || dualize_coalgebra(&back).unwrap() != dual {
                failures.push(format!("{name} over {field}: double dual differs"));
            }
        }
    }
    verdict(5, "duality", format!("{count} structures round-trip exactly"), &failures);
}

fn k_at(a: &HopfXiCoalgebra, x: usize) -> AModule {
    AModule::concentrated(a, x, a.counit().clone()).unwrap()
}

#[test]
fn criterion_6_representation_category() {
    let a = k_xi(Q);
    let (k1, kh) = (k_at(&a, 0), k_at(&a, 1));
    // objects with their multiplicities (m_1, m_h)
    let objects = [
        (k1.clone(), [1, 0]),
        (kh.clone(), [0, 1]),
        (e_direct_sum(&a, &[k1.clone(), kh.clone()], 0).module, [1, 1]),
        (e_direct_sum(&a, &[kh.clone(), kh.clone()], 0).module, [0, 2]),
    ];
    let mut failures = Vec::new();
    // Ξ = id on Z/2 written out: Ξ(e)x = e xor x
    for (m, mm) in &objects {
        for (n, nn) in &objects {
            for e in 0..2 {
                let expected: usize = (0..2).map(|x| mm[x] * nn[e ^ x]).sum();
                let basis = hom_space(&a, m, n, e);
                if basis.len() != expected {
                    failures.push(format!("Hom^{e}({mm:?}, {nn:?}) has dim {} not {expected}", basis.len()));
                }
                if basis.iter().any(|f| !is_hom(&a, m, n, f)) {
                    failures.push(format!("Hom^{e}({mm:?}, {nn:?}) basis has a non-hom"));
                }
            }
        }
    }
    for (m, _) in &objects {
        for (n, _) in &objects {
            for (p, _) in &objects {
                for e in 0..2 {
                    for f in 0..2 {
                        for alpha in hom_space(&a, m, n, e) {
                            for beta in hom_space(&a, n, p, f) {
                                let c = compose_homs(&a, &beta, &alpha).unwrap();
                                if c.degree != e ^ f || !is_hom(&a, m, p, &c) {
                                    failures.push("composition degree law".into());
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    for (m, _) in &objects {
        let Some(x0) = m.degree() else { continue };
        for (n, _) in &objects {
            for (p, _) in &objects {
                for (q, _) in &objects {
                    for e in 0..2 {
                        for f in 0..2 {
                            for alpha in hom_space(&a, m, n, e) {
                                for beta in hom_space(&a, p, q, f) {
                                    let t = tensor_homs(&a, (m, n, &alpha), (p, q, &beta)).unwrap();
                                    // e · (x0 ▷ f), and Z/2 acts trivially on itself
                                    let law = t.degree == e ^ f && t.degree == a.cm().twisted_product(e, x0, f);
                                    if !law || !is_hom(&a, &tensor_modules(&a, m, p), &tensor_modules(&a, n, q), &t) {
                                        failures.push("tensor degree law".into());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // dim Hom^d(⊕^e X, ⊕^f Y) = Σ dim Hom^{f⁻¹de}(X_a, Y_b)
    let (xs, ys) = ([k1.clone(), kh.clone()], [kh.clone(), objects[2].0.clone()]);
    for d in 0..2 {
        for e in 0..2 {
            for f in 0..2 {
                let left = hom_space(&a, &e_direct_sum(&a, &xs, e).module, &e_direct_sum(&a, &ys, f).module, d).len();
                let right: usize = xs
                    .iter()
                    .flat_map(|x| ys.iter().map(move |y| (x, y)))
                    .map(|(x, y)| hom_space(&a, x, y, f ^ d ^ e).len())
                    .sum();
                if left != right {
                    failures.push(format!("direct-sum count at (d,e,f)=({d},{e},{f}): {left} vs {right}"));
                }
            }
        }
    }
    let pm = GrouplikeFamily(vec![vec_of(Q, &[1]), vec_of(Q, &[-1])]);
    for (m, mm) in &objects {
        if m.degree().is_none() {
            continue;
        }
        for pivot in [a.base().unit_family(), pm.clone()] {
            let d = dual_module(&a, m, &pivot).unwrap();
            if !d.report.is_valid() || !validate_module(&a, &d.module).unwrap().is_valid() {
                failures.push(format!("zig-zag fails for {mm:?}"));
            }
        }
    }
    verdict(
        6,
        "representation category",
        "hom dimensions, degree laws, direct sums and zig-zags".into(),
        &failures,
    );
}

#[test]
fn criterion_7_distinguished_grouplike() {
    let mut failures = Vec::new();
    for field in fields() {
        for (name, a) in integral_universe(field) {
            let d = distinguished_grouplike(&a).unwrap();
            if d.family != a.base().unit_family() || !a.is_xi_grouplike(&d.family) || !d.report.is_valid() {
                failures.push(format!("{name} over {field}: not the unit family"));
                continue;
            }
            // (id ⊗ λ)Δ(a) = λ(a) g_1 in A_1
            let g1 = classical_distinguished(a.base()).unwrap();
            let lambda = &d.integral.covectors[0];
            let left = &Matrix::identity(field, a.dim(0)).kron(lambda) * a.coproduct(0, 0);
            let right = &Matrix::column(field, g1.clone()) * lambda;
            if g1 != d.family.0[0] || left != right {
                failures.push(format!("{name} over {field}: classical identity fails"));
            }
            let transported = antipode_transport(&a, &integral_space(&a, Side::Left).remove(0)).unwrap();
            if transported.is_zero() {
                failures.push(format!("{name} over {field}: antipode kills the left integral"));
            }
        }
    }
    verdict(7, "distinguished grouplike", "unit family on every unimodular example".into(), &failures);
}

fn fixtures(dir: &str) -> Vec<PathBuf> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(dir);
    let mut paths: Vec<PathBuf> = std::fs::read_dir(root).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    paths
}

#[test]
fn criterion_8_mutation_sensitivity() {
    let mut failures = Vec::new();
    let paths = fixtures("mutations");
    for path in &paths {
        let bytes = std::fs::read(path).unwrap();
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        match run(&Command::Verify { name: None }, &bytes) {
            Ok(Outcome::Report(r)) if !r.passed() && !r.witnesses().is_empty() => {}
            other => failures.push(format!("{name}: {other:?}")),
        }
        let status = Process::new(env!("CARGO_BIN_EXE_xmhopf"))
            .arg("--doc")
            .arg(path)
            .arg("verify")
            .output()
            .unwrap()
            .status;
        if status.code() != Some(1) {
            failures.push(format!("{name}: exit status {status}"));
        }
    }
    if paths.len() != 10 {
        failures.push(format!("expected 10 mutations, found {}", paths.len()));
    }
    verdict(
        8,
        "mutation sensitivity",
        format!("{} mutations fail with witnesses", paths.len()),
        &failures,
    );
}

/// Every command over every shipped fixture, in text and JSON.
fn cli_suite() -> Vec<(String, Vec<u8>)> {
    let mut runs: Vec<(PathBuf, Vec<String>)> = Vec::new();
    for path in fixtures("valid") {
        let doc = parse(&std::fs::read(&path).unwrap()).unwrap();
        runs.push((path.clone(), vec!["verify".into()]));
        for name in doc.coalgebras.keys() {
            for cmd in ["report", "integrals", "grouplikes", "dual", "export"] {
                runs.push((path.clone(), vec![cmd.into(), name.clone()]));
            }
        }
        for (name, spec) in &doc.modules {
            for (other, spec2) in &doc.modules {
                if spec.coalgebra == spec2.coalgebra {
                    runs.push((path.clone(), vec!["hom".into(), spec.coalgebra.clone(), name.clone(), other.clone()]));
                }
            }
        }
        for (name, spec) in &doc.hopf_modules {
            runs.push((path.clone(), vec!["structure-theorem".into(), spec.coalgebra.clone(), name.clone()]));
        }
    }
    for path in fixtures("mutations") {
        runs.push((path, vec!["verify".into()]));
    }
    let mut outputs = Vec::new();
    for (path, args) in runs {
        for json in [false, true] {
            let mut p = Process::new(env!("CARGO_BIN_EXE_xmhopf"));
            p.arg("--doc").arg(&path).args(&args);
            if json {
                p.arg("--json");
            }
            let out = p.output().unwrap();
            let mut bytes = out.stdout;
            bytes.extend_from_slice(format!("\nexit {:?}\n", out.status.code()).as_bytes());
            bytes.extend(out.stderr);
            outputs.push((
                format!("{} {}{}", path.display(), args.join(" "), if json { " --json" } else { "" }),
                bytes,
            ));
        }
    }
    outputs
}

#[test]
fn criterion_9_determinism() {
    let (first, second) = (cli_suite(), cli_suite());
    let mut failures: Vec<String> = first.iter().zip(&second).filter(|(a, b)| a != b).map(|(a, _)| a.0.clone()).collect();
    if first.len() != second.len() {
        failures.push("suite sizes differ".into());
    }
    verdict(9, "determinism", format!("{} runs byte-identical twice", first.len()), &failures);
}
