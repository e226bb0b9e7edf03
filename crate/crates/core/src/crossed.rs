//! Crossed modules `Ξ: E → H` and arrows of the associated groupoid.

use crate::error::{AlgebraError, Result};
use crate::group::{conjugation_action, validate_action, validate_group, validate_hom, FiniteGroup, GroupAction, GroupHom, Quotient};
use crate::report::{Check, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CrossedModule {
    xi: GroupHom,
    action: GroupAction,
}

impl CrossedModule {
    /// Pairs a homomorphism with an action without checking any axiom.
    pub fn unchecked(xi: GroupHom, action: GroupAction) -> Result<Self> {
        if action.actor != xi.target || action.space != xi.source {
            return Err(AlgebraError::shape("action groups do not match the homomorphism"));
        }
        Ok(CrossedModule { xi, action })
    }

    pub fn new(xi: GroupHom, action: GroupAction) -> Result<Self> {
        let cm = CrossedModule::unchecked(xi, action)?;
        let report = validate_crossed_module(&cm);
        if !report.is_valid() {
            return Err(AlgebraError::InvalidCrossedModule(report));
        }
        Ok(cm)
    }

    /// `id: G → G` with conjugation.
    pub fn identity(g: &FiniteGroup) -> Self {
        let xi = GroupHom::identity(g);
        let action = conjugation_action(&xi).expect("inner action");
        CrossedModule { xi, action }
    }

    /// `1 → H`.
    pub fn trivial_over(h: &FiniteGroup) -> Self {
        let one = FiniteGroup::trivial();
        CrossedModule {
            xi: GroupHom::trivial(&one, h),
            action: GroupAction::trivial(h, &one),
        }
    }

    /// `E → 1` for abelian `E`.
    pub fn abelian_to_point(e: &FiniteGroup) -> Result<Self> {
        if let Some((a, b)) = e.commutator_witness() {
            return Err(AlgebraError::NotAbelian(format!("{a}·{b} ≠ {b}·{a}")));
        }
        let one = FiniteGroup::trivial();
        Ok(CrossedModule {
            xi: GroupHom::trivial(e, &one),
            action: GroupAction::trivial(&one, e),
        })
    }

    /// Inclusion of a normal subgroup with the conjugation action.
    pub fn inclusion(embedding: GroupHom) -> Result<Self> {
        let action = conjugation_action(&embedding)?;
        CrossedModule::new(embedding, action)
    }

    pub fn e(&self) -> &FiniteGroup {
        &self.xi.source
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.xi.target
    }

    pub fn hom(&self) -> &GroupHom {
        &self.xi
    }

    pub fn action(&self) -> &GroupAction {
        &self.action
    }

    /// `Ξ(e)`.
    pub fn xi(&self, e: usize) -> usize {
        self.xi.apply(e)
    }

    /// `ˣe`.
    pub fn act(&self, x: usize, e: usize) -> usize {
        self.action.act(x, e)
    }

    /// `Ξ(e)·x`, the target of the arrow with source `x` and label `e`.
    pub fn shift(&self, e: usize, x: usize) -> usize {
        self.h().mul(self.xi(e), x)
    }

    /// Label `e·ˣf` of the product of arrows labelled `e` (source `x`) and `f`.
    pub fn twisted_product(&self, e: usize, x: usize, f: usize) -> usize {
        self.e().mul(e, self.act(x, f))
    }

    pub fn arrow(&self, source: usize, label: usize) -> Arrow {
        Arrow {
            source,
            label,
            target: self.shift(label, source),
        }
    }

    pub fn identity_arrow(&self, x: usize) -> Arrow {
        self.arrow(x, 0)
    }

    /// Arrows `x → y`: labels `e` with `y = Ξ(e)x`, ascending.
    pub fn hom_set(&self, x: usize, y: usize) -> Vec<Arrow> {
        self.e().elements().filter(|&e| self.shift(e, x) == y).map(|e| self.arrow(x, e)).collect()
    }

    /// `after ∘ before`, labelled by the product `after.label · before.label`.
    pub fn compose(&self, after: &Arrow, before: &Arrow) -> Result<Arrow> {
        if before.target != after.source {
            return Err(AlgebraError::NonComposable(format!("{before} then {after}")));
        }
        Ok(self.arrow(before.source, self.e().mul(after.label, before.label)))
    }

    pub fn arrow_tensor(&self, a: &Arrow, b: &Arrow) -> Arrow {
        let h = self.h();
        Arrow {
            source: h.mul(a.source, b.source),
            label: self.twisted_product(a.label, a.source, b.label),
            target: h.mul(a.target, b.target),
        }
    }

    pub fn arrow_antipode(&self, a: &Arrow) -> Arrow {
        let xinv = self.h().inv(a.source);
        Arrow {
            source: xinv,
            label: self.act(xinv, self.e().inv(a.label)),
            target: self.h().inv(a.target),
        }
    }

    pub fn is_valid_arrow(&self, a: &Arrow) -> bool {
        a.target == self.shift(a.label, a.source)
    }

    /// Kernel, image and cokernel of `Ξ`, with consistency checks.
    pub fn kernel_image_cokernel(&self) -> Result<KerImCoker> {
        let (e, h) = (self.e(), self.h());
        let kernel = self.xi.kernel();
        let image = self.xi.image();
        let mut report = ValidationReport::new();

        let mut central = Check::new("kernel is central");
        for &k in &kernel {
            for f in e.elements() {
                central.expect(e.mul(k, f) == e.mul(f, k), || format!("k={k}, f={f}"));
            }
        }
        report.push(central);

        let mut normal = Check::new("image is normal");
        for x in h.elements() {
            for &i in &image {
                normal.expect(image.contains(&h.conj(x, i)), || format!("x={x}, i={i}"));
            }
        }
        report.push(normal);
        if !report.is_valid() {
            return Err(AlgebraError::InvalidCrossedModule(report));
        }

        let cokernel = h.quotient(&image)?;
        let mut induced = Check::new("induced cokernel action on kernel");
        for x in h.elements() {
            for &i in &image {
                for &k in &kernel {
                    let (l, r) = (self.act(h.mul(x, i), k), self.act(x, k));
                    induced.expect(l == r && kernel.contains(&r), || format!("x={x}, i={i}, k={k}"));
                }
            }
        }
        report.push(induced);
        Ok(KerImCoker {
            kernel,
            image,
            cokernel,
            report,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KerImCoker {
    pub kernel: Vec<usize>,
    pub image: Vec<usize>,
    pub cokernel: Quotient,
    pub report: ValidationReport,
}

/// Arrow `source → target` of the groupoid, labelled by an element of `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub label: usize,
    pub target: usize,
}

impl std::fmt::Display for Arrow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} → {}, {})", self.source, self.target, self.label)
    }
}

/// Component checks, equivariance `Ξ(ˣe) = xΞ(e)x⁻¹` and Peiffer `^{Ξ(e)}f = efe⁻¹`.
pub fn validate_crossed_module(cm: &CrossedModule) -> ValidationReport {
    let (e, h) = (cm.e(), cm.h());
    let mut report = ValidationReport::new();
    report.absorb("E", validate_group(e));
    report.absorb("H", validate_group(h));
    report.absorb("Ξ", validate_hom(&cm.xi));
    report.absorb("action", validate_action(&cm.action));

    let mut equiv = Check::new("equivariance");
    for x in h.elements() {
        for v in e.elements() {
            let (l, r) = (cm.xi(cm.act(x, v)), h.conj(x, cm.xi(v)));
            equiv.expect(l == r, || format!("(x,e)=({x},{v}): {l} vs {r}"));
        }
    }
    report.push(equiv);

    let mut peiffer = Check::new("peiffer");
    for u in e.elements() {
        for v in e.elements() {
            peiffer.expect(peiffer_holds(cm, u, v), || {
                format!("(e,f)=({u},{v}): {} vs {}", cm.act(cm.xi(u), v), e.conj(u, v))
            });
        }
    }
    report.push(peiffer);
    report
}

pub fn peiffer_holds(cm: &CrossedModule, e: usize, f: usize) -> bool {
    cm.act(cm.xi(e), f) == cm.e().conj(e, f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_examples_validate() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(validate_crossed_module(&CrossedModule::identity(&z2)).is_valid());
        assert!(validate_crossed_module(&CrossedModule::trivial_over(&z2)).is_valid());
        let (_, emb) = s3.subgroup(&[0, 3, 4]).unwrap();
        assert!(CrossedModule::inclusion(emb).is_ok());
        assert!(matches!(CrossedModule::abelian_to_point(&s3), Err(AlgebraError::NotAbelian(_))));
    }

    #[test]
    fn s3_to_point_breaks_peiffer() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let one = FiniteGroup::trivial();
        let cm = CrossedModule::unchecked(GroupHom::trivial(&s3, &one), GroupAction::trivial(&one, &s3)).unwrap();
        let report = validate_crossed_module(&cm);
        // (01) = 2 and (02) = 5 do not commute
        assert!(!peiffer_holds(&cm, 2, 5));
        let check = report.find("peiffer").unwrap();
        // non-commuting ordered pairs: 36 - sum of centralizer orders
        assert_eq!(check.violations, 36 - (6 + 2 + 2 + 3 + 3 + 2));
    }

    #[test]
    fn hom_sets_of_identity_z2() {
        let cm = CrossedModule::identity(&FiniteGroup::cyclic(2).unwrap());
        assert_eq!(
            cm.hom_set(0, 1),
            vec![Arrow {
                source: 0,
                label: 1,
                target: 1
            }]
        );
        assert_eq!(cm.hom_set(0, 0), vec![cm.identity_arrow(0)]);
        assert_eq!(cm.arrow_antipode(&cm.identity_arrow(1)), cm.identity_arrow(1));
        let t = cm.arrow_tensor(&cm.arrow(0, 1), &cm.identity_arrow(0));
        assert_eq!(t, cm.arrow(0, 1));
    }

    #[test]
    fn noncomposable_arrows() {
        let cm = CrossedModule::identity(&FiniteGroup::cyclic(2).unwrap());
        assert!(matches!(
            cm.compose(&cm.identity_arrow(0), &cm.arrow(0, 1)),
            Err(AlgebraError::NonComposable(_))
        ));
    }

    #[test]
    fn kernels_and_cokernels() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let k = CrossedModule::identity(&z2).kernel_image_cokernel().unwrap();
        assert_eq!((k.kernel, k.cokernel.group.order()), (vec![0], 1));

        let k = CrossedModule::abelian_to_point(&z2).unwrap().kernel_image_cokernel().unwrap();
        assert_eq!((k.kernel, k.cokernel.group.order()), (vec![0, 1], 1));

        let s3 = FiniteGroup::symmetric(3).unwrap();
        let (_, emb) = s3.subgroup(&[0, 3, 4]).unwrap();
        let k = CrossedModule::inclusion(emb).unwrap().kernel_image_cokernel().unwrap();
        assert_eq!(k.cokernel.group.order(), 2);
        assert!(k.report.is_valid());
    }
}
