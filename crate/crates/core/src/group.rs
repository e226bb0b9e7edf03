//! Finite groups as multiplication tables, homomorphisms and actions.
//!
//! Elements are indices `0..order`; index 0 is always the identity.

use std::collections::BTreeSet;

use crate::error::{AlgebraError, Result};
use crate::report::{Check, ValidationReport};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Wraps a table after checking only its shape. Use [`validate_group`]
    /// (or [`FiniteGroup::new`]) to check the group axioms.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(AlgebraError::InvalidGroup("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::InvalidGroup("table is not square".into()));
        }
        if let Some(v) = rows.iter().flatten().find(|&&v| v >= n) {
            return Err(AlgebraError::InvalidGroup(format!("entry {v} out of range for order {n}")));
        }
        let table: Vec<usize> = rows.into_iter().flatten().collect();
        // Missing inverses are reported by the validator; park them on 0.
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0 && table[b * n + a] == 0).unwrap_or(0))
            .collect();
        Ok(FiniteGroup { order: n, table, inverses })
    }

    /// Checked constructor: shape plus all group axioms.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let g = FiniteGroup::from_table(rows)?;
        let report = validate_group(&g);
        if !report.is_valid() {
            return Err(AlgebraError::InvalidGroup(report.to_string().trim_end().to_string()));
        }
        Ok(g)
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1).expect("order 1")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(AlgebraError::InvalidGroup("cyclic group of order 0".into()));
        }
        Ok(Self::from_fn(n, |a, b| (a + b) % n))
    }

    /// `(a, b)` is stored at index `a * |h| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order;
        Self::from_fn(g.order * m, |a, b| g.mul(a / m, b / m) * m + h.mul(a % m, b % m))
    }

    /// Symmetric group on `n ≤ 4` letters. Elements are the permutations of
    /// [`permutations`] in lexicographic order, and `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 4 {
            return Err(AlgebraError::InvalidGroup(format!("symmetric group S{n} is not supported (1 ≤ n ≤ 4)")));
        }
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("permutation");
        Ok(Self::from_fn(perms.len(), |a, b| {
            let composed: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index(&composed)
        }))
    }

    fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
        FiniteGroup::from_table(rows).expect("generated table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    /// First non-commuting pair, if any.
    pub fn commutator_witness(&self) -> Option<(usize, usize)> {
        self.elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    pub fn is_abelian(&self) -> bool {
        self.commutator_witness().is_none()
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        set.contains(&0) && set.iter().all(|&a| a < self.order) && set.iter().all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, elements: &[usize]) -> bool {
        let set: BTreeSet<usize> = elements.iter().copied().collect();
        self.elements().all(|x| set.iter().all(|&a| set.contains(&self.conj(x, a))))
    }

    /// The subgroup on `elements` (in the given order, identity first) and its
    /// embedding into `self`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, GroupHom)> {
        if elements.first() != Some(&0) {
            return Err(AlgebraError::InvalidGroup("subgroup must list the identity first".into()));
        }
        let distinct: BTreeSet<_> = elements.iter().collect();
        if distinct.len() != elements.len() || !self.is_subgroup(elements) {
            return Err(AlgebraError::InvalidGroup(format!("{elements:?} is not a subgroup")));
        }
        let pos = |v: usize| elements.iter().position(|&a| a == v).expect("closed");
        let sub = Self::from_fn(elements.len(), |a, b| pos(self.mul(elements[a], elements[b])));
        let hom = GroupHom::new(sub.clone(), self.clone(), elements.to_vec())?;
        Ok((sub, hom))
    }

    /// Quotient by a normal subgroup. Cosets are numbered by their least
    /// element, so the identity coset is 0.
    pub fn quotient(&self, normal: &[usize]) -> Result<Quotient> {
        if !self.is_subgroup(normal) {
            return Err(AlgebraError::InvalidGroup(format!("{normal:?} is not a subgroup")));
        }
        if !self.is_normal(normal) {
            return Err(AlgebraError::NotNormal(format!("{normal:?}")));
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut representatives = Vec::new();
        for x in self.elements() {
            if projection[x] != usize::MAX {
                continue;
            }
            let c = representatives.len();
            representatives.push(x);
            for &k in normal {
                projection[self.mul(x, k)] = c;
            }
        }
        let group = Self::from_fn(representatives.len(), |a, b| projection[self.mul(representatives[a], representatives[b])]);
        Ok(Quotient {
            group,
            projection,
            representatives,
        })
    }
}

/// A quotient group with its projection and least-index coset representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub group: FiniteGroup,
    pub projection: Vec<usize>,
    pub representatives: Vec<usize>,
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for i in 0..n {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

pub fn validate_group(g: &FiniteGroup) -> ValidationReport {
    let n = g.order;
    let mut identity = Check::new("identity");
    for a in g.elements() {
        identity.expect(g.mul(0, a) == a && g.mul(a, 0) == a, || {
            format!("a={a}: 0·a={}, a·0={}", g.mul(0, a), g.mul(a, 0))
        });
    }
    let mut inverses = Check::new("inverses");
    for a in g.elements() {
        let ok = (0..n).any(|b| g.mul(a, b) == 0 && g.mul(b, a) == 0);
        inverses.expect(ok, || format!("a={a} has no two-sided inverse"));
    }
    let mut assoc = Check::new("associativity");
    for a in g.elements() {
        for b in g.elements() {
            for c in g.elements() {
                let (l, r) = (g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                assoc.expect(l == r, || format!("(a,b,c)=({a},{b},{c}): {l} vs {r}"));
            }
        }
    }
    ValidationReport {
        checks: vec![identity, inverses, assoc],
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    pub source: FiniteGroup,
    pub target: FiniteGroup,
    map: Vec<usize>,
}

impl GroupHom {
    /// Shape-checked only; see [`validate_hom`].
    pub fn new(source: FiniteGroup, target: FiniteGroup, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.order() {
            return Err(AlgebraError::shape(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                source.order()
            )));
        }
        if let Some(v) = map.iter().find(|&&v| v >= target.order()) {
            return Err(AlgebraError::shape(format!("image {v} out of range")));
        }
        Ok(GroupHom { source, target, map })
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            map: g.elements().collect(),
        }
    }

    pub fn trivial(source: &FiniteGroup, target: &FiniteGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            map: vec![0; source.order()],
        }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        self.map.iter().collect::<BTreeSet<_>>().len() == self.map.len()
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.source.elements().filter(|&a| self.map[a] == 0).collect()
    }

    /// Image elements in ascending order.
    pub fn image(&self) -> Vec<usize> {
        self.map.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
    }
}

pub fn validate_hom(f: &GroupHom) -> ValidationReport {
    let (g, h) = (&f.source, &f.target);
    let mut unit = Check::new("identity preserved");
    unit.expect(f.apply(0) == 0, || format!("f(0)={}", f.apply(0)));
    let mut mult = Check::new("multiplicative");
    for a in g.elements() {
        for b in g.elements() {
            let (l, r) = (f.apply(g.mul(a, b)), h.mul(f.apply(a), f.apply(b)));
            mult.expect(l == r, || format!("(a,b)=({a},{b}): f(ab)={l}, f(a)f(b)={r}"));
        }
    }
    ValidationReport { checks: vec![unit, mult] }
}

/// Left action of `actor` on `space` by a table `act[x][e]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupAction {
    pub actor: FiniteGroup,
    pub space: FiniteGroup,
    table: Vec<usize>,
}

impl GroupAction {
    /// Shape-checked only; see [`validate_action`].
    pub fn new(actor: FiniteGroup, space: FiniteGroup, rows: Vec<Vec<usize>>) -> Result<Self> {
        let (h, e) = (actor.order(), space.order());
        if rows.len() != h || rows.iter().any(|r| r.len() != e) {
            return Err(AlgebraError::shape(format!("action table must be {h}x{e}")));
        }
        if rows.iter().flatten().any(|&v| v >= e) {
            return Err(AlgebraError::shape("action value out of range"));
        }
        Ok(GroupAction {
            actor,
            space,
            table: rows.into_iter().flatten().collect(),
        })
    }

    pub fn trivial(actor: &FiniteGroup, space: &FiniteGroup) -> Self {
        let rows = actor.elements().map(|_| space.elements().collect()).collect();
        GroupAction::new(actor.clone(), space.clone(), rows).expect("trivial action")
    }

    /// `ˣe`.
    pub fn act(&self, x: usize, e: usize) -> usize {
        self.table[x * self.space.order() + e]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.space.order()).map(<[usize]>::to_vec).collect()
    }
}

pub fn validate_action(a: &GroupAction) -> ValidationReport {
    let (h, e) = (&a.actor, &a.space);
    let mut unit = Check::new("identity acts trivially");
    for v in e.elements() {
        unit.expect(a.act(0, v) == v, || format!("e={v}: ¹e={}", a.act(0, v)));
    }
    let mut compat = Check::new("action composition");
    for x in h.elements() {
        for y in h.elements() {
            for v in e.elements() {
                let (l, r) = (a.act(x, a.act(y, v)), a.act(h.mul(x, y), v));
                compat.expect(l == r, || format!("(x,y,e)=({x},{y},{v}): {l} vs {r}"));
            }
        }
    }
    let mut auto = Check::new("acts by automorphisms");
    for x in h.elements() {
        let bijective = e.elements().map(|v| a.act(x, v)).collect::<BTreeSet<_>>().len() == e.order();
        auto.expect(bijective, || format!("x={x} does not act bijectively"));
        for u in e.elements() {
            for v in e.elements() {
                let (l, r) = (a.act(x, e.mul(u, v)), e.mul(a.act(x, u), a.act(x, v)));
                auto.expect(l == r, || format!("x={x}, (e,f)=({u},{v}): {l} vs {r}"));
            }
        }
    }
    ValidationReport {
        checks: vec![unit, compat, auto],
    }
}

/// Conjugation action of `embedding.target` on `embedding.source`,
/// `ˣe = ι⁻¹(x ι(e) x⁻¹)`.
pub fn conjugation_action(embedding: &GroupHom) -> Result<GroupAction> {
    if !embedding.is_injective() {
        return Err(AlgebraError::NotInjective);
    }
    let (e, h) = (&embedding.source, &embedding.target);
    let mut rows = Vec::with_capacity(h.order());
    for x in h.elements() {
        let mut row = Vec::with_capacity(e.order());
        for v in e.elements() {
            let c = h.conj(x, embedding.apply(v));
            let Some(pre) = e.elements().find(|&u| embedding.apply(u) == c) else {
                return Err(AlgebraError::NotNormal(format!(
                    "conjugate of {} by {x} is {c}, outside the image",
                    embedding.apply(v)
                )));
            };
            row.push(pre);
        }
        rows.push(row);
    }
    GroupAction::new(h.clone(), e.clone(), rows)
}
