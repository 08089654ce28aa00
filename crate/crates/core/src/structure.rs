//! Center, conjugacy classes and centralizers.
//!
//! Everything here is computed twice: by exhaustive scan over the group, and from the
//! closed-form descriptions of the family. A disagreement is returned as
//! [`Error::ClosedFormMismatch`]; nothing downstream runs on a structure that failed it.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};

/// Def. of the module types of the double, read off the class representative.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassType {
    Central,
    /// a^s u^{2i}, s even, noncentral.
    TypeIEven,
    /// a^s u^{2i}, s odd.
    TypeIOdd,
    /// a^s u^{2i-1}.
    TypeII,
    /// a^s u^i v.
    TypeIII,
}

impl ClassType {
    pub fn of(g: &GroupElement, central: bool) -> ClassType {
        if central {
            ClassType::Central
        } else if g.has_v() {
            ClassType::TypeIII
        } else if g.i % 2 == 1 {
            ClassType::TypeII
        } else if g.s % 2 == 0 {
            ClassType::TypeIEven
        } else {
            ClassType::TypeIOdd
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            ClassType::Central => "central",
            ClassType::TypeIEven => "type-I-even",
            ClassType::TypeIOdd => "type-I-odd",
            ClassType::TypeII => "type-II",
            ClassType::TypeIII => "type-III",
        }
    }
}

impl fmt::Display for ClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A subgroup of G, stored as a sorted element list plus an index over all of G.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
    /// `position[index_of(g)]` is the position of g in `elements`, or `u32::MAX`.
    position: Vec<u32>,
    is_abelian: bool,
}

impl Subgroup {
    /// Closure of `gens` inside `group`.
    pub fn generated(group: &Group, gens: &[GroupElement]) -> Result<Subgroup> {
        let elements = group.generated_subgroup(gens)?;
        Ok(Self::from_elements(group, elements, gens.to_vec()))
    }

    /// Wraps an element set that is already known to be closed and generated by
    /// `generators`. Elements are sorted.
    pub fn from_elements(
        group: &Group,
        mut elements: Vec<GroupElement>,
        generators: Vec<GroupElement>,
    ) -> Subgroup {
        elements.sort();
        elements.dedup();
        let mut position = vec![u32::MAX; group.order()];
        for (pos, e) in elements.iter().enumerate() {
            position[group.index_of(e)] = pos as u32;
        }
        let is_abelian =
            elements.iter().all(|x| generators.iter().all(|y| group.commutes(x, y)));
        Subgroup { elements, generators, position, is_abelian }
    }

    /// G itself.
    pub fn whole(group: &Group) -> Subgroup {
        let gens = vec![group.a(), group.u(), group.v()];
        Self::from_elements(group, group.enumerate().to_vec(), gens)
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_abelian(&self) -> bool {
        self.is_abelian
    }

    /// Position of `g` in [`Self::elements`] given its G-index.
    #[inline]
    pub fn position_of_index(&self, g_index: usize) -> Option<usize> {
        match self.position[g_index] {
            u32::MAX => None,
            p => Some(p as usize),
        }
    }

    #[inline]
    pub fn position(&self, group: &Group, g: &GroupElement) -> Option<usize> {
        self.position_of_index(group.index_of(g))
    }

    pub fn contains(&self, group: &Group, g: &GroupElement) -> bool {
        self.position(group, g).is_some()
    }

    pub fn same_elements(&self, other: &Subgroup) -> bool {
        self.elements == other.elements
    }

    pub fn is_subset_of(&self, group: &Group, other: &Subgroup) -> bool {
        self.elements.iter().all(|e| other.contains(group, e))
    }

    /// Checks closure under products and inverses.
    pub fn is_closed(&self, group: &Group) -> bool {
        self.elements.iter().all(|x| {
            self.contains(group, &group.inverse(x))
                && self.elements.iter().all(|y| self.contains(group, &group.multiply(x, y)))
        })
    }

    /// Largest element order; for abelian groups this is the exponent.
    pub fn exponent(&self, group: &Group) -> Result<u64> {
        self.elements.iter().try_fold(1u64, |acc, e| {
            Ok(num_integer::Integer::lcm(&acc, &group.element_order(e)?))
        })
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    /// Least member in enumeration order.
    pub representative: GroupElement,
    /// Members in discovery order; `members[0]` is the representative.
    pub members: Vec<GroupElement>,
    pub type_tag: ClassType,
    /// `coset_reps[i] · representative · coset_reps[i]⁻¹ = members[i]`, `coset_reps[0] = 1`.
    pub coset_reps: Vec<GroupElement>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn position_of(&self, g: &GroupElement) -> Option<usize> {
        self.members.iter().position(|m| m == g)
    }
}

/// Brute-force center, checked against ⟨a^{2^{l-1}}, u^{k/2}⟩.
pub fn center(group: &Group) -> Result<Subgroup> {
    let brute: Vec<GroupElement> = group
        .enumerate()
        .iter()
        .filter(|z| group.enumerate().iter().all(|g| group.commutes(z, g)))
        .copied()
        .collect();
    let p = group.params();
    let gens = [
        GroupElement::new(p.half(), 0, 0),
        GroupElement::new(0, p.k() / 2, 0),
    ];
    let closed = Subgroup::generated(group, &gens)?;
    if closed.elements() != brute.as_slice() || brute.len() != 4 {
        return Err(Error::ClosedFormMismatch(format!(
            "center: brute force has {} elements {:?}, closed form {:?}",
            brute.len(),
            brute.iter().map(ToString::to_string).collect::<Vec<_>>(),
            closed.elements().iter().map(ToString::to_string).collect::<Vec<_>>()
        )));
    }
    Ok(closed)
}

/// Orbit partition of G under conjugation, without any closed-form checks.
pub fn conjugacy_classes_bruteforce(group: &Group) -> Vec<ConjugacyClass> {
    let n = group.order();
    let mut assigned = vec![false; n];
    let mut classes = Vec::new();
    for idx in 0..n {
        if assigned[idx] {
            continue;
        }
        let rep = group.element_at(idx);
        let mut members = Vec::new();
        let mut coset_reps = Vec::new();
        let mut seen = BTreeSet::new();
        for h in group.enumerate() {
            let t = group.conjugate(&rep, h);
            if seen.insert(t) {
                members.push(t);
                coset_reps.push(*h);
            }
        }
        for m in &members {
            assigned[group.index_of(m)] = true;
        }
        let type_tag = ClassType::of(&rep, members.len() == 1);
        classes.push(ConjugacyClass { representative: rep, members, type_tag, coset_reps });
    }
    classes
}

/// 6 + 5·2^{l-3}·k/2.
pub fn expected_class_count(group: &Group) -> usize {
    let p = group.params();
    6 + 5 * (1usize << (p.l() - 3)) * (p.k() as usize / 2)
}

/// Closed-form member set of the class of `g`.
pub fn closed_form_class(group: &Group, g: &GroupElement) -> BTreeSet<GroupElement> {
    let p = group.params();
    let (n1, n2) = (i64::from(p.n1()), i64::from(p.n2()));
    let half = i64::from(p.half());
    let s = i64::from(g.s);
    let i = i64::from(g.i);
    let mut out = BTreeSet::new();
    if !g.has_v() {
        if g.i % 2 == 0 {
            out.insert(group.element(s, i, 0));
            out.insert(group.element(n1 * s, i, 0));
            out.insert(group.element(n2 * s, -i, 0));
            out.insert(group.element(-s, -i, 0));
        } else {
            out.insert(group.element(s, i, 0));
            out.insert(group.element(s + half, i, 0));
            out.insert(group.element(-s, -i, 0));
            out.insert(group.element(-s + half, -i, 0));
        }
    } else {
        for r in 0..half {
            for t in 0..i64::from(p.k()) / 4 {
                out.insert(group.element(2 * r + s, 4 * t + i, 1));
                out.insert(group.element(2 * r + n2 * s, 4 * t - i, 1));
                out.insert(group.element(2 * r - s, 4 * t + 2 - i, 1));
                out.insert(group.element(2 * r + n1 * s, 4 * t + 2 + i, 1));
            }
        }
    }
    out
}

/// Expected (size, count) of noncentral classes of each type.
pub fn expected_type_profile(group: &Group, tag: ClassType) -> (usize, usize) {
    let p = group.params();
    let pow = 1usize << (p.l() - 3);
    let k = p.k() as usize;
    match tag {
        ClassType::Central => (1, 4),
        ClassType::TypeIEven => (2, pow * k - 2),
        ClassType::TypeIOdd => (4, pow * k / 2),
        ClassType::TypeII => (4, pow * k),
        ClassType::TypeIII => ((1usize << (p.l() - 2)) * k, 4),
    }
}

/// Conjugacy classes, checked against the closed-form class descriptions.
pub fn conjugacy_classes(group: &Group) -> Result<Vec<ConjugacyClass>> {
    let classes = conjugacy_classes_bruteforce(group);
    let center = center(group)?;
    let expected = expected_class_count(group);
    if classes.len() != expected {
        return Err(Error::ClosedFormMismatch(format!(
            "class count: brute force {} vs closed form {}",
            classes.len(),
            expected
        )));
    }
    let total: usize = classes.iter().map(ConjugacyClass::size).sum();
    if total != group.order() {
        return Err(Error::ClosedFormMismatch(format!("class sizes sum to {total}")));
    }
    for tag in [
        ClassType::Central,
        ClassType::TypeIEven,
        ClassType::TypeIOdd,
        ClassType::TypeII,
        ClassType::TypeIII,
    ] {
        let of_type: Vec<&ConjugacyClass> = classes.iter().filter(|c| c.type_tag == tag).collect();
        let (size, count) = expected_type_profile(group, tag);
        if of_type.len() != count {
            return Err(Error::ClosedFormMismatch(format!(
                "{tag}: {} classes, closed form says {count}",
                of_type.len()
            )));
        }
        if let Some(bad) = of_type.iter().find(|c| c.size() != size) {
            return Err(Error::ClosedFormMismatch(format!(
                "class of {} ({tag}) has size {}, closed form says {size}",
                bad.representative,
                bad.size()
            )));
        }
    }
    for class in &classes {
        let central = class.size() == 1;
        if central != center.contains(group, &class.representative) {
            return Err(Error::ClosedFormMismatch(format!(
                "singleton classes and center disagree at {}",
                class.representative
            )));
        }
        if central {
            continue;
        }
        let brute: BTreeSet<GroupElement> = class.members.iter().copied().collect();
        for member in &class.members {
            if ClassType::of(member, false) != class.type_tag {
                return Err(Error::ClosedFormMismatch(format!(
                    "member {member} of class {} has a different type",
                    class.representative
                )));
            }
            if closed_form_class(group, member) != brute {
                return Err(Error::ClosedFormMismatch(format!(
                    "class of {} disagrees with the closed-form member set of {member}",
                    class.representative
                )));
            }
        }
    }
    Ok(classes)
}

/// Brute-force centralizer {h : hg = gh}.
pub fn centralizer_bruteforce(group: &Group, g: &GroupElement) -> Subgroup {
    let elements: Vec<GroupElement> =
        group.enumerate().iter().filter(|h| group.commutes(g, h)).copied().collect();
    let generators = elements.clone();
    Subgroup::from_elements(group, elements, generators)
}

/// Generators of the closed-form centralizer of a noncentral `g`.
pub fn closed_form_centralizer_generators(group: &Group, g: &GroupElement) -> Vec<GroupElement> {
    let p = group.params();
    let a = group.a();
    let u = group.u();
    let a2 = group.element(2, 0, 0);
    let u2 = group.element(0, 2, 0);
    match ClassType::of(g, false) {
        ClassType::TypeIEven => vec![a, u],
        ClassType::TypeIOdd => vec![a, u2],
        ClassType::TypeII if g.s % 2 == 0 => vec![a2, u],
        ClassType::TypeII => vec![a2, group.multiply(&a, &u)],
        _ => vec![
            group.element(i64::from(p.half()), 0, 0),
            group.element(0, i64::from(p.k() / 2), 0),
            *g,
        ],
    }
}

/// Centralizer of `g`, checked against the closed form.
pub fn centralizer(group: &Group, g: &GroupElement) -> Result<Subgroup> {
    let brute = centralizer_bruteforce(group, g);
    if brute.order() == group.order() {
        return Ok(Subgroup::whole(group));
    }
    let gens = closed_form_centralizer_generators(group, g);
    let closed = Subgroup::generated(group, &gens)?;
    let mismatch = |what: &str| {
        Error::ClosedFormMismatch(format!("centralizer of {g}: {what}"))
    };
    if !closed.same_elements(&brute) {
        return Err(mismatch(&format!(
            "brute force order {}, closed form order {}",
            brute.order(),
            closed.order()
        )));
    }
    let tag = ClassType::of(g, false);
    match tag {
        ClassType::TypeIEven => {
            if closed.is_abelian() {
                return Err(mismatch("⟨a,u⟩ should be nonabelian"));
            }
        }
        ClassType::TypeIOdd | ClassType::TypeII => {
            if !closed.is_abelian() {
                return Err(mismatch("expected an abelian centralizer"));
            }
            if closed.order() * 4 != group.order() && tag == ClassType::TypeII {
                return Err(mismatch("expected index 4"));
            }
        }
        ClassType::TypeIII => {
            if !closed.is_abelian() || closed.order() != 8 {
                return Err(mismatch("expected an abelian group of order 8"));
            }
            let expected_exponent = if g.i % 2 == 0 && g.s % 2 == 1 { 4 } else { 2 };
            if closed.exponent(group)? != expected_exponent {
                return Err(mismatch("wrong isomorphism type (Z4xZ2 vs Z2^3)"));
            }
        }
        ClassType::Central => {}
    }
    Ok(Subgroup { generators: gens, ..closed })
}

/// Every element is conjugate to its inverse.
pub fn is_completely_real(group: &Group, classes: &[ConjugacyClass]) -> bool {
    let mut class_of = vec![usize::MAX; group.order()];
    for (c, class) in classes.iter().enumerate() {
        for m in &class.members {
            class_of[group.index_of(m)] = c;
        }
    }
    group
        .enumerate()
        .iter()
        .all(|g| class_of[group.index_of(g)] == class_of[group.index_of(&group.inverse(g))])
}

/// v, uv, auv are involutions and generate G.
pub fn is_generated_by_involutions(group: &Group) -> Result<bool> {
    let v = group.v();
    let uv = group.multiply(&group.u(), &v);
    let auv = group.multiply(&group.a(), &uv);
    let gens = [v, uv, auv];
    let involutions = gens.iter().all(|g| group.multiply(g, g).is_identity() && !g.is_identity());
    Ok(involutions && group.generated_subgroup(&gens)?.len() == group.order())
}

/// Everything structural about G, computed once and shared.
#[derive(Debug)]
pub struct Structure {
    pub center: Subgroup,
    pub classes: Vec<ConjugacyClass>,
    /// Centralizer of each class representative, indexed like `classes`.
    pub centralizers: Vec<Arc<Subgroup>>,
    /// Class index of every element, indexed by G-index.
    class_of: Vec<usize>,
}

impl Structure {
    pub fn build(group: &Group) -> Result<Structure> {
        let center = center(group)?;
        let classes = conjugacy_classes(group)?;
        let whole = Arc::new(Subgroup::whole(group));
        let mut centralizers: Vec<Arc<Subgroup>> = Vec::with_capacity(classes.len());
        for class in &classes {
            let c = centralizer(group, &class.representative)?;
            if c.order() * class.size() != group.order() {
                return Err(Error::ClosedFormMismatch(format!(
                    "|class({})|·|C_G| = {} ≠ |G|",
                    class.representative,
                    c.order() * class.size()
                )));
            }
            // Share identical centralizers so character tables can be reused.
            let shared = if c.order() == group.order() {
                whole.clone()
            } else if let Some(existing) = centralizers.iter().find(|e| e.same_elements(&c)) {
                existing.clone()
            } else {
                Arc::new(c)
            };
            centralizers.push(shared);
        }
        let mut class_of = vec![usize::MAX; group.order()];
        for (c, class) in classes.iter().enumerate() {
            for m in &class.members {
                class_of[group.index_of(m)] = c;
            }
        }
        Ok(Structure { center, classes, centralizers, class_of })
    }

    pub fn class_index_of(&self, group: &Group, g: &GroupElement) -> usize {
        self.class_of[group.index_of(g)]
    }

    pub fn class_of(&self, group: &Group, g: &GroupElement) -> &ConjugacyClass {
        &self.classes[self.class_index_of(group, g)]
    }

    pub fn centralizer_of_class(&self, class_index: usize) -> &Arc<Subgroup> {
        &self.centralizers[class_index]
    }
}
