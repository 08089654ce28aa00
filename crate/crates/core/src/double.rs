//! Simple modules of the Drinfeld double D(G) and their higher indicators.
//!
//! A simple module is a pair (class O, irreducible η of C_G(rep O)). Its m-th indicator is
//! computed three ways: from the sets G_m(x) = {a : Π_{j<m} a^{-j} x a^j = 1} at the
//! representative, from the induced character of D(G), and from closed forms per class type.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    irreducible_characters_of_centralizer, irreducible_characters_of_g, CharLabel, CharacterTable,
    ClassFunction,
};
use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::group_indicators::{nu_group_bruteforce_with, nu_group_closed, IndicatorPath, IndicatorValue};
use crate::structure::{ClassType, ConjugacyClass, Structure, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DoubleModuleLabel {
    /// Index into the class list.
    pub class_index: usize,
    /// Index into the centralizer's character table.
    pub eta_index: usize,
    pub dim: u64,
}

/// G together with its classes, centralizer tables and the simple modules of D(G).
#[derive(Debug)]
pub struct DoubleGroup {
    group: Group,
    structure: Structure,
    g_table: Arc<CharacterTable>,
    tables: Vec<Arc<CharacterTable>>,
    labels: Vec<DoubleModuleLabel>,
}

impl DoubleGroup {
    pub fn build(group: Group) -> Result<DoubleGroup> {
        let structure = Structure::build(&group)?;
        let g_table = Arc::new(irreducible_characters_of_g(&group, &structure)?);
        let mut cache: Vec<(Arc<Subgroup>, Arc<CharacterTable>)> = Vec::new();
        let mut tables = Vec::with_capacity(structure.classes.len());
        for c in 0..structure.classes.len() {
            let cent = structure.centralizer_of_class(c);
            let table = match cache.iter().find(|(s, _)| Arc::ptr_eq(s, cent)) {
                Some((_, t)) => t.clone(),
                None if cent.order() == group.order() => g_table.clone(),
                None => {
                    let t = Arc::new(irreducible_characters_of_centralizer(&group, cent, &g_table)?);
                    cache.push((cent.clone(), t.clone()));
                    t
                }
            };
            tables.push(table);
        }
        let mut labels = Vec::new();
        for (c, t) in tables.iter().enumerate() {
            let size = structure.classes[c].size() as u64;
            for (e, eta) in t.irreducibles.iter().enumerate() {
                labels.push(DoubleModuleLabel { class_index: c, eta_index: e, dim: eta.dim() * size });
            }
        }
        Ok(DoubleGroup { group, structure, g_table, tables, labels })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn g_table(&self) -> &CharacterTable {
        &self.g_table
    }

    pub fn table(&self, class_index: usize) -> &CharacterTable {
        &self.tables[class_index]
    }

    pub fn labels(&self) -> &[DoubleModuleLabel] {
        &self.labels
    }

    pub fn class(&self, label: &DoubleModuleLabel) -> &ConjugacyClass {
        &self.structure.classes[label.class_index]
    }

    pub fn eta(&self, label: &DoubleModuleLabel) -> &ClassFunction {
        &self.tables[label.class_index].irreducibles[label.eta_index]
    }

    pub fn eta_label(&self, label: &DoubleModuleLabel) -> CharLabel {
        self.tables[label.class_index].labels[label.eta_index]
    }

    /// Σ dim² over all simple modules, which must be |G|².
    pub fn dimension_square_sum(&self) -> u64 {
        self.labels.iter().map(|l| l.dim * l.dim).sum()
    }

    pub fn describe(&self, label: &DoubleModuleLabel) -> String {
        format!(
            "({}, {} #{})",
            self.class(label).representative,
            self.eta_label(label),
            label.eta_index
        )
    }
}

/// G_m(x) with the m-th power of every member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GmRecord {
    pub base: GroupElement,
    pub m: u64,
    /// G-indices of the members, ascending.
    pub members: Vec<u32>,
    /// G-index of a^m for each member.
    pub powers: Vec<u32>,
}

impl GmRecord {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_elements<'a>(&'a self, group: &'a Group) -> impl Iterator<Item = GroupElement> + 'a {
        self.members.iter().map(|&i| group.element_at(i as usize))
    }

    /// Number of a ∈ G_m(x) with a^m = y.
    pub fn z(&self, group: &Group, y: &GroupElement) -> u64 {
        let target = group.index_of(y) as u32;
        self.powers.iter().filter(|&&p| p == target).count() as u64
    }
}

/// G_m(x) for every m in 1..=max_m, by forming the products incrementally.
pub fn gm_bruteforce_upto(group: &Group, x: &GroupElement, max_m: u64) -> Vec<GmRecord> {
    let mut records: Vec<GmRecord> = (1..=max_m)
        .map(|m| GmRecord { base: *x, m, members: Vec::new(), powers: Vec::new() })
        .collect();
    for (idx, a) in group.enumerate().iter().enumerate() {
        let a_inv = group.inverse(a);
        let mut term = *x;
        let mut product = *x;
        let mut a_pow = *a;
        for m in 1..=max_m {
            if product.is_identity() {
                let rec = &mut records[(m - 1) as usize];
                rec.members.push(idx as u32);
                rec.powers.push(group.index_of(&a_pow) as u32);
            }
            // next factor a^{-m} x a^m
            term = group.multiply(&group.multiply(&a_inv, &term), a);
            product = group.multiply(&product, &term);
            a_pow = group.multiply(&a_pow, a);
        }
    }
    records
}

/// G_m(x) by direct evaluation of the product, left to right.
pub fn gm_bruteforce(group: &Group, x: &GroupElement, m: u64) -> Result<GmRecord> {
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    if !group.contains(x) {
        return Err(Error::ForeignElement(*x));
    }
    Ok(gm_bruteforce_upto(group, x, m).pop().expect("m ≥ 1"))
}

/// The eleven shapes of (x, a) distinguished by the closed form for G_m(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GmCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl GmCase {
    pub const ALL: [GmCase; 11] = [
        GmCase::I,
        GmCase::II,
        GmCase::III,
        GmCase::IV,
        GmCase::V,
        GmCase::VI,
        GmCase::VII,
        GmCase::VIII,
        GmCase::IX,
        GmCase::X,
        GmCase::XI,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi"][self.index()]
    }

    /// Which case applies to base x and candidate a.
    pub fn classify(x: &GroupElement, a: &GroupElement) -> GmCase {
        let i_even = x.i % 2 == 0;
        let j_even = a.i % 2 == 0;
        match (x.has_v(), a.has_v()) {
            (false, false) => GmCase::I,
            (false, true) if i_even => GmCase::II,
            (false, true) => GmCase::III,
            (true, false) => match (i_even, j_even) {
                (true, true) => GmCase::IV,
                (true, false) => GmCase::V,
                (false, true) => GmCase::VI,
                (false, false) => GmCase::VII,
            },
            (true, true) => match (i_even, j_even) {
                (true, true) => GmCase::VIII,
                (true, false) => GmCase::IX,
                (false, true) => GmCase::X,
                (false, false) => GmCase::XI,
            },
        }
    }
}

impl fmt::Display for GmCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How often each case was evaluated and how often it produced a member.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GmCaseTally {
    pub evaluated: [u64; 11],
    pub members: [u64; 11],
}

impl GmCaseTally {
    pub fn merge(&mut self, other: &GmCaseTally) {
        for c in 0..11 {
            self.evaluated[c] += other.evaluated[c];
            self.members[c] += other.members[c];
        }
    }

    /// Cases that never produced a member.
    pub fn unexercised(&self) -> Vec<GmCase> {
        GmCase::ALL.into_iter().filter(|c| self.members[c.index()] == 0).collect()
    }
}

fn dv(d: i64, n: i64) -> bool {
    n.rem_euclid(d) == 0
}

/// Closed-form membership of a in G_m(x).
pub fn gm_closed_member(group: &Group, x: &GroupElement, a: &GroupElement, m: u64) -> (GmCase, bool) {
    let p = group.params();
    let modulus = i64::from(p.modulus());
    let quarter = modulus / 4;
    let k = i64::from(p.k());
    let m = m as i64;
    let (r, i) = (i64::from(x.s), i64::from(x.i));
    let (s, j) = (i64::from(a.s), i64::from(a.i));
    let even_m = m % 2 == 0;
    let case = GmCase::classify(x, a);
    let member = match case {
        GmCase::I => dv(k, m * i) && dv(modulus, m * r),
        GmCase::II => x.is_identity() || (even_m && (j % 2 == 1 || dv(4, m * r))),
        GmCase::III => even_m && ((j % 2 == 0 && dv(4, m * s)) || (j % 2 == 1 && dv(4, m * (r + s)))),
        GmCase::IV => {
            even_m
                && dv(k, m * j)
                && ((dv(4, m * r) && dv(modulus, m * s))
                    || (!dv(4, m * r) && s.rem_euclid(modulus / 2) == quarter))
        }
        GmCase::V => dv(4, m) && dv(k, m * j) && dv(modulus, m * s),
        GmCase::VI => even_m && dv(k, m * j) && dv(modulus, m * s),
        GmCase::VII => dv(4, m) && dv(k, m * j) && dv(modulus, m * s),
        GmCase::VIII => {
            even_m && dv(k, m * (i - j)) && dv(modulus, m * r - (1 - quarter) * m * s)
        }
        GmCase::IX | GmCase::X => dv(4, m) && dv(k, m * (i - j)) && dv(modulus, m * (r - s)),
        GmCase::XI => even_m && dv(k, m * (i - j)) && dv(modulus, m * (r - s)),
    };
    (case, member)
}

/// G_m(x) from the closed form, tallying case usage.
pub fn gm_closed(group: &Group, x: &GroupElement, m: u64, tally: &mut GmCaseTally) -> Result<Vec<GroupElement>> {
    if m == 0 {
        return Err(Error::Invalid("m must be positive".into()));
    }
    if !group.contains(x) {
        return Err(Error::ForeignElement(*x));
    }
    let mut out = Vec::new();
    for a in group.enumerate() {
        let (case, member) = gm_closed_member(group, x, a, m);
        tally.evaluated[case.index()] += 1;
        if member {
            tally.members[case.index()] += 1;
            out.push(*a);
        }
    }
    Ok(out)
}

/// Checks the closed form for G_m(x) against brute force for every x ∈ G and m ≤ max_m.
pub fn verify_gm_closed(group: &Group, max_m: u64) -> Result<GmCaseTally> {
    verify_gm_closed_on(group, group.enumerate(), max_m)
}

/// Like [`verify_gm_closed`], restricted to the given bases.
pub fn verify_gm_closed_on(group: &Group, bases: &[GroupElement], max_m: u64) -> Result<GmCaseTally> {
    let tallies: Vec<Result<GmCaseTally>> = bases
        .par_iter()
        .map(|x| {
            let mut tally = GmCaseTally::default();
            for rec in gm_bruteforce_upto(group, x, max_m) {
                let closed = gm_closed(group, x, rec.m, &mut tally)?;
                let brute: Vec<GroupElement> = rec.member_elements(group).collect();
                if closed != brute {
                    let witness = group
                        .enumerate()
                        .iter()
                        .find(|a| closed.contains(a) != brute.contains(a))
                        .expect("sets differ");
                    let (case, said) = gm_closed_member(group, x, witness, rec.m);
                    return Err(Error::ClosedFormMismatch(format!(
                        "G_{}({x}): a = {witness}, case {case} says {said}, brute force says {}",
                        rec.m, !said
                    )));
                }
            }
            Ok(tally)
        })
        .collect();
    let mut total = GmCaseTally::default();
    for t in tallies {
        total.merge(&t?);
    }
    Ok(total)
}

/// z_m(x, y) = |{a ∈ G_m(x) : a^m = y}|.
pub fn z_m(group: &Group, x: &GroupElement, y: &GroupElement, m: u64) -> Result<u64> {
    Ok(gm_bruteforce(group, x, m)?.z(group, y))
}

impl DoubleGroup {
    /// Value of the character of the simple module `label` at p_g ⋈ h.
    pub fn double_character_value(&self, label: &DoubleModuleLabel, g: &GroupElement, h: &GroupElement) -> Complex64 {
        let class = self.class(label);
        let Some(pos) = class.position_of(g) else {
            return Complex64::new(0.0, 0.0);
        };
        if !self.group.commutes(g, h) {
            return Complex64::new(0.0, 0.0);
        }
        let gi = class.coset_reps[pos];
        let pulled = self.group.multiply(&self.group.multiply(&self.group.inverse(&gi), h), &gi);
        self.eta(label).value(&self.group, &pulled)
    }

    fn zform_from(&self, label: &DoubleModuleLabel, rec: &GmRecord) -> Result<Complex64> {
        let eta = self.eta(label);
        let cent = eta.domain();
        let mut sum = Complex64::new(0.0, 0.0);
        for &p in &rec.powers {
            match cent.position_of_index(p as usize) {
                Some(pos) => sum += eta.values()[pos],
                None => {
                    return Err(Error::Invalid(format!(
                        "a^m = {} outside the centralizer of {}",
                        self.group.element_at(p as usize),
                        rec.base
                    )))
                }
            }
        }
        Ok(sum / cent.order() as f64)
    }

    /// (1/|C|) Σ_{a ∈ G_m(rep)} η(a^m).
    pub fn nu_double_zform(&self, label: &DoubleModuleLabel, m: u64) -> Result<IndicatorValue> {
        let rec = gm_bruteforce(&self.group, &self.class(label).representative, m)?;
        let raw = self.zform_from(label, &rec)?;
        IndicatorValue::from_raw(m, raw, IndicatorPath::Zform, &self.describe(label))
    }

    /// (1/|G|) Σ_{g ∈ O} Σ_{a ∈ G_m(g)} χ(p_g ⋈ a^m) with the full module character.
    pub fn nu_double_charform(&self, label: &DoubleModuleLabel, m: u64) -> Result<IndicatorValue> {
        let records: Vec<GmRecord> = self
            .class(label)
            .members
            .iter()
            .map(|g| gm_bruteforce(&self.group, g, m))
            .collect::<Result<_>>()?;
        let raw = self.charform_from(label, &records);
        IndicatorValue::from_raw(m, raw, IndicatorPath::Charform, &self.describe(label))
    }

    fn charform_from(&self, label: &DoubleModuleLabel, records: &[GmRecord]) -> Complex64 {
        let mut sum = Complex64::new(0.0, 0.0);
        for rec in records {
            for &p in &rec.powers {
                sum += self.double_character_value(label, &rec.base, &self.group.element_at(p as usize));
            }
        }
        sum / self.group.order() as f64
    }

    /// For central classes: ν_m(η) if rep^m = 1, else 0.
    pub fn nu_double_central(&self, label: &DoubleModuleLabel, m: u64) -> Result<i64> {
        let class = self.class(label);
        if class.type_tag != ClassType::Central {
            return Err(Error::Invalid(format!("{} is not central", class.representative)));
        }
        if !self.group.power(&class.representative, m).is_identity() {
            return Ok(0);
        }
        Ok(nu_group_bruteforce_with(self.eta(label), m, &self.group.power_table(m))?.rounded)
    }

    /// Closed form for the indicator, chosen by class type.
    pub fn nu_double_closed(&self, label: &DoubleModuleLabel, m: u64) -> Result<i64> {
        if m == 0 {
            return Err(Error::Invalid("m must be positive".into()));
        }
        let group = &self.group;
        let p = group.params();
        let class = self.class(label);
        let rep = class.representative;
        let eta = self.eta(label);
        let modulus = u64::from(p.modulus());
        let half = modulus / 2;
        let k = u64::from(p.k());
        let four_case = |cond4: bool| -> i64 {
            if m % 2 == 1 {
                0
            } else if m % 4 == 2 {
                1
            } else if cond4 {
                4
            } else {
                2
            }
        };
        match class.type_tag {
            ClassType::Central => {
                if !group.power(&rep, m).is_identity() {
                    return Ok(0);
                }
                nu_group_closed(p, &self.eta_label(label), m)
            }
            ClassType::TypeIOdd => {
                // η(a) = ζ_{2^l}^s, η(u²) = ζ_{k/2}^t
                let t = eta_exponent(group, eta, &group.element(0, 2, 0), k / 2)?;
                let cond = m % modulus == 0 && (m * u64::from(rep.i)) % k == 0 && (m * t) % k == 0;
                Ok(four_case(cond))
            }
            ClassType::TypeIEven => match self.eta_label(label) {
                CharLabel::InducedInCentralizer { t, .. } => {
                    let cond = m % modulus == 0
                        && (m * u64::from(rep.i)) % k == 0
                        && (m * u64::from(t)) % k == 0;
                    Ok(four_case(cond))
                }
                _ => {
                    let phases = eta
                        .phases()
                        .ok_or_else(|| Error::Invalid("linear centralizer character without phases".into()))?;
                    let trivial_power = phases.power_trivial_on(m, 0..eta.domain().order());
                    let cond = (m * u64::from(rep.i)) % k == 0
                        && (m * u64::from(rep.s)) % modulus == 0
                        && trivial_power;
                    Ok(i64::from(m % 2 == 0) + i64::from(cond))
                }
            },
            ClassType::TypeII => {
                let h = Subgroup::generated(group, &[group.element(2, 0, 0), group.element(0, 2, 0)])?;
                let phases = eta
                    .phases()
                    .ok_or_else(|| Error::Invalid("abelian centralizer character without phases".into()))?;
                let cond = m % 2 == 0
                    && (m * u64::from(rep.i)) % k == 0
                    && (m * u64::from(rep.s)) % modulus == 0
                    && phases.power_trivial_on(
                        m / 2,
                        h.elements().iter().map(|e| eta.domain().position(group, e).expect("H ⊂ C")),
                    );
                Ok(four_case(cond))
            }
            ClassType::TypeIII => {
                if m % 2 == 1 {
                    return Ok(0);
                }
                let gk = m.gcd(&k);
                let gl = m.gcd(&modulus);
                if rep.i % 2 == 0 && rep.s % 2 == 1 && m % 4 == 2 {
                    let z_sign = eta.value(group, &group.element(half as i64, 0, 0)).re.round() as i64;
                    exact_signed(gk as i64 * z_sign, 2)
                } else {
                    exact(gk * gl, 4)
                }
            }
        }
    }
}

fn exact(n: u64, d: u64) -> Result<i64> {
    exact_signed(n as i64, d as i64)
}

fn exact_signed(n: i64, d: i64) -> Result<i64> {
    if n % d != 0 {
        return Err(Error::ClosedFormMismatch(format!("closed form gives non-integer {n}/{d}")));
    }
    Ok(n / d)
}

/// e with η(g) = ζ_q^e, for a linear η given by exact phases.
fn eta_exponent(group: &Group, eta: &ClassFunction, g: &GroupElement, q: u64) -> Result<u64> {
    let phases = eta.phases().ok_or_else(|| Error::Invalid("character has no exact phases".into()))?;
    let pos = eta
        .domain()
        .position(group, g)
        .ok_or_else(|| Error::Invalid(format!("{g} is outside the character's domain")))?;
    let scaled = u128::from(phases.numer[pos]) * u128::from(q);
    let denom = u128::from(phases.denom);
    if scaled % denom != 0 {
        return Err(Error::Invalid(format!("η({g}) is not a power of ζ_{q}")));
    }
    Ok((scaled / denom) as u64)
}

/// One simple module at one m, with every computed path.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DoubleRow {
    pub label: DoubleModuleLabel,
    pub value: IndicatorValue,
}

impl DoubleRow {
    pub fn agree(&self) -> bool {
        self.value.agree()
    }
}

impl DoubleGroup {
    /// All paths for every simple module and every m in `ms`.
    ///
    /// Work is split over (class, m); each task builds G_m for the class members once and
    /// evaluates every η of that class. Rows come back sorted by (label, m).
    pub fn sweep(&self, ms: &[u64]) -> Result<Vec<DoubleRow>> {
        if ms.contains(&0) {
            return Err(Error::Invalid("m must be positive".into()));
        }
        let max_m = ms.iter().copied().max().unwrap_or(0);
        let classes = &self.structure.classes;
        let power_tables: HashMap<u64, Vec<u32>> =
            ms.iter().map(|&m| (m, self.group.power_table(m))).collect();
        let per_class: Vec<Result<Vec<DoubleRow>>> = (0..classes.len())
            .into_par_iter()
            .map(|c| {
                let class = &classes[c];
                let by_member: Vec<Vec<GmRecord>> = class
                    .members
                    .iter()
                    .map(|g| gm_bruteforce_upto(&self.group, g, max_m))
                    .collect();
                let mut rows = Vec::new();
                for e in 0..self.tables[c].len() {
                    let label = DoubleModuleLabel {
                        class_index: c,
                        eta_index: e,
                        dim: self.tables[c].irreducibles[e].dim() * class.size() as u64,
                    };
                    for &m in ms {
                        let idx = (m - 1) as usize;
                        let context = self.describe(&label);
                        let raw = self.zform_from(&label, &by_member[0][idx])?;
                        let mut value = IndicatorValue::from_raw(m, raw, IndicatorPath::Zform, &context)?;
                        let records: Vec<GmRecord> = by_member.iter().map(|r| r[idx].clone()).collect();
                        let char_raw = self.charform_from(&label, &records);
                        let char_value = IndicatorValue::from_raw(m, char_raw, IndicatorPath::Charform, &context)?;
                        value.paths.insert(IndicatorPath::Charform, char_value.rounded);
                        if class.type_tag == ClassType::Central {
                            let central = if self.group.power(&class.representative, m).is_identity() {
                                nu_group_bruteforce_with(self.eta(&label), m, &power_tables[&m])?.rounded
                            } else {
                                0
                            };
                            value.paths.insert(IndicatorPath::Central, central);
                        }
                        let closed = self.nu_double_closed(&label, m)?;
                        value.paths.insert(IndicatorPath::ClosedForm, closed);
                        rows.push(DoubleRow { label, value });
                    }
                }
                Ok(rows)
            })
            .collect();
        let mut rows = Vec::new();
        for r in per_class {
            rows.extend(r?);
        }
        Ok(rows)
    }

    /// Simple modules with ν_2 = -1, found via the G_m form and confirmed by the other paths.
    pub fn find_negative_indicators(&self) -> Result<Vec<DoubleRow>> {
        let negative: Vec<DoubleRow> =
            self.sweep(&[2])?.into_iter().filter(|r| r.value.rounded < 0).collect();
        if let Some(bad) = negative.iter().find(|r| !r.agree()) {
            return Err(Error::PathDisagreement(format!(
                "{}: {}",
                self.describe(&bad.label),
                bad.value.describe_paths()
            )));
        }
        Ok(negative)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double(l: u32, k: u32) -> DoubleGroup {
        DoubleGroup::build(Group::build(l, k).unwrap()).unwrap()
    }

    #[test]
    fn label_count_and_dimensions() {
        let d = double(3, 4);
        assert_eq!(d.labels().len(), 232);
        assert_eq!(d.dimension_square_sum(), 64 * 64);
    }

    #[test]
    fn gm_examples() {
        let g = Group::build(3, 4).unwrap();
        let one = gm_bruteforce(&g, &g.identity(), 3).unwrap();
        assert_eq!(one.len(), 64);
        let av = g.element(1, 0, 1);
        for m in 1..=16 {
            let rec = gm_bruteforce(&g, &av, m).unwrap();
            for a in rec.member_elements(&g) {
                assert!(g.commutes(&g.power(&a, m), &av));
            }
        }
        assert!(gm_bruteforce(&g, &av, 0).is_err());
    }

    #[test]
    fn closed_gm_matches_at_3_4() {
        let g = Group::build(3, 4).unwrap();
        let tally = verify_gm_closed(&g, 16).unwrap();
        assert!(tally.evaluated.iter().all(|&n| n > 0));
    }

    #[test]
    fn negative_indicators_at_3_4() {
        let d = double(3, 4);
        let neg = d.find_negative_indicators().unwrap();
        assert_eq!(neg.len(), 4);
        let g = d.group();
        let z = g.element(4, 0, 0);
        for row in &neg {
            assert_eq!(d.class(&row.label).representative, g.element(1, 0, 1));
            assert_eq!(row.value.rounded, -1);
            assert!((d.eta(&row.label).value(g, &z) + 1.0).norm() < 1e-12);
        }
    }
}
