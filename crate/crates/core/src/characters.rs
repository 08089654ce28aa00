//! Class functions, induction and the irreducible characters of G and of its centralizers.
//!
//! Values are `Complex64` built from exact root-of-unity angles. Linear characters
//! additionally keep their exact phases (value = exp(2πi·p/N)), which the closed-form
//! indicator formulas use for exact tests such as "η^m restricted to H is trivial".

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, GroupElement};
use crate::structure::{Structure, Subgroup};

/// Entry-wise tolerance for orthogonality and integrality of character data.
pub const VALUE_TOLERANCE: f64 = 1e-9;
/// Inner products within this distance of 0 or 1 are classified; anything else is an error.
pub const DEDUP_TOLERANCE: f64 = 1e-6;

/// exp(2πi·p/q), exact at the quarter turns.
pub fn root_of_unity(p: i64, q: u64) -> Complex64 {
    let q = q as i64;
    let p = p.rem_euclid(q);
    if (4 * p) % q == 0 {
        return match 4 * p / q {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = std::f64::consts::TAU * (p as f64) / (q as f64);
    Complex64::new(angle.cos(), angle.sin())
}

/// Exact values of a linear character: value at position j is exp(2πi·numer[j]/denom).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phases {
    pub denom: u64,
    pub numer: Vec<u64>,
}

impl Phases {
    /// True when χ^m is trivial on every element of `positions`.
    pub fn power_trivial_on(&self, m: u64, positions: impl IntoIterator<Item = usize>) -> bool {
        positions
            .into_iter()
            .all(|p| (u128::from(self.numer[p]) * u128::from(m)) % u128::from(self.denom) == 0)
    }
}

/// A function on a subgroup's elements.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    domain: Arc<Subgroup>,
    values: Vec<Complex64>,
    phases: Option<Phases>,
}

impl ClassFunction {
    pub fn new(domain: Arc<Subgroup>, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != domain.order() {
            return Err(Error::DomainMismatch);
        }
        Ok(ClassFunction { domain, values, phases: None })
    }

    /// A linear character given by exact phases over `domain`.
    pub fn from_phases(domain: Arc<Subgroup>, phases: Phases) -> Result<Self> {
        if phases.numer.len() != domain.order() {
            return Err(Error::DomainMismatch);
        }
        let values = phases.numer.iter().map(|&p| root_of_unity(p as i64, phases.denom)).collect();
        Ok(ClassFunction { domain, values, phases: Some(phases) })
    }

    pub fn trivial(domain: Arc<Subgroup>) -> Self {
        let n = domain.order();
        ClassFunction::from_phases(domain, Phases { denom: 1, numer: vec![0; n] })
            .expect("length matches")
    }

    pub fn domain(&self) -> &Arc<Subgroup> {
        &self.domain
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn phases(&self) -> Option<&Phases> {
        self.phases.as_ref()
    }

    /// Value at the identity, which is always the first domain element.
    pub fn degree(&self) -> Complex64 {
        self.values[0]
    }

    /// Degree rounded to an integer.
    pub fn dim(&self) -> u64 {
        self.degree().re.round() as u64
    }

    /// Value at `g`; zero off the domain.
    #[inline]
    pub fn value(&self, group: &Group, g: &GroupElement) -> Complex64 {
        self.value_at_index(group.index_of(g))
    }

    #[inline]
    pub fn value_at_index(&self, g_index: usize) -> Complex64 {
        match self.domain.position_of_index(g_index) {
            Some(p) => self.values[p],
            None => Complex64::new(0.0, 0.0),
        }
    }

    pub fn is_linear(&self) -> bool {
        self.phases.is_some()
    }

    /// Checks constancy on the conjugacy classes of the domain.
    pub fn is_class_function(&self, group: &Group) -> bool {
        let elems = self.domain.elements();
        elems.iter().zip(&self.values).all(|(x, vx)| {
            elems.iter().all(|h| {
                let y = group.conjugate(x, h);
                (self.value(group, &y) - vx).norm() < VALUE_TOLERANCE
            })
        })
    }
}

fn same_domain(f: &ClassFunction, g: &ClassFunction) -> bool {
    Arc::ptr_eq(&f.domain, &g.domain) || f.domain.same_elements(&g.domain)
}

/// (1/|H|) Σ_h f(h)·conj(g(h)).
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<Complex64> {
    if !same_domain(f, g) {
        return Err(Error::DomainMismatch);
    }
    let sum: Complex64 = f.values.iter().zip(&g.values).map(|(a, b)| a * b.conj()).sum();
    Ok(sum / f.values.len() as f64)
}

/// Restriction of `f` to a subgroup of its domain.
pub fn restrict(group: &Group, f: &ClassFunction, sub: &Arc<Subgroup>) -> Result<ClassFunction> {
    if !sub.is_subset_of(group, &f.domain) {
        return Err(Error::NotASubgroup("restriction target".into()));
    }
    let values = sub.elements().iter().map(|e| f.value(group, e)).collect();
    let phases = f.phases.as_ref().map(|ph| Phases {
        denom: ph.denom,
        numer: sub
            .elements()
            .iter()
            .map(|e| ph.numer[f.domain.position(group, e).expect("subset")])
            .collect(),
    });
    Ok(ClassFunction { domain: sub.clone(), values, phases })
}

/// Left transversal of `sub` in `sup`, starting with the identity.
pub fn left_transversal(group: &Group, sub: &Subgroup, sup: &Subgroup) -> Vec<GroupElement> {
    let mut covered = vec![false; group.order()];
    let mut reps = Vec::with_capacity(sup.order() / sub.order().max(1));
    for t in sup.elements() {
        if covered[group.index_of(t)] {
            continue;
        }
        reps.push(*t);
        for h in sub.elements() {
            covered[group.index_of(&group.multiply(t, h))] = true;
        }
    }
    reps
}

/// Induces `f` from its domain H up to `target` ⊇ H.
///
/// Uses f^G(g) = (1/|H|) Σ_{x∈G} f°(x⁻¹gx), evaluated over a left transversal.
pub fn induce(group: &Group, f: &ClassFunction, target: &Arc<Subgroup>) -> Result<ClassFunction> {
    let sub = &f.domain;
    if !sub.is_subset_of(group, target) || target.order() % sub.order() != 0 {
        return Err(Error::NotASubgroup(format!(
            "domain of order {} inside a group of order {}",
            sub.order(),
            target.order()
        )));
    }
    let transversal = left_transversal(group, sub, target);
    if transversal.len() * sub.order() != target.order() {
        return Err(Error::NotASubgroup("cosets do not tile the target".into()));
    }
    let inverses: Vec<GroupElement> = transversal.iter().map(|t| group.inverse(t)).collect();
    let values = target
        .elements()
        .iter()
        .map(|g| {
            transversal
                .iter()
                .zip(&inverses)
                .map(|(t, ti)| f.value(group, &group.multiply(&group.multiply(ti, g), t)))
                .sum()
        })
        .collect();
    ClassFunction::new(target.clone(), values)
}

/// All homomorphisms from an abelian subgroup to the unit circle, with exact phases.
///
/// Generators are added greedily (largest order first); every character of the
/// current subgroup B extends to ⟨B, g⟩ in exactly d ways, d = [⟨B,g⟩ : B].
pub fn abelian_characters(group: &Group, sub: &Arc<Subgroup>) -> Result<Vec<ClassFunction>> {
    if !sub.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let orders: Vec<u64> =
        sub.elements().iter().map(|e| group.element_order(e)).collect::<Result<_>>()?;
    let denom = orders.iter().fold(1u64, |acc, o| acc.lcm(o));

    let mut in_b = vec![usize::MAX; group.order()];
    let mut b_elems = vec![group.identity()];
    in_b[0] = 0;
    let mut chars: Vec<Vec<u64>> = vec![vec![0]];

    while b_elems.len() < sub.order() {
        let (pos, _) = sub
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, e)| in_b[group.index_of(e)] == usize::MAX)
            .max_by(|(p, _), (q, _)| orders[*p].cmp(&orders[*q]).then(q.cmp(p)))
            .expect("B is a proper subgroup");
        let g = sub.elements()[pos];
        let mut d = 1u64;
        let mut gd = g;
        while in_b[group.index_of(&gd)] == usize::MAX {
            gd = group.multiply(&gd, &g);
            d += 1;
        }
        let gd_pos = in_b[group.index_of(&gd)];

        let old_len = b_elems.len();
        let mut g_pow = group.identity();
        let mut new_elems = Vec::with_capacity(old_len * d as usize);
        for _ in 0..d {
            for b in &b_elems {
                new_elems.push(group.multiply(b, &g_pow));
            }
            g_pow = group.multiply(&g_pow, &g);
        }

        let mut new_chars = Vec::with_capacity(chars.len() * d as usize);
        for chi in &chars {
            let target = chi[gd_pos];
            if target % d != 0 {
                return Err(Error::CharacterTable(format!(
                    "cannot extend phase {target}/{denom} over index {d}"
                )));
            }
            for j in 0..d {
                let c = (target / d + j * (denom / d)) % denom;
                let mut ext = Vec::with_capacity(new_elems.len());
                for e in 0..d {
                    for p in chi.iter() {
                        ext.push((p + e * c) % denom);
                    }
                }
                new_chars.push(ext);
            }
        }
        for (p, e) in new_elems.iter().enumerate() {
            in_b[group.index_of(e)] = p;
        }
        b_elems = new_elems;
        chars = new_chars;
    }

    chars
        .into_iter()
        .map(|chi| {
            let numer = sub.elements().iter().map(|e| chi[in_b[group.index_of(e)]]).collect();
            ClassFunction::from_phases(sub.clone(), Phases { denom, numer })
        })
        .collect()
}

/// Where a character in a table came from, with the parameters needed by the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum CharLabel {
    /// Linear character of G given by signs on (a, u, v); `true` means -1.
    LinearQuotient { a_neg: bool, u_neg: bool, v_neg: bool },
    /// Induced from α^r ⊗ β^t on H_1 = ⟨a, u²⟩ (degree 4, r odd).
    #[serde(rename = "induced-H1")]
    InducedH1 { r: u32, t: u32 },
    /// Induced from φ_{r,t} = γ^r ⊗ ρ^t on H_2 = ⟨a, u⟩ (degree 2).
    #[serde(rename = "induced-H2")]
    InducedH2 { r: u32, t: u32 },
    /// A homomorphism to the unit circle; exact phases live on the class function.
    AbelianHom,
    /// Degree-2 character of ⟨a, u⟩ induced from α^r ⊗ β^t on ⟨a, u²⟩ (r odd).
    InducedInCentralizer { r: u32, t: u32 },
}

impl CharLabel {
    pub fn tag(&self) -> &'static str {
        match self {
            CharLabel::LinearQuotient { .. } => "linear-quotient",
            CharLabel::InducedH1 { .. } => "induced-H1",
            CharLabel::InducedH2 { .. } => "induced-H2",
            CharLabel::AbelianHom => "abelian-hom",
            CharLabel::InducedInCentralizer { .. } => "induced-in-centralizer",
        }
    }
}

impl fmt::Display for CharLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharLabel::LinearQuotient { a_neg, u_neg, v_neg } => {
                let sign = |neg: &bool| if *neg { '-' } else { '+' };
                write!(f, "linear({}a,{}u,{}v)", sign(a_neg), sign(u_neg), sign(v_neg))
            }
            CharLabel::InducedH1 { r, t } => write!(f, "induced-H1(r={r},t={t})"),
            CharLabel::InducedH2 { r, t } => write!(f, "induced-H2(r={r},t={t})"),
            CharLabel::AbelianHom => f.write_str("abelian-hom"),
            CharLabel::InducedInCentralizer { r, t } => {
                write!(f, "induced-in-centralizer(r={r},t={t})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group: Arc<Subgroup>,
    pub irreducibles: Vec<ClassFunction>,
    pub labels: Vec<CharLabel>,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(ClassFunction::dim).collect()
    }

    /// Σ degree², as an exact integer.
    pub fn degree_square_sum(&self) -> u64 {
        self.degrees().iter().map(|d| d * d).sum()
    }

    /// Largest |⟨χ_i, χ_j⟩ − δ_ij| over all pairs.
    pub fn orthogonality_defect(&self) -> Result<f64> {
        let mut worst = 0.0f64;
        for (i, f) in self.irreducibles.iter().enumerate() {
            for (j, g) in self.irreducibles.iter().enumerate().skip(i) {
                let expected = if i == j { 1.0 } else { 0.0 };
                let ip = inner_product(f, g)?;
                worst = worst.max((ip - Complex64::new(expected, 0.0)).norm());
            }
        }
        Ok(worst)
    }
}

/// Outcome of comparing a candidate against an irreducible.
#[derive(Debug, PartialEq, Eq)]
enum Overlap {
    Orthogonal,
    Isomorphic,
}

fn classify(ip: Complex64) -> Result<Overlap> {
    let v = ip.norm();
    if v <= DEDUP_TOLERANCE {
        Ok(Overlap::Orthogonal)
    } else if (v - 1.0).abs() <= DEDUP_TOLERANCE {
        Ok(Overlap::Isomorphic)
    } else {
        Err(Error::AmbiguousInnerProduct { value: v })
    }
}

/// Accumulates irreducibles, rejecting duplicates by inner product.
struct TableBuilder {
    group: Arc<Subgroup>,
    irreducibles: Vec<ClassFunction>,
    labels: Vec<CharLabel>,
}

impl TableBuilder {
    fn new(group: Arc<Subgroup>) -> Self {
        TableBuilder { group, irreducibles: Vec::new(), labels: Vec::new() }
    }

    /// Adds `chi` unless an isomorphic character is already present. Returns whether it was new.
    fn add_if_new(&mut self, chi: ClassFunction, label: CharLabel) -> Result<bool> {
        for existing in &self.irreducibles {
            if classify(inner_product(&chi, existing)?)? == Overlap::Isomorphic {
                return Ok(false);
            }
        }
        self.irreducibles.push(chi);
        self.labels.push(label);
        Ok(true)
    }

    fn finish(self, group: &Group, expected_count: usize) -> Result<CharacterTable> {
        let table =
            CharacterTable { group: self.group, irreducibles: self.irreducibles, labels: self.labels };
        let order = table.group.order() as u64;
        if table.len() != expected_count {
            return Err(Error::CharacterTable(format!(
                "{} irreducibles for a group with {expected_count} classes",
                table.len()
            )));
        }
        if table.degree_square_sum() != order {
            return Err(Error::CharacterTable(format!(
                "Σ degree² = {} but the group has order {order}",
                table.degree_square_sum()
            )));
        }
        for chi in &table.irreducibles {
            let d = chi.degree();
            if (d.re - d.re.round()).abs() > VALUE_TOLERANCE || d.im.abs() > VALUE_TOLERANCE {
                return Err(Error::CharacterTable(format!("non-integral degree {d}")));
            }
            if order % chi.dim() != 0 {
                return Err(Error::CharacterTable(format!("degree {} does not divide {order}", chi.dim())));
            }
        }
        let defect = table.orthogonality_defect()?;
        if defect > VALUE_TOLERANCE {
            return Err(Error::CharacterTable(format!("orthogonality defect {defect:e}")));
        }
        let _ = group;
        Ok(table)
    }
}

/// Linear character φ_{r,t}(a^s u^i) = ζ_{2^{l-1}}^{rs} ζ_k^{ti} of ⟨a, u⟩.
pub fn h2_linear_character(group: &Group, h2: &Arc<Subgroup>, r: u32, t: u32) -> Result<ClassFunction> {
    let p = group.params();
    let half = u64::from(p.half());
    let k = u64::from(p.k());
    let denom = half.lcm(&k);
    let numer = h2
        .elements()
        .iter()
        .map(|e| {
            (u64::from(r) * u64::from(e.s) * (denom / half) + u64::from(t) * u64::from(e.i) * (denom / k))
                % denom
        })
        .collect();
    ClassFunction::from_phases(h2.clone(), Phases { denom, numer })
}

/// Character α^r ⊗ β^t of ⟨a, u²⟩: a ↦ ζ_{2^l}^r, u² ↦ ζ_{k/2}^t.
pub fn h1_character(group: &Group, h1: &Arc<Subgroup>, r: u32, t: u32) -> Result<ClassFunction> {
    let p = group.params();
    let modulus = u64::from(p.modulus());
    let half_k = u64::from(p.k() / 2);
    let denom = modulus.lcm(&half_k);
    let numer = h1
        .elements()
        .iter()
        .map(|e| {
            (u64::from(r) * u64::from(e.s) * (denom / modulus)
                + u64::from(t) * u64::from(e.i / 2) * (denom / half_k))
                % denom
        })
        .collect();
    ClassFunction::from_phases(h1.clone(), Phases { denom, numer })
}

fn check_homomorphism(group: &Group, chi: &ClassFunction, gens: &[GroupElement]) -> Result<()> {
    for g in gens {
        for e in chi.domain().elements() {
            let lhs = chi.value(group, &group.multiply(g, e));
            let rhs = chi.value(group, g) * chi.value(group, e);
            if (lhs - rhs).norm() > VALUE_TOLERANCE {
                return Err(Error::CharacterTable(format!(
                    "linear character is not multiplicative at ({g}, {e})"
                )));
            }
        }
    }
    Ok(())
}

/// Number of conjugacy classes of a subgroup, by orbit computation inside it.
pub fn subgroup_class_count(group: &Group, sub: &Subgroup) -> usize {
    let mut seen = vec![false; group.order()];
    let mut count = 0;
    for x in sub.elements() {
        if seen[group.index_of(x)] {
            continue;
        }
        count += 1;
        for h in sub.elements() {
            seen[group.index_of(&group.conjugate(x, h))] = true;
        }
    }
    count
}

/// The irreducible characters of G: 8 linear, the degree-2 family induced from ⟨a,u⟩
/// and the degree-4 family induced from ⟨a,u²⟩.
pub fn irreducible_characters_of_g(group: &Group, structure: &Structure) -> Result<CharacterTable> {
    let whole = Arc::new(Subgroup::whole(group));
    let p = group.params();
    let mut builder = TableBuilder::new(whole.clone());

    for a_neg in [false, true] {
        for u_neg in [false, true] {
            for v_neg in [false, true] {
                let numer = group
                    .enumerate()
                    .iter()
                    .map(|e| {
                        (u64::from(a_neg) * u64::from(e.s)
                            + u64::from(u_neg) * u64::from(e.i)
                            + u64::from(v_neg) * u64::from(e.x))
                            % 2
                    })
                    .collect();
                let chi = ClassFunction::from_phases(whole.clone(), Phases { denom: 2, numer })?;
                check_homomorphism(group, &chi, &[group.a(), group.u(), group.v()])?;
                let label = CharLabel::LinearQuotient { a_neg, u_neg, v_neg };
                if !builder.add_if_new(chi, label)? {
                    return Err(Error::CharacterTable(format!("{label} duplicates another")));
                }
            }
        }
    }

    let h2 = Arc::new(Subgroup::generated(group, &[group.a(), group.u()])?);
    let mut reducible = 0;
    let mut two_dim = 0;
    for r in 0..p.half() {
        for t in 0..p.k() {
            let phi = h2_linear_character(group, &h2, r, t)?;
            let induced = induce(group, &phi, &whole)?;
            let norm = inner_product(&induced, &induced)?.re;
            if (norm - 1.0).abs() <= DEDUP_TOLERANCE {
                if builder.add_if_new(induced, CharLabel::InducedH2 { r, t })? {
                    two_dim += 1;
                }
            } else if (norm - 2.0).abs() <= DEDUP_TOLERANCE {
                reducible += 1;
            } else {
                return Err(Error::AmbiguousInnerProduct { value: norm });
            }
        }
    }
    let expected_two = (1usize << (p.l() - 2)) * p.k() as usize - 2;
    if reducible != 4 || two_dim != expected_two {
        return Err(Error::CharacterTable(format!(
            "degree-2 family: {two_dim} distinct, {reducible} reducible; expected {expected_two} and 4"
        )));
    }

    let h1 = Arc::new(Subgroup::generated(group, &[group.a(), group.element(0, 2, 0)])?);
    let mut four_dim = 0;
    for r in (1..p.modulus()).step_by(2) {
        for t in 0..p.k() / 2 {
            let phi = h1_character(group, &h1, r, t)?;
            let induced = induce(group, &phi, &whole)?;
            let norm = inner_product(&induced, &induced)?.re;
            if (norm - 1.0).abs() > DEDUP_TOLERANCE {
                return Err(Error::CharacterTable(format!(
                    "induced-H1(r={r},t={t}) has norm {norm}, expected irreducible"
                )));
            }
            if builder.add_if_new(induced, CharLabel::InducedH1 { r, t })? {
                four_dim += 1;
            }
        }
    }
    let expected_four = (1usize << (p.l() - 3)) * p.k() as usize / 2;
    if four_dim != expected_four {
        return Err(Error::CharacterTable(format!(
            "degree-4 family: {four_dim} distinct, expected {expected_four}"
        )));
    }

    builder.finish(group, structure.classes.len())
}

/// Irreducible characters of a centralizer.
///
/// Abelian centralizers get [`abelian_characters`]; G reuses `g_table`; ⟨a, u⟩ gets its
/// linear characters plus the degree-2 characters induced from ⟨a, u²⟩.
pub fn irreducible_characters_of_centralizer(
    group: &Group,
    centralizer: &Arc<Subgroup>,
    g_table: &CharacterTable,
) -> Result<CharacterTable> {
    if centralizer.order() == group.order() {
        return Ok(g_table.clone());
    }
    let expected = subgroup_class_count(group, centralizer);
    if centralizer.is_abelian() {
        let mut builder = TableBuilder::new(centralizer.clone());
        for chi in abelian_characters(group, centralizer)? {
            builder.irreducibles.push(chi);
            builder.labels.push(CharLabel::AbelianHom);
        }
        return builder.finish(group, expected);
    }
    let h2 = Subgroup::generated(group, &[group.a(), group.u()])?;
    if !h2.same_elements(centralizer) {
        return Err(Error::UnsupportedCentralizer(centralizer.order()));
    }
    let p = group.params();
    let mut builder = TableBuilder::new(centralizer.clone());
    for r in 0..p.half() {
        for t in 0..p.k() {
            let phi = h2_linear_character(group, centralizer, r, t)?;
            check_homomorphism(group, &phi, &[group.a(), group.u()])?;
            builder.irreducibles.push(phi);
            builder.labels.push(CharLabel::AbelianHom);
        }
    }
    let h1 = Arc::new(Subgroup::generated(group, &[group.a(), group.element(0, 2, 0)])?);
    for r in (1..p.modulus()).step_by(2) {
        for t in 0..p.k() / 2 {
            let lambda = h1_character(group, &h1, r, t)?;
            let induced = induce(group, &lambda, centralizer)?;
            let norm = inner_product(&induced, &induced)?.re;
            if (norm - 1.0).abs() > DEDUP_TOLERANCE {
                return Err(Error::CharacterTable(format!(
                    "centralizer character induced from (r={r},t={t}) has norm {norm}"
                )));
            }
            builder.add_if_new(induced, CharLabel::InducedInCentralizer { r, t })?;
        }
    }
    builder.finish(group, expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::centralizer;

    fn setup(l: u32, k: u32) -> (Group, Structure) {
        let g = Group::build(l, k).unwrap();
        let s = Structure::build(&g).unwrap();
        (g, s)
    }

    #[test]
    fn roots_of_unity_exact_at_quarters() {
        assert_eq!(root_of_unity(0, 8), Complex64::new(1.0, 0.0));
        assert_eq!(root_of_unity(2, 8), Complex64::new(0.0, 1.0));
        assert_eq!(root_of_unity(-4, 8), Complex64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(3, 4), Complex64::new(0.0, -1.0));
        assert!((root_of_unity(1, 8) - Complex64::new(0.5f64.sqrt(), 0.5f64.sqrt())).norm() < 1e-15);
    }

    #[test]
    fn trivial_inner_product() {
        let (g, s) = setup(3, 4);
        let chi = ClassFunction::trivial(Arc::new(s.center.clone()));
        assert!((inner_product(&chi, &chi).unwrap() - 1.0).norm() < 1e-12);
        let whole = ClassFunction::trivial(Arc::new(Subgroup::whole(&g)));
        assert_eq!(inner_product(&chi, &whole), Err(Error::DomainMismatch));
    }

    #[test]
    fn abelian_character_counts() {
        let (g, s) = setup(3, 4);
        let z = Arc::new(s.center.clone());
        assert_eq!(abelian_characters(&g, &z).unwrap().len(), 4);

        let av = g.multiply(&g.a(), &g.v());
        let c = Arc::new(centralizer(&g, &av).unwrap());
        let chars = abelian_characters(&g, &c).unwrap();
        assert_eq!(chars.len(), 8);
        let a4 = g.element(4, 0, 0);
        let negative = chars.iter().filter(|chi| (chi.value(&g, &a4) + 1.0).norm() < 1e-12).count();
        assert_eq!(negative, 4);

        let h1 = Arc::new(Subgroup::generated(&g, &[g.a(), g.element(0, 2, 0)]).unwrap());
        let chars = abelian_characters(&g, &h1).unwrap();
        assert_eq!(chars.len(), 16);
        for (i, f) in chars.iter().enumerate() {
            for (j, h) in chars.iter().enumerate() {
                let ip = inner_product(f, h).unwrap();
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((ip - expected).norm() < 1e-9);
            }
        }
        let h2 = Arc::new(Subgroup::generated(&g, &[g.a(), g.u()]).unwrap());
        assert_eq!(abelian_characters(&g, &h2).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn induction_degrees() {
        let (g, s) = setup(3, 4);
        let table = irreducible_characters_of_g(&g, &s).unwrap();
        let whole = table.group.clone();
        let trivial = ClassFunction::trivial(whole.clone());
        let induced = induce(&g, &trivial, &whole).unwrap();
        for (a, b) in induced.values().iter().zip(trivial.values()) {
            assert!((a - b).norm() < 1e-12);
        }
        let h2 = Arc::new(Subgroup::generated(&g, &[g.a(), g.u()]).unwrap());
        let phi = h2_linear_character(&g, &h2, 1, 1).unwrap();
        assert_eq!(induce(&g, &phi, &whole).unwrap().dim(), 2);

        let h1 = Arc::new(Subgroup::generated(&g, &[g.a(), g.element(0, 2, 0)]).unwrap());
        let psi = h1_character(&g, &h1, 1, 0).unwrap();
        let chi = induce(&g, &psi, &whole).unwrap();
        assert_eq!(chi.dim(), 4);
        assert!((inner_product(&chi, &chi).unwrap() - 1.0).norm() < 1e-9);
        let psi_even = h1_character(&g, &h1, 2, 0).unwrap();
        let chi_even = induce(&g, &psi_even, &whole).unwrap();
        assert!(inner_product(&chi_even, &chi_even).unwrap().re > 1.5);

        let z = Arc::new(s.center.clone());
        assert!(matches!(induce(&g, &trivial, &z), Err(Error::NotASubgroup(_))));
    }

    #[test]
    fn table_of_g() {
        for ((l, k), expected) in [((3, 4), (8, 6, 2)), ((3, 8), (8, 14, 4))] {
            let (g, s) = setup(l, k);
            let table = irreducible_characters_of_g(&g, &s).unwrap();
            let degrees = table.degrees();
            let count = |d| degrees.iter().filter(|&&x| x == d).count();
            assert_eq!((count(1), count(2), count(4)), expected);
            assert_eq!(table.degree_square_sum(), g.order() as u64);
            assert!(table.orthogonality_defect().unwrap() < 1e-9);
            for chi in &table.irreducibles {
                assert!(chi.is_class_function(&g));
            }
        }
    }

    #[test]
    fn centralizer_tables() {
        let (g, s) = setup(3, 4);
        let g_table = irreducible_characters_of_g(&g, &s).unwrap();
        let h2 = Arc::new(Subgroup::generated(&g, &[g.a(), g.u()]).unwrap());
        let t = irreducible_characters_of_centralizer(&g, &h2, &g_table).unwrap();
        let degrees = t.degrees();
        assert_eq!(degrees.iter().filter(|&&d| d == 1).count(), 16);
        assert_eq!(degrees.iter().filter(|&&d| d == 2).count(), 4);

        let au = g.multiply(&g.a(), &g.u());
        let c = Arc::new(centralizer(&g, &au).unwrap());
        let t = irreducible_characters_of_centralizer(&g, &c, &g_table).unwrap();
        assert_eq!(t.len(), 16);
        assert!(t.degrees().iter().all(|&d| d == 1));

        let c = Arc::new(centralizer(&g, &g.v()).unwrap());
        let t = irreducible_characters_of_centralizer(&g, &c, &g_table).unwrap();
        assert_eq!(t.len(), 8);
    }

    #[test]
    fn two_dim_centralizer_characters_are_negative_on_central_a() {
        let (g, s) = setup(3, 8);
        let g_table = irreducible_characters_of_g(&g, &s).unwrap();
        let h2 = Arc::new(Subgroup::generated(&g, &[g.a(), g.u()]).unwrap());
        let t = irreducible_characters_of_centralizer(&g, &h2, &g_table).unwrap();
        let z = g.element(i64::from(g.params().half()), 0, 0);
        for chi in t.irreducibles.iter().filter(|c| c.dim() == 2) {
            assert!((chi.value(&g, &z) + 2.0).norm() < 1e-9);
        }
    }
}
