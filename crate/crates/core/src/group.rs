//! Arithmetic in G = Z_{2^l} ⋊ D_k.
//!
//! The group is presented as ⟨a, u, v | a^{2^l} = u^k = v^2 = 1, uau⁻¹ = a^{n1},
//! vav = a^{n2}, vuv = u⁻¹⟩ with n1 = 2^{l-1}+1 and n2 = 2^{l-1}-1. Every element has
//! a unique normal form a^s u^i v^x and the product of two normal forms is
//!
//! ```text
//! (a^{s1} u^{i1} v^{x1})(a^{s2} u^{i2} v^{x2}) = a^{s1 + n1^{i1} n2^{x1} s2} u^{i1 + (-1)^{x1} i2} v^{x1 + x2}
//! ```
//!
//! so multiplication is O(1) once the powers of n1 are tabulated.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Default bound on |G| for everything that enumerates the group.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 16;

/// The validated pair (l, k) together with its derived constants.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupParams {
    l: u32,
    k: u32,
    n1: u32,
    n2: u32,
    order: u64,
}

impl GroupParams {
    /// Validates (l, k) against the default enumeration cap.
    pub fn new(l: u32, k: u32) -> Result<Self> {
        Self::with_cap(l, k, DEFAULT_ENUMERATION_CAP)
    }

    pub fn with_cap(l: u32, k: u32, cap: u64) -> Result<Self> {
        if l < 3 {
            return Err(Error::InvalidParams(format!("l = {l} must be at least 3")));
        }
        if k == 0 || k % 4 != 0 {
            return Err(Error::InvalidParams(format!("k = {k} must be a positive multiple of 4")));
        }
        if l >= 31 {
            return Err(Error::CapExceeded { order: u64::MAX, cap });
        }
        let order = (1u64 << (l + 1)) * u64::from(k);
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        let half = 1u32 << (l - 1);
        Ok(GroupParams { l, k, n1: half + 1, n2: half - 1, order })
    }

    /// Returns a copy with n2 shifted by `delta` (mod 2^l).
    ///
    /// This no longer describes the family; it exists so verification runs can be
    /// checked against a deliberately broken group.
    pub fn with_tampered_n2(mut self, delta: i64) -> Self {
        self.n2 = (i64::from(self.n2) + delta).rem_euclid(i64::from(self.modulus())) as u32;
        self
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    /// |G| = 2^{l+1} k.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// 2^l, the order of a.
    pub fn modulus(&self) -> u32 {
        1 << self.l
    }

    /// 2^{l-1}; a^{half} generates the a-part of the center.
    pub fn half(&self) -> u32 {
        1 << (self.l - 1)
    }

    /// True when n2 is the value the presentation prescribes.
    pub fn is_untampered(&self) -> bool {
        self.n2 == self.half() - 1
    }
}

/// Validates (l, k) and derives n1, n2 and |G|.
pub fn make_group(l: u32, k: u32) -> Result<GroupParams> {
    GroupParams::new(l, k)
}

/// The normal form a^s u^i v^x.
///
/// Ordering is lexicographic on (x, i, s), which is also the enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub s: u32,
    pub i: u32,
    pub x: u8,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { s: 0, i: 0, x: 0 };

    pub const fn new(s: u32, i: u32, x: u8) -> Self {
        GroupElement { s, i, x }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn has_v(&self) -> bool {
        self.x == 1
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.x, self.i, self.s).cmp(&(other.x, other.i, other.s))
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("1");
        }
        match self.s {
            0 => {}
            1 => f.write_str("a")?,
            s => write!(f, "a^{s}")?,
        }
        match self.i {
            0 => {}
            1 => f.write_str("u")?,
            i => write!(f, "u^{i}")?,
        }
        if self.x == 1 {
            f.write_str("v")?;
        }
        Ok(())
    }
}

/// A concrete group: parameters plus the tables multiplication needs.
#[derive(Clone, Debug)]
pub struct Group {
    params: GroupParams,
    n1_pow: Vec<u32>,
    elements: Vec<GroupElement>,
}

impl Group {
    pub fn new(params: GroupParams) -> Self {
        let modulus = u64::from(params.modulus());
        let mut n1_pow = Vec::with_capacity(params.k as usize);
        let mut acc = 1u64;
        for _ in 0..params.k {
            n1_pow.push(acc as u32);
            acc = acc * u64::from(params.n1) % modulus;
        }
        let mut elements = Vec::with_capacity(params.order as usize);
        for x in 0..2u8 {
            for i in 0..params.k {
                for s in 0..params.modulus() {
                    elements.push(GroupElement { s, i, x });
                }
            }
        }
        Group { params, n1_pow, elements }
    }

    /// Shorthand for `Group::new(GroupParams::new(l, k)?)`.
    pub fn build(l: u32, k: u32) -> Result<Self> {
        Ok(Group::new(GroupParams::new(l, k)?))
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::IDENTITY
    }

    pub fn a(&self) -> GroupElement {
        GroupElement::new(1 % self.params.modulus(), 0, 0)
    }

    pub fn u(&self) -> GroupElement {
        GroupElement::new(0, 1, 0)
    }

    pub fn v(&self) -> GroupElement {
        GroupElement::new(0, 0, 1)
    }

    /// Canonical element with the exponents reduced into range.
    pub fn element(&self, s: i64, i: i64, x: i64) -> GroupElement {
        GroupElement {
            s: s.rem_euclid(i64::from(self.params.modulus())) as u32,
            i: i.rem_euclid(i64::from(self.params.k)) as u32,
            x: x.rem_euclid(2) as u8,
        }
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.s < self.params.modulus() && e.i < self.params.k && e.x < 2
    }

    fn check(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::ForeignElement(*e))
        }
    }

    /// Position of `e` in the enumeration order.
    #[inline]
    pub fn index_of(&self, e: &GroupElement) -> usize {
        ((e.x as usize * self.params.k as usize) + e.i as usize) * self.params.modulus() as usize
            + e.s as usize
    }

    #[inline]
    pub fn element_at(&self, idx: usize) -> GroupElement {
        self.elements[idx]
    }

    /// All elements, ordered by (x, i, s).
    pub fn enumerate(&self) -> &[GroupElement] {
        &self.elements
    }

    /// n1^i n2^x mod 2^l: the exponent a is raised to when conjugated by u^i v^x.
    #[inline]
    fn twist(&self, i: u32, x: u8) -> u64 {
        let base = u64::from(self.n1_pow[i as usize]);
        if x == 0 {
            base
        } else {
            base * u64::from(self.params.n2) % u64::from(self.params.modulus())
        }
    }

    #[inline]
    pub fn multiply(&self, e1: &GroupElement, e2: &GroupElement) -> GroupElement {
        let modulus = self.params.modulus();
        let k = self.params.k;
        let s = (u64::from(e1.s) + self.twist(e1.i, e1.x) * u64::from(e2.s)) % u64::from(modulus);
        let i = if e1.x == 0 { (e1.i + e2.i) % k } else { (e1.i + k - e2.i) % k };
        GroupElement { s: s as u32, i, x: e1.x ^ e2.x }
    }

    /// `multiply` with both arguments validated against this group.
    pub fn try_multiply(&self, e1: &GroupElement, e2: &GroupElement) -> Result<GroupElement> {
        self.check(e1)?;
        self.check(e2)?;
        Ok(self.multiply(e1, e2))
    }

    pub fn inverse(&self, e: &GroupElement) -> GroupElement {
        let modulus = i64::from(self.params.modulus());
        let k = self.params.k;
        let i = if e.x == 0 { (k - e.i) % k } else { e.i };
        let tw = self.twist(e.i, e.x) as i64;
        let inv = mod_inverse(tw, modulus);
        let s = (-(i64::from(e.s)) * inv).rem_euclid(modulus);
        GroupElement { s: s as u32, i, x: e.x }
    }

    /// e^m by square-and-multiply.
    pub fn power(&self, e: &GroupElement, mut m: u64) -> GroupElement {
        let mut result = GroupElement::IDENTITY;
        let mut base = *e;
        while m > 0 {
            if m & 1 == 1 {
                result = self.multiply(&result, &base);
            }
            base = self.multiply(&base, &base);
            m >>= 1;
        }
        result
    }

    /// h g h⁻¹.
    #[inline]
    pub fn conjugate(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        self.multiply(&self.multiply(h, g), &self.inverse(h))
    }

    pub fn commutes(&self, g: &GroupElement, h: &GroupElement) -> bool {
        self.multiply(g, h) == self.multiply(h, g)
    }

    pub fn element_order(&self, e: &GroupElement) -> Result<u64> {
        let mut acc = *e;
        for n in 1..=self.params.order {
            if acc.is_identity() {
                return Ok(n);
            }
            acc = self.multiply(&acc, e);
        }
        Err(Error::NoFiniteOrder(*e))
    }

    /// lcm of all element orders.
    pub fn exponent(&self) -> Result<u64> {
        self.elements
            .iter()
            .try_fold(1u64, |acc, e| Ok(acc.lcm(&self.element_order(e)?)))
    }

    /// Closure of `gens` under multiplication and inversion, sorted in enumeration order.
    pub fn generated_subgroup(&self, gens: &[GroupElement]) -> Result<Vec<GroupElement>> {
        for g in gens {
            self.check(g)?;
        }
        let mut steps: Vec<GroupElement> = gens.to_vec();
        steps.extend(gens.iter().map(|g| self.inverse(g)));
        let mut seen = vec![false; self.order()];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(GroupElement::IDENTITY);
        while let Some(e) = queue.pop_front() {
            for g in &steps {
                let next = self.multiply(&e, g);
                let idx = self.index_of(&next);
                if !seen[idx] {
                    seen[idx] = true;
                    queue.push_back(next);
                }
            }
        }
        Ok(seen
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(idx, _)| self.elements[idx])
            .collect())
    }

    /// For each element index, the index of its m-th power.
    pub fn power_table(&self, m: u64) -> Vec<u32> {
        self.elements
            .iter()
            .map(|e| self.index_of(&self.power(e, m)) as u32)
            .collect()
    }
}

/// Inverse of an odd `value` modulo `modulus` (a power of two here, but any coprime pair works).
pub(crate) fn mod_inverse(value: i64, modulus: i64) -> i64 {
    let egcd = value.rem_euclid(modulus).extended_gcd(&modulus);
    debug_assert_eq!(egcd.gcd, 1, "{value} not invertible mod {modulus}");
    egcd.x.rem_euclid(modulus)
}

/// `power_mod(base, exp, modulus)`; used for n1^i style exponents.
pub fn power_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g34() -> Group {
        Group::build(3, 4).unwrap()
    }

    #[test]
    fn params_examples() {
        let p = make_group(3, 4).unwrap();
        assert_eq!((p.n1(), p.n2(), p.order()), (5, 3, 64));
        let p = make_group(4, 8).unwrap();
        assert_eq!((p.n1(), p.n2(), p.order()), (9, 7, 256));
        assert!(matches!(make_group(3, 6), Err(Error::InvalidParams(_))));
        assert!(matches!(make_group(2, 4), Err(Error::InvalidParams(_))));
        assert!(matches!(make_group(3, 0), Err(Error::InvalidParams(_))));
        assert!(matches!(make_group(10, 128), Err(Error::CapExceeded { .. })));
        assert!(GroupParams::with_cap(10, 128, 1 << 20).is_ok());
    }

    #[test]
    fn derived_constants_satisfy_congruences() {
        for l in 3..12 {
            let p = GroupParams::with_cap(l, 4, u64::MAX).unwrap();
            let m = u64::from(p.modulus());
            let (n1, n2) = (u64::from(p.n1()), u64::from(p.n2()));
            assert_eq!(n1 * n1 % m, 1);
            assert_eq!(n2 * n2 % m, 1);
            assert_eq!(n1 * n2 % m, m - 1);
            assert_eq!(p.order(), u64::from(p.modulus()) * 2 * u64::from(p.k()));
        }
    }

    #[test]
    fn multiply_examples() {
        let g = g34();
        assert_eq!(g.multiply(&g.u(), &g.a()), GroupElement::new(5, 1, 0));
        let av = g.multiply(&g.a(), &g.v());
        assert_eq!(g.multiply(&av, &av), GroupElement::new(4, 0, 0));
        for e in g.enumerate() {
            assert_eq!(g.multiply(e, &g.identity()), *e);
            assert_eq!(g.multiply(&g.identity(), e), *e);
        }
    }

    #[test]
    fn inverse_matches_scan() {
        let g = g34();
        let au = g.multiply(&g.a(), &g.u());
        let scanned = g
            .enumerate()
            .iter()
            .find(|x| g.multiply(&au, x).is_identity())
            .copied()
            .unwrap();
        assert_eq!(scanned, GroupElement::new(3, 3, 0));
        assert_eq!(g.inverse(&au), scanned);
        for e in g.enumerate() {
            assert!(g.multiply(&g.inverse(e), e).is_identity());
        }
    }

    #[test]
    fn power_and_order() {
        let g = g34();
        let av = g.multiply(&g.a(), &g.v());
        assert!(g.power(&av, 0).is_identity());
        assert_eq!(g.element_order(&av).unwrap(), 4);
        for e in g.enumerate() {
            let mut acc = GroupElement::IDENTITY;
            for m in 0..20u64 {
                assert_eq!(g.power(e, m), acc);
                acc = g.multiply(&acc, e);
            }
        }
    }

    #[test]
    fn enumeration_and_exponent() {
        let g = g34();
        assert_eq!(g.enumerate().len(), 64);
        for (idx, e) in g.enumerate().iter().enumerate() {
            assert_eq!(g.index_of(e), idx);
        }
        let mut sorted = g.enumerate().to_vec();
        sorted.sort();
        assert_eq!(sorted, g.enumerate());
        assert_eq!(g.exponent().unwrap(), 8);
        assert_eq!(g.generated_subgroup(&[g.identity()]).unwrap(), vec![g.identity()]);
        assert_eq!(g.generated_subgroup(&[g.a(), g.u(), g.v()]).unwrap().len(), 64);
    }

    #[test]
    fn foreign_elements_rejected() {
        let g = g34();
        let bad = GroupElement::new(8, 0, 0);
        assert_eq!(g.try_multiply(&bad, &g.a()), Err(Error::ForeignElement(bad)));
        assert!(g.generated_subgroup(&[GroupElement::new(0, 4, 0)]).is_err());
    }

    #[test]
    fn display() {
        let g = g34();
        assert_eq!(g.identity().to_string(), "1");
        assert_eq!(GroupElement::new(5, 2, 1).to_string(), "a^5u^2v");
        assert_eq!(g.multiply(&g.a(), &g.v()).to_string(), "av");
    }
}
