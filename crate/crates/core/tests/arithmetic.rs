//! Multiplication checked against a collector that only knows the defining relations.

use fsind_core::{Group, GroupElement};
use proptest::prelude::*;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Letter {
    A,
    U,
    V,
}

fn word(e: &GroupElement) -> Vec<Letter> {
    let mut w = vec![Letter::A; e.s as usize];
    w.extend(std::iter::repeat(Letter::U).take(e.i as usize));
    if e.x == 1 {
        w.push(Letter::V);
    }
    w
}

/// Collects a word into normal form a^s u^i v^x one letter at a time. A new letter is moved
/// left past the trailing v^x and u^i using only v a = a^{n2} v, u a = a^{n1} u and
/// v u = u^{k-1} v, counting how many a's it turns into.
fn collect(group: &Group, w: Vec<Letter>) -> GroupElement {
    let p = group.params();
    let (modulus, k) = (u64::from(p.modulus()), u64::from(p.k()));
    let (mut s, mut i, mut x) = (0u64, 0u64, 0u64);
    for letter in w {
        match letter {
            Letter::A => {
                let mut count = 1u64;
                if x == 1 {
                    count = count * u64::from(p.n2()) % modulus;
                }
                for _ in 0..i {
                    count = count * u64::from(p.n1()) % modulus;
                }
                s = (s + count) % modulus;
            }
            Letter::U => {
                let step = if x == 1 { k - 1 } else { 1 };
                i = (i + step) % k;
            }
            Letter::V => x ^= 1,
        }
    }
    GroupElement::new(s as u32, i as u32, x as u8)
}

#[test]
fn multiplication_matches_relation_collector_at_3_4() {
    let g = Group::build(3, 4).unwrap();
    for e1 in g.enumerate() {
        for e2 in g.enumerate() {
            let mut w = word(e1);
            w.extend(word(e2));
            assert_eq!(g.multiply(e1, e2), collect(&g, w), "{e1} · {e2}");
        }
    }
}

#[test]
fn multiplication_matches_relation_collector_sampled() {
    for (l, k) in [(4, 4), (3, 8), (4, 12)] {
        let g = Group::build(l, k).unwrap();
        let elems = g.enumerate();
        for (n, e1) in elems.iter().enumerate().step_by(7) {
            let e2 = &elems[(n * 31 + 5) % elems.len()];
            let mut w = word(e1);
            w.extend(word(e2));
            assert_eq!(g.multiply(e1, e2), collect(&g, w), "({l},{k}) {e1} · {e2}");
        }
    }
}

#[test]
fn squares_of_reflections() {
    // (a^s u^i v)² is 1 unless i is even and s odd, where it is a^{2^{l-1}}
    for (l, k) in [(3, 4), (4, 8), (5, 4)] {
        let g = Group::build(l, k).unwrap();
        let z = g.element(i64::from(g.params().half()), 0, 0);
        for e in g.enumerate().iter().filter(|e| e.has_v()) {
            let sq = g.multiply(e, e);
            let expected = if e.i % 2 == 0 && e.s % 2 == 1 { z } else { g.identity() };
            assert_eq!(sq, expected, "({l},{k}) {e}");
        }
    }
}

#[test]
fn twisting_constants() {
    for l in 3..=10u32 {
        let g = Group::build(l, 4).unwrap();
        let p = g.params();
        let m = u64::from(p.modulus());
        let (n1, n2) = (u64::from(p.n1()), u64::from(p.n2()));
        assert_eq!(n1 * n1 % m, 1);
        assert_eq!(n2 * n2 % m, 1);
        assert_eq!(n1 * n2 % m, m - 1);
    }
}

#[test]
fn conjugation_by_generators() {
    let g = Group::build(3, 4).unwrap();
    let (a, u, v) = (g.a(), g.u(), g.v());
    assert_eq!(g.conjugate(&a, &u), g.power(&a, 5));
    assert_eq!(g.conjugate(&a, &v), g.power(&a, 3));
    assert_eq!(g.conjugate(&u, &v), g.inverse(&u));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn associativity(x in 0usize..256, y in 0usize..256, z in 0usize..256) {
        let g = Group::build(4, 8).unwrap();
        let (x, y, z) = (g.element_at(x), g.element_at(y), g.element_at(z));
        prop_assert_eq!(g.multiply(&g.multiply(&x, &y), &z), g.multiply(&x, &g.multiply(&y, &z)));
    }

    #[test]
    fn inverse_and_power(x in 0usize..384, m in 0u64..200) {
        let g = Group::build(4, 12).unwrap();
        let x = g.element_at(x);
        prop_assert!(g.multiply(&g.inverse(&x), &x).is_identity());
        let mut iterated = g.identity();
        for _ in 0..m {
            iterated = g.multiply(&iterated, &x);
        }
        prop_assert_eq!(g.power(&x, m), iterated);
        let order = g.element_order(&x).unwrap();
        prop_assert_eq!(g.exponent().unwrap() % order, 0);
    }

    #[test]
    fn conjugation_is_an_automorphism(x in 0usize..128, y in 0usize..128, h in 0usize..128) {
        let g = Group::build(3, 8).unwrap();
        let (x, y, h) = (g.element_at(x), g.element_at(y), g.element_at(h));
        let lhs = g.conjugate(&g.multiply(&x, &y), &h);
        let rhs = g.multiply(&g.conjugate(&x, &h), &g.conjugate(&y, &h));
        prop_assert_eq!(lhs, rhs);
    }
}
