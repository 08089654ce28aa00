//! Indicators: brute force against closed forms, and the double's three paths.

use fsind_core::double::{gm_bruteforce, gm_closed, verify_gm_closed, z_m, GmCaseTally};
use fsind_core::group_indicators::{nu_group_bruteforce, nu_group_closed, PowerTables};
use fsind_core::{CharLabel, ClassType, DoubleGroup, Group, GroupElement, IndicatorPath};

fn double(l: u32, k: u32) -> DoubleGroup {
    DoubleGroup::build(Group::build(l, k).unwrap()).unwrap()
}

#[test]
fn group_indicator_invariants() {
    for (l, k) in [(3, 4), (3, 12), (4, 4)] {
        let d = double(l, k);
        let g = d.group();
        let exp = g.exponent().unwrap();
        let tables = PowerTables::new(g, 2 * exp);
        for (chi, label) in d.g_table().irreducibles.iter().zip(&d.g_table().labels) {
            let trivial = *label == CharLabel::LinearQuotient { a_neg: false, u_neg: false, v_neg: false };
            let nu: Vec<i64> = (1..=2 * exp)
                .map(|m| {
                    let v = fsind_core::group_indicators::nu_group_bruteforce_with(chi, m, tables.get(m).unwrap())
                        .unwrap()
                        .rounded;
                    assert_eq!(v, nu_group_closed(g.params(), label, m).unwrap(), "({l},{k}) {label} m={m}");
                    v
                })
                .collect();
            assert_eq!(nu[0], i64::from(trivial));
            assert_eq!(nu[1], 1);
            assert!(nu.iter().all(|v| *v >= 0));
            for m in 0..exp as usize {
                assert_eq!(nu[m], nu[m + exp as usize], "period at m={}", m + 1);
            }
        }
    }
}

#[test]
fn odd_order_two_dim_character_has_indicator_one_at_odd_m() {
    let d = double(3, 12);
    let g = d.group();
    let (idx, _) = d
        .g_table()
        .labels
        .iter()
        .enumerate()
        .find(|(_, l)| **l == CharLabel::InducedH2 { r: 0, t: 4 })
        .expect("ψ_{0,4} induces an irreducible");
    let chi = &d.g_table().irreducibles[idx];
    assert_eq!(nu_group_bruteforce(g, chi, 3).unwrap().rounded, 1);
    assert_eq!(nu_group_bruteforce(g, chi, 5).unwrap().rounded, 0);
}

#[test]
fn gm_examples() {
    let g = Group::build(3, 4).unwrap();
    let x = g.element(1, 2, 0);
    assert!(gm_bruteforce(&g, &x, 1).unwrap().is_empty());
    assert_eq!(gm_bruteforce(&g, &g.identity(), 1).unwrap().len(), 64);

    let members: Vec<GroupElement> = gm_bruteforce(&g, &x, 8).unwrap().member_elements(&g).collect();
    for s in 0..8 {
        for i in 0..4 {
            assert!(members.contains(&g.element(s, i, 0)));
        }
    }

    let av = g.element(1, 0, 1);
    let g2: Vec<GroupElement> = gm_bruteforce(&g, &av, 2).unwrap().member_elements(&g).collect();
    for s in 0..8 {
        for y in 0..2 {
            let cand = g.element(s, 2 * y, 0);
            assert_eq!(g2.contains(&cand), s % 4 == 2, "{cand}");
        }
    }

    // TypeII base, odd m
    let au = g.element(1, 1, 0);
    for m in [1, 3, 5, 7] {
        let rec = gm_bruteforce(&g, &au, m).unwrap();
        assert!(rec.member_elements(&g).all(|a| !a.has_v()));
    }
}

#[test]
fn gm_closed_matches_every_base_at_larger_params() {
    for (l, k) in [(3, 12), (5, 4)] {
        let g = Group::build(l, k).unwrap();
        let tally = verify_gm_closed(&g, 2 * g.exponent().unwrap()).unwrap();
        assert!(tally.unexercised().is_empty(), "({l},{k})");
    }
}

#[test]
fn gm_closed_rejects_bad_input() {
    let g = Group::build(3, 4).unwrap();
    let mut tally = GmCaseTally::default();
    assert!(gm_closed(&g, &g.a(), 0, &mut tally).is_err());
    assert!(gm_closed(&g, &GroupElement::new(9, 0, 0), 2, &mut tally).is_err());
}

#[test]
fn z_m_partitions_gm() {
    let g = Group::build(3, 4).unwrap();
    let av = g.element(1, 0, 1);
    assert_eq!(z_m(&g, &g.identity(), &g.identity(), 1).unwrap(), 1);
    let all: u64 = g.enumerate().iter().map(|y| z_m(&g, &g.identity(), y, 1).unwrap()).sum();
    assert_eq!(all, 64);
    let total: u64 = g.enumerate().iter().map(|y| z_m(&g, &av, y, 2).unwrap()).sum();
    assert_eq!(total, gm_bruteforce(&g, &av, 2).unwrap().len() as u64);
    assert!(z_m(&g, &av, &g.element(4, 0, 0), 2).unwrap() > 0);
}

#[test]
fn double_character_sanity() {
    let d = double(3, 4);
    let g = d.group();
    for label in d.labels() {
        let class = d.class(label);
        let eta = d.eta(label);
        let at_rep = d.double_character_value(label, &class.representative, &g.identity());
        assert!((at_rep - eta.degree()).norm() < 1e-12);
        let graded: f64 = g
            .enumerate()
            .iter()
            .map(|x| d.double_character_value(label, x, &g.identity()).re)
            .sum();
        assert!((graded - label.dim as f64).abs() < 1e-9);
    }
    let av_label = d.labels().iter().find(|l| d.class(l).representative == g.element(1, 0, 1)).unwrap();
    assert_eq!(d.double_character_value(av_label, &g.element(1, 0, 1), &g.u()).norm(), 0.0);
}

#[test]
fn double_examples_at_3_4() {
    let d = double(3, 4);
    let g = d.group();
    let trivial = &d.labels()[0];
    assert!(d.class(trivial).representative.is_identity());
    for m in 1..=16 {
        assert_eq!(d.nu_double_zform(trivial, m).unwrap().rounded, 1);
        assert_eq!(d.nu_double_charform(trivial, m).unwrap().rounded, 1);
    }
    let z = g.element(4, 0, 0);
    for label in d.labels().iter().filter(|l| d.class(l).representative == z) {
        assert_eq!(d.nu_double_central(label, 3).unwrap(), 0);
        assert_eq!(d.nu_double_charform(label, 3).unwrap().rounded, 0);
    }
    let z_trivial = d.labels().iter().find(|l| d.class(l).representative == z).unwrap();
    assert_eq!(d.nu_double_central(z_trivial, 2).unwrap(), 1);
    assert!(d.nu_double_central(&d.labels()[d.labels().len() - 1], 2).is_err());

    for label in d.labels() {
        let class = d.class(label);
        match class.type_tag {
            ClassType::TypeIII if class.representative.i % 2 == 1 => {
                assert_eq!(d.nu_double_zform(label, 2).unwrap().rounded, 1);
                assert_eq!(d.nu_double_closed(label, 4).unwrap(), 4);
            }
            ClassType::TypeII => {
                assert_eq!(d.nu_double_closed(label, 2).unwrap(), 1);
                assert_eq!(d.nu_double_closed(label, 6).unwrap(), 1);
            }
            _ => {}
        }
    }
}

fn assert_all_paths_agree(l: u32, k: u32) {
    let d = double(l, k);
    let exp = d.group().exponent().unwrap();
    let ms: Vec<u64> = (1..=2 * exp).collect();
    for row in d.sweep(&ms).unwrap() {
        assert!(row.agree(), "({l},{k}) {} m={}: {}", d.describe(&row.label), row.value.m, row.value.describe_paths());
        assert!(row.value.rounded.unsigned_abs() <= row.label.dim);
        assert!(row.value.paths.contains_key(&IndicatorPath::ClosedForm));
        if row.value.m == 2 {
            assert!(row.value.rounded == 1 || row.value.rounded == -1);
        }
    }
}

#[test]
fn double_paths_agree_at_3_12() {
    assert_all_paths_agree(3, 12);
}

#[test]
fn double_paths_agree_at_3_16() {
    assert_all_paths_agree(3, 16);
}

#[test]
fn negative_indicators_exist_across_the_family() {
    for (l, k) in [(3, 8), (4, 4), (3, 12)] {
        let d = double(l, k);
        let g = d.group();
        let z = g.element(i64::from(g.params().half()), 0, 0);
        let neg = d.find_negative_indicators().unwrap();
        assert!(!neg.is_empty());
        for row in neg {
            let rep = d.class(&row.label).representative;
            assert_eq!(d.class(&row.label).type_tag, ClassType::TypeIII);
            assert!(rep.i % 2 == 0 && rep.s % 2 == 1);
            assert_eq!(row.value.rounded, -1);
            assert!((d.eta(&row.label).value(g, &z) + 1.0).norm() < 1e-12);
        }
    }
}
