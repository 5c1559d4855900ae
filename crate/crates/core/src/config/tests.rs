use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::finquad::QValue;
use crate::lattice::m_lattice;

fn cfg() -> CurveConfiguration {
    build_configuration().expect("configuration")
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn incidence_examples() {
    assert_eq!(CurveLabel::e(1, 2, 3).intersection(&CurveLabel::l(1, 2)), 1);
    assert_eq!(CurveLabel::e(1, 2, 3).intersection(&CurveLabel::l(4, 5)), 0);
    assert_eq!(CurveLabel::e(1, 2, 3).intersection(&CurveLabel::e(1, 4, 5)), 0);
    assert_eq!(CurveLabel::l(1, 2).intersection(&CurveLabel::l(1, 2)), -2);
    assert!(CurveLabel::new(CurveKind::E, &[1, 1, 2]).is_err());
    assert!(CurveLabel::new(CurveKind::L, &[1, 6]).is_err());
}

#[test]
fn each_curve_meets_three_of_the_other_kind() {
    let c = cfg();
    let m = c.intersection_matrix();
    for i in 0..20 {
        let same: i64 = (0..20)
            .filter(|&j| j != i && c.labels()[j].kind == c.labels()[i].kind)
            .map(|j| i64::try_from(m.get(i, j)).unwrap())
            .sum();
        let other: i64 = (0..20)
            .filter(|&j| c.labels()[j].kind != c.labels()[i].kind)
            .map(|j| i64::try_from(m.get(i, j)).unwrap())
            .sum();
        assert_eq!((same, other), (0, 3));
    }
}

#[test]
fn n_has_rank_16_signature_1_15() {
    let c = cfg();
    assert_eq!(c.n_lattice().rank(), 16);
    assert_eq!(c.n_lattice().signature(), (1, 15));
    assert_eq!(c.basis().len(), 16);
    assert_eq!(c.n_lattice().determinant().magnitude(), &48u32.into());
}

#[test]
fn curve_coordinates_reproduce_the_matrix() {
    let c = cfg();
    let g = c.n_lattice().gram();
    for i in 0..20 {
        for j in 0..20 {
            let v = g.bilinear(&c.coordinates()[i], &c.coordinates()[j]);
            assert_eq!(&v, c.intersection_matrix().get(i, j));
        }
    }
}

#[test]
fn sigma_is_a_fixed_point_free_involution_preserving_pairing() {
    let c = cfg();
    let s = c.sigma();
    for i in 0..20 {
        assert_ne!(s[i], i);
        assert_eq!(s[s[i]], i);
    }
    assert!(c.preserves_pairing(s));
    assert_eq!(c.labels()[s[0]], CurveLabel::l(4, 5));
}

#[test]
fn a_n_is_z2_4_z3_and_dual_to_q_m() {
    let c = cfg();
    let qn = c.discriminant_form();
    let mut f = qn.invariant_factors();
    f.sort_unstable();
    assert_eq!(qn.group_order(), 48u32.into());
    assert_eq!(f, vec![2, 2, 2, 6]);
    let out = c.dual_form_isometry().unwrap();
    let qm = crate::finquad::discriminant_form(&m_lattice()).unwrap();
    let phi = out.witness().expect("q_N is isometric to -q_M");
    assert!(phi.verify(qn, &qm.negated()).unwrap());
    let mut negated: BTreeMap<(u64, QValue), usize> = BTreeMap::new();
    for ((o, q), n) in qm.census().unwrap() {
        negated.insert((o, q.negated()), n);
    }
    assert_eq!(qn.census().unwrap(), negated);
}

#[test]
fn e6_differences() {
    let c = cfg();
    let d = e6_complement(&c).unwrap();
    let g = d.lattice.gram();
    assert_eq!(g.get(0, 0), &BigInt::from(-4));
    assert_eq!(g.get(0, 1), &BigInt::from(-2));
    assert_eq!(d.determinant, "192");
    let mut sorted = d.order.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, (0..6).collect::<Vec<_>>());
    for i in 0..6 {
        assert_eq!(g.get(i, i), &BigInt::from(-4));
    }
}

#[test]
fn e6_differences_are_anti_invariant() {
    let c = cfg();
    for (e, l) in e6_difference_labels() {
        assert_eq!(c.sigma()[c.index_of(&e)], c.index_of(&l));
    }
}

#[test]
fn petersen_quotient() {
    let c = cfg();
    let p = petersen_graph(&c);
    assert_eq!(p.edges.len(), 15);
    assert_eq!(p.regular_degree, Some(3));
    assert_eq!(p.girth, Some(5));
    assert!(p.vertex_transitive);
    assert_eq!(p.automorphisms, 120);
    assert!(p.isomorphic_to_petersen);
    let v12 = p.vertices.iter().position(|&v| v == (1, 2)).unwrap();
    let mut nb: Vec<(u8, u8)> = p.graph.neighbors(v12).iter().map(|&w| p.vertices[w]).collect();
    nb.sort_unstable();
    assert_eq!(nb, vec![(3, 4), (3, 5), (4, 5)]);
}

#[test]
fn elliptic_class_f12() {
    let c = cfg();
    let f = elliptic_class(&c, 1, 2).unwrap();
    assert!(f.passes());
    assert_eq!(f.self_intersection, "0");
    assert_eq!(f.pairing_with_line, "0");
    let cycle = f.cycle.clone().unwrap();
    let shown = ["L13", "E135", "L15", "E145", "L14", "E134"];
    let mut a: Vec<&str> = cycle.iter().map(String::as_str).collect();
    a.sort_unstable();
    let mut b = shown.to_vec();
    b.sort_unstable();
    assert_eq!(a, b);
    for k in 0..6 {
        let x = c.labels()[c.index_of(&parse(shown[k]))].clone();
        let y = parse(shown[(k + 1) % 6]);
        assert_eq!(x.intersection(&y), 1);
    }
    let second: Vec<&str> = f.second_summands.iter().map(String::as_str).collect();
    let mut second_sorted = second.clone();
    second_sorted.sort_unstable();
    let mut expected = vec!["E245", "L24", "E234", "L23", "E235", "L25"];
    expected.sort_unstable();
    assert_eq!(second_sorted, expected);
}

fn parse(s: &str) -> CurveLabel {
    let idx: Vec<u8> = s[1..].bytes().map(|b| b - b'0').collect();
    let kind = if s.starts_with('E') { CurveKind::E } else { CurveKind::L };
    CurveLabel::new(kind, &idx).unwrap()
}

#[test]
fn every_elliptic_class_passes() {
    let c = cfg();
    for p in crate::graph::k_subsets(5, 2) {
        assert!(elliptic_class(&c, p[0] as u8 + 1, p[1] as u8 + 1).unwrap().passes());
    }
    assert!(elliptic_class(&c, 2, 2).is_err());
}

#[test]
fn alpha_12() {
    let c = cfg();
    let a = alpha_vector(&c, 1, 2).unwrap();
    assert_eq!(a.norm, "-1");
    assert_eq!(a.q_value, QValue::from_ratio(1, 1));
    let l12 = c.curve(&CurveLabel::l(1, 2));
    assert_eq!(c.pairing(&a.ambient, &l12), r(1));
    assert_eq!(a.class.order(), 2);
}

#[test]
fn alphas_are_the_ten_norm_one_classes() {
    let c = cfg();
    let alphas = alpha_vectors(&c).unwrap();
    let (distinct, all_q_one) = alpha_census(&alphas);
    assert_eq!(distinct, 10);
    assert!(all_q_one);
    let census = c.discriminant_form().census().unwrap();
    assert_eq!(census[&(2, QValue::from_ratio(1, 1))], 10);
    for a in &alphas {
        for x in c.curve_pairings(&a.ambient) {
            assert!(x.is_integer());
        }
    }
}

#[test]
fn pair_correspondence_respects_disjointness() {
    let c = cfg();
    let pc = pair_correspondence(&c).unwrap();
    assert_eq!(pc.orthogonal_pairs, 15);
    assert!(pc.transported_is_isomorphism);
    let qm = crate::finquad::discriminant_form(&m_lattice()).unwrap();
    let space = qm.sylow2_restriction().unwrap();
    let b12 = pc.vector_of(1, 2).unwrap();
    let b34 = pc.vector_of(3, 4).unwrap();
    let b13 = pc.vector_of(1, 3).unwrap();
    assert!(!space.b(b12, b34));
    assert!(space.b(b12, b13));
    let mut vs: Vec<u64> = pc.entries.iter().map(|e| e.1).collect();
    vs.sort_unstable();
    vs.dedup();
    assert_eq!(vs.len(), 10);
    for &(p, v) in &pc.entries {
        assert!(space.q(v));
        assert_eq!(pc.pair_of(v), Some(p));
        for &(p2, v2) in &pc.entries {
            let disjoint = p.0 != p2.0 && p.0 != p2.1 && p.1 != p2.0 && p.1 != p2.1;
            if p != p2 {
                assert_eq!(disjoint, !space.b(v, v2));
            }
        }
    }
}

fn perm_strategy() -> impl Strategy<Value = [u8; 5]> {
    Just(vec![1u8, 2, 3, 4, 5]).prop_shuffle().prop_map(|v| [v[0], v[1], v[2], v[3], v[4]])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn s5_preserves_the_configuration(perm in perm_strategy()) {
        let c = cfg();
        let p = c.label_permutation(&perm);
        prop_assert!(c.preserves_pairing(&p));
        for i in 0..20 {
            prop_assert_eq!(c.sigma()[p[i]], p[c.sigma()[i]]);
        }
    }

    #[test]
    fn s5_permutes_elliptic_and_alpha_classes(perm in perm_strategy(), k in 0usize..10) {
        let c = cfg();
        let pairs = crate::graph::k_subsets(5, 2);
        let (i, j) = (pairs[k][0] as u8 + 1, pairs[k][1] as u8 + 1);
        let (pi, pj) = (perm[i as usize - 1], perm[j as usize - 1]);
        let p = c.label_permutation(&perm);
        let moved = |x: &CurveClass| {
            let mut y = vec![BigRational::from_integer(0.into()); 20];
            for (a, v) in x.iter().enumerate() {
                y[p[a]] = v.clone();
            }
            y
        };
        let f = elliptic_class(&c, i, j).unwrap();
        let g = elliptic_class(&c, pi, pj).unwrap();
        prop_assert!(c.same_class(&moved(&f.class), &g.class));
        let a = alpha_vector(&c, i, j).unwrap();
        let b = alpha_vector(&c, pi, pj).unwrap();
        prop_assert!(c.same_class(&moved(&a.ambient), &b.ambient));
    }

    #[test]
    fn s5_maps_e6_differences_into_the_anti_invariant_part(perm in perm_strategy()) {
        let c = cfg();
        let p = c.label_permutation(&perm);
        for (e, l) in e6_difference_labels() {
            let (ei, li) = (p[c.index_of(&e)], p[c.index_of(&l)]);
            prop_assert_eq!(c.sigma()[ei], li);
        }
    }
}
