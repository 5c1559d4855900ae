use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;

use super::*;
use crate::graph::Graph;
use crate::lattice::{e6_2_lattice, l_minus_lattice, m_lattice, Lattice, StandardLattice};

fn census_of(entries: &[(u64, i64, i64, usize)]) -> BTreeMap<(u64, QValue), usize> {
    entries
        .iter()
        .map(|&(o, n, d, c)| ((o, QValue::from_ratio(n, d)), c))
        .collect()
}

fn u2() -> Lattice {
    Lattice::standard(StandardLattice::U, 2).unwrap()
}

fn d4() -> Lattice {
    Lattice::standard(StandardLattice::D(4), 1).unwrap()
}

#[test]
fn qvalues_reduce_mod_two() {
    assert_eq!(QValue::from_ratio(-4, 3), QValue::from_ratio(2, 3));
    assert_eq!(QValue::from_ratio(-1, 1), QValue::from_ratio(1, 1));
    assert_eq!(QValue::from_ratio(5, 1), QValue::from_ratio(1, 1));
    assert!(QValue::from_ratio(-2, 1).is_zero());
    assert_eq!(QValue::from_ratio(1, 3).negated(), QValue::from_ratio(5, 3));
}

#[test]
fn u_and_v_from_lattices() {
    let u = discriminant_form(&u2()).unwrap();
    assert_eq!(u.invariant_factors(), vec![2, 2]);
    assert_eq!(u.census().unwrap(), census_of(&[(1, 0, 1, 1), (2, 0, 1, 2), (2, 1, 1, 1)]));
    assert!(is_isomorphic(&u, &FiniteQuadraticForm::u()).unwrap().is_isomorphic());

    let v = discriminant_form(&d4()).unwrap();
    assert_eq!(v.invariant_factors(), vec![2, 2]);
    assert_eq!(v.census().unwrap(), census_of(&[(1, 0, 1, 1), (2, 1, 1, 3)]));
    assert!(is_isomorphic(&v, &FiniteQuadraticForm::v()).unwrap().is_isomorphic());
}

#[test]
fn u_is_not_v() {
    let out = is_isomorphic(&FiniteQuadraticForm::u(), &FiniteQuadraticForm::v()).unwrap();
    assert!(matches!(out, IsoOutcome::NotIsomorphic(Obstruction::Census { .. })));
}

#[test]
fn odd_lattice_rejected() {
    let a1 = Lattice::new(crate::linalg::IntMatrix::from_rows(&[vec![1]]).unwrap()).unwrap();
    assert!(matches!(discriminant_form(&a1), Err(Error::OddLattice { .. })));
}

#[test]
fn m_census() {
    let q = discriminant_form(&m_lattice()).unwrap();
    assert_eq!(q.invariant_factors(), vec![2, 2, 2, 6]);
    assert_eq!(q.group_order(), BigUint::from(48u32));
    let expected = census_of(&[
        (1, 0, 1, 1),
        (2, 0, 1, 5),
        (2, 1, 1, 10),
        (3, -4, 3, 2),
        (6, -1, 3, 20),
        (6, -4, 3, 10),
    ]);
    let census = q.census().unwrap();
    assert_eq!(census, expected);
    assert_eq!(census.values().sum::<usize>(), 48);
}

/// Census of E6(2): the 2-part is u+u+v (27 nonzero isotropic, 36 not) and the
/// 3-part has q = -2/3, so order-6 values add 4/3.
#[test]
fn e6_2_census() {
    let q = discriminant_form(&e6_2_lattice()).unwrap();
    let expected = census_of(&[
        (1, 0, 1, 1),
        (2, 0, 1, 27),
        (2, 1, 1, 36),
        (3, -2, 3, 2),
        (6, 4, 3, 54),
        (6, 1, 3, 72),
    ]);
    assert_eq!(q.census().unwrap(), expected);
}

#[test]
fn values_match_lifted_norms() {
    for l in [m_lattice(), e6_2_lattice(), d4(), u2(), l_minus_lattice()] {
        let dg = discriminant_group(&l).unwrap();
        let form = dg.form();
        let g = l.gram();
        for x in form.elements().unwrap() {
            let lift = dg.lift(&x);
            let norm = g.bilinear_rat(&lift, &lift);
            assert_eq!(QValue::new(&norm), *x.q(), "{x}");
            assert_eq!(dg.class_of_dual_vector(&lift).unwrap(), x);
        }
    }
}

#[test]
fn sylow_restrictions() {
    let m2 = discriminant_form(&m_lattice()).unwrap().sylow2_restriction().unwrap();
    assert_eq!(m2.dim(), 4);
    assert_eq!(m2.isotropic_census().unwrap(), (6, 10));
    assert_eq!(m2.arf().unwrap(), 1);
    let uv = F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v());
    assert!(is_isomorphic(&m2.to_finite_form(), &uv.to_finite_form()).unwrap().is_isomorphic());

    let r2 = discriminant_form(&e6_2_lattice()).unwrap().sylow2_restriction().unwrap();
    let uuv = F2QuadraticSpace::u().power(2).direct_sum(&F2QuadraticSpace::v());
    assert!(is_isomorphic(&r2.to_finite_form(), &uuv.to_finite_form()).unwrap().is_isomorphic());

    let lm = discriminant_form(&l_minus_lattice()).unwrap();
    assert_eq!(lm.invariant_factors(), vec![2; 10]);
    let lm2 = lm.sylow2_restriction().unwrap();
    let u5 = F2QuadraticSpace::u().power(5);
    assert!(is_isomorphic(&lm2.to_finite_form(), &u5.to_finite_form()).unwrap().is_isomorphic());
}

#[test]
fn sylow_rejects_z4() {
    let a3 = Lattice::standard(StandardLattice::A(3), 1).unwrap();
    let q = discriminant_form(&a3).unwrap();
    assert_eq!(q.invariant_factors(), vec![4]);
    assert!(matches!(q.sylow2_restriction(), Err(Error::NotTwoElementary { order: 4 })));
}

#[test]
fn sylow_vector_roundtrip() {
    let q = discriminant_form(&m_lattice()).unwrap();
    for bits in 0..16u64 {
        let e = q.sylow2_element(bits).unwrap();
        assert_eq!(q.sylow2_vector(&e).unwrap(), Some(bits));
    }
    let three = q.elements().unwrap().into_iter().find(|e| e.order() == 3).unwrap();
    assert_eq!(q.sylow2_vector(&three).unwrap(), None);
}

#[test]
fn uu_vv_witness() {
    let uu = FiniteQuadraticForm::u().power(2);
    let vv = FiniteQuadraticForm::v().power(2);
    let out = is_isomorphic(&uu, &vv).unwrap();
    let w = out.witness().expect("u+u and v+v are isomorphic");
    assert!(w.verify(&uu, &vv).unwrap());
}

#[test]
fn isomorphism_is_reflexive_and_symmetric() {
    let corpus = [
        FiniteQuadraticForm::u(),
        FiniteQuadraticForm::v(),
        FiniteQuadraticForm::u().power(2),
        FiniteQuadraticForm::v().power(2),
        FiniteQuadraticForm::u().direct_sum(&FiniteQuadraticForm::v()),
        discriminant_form(&m_lattice()).unwrap(),
        discriminant_form(&m_lattice()).unwrap().negated(),
        discriminant_form(&Lattice::standard(StandardLattice::A(2), 1).unwrap()).unwrap(),
    ];
    for a in &corpus {
        let w = is_isomorphic(a, a).unwrap();
        assert!(w.witness().unwrap().verify(a, a).unwrap());
        for b in &corpus {
            let ab = is_isomorphic(a, b).unwrap();
            let ba = is_isomorphic(b, a).unwrap();
            assert_eq!(ab.is_isomorphic(), ba.is_isomorphic());
            if let Some(w) = ab.witness() {
                assert!(w.verify(a, b).unwrap());
            }
        }
    }
}

#[test]
fn signature_mod_eight() {
    assert_eq!(FiniteQuadraticForm::u().signature_mod8().unwrap(), 0);
    // D4 has signature 0 - 4 = -4.
    assert_eq!(FiniteQuadraticForm::v().signature_mod8().unwrap(), 4);
    // M has signature 2 - 4 = -2.
    assert_eq!(discriminant_form(&m_lattice()).unwrap().signature_mod8().unwrap(), 6);
    assert_eq!(discriminant_form(&e6_2_lattice()).unwrap().signature_mod8().unwrap(), 2);
}

#[test]
fn isotropic_censuses() {
    let u = F2QuadraticSpace::u();
    let v = F2QuadraticSpace::v();
    assert_eq!(u.direct_sum(&v).isotropic_census().unwrap(), (6, 10));
    assert_eq!(u.power(2).direct_sum(&v).isotropic_census().unwrap(), (28, 36));
    assert_eq!(u.power(5).isotropic_census().unwrap(), (528, 496));
    assert!(u.power(5).is_plus_type().unwrap());
    assert_eq!(v.power(2).arf().unwrap(), 0);
}

#[test]
fn degenerate_forms_rejected() {
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    let zero = BigRational::from_integer(BigInt::from(0));
    let err = FiniteQuadraticForm::new(vec![2], vec![zero.clone()], vec![vec![zero.clone()]]);
    assert!(matches!(err, Err(Error::Degenerate { radical: 2 })));
    let bad = FiniteQuadraticForm::new(vec![2], vec![half.clone()], vec![vec![half]]);
    assert!(bad.is_ok(), "<1/2> on Z/2 is a valid (odd) form");
    let odd = FiniteQuadraticForm::new(vec![2], vec![BigRational::new(1.into(), 4.into())], vec![vec![zero]]);
    assert!(matches!(odd, Err(Error::InvalidForm(_))));
}

#[test]
fn json_roundtrip() {
    let q = discriminant_form(&m_lattice()).unwrap();
    let json = serde_json::to_string(&q.to_json()).unwrap();
    let back: FormJson = serde_json::from_str(&json).unwrap();
    assert_eq!(FiniteQuadraticForm::from_json(&back).unwrap(), q);
}

#[test]
fn orthogonal_quotient_of_uu() {
    let uu = FiniteQuadraticForm::u().power(2);
    let h = uu.element(&[1, 0, 0, 0]).unwrap();
    let quotient = uu.orthogonal_quotient(&[h]).unwrap();
    assert_eq!(quotient.group_order(), BigUint::from(4u32));
    assert!(is_isomorphic(&quotient, &FiniteQuadraticForm::u()).unwrap().is_isomorphic());
    let anisotropic = uu.element(&[1, 1, 0, 0]).unwrap();
    assert!(uu.orthogonal_quotient(&[anisotropic]).is_err());
}

#[test]
fn gluing_e6_2_and_m() {
    let big = discriminant_form(&e6_2_lattice())
        .unwrap()
        .direct_sum(&discriminant_form(&m_lattice()).unwrap());
    let u5 = F2QuadraticSpace::u().power(5).to_finite_form();
    let w = glue_check(&big, 3, &u5).unwrap().expect("an order-3 glue exists");
    assert_eq!(w.generator.order(), 3);
    assert!(w.generator.q().is_zero());
    assert!(w.isometry.verify(&w.quotient, &u5).unwrap());
    assert!(glue_check(&big, 2, &u5).unwrap().is_none());
    let ratio = m_lattice().determinant().clone() * e6_2_lattice().determinant() / l_minus_lattice().determinant();
    assert_eq!(ratio, BigInt::from(9));
}

#[test]
fn orthogonal_groups_of_m() {
    let qm = discriminant_form(&m_lattice()).unwrap();
    let two = orthogonal_group(&qm.sylow2_restriction().unwrap().to_finite_form()).unwrap();
    assert_eq!(two.order(), &BigUint::from(120u32));
    assert_eq!(two.schreier_sims_order(), BigUint::from(120u32));
    let full = orthogonal_group(&qm).unwrap();
    assert_eq!(full.order(), &BigUint::from(240u32));
    assert_eq!(full.schreier_sims_order(), BigUint::from(240u32));
    for g in full.generators() {
        assert!(g.verify(&qm, &qm).unwrap());
    }
}

#[test]
fn small_orthogonal_groups() {
    // O(u) swaps the two isotropic vectors; O(v) = S3.
    assert_eq!(orthogonal_group(&FiniteQuadraticForm::u()).unwrap().order(), &BigUint::from(2u32));
    assert_eq!(orthogonal_group(&FiniteQuadraticForm::v()).unwrap().order(), &BigUint::from(6u32));
    // O+(4,2) has order 72.
    let uu = FiniteQuadraticForm::u().power(2);
    let g = orthogonal_group(&uu).unwrap();
    assert_eq!(g.order(), &BigUint::from(72u32));
    assert_eq!(g.schreier_sims_order(), BigUint::from(72u32));
}

/// Independent oracle: every tuple of mutually orthogonal non-isotropic
/// independent vectors, spanned and deduplicated.
fn brute_force_subspaces(space: &F2QuadraticSpace) -> BTreeSet<Vec<u64>> {
    let r = space.dim() / 2;
    let odd = space.non_isotropic_vectors();
    let mut out = BTreeSet::new();
    fn rec(space: &F2QuadraticSpace, odd: &[u64], start: usize, r: usize, cur: &mut Vec<u64>, out: &mut BTreeSet<Vec<u64>>) {
        if cur.len() == r {
            let e = f2::reduced_echelon(cur);
            if e.len() == r {
                out.insert(e);
            }
            return;
        }
        for i in start..odd.len() {
            if cur.iter().all(|&c| !space.b(c, odd[i])) {
                cur.push(odd[i]);
                rec(space, odd, i + 1, r, cur, out);
                cur.pop();
            }
        }
    }
    rec(space, &odd, 0, r, &mut Vec::new(), &mut out);
    out
}

#[test]
fn subspaces_match_brute_force() {
    let u = F2QuadraticSpace::u();
    let v = F2QuadraticSpace::v();
    for space in [u.clone(), v.clone(), u.power(2), u.direct_sum(&v), u.power(3), u.power(2).direct_sum(&v)] {
        let fast: BTreeSet<Vec<u64>> = enumerate_singular_subspaces(&space)
            .unwrap()
            .into_iter()
            .map(|s| {
                assert!(s.satisfies_invariants(&space));
                s.echelon_basis().to_vec()
            })
            .collect();
        assert_eq!(fast, brute_force_subspaces(&space), "{space}");
    }
}

/// Lagrangians of a symplectic 2n-space number prod_{i=1..n} (2^i + 1); those
/// on which q vanishes number prod_{i=0..n-1} (2^i + 1) for plus type.
#[test]
fn subspace_counts_match_formula() {
    let u = F2QuadraticSpace::u();
    for n in 1..=4usize {
        let lagrangians: u64 = (1..=n as u32).map(|i| (1u64 << i) + 1).product();
        let singular: u64 = (0..n as u32).map(|i| (1u64 << i) + 1).product();
        let count = enumerate_singular_subspaces(&u.power(n)).unwrap().len() as u64;
        assert_eq!(count, lagrangians - singular, "n = {n}");
    }
}

#[test]
fn u5_subspaces() {
    let u5 = F2QuadraticSpace::u().power(5);
    let subs = enumerate_singular_subspaces(&u5).unwrap();
    assert_eq!(subs.len(), 71145);
    assert_eq!(71145, 27 * 5 * 17 * 31);
    let mut per_vector: BTreeMap<u64, usize> = BTreeMap::new();
    for s in &subs {
        assert!(s.satisfies_invariants(&u5));
        let odd = s.non_isotropic_vectors(&u5);
        assert_eq!(odd.len(), 16);
        for x in odd {
            *per_vector.entry(x).or_default() += 1;
        }
    }
    assert_eq!(per_vector.len(), 496);
    assert!(per_vector.values().all(|&c| c == 2295));
}

#[test]
fn subspace_from_generators() {
    let u5 = F2QuadraticSpace::u().power(5);
    // e_i + f_i in each u summand has q = 1, and distinct summands are orthogonal.
    let gens: Vec<u64> = (0..5).map(|i| 0b11u64 << (2 * i)).collect();
    let s = SingularSubspace::from_generators(&u5, &gens).unwrap();
    assert!(s.satisfies_invariants(&u5));
    assert!(SingularSubspace::from_generators(&u5, &gens[..4]).is_err());
    assert!(SingularSubspace::from_generators(&u5, &[0b01, 0b1100, 0b110000, 0b11000000, 0b1100000000]).is_err());
}

#[test]
fn orthogonal_pairs_of_uv() {
    let uv = F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v());
    let op = orthogonal_pairs(&uv).unwrap();
    assert_eq!(op.vectors.len(), 10);
    assert_eq!(op.pairs.len(), 15);
    assert_eq!(op.graph.regular_degree(), Some(3));
    assert!(op.graph.isomorphism(&Graph::petersen()).is_some());
    assert!(orthogonal_pairs(&F2QuadraticSpace::u().power(2)).is_err());
}

fn arb_space() -> impl Strategy<Value = F2QuadraticSpace> {
    (1usize..=10).prop_flat_map(|n| {
        (Just(n), any::<u64>(), proptest::collection::vec(any::<u64>(), n)).prop_map(|(n, q, raw)| {
            let full = (1u64 << n) - 1;
            let mut rows = vec![0u64; n];
            for i in 0..n {
                for j in i + 1..n {
                    if raw[i] >> j & 1 == 1 {
                        rows[i] |= 1 << j;
                        rows[j] |= 1 << i;
                    }
                }
            }
            F2QuadraticSpace::new(n, q & full, rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f2_polarization_law(space in arb_space()) {
        let n = space.dim();
        for x in 0..1u64 << n {
            for y in 0..1u64 << n {
                prop_assert_eq!(space.q(x ^ y), space.q(x) ^ space.q(y) ^ space.b(x, y));
            }
            prop_assert!(!space.b(x, x));
        }
    }

    #[test]
    fn census_totals_equal_group_order(n in 0usize..4, m in 0usize..3) {
        let q = FiniteQuadraticForm::u().power(n).direct_sum(&FiniteQuadraticForm::v().power(m));
        let total: usize = q.census().unwrap().values().sum();
        prop_assert_eq!(BigUint::from(total), q.group_order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn u5_count_stable_under_change_of_basis(seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let u5 = F2QuadraticSpace::u().power(5);
        let images = loop {
            let cand: Vec<u64> = (0..10).map(|_| rng.gen_range(1u64..1024)).collect();
            if f2::f2_rank(&cand) == 10 {
                break cand;
            }
        };
        let moved = u5.transformed(&images).unwrap();
        prop_assert_eq!(moved.isotropic_census().unwrap(), (528, 496));
        prop_assert_eq!(enumerate_singular_subspaces(&moved).unwrap().len(), 71145);
    }
}
