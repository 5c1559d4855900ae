use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use hesslat::finquad::{discriminant_form, is_isomorphic};
use hesslat::lattice::{e6_2_lattice, m_lattice, Lattice, StandardLattice};
use hesslat::linalg::{determinant, smith_normal_form, IntMatrix};

/// Product of elementary row operations `row_i += k row_j`, with optional sign flips.
fn unimodular(n: usize, ops: &[(usize, usize, i64)], flips: &[bool]) -> IntMatrix {
    let mut t = IntMatrix::identity(n);
    for &(i, j, k) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        for c in 0..n {
            let v = t.get(i, c) + t.get(j, c) * BigInt::from(k);
            t.set(i, c, v);
        }
    }
    for (i, &f) in flips.iter().enumerate().take(n) {
        if f {
            for c in 0..n {
                let v = -t.get(i, c);
                t.set(i, c, v);
            }
        }
    }
    t
}

fn base_lattice(k: usize) -> Lattice {
    match k % 4 {
        0 => m_lattice(),
        1 => e6_2_lattice(),
        2 => Lattice::standard(StandardLattice::D(4), 1).unwrap(),
        _ => Lattice::standard(StandardLattice::U, 2)
            .unwrap()
            .direct_sum(&Lattice::standard(StandardLattice::A(2), 1).unwrap()),
    }
}

/// Every vector of norm `target` inside the box guaranteed by `|x_i|^2 <= |target| (G^-1)_ii`.
fn brute_short_vectors(l: &Lattice, target: i64) -> Vec<Vec<BigInt>> {
    let n = l.rank();
    let inv = l.gram().to_rational().inverse().unwrap();
    let radius: Vec<i64> = (0..n)
        .map(|i| {
            let d = inv.get(i, i).abs().to_f64().unwrap();
            ((target.unsigned_abs() as f64) * d).sqrt().floor() as i64 + 1
        })
        .collect();
    let mut out = Vec::new();
    let mut x: Vec<i64> = radius.iter().map(|r| -r).collect();
    loop {
        let v: Vec<BigInt> = x.iter().map(|&t| BigInt::from(t)).collect();
        if l.norm(&v) == BigInt::from(target) {
            out.push(v);
        }
        let mut i = 0;
        while i < n && x[i] == radius[i] {
            x[i] = -radius[i];
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    out.sort();
    out
}

fn definite_gram(entries: &[i64], n: usize) -> Option<Lattice> {
    // -2 B^T B - 2 I is even and negative definite
    let mut b = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            b.set(i, j, BigInt::from(entries[i * n + j]));
        }
    }
    let btb = &b.transpose() * &b;
    let mut gram = btb.scaled(&BigInt::from(-2));
    for i in 0..n {
        let v = gram.get(i, i) - BigInt::from(2);
        gram.set(i, i, v);
    }
    Lattice::new(gram).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn congruence_preserves_invariants(
        k in 0usize..4,
        ops in prop::collection::vec((0usize..8, 0usize..8, -2i64..=2), 0..12),
        flips in prop::collection::vec(any::<bool>(), 8),
    ) {
        let l = base_lattice(k);
        let t = unimodular(l.rank(), &ops, &flips);
        prop_assert_eq!(determinant(&t).unwrap().abs(), BigInt::from(1));
        let moved = Lattice::new(l.gram().congruent(&t)).unwrap();
        prop_assert_eq!(moved.determinant(), l.determinant());
        prop_assert_eq!(moved.signature(), l.signature());
        prop_assert_eq!(
            smith_normal_form(moved.gram()).diagonal(),
            smith_normal_form(l.gram()).diagonal()
        );
        let (qa, qb) = (discriminant_form(&l).unwrap(), discriminant_form(&moved).unwrap());
        prop_assert_eq!(qa.census().unwrap(), qb.census().unwrap());
        prop_assert!(is_isomorphic(&qa, &qb).unwrap().is_isomorphic());
    }

    #[test]
    fn snf_transforms_are_valid(entries in prop::collection::vec(-5i64..=5, 9)) {
        let rows: Vec<Vec<i64>> = entries.chunks(3).map(<[i64]>::to_vec).collect();
        let m = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&m);
        prop_assert_eq!(&(&s.u * &m) * &s.v, s.d.clone());
        prop_assert_eq!(determinant(&s.u).unwrap().abs(), BigInt::from(1));
        prop_assert_eq!(determinant(&s.v).unwrap().abs(), BigInt::from(1));
        let d = s.diagonal();
        for w in d.windows(2) {
            if !w[0].is_zero() {
                prop_assert!((&w[1] % &w[0]) == BigInt::from(0));
            }
        }
        let prod = d.iter().fold(BigInt::from(1), |a, x| a * x);
        prop_assert_eq!(prod, determinant(&m).unwrap().abs());
    }

    #[test]
    fn short_vectors_match_brute_force(
        n in 1usize..=3,
        entries in prop::collection::vec(-1i64..=1, 9),
        k in 1i64..=4,
    ) {
        if let Some(l) = definite_gram(&entries, n) {
            let target = -2 * k;
            prop_assert_eq!(l.short_vectors(&BigInt::from(target)).unwrap(), brute_short_vectors(&l, target));
        }
    }
}
