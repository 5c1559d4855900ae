//! Acceptance criteria, each run against its time limit. Prints one line per
//! criterion and fails if any criterion fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use hesslat::config::{alpha_census, alpha_vectors, build_configuration, e6_complement, petersen_graph};
use hesslat::finquad::{
    discriminant_form, enumerate_singular_subspaces, glue_check, is_isomorphic, orthogonal_group, orthogonal_pairs,
    F2QuadraticSpace, FiniteQuadraticForm, QValue,
};
use hesslat::graph::Graph;
use hesslat::lattice::{e6_2_lattice, l_minus_lattice, m_lattice, Lattice, StandardLattice};
use hesslat::linalg::{determinant, smith_normal_form, IntMatrix};
use hesslat::restriction::{RestrictionCensus, RestrictionModel};
use hesslat::suite::{brute_norm_counts, norm_counts, plus_type_orthogonal_order};
use hesslat::sylvester::{
    delta_sing, eckardt_section, lambda_from_ints, segre_quadrics, segre_system, singular_locus_check,
    sylvester_cubic, verify_hessian_identity,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn census(entries: &[(u64, i64, i64, usize)]) -> BTreeMap<(u64, QValue), usize> {
    entries
        .iter()
        .map(|&(o, n, d, c)| ((o, QValue::from_ratio(n, d)), c))
        .collect()
}

fn c1() -> Outcome {
    let u = discriminant_form(&Lattice::standard(StandardLattice::U, 2).map_err(e)?).map_err(e)?;
    let v = discriminant_form(&Lattice::standard(StandardLattice::D(4), 1).map_err(e)?).map_err(e)?;
    ensure(is_isomorphic(&u, &FiniteQuadraticForm::u()).map_err(e)?.is_isomorphic(), "U(2) not u")?;
    ensure(is_isomorphic(&v, &FiniteQuadraticForm::v()).map_err(e)?.is_isomorphic(), "D4 not v")?;
    ensure(u.census().map_err(e)? == census(&[(1, 0, 1, 1), (2, 0, 1, 2), (2, 1, 1, 1)]), "u value table")?;
    ensure(v.census().map_err(e)? == census(&[(1, 0, 1, 1), (2, 1, 1, 3)]), "v value table")?;
    Ok("u: values 0,0,0,1; v: values 0,1,1,1".into())
}

fn c2() -> Outcome {
    let q = discriminant_form(&m_lattice()).map_err(e)?;
    let got = q.census().map_err(e)?;
    let want = census(&[(1, 0, 1, 1), (2, 0, 1, 5), (2, 1, 1, 10), (3, -4, 3, 2), (6, -1, 3, 20), (6, -4, 3, 10)]);
    ensure(got == want, format!("{got:?}"))?;
    ensure(got.values().sum::<usize>() == 48, "total")?;
    Ok("census matches, total 48".into())
}

fn c3() -> Outcome {
    let uv = F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v());
    let uuv = F2QuadraticSpace::u().power(2).direct_sum(&F2QuadraticSpace::v());
    let u5 = F2QuadraticSpace::u().power(5);
    let a = uv.isotropic_census().map_err(e)?;
    let b = uuv.isotropic_census().map_err(e)?;
    let c = u5.isotropic_census().map_err(e)?;
    ensure(a == (6, 10) && b.1 == 36 && c == (528, 496), format!("{a:?} {b:?} {c:?}"))?;
    Ok(format!("{a:?}, (.,{}), {c:?}", b.1))
}

fn c4() -> Outcome {
    let qm = discriminant_form(&m_lattice()).map_err(e)?;
    let two = orthogonal_group(&qm.sylow2_restriction().map_err(e)?.to_finite_form()).map_err(e)?;
    let full = orthogonal_group(&qm).map_err(e)?;
    ensure(two.order() == &BigUint::from(120u32), format!("{}", two.order()))?;
    ensure(full.order() == &BigUint::from(240u32), format!("{}", full.order()))?;
    Ok("120, 240".into())
}

fn c5() -> Outcome {
    let u5 = F2QuadraticSpace::u().power(5);
    let subs = enumerate_singular_subspaces(&u5).map_err(e)?;
    ensure(subs.len() == 71145 && subs.len() == 27 * 5 * 17 * 31, format!("{}", subs.len()))?;
    let mut per: BTreeMap<u64, usize> = BTreeMap::new();
    for s in &subs {
        let n = s.non_isotropic_vectors(&u5);
        ensure(n.len() == 16, "subspace without 16 non-isotropic vectors")?;
        for v in n {
            *per.entry(v).or_default() += 1;
        }
    }
    ensure(per.len() == 496 && per.values().all(|&c| c == 2295), "incidence")?;
    Ok("71145 subspaces, 16 each, 2295 per vector".into())
}

fn c6() -> Outcome {
    let uv = F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v());
    let p = orthogonal_pairs(&uv).map_err(e)?;
    ensure(p.pairs.len() == 15, format!("{} pairs", p.pairs.len()))?;
    ensure(p.graph.isomorphism(&Graph::petersen()).is_some(), "not Petersen")?;
    let cfg = build_configuration().map_err(e)?;
    let q = petersen_graph(&cfg);
    ensure(q.isomorphic_to_petersen && q.graph.isomorphism(&p.graph).is_some(), "configuration graph differs")?;
    Ok("15 pairs, Petersen, matches the curve quotient".into())
}

fn c7() -> Outcome {
    let r = e6_2_lattice();
    let counts = norm_counts(&r, 3).map_err(e)?;
    ensure(counts == vec![0, 72, 0], format!("{counts:?}"))?;
    let model = RestrictionModel::new(&build_configuration().map_err(e)?).map_err(e)?;
    let b = model.roots();
    ensure(b.is_bijection() && b.sign_classes == 36, "root map")?;
    Ok("0/72/0, bijection onto 36".into())
}

fn c8() -> Outcome {
    let cfg = build_configuration().map_err(e)?;
    ensure(cfg.n_lattice().rank() == 16 && cfg.n_lattice().signature() == (1, 15), "rank/signature")?;
    let d = e6_complement(&cfg).map_err(e)?;
    let mut t = IntMatrix::zeros(6, 6);
    for (a, (&o, &s)) in d.order.iter().zip(&d.signs).enumerate() {
        t.set(o, a, BigInt::from(s));
    }
    ensure(d.lattice.gram().congruent(&t) == *e6_2_lattice().gram(), "differences not congruent to E6(2)")?;
    ensure(d.determinant == "192", "E6(2) determinant")?;
    let out = cfg.dual_form_isometry().map_err(e)?;
    let qm = discriminant_form(&m_lattice()).map_err(e)?;
    let phi = out.witness().ok_or("q_N not isometric to -q_M")?;
    ensure(phi.verify(cfg.discriminant_form(), &qm.negated()).map_err(e)?, "witness")?;
    Ok("rank 16, (1,15), E6(2), witness verified".into())
}

fn c9() -> Outcome {
    let cfg = build_configuration().map_err(e)?;
    let alphas = alpha_vectors(&cfg).map_err(e)?;
    ensure(alphas.len() == 10, "count")?;
    for a in &alphas {
        ensure(cfg.curve_pairings(&a.ambient).iter().all(|x| x.is_integer()), "non-integral pairing")?;
        ensure(a.q_value == QValue::from_ratio(1, 1), "q value")?;
    }
    let (distinct, q_one) = alpha_census(&alphas);
    let tens = cfg.discriminant_form().census().map_err(e)?[&(2, QValue::from_ratio(1, 1))];
    ensure(distinct == 10 && q_one && tens == 10, "classes")?;
    Ok("10 integral, q=1, all ten classes".into())
}

fn c10() -> Outcome {
    let ratio = BigRational::new(m_lattice().determinant() * e6_2_lattice().determinant(), l_minus_lattice().determinant().clone());
    ensure(ratio == BigRational::from_integer(9.into()), format!("{ratio}"))?;
    let big = discriminant_form(&e6_2_lattice()).map_err(e)?.direct_sum(&discriminant_form(&m_lattice()).map_err(e)?);
    let w = glue_check(&big, 3, &discriminant_form(&l_minus_lattice()).map_err(e)?).map_err(e)?.ok_or("no glue")?;
    let u5 = FiniteQuadraticForm::u().power(5);
    ensure(is_isomorphic(&w.quotient, &u5).map_err(e)?.is_isomorphic(), "quotient not u^5")?;
    Ok("ratio 9, order-3 glue with quotient u^5".into())
}

fn c11() -> Outcome {
    let model = RestrictionModel::new(&build_configuration().map_err(e)?).map_err(e)?;
    let a = model.default_a_triple();
    let pairs = model.b_pairs();
    ensure(pairs.len() == 15, "15 b-pairs")?;
    for b in pairs {
        let v = model.build_v(a, b).map_err(e)?;
        let rep = model.report(&v).map_err(e)?;
        ensure(rep.weight == 8, format!("weight {}", rep.weight))?;
        ensure(rep.census == RestrictionCensus { vanish: 4, cut: 2, miss: 10 }, format!("{:?}", rep.census))?;
        let z = model.zero_divisor(&v).map_err(e)?;
        let mut got: Vec<Vec<u64>> = z.iter().map(|h| h.a.coords().to_vec()).collect();
        let mut want = Vec::new();
        for x in b {
            want.push(model.q_m().sylow2_element(x).map_err(e)?.coords().to_vec());
        }
        got.sort();
        want.sort();
        ensure(got == want && z.iter().all(|h| h.m == BigRational::from_integer((-1).into())), "zero divisor")?;
    }
    Ok("15 x (weight 8, 4/2/10, H(b1,-1)+H(b2,-1))".into())
}

fn c12() -> Outcome {
    let model = RestrictionModel::new(&build_configuration().map_err(e)?).map_err(e)?;
    let segre: Vec<_> = segre_quadrics().into_iter().map(|q| q.2).collect();
    let a = model.default_a_triple();
    let mut seen = Vec::new();
    for b in model.b_pairs() {
        let q = model.quadric_of(&model.build_v(a, b).map_err(e)?).map_err(e)?;
        let idx = [q.first.0, q.first.1, q.second.0, q.second.1];
        ensure(idx.iter().all(|x| idx.iter().filter(|y| *y == x).count() == 1), "pairs overlap")?;
        ensure(segre.contains(&q.polynomial), "quadric outside the system")?;
        seen.push((q.first, q.second));
    }
    seen.sort();
    seen.dedup();
    ensure(seen.len() == 15, "quadrics not distinct")?;
    let s = segre_system().map_err(e)?;
    ensure(s.span_dimension == 5 && s.linear_relation_holds && s.cubic_relation_holds, "Segre relations")?;
    Ok("15 distinct quadrics, span 5, both relations exact".into())
}

fn c13() -> Outcome {
    for l in [[1, 1, 1, 1, 1], [1, 2, 3, 4, 5], [1, 1, 2, 3, 5]] {
        let d = sylvester_cubic(&lambda_from_ints(&l)).map_err(e)?;
        verify_hessian_identity(&d).map_err(e)?;
        ensure(singular_locus_check(&d).map_err(e)?.passes(), format!("nodes/lines at {l:?}"))?;
    }
    ensure(delta_sing(&lambda_from_ints(&[4, 4, 4, 4, 1])).map_err(e)?.vanishes, "delta(4,4,4,4,1)")?;
    ensure(!delta_sing(&lambda_from_ints(&[1, 1, 1, 1, 1])).map_err(e)?.vanishes, "delta(1,1,1,1,1)")?;
    let d = sylvester_cubic(&lambda_from_ints(&[1, 1, 2, 3, 5])).map_err(e)?;
    let ek = eckardt_section(&d, 1, 2).map_err(e)?;
    ensure(ek.passes() && ek.node == [3, 4, 5], "Eckardt section")?;
    Ok("identity, 10 nodes, 10 lines, delta, Eckardt".into())
}

fn random_perm(rng: &mut ChaCha8Rng) -> [u8; 5] {
    let mut p = [1u8, 2, 3, 4, 5];
    p.shuffle(rng);
    p
}

fn c14() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e5);
    let cfg = build_configuration().map_err(e)?;
    let model = RestrictionModel::new(&cfg).map_err(e)?;
    let pc = model.correspondence();
    let a = model.default_a_triple();
    for _ in 0..20 {
        let perm = random_perm(&mut rng);
        let p = cfg.label_permutation(&perm);
        ensure(cfg.preserves_pairing(&p), "S5 breaks the pairing")?;
        ensure((0..20).all(|i| cfg.sigma()[p[i]] == p[cfg.sigma()[i]]), "S5 does not commute with the involution")?;

        let k = rng.gen_range(0..15);
        let v = model.build_v(a, model.b_pairs()[k]).map_err(e)?;
        let q = model.quadric_of(&v).map_err(e)?;
        let mv = |x: (u8, u8)| {
            let (s, t) = (perm[x.0 as usize - 1], perm[x.1 as usize - 1]);
            (s.min(t), s.max(t))
        };
        let (p1, p2) = (mv(q.first), mv(q.second));
        let b = [pc.vector_of(p1.0, p1.1).ok_or("pair")?, pc.vector_of(p2.0, p2.1).ok_or("pair")?];
        let q2 = model.quadric_of(&model.build_v(a, b).map_err(e)?).map_err(e)?;
        let key = |x: (u8, u8), y: (u8, u8)| if x < y { (x, y) } else { (y, x) };
        ensure(key(q2.first, q2.second) == key(p1, p2), "quadric assignment not equivariant")?;

        let lam: Vec<i64> = (0..5).map(|_| rng.gen_range(1..=9)).collect();
        let mut moved = [0i64; 5];
        for i in 0..5 {
            moved[perm[i] as usize - 1] = lam[i];
        }
        let (da, db) = (delta_sing(&lambda_from_ints(&lam)).map_err(e)?, delta_sing(&lambda_from_ints(&moved)).map_err(e)?);
        ensure(da.product_exact == db.product_exact, "delta not symmetric")?;
        let sa = sylvester_cubic(&lambda_from_ints(&lam)).map_err(e)?;
        let sb = sylvester_cubic(&lambda_from_ints(&moved)).map_err(e)?;
        ensure(verify_hessian_identity(&sa).map_err(e)? == verify_hessian_identity(&sb).map_err(e)?, "Hessian constant")?;
        ensure(singular_locus_check(&sb).map_err(e)?.passes(), "nodes after permutation")?;
    }
    for _ in 0..40 {
        let n = rng.gen_range(1..=3);
        let mut b = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                b.set(i, j, BigInt::from(rng.gen_range(-1..=1)));
            }
        }
        let mut g = (&b.transpose() * &b).scaled(&BigInt::from(-2));
        for i in 0..n {
            let x = g.get(i, i) - BigInt::from(2);
            g.set(i, i, x);
        }
        let l = Lattice::new(g).map_err(e)?;
        ensure(norm_counts(&l, 3).map_err(e)? == brute_norm_counts(&l, 3, 3), "short-vector oracle")?;
    }
    for _ in 0..40 {
        let l = [m_lattice(), e6_2_lattice()][rng.gen_range(0..2)].clone();
        let n = l.rank();
        let mut t = IntMatrix::identity(n);
        for _ in 0..10 {
            let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if i == j {
                continue;
            }
            let k = BigInt::from(rng.gen_range(-2..=2));
            for c in 0..n {
                let x = t.get(i, c) + t.get(j, c) * &k;
                t.set(i, c, x);
            }
        }
        let moved = Lattice::new(l.gram().congruent(&t)).map_err(e)?;
        ensure(determinant(&t).map_err(e)?.magnitude() == &1u32.into(), "transform not unimodular")?;
        ensure(moved.determinant() == l.determinant() && moved.signature() == l.signature(), "det/signature")?;
        ensure(smith_normal_form(moved.gram()).diagonal() == smith_normal_form(l.gram()).diagonal(), "SNF")?;
    }
    Ok("20 permutations, 40 oracle lattices, 40 congruences".into())
}

fn c15() -> Outcome {
    let g = orthogonal_group(&FiniteQuadraticForm::u().power(5)).map_err(e)?;
    let formula = plus_type_orthogonal_order(2, 5);
    ensure(g.order() == &formula, format!("{} vs {formula}", g.order()))?;
    ensure(g.schreier_sims_order() == formula, "Schreier-Sims disagrees")?;
    Ok(format!("{formula}"))
}

fn main() {
    let criteria: Vec<(u32, &str, u64, fn() -> Outcome)> = vec![
        (1, "discriminant forms of U(2) and D4", 1, c1),
        (2, "value census of q_M", 1, c2),
        (3, "isotropic counts", 1, c3),
        (4, "orthogonal groups of q_M", 5, c4),
        (5, "singular subspaces of u^5", 60, c5),
        (6, "orthogonal pairs and the Petersen graph", 1, c6),
        (7, "short vectors of E6(2) and the root bijection", 5, c7),
        (8, "curve configuration lattice", 5, c8),
        (9, "alpha vectors", 1, c9),
        (10, "gluing index and glue subgroup", 10, c10),
        (11, "restriction to the domain of M", 5, c11),
        (12, "quadrics and Segre relations", 5, c12),
        (13, "Sylvester geometry", 30, c13),
        (14, "property suite", 60, c14),
        (15, "order of O(u^5)", 600, c15),
    ];
    let mut failed = Vec::new();
    for (n, name, limit, f) in criteria {
        let start = Instant::now();
        let out = f();
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(limit);
        let line = match (&out, in_time) {
            (Ok(detail), true) => format!("criterion {n:>2} PASS  {name}: {detail} ({:.3} s, limit {limit} s)", took.as_secs_f64()),
            (Ok(detail), false) => format!("criterion {n:>2} FAIL  {name}: {detail} but took {:.3} s, limit {limit} s", took.as_secs_f64()),
            (Err(msg), _) => format!("criterion {n:>2} FAIL  {name}: {msg} ({:.3} s)", took.as_secs_f64()),
        };
        println!("{line}");
        if out.is_err() || !in_time {
            failed.push(n);
        }
    }
    if failed.is_empty() {
        println!("all 15 criteria pass");
    } else {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
