//! Named verification suites and their JSON / table reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::config::{
    alpha_census, alpha_vectors, build_configuration, e6_complement, elliptic_class, pair_correspondence,
    petersen_graph, CurveConfiguration,
};
use crate::error::{Error, Result};
use crate::finquad::{
    discriminant_form, enumerate_singular_subspaces, glue_check, is_isomorphic, orthogonal_group,
    orthogonal_pairs, F2QuadraticSpace, FiniteQuadraticForm, QValue,
};
use crate::graph::{k_subsets, Graph};
use crate::lattice::{e6_2_lattice, l_minus_lattice, m_lattice, Lattice, StandardLattice};
use crate::restriction::{phi4_restriction_check, RestrictionClass, RestrictionModel};
use crate::sylvester::{
    delta_sing, eckardt_section, evaluate_quadrics, lambda_from_ints, segre_quadrics, segre_system,
    singular_locus_check, sylvester_cubic, verify_hessian_identity,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// What the check establishes.
    pub reference: String,
    pub status: Status,
    pub computed: String,
    pub expected: String,
    /// Wall time; the only field that varies between runs.
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub deep: bool,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
        writeln!(f, "suite {}{}", self.suite, if self.deep { " (deep)" } else { "" })?;
        for c in &self.checks {
            let mark = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            writeln!(f, "  {mark}  {:width$}  {:>9.1} ms  {}", c.id, c.elapsed_ms, c.reference)?;
            if c.status == Status::Fail {
                writeln!(f, "        computed: {}", c.computed)?;
                writeln!(f, "        expected: {}", c.expected)?;
            }
        }
        let failed = self.checks.iter().filter(|c| c.status == Status::Fail).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lattice,
    Finquad,
    Config,
    Restriction,
    Sylvester,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Finquad => "finquad",
            Suite::Config => "config",
            Suite::Restriction => "restriction",
            Suite::Sylvester => "sylvester",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "lattice" => Suite::Lattice,
            "finquad" => Suite::Finquad,
            "config" => Suite::Config,
            "restriction" => Suite::Restriction,
            "sylvester" => Suite::Sylvester,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Collects checks; each closure returns the computed value as text.
struct Runner {
    checks: Vec<Check>,
}

impl Runner {
    fn run<F>(&mut self, id: &str, reference: &str, expected: impl Into<String>, f: F)
    where
        F: FnOnce() -> Result<String>,
    {
        let start = Instant::now();
        let computed = f();
        let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
        let expected = expected.into();
        let (status, computed) = match computed {
            Ok(c) if c == expected => (Status::Pass, c),
            Ok(c) => (Status::Fail, c),
            Err(e) => (Status::Fail, format!("error: {e}")),
        };
        self.checks.push(Check {
            id: id.to_string(),
            reference: reference.to_string(),
            status,
            computed,
            expected,
            elapsed_ms,
        });
    }
}

pub fn run_suite(suite: Suite, deep: bool) -> SuiteReport {
    let mut r = Runner { checks: Vec::new() };
    let all = suite == Suite::All;
    if all || suite == Suite::Lattice {
        lattice_checks(&mut r);
    }
    if all || suite == Suite::Finquad {
        finquad_checks(&mut r, deep);
    }
    let needs_cfg = all || matches!(suite, Suite::Config | Suite::Restriction);
    let cfg = if needs_cfg { Some(build_configuration()) } else { None };
    if all || suite == Suite::Config {
        config_checks(&mut r, cfg.as_ref().expect("built"));
    }
    if all || suite == Suite::Restriction {
        restriction_checks(&mut r, cfg.as_ref().expect("built"), deep);
    }
    if all || suite == Suite::Sylvester {
        sylvester_checks(&mut r);
    }
    SuiteReport {
        schema_version: SCHEMA_VERSION,
        suite: suite.name().to_string(),
        deep,
        checks: r.checks,
    }
}

fn invariants(l: &Lattice) -> String {
    let (p, n) = l.signature();
    format!("rank {}, signature ({p},{n}), det {}", l.rank(), l.determinant())
}

/// Number of vectors of each norm `-2k` for `k = 1..=kmax`.
pub fn norm_counts(l: &Lattice, kmax: i64) -> Result<Vec<usize>> {
    (1..=kmax)
        .map(|k| Ok(l.short_vectors(&BigInt::from(-2 * k))?.len()))
        .collect()
}

/// Counts by exhaustive search over the box `|x_i| <= radius`.
pub fn brute_norm_counts(l: &Lattice, kmax: i64, radius: i64) -> Vec<usize> {
    let n = l.rank();
    let mut counts = vec![0usize; kmax as usize];
    let mut x = vec![-radius; n];
    loop {
        let v: Vec<BigInt> = x.iter().map(|&t| BigInt::from(t)).collect();
        let norm = l.norm(&v);
        for k in 1..=kmax {
            if norm == BigInt::from(-2 * k) {
                counts[k as usize - 1] += 1;
            }
        }
        let mut i = 0;
        while i < n && x[i] == radius {
            x[i] = -radius;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    counts
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn lattice_checks(r: &mut Runner) {
    r.run("e6-2-invariants", "E6(2) is negative definite of determinant 192", "rank 6, signature (0,6), det 192", || {
        Ok(invariants(&e6_2_lattice()))
    });
    r.run("m-invariants", "M = U + U(2) + A2(2)", "rank 6, signature (2,4), det 48", || {
        Ok(invariants(&m_lattice()))
    });
    r.run("l-minus-invariants", "L- = U + U(2) + E8(2)", "rank 12, signature (2,10), det 1024", || {
        Ok(invariants(&l_minus_lattice()))
    });
    r.run("e6-2-short-vectors", "E6(2) has no (-2)- or (-6)-vectors and 72 (-4)-vectors", "0,72,0", || {
        Ok(join(&norm_counts(&e6_2_lattice(), 3)?))
    });
    r.run("glue-index", "det(M) det(E6(2)) / det(L-) is the squared glue index", "9", || {
        let ratio = BigRational::new(
            m_lattice().determinant() * e6_2_lattice().determinant(),
            l_minus_lattice().determinant().clone(),
        );
        Ok(ratio.to_string())
    });
    r.run("short-vector-oracle", "enumeration agrees with a brute-force box search", "agree", || {
        for (kind, scale) in [(StandardLattice::A(2), 1), (StandardLattice::A(3), 2), (StandardLattice::A(1), 3)] {
            let l = Lattice::standard(kind, scale)?;
            if norm_counts(&l, 3)? != brute_norm_counts(&l, 3, 4) {
                return Ok(format!("disagree on {}", l.name().unwrap_or("?")));
            }
        }
        Ok("agree".into())
    });
}

fn census_text(f: &FiniteQuadraticForm) -> Result<String> {
    Ok(f.census()?
        .iter()
        .map(|((o, q), n)| format!("({o},{q}):{n}"))
        .collect::<Vec<_>>()
        .join(" "))
}

/// `2 q^(n(n-1)) (q^n - 1) prod_{i<n} (q^(2i) - 1)`.
pub fn plus_type_orthogonal_order(q: u32, n: u32) -> BigUint {
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut out = BigUint::from(2u32) * q.pow(n * (n - 1)) * (q.pow(n) - &one);
    for i in 1..n {
        out *= q.pow(2 * i) - &one;
    }
    out
}

fn finquad_checks(r: &mut Runner, deep: bool) {
    r.run(
        "u-and-v-value-tables",
        "discriminant forms of U(2) and D4 are u and v",
        "u: (1,0):1 (2,0):2 (2,1):1 iso=true; v: (1,0):1 (2,1):3 iso=true",
        || {
            let u2 = Lattice::standard(StandardLattice::U, 2)?;
            let d4 = Lattice::standard(StandardLattice::D(4), 1)?;
            let (qu, qv) = (discriminant_form(&u2)?, discriminant_form(&d4)?);
            Ok(format!(
                "u: {} iso={}; v: {} iso={}",
                census_text(&qu)?,
                is_isomorphic(&qu, &FiniteQuadraticForm::u())?.is_isomorphic(),
                census_text(&qv)?,
                is_isomorphic(&qv, &FiniteQuadraticForm::v())?.is_isomorphic()
            ))
        },
    );
    r.run(
        "m-census",
        "value census of the discriminant form of M (q mod 2 in [0,2))",
        "(1,0):1 (2,0):5 (2,1):10 (3,2/3):2 (6,2/3):10 (6,5/3):20 total 48",
        || {
            let q = discriminant_form(&m_lattice())?;
            let total: usize = q.census()?.values().sum();
            Ok(format!("{} total {total}", census_text(&q)?))
        },
    );
    r.run(
        "isotropic-counts",
        "isotropic and non-isotropic vectors of u+v, u+u+v and u^5",
        "u+v (6,10); u+u+v (28,36); u^5 (528,496)",
        || {
            let uv = F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v());
            let uuv = F2QuadraticSpace::u().power(2).direct_sum(&F2QuadraticSpace::v());
            let u5 = F2QuadraticSpace::u().power(5);
            let f = |s: &F2QuadraticSpace| s.isotropic_census().map(|(a, b)| format!("({a},{b})"));
            Ok(format!("u+v {}; u+u+v {}; u^5 {}", f(&uv)?, f(&uuv)?, f(&u5)?))
        },
    );
    r.run(
        "orthogonal-groups-m",
        "O of the 2-part of q_M is S5; O(q_M) is S5 x Z/2",
        "120,240",
        || {
            let qm = discriminant_form(&m_lattice())?;
            let two = orthogonal_group(&qm.sylow2_restriction()?.to_finite_form())?;
            let full = orthogonal_group(&qm)?;
            Ok(format!("{},{}", two.order(), full.order()))
        },
    );
    r.run(
        "orthogonal-pairs-petersen",
        "orthogonal pairs of non-isotropic vectors of u+v form the Petersen graph",
        "15 pairs, petersen=true",
        || {
            let uv = F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v());
            let p = orthogonal_pairs(&uv)?;
            Ok(format!("{} pairs, petersen={}", p.pairs.len(), p.graph.isomorphism(&Graph::petersen()).is_some()))
        },
    );
    r.run(
        "glue-order-three",
        "an order-3 isotropic subgroup of q_R + q_M has quotient q_L-",
        "found, quotient order 1024",
        || {
            let big = discriminant_form(&e6_2_lattice())?.direct_sum(&discriminant_form(&m_lattice())?);
            let target = discriminant_form(&l_minus_lattice())?;
            Ok(match glue_check(&big, 3, &target)? {
                Some(w) => format!("found, quotient order {}", w.quotient.group_order()),
                None => "none".into(),
            })
        },
    );
    r.run(
        "singular-subspaces-u5",
        "maximal totally singular subspaces of u^5",
        "71145",
        || Ok(enumerate_singular_subspaces(&F2QuadraticSpace::u().power(5))?.len().to_string()),
    );
    if deep {
        r.run(
            "singular-subspace-incidences",
            "each subspace has 16 non-isotropic vectors, each lying in 2295 subspaces",
            "16,2295",
            || {
                let u5 = F2QuadraticSpace::u().power(5);
                let subs = enumerate_singular_subspaces(&u5)?;
                let mut per: BTreeMap<u64, usize> = BTreeMap::new();
                let mut sizes: Vec<usize> = Vec::new();
                for s in &subs {
                    let n = s.non_isotropic_vectors(&u5);
                    sizes.push(n.len());
                    for v in n {
                        *per.entry(v).or_default() += 1;
                    }
                }
                sizes.sort_unstable();
                sizes.dedup();
                let mut counts: Vec<usize> = per.values().copied().collect();
                counts.sort_unstable();
                counts.dedup();
                Ok(format!("{},{}", join(&sizes), join(&counts)))
            },
        );
        let formula = plus_type_orthogonal_order(2, 5).to_string();
        r.run(
            "orthogonal-group-u5",
            "|O(u^5)| equals the order formula for O+(10,2)",
            format!("{formula},{formula}"),
            || {
                let g = orthogonal_group(&FiniteQuadraticForm::u().power(5))?;
                Ok(format!("{},{}", g.order(), g.schreier_sims_order()))
            },
        );
    }
}

fn config_checks(r: &mut Runner, cfg: &Result<CurveConfiguration>) {
    let cfg = match cfg {
        Ok(c) => c,
        Err(e) => {
            let msg = format!("{e}");
            r.run("configuration", "curve configuration builds", "built", || Err(Error::CheckFailed(msg)));
            return;
        }
    };
    r.run("n-invariants", "curve lattice N has rank 16, signature (1,15)", "rank 16, signature (1,15), det 48", || {
        let n = cfg.n_lattice();
        Ok(format!(
            "rank {}, signature ({},{}), det {}",
            n.rank(),
            n.signature().0,
            n.signature().1,
            n.determinant().magnitude()
        ))
    });
    r.run("e6-differences", "six anti-invariant differences span E6(2)", "det 192", || {
        Ok(format!("det {}", e6_complement(cfg)?.determinant))
    });
    r.run("q-n-dual-to-q-m", "q_N is isometric to -q_M with an explicit witness", "witness verified", || {
        let out = cfg.dual_form_isometry()?;
        let qm = discriminant_form(&m_lattice())?;
        Ok(match out.witness() {
            Some(phi) if phi.verify(cfg.discriminant_form(), &qm.negated())? => "witness verified".into(),
            Some(_) => "witness fails".into(),
            None => "not isometric".into(),
        })
    });
    r.run(
        "alpha-classes",
        "the ten alpha vectors pair integrally and hit the ten order-2 q=1 classes",
        "10 distinct, q=1, integral",
        || {
            let alphas = alpha_vectors(cfg)?;
            let (distinct, q_one) = alpha_census(&alphas);
            let integral = alphas
                .iter()
                .all(|a| cfg.curve_pairings(&a.ambient).iter().all(|x| x.is_integer()));
            let tens = cfg.discriminant_form().census()?[&(2, QValue::from_ratio(1, 1))];
            Ok(format!(
                "{distinct} distinct, {}, {}",
                if q_one && tens == distinct { "q=1" } else { "q mismatch" },
                if integral { "integral" } else { "non-integral" }
            ))
        },
    );
    r.run("petersen-quotient", "curves modulo the involution form the Petersen graph", "15 edges, girth 5, 120 automorphisms", || {
        let p = petersen_graph(cfg);
        Ok(format!(
            "{} edges, girth {}, {} automorphisms{}",
            p.edges.len(),
            p.girth.unwrap_or(0),
            p.automorphisms,
            if p.isomorphic_to_petersen { "" } else { ", not Petersen" }
        ))
    });
    r.run("elliptic-classes", "ten genus-one fibre classes with two agreeing expressions", "10", || {
        let mut ok = 0;
        for p in k_subsets(5, 2) {
            if elliptic_class(cfg, p[0] as u8 + 1, p[1] as u8 + 1)?.passes() {
                ok += 1;
            }
        }
        Ok(ok.to_string())
    });
    r.run("pair-correspondence", "index pairs match orthogonality of non-isotropic vectors", "15 orthogonal pairs, isometry-compatible", || {
        let pc = pair_correspondence(cfg)?;
        Ok(format!(
            "{} orthogonal pairs, {}",
            pc.orthogonal_pairs,
            if pc.transported_is_isomorphism { "isometry-compatible" } else { "incompatible" }
        ))
    });
}

fn restriction_checks(r: &mut Runner, cfg: &Result<CurveConfiguration>, deep: bool) {
    let model = match cfg.as_ref().map_err(|e| e.to_string()).and_then(|c| RestrictionModel::new(c).map_err(|e| e.to_string())) {
        Ok(m) => m,
        Err(msg) => {
            r.run("restriction-model", "restriction model builds", "built", || Err(Error::CheckFailed(msg)));
            return;
        }
    };
    r.run("root-bijection", "72 roots of E6(2) give the 36 non-isotropic vectors of (q_R)_2", "72 roots, 36 classes, bijective", || {
        let b = model.roots();
        Ok(format!(
            "{} roots, {} classes, {}",
            b.roots.len(),
            b.sign_classes,
            if b.is_bijection() { "bijective" } else { "not bijective" }
        ))
    });
    r.run("glued-is-u5", "(q_R)_2 + (q_M)_2 is isometric to u^5", "isometric", || {
        let ok = (0u64..1024).all(|x| model.glued().q(x) == model.u5().q(model.to_u5(x)));
        Ok(if ok { "isometric" } else { "not isometric" }.into())
    });
    r.run("singular-subspace-count", "maximal totally singular subspaces of u^5", "71145", || {
        Ok(enumerate_singular_subspaces(model.u5())?.len().to_string())
    });
    let vs: Result<Vec<_>> = {
        let a = model.default_a_triple();
        model.b_pairs().into_iter().map(|b| model.build_v(a, b)).collect()
    };
    let vs = match vs {
        Ok(v) => v,
        Err(e) => {
            let msg = e.to_string();
            r.run("subspaces", "the 15 subspaces build", "built", || Err(Error::CheckFailed(msg)));
            return;
        }
    };
    r.run("weight", "restricted weight = 8 for all 15 subspaces", "weight = 8 x15", || {
        let w = vs.iter().map(|v| model.restricted_weight(v)).collect::<Result<Vec<_>>>()?;
        let mut d = w.clone();
        d.dedup();
        Ok(format!("weight = {} x{}", join(&d), w.len()))
    });
    r.run("classification-census", "4 vanish / 2 cut / 10 miss for every subspace", "4/2/10 x15", || {
        let mut seen = Vec::new();
        for v in &vs {
            let c = model.report(v)?.census;
            let s = format!("{}/{}/{}", c.vanish, c.cut, c.miss);
            if !seen.contains(&s) {
                seen.push(s);
            }
        }
        Ok(format!("{} x{}", seen.join(","), vs.len()))
    });
    r.run("zero-divisor", "zero divisor is H(b1,-1) + H(b2,-1)", "15/15", || {
        let mut ok = 0;
        for v in &vs {
            let z = model.zero_divisor(v)?;
            let mut got: Vec<Vec<u64>> = z.iter().map(|h| h.a.coords().to_vec()).collect();
            let mut want: Vec<Vec<u64>> = v
                .b
                .iter()
                .map(|&b| model.q_m().sylow2_element(b).map(|e| e.coords().to_vec()))
                .collect::<Result<_>>()?;
            got.sort();
            want.sort();
            if got == want && z.iter().all(|h| h.m == BigRational::from_integer((-1).into())) {
                ok += 1;
            }
        }
        Ok(format!("{ok}/{}", vs.len()))
    });
    r.run(
        "order-six-lifts",
        "mixed vectors meet the domain of M only along no-Sylvester divisors",
        "6 per subspace, all m=-1/3",
        || {
            let mut counts = Vec::new();
            for v in &vs {
                let mut n = 0;
                for (_, x) in &v.named {
                    if let RestrictionClass::MissesDM { met_divisors, .. } = model.classify(*x)? {
                        if met_divisors.iter().any(|d| d.m != "-1/3") {
                            return Ok("unexpected norm".into());
                        }
                        n += met_divisors.len();
                    }
                }
                counts.push(n);
            }
            counts.dedup();
            Ok(format!("{} per subspace, all m=-1/3", join(&counts)))
        },
    );
    r.run("quadrics", "each subspace gives a distinct quadric (l_i-l_j)(l_k-l_l) from the 15", "15 distinct", || {
        let segre: Vec<_> = segre_quadrics().into_iter().map(|q| q.2).collect();
        let mut seen = Vec::new();
        for v in &vs {
            let q = model.quadric_of(v)?;
            if !segre.contains(&q.polynomial) {
                return Ok(format!("{} not in the system", q.polynomial));
            }
            if !seen.contains(&(q.first, q.second)) {
                seen.push((q.first, q.second));
            }
        }
        Ok(format!("{} distinct", seen.len()))
    });
    r.run("weight-four-facts", "lattice facts behind the weight-4 restriction", "pass", || {
        let p = phi4_restriction_check()?;
        Ok(if p.passes() { "pass".into() } else { format!("{p:?}") })
    });
    if deep {
        r.run("all-triples", "census and weight are independent of the choice of a-triple", "4/2/10, weight 8", || {
            let mut seen = Vec::new();
            for a in model.a_triples() {
                for b in model.b_pairs() {
                    let rep = model.report(&model.build_v(a, b)?)?;
                    let s = format!("{}/{}/{}, weight {}", rep.census.vanish, rep.census.cut, rep.census.miss, rep.weight);
                    if !seen.contains(&s) {
                        seen.push(s);
                    }
                }
            }
            Ok(seen.join("; "))
        });
    }
}

fn sylvester_checks(r: &mut Runner) {
    let sample = [[1, 1, 1, 1, 1], [1, 2, 3, 4, 5], [1, 1, 2, 3, 5]];
    r.run("hessian-identity", "Hess(F) is proportional to the cleared reciprocal quartic", "1296,1296,1296", || {
        let c = sample
            .iter()
            .map(|l| verify_hessian_identity(&sylvester_cubic(&lambda_from_ints(l))?))
            .collect::<Result<Vec<_>>>()?;
        Ok(join(&c))
    });
    r.run("nodes-and-lines", "ten nodes x_i=x_j=x_k=0 and ten lines x_m=x_n=0 on the Hessian", "pass,pass,pass", || {
        let v = sample
            .iter()
            .map(|l| Ok(if singular_locus_check(&sylvester_cubic(&lambda_from_ints(l))?)?.passes() { "pass" } else { "fail" }))
            .collect::<Result<Vec<_>>>()?;
        Ok(v.join(","))
    });
    r.run("delta-sing", "extra singularities: vanishes at (4,4,4,4,1) only", "(4,4,4,4,1)=0 (1,1,1,1,1)!=0 (1,2,3,4,5)!=0", || {
        let f = |l: &[i64]| -> Result<&'static str> {
            Ok(if delta_sing(&lambda_from_ints(l))?.vanishes { "=0" } else { "!=0" })
        };
        Ok(format!(
            "(4,4,4,4,1){} (1,1,1,1,1){} (1,2,3,4,5){}",
            f(&[4, 4, 4, 4, 1])?,
            f(&[1, 1, 1, 1, 1])?,
            f(&[1, 2, 3, 4, 5])?
        ))
    });
    r.run("eckardt-sections", "x_i+x_j=0 cuts 2 l_ij plus two lines through the opposite node", "(1,1,2,3,5):pass (2,3,1,1,5):pass (1,2,3,4,5):no", || {
        let e = |l: &[i64], i, j| -> Result<bool> { Ok(eckardt_section(&sylvester_cubic(&lambda_from_ints(l))?, i, j)?.passes()) };
        let a = e(&[1, 1, 2, 3, 5], 1, 2)?;
        let b = e(&[2, 3, 1, 1, 5], 3, 4)?;
        let c = e(&[1, 2, 3, 4, 5], 1, 2)?;
        let w = |x: bool| if x { "pass" } else { "no" };
        Ok(format!("(1,1,2,3,5):{} (2,3,1,1,5):{} (1,2,3,4,5):{}", w(a), w(b), w(c)))
    });
    r.run("segre-relations", "the 15 quadrics span 5 dimensions and satisfy the Segre cubic relations", "span 5, linear ok, cubic ok", || {
        let s = segre_system()?;
        let ok = |b: bool| if b { "ok" } else { "fails" };
        Ok(format!(
            "span {}, linear {}, cubic {}",
            s.span_dimension,
            ok(s.linear_relation_holds),
            ok(s.cubic_relation_holds)
        ))
    });
    r.run("segre-base-locus", "base locus: the five four-equal lines, no three-equal plane", "5 lines, 0 planes", || {
        let s = segre_system()?;
        let lines = s.base_locus_partitions.iter().filter(|p| p.len() == 2).count();
        Ok(format!("{lines} lines, {} planes", s.three_equal_planes_in_base_locus))
    });
    r.run("quadric-zeros", "vanishing quadrics at (1,1,2,3,5) and (1,2,3,4,5)", "3,0", || {
        let zeros = |l: &[i64]| -> Result<usize> {
            Ok(evaluate_quadrics(&lambda_from_ints(l))?.iter().filter(|q| q.value == "0").count())
        };
        Ok(format!("{},{}", zeros(&[1, 1, 2, 3, 5])?, zeros(&[1, 2, 3, 4, 5])?))
    });
}
