//! Restricting the weight-4 forms attached to singular subspaces of `u^5`
//! to the period domain of M.
//!
//! The domains are never modelled analytically. Every "vanishes", "cuts" or
//! "misses" verdict is a statement about lattice norms: a `(-4)`-vector `t`
//! of `L_-` with `t/2 = x_R + x_M` (`x_R` in `R*`, `x_M` in `M*`) meets the
//! domain of M only if `x_M^2 < 0`, and `x_M^2 = -1 - x_R^2`. The module
//! verifies the bounds on `x_R^2` by enumeration and classifies from them.
//!
//! Lifts `r/2` with `r` in R never leave `x_M^2 < 0` for mixed vectors. Lifts
//! whose R-class also has a 3-part can: for an isotropic R-part they reach
//! `x_R^2 = -2/3`, so `x_M^2 = -1/3` and the hyperplane meets the domain of M
//! along a Heegner divisor with `q = m = -1/3`. Those divisors are removed
//! from the open domain, so "misses" refers to that open domain, and every
//! such excursion is listed and checked.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::config::{pair_correspondence, CurveConfiguration, PairCorrespondence};
use crate::error::{Error, Result};
use crate::finquad::{
    discriminant_form, discriminant_group, glue_check, is_isomorphic, DiscElement,
    DiscriminantGroup, F2QuadraticSpace, FiniteQuadraticForm, GlueWitness, IsoOutcome, Isometry,
    QValue, SingularSubspace,
};
use crate::lattice::{e6_2_lattice, l_minus_lattice, m_lattice, Lattice};
use crate::poly::SparsePolynomial;
use crate::sylvester::pair_quadric;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The label `(a, m)` of a Heegner divisor on the domain of M.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeegnerLabel {
    pub a: DiscElement,
    pub m: BigRational,
}

impl HeegnerLabel {
    /// Requires `m < 0` and `q_M(a) = m mod 2`.
    pub fn new(a: DiscElement, m: BigRational) -> Result<Self> {
        if !m.is_negative() {
            return Err(Error::InvalidParameters(format!("norm {m} is not negative")));
        }
        if a.q() != &QValue::new(&m) {
            return Err(Error::InvalidParameters(format!(
                "q(a) = {} is not congruent to {m} mod 2",
                a.q()
            )));
        }
        Ok(HeegnerLabel { a, m })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HeegnerTag {
    Node,
    Eckardt,
    NoSylvester,
    OutsideClassification,
}

/// Geometric meaning of a Heegner divisor for the three known labels.
pub fn heegner_classify(a: &DiscElement, m: &BigRational) -> HeegnerTag {
    if a.is_zero() && *m == rat(-2, 1) {
        HeegnerTag::Node
    } else if a.order() == 2 && a.q() == &QValue::from_ratio(1, 1) && *m == rat(-1, 1) {
        HeegnerTag::Eckardt
    } else if a.q() == &QValue::from_ratio(-1, 3) && *m == rat(-1, 3) {
        HeegnerTag::NoSylvester
    } else {
        HeegnerTag::OutsideClassification
    }
}

/// The `(-4)`-vectors of R and their classes `r/2 mod R` in `(q_R)_2`.
#[derive(Clone, Debug, Serialize)]
pub struct RootBijection {
    #[serde(skip)]
    pub roots: Vec<Vec<BigInt>>,
    /// F2 vector of `r/2 mod R` for each root.
    pub root_vectors: Vec<u64>,
    pub sign_classes: usize,
    pub constant_on_sign_pairs: bool,
    pub injective_on_sign_classes: bool,
    pub image_is_all_non_isotropic: bool,
}

impl RootBijection {
    pub fn is_bijection(&self) -> bool {
        self.constant_on_sign_pairs && self.injective_on_sign_classes && self.image_is_all_non_isotropic
    }

    /// Roots lying over an F2 vector.
    pub fn roots_over(&self, v: u64) -> usize {
        self.root_vectors.iter().filter(|&&x| x == v).count()
    }
}

pub fn root_discriminant_bijection(r: &Lattice) -> Result<RootBijection> {
    let disc = discriminant_group(r)?;
    let form = disc.form();
    let space = form.sylow2_restriction()?;
    let roots = r.short_vectors(&BigInt::from(-4))?;
    let mut root_vectors = Vec::with_capacity(roots.len());
    for x in &roots {
        root_vectors.push(half_class(&disc, x)?);
    }
    let index: BTreeMap<&Vec<BigInt>, usize> = roots.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut constant = true;
    let mut class_images = Vec::new();
    for (i, x) in roots.iter().enumerate() {
        let neg: Vec<BigInt> = x.iter().map(|t| -t).collect();
        match index.get(&neg) {
            Some(&j) => constant &= root_vectors[i] == root_vectors[j],
            None => constant = false,
        }
        if x.iter().find(|t| !t.is_zero()).is_some_and(|t| t.is_positive()) {
            class_images.push(root_vectors[i]);
        }
    }
    let sign_classes = class_images.len();
    let mut distinct = class_images.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let mut targets = space.non_isotropic_vectors();
    targets.sort_unstable();
    Ok(RootBijection {
        roots,
        root_vectors,
        sign_classes,
        constant_on_sign_pairs: constant,
        injective_on_sign_classes: distinct.len() == sign_classes,
        image_is_all_non_isotropic: distinct == targets,
    })
}

/// F2 vector of `x/2 mod R` for `x` in R.
fn half_class(disc: &DiscriminantGroup, x: &[BigInt]) -> Result<u64> {
    let half: Vec<BigRational> = x.iter().map(|t| BigRational::new(t.clone(), BigInt::from(2))).collect();
    let c = disc.class_of_dual_vector(&half)?;
    disc.form()
        .sylow2_vector(&c)?
        .ok_or_else(|| Error::CheckFailed("half-vector class is not 2-torsion".into()))
}

/// Norms of nonzero vectors of `R*` above a bound, grouped by 2-part of
/// their class and by whether the class has a nonzero 3-part.
#[derive(Clone, Debug, Serialize)]
pub struct DualNormProfile {
    /// Norms at or above this value were enumerated exhaustively.
    pub bound: String,
    /// `(2-part, has 3-part)` to the distinct norms found, largest first.
    pub norms: BTreeMap<(u64, bool), Vec<String>>,
    #[serde(skip)]
    exact: BTreeMap<(u64, bool), BTreeSet<BigRational>>,
}

impl DualNormProfile {
    /// Largest norm over nonzero lifts with the given 2-part and any 3-part,
    /// `None` when every lift lies below the bound.
    pub fn max_over(&self, two_part: u64) -> Option<BigRational> {
        [false, true]
            .iter()
            .filter_map(|&t| self.max_exact(two_part, t))
            .max()
            .cloned()
    }

    pub fn max_exact(&self, two_part: u64, has_three_part: bool) -> Option<&BigRational> {
        self.exact.get(&(two_part, has_three_part)).and_then(|s| s.last())
    }

    /// Distinct norms strictly above `floor` for one key, largest first.
    pub fn norms_above(&self, two_part: u64, has_three_part: bool, floor: &BigRational) -> Vec<BigRational> {
        self.exact
            .get(&(two_part, has_three_part))
            .map(|s| s.iter().rev().filter(|n| *n > floor).cloned().collect())
            .unwrap_or_default()
    }
}

/// Enumerates nonzero `x` in `R*` with `x^2 >= -bound` through the integral
/// model `den G^-1` in dual-basis coordinates.
pub fn dual_norm_profile(r: &Lattice, bound: &BigRational) -> Result<DualNormProfile> {
    let disc = discriminant_group(r)?;
    let form = disc.form();
    let inv = r
        .gram()
        .to_rational()
        .inverse()
        .ok_or_else(|| Error::Precondition("degenerate lattice".into()))?;
    let den = inv.common_denominator();
    let scaled = inv.scaled_to_integer(&den).expect("common denominator clears");
    let model = Lattice::new(scaled)?;
    let den_r = BigRational::from_integer(den.clone());
    let limit = (bound * &den_r).floor().to_integer();
    if form.orders().iter().any(|&d| 6 % d != 0) {
        return Err(Error::Precondition("discriminant group exponent does not divide 6".into()));
    }
    let mut exact: BTreeMap<(u64, bool), BTreeSet<BigRational>> = BTreeMap::new();
    let mut err = None;
    model.for_each_vector_within(&limit, |y, n| {
        let norm = -BigRational::from_integer(n.clone()) / &den_r;
        let c = disc.class_of_pairings(y);
        let two = form.scale(3, &c);
        let odd = form.scale(4, &c);
        match form.sylow2_vector(&two) {
            Ok(Some(bits)) => {
                exact.entry((bits, !odd.is_zero())).or_default().insert(norm);
            }
            Ok(None) => err = Some(Error::CheckFailed("2-part outside the 2-Sylow subgroup".into())),
            Err(e) => err = Some(e),
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(DualNormProfile {
        bound: (-bound).to_string(),
        norms: exact
            .iter()
            .map(|(k, v)| (*k, v.iter().rev().map(ToString::to_string).collect()))
            .collect(),
        exact,
    })
}

/// A Heegner divisor of the domain of M met by a hyperplane `t^perp`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetDivisor {
    /// Norm of the R-component of `t/2`.
    pub r_norm: String,
    /// Norm `m` of the M-component, negative.
    pub m: String,
    /// Whether the M-component class has a nonzero 3-part.
    pub order_six: bool,
    pub tag: HeegnerTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RestrictionClass {
    /// Pure R-part: the divisor contains the domain of M.
    VanishesOnDM,
    /// Pure M-part: the divisor cuts the Heegner divisor `H_{b,-1}`.
    CutsHeegner { b: u64 },
    /// Mixed: the divisor misses the open domain, the complement of the
    /// node and no-Sylvester Heegner divisors.
    MissesDM {
        r_part_isotropic: bool,
        /// Largest `x_R^2` over lifts `r/2` with `r` in R.
        max_r_norm: String,
        /// Resulting lower bound on `x_M^2` for those lifts.
        min_m_norm: String,
        /// `min_m_norm > 0`: those lifts also miss the boundary.
        misses_boundary: bool,
        /// Largest `x_R^2` over all lifts in `R*`, 3-parts included.
        max_r_norm_any_lift: String,
        /// Heegner divisors met by lifts with negative `x_M^2`; all lie in
        /// the removed no-Sylvester locus.
        met_divisors: Vec<MetDivisor>,
    },
}

/// `(q_R)_2`, `(q_M)_2` and their glued sum as a model of `u^5`.
#[derive(Clone, Debug)]
pub struct RestrictionModel {
    r: Lattice,
    q_r: FiniteQuadraticForm,
    q_m: FiniteQuadraticForm,
    r2: F2QuadraticSpace,
    m2: F2QuadraticSpace,
    glued: F2QuadraticSpace,
    u5: F2QuadraticSpace,
    to_u5: Isometry,
    glue: GlueWitness,
    roots: RootBijection,
    profile: DualNormProfile,
    correspondence: PairCorrespondence,
}

/// Bits of `(q_R)_2` occupy the low 6 positions of the glued space.
pub const R_BITS: u32 = 6;
const R_MASK: u64 = (1 << R_BITS) - 1;

impl RestrictionModel {
    pub fn new(cfg: &CurveConfiguration) -> Result<Self> {
        let r = e6_2_lattice();
        let q_r = discriminant_form(&r)?;
        let q_m = discriminant_form(&m_lattice())?;
        let r2 = q_r.sylow2_restriction()?;
        let m2 = q_m.sylow2_restriction()?;
        let glued = r2.direct_sum(&m2);
        let u5 = F2QuadraticSpace::u().power(5);
        let to_u5 = match is_isomorphic(&glued.to_finite_form(), &u5.to_finite_form())? {
            IsoOutcome::Isomorphic(phi) => phi,
            IsoOutcome::NotIsomorphic(o) => {
                return Err(Error::CheckFailed(format!("glued 2-part is not u^5: {o:?}")))
            }
        };
        let q_l = discriminant_form(&l_minus_lattice())?;
        let glue = glue_check(&q_r.direct_sum(&q_m), 3, &q_l)?
            .ok_or_else(|| Error::CheckFailed("no order-3 glue onto q_L-".into()))?;
        let roots = root_discriminant_bijection(&r)?;
        let profile = dual_norm_profile(&r, &rat(2, 1))?;
        let correspondence = pair_correspondence(cfg)?;
        Ok(RestrictionModel {
            r,
            q_r,
            q_m,
            r2,
            m2,
            glued,
            u5,
            to_u5,
            glue,
            roots,
            profile,
            correspondence,
        })
    }

    pub fn r_lattice(&self) -> &Lattice {
        &self.r
    }

    pub fn q_r(&self) -> &FiniteQuadraticForm {
        &self.q_r
    }

    pub fn q_m(&self) -> &FiniteQuadraticForm {
        &self.q_m
    }

    pub fn r2(&self) -> &F2QuadraticSpace {
        &self.r2
    }

    pub fn m2(&self) -> &F2QuadraticSpace {
        &self.m2
    }

    /// `(q_R)_2 + (q_M)_2`, R bits low.
    pub fn glued(&self) -> &F2QuadraticSpace {
        &self.glued
    }

    pub fn glue_witness(&self) -> &GlueWitness {
        &self.glue
    }

    pub fn roots(&self) -> &RootBijection {
        &self.roots
    }

    pub fn profile(&self) -> &DualNormProfile {
        &self.profile
    }

    pub fn correspondence(&self) -> &PairCorrespondence {
        &self.correspondence
    }

    pub fn embed_r(&self, a: u64) -> u64 {
        a & R_MASK
    }

    pub fn embed_m(&self, b: u64) -> u64 {
        b << R_BITS
    }

    /// Image of a glued vector in the standard `u^5`.
    pub fn to_u5(&self, v: u64) -> u64 {
        let form = self.u5.to_finite_form();
        let coords: Vec<i64> = (0..10).map(|i| (v >> i & 1) as i64).collect();
        let x = self.glued.to_finite_form().element(&coords).expect("valid coordinates");
        let y = self.to_u5.apply(&form, &x);
        y.coords().iter().enumerate().fold(0, |acc, (i, &c)| acc | (c & 1) << i)
    }

    pub fn u5(&self) -> &F2QuadraticSpace {
        &self.u5
    }

    /// Mutually orthogonal non-isotropic triples of `(q_R)_2`, sorted.
    pub fn a_triples(&self) -> Vec<[u64; 3]> {
        let n = self.r2.non_isotropic_vectors();
        let mut out = Vec::new();
        for (i, &x) in n.iter().enumerate() {
            for (j, &y) in n.iter().enumerate().skip(i + 1) {
                if self.r2.b(x, y) {
                    continue;
                }
                for &z in &n[j + 1..] {
                    if !self.r2.b(x, z) && !self.r2.b(y, z) {
                        out.push([x, y, z]);
                    }
                }
            }
        }
        out
    }

    pub fn default_a_triple(&self) -> [u64; 3] {
        self.a_triples()[0]
    }

    /// Orthogonal pairs of non-isotropic vectors of `(q_M)_2`.
    pub fn b_pairs(&self) -> Vec<[u64; 2]> {
        let n = self.m2.non_isotropic_vectors();
        let mut out = Vec::new();
        for (i, &x) in n.iter().enumerate() {
            for &y in &n[i + 1..] {
                if !self.m2.b(x, y) {
                    out.push([x, y]);
                }
            }
        }
        out
    }

    pub fn build_v(&self, a: [u64; 3], b: [u64; 2]) -> Result<BuiltSubspace> {
        for &x in &a {
            if x > R_MASK || !self.r2.q(x) {
                return Err(Error::Precondition(format!("a = {x:#b} is not non-isotropic in (q_R)_2")));
            }
        }
        for &y in &b {
            if y >> 4 != 0 || !self.m2.q(y) {
                return Err(Error::Precondition(format!("b = {y:#b} is not non-isotropic in (q_M)_2")));
            }
        }
        let gens: Vec<u64> = a
            .iter()
            .map(|&x| self.embed_r(x))
            .chain(b.iter().map(|&y| self.embed_m(y)))
            .collect();
        for i in 0..5 {
            for j in i + 1..5 {
                if self.glued.b(gens[i], gens[j]) {
                    return Err(Error::Precondition(format!("generators {i} and {j} are not orthogonal")));
                }
            }
        }
        let subspace = SingularSubspace::from_generators(&self.glued, &gens)?;
        let names = ["a1", "a2", "a3", "b1", "b2"];
        let mut named = Vec::new();
        for mask in 1u32..32 {
            if mask.count_ones() % 2 == 0 {
                continue;
            }
            let v = (0..5).filter(|i| mask >> i & 1 == 1).fold(0, |acc, i| acc ^ gens[i]);
            let name: Vec<&str> = (0..5).filter(|i| mask >> i & 1 == 1).map(|i| names[i]).collect();
            named.push((name.join("+"), v));
        }
        let mut listed: Vec<u64> = named.iter().map(|x| x.1).collect();
        listed.sort_unstable();
        let mut actual = subspace.non_isotropic_vectors(&self.glued);
        actual.sort_unstable();
        if listed != actual {
            return Err(Error::CheckFailed("odd subsets do not give the non-isotropic vectors".into()));
        }
        Ok(BuiltSubspace { a, b, subspace, named })
    }

    pub fn classify(&self, v: u64) -> Result<RestrictionClass> {
        if !self.glued.q(v) {
            return Err(Error::Precondition("vector is isotropic".into()));
        }
        let r_part = v & R_MASK;
        let m_part = v >> R_BITS;
        if m_part == 0 {
            return Ok(RestrictionClass::VanishesOnDM);
        }
        if r_part == 0 {
            return Ok(RestrictionClass::CutsHeegner { b: m_part });
        }
        let pure = self.profile.max_exact(r_part, false).cloned().ok_or_else(|| {
            Error::CheckFailed("no lift above the enumeration bound; bound too small".into())
        })?;
        let any = self.profile.max_over(r_part).expect("pure lift exists");
        let min_m = -BigRational::one() - &pure;
        if min_m.is_negative() {
            return Err(Error::CheckFailed(format!(
                "lift r/2 of norm {pure} leaves a negative M-part"
            )));
        }
        let minus_one = -BigRational::one();
        let mut met = Vec::new();
        for three in [false, true] {
            for n in self.profile.norms_above(r_part, three, &minus_one) {
                let m = &minus_one - &n;
                let mut class = self.q_m.sylow2_element(m_part)?;
                if three {
                    class = self.q_m.add(&class, &self.glue_partner_m()?);
                }
                let tag = heegner_classify(&class, &m);
                if tag != HeegnerTag::NoSylvester {
                    return Err(Error::CheckFailed(format!(
                        "lift of norm {n} meets H({:?}, {m}), tagged {tag:?}",
                        class.coords()
                    )));
                }
                met.push(MetDivisor {
                    r_norm: n.to_string(),
                    m: m.to_string(),
                    order_six: three,
                    tag,
                });
            }
        }
        Ok(RestrictionClass::MissesDM {
            r_part_isotropic: !self.r2.q(r_part),
            max_r_norm: pure.to_string(),
            min_m_norm: min_m.to_string(),
            misses_boundary: min_m.is_positive(),
            max_r_norm_any_lift: any.to_string(),
            met_divisors: met,
        })
    }

    /// M-component of the order-3 glue generator. Lifts of R* with a 3-part
    /// pair with M*-vectors whose 3-part is this class up to sign.
    pub fn glue_partner_m(&self) -> Result<DiscElement> {
        let k = self.q_r.rank();
        let coords: Vec<i64> = self.glue.generator.coords()[k..].iter().map(|&c| c as i64).collect();
        self.q_m.element(&coords)
    }

    /// `4 + (number of roots over the vanishing vectors) / 2`.
    pub fn restricted_weight(&self, v: &BuiltSubspace) -> Result<u32> {
        let mut count = 0usize;
        for (_, x) in &v.named {
            if self.classify(*x)? == RestrictionClass::VanishesOnDM {
                count += self.roots.roots_over(x & R_MASK);
            }
        }
        if count % 2 != 0 {
            return Err(Error::CheckFailed("odd number of roots".into()));
        }
        Ok(4 + (count / 2) as u32)
    }

    /// Heegner divisors cut by the vectors of V.
    pub fn zero_divisor(&self, v: &BuiltSubspace) -> Result<Vec<HeegnerLabel>> {
        let mut out = Vec::new();
        for (_, x) in &v.named {
            if let RestrictionClass::CutsHeegner { b } = self.classify(*x)? {
                out.push(HeegnerLabel::new(self.q_m.sylow2_element(b)?, rat(-1, 1))?);
            }
        }
        Ok(out)
    }

    pub fn quadric_of(&self, v: &BuiltSubspace) -> Result<Quadric> {
        let p = self
            .correspondence
            .pair_of(v.b[0])
            .ok_or_else(|| Error::CheckFailed("b1 has no index pair".into()))?;
        let q = self
            .correspondence
            .pair_of(v.b[1])
            .ok_or_else(|| Error::CheckFailed("b2 has no index pair".into()))?;
        if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
            return Err(Error::CheckFailed(format!("index pairs {p:?} and {q:?} overlap")));
        }
        let (first, second) = if p < q { (p, q) } else { (q, p) };
        Ok(Quadric {
            first,
            second,
            polynomial: pair_quadric(first, second),
        })
    }

    /// Full per-V report.
    pub fn report(&self, v: &BuiltSubspace) -> Result<SubspaceReport> {
        let mut census = RestrictionCensus::default();
        let mut vectors = Vec::new();
        for (name, x) in &v.named {
            let class = self.classify(*x)?;
            match class {
                RestrictionClass::VanishesOnDM => census.vanish += 1,
                RestrictionClass::CutsHeegner { .. } => census.cut += 1,
                RestrictionClass::MissesDM { .. } => census.miss += 1,
            }
            vectors.push(VectorReport {
                name: name.clone(),
                vector: *x,
                u5_image: self.to_u5(*x),
                class,
            });
        }
        let weight = self.restricted_weight(v)?;
        let zero = self.zero_divisor(v)?;
        let quadric = self.quadric_of(v)?;
        Ok(SubspaceReport {
            a: v.a,
            b: v.b,
            fingerprint: v.subspace.fingerprint().to_string(),
            u5_image_singular: self.image_is_singular(v),
            vectors,
            census,
            weight,
            zero_divisor: zero
                .iter()
                .map(|h| format!("H({:?}, {})", h.a.coords(), h.m))
                .collect(),
            quadric: (quadric.first, quadric.second),
            quadric_text: quadric.polynomial.to_string(),
        })
    }

    /// Whether the image of V in the standard `u^5` is again a singular subspace.
    pub fn image_is_singular(&self, v: &BuiltSubspace) -> bool {
        let gens: Vec<u64> = v.subspace.generators().iter().map(|&g| self.to_u5(g)).collect();
        SingularSubspace::from_generators(&self.u5, &gens).is_ok_and(|s| s.satisfies_invariants(&self.u5))
    }
}

/// A subspace V built from `(a1, a2, a3, b1, b2)` with its 16 named vectors.
#[derive(Clone, Debug)]
pub struct BuiltSubspace {
    pub a: [u64; 3],
    pub b: [u64; 2],
    pub subspace: SingularSubspace,
    /// `(name, glued vector)` for the odd subsets of the generators.
    pub named: Vec<(String, u64)>,
}

#[derive(Clone, Debug)]
pub struct Quadric {
    pub first: (u8, u8),
    pub second: (u8, u8),
    pub polynomial: SparsePolynomial,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RestrictionCensus {
    pub vanish: usize,
    pub cut: usize,
    pub miss: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VectorReport {
    pub name: String,
    pub vector: u64,
    pub u5_image: u64,
    pub class: RestrictionClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubspaceReport {
    pub a: [u64; 3],
    pub b: [u64; 2],
    pub fingerprint: String,
    pub u5_image_singular: bool,
    pub vectors: Vec<VectorReport>,
    pub census: RestrictionCensus,
    pub weight: u32,
    pub zero_divisor: Vec<String>,
    pub quadric: ((u8, u8), (u8, u8)),
    pub quadric_text: String,
}

/// Lattice facts behind the weight-4 restriction of the form vanishing on
/// the `(-2)`-vectors.
#[derive(Clone, Debug, Serialize)]
pub struct Phi4Report {
    pub r_has_no_minus_two_vectors: bool,
    pub r_has_no_minus_six_vectors: bool,
    pub index_squared: String,
    pub order_three_q_m: Vec<String>,
    pub order_three_q_r: Vec<String>,
    /// Vectors of `R*` in order-3 classes with norm above `-8/3`.
    pub order_three_lifts_above_bound: usize,
    /// Largest norm of a vector of `R*` in an order-3 class.
    pub order_three_max_norm: Option<String>,
}

impl Phi4Report {
    pub fn passes(&self) -> bool {
        self.r_has_no_minus_two_vectors
            && self.r_has_no_minus_six_vectors
            && self.index_squared == "9"
            && self.order_three_q_m.iter().all(|q| q == "2/3")
            && self.order_three_q_m.len() == 2
            && self.order_three_q_r.iter().all(|q| q == "4/3")
            && self.order_three_q_r.len() == 2
            && self.order_three_lifts_above_bound == 0
    }
}

pub fn phi4_restriction_check() -> Result<Phi4Report> {
    let r = e6_2_lattice();
    let m = m_lattice();
    let l = l_minus_lattice();
    let ratio = BigRational::new(m.determinant() * r.determinant(), l.determinant().clone());
    let order_three = |f: &FiniteQuadraticForm| -> Result<Vec<String>> {
        Ok(f.elements()?
            .iter()
            .filter(|x| x.order() == 3)
            .map(|x| x.q().to_string())
            .collect())
    };
    let q_r = discriminant_form(&r)?;
    let q_m = discriminant_form(&m)?;
    let bound = rat(-8, 3);
    let disc = discriminant_group(&r)?;
    let inv = r.gram().to_rational().inverse().expect("definite");
    let den = inv.common_denominator();
    let model = Lattice::new(inv.scaled_to_integer(&den).expect("integral"))?;
    let den_r = BigRational::from_integer(den.clone());
    let mut above = 0usize;
    let mut best: Option<BigRational> = None;
    model.for_each_vector_within(&(&bound * &den_r).abs().to_integer(), |y, n| {
        let c = disc.class_of_pairings(y);
        if c.order() == 3 {
            let norm = -BigRational::from_integer(n.clone()) / &den_r;
            if norm > bound {
                above += 1;
            }
            if best.as_ref().is_none_or(|b| norm > *b) {
                best = Some(norm);
            }
        }
    })?;
    Ok(Phi4Report {
        r_has_no_minus_two_vectors: r.short_vectors(&BigInt::from(-2))?.is_empty(),
        r_has_no_minus_six_vectors: r.short_vectors(&BigInt::from(-6))?.is_empty(),
        index_squared: ratio.to_string(),
        order_three_q_m: order_three(&q_m)?,
        order_three_q_r: order_three(&q_r)?,
        order_three_lifts_above_bound: above,
        order_three_max_norm: best.map(|b| b.to_string()),
    })
}
