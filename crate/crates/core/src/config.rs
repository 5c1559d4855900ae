//! The twenty nodal curves on the Hessian quartic: ten exceptional curves
//! `E_ijk` over the nodes and ten lines `L_mn`, their lattice `N`, the
//! `E6(2)` span of anti-invariant differences, the Petersen quotient graph,
//! the elliptic classes `F_ij` and the half-classes `alpha_ij`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finquad::{
    discriminant_form, discriminant_group, is_isomorphic, orthogonal_pairs, DiscElement,
    DiscriminantGroup, FiniteQuadraticForm, IsoOutcome, Isometry, QValue,
};
use crate::graph::{k_subsets, Graph};
use crate::lattice::{e6_2_lattice, m_lattice, Lattice};
use crate::linalg::{determinant, inertia, kernel_basis, IntMatrix};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum CurveKind {
    E,
    L,
}

/// `E_ijk` (three indices) or `L_mn` (two indices), indices in `1..=5`, sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct CurveLabel {
    pub kind: CurveKind,
    pub indices: Vec<u8>,
}

impl CurveLabel {
    pub fn new(kind: CurveKind, indices: &[u8]) -> Result<Self> {
        let want = match kind {
            CurveKind::E => 3,
            CurveKind::L => 2,
        };
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.len() != want || indices.len() != want || idx.iter().any(|&i| !(1..=5).contains(&i)) {
            return Err(Error::InvalidParameters(format!(
                "{kind:?} label needs {want} distinct indices in 1..5, got {indices:?}"
            )));
        }
        Ok(CurveLabel { kind, indices: idx })
    }

    pub fn e(i: u8, j: u8, k: u8) -> Self {
        CurveLabel::new(CurveKind::E, &[i, j, k]).expect("valid E label")
    }

    pub fn l(m: u8, n: u8) -> Self {
        CurveLabel::new(CurveKind::L, &[m, n]).expect("valid L label")
    }

    /// The label with the complementary index set and the other kind.
    pub fn complement(&self) -> Self {
        let rest: Vec<u8> = (1..=5).filter(|i| !self.indices.contains(i)).collect();
        let kind = match self.kind {
            CurveKind::E => CurveKind::L,
            CurveKind::L => CurveKind::E,
        };
        CurveLabel { kind, indices: rest }
    }

    /// Image under a permutation of `1..=5` (`perm[i-1]` is the image of `i`).
    pub fn permuted(&self, perm: &[u8; 5]) -> Self {
        let mut indices: Vec<u8> = self.indices.iter().map(|&i| perm[i as usize - 1]).collect();
        indices.sort_unstable();
        CurveLabel { kind: self.kind, indices }
    }

    /// Intersection number of two curves.
    pub fn intersection(&self, other: &CurveLabel) -> i64 {
        if self == other {
            return -2;
        }
        match (self.kind, other.kind) {
            (CurveKind::E, CurveKind::L) => other.indices.iter().all(|i| self.indices.contains(i)) as i64,
            (CurveKind::L, CurveKind::E) => self.indices.iter().all(|i| other.indices.contains(i)) as i64,
            _ => 0,
        }
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            CurveKind::E => "E",
            CurveKind::L => "L",
        };
        write!(f, "{k}")?;
        for i in &self.indices {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// A class in `N ⊗ Q`, as rational coefficients on the 20 curves.
pub type CurveClass = Vec<BigRational>;

/// The 20 curves with their intersection matrix and the lattice `N` they span.
#[derive(Clone, Debug)]
pub struct CurveConfiguration {
    labels: Vec<CurveLabel>,
    matrix: IntMatrix,
    sigma: Vec<usize>,
    basis: Vec<usize>,
    coordinates: Vec<Vec<BigInt>>,
    n: Lattice,
    disc: DiscriminantGroup,
}

/// Labels in a fixed order: `E_ijk` lexicographically, then `L_mn` lexicographically.
pub fn curve_labels() -> Vec<CurveLabel> {
    let mut out: Vec<CurveLabel> = k_subsets(5, 3)
        .iter()
        .map(|s| CurveLabel::e(s[0] as u8 + 1, s[1] as u8 + 1, s[2] as u8 + 1))
        .collect();
    out.extend(k_subsets(5, 2).iter().map(|s| CurveLabel::l(s[0] as u8 + 1, s[1] as u8 + 1)));
    out
}

pub fn build_configuration() -> Result<CurveConfiguration> {
    let labels = curve_labels();
    let matrix = IntMatrix::from_fn(20, 20, |i, j| labels[i].intersection(&labels[j]));
    let sigma: Vec<usize> = labels
        .iter()
        .map(|l| {
            let c = l.complement();
            labels.iter().position(|x| *x == c).expect("complement label exists")
        })
        .collect();
    let ine = inertia(&matrix)?;
    if ine.signature() != (1, 15) || ine.zero != 4 {
        return Err(Error::CheckFailed(format!(
            "intersection matrix has inertia {ine:?}, expected (1, 15) with rank 16"
        )));
    }
    let kernel = kernel_basis(&matrix);
    let basis = select_basis(&kernel)?;
    let gram = matrix.submatrix(&basis, &basis);
    let inv = gram
        .to_rational()
        .inverse()
        .ok_or_else(|| Error::CheckFailed("basis Gram matrix is singular".into()))?;
    let mut coordinates = Vec::with_capacity(20);
    for c in 0..20 {
        let p: Vec<BigRational> = basis
            .iter()
            .map(|&b| BigRational::from_integer(matrix.get(c, b).clone()))
            .collect();
        let x = inv.mul_vec(&p);
        if x.iter().any(|t| !t.is_integer()) {
            return Err(Error::CheckFailed(format!("{} is not integral in the basis", labels[c])));
        }
        coordinates.push(x.into_iter().map(|t| t.to_integer()).collect());
    }
    let n = Lattice::new(gram)?.named("N");
    let disc = discriminant_group(&n)?;
    Ok(CurveConfiguration {
        labels,
        matrix,
        sigma,
        basis,
        coordinates,
        n,
        disc,
    })
}

/// First 16-subset (by lexicographic order of the removed 4 curves) whose
/// span is all of N: the kernel minor on the removed curves must be unimodular.
fn select_basis(kernel: &[Vec<BigInt>]) -> Result<Vec<usize>> {
    let k = kernel.len();
    for removed in k_subsets(20, k) {
        let minor = IntMatrix::from_fn(k, k, |i, j| kernel[j][removed[i]].clone());
        if determinant(&minor)?.abs().is_one() {
            return Ok((0..20).filter(|c| !removed.contains(c)).collect());
        }
    }
    Err(Error::CheckFailed("no 16 curves form a basis of N".into()))
}

impl CurveConfiguration {
    pub fn labels(&self) -> &[CurveLabel] {
        &self.labels
    }

    pub fn intersection_matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `sigma()[c]` is the index of the image of curve `c` under the involution.
    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Indices of the curves forming the chosen basis of N.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// Coordinates of each curve class in the chosen basis.
    pub fn coordinates(&self) -> &[Vec<BigInt>] {
        &self.coordinates
    }

    pub fn n_lattice(&self) -> &Lattice {
        &self.n
    }

    pub fn discriminant(&self) -> &DiscriminantGroup {
        &self.disc
    }

    pub fn index_of(&self, label: &CurveLabel) -> usize {
        self.labels.iter().position(|l| l == label).expect("every label is present")
    }

    pub fn curve(&self, label: &CurveLabel) -> CurveClass {
        let mut x = vec![BigRational::zero(); 20];
        x[self.index_of(label)] = BigRational::one();
        x
    }

    pub fn pairing(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        self.matrix.bilinear_rat(x, y)
    }

    /// Pairings of a class with each of the 20 curves.
    pub fn curve_pairings(&self, x: &[BigRational]) -> Vec<BigRational> {
        self.matrix.to_rational().mul_vec(x)
    }

    /// Equality in `N ⊗ Q`: N is nondegenerate, so pairings decide.
    pub fn same_class(&self, x: &[BigRational], y: &[BigRational]) -> bool {
        self.curve_pairings(x) == self.curve_pairings(y)
    }

    /// Coordinates of a class in the chosen basis.
    pub fn basis_coordinates(&self, x: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.basis.len()];
        for (c, coef) in x.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(&self.coordinates[c]) {
                *o += coef * BigRational::from_integer(v.clone());
            }
        }
        out
    }

    /// Curve permutation induced by a permutation of the indices `1..=5`.
    pub fn label_permutation(&self, perm: &[u8; 5]) -> Vec<usize> {
        self.labels.iter().map(|l| self.index_of(&l.permuted(perm))).collect()
    }

    /// Whether a curve permutation preserves the intersection matrix.
    pub fn preserves_pairing(&self, p: &[usize]) -> bool {
        (0..20).all(|i| (0..20).all(|j| self.matrix.get(i, j) == self.matrix.get(p[i], p[j])))
    }

    pub fn discriminant_form(&self) -> &FiniteQuadraticForm {
        self.disc.form()
    }

    /// An isometry `q_N -> -q_M`, or the obstruction if none exists.
    pub fn dual_form_isometry(&self) -> Result<IsoOutcome> {
        let qm = discriminant_form(&m_lattice())?;
        is_isomorphic(self.disc.form(), &qm.negated())
    }
}

fn sum_of(cfg: &CurveConfiguration, labels: &[CurveLabel]) -> CurveClass {
    let mut x = vec![BigRational::zero(); 20];
    for l in labels {
        x[cfg.index_of(l)] += BigRational::one();
    }
    x
}

fn check_pair(i: u8, j: u8) -> Result<(u8, u8)> {
    if i == j || !(1..=5).contains(&i) || !(1..=5).contains(&j) {
        return Err(Error::InvalidParameters(format!("index pair ({i}, {j})")));
    }
    Ok((i.min(j), i.max(j)))
}

/// The Gram of the six anti-invariant differences and its identification with E6(2).
#[derive(Clone, Debug, Serialize)]
pub struct E6Complement {
    pub differences: Vec<(String, String)>,
    #[serde(skip)]
    pub lattice: Lattice,
    /// `order[a]` is the difference placed at node `a` of the standard E6 basis.
    pub order: Vec<usize>,
    pub signs: Vec<i8>,
    pub determinant: String,
}

/// The differences `E - sigma(E)` used to exhibit `E6(2)`.
pub fn e6_difference_labels() -> Vec<(CurveLabel, CurveLabel)> {
    [
        ((1, 2, 3), (4, 5)),
        ((1, 4, 5), (2, 3)),
        ((2, 3, 5), (1, 4)),
        ((3, 4, 5), (1, 2)),
        ((1, 2, 5), (3, 4)),
        ((2, 4, 5), (1, 3)),
    ]
    .iter()
    .map(|&((i, j, k), (m, n))| (CurveLabel::e(i, j, k), CurveLabel::l(m, n)))
    .collect()
}

pub fn e6_complement(cfg: &CurveConfiguration) -> Result<E6Complement> {
    let labels = e6_difference_labels();
    let vecs: Vec<CurveClass> = labels
        .iter()
        .map(|(e, l)| {
            let mut x = cfg.curve(e);
            x[cfg.index_of(l)] -= BigRational::one();
            x
        })
        .collect();
    let gram = IntMatrix::from_fn(6, 6, |i, j| cfg.pairing(&vecs[i], &vecs[j]).to_integer());
    let target = e6_2_lattice();
    let (order, signs) = signed_relabeling(&gram, target.gram()).ok_or_else(|| {
        Error::CheckFailed("difference Gram is not a signed relabeling of E6(2)".into())
    })?;
    let t = IntMatrix::from_fn(6, 6, |i, a| if order[a] == i { i64::from(signs[a]) } else { 0 });
    if gram.congruent(&t) != *target.gram() {
        return Err(Error::CheckFailed("relabeling does not give E6(2)".into()));
    }
    let lattice = Lattice::new(gram)?.named("E6(2) span");
    Ok(E6Complement {
        differences: labels.iter().map(|(e, l)| (e.to_string(), l.to_string())).collect(),
        determinant: lattice.determinant().to_string(),
        lattice,
        order,
        signs,
    })
}

/// Signed permutation `(order, signs)` with
/// `signs[a] signs[b] g[order[a]][order[b]] == target[a][b]`.
fn signed_relabeling(g: &IntMatrix, target: &IntMatrix) -> Option<(Vec<usize>, Vec<i8>)> {
    fn rec(
        g: &IntMatrix,
        t: &IntMatrix,
        a: usize,
        order: &mut Vec<usize>,
        signs: &mut Vec<i8>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = g.rows();
        if a == n {
            return true;
        }
        for i in 0..n {
            if used[i] || g.get(i, i) != t.get(a, a) {
                continue;
            }
            for s in [1i8, -1] {
                let ok = (0..a).all(|b| {
                    let v = g.get(order[b], i) * BigInt::from(s * signs[b]);
                    &v == t.get(b, a)
                });
                if !ok {
                    continue;
                }
                order.push(i);
                signs.push(s);
                used[i] = true;
                if rec(g, t, a + 1, order, signs, used) {
                    return true;
                }
                used[i] = false;
                order.pop();
                signs.pop();
            }
        }
        false
    }
    let n = g.rows();
    if n != target.rows() {
        return None;
    }
    let mut order = Vec::new();
    let mut signs = Vec::new();
    let mut used = vec![false; n];
    rec(g, target, 0, &mut order, &mut signs, &mut used).then_some((order, signs))
}

/// The quotient graph on the ten involution orbits `{L_ab, E_cde}`.
#[derive(Clone, Debug, Serialize)]
pub struct PetersenReport {
    /// Index pairs `{a, b}` naming the orbits, lexicographic.
    pub vertices: Vec<(u8, u8)>,
    pub edges: Vec<(usize, usize)>,
    pub regular_degree: Option<usize>,
    pub girth: Option<usize>,
    pub vertex_transitive: bool,
    pub automorphisms: usize,
    pub isomorphic_to_petersen: bool,
    #[serde(skip)]
    pub graph: Graph,
}

pub fn petersen_graph(cfg: &CurveConfiguration) -> PetersenReport {
    let pairs = k_subsets(5, 2);
    let orbit_sums: Vec<CurveClass> = pairs
        .iter()
        .map(|p| {
            let l = CurveLabel::l(p[0] as u8 + 1, p[1] as u8 + 1);
            let e = l.complement();
            sum_of(cfg, &[l, e])
        })
        .collect();
    let mut graph = Graph::new(10);
    let two = BigRational::from_integer(BigInt::from(2));
    for a in 0..10 {
        for b in a + 1..10 {
            if cfg.pairing(&orbit_sums[a], &orbit_sums[b]) == two {
                graph.add_edge(a, b);
            }
        }
    }
    PetersenReport {
        vertices: pairs.iter().map(|p| (p[0] as u8 + 1, p[1] as u8 + 1)).collect(),
        edges: graph.edges(),
        regular_degree: graph.regular_degree(),
        girth: graph.girth(),
        vertex_transitive: graph.is_vertex_transitive(),
        automorphisms: graph.automorphism_count(),
        isomorphic_to_petersen: graph.isomorphism(&Graph::petersen()).is_some(),
        graph,
    }
}

/// `F_ij` from both six-curve expressions, with the fibre checks.
#[derive(Clone, Debug, Serialize)]
pub struct EllipticClass {
    pub pair: (u8, u8),
    pub first_summands: Vec<String>,
    pub second_summands: Vec<String>,
    #[serde(skip)]
    pub class: CurveClass,
    pub expressions_agree: bool,
    pub self_intersection: String,
    pub pairing_with_line: String,
    /// The first expression's summands in cycle order, when they form one 6-cycle.
    pub cycle: Option<Vec<String>>,
}

impl EllipticClass {
    pub fn passes(&self) -> bool {
        self.expressions_agree
            && self.self_intersection == "0"
            && self.pairing_with_line == "0"
            && self.cycle.is_some()
    }
}

/// `L_ix` for `x` outside `{i, j}` and `E_ixy` for `x, y` outside `{i, j}`.
fn fibre_summands(i: u8, j: u8) -> Vec<CurveLabel> {
    let rest: Vec<u8> = (1..=5).filter(|&x| x != i && x != j).collect();
    let mut out: Vec<CurveLabel> = rest.iter().map(|&x| CurveLabel::l(i, x)).collect();
    for a in 0..3 {
        for b in a + 1..3 {
            out.push(CurveLabel::e(i, rest[a], rest[b]));
        }
    }
    out
}

fn six_cycle(curves: &[CurveLabel]) -> Option<Vec<CurveLabel>> {
    let n = curves.len();
    let adj = |a: usize, b: usize| curves[a].intersection(&curves[b]) == 1;
    if (0..n).any(|a| (0..n).filter(|&b| b != a && adj(a, b)).count() != 2) {
        return None;
    }
    let mut cycle = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0usize;
    loop {
        let next = (0..n).find(|&b| b != cur && b != prev && adj(cur, b))?;
        if next == 0 {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    (cycle.len() == n).then(|| cycle.iter().map(|&c| curves[c].clone()).collect())
}

pub fn elliptic_class(cfg: &CurveConfiguration, i: u8, j: u8) -> Result<EllipticClass> {
    check_pair(i, j)?;
    let first = fibre_summands(i, j);
    let second = fibre_summands(j, i);
    let f = sum_of(cfg, &first);
    let g = sum_of(cfg, &second);
    let diff: CurveClass = f.iter().zip(&g).map(|(a, b)| a - b).collect();
    let agree = cfg.curve_pairings(&diff).iter().all(Zero::is_zero) && cfg.pairing(&diff, &diff).is_zero();
    let line = cfg.curve(&CurveLabel::l(i, j));
    Ok(EllipticClass {
        pair: (i.min(j), i.max(j)),
        first_summands: first.iter().map(ToString::to_string).collect(),
        second_summands: second.iter().map(ToString::to_string).collect(),
        expressions_agree: agree,
        self_intersection: cfg.pairing(&f, &f).to_string(),
        pairing_with_line: cfg.pairing(&f, &line).to_string(),
        cycle: six_cycle(&first).map(|c| c.iter().map(ToString::to_string).collect()),
        class: f,
    })
}

/// A vector of `N*` with its class in `A_N`.
#[derive(Clone, Debug, Serialize)]
pub struct NStarVector {
    pub label: String,
    #[serde(skip)]
    pub ambient: CurveClass,
    pub coordinates: Vec<String>,
    pub norm: String,
    pub q: String,
    #[serde(skip)]
    pub class: DiscElement,
    #[serde(skip)]
    pub q_value: QValue,
}

/// `alpha_ij = (F_ij - L_ij - E_kmn) / 2`.
pub fn alpha_vector(cfg: &CurveConfiguration, i: u8, j: u8) -> Result<NStarVector> {
    let (i, j) = check_pair(i, j)?;
    let ec = elliptic_class(cfg, i, j)?;
    let line = CurveLabel::l(i, j);
    let node = line.complement();
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut x = ec.class.clone();
    x[cfg.index_of(&line)] -= BigRational::one();
    x[cfg.index_of(&node)] -= BigRational::one();
    let x: CurveClass = x.iter().map(|t| t * &half).collect();
    let pairings = cfg.curve_pairings(&x);
    if let Some(c) = pairings.iter().position(|p| !p.is_integer()) {
        return Err(Error::CheckFailed(format!(
            "alpha_{i}{j} pairs non-integrally with {}",
            cfg.labels[c]
        )));
    }
    let basis_pairings: Vec<BigInt> = cfg.basis.iter().map(|&b| pairings[b].to_integer()).collect();
    let class = cfg.disc.class_of_pairings(&basis_pairings);
    let norm = cfg.pairing(&x, &x);
    let q_value = QValue::new(&norm);
    if class.q() != &q_value {
        return Err(Error::CheckFailed(format!("alpha_{i}{j}: class value differs from norm")));
    }
    Ok(NStarVector {
        label: format!("alpha_{i}{j}"),
        coordinates: cfg.basis_coordinates(&x).iter().map(ToString::to_string).collect(),
        norm: norm.to_string(),
        q: q_value.to_string(),
        ambient: x,
        class,
        q_value,
    })
}

/// All ten `alpha_ij`, pairs in lexicographic order.
pub fn alpha_vectors(cfg: &CurveConfiguration) -> Result<Vec<NStarVector>> {
    k_subsets(5, 2)
        .iter()
        .map(|p| alpha_vector(cfg, p[0] as u8 + 1, p[1] as u8 + 1))
        .collect()
}

/// Bijection between index pairs and the non-isotropic vectors of `(q_M)_2`
/// that turns disjointness into orthogonality.
#[derive(Clone, Debug, Serialize)]
pub struct PairCorrespondence {
    /// `(pair, F2 vector)` with pairs in lexicographic order.
    pub entries: Vec<((u8, u8), u64)>,
    pub orthogonal_pairs: usize,
    /// The map obtained by transporting the `alpha_ij` classes through an
    /// isometry `q_N -> -q_M` is also a graph isomorphism.
    pub transported_is_isomorphism: bool,
}

impl PairCorrespondence {
    pub fn vector_of(&self, i: u8, j: u8) -> Option<u64> {
        let key = (i.min(j), i.max(j));
        self.entries.iter().find(|(p, _)| *p == key).map(|&(_, v)| v)
    }

    pub fn pair_of(&self, v: u64) -> Option<(u8, u8)> {
        self.entries.iter().find(|(_, w)| *w == v).map(|&(p, _)| p)
    }
}

/// The lexicographically least isomorphism from the Kneser graph on index
/// pairs to the orthogonality graph of `(q_M)_2`. Any two choices differ by
/// an automorphism of the Petersen graph.
pub fn pair_correspondence(cfg: &CurveConfiguration) -> Result<PairCorrespondence> {
    let qm = discriminant_form(&m_lattice())?;
    let space = qm.sylow2_restriction()?;
    let op = orthogonal_pairs(&space)?;
    let (kneser, pairs) = Graph::kneser(5, 2);
    let iso = kneser
        .isomorphism(&op.graph)
        .ok_or_else(|| Error::CheckFailed("pair graph and orthogonality graph differ".into()))?;
    let entries: Vec<((u8, u8), u64)> = pairs
        .iter()
        .zip(&iso)
        .map(|(p, &v)| ((p[0] as u8 + 1, p[1] as u8 + 1), op.vectors[v]))
        .collect();
    let transported_is_isomorphism = match cfg.dual_form_isometry()? {
        IsoOutcome::Isomorphic(phi) => transported_map(cfg, &phi, &qm, &op.vectors, &kneser, &op.graph)?,
        IsoOutcome::NotIsomorphic(_) => false,
    };
    Ok(PairCorrespondence {
        entries,
        orthogonal_pairs: op.pairs.len(),
        transported_is_isomorphism,
    })
}

fn transported_map(
    cfg: &CurveConfiguration,
    phi: &Isometry,
    qm: &FiniteQuadraticForm,
    vectors: &[u64],
    kneser: &Graph,
    target: &Graph,
) -> Result<bool> {
    let neg = qm.negated();
    let mut map = Vec::with_capacity(10);
    for a in alpha_vectors(cfg)? {
        let img = phi.apply(&neg, &a.class);
        let bits = qm
            .sylow2_vector(&img)?
            .ok_or_else(|| Error::CheckFailed("alpha image outside the 2-Sylow subgroup".into()))?;
        match vectors.iter().position(|&v| v == bits) {
            Some(p) => map.push(p),
            None => return Ok(false),
        }
    }
    let bijective = {
        let mut s = map.clone();
        s.sort_unstable();
        s.dedup();
        s.len() == 10
    };
    Ok(bijective
        && (0..10).all(|a| (0..10).all(|b| a == b || kneser.adjacent(a, b) == target.adjacent(map[a], map[b]))))
}

/// Census of the classes in `A_N` hit by the ten `alpha_ij`, for reports.
pub fn alpha_census(alphas: &[NStarVector]) -> (usize, bool) {
    let mut coords: Vec<&[u64]> = alphas.iter().map(|a| a.class.coords()).collect();
    coords.sort();
    coords.dedup();
    let all_order_two_q_one = alphas
        .iter()
        .all(|a| a.class.order() == 2 && a.class.q() == &QValue::from_ratio(1, 1));
    (coords.len(), all_order_two_q_one)
}

#[cfg(test)]
mod tests;
