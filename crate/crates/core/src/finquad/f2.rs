use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::FiniteQuadraticForm;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Quadratic form q: F2^n -> F2 with polar form b(x, y) = q(x+y) - q(x) - q(y).
///
/// Vectors are bit masks; bit `i` is the coefficient of basis vector `e_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F2QuadraticSpace {
    dim: usize,
    qmask: u64,
    rows: Vec<u64>,
}

impl F2QuadraticSpace {
    pub const MAX_DIM: usize = 63;

    /// `qmask` holds q(e_i); `rows[i]` holds the bits b(e_i, e_j).
    pub fn new(dim: usize, qmask: u64, rows: Vec<u64>) -> Result<Self> {
        if dim > Self::MAX_DIM {
            return Err(Error::Oversize(format!("F2 dimension {dim}")));
        }
        if rows.len() != dim {
            return Err(Error::DimensionMismatch(format!("{} pairing rows for dimension {dim}", rows.len())));
        }
        let full = (1u64 << dim) - 1;
        if qmask & !full != 0 || rows.iter().any(|r| r & !full != 0) {
            return Err(Error::InvalidForm("bits outside the dimension".into()));
        }
        for i in 0..dim {
            if rows[i] >> i & 1 == 1 {
                return Err(Error::InvalidForm(format!("b(e_{i}, e_{i}) must vanish")));
            }
            for j in 0..dim {
                if (rows[i] >> j & 1) != (rows[j] >> i & 1) {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(F2QuadraticSpace { dim, qmask, rows })
    }

    /// The F2 form of u: q = 0, 0, 1.
    pub fn u() -> Self {
        F2QuadraticSpace::new(2, 0b00, vec![0b10, 0b01]).expect("u")
    }

    /// The F2 form of v: q = 1, 1, 1.
    pub fn v() -> Self {
        F2QuadraticSpace::new(2, 0b11, vec![0b10, 0b01]).expect("v")
    }

    pub fn zero_space() -> Self {
        F2QuadraticSpace {
            dim: 0,
            qmask: 0,
            rows: Vec::new(),
        }
    }

    /// Orthogonal direct sum; `other`'s basis follows `self`'s.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.dim;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        F2QuadraticSpace::new(n + other.dim, self.qmask | other.qmask << n, rows).expect("direct sum")
    }

    pub fn power(&self, k: usize) -> Self {
        (0..k).fold(F2QuadraticSpace::zero_space(), |acc, _| acc.direct_sum(self))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q(&self, x: u64) -> bool {
        let diag = (x & self.qmask).count_ones();
        let mut cross = 0u32;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            cross += (self.rows[i] & x).count_ones();
            bits &= bits - 1;
        }
        (diag + cross / 2) % 2 == 1
    }

    pub fn b(&self, x: u64, y: u64) -> bool {
        let mut acc = 0u32;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc += (self.rows[i] & y).count_ones();
            bits &= bits - 1;
        }
        acc % 2 == 1
    }

    /// Rank of the bilinear form.
    pub fn b_rank(&self) -> usize {
        f2_rank(&self.rows)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.b_rank() == self.dim
    }

    /// (isotropic vectors including zero, non-isotropic vectors).
    pub fn isotropic_census(&self) -> Result<(u64, u64)> {
        if self.dim > 30 {
            return Err(Error::Oversize(format!("census in dimension {}", self.dim)));
        }
        let mut x = 0u64;
        let mut qx = false;
        let mut iso = 1u64;
        for step in 1u64..1 << self.dim {
            let i = step.trailing_zeros() as usize;
            qx ^= (self.qmask >> i & 1 == 1) ^ ((self.rows[i] & x).count_ones() % 2 == 1);
            x ^= 1 << i;
            if !qx {
                iso += 1;
            }
        }
        Ok((iso, (1u64 << self.dim) - iso))
    }

    /// Arf invariant of a nondegenerate form: 0 for plus type, 1 for minus type.
    pub fn arf(&self) -> Result<u8> {
        if !self.is_nondegenerate() {
            return Err(Error::Degenerate {
                radical: 1 << (self.dim - self.b_rank()),
            });
        }
        if self.dim == 0 {
            return Ok(0);
        }
        let (iso, _) = self.isotropic_census()?;
        let n = self.dim as u32 / 2;
        if iso == (1 << (2 * n - 1)) + (1 << (n - 1)) {
            Ok(0)
        } else if iso == (1 << (2 * n - 1)) - (1 << (n - 1)) {
            Ok(1)
        } else {
            Err(Error::CheckFailed(format!("isotropic count {iso} fits neither type")))
        }
    }

    pub fn is_plus_type(&self) -> Result<bool> {
        Ok(self.arf()? == 0)
    }

    pub fn non_isotropic_vectors(&self) -> Vec<u64> {
        (1u64..1 << self.dim).filter(|&x| self.q(x)).collect()
    }

    pub fn isotropic_vectors(&self) -> Vec<u64> {
        (1u64..1 << self.dim).filter(|&x| !self.q(x)).collect()
    }

    /// The same form as a finite quadratic form on (Z/2)^n.
    pub fn to_finite_form(&self) -> FiniteQuadraticForm {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let zero = BigRational::from_integer(BigInt::from(0));
        let q = (0..self.dim)
            .map(|i| BigRational::from_integer(BigInt::from((self.qmask >> i & 1) as i64)))
            .collect();
        let b = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| if self.rows[i] >> j & 1 == 1 { half.clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        FiniteQuadraticForm::new(vec![2; self.dim], q, b).expect("nondegenerate F2 form")
    }

    /// Pull-back along the linear map sending `e_i` to `images[i]`.
    pub fn transformed(&self, images: &[u64]) -> Result<Self> {
        if images.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("{} images for dimension {}", images.len(), self.dim)));
        }
        let mut qmask = 0;
        let mut rows = vec![0u64; self.dim];
        for i in 0..self.dim {
            if self.q(images[i]) {
                qmask |= 1 << i;
            }
            for j in 0..self.dim {
                if self.b(images[i], images[j]) {
                    rows[i] |= 1 << j;
                }
            }
        }
        F2QuadraticSpace::new(self.dim, qmask, rows)
    }
}

impl fmt::Display for F2QuadraticSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2 quadratic space of dimension {}: q(e_i) = ", self.dim)?;
        for i in 0..self.dim {
            write!(f, "{}", self.qmask >> i & 1)?;
        }
        Ok(())
    }
}

/// Rank over F2 of a set of bit vectors.
pub(crate) fn f2_rank(vectors: &[u64]) -> usize {
    reduced_echelon(vectors).len()
}

/// Reduced echelon basis: pivot = highest set bit, rows sorted by
/// decreasing pivot, each pivot column cleared in every other row.
pub(crate) fn reduced_echelon(vectors: &[u64]) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut x = v;
        for &r in &basis {
            let p = 63 - r.leading_zeros();
            if x >> p & 1 == 1 {
                x ^= r;
            }
        }
        if x != 0 {
            let p = 63 - x.leading_zeros();
            for r in basis.iter_mut() {
                if *r >> p & 1 == 1 {
                    *r ^= x;
                }
            }
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// A subspace generated by mutually orthogonal non-isotropic vectors, of
/// half the ambient dimension (a "maximal totally singular subspace" in the
/// sense used here: b vanishes on it while q restricts to a nonzero linear form).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularSubspace {
    fingerprint: u128,
    echelon: Vec<u64>,
    generators: Vec<u64>,
}

impl SingularSubspace {
    /// Subspace spanned by `generators`, checked against the defining properties.
    pub fn from_generators(space: &F2QuadraticSpace, generators: &[u64]) -> Result<Self> {
        for (i, &a) in generators.iter().enumerate() {
            if !space.q(a) {
                return Err(Error::Precondition(format!("generator {a:#b} is isotropic")));
            }
            for &c in &generators[i + 1..] {
                if space.b(a, c) {
                    return Err(Error::Precondition(format!("{a:#b} and {c:#b} are not orthogonal")));
                }
            }
        }
        let echelon = reduced_echelon(generators);
        if echelon.len() != generators.len() || 2 * echelon.len() != space.dim() {
            return Err(Error::Precondition(format!(
                "{} generators span dimension {} in a space of dimension {}",
                generators.len(),
                echelon.len(),
                space.dim()
            )));
        }
        Ok(Self::from_echelon(space, echelon))
    }

    fn from_echelon(space: &F2QuadraticSpace, echelon: Vec<u64>) -> Self {
        let width = space.dim() as u32;
        let fingerprint = echelon.iter().fold(0u128, |acc, &r| (acc << width) | r as u128);
        let a = *echelon.iter().find(|&&r| space.q(r)).expect("q is nonzero on the subspace");
        let mut generators = vec![a];
        generators.extend(echelon.iter().filter(|&&r| r != a).map(|&r| if space.q(r) { r } else { r ^ a }));
        SingularSubspace {
            fingerprint,
            echelon,
            generators,
        }
    }

    /// Reduced echelon rows packed into one key (`dim` bits per row).
    pub fn fingerprint(&self) -> u128 {
        self.fingerprint
    }

    pub fn echelon_basis(&self) -> &[u64] {
        &self.echelon
    }

    /// Mutually orthogonal non-isotropic generators.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn dim(&self) -> usize {
        self.echelon.len()
    }

    pub fn contains(&self, x: u64) -> bool {
        let mut y = x;
        for &r in &self.echelon {
            if y >> (63 - r.leading_zeros()) & 1 == 1 {
                y ^= r;
            }
        }
        y == 0
    }

    pub fn elements(&self) -> Vec<u64> {
        let r = self.echelon.len();
        (0u64..1 << r)
            .map(|mask| {
                (0..r)
                    .filter(|&i| mask >> i & 1 == 1)
                    .fold(0u64, |acc, i| acc ^ self.echelon[i])
            })
            .collect()
    }

    pub fn non_isotropic_vectors(&self, space: &F2QuadraticSpace) -> Vec<u64> {
        let mut v: Vec<u64> = self.elements().into_iter().filter(|&x| space.q(x)).collect();
        v.sort_unstable();
        v
    }

    /// Pairwise orthogonal non-isotropic generators, independent, half the
    /// ambient dimension, and exactly 2^(r-1) non-isotropic vectors.
    pub fn satisfies_invariants(&self, space: &F2QuadraticSpace) -> bool {
        let g = &self.generators;
        let orthogonal = (0..g.len()).all(|i| (i + 1..g.len()).all(|j| !space.b(g[i], g[j])));
        let r = self.dim();
        orthogonal
            && g.iter().all(|&a| space.q(a))
            && f2_rank(g) == r
            && 2 * r == space.dim()
            && g.iter().all(|&a| self.contains(a))
            && self.non_isotropic_vectors(space).len() == 1 << (r - 1)
    }
}

/// All subspaces of half dimension generated by mutually orthogonal
/// non-isotropic vectors, sorted by fingerprint.
///
/// Such a subspace is exactly a maximal b-isotropic subspace on which q is not
/// identically zero. They are generated once each in reduced echelon form
/// (pivots chosen in increasing order, each new row b-orthogonal to the
/// previous ones), in parallel over the first row.
pub fn enumerate_singular_subspaces(space: &F2QuadraticSpace) -> Result<Vec<SingularSubspace>> {
    let n = space.dim();
    if n % 2 == 1 || n == 0 {
        return Err(Error::InvalidParameters(format!("dimension {n} is not a positive even number")));
    }
    if n > 16 {
        return Err(Error::Oversize(format!("subspace enumeration in dimension {n}")));
    }
    if !space.is_nondegenerate() {
        return Err(Error::Degenerate {
            radical: 1 << (n - space.b_rank()),
        });
    }
    let r = n / 2;
    let mut firsts = Vec::new();
    for p in 0..=n - r {
        for free in 0u64..1 << p {
            firsts.push((1u64 << p) | free);
        }
    }
    let mut out: Vec<SingularSubspace> = firsts
        .par_iter()
        .flat_map_iter(|&row| {
            let mut found = Vec::new();
            let mut rows = vec![row];
            extend_echelon(space, r, &mut rows, &mut found);
            found
        })
        .collect();
    out.sort();
    if out.windows(2).any(|w| w[0].fingerprint == w[1].fingerprint) {
        return Err(Error::CheckFailed("duplicate subspace fingerprint".into()));
    }
    Ok(out)
}

fn extend_echelon(space: &F2QuadraticSpace, r: usize, rows: &mut Vec<u64>, found: &mut Vec<SingularSubspace>) {
    let n = space.dim();
    if rows.len() == r {
        if rows.iter().any(|&x| space.q(x)) {
            let mut echelon = rows.clone();
            echelon.sort_unstable_by(|a, b| b.cmp(a));
            found.push(SingularSubspace::from_echelon(space, echelon));
        }
        return;
    }
    let last_pivot = 63 - rows.last().expect("nonempty").leading_zeros() as usize;
    let pivot_mask: u64 = rows.iter().map(|&x| 1u64 << (63 - x.leading_zeros())).fold(0, |a, b| a | b);
    let remaining = r - rows.len();
    for p in last_pivot + 1..=n - remaining {
        let free_mask = ((1u64 << p) - 1) & !pivot_mask;
        // Enumerate subsets of free_mask.
        let mut sub = 0u64;
        loop {
            let cand = (1u64 << p) | sub;
            if rows.iter().all(|&x| !space.b(x, cand)) {
                rows.push(cand);
                extend_echelon(space, r, rows, found);
                rows.pop();
            }
            if sub == free_mask {
                break;
            }
            sub = (sub.wrapping_sub(free_mask)) & free_mask;
        }
    }
}

/// The non-isotropic vectors of a u+v type space, their orthogonal pairs, and
/// the orthogonality graph.
#[derive(Clone, Debug)]
pub struct OrthogonalPairs {
    pub vectors: Vec<u64>,
    pub pairs: Vec<(u64, u64)>,
    pub graph: Graph,
}

/// Unordered pairs of mutually orthogonal non-isotropic vectors of a
/// 4-dimensional minus-type space (the type of u+v).
pub fn orthogonal_pairs(space: &F2QuadraticSpace) -> Result<OrthogonalPairs> {
    if space.dim() != 4 || space.arf()? != 1 {
        return Err(Error::Precondition("expected a 4-dimensional form of type u+v".into()));
    }
    let vectors = space.non_isotropic_vectors();
    let mut pairs = Vec::new();
    let mut graph = Graph::new(vectors.len());
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            if !space.b(vectors[i], vectors[j]) {
                pairs.push((vectors[i], vectors[j]));
                graph.add_edge(i, j);
            }
        }
    }
    Ok(OrthogonalPairs { vectors, pairs, graph })
}
