//! Integral lattices given by Gram matrices.
//!
//! Root lattices follow the negative definite convention: `A_m`, `D_n` and
//! `E_k` have Gram matrix equal to minus the Cartan matrix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Inertia, IntMatrix, RatMatrix};

/// Named building blocks accepted by [`Lattice::standard`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardLattice {
    /// The hyperbolic plane, Gram `[[0,1],[1,0]]`.
    U,
    A(usize),
    D(usize),
    E(usize),
    /// `<m>`, rank one generated by a vector of norm `m`.
    Rank1(BigInt),
}

impl StandardLattice {
    fn cartan_edges(&self) -> Result<(usize, Vec<(usize, usize)>)> {
        match *self {
            StandardLattice::A(m) if m >= 1 => Ok((m, (1..m).map(|i| (i - 1, i)).collect())),
            StandardLattice::D(n) if n >= 4 => {
                let mut e: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
                e.push((n - 3, n - 1));
                Ok((n, e))
            }
            StandardLattice::E(k) if (6..=8).contains(&k) => {
                // 1-3-4-5-...-k with 2 attached to 4 (Bourbaki numbering, 0-based here).
                let mut e = vec![(0, 2), (1, 3)];
                e.extend((2..k - 1).map(|i| (i, i + 1)));
                Ok((k, e))
            }
            _ => Err(Error::InvalidParameters(format!(
                "no Dynkin diagram {self}"
            ))),
        }
    }

    fn gram(&self) -> Result<IntMatrix> {
        match self {
            StandardLattice::U => Ok(IntMatrix::from_fn(2, 2, |i, j| i64::from(i != j))),
            StandardLattice::Rank1(m) => {
                if m.is_zero() {
                    return Err(Error::InvalidParameters("<0> is degenerate".into()));
                }
                Ok(IntMatrix::from_fn(1, 1, |_, _| m.clone()))
            }
            _ => {
                let (n, edges) = self.cartan_edges()?;
                Ok(IntMatrix::from_fn(n, n, |i, j| {
                    if i == j {
                        -2
                    } else if edges.contains(&(i, j)) || edges.contains(&(j, i)) {
                        1
                    } else {
                        0
                    }
                }))
            }
        }
    }
}

impl fmt::Display for StandardLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StandardLattice::U => write!(f, "U"),
            StandardLattice::A(m) => write!(f, "A{m}"),
            StandardLattice::D(n) => write!(f, "D{n}"),
            StandardLattice::E(k) => write!(f, "E{k}"),
            StandardLattice::Rank1(m) => write!(f, "<{m}>"),
        }
    }
}

impl FromStr for StandardLattice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "U" {
            return Ok(StandardLattice::U);
        }
        if let Some(inner) = s.strip_prefix('<').and_then(|t| t.strip_suffix('>')) {
            let m = inner
                .trim()
                .parse::<BigInt>()
                .map_err(|e| Error::Parse(format!("{s}: {e}")))?;
            return Ok(StandardLattice::Rank1(m));
        }
        let (head, tail) = s.split_at(1.min(s.len()));
        let n: usize = tail
            .parse()
            .map_err(|_| Error::Parse(format!("unknown lattice name {s:?}")))?;
        match head {
            "A" => Ok(StandardLattice::A(n)),
            "D" => Ok(StandardLattice::D(n)),
            "E" => Ok(StandardLattice::E(n)),
            _ => Err(Error::Parse(format!("unknown lattice name {s:?}"))),
        }
    }
}

/// A nondegenerate integral lattice.
#[derive(Clone, Debug)]
pub struct Lattice {
    gram: IntMatrix,
    inertia: Inertia,
    det: BigInt,
    name: Option<String>,
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.gram == other.gram
    }
}

impl Lattice {
    /// Wraps a symmetric nondegenerate Gram matrix.
    pub fn new(gram: IntMatrix) -> Result<Self> {
        let inertia = linalg::inertia(&gram)?;
        if !inertia.is_nondegenerate() {
            return Err(Error::Degenerate {
                radical: inertia.zero,
            });
        }
        let det = linalg::determinant(&gram)?;
        Ok(Lattice {
            gram,
            inertia,
            det,
            name: None,
        })
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// `kind(scale)`, e.g. `(E6, 2)` is `E_6(2)`.
    pub fn standard(kind: StandardLattice, scale: i64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::InvalidParameters("scale must be nonzero".into()));
        }
        let gram = kind.gram()?.scaled(&BigInt::from(scale));
        let name = if scale == 1 {
            kind.to_string()
        } else {
            format!("{kind}({scale})")
        };
        Ok(Lattice::new(gram)?.named(name))
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn signature(&self) -> (usize, usize) {
        self.inertia.signature()
    }

    pub fn determinant(&self) -> &BigInt {
        &self.det
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn is_even(&self) -> bool {
        self.first_odd_diagonal().is_none()
    }

    pub(crate) fn first_odd_diagonal(&self) -> Option<usize> {
        (0..self.rank()).find(|&i| self.gram.get(i, i).is_odd())
    }

    pub fn is_negative_definite(&self) -> bool {
        self.inertia.positive == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.inertia.negative == 0
    }

    /// `L(m)`: the same module with the form multiplied by `m`.
    pub fn rescaled(&self, m: i64) -> Result<Lattice> {
        if m == 0 {
            return Err(Error::InvalidParameters("scale must be nonzero".into()));
        }
        let l = Lattice::new(self.gram.scaled(&BigInt::from(m)))?;
        Ok(match &self.name {
            Some(n) => l.named(format!("{n}({m})")),
            None => l,
        })
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        let gram = IntMatrix::block_diagonal(&[&self.gram, &other.gram]);
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}+{b}")),
            _ => None,
        };
        Lattice {
            gram,
            inertia: Inertia {
                positive: self.inertia.positive + other.inertia.positive,
                negative: self.inertia.negative + other.inertia.negative,
                zero: 0,
            },
            det: &self.det * &other.det,
            name,
        }
    }

    /// Gram matrix of the dual basis of `L* = Hom(L, Z)`.
    pub fn dual_gram(&self) -> RatMatrix {
        self.gram
            .to_rational()
            .inverse()
            .expect("nondegenerate Gram matrix is invertible")
    }

    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, y)
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.gram.bilinear(x, x)
    }

    /// Span of `gens` (coordinates in this lattice's basis).
    pub fn sublattice(&self, gens: &[Vec<BigInt>]) -> Result<Sublattice> {
        if gens.is_empty() {
            return Err(Error::InvalidParameters("empty generator list".into()));
        }
        let g = IntMatrix::from_rows(gens)?;
        if g.cols() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "generators have length {}, lattice rank is {}",
                g.cols(),
                self.rank()
            )));
        }
        let (basis, saturation_index) = linalg::row_lattice_basis(&g);
        let b = IntMatrix::from_rows(&basis)?;
        let gram = &(&b * &self.gram) * &b.transpose();
        let lattice = Lattice::new(gram)?;
        Ok(Sublattice {
            lattice,
            basis,
            saturation_index,
        })
    }

    /// Sign making the form positive definite, or an error for indefinite lattices.
    fn definite_sign(&self) -> Result<i32> {
        if self.is_positive_definite() {
            Ok(1)
        } else if self.is_negative_definite() {
            Ok(-1)
        } else {
            Err(Error::Indefinite {
                positive: self.inertia.positive,
                negative: self.inertia.negative,
            })
        }
    }

    /// Calls `visit(x, |norm|)` for every nonzero `x` with `|norm(x)| <= bound`.
    pub fn for_each_vector_within<F>(&self, bound: &BigInt, mut visit: F) -> Result<()>
    where
        F: FnMut(&[BigInt], &BigInt),
    {
        let sign = self.definite_sign()?;
        let q = if sign > 0 {
            self.gram.clone()
        } else {
            self.gram.scaled(&BigInt::from(-1))
        };
        let enumerator = Enumerator::new(&q);
        enumerator.run(bound, &mut visit);
        Ok(())
    }

    /// Every vector of norm exactly `target`, both signs, sorted lexicographically.
    pub fn short_vectors(&self, target: &BigInt) -> Result<Vec<Vec<BigInt>>> {
        let sign = self.definite_sign()?;
        if target.is_zero() || (target.signum() != BigInt::from(sign)) {
            return Ok(Vec::new());
        }
        let want = target.abs();
        let mut out = Vec::new();
        self.for_each_vector_within(&want, |x, n| {
            if *n == want {
                out.push(x.to_vec());
            }
        })?;
        out.sort();
        Ok(out)
    }

    /// The nonzero norm closest to zero.
    pub fn min_nonzero_norm(&self) -> Result<BigInt> {
        let sign = BigInt::from(self.definite_sign()?);
        let bound = (0..self.rank())
            .map(|i| self.gram.get(i, i).abs())
            .min()
            .expect("lattice has positive rank");
        let mut best = bound.clone();
        self.for_each_vector_within(&bound, |_, n| {
            if *n < best {
                best = n.clone();
            }
        })?;
        Ok(best * sign)
    }
}

/// U + U(2) + A2(2), signature (2, 4), determinant 48.
pub fn m_lattice() -> Lattice {
    let u = Lattice::standard(StandardLattice::U, 1).expect("U");
    let u2 = Lattice::standard(StandardLattice::U, 2).expect("U(2)");
    let a2 = Lattice::standard(StandardLattice::A(2), 2).expect("A2(2)");
    u.direct_sum(&u2).direct_sum(&a2).named("U+U(2)+A2(2)")
}

/// U + U(2) + E8(2), signature (2, 10), determinant 1024.
pub fn l_minus_lattice() -> Lattice {
    let u = Lattice::standard(StandardLattice::U, 1).expect("U");
    let u2 = Lattice::standard(StandardLattice::U, 2).expect("U(2)");
    let e8 = Lattice::standard(StandardLattice::E(8), 2).expect("E8(2)");
    u.direct_sum(&u2).direct_sum(&e8).named("U+U(2)+E8(2)")
}

/// E6(2), negative definite, determinant 192.
pub fn e6_2_lattice() -> Lattice {
    Lattice::standard(StandardLattice::E(6), 2).expect("E6(2)")
}

/// Representatives of `±` classes: the member whose first nonzero coordinate is positive.
pub fn sign_class_representatives(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut reps: Vec<Vec<BigInt>> = vectors
        .iter()
        .filter(|v| v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive()))
        .cloned()
        .collect();
    reps.sort();
    reps.dedup();
    reps
}

/// Result of [`Lattice::sublattice`].
#[derive(Clone, Debug)]
pub struct Sublattice {
    pub lattice: Lattice,
    /// Basis of the span in ambient coordinates.
    pub basis: Vec<Vec<BigInt>>,
    /// Index of the span in its saturation.
    pub saturation_index: BigInt,
}

/// Exact Fincke-Pohst enumeration for a positive definite integer form.
struct Enumerator {
    n: usize,
    /// Pivots of the rational LDL^T decomposition.
    d: Vec<BigRational>,
    /// `mu[i][j]` for `j > i`.
    mu: Vec<Vec<BigRational>>,
    q: IntMatrix,
}

impl Enumerator {
    fn new(q: &IntMatrix) -> Self {
        let n = q.rows();
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                q.row(i)
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            })
            .collect();
        let mut d = Vec::with_capacity(n);
        let mut mu = vec![vec![BigRational::zero(); n]; n];
        for i in 0..n {
            let di = a[i][i].clone();
            assert!(di.is_positive(), "zero pivot on a definite form");
            for j in i + 1..n {
                mu[i][j] = &a[i][j] / &di;
            }
            for j in i + 1..n {
                for k in i + 1..n {
                    let x = &a[j][k] - &mu[i][j] * &mu[i][k] * &di;
                    a[j][k] = x;
                }
            }
            d.push(di);
        }
        Enumerator {
            n,
            d,
            mu,
            q: q.clone(),
        }
    }

    fn run<F: FnMut(&[BigInt], &BigInt)>(&self, bound: &BigInt, visit: &mut F) {
        if self.n == 0 {
            return;
        }
        let mut x = vec![BigInt::zero(); self.n];
        let budget = BigRational::from_integer(bound.clone());
        self.descend(self.n - 1, &budget, &mut x, bound, visit);
    }

    fn descend<F: FnMut(&[BigInt], &BigInt)>(
        &self,
        level: usize,
        budget: &BigRational,
        x: &mut Vec<BigInt>,
        bound: &BigInt,
        visit: &mut F,
    ) {
        let mut center = BigRational::zero();
        for j in level + 1..self.n {
            if !x[j].is_zero() {
                center -= &self.mu[level][j] * BigRational::from_integer(x[j].clone());
            }
        }
        let t = budget / &self.d[level];
        let s: BigInt = Roots::sqrt(&t.floor().to_integer());
        let lo: BigInt = center.floor().to_integer() - &s - 1;
        let hi: BigInt = center.ceil().to_integer() + &s + 1;
        let mut xi = lo;
        while xi <= hi {
            let diff = BigRational::from_integer(xi.clone()) - &center;
            let used = &diff * &diff * &self.d[level];
            if &used <= budget {
                x[level] = xi.clone();
                let rest = budget - used;
                if level == 0 {
                    if x.iter().any(|c| !c.is_zero()) {
                        let norm = self.q.bilinear(x, x);
                        debug_assert!(&norm <= bound);
                        visit(x, &norm);
                    }
                } else {
                    self.descend(level - 1, &rest, x, bound, visit);
                }
            }
            xi += BigInt::one();
        }
        x[level] = BigInt::zero();
    }
}
