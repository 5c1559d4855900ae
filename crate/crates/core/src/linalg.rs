//! Exact integer and rational matrices.
//!
//! Everything here works over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in this module.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn<F, T>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> T,
        T: Into<BigInt>,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j).into());
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows; ragged input is rejected.
    pub fn from_rows<T: Clone + Into<BigInt>>(rows: &[Vec<T>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {ncols}",
                    r.len()
                )));
            }
            data.extend(r.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Block-diagonal matrix with the given blocks.
    pub fn block_diagonal(blocks: &[&IntMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length must match column count");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `x^T · self · y` for integer vectors.
    pub fn bilinear(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let my = self.mul_vec(y);
        x.iter().zip(&my).map(|(a, b)| a * b).sum()
    }

    /// `x^T · self · y` for rational vectors.
    pub fn bilinear_rat(&self, x: &[BigRational], y: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for i in 0..self.rows {
            if x[i].is_zero() {
                continue;
            }
            let mut s = BigRational::zero();
            for j in 0..self.cols {
                let e = self.get(i, j);
                if !e.is_zero() && !y[j].is_zero() {
                    s += &y[j] * BigRational::from_integer(e.clone());
                }
            }
            acc += &x[i] * s;
        }
        acc
    }

    /// `t^T · self · t`.
    pub fn congruent(&self, t: &IntMatrix) -> IntMatrix {
        &(&t.transpose() * self) * t
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            self.data[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = -x;
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Dense row-major matrix of rationals, always kept in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Least common multiple of all denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// `k · self` as an integer matrix, if every entry becomes integral.
    pub fn scaled_to_integer(&self, k: &BigInt) -> Option<IntMatrix> {
        let k = BigRational::from_integer(k.clone());
        let mut out = IntMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j) * &k;
                if !v.is_integer() {
                    return None;
                }
                out.set(i, j, v.to_integer());
            }
        }
        Some(out)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::zeros(n, n);
        for i in 0..n {
            inv.set(i, i, BigRational::one());
        }
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let piv = a.get(c, c).clone();
            for j in 0..n {
                let x = a.get(c, j) / &piv;
                a.set(c, j, x);
                let y = inv.get(c, j) / &piv;
                inv.set(c, j, y);
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &f * a.get(c, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &f * inv.get(c, j);
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (n, m) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..m {
            let Some(p) = (rank..n).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            for j in 0..m {
                a.data.swap(p * m + j, rank * m + j);
            }
            let piv = a.get(rank, c).clone();
            for r in rank + 1..n {
                if a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c) / &piv;
                for j in c..m {
                    let x = a.get(r, j) - &f * a.get(rank, j);
                    a.set(r, j, x);
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith normal form `u · m · v = d` with unimodular `u`, `v`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d_1 | d_2 | ...`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with transforms. Diagonal entries are non-negative and
/// form a divisibility chain.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if a.get(bi, bj).abs() <= x.abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { d: a, u, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = -a.get(i, t).div_floor(a.get(t, t));
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = -a.get(t, j).div_floor(a.get(t, t));
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let p = a.get(t, t).clone();
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&p)));
            if let Some(i) = bad {
                let one = BigInt::one();
                a.add_row_multiple(t, i, &one);
                u.add_row_multiple(t, i, &one);
                continue;
            }
            break;
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d: a, u, v }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, x);
            }
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1))
}

/// Saturated basis of the integer null space `{x : m·x = 0}`.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    (rank..m.cols).map(|j| snf.v.col(j)).collect()
}

/// Basis of the row lattice of `g` together with the index of that lattice
/// in its saturation inside `Z^cols`.
pub fn row_lattice_basis(g: &IntMatrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let snf = smith_normal_form(g);
    let rank = snf.rank();
    let ug = &snf.u * g;
    let basis = (0..rank).map(|i| ug.row(i).to_vec()).collect();
    let index = snf.diagonal()[..rank]
        .iter()
        .fold(BigInt::one(), |acc, d| acc * d);
    (basis, index)
}

/// Counts of positive, negative and zero squares of a symmetric form.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, serde::Serialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn is_nondegenerate(&self) -> bool {
        self.zero == 0
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.positive, self.negative)
    }
}

/// Sylvester inertia by rational symmetric reduction.
pub fn inertia(m: &IntMatrix) -> Result<Inertia> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = m.rows;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let mut out = Inertia {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            a.swap(k, p);
            for row in a.iter_mut() {
                row.swap(k, p);
            }
            let piv = a[k][k].clone();
            if piv.is_positive() {
                out.positive += 1;
            } else {
                out.negative += 1;
            }
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &piv;
                for j in k + 1..n {
                    let x = &a[i][j] - &f * &a[k][j];
                    a[i][j] = x;
                }
            }
            k += 1;
            continue;
        }
        // Zero diagonal: pair a nonzero off-diagonal entry into the pivot slot.
        let off = (k..n).find_map(|i| (i + 1..n).find(|&j| !a[i][j].is_zero()).map(|j| (i, j)));
        let Some((i, j)) = off else {
            out.zero = n - k;
            break;
        };
        for c in k..n {
            let x = a[j][c].clone();
            a[i][c] += x;
        }
        for r in k..n {
            let x = a[r][j].clone();
            a[r][i] += x;
        }
    }
    Ok(out)
}

pub fn rank(m: &IntMatrix) -> usize {
    smith_normal_form(m).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cartan_e6() -> IntMatrix {
        // Bourbaki labelling: 1-3-4-5-6 chain with 2 attached to 4.
        let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)];
        IntMatrix::from_fn(6, 6, |i, j| {
            if i == j {
                2
            } else if edges.contains(&(i, j)) || edges.contains(&(j, i)) {
                -1
            } else {
                0
            }
        })
    }

    /// Independent oracle: diagonal invariants via gcds of k×k minors.
    fn invariant_factors_by_minors(m: &IntMatrix) -> Vec<BigInt> {
        fn combos(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for last in (k - 1)..n {
                for mut c in combos(last, k - 1) {
                    c.push(last);
                    out.push(c);
                }
            }
            out
        }
        let n = m.rows().min(m.cols());
        let mut dets = vec![BigInt::one()];
        for k in 1..=n {
            let mut g = BigInt::zero();
            for r in combos(m.rows(), k) {
                for c in combos(m.cols(), k) {
                    g = g.gcd(&determinant(&m.submatrix(&r, &c)).unwrap());
                }
            }
            dets.push(g);
        }
        (1..=n)
            .map(|k| {
                if dets[k].is_zero() {
                    BigInt::zero()
                } else {
                    &dets[k] / &dets[k - 1]
                }
            })
            .collect()
    }

    #[test]
    fn snf_identity() {
        let s = smith_normal_form(&IntMatrix::identity(6));
        assert_eq!(s.d, IntMatrix::identity(6));
        assert_eq!(s.u, IntMatrix::identity(6));
        assert_eq!(s.v, IntMatrix::identity(6));
    }

    #[test]
    fn snf_of_e6_cartan_and_its_double() {
        let c = cartan_e6();
        let expect = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        for (m, want) in [
            (c.clone(), expect(&[1, 1, 1, 1, 1, 3])),
            (c.scaled(&BigInt::from(2)), expect(&[2, 2, 2, 2, 2, 6])),
        ] {
            let s = smith_normal_form(&m);
            assert_eq!(s.diagonal(), want);
            assert_eq!(invariant_factors_by_minors(&m), want);
            assert_eq!(&(&s.u * &m) * &s.v, s.d);
        }
    }

    #[test]
    fn snf_non_square() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12]]).unwrap();
        let s = smith_normal_form(&m);
        assert_eq!(&(&s.u * &m) * &s.v, s.d);
        assert_eq!(s.diagonal(), vec![BigInt::from(2), BigInt::from(6)]);
        assert_eq!(determinant(&s.u).unwrap().abs(), BigInt::one());
        assert_eq!(determinant(&s.v).unwrap().abs(), BigInt::one());
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&IntMatrix::identity(4)).unwrap(), BigInt::one());
        let u = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(determinant(&u).unwrap(), BigInt::from(-1));
        let e6_2 = cartan_e6().scaled(&BigInt::from(-2));
        assert_eq!(determinant(&e6_2).unwrap(), BigInt::from(192));
        assert!(matches!(
            determinant(&IntMatrix::zeros(2, 3)),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn kernels() {
        assert!(kernel_basis(&IntMatrix::identity(3)).is_empty());
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![1, 1]]).unwrap());
        assert_eq!(k.len(), 1);
        let v = &k[0];
        assert_eq!(v[0].abs(), BigInt::one());
        assert_eq!(&v[0] + &v[1], BigInt::zero());
    }

    #[test]
    fn kernel_is_saturated() {
        // 2x + 4y = 0 has saturated kernel (2,-1), not (4,-2).
        let k = kernel_basis(&IntMatrix::from_rows(&[vec![2, 4]]).unwrap());
        assert_eq!(k.len(), 1);
        let g = k[0][0].gcd(&k[0][1]);
        assert_eq!(g, BigInt::one());
    }

    #[test]
    fn inertia_examples() {
        let u = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(inertia(&u).unwrap().signature(), (1, 1));
        let e6 = cartan_e6().scaled(&BigInt::from(-1));
        assert_eq!(inertia(&e6).unwrap().signature(), (0, 6));
        let deg = IntMatrix::from_rows(&[vec![0, 0], vec![0, -2]]).unwrap();
        let i = inertia(&deg).unwrap();
        assert_eq!((i.positive, i.negative, i.zero), (0, 1, 1));
        assert!(matches!(
            inertia(&IntMatrix::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap()),
            Err(Error::NotSymmetric)
        ));
    }

    #[test]
    fn rational_inverse() {
        let a = IntMatrix::from_rows(&[vec![-4, 2], vec![2, -4]]).unwrap();
        let inv = a.to_rational().inverse().unwrap();
        let r = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        assert_eq!(inv.get(0, 0), &r(-1, 3));
        assert_eq!(inv.get(0, 1), &r(-1, 6));
        assert_eq!(inv.get(1, 1), &r(-1, 3));
    }
}
