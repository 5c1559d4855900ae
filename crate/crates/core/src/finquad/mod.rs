//! Finite quadratic forms: discriminant forms of even lattices, censuses,
//! isomorphisms, orthogonal groups and isotropic gluing.

mod f2;
mod group;
mod iso;

pub use f2::{
    enumerate_singular_subspaces, orthogonal_pairs, F2QuadraticSpace, OrthogonalPairs,
    SingularSubspace,
};
pub use group::{orthogonal_group, OrthogonalGroup};
pub use iso::{glue_check, is_isomorphic, GlueWitness, IsoOutcome, Isometry, Obstruction};

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::linalg::{kernel_basis, row_lattice_basis, smith_normal_form, IntMatrix, RatMatrix};

/// Largest cyclic order or common denominator handled.
pub const MAX_MODULUS: u64 = 1 << 31;
/// Largest group enumerated element by element.
pub const MAX_ENUMERATION: u64 = 1 << 22;
/// Largest group for which an element table is built.
pub(crate) const MAX_TABLE: u64 = 1 << 16;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn reduce_mod(r: &BigRational, m: i64) -> BigRational {
    let m = BigRational::from_integer(BigInt::from(m));
    r - &m * (r / &m).floor()
}

/// A value of a quadratic form in Q/2Z, stored reduced into [0, 2).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QValue(BigRational);

impl QValue {
    pub fn new(r: &BigRational) -> Self {
        QValue(reduce_mod(r, 2))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        QValue::new(&rat(n, d))
    }

    pub fn zero() -> Self {
        QValue(BigRational::zero())
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn negated(&self) -> Self {
        QValue::new(&-&self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for QValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An element of a finite quadratic form with its order and q-value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DiscElement {
    coords: Vec<u64>,
    order: u64,
    q: QValue,
}

impl DiscElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn q(&self) -> &QValue {
        &self.q
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for DiscElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} (order {}, q = {})", self.coords, self.order, self.q)
    }
}

/// A nondegenerate quadratic form q: A -> Q/2Z on A = Z/d_1 + ... + Z/d_k.
#[derive(Clone, Debug)]
pub struct FiniteQuadraticForm {
    orders: Vec<u64>,
    q: Vec<QValue>,
    b: Vec<Vec<BigRational>>,
    denom: u64,
    /// `q_i * denom`, in `[0, 2 denom)`.
    qn: Vec<u64>,
    /// `b_ij * denom`, in `[0, denom)`.
    bn: Vec<Vec<u64>>,
}

impl PartialEq for FiniteQuadraticForm {
    fn eq(&self, other: &Self) -> bool {
        self.orders == other.orders && self.q == other.q && self.b == other.b
    }
}

impl FiniteQuadraticForm {
    /// Builds and validates a form from generator data. `q` is read mod 2,
    /// `b` mod 1.
    pub fn new(orders: Vec<u64>, q: Vec<BigRational>, b: Vec<Vec<BigRational>>) -> Result<Self> {
        let k = orders.len();
        if q.len() != k || b.len() != k || b.iter().any(|r| r.len() != k) {
            return Err(Error::DimensionMismatch(format!(
                "{} orders, {} q-values, {}x? pairing table",
                k,
                q.len(),
                b.len()
            )));
        }
        if let Some(&d) = orders.iter().find(|&&d| d == 0 || d > MAX_MODULUS) {
            return Err(Error::InvalidForm(format!("cyclic order {d} out of range")));
        }
        let q: Vec<QValue> = q.iter().map(QValue::new).collect();
        let b: Vec<Vec<BigRational>> = b
            .iter()
            .map(|row| row.iter().map(|x| reduce_mod(x, 1)).collect())
            .collect();
        for i in 0..k {
            let di = BigRational::from_integer(BigInt::from(orders[i]));
            if !(q[i].value() * &di * &di / BigInt::from(2)).is_integer() {
                return Err(Error::InvalidForm(format!("d^2 q is not even for generator {i}")));
            }
            if reduce_mod(q[i].value(), 1) != b[i][i] {
                return Err(Error::InvalidForm(format!("b(g,g) differs from q(g) mod 1 for generator {i}")));
            }
            for j in 0..k {
                if b[i][j] != b[j][i] {
                    return Err(Error::InvalidForm(format!("pairing not symmetric at ({i},{j})")));
                }
                if !(&b[i][j] * &di).is_integer() {
                    return Err(Error::InvalidForm(format!("d_i b_ij not integral at ({i},{j})")));
                }
            }
        }
        let mut denom = BigInt::one();
        for v in q.iter().map(QValue::value).chain(b.iter().flatten()) {
            denom = denom.lcm(v.denom());
        }
        let denom = denom
            .to_u64()
            .filter(|&d| d <= MAX_MODULUS)
            .ok_or_else(|| Error::Oversize(format!("common denominator {denom}")))?;
        let scale = |v: &BigRational| -> u64 {
            (v * BigInt::from(denom)).to_integer().to_u64().expect("reduced value")
        };
        let qn = q.iter().map(|v| scale(v.value())).collect();
        let bn = b.iter().map(|row| row.iter().map(scale).collect()).collect();
        let form = FiniteQuadraticForm {
            orders,
            q,
            b,
            denom,
            qn,
            bn,
        };
        form.check_nondegenerate()?;
        Ok(form)
    }

    /// |radical| = prod d_i / |image of A in Hom(A, Q/Z)|, computed by SNF.
    fn check_nondegenerate(&self) -> Result<()> {
        let k = self.rank();
        if k == 0 {
            return Ok(());
        }
        let d = BigInt::from(self.denom);
        let m = IntMatrix::from_fn(k, 2 * k, |i, j| {
            if j < k {
                BigInt::from(self.bn[j][i])
            } else if j - k == i {
                d.clone()
            } else {
                BigInt::zero()
            }
        });
        let diag = smith_normal_form(&m).diagonal();
        let index: BigInt = diag.iter().product();
        let image = d.pow(k as u32) / index;
        let group: BigInt = self.orders.iter().map(|&o| BigInt::from(o)).product();
        if image == group {
            Ok(())
        } else {
            Err(Error::Degenerate {
                radical: (group / image).to_usize().unwrap_or(usize::MAX),
            })
        }
    }

    /// The trivial form on the zero group.
    pub fn trivial() -> Self {
        FiniteQuadraticForm::new(Vec::new(), Vec::new(), Vec::new()).expect("trivial form")
    }

    /// u: the discriminant form of U(2).
    pub fn u() -> Self {
        FiniteQuadraticForm::new(
            vec![2, 2],
            vec![rat(0, 1), rat(0, 1)],
            vec![vec![rat(0, 1), rat(1, 2)], vec![rat(1, 2), rat(0, 1)]],
        )
        .expect("u is valid")
    }

    /// v: the discriminant form of D4.
    pub fn v() -> Self {
        FiniteQuadraticForm::new(
            vec![2, 2],
            vec![rat(1, 1), rat(1, 1)],
            vec![vec![rat(0, 1), rat(1, 2)], vec![rat(1, 2), rat(0, 1)]],
        )
        .expect("v is valid")
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// Number of cyclic generators.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn group_order(&self) -> BigUint {
        self.orders.iter().map(|&d| BigUint::from(d)).product()
    }

    /// Group order if it does not exceed `limit`.
    pub fn group_order_within(&self, limit: u64) -> Option<u64> {
        let mut n: u64 = 1;
        for &d in &self.orders {
            n = n.checked_mul(d).filter(|&n| n <= limit)?;
        }
        Some(n)
    }

    pub fn generator_q(&self, i: usize) -> &QValue {
        &self.q[i]
    }

    pub fn generator_b(&self, i: usize, j: usize) -> &BigRational {
        &self.b[i][j]
    }

    pub(crate) fn denom(&self) -> u64 {
        self.denom
    }

    pub(crate) fn reduce(&self, coords: &[i64]) -> Vec<u64> {
        coords
            .iter()
            .zip(&self.orders)
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u64)
            .collect()
    }

    /// `q(x) * denom` in `[0, 2 denom)`.
    pub(crate) fn q_scaled(&self, x: &[u64]) -> u64 {
        let m = 2 * self.denom as u128;
        let mut acc: u128 = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            let xi = x[i] as u128;
            acc = (acc + (xi * xi % m) * self.qn[i] as u128) % m;
            for j in i + 1..x.len() {
                if x[j] != 0 {
                    acc = (acc + 2 * ((xi * x[j] as u128) % m) * self.bn[i][j] as u128) % m;
                }
            }
        }
        acc as u64
    }

    /// `b(x, y) * denom` in `[0, denom)`.
    pub(crate) fn b_scaled(&self, x: &[u64], y: &[u64]) -> u64 {
        let m = self.denom as u128;
        let mut acc: u128 = 0;
        for i in 0..x.len() {
            if x[i] == 0 {
                continue;
            }
            for j in 0..y.len() {
                if y[j] != 0 {
                    acc = (acc + ((x[i] as u128 * y[j] as u128) % m) * self.bn[i][j] as u128) % m;
                }
            }
        }
        acc as u64
    }

    pub(crate) fn order_of(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.orders)
            .fold(1u64, |acc, (&c, &d)| acc.lcm(&(d / c.gcd(&d))))
    }

    pub fn q_of(&self, x: &[u64]) -> QValue {
        QValue(BigRational::new(
            BigInt::from(self.q_scaled(x)),
            BigInt::from(self.denom),
        ))
    }

    /// b(x, y) in [0, 1).
    pub fn b_of(&self, x: &[u64], y: &[u64]) -> BigRational {
        BigRational::new(BigInt::from(self.b_scaled(x, y)), BigInt::from(self.denom))
    }

    /// Element with the given (unreduced) coordinates.
    pub fn element(&self, coords: &[i64]) -> Result<DiscElement> {
        if coords.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} coordinates for a form with {} generators",
                coords.len(),
                self.rank()
            )));
        }
        Ok(self.element_reduced(self.reduce(coords)))
    }

    pub(crate) fn element_reduced(&self, coords: Vec<u64>) -> DiscElement {
        let order = self.order_of(&coords);
        let q = self.q_of(&coords);
        DiscElement { coords, order, q }
    }

    pub fn zero(&self) -> DiscElement {
        self.element_reduced(vec![0; self.rank()])
    }

    pub fn add(&self, x: &DiscElement, y: &DiscElement) -> DiscElement {
        let coords = x
            .coords
            .iter()
            .zip(&y.coords)
            .zip(&self.orders)
            .map(|((&a, &b), &d)| (a + b) % d)
            .collect();
        self.element_reduced(coords)
    }

    pub fn scale(&self, n: i64, x: &DiscElement) -> DiscElement {
        let coords = x
            .coords
            .iter()
            .zip(&self.orders)
            .map(|(&a, &d)| ((a as i128 * n as i128).rem_euclid(d as i128)) as u64)
            .collect();
        self.element_reduced(coords)
    }

    pub fn b(&self, x: &DiscElement, y: &DiscElement) -> BigRational {
        self.b_of(&x.coords, &y.coords)
    }

    /// Every element, in lexicographic coordinate order.
    pub fn elements(&self) -> Result<Vec<DiscElement>> {
        let mut out = Vec::new();
        self.for_each_coords(MAX_ENUMERATION, |c| out.push(self.element_reduced(c.to_vec())))?;
        Ok(out)
    }

    /// Visits coordinate vectors in lexicographic order.
    pub(crate) fn for_each_coords<F: FnMut(&[u64])>(&self, limit: u64, mut f: F) -> Result<()> {
        let size = self
            .group_order_within(limit)
            .ok_or_else(|| Error::Oversize(format!("group of order {}", self.group_order())))?;
        let k = self.rank();
        let mut x = vec![0u64; k];
        for _ in 0..size {
            f(&x);
            for i in (0..k).rev() {
                x[i] += 1;
                if x[i] < self.orders[i] {
                    break;
                }
                x[i] = 0;
            }
        }
        Ok(())
    }

    /// Number of elements for each (order, q-value).
    pub fn census(&self) -> Result<BTreeMap<(u64, QValue), usize>> {
        let mut counts: BTreeMap<(u64, u64), usize> = BTreeMap::new();
        self.for_each_coords(MAX_ENUMERATION, |x| {
            *counts.entry((self.order_of(x), self.q_scaled(x))).or_default() += 1;
        })?;
        let d = BigInt::from(self.denom);
        Ok(counts
            .into_iter()
            .map(|((o, qn), c)| ((o, QValue(BigRational::new(BigInt::from(qn), d.clone()))), c))
            .collect())
    }

    /// Invariant factors e_1 | e_2 | ... of the underlying group (all > 1).
    pub fn invariant_factors(&self) -> Vec<u64> {
        let k = self.rank();
        let m = IntMatrix::from_fn(k, k, |i, j| if i == j { BigInt::from(self.orders[i]) } else { BigInt::zero() });
        let mut out: Vec<u64> = smith_normal_form(&m)
            .diagonal()
            .iter()
            .map(|d| d.to_u64().expect("bounded by the orders"))
            .filter(|&d| d > 1)
            .collect();
        out.sort_unstable();
        out
    }

    /// The form -q.
    pub fn negated(&self) -> Self {
        let q = self.q.iter().map(|v| -v.value().clone()).collect();
        let b = self.b.iter().map(|r| r.iter().map(|x| -x.clone()).collect()).collect();
        FiniteQuadraticForm::new(self.orders.clone(), q, b).expect("negation preserves validity")
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (k, l) = (self.rank(), other.rank());
        let mut orders = self.orders.clone();
        orders.extend(&other.orders);
        let q = self.q.iter().chain(&other.q).map(|v| v.value().clone()).collect();
        let b = (0..k + l)
            .map(|i| {
                (0..k + l)
                    .map(|j| match (i < k, j < k) {
                        (true, true) => self.b[i][j].clone(),
                        (false, false) => other.b[i - k][j - k].clone(),
                        _ => BigRational::zero(),
                    })
                    .collect()
            })
            .collect();
        FiniteQuadraticForm::new(orders, q, b).expect("direct sum of valid forms")
    }

    pub fn power(&self, n: usize) -> Self {
        (0..n).fold(FiniteQuadraticForm::trivial(), |acc, _| acc.direct_sum(self))
    }

    /// Signature mod 8 from the Gauss sum sum_x exp(pi i q(x)) = sqrt|A| exp(2 pi i s / 8).
    pub fn signature_mod8(&self) -> Result<u8> {
        let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
        self.for_each_coords(MAX_ENUMERATION, |x| *hist.entry(self.q_scaled(x)).or_default() += 1)?;
        let (mut re, mut im) = (0f64, 0f64);
        for (&n, &c) in &hist {
            let angle = std::f64::consts::PI * n as f64 / self.denom as f64;
            re += c as f64 * angle.cos();
            im += c as f64 * angle.sin();
        }
        let size: f64 = hist.values().sum::<u64>() as f64;
        let radius = size.sqrt();
        let mut best = (f64::INFINITY, 0u8);
        for s in 0..8u8 {
            let a = std::f64::consts::PI * s as f64 / 4.0;
            let dist = ((re - radius * a.cos()).powi(2) + (im - radius * a.sin()).powi(2)).sqrt();
            if dist < best.0 {
                best = (dist, s);
            }
        }
        // Neighbouring candidates are 2 sqrt|A| sin(pi/8) apart.
        if best.0 > 1e-6 * radius.max(1.0) {
            return Err(Error::CheckFailed(format!(
                "Gauss sum {re} + {im}i is not sqrt|A| times an eighth root of unity"
            )));
        }
        Ok(best.1)
    }

    /// Restriction to the 2-Sylow subgroup as an F2 space, with the
    /// coordinates of the chosen F2 basis.
    pub fn sylow2_basis(&self) -> Result<Vec<Vec<u64>>> {
        let mut basis = Vec::new();
        for (i, &d) in self.orders.iter().enumerate() {
            let twos = d.trailing_zeros();
            if twos >= 2 {
                return Err(Error::NotTwoElementary { order: d });
            }
            if twos == 1 {
                let mut x = vec![0u64; self.rank()];
                x[i] = d / 2;
                basis.push(x);
            }
        }
        Ok(basis)
    }

    pub fn sylow2_restriction(&self) -> Result<F2QuadraticSpace> {
        let basis = self.sylow2_basis()?;
        let n = basis.len();
        let mut qmask = 0u64;
        let mut rows = vec![0u64; n];
        for i in 0..n {
            let q2 = self.q_scaled(&basis[i]);
            if q2 % self.denom != 0 {
                return Err(Error::InvalidForm(
                    "2-Sylow part takes values outside Z/2Z".into(),
                ));
            }
            if q2 / self.denom == 1 {
                qmask |= 1 << i;
            }
            for j in 0..n {
                if i != j && self.b_scaled(&basis[i], &basis[j]) != 0 {
                    rows[i] |= 1 << j;
                }
            }
        }
        F2QuadraticSpace::new(n, qmask, rows)
    }

    /// F2 coordinates of an element of the 2-Sylow subgroup.
    pub fn sylow2_vector(&self, x: &DiscElement) -> Result<Option<u64>> {
        let mut bits = 0u64;
        let mut slot = 0;
        for (i, &d) in self.orders.iter().enumerate() {
            let c = x.coords[i];
            if d % 2 == 1 {
                if c != 0 {
                    return Ok(None);
                }
            } else {
                if d % 4 == 0 {
                    return Err(Error::NotTwoElementary { order: d });
                }
                let m = d / 2;
                if c % m != 0 {
                    return Ok(None);
                }
                if c / m == 1 {
                    bits |= 1 << slot;
                }
                slot += 1;
            }
        }
        Ok(Some(bits))
    }

    /// The element with the given F2 coordinates in the 2-Sylow subgroup.
    pub fn sylow2_element(&self, bits: u64) -> Result<DiscElement> {
        let basis = self.sylow2_basis()?;
        let mut x = vec![0u64; self.rank()];
        for (s, b) in basis.iter().enumerate() {
            if bits >> s & 1 == 1 {
                for i in 0..x.len() {
                    x[i] = (x[i] + b[i]) % self.orders[i];
                }
            }
        }
        Ok(self.element_reduced(x))
    }

    /// H-perp / H for the subgroup H generated by `gens`.
    pub fn orthogonal_quotient(&self, gens: &[DiscElement]) -> Result<FiniteQuadraticForm> {
        let k = self.rank();
        for h in gens {
            if self.q_scaled(&h.coords) != 0 {
                return Err(Error::Precondition(format!("{h} is not isotropic")));
            }
            for h2 in gens {
                if self.b_scaled(&h.coords, &h2.coords) != 0 {
                    return Err(Error::Precondition("generators are not mutually orthogonal".into()));
                }
            }
        }
        if k == 0 {
            return Ok(FiniteQuadraticForm::trivial());
        }
        let m = gens.len();
        let d = BigInt::from(self.denom);
        // x in H-perp  <=>  sum_i x_i b(g_i, h) = 0 mod 1 for every generator h.
        let perp_basis: Vec<Vec<BigInt>> = if m == 0 {
            (0..k).map(|i| (0..k).map(|j| BigInt::from((i == j) as u8)).collect()).collect()
        } else {
            let unit = |i: usize| -> Vec<u64> { (0..k).map(|j| (i == j) as u64).collect() };
            let sys = IntMatrix::from_fn(m, k + m, |r, c| {
                if c < k {
                    BigInt::from(self.b_scaled(&unit(c), &gens[r].coords))
                } else if c - k == r {
                    d.clone()
                } else {
                    BigInt::zero()
                }
            });
            let proj: Vec<Vec<BigInt>> = kernel_basis(&sys).into_iter().map(|v| v[..k].to_vec()).collect();
            row_lattice_basis(&IntMatrix::from_rows(&proj)?).0
        };
        let p = IntMatrix::from_rows(&perp_basis)?;
        if p.rows() != k {
            return Err(Error::CheckFailed("orthogonal complement has the wrong rank".into()));
        }
        let p_inv = p.to_rational().inverse().ok_or_else(|| Error::CheckFailed("singular basis".into()))?;
        let mut sub: Vec<Vec<BigInt>> = gens
            .iter()
            .map(|h| h.coords.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        for (i, &o) in self.orders.iter().enumerate() {
            sub.push((0..k).map(|j| if i == j { BigInt::from(o) } else { BigInt::zero() }).collect());
        }
        // Coordinates of the sublattice generators in the complement basis.
        let mut x_rows = Vec::new();
        for s in &sub {
            let v: Vec<BigRational> = s.iter().map(|c| BigRational::from_integer(c.clone())).collect();
            let coeffs = transpose_apply(&p_inv, &v);
            if coeffs.iter().any(|c| !c.is_integer()) {
                return Err(Error::Precondition("subgroup is not contained in its orthogonal".into()));
            }
            x_rows.push(coeffs.into_iter().map(|c| c.to_integer()).collect::<Vec<_>>());
        }
        let x = IntMatrix::from_rows(&x_rows)?;
        let snf = smith_normal_form(&x);
        let v_inv = snf
            .v
            .to_rational()
            .inverse()
            .ok_or_else(|| Error::CheckFailed("non-unimodular transform".into()))?;
        let diag = snf.diagonal();
        let mut orders = Vec::new();
        let mut vecs: Vec<Vec<u64>> = Vec::new();
        for (i, s) in diag.iter().enumerate() {
            if s.is_zero() {
                return Err(Error::CheckFailed("infinite quotient".into()));
            }
            if s.is_one() {
                continue;
            }
            // Row i of v^{-1}, mapped into ambient coordinates through P.
            let w: Vec<BigInt> = (0..k).map(|j| v_inv.get(i, j).to_integer()).collect();
            let amb: Vec<u64> = (0..k)
                .map(|c| {
                    let t: BigInt = (0..k).map(|r| &w[r] * p.get(r, c)).sum();
                    t.mod_floor(&BigInt::from(self.orders[c])).to_u64().expect("reduced")
                })
                .collect();
            orders.push(s.to_u64().ok_or_else(|| Error::Oversize(format!("order {s}")))?);
            vecs.push(amb);
        }
        let den = BigInt::from(self.denom);
        let q = vecs
            .iter()
            .map(|y| BigRational::new(BigInt::from(self.q_scaled(y)), den.clone()))
            .collect();
        let b = vecs
            .iter()
            .map(|y| {
                vecs.iter()
                    .map(|z| BigRational::new(BigInt::from(self.b_scaled(y, z)), den.clone()))
                    .collect()
            })
            .collect();
        FiniteQuadraticForm::new(orders, q, b)
    }

    pub fn to_json(&self) -> FormJson {
        FormJson {
            orders: self.orders.clone(),
            q: self.q.iter().map(|v| v.to_string()).collect(),
            b: self.b.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        }
    }

    pub fn from_json(json: &FormJson) -> Result<Self> {
        let parse = |s: &String| parse_rational(s);
        let q = json.q.iter().map(parse).collect::<Result<Vec<_>>>()?;
        let b = json
            .b
            .iter()
            .map(|r| r.iter().map(parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteQuadraticForm::new(json.orders.clone(), q, b)
    }
}

/// Solves `c^T P = v` for `c` given `P^{-1}`.
fn transpose_apply(p_inv: &RatMatrix, v: &[BigRational]) -> Vec<BigRational> {
    (0..p_inv.cols())
        .map(|j| (0..v.len()).map(|i| &v[i] * p_inv.get(i, j)).sum())
        .collect()
}

/// Parses "p/q" or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for FiniteQuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let group: Vec<String> = self.orders.iter().map(|d| format!("Z/{d}")).collect();
        writeln!(f, "group: {}", if group.is_empty() { "0".into() } else { group.join(" + ") })?;
        for i in 0..self.rank() {
            let row: Vec<String> = self.b[i].iter().map(|x| x.to_string()).collect();
            writeln!(f, "  g{}: q = {}, b = [{}]", i, self.q[i], row.join(", "))?;
        }
        Ok(())
    }
}

/// JSON shape of a finite quadratic form.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FormJson {
    pub orders: Vec<u64>,
    pub q: Vec<String>,
    pub b: Vec<Vec<String>>,
}

/// A discriminant form together with the data to move between L* and A_L.
#[derive(Clone, Debug)]
pub struct DiscriminantGroup {
    form: FiniteQuadraticForm,
    gram: IntMatrix,
    /// Rows of the left SNF transform belonging to nontrivial factors.
    u_rows: Vec<Vec<BigInt>>,
    /// Dual-lattice representatives of the generators, in lattice coordinates.
    lifts: Vec<Vec<BigRational>>,
}

impl DiscriminantGroup {
    pub fn form(&self) -> &FiniteQuadraticForm {
        &self.form
    }

    pub fn into_form(self) -> FiniteQuadraticForm {
        self.form
    }

    /// Class of the dual vector whose pairings with the lattice basis are `c`.
    pub fn class_of_pairings(&self, c: &[BigInt]) -> DiscElement {
        let coords = self
            .u_rows
            .iter()
            .zip(self.form.orders())
            .map(|(row, &d)| {
                let t: BigInt = row.iter().zip(c).map(|(a, b)| a * b).sum();
                t.mod_floor(&BigInt::from(d)).to_u64().expect("reduced")
            })
            .collect();
        self.form.element_reduced(coords)
    }

    /// Class of a dual vector given in lattice coordinates.
    pub fn class_of_dual_vector(&self, x: &[BigRational]) -> Result<DiscElement> {
        let xi: Vec<BigRational> = x.to_vec();
        let n = self.gram.rows();
        if xi.len() != n {
            return Err(Error::DimensionMismatch(format!("{} coordinates for rank {}", xi.len(), n)));
        }
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            let t: BigRational = (0..n)
                .map(|j| BigRational::from_integer(self.gram.get(i, j).clone()) * &xi[j])
                .sum();
            if !t.is_integer() {
                return Err(Error::Precondition("vector is not in the dual lattice".into()));
            }
            c.push(t.to_integer());
        }
        Ok(self.class_of_pairings(&c))
    }

    /// A dual-lattice representative of an element, in lattice coordinates.
    pub fn lift(&self, x: &DiscElement) -> Vec<BigRational> {
        let n = self.gram.rows();
        let mut out = vec![BigRational::zero(); n];
        for (c, l) in x.coords.iter().zip(&self.lifts) {
            for i in 0..n {
                out[i] += &l[i] * BigInt::from(*c);
            }
        }
        out
    }
}

/// Discriminant form of an even nondegenerate lattice.
pub fn discriminant_group(l: &Lattice) -> Result<DiscriminantGroup> {
    if let Some(i) = l.first_odd_diagonal() {
        return Err(Error::OddLattice { index: i });
    }
    let g = l.gram();
    let n = g.rows();
    let snf = smith_normal_form(g);
    let diag = snf.diagonal();
    let vgv = g.congruent(&snf.v);
    let mut keep = Vec::new();
    for (i, d) in diag.iter().enumerate() {
        let d = d.abs();
        if !d.is_one() {
            let du = d.to_u64().filter(|&x| x <= MAX_MODULUS);
            keep.push((i, du.ok_or_else(|| Error::Oversize(format!("invariant factor {d}")))?));
        }
    }
    let orders: Vec<u64> = keep.iter().map(|&(_, d)| d).collect();
    let mut q = Vec::new();
    let mut b = Vec::new();
    for &(i, di) in &keep {
        q.push(BigRational::new(vgv.get(i, i).clone(), BigInt::from(di) * BigInt::from(di)));
        b.push(
            keep.iter()
                .map(|&(j, dj)| BigRational::new(vgv.get(i, j).clone(), BigInt::from(di) * BigInt::from(dj)))
                .collect(),
        );
    }
    let form = FiniteQuadraticForm::new(orders, q, b)?;
    let u_rows = keep.iter().map(|&(i, _)| snf.u.row(i).to_vec()).collect();
    let lifts = keep
        .iter()
        .map(|&(i, d)| {
            (0..n)
                .map(|r| BigRational::new(snf.v.get(r, i).clone(), BigInt::from(d)))
                .collect()
        })
        .collect();
    Ok(DiscriminantGroup {
        form,
        gram: g.clone(),
        u_rows,
        lifts,
    })
}

/// The discriminant quadratic form q_L on L*/L.
pub fn discriminant_form(l: &Lattice) -> Result<FiniteQuadraticForm> {
    discriminant_group(l).map(DiscriminantGroup::into_form)
}

#[cfg(test)]
mod tests;
