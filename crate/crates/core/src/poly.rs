//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial over Q in named variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePolynomial {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

/// One term of the JSON form: coefficient as `p/q` text and the exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exponents: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

/// Variable names `prefix0, prefix1, ...`.
pub fn variable_names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl SparsePolynomial {
    pub fn zero(vars: &[String]) -> Self {
        SparsePolynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[String], c: BigRational) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(vec![0; vars.len()], c);
        p
    }

    pub fn one(vars: &[String]) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn var(vars: &[String], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        let mut p = Self::zero(vars);
        p.add_term(e, BigRational::one());
        p
    }

    /// `sum coeffs[i] * var_i`.
    pub fn linear(vars: &[String], coeffs: &[BigRational]) -> Self {
        let mut p = Self::zero(vars);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; vars.len()];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(vars: &[String], terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Result<Self> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::DimensionMismatch(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> BigRational {
        self.terms.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn check_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "polynomials over different variables");
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        SparsePolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.vars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.nvars(), "point has wrong dimension");
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            total += t;
        }
        total
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut f = e.clone();
            f[i] -= 1;
            p.add_term(f, c * BigRational::from_integer(BigInt::from(e[i])));
        }
        p
    }

    /// Substitutes `subs[i]` for variable `i`; the result lives in the
    /// variables of the substitutes.
    pub fn compose(&self, subs: &[SparsePolynomial]) -> Result<Self> {
        if subs.len() != self.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "{} substitutes for {} variables",
                subs.len(),
                self.nvars()
            )));
        }
        let target = subs
            .first()
            .map(|s| s.vars.clone())
            .unwrap_or_default();
        if subs.iter().any(|s| s.vars != target) {
            return Err(Error::DimensionMismatch("substitutes use different variables".into()));
        }
        let mut powers: Vec<Vec<SparsePolynomial>> = subs.iter().map(|s| vec![Self::one(&s.vars)]).collect();
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut t = Self::constant(&target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().expect("nonempty") * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Smallest exponent of variable `i` across all terms.
    pub fn min_exponent(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[i]).min()
    }

    /// `self / var_i^k` when every term is divisible.
    pub fn divide_by_var_power(&self, i: usize, k: u32) -> Option<Self> {
        if self.terms.keys().any(|e| e[i] < k) {
            return None;
        }
        Some(SparsePolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f[i] -= k;
                    (f, c.clone())
                })
                .collect(),
        })
    }

    /// The constant `c` with `self = c * other`, if one exists.
    pub fn proportionality(&self, other: &Self) -> Option<BigRational> {
        self.check_vars(other);
        match (self.terms.iter().next(), other.terms.iter().next()) {
            (None, None) => Some(BigRational::zero()),
            (None, Some(_)) => Some(BigRational::zero()),
            (Some(_), None) => None,
            (Some(_), Some((e, c))) => {
                let ratio = self.coefficient(e) / c;
                (*self == other.scale(&ratio)).then_some(ratio)
            }
        }
    }

    /// Terms sorted by descending total degree, then descending exponents.
    fn display_order(&self) -> Vec<(&Vec<u32>, &BigRational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        t
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            variables: self.vars.clone(),
            terms: self
                .display_order()
                .into_iter()
                .map(|(e, c)| TermJson {
                    coeff: c.to_string(),
                    exponents: e.clone(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let mut terms = Vec::new();
        for t in &json.terms {
            terms.push((t.exponents.clone(), crate::finquad::parse_rational(&t.coeff)?));
        }
        Self::from_terms(&json.variables, terms)
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        self.vars[i].clone()
                    } else {
                        format!("{}^{}", self.vars[i], p)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{a}*{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, other: &SparsePolynomial) -> SparsePolynomial {
        self.check_vars(other);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, other: &SparsePolynomial) -> SparsePolynomial {
        self.check_vars(other);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), -c.clone());
        }
        p
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, other: &SparsePolynomial) -> SparsePolynomial {
        self.check_vars(other);
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SparsePolynomial {
            vars: self.vars.clone(),
            terms: acc,
        }
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn determinant(m: &[Vec<SparsePolynomial>]) -> Result<SparsePolynomial> {
    let n = m.len();
    if n == 0 {
        return Err(Error::InvalidParameters("empty matrix".into()));
    }
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: m[0].len() });
    }
    let cols: Vec<usize> = (0..n).collect();
    Ok(cofactor(m, 0, &cols))
}

fn cofactor(m: &[Vec<SparsePolynomial>], row: usize, cols: &[usize]) -> SparsePolynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let mut out = SparsePolynomial::zero(m[row][cols[0]].vars());
    for (k, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = &m[row][c] * &cofactor(m, row + 1, &rest);
        out = if k % 2 == 0 { &out + &t } else { &out - &t };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn vars() -> Vec<String> {
        variable_names("z", 3)
    }

    #[test]
    fn canonical_text() {
        let v = vars();
        let x = SparsePolynomial::var(&v, 0);
        let y = SparsePolynomial::var(&v, 1);
        let p = &(&x * &x) - &y.scale(&q(1, 2));
        assert_eq!(p.to_string(), "z0^2 - 1/2*z1");
        let c = SparsePolynomial::constant(&v, q(-3, 1));
        assert_eq!((&p + &c).to_string(), "z0^2 - 1/2*z1 - 3");
        assert_eq!(SparsePolynomial::zero(&v).to_string(), "0");
    }

    #[test]
    fn cancellation_removes_terms() {
        let v = vars();
        let x = SparsePolynomial::var(&v, 0);
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x).degree(), None);
    }

    #[test]
    fn binomial_expansion() {
        let v = vars();
        let s = &SparsePolynomial::var(&v, 0) + &SparsePolynomial::var(&v, 1);
        let p = s.pow(3);
        assert_eq!(p.len(), 4);
        assert_eq!(p.coefficient(&[2, 1, 0]), q(3, 1));
        assert!(p.is_homogeneous());
    }

    #[test]
    fn json_roundtrip() {
        let v = vars();
        let p = &SparsePolynomial::var(&v, 2).pow(2).scale(&q(5, 7)) - &SparsePolynomial::var(&v, 0);
        let j = p.to_json();
        assert_eq!(SparsePolynomial::from_json(&j).unwrap(), p);
    }

    #[test]
    fn determinant_of_diagonal_and_swap() {
        let v = vars();
        let x = SparsePolynomial::var(&v, 0);
        let y = SparsePolynomial::var(&v, 1);
        let z = SparsePolynomial::zero(&v);
        let d = determinant(&[vec![x.clone(), z.clone()], vec![z.clone(), y.clone()]]).unwrap();
        assert_eq!(d, &x * &y);
        let s = determinant(&[vec![z.clone(), x.clone()], vec![y.clone(), z]]).unwrap();
        assert_eq!(s, -&(&x * &y));
    }

    #[test]
    fn divide_by_power() {
        let v = vars();
        let z = SparsePolynomial::var(&v, 2);
        let p = &z.pow(2) * &(&SparsePolynomial::var(&v, 0) + &z);
        let r = p.divide_by_var_power(2, 2).unwrap();
        assert_eq!(r, &SparsePolynomial::var(&v, 0) + &z);
        assert!(p.divide_by_var_power(2, 3).is_none());
    }

    fn small_poly() -> impl Strategy<Value = SparsePolynomial> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..5), 0..6).prop_map(|ts| {
            SparsePolynomial::from_terms(
                &vars(),
                ts.into_iter().map(|((a, b, c), k)| (vec![a, b, c], q(k, 1))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(), b in small_poly(), x in -3i64..4, y in -3i64..4, z in -3i64..4) {
            let p = vec![q(x, 1), q(y, 2), q(z, 3)];
            prop_assert_eq!((&a * &b).eval(&p), a.eval(&p) * b.eval(&p));
            prop_assert_eq!((&a - &b).eval(&p), a.eval(&p) - b.eval(&p));
        }

        #[test]
        fn leibniz_rule(a in small_poly(), b in small_poly(), i in 0usize..3) {
            let lhs = (&a * &b).derivative(i);
            let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
