//! Cubic surfaces in pentahedral form `sum lambda_i x_i^3 = 0` with
//! `x_1 + ... + x_5 = 0`, their Hessian quartics, and the quadrics
//! `(lambda_i - lambda_j)(lambda_k - lambda_l)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::finquad::parse_rational;
use crate::graph::k_subsets;
use crate::linalg::{kernel_basis, IntMatrix, RatMatrix};
use crate::poly::{determinant, variable_names, SparsePolynomial};

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `z0, z1, z2, z3`.
pub fn z_vars() -> Vec<String> {
    variable_names("z", 4)
}

/// `l1, ..., l5`.
pub fn lambda_vars() -> Vec<String> {
    (1..=5).map(|i| format!("l{i}")).collect()
}

/// Parses five comma-separated rationals such as `1,1,4/3,4,4`.
pub fn parse_lambda(s: &str) -> Result<Vec<BigRational>> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(Error::Parse(format!("expected 5 comma-separated values, got {}", parts.len())));
    }
    parts.iter().map(|p| parse_rational(p)).collect()
}

pub fn lambda_from_ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&x| int(x)).collect()
}

/// `x_i = z_{i-1}` for `i <= 4` and `x_5 = -(z0 + z1 + z2 + z3)`.
pub fn default_forms() -> Vec<Vec<BigRational>> {
    let mut f: Vec<Vec<BigRational>> = (0..4)
        .map(|i| (0..4).map(|j| int((i == j) as i64)).collect())
        .collect();
    f.push(vec![int(-1); 4]);
    f
}

/// A second choice with every 4-subset independent and non-unimodular minors.
pub fn alternative_forms() -> Vec<Vec<BigRational>> {
    let rows: [[i64; 4]; 4] = [[1, 2, 0, -1], [0, 1, 3, 1], [2, -1, 1, 0], [1, 1, -1, 3]];
    let mut f: Vec<Vec<BigRational>> = rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
    let last: Vec<BigRational> = (0..4).map(|j| -f.iter().map(|r| r[j].clone()).sum::<BigRational>()).collect();
    f.push(last);
    f
}

fn validate_forms(forms: &[Vec<BigRational>]) -> Result<()> {
    if forms.len() != 5 || forms.iter().any(|r| r.len() != 4) {
        return Err(Error::DimensionMismatch("expected five linear forms in four variables".into()));
    }
    for j in 0..4 {
        if !forms.iter().map(|r| r[j].clone()).sum::<BigRational>().is_zero() {
            return Err(Error::InvalidParameters("linear forms do not sum to zero".into()));
        }
    }
    for skip in 0..5 {
        let mut m = RatMatrix::zeros(4, 4);
        for (r, row) in forms.iter().enumerate().filter(|&(r, _)| r != skip).enumerate() {
            for j in 0..4 {
                m.set(r, j, row.1[j].clone());
            }
        }
        if m.rank() != 4 {
            return Err(Error::InvalidParameters(format!(
                "forms other than x{} are dependent",
                skip + 1
            )));
        }
    }
    Ok(())
}

/// A cubic in pentahedral form with its Hessian quartic.
#[derive(Clone, Debug)]
pub struct SylvesterData {
    lambda: Vec<BigRational>,
    forms: Vec<Vec<BigRational>>,
    x: Vec<SparsePolynomial>,
    cubic: SparsePolynomial,
    hessian: SparsePolynomial,
}

pub fn sylvester_cubic(lambda: &[BigRational]) -> Result<SylvesterData> {
    sylvester_cubic_with_forms(lambda, &default_forms())
}

pub fn sylvester_cubic_with_forms(lambda: &[BigRational], forms: &[Vec<BigRational>]) -> Result<SylvesterData> {
    if lambda.len() != 5 {
        return Err(Error::DimensionMismatch(format!("{} coefficients, expected 5", lambda.len())));
    }
    if let Some(i) = lambda.iter().position(Zero::is_zero) {
        return Err(Error::ZeroCoefficient { index: i + 1 });
    }
    validate_forms(forms)?;
    let vars = z_vars();
    let x: Vec<SparsePolynomial> = forms.iter().map(|f| SparsePolynomial::linear(&vars, f)).collect();
    let mut cubic = SparsePolynomial::zero(&vars);
    for (l, xi) in lambda.iter().zip(&x) {
        cubic = &cubic + &xi.pow(3).scale(l);
    }
    let hessian = hessian_quartic(&cubic)?;
    Ok(SylvesterData {
        lambda: lambda.to_vec(),
        forms: forms.to_vec(),
        x,
        cubic,
        hessian,
    })
}

/// Determinant of the matrix of second partials; zero is a valid answer.
pub fn hessian_quartic(f: &SparsePolynomial) -> Result<SparsePolynomial> {
    let n = f.nvars();
    let first: Vec<SparsePolynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let m: Vec<Vec<SparsePolynomial>> = (0..n)
        .map(|i| (0..n).map(|j| first[i].derivative(j)).collect())
        .collect();
    determinant(&m)
}

impl SylvesterData {
    pub fn lambda(&self) -> &[BigRational] {
        &self.lambda
    }

    pub fn forms(&self) -> &[Vec<BigRational>] {
        &self.forms
    }

    /// The linear form `x_i`, `i` in `1..=5`.
    pub fn x(&self, i: usize) -> &SparsePolynomial {
        &self.x[i - 1]
    }

    pub fn cubic(&self) -> &SparsePolynomial {
        &self.cubic
    }

    pub fn hessian(&self) -> &SparsePolynomial {
        &self.hessian
    }

    /// `sum_i prod_{j != i} lambda_j x_j`, the quartic `sum 1/(lambda_i x_i)` cleared.
    pub fn cleared_reciprocal_form(&self) -> SparsePolynomial {
        let vars = z_vars();
        let mut p = SparsePolynomial::zero(&vars);
        for i in 0..5 {
            let mut t = SparsePolynomial::one(&vars);
            for j in (0..5).filter(|&j| j != i) {
                t = &t * &self.x[j].scale(&self.lambda[j]);
            }
            p = &p + &t;
        }
        p
    }

    /// The point `x_i = x_j = x_k = 0` (indices in `1..=5`).
    pub fn node(&self, triple: [usize; 3]) -> Vec<BigRational> {
        let k = self.kernel(&triple);
        k[0].clone()
    }

    /// Integer basis of the common zeros of the given forms, in z-coordinates.
    fn kernel(&self, idx: &[usize]) -> Vec<Vec<BigRational>> {
        let m = integer_rows(idx.iter().map(|&i| self.forms[i - 1].clone()).collect());
        kernel_basis(&m)
            .into_iter()
            .map(|v| v.into_iter().map(BigRational::from_integer).collect())
            .collect()
    }

    fn gradient_at(&self, p: &[BigRational]) -> Vec<BigRational> {
        (0..4).map(|i| self.hessian.derivative(i).eval(p)).collect()
    }
}

/// Each row scaled by the lcm of its denominators.
fn integer_rows(rows: Vec<Vec<BigRational>>) -> IntMatrix {
    let mut out = IntMatrix::zeros(rows.len(), 4);
    for (r, row) in rows.iter().enumerate() {
        let den = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let den = BigRational::from_integer(den);
        for (c, v) in row.iter().enumerate() {
            out.set(r, c, (v * &den).to_integer());
        }
    }
    out
}

/// Verifies `Hess(F) = c * P` for the cleared reciprocal form `P` and returns `c`.
pub fn verify_hessian_identity(d: &SylvesterData) -> Result<BigRational> {
    let p = d.cleared_reciprocal_form();
    match d.hessian.proportionality(&p) {
        Some(c) if !c.is_zero() => Ok(c),
        _ => Err(Error::CheckFailed("Hessian is not proportional to the cleared reciprocal form".into())),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeCheck {
    pub triple: [usize; 3],
    pub point: Vec<String>,
    pub singular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct LineCheck {
    pub pair: [usize; 2],
    pub contained: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeReport {
    pub nodes: Vec<NodeCheck>,
    pub lines: Vec<LineCheck>,
    /// A point on the first line away from all nodes.
    pub sample_point: Option<Vec<String>>,
    pub sample_gradient_nonzero: bool,
}

impl NodeReport {
    pub fn passes(&self) -> bool {
        self.nodes.len() == 10
            && self.nodes.iter().all(|n| n.singular)
            && self.lines.len() == 10
            && self.lines.iter().all(|l| l.contained)
            && self.sample_gradient_nonzero
    }
}

pub fn singular_locus_check(d: &SylvesterData) -> Result<NodeReport> {
    let mut nodes = Vec::new();
    for t in k_subsets(5, 3) {
        let triple = [t[0] + 1, t[1] + 1, t[2] + 1];
        let p = d.node(triple);
        let singular = d.hessian.eval(&p).is_zero() && d.gradient_at(&p).iter().all(Zero::is_zero);
        nodes.push(NodeCheck {
            triple,
            point: p.iter().map(ToString::to_string).collect(),
            singular,
        });
    }
    let st = variable_names("t", 2);
    let mut lines = Vec::new();
    for pr in k_subsets(5, 2) {
        let pair = [pr[0] + 1, pr[1] + 1];
        let k = d.kernel(&pair);
        let subs: Vec<SparsePolynomial> = (0..4)
            .map(|c| SparsePolynomial::linear(&st, &[k[0][c].clone(), k[1][c].clone()]))
            .collect();
        let restricted = d.hessian.compose(&subs)?;
        lines.push(LineCheck {
            pair,
            contained: restricted.is_zero(),
        });
    }
    let k = d.kernel(&[1, 2]);
    let mut sample_point = None;
    let mut sample_gradient_nonzero = false;
    'search: for s in 1..6i64 {
        for t in 1..6i64 {
            let p: Vec<BigRational> = (0..4).map(|c| &k[0][c] * int(s) + &k[1][c] * int(t)).collect();
            let off_nodes = (3..=5).all(|i| !d.x(i).eval(&p).is_zero());
            if off_nodes && d.hessian.eval(&p).is_zero() {
                sample_gradient_nonzero = d.gradient_at(&p).iter().any(|g| !g.is_zero());
                sample_point = Some(p.iter().map(ToString::to_string).collect());
                break 'search;
            }
        }
    }
    Ok(NodeReport {
        nodes,
        lines,
        sample_point,
        sample_gradient_nonzero,
    })
}

/// The product over the 16 sign choices (first sign fixed) of
/// `sum eps_i / sqrt(lambda_i)`, computed in `Q[s]/(s_i^2 - 1/lambda_i)`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaSing {
    pub product: String,
    /// `product * (lambda_1 ... lambda_5)^8`, a polynomial value in the lambda_i.
    pub cleared: String,
    pub vanishes: bool,
    #[serde(skip)]
    pub product_exact: BigRational,
}

pub fn delta_sing(lambda: &[BigRational]) -> Result<DeltaSing> {
    if lambda.len() != 5 {
        return Err(Error::DimensionMismatch(format!("{} coefficients, expected 5", lambda.len())));
    }
    if let Some(i) = lambda.iter().position(Zero::is_zero) {
        return Err(Error::ZeroCoefficient { index: i + 1 });
    }
    let inv: Vec<BigRational> = lambda.iter().map(|l| l.recip()).collect();
    // Elements are indexed by squarefree monomials: bit i set means s_i.
    let mut acc = vec![BigRational::zero(); 32];
    acc[0] = BigRational::one();
    for signs in 0u32..16 {
        let mut factor = vec![BigRational::zero(); 32];
        factor[1] = BigRational::one();
        for i in 1..5 {
            factor[1 << i] = if signs >> (i - 1) & 1 == 1 { -BigRational::one() } else { BigRational::one() };
        }
        let mut next = vec![BigRational::zero(); 32];
        for (a, ca) in acc.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in factor.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let mut c = ca * cb;
                for (i, v) in inv.iter().enumerate() {
                    if (a & b) >> i & 1 == 1 {
                        c *= v;
                    }
                }
                next[a ^ b] += c;
            }
        }
        acc = next;
    }
    if acc[1..].iter().any(|c| !c.is_zero()) {
        return Err(Error::CheckFailed("sign product is not rational".into()));
    }
    let product = acc[0].clone();
    let prod_lambda: BigRational = lambda.iter().fold(BigRational::one(), |a, l| a * l);
    let mut cleared = product.clone();
    for _ in 0..8 {
        cleared *= &prod_lambda;
    }
    Ok(DeltaSing {
        product: product.to_string(),
        cleared: cleared.to_string(),
        vanishes: product.is_zero(),
        product_exact: product,
    })
}

/// Floating-point evaluation of the same product, for cross-checks only.
pub fn delta_sing_approx(lambda: &[f64]) -> f64 {
    let r: Vec<f64> = lambda.iter().map(|l| 1.0 / l.sqrt()).collect();
    (0u32..16)
        .map(|signs| {
            r[0] + (1..5)
                .map(|i| if signs >> (i - 1) & 1 == 1 { -r[i] } else { r[i] })
                .sum::<f64>()
        })
        .product()
}

/// The plane section `x_i + x_j = 0` of the Hessian quartic.
#[derive(Clone, Debug, Serialize)]
pub struct EckardtReport {
    pub pair: [usize; 2],
    pub node: [usize; 3],
    pub lambda_equal: bool,
    /// The section in plane coordinates `(a, b, c)` with `c = x_i`.
    pub section: String,
    pub divisible_by_line_squared: bool,
    pub residual_conic: Option<Vec<Vec<String>>>,
    pub conic_rank: Option<usize>,
    pub node_is_conic_vertex: bool,
}

impl EckardtReport {
    pub fn passes(&self) -> bool {
        self.lambda_equal
            && self.divisible_by_line_squared
            && self.conic_rank.is_some_and(|r| r <= 2)
            && self.node_is_conic_vertex
    }
}

/// Restricts the Hessian to `x_i + x_j = 0` in coordinates `(a, b, c)` where
/// the line `x_i = x_j = 0` is `c = 0`, and tests for `c^2 * (line pair
/// through the node x_k = x_m = x_n = 0)`.
pub fn eckardt_section(d: &SylvesterData, i: usize, j: usize) -> Result<EckardtReport> {
    if i == j || !(1..=5).contains(&i) || !(1..=5).contains(&j) {
        return Err(Error::InvalidParameters(format!("index pair ({i}, {j})")));
    }
    let (i, j) = (i.min(j), i.max(j));
    let rest: Vec<usize> = (1..=5).filter(|&k| k != i && k != j).collect();
    let line = d.kernel(&[i, j]);
    let sum: Vec<BigRational> = (0..4).map(|c| &d.forms[i - 1][c] + &d.forms[j - 1][c]).collect();
    let plane = {
        let m = integer_rows(vec![sum]);
        kernel_basis(&m)
    };
    let xi = |v: &[BigRational]| d.x(i).eval(v);
    let w3: Vec<BigRational> = plane
        .iter()
        .map(|v| v.iter().cloned().map(BigRational::from_integer).collect::<Vec<_>>())
        .find(|v| !xi(v).is_zero())
        .ok_or_else(|| Error::CheckFailed("x_i vanishes on the plane".into()))?;
    let abc: Vec<String> = ["a", "b", "c"].iter().map(|n| n.to_string()).collect();
    let subs: Vec<SparsePolynomial> = (0..4)
        .map(|c| SparsePolynomial::linear(&abc, &[line[0][c].clone(), line[1][c].clone(), w3[c].clone()]))
        .collect();
    let section = d.hessian.compose(&subs)?;
    let residual = if section.is_zero() { None } else { section.divide_by_var_power(2, 2) };
    let node_z = d.node([rest[0], rest[1], rest[2]]);
    let node_abc = plane_coordinates(&[line[0].clone(), line[1].clone(), w3.clone()], &node_z)?;
    let (residual_conic, conic_rank, node_is_conic_vertex) = match &residual {
        Some(r) if r.degree() == Some(2) && r.is_homogeneous() => {
            let mut q = RatMatrix::zeros(3, 3);
            for a in 0..3 {
                for b in 0..3 {
                    let mut e = vec![0u32; 3];
                    e[a] += 1;
                    e[b] += 1;
                    let c = r.coefficient(&e);
                    q.set(a, b, if a == b { c } else { c / int(2) });
                }
            }
            let vertex = q.mul_vec(&node_abc).iter().all(Zero::is_zero);
            let text = (0..3).map(|a| q.row(a).iter().map(ToString::to_string).collect()).collect();
            (Some(text), Some(q.rank()), vertex)
        }
        _ => (None, None, false),
    };
    Ok(EckardtReport {
        pair: [i, j],
        node: [rest[0], rest[1], rest[2]],
        lambda_equal: d.lambda[i - 1] == d.lambda[j - 1],
        section: section.to_string(),
        divisible_by_line_squared: residual.is_some(),
        residual_conic,
        conic_rank,
        node_is_conic_vertex,
    })
}

/// Coordinates of `z` in the basis `w`, which must span a space containing it.
fn plane_coordinates(w: &[Vec<BigRational>], z: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut m = RatMatrix::zeros(4, 4);
    for r in 0..4 {
        for (c, v) in w.iter().enumerate() {
            m.set(r, c, v[r].clone());
        }
        m.set(r, 3, -z[r].clone());
    }
    let den = m.common_denominator();
    let k = kernel_basis(&m.scaled_to_integer(&den).expect("cleared"));
    let v = k
        .into_iter()
        .find(|v| !v[3].is_zero())
        .ok_or_else(|| Error::CheckFailed("point is not in the plane".into()))?;
    let last = BigRational::from_integer(v[3].clone());
    Ok(v[..3].iter().map(|x| BigRational::from_integer(x.clone()) / &last).collect())
}

/// `(lambda_i - lambda_j)(lambda_k - lambda_l)`.
pub fn pair_quadric(p: (u8, u8), q: (u8, u8)) -> SparsePolynomial {
    let v = lambda_vars();
    let diff = |a: u8, b: u8| &SparsePolynomial::var(&v, a as usize - 1) - &SparsePolynomial::var(&v, b as usize - 1);
    &diff(p.0, p.1) * &diff(q.0, q.1)
}

/// The 15 products over pairs of disjoint index pairs, pairs sorted.
pub fn segre_quadrics() -> Vec<((u8, u8), (u8, u8), SparsePolynomial)> {
    let pairs: Vec<(u8, u8)> = k_subsets(5, 2)
        .iter()
        .map(|p| (p[0] as u8 + 1, p[1] as u8 + 1))
        .collect();
    let mut out = Vec::new();
    for (a, &p) in pairs.iter().enumerate() {
        for &q in &pairs[a + 1..] {
            if p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1 {
                out.push((p, q, pair_quadric(p, q)));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct SegreReport {
    pub quadrics: Vec<String>,
    pub span_dimension: usize,
    pub linear_relation_holds: bool,
    pub cubic_relation_holds: bool,
    /// The five lines where four coordinates agree lie in the base locus.
    pub four_equal_lines_in_base_locus: bool,
    /// Generic points of the ten planes `lambda_i = lambda_j = lambda_k`
    /// that lie in the base locus (none expected).
    pub three_equal_planes_in_base_locus: usize,
    /// Set partitions of `{1..5}` whose equal-coordinate locus lies in the
    /// base locus; exactly those with a block of size at least four.
    pub base_locus_partitions: Vec<Vec<Vec<usize>>>,
}

impl SegreReport {
    pub fn passes(&self) -> bool {
        self.quadrics.len() == 15
            && self.span_dimension == 5
            && self.linear_relation_holds
            && self.cubic_relation_holds
            && self.four_equal_lines_in_base_locus
    }
}

fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i + 1);
            rec(i + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i + 1]);
        rec(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn segre_system() -> Result<SegreReport> {
    let quads = segre_quadrics();
    let monomials: Vec<Vec<u32>> = {
        let mut m = Vec::new();
        for a in 0..5 {
            for b in a..5 {
                let mut e = vec![0u32; 5];
                e[a] += 1;
                e[b] += 1;
                m.push(e);
            }
        }
        m
    };
    let mut coeffs = RatMatrix::zeros(quads.len(), monomials.len());
    for (r, (_, _, q)) in quads.iter().enumerate() {
        for (c, e) in monomials.iter().enumerate() {
            coeffs.set(r, c, q.coefficient(e));
        }
    }
    let span_dimension = coeffs.rank();

    let xi = pair_quadric((1, 2), (3, 5));
    let eta = pair_quadric((1, 3), (4, 5));
    let zeta = pair_quadric((1, 4), (2, 5));
    let xi2 = pair_quadric((1, 2), (4, 5));
    let eta2 = pair_quadric((1, 3), (2, 5));
    let zeta2 = pair_quadric((1, 4), (3, 5));
    let linear = &(&(&xi + &eta) + &zeta) - &(&(&xi2 + &eta2) + &zeta2);
    let cubic = &(&(&xi * &eta) * &zeta) - &(&(&xi2 * &eta2) * &zeta2);

    let st = variable_names("t", 2);
    let s = SparsePolynomial::var(&st, 0);
    let t = SparsePolynomial::var(&st, 1);
    let mut four_equal = true;
    for i in 0..5 {
        let subs: Vec<SparsePolynomial> = (0..5).map(|k| if k == i { t.clone() } else { s.clone() }).collect();
        for (_, _, q) in &quads {
            four_equal &= q.compose(&subs)?.is_zero();
        }
    }
    let generic = [int(2), int(3), int(7)];
    let mut three_equal = 0;
    for trip in k_subsets(5, 3) {
        let others: Vec<usize> = (0..5).filter(|k| !trip.contains(k)).collect();
        let mut p = vec![generic[0].clone(); 5];
        p[others[0]] = generic[1].clone();
        p[others[1]] = generic[2].clone();
        if quads.iter().all(|(_, _, q)| q.eval(&p).is_zero()) {
            three_equal += 1;
        }
    }
    let primes = [2i64, 3, 5, 7, 11];
    let mut base_locus_partitions = Vec::new();
    for part in set_partitions(5) {
        let mut p = vec![int(0); 5];
        for (b, block) in part.iter().enumerate() {
            for &k in block {
                p[k - 1] = int(primes[b]);
            }
        }
        if quads.iter().all(|(_, _, q)| q.eval(&p).is_zero()) {
            base_locus_partitions.push(part);
        }
    }
    Ok(SegreReport {
        quadrics: quads
            .iter()
            .map(|(p, q, _)| format!("(l{}-l{})(l{}-l{})", p.0, p.1, q.0, q.1))
            .collect(),
        span_dimension,
        linear_relation_holds: linear.is_zero(),
        cubic_relation_holds: cubic.is_zero(),
        four_equal_lines_in_base_locus: four_equal,
        three_equal_planes_in_base_locus: three_equal,
        base_locus_partitions,
    })
}

/// Value of each of the 15 quadrics at a point, with the vanishing factors.
#[derive(Clone, Debug, Serialize)]
pub struct QuadricValue {
    pub first: (u8, u8),
    pub second: (u8, u8),
    pub value: String,
    /// Index pairs among the two factors with `lambda_i = lambda_j`.
    pub eckardt_pairs: Vec<(u8, u8)>,
}

pub fn evaluate_quadrics(lambda: &[BigRational]) -> Result<Vec<QuadricValue>> {
    if lambda.len() != 5 {
        return Err(Error::DimensionMismatch(format!("{} coefficients, expected 5", lambda.len())));
    }
    Ok(segre_quadrics()
        .into_iter()
        .map(|(p, q, poly)| {
            let eckardt_pairs = [p, q]
                .into_iter()
                .filter(|&(a, b)| lambda[a as usize - 1] == lambda[b as usize - 1])
                .collect();
            QuadricValue {
                first: p,
                second: q,
                value: poly.eval(lambda).to_string(),
                eckardt_pairs,
            }
        })
        .collect())
}
