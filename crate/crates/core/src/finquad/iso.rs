use std::collections::BTreeMap;

use num_integer::Integer;

use super::{DiscElement, FiniteQuadraticForm, QValue, MAX_TABLE};
use crate::error::{Error, Result};

/// All elements of a small form with cached orders, values and pairings
/// against the generators.
pub(crate) struct ElementTable<'a> {
    pub form: &'a FiniteQuadraticForm,
    pub size: usize,
    k: usize,
    strides: Vec<usize>,
    coords: Vec<u64>,
    pub order: Vec<u64>,
    /// q scaled to `form.denom()`.
    pub q: Vec<u64>,
    /// `beta[x * k + j] = b(x, g_j) * denom`.
    beta: Vec<u64>,
}

impl<'a> ElementTable<'a> {
    pub fn new(form: &'a FiniteQuadraticForm) -> Result<Self> {
        let size = form
            .group_order_within(MAX_TABLE)
            .ok_or_else(|| Error::Oversize(format!("group of order {}", form.group_order())))?
            as usize;
        let k = form.rank();
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * form.orders[i + 1] as usize;
        }
        let mut coords = Vec::with_capacity(size * k);
        let mut order = Vec::with_capacity(size);
        let mut q = Vec::with_capacity(size);
        let mut beta = Vec::with_capacity(size * k);
        let units: Vec<Vec<u64>> = (0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect();
        form.for_each_coords(MAX_TABLE, |x| {
            coords.extend_from_slice(x);
            order.push(form.order_of(x));
            q.push(form.q_scaled(x));
            for e in &units {
                beta.push(form.b_scaled(x, e));
            }
        })?;
        Ok(ElementTable {
            form,
            size,
            k,
            strides,
            coords,
            order,
            q,
            beta,
        })
    }

    pub fn coords(&self, x: usize) -> &[u64] {
        &self.coords[x * self.k..(x + 1) * self.k]
    }

    pub fn generator(&self, i: usize) -> usize {
        self.strides[i]
    }

    /// `b(x, y) * denom`.
    pub fn b(&self, x: usize, y: usize) -> u64 {
        let d = self.form.denom() as u128;
        let bx = &self.beta[x * self.k..(x + 1) * self.k];
        let mut acc: u128 = 0;
        for (j, &c) in self.coords(y).iter().enumerate() {
            if c != 0 {
                acc += c as u128 * bx[j] as u128 % d;
            }
        }
        (acc % d) as u64
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        let (cx, cy) = (self.coords(x), self.coords(y));
        (0..self.k)
            .map(|i| ((cx[i] + cy[i]) % self.form.orders[i]) as usize * self.strides[i])
            .sum()
    }

    /// Image of every element under the homomorphism sending generator `i`
    /// to `images[i]`.
    pub fn extend_hom(&self, dst: &ElementTable, images: &[usize]) -> Vec<usize> {
        let mut out = vec![0usize; self.size];
        for x in 1..self.size {
            // Peel off one unit of the last nonzero coordinate.
            let c = self.coords(x);
            let i = (0..self.k).rev().find(|&i| c[i] != 0).expect("nonzero element");
            out[x] = dst.add(out[x - self.strides[i]], images[i]);
        }
        out
    }
}

/// Scaling between two tables' denominators.
struct Scales {
    src_q: Vec<u64>,
    src_b: Vec<Vec<u64>>,
    dst_factor: u64,
    modulus: u64,
}

impl Scales {
    fn new(src: &FiniteQuadraticForm, dst: &FiniteQuadraticForm) -> Self {
        let l = src.denom().lcm(&dst.denom());
        let fs = l / src.denom();
        let k = src.rank();
        Scales {
            src_q: (0..k).map(|i| src.qn[i] * fs).collect(),
            src_b: (0..k).map(|i| (0..k).map(|j| src.bn[i][j] * fs).collect()).collect(),
            dst_factor: l / dst.denom(),
            modulus: l,
        }
    }
}

/// Depth-first search for isometries src -> dst by generator images.
pub(crate) struct IsometrySearch {
    sc: Scales,
    candidates: Vec<Vec<usize>>,
}

impl IsometrySearch {
    pub fn new(src: &FiniteQuadraticForm, dst: &ElementTable) -> Self {
        let sc = Scales::new(src, dst.form);
        let two_l = 2 * sc.modulus as u128;
        let candidates = (0..src.rank())
            .map(|i| {
                (0..dst.size)
                    .filter(|&y| {
                        dst.order[y] == src.orders[i]
                            && (dst.q[y] as u128 * sc.dst_factor as u128) % two_l == sc.src_q[i] as u128
                    })
                    .collect()
            })
            .collect();
        IsometrySearch { sc, candidates }
    }

    /// Extends `fixed` (images of the first generators), calling `accept` on
    /// each complete assignment until it returns true.
    pub fn run<F>(&self, dst: &ElementTable, fixed: &[usize], mut accept: F) -> bool
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut images: Vec<usize> = Vec::with_capacity(self.candidates.len());
        for (i, &y) in fixed.iter().enumerate() {
            if self.candidates[i].binary_search(&y).is_err() || !self.consistent(dst, &images, i, y) {
                return false;
            }
            images.push(y);
        }
        self.rec(dst, &mut images, &mut accept)
    }

    fn rec<F: FnMut(&[usize]) -> bool>(&self, dst: &ElementTable, images: &mut Vec<usize>, accept: &mut F) -> bool {
        let i = images.len();
        if i == self.candidates.len() {
            return accept(images);
        }
        for &y in &self.candidates[i] {
            if self.consistent(dst, images, i, y) {
                images.push(y);
                let stop = self.rec(dst, images, accept);
                images.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }

    fn consistent(&self, dst: &ElementTable, images: &[usize], i: usize, y: usize) -> bool {
        let (f, m) = (self.sc.dst_factor as u128, self.sc.modulus as u128);
        images
            .iter()
            .enumerate()
            .all(|(j, &yj)| (dst.b(y, yj) as u128 * f) % m == self.sc.src_b[i][j] as u128)
    }
}

/// An isomorphism of finite quadratic forms, given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isometry {
    images: Vec<Vec<u64>>,
}

impl Isometry {
    pub(crate) fn new(images: Vec<Vec<u64>>) -> Self {
        Isometry { images }
    }

    /// Coordinates (in the target) of the image of each source generator.
    pub fn generator_images(&self) -> &[Vec<u64>] {
        &self.images
    }

    pub fn apply(&self, dst: &FiniteQuadraticForm, x: &DiscElement) -> DiscElement {
        let mut y = vec![0u64; dst.rank()];
        for (c, img) in x.coords().iter().zip(&self.images) {
            for j in 0..y.len() {
                y[j] = ((y[j] as u128 + *c as u128 * img[j] as u128) % dst.orders[j] as u128) as u64;
            }
        }
        dst.element_reduced(y)
    }

    /// Checks on every element that the map is a bijection preserving q.
    pub fn verify(&self, src: &FiniteQuadraticForm, dst: &FiniteQuadraticForm) -> Result<bool> {
        if src.group_order() != dst.group_order() || self.images.len() != src.rank() {
            return Ok(false);
        }
        let mut seen = std::collections::HashSet::new();
        let mut ok = true;
        src.for_each_coords(super::MAX_ENUMERATION, |x| {
            let e = src.element_reduced(x.to_vec());
            let y = self.apply(dst, &e);
            ok &= y.q() == e.q();
            ok &= seen.insert(y.coords().to_vec());
        })?;
        Ok(ok)
    }
}

/// Why two forms are not isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    GroupStructure { left: Vec<u64>, right: Vec<u64> },
    Census {
        order: u64,
        value: QValue,
        left: usize,
        right: usize,
    },
    SignatureMod8 { left: u8, right: u8 },
    /// Backtracking found no isometry.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic(Isometry),
    NotIsomorphic(Obstruction),
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }

    pub fn witness(&self) -> Option<&Isometry> {
        match self {
            IsoOutcome::Isomorphic(w) => Some(w),
            IsoOutcome::NotIsomorphic(_) => None,
        }
    }
}

/// Decides isomorphism: invariant screen, then a search for generator images.
pub fn is_isomorphic(a: &FiniteQuadraticForm, b: &FiniteQuadraticForm) -> Result<IsoOutcome> {
    let (fa, fb) = (a.invariant_factors(), b.invariant_factors());
    if fa != fb {
        return Ok(IsoOutcome::NotIsomorphic(Obstruction::GroupStructure { left: fa, right: fb }));
    }
    let (ca, cb) = (a.census()?, b.census()?);
    if ca != cb {
        let keys: std::collections::BTreeSet<&(u64, QValue)> = ca.keys().chain(cb.keys()).collect();
        for key in keys {
            let (l, r) = (ca.get(key).copied().unwrap_or(0), cb.get(key).copied().unwrap_or(0));
            if l != r {
                return Ok(IsoOutcome::NotIsomorphic(Obstruction::Census {
                    order: key.0,
                    value: key.1.clone(),
                    left: l,
                    right: r,
                }));
            }
        }
    }
    let (sa, sb) = (a.signature_mod8()?, b.signature_mod8()?);
    if sa != sb {
        return Ok(IsoOutcome::NotIsomorphic(Obstruction::SignatureMod8 { left: sa, right: sb }));
    }
    let tb = ElementTable::new(b)?;
    let mut found: Option<Vec<usize>> = None;
    IsometrySearch::new(a, &tb).run(&tb, &[], |imgs| {
        found = Some(imgs.to_vec());
        true
    });
    Ok(match found {
        Some(imgs) => IsoOutcome::Isomorphic(Isometry {
            images: imgs.iter().map(|&y| tb.coords(y).to_vec()).collect(),
        }),
        None => IsoOutcome::NotIsomorphic(Obstruction::Exhausted),
    })
}

/// A cyclic isotropic glue subgroup and the resulting quotient.
#[derive(Clone, Debug)]
pub struct GlueWitness {
    pub generator: DiscElement,
    pub quotient: FiniteQuadraticForm,
    pub isometry: Isometry,
}

/// Searches cyclic isotropic subgroups H of order `glue_order` whose
/// quotient H-perp/H is isomorphic to `target`. Returns the first in
/// lexicographic order of generators, or `None` after exhausting them.
pub fn glue_check(
    big: &FiniteQuadraticForm,
    glue_order: u64,
    target: &FiniteQuadraticForm,
) -> Result<Option<GlueWitness>> {
    if glue_order == 0 {
        return Err(Error::InvalidParameters("glue order must be positive".into()));
    }
    let mut candidates = Vec::new();
    big.for_each_coords(super::MAX_ENUMERATION, |x| {
        if big.order_of(x) == glue_order && big.q_scaled(x) == 0 {
            candidates.push(x.to_vec());
        }
    })?;
    let expected = target.group_order() * glue_order * glue_order;
    if big.group_order() != expected {
        return Ok(None);
    }
    let mut tried: BTreeMap<Vec<u64>, ()> = BTreeMap::new();
    for c in candidates {
        let h = big.element_reduced(c);
        // One representative per cyclic subgroup: skip if a generator was seen.
        let mut gens = Vec::new();
        for n in 1..glue_order {
            if n.gcd(&glue_order) == 1 {
                gens.push(big.scale(n as i64, &h).coords().to_vec());
            }
        }
        if gens.iter().any(|g| tried.contains_key(g)) {
            continue;
        }
        tried.insert(h.coords().to_vec(), ());
        let quotient = big.orthogonal_quotient(std::slice::from_ref(&h))?;
        if let IsoOutcome::Isomorphic(isometry) = is_isomorphic(&quotient, target)? {
            return Ok(Some(GlueWitness {
                generator: h,
                quotient,
                isometry,
            }));
        }
    }
    Ok(None)
}
