//! Permutation groups via a deterministic Schreier-Sims stabilizer chain.

use num_bigint::BigUint;
use num_traits::One;

/// Permutation of `0..degree`, acting on the right: `p` sends `x` to `p[x]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    /// Checks that `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    fn first_moved_point(&self) -> Option<usize> {
        self.0.iter().enumerate().find(|(i, &x)| *i as u32 != x).map(|(i, _)| i)
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    gens: Vec<Perm>,
    orbit: Vec<usize>,
    /// `transversal[p]` maps the base point to `p`.
    transversal: Vec<Option<(Perm, Perm)>>,
    /// Schreier pairs `[0, done_points) x [0, done_gens)` are known to sift.
    done_points: usize,
    done_gens: usize,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        let id = Perm::identity(degree);
        transversal[base_point] = Some((id.clone(), id));
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point],
            transversal,
            done_points: 0,
            done_gens: 0,
        }
    }

    /// Extends the orbit to closure under the current generators.
    fn close_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for g in &self.gens {
                let q = g.apply(p);
                if self.transversal[q].is_none() {
                    let (u, _) = self.transversal[p].as_ref().expect("orbit point has a representative");
                    let uq = u.then(g);
                    let inv = uq.inverse();
                    self.transversal[q] = Some((uq, inv));
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    /// Runs Schreier-Sims on `generators` (all of the same degree).
    pub fn new(degree: usize, generators: &[Perm]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        let gens: Vec<Perm> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if chain.levels.iter().all(|l| g.apply(l.base_point) == l.base_point) {
                let b = g.first_moved_point().expect("non-identity permutation");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for lvl in 0..chain.levels.len() {
            let fixing: Vec<Perm> = gens
                .iter()
                .filter(|g| {
                    chain.levels[..lvl]
                        .iter()
                        .all(|l| g.apply(l.base_point) == l.base_point)
                })
                .cloned()
                .collect();
            chain.levels[lvl].gens = fixing;
            chain.levels[lvl].close_orbit();
        }
        chain.complete();
        chain
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let npoints = self.levels[lvl].orbit.len();
            let ngens = self.levels[lvl].gens.len();
            let (dp, dg) = (self.levels[lvl].done_points, self.levels[lvl].done_gens);
            for pi in 0..npoints {
                let g_start = if pi < dp { dg } else { 0 };
                for si in g_start..ngens {
                    let level = &self.levels[lvl];
                    let beta = level.orbit[pi];
                    let s = &level.gens[si];
                    let (u_beta, _) = level.transversal[beta].as_ref().expect("orbit point");
                    let image = s.apply(beta);
                    let (_, u_img_inv) = level.transversal[image].as_ref().expect("orbit is closed");
                    let h = u_beta.then(s).then(u_img_inv);
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, fail) = self.strip(h, lvl + 1);
                    if fail == self.levels.len() && residue.is_identity() {
                        continue;
                    }
                    if fail == self.levels.len() {
                        let b = residue.first_moved_point().expect("non-identity residue");
                        self.levels.push(Level::new(b, self.degree));
                    }
                    for l in lvl + 1..=fail {
                        self.levels[l].gens.push(residue.clone());
                        self.levels[l].close_orbit();
                    }
                    i = fail as isize;
                    continue 'outer;
                }
            }
            let level = &mut self.levels[lvl];
            level.done_points = npoints;
            level.done_gens = ngens;
            i -= 1;
        }
    }

    /// Sifts `g` through the chain from `start`; returns the residue and the
    /// level where sifting stopped (`levels.len()` when it passed every level).
    fn strip(&self, mut g: Perm, start: usize) -> (Perm, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply(level.base_point);
            match &level.transversal[beta] {
                None => return (g, l),
                Some((_, inv)) => g = g.then(inv),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Perm) -> bool {
        let (r, l) = self.strip(g.clone(), 0);
        l == self.levels.len() && r.is_identity()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// Orbit of `point` under the group generated by `gens`, in discovery order.
pub fn orbit(point: usize, gens: &[Perm]) -> Vec<usize> {
    let degree = gens.first().map_or(point + 1, Perm::degree);
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut out = vec![point];
    let mut i = 0;
    while i < out.len() {
        let p = out[i];
        for g in gens {
            let q = g.apply(p);
            if !seen[q] {
                seen[q] = true;
                out.push(q);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(degree: usize, pts: &[usize]) -> Perm {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        for w in 0..pts.len() {
            img[pts[w]] = pts[(w + 1) % pts.len()] as u32;
        }
        Perm::from_images(img).unwrap()
    }

    /// Brute-force closure of a small group.
    fn closure_size(gens: &[Perm]) -> usize {
        use std::collections::HashSet;
        let n = gens[0].degree();
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut stack = vec![Perm::identity(n)];
        seen.insert(Perm::identity(n));
        while let Some(p) = stack.pop() {
            for g in gens {
                let q = p.then(g);
                if seen.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..=7usize {
            let gens = [cycle(n, &[0, 1]), cycle(n, &(0..n).collect::<Vec<_>>())];
            let chain = StabilizerChain::new(n, &gens);
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(chain.order(), BigUint::from(fact));
        }
    }

    #[test]
    fn matches_brute_force_closure() {
        let gens = [cycle(8, &[0, 1, 2, 3]), cycle(8, &[4, 5, 6, 7]), cycle(8, &[0, 4])];
        let chain = StabilizerChain::new(8, &gens);
        assert_eq!(chain.order(), BigUint::from(closure_size(&gens)));
        let dihedral = [cycle(6, &[0, 1, 2, 3, 4, 5]), Perm::from_images(vec![0, 5, 4, 3, 2, 1]).unwrap()];
        let chain = StabilizerChain::new(6, &dihedral);
        assert_eq!(chain.order(), BigUint::from(12u32));
        assert!(chain.contains(&cycle(6, &[0, 2, 4]).then(&cycle(6, &[1, 3, 5]))));
        assert!(!chain.contains(&cycle(6, &[0, 1])));
    }

    #[test]
    fn trivial_group() {
        let chain = StabilizerChain::new(5, &[Perm::identity(5)]);
        assert_eq!(chain.order(), BigUint::one());
        assert!(chain.base().is_empty());
    }

    #[test]
    fn orbits() {
        let g = cycle(6, &[0, 2, 4]);
        let mut o = orbit(0, &[g]);
        o.sort();
        assert_eq!(o, vec![0, 2, 4]);
    }
}
