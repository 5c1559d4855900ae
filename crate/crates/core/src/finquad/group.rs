use num_bigint::BigUint;
use num_traits::One;

use super::iso::{ElementTable, IsometrySearch};
use super::{FiniteQuadraticForm, Isometry};
use crate::error::{Error, Result};
use crate::perm::{orbit, Perm, StabilizerChain};

/// The orthogonal group of a finite quadratic form, acting on its elements.
#[derive(Clone, Debug)]
pub struct OrthogonalGroup {
    order: BigUint,
    orbit_sizes: Vec<usize>,
    generators: Vec<Isometry>,
    permutations: Vec<Perm>,
    degree: usize,
}

impl OrthogonalGroup {
    pub fn order(&self) -> &BigUint {
        &self.order
    }

    /// Orbit lengths along the base `g_1, g_2, ...` of form generators.
    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    pub fn generators(&self) -> &[Isometry] {
        &self.generators
    }

    /// Generators as permutations of the elements in lexicographic order.
    pub fn permutations(&self) -> &[Perm] {
        &self.permutations
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Group order recomputed by plain Schreier-Sims from the generators.
    pub fn schreier_sims_order(&self) -> BigUint {
        if self.permutations.is_empty() {
            return BigUint::one();
        }
        StabilizerChain::new(self.degree, &self.permutations).order()
    }
}

/// Orthogonal group via a stabilizer chain with the form generators as base.
///
/// At level `i` the orbit of `g_i` under the pointwise stabilizer of
/// `g_1..g_{i-1}` is exactly the set of admissible images that extend to an
/// isometry. Every admissible image outside the current orbit is either shown
/// non-extendable by exhaustive search or contributes its extension as a new
/// strong generator.
pub fn orthogonal_group(form: &FiniteQuadraticForm) -> Result<OrthogonalGroup> {
    let table = ElementTable::new(form)?;
    let search = IsometrySearch::new(form, &table);
    let k = form.rank();
    let base: Vec<usize> = (0..k).map(|i| table.generator(i)).collect();
    let mut perms: Vec<Perm> = Vec::new();
    let mut images_list: Vec<Vec<usize>> = Vec::new();
    let mut orbit_sizes = vec![0usize; k];
    for lvl in (0..k).rev() {
        let mut in_orbit = vec![false; table.size];
        let mark = |perms: &[Perm], in_orbit: &mut Vec<bool>| {
            in_orbit.iter_mut().for_each(|x| *x = false);
            if perms.is_empty() {
                in_orbit[base[lvl]] = true;
            } else {
                for p in orbit(base[lvl], perms) {
                    in_orbit[p] = true;
                }
            }
        };
        mark(&perms, &mut in_orbit);
        for c in 0..table.size {
            if in_orbit[c] {
                continue;
            }
            let mut fixed: Vec<usize> = base[..lvl].to_vec();
            fixed.push(c);
            let mut found: Option<Vec<usize>> = None;
            search.run(&table, &fixed, |imgs| {
                found = Some(imgs.to_vec());
                true
            });
            if let Some(imgs) = found {
                let map = table.extend_hom(&table, &imgs);
                let perm = Perm::from_images(map.iter().map(|&x| x as u32).collect())
                    .ok_or_else(|| Error::CheckFailed("isometry is not a bijection".into()))?;
                perms.push(perm);
                images_list.push(imgs);
                mark(&perms, &mut in_orbit);
            }
        }
        orbit_sizes[lvl] = in_orbit.iter().filter(|&&x| x).count();
    }
    let order = orbit_sizes
        .iter()
        .fold(BigUint::one(), |acc, &s| acc * BigUint::from(s));
    let generators = images_list
        .iter()
        .map(|imgs| Isometry::new(imgs.iter().map(|&y| table.coords(y).to_vec()).collect()))
        .collect();
    Ok(OrthogonalGroup {
        order,
        orbit_sizes,
        generators,
        permutations: perms,
        degree: table.size,
    })
}
