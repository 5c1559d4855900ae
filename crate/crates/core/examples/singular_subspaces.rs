//! Maximal totally singular subspaces of u^5 and their incidences.

use std::collections::BTreeMap;
use std::time::Instant;

use hesslat::finquad::{enumerate_singular_subspaces, F2QuadraticSpace};

fn main() -> hesslat::Result<()> {
    for (name, space) in [
        ("u+v", F2QuadraticSpace::u().direct_sum(&F2QuadraticSpace::v())),
        ("u^5", F2QuadraticSpace::u().power(5)),
    ] {
        let (iso, non) = space.isotropic_census()?;
        println!("{name}: {iso} isotropic, {non} non-isotropic");
    }

    let u5 = F2QuadraticSpace::u().power(5);
    let t = Instant::now();
    let subs = enumerate_singular_subspaces(&u5)?;
    println!("{} subspaces in {:.0?}", subs.len(), t.elapsed());

    let mut per: BTreeMap<u64, usize> = BTreeMap::new();
    for s in &subs {
        for v in s.non_isotropic_vectors(&u5) {
            *per.entry(v).or_default() += 1;
        }
    }
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for c in per.values() {
        *hist.entry(*c).or_default() += 1;
    }
    println!("subspaces through a non-isotropic vector: {hist:?}");
    Ok(())
}
