//! Discriminant forms of small lattices and the value census of q_M.

use hesslat::finquad::{discriminant_form, is_isomorphic, FiniteQuadraticForm};
use hesslat::lattice::{m_lattice, Lattice, StandardLattice};

fn main() -> hesslat::Result<()> {
    let u = discriminant_form(&Lattice::standard(StandardLattice::U, 2)?)?;
    let v = discriminant_form(&Lattice::standard(StandardLattice::D(4), 1)?)?;
    println!("U(2):\n{u}");
    println!("D4:\n{v}");
    println!("U(2) ~ u: {}", is_isomorphic(&u, &FiniteQuadraticForm::u())?.is_isomorphic());
    println!("D4 ~ v: {}", is_isomorphic(&v, &FiniteQuadraticForm::v())?.is_isomorphic());
    println!("u ~ v: {}", is_isomorphic(&u, &v)?.is_isomorphic());

    let qm = discriminant_form(&m_lattice())?;
    println!("\nq_M census (order, q mod 2): count");
    for ((order, q), n) in qm.census()? {
        println!("  ({order}, {q}): {n}");
    }
    Ok(())
}
