//! Invariants and short vectors of the scaled root lattice E6(2).

use num_bigint::BigInt;

use hesslat::lattice::{e6_2_lattice, l_minus_lattice, m_lattice};
use hesslat::linalg::smith_normal_form;

fn main() -> hesslat::Result<()> {
    let r = e6_2_lattice();
    println!("Gram matrix:\n{}", r.gram());
    println!("rank {}, signature {:?}, determinant {}", r.rank(), r.signature(), r.determinant());
    let snf = smith_normal_form(r.gram());
    let d: Vec<String> = snf.diagonal().iter().map(ToString::to_string).collect();
    println!("elementary divisors: {}", d.join(" "));

    for norm in [-2, -4, -6] {
        let vs = r.short_vectors(&BigInt::from(norm))?;
        println!("norm {norm}: {} vectors", vs.len());
    }

    for (name, l) in [("M", m_lattice()), ("L-", l_minus_lattice())] {
        println!("{name}: rank {}, signature {:?}, determinant {}", l.rank(), l.signature(), l.determinant());
    }
    Ok(())
}
