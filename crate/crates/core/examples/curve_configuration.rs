//! The twenty-curve configuration: its lattice, involution, Petersen quotient
//! and the half-sum vectors.

use hesslat::config::{alpha_vectors, build_configuration, e6_complement, petersen_graph};

fn main() -> hesslat::Result<()> {
    let cfg = build_configuration()?;
    let n = cfg.n_lattice();
    println!("N: rank {}, signature {:?}, determinant {}", n.rank(), n.signature(), n.determinant());
    let labels: Vec<String> = cfg.labels().iter().map(ToString::to_string).collect();
    println!("curves: {}", labels.join(" "));
    let pairs: Vec<String> = (0..labels.len())
        .filter(|&i| i < cfg.sigma()[i])
        .map(|i| format!("{}<->{}", labels[i], labels[cfg.sigma()[i]]))
        .collect();
    println!("involution: {}", pairs.join(" "));

    let d = e6_complement(&cfg)?;
    println!("difference lattice: rank {}, determinant {}", d.lattice.rank(), d.determinant);
    println!("q_N ~ -q_M: {}", cfg.dual_form_isometry()?.witness().is_some());

    let p = petersen_graph(&cfg);
    println!("quotient graph is Petersen: {}", p.isomorphic_to_petersen);

    for a in alpha_vectors(&cfg)? {
        println!("{}: norm {}, q = {}, class {}", a.label, a.norm, a.q, a.class);
    }
    Ok(())
}
