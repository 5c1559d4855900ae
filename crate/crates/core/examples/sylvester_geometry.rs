//! Hessian quartic of a cubic surface in pentahedral form.

use hesslat::sylvester::{
    delta_sing, eckardt_section, lambda_from_ints, singular_locus_check, sylvester_cubic, verify_hessian_identity,
};

fn main() -> hesslat::Result<()> {
    for l in [[1, 1, 1, 1, 1], [1, 2, 3, 4, 5], [1, 1, 2, 3, 5], [4, 4, 4, 4, 1]] {
        let lam = lambda_from_ints(&l);
        let d = sylvester_cubic(&lam)?;
        let c = verify_hessian_identity(&d)?;
        let nodes = singular_locus_check(&d)?;
        let ds = delta_sing(&lam)?;
        println!(
            "lambda {l:?}: Hess = {c} * P, {} nodes, {} lines, delta {}",
            nodes.nodes.iter().filter(|n| n.singular).count(),
            nodes.lines.iter().filter(|n| n.contained).count(),
            ds.product
        );
    }

    let d = sylvester_cubic(&lambda_from_ints(&[1, 1, 2, 3, 5]))?;
    let e = eckardt_section(&d, 1, 2)?;
    println!("plane x1 = x2: {}", e.section);
    println!(
        "  divisible by line^2: {}, conic rank {:?}, node {:?} at the vertex: {}",
        e.divisible_by_line_squared, e.conic_rank, e.node, e.node_is_conic_vertex
    );
    Ok(())
}
