//! The fifteen quadrics (l_i - l_j)(l_k - l_l), their linear span and the
//! Segre cubic relations.

use hesslat::sylvester::{evaluate_quadrics, lambda_from_ints, segre_quadrics, segre_system};

fn main() -> hesslat::Result<()> {
    for (p, q, poly) in segre_quadrics().iter().take(3) {
        println!("{p:?} {q:?}: {poly}");
    }
    let s = segre_system()?;
    println!(
        "span {}, linear relation {}, cubic relation {}",
        s.span_dimension, s.linear_relation_holds, s.cubic_relation_holds
    );

    for q in evaluate_quadrics(&lambda_from_ints(&[1, 1, 2, 2, 5]))? {
        if q.value == "0" {
            println!("vanishes at (1,1,2,2,5): {:?} {:?}, equal pairs {:?}", q.first, q.second, q.eckardt_pairs);
        }
    }
    Ok(())
}
