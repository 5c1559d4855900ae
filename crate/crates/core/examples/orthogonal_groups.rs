//! Orders of orthogonal groups of finite quadratic forms.

use std::time::Instant;

use hesslat::finquad::{discriminant_form, orthogonal_group, FiniteQuadraticForm};
use hesslat::lattice::m_lattice;
use hesslat::suite::plus_type_orthogonal_order;

fn main() -> hesslat::Result<()> {
    let qm = discriminant_form(&m_lattice())?;
    let two = orthogonal_group(&qm.sylow2_restriction()?.to_finite_form())?;
    let full = orthogonal_group(&qm)?;
    println!("|O(2-part of q_M)| = {}", two.order());
    println!("|O(q_M)| = {}", full.order());

    let t = Instant::now();
    let g = orthogonal_group(&FiniteQuadraticForm::u().power(5))?;
    println!(
        "|O(u^5)| = {} (formula {}, Schreier-Sims {}), {:.0?}",
        g.order(),
        plus_type_orthogonal_order(2, 5),
        g.schreier_sims_order(),
        t.elapsed()
    );
    Ok(())
}
