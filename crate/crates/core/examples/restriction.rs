//! Restriction of the 2-divisible vectors to the subdomain of M for one
//! subspace V, and the quadric it corresponds to.

use hesslat::config::build_configuration;
use hesslat::restriction::RestrictionModel;

fn main() -> hesslat::Result<()> {
    let model = RestrictionModel::new(&build_configuration()?)?;
    let a = model.default_a_triple();
    let b = model.b_pairs()[0];
    let v = model.build_v(a, b)?;
    let rep = model.report(&v)?;

    println!("V = <a1,a2,a3,b1,b2>, image in u^5 singular: {}", rep.u5_image_singular);
    for x in &rep.vectors {
        println!("  {:<12} {:?}", x.name, x.class);
    }
    println!(
        "census: {} vanish, {} cut, {} miss",
        rep.census.vanish, rep.census.cut, rep.census.miss
    );
    println!("restricted weight: {}", rep.weight);
    println!("zero divisor: {}", rep.zero_divisor.join(" + "));
    println!("quadric: {}", rep.quadric_text);
    Ok(())
}
