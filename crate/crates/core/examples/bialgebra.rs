//! Quasitriangular covariant bialgebras, their pre-Lie product and
//! perturbations by a second pair of tensors.

use rbsys::random::{random_aybp, random_tensor, rng};
use rbsys::yang_baxter::{
    compatible_prelie, covariant_bialgebra_check, nilpotent_example, perturbation_check, quasitriangular_build,
    CovariantBialgebra,
};

fn main() -> rbsys::Result<()> {
    let (alg, r, s) = nilpotent_example();
    let cb = quasitriangular_build(&r, &s, &alg)?;
    let rep = covariant_bialgebra_check(&cb);
    println!("bialgebra: {} compatible: {}", rep.pass(), rep.compatible);
    println!("pre-Lie: {}", compatible_prelie(&cb)?.axiom_check()?.pass);

    let mut g = rng(8);
    for _ in 0..6 {
        let (alg, r, s) = random_aybp(&mut g);
        let base = CovariantBialgebra::zero(&alg);
        let noise = random_tensor(&mut g, alg.dim());
        for (label, rr) in [("aybp", &r), ("random", &noise)] {
            let p = perturbation_check(&base, rr, &s)?;
            println!("dim {} {label:<6} criterion {:<5} direct {:<5}", alg.dim(), p.condition_holds, p.direct_check);
        }
    }
    Ok(())
}
