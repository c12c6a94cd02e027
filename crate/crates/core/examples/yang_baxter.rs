//! Associative Yang-Baxter pairs, their sandwich systems and the skew case.

use rbsys::algebra::{canonical_bimodule, BimoduleKind};
use rbsys::random::{random_aybp, random_skew_tensor, rng};
use rbsys::rbs::is_rbs;
use rbsys::yang_baxter::{aybp_defect, nilpotent_example, rbs_from_tensors, skew_aybp_grbs_check, AybpMode, TensorFlavor};

fn main() -> rbsys::Result<()> {
    let (alg, r, s) = nilpotent_example();
    let adj = canonical_bimodule(&alg, BimoduleKind::Adjoint);
    println!("nilpotent example AYBP: {}", aybp_defect(&r, &s, &alg, AybpMode::Aybp)?.pass);
    let p = rbs_from_tensors(&r, &s, &alg, TensorFlavor::RotaBaxterSystem)?;
    println!("sandwich pair is a system: {}", is_rbs(&alg, &adj, &p)?);

    let mut g = rng(7);
    for _ in 0..6 {
        let (alg, _, _) = random_aybp(&mut g);
        let n = alg.dim();
        let (r, s) = (random_skew_tensor(&mut g, n), random_skew_tensor(&mut g, n));
        let k = skew_aybp_grbs_check(&r, &s, &alg)?;
        println!("skew pair on dim {n}: AYBP {} coadjoint system {}", k.aybp_pass, k.grbs_pass);
    }
    Ok(())
}
