//! Two-sided averaging systems and the dialgebras they induce.

use rbsys::loday::dialgebra_from_averaging;
use rbsys::random::{averaging_instance, rng};
use rbsys::yang_baxter::{averaging_defect, AveragingSide};

fn main() -> rbsys::Result<()> {
    let mut g = rng(9);
    for _ in 0..6 {
        let inst = averaging_instance(&mut g);
        let rep = averaging_defect(&inst.alg, &inst.module, &inst.pair)?;
        let d = dialgebra_from_averaging(&inst.alg, &inst.module, &inst.pair)?;
        println!(
            "{:<28} averaging {} dialgebra {}",
            inst.label,
            rep.pass(AveragingSide::Both),
            d.axiom_check()?.pass
        );
    }
    Ok(())
}
