//! The four descriptions of a system side by side on random instances.

use rbsys::random::{random_instance, rng};
use rbsys::rbs::characterize;

fn main() -> rbsys::Result<()> {
    let mut g = rng(1);
    for _ in 0..12 {
        let inst = random_instance(&mut g);
        let c = characterize(&inst.alg, &inst.module, &inst.pair)?;
        println!(
            "{:<44} grbs={:<5} graph={:<5} nijenhuis={:<5} mc={:<5} agree={}",
            inst.label, c.rbs, c.graph, c.nijenhuis, c.maurer_cartan, c.agree()
        );
    }
    Ok(())
}
