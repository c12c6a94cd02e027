//! Two commuting systems give a quadri-algebra and two dendriform halves.

use rbsys::loday::commuting_rbs_quadri;
use rbsys::random::{commuting_instance, rng};

fn main() -> rbsys::Result<()> {
    let mut g = rng(10);
    for _ in 0..6 {
        let (label, alg, pq, rs) = commuting_instance(&mut g);
        let c = commuting_rbs_quadri(&alg, &pq, &rs)?;
        let q = c.quadri.expect("commuting systems");
        println!(
            "{label:<36} quadri {} horizontal {} vertical {}",
            q.axiom_check()?.pass,
            q.horizontal().axiom_check()?.pass,
            q.vertical().axiom_check()?.pass
        );
    }
    Ok(())
}
