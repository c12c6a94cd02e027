//! Extending formal deformations order by order until an obstruction.

use rbsys::random::{random_infinitesimal, rbs_instance, rng};
use rbsys::cohomology::cohomology_dimensions;
use rbsys::deformation::{extend_step, obstruction_cocycle, DeformationSeries};

fn main() -> rbsys::Result<()> {
    let mut g = rng(6);
    for _ in 0..8 {
        let inst = rbs_instance(&mut g);
        let first = random_infinitesimal(&mut g, &inst)?;
        let h2 = cohomology_dimensions(&inst.pair, &inst.alg, &inst.module, 2)?[2];
        let mut ds = DeformationSeries::new(inst.pair.clone(), vec![first])?;
        while ds.order() < 4 {
            let ob = obstruction_cocycle(&ds, &inst.alg, &inst.module)?;
            assert!(ob.is_cocycle);
            match extend_step(&ds, &inst.alg, &inst.module)? {
                Some(x) => ds = ds.extended(x)?,
                None => break,
            }
        }
        println!("{:<48} dim H² = {h2}, reached order {}", inst.label, ds.order());
    }
    Ok(())
}
