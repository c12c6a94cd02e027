//! Cohomology dimensions for systems from the catalog.

use rbsys::algebra::{canonical_bimodule, BimoduleKind};
use rbsys::catalog::adjoint_systems;
use rbsys::cohomology::cohomology_dimensions;

fn main() -> rbsys::Result<()> {
    for (name, alg, pair) in adjoint_systems().into_iter().filter(|(_, a, _)| a.dim() <= 3) {
        let m = canonical_bimodule(&alg, BimoduleKind::Adjoint);
        println!("{name:<32} {:?}", cohomology_dimensions(&pair, &alg, &m, 2)?);
    }
    Ok(())
}
