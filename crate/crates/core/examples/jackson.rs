//! The Jackson q-integral on k[x]/(x^{d+1}) and its dilation partner.
//!
//! cargo run --example jackson -- 3 2

use rbsys::algebra::{canonical_bimodule, jackson_example, BimoduleKind};
use rbsys::cohomology::cohomology_dimensions;
use rbsys::linalg::{fmt_vector, parse_scalar};
use rbsys::rbs::grbs_defect;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let d: usize = args.next().map_or(Ok(3), |s| s.parse())?;
    let q = parse_scalar(&args.next().unwrap_or_else(|| "2".into()))?;
    let j = jackson_example(d, &q)?;
    let adj = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
    let pair = j.pair();
    for k in 0..=d {
        let e = j.algebra.unit_vector(k);
        println!("J({}) = {}", j.algebra.name(k), fmt_vector(&pair.r.apply(&e)));
    }
    println!("system: {}", grbs_defect(&j.algebra, &adj, &pair)?.is_rbs());
    println!("H^0..H^2: {:?}", cohomology_dimensions(&pair, &j.algebra, &adj, 2)?);
    Ok(())
}
