//! Passing a system to a quotient algebra.

use rbsys::algebra::{canonical_bimodule, strictly_upper_triangular, BimoduleKind};
use rbsys::linalg::{scalar::{int, unit}, Matrix};
use rbsys::rbs::{is_rbs, reduce, RbsPair};

fn main() -> rbsys::Result<()> {
    let a = strictly_upper_triangular();
    let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
    let p = RbsPair::new(Matrix::scalar_multiple(3, int(2)), Matrix::zeros(3, 3))?;
    let all: Vec<_> = (0..3).map(|i| unit(3, i)).collect();
    let red = reduce(&a, &m, &p, &all, &[unit(3, 2)], &all)?;
    println!("quotient dim {}, module dim {}", red.quotient.dim(), red.module.dim());
    println!("reduced pair is a system: {}", is_rbs(&red.quotient, &red.module, &red.pair)?);
    println!("compatible: {}", red.compatible_with(&m, &p));
    // e12 and e23 do not span a subalgebra
    match reduce(&a, &m, &p, &all[..2], &[], &all) {
        Err(e) => println!("refused: {e}"),
        Ok(_) => println!("unexpectedly accepted"),
    }
    Ok(())
}
