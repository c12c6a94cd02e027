//! Twisting a system by an inner Hochschild 1-cocycle.

use rbsys::algebra::{c, canonical_bimodule, Algebra, BimoduleKind};
use rbsys::linalg::{fmt_scalar, scalar::frac, Matrix};
use rbsys::rbs::{gauge_transform, inner_cocycle, GaugeOutcome, RbsPair};

fn main() -> rbsys::Result<()> {
    let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)])?;
    let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
    let p = RbsPair::new(Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[0]]))?;
    for w in [frac(1, 1), frac(1, 3), frac(-1, 2)] {
        let b = inner_cocycle(&a, &m, &[w.clone()]);
        match gauge_transform(&a, &m, &p, &b)? {
            GaugeOutcome::Transformed(q) => println!("w = {w}: R_B = {}, S_B = {}", fmt_scalar(&q.r[(0, 0)]), fmt_scalar(&q.s[(0, 0)])),
            GaugeOutcome::Inadmissible => println!("w = {w}: id + B∘(R,S) is singular"),
        }
    }
    Ok(())
}
