//! Dendriform, associative and pre-Lie products induced on the module.

use rbsys::algebra::{canonical_bimodule, jackson_example, BimoduleKind};
use rbsys::linalg::{fmt_vector, scalar::int};
use rbsys::rbs::induce_structures;

fn main() -> rbsys::Result<()> {
    let j = jackson_example(3, &int(2))?;
    let adj = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
    let s = induce_structures(&j.algebra, &adj, &j.pair())?;
    let x = j.algebra.unit_vector(1);
    println!("x ≺ x = {}", fmt_vector(&s.dendriform.apply(0, &x, &x)));
    println!("x ≻ x = {}", fmt_vector(&s.dendriform.apply(1, &x, &x)));
    println!("x ∗ x = {}", fmt_vector(&s.associative.apply(0, &x, &x)));
    for (name, b) in [("dendriform", &s.dendriform), ("associative", &s.associative), ("pre-Lie", &s.prelie)] {
        println!("{name}: {}", b.axiom_check()?.pass);
    }
    Ok(())
}
