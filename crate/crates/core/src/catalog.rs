//! Small named algebras and Rota-Baxter systems known to be valid.

use crate::algebra::{c, jackson_example, strictly_upper_triangular, truncated_polynomial, Algebra};
use crate::linalg::scalar::{self, Scalar};
use crate::linalg::Matrix;
use crate::rbs::RbsPair;
use crate::yang_baxter::{nilpotent_example, rbs_from_tensors, TensorFlavor};

/// Every associative algebra of the catalog, by name, in its natural basis.
pub fn algebras() -> Vec<(&'static str, Algebra)> {
    let alg = |names: &[&str], k: &[(usize, usize, usize, Scalar)]| Algebra::from_constants(names, k).expect("catalog table");
    vec![
        ("idempotent", alg(&["e"], &[c(0, 0, 0, 1)])),
        ("zero1", Algebra::zero_product(&["x"])),
        ("k2", alg(&["e1", "e2"], &[c(0, 0, 0, 1), c(1, 1, 1, 1)])),
        ("dual_numbers", truncated_polynomial(1)),
        ("zero2", Algebra::zero_product(&["x", "y"])),
        ("left_unit", alg(&["e", "x"], &[c(0, 0, 0, 1), c(0, 1, 1, 1)])),
        ("right_unit", alg(&["e", "x"], &[c(0, 0, 0, 1), c(1, 0, 1, 1)])),
        ("truncated2", truncated_polynomial(2)),
        (
            "upper2",
            alg(
                &["e11", "e12", "e22"],
                &[c(0, 0, 0, 1), c(0, 1, 1, 1), c(1, 2, 1, 1), c(2, 2, 2, 1)],
            ),
        ),
        ("strict_upper3", strictly_upper_triangular()),
        ("k3", alg(&["e1", "e2", "e3"], &[c(0, 0, 0, 1), c(1, 1, 1, 1), c(2, 2, 2, 1)])),
        ("heisenberg", alg(&["x", "y", "z"], &[c(0, 1, 2, 1)])),
        (
            "dual_plus_k",
            alg(&["1", "x", "f"], &[c(0, 0, 0, 1), c(0, 1, 1, 1), c(1, 0, 1, 1), c(2, 2, 2, 1)]),
        ),
        ("zero3", Algebra::zero_product(&["x", "y", "z"])),
    ]
}

pub fn algebra(name: &str) -> Option<Algebra> {
    algebras().into_iter().find(|(n, _)| *n == name).map(|(_, a)| a)
}

fn spans_subalgebra(alg: &Algebra, members: &[usize]) -> bool {
    members.iter().all(|&i| {
        members.iter().all(|&j| {
            let v = alg.mul_basis(i, j);
            v.iter().enumerate().all(|(k, x)| num_traits::Zero::is_zero(x) || members.contains(&k))
        })
    })
}

/// Subsets `B` of the basis with both `span B` and the span of the rest
/// closed under the product, as bit masks; `B` is non-empty and proper.
pub fn basis_splittings(alg: &Algebra) -> Vec<u32> {
    let n = alg.dim();
    (1..(1u32 << n) - 1)
        .filter(|mask| {
            let inside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let outside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            spans_subalgebra(alg, &inside) && spans_subalgebra(alg, &outside)
        })
        .collect()
}

/// `(-λ P₁, λ P₂)` for `A = A₁ ⊕ A₂` split along `mask`: `-λP₁` is a
/// Rota-Baxter operator of weight `λ` and `S = R + λ id`.
pub fn splitting_pair(alg: &Algebra, mask: u32, lambda: &Scalar) -> RbsPair {
    let n = alg.dim();
    let mut r = Matrix::zeros(n, n);
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        if mask >> i & 1 == 1 {
            r[(i, i)] = -lambda.clone();
        } else {
            s[(i, i)] = lambda.clone();
        }
    }
    RbsPair::new(r, s).expect("square")
}

/// Known systems on the adjoint bimodule of small algebras.
pub fn adjoint_systems() -> Vec<(String, Algebra, RbsPair)> {
    let mut out = Vec::new();
    for d in 1..=2 {
        for q in [scalar::int(2), scalar::int(3), scalar::int(-2), scalar::frac(1, 2)] {
            let j = jackson_example(d, &q).expect("q is not a root of unity");
            out.push((format!("jackson(d={d},q={})", scalar::fmt_scalar(&q)), j.algebra.clone(), j.pair()));
        }
    }
    let (alg, r, s) = nilpotent_example();
    let pair = rbs_from_tensors(&r, &s, &alg, TensorFlavor::RotaBaxterSystem).expect("nilpotent pair is an AYBP");
    out.push(("nilpotent_aybp".into(), alg, pair));
    for (name, alg) in algebras() {
        for mask in basis_splittings(&alg) {
            out.push((format!("{name}/split{mask:b}"), alg.clone(), splitting_pair(&alg, mask, &scalar::one())));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{canonical_bimodule, BimoduleKind};
    use crate::rbs::is_rbs;

    #[test]
    fn catalog_is_associative() {
        for (name, a) in algebras() {
            assert!(a.is_associative(), "{name}");
        }
    }

    #[test]
    fn catalog_systems_are_systems() {
        let systems = adjoint_systems();
        assert!(systems.len() > 15);
        for (name, a, p) in systems {
            let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
            assert!(is_rbs(&a, &m, &p).unwrap(), "{name}");
        }
    }
}
