use super::{dendriform_of, RbsPair};
use crate::algebra::{Algebra, Bimodule};
use crate::error::{dim_err, Error, Result};
use crate::linalg::Matrix;

/// A system together with the model it lives on.
#[derive(Debug, Clone, Copy)]
pub struct RbsModel<'a> {
    pub alg: &'a Algebra,
    pub module: &'a Bimodule,
    pub pair: &'a RbsPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismReport {
    pub holds: bool,
    /// Names of the violated conditions.
    pub failures: Vec<String>,
    /// Whether `ψ` preserves both induced dendriform products.
    pub dendriform_morphism: bool,
}

/// Checks that `(φ, ϕ, ψ)` is a morphism of systems:
/// `R'ψ = φR`, `S'ψ = ϕS`, `ψ(a·u) = φ(a)·ψ(u)`, `ψ(u·a) = ψ(u)·ϕ(a)`.
/// `φ` and `ϕ` must be algebra maps.
pub fn morphism_check(
    src: RbsModel<'_>,
    dst: RbsModel<'_>,
    phi: &Matrix,
    varphi: &Matrix,
    psi: &Matrix,
) -> Result<MorphismReport> {
    src.pair.check_shape(src.alg, src.module)?;
    dst.pair.check_shape(dst.alg, dst.module)?;
    let (n, m) = (src.alg.dim(), src.module.dim());
    let (n2, m2) = (dst.alg.dim(), dst.module.dim());
    for (name, f) in [("φ", phi), ("ϕ", varphi)] {
        if (f.rows(), f.cols()) != (n2, n) {
            return dim_err(format!("{name} must map A to A'"));
        }
    }
    if (psi.rows(), psi.cols()) != (m2, m) {
        return dim_err("ψ must map M to M'");
    }
    for (name, f) in [("φ", phi), ("ϕ", varphi)] {
        if let Some((i, j)) = src.alg.algebra_map_failure(dst.alg, f) {
            return Err(Error::NotAlgebraMap(
                name.to_string(),
                format!("{},{}", src.alg.name(i), src.alg.name(j)),
            ));
        }
    }

    let mut failures = Vec::new();
    if dst.pair.r.mul(psi) != phi.mul(&src.pair.r) {
        failures.push("R'ψ = φR".to_string());
    }
    if dst.pair.s.mul(psi) != varphi.mul(&src.pair.s) {
        failures.push("S'ψ = ϕS".to_string());
    }
    let mut left_ok = true;
    let mut right_ok = true;
    for i in 0..n {
        let a = src.alg.unit_vector(i);
        for j in 0..m {
            let u = src.module.unit_vector(j);
            left_ok &= psi.apply(&src.module.act_left(&a, &u)) == dst.module.act_left(&phi.column(i), &psi.column(j));
            right_ok &= psi.apply(&src.module.act_right(&u, &a)) == dst.module.act_right(&psi.column(j), &varphi.column(i));
        }
    }
    if !left_ok {
        failures.push("ψ(a·u) = φ(a)·ψ(u)".to_string());
    }
    if !right_ok {
        failures.push("ψ(u·a) = ψ(u)·ϕ(a)".to_string());
    }

    let d1 = dendriform_of(src.module, src.pair);
    let d2 = dendriform_of(dst.module, dst.pair);
    let mut dendriform_morphism = true;
    for i in 0..m {
        for j in 0..m {
            for op in 0..2 {
                let lhs = psi.apply(&d1.tables()[op].get(&[i, j]));
                let rhs = d2.apply(op, &psi.column(i), &psi.column(j));
                dendriform_morphism &= lhs == rhs;
            }
        }
    }

    Ok(MorphismReport {
        holds: failures.is_empty(),
        failures,
        dendriform_morphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, canonical_bimodule, BimoduleKind};

    #[test]
    fn identity_is_a_morphism() {
        let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let p = RbsPair::new(Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[0]])).unwrap();
        let model = RbsModel { alg: &a, module: &m, pair: &p };
        let id = Matrix::identity(1);
        let rep = morphism_check(model, model, &id, &id, &id).unwrap();
        assert!(rep.holds && rep.dendriform_morphism);
    }

    #[test]
    fn non_multiplicative_phi_is_a_distinct_error() {
        let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let p = RbsPair::zero(1, 1);
        let model = RbsModel { alg: &a, module: &m, pair: &p };
        let two = Matrix::from_i64(&[&[2]]);
        let id = Matrix::identity(1);
        assert!(matches!(
            morphism_check(model, model, &two, &id, &id),
            Err(Error::NotAlgebraMap(..))
        ));
    }
}
