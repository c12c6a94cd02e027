use super::RbsPair;
use crate::algebra::{Algebra, Bimodule};
use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, Vector};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaugeOutcome {
    /// `(R∘T⁻¹, S∘T⁻¹)` with `T = id + B∘(R, S)`.
    Transformed(RbsPair),
    /// `T` is singular.
    Inadmissible,
}

/// `T = id_M + B∘(R, S)` where `B: A ⊕ A → M` is `dim M × 2 dim A`.
pub fn gauge_factor(pair: &RbsPair, b: &Matrix) -> Result<Matrix> {
    let (n, m) = (pair.algebra_dim(), pair.module_dim());
    if (b.rows(), b.cols()) != (m, 2 * n) {
        return dim_err(format!("B must be {m}x{}", 2 * n));
    }
    Ok(Matrix::identity(m).add(&b.mul(&pair.r.vstack(&pair.s))))
}

/// Hochschild 1-cocycle condition on `A ⊕ A`:
/// `a1·B(b1, b2) + B(a1, a2)·b2 = B(a1 b1, a2 b2)`.
fn cocycle_failure(alg: &Algebra, module: &Bimodule, b: &Matrix) -> Option<(usize, usize)> {
    let n = alg.dim();
    let split = |v: &[crate::linalg::Scalar]| (v[..n].to_vec(), v[n..].to_vec());
    for i in 0..2 * n {
        let (a1, a2) = split(&scalar::unit(2 * n, i));
        for j in 0..2 * n {
            let (b1, b2) = split(&scalar::unit(2 * n, j));
            let lhs = scalar::add(
                &module.act_left(&a1, &b.column(j)),
                &module.act_right(&b.column(i), &b2),
            );
            let prod: Vector = alg.mul(&a1, &b1).into_iter().chain(alg.mul(&a2, &b2)).collect();
            if lhs != b.apply(&prod) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Twists a system by a 1-cocycle `B: A ⊕ A → M`. A non-cocycle is an
/// error; a singular `T` is reported as [`GaugeOutcome::Inadmissible`].
pub fn gauge_transform(alg: &Algebra, module: &Bimodule, pair: &RbsPair, b: &Matrix) -> Result<GaugeOutcome> {
    pair.check_shape(alg, module)?;
    let t = gauge_factor(pair, b)?;
    if let Some((i, j)) = cocycle_failure(alg, module, b) {
        return Err(Error::NotCocycle(format!("basis pair ({i},{j}) of A⊕A")));
    }
    Ok(match t.inverse() {
        None => GaugeOutcome::Inadmissible,
        Some(tinv) => GaugeOutcome::Transformed(pair.precompose(&tinv)),
    })
}

/// The inner cocycle `B(a1, a2) = a1·w - w·a2` of an element `w ∈ M`.
pub fn inner_cocycle(alg: &Algebra, module: &Bimodule, w: &[crate::linalg::Scalar]) -> Matrix {
    let n = alg.dim();
    let cols: Vec<Vector> = (0..2 * n)
        .map(|i| {
            if i < n {
                module.act_left(&alg.unit_vector(i), w)
            } else {
                scalar::neg(&module.act_right(w, &alg.unit_vector(i - n)))
            }
        })
        .collect();
    Matrix::from_columns(module.dim(), &cols).expect("columns of length dim M")
}
