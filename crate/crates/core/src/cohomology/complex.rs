//! The cochain complex of a system and its cohomology dimensions.

use super::cochain::cochain_space_dim;
use super::{derived_bracket, Cochain};
use crate::algebra::{Algebra, Bimodule};
use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, sign, Scalar, Vector};
use crate::linalg::{Matrix, MultiTensor};
use crate::rbs::{require_rbs, star, RbsPair};

/// Largest differential matrix (rows × columns) built before giving up.
pub const MATRIX_BUDGET: usize = 4_000_000;

/// `d(c) = ⟦(R, S), c⟧`. Refuses pairs that are not systems.
pub fn rbs_differential(pair: &RbsPair, c: &Cochain, alg: &Algebra, module: &Bimodule) -> Result<Cochain> {
    require_rbs(alg, module, pair)?;
    derived_bracket(&Cochain::from_pair(pair), c, alg, module)
}

/// Hochschild coboundary of `M` with coefficients in `A ⊕ A`, where `M`
/// carries the product `u ∗ v = R(u)·v + u·S(v)` and `A ⊕ A` the
/// representation `l(u, (a, b)) = (R(u)a - R(u·b), S(u)b - S(u·b))`,
/// `r((a, b), u) = (aR(u) - R(a·u), bS(u) - S(a·u))`.
pub fn hochschild_differential(pair: &RbsPair, c: &Cochain, alg: &Algebra, module: &Bimodule) -> Result<Cochain> {
    pair.check_shape(alg, module)?;
    if c.alg_dim() != alg.dim() || c.module_dim().is_some_and(|m| m != module.dim()) {
        return dim_err("cochain shape does not match the model");
    }
    let n = c.arity();
    let md = module.dim();
    let units: Vec<Vector> = (0..md).map(|i| module.unit_vector(i)).collect();
    let tail_sign = sign(n as i64 + 1);
    let eval = |t: &MultiTensor, args: &[&[Scalar]]| t.eval_vectors(args);

    let component = |own: &MultiTensor, map: &Matrix, idx: &[usize]| -> Vector {
        let u: Vec<&[Scalar]> = idx.iter().map(|&i| units[i].as_slice()).collect();
        let head = u[0];
        let g_rest = eval(&c.q, &u[1..]);
        let mut out = alg.mul(&map.apply(head), &eval(own, &u[1..]));
        out = scalar::sub(&out, &map.apply(&module.act_right(head, &g_rest)));
        for i in 1..=n {
            let merged = star(module, pair, u[i - 1], u[i]);
            let mut args: Vec<&[Scalar]> = u[..i - 1].to_vec();
            args.push(&merged);
            args.extend_from_slice(&u[i + 1..]);
            scalar::axpy(&mut out, &sign(i as i64), &eval(own, &args));
        }
        let f_front = eval(&c.p, &u[..n]);
        let last = u[n];
        scalar::axpy(&mut out, &tail_sign, &alg.mul(&eval(own, &u[..n]), &map.apply(last)));
        scalar::axpy(&mut out, &-tail_sign.clone(), &map.apply(&module.act_left(&f_front, last)));
        out
    };

    let dims = vec![md; n + 1];
    Ok(Cochain {
        p: MultiTensor::from_fn(dims.clone(), alg.dim(), |t| component(&c.p, &pair.r, t)),
        q: MultiTensor::from_fn(dims, alg.dim(), |t| component(&c.q, &pair.s, t)),
    })
}

/// Matrix of a linear operator `C^n → C^{n+1}` in the flattened bases.
pub fn operator_matrix(
    arity: usize,
    alg_dim: usize,
    module_dim: usize,
    op: impl Fn(&Cochain) -> Result<Cochain>,
) -> Result<Matrix> {
    let cols = cochain_space_dim(arity, alg_dim, module_dim);
    let rows = cochain_space_dim(arity + 1, alg_dim, module_dim);
    if rows.saturating_mul(cols) > MATRIX_BUDGET {
        return Err(Error::Resource(format!(
            "differential on C^{arity} would be {rows}x{cols}"
        )));
    }
    let mut columns = Vec::with_capacity(cols);
    for j in 0..cols {
        let basis = Cochain::unflatten(&scalar::unit(cols, j), arity, alg_dim, module_dim)?;
        columns.push(op(&basis)?.flatten(module_dim));
    }
    Matrix::from_columns(rows, &columns)
}

/// Matrix of `d: C^n → C^{n+1}`.
pub fn differential_matrix(pair: &RbsPair, alg: &Algebra, module: &Bimodule, arity: usize) -> Result<Matrix> {
    require_rbs(alg, module, pair)?;
    let rs = Cochain::from_pair(pair);
    operator_matrix(arity, alg.dim(), module.dim(), |c| derived_bracket(&rs, c, alg, module))
}

/// `dim H^n` for `n = 0..=max_degree`.
pub fn cohomology_dimensions(pair: &RbsPair, alg: &Algebra, module: &Bimodule, max_degree: usize) -> Result<Vec<usize>> {
    require_rbs(alg, module, pair)?;
    let (n, m) = (alg.dim(), module.dim());
    // refuse before doing any work
    let top = cochain_space_dim(max_degree + 1, n, m).saturating_mul(cochain_space_dim(max_degree, n, m));
    if top > MATRIX_BUDGET {
        return Err(Error::Resource(format!("C^{max_degree} is too large for the matrix budget")));
    }
    let ranks = (0..=max_degree)
        .map(|k| differential_matrix(pair, alg, module, k).map(|d| d.rank()))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..=max_degree)
        .map(|k| {
            let before = if k == 0 { 0 } else { ranks[k - 1] };
            cochain_space_dim(k, n, m) - ranks[k] - before
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, canonical_bimodule, BimoduleKind};

    #[test]
    fn zero_system_on_idempotent() {
        let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let dims = cohomology_dimensions(&RbsPair::zero(1, 1), &a, &m, 2).unwrap();
        assert_eq!(dims, vec![2, 2, 2]);
    }

    #[test]
    fn oversized_request_is_refused() {
        let a = crate::algebra::truncated_polynomial(3);
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        assert!(matches!(
            cohomology_dimensions(&RbsPair::zero(4, 4), &a, &m, 9),
            Err(Error::Resource(_))
        ));
    }
}
