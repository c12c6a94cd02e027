use super::dend::DendCochain;
use super::Cochain;
use crate::algebra::Bimodule;
use crate::error::{dim_err, Result};
use crate::linalg::scalar::{self, sign, Scalar, Vector};
use crate::linalg::MultiTensor;

/// Sends `(P, Q) ∈ C^n` to the element of `O(n+1)` on `M` given by
/// `[1] ↦ (-1)^{n+1} u_1·Q(u_2, …)`, `[n+1] ↦ P(u_1, …, u_n)·u_{n+1}`,
/// and zero in between. For `n = 0` both ends coincide and add up to
/// `a·u - u·b`.
pub fn theta_map(c: &Cochain, module: &Bimodule) -> Result<DendCochain> {
    if c.alg_dim() != module.algebra_dim() || c.module_dim().is_some_and(|m| m != module.dim()) {
        return dim_err("cochain shape does not match the model");
    }
    let n = c.arity();
    let md = module.dim();
    let units: Vec<Vector> = (0..md).map(|i| module.unit_vector(i)).collect();
    let first = |t: &[usize]| -> Vector {
        let u: Vec<&[Scalar]> = t.iter().map(|&i| units[i].as_slice()).collect();
        scalar::scale(&sign(n as i64 + 1), &module.act_right(u[0], &c.q.eval_vectors(&u[1..])))
    };
    let last = |t: &[usize]| -> Vector {
        let u: Vec<&[Scalar]> = t.iter().map(|&i| units[i].as_slice()).collect();
        module.act_left(&c.p.eval_vectors(&u[..n]), u[n])
    };
    let dims = vec![md; n + 1];
    let components = (1..=n + 1)
        .map(|r| {
            MultiTensor::from_fn(dims.clone(), md, |t| {
                let mut v = scalar::zeros(md);
                if r == 1 {
                    scalar::add_into(&mut v, &first(t));
                }
                if r == n + 1 {
                    scalar::add_into(&mut v, &last(t));
                }
                v
            })
        })
        .collect();
    DendCochain::new(components)
}
