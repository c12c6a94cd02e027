use super::{require_rbs, RbsPair};
use crate::algebra::{Algebra, Bimodule};
use crate::error::{Error, ReductionFailure, Result};
use crate::linalg::scalar::{self, Vector};
use crate::linalg::solve::{coordinates_in, independent_subset, intersect_spans, linear_solve_suite};
use crate::linalg::{Matrix, MultiTensor};

/// A system pushed down to `B/(E ∩ B)` acting on the annihilator of `E ∩ B` in `N`.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub quotient: Algebra,
    pub module: Bimodule,
    pub pair: RbsPair,
    /// Columns are lifts to `A` of the quotient basis.
    pub lifts: Matrix,
    /// Columns are the annihilator basis inside `M`.
    pub annihilator: Matrix,
}

fn in_span(dim: usize, basis: &[Vector], v: &[crate::linalg::Scalar]) -> Result<bool> {
    Ok(coordinates_in(dim, basis, v)?.is_some())
}

/// Reduces `(R, S)` along a subalgebra `B`, a subspace `E` and a sub-bimodule `N`.
pub fn reduce(
    alg: &Algebra,
    module: &Bimodule,
    pair: &RbsPair,
    b_sub: &[Vector],
    e: &[Vector],
    n_sub: &[Vector],
) -> Result<Reduction> {
    require_rbs(alg, module, pair)?;
    let (n, m) = (alg.dim(), module.dim());
    let fail = |f| Err(Error::Reduction(f));

    let b = independent_subset(n, b_sub)?;
    for x in &b {
        for y in &b {
            if !in_span(n, &b, &alg.mul(x, y))? {
                return fail(ReductionFailure::NotSubalgebra);
            }
        }
    }

    let ideal = intersect_spans(n, &b, &independent_subset(n, e)?)?;
    for x in &b {
        for i in &ideal {
            if !in_span(n, &ideal, &alg.mul(x, i))? || !in_span(n, &ideal, &alg.mul(i, x))? {
                return fail(ReductionFailure::QuotientNotAlgebra);
            }
        }
    }

    let nb = independent_subset(m, n_sub)?;
    for x in &b {
        for u in &nb {
            if !in_span(m, &nb, &module.act_left(x, u))? || !in_span(m, &nb, &module.act_right(u, x))? {
                return fail(ReductionFailure::NotSubBimodule);
            }
        }
    }

    // u = Σ c_k n_k with a·u = u·a = 0 for every a in the ideal
    let mut constraint_rows: Vec<Vector> = Vec::new();
    for a in &ideal {
        let lcols: Vec<Vector> = nb.iter().map(|u| module.act_left(a, u)).collect();
        let rcols: Vec<Vector> = nb.iter().map(|u| module.act_right(u, a)).collect();
        for cols in [lcols, rcols] {
            for r in 0..m {
                constraint_rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
    }
    let ann: Vec<Vector> = if nb.is_empty() {
        Vec::new()
    } else if constraint_rows.is_empty() {
        nb.clone()
    } else {
        let cm = Matrix::from_rows(constraint_rows)?;
        let nmat = Matrix::from_columns(m, &nb)?;
        linear_solve_suite(&cm, None)?
            .kernel_basis
            .iter()
            .map(|k| nmat.apply(k))
            .collect()
    };

    for (name, map) in [("R", &pair.r), ("S", &pair.s)] {
        for w in &ann {
            if !in_span(n, &b, &map.apply(w))? {
                return fail(ReductionFailure::ImageOutsideSubalgebra(name));
            }
        }
    }

    // complement of the ideal inside B
    let mut family = ideal.clone();
    family.extend(b.iter().cloned());
    let full = independent_subset(n, &family)?;
    let lifts: Vec<Vector> = full[ideal.len()..].to_vec();
    let k = lifts.len();
    let mut adapted = lifts.clone();
    adapted.extend(ideal.iter().cloned());
    let quotient_coords = |x: &[crate::linalg::Scalar]| -> Result<Vector> {
        let c = coordinates_in(n, &adapted, x)?.ok_or_else(|| Error::Reduction(ReductionFailure::NotSubalgebra))?;
        Ok(c[..k].to_vec())
    };

    let mut mult = MultiTensor::uniform(2, k, k);
    for i in 0..k {
        for j in 0..k {
            mult.set_output(&[i, j], quotient_coords(&alg.mul(&lifts[i], &lifts[j]))?);
        }
    }
    let qnames: Vec<String> = (0..k).map(|i| format!("q{}", i + 1)).collect();
    let quotient = Algebra::new(qnames, mult)?;

    let p = ann.len();
    let ann_coords = |v: &[crate::linalg::Scalar]| -> Result<Vector> {
        coordinates_in(m, &ann, v)?.ok_or_else(|| Error::Reduction(ReductionFailure::NotSubBimodule))
    };
    let mut left = MultiTensor::zero(vec![k, p], p);
    let mut right = MultiTensor::zero(vec![p, k], p);
    for i in 0..k {
        for j in 0..p {
            left.set_output(&[i, j], ann_coords(&module.act_left(&lifts[i], &ann[j]))?);
            right.set_output(&[j, i], ann_coords(&module.act_right(&ann[j], &lifts[i]))?);
        }
    }
    let wnames: Vec<String> = (0..p).map(|j| format!("w{}", j + 1)).collect();
    let reduced_module = Bimodule::new(wnames, left, right)?;

    let reduce_map = |map: &Matrix| -> Result<Matrix> {
        let cols = ann.iter().map(|w| quotient_coords(&map.apply(w))).collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(k, &cols)
    };
    let reduced_pair = RbsPair::new(reduce_map(&pair.r)?, reduce_map(&pair.s)?)?;

    Ok(Reduction {
        quotient,
        module: reduced_module,
        pair: reduced_pair,
        lifts: Matrix::from_columns(n, &lifts)?,
        annihilator: Matrix::from_columns(m, &ann)?,
    })
}

impl Reduction {
    /// Checks `R̄(u)·v = R(u)·v` and `u·S̄(v) = u·S(v)` on annihilator basis pairs,
    /// with the left side computed in the reduced model and lifted back.
    pub fn compatible_with(&self, module: &Bimodule, pair: &RbsPair) -> bool {
        let p = self.module.dim();
        let lift_m = |v: &[crate::linalg::Scalar]| self.annihilator.apply(v);
        (0..p).all(|i| {
            let u = scalar::unit(p, i);
            (0..p).all(|j| {
                let v = scalar::unit(p, j);
                let (um, vm) = (lift_m(&u), lift_m(&v));
                let a = lift_m(&self.module.act_left(&self.pair.r.apply(&u), &v));
                let b = module.act_left(&pair.r.apply(&um), &vm);
                let c = lift_m(&self.module.act_right(&u, &self.pair.s.apply(&v)));
                let d = module.act_right(&um, &pair.s.apply(&vm));
                a == b && c == d
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, canonical_bimodule, BimoduleKind};
    use crate::linalg::scalar::int;
    use crate::rbs::is_rbs;

    fn strict_upper() -> Algebra {
        Algebra::from_constants(&["e12", "e23", "e13"], &[c(0, 1, 2, 1)]).unwrap()
    }

    fn basis(n: usize) -> Vec<Vector> {
        (0..n).map(|i| scalar::unit(n, i)).collect()
    }

    #[test]
    fn quotient_by_the_corner() {
        let a = strict_upper();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let p = RbsPair::new(Matrix::scalar_multiple(3, int(2)), Matrix::zeros(3, 3)).unwrap();
        let e = vec![scalar::unit(3, 2)];
        let red = reduce(&a, &m, &p, &basis(3), &e, &basis(3)).unwrap();
        assert_eq!(red.quotient.dim(), 2);
        assert!(red.quotient.structure().is_zero());
        assert_eq!(red.module.dim(), 3);
        assert!(is_rbs(&red.quotient, &red.module, &red.pair).unwrap());
        assert!(red.compatible_with(&m, &p));
    }

    #[test]
    fn hypotheses_fail_by_name() {
        let a = strict_upper();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let p = RbsPair::zero(3, 3);
        // span(e12, e23) is not closed: e12 e23 = e13
        let b = vec![scalar::unit(3, 0), scalar::unit(3, 1)];
        assert_eq!(
            reduce(&a, &m, &p, &b, &[], &basis(3)).unwrap_err(),
            Error::Reduction(ReductionFailure::NotSubalgebra)
        );
        // span(e12) is not an ideal: e12 e23 = e13
        assert_eq!(
            reduce(&a, &m, &p, &basis(3), &[scalar::unit(3, 0)], &basis(3)).unwrap_err(),
            Error::Reduction(ReductionFailure::QuotientNotAlgebra)
        );
        // e12 · e23 = e13 leaves span(e23)
        assert_eq!(
            reduce(&a, &m, &p, &basis(3), &[], &[scalar::unit(3, 1)]).unwrap_err(),
            Error::Reduction(ReductionFailure::NotSubBimodule)
        );
    }

    #[test]
    fn image_must_land_in_b() {
        let a = strict_upper();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let p = RbsPair::new(Matrix::scalar_multiple(3, int(2)), Matrix::zeros(3, 3)).unwrap();
        // B = span(e13), N = M: R = 2 id does not map M into B
        let b = vec![scalar::unit(3, 2)];
        assert_eq!(
            reduce(&a, &m, &p, &b, &[], &basis(3)).unwrap_err(),
            Error::Reduction(ReductionFailure::ImageOutsideSubalgebra("R"))
        );
    }
}
