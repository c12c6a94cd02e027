use crate::algebra::{Algebra, Bimodule};
use crate::error::Result;
use crate::linalg::scalar;
use crate::linalg::MultiTensor;
use crate::rbs::RbsPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AveragingSide {
    Left,
    Right,
    Both,
}

/// Defects of `R(u)R(v) = R(R(u)·v)`, `S(u)S(v) = S(R(u)·v)` (left) and
/// `R(u)R(v) = R(u·S(v))`, `S(u)S(v) = S(u·S(v))` (right).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AveragingReport {
    pub left: [MultiTensor; 2],
    pub right: [MultiTensor; 2],
    pub left_pass: bool,
    pub right_pass: bool,
}

impl AveragingReport {
    pub fn pass(&self, side: AveragingSide) -> bool {
        match side {
            AveragingSide::Left => self.left_pass,
            AveragingSide::Right => self.right_pass,
            AveragingSide::Both => self.left_pass && self.right_pass,
        }
    }

    /// Witness lines like `left_R[u,v] = 1/1`.
    pub fn witnesses(&self, module: &Bimodule, side: AveragingSide) -> Vec<String> {
        let mut groups = Vec::new();
        if side != AveragingSide::Right {
            groups.push(("left_R", &self.left[0]));
            groups.push(("left_S", &self.left[1]));
        }
        if side != AveragingSide::Left {
            groups.push(("right_R", &self.right[0]));
            groups.push(("right_S", &self.right[1]));
        }
        groups
            .into_iter()
            .flat_map(|(label, t)| {
                t.entries()
                    .map(|(tuple, v)| {
                        let names: Vec<&str> = tuple.iter().map(|&i| module.name(i)).collect();
                        format!("{label}[{}] = {}", names.join(","), scalar::fmt_vector(v))
                    })
                    .collect::<Vec<_>>()
            })
            .collect()
    }
}

pub fn averaging_defect(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<AveragingReport> {
    pair.check_shape(alg, module)?;
    let (n, m) = (alg.dim(), module.dim());
    let units: Vec<_> = (0..m).map(|i| module.unit_vector(i)).collect();
    let r_img: Vec<_> = units.iter().map(|u| pair.r.apply(u)).collect();
    let s_img: Vec<_> = units.iter().map(|u| pair.s.apply(u)).collect();
    let build = |f: &dyn Fn(usize, usize) -> scalar::Vector| MultiTensor::from_fn(vec![m, m], n, |t| f(t[0], t[1]));
    let rr = |i: usize, j: usize| alg.mul(&r_img[i], &r_img[j]);
    let ss = |i: usize, j: usize| alg.mul(&s_img[i], &s_img[j]);
    let ru_v = |i: usize, j: usize| module.act_left(&r_img[i], &units[j]);
    let u_sv = |i: usize, j: usize| module.act_right(&units[i], &s_img[j]);
    let left = [
        build(&|i, j| scalar::sub(&rr(i, j), &pair.r.apply(&ru_v(i, j)))),
        build(&|i, j| scalar::sub(&ss(i, j), &pair.s.apply(&ru_v(i, j)))),
    ];
    let right = [
        build(&|i, j| scalar::sub(&rr(i, j), &pair.r.apply(&u_sv(i, j)))),
        build(&|i, j| scalar::sub(&ss(i, j), &pair.s.apply(&u_sv(i, j)))),
    ];
    let left_pass = left.iter().all(MultiTensor::is_zero);
    let right_pass = right.iter().all(MultiTensor::is_zero);
    Ok(AveragingReport {
        left,
        right,
        left_pass,
        right_pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{canonical_bimodule, jackson_example, left_only, BimoduleKind};
    use crate::linalg::scalar::int;
    use crate::linalg::Matrix;
    use crate::rbs::grbs_defect;
    use crate::yang_baxter::{rbs_from_tensors, Tensor2, TensorFlavor};

    #[test]
    fn zero_pair_passes_everywhere() {
        let j = jackson_example(2, &int(2)).unwrap();
        let m = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
        let rep = averaging_defect(&j.algebra, &m, &RbsPair::zero(3, 3)).unwrap();
        assert!(rep.pass(AveragingSide::Both));
    }

    #[test]
    fn jackson_pair_is_not_averaging() {
        let j = jackson_example(2, &int(2)).unwrap();
        let m = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
        let rep = averaging_defect(&j.algebra, &m, &j.pair()).unwrap();
        assert!(!rep.pass(AveragingSide::Left));
        assert!(!rep.witnesses(&m, AveragingSide::Left).is_empty());
    }

    #[test]
    fn scalar_multiple_of_identity_on_adjoint() {
        // (λ id, λ id) satisfies both sides on any algebra
        let a = crate::algebra::matrix_algebra(2);
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let l = Matrix::scalar_multiple(4, int(3));
        let rep = averaging_defect(&a, &m, &RbsPair::new(l.clone(), l).unwrap()).unwrap();
        assert!(rep.pass(AveragingSide::Both));
    }

    #[test]
    fn separability_tensors_give_a_two_sided_system() {
        let a = crate::algebra::matrix_algebra(2);
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let r = Tensor2::from_terms(4, &[(0, 0, int(1)), (2, 1, int(1))]);
        let pair = rbs_from_tensors(&r, &r, &a, TensorFlavor::LeftAveraging).unwrap();
        let rep = averaging_defect(&a, &m, &pair).unwrap();
        assert!(rep.pass(AveragingSide::Both));
        // left averaging is a system on the left-only bimodule
        assert!(grbs_defect(&a, &left_only(&m), &pair).unwrap().is_rbs());
    }
}
