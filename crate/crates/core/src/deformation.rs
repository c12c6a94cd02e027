//! Truncated formal deformations `R_t = Σ tⁱ Rᵢ`, `S_t = Σ tⁱ Sᵢ` of a system.

use crate::algebra::{Algebra, Bimodule};
use crate::cohomology::{derived_bracket, differential_matrix, hochschild_differential, rbs_differential, Cochain};
use crate::error::{Error, Result};
use crate::linalg::scalar::{self, frac, Scalar};
use crate::linalg::{linear_solve_suite, MultiTensor};
use crate::rbs::{require_rbs, GrbsDefect, RbsPair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationSeries {
    pub base: RbsPair,
    /// `(R₁, S₁), …, (R_N, S_N)`.
    pub terms: Vec<RbsPair>,
}

impl DeformationSeries {
    pub fn new(base: RbsPair, terms: Vec<RbsPair>) -> Result<Self> {
        let shape = (base.algebra_dim(), base.module_dim());
        if terms.iter().any(|t| (t.algebra_dim(), t.module_dim()) != shape) {
            return crate::error::dim_err("every term must have the shape of the base");
        }
        Ok(DeformationSeries { base, terms })
    }

    pub fn constant(base: RbsPair) -> Self {
        DeformationSeries { base, terms: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.terms.len()
    }

    /// `(Rᵢ, Sᵢ)` with `i = 0` the base.
    pub fn term(&self, i: usize) -> &RbsPair {
        if i == 0 {
            &self.base
        } else {
            &self.terms[i - 1]
        }
    }

    pub fn extended(&self, next: RbsPair) -> Result<DeformationSeries> {
        let mut terms = self.terms.clone();
        terms.push(next);
        DeformationSeries::new(self.base.clone(), terms)
    }
}

/// `Σ_{i+j=n} Rᵢ(u)Rⱼ(v) - Rᵢ(Rⱼ(u)·v + u·Sⱼ(v))` and its `S` analogue.
fn order_defect(ds: &DeformationSeries, n: usize, alg: &Algebra, module: &Bimodule) -> GrbsDefect {
    let (a, m) = (alg.dim(), module.dim());
    let mut defect_r = MultiTensor::uniform(2, m, a);
    let mut defect_s = MultiTensor::uniform(2, m, a);
    for x in 0..m {
        let u = module.unit_vector(x);
        for y in 0..m {
            let v = module.unit_vector(y);
            let mut dr = scalar::zeros(a);
            let mut ds_ = scalar::zeros(a);
            for i in 0..=n {
                let (pi, pj) = (ds.term(i), ds.term(n - i));
                let w = scalar::add(
                    &module.act_left(&pj.r.apply(&u), &v),
                    &module.act_right(&u, &pj.s.apply(&v)),
                );
                scalar::add_into(&mut dr, &alg.mul(&pi.r.apply(&u), &pj.r.apply(&v)));
                scalar::add_into(&mut dr, &scalar::neg(&pi.r.apply(&w)));
                scalar::add_into(&mut ds_, &alg.mul(&pi.s.apply(&u), &pj.s.apply(&v)));
                scalar::add_into(&mut ds_, &scalar::neg(&pi.s.apply(&w)));
            }
            defect_r.set_output(&[x, y], dr);
            defect_s.set_output(&[x, y], ds_);
        }
    }
    GrbsDefect { defect_r, defect_s }
}

/// Order-`n` defects for `n = 0..=N`; the series is an order-`N`
/// deformation iff all vanish.
pub fn deformation_defects(ds: &DeformationSeries, alg: &Algebra, module: &Bimodule) -> Result<Vec<GrbsDefect>> {
    require_rbs(alg, module, &ds.base)?;
    for t in &ds.terms {
        t.check_shape(alg, module)?;
    }
    Ok((0..=ds.order()).map(|n| order_defect(ds, n, alg, module)).collect())
}

/// The same defects as `-½ Σ_{i+j=n} ⟦(Rᵢ,Sᵢ),(Rⱼ,Sⱼ)⟧`.
pub fn bracket_form_defects(ds: &DeformationSeries, alg: &Algebra, module: &Bimodule) -> Result<Vec<Cochain>> {
    let cs: Vec<Cochain> = (0..=ds.order()).map(|i| Cochain::from_pair(ds.term(i))).collect();
    let half = -frac(1, 2);
    (0..=ds.order())
        .map(|n| {
            let mut acc = Cochain::zero(2, alg.dim(), module.dim());
            for i in 0..=n {
                acc = acc.add(&derived_bracket(&cs[i], &cs[n - i], alg, module)?);
            }
            Ok(acc.scale(&half))
        })
        .collect()
}

fn require_deformation(ds: &DeformationSeries, alg: &Algebra, module: &Bimodule) -> Result<()> {
    for (n, d) in deformation_defects(ds, alg, module)?.iter().enumerate() {
        if let Some(w) = d.witnesses(module).into_iter().next() {
            return Err(Error::Precondition(format!("order {n} fails: {w}")));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub cochain: Cochain,
    /// `d(Ob) = 0`, computed.
    pub is_cocycle: bool,
}

/// `Ob = -½ Σ_{i+j=N+1, i,j≥1} ⟦(Rᵢ,Sᵢ),(Rⱼ,Sⱼ)⟧`.
pub fn obstruction_cocycle(ds: &DeformationSeries, alg: &Algebra, module: &Bimodule) -> Result<Obstruction> {
    require_deformation(ds, alg, module)?;
    let big = ds.order() + 1;
    let mut acc = Cochain::zero(2, alg.dim(), module.dim());
    for i in 1..big {
        let (x, y) = (Cochain::from_pair(ds.term(i)), Cochain::from_pair(ds.term(big - i)));
        acc = acc.add(&derived_bracket(&x, &y, alg, module)?);
    }
    let cochain = acc.scale(&-frac(1, 2));
    let is_cocycle = rbs_differential(&ds.base, &cochain, alg, module)?.is_zero();
    Ok(Obstruction { cochain, is_cocycle })
}

/// Solves `⟦(R,S), X⟧ = Ob` over pairs `X`; any solution extends the series
/// to order `N+1`. `None` when `Ob` is not a coboundary.
pub fn extend_step(ds: &DeformationSeries, alg: &Algebra, module: &Bimodule) -> Result<Option<RbsPair>> {
    let ob = obstruction_cocycle(ds, alg, module)?;
    let d1 = differential_matrix(&ds.base, alg, module, 1)?;
    let rhs = ob.cochain.flatten(module.dim());
    let report = linear_solve_suite(&d1, Some(&rhs))?;
    let Some(x) = report.particular_solution else {
        return Ok(None);
    };
    let pair = Cochain::unflatten(&x, 1, alg.dim(), module.dim())?
        .to_pair()
        .expect("arity-1 cochain");
    Ok(Some(pair))
}

/// First-order consequence of an equivalence `(φ_t, ϕ_t, ψ_t)` with
/// `φ₁ = a· - ·a`, `ϕ₁ = b· - ·b`, `ψ₁ = a· - ·b`:
/// `(R₁, S₁) - (R₁', S₁') = δ_Hoch(a, b)`.
pub fn equivalence_first_order_check(
    ds: &DeformationSeries,
    other: &DeformationSeries,
    a: &[Scalar],
    b: &[Scalar],
    alg: &Algebra,
    module: &Bimodule,
) -> Result<bool> {
    if ds.base != other.base {
        return Err(Error::Precondition("deformations of different systems".into()));
    }
    if a.len() != alg.dim() || b.len() != alg.dim() {
        return crate::error::dim_err("a and b must lie in A");
    }
    let first = |s: &DeformationSeries| {
        s.terms
            .first()
            .cloned()
            .unwrap_or_else(|| RbsPair::zero(alg.dim(), module.dim()))
    };
    let diff = Cochain::from_pair(&first(ds).sub(&first(other)));
    let hoch = hochschild_differential(&ds.base, &Cochain::constant(a.to_vec(), b.to_vec()), alg, module)?;
    Ok(diff == hoch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{canonical_bimodule, jackson_example, BimoduleKind};
    use crate::linalg::scalar::int;
    use crate::linalg::Matrix;

    fn jackson() -> (Algebra, Bimodule, RbsPair) {
        let j = jackson_example(2, &int(2)).unwrap();
        let m = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
        let p = j.pair();
        (j.algebra, m, p)
    }

    #[test]
    fn constant_series_has_no_defects() {
        let (a, m, p) = jackson();
        let ds = DeformationSeries::new(p.clone(), vec![RbsPair::zero(3, 3); 2]).unwrap();
        assert!(deformation_defects(&ds, &a, &m).unwrap().iter().all(GrbsDefect::is_rbs));
        assert!(obstruction_cocycle(&ds, &a, &m).unwrap().cochain.is_zero());
        assert_eq!(extend_step(&ds, &a, &m).unwrap(), Some(RbsPair::zero(3, 3)));
    }

    #[test]
    fn defect_and_bracket_forms_agree() {
        let (a, m, p) = jackson();
        let t1 = RbsPair::new(Matrix::identity(3), Matrix::zeros(3, 3)).unwrap();
        let ds = DeformationSeries::new(p, vec![t1.clone(), t1]).unwrap();
        let d = deformation_defects(&ds, &a, &m).unwrap();
        let b = bracket_form_defects(&ds, &a, &m).unwrap();
        for (x, y) in d.iter().zip(&b) {
            assert_eq!(x.defect_r, y.p);
            assert_eq!(x.defect_s, y.q);
        }
        assert!(!d[1].is_rbs());
    }

    #[test]
    fn equivalence_by_construction() {
        let (a, m, p) = jackson();
        let ds = DeformationSeries::constant(p.clone());
        let (x, y) = (a.unit_vector(1), a.unit_vector(0));
        let h = hochschild_differential(&p, &Cochain::constant(x.clone(), y.clone()), &a, &m).unwrap();
        let shifted = DeformationSeries::new(p.clone(), vec![h.to_pair().unwrap().scale(&int(-1))]).unwrap();
        assert!(equivalence_first_order_check(&ds, &ds, &scalar::zeros(3), &scalar::zeros(3), &a, &m).unwrap());
        assert!(equivalence_first_order_check(&ds, &shifted, &x, &y, &a, &m).unwrap());
        assert!(!equivalence_first_order_check(&ds, &shifted, &y, &x, &a, &m).unwrap());
        let other = DeformationSeries::constant(RbsPair::zero(3, 3));
        assert!(equivalence_first_order_check(&ds, &other, &x, &y, &a, &m).is_err());
    }
}
