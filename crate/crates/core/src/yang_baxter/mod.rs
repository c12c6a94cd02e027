//! Associative Yang-Baxter pairs on `A ⊗ A`, the systems they induce,
//! covariant bialgebras and averaging systems.

mod averaging;
mod covariant;
mod tensor;

pub use averaging::{averaging_defect, AveragingReport, AveragingSide};
pub use covariant::{
    compatible_prelie, covariant_bialgebra_check, covariant_weak_morphism_check, perturbation_check,
    quasitriangular_build, BialgebraReport, CovariantBialgebra, PerturbationReport,
};
pub use tensor::{legs, Tensor2, Tensor3};

use crate::algebra::{canonical_bimodule, Algebra, BimoduleKind};
use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar;
use crate::linalg::{Matrix, MultiTensor};
use crate::rbs::{dendriform_of, grbs_defect, morphism_check, RbsModel, RbsPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AybpMode {
    /// `r13r12 - r12r23 + s23r13 = 0`, `s13r12 - s12s23 + s23s13 = 0`.
    Aybp,
    /// `r13r12 = r12r23 = s23r13`, `s13r12 = s12s23 = s23s13`.
    FrobeniusSeparability,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AybpReport {
    /// Named defects; the first two are the primary ones of the mode.
    pub defects: Vec<(&'static str, Tensor3)>,
    pub pass: bool,
}

impl AybpReport {
    pub fn defect_1(&self) -> &Tensor3 {
        &self.defects[0].1
    }

    pub fn defect_2(&self) -> &Tensor3 {
        &self.defects[1].1
    }

    /// Lines like `r13r12 - r12r23 + s23r13 [e12,e12,e13] = 1/1`.
    pub fn witnesses(&self, alg: &Algebra) -> Vec<String> {
        self.defects
            .iter()
            .flat_map(|(name, t)| t.nonzero_lines(alg).into_iter().map(move |l| format!("{name} {l}")))
            .collect()
    }
}

/// The six triple products entering both modes.
struct Products {
    r13r12: Tensor3,
    r12r23: Tensor3,
    s23r13: Tensor3,
    s13r12: Tensor3,
    s12s23: Tensor3,
    s23s13: Tensor3,
}

fn products(alg: &Algebra, r: &Tensor2, s: &Tensor2) -> Result<Products> {
    let n = alg.dim();
    if r.dim() != n || s.dim() != n {
        return dim_err(format!("tensors must live in A⊗A with dim A = {n}"));
    }
    Ok(Products {
        r13r12: legs(alg, r, (1, 3), r, (1, 2)),
        r12r23: legs(alg, r, (1, 2), r, (2, 3)),
        s23r13: legs(alg, s, (2, 3), r, (1, 3)),
        s13r12: legs(alg, s, (1, 3), r, (1, 2)),
        s12s23: legs(alg, s, (1, 2), s, (2, 3)),
        s23s13: legs(alg, s, (2, 3), s, (1, 3)),
    })
}

/// `(r13r12 - r12r23 + s23r13, s13r12 - s12s23 + s23s13)`.
pub(crate) fn aybp_sides(alg: &Algebra, r: &Tensor2, s: &Tensor2) -> Result<(Tensor3, Tensor3)> {
    let p = products(alg, r, s)?;
    Ok((
        p.r13r12.sub(&p.r12r23).add(&p.s23r13),
        p.s13r12.sub(&p.s12s23).add(&p.s23s13),
    ))
}

pub fn aybp_defect(r: &Tensor2, s: &Tensor2, alg: &Algebra, mode: AybpMode) -> Result<AybpReport> {
    let p = products(alg, r, s)?;
    let defects = match mode {
        AybpMode::Aybp => vec![
            ("r13r12 - r12r23 + s23r13", p.r13r12.sub(&p.r12r23).add(&p.s23r13)),
            ("s13r12 - s12s23 + s23s13", p.s13r12.sub(&p.s12s23).add(&p.s23s13)),
        ],
        AybpMode::FrobeniusSeparability => vec![
            ("r13r12 - r12r23", p.r13r12.sub(&p.r12r23)),
            ("s13r12 - s12s23", p.s13r12.sub(&p.s12s23)),
            ("r12r23 - s23r13", p.r12r23.sub(&p.s23r13)),
            ("s12s23 - s23s13", p.s12s23.sub(&p.s23s13)),
        ],
    };
    let pass = defects.iter().all(|(_, t)| t.is_zero());
    Ok(AybpReport { defects, pass })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorFlavor {
    /// Requires an associative Yang-Baxter pair.
    RotaBaxterSystem,
    /// Requires `r13r12 = r12r23` and `s13r12 = s12s23`.
    LeftAveraging,
    /// Requires `r12r23 = s23r13` and `s12s23 = s23s13`.
    RightAveraging,
}

/// `a ↦ r₍₁₎ a r₍₂₎` as a matrix on `A`.
pub fn sandwich(alg: &Algebra, r: &Tensor2) -> Matrix {
    let n = alg.dim();
    let cols: Vec<_> = (0..n)
        .map(|k| {
            let mut out = scalar::zeros(n);
            for (i, j, c) in r.terms() {
                let v = alg.mul(&alg.mul_basis(i, k), &alg.unit_vector(j));
                scalar::axpy(&mut out, c, &v);
            }
            out
        })
        .collect();
    Matrix::from_columns(n, &cols).expect("square")
}

/// `R(a) = r₍₁₎ a r₍₂₎`, `S(a) = s₍₁₎ a s₍₂₎`, after checking the flavor's
/// tensor equations.
pub fn rbs_from_tensors(r: &Tensor2, s: &Tensor2, alg: &Algebra, flavor: TensorFlavor) -> Result<RbsPair> {
    let p = products(alg, r, s)?;
    let required: Vec<(&str, Tensor3)> = match flavor {
        TensorFlavor::RotaBaxterSystem => aybp_defect(r, s, alg, AybpMode::Aybp)?.defects,
        TensorFlavor::LeftAveraging => vec![
            ("r13r12 - r12r23", p.r13r12.sub(&p.r12r23)),
            ("s13r12 - s12s23", p.s13r12.sub(&p.s12s23)),
        ],
        TensorFlavor::RightAveraging => vec![
            ("r12r23 - s23r13", p.r12r23.sub(&p.s23r13)),
            ("s12s23 - s23s13", p.s12s23.sub(&p.s23s13)),
        ],
    };
    for (name, t) in &required {
        if let Some(line) = t.nonzero_lines(alg).into_iter().next() {
            return Err(Error::Precondition(format!("{name} {line}")));
        }
    }
    RbsPair::new(sandwich(alg, r), sandwich(alg, s))
}

/// `r♯(α) = α(r₍₂₎) r₍₁₎` on the dual basis: the coefficient matrix itself.
pub fn sharp_map(r: &Tensor2) -> Matrix {
    r.coefficients().clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkewReport {
    pub aybp_pass: bool,
    pub grbs_pass: bool,
}

impl SkewReport {
    pub fn agree(&self) -> bool {
        self.aybp_pass == self.grbs_pass
    }
}

fn require_skew(r: &Tensor2, s: &Tensor2) -> Result<()> {
    for (name, t) in [("r", r), ("s", s)] {
        if !t.is_skew() {
            return Err(Error::NotSkew(name.to_string()));
        }
    }
    Ok(())
}

/// Compares the tensor equations with the system equations of `(r♯, s♯)`
/// on the coadjoint bimodule, each computed on its own.
pub fn skew_aybp_grbs_check(r: &Tensor2, s: &Tensor2, alg: &Algebra) -> Result<SkewReport> {
    require_skew(r, s)?;
    let aybp_pass = aybp_defect(r, s, alg, AybpMode::Aybp)?.pass;
    let coadjoint = canonical_bimodule(alg, BimoduleKind::Coadjoint);
    let pair = RbsPair::new(sharp_map(r), sharp_map(s))?;
    let grbs_pass = grbs_defect(alg, &coadjoint, &pair)?.is_rbs();
    Ok(SkewReport { aybp_pass, grbs_pass })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualComparison {
    /// Agreement under `Ξ(α⊗β)(a⊗b) = α(b)β(a)`.
    pub twisted_pairing: bool,
    /// Agreement under `Ξ(α⊗β)(a⊗b) = α(a)β(b)`.
    pub standard_pairing: bool,
}

/// Compares `α ∗ β = r♯(α)·β + α·s♯(β)` on `A*` with the transpose of
/// `Δ̄(a) = a·r - s·a` under both pairings.
pub fn dual_product_comparison(r: &Tensor2, s: &Tensor2, alg: &Algebra) -> Result<DualComparison> {
    require_skew(r, s)?;
    let n = alg.dim();
    let coadjoint = canonical_bimodule(alg, BimoduleKind::Coadjoint);
    let pair = RbsPair::new(sharp_map(r), sharp_map(s))?;
    let star = dendriform_of(&coadjoint, &pair).dendriform_sum();
    let star = &star.tables()[0];
    let coproducts: Vec<Tensor2> = (0..n)
        .map(|k| {
            let a = alg.unit_vector(k);
            r.left_act(alg, &a).sub(&s.right_act(alg, &a))
        })
        .collect();
    let dual = |twisted: bool| {
        MultiTensor::from_fn(vec![n, n], n, |t| {
            let (i, j) = (t[0], t[1]);
            let (x, y) = if twisted { (j, i) } else { (i, j) };
            coproducts.iter().map(|d| d.coefficient(x, y)).collect()
        })
    };
    Ok(DualComparison {
        twisted_pairing: &dual(true) == star,
        standard_pairing: &dual(false) == star,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeakMorphismReport {
    pub holds: bool,
    pub failures: Vec<String>,
}

/// `(φ, ϕ, ψ)` from `(r, s)` to `(r', s')`: `φ, ϕ` algebra maps,
/// `(ψ⊗id)(r') = (id⊗φ)(r)`, `(ψ⊗id)(s') = (id⊗ϕ)(s)`,
/// `ψ(aφ(b)) = ψ(a)b`, `ψ(ϕ(a)b) = aψ(b)`.
pub fn aybp_weak_morphism_check(
    alg: &Algebra,
    (r, s): (&Tensor2, &Tensor2),
    (r2, s2): (&Tensor2, &Tensor2),
    phi: &Matrix,
    varphi: &Matrix,
    psi: &Matrix,
) -> Result<WeakMorphismReport> {
    let n = alg.dim();
    for m in [phi, varphi, psi] {
        if (m.rows(), m.cols()) != (n, n) {
            return dim_err("weak morphism maps must be endomorphisms of A");
        }
    }
    for t in [r, s, r2, s2] {
        if t.dim() != n {
            return dim_err("tensor dimension does not match the algebra");
        }
    }
    let mut failures = Vec::new();
    for (name, f) in [("φ", phi), ("ϕ", varphi)] {
        if alg.algebra_map_failure(alg, f).is_some() {
            failures.push(format!("{name} is an algebra map"));
        }
    }
    if r2.map_first(psi) != r.map_second(phi) {
        failures.push("(ψ⊗id)(r') = (id⊗φ)(r)".into());
    }
    if s2.map_first(psi) != s.map_second(varphi) {
        failures.push("(ψ⊗id)(s') = (id⊗ϕ)(s)".into());
    }
    let (left, right) = psi_module_identities(alg, phi, varphi, psi);
    if !left {
        failures.push("ψ(aφ(b)) = ψ(a)b".into());
    }
    if !right {
        failures.push("ψ(ϕ(a)b) = aψ(b)".into());
    }
    Ok(WeakMorphismReport {
        holds: failures.is_empty(),
        failures,
    })
}

pub(crate) fn psi_module_identities(alg: &Algebra, phi: &Matrix, varphi: &Matrix, psi: &Matrix) -> (bool, bool) {
    let n = alg.dim();
    let mut left = true;
    let mut right = true;
    for i in 0..n {
        for j in 0..n {
            let (a, b) = (alg.unit_vector(i), alg.unit_vector(j));
            left &= psi.apply(&alg.mul(&a, &phi.apply(&b))) == alg.mul(&psi.apply(&a), &b);
            right &= psi.apply(&alg.mul(&varphi.apply(&a), &b)) == alg.mul(&a, &psi.apply(&b));
        }
    }
    (left, right)
}

/// Runs [`morphism_check`] on `(r♯, s♯) → (r'♯, s'♯)` over the coadjoint
/// bimodule with `ψ* = ψᵀ` in the dual basis. `None` when `φ` or `ϕ` is
/// not an algebra map.
pub fn sharp_morphism_holds(
    alg: &Algebra,
    (r, s): (&Tensor2, &Tensor2),
    (r2, s2): (&Tensor2, &Tensor2),
    phi: &Matrix,
    varphi: &Matrix,
    psi: &Matrix,
) -> Result<Option<bool>> {
    let co = canonical_bimodule(alg, BimoduleKind::Coadjoint);
    let src = RbsPair::new(sharp_map(r), sharp_map(s))?;
    let dst = RbsPair::new(sharp_map(r2), sharp_map(s2))?;
    let rep = morphism_check(
        RbsModel { alg, module: &co, pair: &src },
        RbsModel { alg, module: &co, pair: &dst },
        phi,
        varphi,
        &psi.transpose(),
    );
    match rep {
        Ok(rep) => Ok(Some(rep.holds)),
        Err(Error::NotAlgebraMap(..)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// `a = e12`, `b = e13` in strictly upper triangular `3×3` matrices, with
/// `r = a⊗a`, `s = b⊗b`.
pub fn nilpotent_example() -> (Algebra, Tensor2, Tensor2) {
    let alg = crate::algebra::strictly_upper_triangular();
    let a = alg.unit_vector(0);
    let b = alg.unit_vector(2);
    (alg, Tensor2::simple(&a, &a), Tensor2::simple(&b, &b))
}
