use super::tensor::{legs, Tensor2, Tensor3};
use super::{aybp_defect, aybp_sides, psi_module_identities, AybpMode, WeakMorphismReport};
use crate::algebra::Algebra;
use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::Scalar;
use crate::linalg::{Matrix, MultiTensor};
use crate::loday::{BinaryStructure, StructureKind};
use num_traits::Zero;

/// `(A, μ, Δ, δ₁, δ₂)` with the three maps stored as `n²×n` matrices whose
/// column `k` is the flattened image of `e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovariantBialgebra {
    pub alg: Algebra,
    pub delta: Matrix,
    pub delta1: Matrix,
    pub delta2: Matrix,
}

impl CovariantBialgebra {
    pub fn new(alg: Algebra, delta: Matrix, delta1: Matrix, delta2: Matrix) -> Result<Self> {
        let n = alg.dim();
        for m in [&delta, &delta1, &delta2] {
            if (m.rows(), m.cols()) != (n * n, n) {
                return dim_err(format!("maps A -> A⊗A must be {}x{n}", n * n));
            }
        }
        Ok(CovariantBialgebra {
            alg,
            delta,
            delta1,
            delta2,
        })
    }

    pub fn zero(alg: &Algebra) -> Self {
        let n = alg.dim();
        let z = Matrix::zeros(n * n, n);
        CovariantBialgebra {
            alg: alg.clone(),
            delta: z.clone(),
            delta1: z.clone(),
            delta2: z,
        }
    }

    fn image(&self, m: &Matrix, a: &[Scalar]) -> Tensor2 {
        Tensor2::from_flat(self.alg.dim(), &m.apply(a))
    }

    pub fn coproduct(&self, a: &[Scalar]) -> Tensor2 {
        self.image(&self.delta, a)
    }

    /// `(A, μ, Δ + Δ', δ₁ + δ₁', δ₂ + δ₂')`.
    pub fn sum(&self, other: &CovariantBialgebra) -> CovariantBialgebra {
        CovariantBialgebra {
            alg: self.alg.clone(),
            delta: self.delta.add(&other.delta),
            delta1: self.delta1.add(&other.delta1),
            delta2: self.delta2.add(&other.delta2),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BialgebraReport {
    pub derivation_1: bool,
    pub derivation_2: bool,
    pub coassociative: bool,
    /// `Δ(ab) = a·δ₁(b) + Δ(a)·b`.
    pub covariant_1: bool,
    /// `Δ(ab) = a·Δ(b) + δ₂(a)·b`.
    pub covariant_2: bool,
    /// `(id⊗δ₁)∘Δ = (δ₂⊗id)∘Δ`.
    pub compatible: bool,
    pub witnesses: Vec<String>,
}

impl BialgebraReport {
    pub fn pass(&self) -> bool {
        self.derivation_1 && self.derivation_2 && self.coassociative && self.covariant_1 && self.covariant_2
    }
}

pub fn covariant_bialgebra_check(cb: &CovariantBialgebra) -> BialgebraReport {
    let alg = &cb.alg;
    let n = alg.dim();
    let mut w = Vec::new();
    let mut flags = [true; 4];
    for i in 0..n {
        let a = alg.unit_vector(i);
        for j in 0..n {
            let b = alg.unit_vector(j);
            let ab = alg.mul_basis(i, j);
            let pair = format!("({},{})", alg.name(i), alg.name(j));
            let d_ab = cb.coproduct(&ab);
            let checks = [
                (
                    "derivation δ1",
                    cb.image(&cb.delta1, &ab),
                    cb.image(&cb.delta1, &b).left_act(alg, &a).add(&cb.image(&cb.delta1, &a).right_act(alg, &b)),
                ),
                (
                    "derivation δ2",
                    cb.image(&cb.delta2, &ab),
                    cb.image(&cb.delta2, &b).left_act(alg, &a).add(&cb.image(&cb.delta2, &a).right_act(alg, &b)),
                ),
                (
                    "covariance with δ1",
                    d_ab.clone(),
                    cb.image(&cb.delta1, &b).left_act(alg, &a).add(&cb.coproduct(&a).right_act(alg, &b)),
                ),
                (
                    "covariance with δ2",
                    d_ab,
                    cb.coproduct(&b).left_act(alg, &a).add(&cb.image(&cb.delta2, &a).right_act(alg, &b)),
                ),
            ];
            for (flag, (name, lhs, rhs)) in flags.iter_mut().zip(checks) {
                if lhs != rhs {
                    *flag = false;
                    w.push(format!("{name} fails at {pair}"));
                }
            }
        }
    }
    let mut coassociative = true;
    let mut compatible = true;
    for k in 0..n {
        let d = cb.coproduct(&alg.unit_vector(k));
        if Tensor3::id_tensor(&d, &cb.delta) != Tensor3::tensor_id(&d, &cb.delta) {
            coassociative = false;
            w.push(format!("coassociativity fails at {}", alg.name(k)));
        }
        if Tensor3::id_tensor(&d, &cb.delta1) != Tensor3::tensor_id(&d, &cb.delta2) {
            compatible = false;
        }
    }
    let [derivation_1, derivation_2, covariant_1, covariant_2] = flags;
    BialgebraReport {
        derivation_1,
        derivation_2,
        coassociative,
        covariant_1,
        covariant_2,
        compatible,
        witnesses: w,
    }
}

/// `Δ̄(a) = a·r - s·a`, `δ_r(a) = a·r - r·a`, `δ_s(a) = a·s - s·a`
/// without any condition on `(r, s)`.
fn quasitriangular_maps(alg: &Algebra, r: &Tensor2, s: &Tensor2) -> CovariantBialgebra {
    let n = alg.dim();
    let build = |f: &dyn Fn(&[Scalar]) -> Tensor2| {
        let cols: Vec<_> = (0..n).map(|k| f(&alg.unit_vector(k)).flat()).collect();
        Matrix::from_columns(n * n, &cols).expect("shape")
    };
    CovariantBialgebra {
        alg: alg.clone(),
        delta: build(&|a| r.left_act(alg, a).sub(&s.right_act(alg, a))),
        delta1: build(&|a| r.left_act(alg, a).sub(&r.right_act(alg, a))),
        delta2: build(&|a| s.left_act(alg, a).sub(&s.right_act(alg, a))),
    }
}

/// The quasitriangular covariant bialgebra `(A, μ, Δ̄, δ_r, δ_s)` of an
/// associative Yang-Baxter pair.
pub fn quasitriangular_build(r: &Tensor2, s: &Tensor2, alg: &Algebra) -> Result<CovariantBialgebra> {
    let rep = aybp_defect(r, s, alg, AybpMode::Aybp)?;
    if let Some(w) = rep.witnesses(alg).into_iter().next() {
        return Err(Error::Precondition(format!("not an associative Yang-Baxter pair: {w}")));
    }
    Ok(quasitriangular_maps(alg, r, s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerturbationReport {
    /// The perturbation criterion evaluated on every basis element.
    pub condition_holds: bool,
    /// The perturbed tuple passes [`covariant_bialgebra_check`].
    pub direct_check: bool,
}

impl PerturbationReport {
    pub fn agree(&self) -> bool {
        self.condition_holds == self.direct_check
    }
}

/// Decides whether `(A, μ, Δ + Δ̄, δ₁ + δ_r, δ₂ + δ_s)` is a covariant
/// bialgebra in two ways: through
/// `a·((id⊗Δ)⁻(r) - AYB₁) - ((id⊗Δ)⁻(s) - AYB₂)·a + C(a) = s23 Δ(a)13 + Δ(a)13 r12`
/// with `C(a) = -s12 (δ₁(a) - Δ(a))23 - (δ₂(a) - Δ(a))12 r23`, and by
/// checking the perturbed tuple directly. `C` vanishes when `δ₁ = δ₂ = Δ`.
pub fn perturbation_check(cb: &CovariantBialgebra, r: &Tensor2, s: &Tensor2) -> Result<PerturbationReport> {
    let base = covariant_bialgebra_check(cb);
    if !base.pass() {
        return Err(Error::Precondition(format!(
            "not a covariant bialgebra: {}",
            base.witnesses.first().map(String::as_str).unwrap_or("")
        )));
    }
    let alg = &cb.alg;
    let n = alg.dim();
    if r.dim() != n || s.dim() != n {
        return dim_err("tensors must live in A⊗A");
    }
    let (ayb1, ayb2) = aybp_sides(alg, r, s)?;
    let minus = |t: &Tensor2| Tensor3::id_tensor(t, &cb.delta).sub(&Tensor3::tensor_id(t, &cb.delta));
    let (dr, ds) = (minus(r).sub(&ayb1), minus(s).sub(&ayb2));
    let condition_holds = (0..n).all(|k| {
        let a = alg.unit_vector(k);
        let da = cb.coproduct(&a);
        let e1 = cb.image(&cb.delta1, &a).sub(&da);
        let e2 = cb.image(&cb.delta2, &a).sub(&da);
        let correction = legs(alg, s, (1, 2), &e1, (2, 3)).add(&legs(alg, &e2, (1, 2), r, (2, 3)));
        let lhs = dr.left_act(alg, &a).sub(&ds.right_act(alg, &a)).sub(&correction);
        let rhs = legs(alg, s, (2, 3), &da, (1, 3)).add(&legs(alg, &da, (1, 3), r, (1, 2)));
        lhs == rhs
    });
    let perturbed = cb.sum(&quasitriangular_maps(alg, r, s));
    Ok(PerturbationReport {
        condition_holds,
        direct_check: covariant_bialgebra_check(&perturbed).pass(),
    })
}

/// `a ⋄ b = b₍₁₎ a b₍₂₎` over `Δ(b)`, for a compatible covariant bialgebra.
pub fn compatible_prelie(cb: &CovariantBialgebra) -> Result<BinaryStructure> {
    let rep = covariant_bialgebra_check(cb);
    if !rep.pass() {
        return Err(Error::Precondition("not a covariant bialgebra".into()));
    }
    if !rep.compatible {
        return Err(Error::Precondition("(id⊗δ1)∘Δ differs from (δ2⊗id)∘Δ".into()));
    }
    let alg = &cb.alg;
    let n = alg.dim();
    let table = MultiTensor::from_fn(vec![n, n], n, |t| {
        let a = alg.unit_vector(t[0]);
        let mut out = crate::linalg::scalar::zeros(n);
        for (k, l, c) in cb.coproduct(&alg.unit_vector(t[1])).terms() {
            let v = alg.mul(&alg.mul(&alg.unit_vector(k), &a), &alg.unit_vector(l));
            crate::linalg::scalar::axpy(&mut out, c, &v);
        }
        out
    });
    BinaryStructure::new(StructureKind::Prelie, alg.names().to_vec(), vec![table])
}

fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(a.rows() * b.rows(), a.cols() * b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            for k in 0..b.rows() {
                for l in 0..b.cols() {
                    out[(i * b.rows() + k, j * b.cols() + l)] = x * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// `(φ, ϕ, ψ)` from `src` to `dst` (same algebra): `φ, ϕ` algebra maps,
/// `(ψ⊗ψ)∘Δ' = Δ∘ψ`, `(ψ⊗ψ)∘δᵢ' = δᵢ∘ψ`, `ψ(aφ(b)) = ψ(a)b`,
/// `ψ(ϕ(a)b) = aψ(b)`.
pub fn covariant_weak_morphism_check(
    src: &CovariantBialgebra,
    dst: &CovariantBialgebra,
    phi: &Matrix,
    varphi: &Matrix,
    psi: &Matrix,
) -> Result<WeakMorphismReport> {
    let alg = &src.alg;
    let n = alg.dim();
    if dst.alg != *alg {
        return Err(Error::Precondition("weak morphisms are defined over one algebra".into()));
    }
    for m in [phi, varphi, psi] {
        if (m.rows(), m.cols()) != (n, n) {
            return dim_err("weak morphism maps must be endomorphisms of A");
        }
    }
    let mut failures = Vec::new();
    for (name, f) in [("φ", phi), ("ϕ", varphi)] {
        if alg.algebra_map_failure(alg, f).is_some() {
            failures.push(format!("{name} is an algebra map"));
        }
    }
    let pp = kron(psi, psi);
    for (name, d_src, d_dst) in [
        ("(ψ⊗ψ)∘Δ' = Δ∘ψ", &src.delta, &dst.delta),
        ("(ψ⊗ψ)∘δ1' = δ1∘ψ", &src.delta1, &dst.delta1),
        ("(ψ⊗ψ)∘δ2' = δ2∘ψ", &src.delta2, &dst.delta2),
    ] {
        if pp.mul(d_dst) != d_src.mul(psi) {
            failures.push(name.to_string());
        }
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
