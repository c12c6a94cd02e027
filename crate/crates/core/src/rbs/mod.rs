//! Generalized Rota-Baxter systems `(R, S)` of maps `M → A` and their
//! equivalent descriptions.

mod gauge;
mod induced;
mod morphism;
mod reduce;

pub use gauge::{gauge_factor, gauge_transform, inner_cocycle, GaugeOutcome};
pub use induced::{dendriform_of, induce_structures, InducedStructures, PrelieConvention};
pub use morphism::{morphism_check, MorphismReport, RbsModel};
pub use reduce::{reduce, Reduction};

use crate::algebra::{semidirect_triple, Algebra, Bimodule};
use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::solve::coordinates_in;
use crate::linalg::{fmt_vector, Matrix, MultiTensor};

/// A pair of linear maps `R, S: M → A`, stored as `dim A × dim M` matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RbsPair {
    pub r: Matrix,
    pub s: Matrix,
}

impl RbsPair {
    pub fn new(r: Matrix, s: Matrix) -> Result<Self> {
        if (r.rows(), r.cols()) != (s.rows(), s.cols()) {
            return dim_err("R and S have different shapes");
        }
        Ok(RbsPair { r, s })
    }

    pub fn zero(alg_dim: usize, module_dim: usize) -> Self {
        RbsPair {
            r: Matrix::zeros(alg_dim, module_dim),
            s: Matrix::zeros(alg_dim, module_dim),
        }
    }

    pub fn algebra_dim(&self) -> usize {
        self.r.rows()
    }

    pub fn module_dim(&self) -> usize {
        self.r.cols()
    }

    pub fn check_shape(&self, alg: &Algebra, module: &Bimodule) -> Result<()> {
        if module.algebra_dim() != alg.dim() {
            return dim_err("bimodule is over an algebra of a different dimension");
        }
        if self.algebra_dim() != alg.dim() || self.module_dim() != module.dim() {
            return dim_err(format!(
                "pair maps {}-dim to {}-dim, model needs {} -> {}",
                self.module_dim(),
                self.algebra_dim(),
                module.dim(),
                alg.dim()
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &RbsPair) -> RbsPair {
        RbsPair {
            r: self.r.add(&other.r),
            s: self.s.add(&other.s),
        }
    }

    pub fn sub(&self, other: &RbsPair) -> RbsPair {
        RbsPair {
            r: self.r.sub(&other.r),
            s: self.s.sub(&other.s),
        }
    }

    pub fn scale(&self, c: &Scalar) -> RbsPair {
        RbsPair {
            r: self.r.scale(c),
            s: self.s.scale(c),
        }
    }

    /// `(R∘φ, S∘φ)`: pulls the pair back along a linear map into `M`.
    pub fn precompose(&self, phi: &Matrix) -> RbsPair {
        RbsPair {
            r: self.r.mul(phi),
            s: self.s.mul(phi),
        }
    }
}

/// The two defect tensors of a pair:
/// `R(u)R(v) - R(R(u)·v + u·S(v))` and `S(u)S(v) - S(R(u)·v + u·S(v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrbsDefect {
    pub defect_r: MultiTensor,
    pub defect_s: MultiTensor,
}

impl GrbsDefect {
    pub fn is_rbs(&self) -> bool {
        self.defect_r.is_zero() && self.defect_s.is_zero()
    }

    /// Witness lines such as `defect_R[e,e] = -1/1`, in basis order.
    pub fn witnesses(&self, module: &Bimodule) -> Vec<String> {
        let mut out = Vec::new();
        for (label, t) in [("defect_R", &self.defect_r), ("defect_S", &self.defect_s)] {
            for (tuple, v) in t.entries() {
                let names: Vec<&str> = tuple.iter().map(|&i| module.name(i)).collect();
                out.push(format!("{label}[{}] = {}", names.join(","), fmt_vector(v)));
            }
        }
        out
    }
}

/// Evaluates `R(u)·v + u·S(v)`, the argument shared by both defects.
pub(crate) fn star(module: &Bimodule, pair: &RbsPair, u: &[Scalar], v: &[Scalar]) -> Vector {
    scalar::add(
        &module.act_left(&pair.r.apply(u), v),
        &module.act_right(u, &pair.s.apply(v)),
    )
}

pub fn grbs_defect(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<GrbsDefect> {
    pair.check_shape(alg, module)?;
    let (n, m) = (alg.dim(), module.dim());
    let mut defect_r = MultiTensor::uniform(2, m, n);
    let mut defect_s = MultiTensor::uniform(2, m, n);
    for i in 0..m {
        let u = module.unit_vector(i);
        for j in 0..m {
            let v = module.unit_vector(j);
            let w = star(module, pair, &u, &v);
            let rr = alg.mul(&pair.r.apply(&u), &pair.r.apply(&v));
            let ss = alg.mul(&pair.s.apply(&u), &pair.s.apply(&v));
            defect_r.set_output(&[i, j], scalar::sub(&rr, &pair.r.apply(&w)));
            defect_s.set_output(&[i, j], scalar::sub(&ss, &pair.s.apply(&w)));
        }
    }
    Ok(GrbsDefect { defect_r, defect_s })
}

pub fn is_rbs(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<bool> {
    Ok(grbs_defect(alg, module, pair)?.is_rbs())
}

/// Refuses non-systems with the first witness.
pub(crate) fn require_rbs(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<()> {
    let d = grbs_defect(alg, module, pair)?;
    match d.witnesses(module).into_iter().next() {
        None => Ok(()),
        Some(w) => Err(Error::NotRotaBaxter(w)),
    }
}

/// Basis `(R e_j, S e_j, e_j)` of the graph inside `A ⊕ A ⊕ M`.
pub fn graph_basis(pair: &RbsPair) -> Vec<Vector> {
    let m = pair.module_dim();
    (0..m)
        .map(|j| {
            let mut g = pair.r.column(j);
            g.extend(pair.s.column(j));
            g.extend(scalar::unit(m, j));
            g
        })
        .collect()
}

/// Whether the graph `{(R u, S u, u)}` is closed under the product of the
/// triple `A ⊕ A ⊕ M`.
pub fn graph_subalgebra_check(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<bool> {
    pair.check_shape(alg, module)?;
    let triple = semidirect_triple(alg, module)?;
    let basis = graph_basis(pair);
    for x in &basis {
        for y in &basis {
            let p = triple.mul(x, y);
            if coordinates_in(triple.dim(), &basis, &p)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The lift `N(a1, a2, u) = (R u, S u, 0)` on `A ⊕ A ⊕ M`.
pub fn nijenhuis_lift(pair: &RbsPair) -> Matrix {
    let (n, m) = (pair.algebra_dim(), pair.module_dim());
    let d = 2 * n + m;
    let mut out = Matrix::zeros(d, d);
    for j in 0..m {
        for i in 0..n {
            out[(i, 2 * n + j)] = pair.r[(i, j)].clone();
            out[(n + i, 2 * n + j)] = pair.s[(i, j)].clone();
        }
    }
    out
}

/// Whether the lift satisfies `N(x)N(y) = N(N(x)y + xN(y) - N(xy))`.
pub fn nijenhuis_lift_check(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<bool> {
    pair.check_shape(alg, module)?;
    let triple = semidirect_triple(alg, module)?;
    let nm = nijenhuis_lift(pair);
    let d = triple.dim();
    for i in 0..d {
        let x = scalar::unit(d, i);
        let nx = nm.apply(&x);
        for j in 0..d {
            let y = scalar::unit(d, j);
            let ny = nm.apply(&y);
            let lhs = triple.mul(&nx, &ny);
            let mut inner = scalar::add(&triple.mul(&nx, &y), &triple.mul(&x, &ny));
            inner = scalar::sub(&inner, &nm.apply(&triple.mul(&x, &y)));
            if lhs != nm.apply(&inner) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Four equivalent descriptions of a generalized Rota-Baxter system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Characterization {
    pub rbs: bool,
    pub graph: bool,
    pub nijenhuis: bool,
    pub maurer_cartan: bool,
}

impl Characterization {
    pub fn agree(&self) -> bool {
        self.rbs == self.graph && self.graph == self.nijenhuis && self.nijenhuis == self.maurer_cartan
    }
}

pub fn characterize(alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<Characterization> {
    let c = crate::cohomology::Cochain::from_pair(pair);
    Ok(Characterization {
        rbs: is_rbs(alg, module, pair)?,
        graph: graph_subalgebra_check(alg, module, pair)?,
        nijenhuis: nijenhuis_lift_check(alg, module, pair)?,
        maurer_cartan: crate::cohomology::derived_bracket(&c, &c, alg, module)?.is_zero(),
    })
}

/// Invertible maps `θ0, θ1: A → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleSystemPair {
    pub theta0: Matrix,
    pub theta1: Matrix,
}

/// `(R⁻¹, S⁻¹)` for a pair of invertible maps.
pub fn inverse_correspondence(pair: &RbsPair) -> Result<CocycleSystemPair> {
    let theta0 = pair.r.inverse().ok_or_else(|| Error::NotInvertible("R".into()))?;
    let theta1 = pair.s.inverse().ok_or_else(|| Error::NotInvertible("S".into()))?;
    Ok(CocycleSystemPair { theta0, theta1 })
}

/// Checks `θ0(xy) = x·θ0(y) + θ0(x)·(θ1⁻¹θ0(y))` and
/// `θ1(xy) = (θ0⁻¹θ1(x))·θ1(y) + θ1(x)·y`.
pub fn cocycle_system_check(alg: &Algebra, module: &Bimodule, theta: &CocycleSystemPair) -> Result<bool> {
    let (n, m) = (alg.dim(), module.dim());
    for t in [&theta.theta0, &theta.theta1] {
        if (t.rows(), t.cols()) != (m, n) {
            return dim_err("cocycle maps must go A -> M");
        }
    }
    let inv0 = theta.theta0.inverse().ok_or_else(|| Error::NotInvertible("θ0".into()))?;
    let inv1 = theta.theta1.inverse().ok_or_else(|| Error::NotInvertible("θ1".into()))?;
    for i in 0..n {
        let x = alg.unit_vector(i);
        for j in 0..n {
            let y = alg.unit_vector(j);
            let xy = alg.mul(&x, &y);
            let t0y = theta.theta0.apply(&y);
            let lhs0 = theta.theta0.apply(&xy);
            let rhs0 = scalar::add(
                &module.act_left(&x, &t0y),
                &module.act_right(&theta.theta0.apply(&x), &inv1.apply(&t0y)),
            );
            let t1x = theta.theta1.apply(&x);
            let lhs1 = theta.theta1.apply(&xy);
            let rhs1 = scalar::add(
                &module.act_left(&inv0.apply(&t1x), &theta.theta1.apply(&y)),
                &module.act_right(&t1x, &y),
            );
            if lhs0 != rhs0 || lhs1 != rhs1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
