//! Finite-dimensional associative algebras and their bimodules, given by
//! structure constants.

use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, int, Scalar, Vector};
use crate::linalg::{basis_tuples, Matrix, MultiTensor};
use num_traits::One;

/// An algebra with basis `e_0 … e_{n-1}`; `e_i e_j = Σ_k c_ij^k e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    names: Vec<String>,
    mult: MultiTensor,
}

impl Algebra {
    pub fn new(names: Vec<String>, mult: MultiTensor) -> Result<Self> {
        let n = names.len();
        if mult.input_dims() != [n, n] || mult.output_dim() != n {
            return dim_err(format!("structure constants do not match dimension {n}"));
        }
        Ok(Algebra { names, mult })
    }

    /// From `(i, j, k, c)` quadruples meaning `e_i e_j += c e_k`.
    pub fn from_constants(names: &[&str], constants: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let n = names.len();
        let mut mult = MultiTensor::uniform(2, n, n);
        for (i, j, k, c) in constants {
            if *i >= n || *j >= n || *k >= n {
                return dim_err(format!("index out of range in ({i},{j},{k})"));
            }
            let mut v = scalar::zeros(n);
            v[*k] = c.clone();
            mult.add_to(&[*i, *j], &v);
        }
        Algebra::new(names.iter().map(|s| s.to_string()).collect(), mult)
    }

    /// The algebra with zero multiplication.
    pub fn zero_product(names: &[&str]) -> Self {
        Algebra::from_constants(names, &[]).expect("empty table")
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn structure(&self) -> &MultiTensor {
        &self.mult
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        self.mult.get(&[i, j])
    }

    pub fn mul(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        self.mult.eval_vectors(&[a, b])
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        scalar::unit(self.dim(), i)
    }

    /// Left multiplication by `a` as a matrix.
    pub fn left_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(a, &self.unit_vector(j))).collect();
        Matrix::from_columns(self.dim(), &cols).expect("square")
    }

    pub fn right_mult(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|j| self.mul(&self.unit_vector(j), a)).collect();
        Matrix::from_columns(self.dim(), &cols).expect("square")
    }

    /// The same algebra written in the basis given by the columns of `p`
    /// (new basis vector `f_j = Σ_i p_ij e_i`).
    pub fn change_basis(&self, p: &Matrix) -> Result<Algebra> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::NotInvertible("change of basis".into()))?;
        let n = self.dim();
        let mult = MultiTensor::from_fn(vec![n, n], n, |t| {
            pinv.apply(&self.mul(&p.column(t[0]), &p.column(t[1])))
        });
        Algebra::new(self.names.clone(), mult)
    }

    /// First basis triple where associativity fails.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for t in basis_tuples(&[n, n, n]) {
            let (i, j, k) = (t[0], t[1], t[2]);
            let left = self.mul(&self.mul_basis(i, j), &self.unit_vector(k));
            let right = self.mul(&self.unit_vector(i), &self.mul_basis(j, k));
            if left != right {
                return Some((i, j, k));
            }
        }
        None
    }

    pub fn is_associative(&self) -> bool {
        self.associativity_failure().is_none()
    }

    /// `None` when `phi: self -> target` is multiplicative, else a failing pair.
    pub fn algebra_map_failure(&self, target: &Algebra, phi: &Matrix) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let lhs = phi.apply(&self.mul_basis(i, j));
                let rhs = target.mul(&phi.column(i), &phi.column(j));
                if lhs != rhs {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// A bimodule over an [`Algebra`]: `left: A ⊗ M → M`, `right: M ⊗ A → M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    names: Vec<String>,
    left: MultiTensor,
    right: MultiTensor,
}

impl Bimodule {
    pub fn new(names: Vec<String>, left: MultiTensor, right: MultiTensor) -> Result<Self> {
        let m = names.len();
        let n = left.input_dims().first().copied().unwrap_or(0);
        if left.input_dims() != [n, m] || left.output_dim() != m {
            return dim_err("left action shape");
        }
        if right.input_dims() != [m, n] || right.output_dim() != m {
            return dim_err("right action shape");
        }
        Ok(Bimodule { names, left, right })
    }

    /// From quadruples `a_i · m_j += c m_k` and `m_i · a_j += c m_k`.
    pub fn from_actions(
        alg_dim: usize,
        names: &[&str],
        left: &[(usize, usize, usize, Scalar)],
        right: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self> {
        let m = names.len();
        let mut l = MultiTensor::zero(vec![alg_dim, m], m);
        let mut r = MultiTensor::zero(vec![m, alg_dim], m);
        for (i, j, k, c) in left {
            if *i >= alg_dim || *j >= m || *k >= m {
                return dim_err("left action index out of range");
            }
            let mut v = scalar::zeros(m);
            v[*k] = c.clone();
            l.add_to(&[*i, *j], &v);
        }
        for (i, j, k, c) in right {
            if *i >= m || *j >= alg_dim || *k >= m {
                return dim_err("right action index out of range");
            }
            let mut v = scalar::zeros(m);
            v[*k] = c.clone();
            r.add_to(&[*i, *j], &v);
        }
        Bimodule::new(names.iter().map(|s| s.to_string()).collect(), l, r)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn algebra_dim(&self) -> usize {
        self.left.input_dims()[0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn left_table(&self) -> &MultiTensor {
        &self.left
    }

    pub fn right_table(&self) -> &MultiTensor {
        &self.right
    }

    /// `a · u`
    pub fn act_left(&self, a: &[Scalar], u: &[Scalar]) -> Vector {
        self.left.eval_vectors(&[a, u])
    }

    /// `u · a`
    pub fn act_right(&self, u: &[Scalar], a: &[Scalar]) -> Vector {
        self.right.eval_vectors(&[u, a])
    }

    pub fn unit_vector(&self, i: usize) -> Vector {
        scalar::unit(self.dim(), i)
    }

    /// Rewrites the module in the basis given by the columns of `p`.
    pub fn change_basis(&self, alg_p: &Matrix, p: &Matrix) -> Result<Bimodule> {
        let pinv = p
            .inverse()
            .ok_or_else(|| Error::NotInvertible("module change of basis".into()))?;
        let (n, m) = (self.algebra_dim(), self.dim());
        let left = MultiTensor::from_fn(vec![n, m], m, |t| {
            pinv.apply(&self.act_left(&alg_p.column(t[0]), &p.column(t[1])))
        });
        let right = MultiTensor::from_fn(vec![m, n], m, |t| {
            pinv.apply(&self.act_right(&p.column(t[0]), &alg_p.column(t[1])))
        });
        Bimodule::new(self.names.clone(), left, right)
    }

    /// Whether `psi: self -> target` intertwines both actions (same algebra).
    pub fn is_bimodule_map(&self, target: &Bimodule, psi: &Matrix) -> bool {
        let (n, m) = (self.algebra_dim(), self.dim());
        (0..n).all(|i| {
            let a = scalar::unit(n, i);
            (0..m).all(|j| {
                let u = self.unit_vector(j);
                psi.apply(&self.act_left(&a, &u)) == target.act_left(&a, &psi.column(j))
                    && psi.apply(&self.act_right(&u, &a)) == target.act_right(&psi.column(j), &a)
            })
        })
    }
}

/// Which identity a failing triple violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModelIdentity {
    Associativity,
    LeftAction,
    RightAction,
    Middle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub associative: bool,
    pub bimodule: bool,
    pub failing_triples: Vec<(ModelIdentity, [usize; 3])>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.associative && self.bimodule
    }
}

/// Checks associativity of the algebra and the three bimodule identities
/// `(ab)u = a(bu)`, `(ua)b = u(ab)`, `(au)b = a(ub)` on all basis triples.
pub fn validate_model(alg: &Algebra, module: &Bimodule) -> Result<ValidationReport> {
    let n = alg.dim();
    let m = module.dim();
    if module.algebra_dim() != n {
        return dim_err("bimodule is over an algebra of a different dimension");
    }
    let mut failing = Vec::new();
    for t in basis_tuples(&[n, n, n]) {
        let l = alg.mul(&alg.mul_basis(t[0], t[1]), &alg.unit_vector(t[2]));
        let r = alg.mul(&alg.unit_vector(t[0]), &alg.mul_basis(t[1], t[2]));
        if l != r {
            failing.push((ModelIdentity::Associativity, [t[0], t[1], t[2]]));
        }
    }
    let associative = failing.is_empty();
    for i in 0..n {
        let a = alg.unit_vector(i);
        for j in 0..n {
            let b = alg.unit_vector(j);
            let ab = alg.mul(&a, &b);
            for k in 0..m {
                let u = module.unit_vector(k);
                if module.act_left(&ab, &u) != module.act_left(&a, &module.act_left(&b, &u)) {
                    failing.push((ModelIdentity::LeftAction, [i, j, k]));
                }
                if module.act_right(&u, &ab) != module.act_right(&module.act_right(&u, &a), &b) {
                    failing.push((ModelIdentity::RightAction, [k, i, j]));
                }
                if module.act_right(&module.act_left(&a, &u), &b) != module.act_left(&a, &module.act_right(&u, &b)) {
                    failing.push((ModelIdentity::Middle, [i, k, j]));
                }
            }
        }
    }
    let bimodule = failing.iter().all(|f| f.0 == ModelIdentity::Associativity);
    Ok(ValidationReport {
        associative,
        bimodule,
        failing_triples: failing,
    })
}

/// The standard bimodules attached to an algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BimoduleKind {
    Adjoint,
    Coadjoint,
}

/// Adjoint or coadjoint bimodule. On the dual basis `f_k` the coadjoint
/// actions are `(a·f)(b) = f(ba)` and `(f·a)(b) = f(ab)`.
pub fn canonical_bimodule(alg: &Algebra, kind: BimoduleKind) -> Bimodule {
    let n = alg.dim();
    match kind {
        BimoduleKind::Adjoint => Bimodule::new(alg.names.clone(), alg.mult.clone(), alg.mult.clone()).expect("shape"),
        BimoduleKind::Coadjoint => {
            let names = alg.names.iter().map(|s| format!("{s}*")).collect();
            // (e_i · f_k)(e_j) = c_ji^k,  (f_k · e_i)(e_j) = c_ij^k
            let left = MultiTensor::from_fn(vec![n, n], n, |t| {
                let (i, k) = (t[0], t[1]);
                (0..n).map(|j| alg.mult.coefficient(&[j, i], k)).collect()
            });
            let right = MultiTensor::from_fn(vec![n, n], n, |t| {
                let (k, i) = (t[0], t[1]);
                (0..n).map(|j| alg.mult.coefficient(&[i, j], k)).collect()
            });
            Bimodule::new(names, left, right).expect("shape")
        }
    }
}

/// Keeps only the left action of `module` (the right action becomes zero).
pub fn left_only(module: &Bimodule) -> Bimodule {
    let right = MultiTensor::zero(module.right.input_dims().to_vec(), module.dim());
    Bimodule::new(module.names.clone(), module.left.clone(), right).expect("shape")
}

/// Keeps only the right action of `module`.
pub fn right_only(module: &Bimodule) -> Bimodule {
    let left = MultiTensor::zero(module.left.input_dims().to_vec(), module.dim());
    Bimodule::new(module.names.clone(), left, module.right.clone()).expect("shape")
}

/// Direct sum of two bimodules over the same algebra.
pub fn direct_sum(a: &Bimodule, b: &Bimodule) -> Result<Bimodule> {
    if a.algebra_dim() != b.algebra_dim() {
        return dim_err("bimodules over different algebras");
    }
    let (n, ma, mb) = (a.algebra_dim(), a.dim(), b.dim());
    let m = ma + mb;
    let split = |v: &[Scalar]| (v[..ma].to_vec(), v[ma..].to_vec());
    let join = |x: Vector, y: Vector| -> Vector { x.into_iter().chain(y).collect() };
    let left = MultiTensor::from_fn(vec![n, m], m, |t| {
        let (x, y) = split(&scalar::unit(m, t[1]));
        let av = scalar::unit(n, t[0]);
        join(a.act_left(&av, &x), b.act_left(&av, &y))
    });
    let right = MultiTensor::from_fn(vec![m, n], m, |t| {
        let (x, y) = split(&scalar::unit(m, t[0]));
        let av = scalar::unit(n, t[1]);
        join(a.act_right(&x, &av), b.act_right(&y, &av))
    });
    let names = a.names.iter().chain(&b.names).cloned().collect();
    Bimodule::new(names, left, right)
}

/// The algebra `A ⊕ A ⊕ M` with
/// `(a1, a2, u)(b1, b2, v) = (a1 b1, a2 b2, a1·v + u·b2)`.
pub fn semidirect_triple(alg: &Algebra, module: &Bimodule) -> Result<Algebra> {
    let n = alg.dim();
    let m = module.dim();
    if module.algebra_dim() != n {
        return dim_err("bimodule is over an algebra of a different dimension");
    }
    let d = 2 * n + m;
    let parts = |v: &[Scalar]| (v[..n].to_vec(), v[n..2 * n].to_vec(), v[2 * n..].to_vec());
    let mult = MultiTensor::from_fn(vec![d, d], d, |t| {
        let (a1, a2, u) = parts(&scalar::unit(d, t[0]));
        let (b1, b2, v) = parts(&scalar::unit(d, t[1]));
        let mut out = alg.mul(&a1, &b1);
        out.extend(alg.mul(&a2, &b2));
        out.extend(scalar::add(&module.act_left(&a1, &v), &module.act_right(&u, &b2)));
        out
    });
    let mut names: Vec<String> = alg.names.iter().map(|s| format!("{s}'")).collect();
    names.extend(alg.names.iter().map(|s| format!("{s}''")));
    names.extend(module.names.iter().cloned());
    Algebra::new(names, mult)
}

/// Truncated polynomial algebra `ℚ[x]/(x^{d+1})` with basis `1, x, …, x^d`.
pub fn truncated_polynomial(d: usize) -> Algebra {
    let names: Vec<String> = (0..=d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut mult = MultiTensor::uniform(2, d + 1, d + 1);
    for i in 0..=d {
        for j in 0..=d - i {
            mult.set(&[i, j], i + j, Scalar::one());
        }
    }
    Algebra::new(names, mult).expect("shape")
}

/// Strictly upper triangular `3×3` matrices on `e12, e23, e13`.
pub fn strictly_upper_triangular() -> Algebra {
    Algebra::from_constants(&["e12", "e23", "e13"], &[c(0, 1, 2, 1)]).expect("shape")
}

/// Full matrix algebra `M_n` on `E11, E12, …, Enn` (row-major).
pub fn matrix_algebra(n: usize) -> Algebra {
    let names: Vec<String> = (0..n * n).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut constants = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                constants.push((i * n + j, j * n + l, i * n + l, Scalar::one()));
            }
        }
    }
    Algebra::from_constants(&refs, &constants).expect("shape")
}

/// The q-dilation `σ` and Jackson q-integral `J` on `ℚ[x]/(x^{d+1})`.
#[derive(Debug, Clone)]
pub struct JacksonModel {
    pub algebra: Algebra,
    pub dilation: Matrix,
    pub integral: Matrix,
}

/// `σ(x^k) = q^k x^k`, `J(x^k) = (1-q)/(1-q^{k+1}) x^{k+1}` (zero past `x^d`).
/// Fails when `q^k = 1` for some `1 ≤ k ≤ d+1`.
pub fn jackson_example(d: usize, q: &Scalar) -> Result<JacksonModel> {
    let algebra = truncated_polynomial(d);
    let n = d + 1;
    let one = Scalar::one();
    let mut power = one.clone();
    let mut powers = Vec::with_capacity(d + 2);
    for k in 0..=d + 1 {
        if k >= 1 && power == one {
            return Err(Error::Pole(format!("q^{k} = 1")));
        }
        powers.push(power.clone());
        power = &power * q;
    }
    let mut dilation = Matrix::zeros(n, n);
    let mut integral = Matrix::zeros(n, n);
    for k in 0..n {
        dilation[(k, k)] = powers[k].clone();
        if k + 1 < n {
            integral[(k + 1, k)] = (&one - q) / (&one - &powers[k + 1]);
        }
    }
    Ok(JacksonModel {
        algebra,
        dilation,
        integral,
    })
}

impl JacksonModel {
    /// The pair `(J, σ∘J)` on the adjoint bimodule.
    pub fn pair(&self) -> crate::rbs::RbsPair {
        crate::rbs::RbsPair::new(self.integral.clone(), self.dilation.mul(&self.integral)).expect("square maps")
    }
}

/// Integer helper for building constants.
pub fn c(i: usize, j: usize, k: usize, v: i64) -> (usize, usize, usize, Scalar) {
    (i, j, k, int(v))
}
