use crate::error::{dim_err, Result};
use crate::linalg::{Matrix, MultiTensor, Scalar};
use crate::rbs::RbsPair;

/// An element of `Hom(M^{⊗n}, A) ⊕ Hom(M^{⊗n}, A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub p: MultiTensor,
    pub q: MultiTensor,
}

impl Cochain {
    pub fn new(p: MultiTensor, q: MultiTensor) -> Result<Self> {
        if p.input_dims() != q.input_dims() || p.output_dim() != q.output_dim() {
            return dim_err("cochain components differ in shape");
        }
        let dims = p.input_dims();
        if dims.windows(2).any(|w| w[0] != w[1]) {
            return dim_err("cochain slots must all be M");
        }
        Ok(Cochain { p, q })
    }

    pub fn zero(arity: usize, alg_dim: usize, module_dim: usize) -> Self {
        Cochain {
            p: MultiTensor::uniform(arity, module_dim, alg_dim),
            q: MultiTensor::uniform(arity, module_dim, alg_dim),
        }
    }

    /// Degree-0 cochain `(a, b) ∈ A ⊕ A`.
    pub fn constant(a: Vec<Scalar>, b: Vec<Scalar>) -> Self {
        Cochain {
            p: MultiTensor::constant(a),
            q: MultiTensor::constant(b),
        }
    }

    /// Views a pair of maps as a degree-1 cochain.
    pub fn from_pair(pair: &RbsPair) -> Self {
        Cochain {
            p: linear_tensor(&pair.r),
            q: linear_tensor(&pair.s),
        }
    }

    /// Inverse of [`Cochain::from_pair`]; `None` unless the arity is one.
    pub fn to_pair(&self) -> Option<RbsPair> {
        if self.arity() != 1 {
            return None;
        }
        let (n, m) = (self.alg_dim(), self.p.input_dims()[0]);
        let mat = |t: &MultiTensor| {
            let cols: Vec<Vec<Scalar>> = (0..m).map(|j| t.get(&[j])).collect();
            Matrix::from_columns(n, &cols).expect("columns of length dim A")
        };
        Some(RbsPair::new(mat(&self.p), mat(&self.q)).expect("same shape"))
    }

    pub fn arity(&self) -> usize {
        self.p.arity()
    }

    pub fn alg_dim(&self) -> usize {
        self.p.output_dim()
    }

    /// `None` for degree 0, where the module dimension is not recorded.
    pub fn module_dim(&self) -> Option<usize> {
        self.p.input_dims().first().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        Cochain {
            p: self.p.add(&other.p),
            q: self.q.add(&other.q),
        }
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        Cochain {
            p: self.p.sub(&other.p),
            q: self.q.sub(&other.q),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            p: self.p.scale(c),
            q: self.q.scale(c),
        }
    }

    /// Coordinates in the basis `(component, input tuple, output index)`,
    /// component-major and lexicographic inside each component.
    pub fn flatten(&self, module_dim: usize) -> Vec<Scalar> {
        let n = self.alg_dim();
        let tuples = crate::linalg::basis_tuples(&vec![module_dim; self.arity()]);
        let mut out = Vec::with_capacity(2 * tuples.len() * n);
        for t in [&self.p, &self.q] {
            for tuple in &tuples {
                out.extend(t.get(tuple));
            }
        }
        out
    }

    /// Inverse of [`Cochain::flatten`].
    pub fn unflatten(coords: &[Scalar], arity: usize, alg_dim: usize, module_dim: usize) -> Result<Cochain> {
        let tuples = crate::linalg::basis_tuples(&vec![module_dim; arity]);
        if coords.len() != 2 * tuples.len() * alg_dim {
            return dim_err("coordinate vector length");
        }
        let mut c = Cochain::zero(arity, alg_dim, module_dim);
        for (comp, t) in [&mut c.p, &mut c.q].into_iter().enumerate() {
            for (ti, tuple) in tuples.iter().enumerate() {
                let off = (comp * tuples.len() + ti) * alg_dim;
                t.set_output(tuple, coords[off..off + alg_dim].to_vec());
            }
        }
        Ok(c)
    }
}

/// `dim C^n = 2 · dim A · (dim M)^n`
pub fn cochain_space_dim(arity: usize, alg_dim: usize, module_dim: usize) -> usize {
    2 * alg_dim * module_dim.pow(arity as u32)
}

pub(crate) fn linear_tensor(m: &Matrix) -> MultiTensor {
    let mut t = MultiTensor::uniform(1, m.cols(), m.rows());
    for j in 0..m.cols() {
        t.set_output(&[j], m.column(j));
    }
    t
}
