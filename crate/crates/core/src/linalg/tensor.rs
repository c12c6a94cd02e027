//! Sparse multilinear maps given by structure constants.

use super::scalar::{self, Scalar, Vector};
use crate::error::{dim_err, Error, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Anything that can be evaluated on a tuple of coordinate vectors and is
/// linear in each slot.
pub trait Multilinear {
    fn input_dims(&self) -> &[usize];
    fn output_dim(&self) -> usize;
    fn eval(&self, args: &[&[Scalar]]) -> Vector;

    fn arity(&self) -> usize {
        self.input_dims().len()
    }
}

/// A multilinear map `V_1 ⊗ … ⊗ V_n → W` stored as a sparse table
/// `input tuple -> output vector`. Zero outputs are never stored, so
/// structural equality is equality of maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiTensor {
    input_dims: Vec<usize>,
    output_dim: usize,
    entries: BTreeMap<Vec<usize>, Vector>,
}

impl MultiTensor {
    pub fn zero(input_dims: Vec<usize>, output_dim: usize) -> Self {
        MultiTensor {
            input_dims,
            output_dim,
            entries: BTreeMap::new(),
        }
    }

    /// All slots share the input dimension `m`.
    pub fn uniform(arity: usize, m: usize, output_dim: usize) -> Self {
        Self::zero(vec![m; arity], output_dim)
    }

    /// An arity-0 map, i.e. a constant vector.
    pub fn constant(v: Vector) -> Self {
        let mut t = Self::zero(Vec::new(), v.len());
        t.set_output(&[], v);
        t
    }

    /// Materialises `f` on every basis tuple.
    pub fn from_fn(input_dims: Vec<usize>, output_dim: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut t = Self::zero(input_dims, output_dim);
        for tuple in basis_tuples(&t.input_dims) {
            let v = f(&tuple);
            debug_assert_eq!(v.len(), output_dim);
            t.set_output(&tuple, v);
        }
        t
    }

    /// Materialises any multilinear map on basis tuples.
    pub fn materialize(f: &dyn Multilinear) -> Self {
        let dims = f.input_dims().to_vec();
        let units: Vec<Vec<Vector>> = dims.iter().map(|&d| (0..d).map(|i| scalar::unit(d, i)).collect()).collect();
        Self::from_fn(dims, f.output_dim(), |tuple| {
            let args: Vec<&[Scalar]> = tuple.iter().enumerate().map(|(p, &i)| units[p][i].as_slice()).collect();
            f.eval(&args)
        })
    }

    pub fn output_dim(&self) -> usize {
        self.output_dim
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.input_dims
    }

    pub fn arity(&self) -> usize {
        self.input_dims.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Non-zero entries in lexicographic order of input tuples.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Output on a basis tuple.
    pub fn get(&self, tuple: &[usize]) -> Vector {
        self.entries
            .get(tuple)
            .cloned()
            .unwrap_or_else(|| scalar::zeros(self.output_dim))
    }

    pub fn coefficient(&self, tuple: &[usize], k: usize) -> Scalar {
        self.entries
            .get(tuple)
            .map_or_else(Scalar::zero, |v| v[k].clone())
    }

    pub fn set_output(&mut self, tuple: &[usize], v: Vector) {
        debug_assert_eq!(tuple.len(), self.arity());
        if scalar::is_zero_vec(&v) {
            self.entries.remove(tuple);
        } else {
            self.entries.insert(tuple.to_vec(), v);
        }
    }

    pub fn set(&mut self, tuple: &[usize], k: usize, c: Scalar) {
        let mut v = self.get(tuple);
        v[k] = c;
        self.set_output(tuple, v);
    }

    pub fn add_to(&mut self, tuple: &[usize], v: &[Scalar]) {
        let mut cur = self.get(tuple);
        scalar::add_into(&mut cur, v);
        self.set_output(tuple, cur);
    }

    fn same_shape(&self, other: &MultiTensor) -> bool {
        self.input_dims == other.input_dims && self.output_dim == other.output_dim
    }

    pub fn add(&self, other: &MultiTensor) -> MultiTensor {
        assert!(self.same_shape(other), "tensor shapes differ");
        let mut out = self.clone();
        for (t, v) in &other.entries {
            out.add_to(t, v);
        }
        out
    }

    pub fn sub(&self, other: &MultiTensor) -> MultiTensor {
        self.add(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn scale(&self, c: &Scalar) -> MultiTensor {
        let mut out = MultiTensor::zero(self.input_dims.clone(), self.output_dim);
        if c.is_zero() {
            return out;
        }
        for (t, v) in &self.entries {
            out.entries.insert(t.clone(), scalar::scale(c, v));
        }
        out
    }

    /// Post-composition with a linear map given as a matrix.
    pub fn map_output(&self, m: &super::Matrix) -> MultiTensor {
        assert_eq!(m.cols(), self.output_dim);
        let mut out = MultiTensor::zero(self.input_dims.clone(), m.rows());
        for (t, v) in &self.entries {
            out.set_output(t, m.apply(v));
        }
        out
    }

    /// Evaluates on vectors; slots are summed over non-zero entries only.
    pub fn eval_vectors(&self, args: &[&[Scalar]]) -> Vector {
        let mut out = scalar::zeros(self.output_dim);
        'entries: for (tuple, v) in &self.entries {
            let mut c = Scalar::from_integer(1.into());
            for (p, &i) in tuple.iter().enumerate() {
                let x = &args[p][i];
                if x.is_zero() {
                    continue 'entries;
                }
                c *= x;
            }
            scalar::axpy(&mut out, &c, v);
        }
        out
    }

    /// Shape-checked evaluation.
    pub fn apply(&self, args: &[&[Scalar]]) -> Result<Vector> {
        multilinear_apply(self, args)
    }
}

impl Multilinear for MultiTensor {
    fn input_dims(&self) -> &[usize] {
        &self.input_dims
    }
    fn output_dim(&self) -> usize {
        self.output_dim
    }
    fn eval(&self, args: &[&[Scalar]]) -> Vector {
        self.eval_vectors(args)
    }
}

impl std::fmt::Debug for MultiTensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MultiTensor{:?}->{} {{", self.input_dims, self.output_dim)?;
        for (t, v) in &self.entries {
            let vs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            write!(f, " {:?}:[{}]", t, vs.join(","))?;
        }
        write!(f, " }}")
    }
}

/// Evaluates `t` on the given vectors after checking arity and dimensions.
/// An arity-0 tensor evaluates to its constant.
pub fn multilinear_apply(t: &MultiTensor, args: &[&[Scalar]]) -> Result<Vector> {
    if args.len() != t.arity() {
        return Err(Error::Arity {
            expected: t.arity(),
            got: args.len(),
        });
    }
    for (p, (a, &d)) in args.iter().zip(t.input_dims()).enumerate() {
        if a.len() != d {
            return dim_err(format!("slot {p} expects dimension {d}, got {}", a.len()));
        }
    }
    Ok(t.eval_vectors(args))
}

/// All basis tuples for the given slot dimensions, lexicographically.
pub fn basis_tuples(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(dims.len())];
    for &d in dims {
        let mut next = Vec::with_capacity(out.len() * d);
        for t in &out {
            for i in 0..d {
                let mut u = t.clone();
                u.push(i);
                next.push(u);
            }
        }
        out = next;
    }
    out
}
