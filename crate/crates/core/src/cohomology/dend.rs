//! Cochains of the dendriform operad with values in a vector space `D`:
//! an element of `O(n)` is a family of maps `D^{⊗n} → D` indexed by
//! `[1], …, [n]`.

use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, sign, Scalar, Vector};
use crate::linalg::{MultiTensor, Multilinear};
use crate::loday::{BinaryStructure, StructureKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DendCochain {
    /// `components[r]` is the map for `[r + 1]`.
    pub components: Vec<MultiTensor>,
}

impl DendCochain {
    pub fn new(components: Vec<MultiTensor>) -> Result<Self> {
        let n = components.len();
        let Some(first) = components.first() else {
            return Err(Error::Precondition("O(0) is not part of the complex".into()));
        };
        let d = first.output_dim();
        if components.iter().any(|c| c.input_dims() != vec![d; n].as_slice() || c.output_dim() != d) {
            return dim_err(format!("O({n}) needs {n} maps D^{n} -> D"));
        }
        Ok(DendCochain { components })
    }

    pub fn zero(arity: usize, dim: usize) -> Self {
        DendCochain {
            components: (0..arity).map(|_| MultiTensor::uniform(arity, dim, dim)).collect(),
        }
    }

    /// `π` with `π([1]) = ≺`, `π([2]) = ≻`.
    pub fn from_dendriform(d: &BinaryStructure) -> Result<Self> {
        if d.kind() != StructureKind::Dendriform {
            return Err(Error::Precondition("a dendriform structure is required".into()));
        }
        DendCochain::new(d.tables().to_vec())
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn dim(&self) -> usize {
        self.components[0].output_dim()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiTensor::is_zero)
    }

    pub fn add(&self, other: &DendCochain) -> DendCochain {
        DendCochain {
            components: self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> DendCochain {
        DendCochain {
            components: self.components.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Evaluates `Σ_r coeffs[r] · f([r+1])`.
    fn eval_combination(&self, coeffs: Option<usize>, args: &[&[Scalar]]) -> Vector {
        match coeffs {
            Some(r) => self.components[r].eval(args),
            None => {
                let mut out = scalar::zeros(self.dim());
                for c in &self.components {
                    scalar::add_into(&mut out, &c.eval(args));
                }
                out
            }
        }
    }
}

/// `f ∘_i g ∈ O(m+n-1)` for `f ∈ O(m)`, `g ∈ O(n)`, `1 ≤ i ≤ m`.
/// For output index `[r]`:
/// `r < i` uses `f([r])` and the full sum of `g`;
/// `i ≤ r < i+n` uses `f([i])` and `g([r-i+1])`;
/// `r ≥ i+n` uses `f([r-n+1])` and the full sum of `g`.
pub fn partial_compose(f: &DendCochain, g: &DendCochain, i: usize) -> Result<DendCochain> {
    let (m, n) = (f.arity(), g.arity());
    if f.dim() != g.dim() {
        return dim_err("cochains on different spaces");
    }
    if i == 0 || i > m {
        return Err(Error::Precondition(format!("slot {i} outside 1..={m}")));
    }
    let total = m + n - 1;
    let d = f.dim();
    let units: Vec<Vector> = (0..d).map(|k| scalar::unit(d, k)).collect();
    let components = (1..=total)
        .map(|r| {
            let (outer, inner) = if r < i {
                (r, None)
            } else if r < i + n {
                (i, Some(r - i))
            } else {
                (r - n + 1, None)
            };
            MultiTensor::from_fn(vec![d; total], d, |t| {
                let u: Vec<&[Scalar]> = t.iter().map(|&k| units[k].as_slice()).collect();
                let v = g.eval_combination(inner, &u[i - 1..i - 1 + n]);
                let mut args: Vec<&[Scalar]> = u[..i - 1].to_vec();
                args.push(&v);
                args.extend_from_slice(&u[i - 1 + n..]);
                f.components[outer - 1].eval(&args)
            })
        })
        .collect();
    Ok(DendCochain { components })
}

/// `⌈f, g⌉ = Σ_i (-1)^{(i-1)n} f ∘_i g - (-1)^{mn} Σ_i (-1)^{(i-1)m} g ∘_i f`
/// for `f ∈ O(m+1)`, `g ∈ O(n+1)`.
pub fn dend_bracket(f: &DendCochain, g: &DendCochain) -> Result<DendCochain> {
    let (m, n) = (f.arity() as i64 - 1, g.arity() as i64 - 1);
    let mut out = DendCochain::zero(f.arity() + g.arity() - 1, f.dim());
    for i in 1..=f.arity() {
        out = out.add(&partial_compose(f, g, i)?.scale(&sign((i as i64 - 1) * n)));
    }
    let s = -sign(m * n);
    for i in 1..=g.arity() {
        out = out.add(&partial_compose(g, f, i)?.scale(&(&s * sign((i as i64 - 1) * m))));
    }
    Ok(out)
}

/// The complex `(⊕ O(n), δ_π)` of a dendriform structure.
#[derive(Debug, Clone)]
pub struct DendComplex {
    pi: DendCochain,
}

pub fn dend_complex(d: &BinaryStructure) -> Result<DendComplex> {
    Ok(DendComplex {
        pi: DendCochain::from_dendriform(d)?,
    })
}

impl DendComplex {
    pub fn pi(&self) -> &DendCochain {
        &self.pi
    }

    /// `δ_π(f) = (-1)^{n-1} ⌈π, f⌉` for `f ∈ O(n)`.
    pub fn differential(&self, f: &DendCochain) -> Result<DendCochain> {
        let n = f.arity() as i64;
        Ok(dend_bracket(&self.pi, f)?.scale(&sign(n - 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, canonical_bimodule, Algebra, BimoduleKind};
    use crate::linalg::Matrix;
    use crate::rbs::{dendriform_of, RbsPair};

    #[test]
    fn pi_brackets_to_zero_exactly_for_dendriform() {
        let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        for (r, s, ok) in [(2, 0, true), (0, 3, true), (1, 1, false)] {
            let p = RbsPair::new(Matrix::from_i64(&[&[r]]), Matrix::from_i64(&[&[s]])).unwrap();
            let pi = DendCochain::from_dendriform(&dendriform_of(&m, &p)).unwrap();
            let b = dend_bracket(&pi, &pi).unwrap();
            assert_eq!(b.is_zero(), ok, "({r},{s})");
        }
    }

    #[test]
    fn slot_out_of_range() {
        let f = DendCochain::zero(2, 1);
        assert!(partial_compose(&f, &f, 3).is_err());
        assert!(DendCochain::new(vec![]).is_err());
    }
}
