//! The Gerstenhaber bracket on `Hom(V^{⊗•}, V)`, evaluated lazily so that
//! nested brackets can be sampled on a few tuples without materialising
//! every intermediate map.

use crate::error::{dim_err, Error, Result};
use crate::linalg::scalar::{self, sign, Scalar, Vector};
use crate::linalg::{MultiTensor, Multilinear};

/// `(f • g)(v_1, …) = Σ_i (-1)^{(i-1)(n-1)} f(v_1, …, g(v_i, …, v_{i+n-1}), …)`
pub struct Circle<'a> {
    f: &'a dyn Multilinear,
    g: &'a dyn Multilinear,
    dims: Vec<usize>,
}

impl<'a> Circle<'a> {
    pub fn new(f: &'a dyn Multilinear, g: &'a dyn Multilinear) -> Self {
        let arity = (f.arity() + g.arity()).saturating_sub(1);
        Circle {
            f,
            g,
            dims: vec![f.output_dim(); arity],
        }
    }
}

impl Multilinear for Circle<'_> {
    fn input_dims(&self) -> &[usize] {
        &self.dims
    }

    fn output_dim(&self) -> usize {
        self.f.output_dim()
    }

    fn eval(&self, args: &[&[Scalar]]) -> Vector {
        let (m, n) = (self.f.arity(), self.g.arity());
        let mut out = scalar::zeros(self.output_dim());
        for i in 1..=m {
            let inner = self.g.eval(&args[i - 1..i - 1 + n]);
            let mut outer: Vec<&[Scalar]> = args[..i - 1].to_vec();
            outer.push(&inner);
            outer.extend_from_slice(&args[i - 1 + n..]);
            let s = sign((i as i64 - 1) * (n as i64 - 1));
            scalar::axpy(&mut out, &s, &self.f.eval(&outer));
        }
        out
    }
}

/// `[f, g] = f • g - (-1)^{(m-1)(n-1)} g • f`
pub struct Bracket<'a> {
    fg: Circle<'a>,
    gf: Circle<'a>,
    sign: Scalar,
}

impl<'a> Bracket<'a> {
    pub fn new(f: &'a dyn Multilinear, g: &'a dyn Multilinear) -> Self {
        let (m, n) = (f.arity() as i64, g.arity() as i64);
        Bracket {
            fg: Circle::new(f, g),
            gf: Circle::new(g, f),
            sign: sign((m - 1) * (n - 1)),
        }
    }
}

impl Multilinear for Bracket<'_> {
    fn input_dims(&self) -> &[usize] {
        self.fg.input_dims()
    }

    fn output_dim(&self) -> usize {
        self.fg.output_dim()
    }

    fn eval(&self, args: &[&[Scalar]]) -> Vector {
        let mut out = self.fg.eval(args);
        scalar::axpy(&mut out, &-self.sign.clone(), &self.gf.eval(args));
        out
    }
}

fn check_endomorphism(t: &MultiTensor) -> Result<usize> {
    let d = t.output_dim();
    if t.input_dims().iter().any(|&x| x != d) {
        return dim_err("Gerstenhaber bracket needs maps V^n -> V");
    }
    Ok(d)
}

/// Materialised Gerstenhaber bracket of two maps `V^{⊗m} → V`, `V^{⊗n} → V`.
pub fn gerstenhaber_bracket(f: &MultiTensor, g: &MultiTensor) -> Result<MultiTensor> {
    let (df, dg) = (check_endomorphism(f)?, check_endomorphism(g)?);
    if df != dg {
        return dim_err("maps live on spaces of different dimension");
    }
    if f.arity() + g.arity() == 0 {
        return Err(Error::Precondition("bracket of two constants has no arity".into()));
    }
    Ok(MultiTensor::materialize(&Bracket::new(f, g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_polynomial;
    use crate::linalg::scalar::int;

    #[test]
    fn associative_product_squares_to_zero() {
        let a = truncated_polynomial(2);
        let mu = a.structure();
        assert!(gerstenhaber_bracket(mu, mu).unwrap().is_zero());
    }

    #[test]
    fn non_associative_product_does_not() {
        let mut mu = MultiTensor::uniform(2, 2, 2);
        mu.set(&[0, 0], 1, int(1));
        mu.set(&[0, 1], 0, int(1));
        assert!(!gerstenhaber_bracket(&mu, &mu).unwrap().is_zero());
    }

    #[test]
    fn bracket_of_linear_maps_is_commutator() {
        let mut f = MultiTensor::uniform(1, 2, 2);
        f.set(&[0], 1, int(1));
        let mut g = MultiTensor::uniform(1, 2, 2);
        g.set(&[1], 1, int(2));
        let b = gerstenhaber_bracket(&f, &g).unwrap();
        // [f, g] = f∘g - g∘f; f∘g = 0, g∘f(e0) = 2 e1
        assert_eq!(b.get(&[0]), vec![int(0), int(-2)]);
    }
}
