//! The graded Lie bracket on cochains whose Maurer-Cartan elements are
//! exactly the generalized Rota-Baxter systems.

use super::gerstenhaber::Bracket;
use super::Cochain;
use crate::algebra::{semidirect_triple, Algebra, Bimodule};
use crate::error::{dim_err, Result};
use crate::linalg::scalar::{self, sign, Scalar, Vector};
use crate::linalg::{basis_tuples, MultiTensor, Multilinear};

fn check(c: &Cochain, alg: &Algebra, module: &Bimodule) -> Result<()> {
    if c.alg_dim() != alg.dim() {
        return dim_err("cochain values must lie in A");
    }
    if let Some(m) = c.module_dim() {
        if m != module.dim() {
            return dim_err("cochain inputs must lie in M");
        }
    }
    Ok(())
}

/// `⟦c1, c2⟧` by the closed formulas, with degree-0 cases handled separately.
pub fn derived_bracket(c1: &Cochain, c2: &Cochain, alg: &Algebra, module: &Bimodule) -> Result<Cochain> {
    check(c1, alg, module)?;
    check(c2, alg, module)?;
    match (c1.arity(), c2.arity()) {
        (0, 0) => {
            let (a, b) = (c1.p.get(&[]), c1.q.get(&[]));
            let (c, d) = (c2.p.get(&[]), c2.q.get(&[]));
            Ok(Cochain::constant(
                scalar::sub(&alg.mul(&a, &c), &alg.mul(&c, &a)),
                scalar::sub(&alg.mul(&b, &d), &alg.mul(&d, &b)),
            ))
        }
        (_, 0) => Ok(with_constant(c1, c2, alg, module)),
        // graded antisymmetry with one side in degree 0
        (0, _) => Ok(with_constant(c2, c1, alg, module).scale(&-Scalar::from_integer(1.into()))),
        _ => Ok(positive(c1, c2, alg, module)),
    }
}

/// `⟦(P, Q), (a, b)⟧` with `P, Q` of positive arity:
/// `Σ_i P(…, a·u_i - u_i·b, …) + P(u)a - aP(u)` and the same with `Q`, `b`.
fn with_constant(c: &Cochain, k: &Cochain, alg: &Algebra, module: &Bimodule) -> Cochain {
    let m = c.arity();
    let md = module.dim();
    let (a, b) = (k.p.get(&[]), k.q.get(&[]));
    let units: Vec<Vector> = (0..md).map(|i| module.unit_vector(i)).collect();
    let ad: Vec<Vector> = units
        .iter()
        .map(|u| scalar::sub(&module.act_left(&a, u), &module.act_right(u, &b)))
        .collect();
    let comp = |x: &MultiTensor, z: &Vector| {
        MultiTensor::from_fn(vec![md; m], alg.dim(), |t| {
            let args: Vec<&[Scalar]> = t.iter().map(|&i| units[i].as_slice()).collect();
            let mut out = scalar::zeros(alg.dim());
            for i in 0..m {
                let mut moved = args.clone();
                moved[i] = &ad[t[i]];
                scalar::add_into(&mut out, &x.eval_vectors(&moved));
            }
            let v = x.eval_vectors(&args);
            scalar::add_into(&mut out, &alg.mul(&v, z));
            scalar::sub(&out, &alg.mul(z, &v))
        })
    };
    Cochain {
        p: comp(&c.p, &a),
        q: comp(&c.q, &b),
    }
}

fn positive(c1: &Cochain, c2: &Cochain, alg: &Algebra, module: &Bimodule) -> Cochain {
    let (m, n) = (c1.arity(), c2.arity());
    let md = module.dim();
    let units: Vec<Vector> = (0..md).map(|i| module.unit_vector(i)).collect();
    let (mi, ni) = (m as i64, n as i64);
    let smn = sign(mi * ni);

    // one component: outer maps (x, x2) are (P, P') or (Q, Q')
    let component = |x: &MultiTensor, x2: &MultiTensor, t: &[usize]| -> Vector {
        let u: Vec<&[Scalar]> = t.iter().map(|&i| units[i].as_slice()).collect();
        let mut out = scalar::zeros(alg.dim());
        let mut add = |c: Scalar, v: Vector| scalar::axpy(&mut out, &c, &v);

        // insertions of the second cochain into the first
        for i in 1..=m {
            let left = module.act_left(&c2.p.eval_vectors(&u[i - 1..i - 1 + n]), u[i - 1 + n]);
            let mut args: Vec<&[Scalar]> = u[..i - 1].to_vec();
            args.push(&left);
            args.extend_from_slice(&u[i + n..]);
            add(sign((i as i64 - 1) * ni), x.eval_vectors(&args));

            let right = module.act_right(u[i - 1], &c2.q.eval_vectors(&u[i..i + n]));
            let mut args: Vec<&[Scalar]> = u[..i - 1].to_vec();
            args.push(&right);
            args.extend_from_slice(&u[i + n..]);
            add(-sign(i as i64 * ni), x.eval_vectors(&args));
        }
        // insertions of the first into the second
        for i in 1..=n {
            let left = module.act_left(&c1.p.eval_vectors(&u[i - 1..i - 1 + m]), u[i - 1 + m]);
            let mut args: Vec<&[Scalar]> = u[..i - 1].to_vec();
            args.push(&left);
            args.extend_from_slice(&u[i + m..]);
            add(-&smn * sign((i as i64 - 1) * mi), x2.eval_vectors(&args));

            let right = module.act_right(u[i - 1], &c1.q.eval_vectors(&u[i..i + m]));
            let mut args: Vec<&[Scalar]> = u[..i - 1].to_vec();
            args.push(&right);
            args.extend_from_slice(&u[i + m..]);
            add(&smn * sign(i as i64 * mi), x2.eval_vectors(&args));
        }
        // products of values
        let front = alg.mul(&x.eval_vectors(&u[..m]), &x2.eval_vectors(&u[m..]));
        add(smn.clone(), front);
        let back = alg.mul(&x2.eval_vectors(&u[..n]), &x.eval_vectors(&u[n..]));
        add(-Scalar::from_integer(1.into()), back);
        out
    };

    let dims = vec![md; m + n];
    Cochain {
        p: MultiTensor::from_fn(dims.clone(), alg.dim(), |t| component(&c1.p, &c2.p, t)),
        q: MultiTensor::from_fn(dims, alg.dim(), |t| component(&c1.q, &c2.q, t)),
    }
}

/// A cochain seen as a map `V^{⊗n} → V` on `V = A ⊕ A ⊕ M`: it reads only
/// the `M` parts of its inputs and writes into the two `A` slots.
struct Embedded<'a> {
    c: &'a Cochain,
    alg_dim: usize,
    total: usize,
    dims: Vec<usize>,
}

impl<'a> Embedded<'a> {
    fn new(c: &'a Cochain, alg_dim: usize, module_dim: usize) -> Self {
        let total = 2 * alg_dim + module_dim;
        Embedded {
            c,
            alg_dim,
            total,
            dims: vec![total; c.arity()],
        }
    }
}

impl Multilinear for Embedded<'_> {
    fn input_dims(&self) -> &[usize] {
        &self.dims
    }

    fn output_dim(&self) -> usize {
        self.total
    }

    fn eval(&self, args: &[&[Scalar]]) -> Vector {
        let n = self.alg_dim;
        let m_parts: Vec<&[Scalar]> = args.iter().map(|v| &v[2 * n..]).collect();
        let mut out = self.c.p.eval_vectors(&m_parts);
        out.extend(self.c.q.eval_vectors(&m_parts));
        out.extend(scalar::zeros(self.total - 2 * n));
        out
    }
}

/// `(-1)^m [[μ, c1], c2]` computed with the Gerstenhaber bracket of the
/// triple `A ⊕ A ⊕ M`, restricted to `M`-inputs and projected to `A ⊕ A`.
/// Independent of [`derived_bracket`]; used to cross-check it.
pub fn derived_bracket_via_semidirect(c1: &Cochain, c2: &Cochain, alg: &Algebra, module: &Bimodule) -> Result<Cochain> {
    check(c1, alg, module)?;
    check(c2, alg, module)?;
    let triple = semidirect_triple(alg, module)?;
    let (n, md) = (alg.dim(), module.dim());
    let mu = triple.structure();
    let e1 = Embedded::new(c1, n, md);
    let e2 = Embedded::new(c2, n, md);
    let inner = Bracket::new(mu, &e1);
    let outer = Bracket::new(&inner, &e2);
    let arity = c1.arity() + c2.arity();
    let s = sign(c1.arity() as i64);
    let embed: Vec<Vector> = (0..md)
        .map(|i| {
            let mut v = scalar::zeros(2 * n);
            v.extend(module.unit_vector(i));
            v
        })
        .collect();
    let mut out = Cochain::zero(arity, n, md);
    for t in basis_tuples(&vec![md; arity]) {
        let args: Vec<&[Scalar]> = t.iter().map(|&i| embed[i].as_slice()).collect();
        let v = scalar::scale(&s, &outer.eval(&args));
        out.p.set_output(&t, v[..n].to_vec());
        out.q.set_output(&t, v[n..2 * n].to_vec());
        debug_assert!(scalar::is_zero_vec(&v[2 * n..]), "bracket leaves A ⊕ A");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{c, canonical_bimodule, BimoduleKind};
    use crate::linalg::scalar::int;
    use crate::linalg::Matrix;
    use crate::rbs::{grbs_defect, RbsPair};

    fn idempotent() -> (Algebra, Bimodule) {
        let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        (a, m)
    }

    #[test]
    fn self_bracket_is_twice_minus_defect() {
        let (a, m) = idempotent();
        let p = RbsPair::new(Matrix::from_i64(&[&[1]]), Matrix::from_i64(&[&[1]])).unwrap();
        let c = Cochain::from_pair(&p);
        let b = derived_bracket(&c, &c, &a, &m).unwrap();
        let d = grbs_defect(&a, &m, &p).unwrap();
        assert_eq!(b.p, d.defect_r.scale(&int(-2)));
        assert_eq!(b.q, d.defect_s.scale(&int(-2)));
    }

    #[test]
    fn constants_bracket_to_commutators() {
        let a = Algebra::from_constants(&["e12", "e23", "e13"], &[c(0, 1, 2, 1)]).unwrap();
        let m = canonical_bimodule(&a, BimoduleKind::Adjoint);
        let x = Cochain::constant(a.unit_vector(0), a.unit_vector(1));
        let y = Cochain::constant(a.unit_vector(1), a.unit_vector(0));
        let b = derived_bracket(&x, &y, &a, &m).unwrap();
        assert_eq!(b.p.get(&[]), a.unit_vector(2));
        assert_eq!(b.q.get(&[]), scalar::neg(&a.unit_vector(2)));
    }

    #[test]
    fn oracle_matches_on_a_small_case() {
        let (a, m) = idempotent();
        let p = RbsPair::new(Matrix::from_i64(&[&[3]]), Matrix::from_i64(&[&[-1]])).unwrap();
        let c = Cochain::from_pair(&p);
        let k = Cochain::constant(vec![int(2)], vec![int(5)]);
        for (x, y) in [(&c, &c), (&c, &k), (&k, &c)] {
            assert_eq!(
                derived_bracket(x, y, &a, &m).unwrap(),
                derived_bracket_via_semidirect(x, y, &a, &m).unwrap()
            );
        }
    }
}
