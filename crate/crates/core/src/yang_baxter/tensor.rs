use crate::algebra::Algebra;
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::{fmt_scalar, Matrix};
use num_traits::Zero;

/// An element `Σ c_ij e_i ⊗ e_j` of `A ⊗ A`, stored as the matrix `(c_ij)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2(Matrix);

impl Tensor2 {
    /// Panics if `coefficients` is not square.
    pub fn new(coefficients: Matrix) -> Self {
        assert!(coefficients.is_square(), "A⊗A coefficients form a square grid");
        Tensor2(coefficients)
    }

    pub fn zero(n: usize) -> Self {
        Tensor2(Matrix::zeros(n, n))
    }

    pub fn from_terms(n: usize, terms: &[(usize, usize, Scalar)]) -> Self {
        let mut m = Matrix::zeros(n, n);
        for (i, j, c) in terms {
            m[(*i, *j)] += c;
        }
        Tensor2(m)
    }

    /// `a ⊗ b`.
    pub fn simple(a: &[Scalar], b: &[Scalar]) -> Self {
        let rows = a.iter().map(|x| b.iter().map(|y| x * y).collect()).collect();
        Tensor2(Matrix::from_rows(rows).expect("rectangular"))
    }

    /// Reads the flattened layout `index = i·n + j`.
    pub fn from_flat(n: usize, v: &[Scalar]) -> Self {
        let rows = v.chunks(n).map(<[Scalar]>::to_vec).collect();
        Tensor2(Matrix::from_rows(rows).expect("rectangular"))
    }

    pub fn flat(&self) -> Vector {
        self.0.data().to_vec()
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn coefficients(&self) -> &Matrix {
        &self.0
    }

    pub fn coefficient(&self, i: usize, j: usize) -> Scalar {
        self.0[(i, j)].clone()
    }

    /// Nonzero `(i, j, c_ij)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        let n = self.dim();
        (0..n * n)
            .map(move |k| (k / n, k % n))
            .map(|(i, j)| (i, j, &self.0[(i, j)]))
            .filter(|(_, _, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `τ(r) = -r`.
    pub fn is_skew(&self) -> bool {
        self.0.transpose() == self.0.scale(&-scalar::one())
    }

    pub fn flip(&self) -> Self {
        Tensor2(self.0.transpose())
    }

    pub fn add(&self, other: &Tensor2) -> Self {
        Tensor2(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Tensor2) -> Self {
        Tensor2(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Tensor2(self.0.scale(c))
    }

    /// `a·t`, multiplying the first leg on the left.
    pub fn left_act(&self, alg: &Algebra, a: &[Scalar]) -> Self {
        Tensor2(alg.left_mult(a).mul(&self.0))
    }

    /// `t·a`, multiplying the second leg on the right.
    pub fn right_act(&self, alg: &Algebra, a: &[Scalar]) -> Self {
        Tensor2(self.0.mul(&alg.right_mult(a).transpose()))
    }

    /// `(f ⊗ id)(t)`.
    pub fn map_first(&self, f: &Matrix) -> Self {
        Tensor2(f.mul(&self.0))
    }

    /// `(id ⊗ f)(t)`.
    pub fn map_second(&self, f: &Matrix) -> Self {
        Tensor2(self.0.mul(&f.transpose()))
    }

    /// `(f ⊗ g)(t)`.
    pub fn map_both(&self, f: &Matrix, g: &Matrix) -> Self {
        Tensor2(f.mul(&self.0).mul(&g.transpose()))
    }
}

/// An element of `A^{⊗3}`, dense with index `(i·n + j)·n + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    n: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zero(n: usize) -> Self {
        Tensor3 {
            n,
            data: scalar::zeros(n * n * n),
        }
    }

    pub fn simple(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Self {
        let mut t = Tensor3::zero(a.len());
        t.add_simple(&scalar::one(), a, b, c);
        t
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.n + j) * self.n + k
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn is_zero(&self) -> bool {
        scalar::is_zero_vec(&self.data)
    }

    /// `self += c · a ⊗ b ⊗ d`.
    pub fn add_simple(&mut self, c: &Scalar, a: &[Scalar], b: &[Scalar], d: &[Scalar]) {
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            let cx = c * x;
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let cxy = &cx * y;
                for (k, z) in d.iter().enumerate().filter(|(_, z)| !z.is_zero()) {
                    let at = self.idx(i, j, k);
                    self.data[at] += &cxy * z;
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor3) -> Self {
        Tensor3 {
            n: self.n,
            data: scalar::add(&self.data, &other.data),
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Self {
        Tensor3 {
            n: self.n,
            data: scalar::sub(&self.data, &other.data),
        }
    }

    fn map_leg(&self, leg: usize, f: &Matrix) -> Self {
        let n = self.n;
        let mut out = Tensor3::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    let t = [i, j, k];
                    for (l, fl) in (0..n).map(|l| (l, &f[(l, t[leg])])).filter(|(_, x)| !x.is_zero()) {
                        let mut u = t;
                        u[leg] = l;
                        let at = out.idx(u[0], u[1], u[2]);
                        out.data[at] += c * fl;
                    }
                }
            }
        }
        out
    }

    /// `a·(x⊗y⊗z) = ax⊗y⊗z`.
    pub fn left_act(&self, alg: &Algebra, a: &[Scalar]) -> Self {
        self.map_leg(0, &alg.left_mult(a))
    }

    /// `(x⊗y⊗z)·a = x⊗y⊗za`.
    pub fn right_act(&self, alg: &Algebra, a: &[Scalar]) -> Self {
        self.map_leg(2, &alg.right_mult(a))
    }

    /// `(id ⊗ Δ)(t)` for `Δ` given as an `n²×n` matrix in the layout of
    /// [`Tensor2::flat`].
    pub fn id_tensor(t: &Tensor2, delta: &Matrix) -> Self {
        let n = t.dim();
        let mut out = Tensor3::zero(n);
        for (i, j, c) in t.terms() {
            let d = Tensor2::from_flat(n, &delta.column(j));
            for (k, l, e) in d.terms() {
                let at = out.idx(i, k, l);
                out.data[at] += c * e;
            }
        }
        out
    }

    /// `(Δ ⊗ id)(t)`.
    pub fn tensor_id(t: &Tensor2, delta: &Matrix) -> Self {
        let n = t.dim();
        let mut out = Tensor3::zero(n);
        for (i, j, c) in t.terms() {
            let d = Tensor2::from_flat(n, &delta.column(i));
            for (k, l, e) in d.terms() {
                let at = out.idx(k, l, j);
                out.data[at] += c * e;
            }
        }
        out
    }

    /// Lines `[x,y,z] = c` for nonzero coefficients, in basis order.
    pub fn nonzero_lines(&self, alg: &Algebra) -> Vec<String> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.get(i, j, k);
                    if !c.is_zero() {
                        out.push(format!(
                            "[{},{},{}] = {}",
                            alg.name(i),
                            alg.name(j),
                            alg.name(k),
                            fmt_scalar(c)
                        ));
                    }
                }
            }
        }
        out
    }
}

/// `X_{ab} Y_{cd}` in `A^{⊗3}`: `X` occupies slots `a, b`, `Y` slots `c, d`
/// (1-based), and a shared slot receives the product with the `X` factor
/// first. So `r13 s12 = r₍₁₎s₍₁₎ ⊗ s₍₂₎ ⊗ r₍₂₎`,
/// `r12 s23 = r₍₁₎ ⊗ r₍₂₎s₍₁₎ ⊗ s₍₂₎`, `r23 s13 = s₍₁₎ ⊗ r₍₁₎ ⊗ r₍₂₎s₍₂₎`.
///
/// Panics unless every slot is covered, since `A` need not be unital.
pub fn legs(alg: &Algebra, x: &Tensor2, (a, b): (usize, usize), y: &Tensor2, (c, d): (usize, usize)) -> Tensor3 {
    let n = alg.dim();
    let mut covered = [false; 3];
    for s in [a, b, c, d] {
        assert!((1..=3).contains(&s), "slot {s} outside 1..=3");
        covered[s - 1] = true;
    }
    assert!(a != b && c != d && covered.iter().all(|&v| v), "every slot needs a factor");

    let mut out = Tensor3::zero(n);
    for (i, j, xc) in x.terms() {
        for (k, l, yc) in y.terms() {
            let mut slots: [Option<Vector>; 3] = [None, None, None];
            slots[a - 1] = Some(alg.unit_vector(i));
            slots[b - 1] = Some(alg.unit_vector(j));
            for (s, e) in [(c, k), (d, l)] {
                slots[s - 1] = Some(match slots[s - 1].take() {
                    Some(v) => alg.mul(&v, &alg.unit_vector(e)),
                    None => alg.unit_vector(e),
                });
            }
            let [Some(p), Some(q), Some(r)] = &slots else {
                unreachable!("coverage checked above")
            };
            out.add_simple(&(xc * yc), p, q, r);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    #[test]
    fn actions_on_legs() {
        let alg = crate::algebra::matrix_algebra(2);
        let e = |i| alg.unit_vector(i);
        let t = Tensor2::simple(&e(1), &e(2)); // E12 ⊗ E21
        assert_eq!(t.left_act(&alg, &e(0)), t); // E11·E12 = E12
        assert_eq!(t.right_act(&alg, &e(1)), Tensor2::simple(&e(1), &e(3))); // E21·E12 = E22
        assert!(t.sub(&t.flip()).is_skew());
        assert_eq!(Tensor2::from_flat(4, &t.flat()), t);
    }

    #[test]
    fn id_tensor_with_identity_like_delta() {
        // Δ(e_i) = e_i ⊗ e_0 on a 2-dim space
        let n = 2;
        let cols: Vec<Vector> = (0..n).map(|i| Tensor2::from_terms(n, &[(i, 0, int(1))]).flat()).collect();
        let delta = Matrix::from_columns(n * n, &cols).unwrap();
        let t = Tensor2::from_terms(n, &[(1, 1, int(3))]);
        let a = Tensor3::id_tensor(&t, &delta);
        assert_eq!(a.get(1, 1, 0), &int(3));
        let b = Tensor3::tensor_id(&t, &delta);
        assert_eq!(b.get(1, 0, 1), &int(3));
    }
}
