//! Seeded generators for property suites. Everything is driven by a
//! `ChaCha8Rng`, so a seed fixes every instance.

use crate::algebra::{canonical_bimodule, left_only, right_only, Algebra, Bimodule, BimoduleKind};
use crate::catalog;
use crate::cohomology::{differential_matrix, Cochain};
use crate::error::Result;
use crate::linalg::scalar::{self, Scalar, Vector};
use crate::linalg::{linear_solve_suite, Matrix, MultiTensor};
use crate::rbs::RbsPair;
use crate::yang_baxter::{aybp_defect, nilpotent_example, AybpMode, Tensor2};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Gen = ChaCha8Rng;

pub fn rng(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mostly small integers, some halves, many zeros.
pub fn small_scalar(g: &mut Gen) -> Scalar {
    match g.gen_range(0..10) {
        0..=3 => scalar::zero(),
        4 | 5 => scalar::one(),
        6 => scalar::int(-1),
        7 => scalar::int(2),
        8 => scalar::int(-2),
        _ => scalar::frac(if g.gen_bool(0.5) { 1 } else { -1 }, 2),
    }
}

pub fn nonzero_scalar(g: &mut Gen) -> Scalar {
    loop {
        let c = small_scalar(g);
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_vector(g: &mut Gen, n: usize) -> Vector {
    (0..n).map(|_| small_scalar(g)).collect()
}

pub fn random_matrix(g: &mut Gen, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = small_scalar(g);
        }
    }
    m
}

/// A permuted unipotent matrix: always invertible, entries in `{-1, 0, 1}`.
pub fn random_invertible(g: &mut Gen, n: usize) -> Matrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(g);
    let mut u = Matrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            u[(i, j)] = scalar::int(g.gen_range(-1..=1));
        }
    }
    let mut p = Matrix::zeros(n, n);
    for (i, &j) in perm.iter().enumerate() {
        p[(i, j)] = scalar::one();
    }
    p.mul(&u)
}

/// A catalog algebra of dimension at most `max_dim`, half the time in a
/// random basis. Returns the basis change used (identity if none).
pub fn random_algebra(g: &mut Gen, max_dim: usize) -> (String, Algebra, Matrix) {
    let pool: Vec<_> = catalog::algebras().into_iter().filter(|(_, a)| a.dim() <= max_dim).collect();
    let (name, alg) = pool.choose(g).expect("catalog has small algebras").clone();
    let n = alg.dim();
    if g.gen_bool(0.5) {
        let p = random_invertible(g, n);
        let moved = alg.change_basis(&p).expect("invertible");
        (format!("{name}~"), moved, p)
    } else {
        (name.to_string(), alg, Matrix::identity(n))
    }
}

/// Actions that vanish identically.
pub fn trivial_bimodule(alg_dim: usize, dim: usize) -> Bimodule {
    let names: Vec<String> = (0..dim).map(|i| format!("u{i}")).collect();
    Bimodule::new(
        names,
        MultiTensor::zero(vec![alg_dim, dim], dim),
        MultiTensor::zero(vec![dim, alg_dim], dim),
    )
    .expect("shape")
}

pub fn random_bimodule(g: &mut Gen, alg: &Algebra, max_dim: usize) -> (String, Bimodule) {
    let adj = canonical_bimodule(alg, BimoduleKind::Adjoint);
    match g.gen_range(0..5) {
        0 => ("adjoint".into(), adj),
        1 => ("coadjoint".into(), canonical_bimodule(alg, BimoduleKind::Coadjoint)),
        2 => ("left_only".into(), left_only(&adj)),
        3 => ("right_only".into(), right_only(&adj)),
        _ => {
            let m = g.gen_range(1..=max_dim);
            (format!("trivial{m}"), trivial_bimodule(alg.dim(), m))
        }
    }
}

/// `(P⁻¹ R Q, P⁻¹ S Q)`: the pair read in new bases of `A` (columns of `p`)
/// and `M` (columns of `q`).
pub fn transport_pair(pair: &RbsPair, p: &Matrix, q: &Matrix) -> RbsPair {
    let pinv = p.inverse().expect("invertible");
    RbsPair::new(pinv.mul(&pair.r).mul(q), pinv.mul(&pair.s).mul(q)).expect("square")
}

/// One model with a pair of operators.
#[derive(Debug, Clone)]
pub struct Instance {
    pub label: String,
    pub alg: Algebra,
    pub module: Bimodule,
    pub pair: RbsPair,
}

/// Vectors `a` in `A` with `a·a = 0`, searched among small combinations.
fn square_zero_vector(g: &mut Gen, alg: &Algebra) -> Vector {
    for _ in 0..20 {
        let a = random_vector(g, alg.dim());
        if scalar::is_zero_vec(&alg.mul(&a, &a)) {
            return a;
        }
    }
    scalar::zeros(alg.dim())
}

/// A pair known to be a system, built by one of: catalog systems on the
/// adjoint bimodule, splittings with a random weight, rank-one operators
/// into square-zero vectors on a trivial module, or the zero pair. Every
/// result is rescaled and transported to random bases.
pub fn rbs_instance(g: &mut Gen) -> Instance {
    let c = nonzero_scalar(g);
    let (label, alg, module, pair) = match g.gen_range(0..4) {
        0 => {
            let systems: Vec<_> = catalog::adjoint_systems().into_iter().filter(|(_, a, _)| a.dim() <= 3).collect();
            let (name, alg, pair) = systems.choose(g).expect("catalog systems").clone();
            let m = canonical_bimodule(&alg, BimoduleKind::Adjoint);
            (name, alg, m, pair)
        }
        1 => {
            let split: Vec<_> = catalog::algebras()
                .into_iter()
                .flat_map(|(n, a)| catalog::basis_splittings(&a).into_iter().map(move |m| (n, a.clone(), m)))
                .collect();
            let (name, alg, mask) = split.choose(g).expect("splittings exist").clone();
            let lambda = nonzero_scalar(g);
            let m = canonical_bimodule(&alg, BimoduleKind::Adjoint);
            let pair = catalog::splitting_pair(&alg, mask, &lambda);
            (format!("{name}/split{mask:b}/λ={}", scalar::fmt_scalar(&lambda)), alg, m, pair)
        }
        2 => {
            let (name, alg, _) = random_algebra(g, 3);
            let dim = g.gen_range(1..=3);
            let m = trivial_bimodule(alg.dim(), dim);
            let rank_one = |g: &mut Gen, a: Vector| {
                let phi = random_vector(g, dim);
                let mut out = Matrix::zeros(alg.dim(), dim);
                for i in 0..alg.dim() {
                    for j in 0..dim {
                        out[(i, j)] = &a[i] * &phi[j];
                    }
                }
                out
            };
            let a = square_zero_vector(g, &alg);
            let b = square_zero_vector(g, &alg);
            let (r, s) = (rank_one(g, a), rank_one(g, b));
            (format!("{name}/trivial{dim}/rank-one"), alg, m, RbsPair::new(r, s).expect("shape"))
        }
        _ => {
            let (name, alg, _) = random_algebra(g, 3);
            let (kind, m) = random_bimodule(g, &alg, 3);
            let pair = RbsPair::zero(alg.dim(), m.dim());
            (format!("{name}/{kind}/zero"), alg, m, pair)
        }
    };
    let pair = pair.scale(&c);
    let (p, q) = (random_invertible(g, alg.dim()), random_invertible(g, module.dim()));
    Instance {
        label: format!("{label}·{}", scalar::fmt_scalar(&c)),
        alg: alg.change_basis(&p).expect("invertible"),
        module: module.change_basis(&p, &q).expect("invertible"),
        pair: transport_pair(&pair, &p, &q),
    }
}

/// A pair that is usually not a system: random operators, or a system with
/// one entry disturbed.
pub fn non_rbs_instance(g: &mut Gen) -> Instance {
    if g.gen_bool(0.5) {
        let (name, alg, _) = random_algebra(g, 3);
        let (kind, m) = random_bimodule(g, &alg, 3);
        let pair = RbsPair::new(random_matrix(g, alg.dim(), m.dim()), random_matrix(g, alg.dim(), m.dim()))
            .expect("shape");
        Instance {
            label: format!("{name}/{kind}/random"),
            alg,
            module: m,
            pair,
        }
    } else {
        let mut inst = rbs_instance(g);
        let (i, j) = (g.gen_range(0..inst.alg.dim()), g.gen_range(0..inst.module.dim()));
        let bump = nonzero_scalar(g);
        let target = if g.gen_bool(0.5) { &mut inst.pair.r } else { &mut inst.pair.s };
        target[(i, j)] = &target[(i, j)] + bump;
        inst.label.push_str("/perturbed");
        inst
    }
}

/// Systems and non-systems in equal proportion.
pub fn random_instance(g: &mut Gen) -> Instance {
    if g.gen_bool(0.5) {
        rbs_instance(g)
    } else {
        non_rbs_instance(g)
    }
}

/// A sparse random cochain in `C^arity`.
pub fn random_cochain(g: &mut Gen, arity: usize, alg_dim: usize, module_dim: usize) -> Cochain {
    let len = crate::cohomology::cochain_space_dim(arity, alg_dim, module_dim);
    let coords = random_vector(g, len);
    Cochain::unflatten(&coords, arity, alg_dim, module_dim).expect("length")
}

/// A random element of the kernel of `C¹ → C²`, i.e. an infinitesimal
/// deformation direction (zero if the kernel is trivial).
pub fn random_infinitesimal(g: &mut Gen, inst: &Instance) -> Result<RbsPair> {
    let d = differential_matrix(&inst.pair, &inst.alg, &inst.module, 1)?;
    let kernel = linear_solve_suite(&d, None)?.kernel_basis;
    let mut v = scalar::zeros(d.cols());
    for k in &kernel {
        scalar::axpy(&mut v, &small_scalar(g), k);
    }
    let c = Cochain::unflatten(&v, 1, inst.alg.dim(), inst.module.dim())?;
    Ok(c.to_pair().expect("arity one"))
}

pub fn random_tensor(g: &mut Gen, n: usize) -> Tensor2 {
    Tensor2::new(random_matrix(g, n, n))
}

/// `x - τ(x)` for a random `x`.
pub fn random_skew_tensor(g: &mut Gen, n: usize) -> Tensor2 {
    let t = random_tensor(g, n);
    t.sub(&t.flip())
}

/// An associative Yang-Baxter pair on a small algebra: the nilpotent
/// example rescaled, the zero pair, arbitrary tensors over a zero product,
/// or a hit of a short random search.
pub fn random_aybp(g: &mut Gen) -> (Algebra, Tensor2, Tensor2) {
    match g.gen_range(0..4) {
        0 => {
            let (alg, r, s) = nilpotent_example();
            let c = nonzero_scalar(g);
            (alg, r.scale(&c), s.scale(&c))
        }
        1 => {
            let (_, alg, _) = random_algebra(g, 3);
            let n = alg.dim();
            (alg, Tensor2::zero(n), Tensor2::zero(n))
        }
        2 => {
            let n = g.gen_range(1..=3);
            let names: Vec<String> = (0..n).map(|i| format!("z{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let alg = Algebra::zero_product(&refs);
            let (r, s) = (random_tensor(g, n), random_tensor(g, n));
            (alg, r, s)
        }
        _ => {
            let (_, alg, _) = random_algebra(g, 3);
            let n = alg.dim();
            for _ in 0..30 {
                let (r, s) = (sparse_tensor(g, n), sparse_tensor(g, n));
                if aybp_defect(&r, &s, &alg, AybpMode::Aybp).is_ok_and(|rep| rep.pass) {
                    return (alg, r, s);
                }
            }
            (alg, Tensor2::zero(n), Tensor2::zero(n))
        }
    }
}

/// At most two non-zero coefficients.
fn sparse_tensor(g: &mut Gen, n: usize) -> Tensor2 {
    let terms: Vec<_> = (0..g.gen_range(0..=2))
        .map(|_| (g.gen_range(0..n), g.gen_range(0..n), nonzero_scalar(g)))
        .collect();
    Tensor2::from_terms(n, &terms)
}

/// The unit of a catalog algebra (coordinates in `{0, 1}`), if any.
pub fn unit_of(alg: &Algebra) -> Option<Vector> {
    let n = alg.dim();
    (1u32..1 << n).map(|mask| (0..n).map(|i| scalar::int((mask >> i & 1) as i64)).collect::<Vector>()).find(|u| {
        (0..n).all(|i| {
            let e = alg.unit_vector(i);
            alg.mul(u, &e) == e && alg.mul(&e, u) == e
        })
    })
}

/// `R = S = φ(·)·1` with `φ(1) = 1` on the adjoint bimodule of a unital
/// catalog algebra: a two-sided averaging system. Transported to a random
/// basis.
pub fn averaging_instance(g: &mut Gen) -> Instance {
    let unital: Vec<_> = catalog::algebras().into_iter().filter_map(|(n, a)| unit_of(&a).map(|u| (n, a, u))).collect();
    let (name, alg, one) = unital.choose(g).expect("unital algebras").clone();
    let n = alg.dim();
    let mut phi = random_vector(g, n);
    let pivot = one.iter().position(|x| !x.is_zero()).expect("non-zero unit");
    let gap = scalar::one() - scalar::dot(&phi, &one);
    phi[pivot] = &phi[pivot] + gap / &one[pivot];
    let mut e = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            e[(i, j)] = &one[i] * &phi[j];
        }
    }
    let p = random_invertible(g, n);
    let m = canonical_bimodule(&alg, BimoduleKind::Adjoint);
    let pair = RbsPair::new(e.clone(), e).expect("square");
    Instance {
        label: format!("{name}/expectation"),
        alg: alg.change_basis(&p).expect("invertible"),
        module: m.change_basis(&p, &p).expect("invertible"),
        pair: transport_pair(&pair, &p, &p),
    }
}

/// Two systems on one adjoint bimodule whose four operators commute.
/// Candidates are two splittings of one algebra (diagonal, so they commute)
/// or a system next to a multiple of itself; non-commuting candidates are
/// resampled.
pub fn commuting_instance(g: &mut Gen) -> (String, Algebra, RbsPair, RbsPair) {
    loop {
        let (label, alg, pq, rs) = if g.gen_bool(0.6) {
            let split: Vec<_> = catalog::algebras()
                .into_iter()
                .map(|(n, a)| {
                    let masks = catalog::basis_splittings(&a);
                    (n, a, masks)
                })
                .filter(|(_, _, m)| !m.is_empty())
                .collect();
            let (name, alg, masks) = split.choose(g).expect("splittings").clone();
            let (m1, m2) = (*masks.choose(g).expect("mask"), *masks.choose(g).expect("mask"));
            let pq = catalog::splitting_pair(&alg, m1, &nonzero_scalar(g));
            let rs = if g.gen_bool(0.2) {
                RbsPair::zero(alg.dim(), alg.dim())
            } else {
                catalog::splitting_pair(&alg, m2, &nonzero_scalar(g))
            };
            (format!("{name}/split{m1:b}+split{m2:b}"), alg, pq, rs)
        } else {
            let systems: Vec<_> = catalog::adjoint_systems().into_iter().filter(|(_, a, _)| a.dim() <= 3).collect();
            let (name, alg, pair) = systems.choose(g).expect("systems").clone();
            let c = small_scalar(g);
            (format!("{name}/self·{}", scalar::fmt_scalar(&c)), alg, pair.clone(), pair.scale(&c))
        };
        let commutes = |x: &Matrix, y: &Matrix| x.mul(y) == y.mul(x);
        if [(&pq.r, &rs.r), (&pq.r, &rs.s), (&pq.s, &rs.r), (&pq.s, &rs.s)]
            .iter()
            .all(|(x, y)| commutes(x, y))
        {
            let p = random_invertible(g, alg.dim());
            return (
                label,
                alg.change_basis(&p).expect("invertible"),
                transport_pair(&pq, &p, &p),
                transport_pair(&rs, &p, &p),
            );
        }
    }
}

/// A random multiplication table `n × n → n`.
pub fn random_table(g: &mut Gen, n: usize) -> MultiTensor {
    MultiTensor::from_fn(vec![n, n], n, |_| random_vector(g, n))
}
