//! Hand-computed values and frozen results.

use rbsys::algebra::{c, canonical_bimodule, jackson_example, strictly_upper_triangular, Algebra, BimoduleKind};
use rbsys::cohomology::{cohomology_dimensions, differential_matrix, Cochain};
use rbsys::deformation::{extend_step, obstruction_cocycle, DeformationSeries};
use rbsys::homotopy::{
    ainf_collapse, ainf_from_algebra, binary_from_homotopy, dendinf_from_dendriform, quadinf_from_quadri,
    quadinf_projections,
};
use rbsys::linalg::scalar::{frac, int};
use rbsys::linalg::{linear_solve_suite, Matrix, Scalar};
use rbsys::loday::{commuting_rbs_quadri, BinaryStructure};
use rbsys::random;
use rbsys::rbs::{dendriform_of, RbsPair};

fn fracs(v: &[(i64, i64)]) -> Vec<Scalar> {
    v.iter().map(|&(n, d)| frac(n, d)).collect()
}

fn idempotent() -> Algebra {
    Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)]).unwrap()
}

#[test]
fn rank_of_hilbert_and_singular_matrices() {
    let hilbert = |n: usize| {
        Matrix::from_rows((0..n).map(|i| (0..n).map(|j| frac(1, (i + j + 1) as i64)).collect()).collect()).unwrap()
    };
    for n in 1..=5 {
        let h = hilbert(n);
        assert_eq!(h.rank(), n);
        assert_eq!(h.mul(&h.inverse().unwrap()), Matrix::identity(n));
    }
    // third row = first + second
    let m = Matrix::from_i64(&[&[1, 2, 3, 4], &[2, 0, 1, -1], &[3, 2, 4, 3]]);
    let rep = linear_solve_suite(&m, Some(&[int(1), int(2), int(3)])).unwrap();
    assert_eq!(rep.rank, 2);
    assert_eq!(rep.kernel_basis.len(), 2);
    for k in &rep.kernel_basis {
        assert!(m.apply(k).iter().all(|x| *x == int(0)));
    }
    assert_eq!(m.apply(&rep.particular_solution.unwrap()), vec![int(1), int(2), int(3)]);
    assert!(linear_solve_suite(&m, Some(&[int(1), int(2), int(4)])).unwrap().particular_solution.is_none());
}

#[test]
fn frozen_cohomology_dimensions() {
    let e = idempotent();
    let adj = canonical_bimodule(&e, BimoduleKind::Adjoint);
    let two_zero = RbsPair::new(Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[0]])).unwrap();
    assert_eq!(cohomology_dimensions(&RbsPair::zero(1, 1), &e, &adj, 2).unwrap(), vec![2, 2, 2]);
    assert_eq!(cohomology_dimensions(&two_zero, &e, &adj, 3).unwrap(), vec![1, 0, 0, 0]);

    let j = jackson_example(3, &int(2)).unwrap();
    let jm = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
    assert_eq!(cohomology_dimensions(&j.pair(), &j.algebra, &jm, 2).unwrap(), vec![5, 5, 5]);

    let u = strictly_upper_triangular();
    let um = canonical_bimodule(&u, BimoduleKind::Adjoint);
    let p = RbsPair::new(Matrix::scalar_multiple(3, int(2)), Matrix::zeros(3, 3)).unwrap();
    assert_eq!(cohomology_dimensions(&p, &u, &um, 2).unwrap(), vec![5, 10, 16]);
}

#[test]
fn dimensions_follow_from_ranks() {
    // dim H^n = dim ker d_n - rank d_{n-1}
    let j = jackson_example(2, &int(3)).unwrap();
    let m = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
    let p = j.pair();
    let ranks: Vec<usize> = (0..=2).map(|n| differential_matrix(&p, &j.algebra, &m, n).unwrap().rank()).collect();
    let dims = cohomology_dimensions(&p, &j.algebra, &m, 2).unwrap();
    let space = |n: u32| 2 * 3 * 3usize.pow(n);
    assert_eq!(dims[0], space(0) - ranks[0]);
    assert_eq!(dims[1], space(1) - ranks[1] - ranks[0]);
    assert_eq!(dims[2], space(2) - ranks[2] - ranks[1]);
}

#[test]
fn frozen_obstruction_is_not_a_coboundary() {
    let j = jackson_example(1, &int(2)).unwrap();
    let m = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
    let first = RbsPair::new(
        Matrix::from_rows(vec![fracs(&[(-3, 2), (0, 1)]), fracs(&[(0, 1), (-1, 2)])]).unwrap(),
        Matrix::from_i64(&[&[0, 0], &[0, 1]]),
    )
    .unwrap();
    let ds = DeformationSeries::new(j.pair(), vec![first]).unwrap();
    let ob = obstruction_cocycle(&ds, &j.algebra, &m).unwrap();
    assert!(ob.is_cocycle);
    let h = frac(1, 2);
    let z = int(0);
    let expected = vec![
        z.clone(), z.clone(), z.clone(), h.clone(), z.clone(), h.clone(), z.clone(), z.clone(),
        z.clone(), z.clone(), z.clone(), h.clone(), z.clone(), h.clone(), z.clone(), z,
    ];
    assert_eq!(ob.cochain.flatten(2), expected);
    assert_eq!(extend_step(&ds, &j.algebra, &m).unwrap(), None);
    assert_eq!(cohomology_dimensions(&j.pair(), &j.algebra, &m, 2).unwrap(), vec![3, 3, 3]);
    let back = Cochain::unflatten(&expected, 2, 2, 2).unwrap();
    assert_eq!(back, ob.cochain);
}

#[test]
fn jackson_coefficients() {
    let j = jackson_example(3, &int(2)).unwrap();
    let col = |k| j.integral.column(k);
    assert_eq!(col(0), vec![int(0), int(1), int(0), int(0)]);
    assert_eq!(col(1), vec![int(0), int(0), frac(1, 3), int(0)]);
    assert_eq!(col(2), vec![int(0), int(0), int(0), frac(1, 7)]);
    assert!(jackson_example(2, &int(1)).is_err());
    assert!(jackson_example(3, &int(-1)).is_err());
}

#[test]
fn degree_zero_round_trips() {
    let mut g = random::rng(5);
    for _ in 0..20 {
        let (_, alg, _) = random::random_algebra(&mut g, 3);
        let h = ainf_from_algebra(&alg, 4).unwrap();
        assert_eq!(binary_from_homotopy(&h).unwrap(), BinaryStructure::from_algebra(&alg));

        let inst = random::rbs_instance(&mut g);
        let dend = dendriform_of(&inst.module, &inst.pair);
        let hd = dendinf_from_dendriform(&dend, 3).unwrap();
        assert_eq!(binary_from_homotopy(&hd).unwrap(), dend);
        let sum = binary_from_homotopy(&ainf_collapse(&hd).unwrap()).unwrap();
        assert_eq!(sum.tables(), dend.dendriform_sum().tables());

        let (_, a, pq, rs) = random::commuting_instance(&mut g);
        let q = commuting_rbs_quadri(&a, &pq, &rs).unwrap().quadri.unwrap();
        let hq = quadinf_from_quadri(&q, 3).unwrap();
        assert_eq!(binary_from_homotopy(&hq).unwrap(), q);
        let (h1, h2) = quadinf_projections(&hq).unwrap();
        assert_eq!(binary_from_homotopy(&h1).unwrap().tables(), q.horizontal().tables());
        assert_eq!(binary_from_homotopy(&h2).unwrap().tables(), q.vertical().tables());
    }
}
