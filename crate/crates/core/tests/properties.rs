//! Randomised invariants. Structured inputs come from seeds fed to the
//! crate's own generators, so failures shrink to a single seed.

use proptest::prelude::*;
use rbsys::cli::{emit_model, parse_model};
use rbsys::cohomology::cohomology_dimensions;
use rbsys::homotopy::OpIndex;
use rbsys::linalg::scalar::{fmt_scalar, frac, parse_scalar};
use rbsys::linalg::Matrix;
use rbsys::random::{self as rnd};
use rbsys::rbs::{characterize, grbs_defect, is_rbs};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn scalars_print_and_parse_back(n in -1000i64..1000, d in 1i64..500) {
        let x = frac(n, d);
        prop_assert_eq!(parse_scalar(&fmt_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn rank_is_transpose_invariant(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5) {
        let m = rnd::random_matrix(&mut rnd::rng(seed), rows, cols);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn random_invertibles_invert(seed in any::<u64>(), n in 1usize..5) {
        let p = rnd::random_invertible(&mut rnd::rng(seed), n);
        prop_assert_eq!(p.mul(&p.inverse().unwrap()), Matrix::identity(n));
    }

    #[test]
    fn systems_survive_scaling_and_transport(seed in any::<u64>()) {
        let mut g = rnd::rng(seed);
        let inst = rnd::rbs_instance(&mut g);
        let c = rnd::nonzero_scalar(&mut g);
        prop_assert!(is_rbs(&inst.alg, &inst.module, &inst.pair.scale(&c)).unwrap(), "{}", inst.label);
        let (p, q) = (rnd::random_invertible(&mut g, inst.alg.dim()), rnd::random_invertible(&mut g, inst.module.dim()));
        let alg = inst.alg.change_basis(&p).unwrap();
        let module = inst.module.change_basis(&p, &q).unwrap();
        let pair = rnd::transport_pair(&inst.pair, &p, &q);
        prop_assert!(is_rbs(&alg, &module, &pair).unwrap(), "{}", inst.label);
    }

    #[test]
    fn characterizations_agree(seed in any::<u64>()) {
        let inst = rnd::random_instance(&mut rnd::rng(seed));
        let c = characterize(&inst.alg, &inst.module, &inst.pair).unwrap();
        prop_assert!(c.agree(), "{}: {:?}", inst.label, c);
        prop_assert_eq!(c.rbs, grbs_defect(&inst.alg, &inst.module, &inst.pair).unwrap().is_rbs());
    }

    #[test]
    fn cohomology_is_basis_independent(seed in any::<u64>()) {
        let mut g = rnd::rng(seed);
        let inst = rnd::rbs_instance(&mut g);
        let before = cohomology_dimensions(&inst.pair, &inst.alg, &inst.module, 1).unwrap();
        let (p, q) = (rnd::random_invertible(&mut g, inst.alg.dim()), rnd::random_invertible(&mut g, inst.module.dim()));
        let after = cohomology_dimensions(
            &rnd::transport_pair(&inst.pair, &p, &q),
            &inst.alg.change_basis(&p).unwrap(),
            &inst.module.change_basis(&p, &q).unwrap(),
            1,
        )
        .unwrap();
        prop_assert_eq!(before, after, "{}", inst.label);
    }

    #[test]
    fn generated_documents_round_trip(seed in any::<u64>()) {
        let inst = rnd::rbs_instance(&mut rnd::rng(seed));
        let alg = &inst.alg;
        let mut text = String::from("[algebra]\nbasis = [");
        text += &alg.names().iter().map(|n| format!("{n:?}")).collect::<Vec<_>>().join(", ");
        text += "]\nproducts = [";
        let mut quads = Vec::new();
        for (t, v) in alg.structure().entries() {
            for (k, x) in v.iter().enumerate() {
                if *x != frac(0, 1) {
                    quads.push(format!("[{}, {}, {k}, \"{}\"]", t[0], t[1], fmt_scalar(x)));
                }
            }
        }
        text += &quads.join(", ");
        text += "]\n";
        let doc = parse_model(&text).unwrap();
        prop_assert_eq!(&doc.algebra, alg);
        let emitted = emit_model(&doc);
        prop_assert_eq!(parse_model(&emitted).unwrap(), doc);
    }

    #[test]
    fn op_indices_round_trip(r in 1usize..9, s in 1usize..9) {
        for idx in [OpIndex::Plain, OpIndex::Slot(r), OpIndex::Dend(r), OpIndex::Quad(r, s)] {
            prop_assert_eq!(idx.to_string().parse::<OpIndex>().unwrap(), idx);
        }
    }
}
