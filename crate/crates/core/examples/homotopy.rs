//! Homotopy checkers on degree-0 input, and the two-term builder.

use rbsys::algebra::{c, canonical_bimodule, Algebra, BimoduleKind};
use rbsys::homotopy::{
    adjoint_bimodule, ainf_bimodule_from, ainf_from_algebra, dendinf_from_grbs, homotopy_axiom_defect,
    homotopy_grbs_defect, two_term_builder, TripleModule,
};
use rbsys::linalg::Matrix;
use rbsys::rbs::RbsPair;

fn main() -> rbsys::Result<()> {
    let a = Algebra::from_constants(&["e"], &[c(0, 0, 0, 1)])?;
    let adj = canonical_bimodule(&a, BimoduleKind::Adjoint);
    let pair = RbsPair::new(Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[0]]))?;

    let h = ainf_from_algebra(&a, 3)?;
    let m = ainf_bimodule_from(&h, &adj)?;
    println!("A∞: {}", homotopy_axiom_defect(&h, 3)?.pass());
    println!("A∞-bimodule: {}", homotopy_axiom_defect(&m, 3)?.pass());
    println!("homotopy system: {}", homotopy_grbs_defect(&h, &m, &pair, 3)?.pass());
    let dend = dendinf_from_grbs(&h, &m, &pair, 3)?;
    println!("induced Dend∞: {}", homotopy_axiom_defect(&dend, 3)?.pass());

    for (l, mu) in [(0, -2), (0, 0), (2, 0), (1, 0)] {
        let t = TripleModule::new(adj.clone(), Matrix::from_i64(&[&[l]]), Matrix::from_i64(&[&[mu]]))?;
        match two_term_builder(&a, &pair, &t, &t, &Matrix::identity(1), 3) {
            Ok(tt) => {
                let hadj = adjoint_bimodule(&tt.ainf)?;
                println!(
                    "two-term (R_M, S_M) = ({l}, {mu}): A∞ {} system {}",
                    homotopy_axiom_defect(&tt.ainf, 3)?.pass(),
                    homotopy_grbs_defect(&tt.ainf, &hadj, &tt.pair, 3)?.pass()
                );
            }
            Err(e) => println!("two-term (R_M, S_M) = ({l}, {mu}): {e}"),
        }
    }
    Ok(())
}
