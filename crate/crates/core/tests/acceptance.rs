//! Acceptance run: one line per criterion with its timing and budget.
//! Runs without the libtest harness so every line is printed as it finishes.

use rand::Rng;
use rbsys::algebra::{canonical_bimodule, jackson_example, validate_model, Algebra, Bimodule, BimoduleKind};
use rbsys::cli::{run_text, Command, Format, Options};
use rbsys::cohomology::{
    cohomology_dimensions, dend_complex, derived_bracket, derived_bracket_via_semidirect, differential_matrix,
    hochschild_differential, rbs_differential, theta_map, Cochain, DendCochain,
};
use rbsys::deformation::{deformation_defects, extend_step, obstruction_cocycle, DeformationSeries};
use rbsys::homotopy::{
    adjoint_bimodule, ainf_bimodule_from, ainf_from_algebra, dendinf_from_dendriform, dendinf_from_grbs,
    homotopy_axiom_defect, homotopy_grbs_defect, quadinf_from_quadri, rbs_on_dendinf_defect, two_term_builder,
    GradedSpace, HomotopyKind, HomotopyStructure, OpIndex, TripleModule,
};
use rbsys::linalg::scalar::{self, frac, int, sign};
use rbsys::linalg::{Matrix, MultiTensor};
use rbsys::loday::{commuting_rbs_quadri, dialgebra_from_averaging, rbs_on_dendriform_defect, BinaryStructure, StructureKind};
use rbsys::random::{self as rnd, Gen};
use rbsys::rbs::{dendriform_of, graph_subalgebra_check, grbs_defect, induce_structures, nijenhuis_lift_check, RbsPair};
use rbsys::yang_baxter::{
    aybp_defect, covariant_bialgebra_check, compatible_prelie, nilpotent_example, perturbation_check,
    quasitriangular_build, rbs_from_tensors, skew_aybp_grbs_check, AybpMode, CovariantBialgebra, Tensor2,
    TensorFlavor,
};
use std::time::{Duration, Instant};

/// Failures found so far plus a short summary.
#[derive(Default)]
struct Tally {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

type Outcome = rbsys::Result<Tally>;

fn run(id: usize, title: &str, budget_s: u64, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = f();
    let took = start.elapsed();
    let over = took > Duration::from_secs(budget_s);
    let (ok, detail) = match outcome {
        Err(e) => (false, format!("error: {e}")),
        Ok(t) => {
            let mut d = t.notes.join("; ");
            if !t.failures.is_empty() {
                let shown: Vec<_> = t.failures.iter().take(3).cloned().collect();
                d = format!("{} failures, e.g. {} | {d}", t.failures.len(), shown.join(" / "));
            }
            (t.failures.is_empty(), d)
        }
    };
    let pass = ok && !over;
    let budget = if over { format!("over the {budget_s}s budget") } else { format!("budget {budget_s}s") };
    println!(
        "criterion {id:>2} {}  {title}  [{:.2}s, {budget}]  {detail}",
        if pass { "PASS" } else { "FAIL" },
        took.as_secs_f64()
    );
    pass
}

fn bump(g: &mut Gen, t: &MultiTensor) -> MultiTensor {
    let mut out = t.clone();
    let tuple: Vec<usize> = t.input_dims().iter().map(|&d| g.gen_range(0..d)).collect();
    let k = g.gen_range(0..t.output_dim());
    let v = &out.coefficient(&tuple, k) + rnd::nonzero_scalar(g);
    out.set(&tuple, k, v);
    out
}

fn random_multi(g: &mut Gen, arity: usize, d: usize) -> MultiTensor {
    MultiTensor::from_fn(vec![d; arity], d, |_| {
        if g.gen_bool(0.4) {
            rnd::random_vector(g, d)
        } else {
            scalar::zeros(d)
        }
    })
}

fn four_way() -> Outcome {
    let mut g = rnd::rng(101);
    let mut t = Tally::default();
    let mut systems = 0;
    for n in 0..320 {
        let inst = rnd::random_instance(&mut g);
        let (a, m, p) = (&inst.alg, &inst.module, &inst.pair);
        let rbs = grbs_defect(a, m, p)?.is_rbs();
        let graph = graph_subalgebra_check(a, m, p)?;
        let nij = nijenhuis_lift_check(a, m, p)?;
        let c = Cochain::from_pair(p);
        let mc = derived_bracket(&c, &c, a, m)?.is_zero();
        systems += rbs as usize;
        t.require(rbs == graph && graph == nij && nij == mc, || {
            format!("#{n} {}: grbs {rbs} graph {graph} nijenhuis {nij} mc {mc}", inst.label)
        });
    }
    t.note(format!("320 instances, {systems} systems"));
    Ok(t)
}

fn degree(c: &Cochain) -> i64 {
    c.arity() as i64
}

fn bracket_oracle() -> Outcome {
    let mut g = rnd::rng(202);
    let mut t = Tally::default();
    let (mut pairs, mut triples) = (0, 0);
    while pairs < 120 {
        let inst = rnd::random_instance(&mut g);
        let (a, m) = (&inst.alg, &inst.module);
        let (na, nm) = (a.dim(), m.dim());
        let arity = g.gen_range(0..=2);
        let x = rnd::random_cochain(&mut g, arity, na, nm);
        let arity = g.gen_range(0..=2);
        let y = rnd::random_cochain(&mut g, arity, na, nm);
        let xy = derived_bracket(&x, &y, a, m)?;
        t.require(xy == derived_bracket_via_semidirect(&x, &y, a, m)?, || {
            format!("{}: formulas ≠ semidirect at arities ({}, {})", inst.label, x.arity(), y.arity())
        });
        let yx = derived_bracket(&y, &x, a, m)?;
        let twisted = yx.scale(&-sign(degree(&x) * degree(&y)));
        t.require(xy == twisted, || format!("{}: antisymmetry fails at ({}, {})", inst.label, x.arity(), y.arity()));
        pairs += 1;
        if pairs % 3 == 0 {
            let arity = g.gen_range(0..=1);
            let z = rnd::random_cochain(&mut g, arity, na, nm);
            let lhs = derived_bracket(&x, &derived_bracket(&y, &z, a, m)?, a, m)?;
            let r1 = derived_bracket(&xy, &z, a, m)?;
            let r2 = derived_bracket(&y, &derived_bracket(&x, &z, a, m)?, a, m)?.scale(&sign(degree(&x) * degree(&y)));
            t.require(lhs == r1.add(&r2), || {
                format!("{}: Jacobi fails at ({}, {}, {})", inst.label, x.arity(), y.arity(), z.arity())
            });
            triples += 1;
        }
    }
    t.note(format!("{pairs} pairs checked against the semidirect oracle, {triples} Jacobi triples"));
    Ok(t)
}

fn differentials() -> Outcome {
    let mut g = rnd::rng(303);
    let mut t = Tally::default();
    let mut count = 0;
    for _ in 0..40 {
        let inst = rnd::rbs_instance(&mut g);
        let (a, m, p) = (&inst.alg, &inst.module, &inst.pair);
        for n in 0..=3 {
            if n == 3 && m.dim() == 3 && count % 4 != 0 {
                continue;
            }
            let c = rnd::random_cochain(&mut g, n, a.dim(), m.dim());
            let dc = rbs_differential(p, &c, a, m)?;
            let hc = hochschild_differential(p, &c, a, m)?;
            t.require(dc == hc.scale(&sign(n as i64)), || format!("{}: d ≠ (-1)^{n} δ_Hoch", inst.label));
            t.require(rbs_differential(p, &dc, a, m)?.is_zero(), || format!("{}: d² ≠ 0 on C^{n}", inst.label));
            t.require(hochschild_differential(p, &hc, a, m)?.is_zero(), || {
                format!("{}: δ_Hoch² ≠ 0 on C^{n}", inst.label)
            });
            if n >= 1 {
                let cx = dend_complex(&dendriform_of(m, p))?;
                let f = DendCochain::new((0..n).map(|_| random_multi(&mut g, n, m.dim())).collect())?;
                let df = cx.differential(&f)?;
                t.require(cx.differential(&df)?.is_zero(), || format!("{}: δ_π² ≠ 0 on O({n})", inst.label));
            }
            count += 1;
        }
    }
    t.note(format!("{count} cochains over 40 systems"));
    Ok(t)
}

fn theta_chain_map() -> Outcome {
    let mut g = rnd::rng(404);
    let mut t = Tally::default();
    for _ in 0..60 {
        let inst = rnd::rbs_instance(&mut g);
        let (a, m, p) = (&inst.alg, &inst.module, &inst.pair);
        let pi = dend_complex(&dendriform_of(m, p))?;
        t.require(theta_map(&Cochain::from_pair(p), m)? == *pi.pi(), || format!("{}: Θ₁(R,S) ≠ π_M", inst.label));
        for n in 0..=2 {
            let c = rnd::random_cochain(&mut g, n, a.dim(), m.dim());
            let lhs = theta_map(&rbs_differential(p, &c, a, m)?.scale(&sign(n as i64)), m)?;
            let rhs = pi.differential(&theta_map(&c, m)?)?;
            t.require(lhs == rhs, || format!("{}: square fails in degree {n}", inst.label));
        }
    }
    t.note("60 systems, degrees 0..=2");
    Ok(t)
}

fn morphism(alg: &Algebra, star: &BinaryStructure, m: &Matrix) -> bool {
    let d = star.dim();
    (0..d).all(|i| {
        (0..d).all(|j| {
            let (u, v) = (scalar::unit(d, i), scalar::unit(d, j));
            m.apply(&star.apply(0, &u, &v)) == alg.mul(&m.apply(&u), &m.apply(&v))
        })
    })
}

fn induced_structures() -> Outcome {
    let mut g = rnd::rng(505);
    let mut t = Tally::default();
    for _ in 0..100 {
        let inst = rnd::rbs_instance(&mut g);
        let s = induce_structures(&inst.alg, &inst.module, &inst.pair)?;
        t.require(s.dendriform.axiom_check()?.pass, || format!("{}: dendriform", inst.label));
        t.require(s.associative.axiom_check()?.pass, || format!("{}: ∗ not associative", inst.label));
        for (name, op) in [("R", &inst.pair.r), ("S", &inst.pair.s)] {
            t.require(morphism(&inst.alg, &s.associative, op), || format!("{}: {name} not a morphism", inst.label));
        }
    }
    for _ in 0..60 {
        let inst = rnd::averaging_instance(&mut g);
        let d = dialgebra_from_averaging(&inst.alg, &inst.module, &inst.pair)?;
        t.require(d.axiom_check()?.pass, || format!("{}: dialgebra", inst.label));
    }
    for _ in 0..60 {
        let (label, alg, pq, rs) = rnd::commuting_instance(&mut g);
        let c = commuting_rbs_quadri(&alg, &pq, &rs)?;
        match c.quadri {
            None => t.require(false, || format!("{label}: no quadri structure (commute {})", c.commute)),
            Some(q) => {
                t.require(q.axiom_check()?.pass, || format!("{label}: quadri"));
                t.require(q.horizontal().axiom_check()?.pass, || format!("{label}: horizontal half"));
                t.require(q.vertical().axiom_check()?.pass, || format!("{label}: vertical half"));
            }
        }
    }
    t.note("100 systems, 60 averaging systems, 60 commuting pairs");
    Ok(t)
}

fn deformation() -> Outcome {
    let mut g = rnd::rng(606);
    let mut t = Tally::default();
    let (mut extended, mut obstructed, mut checked) = (0, 0, 0);
    for _ in 0..40 {
        let inst = rnd::rbs_instance(&mut g);
        let (a, m) = (&inst.alg, &inst.module);
        let first = rnd::random_infinitesimal(&mut g, &inst)?;
        let mut ds = DeformationSeries::new(inst.pair.clone(), vec![first])?;
        let h2 = cohomology_dimensions(&inst.pair, a, m, 2)?[2];
        let d1 = differential_matrix(&inst.pair, a, m, 1)?;
        for _order in 1..=2 {
            let ob = obstruction_cocycle(&ds, a, m)?;
            t.require(ob.is_cocycle, || format!("{}: obstruction at order {} not a cocycle", inst.label, ds.order()));
            let rhs = ob.cochain.flatten(m.dim());
            let col = Matrix::from_columns(rhs.len(), &[rhs.clone()])?;
            let solvable = d1.hstack(&col).rank() == d1.rank();
            let step = extend_step(&ds, a, m)?;
            checked += 1;
            t.require(step.is_some() == solvable, || format!("{}: extend_step disagrees with the rank test", inst.label));
            t.require(h2 > 0 || solvable, || format!("{}: H² = 0 yet obstructed", inst.label));
            match step {
                None => {
                    obstructed += 1;
                    break;
                }
                Some(x) => {
                    extended += 1;
                    ds = ds.extended(x)?;
                    let ok = deformation_defects(&ds, a, m)?.iter().all(|d| d.is_rbs());
                    t.require(ok, || format!("{}: extended series fails to re-validate", inst.label));
                }
            }
        }
    }
    t.note(format!("{checked} obstruction steps: {extended} extended, {obstructed} obstructed"));
    Ok(t)
}

fn yang_baxter() -> Outcome {
    let mut g = rnd::rng(707);
    let mut t = Tally::default();
    let mut passing = 0;
    for n in 0..220 {
        let (alg, r, s) = match n % 4 {
            0 => {
                let (_, alg, _) = rnd::random_algebra(&mut g, 3);
                let d = alg.dim();
                (alg, rnd::random_skew_tensor(&mut g, d), rnd::random_skew_tensor(&mut g, d))
            }
            1 => {
                let d = g.gen_range(1..=3);
                let names: Vec<String> = (0..d).map(|i| format!("z{i}")).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                (Algebra::zero_product(&refs), rnd::random_skew_tensor(&mut g, d), rnd::random_skew_tensor(&mut g, d))
            }
            2 => {
                let (alg, _, _) = nilpotent_example();
                let c = rnd::nonzero_scalar(&mut g);
                let x = Tensor2::simple(&alg.unit_vector(0), &alg.unit_vector(2)).scale(&c);
                let skew = x.sub(&x.flip());
                let other = if g.gen_bool(0.5) { skew.clone() } else { rnd::random_skew_tensor(&mut g, 3) };
                (alg, skew, other)
            }
            _ => {
                let (_, alg, _) = rnd::random_algebra(&mut g, 3);
                let d = alg.dim();
                let (i, j) = (g.gen_range(0..d), g.gen_range(0..d));
                let x = Tensor2::simple(&alg.unit_vector(i), &alg.unit_vector(j)).scale(&rnd::nonzero_scalar(&mut g));
                (alg, x.sub(&x.flip()), Tensor2::zero(d))
            }
        };
        let tensor = aybp_defect(&r, &s, &alg, AybpMode::Aybp)?.pass;
        let k = skew_aybp_grbs_check(&r, &s, &alg)?;
        passing += tensor as usize;
        t.require(k.aybp_pass == tensor && k.agree(), || {
            format!("#{n}: AYBP {} vs coadjoint system {}", k.aybp_pass, k.grbs_pass)
        });
    }
    t.note(format!("220 skew pairs, {passing} satisfy AYBP"));

    let (alg, r, s) = nilpotent_example();
    t.require(aybp_defect(&r, &s, &alg, AybpMode::Aybp)?.pass, || "nilpotent example fails AYBP".into());
    let adj = canonical_bimodule(&alg, BimoduleKind::Adjoint);
    let p = rbs_from_tensors(&r, &s, &alg, TensorFlavor::RotaBaxterSystem)?;
    t.require(grbs_defect(&alg, &adj, &p)?.is_rbs(), || "nilpotent example: sandwich pair not a system".into());
    let cb = quasitriangular_build(&r, &s, &alg)?;
    let rep = covariant_bialgebra_check(&cb);
    t.require(rep.pass() && rep.compatible, || "nilpotent example: bialgebra".into());
    t.require(compatible_prelie(&cb)?.axiom_check()?.pass, || "nilpotent example: pre-Lie".into());
    Ok(t)
}

fn perturbation() -> Outcome {
    let mut g = rnd::rng(808);
    let mut t = Tally::default();
    let (mut holds, mut total) = (0, 0);
    for n in 0..120 {
        let (alg, r0, s0) = rnd::random_aybp(&mut g);
        let d = alg.dim();
        let cb = if n % 2 == 0 { CovariantBialgebra::zero(&alg) } else { quasitriangular_build(&r0, &s0, &alg)? };
        let (r, s) = match g.gen_range(0..3) {
            0 => (r0.scale(&rnd::small_scalar(&mut g)), s0.clone()),
            1 => (rnd::random_tensor(&mut g, d), rnd::random_tensor(&mut g, d)),
            _ => (r0.clone(), Tensor2::zero(d)),
        };
        let rep = perturbation_check(&cb, &r, &s)?;
        holds += rep.condition_holds as usize;
        total += 1;
        t.require(rep.agree(), || {
            format!("#{n}: criterion {} vs direct check {}", rep.condition_holds, rep.direct_check)
        });
    }
    t.note(format!("{total} perturbations, criterion holds on {holds}"));
    Ok(t)
}

fn jackson() -> Outcome {
    let mut t = Tally::default();
    let j = jackson_example(3, &int(2))?;
    let adj = canonical_bimodule(&j.algebra, BimoduleKind::Adjoint);
    let p = j.pair();
    t.require(grbs_defect(&j.algebra, &adj, &p)?.is_rbs(), || "(J, σ∘J) is not a system".into());
    let e = |i| scalar::unit(4, i);
    let expected = [(0, e(1)), (1, scalar::scale(&frac(1, 3), &e(2))), (2, scalar::scale(&frac(1, 7), &e(3)))];
    for (k, v) in expected {
        t.require(p.r.apply(&e(k)) == v, || format!("J(x^{k}) = {}", scalar::fmt_vector(&p.r.apply(&e(k)))));
    }
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/models/jackson.toml")).expect("model");
    let rep = run_text(Command::CheckRbs, &text, &Options::default()).expect("report");
    t.require(rep.pass(), || "check-rbs fails on models/jackson.toml".into());
    let d1 = cohomology_dimensions(&p, &j.algebra, &adj, 2)?;
    let d2 = cohomology_dimensions(&p, &j.algebra, &adj, 2)?;
    t.require(d1 == d2, || format!("dims vary: {d1:?} vs {d2:?}"));
    t.note(format!("H⁰..H² = {d1:?}"));
    Ok(t)
}

fn homotopy_collapse() -> Outcome {
    let mut g = rnd::rng(909);
    let mut t = Tally::default();
    let mut verdicts = [[0usize; 2]; 6];
    let mut tally = |slot: usize, v: bool| verdicts[slot][v as usize] += 1;
    for n in 0..100 {
        // A∞ against associativity
        let (_, alg, _) = rnd::random_algebra(&mut g, 3);
        let table = match n % 3 {
            0 => alg.structure().clone(),
            1 => bump(&mut g, alg.structure()),
            _ => rnd::random_table(&mut g, alg.dim()),
        };
        let a2 = Algebra::new(alg.names().to_vec(), table)?;
        let h = ainf_from_algebra(&a2, 3)?;
        let (hv, cv) = (homotopy_axiom_defect(&h, 3)?.pass(), a2.is_associative());
        tally(0, cv);
        t.require(hv == cv, || format!("#{n}: A∞ {hv} vs associative {cv}"));

        // A∞-bimodule against the classical bimodule axioms
        let (_, module) = rnd::random_bimodule(&mut g, &alg, 3);
        let module = if n % 2 == 0 {
            module
        } else if g.gen_bool(0.5) {
            Bimodule::new(module.names().to_vec(), bump(&mut g, module.left_table()), module.right_table().clone())?
        } else {
            Bimodule::new(module.names().to_vec(), module.left_table().clone(), bump(&mut g, module.right_table()))?
        };
        let ha = ainf_from_algebra(&alg, 3)?;
        let hm = ainf_bimodule_from(&ha, &module)?;
        let (hv, cv) = (homotopy_axiom_defect(&hm, 3)?.pass(), validate_model(&alg, &module)?.bimodule);
        tally(1, cv);
        t.require(hv == cv, || format!("#{n}: A∞-bimodule {hv} vs bimodule {cv}"));

        // homotopy operator identities against the classical system
        let inst = rnd::random_instance(&mut g);
        let ha = ainf_from_algebra(&inst.alg, 3)?;
        let hm = ainf_bimodule_from(&ha, &inst.module)?;
        let hv = homotopy_grbs_defect(&ha, &hm, &inst.pair, 3)?.pass();
        let cv = grbs_defect(&inst.alg, &inst.module, &inst.pair)?.is_rbs();
        tally(2, cv);
        t.require(hv == cv, || format!("#{n} {}: homotopy system {hv} vs classical {cv}", inst.label));

        // Dend∞ against the dendriform axioms
        let dend = if n % 2 == 0 {
            dendriform_of(&inst.module, &inst.pair)
        } else {
            let d = inst.module.dim();
            BinaryStructure::new(
                StructureKind::Dendriform,
                inst.module.names().to_vec(),
                vec![rnd::random_table(&mut g, d), rnd::random_table(&mut g, d)],
            )?
        };
        let hd = dendinf_from_dendriform(&dend, 3)?;
        let (hv, cv) = (homotopy_axiom_defect(&hd, 3)?.pass(), dend.axiom_check()?.pass);
        tally(3, cv);
        t.require(hv == cv, || format!("#{n}: Dend∞ {hv} vs dendriform {cv}"));

        // Quad∞ against the quadri identities, and systems on Dend∞
        let (label, alg, pq, rs) = rnd::commuting_instance(&mut g);
        let quad = commuting_rbs_quadri(&alg, &pq, &rs)?.quadri.expect("commuting systems");
        let quad = match n % 3 {
            0 => quad,
            1 => {
                let mut tables = quad.tables().to_vec();
                let i = g.gen_range(0..4);
                tables[i] = bump(&mut g, &tables[i]);
                BinaryStructure::new(StructureKind::Quadri, quad.names().to_vec(), tables)?
            }
            _ => {
                let d = quad.dim();
                let tables = (0..4).map(|_| rnd::random_table(&mut g, d)).collect();
                BinaryStructure::new(StructureKind::Quadri, quad.names().to_vec(), tables)?
            }
        };
        let hq = quadinf_from_quadri(&quad, 3)?;
        let (hv, cv) = (homotopy_axiom_defect(&hq, 3)?.pass(), quad.axiom_check()?.pass);
        tally(4, cv);
        t.require(hv == cv, || format!("#{n} {label}: Quad∞ {hv} vs quadri {cv}"));

        let adj = canonical_bimodule(&alg, BimoduleKind::Adjoint);
        let base = dendriform_of(&adj, &pq);
        let op = if n % 2 == 0 {
            rs.clone()
        } else {
            let d = alg.dim();
            RbsPair::new(rnd::random_matrix(&mut g, d, d), rs.s.clone())?
        };
        let hv = rbs_on_dendinf_defect(&dendinf_from_dendriform(&base, 3)?, &op, 3)?.pass();
        let cv = rbs_on_dendriform_defect(&base, &op)?.iter().all(MultiTensor::is_zero);
        tally(5, cv);
        t.require(hv == cv, || format!("#{n} {label}: system on Dend∞ {hv} vs on dendriform {cv}"));
    }
    let names = ["A∞", "A∞-bimodule", "operators", "Dend∞", "Quad∞", "Dend∞ operators"];
    let summary: Vec<String> = names
        .iter()
        .zip(verdicts)
        .map(|(n, [f, p])| format!("{n} {p}✓/{f}✗"))
        .collect();
    t.note(format!("100 instances per checker ({})", summary.join(", ")));

    // a genuinely graded structure must not be mistaken for a classical one
    let space = GradedSpace::new(vec![(0, vec!["a".into()]), (1, vec!["u".into()])])?;
    let mut m1 = MultiTensor::uniform(1, 2, 2);
    m1.set(&[1], 0, int(1));
    let graded = HomotopyStructure::new(HomotopyKind::Ainf, space, 3, [((1, OpIndex::Plain), m1)])?;
    t.require(rbsys::homotopy::binary_from_homotopy(&graded).is_err(), || "graded input collapsed".into());

    // the two-term builder through arity 3
    let alg = Algebra::from_constants(&["e"], &[rbsys::algebra::c(0, 0, 0, 1)])?;
    let adj = canonical_bimodule(&alg, BimoduleKind::Adjoint);
    let pair = RbsPair::new(Matrix::from_i64(&[&[2]]), Matrix::from_i64(&[&[0]]))?;
    let mut built = 0;
    for (l, mu) in [(0, -2), (0, 0), (2, 0)] {
        for d in [1, 2] {
            let tm = TripleModule::new(adj.clone(), Matrix::from_i64(&[&[l]]), Matrix::from_i64(&[&[mu]]))?;
            let tt = two_term_builder(&alg, &pair, &tm, &tm, &Matrix::from_i64(&[&[d]]), 3)?;
            t.require(homotopy_axiom_defect(&tt.ainf, 3)?.pass(), || format!("two-term ({l},{mu}) d={d}: A∞"));
            let hadj = adjoint_bimodule(&tt.ainf)?;
            let ok = homotopy_grbs_defect(&tt.ainf, &hadj, &tt.pair, 3)?.pass();
            t.require(ok, || format!("two-term ({l},{mu}) d={d}: homotopy system"));
            if ok {
                let dd = dendinf_from_grbs(&tt.ainf, &hadj, &tt.pair, 3)?;
                t.require(homotopy_axiom_defect(&dd, 3)?.pass(), || format!("two-term ({l},{mu}) d={d}: Dend∞"));
            }
            built += 1;
        }
    }
    for _ in 0..10 {
        let inst = rnd::rbs_instance(&mut g);
        let zero = TripleModule::zero(inst.module.clone());
        let id = Matrix::identity(inst.module.dim());
        if let Ok(tt) = two_term_builder(&inst.alg, &inst.pair, &zero, &zero, &id, 3) {
            t.require(homotopy_axiom_defect(&tt.ainf, 3)?.pass(), || format!("two-term over {}: A∞", inst.label));
            let hadj = adjoint_bimodule(&tt.ainf)?;
            t.require(homotopy_grbs_defect(&tt.ainf, &hadj, &tt.pair, 3)?.pass(), || {
                format!("two-term over {}: homotopy system", inst.label)
            });
            built += 1;
        }
    }
    t.note(format!("{built} two-term structures through arity 3"));
    Ok(t)
}

fn determinism() -> Outcome {
    let mut t = Tally::default();
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/models");
    let bin = env!("CARGO_BIN_EXE_rbsys");
    let mut runs = 0;
    let mut entries: Vec<_> = std::fs::read_dir(dir).expect("models").filter_map(|e| e.ok()).map(|e| e.path()).collect();
    entries.sort();
    let cases: Vec<(Command, &str, Options)> = vec![
        (Command::Validate, "", Options::default()),
        (Command::Cohomology, "", Options::default()),
        (Command::Deform, "idempotent_deform", Options { seed: 7, order: Some(3), ..Options::default() }),
        (Command::Homotopy, "two_term", Options::default()),
    ];
    for path in &entries {
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
        let text = std::fs::read_to_string(path).expect("readable model");
        for (cmd, only, opts) in &cases {
            if !only.is_empty() && *only != stem {
                continue;
            }
            let once = run_text(*cmd, &text, opts).map(|r| r.emit(Format::Machine));
            let twice = run_text(*cmd, &text, opts).map(|r| r.emit(Format::Machine));
            match (once, twice) {
                (Ok(a), Ok(b)) => t.require(a == b, || format!("{stem} {cmd}: reports differ")),
                (Err(a), Err(b)) => t.require(a.to_string() == b.to_string(), || format!("{stem} {cmd}: errors differ")),
                _ => t.require(false, || format!("{stem} {cmd}: one run failed")),
            }
            runs += 1;
        }
        let proc = || {
            std::process::Command::new(bin)
                .args(["deform", path.to_str().expect("utf-8 path"), "--seed", "11"])
                .output()
                .expect("binary runs")
        };
        let (a, b) = (proc(), proc());
        t.require(a.stdout == b.stdout && a.status == b.status, || format!("{stem}: binary output differs"));
        runs += 1;
    }
    t.note(format!("{runs} paired runs over {} models", entries.len()));
    Ok(t)
}

fn main() {
    let started = Instant::now();
    let results = [
        run(1, "four-way equivalence", 30, four_way),
        run(2, "derived bracket oracle, antisymmetry, Jacobi", 60, bracket_oracle),
        run(3, "d² = 0, δ_Hoch² = 0, δ_π² = 0, d = (-1)ⁿ δ_Hoch", 60, differentials),
        run(4, "Θ chain map and Θ₁(R,S) = π_M", 30, theta_chain_map),
        run(5, "induced dendriform, dialgebra and quadri structures", 30, induced_structures),
        run(6, "deformation obstructions and extensions", 60, deformation),
        run(7, "skew AYBP against coadjoint systems, nilpotent example", 30, yang_baxter),
        run(8, "perturbation criterion", 60, perturbation),
        run(9, "Jackson q-integral model", 10, jackson),
        run(10, "degree-0 collapse and the two-term builder", 120, homotopy_collapse),
        run(11, "deterministic machine reports", 60, determinism),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {passed}/{} criteria pass in {:.2}s", results.len(), started.elapsed().as_secs_f64());
    if passed != results.len() {
        std::process::exit(1);
    }
}
