//! The fourteen commands, each turning a document into a [`Report`].

use super::document::{parse_model, DocumentError, ModelDocument, NamedTensor};
use super::report::{Check, Report};
use crate::algebra::{validate_model, Algebra, Bimodule};
use crate::cohomology::{cohomology_dimensions, differential_matrix, Cochain};
use crate::deformation::{deformation_defects, extend_step, obstruction_cocycle, DeformationSeries};
use crate::homotopy::{
    adjoint_bimodule, dendinf_from_grbs, homotopy_axiom_defect, homotopy_grbs_defect, quadinf_from_rbs,
    rbs_on_dendinf_defect, two_term_builder, HomotopyKind, HomotopyStructure, TripleModule,
};
use crate::linalg::scalar::fmt_vector;
use crate::linalg::{linear_solve_suite, Matrix};
use crate::loday::{commuting_rbs_quadri, dialgebra_from_averaging, BinaryStructure};
use crate::rbs::{characterize, gauge_transform, grbs_defect, induce_structures, reduce, GaugeOutcome, RbsPair};
use crate::yang_baxter::{
    aybp_defect, averaging_defect, compatible_prelie, covariant_bialgebra_check, perturbation_check,
    quasitriangular_build, rbs_from_tensors, skew_aybp_grbs_check, AveragingSide, AybpMode, CovariantBialgebra,
    Tensor2, TensorFlavor,
};
use crate::Error;
use sha2::{Digest, Sha256};
use std::fmt;
use std::str::FromStr;
use thiserror::Error as ThisError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    Validate,
    CheckRbs,
    Characterize,
    Induce,
    Gauge,
    Reduce,
    Cohomology,
    Deform,
    Aybp,
    Covariant,
    Perturb,
    Averaging,
    Homotopy,
    Quadri,
}

impl Command {
    pub const ALL: [Command; 14] = [
        Command::Validate,
        Command::CheckRbs,
        Command::Characterize,
        Command::Induce,
        Command::Gauge,
        Command::Reduce,
        Command::Cohomology,
        Command::Deform,
        Command::Aybp,
        Command::Covariant,
        Command::Perturb,
        Command::Averaging,
        Command::Homotopy,
        Command::Quadri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::CheckRbs => "check-rbs",
            Command::Characterize => "characterize",
            Command::Induce => "induce",
            Command::Gauge => "gauge",
            Command::Reduce => "reduce",
            Command::Cohomology => "cohomology",
            Command::Deform => "deform",
            Command::Aybp => "aybp",
            Command::Covariant => "covariant",
            Command::Perturb => "perturb",
            Command::Averaging => "averaging",
            Command::Homotopy => "homotopy",
            Command::Quadri => "quadri",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown command `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Options {
    pub max_degree: Option<usize>,
    pub arity_bound: Option<usize>,
    pub order: Option<usize>,
    pub seed: u64,
    pub mode: Option<String>,
}

/// Everything that ends with exit code 2.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Document(#[from] DocumentError),
    #[error("missing input: {0}")]
    Missing(String),
    #[error("{0}")]
    Compute(#[from] Error),
}

type Out = Result<Report, CliError>;

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Parses `text` and runs `cmd` on it.
pub fn run_text(cmd: Command, text: &str, opts: &Options) -> Out {
    let doc = parse_model(text)?;
    run_command(cmd, &doc, &digest(text), opts)
}

pub fn run_command(cmd: Command, doc: &ModelDocument, digest: &str, opts: &Options) -> Out {
    let mut rep = Report::new(cmd.name(), digest, opts.seed);
    match cmd {
        Command::Validate => validate(doc, &mut rep)?,
        Command::CheckRbs => check_rbs(doc, &mut rep)?,
        Command::Characterize => characterize_cmd(doc, &mut rep)?,
        Command::Induce => induce(doc, &mut rep)?,
        Command::Gauge => gauge(doc, &mut rep)?,
        Command::Reduce => reduce_cmd(doc, &mut rep)?,
        Command::Cohomology => cohomology(doc, opts, &mut rep)?,
        Command::Deform => deform(doc, opts, &mut rep)?,
        Command::Aybp => aybp(doc, opts, &mut rep)?,
        Command::Covariant => covariant(doc, &mut rep)?,
        Command::Perturb => perturb(doc, &mut rep)?,
        Command::Averaging => averaging(doc, opts, &mut rep)?,
        Command::Homotopy => homotopy(doc, opts, &mut rep)?,
        Command::Quadri => quadri(doc, &mut rep)?,
    }
    Ok(rep)
}

type Step = Result<(), CliError>;

const GRBS: &str = "R(u)R(v) = R(R(u)·v + u·S(v)) and S(u)S(v) = S(R(u)·v + u·S(v))";

fn map<'a>(doc: &'a ModelDocument, name: &str, cmd: &str) -> Result<&'a Matrix, CliError> {
    doc.maps
        .get(name)
        .ok_or_else(|| CliError::Missing(format!("[maps.{name}] is required by {cmd}")))
}

fn pair_named(doc: &ModelDocument, r: &str, s: &str, cmd: &str) -> Result<RbsPair, CliError> {
    let pair = RbsPair::new(map(doc, r, cmd)?.clone(), map(doc, s, cmd)?.clone())?;
    pair.check_shape(&doc.algebra, &doc.bimodule)?;
    Ok(pair)
}

fn pair(doc: &ModelDocument, cmd: &str) -> Result<RbsPair, CliError> {
    pair_named(doc, "R", "S", cmd)
}

fn tensor2<'a>(doc: &'a ModelDocument, name: &str, cmd: &str) -> Result<&'a Tensor2, CliError> {
    match doc.tensors.get(name) {
        Some(NamedTensor::Two(t)) => Ok(t),
        Some(NamedTensor::Three(_)) => Err(CliError::Missing(format!("[tensors.{name}] must lie in A⊗A"))),
        None => Err(CliError::Missing(format!("[tensors.{name}] is required by {cmd}"))),
    }
}

fn grbs_check(name: &str, alg: &Algebra, module: &Bimodule, pair: &RbsPair) -> Result<Check, CliError> {
    let w = grbs_defect(alg, module, pair)?.witnesses(module);
    Ok(Check::new(name, GRBS, w))
}

fn axiom_check(name: &str, statement: &str, b: &BinaryStructure) -> Result<Check, CliError> {
    let rep = b.axiom_check()?;
    let w = rep
        .failures
        .iter()
        .map(|(id, [x, y, z])| format!("{id} at ({},{},{})", b.names()[*x], b.names()[*y], b.names()[*z]))
        .collect();
    Ok(Check::new(name, statement, w))
}

fn matrix_rows(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| fmt_vector(m.row(i))).collect();
    format!("[{}]", rows.join("; "))
}

fn validate(doc: &ModelDocument, rep: &mut Report) -> Step {
    let mut modules: Vec<(String, &Bimodule)> = vec![("bimodule".into(), &doc.bimodule)];
    modules.extend(doc.bimodules.iter().map(|(k, m)| (format!("bimodules.{k}"), m)));
    let v = validate_model(&doc.algebra, &doc.bimodule)?;
    rep.check(Check::flag("associative", "(ab)c = a(bc)", v.associative));
    for (label, m) in modules {
        let v = validate_model(&doc.algebra, m)?;
        let w = v.failing_triples.iter().map(|(id, t)| format!("{id:?} {t:?}")).collect();
        rep.check(Check::new(&label, "(ab)u = a(bu), (ua)b = u(ab), (au)b = a(ub)", w));
    }
    rep.datum("dim_A", doc.algebra.dim());
    rep.datum("dim_M", doc.bimodule.dim());
    Ok(())
}

fn check_rbs(doc: &ModelDocument, rep: &mut Report) -> Step {
    let p = pair(doc, "check-rbs")?;
    rep.check(grbs_check("grbs", &doc.algebra, &doc.bimodule, &p)?);
    for (label, m) in [("R", &p.r), ("S", &p.s)] {
        for i in 0..doc.bimodule.dim() {
            rep.datum(format!("{label}({})", doc.bimodule.name(i)), fmt_vector(&m.column(i)));
        }
    }
    Ok(())
}

fn characterize_cmd(doc: &ModelDocument, rep: &mut Report) -> Step {
    let p = pair(doc, "characterize")?;
    let c = characterize(&doc.algebra, &doc.bimodule, &p)?;
    let g = grbs_check("grbs", &doc.algebra, &doc.bimodule, &p)?;
    debug_assert_eq!(g.pass, c.rbs);
    rep.check(g);
    rep.check(Check::flag("graph", "the graph of (R,S) is a subalgebra of (A⊕A)⋉M", c.graph));
    rep.check(Check::flag("nijenhuis", "the lifted operator is Nijenhuis on (A⊕A)⋉M", c.nijenhuis));
    rep.check(Check::flag("maurer_cartan", "⟦(R,S),(R,S)⟧ = 0", c.maurer_cartan));
    rep.check(Check::flag("four_way_agreement", "the four descriptions agree", c.agree()));
    Ok(())
}

/// `R(u ∗ v) = R(u)R(v)` for one operator.
fn morphism_witnesses(alg: &Algebra, star: &BinaryStructure, m: &Matrix, label: &str) -> Vec<String> {
    let d = star.dim();
    let mut w = Vec::new();
    for i in 0..d {
        for j in 0..d {
            let u = crate::linalg::scalar::unit(d, i);
            let v = crate::linalg::scalar::unit(d, j);
            let lhs = m.apply(&star.apply(0, &u, &v));
            let rhs = alg.mul(&m.apply(&u), &m.apply(&v));
            if lhs != rhs {
                w.push(format!("{label}({}∗{}) ≠ {label}({}){label}({})", star.names()[i], star.names()[j], star.names()[i], star.names()[j]));
            }
        }
    }
    w
}

fn induce(doc: &ModelDocument, rep: &mut Report) -> Step {
    let p = pair(doc, "induce")?;
    if !rep.check(grbs_check("grbs", &doc.algebra, &doc.bimodule, &p)?) {
        return Ok(());
    }
    let s = induce_structures(&doc.algebra, &doc.bimodule, &p)?;
    rep.check(axiom_check("dendriform", "u≺v = u·S(v), u≻v = R(u)·v satisfy the three dendriform axioms", &s.dendriform)?);
    rep.check(axiom_check("associative", "u∗v = u≺v + u≻v is associative", &s.associative)?);
    rep.check(axiom_check("prelie", "u⋄v = u≻v - v≺u is left pre-Lie", &s.prelie)?);
    for (label, m) in [("R", &p.r), ("S", &p.s)] {
        let w = morphism_witnesses(&doc.algebra, &s.associative, m, label);
        rep.check(Check::new(&format!("{label}_morphism"), "(M,∗) → A is an algebra map", w));
    }
    Ok(())
}

fn gauge(doc: &ModelDocument, rep: &mut Report) -> Step {
    let p = pair(doc, "gauge")?;
    let b = map(doc, "B", "gauge")?;
    if !rep.check(grbs_check("base_grbs", &doc.algebra, &doc.bimodule, &p)?) {
        return Ok(());
    }
    match gauge_transform(&doc.algebra, &doc.bimodule, &p, b) {
        Err(Error::NotCocycle(w)) => {
            rep.check(Check::new("cocycle", "B is a Hochschild 1-cocycle on A⊕A", vec![w]));
        }
        Err(e) => return Err(e.into()),
        Ok(GaugeOutcome::Inadmissible) => {
            rep.check(Check::flag("cocycle", "B is a Hochschild 1-cocycle on A⊕A", true));
            rep.check(Check::flag("admissible", "id + B∘(R,S) is invertible", false));
        }
        Ok(GaugeOutcome::Transformed(q)) => {
            rep.check(Check::flag("cocycle", "B is a Hochschild 1-cocycle on A⊕A", true));
            rep.check(Check::flag("admissible", "id + B∘(R,S) is invertible", true));
            rep.check(grbs_check("transformed_grbs", &doc.algebra, &doc.bimodule, &q)?);
            rep.datum("R_B", matrix_rows(&q.r));
            rep.datum("S_B", matrix_rows(&q.s));
        }
    }
    Ok(())
}

fn reduce_cmd(doc: &ModelDocument, rep: &mut Report) -> Step {
    let p = pair(doc, "reduce")?;
    let sub = |name: &str| {
        doc.subspaces
            .get(name)
            .ok_or_else(|| CliError::Missing(format!("[subspaces.{name}] is required by reduce")))
    };
    let (b, e, n) = (sub("B")?, sub("E")?, sub("N")?);
    if !rep.check(grbs_check("base_grbs", &doc.algebra, &doc.bimodule, &p)?) {
        return Ok(());
    }
    match reduce(&doc.algebra, &doc.bimodule, &p, b, e, n) {
        Err(Error::Reduction(f)) => {
            rep.check(Check::new("hypotheses", "B, E and N meet the reduction hypotheses", vec![f.to_string()]));
        }
        Err(e) => return Err(e.into()),
        Ok(red) => {
            rep.check(Check::flag("hypotheses", "B, E and N meet the reduction hypotheses", true));
            rep.check(grbs_check("reduced_grbs", &red.quotient, &red.module, &red.pair)?);
            rep.check(Check::flag(
                "compatible",
                "the reduced actions lift to the original ones",
                red.compatible_with(&doc.bimodule, &p),
            ));
            rep.datum("dim_quotient", red.quotient.dim());
            rep.datum("dim_annihilator", red.module.dim());
        }
    }
    Ok(())
}

fn cohomology(doc: &ModelDocument, opts: &Options, rep: &mut Report) -> Step {
    let p = pair(doc, "cohomology")?;
    if !rep.check(grbs_check("grbs", &doc.algebra, &doc.bimodule, &p)?) {
        return Ok(());
    }
    let top = opts.max_degree.unwrap_or(2);
    let dims = cohomology_dimensions(&p, &doc.algebra, &doc.bimodule, top)?;
    rep.datum("max_degree", top);
    let parts: Vec<String> = dims.iter().enumerate().map(|(i, d)| format!("H{i}={d}")).collect();
    rep.lines.push(parts.join(" "));
    Ok(())
}

fn deform(doc: &ModelDocument, opts: &Options, rep: &mut Report) -> Step {
    let (alg, module) = (&doc.algebra, &doc.bimodule);
    let base = pair(doc, "deform")?;
    if !rep.check(grbs_check("base_grbs", alg, module, &base)?) {
        return Ok(());
    }
    let terms = doc
        .series
        .iter()
        .map(|(r, s)| pair_named(doc, r, s, "deform"))
        .collect::<Result<Vec<_>, _>>()?;
    let mut ds = DeformationSeries::new(base.clone(), terms)?;
    let order_witnesses = |ds: &DeformationSeries| -> Result<Vec<String>, CliError> {
        Ok(deformation_defects(ds, alg, module)?
            .iter()
            .enumerate()
            .flat_map(|(n, d)| d.witnesses(module).into_iter().map(move |w| format!("order {n}: {w}")))
            .collect())
    };
    let statement = "Σ_{i+j=n} Rᵢ(u)Rⱼ(v) - Rᵢ(Rⱼ(u)·v + u·Sⱼ(v)) = 0 and the S analogue";
    if !rep.check(Check::new("series", statement, order_witnesses(&ds)?)) {
        return Ok(());
    }
    rep.datum("given_order", ds.order());
    let target = opts.order.unwrap_or(ds.order() + 1);
    let mut g = crate::random::rng(opts.seed);
    while ds.order() < target {
        let next = ds.order() + 1;
        let ob = obstruction_cocycle(&ds, alg, module)?;
        rep.check(Check::flag(&format!("obstruction_{next}_cocycle"), "d(Ob) = 0", ob.is_cocycle));
        match extend_step(&ds, alg, module)? {
            None => {
                rep.datum(format!("extension_{next}"), "obstructed");
                let dim = *cohomology_dimensions(&base, alg, module, 2)?.last().expect("three degrees");
                rep.datum("dim_H2", dim);
                rep.check(Check::flag(
                    &format!("obstruction_{next}_class"),
                    "a non-zero obstruction class needs H² ≠ 0",
                    dim > 0,
                ));
                break;
            }
            Some(x) => {
                // any 1-cocycle may be added; the seed picks one
                let x = if opts.seed == 0 {
                    x
                } else {
                    let d1 = differential_matrix(&base, alg, module, 1)?;
                    let mut v = Cochain::from_pair(&x).flatten(module.dim());
                    for k in linear_solve_suite(&d1, None)?.kernel_basis {
                        crate::linalg::scalar::axpy(&mut v, &crate::random::small_scalar(&mut g), &k);
                    }
                    Cochain::unflatten(&v, 1, alg.dim(), module.dim())?.to_pair().expect("arity one")
                };
                rep.datum(format!("R_{next}"), matrix_rows(&x.r));
                rep.datum(format!("S_{next}"), matrix_rows(&x.s));
                ds = ds.extended(x)?;
                rep.check(Check::new(&format!("extended_{next}"), statement, order_witnesses(&ds)?));
            }
        }
    }
    rep.datum("reached_order", ds.order());
    Ok(())
}

fn mode<'a>(opts: &'a Options, default: &'a str, allowed: &[&str]) -> Result<&'a str, CliError> {
    let m = opts.mode.as_deref().unwrap_or(default);
    if allowed.contains(&m) {
        Ok(m)
    } else {
        Err(CliError::Usage(format!("--mode {m} is not one of {}", allowed.join(", "))))
    }
}

fn aybp(doc: &ModelDocument, opts: &Options, rep: &mut Report) -> Step {
    let alg = &doc.algebra;
    let (r, s) = (tensor2(doc, "r", "aybp")?, tensor2(doc, "s", "aybp")?);
    let m = mode(opts, "aybp", &["aybp", "frobenius"])?;
    let adj = crate::algebra::canonical_bimodule(alg, crate::algebra::BimoduleKind::Adjoint);
    if m == "aybp" {
        let d = aybp_defect(r, s, alg, AybpMode::Aybp)?;
        let ok = rep.check(Check::new(
            "aybp",
            "r13r12 - r12r23 + s23r13 = 0 and s13r12 - s12s23 + s23s13 = 0",
            d.witnesses(alg),
        ));
        if ok {
            let p = rbs_from_tensors(r, s, alg, TensorFlavor::RotaBaxterSystem)?;
            rep.check(grbs_check("sandwich_grbs", alg, &adj, &p)?);
            rep.datum("R", matrix_rows(&p.r));
            rep.datum("S", matrix_rows(&p.s));
        }
        if r.is_skew() && s.is_skew() {
            let k = skew_aybp_grbs_check(r, s, alg)?;
            rep.datum("coadjoint_grbs", k.grbs_pass);
            rep.check(Check::flag("skew_agreement", "for skew r, s: AYBP ⇔ (r♯, s♯) is a system on A*", k.agree()));
        }
    } else {
        let d = aybp_defect(r, s, alg, AybpMode::FrobeniusSeparability)?;
        let ok = rep.check(Check::new(
            "frobenius_separability",
            "r13r12 = r12r23 = s23r13 and s13r12 = s12s23 = s23s13",
            d.witnesses(alg),
        ));
        if ok {
            let p = rbs_from_tensors(r, s, alg, TensorFlavor::LeftAveraging)?;
            let a = averaging_defect(alg, &adj, &p)?;
            let w = a.witnesses(&adj, AveragingSide::Both);
            rep.check(Check::new("sandwich_averaging", "the sandwich pair is a two-sided averaging system", w));
        }
    }
    Ok(())
}

fn bialgebra_of(doc: &ModelDocument, cmd: &str) -> Result<Option<CovariantBialgebra>, CliError> {
    if !doc.maps.contains_key("delta") {
        return Ok(None);
    }
    let cb = CovariantBialgebra::new(
        doc.algebra.clone(),
        map(doc, "delta", cmd)?.clone(),
        map(doc, "delta1", cmd)?.clone(),
        map(doc, "delta2", cmd)?.clone(),
    )?;
    Ok(Some(cb))
}

const BIALGEBRA: &str = "δ₁, δ₂ derivations, Δ coassociative, Δ(ab) = a·δ₁(b) + Δ(a)·b = a·Δ(b) + δ₂(a)·b";

fn covariant(doc: &ModelDocument, rep: &mut Report) -> Step {
    let alg = &doc.algebra;
    let cb = match bialgebra_of(doc, "covariant")? {
        Some(cb) => cb,
        None => {
            let (r, s) = (tensor2(doc, "r", "covariant")?, tensor2(doc, "s", "covariant")?);
            let d = aybp_defect(r, s, alg, AybpMode::Aybp)?;
            if !rep.check(Check::new("aybp", "(r, s) is an associative Yang-Baxter pair", d.witnesses(alg))) {
                return Ok(());
            }
            quasitriangular_build(r, s, alg)?
        }
    };
    let b = covariant_bialgebra_check(&cb);
    rep.check(Check::new("bialgebra", BIALGEBRA, b.witnesses.clone()));
    rep.datum("compatible", b.compatible);
    if b.pass() && b.compatible {
        let p = compatible_prelie(&cb)?;
        rep.check(axiom_check("prelie", "a⋄b = b₍₁₎ a b₍₂₎ is left pre-Lie", &p)?);
    }
    Ok(())
}

fn perturb(doc: &ModelDocument, rep: &mut Report) -> Step {
    let alg = &doc.algebra;
    let cb = bialgebra_of(doc, "perturb")?.unwrap_or_else(|| CovariantBialgebra::zero(alg));
    let (r, s) = (tensor2(doc, "r", "perturb")?, tensor2(doc, "s", "perturb")?);
    let base = covariant_bialgebra_check(&cb);
    if !rep.check(Check::new("base_bialgebra", BIALGEBRA, base.witnesses)) {
        return Ok(());
    }
    let p = perturbation_check(&cb, r, s)?;
    rep.datum("criterion", p.condition_holds);
    rep.check(Check::flag("perturbed_bialgebra", "(A, Δ + Δ̄, δ₁ + δ_r, δ₂ + δ_s) is a covariant bialgebra", p.direct_check));
    rep.check(Check::flag("criterion_agreement", "the tensor criterion decides the perturbation", p.agree()));
    Ok(())
}

fn averaging(doc: &ModelDocument, opts: &Options, rep: &mut Report) -> Step {
    let p = pair(doc, "averaging")?;
    let side = match mode(opts, "both", &["left", "right", "both"])? {
        "left" => AveragingSide::Left,
        "right" => AveragingSide::Right,
        _ => AveragingSide::Both,
    };
    let a = averaging_defect(&doc.algebra, &doc.bimodule, &p)?;
    if side != AveragingSide::Right {
        rep.check(Check::new(
            "left",
            "R(u)R(v) = R(R(u)·v), S(u)S(v) = S(R(u)·v)",
            a.witnesses(&doc.bimodule, AveragingSide::Left),
        ));
    }
    if side != AveragingSide::Left {
        rep.check(Check::new(
            "right",
            "R(u)R(v) = R(u·S(v)), S(u)S(v) = S(u·S(v))",
            a.witnesses(&doc.bimodule, AveragingSide::Right),
        ));
    }
    if side == AveragingSide::Both && a.pass(AveragingSide::Both) {
        let d = dialgebra_from_averaging(&doc.algebra, &doc.bimodule, &p)?;
        rep.check(axiom_check("dialgebra", "u⊣v = u·S(v), u⊢v = R(u)·v satisfy the five dialgebra identities", &d)?);
    }
    Ok(())
}

fn homotopy_check(rep: &mut Report, name: &str, h: &HomotopyStructure, n: usize) -> Result<bool, CliError> {
    let r = homotopy_axiom_defect(h, n)?;
    let statement = match h.kind() {
        HomotopyKind::Ainf => "Σ ± μ_j(…, μ_i(…), …) = 0",
        HomotopyKind::AinfBimodule => "the square-zero extension is A∞",
        HomotopyKind::Dendinf => "the Dend∞ relations with rewritten indices",
        HomotopyKind::Quadinf => "the Quad∞ relations with rewritten index pairs",
    };
    Ok(rep.check(Check::new(name, statement, r.witnesses().cloned().collect())))
}

fn homotopy(doc: &ModelDocument, opts: &Options, rep: &mut Report) -> Step {
    let operator_stmt = "μ_k(Ru₁,…,Ru_k) = R(Σᵢ η_k(Ru₁,…,uᵢ,…,Su_k)) and the S analogue";
    let mut ran = false;
    if let Some(h) = &doc.graded {
        ran = true;
        let n = opts.arity_bound.unwrap_or(h.arity_bound());
        let ok = homotopy_check(rep, h.kind().to_string().as_str(), h, n)?;
        let ops = doc.maps.contains_key("R") && doc.maps.contains_key("S");
        match (h.kind(), &doc.graded_module, ok && ops) {
            (HomotopyKind::Ainf, Some(m), true) => {
                let p = RbsPair::new(map(doc, "R", "homotopy")?.clone(), map(doc, "S", "homotopy")?.clone())?;
                if homotopy_check(rep, "ainf_bimodule", m, n)? {
                    let d = homotopy_grbs_defect(h, m, &p, n)?;
                    if rep.check(Check::new("homotopy_grbs", operator_stmt, d.witnesses().cloned().collect())) {
                        let dend = dendinf_from_grbs(h, m, &p, n)?;
                        homotopy_check(rep, "induced_dendinf", &dend, n)?;
                    }
                }
            }
            (HomotopyKind::Dendinf, _, true) => {
                let p = RbsPair::new(map(doc, "R", "homotopy")?.clone(), map(doc, "S", "homotopy")?.clone())?;
                let d = rbs_on_dendinf_defect(h, &p, n)?;
                if rep.check(Check::new("dendinf_rbs", operator_stmt, d.witnesses().cloned().collect())) {
                    let q = quadinf_from_rbs(h, &p, n)?;
                    homotopy_check(rep, "induced_quadinf", &q, n)?;
                }
            }
            _ => {}
        }
    }
    if let Some(t) = &doc.two_term {
        ran = true;
        let base = pair_named(doc, "R", "S", "homotopy")?;
        let triple = |module: &str, r: &str, s: &str| -> Result<TripleModule, CliError> {
            Ok(TripleModule::new(doc.bimodules[module].clone(), map(doc, r, "homotopy")?.clone(), map(doc, s, "homotopy")?.clone())?)
        };
        let (m, nn) = (triple(&t.m, &t.r_m, &t.s_m)?, triple(&t.n, &t.r_n, &t.s_n)?);
        let bound = opts.arity_bound.unwrap_or(t.arity_bound);
        let built = match two_term_builder(&doc.algebra, &base, &m, &nn, map(doc, &t.d, "homotopy")?, bound) {
            Err(Error::TwoTerm(w)) => {
                rep.check(Check::new("two_term_hypotheses", "the inputs form a morphism of bimodules over (A,R,S)", vec![w]));
                return Ok(());
            }
            other => other?,
        };
        rep.check(Check::flag("two_term_hypotheses", "the inputs form a morphism of bimodules over (A,R,S)", true));
        if homotopy_check(rep, "two_term_ainf", &built.ainf, bound)? {
            let adj = adjoint_bimodule(&built.ainf)?;
            let d = homotopy_grbs_defect(&built.ainf, &adj, &built.pair, bound)?;
            if rep.check(Check::new("two_term_grbs", operator_stmt, d.witnesses().cloned().collect())) {
                let dend = dendinf_from_grbs(&built.ainf, &adj, &built.pair, bound)?;
                homotopy_check(rep, "two_term_dendinf", &dend, bound)?;
            }
        }
    }
    if !ran {
        return Err(CliError::Missing("homotopy needs a [graded] or [two_term] section".into()));
    }
    Ok(())
}

fn quadri(doc: &ModelDocument, rep: &mut Report) -> Step {
    let alg = &doc.algebra;
    let adj = crate::algebra::canonical_bimodule(alg, crate::algebra::BimoduleKind::Adjoint);
    let square = |r: &str, s: &str| -> Result<RbsPair, CliError> {
        let p = RbsPair::new(map(doc, r, "quadri")?.clone(), map(doc, s, "quadri")?.clone())?;
        p.check_shape(alg, &adj)?;
        Ok(p)
    };
    let (pq, rs) = (square("P", "Q")?, square("R", "S")?);
    let a = rep.check(grbs_check("PQ_grbs", alg, &adj, &pq)?);
    let b = rep.check(grbs_check("RS_grbs", alg, &adj, &rs)?);
    if !(a && b) {
        return Ok(());
    }
    let c = commuting_rbs_quadri(alg, &pq, &rs)?;
    rep.check(Check::flag("commute", "P, Q commute with R, S", c.commute));
    rep.check(Check::flag("dendriform_rbs", "(R,S) is a system on the dendriform algebra of (P,Q)", c.dendriform_rbs));
    if let Some(q) = c.quadri {
        rep.check(axiom_check("quadri", "the nine quadri identities", &q)?);
        rep.check(axiom_check("horizontal", "(↖+↙, ↗+↘) is dendriform", &q.horizontal())?);
        rep.check(axiom_check("vertical", "(↖+↗, ↙+↘) is dendriform", &q.vertical())?);
    }
    Ok(())
}

/// `0` when every check passes, `1` otherwise.
pub fn exit_code(rep: &Report) -> i32 {
    if rep.pass() {
        0
    } else {
        1
    }
}
