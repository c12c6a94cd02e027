use crate::error::{Error, Result};
use crate::linalg::{Matrix, MultiTensor};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// A finite graded space with one degree per basis vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    degrees: Vec<i64>,
    names: Vec<String>,
}

impl GradedSpace {
    /// From blocks `(degree, names)`; basis order follows the blocks.
    pub fn new(blocks: Vec<(i64, Vec<String>)>) -> Result<Self> {
        let mut degrees = Vec::new();
        let mut names = Vec::new();
        for (d, ns) in blocks {
            degrees.extend(std::iter::repeat(d).take(ns.len()));
            names.extend(ns);
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::Precondition(format!("basis name `{dup}` repeated")));
        }
        Ok(GradedSpace { degrees, names })
    }

    /// Everything in degree 0.
    pub fn concentrated(names: &[String]) -> Self {
        GradedSpace {
            degrees: vec![0; names.len()],
            names: names.to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_concentrated_in_zero(&self) -> bool {
        self.degrees.iter().all(|&d| d == 0)
    }

    /// `(degree, dimension)` in increasing degree.
    pub fn blocks(&self) -> Vec<(i64, usize)> {
        let mut counts = BTreeMap::new();
        for &d in &self.degrees {
            *counts.entry(d).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Basis of `self` followed by basis of `other`.
    pub fn direct_sum(&self, other: &GradedSpace) -> GradedSpace {
        GradedSpace {
            degrees: [self.degrees.as_slice(), other.degrees.as_slice()].concat(),
            names: [self.names.as_slice(), other.names.as_slice()].concat(),
        }
    }

    /// Refuses a map `self → target` (row = output) that moves degree.
    pub fn check_degree_zero(&self, target: &GradedSpace, m: &Matrix, label: &str) -> Result<()> {
        if (m.rows(), m.cols()) != (target.dim(), self.dim()) {
            return crate::error::dim_err(format!("{label} must be {}×{}", target.dim(), self.dim()));
        }
        for o in 0..m.rows() {
            for b in 0..m.cols() {
                if !m[(o, b)].is_zero() && target.degree(o) != self.degree(b) {
                    return Err(Error::Degree(format!(
                        "{label} sends {} (degree {}) to {} (degree {})",
                        self.name(b),
                        self.degree(b),
                        target.name(o),
                        target.degree(o)
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HomotopyKind {
    Ainf,
    AinfBimodule,
    Dendinf,
    Quadinf,
}

impl fmt::Display for HomotopyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HomotopyKind::Ainf => "ainf",
            HomotopyKind::AinfBimodule => "ainf_bimodule",
            HomotopyKind::Dendinf => "dendinf",
            HomotopyKind::Quadinf => "quadinf",
        })
    }
}

impl std::str::FromStr for HomotopyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ainf" => HomotopyKind::Ainf,
            "ainf_bimodule" => HomotopyKind::AinfBimodule,
            "dendinf" => HomotopyKind::Dendinf,
            "quadinf" => HomotopyKind::Quadinf,
            other => return Err(Error::Precondition(format!("unknown homotopy kind `{other}`"))),
        })
    }
}

/// Which operation of a given arity; all positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpIndex {
    /// `μ_k` of an A∞-algebra.
    Plain,
    /// `η_k` with the module argument in this slot.
    Slot(usize),
    /// `μ_{k,[r]}`.
    Dend(usize),
    /// `μ_{k,([r],[s])}`.
    Quad(usize, usize),
}

impl OpIndex {
    /// All indices a structure of `kind` carries at arity `k`.
    pub fn all(kind: HomotopyKind, k: usize) -> Vec<OpIndex> {
        match kind {
            HomotopyKind::Ainf => vec![OpIndex::Plain],
            HomotopyKind::AinfBimodule => (1..=k).map(OpIndex::Slot).collect(),
            HomotopyKind::Dendinf => (1..=k).map(OpIndex::Dend).collect(),
            HomotopyKind::Quadinf => (1..=k)
                .flat_map(|r| (1..=k).map(move |s| OpIndex::Quad(r, s)))
                .collect(),
        }
    }

    fn fits(&self, kind: HomotopyKind, k: usize) -> bool {
        let ok = |r: usize| (1..=k).contains(&r);
        match (kind, self) {
            (HomotopyKind::Ainf, OpIndex::Plain) => true,
            (HomotopyKind::AinfBimodule, OpIndex::Slot(p)) => ok(*p),
            (HomotopyKind::Dendinf, OpIndex::Dend(r)) => ok(*r),
            (HomotopyKind::Quadinf, OpIndex::Quad(r, s)) => ok(*r) && ok(*s),
            _ => false,
        }
    }
}

impl fmt::Display for OpIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpIndex::Plain => f.write_str("-"),
            OpIndex::Slot(p) => write!(f, "slot{p}"),
            OpIndex::Dend(r) => write!(f, "[{r}]"),
            OpIndex::Quad(r, s) => write!(f, "([{r}],[{s}])"),
        }
    }
}

/// Reads back the [`Display`](fmt::Display) form.
impl std::str::FromStr for OpIndex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("malformed operation index `{s}`"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        fn bracketed(t: &str) -> Option<&str> {
            t.trim().strip_prefix('[')?.strip_suffix(']')
        }
        let s = s.trim();
        if s == "-" {
            Ok(OpIndex::Plain)
        } else if let Some(p) = s.strip_prefix("slot") {
            Ok(OpIndex::Slot(num(p)?))
        } else if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let (r, q) = inner.split_once(',').ok_or_else(bad)?;
            Ok(OpIndex::Quad(num(bracketed(r).ok_or_else(bad)?)?, num(bracketed(q).ok_or_else(bad)?)?))
        } else {
            Ok(OpIndex::Dend(num(bracketed(s).ok_or_else(bad)?)?))
        }
    }
}

/// Operations `μ_k` (or `η_k`) for `k ≤ arity_bound`; absent ones are zero.
///
/// A bimodule carries the A∞-algebra it lives over, its `space` is the
/// module, and `η_k` at `Slot(p)` reads the module in slot `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyStructure {
    kind: HomotopyKind,
    space: GradedSpace,
    arity_bound: usize,
    ops: BTreeMap<(usize, OpIndex), MultiTensor>,
    over: Option<Box<HomotopyStructure>>,
}

impl HomotopyStructure {
    /// An A∞, Dend∞ or Quad∞ structure on `space`.
    pub fn new(
        kind: HomotopyKind,
        space: GradedSpace,
        arity_bound: usize,
        ops: impl IntoIterator<Item = ((usize, OpIndex), MultiTensor)>,
    ) -> Result<Self> {
        if kind == HomotopyKind::AinfBimodule {
            return Err(Error::Precondition("bimodules are built with HomotopyStructure::bimodule".into()));
        }
        Self::assemble(kind, space, arity_bound, ops, None)
    }

    /// An A∞-bimodule `module` over the A∞-algebra `over`.
    pub fn bimodule(
        over: HomotopyStructure,
        module: GradedSpace,
        arity_bound: usize,
        ops: impl IntoIterator<Item = ((usize, OpIndex), MultiTensor)>,
    ) -> Result<Self> {
        if over.kind != HomotopyKind::Ainf {
            return Err(Error::Precondition("a bimodule lives over an A∞-algebra".into()));
        }
        Self::assemble(HomotopyKind::AinfBimodule, module, arity_bound, ops, Some(Box::new(over)))
    }

    fn assemble(
        kind: HomotopyKind,
        space: GradedSpace,
        arity_bound: usize,
        ops: impl IntoIterator<Item = ((usize, OpIndex), MultiTensor)>,
        over: Option<Box<HomotopyStructure>>,
    ) -> Result<Self> {
        let mut h = HomotopyStructure {
            kind,
            space,
            arity_bound,
            ops: BTreeMap::new(),
            over,
        };
        for ((k, idx), t) in ops {
            if k == 0 || k > arity_bound {
                return Err(Error::IndexRange(format!("arity {k} outside 1..={arity_bound}")));
            }
            if !idx.fits(kind, k) {
                return Err(Error::IndexRange(format!("{idx} is not an index of a {kind} at arity {k}")));
            }
            let (inputs, output) = h.slot_spaces(k, &idx);
            let dims: Vec<usize> = inputs.iter().map(|s| s.dim()).collect();
            if t.input_dims() != dims.as_slice() || t.output_dim() != output.dim() {
                return crate::error::dim_err(format!("μ_{k}{idx} has the wrong shape"));
            }
            check_homogeneous(&t, &inputs, output, k, &idx)?;
            if !t.is_zero() {
                h.ops.insert((k, idx), t);
            }
        }
        Ok(h)
    }

    /// Input spaces and output space of the operation `(k, idx)`.
    pub(crate) fn slot_spaces(&self, k: usize, idx: &OpIndex) -> (Vec<&GradedSpace>, &GradedSpace) {
        match (&self.over, idx) {
            (Some(alg), OpIndex::Slot(p)) => {
                let inputs = (1..=k).map(|q| if q == *p { &self.space } else { &alg.space }).collect();
                (inputs, &self.space)
            }
            _ => (vec![&self.space; k], &self.space),
        }
    }

    pub fn kind(&self) -> HomotopyKind {
        self.kind
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn arity_bound(&self) -> usize {
        self.arity_bound
    }

    /// The A∞-algebra under a bimodule.
    pub fn over(&self) -> Option<&HomotopyStructure> {
        self.over.as_deref()
    }

    pub fn op(&self, k: usize, idx: &OpIndex) -> Option<&MultiTensor> {
        self.ops.get(&(k, *idx))
    }

    /// The operation as a tensor, zero when absent.
    pub fn op_or_zero(&self, k: usize, idx: &OpIndex) -> MultiTensor {
        self.op(k, idx).cloned().unwrap_or_else(|| {
            let (inputs, output) = self.slot_spaces(k, idx);
            MultiTensor::zero(inputs.iter().map(|s| s.dim()).collect(), output.dim())
        })
    }

    /// Non-zero operations in key order.
    pub fn ops(&self) -> impl Iterator<Item = (&(usize, OpIndex), &MultiTensor)> {
        self.ops.iter()
    }

    /// The same operations under a different truncation bound.
    pub fn with_arity_bound(&self, bound: usize) -> Result<Self> {
        if let Some(((k, _), _)) = self.ops.iter().find(|((k, _), _)| *k > bound) {
            return Err(Error::Truncation {
                requested: *k,
                bound,
            });
        }
        let mut out = self.clone();
        out.arity_bound = bound;
        Ok(out)
    }
}

fn check_homogeneous(t: &MultiTensor, inputs: &[&GradedSpace], output: &GradedSpace, k: usize, idx: &OpIndex) -> Result<()> {
    let shift = k as i64 - 2;
    for (tuple, v) in t.entries() {
        let d: i64 = tuple.iter().zip(inputs).map(|(&i, s)| s.degree(i)).sum::<i64>() + shift;
        if let Some(o) = (0..v.len()).find(|&o| !v[o].is_zero() && output.degree(o) != d) {
            let args: Vec<&str> = tuple.iter().zip(inputs).map(|(&i, s)| s.name(i)).collect();
            return Err(Error::Degree(format!(
                "μ_{k}{idx}({}) has a component on {} (degree {}), expected degree {d}",
                args.join(","),
                output.name(o),
                output.degree(o)
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::scalar::int;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn blocks_and_degrees() {
        let g = GradedSpace::new(vec![(1, names(&["u"])), (0, names(&["a", "b"]))]).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(g.blocks(), vec![(0, 2), (1, 1)]);
        assert!(GradedSpace::new(vec![(0, names(&["a", "a"]))]).is_err());
    }

    #[test]
    fn inhomogeneous_tables_are_refused() {
        let g = GradedSpace::new(vec![(0, names(&["a"])), (1, names(&["u"]))]).unwrap();
        // μ_1 has degree -1: u ↦ a is fine, a ↦ u is not
        let mut good = MultiTensor::uniform(1, 2, 2);
        good.set(&[1], 0, int(1));
        assert!(HomotopyStructure::new(HomotopyKind::Ainf, g.clone(), 2, [((1, OpIndex::Plain), good)]).is_ok());
        let mut bad = MultiTensor::uniform(1, 2, 2);
        bad.set(&[0], 1, int(1));
        let err = HomotopyStructure::new(HomotopyKind::Ainf, g.clone(), 2, [((1, OpIndex::Plain), bad)]);
        assert!(matches!(err, Err(Error::Degree(_))));
        let idx = HomotopyStructure::new(HomotopyKind::Dendinf, g, 2, [((2, OpIndex::Dend(3)), MultiTensor::uniform(2, 2, 2))]);
        assert!(matches!(idx, Err(Error::IndexRange(_))));
    }
}
