use super::group::{AbelianSpec, GroupElement};
use super::AbelianCayley;
use crate::error::{Error, Result};
use crate::graph::ImplicitGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorSpec {
    /// Every element with all coordinates in `{−1, 0, 1}`.
    Hypercube,
    /// The basis vectors `e_n`.
    Basis,
    Explicit(Vec<GroupElement>),
}

/// Cayley graph of a finite-rank abelian group.
#[derive(Debug, Clone)]
pub struct CayleyGraph {
    group: AbelianSpec,
    generators: GeneratorSpec,
    /// `S ∪ S⁻¹` without the identity, sorted.
    steps: Vec<GroupElement>,
    name: String,
}

impl CayleyGraph {
    pub fn new(group: AbelianSpec, generators: GeneratorSpec, name: impl Into<String>) -> Self {
        let raw: Vec<GroupElement> = match &generators {
            GeneratorSpec::Hypercube => hypercube_steps(&group),
            GeneratorSpec::Basis => (0..group.rank()).map(|i| group.unit(i)).collect(),
            GeneratorSpec::Explicit(list) => list.iter().map(|g| group.reduce(g.clone())).collect(),
        };
        let zero = group.zero();
        let mut steps: Vec<GroupElement> = raw
            .iter()
            .flat_map(|s| [s.clone(), group.neg(s)])
            .filter(|s| *s != zero)
            .collect();
        steps.sort();
        steps.dedup();
        CayleyGraph {
            group,
            generators,
            steps,
            name: name.into(),
        }
    }

    pub fn group(&self) -> &AbelianSpec {
        &self.group
    }

    pub fn generators(&self) -> &GeneratorSpec {
        &self.generators
    }

    /// The symmetric generating set, identity removed.
    pub fn steps(&self) -> &[GroupElement] {
        &self.steps
    }

    pub fn degree(&self) -> usize {
        self.steps.len()
    }

    pub fn is_basis(&self) -> bool {
        self.generators == GeneratorSpec::Basis
    }
}

fn hypercube_steps(group: &AbelianSpec) -> Vec<GroupElement> {
    let mut out = vec![Vec::new()];
    for _ in 0..group.rank() {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                [-1, 0, 1].into_iter().map(move |x| {
                    let mut p = prefix.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| group.reduce(GroupElement(v)))
        .collect()
}

impl ImplicitGraph for CayleyGraph {
    type Vertex = GroupElement;

    fn origin(&self) -> GroupElement {
        self.group.zero()
    }

    fn neighbors(&self, v: &GroupElement) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = self.steps.iter().map(|s| self.group.add(v, s)).collect();
        out.sort();
        out
    }

    fn adjacent(&self, u: &GroupElement, v: &GroupElement) -> bool {
        self.steps.binary_search(&self.group.sub(v, u)).is_ok()
    }

    fn vertex_id(&self, v: &GroupElement) -> String {
        self.group.format(v)
    }

    fn parse_vertex(&self, text: &str) -> Result<GroupElement> {
        self.group.parse(text)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

impl AbelianCayley for CayleyGraph {
    fn zero(&self) -> GroupElement {
        self.group.zero()
    }
    fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.group.add(a, b)
    }
    fn neg(&self, a: &GroupElement) -> GroupElement {
        self.group.neg(a)
    }
}

/// `⊕_{2≤n≤N} ℤ/nℤ` with the hypercube generators.
pub fn hypercube_graph(n: u32) -> Result<CayleyGraph> {
    if n < 2 {
        return Err(Error::InvalidSpec("hypercube needs N >= 2".into()));
    }
    Ok(CayleyGraph::new(
        AbelianSpec::standard(2, n),
        GeneratorSpec::Hypercube,
        format!("hypercube:N={n}"),
    ))
}

/// `⊕_{2≤n≤M} ℤ/nℤ` with the basis generators.
pub fn basis_graph(m: u32) -> Result<CayleyGraph> {
    if m < 2 {
        return Err(Error::InvalidSpec("basis needs M >= 2".into()));
    }
    Ok(CayleyGraph::new(
        AbelianSpec::standard(2, m),
        GeneratorSpec::Basis,
        format!("basis:M={m}"),
    ))
}

/// `(⊕_{2≤n≤M} ℤ/nℤ) ⊕ ℤ` with the basis generators and the ℤ unit.
pub fn basis_graph_z(m: u32) -> Result<CayleyGraph> {
    if m < 2 {
        return Err(Error::InvalidSpec("basisZ needs M >= 2".into()));
    }
    Ok(CayleyGraph::new(
        AbelianSpec::standard(2, m).with_z(),
        GeneratorSpec::Basis,
        format!("basisZ:M={m}"),
    ))
}

/// `G₀/H_N` restricted to coordinates `2..=M`, with basis generators.
pub fn quotient_hn_graph(n: u32, m: u32) -> Result<CayleyGraph> {
    Ok(CayleyGraph::new(
        AbelianSpec::quotient_hn(n, m)?,
        GeneratorSpec::Basis,
        format!("hn:N={n},M={m}"),
    ))
}
