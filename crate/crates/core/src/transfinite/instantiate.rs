use std::collections::BTreeMap;

use super::element::EtaElement;
use super::recursion::kept_below;
use crate::error::{Error, Result};
use crate::gallery::AbelianCayley;
use crate::graph::ImplicitGraph;
use crate::ordinal::Ordinal;

/// How a truncated `G_η ≅ (ℤ/2)^bits` sits in a bit mask.
#[derive(Debug, Clone)]
enum Layout {
    Trivial,
    /// `G_ξ ⊕ ℤ/2`: the inner level in the low bits, the new bit on top.
    Succ(Box<Layout>),
    /// Kept levels laid out consecutively from bit 0.
    Limit(Vec<(Ordinal, Layout)>),
}

impl Layout {
    fn build(eta: &Ordinal, k: u32, max_bits: usize) -> Result<Layout> {
        let layout = if eta.is_zero() {
            Layout::Trivial
        } else if let Some(xi) = eta.predecessor() {
            Layout::Succ(Box::new(Layout::build(&xi, k, max_bits)?))
        } else {
            let mut parts = Vec::new();
            let mut bits = 0;
            for xi in kept_below(eta, k) {
                let part = Layout::build(&xi, k, max_bits)?;
                bits += part.bits();
                if bits > max_bits {
                    return Err(too_big(max_bits));
                }
                parts.push((xi, part));
            }
            Layout::Limit(parts)
        };
        if layout.bits() > max_bits {
            return Err(too_big(max_bits));
        }
        Ok(layout)
    }

    fn bits(&self) -> usize {
        match self {
            Layout::Trivial => 0,
            Layout::Succ(inner) => inner.bits() + 1,
            Layout::Limit(parts) => parts.iter().map(|(_, p)| p.bits()).sum(),
        }
    }

    fn encode(&self, e: &EtaElement) -> Result<u64> {
        match (self, e) {
            (_, EtaElement::Zero) => Ok(0),
            (Layout::Succ(inner), EtaElement::Pair(g, bit)) => {
                Ok(inner.encode(g)? | (u64::from(*bit) << inner.bits()))
            }
            (Layout::Limit(parts), EtaElement::Support(map)) => {
                let mut out = 0;
                let mut offset = 0;
                let mut used = 0;
                for (xi, part) in parts {
                    if let Some(g) = map.get(xi) {
                        out |= part.encode(g)? << offset;
                        used += 1;
                    }
                    offset += part.bits();
                }
                if used != map.len() {
                    return Err(Error::InvalidElement(format!(
                        "{e} uses a level outside the truncation"
                    )));
                }
                Ok(out)
            }
            _ => Err(Error::InvalidElement(format!("{e} does not fit this level"))),
        }
    }

    fn decode(&self, mask: u64) -> EtaElement {
        match self {
            Layout::Trivial => EtaElement::Zero,
            Layout::Succ(inner) => {
                let low = mask & ((1u64 << inner.bits()) - 1);
                EtaElement::pair(inner.decode(low), mask >> inner.bits() & 1 == 1)
            }
            Layout::Limit(parts) => {
                let mut offset = 0;
                let mut entries = Vec::new();
                for (xi, part) in parts {
                    let width = part.bits();
                    let chunk = (mask >> offset) & ((1u64 << width) - 1);
                    entries.push((xi.clone(), part.decode(chunk)));
                    offset += width;
                }
                EtaElement::support(entries)
            }
        }
    }

    /// Masks of the truncated `S_η`: `S_0 = {0}`,
    /// `S_{ξ+1} = (S_ξ × {0}) ∪ {(0, 1)}`, and a limit level takes every
    /// combination of kept coordinates.
    fn generators(&self, cap: usize) -> Result<Vec<u64>> {
        Ok(match self {
            Layout::Trivial => vec![0],
            Layout::Succ(inner) => {
                let mut out = inner.generators(cap)?;
                out.push(1u64 << inner.bits());
                out
            }
            Layout::Limit(parts) => {
                let mut out = vec![0u64];
                let mut offset = 0;
                for (_, part) in parts {
                    let local = part.generators(cap)?;
                    if out.len().saturating_mul(local.len()) > cap {
                        return Err(Error::BudgetExceeded {
                            what: "generating set size",
                            limit: cap,
                        });
                    }
                    out = out
                        .iter()
                        .flat_map(|&a| local.iter().map(move |&b| a | (b << offset)))
                        .collect();
                    offset += part.bits();
                }
                out
            }
        })
    }
}

fn too_big(max_bits: usize) -> Error {
    Error::BudgetExceeded {
        what: "truncated group order (bits)",
        limit: max_bits,
    }
}

/// `Cay(G_η, S_η)` truncated so that every limit level keeps only the `ξ`
/// with all Cantor-normal-form coefficients below `k`. Vertices are bit
/// masks; the group operation is XOR.
#[derive(Debug, Clone)]
pub struct EtaGraph {
    eta: Ordinal,
    k: u32,
    layout: Layout,
    steps: Vec<u64>,
}

impl EtaGraph {
    /// Fails if the truncated group has more than `budget` elements.
    pub fn new(eta: &Ordinal, k: u32, budget: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidSpec("eta truncation needs k >= 1".into()));
        }
        let max_bits = (usize::BITS - 1 - budget.max(1).leading_zeros()).min(40) as usize;
        let layout = Layout::build(eta, k, max_bits)?;
        let mut steps: Vec<u64> = layout
            .generators(budget)?
            .into_iter()
            .filter(|&s| s != 0)
            .collect();
        steps.sort_unstable();
        steps.dedup();
        Ok(EtaGraph {
            eta: eta.clone(),
            k,
            layout,
            steps,
        })
    }

    pub fn eta(&self) -> &Ordinal {
        &self.eta
    }

    pub fn truncation(&self) -> u32 {
        self.k
    }

    pub fn bits(&self) -> usize {
        self.layout.bits()
    }

    pub fn order(&self) -> u64 {
        1u64 << self.bits()
    }

    pub fn steps(&self) -> &[u64] {
        &self.steps
    }

    pub fn encode(&self, e: &EtaElement) -> Result<u64> {
        e.validate(&self.eta)?;
        self.layout.encode(e)
    }

    pub fn decode(&self, mask: u64) -> EtaElement {
        self.layout.decode(mask)
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order()
    }
}

impl ImplicitGraph for EtaGraph {
    type Vertex = u64;

    fn origin(&self) -> u64 {
        0
    }

    fn neighbors(&self, v: &u64) -> Vec<u64> {
        let mut out: Vec<u64> = self.steps.iter().map(|s| v ^ s).collect();
        out.sort_unstable();
        out
    }

    fn adjacent(&self, u: &u64, v: &u64) -> bool {
        self.steps.binary_search(&(u ^ v)).is_ok()
    }

    fn vertex_id(&self, v: &u64) -> String {
        self.decode(*v).to_string()
    }

    fn parse_vertex(&self, text: &str) -> Result<u64> {
        let e: EtaElement = text.parse()?;
        self.encode(&e)
    }

    fn describe(&self) -> String {
        format!("eta:eta={},k={}", self.eta, self.k)
    }
}

impl AbelianCayley for EtaGraph {
    fn zero(&self) -> u64 {
        0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        a ^ b
    }
    fn neg(&self, a: &u64) -> u64 {
        *a
    }
}

/// Every element of the truncation, as a map from mask to element.
pub fn truncation_elements(g: &EtaGraph) -> BTreeMap<u64, EtaElement> {
    g.elements().map(|m| (m, g.decode(m))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels() {
        let one = EtaGraph::new(&Ordinal::nat(1), 3, 1 << 10).unwrap();
        assert_eq!(one.order(), 2);
        assert_eq!(one.steps(), &[1]);
        let two = EtaGraph::new(&Ordinal::nat(2), 3, 1 << 10).unwrap();
        assert_eq!(two.order(), 4);
        let w = EtaGraph::new(&"w".parse().unwrap(), 3, 1 << 10).unwrap();
        assert_eq!(w.bits(), 3);
        for m in w.elements() {
            assert_eq!(w.encode(&w.decode(m)).unwrap(), m);
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(EtaGraph::new(&Ordinal::nat(7), 3, 64).is_err());
        assert!(EtaGraph::new(&Ordinal::nat(6), 3, 64).is_ok());
    }
}
