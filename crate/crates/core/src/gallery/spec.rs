//! Text specs for graph families, e.g. `basis:M=5` or `wordH:M=4,depth=3`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{
    basis_graph, basis_graph_z, factorial_graph, factorial_quotient_graph, fan_graph,
    hypercube_graph, matched_hn_param, quotient_hn_graph, word_graph_h, word_graph_hz,
};
use crate::error::{Error, Result};
use crate::graph::{ExplicitGraph, ImplicitGraph};
use crate::ordinal::{ExtOrdinal, Ordinal};
use crate::transfinite::EtaGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Hypercube { n: u32 },
    Basis { m: u32 },
    BasisZ { m: u32 },
    Hn { n: u32, m: u32 },
    Factorial { n: u32 },
    FactorialMod { n: u32 },
    Fan { n: u32 },
    FanRay { n: u32 },
    WordH { m: u32, depth: usize },
    WordHz { m: u32, depth: usize },
    Eta { eta: Ordinal, k: u32 },
    Cycle { n: usize },
    Complete { n: usize },
    Path { n: usize },
}

/// Work to run against whichever concrete graph a spec builds.
pub trait GraphTask {
    type Output;
    fn run<G: ImplicitGraph>(self, g: &G) -> Self::Output;
}

impl GraphSpec {
    /// Builds the graph and runs `task` on it. `budget` caps instantiations
    /// that are built eagerly.
    pub fn dispatch<T: GraphTask>(&self, task: T, budget: usize) -> Result<T::Output> {
        Ok(match *self {
            GraphSpec::Hypercube { n } => task.run(&hypercube_graph(n)?),
            GraphSpec::Basis { m } => task.run(&basis_graph(m)?),
            GraphSpec::BasisZ { m } => task.run(&basis_graph_z(m)?),
            GraphSpec::Hn { n, m } => task.run(&quotient_hn_graph(n, m)?),
            GraphSpec::Factorial { n } => task.run(&factorial_graph(n)?),
            GraphSpec::FactorialMod { n } => task.run(&factorial_quotient_graph(n)?),
            GraphSpec::Fan { n } => task.run(&fan_graph(n, false)?),
            GraphSpec::FanRay { n } => task.run(&fan_graph(n, true)?),
            GraphSpec::WordH { m, depth } => task.run(&word_graph_h(m, depth)?),
            GraphSpec::WordHz { m, depth } => task.run(&word_graph_hz(m, depth)?),
            GraphSpec::Eta { ref eta, k } => task.run(&EtaGraph::new(eta, k, budget)?),
            GraphSpec::Cycle { n } => {
                if n < 3 {
                    return Err(Error::InvalidSpec("cycle needs n >= 3".into()));
                }
                task.run(&ExplicitGraph::cycle(n))
            }
            GraphSpec::Complete { n } => {
                if n == 0 {
                    return Err(Error::InvalidSpec("complete needs n >= 1".into()));
                }
                task.run(&ExplicitGraph::complete(n))
            }
            GraphSpec::Path { n } => {
                if n == 0 {
                    return Err(Error::InvalidSpec("path needs n >= 1".into()));
                }
                task.run(&ExplicitGraph::path(n))
            }
        })
    }

    /// Whether the graph has finitely many vertices.
    pub fn is_finite(&self) -> bool {
        !matches!(
            self,
            GraphSpec::BasisZ { .. }
                | GraphSpec::Hn { .. }
                | GraphSpec::Factorial { .. }
                | GraphSpec::WordH { .. }
                | GraphSpec::WordHz { .. }
        )
    }

    pub fn family(&self) -> &'static str {
        match self {
            GraphSpec::Hypercube { .. } => "hypercube",
            GraphSpec::Basis { .. } => "basis",
            GraphSpec::BasisZ { .. } => "basisZ",
            GraphSpec::Hn { .. } => "hn",
            GraphSpec::Factorial { .. } => "factorial",
            GraphSpec::FactorialMod { .. } => "factorialmod",
            GraphSpec::Fan { .. } => "fan",
            GraphSpec::FanRay { .. } => "fanray",
            GraphSpec::WordH { .. } => "wordH",
            GraphSpec::WordHz { .. } => "wordHz",
            GraphSpec::Eta { .. } => "eta",
            GraphSpec::Cycle { .. } => "cycle",
            GraphSpec::Complete { .. } => "complete",
            GraphSpec::Path { .. } => "path",
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.family();
        match self {
            GraphSpec::Hypercube { n }
            | GraphSpec::Factorial { n }
            | GraphSpec::FactorialMod { n }
            | GraphSpec::Fan { n }
            | GraphSpec::FanRay { n } => write!(f, "{name}:N={n}"),
            GraphSpec::Basis { m } | GraphSpec::BasisZ { m } => write!(f, "{name}:M={m}"),
            GraphSpec::Hn { n, m } => write!(f, "{name}:N={n},M={m}"),
            GraphSpec::WordH { m, depth } | GraphSpec::WordHz { m, depth } => {
                write!(f, "{name}:M={m},depth={depth}")
            }
            GraphSpec::Eta { eta, k } => write!(f, "{name}:eta={eta},k={k}"),
            GraphSpec::Cycle { n } | GraphSpec::Complete { n } | GraphSpec::Path { n } => {
                write!(f, "{name}:n={n}")
            }
        }
    }
}

struct Params<'a> {
    spec: &'a str,
    map: BTreeMap<String, String>,
}

impl Params<'_> {
    fn take<T: FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.map.remove(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| {
                Error::InvalidSpec(format!("{}: bad value {v:?} for {key}", self.spec))
            }),
        }
    }

    fn need<T: FromStr>(&mut self, key: &str) -> Result<T> {
        self.take(key)?
            .ok_or_else(|| Error::InvalidSpec(format!("{}: missing {key}", self.spec)))
    }

    fn finish(self) -> Result<()> {
        match self.map.keys().next() {
            None => Ok(()),
            Some(k) => Err(Error::InvalidSpec(format!("{}: unknown parameter {k}", self.spec))),
        }
    }
}

impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut map = BTreeMap::new();
        for part in rest.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::InvalidSpec(format!("{s}: expected key=value, got {part:?}")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut p = Params { spec: s, map };
        let spec = match family {
            "hypercube" => GraphSpec::Hypercube { n: p.need("N")? },
            "basis" => GraphSpec::Basis { m: p.need("M")? },
            "basisZ" => GraphSpec::BasisZ { m: p.need("M")? },
            "hn" => {
                let m: u32 = p.need("M")?;
                let n = p.take("N")?.unwrap_or_else(|| matched_hn_param(m));
                GraphSpec::Hn { n, m }
            }
            "factorial" => GraphSpec::Factorial { n: p.need("N")? },
            "factorialmod" => GraphSpec::FactorialMod { n: p.need("N")? },
            "fan" => GraphSpec::Fan { n: p.need("N")? },
            "fanray" => GraphSpec::FanRay { n: p.need("N")? },
            "wordH" => GraphSpec::WordH {
                m: p.need("M")?,
                depth: p.take("depth")?.unwrap_or(3),
            },
            "wordHz" => GraphSpec::WordHz {
                m: p.need("M")?,
                depth: p.take("depth")?.unwrap_or(3),
            },
            "eta" => {
                let eta: ExtOrdinal = p.need("eta")?;
                let eta = eta
                    .as_ordinal()
                    .cloned()
                    .ok_or_else(|| Error::InvalidSpec("eta must not be INF".into()))?;
                GraphSpec::Eta {
                    eta,
                    k: p.take("k")?.unwrap_or(3),
                }
            }
            "cycle" => GraphSpec::Cycle { n: p.need("n")? },
            "complete" => GraphSpec::Complete { n: p.need("n")? },
            "path" => GraphSpec::Path { n: p.need("n")? },
            other => return Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        };
        p.finish()?;
        Ok(spec)
    }
}

/// Adjusts two family specs so that their balls are comparable radius by
/// radius.
///
/// * `fan` against `fanray`: the fan side gets one more spoke, so that both
///   have the same number of spokes reaching every radius below the cut.
/// * `basis` against `hn`: both sides use the larger of the two `M`s, and
///   `hn` keeps its `N`, clamped to what `M` allows.
///
/// Any other pair is returned unchanged.
pub fn matched_pair(a: &GraphSpec, b: &GraphSpec) -> (GraphSpec, GraphSpec) {
    use GraphSpec::*;
    match (a, b) {
        (Fan { .. }, FanRay { n }) => (Fan { n: n + 1 }, FanRay { n: *n }),
        (FanRay { n }, Fan { .. }) => (FanRay { n: *n }, Fan { n: n + 1 }),
        (Basis { m: ma }, Hn { n, m: mb }) => {
            let m = (*ma).max(*mb);
            (Basis { m }, Hn { n: (*n).min(matched_hn_param(m)), m })
        }
        (Hn { n, m: ma }, Basis { m: mb }) => {
            let m = (*ma).max(*mb);
            (Hn { n: (*n).min(matched_hn_param(m)), m }, Basis { m })
        }
        _ => (a.clone(), b.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for text in [
            "hypercube:N=5",
            "basis:M=6",
            "basisZ:M=6",
            "hn:N=1,M=6",
            "factorial:N=4",
            "factorialmod:N=4",
            "fan:N=8",
            "fanray:N=8",
            "wordH:M=4,depth=3",
            "wordHz:M=4,depth=2",
            "eta:eta=w*2+1,k=2",
            "cycle:n=6",
            "complete:n=4",
            "path:n=3",
        ] {
            let spec: GraphSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(
            "hn:M=5".parse::<GraphSpec>().unwrap(),
            GraphSpec::Hn { n: 1, m: 5 }
        );
        assert!("basis:N=3".parse::<GraphSpec>().is_err());
        assert!("torus:n=3".parse::<GraphSpec>().is_err());
    }

    #[test]
    fn fan_pair_is_matched() {
        let (a, b) = matched_pair(&GraphSpec::Fan { n: 8 }, &GraphSpec::FanRay { n: 8 });
        assert_eq!(a, GraphSpec::Fan { n: 9 });
        assert_eq!(b, GraphSpec::FanRay { n: 8 });
    }
}
