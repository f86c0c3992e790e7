use std::fmt;

use crate::error::{Error, Result};
use crate::graph::ImplicitGraph;

/// Which spoke a vertex lies on: a finite spoke of the given length, or the
/// ray.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Spoke {
    Finite(u32),
    Ray,
}

/// `0` is the hub; `Spoke { k, n }` is the `k`-th vertex out along spoke `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FanVertex {
    Hub,
    Spoke { k: u32, n: Spoke },
}

impl fmt::Display for FanVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FanVertex::Hub => write!(f, "0"),
            FanVertex::Spoke { k, n: Spoke::Finite(n) } => write!(f, "({k},{n})"),
            FanVertex::Spoke { k, n: Spoke::Ray } => write!(f, "({k},inf)"),
        }
    }
}

/// Spokes of lengths `1..=N` glued at a hub, optionally with one more spoke
/// standing in for a ray.
///
/// The ray is cut at depth `N + 1`, so `fan_graph(N, true)` is isomorphic to
/// `fan_graph(N + 1, false)` while keeping its own vertex names.
#[derive(Debug, Clone)]
pub struct FanGraph {
    n: u32,
    ray: bool,
}

impl FanGraph {
    pub fn new(n: u32, with_ray: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("fan needs N >= 1".into()));
        }
        Ok(FanGraph { n, ray: with_ray })
    }

    pub fn spokes(&self) -> u32 {
        self.n
    }

    pub fn has_ray(&self) -> bool {
        self.ray
    }

    fn length(&self, s: Spoke) -> u32 {
        match s {
            Spoke::Finite(n) => n,
            Spoke::Ray => self.n + 1,
        }
    }

    fn contains(&self, v: &FanVertex) -> bool {
        match *v {
            FanVertex::Hub => true,
            FanVertex::Spoke { k, n } => {
                let spoke_ok = match n {
                    Spoke::Finite(n) => (1..=self.n).contains(&n),
                    Spoke::Ray => self.ray,
                };
                spoke_ok && k >= 1 && k <= self.length(n)
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        let finite = (self.n as usize) * (self.n as usize + 1) / 2;
        1 + finite + if self.ray { self.n as usize + 1 } else { 0 }
    }
}

impl ImplicitGraph for FanGraph {
    type Vertex = FanVertex;

    fn origin(&self) -> FanVertex {
        FanVertex::Hub
    }

    fn neighbors(&self, v: &FanVertex) -> Vec<FanVertex> {
        match *v {
            FanVertex::Hub => {
                let mut out: Vec<FanVertex> = (1..=self.n)
                    .map(|n| FanVertex::Spoke {
                        k: 1,
                        n: Spoke::Finite(n),
                    })
                    .collect();
                if self.ray {
                    out.push(FanVertex::Spoke { k: 1, n: Spoke::Ray });
                }
                out
            }
            FanVertex::Spoke { k, n } => {
                let inner = if k == 1 {
                    FanVertex::Hub
                } else {
                    FanVertex::Spoke { k: k - 1, n }
                };
                let mut out = vec![inner];
                if k < self.length(n) {
                    out.push(FanVertex::Spoke { k: k + 1, n });
                }
                out
            }
        }
    }

    fn vertex_id(&self, v: &FanVertex) -> String {
        v.to_string()
    }

    fn parse_vertex(&self, text: &str) -> Result<FanVertex> {
        let bad = || Error::InvalidVertex(text.to_string());
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let v = if t == "0" {
            FanVertex::Hub
        } else {
            let inner = t
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(bad)?;
            let (k, n) = inner.split_once(',').ok_or_else(bad)?;
            let k: u32 = k.parse().map_err(|_| bad())?;
            let n = if n == "inf" {
                Spoke::Ray
            } else {
                Spoke::Finite(n.parse().map_err(|_| bad())?)
            };
            FanVertex::Spoke { k, n }
        };
        if self.contains(&v) {
            Ok(v)
        } else {
            Err(bad())
        }
    }

    fn describe(&self) -> String {
        if self.ray {
            format!("fanray:N={}", self.n)
        } else {
            format!("fan:N={}", self.n)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hub_neighbours_and_ids() {
        let g = FanGraph::new(3, true).unwrap();
        let ids: Vec<String> = g.neighbors(&g.origin()).iter().map(|v| g.vertex_id(v)).collect();
        assert_eq!(ids, vec!["(1,1)", "(1,2)", "(1,3)", "(1,inf)"]);
        assert_eq!(g.parse_vertex("(4,inf)").unwrap().to_string(), "(4,inf)");
        assert!(g.parse_vertex("(5,inf)").is_err());
        assert!(g.parse_vertex("(3,2)").is_err());
    }
}
