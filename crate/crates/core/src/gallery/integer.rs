use super::AbelianCayley;
use crate::error::{Error, Result};
use crate::graph::ImplicitGraph;

/// Cayley graph of ℤ, or of ℤ/mℤ when `modulus` is set. Vertices are plain
/// integers (residues in `[0, m)` in the cyclic case).
#[derive(Debug, Clone)]
pub struct IntegerCayley {
    modulus: Option<i64>,
    steps: Vec<i64>,
    name: String,
}

impl IntegerCayley {
    pub fn new(modulus: Option<i64>, generators: &[i64], name: impl Into<String>) -> Result<Self> {
        if modulus.is_some_and(|m| m < 2) {
            return Err(Error::InvalidSpec("modulus must be at least 2".into()));
        }
        let reduce = |x: i64| modulus.map_or(x, |m| x.rem_euclid(m));
        let mut steps: Vec<i64> = generators
            .iter()
            .flat_map(|&s| [reduce(s), reduce(-s)])
            .filter(|&s| s != 0)
            .collect();
        steps.sort_unstable();
        steps.dedup();
        Ok(IntegerCayley {
            modulus,
            steps,
            name: name.into(),
        })
    }

    pub fn modulus(&self) -> Option<i64> {
        self.modulus
    }

    pub fn steps(&self) -> &[i64] {
        &self.steps
    }

    fn reduce(&self, x: i64) -> i64 {
        self.modulus.map_or(x, |m| x.rem_euclid(m))
    }
}

impl ImplicitGraph for IntegerCayley {
    type Vertex = i64;

    fn origin(&self) -> i64 {
        0
    }

    fn neighbors(&self, v: &i64) -> Vec<i64> {
        let mut out: Vec<i64> = self.steps.iter().map(|s| self.reduce(v + s)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn adjacent(&self, u: &i64, v: &i64) -> bool {
        u != v && self.steps.binary_search(&self.reduce(v - u)).is_ok()
    }

    fn vertex_id(&self, v: &i64) -> String {
        v.to_string()
    }

    fn parse_vertex(&self, text: &str) -> Result<i64> {
        let v: i64 = text
            .trim()
            .parse()
            .map_err(|_| Error::InvalidVertex(text.to_string()))?;
        if self.modulus.is_some_and(|m| !(0..m).contains(&v)) {
            return Err(Error::InvalidVertex(text.to_string()));
        }
        Ok(v)
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

impl AbelianCayley for IntegerCayley {
    fn zero(&self) -> i64 {
        0
    }
    fn add(&self, a: &i64, b: &i64) -> i64 {
        self.reduce(a + b)
    }
    fn neg(&self, a: &i64) -> i64 {
        self.reduce(-a)
    }
}

pub fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

/// Every non-zero `Σ_{1≤n≤N} ε_n n!` with `ε_n ∈ {−1, 0, 1}`, sorted.
pub fn factorial_sums(n: u32) -> Vec<i64> {
    let mut sums = vec![0i64];
    for k in 1..=n {
        let f = factorial(k);
        sums = sums
            .iter()
            .flat_map(|&s| [s - f, s, s + f])
            .collect();
    }
    sums.retain(|&s| s != 0);
    sums.sort_unstable();
    sums.dedup();
    sums
}

/// ℤ with the factorial-sum generators up to `N!`.
pub fn factorial_graph(n: u32) -> Result<IntegerCayley> {
    if n == 0 || n > 20 {
        return Err(Error::InvalidSpec("factorial needs 1 <= N <= 20".into()));
    }
    IntegerCayley::new(None, &factorial_sums(n), format!("factorial:N={n}"))
}

/// `Cay(ℤ/N!ℤ, π(S))`, the image of the factorial generators modulo `N!`.
pub fn factorial_quotient_graph(n: u32) -> Result<IntegerCayley> {
    if !(2..=12).contains(&n) {
        return Err(Error::InvalidSpec("factorialmod needs 2 <= N <= 12".into()));
    }
    IntegerCayley::new(
        Some(factorial(n)),
        &factorial_sums(n),
        format!("factorialmod:N={n}"),
    )
}
