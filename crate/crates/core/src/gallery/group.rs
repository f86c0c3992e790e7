use std::fmt;

use crate::error::{Error, Result};

/// One cyclic factor. `order == 0` means ℤ.
///
/// `index` is the subscript `n` of the basis vector `e_n`; `None` marks the
/// extra ℤ summand of `G ⊕ ℤ`, written `z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Coordinate {
    pub index: Option<u32>,
    pub order: u64,
}

impl Coordinate {
    pub fn name(&self) -> String {
        match self.index {
            Some(n) => format!("e{n}"),
            None => "z".to_string(),
        }
    }

    pub fn reduce(&self, x: i64) -> i64 {
        if self.order == 0 {
            x
        } else {
            x.rem_euclid(self.order as i64)
        }
    }
}

/// A finite direct sum of cyclic groups, one per retained coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianSpec {
    coords: Vec<Coordinate>,
}

/// Element of an [`AbelianSpec`] group, stored densely: entry `i` is the
/// value at coordinate `i`, reduced into `[0, order)` for finite factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement(pub Vec<i64>);

impl AbelianSpec {
    pub fn new(coords: Vec<Coordinate>) -> Result<Self> {
        for c in &coords {
            if c.order == 1 {
                return Err(Error::InvalidSpec("cyclic orders must be 0 or at least 2".into()));
            }
        }
        let mut seen = std::collections::HashSet::new();
        if !coords.iter().all(|c| seen.insert(c.index)) {
            return Err(Error::InvalidSpec("duplicate coordinate".into()));
        }
        Ok(AbelianSpec { coords })
    }

    /// `⊕_{lo ≤ n ≤ hi} ℤ/nℤ`.
    pub fn standard(lo: u32, hi: u32) -> Self {
        let coords = (lo..=hi)
            .map(|n| Coordinate {
                index: Some(n),
                order: n as u64,
            })
            .collect();
        AbelianSpec { coords }
    }

    /// The same group with an extra ℤ summand appended.
    pub fn with_z(mut self) -> Self {
        self.coords.push(Coordinate {
            index: None,
            order: 0,
        });
        self
    }

    /// Coordinates `2..=m` of `G₀/H_N`: coordinate `n` carries `ℤ/k_{N,n}`
    /// with `k = n` below `2N+2`, `k = 0` (so ℤ) at `2N+2` and `k = n−1`
    /// above.
    pub fn quotient_hn(n_param: u32, m: u32) -> Result<Self> {
        let pivot = 2 * n_param + 2;
        if m < pivot {
            return Err(Error::InvalidSpec(format!(
                "hn needs M >= 2N+2 = {pivot}, got M = {m}"
            )));
        }
        let coords = (2..=m)
            .map(|n| {
                let order = match n.cmp(&pivot) {
                    std::cmp::Ordering::Less => n as u64,
                    std::cmp::Ordering::Equal => 0,
                    std::cmp::Ordering::Greater => (n - 1) as u64,
                };
                Coordinate {
                    index: Some(n),
                    order,
                }
            })
            .collect();
        Ok(AbelianSpec { coords })
    }

    pub fn coords(&self) -> &[Coordinate] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.coords.iter().map(|c| c.order).collect()
    }

    pub fn is_finite(&self) -> bool {
        self.coords.iter().all(|c| c.order != 0)
    }

    /// Group order, if finite and representable.
    pub fn order(&self) -> Option<u64> {
        self.coords
            .iter()
            .try_fold(1u64, |acc, c| if c.order == 0 { None } else { acc.checked_mul(c.order) })
    }

    pub fn position(&self, index: Option<u32>) -> Option<usize> {
        self.coords.iter().position(|c| c.index == index)
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.coords.len()])
    }

    /// The basis vector at coordinate position `i`.
    pub fn unit(&self, i: usize) -> GroupElement {
        let mut v = self.zero();
        v.0[i] = self.coords[i].reduce(1);
        v
    }

    pub fn element(&self, values: &[i64]) -> Result<GroupElement> {
        if values.len() != self.coords.len() {
            return Err(Error::InvalidElement(format!(
                "expected {} coordinates, got {}",
                self.coords.len(),
                values.len()
            )));
        }
        Ok(self.reduce(GroupElement(values.to_vec())))
    }

    pub fn reduce(&self, mut g: GroupElement) -> GroupElement {
        for (x, c) in g.0.iter_mut().zip(&self.coords) {
            *x = c.reduce(*x);
        }
        g
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.coords)
                .map(|((x, y), c)| c.reduce(x + y))
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.coords).map(|(x, c)| c.reduce(-x)).collect())
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    /// Every element of a finite group, in increasing order.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        let total = self
            .order()
            .ok_or_else(|| Error::InvalidSpec("group is infinite".into()))?;
        let mut out = Vec::with_capacity(total as usize);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            let mut i = self.coords.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur.0[i] += 1;
                if cur.0[i] < self.coords[i].order as i64 {
                    break;
                }
                cur.0[i] = 0;
            }
        }
    }

    /// Sparse text form: `0`, `e2`, `2e3+e5`, `-z`. Finite coordinates show
    /// their residue in `[0, n)`; ℤ coordinates may be negative.
    pub fn format(&self, g: &GroupElement) -> String {
        let mut out = String::new();
        for (x, c) in g.0.iter().zip(&self.coords) {
            if *x == 0 {
                continue;
            }
            if *x < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let m = x.unsigned_abs();
            if m != 1 {
                out.push_str(&m.to_string());
            }
            out.push_str(&c.name());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn parse(&self, text: &str) -> Result<GroupElement> {
        let bad = || Error::InvalidElement(text.to_string());
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(bad());
        }
        let mut g = self.zero();
        if s == "0" {
            return Ok(g);
        }
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                if bytes[i] == b'-' {
                    sign = -1;
                }
                i += 1;
            } else if i != 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i64 = if i == start {
                1
            } else {
                s[start..i].parse().map_err(|_| bad())?
            };
            let index = match bytes.get(i) {
                Some(b'z') => {
                    i += 1;
                    None
                }
                Some(b'e') => {
                    i += 1;
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    Some(s[start..i].parse::<u32>().map_err(|_| bad())?)
                }
                _ => return Err(bad()),
            };
            let pos = self.position(index).ok_or_else(bad)?;
            g.0[pos] += sign * coef;
        }
        Ok(self.reduce(g))
    }
}

impl fmt::Display for AbelianSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coords
            .iter()
            .map(|c| if c.order == 0 { "Z".into() } else { format!("Z/{}", c.order) })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
