use super::cayley::{basis_graph, basis_graph_z, quotient_hn_graph, CayleyGraph};
use super::group::GroupElement;
use crate::error::{Error, Result};
use crate::graph::ImplicitGraph;

/// A word whose first letter lies in `G` and whose later letters lie in `G′`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<GroupElement>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> &GroupElement {
        self.0.last().expect("words are non-empty")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRule {
    /// One word is the other followed by `0_{G′}`.
    AppendZero,
    /// The words differ by a generator in their last letter.
    ModifyLast,
}

/// The word graph on `G ∪ G′`, truncated to words of length at most `depth`.
///
/// Only the first and last letters may be zero. Edges either append a zero
/// letter or move the last letter by a generator of its group.
#[derive(Debug, Clone)]
pub struct WordGraph {
    first: CayleyGraph,
    rest: CayleyGraph,
    depth: usize,
    name: String,
}

impl WordGraph {
    pub fn new(first: CayleyGraph, rest: CayleyGraph, depth: usize, name: impl Into<String>) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidSpec("word graphs need depth >= 1".into()));
        }
        Ok(WordGraph {
            first,
            rest,
            depth,
            name: name.into(),
        })
    }

    pub fn first_letters(&self) -> &CayleyGraph {
        &self.first
    }

    pub fn later_letters(&self) -> &CayleyGraph {
        &self.rest
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    fn letters(&self, position: usize) -> &CayleyGraph {
        if position == 0 {
            &self.first
        } else {
            &self.rest
        }
    }

    /// `[0_G]`.
    pub fn root_word(&self) -> Word {
        Word(vec![self.first.origin()])
    }

    /// `[0_G; 0_{G′}]`.
    pub fn second_word(&self) -> Word {
        Word(vec![self.first.origin(), self.rest.origin()])
    }

    pub fn is_valid(&self, w: &Word) -> bool {
        if w.is_empty() || w.len() > self.depth {
            return false;
        }
        let zero = self.rest.origin();
        w.0.iter()
            .enumerate()
            .skip(1)
            .all(|(i, x)| x.0.len() == zero.0.len() && (i + 1 == w.len() || *x != zero))
            && w.0[0].0.len() == self.first.origin().0.len()
    }

    pub(crate) fn modify_last(&self, w: &Word) -> Vec<Word> {
        let pos = w.len() - 1;
        let g = self.letters(pos);
        g.neighbors(w.last())
            .into_iter()
            .map(|x| {
                let mut v = w.0.clone();
                v[pos] = x;
                Word(v)
            })
            .collect()
    }

    fn append_zero(&self, w: &Word) -> Option<Word> {
        let zero = self.rest.origin();
        if w.len() < self.depth && (w.len() == 1 || *w.last() != zero) {
            let mut v = w.0.clone();
            v.push(zero);
            Some(Word(v))
        } else {
            None
        }
    }

    fn drop_zero(&self, w: &Word) -> Option<Word> {
        if w.len() >= 2 && *w.last() == self.rest.origin() {
            Some(Word(w.0[..w.len() - 1].to_vec()))
        } else {
            None
        }
    }

    /// Which rule makes `{u, v}` an edge, if any.
    pub fn edge_kind(&self, u: &Word, v: &Word) -> Option<EdgeRule> {
        if self.append_zero(u).as_ref() == Some(v) || self.append_zero(v).as_ref() == Some(u) {
            return Some(EdgeRule::AppendZero);
        }
        if u.len() == v.len() && u.0[..u.len() - 1] == v.0[..v.len() - 1] {
            let g = self.letters(u.len() - 1);
            if g.adjacent(u.last(), v.last()) {
                return Some(EdgeRule::ModifyLast);
            }
        }
        None
    }
}

impl ImplicitGraph for WordGraph {
    type Vertex = Word;

    fn origin(&self) -> Word {
        self.root_word()
    }

    fn neighbors(&self, w: &Word) -> Vec<Word> {
        let mut out = self.modify_last(w);
        out.extend(self.append_zero(w));
        out.extend(self.drop_zero(w));
        out.sort();
        out
    }

    fn adjacent(&self, u: &Word, v: &Word) -> bool {
        self.edge_kind(u, v).is_some()
    }

    fn vertex_id(&self, w: &Word) -> String {
        let parts: Vec<String> = w
            .0
            .iter()
            .enumerate()
            .map(|(i, x)| self.letters(i).vertex_id(x))
            .collect();
        format!("[{}]", parts.join(";"))
    }

    fn parse_vertex(&self, text: &str) -> Result<Word> {
        let bad = || Error::InvalidVertex(text.to_string());
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(bad)?;
        let letters = inner
            .split(';')
            .enumerate()
            .map(|(i, s)| self.letters(i).parse_vertex(s))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| bad())?;
        let w = Word(letters);
        if self.is_valid(&w) {
            Ok(w)
        } else {
            Err(bad())
        }
    }

    fn describe(&self) -> String {
        self.name.clone()
    }
}

/// The word graph with only the last-letter edges kept. Its components are
/// copies of `Cay(G, S)` and `Cay(G′, S′)`.
#[derive(Debug, Clone, Copy)]
pub struct ModifyLastOnly<'a>(pub &'a WordGraph);

impl ImplicitGraph for ModifyLastOnly<'_> {
    type Vertex = Word;

    fn origin(&self) -> Word {
        self.0.origin()
    }

    fn neighbors(&self, w: &Word) -> Vec<Word> {
        let mut out = self.0.modify_last(w);
        out.sort();
        out
    }

    fn vertex_id(&self, w: &Word) -> String {
        self.0.vertex_id(w)
    }

    fn parse_vertex(&self, text: &str) -> Result<Word> {
        self.0.parse_vertex(text)
    }

    fn describe(&self) -> String {
        format!("{} (last-letter edges only)", self.0.describe())
    }
}

/// The default `N` for a given `M` in the matched `G′` realisation: the
/// largest one the truncation to coordinates `2..=M` admits.
pub fn matched_hn_param(m: u32) -> u32 {
    (m.max(2) - 2) / 2
}

/// Word graph with `G = basis(M)` and `G′` realised as `G₀/H_N` on the same
/// coordinates, `N` as large as `M` allows. These realisations have
/// isomorphic balls of radius `N`.
pub fn word_graph_h(m: u32, depth: usize) -> Result<WordGraph> {
    WordGraph::new(
        basis_graph(m)?,
        quotient_hn_graph(matched_hn_param(m), m)?,
        depth,
        format!("wordH:M={m},depth={depth}"),
    )
}

/// Word graph with `G = basis(M)` and `G′ = basisZ(M)` taken literally.
pub fn word_graph_hz(m: u32, depth: usize) -> Result<WordGraph> {
    WordGraph::new(
        basis_graph(m)?,
        basis_graph_z(m)?,
        depth,
        format!("wordHz:M={m},depth={depth}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rule_examples() {
        let h = word_graph_h(4, 3).unwrap();
        let a = h.parse_vertex("[0]").unwrap();
        let b = h.parse_vertex("[0;0]").unwrap();
        let c = h.parse_vertex("[e2]").unwrap();
        assert_eq!(h.edge_kind(&a, &b), Some(EdgeRule::AppendZero));
        assert_eq!(h.edge_kind(&a, &c), Some(EdgeRule::ModifyLast));
        assert!(h.parse_vertex("[0;0;e2]").is_err());
        assert!(h.parse_vertex("[0;e2;0]").is_ok());
        let hz = word_graph_hz(4, 3).unwrap();
        let d = hz.parse_vertex("[0;z]").unwrap();
        let b = hz.parse_vertex("[0;0]").unwrap();
        assert_eq!(hz.edge_kind(&b, &d), Some(EdgeRule::ModifyLast));
    }
}
