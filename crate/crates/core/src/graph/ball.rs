use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallVertex {
    pub id: String,
    pub dist: usize,
}

/// A finite rooted graph whose vertices carry their distance to the root.
///
/// Index 0 is the root. Vertices are sorted by `(dist, id)` and edges are
/// index pairs `(i, j)` with `i < j`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedBall {
    radius: usize,
    vertices: Vec<BallVertex>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct BallRepr {
    radius: usize,
    root: usize,
    vertices: Vec<BallVertex>,
    edges: Vec<[usize; 2]>,
}

impl RootedBall {
    pub(crate) fn from_sorted(
        radius: usize,
        vertices: Vec<(String, usize)>,
        edges: Vec<(usize, usize)>,
    ) -> Self {
        let vertices: Vec<BallVertex> = vertices
            .into_iter()
            .map(|(id, dist)| BallVertex { id, dist })
            .collect();
        let adj = adjacency(vertices.len(), &edges);
        RootedBall {
            radius,
            vertices,
            edges,
            adj,
        }
    }

    /// Builds a ball from raw parts, recomputing distances from vertex 0 and
    /// putting vertices in canonical `(dist, id)` order.
    ///
    /// Fails if the parts do not describe a connected graph of radius at
    /// most `radius` around vertex 0.
    pub fn new(radius: usize, ids: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = ids.len();
        if n == 0 {
            return Err(Error::InvalidSpec("a ball needs a root".into()));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidSpec(format!("bad edge ({a}, {b})")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        norm.dedup();
        let adj = adjacency(n, &norm);
        let dist = bfs_dist(&adj, 0);
        if dist.iter().any(|d| d.is_none_or(|d| d > radius)) {
            return Err(Error::InvalidSpec(
                "ball is disconnected or exceeds its radius".into(),
            ));
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| (dist[a], &ids[a]).cmp(&(dist[b], &ids[b])));
        let mut pos = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut edges: Vec<(usize, usize)> = norm
            .iter()
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        edges.sort_unstable();
        let vertices = order
            .iter()
            .map(|&old| (ids[old].clone(), dist[old].unwrap()))
            .collect();
        Ok(Self::from_sorted(radius, vertices, edges))
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[BallVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    pub fn dist(&self, i: usize) -> usize {
        self.vertices[i].dist
    }

    pub fn id(&self, i: usize) -> &str {
        &self.vertices[i].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    /// Whether some vertex sits on the boundary sphere, so that edges leaving
    /// the ball may be missing.
    pub fn touches_boundary(&self) -> bool {
        self.vertices.iter().any(|v| v.dist >= self.radius)
    }

    pub fn to_json(&self) -> String {
        let repr = BallRepr {
            radius: self.radius,
            root: 0,
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&repr).expect("ball serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let repr: BallRepr =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        if repr.root != 0 {
            return Err(Error::InvalidSpec("root must be vertex 0".into()));
        }
        let ball = Self::new(
            repr.radius,
            repr.vertices.iter().map(|v| v.id.clone()).collect(),
            &repr.edges.iter().map(|e| (e[0], e[1])).collect::<Vec<_>>(),
        )?;
        let given: Vec<usize> = repr.vertices.iter().map(|v| v.dist).collect();
        let mut sorted = given.clone();
        sorted.sort_unstable();
        if sorted != ball.vertices.iter().map(|v| v.dist).collect::<Vec<_>>() {
            return Err(Error::InvalidSpec("dist annotations disagree with the edges".into()));
        }
        Ok(ball)
    }

    /// Graphviz rendering. `title` goes into a leading comment.
    pub fn to_dot(&self, title: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph ball {{");
        let _ = writeln!(out, "  // {title}, radius {}", self.radius);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}\", dist={}];",
                v.id.replace('\\', "\\\\").replace('"', "\\\""),
                v.dist
            );
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -- n{b};");
        }
        out.push_str("}\n");
        out
    }
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    adj
}

fn bfs_dist(adj: &[Vec<usize>], root: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[root] = Some(0);
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in &adj[v] {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}
