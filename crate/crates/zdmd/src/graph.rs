//! Simple undirected graphs with dense integer vertex ids.
//!
//! Vertices are `0..n`; labels are an optional layer on top so that the
//! algorithms stay index-based. All constructors and mutators maintain the
//! structural invariants: no self-loops, symmetric adjacency, all neighbor
//! ids in range.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

/// Dense vertex id in `0..vertex_count`.
pub type VertexId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: VertexId, n: usize },
    #[error("self-loop at vertex {v} rejected")]
    SelfLoop { v: VertexId },
    #[error("({u}, {v}) is not an edge")]
    NotAnEdge { u: VertexId, v: VertexId },
    #[error("not a tree (must be connected and acyclic)")]
    NotATree,
    #[error("the leg formula does not apply to path graphs")]
    PathGraph,
    #[error("adjacency is not symmetric between {u} and {v}")]
    AsymmetricAdjacency { u: VertexId, v: VertexId },
}

/// Simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<VertexId>>,
    labels: BTreeMap<VertexId, String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from an unordered edge list. Duplicate edges collapse;
    /// out-of-range ids and self-loops are rejected.
    pub fn from_edge_list(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                v,
                n: self.vertex_count(),
            })
        }
    }

    pub fn neighbors(&self, v: VertexId) -> &BTreeSet<VertexId> {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.vertex_count() && self.adjacency[u].contains(&v)
    }

    /// Inserts the undirected edge `{u, v}`; idempotent on duplicates.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NotAnEdge { u, v });
        }
        self.adjacency[u].remove(&v);
        self.adjacency[v].remove(&u);
        Ok(())
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(BTreeSet::new());
        self.adjacency.len() - 1
    }

    pub fn set_label(&mut self, v: VertexId, label: impl Into<String>) -> Result<(), GraphError> {
        self.check_vertex(v)?;
        self.labels.insert(v, label.into());
        Ok(())
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<VertexId, String> {
        &self.labels
    }

    /// Label when present, decimal id otherwise.
    pub fn display_name(&self, v: VertexId) -> String {
        match self.label(v) {
            Some(l) => l.to_owned(),
            None => v.to_string(),
        }
    }

    /// Checks the structural invariants; used by tests and debug audits.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        for u in self.vertices() {
            for &v in &self.adjacency[u] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop { v });
                }
                if !self.adjacency[v].contains(&u) {
                    return Err(GraphError::AsymmetricAdjacency { u, v });
                }
            }
        }
        Ok(())
    }

    /// All-pairs shortest-path distances by BFS from every vertex.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        let unreachable = n.max(1) as u32;
        let mut dist = vec![unreachable; n * n];
        let mut queue = VecDeque::new();
        for src in self.vertices() {
            let row = src * n;
            dist[row + src] = 0;
            queue.clear();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                let du = dist[row + u];
                for &v in &self.adjacency[u] {
                    if dist[row + v] == unreachable {
                        dist[row + v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        DistanceMatrix { n, unreachable, dist }
    }

    /// Replaces the edge `{u, v}` by a length-2 path through a fresh vertex
    /// appended at index `n`. Labels of existing vertices are preserved.
    pub fn subdivide_edge(&self, u: VertexId, v: VertexId) -> Result<Graph, GraphError> {
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        let w = g.add_vertex();
        g.add_edge(u, w)?;
        g.add_edge(w, v)?;
        Ok(g)
    }

    /// Subdivides every edge once. New vertices are appended in ascending
    /// edge order; the returned map records which new vertex subdivides which
    /// original edge (keys are `(u, v)` with `u < v`).
    pub fn barycentric_subdivision(&self) -> (Graph, BTreeMap<(VertexId, VertexId), VertexId>) {
        let mut g = Graph::new(self.vertex_count());
        g.labels = self.labels.clone();
        let mut edge_to_new = BTreeMap::new();
        for (u, v) in self.edges() {
            let w = g.add_vertex();
            g.add_edge(u, w).expect("ids in range by construction");
            g.add_edge(w, v).expect("ids in range by construction");
            edge_to_new.insert((u, v), w);
        }
        (g, edge_to_new)
    }

    /// True iff no edge joins two members of `set`.
    pub fn is_independent_set(&self, set: &[VertexId]) -> Result<bool, GraphError> {
        for &v in set {
            self.check_vertex(v)?;
        }
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                if self.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.is_connected()
            && self.edge_count() == self.vertex_count() - 1
    }

    /// True for `P_n`, including the single-vertex path.
    pub fn is_path_graph(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 || !self.is_connected() {
            return false;
        }
        if n == 1 {
            return true;
        }
        let ones = self.vertices().filter(|&v| self.degree(v) == 1).count();
        let twos = self.vertices().filter(|&v| self.degree(v) == 2).count();
        ones == 2 && twos == n - 2
    }

    /// 2-colorability check over every component.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in self.vertices() {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Metric dimension of a tree that is not a path, by leg counting.
    ///
    /// A leg at `v` is a maximal pendant path `v - x1 - ... - xk` whose
    /// internal vertices have degree 2 and whose endpoint `xk` is a leaf.
    /// Every leaf of a non-path tree walks back through degree-2 vertices to
    /// a unique anchor of degree at least 3; with `l_v` legs anchored at `v`,
    /// the dimension is the sum of `l_v - 1` over vertices with `l_v > 1`.
    pub fn tree_metric_dimension(&self) -> Result<usize, GraphError> {
        if !self.is_tree() {
            return Err(GraphError::NotATree);
        }
        if self.is_path_graph() {
            return Err(GraphError::PathGraph);
        }
        let mut legs = vec![0usize; self.vertex_count()];
        for leaf in self.vertices().filter(|&v| self.degree(v) == 1) {
            let mut prev = leaf;
            let mut cur = *self.adjacency[leaf].first().expect("leaf has a neighbor");
            while self.degree(cur) == 2 {
                let next = *self
                    .adjacency[cur]
                    .iter()
                    .find(|&&w| w != prev)
                    .expect("degree-2 vertex has another neighbor");
                prev = cur;
                cur = next;
            }
            // cur has degree >= 3: a degree-1 stop would make the tree a path.
            legs[cur] += 1;
        }
        Ok(legs.iter().filter(|&&l| l > 1).map(|&l| l - 1).sum())
    }
}

/// All-pairs shortest-path distances with an unreachable sentinel.
///
/// The sentinel is `max(n, 1)`, strictly larger than any achievable distance,
/// so code comparisons stay totally ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    unreachable: u32,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn unreachable(&self) -> u32 {
        self.unreachable
    }

    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn is_unreachable(&self, u: VertexId, v: VertexId) -> bool {
        self.get(u, v) == self.unreachable
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n })
        }
    }
}
