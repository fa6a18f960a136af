//! Undirected simple graphs over named vertices.
//!
//! Vertices carry text labels but are addressed internally by dense indices
//! `0..n` in declaration order. Adjacency is stored as one bitset row per
//! vertex, so membership queries are O(1) and neighborhood comparisons are
//! word-parallel.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Dense vertex index.
pub type Vertex = usize;

/// A set of vertices of one graph, stored as a bitset over its indices.
pub type VertexSet = FixedBitSet;

pub(crate) fn check_token(token: &str) -> Result<()> {
    if token.is_empty() || token.chars().any(char::is_whitespace) {
        return Err(Error::InvalidToken(token.to_string()));
    }
    Ok(())
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, Vertex>,
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// The empty graph.
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on the given labels.
    pub fn with_labels<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Self::new();
        for label in labels {
            g.add_vertex(label)?;
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices labelled `1..=n`.
    pub fn with_order(n: usize) -> Self {
        Self::with_labels((1..=n).map(|i| i.to_string())).expect("numeric labels are valid")
    }

    /// Graph on `n` vertices labelled `1..=n` with the given 0-based edges.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Self::with_order(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<Vertex> {
        let label = label.into();
        check_token(&label)?;
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateVertex(label));
        }
        let v = self.labels.len();
        self.index.insert(label.clone(), v);
        self.labels.push(label);
        for row in &mut self.adj {
            row.grow(v + 1);
        }
        self.adj.push(FixedBitSet::with_capacity(v + 1));
        Ok(v)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        if self.adj[u].contains(v) {
            return Err(Error::DuplicateEdge(
                self.labels[u].clone(),
                self.labels[v].clone(),
            ));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<()> {
        let u = self.vertex_or_err(a)?;
        let v = self.vertex_or_err(b)?;
        self.add_edge(u, v)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    pub fn vertex_or_err(&self, label: &str) -> Result<Vertex> {
        self.vertex(label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(format!("#{v}")))
        }
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: Vertex) -> VertexSet {
        let mut set = self.adj[v].clone();
        set.insert(v);
        set
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// An empty vertex set sized for this graph.
    pub fn empty_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.order())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut set = self.empty_set();
        set.insert_range(..);
        set
    }

    pub fn set_of(&self, vertices: &[Vertex]) -> Result<VertexSet> {
        let mut set = self.empty_set();
        for &v in vertices {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    /// Whether `set` induces a clique.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.ones().all(|v| {
            let mut others = set.clone();
            others.set(v, false);
            others.is_subset(&self.adj[v])
        })
    }

    /// Whether `set` induces an independent set.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.ones().all(|v| self.adj[v].is_disjoint(set))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self
            .edges()
            .map(|(u, v)| format!("{}-{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("Graph")
            .field("vertices", &self.labels)
            .field("edges", &edges)
            .finish()
    }
}

/// Whether `u` and `v` are generalized twins, i.e. `N(u) \ {v} = N(v) \ {u}`.
pub fn are_generalized_twins(g: &Graph, u: Vertex, v: Vertex) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::Malformed(
            "generalized twins are defined for distinct vertices".into(),
        ));
    }
    Ok(twins_unchecked(g, u, v))
}

pub(crate) fn twins_unchecked(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let mut nu = g.neighbors(u).clone();
    nu.set(v, false);
    let mut nv = g.neighbors(v).clone();
    nv.set(u, false);
    nu == nv
}

/// The subgraph induced by `subset`. Vertices keep their labels and their
/// relative declaration order.
pub fn induced_subgraph(g: &Graph, subset: &[Vertex]) -> Result<Graph> {
    let set = g.set_of(subset)?;
    let kept: Vec<Vertex> = set.ones().collect();
    let mut h = Graph::with_labels(kept.iter().map(|&v| g.label(v).to_string()))?;
    for (i, &u) in kept.iter().enumerate() {
        for (j, &v) in kept.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                h.add_edge(i, j)?;
            }
        }
    }
    Ok(h)
}

/// E(A, B): the edges with one end in `a` and the other in `b`.
pub fn bipartite_edges(g: &Graph, a: &[Vertex], b: &[Vertex]) -> Result<Vec<(Vertex, Vertex)>> {
    let sa = g.set_of(a)?;
    let sb = g.set_of(b)?;
    if !sa.is_disjoint(&sb) {
        return Err(Error::OverlappingSets);
    }
    let mut edges: Vec<(Vertex, Vertex)> = sa
        .ones()
        .flat_map(|u| {
            g.neighbors(u)
                .intersection(&sb)
                .map(move |v| (u.min(v), u.max(v)))
                .collect::<Vec<_>>()
        })
        .collect();
    edges.sort_unstable();
    Ok(edges)
}

/// A bijection between the vertices of two graphs, stored as `forward[v]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsomorphismMapping {
    pub forward: Vec<Vertex>,
}

impl IsomorphismMapping {
    pub fn identity(n: usize) -> Self {
        Self {
            forward: (0..n).collect(),
        }
    }

    pub fn map(&self, v: Vertex) -> Vertex {
        self.forward[v]
    }

    pub fn inverse(&self) -> Self {
        let mut backward = vec![0; self.forward.len()];
        for (v, &image) in self.forward.iter().enumerate() {
            backward[image] = v;
        }
        Self { forward: backward }
    }

    /// Checks bijectivity and edge preservation in both directions.
    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.order();
        if h.order() != n || self.forward.len() != n || g.size() != h.size() {
            return false;
        }
        let mut seen = vec![false; n];
        for &image in &self.forward {
            if image >= n || seen[image] {
                return false;
            }
            seen[image] = true;
        }
        // equal edge counts plus one direction gives both
        g.edges()
            .all(|(u, v)| h.has_edge(self.forward[u], self.forward[v]))
    }
}
