//! Word retrieval: given `(G, χ, D)`, find a word `w` such that `G` is
//! isomorphic to `G(D, w)` respecting `χ`.
//!
//! The auxiliary digraph `H` has an arc `(u, v)` whenever `u` must precede
//! `v` in every solution. Its topological orderings are exactly the vertex
//! permutations whose letter sequence solves the instance, so the instance is
//! solvable iff `H` is acyclic.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::coloring::Coloring;
use crate::error::{malformed, Result};
use crate::graph::{Graph, Vertex};
use crate::letters::{Decoder, Word};

/// The auxiliary order digraph on the vertices of `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderDigraph {
    out: Vec<Vec<Vertex>>,
}

impl OrderDigraph {
    pub fn from_arcs(n: usize, arcs: &[(Vertex, Vertex)]) -> Self {
        let mut out = vec![Vec::new(); n];
        for &(u, v) in arcs {
            out[u].push(v);
        }
        for row in &mut out {
            row.sort_unstable();
            row.dedup();
        }
        Self { out }
    }

    pub fn order(&self) -> usize {
        self.out.len()
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.out[u].binary_search(&v).is_ok()
    }

    pub fn successors(&self, u: Vertex) -> &[Vertex] {
        &self.out[u]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().map(move |&v| (u, v)))
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }
}

/// A vertex permutation `π` together with the word `χ(π(1))…χ(π(n))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedSolution {
    pub permutation: Vec<Vertex>,
    pub word: Word,
}

impl GeneralizedSolution {
    /// `f(v)`: the 0-based position assigned to each vertex.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.permutation.len()];
        for (i, &v) in self.permutation.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

fn check_instance(g: &Graph, coloring: &Coloring, decoder: &Decoder) -> Result<()> {
    coloring.check_total(g)?;
    if coloring.alphabet_len() != decoder.alphabet_len() {
        return Err(malformed(format!(
            "coloring alphabet has {} letters, decoder alphabet has {}",
            coloring.alphabet_len(),
            decoder.alphabet_len()
        )));
    }
    Ok(())
}

/// Arc `(u, v)` iff `{u,v} ∈ E` and `χ(v)χ(u) ∉ D`, or `{u,v} ∉ E` and
/// `χ(v)χ(u) ∈ D`.
pub fn build_order_digraph(
    g: &Graph,
    coloring: &Coloring,
    decoder: &Decoder,
) -> Result<OrderDigraph> {
    check_instance(g, coloring, decoder)?;
    Ok(order_digraph_unchecked(g, coloring, decoder))
}

fn order_digraph_unchecked(g: &Graph, coloring: &Coloring, decoder: &Decoder) -> OrderDigraph {
    let n = g.order();
    let mut out = vec![Vec::new(); n];
    for (u, row) in out.iter_mut().enumerate() {
        let cu = coloring.letter(u);
        for v in (0..n).filter(|&v| v != u) {
            if g.has_edge(u, v) != decoder.contains(coloring.letter(v), cu) {
                row.push(v);
            }
        }
    }
    OrderDigraph { out }
}

/// Kahn's algorithm, always taking the smallest available source. Returns
/// `None` iff the digraph has a directed cycle.
pub fn topological_order(h: &OrderDigraph) -> Option<Vec<Vertex>> {
    let n = h.order();
    let mut indegree = vec![0usize; n];
    for (_, v) in h.arcs() {
        indegree[v] += 1;
    }
    let mut ready: BinaryHeap<Reverse<Vertex>> =
        (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for &v in h.successors(u) {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Solves word retrieval. `Ok(None)` certifies that no word exists.
pub fn retrieve_word(
    g: &Graph,
    coloring: &Coloring,
    decoder: &Decoder,
) -> Result<Option<GeneralizedSolution>> {
    check_instance(g, coloring, decoder)?;
    let h = order_digraph_unchecked(g, coloring, decoder);
    Ok(topological_order(&h).map(|permutation| {
        let word = permutation.iter().map(|&v| coloring.letter(v)).collect();
        GeneralizedSolution { permutation, word }
    }))
}

/// Whether placing vertex `π(i)` at position `i` turns `G` into exactly
/// `G(D, χ(π(1))…χ(π(n)))`.
pub fn is_generalized_solution(
    g: &Graph,
    coloring: &Coloring,
    decoder: &Decoder,
    permutation: &[Vertex],
) -> bool {
    let n = g.order();
    if permutation.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in permutation {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    permutation.iter().enumerate().all(|(i, &u)| {
        permutation[i + 1..]
            .iter()
            .all(|&v| g.has_edge(u, v) == decoder.contains(coloring.letter(u), coloring.letter(v)))
    })
}
