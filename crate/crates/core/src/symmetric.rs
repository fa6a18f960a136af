//! Neighborhood diversity and symmetric letter-graph realizations.
//!
//! With a symmetric decoder, two vertices that are not generalized twins can
//! never share a letter. Conversely, the twin partition `V_1, …, V_p` is
//! realized by the word `1^{|V_1|} … p^{|V_p|}` with `ii ∈ D` iff `V_i` is a
//! clique and `ij, ji ∈ D` iff `V_i` and `V_j` are fully adjacent. Hence the
//! symmetric lettericity of a graph equals its neighborhood diversity.

use std::collections::HashMap;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{twins_unchecked, Graph, IsomorphismMapping, Vertex, VertexSet};
use crate::letters::{Alphabet, Decoder, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    Clique,
    /// Also used for singleton blocks.
    Independent,
}

/// The partition of a graph into classes of generalized twins.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    /// Blocks ordered by smallest member; members in increasing order.
    pub blocks: Vec<Vec<Vertex>>,
    pub kinds: Vec<BlockKind>,
    /// `adjacent[i][j]`: every vertex of block `i` is adjacent to every vertex
    /// of block `j` (`i ≠ j`). Otherwise there are no edges between them.
    pub adjacent: Vec<Vec<bool>>,
}

impl TwinPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Block index of every vertex.
    pub fn block_of(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut of = vec![0; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                of[v] = i;
            }
        }
        of
    }
}

/// Groups vertices by open and closed neighborhood. Two vertices are
/// generalized twins iff they share one of the two, and the relation is an
/// equivalence, so a vertex joins the block of the first earlier vertex that
/// matches either key.
pub fn twin_partition(g: &Graph) -> Result<TwinPartition> {
    let mut by_open: HashMap<VertexSet, usize> = HashMap::new();
    let mut by_closed: HashMap<VertexSet, usize> = HashMap::new();
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    for v in g.vertices() {
        let open = g.neighbors(v).clone();
        let closed = g.closed_neighbors(v);
        let found = by_open
            .get(&open)
            .or_else(|| by_closed.get(&closed))
            .copied();
        match found {
            Some(b) => blocks[b].push(v),
            None => {
                by_open.insert(open, blocks.len());
                by_closed.insert(closed, blocks.len());
                blocks.push(vec![v]);
            }
        }
    }

    // pairwise verification, then block kinds and block adjacency
    let mut kinds = Vec::with_capacity(blocks.len());
    for block in &blocks {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                if !twins_unchecked(g, u, v) {
                    return Err(Error::Internal(format!(
                        "{} and {} grouped but not generalized twins",
                        g.label(u),
                        g.label(v)
                    )));
                }
            }
        }
        let clique = block.len() >= 2 && g.has_edge(block[0], block[1]);
        kinds.push(if clique {
            BlockKind::Clique
        } else {
            BlockKind::Independent
        });
    }
    let p = blocks.len();
    let mut adjacent = vec![vec![false; p]; p];
    for i in 0..p {
        for j in 0..p {
            if i == j {
                continue;
            }
            let edges = blocks[i]
                .iter()
                .flat_map(|&u| blocks[j].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| g.has_edge(u, v))
                .count();
            if edges == blocks[i].len() * blocks[j].len() {
                adjacent[i][j] = true;
            } else if edges != 0 {
                return Err(Error::Internal(format!(
                    "twin blocks {i} and {j} are partially adjacent"
                )));
            }
        }
    }
    Ok(TwinPartition {
        blocks,
        kinds,
        adjacent,
    })
}

/// `nd(G)`; `0` for the empty graph.
pub fn neighborhood_diversity(g: &Graph) -> Result<usize> {
    twin_partition(g).map(|p| p.len())
}

/// A realization of `G` as `G(D, w)` with `D` symmetric and `|Σ| = nd(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricWitness {
    pub alphabet: Alphabet,
    pub word: Word,
    pub decoder: Decoder,
    /// Block `i` is colored with letter `i`.
    pub coloring: Coloring,
    /// Vertex to 0-based word position.
    pub isomorphism: IsomorphismMapping,
}

pub fn symmetric_witness(g: &Graph) -> Result<SymmetricWitness> {
    let partition = twin_partition(g)?;
    let p = partition.len();
    let alphabet = Alphabet::numeric(p);
    let mut decoder = Decoder::new(p);
    for i in 0..p {
        if partition.kinds[i] == BlockKind::Clique {
            decoder.insert(Letter(i), Letter(i));
        }
        for j in 0..p {
            if partition.adjacent[i][j] {
                decoder.insert(Letter(i), Letter(j));
            }
        }
    }
    let word: Word = partition
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(i, block)| std::iter::repeat_n(Letter(i), block.len()))
        .collect();
    let mut forward = vec![0; g.order()];
    for (pos, &v) in partition.blocks.iter().flatten().enumerate() {
        forward[v] = pos;
    }
    let coloring = Coloring::new(p, partition.block_of().into_iter().map(Letter).collect())?;
    Ok(SymmetricWitness {
        alphabet,
        word,
        decoder,
        coloring,
        isomorphism: IsomorphismMapping { forward },
    })
}
