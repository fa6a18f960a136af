//! Coloring retrieval and the graph isomorphism machinery behind it.
//!
//! A coloring consistent with `(D, w)` exists iff `G ≅ G(D, w)`, and any
//! isomorphism `f` yields one via `χ(v) = w_{f(v)}`. Conversely every graph
//! isomorphism question `(G1, G2)` is a coloring-retrieval instance with
//! `Σ = V(G2)`, `D = {uv, vu : uv ∈ E(G2)}` and `w` any permutation of
//! `V(G2)`.
//!
//! Isomorphisms are found by color refinement run jointly on both graphs
//! followed by individualization and backtracking. The search is exact.

use crate::coloring::Coloring;
use crate::error::{malformed, Result};
use crate::graph::{Graph, IsomorphismMapping, Vertex};
use crate::letter_graph::decode;
use crate::letters::{Alphabet, Decoder, Letter, Word};

/// An ordered partition of the vertices of one graph, as a color per vertex.
/// Color ids are dense and ordered by refinement signature.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementPartition {
    pub colors: Vec<usize>,
    pub stable: bool,
}

impl RefinementPartition {
    pub fn unit(n: usize) -> Self {
        Self {
            colors: vec![0; n],
            stable: false,
        }
    }

    pub fn block_count(&self) -> usize {
        self.colors.iter().max().map_or(0, |&m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<Vertex>> {
        let mut blocks = vec![Vec::new(); self.block_count()];
        for (v, &c) in self.colors.iter().enumerate() {
            blocks[c].push(v);
        }
        blocks
    }
}

type Signature = (usize, Vec<usize>);

fn signatures(g: &Graph, colors: &[usize]) -> Vec<Signature> {
    g.vertices()
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).ones().map(|u| colors[u]).collect();
            around.sort_unstable();
            (colors[v], around)
        })
        .collect()
}

/// Refines both colorings to a common stable partition. Returns `false` as
/// soon as some color class has different sizes in the two graphs.
fn refine_jointly(g: &Graph, h: &Graph, cg: &mut [usize], ch: &mut [usize]) -> bool {
    let mut count = count_colors(cg, ch);
    loop {
        let sg = signatures(g, cg);
        let sh = signatures(h, ch);
        let mut all: Vec<&Signature> = sg.iter().chain(&sh).collect();
        all.sort_unstable();
        all.dedup();
        let rank = |s: &Signature| all.binary_search(&s).expect("signature present");
        for (c, s) in cg.iter_mut().zip(&sg) {
            *c = rank(s);
        }
        for (c, s) in ch.iter_mut().zip(&sh) {
            *c = rank(s);
        }
        let new_count = all.len();
        let mut hist = vec![0i64; new_count];
        for &c in cg.iter() {
            hist[c] += 1;
        }
        for &c in ch.iter() {
            hist[c] -= 1;
        }
        if hist.iter().any(|&x| x != 0) {
            return false;
        }
        if new_count == count {
            return true;
        }
        count = new_count;
    }
}

fn count_colors(cg: &[usize], ch: &[usize]) -> usize {
    let mut seen: Vec<usize> = cg.iter().chain(ch).copied().collect();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Stable color refinement of a single graph, starting from the unit partition.
pub fn refine(g: &Graph) -> RefinementPartition {
    let mut colors = vec![0; g.order()];
    let mut shadow = colors.clone();
    refine_jointly(g, g, &mut colors, &mut shadow);
    RefinementPartition {
        colors,
        stable: true,
    }
}

fn search(g: &Graph, h: &Graph, mut cg: Vec<usize>, mut ch: Vec<usize>) -> Option<Vec<Vertex>> {
    if !refine_jointly(g, h, &mut cg, &mut ch) {
        return None;
    }
    let n = g.order();
    let colors = cg.iter().max().map_or(0, |&m| m + 1);
    if colors == n {
        let mut by_color = vec![0; n];
        for (v, &c) in ch.iter().enumerate() {
            by_color[c] = v;
        }
        let forward: Vec<Vertex> = cg.iter().map(|&c| by_color[c]).collect();
        let mapping = IsomorphismMapping { forward };
        return mapping.is_isomorphism(g, h).then_some(mapping.forward);
    }
    let mut sizes = vec![0usize; colors];
    for &c in &cg {
        sizes[c] += 1;
    }
    let target = (0..colors)
        .filter(|&c| sizes[c] > 1)
        .min_by_key(|&c| (sizes[c], c))
        .expect("a non-singleton cell exists");
    let u = cg
        .iter()
        .position(|&c| c == target)
        .expect("cell is non-empty");
    let fresh = colors;
    for v in (0..n).filter(|&v| ch[v] == target) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[u] = fresh;
        ch2[v] = fresh;
        if let Some(found) = search(g, h, cg2, ch2) {
            return Some(found);
        }
    }
    None
}

/// An isomorphism from `g` to `h`, or `None` if the graphs are not isomorphic.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<IsomorphismMapping> {
    if g.order() != h.order() || g.size() != h.size() {
        return None;
    }
    let n = g.order();
    search(g, h, vec![0; n], vec![0; n]).map(|forward| IsomorphismMapping { forward })
}

/// A coloring together with the isomorphism `G → G(D, w)` it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringSolution {
    pub coloring: Coloring,
    pub isomorphism: IsomorphismMapping,
}

/// Solves coloring retrieval. `Ok(None)` means no consistent coloring exists.
pub fn retrieve_coloring(
    g: &Graph,
    decoder: &Decoder,
    word: &Word,
) -> Result<Option<ColoringSolution>> {
    if g.order() != word.len() {
        return Err(malformed(format!(
            "word has length {} but the graph has {} vertices",
            word.len(),
            g.order()
        )));
    }
    let target = decode(decoder, word)?;
    Ok(find_isomorphism(g, &target.graph).map(|iso| {
        let letters = iso.forward.iter().map(|&p| word[p]).collect();
        let coloring = Coloring::new(decoder.alphabet_len(), letters)
            .expect("word letters fit the decoder alphabet");
        ColoringSolution {
            coloring,
            isomorphism: iso,
        }
    }))
}

/// A coloring-retrieval instance `(G, Σ, D, w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringInstance {
    pub graph: Graph,
    pub alphabet: Alphabet,
    pub decoder: Decoder,
    pub word: Word,
}

/// Encodes the isomorphism question `(G1, G2)` as a coloring-retrieval
/// instance: the letters are the vertices of `G2`, the decoder contains both
/// orientations of each edge of `G2`, and the word lists `V(G2)` in
/// declaration order, so that `G(D, w) = G2`.
pub fn gi_to_coloring_instance(g1: &Graph, g2: &Graph) -> ColoringInstance {
    let alphabet = Alphabet::new(g2.labels().iter().cloned()).expect("vertex labels are tokens");
    let k = alphabet.len();
    let mut decoder = Decoder::new(k);
    for (u, v) in g2.edges() {
        decoder.insert(Letter(u), Letter(v));
        decoder.insert(Letter(v), Letter(u));
    }
    let word = (0..k).map(Letter).collect();
    ColoringInstance {
        graph: g1.clone(),
        alphabet,
        decoder,
        word,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn two_triangles() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    #[test]
    fn regular_non_isomorphic_pair() {
        assert_eq!(find_isomorphism(&cycle(6), &two_triangles()), None);
    }

    #[test]
    fn complete_graphs() {
        let k3 = cycle(3);
        let f = find_isomorphism(&k3, &k3).unwrap();
        assert!(f.is_isomorphism(&k3, &k3));
    }

    #[test]
    fn relabeled_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (5, 3)]).unwrap();
        let perm = [4, 0, 5, 2, 1, 3];
        let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(6, &edges).unwrap();
        let f = find_isomorphism(&g, &h).unwrap();
        assert!(f.is_isomorphism(&g, &h));
    }

    #[test]
    fn refinement_of_a_path() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let part = refine(&p4);
        assert_eq!(part.block_count(), 2);
        assert_eq!(part.colors[0], part.colors[3]);
        assert_eq!(part.colors[1], part.colors[2]);
        assert_eq!(refine(&cycle(5)).block_count(), 1);
    }

    #[test]
    fn coloring_of_k2() {
        let sigma = Alphabet::latin(2);
        let d = sigma.decoder(&[("a", "b")]).unwrap();
        let w = sigma.word_from_chars("ab").unwrap();
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let sol = retrieve_coloring(&k2, &d, &w).unwrap().unwrap();
        let mut letters = sol.coloring.letters().to_vec();
        letters.sort();
        assert_eq!(letters, vec![Letter(0), Letter(1)]);

        let empty = Graph::with_order(2);
        assert_eq!(retrieve_coloring(&empty, &d, &w).unwrap(), None);
        assert!(retrieve_coloring(&Graph::with_order(3), &d, &w).is_err());
    }

    #[test]
    fn reduction_reproduces_second_graph() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let inst = gi_to_coloring_instance(&p3, &p3);
        let decoded = decode(&inst.decoder, &inst.word).unwrap();
        assert_eq!(
            decoded.graph.edges().collect::<Vec<_>>(),
            p3.edges().collect::<Vec<_>>()
        );
        assert!(retrieve_coloring(&inst.graph, &inst.decoder, &inst.word)
            .unwrap()
            .is_some());

        let bad = gi_to_coloring_instance(&cycle(6), &two_triangles());
        assert!(retrieve_coloring(&bad.graph, &bad.decoder, &bad.word)
            .unwrap()
            .is_none());
    }
}
