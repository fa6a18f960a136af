//! Seeded generators for graphs, words, decoders and retrieval instances.
//!
//! All generators take an explicit RNG; [`seeded`] gives a portable,
//! reproducible one.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::decoder::DecoderInstance;
use crate::graph::Graph;
use crate::letter_graph::decode;
use crate::letters::{Decoder, Letter, Word};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` on vertices labeled `1..n`.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_order(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// A uniform word of length `n` over `k` letters. With `surjective`, every
/// letter occurs at least once (requires `n ≥ k`).
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, surjective: bool) -> Word {
    assert!(k > 0 || n == 0, "letters needed for a non-empty word");
    let mut letters: Vec<Letter> = if surjective {
        assert!(n >= k, "surjective word needs n >= k");
        let mut v: Vec<Letter> = (0..k).map(Letter).collect();
        v.extend((k..n).map(|_| Letter(rng.gen_range(0..k))));
        v.shuffle(rng);
        v
    } else {
        (0..n).map(|_| Letter(rng.gen_range(0..k))).collect()
    };
    letters.truncate(n);
    Word::new(letters)
}

/// Each of the `k²` ordered pairs is included independently with probability `p`.
pub fn random_decoder<R: Rng + ?Sized>(rng: &mut R, k: usize, p: f64) -> Decoder {
    let mut d = Decoder::new(k);
    for a in 0..k {
        for b in 0..k {
            if rng.gen_bool(p) {
                d.insert(Letter(a), Letter(b));
            }
        }
    }
    d
}

pub fn random_symmetric_decoder<R: Rng + ?Sized>(rng: &mut R, k: usize, p: f64) -> Decoder {
    let mut d = Decoder::new(k);
    for a in 0..k {
        for b in a..k {
            if rng.gen_bool(p) {
                d.insert(Letter(a), Letter(b));
                d.insert(Letter(b), Letter(a));
            }
        }
    }
    d
}

/// A letter graph with its vertices shuffled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedGraph {
    pub graph: Graph,
    pub coloring: Coloring,
    pub word: Word,
    pub decoder: Decoder,
    /// `positions[v]` is the word position vertex `v` came from.
    pub positions: Vec<usize>,
}

impl PlantedGraph {
    pub fn decoder_instance(&self) -> DecoderInstance {
        DecoderInstance::new(self.graph.clone(), self.coloring.clone(), self.word.clone())
            .expect("planted data is consistent")
    }
}

/// Decodes `(D, w)` and relabels the vertices by a random permutation, so the
/// vertex order carries no information about the word.
pub fn plant<R: Rng + ?Sized>(rng: &mut R, decoder: Decoder, word: Word) -> PlantedGraph {
    let n = word.len();
    let decoded = decode(&decoder, &word).expect("word fits the decoder");
    let mut vertex_at: Vec<usize> = (0..n).collect();
    vertex_at.shuffle(rng);
    let mut positions = vec![0; n];
    for (pos, &v) in vertex_at.iter().enumerate() {
        positions[v] = pos;
    }
    let mut graph = Graph::with_order(n);
    for (i, j) in decoded.graph.edges() {
        graph
            .add_edge(vertex_at[i], vertex_at[j])
            .expect("fresh edge");
    }
    let letters = positions.iter().map(|&p| word[p]).collect();
    let coloring = Coloring::new(decoder.alphabet_len(), letters).expect("letters fit");
    PlantedGraph {
        graph,
        coloring,
        word,
        decoder,
        positions,
    }
}

/// A random planted letter graph with `n` vertices over exactly `k` letters.
pub fn random_planted<R: Rng + ?Sized>(rng: &mut R, n: usize, k: usize, p: f64) -> PlantedGraph {
    let word = random_word(rng, n, k, true);
    let decoder = random_decoder(rng, k, p);
    plant(rng, decoder, word)
}

/// Toggles one uniformly chosen vertex pair. Returns `false` for graphs with
/// fewer than two vertices.
pub fn toggle_random_pair<R: Rng + ?Sized>(rng: &mut R, g: &mut Graph) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    let mut edges: Vec<_> = g.edges().collect();
    let key = (u.min(v), u.max(v));
    match edges.iter().position(|&e| e == key) {
        Some(i) => {
            edges.remove(i);
        }
        None => edges.push(key),
    }
    let mut h = Graph::with_labels(g.labels().iter().cloned()).expect("labels already valid");
    for (a, b) in edges {
        h.add_edge(a, b).expect("distinct pairs");
    }
    *g = h;
    true
}
