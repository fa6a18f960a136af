use crate::coloring::Coloring;
use crate::error::{malformed, Result};
use crate::graph::{Graph, VertexSet};
use crate::letter_graph::project_word;
use crate::letters::{Letter, Word};

/// A decoder-retrieval instance `(G, Σ, χ, w)`.
///
/// Construction enforces that `χ` is total, that every letter lies in the
/// alphabet and that `w` contains each letter exactly `|V_a|` times. Letters
/// with an empty color group are permitted here so that restricted
/// subinstances can share the parent's alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoderInstance {
    graph: Graph,
    coloring: Coloring,
    word: Word,
    groups: Vec<VertexSet>,
}

impl DecoderInstance {
    pub fn new(graph: Graph, coloring: Coloring, word: Word) -> Result<Self> {
        coloring.check_total(&graph)?;
        let k = coloring.alphabet_len();
        if word.len() != graph.order() {
            return Err(malformed(format!(
                "word has length {} but the graph has {} vertices",
                word.len(),
                graph.order()
            )));
        }
        if let Some(max) = word.max_letter() {
            if max.0 >= k {
                return Err(malformed(format!(
                    "word uses letter {} outside an alphabet of size {k}",
                    max.0
                )));
            }
        }
        let counts = word.letter_counts(k);
        let sizes = coloring.group_sizes();
        if let Some(a) = (0..k).find(|&a| counts[a] != sizes[a]) {
            return Err(malformed(format!(
                "letter {a} occurs {} times in the word but colors {} vertices",
                counts[a], sizes[a]
            )));
        }
        let groups = coloring.group_sets();
        Ok(Self {
            graph,
            coloring,
            word,
            groups,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn alphabet_len(&self) -> usize {
        self.coloring.alphabet_len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.alphabet_len()).map(Letter)
    }

    /// `V_a`.
    pub fn group(&self, a: Letter) -> &VertexSet {
        &self.groups[a.0]
    }

    pub fn group_len(&self, a: Letter) -> usize {
        self.groups[a.0].count_ones(..)
    }

    /// Fails unless every letter colors at least one vertex.
    pub fn require_all_colors_used(&self) -> Result<()> {
        match self.letters().find(|&a| self.group_len(a) == 0) {
            Some(a) => Err(malformed(format!("letter {} colors no vertex", a.0))),
            None => Ok(()),
        }
    }

    /// `|E(V_a, V_b)|` for `a ≠ b`.
    pub fn cross_edge_count(&self, a: Letter, b: Letter) -> usize {
        let vb = self.group(b);
        self.group(a)
            .ones()
            .map(|u| self.graph.neighbors(u).intersection(vb).count())
            .sum()
    }

    /// `w[{a, b}]`.
    pub fn projection(&self, letters: &[Letter]) -> Word {
        project_word(&self.word, letters)
    }

    /// The subinstance on the color groups of `letters`, keeping only the
    /// edges whose endpoint colors form one of the unordered pairs in
    /// `kept_pairs`. A pair `(a, a)` keeps the edges inside `V_a`. The word is
    /// projected onto `letters`; the alphabet is unchanged.
    pub fn restrict(&self, letters: &[Letter], kept_pairs: &[(Letter, Letter)]) -> Self {
        let keep_pair = |x: Letter, y: Letter| {
            kept_pairs
                .iter()
                .any(|&(p, q)| (p, q) == (x, y) || (q, p) == (x, y))
        };
        let kept: Vec<usize> = self
            .graph
            .vertices()
            .filter(|&v| letters.contains(&self.coloring.letter(v)))
            .collect();
        let mut graph = Graph::with_labels(kept.iter().map(|&v| self.graph.label(v).to_string()))
            .expect("labels of an existing graph are valid");
        for (i, &u) in kept.iter().enumerate() {
            for (j, &v) in kept.iter().enumerate().skip(i + 1) {
                if self.graph.has_edge(u, v)
                    && keep_pair(self.coloring.letter(u), self.coloring.letter(v))
                {
                    graph.add_edge(i, j).expect("fresh edge");
                }
            }
        }
        let coloring = Coloring::new(
            self.alphabet_len(),
            kept.iter().map(|&v| self.coloring.letter(v)).collect(),
        )
        .expect("letters come from the parent coloring");
        let word = self.projection(letters);
        Self::new(graph, coloring, word).expect("restriction preserves letter counts")
    }
}
