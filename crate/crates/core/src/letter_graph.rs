//! Letter graphs `G(D, w)` and the word analysis used by decoder retrieval.

use crate::coloring::Coloring;
use crate::error::{malformed, Result};
use crate::graph::Graph;
use crate::letters::{Decoder, Letter, Word};

/// A graph together with a vertex coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub coloring: Coloring,
}

/// Builds `G(D, w)`: vertex `i` (label `i+1`) is position `i` of `w`, and
/// positions `i < j` are adjacent iff `w_i w_j ∈ D`. The inherent coloring
/// assigns each position its letter.
pub fn decode(decoder: &Decoder, word: &Word) -> Result<ColoredGraph> {
    let k = decoder.alphabet_len();
    if let Some(max) = word.max_letter() {
        if max.0 >= k {
            return Err(malformed(format!(
                "word uses letter {} but the decoder alphabet has {k} letters",
                max.0
            )));
        }
    }
    let n = word.len();
    let mut graph = Graph::with_order(n);
    for i in 0..n {
        for j in i + 1..n {
            if decoder.contains(word[i], word[j]) {
                graph.add_edge(i, j)?;
            }
        }
    }
    let coloring = Coloring::new(k, word.letters().to_vec())?;
    Ok(ColoredGraph { graph, coloring })
}

/// `w[S]`: the maximal subsequence of `w` using only letters of `letters`.
pub fn project_word(word: &Word, letters: &[Letter]) -> Word {
    word.iter().filter(|l| letters.contains(l)).collect()
}

/// Lengths of the `c`-runs of `w`, left to right.
pub fn run_lengths(word: &Word, c: Letter) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0;
    for l in word.iter() {
        if l == c {
            current += 1;
        } else if current > 0 {
            runs.push(current);
            current = 0;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// Number of maximal non-empty factors of `w` consisting solely of `c`.
pub fn count_runs(word: &Word, c: Letter) -> usize {
    word.iter()
        .enumerate()
        .filter(|&(i, l)| l == c && (i == 0 || word[i - 1] != c))
        .count()
}

pub fn is_palindrome(word: &Word) -> bool {
    word.iter().eq(word.iter().rev())
}
