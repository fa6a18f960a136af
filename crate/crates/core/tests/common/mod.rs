#![allow(dead_code)]

use lettericity::coloring::Coloring;
use lettericity::random::{random_graph, random_planted, random_word, toggle_random_pair};
use lettericity::{count_runs, project_word, DecoderInstance, Graph, Letter, Word};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn star(m: usize) -> Graph {
    let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
    Graph::from_edges(m + 1, &edges).unwrap()
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// The graph on `n` vertices whose edge set is given by the bits of `mask`,
/// pairs `(u, v)` with `u < v` taken in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let edges: Vec<_> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// A decoder instance with a random graph, unrelated to its word.
pub fn random_instance<R: Rng>(rng: &mut R, n: usize, k: usize) -> DecoderInstance {
    let p = rng.gen_range(0.2..0.8);
    let g = random_graph(rng, n, p);
    let word = random_word(rng, n, k, true);
    let mut letters = word.letters().to_vec();
    letters.shuffle(rng);
    let chi = Coloring::new(k, letters).unwrap();
    DecoderInstance::new(g, chi, word).unwrap()
}

/// A planted instance, possibly with one vertex pair toggled.
pub fn planted_instance<R: Rng>(rng: &mut R, n: usize, k: usize, perturb: bool) -> DecoderInstance {
    let p = rng.gen_range(0.2..0.8);
    let mut planted = random_planted(rng, n, k, p);
    if perturb {
        toggle_random_pair(rng, &mut planted.graph);
    }
    DecoderInstance::new(planted.graph, planted.coloring, planted.word).unwrap()
}

/// The mixed decoder-retrieval corpus: `|Σ| ≤ 3`, `n ≤ 6`, a third each of
/// planted, perturbed and unrelated instances.
pub fn decoder_corpus<R: Rng>(rng: &mut R, count: usize) -> Vec<DecoderInstance> {
    (0..count)
        .map(|i| {
            let k = rng.gen_range(1..=3);
            let n = rng.gen_range(k.max(1)..=6);
            match i % 3 {
                0 => planted_instance(rng, n, k, false),
                1 => planted_instance(rng, n, k, true),
                _ => random_instance(rng, n, k),
            }
        })
        .collect()
}

pub fn one_sided_pairs(inst: &DecoderInstance) -> Vec<(Letter, Letter)> {
    let k = inst.alphabet_len();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let (a, b) = (Letter(a), Letter(b));
            let full = inst.group_len(a) * inst.group_len(b);
            let edges = inst.cross_edge_count(a, b);
            if edges > 0 && edges < full {
                out.push((a, b));
            }
        }
    }
    out
}

/// Number of `c`-runs in `w[a, b]`.
pub fn runs(word: &Word, a: Letter, b: Letter, c: Letter) -> usize {
    count_runs(&project_word(word, &[a, b]), c)
}

/// Every one-sided pair has at least two runs of one of its letters.
pub fn characterization_hypothesis(inst: &DecoderInstance) -> bool {
    one_sided_pairs(inst)
        .into_iter()
        .all(|(a, b)| runs(inst.word(), a, b, a) >= 2 || runs(inst.word(), a, b, b) >= 2)
}
