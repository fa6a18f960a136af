//! Exponential-time reference implementations.
//!
//! Every function here enumerates its search space outright and is guarded
//! by a hard size limit; an oversized request fails with
//! [`Error::SizeGuard`] instead of running for hours.

use itertools::Itertools;
use rayon::prelude::*;

use crate::coloring::Coloring;
use crate::decoder::{is_one_sided, runs_in_pair, verify_decoder, DecoderInstance};
use crate::error::{malformed, Error, Result};
use crate::graph::{Graph, IsomorphismMapping, Vertex};
use crate::letters::{Alphabet, Decoder, DirectedPair, Letter, Word};
use crate::word_retrieval::{is_generalized_solution, retrieve_word};

/// Largest vertex count accepted by the permutation-based oracles.
pub const MAX_PERMUTATION_ORDER: usize = 8;
/// Largest alphabet accepted by [`enumerate_decoders`].
pub const MAX_ENUMERATION_ALPHABET: usize = 4;
/// Budget of (coloring, decoder) candidates per alphabet size in the
/// lettericity searches.
pub const MAX_LETTERICITY_CANDIDATES: u64 = 1 << 26;

fn guard(what: &'static str, actual: u64, limit: u64) -> Result<()> {
    if actual > limit {
        Err(Error::SizeGuard {
            what,
            actual,
            limit,
        })
    } else {
        Ok(())
    }
}

/// A realization of a graph as a `k`-letter graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LettericityWitness {
    pub k: usize,
    pub alphabet: Alphabet,
    pub decoder: Decoder,
    pub word: Word,
    /// The letter each vertex receives.
    pub coloring: Coloring,
    /// Vertex to 0-based word position.
    pub positions: IsomorphismMapping,
}

/// All colorings of `n` vertices using exactly the letters `0..k`, up to
/// renaming of letters: letters appear in order of first use.
pub fn canonical_colorings(n: usize, k: usize) -> Vec<Vec<Letter>> {
    fn extend(
        prefix: &mut Vec<Letter>,
        used: usize,
        n: usize,
        k: usize,
        out: &mut Vec<Vec<Letter>>,
    ) {
        let left = n - prefix.len();
        if left < k - used {
            return;
        }
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for l in 0..(used + 1).min(k) {
            prefix.push(Letter(l));
            extend(prefix, used.max(l + 1), n, k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    extend(&mut Vec::with_capacity(n), 0, n, k, &mut out);
    out
}

fn stirling2(n: usize, k: usize) -> u64 {
    let mut row = vec![0u64; k + 1];
    row[0] = 1;
    for _ in 0..n {
        for j in (1..=k).rev() {
            row[j] = row[j].saturating_mul(j as u64).saturating_add(row[j - 1]);
        }
        row[0] = 0;
    }
    row[k]
}

/// Within-color pairs: `aa` must be present iff `V_a` has an edge; for a
/// singleton group the choice is irrelevant and `aa` is left out. Returns
/// `None` if some group is neither a clique nor an independent set.
fn diagonal(g: &Graph, coloring: &Coloring) -> Option<Vec<bool>> {
    coloring
        .group_sets()
        .iter()
        .map(|set| {
            if g.is_independent(set) {
                Some(false)
            } else if g.is_clique(set) {
                Some(true)
            } else {
                None
            }
        })
        .collect()
}

fn witness_from(
    g: &Graph,
    k: usize,
    coloring: Coloring,
    decoder: Decoder,
) -> Option<LettericityWitness> {
    let solution = retrieve_word(g, &coloring, &decoder).expect("well-formed candidate")?;
    let positions = IsomorphismMapping {
        forward: solution.positions(),
    };
    Some(LettericityWitness {
        k,
        alphabet: Alphabet::latin(k),
        decoder,
        word: solution.word,
        coloring,
        positions,
    })
}

fn search_letters(g: &Graph, k_max: usize, symmetric: bool) -> Result<Option<LettericityWitness>> {
    if k_max == 0 {
        return Err(malformed("k_max must be at least 1"));
    }
    let n = g.order();
    if n == 0 {
        let empty = Coloring::new(0, Vec::new())?;
        return Ok(witness_from(g, 0, empty, Decoder::new(0)));
    }
    for k in 1..=k_max.min(n) {
        let off_diagonal: Vec<(usize, usize)> = if symmetric {
            (0..k)
                .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
                .collect()
        } else {
            (0..k)
                .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
                .collect()
        };
        let bits = off_diagonal.len() as u64;
        guard("decoder bits per alphabet size", bits, 32)?;
        let candidates = stirling2(n, k).saturating_mul(1 << bits);
        guard(
            "lettericity candidates",
            candidates,
            MAX_LETTERICITY_CANDIDATES,
        )?;

        let found = canonical_colorings(n, k)
            .into_par_iter()
            .find_map_first(|letters| {
                let coloring = Coloring::new(k, letters).expect("letters below k");
                let diag = diagonal(g, &coloring)?;
                (0u64..1 << bits).find_map(|mask| {
                    let mut decoder = Decoder::new(k);
                    for (a, &present) in diag.iter().enumerate() {
                        if present {
                            decoder.insert(Letter(a), Letter(a));
                        }
                    }
                    for (bit, &(i, j)) in off_diagonal.iter().enumerate() {
                        if mask >> bit & 1 == 1 {
                            decoder.insert(Letter(i), Letter(j));
                            if symmetric {
                                decoder.insert(Letter(j), Letter(i));
                            }
                        }
                    }
                    witness_from(g, k, coloring.clone(), decoder)
                })
            });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Lettericity by exhaustive search: for `k = 1, 2, …, k_max`, every coloring
/// with `k` letters (up to renaming) and every decoder is tried, with word
/// retrieval deciding each pair. Returns the first realization at the
/// smallest `k`, or `None` if the lettericity exceeds `k_max`.
pub fn brute_lettericity(g: &Graph, k_max: usize) -> Result<Option<LettericityWitness>> {
    search_letters(g, k_max, false)
}

/// As [`brute_lettericity`], restricted to symmetric decoders.
pub fn brute_symmetric_lettericity(g: &Graph, k_max: usize) -> Result<Option<LettericityWitness>> {
    search_letters(g, k_max, true)
}

/// Every solution decoder of the instance, ordered by [`Decoder::mask`].
pub fn enumerate_decoders(instance: &DecoderInstance) -> Result<Vec<Decoder>> {
    let k = instance.alphabet_len();
    guard("alphabet size", k as u64, MAX_ENUMERATION_ALPHABET as u64)?;
    let mut out = Vec::new();
    for mask in 0u64..1 << (k * k) {
        let d = Decoder::from_mask(k, mask);
        if verify_decoder(instance, &d)? {
            out.push(d);
        }
    }
    Ok(out)
}

/// Checks a decoder against the three conditions that characterize solutions
/// once every one-sided pair has at least two runs of one of its letters:
///
/// - for each letter `a`, `D ∩ {aa}` realizes `G[V_a]`;
/// - for each pair that is not one-sided, `D ∩ {ab, ba}` realizes `E(V_a, V_b)`;
/// - for each letter `a`, `D ∩ {ab, ba : b ∈ P_a}` realizes the block
///   subinstance on `a` and its partners `P_a`.
pub fn characterization_check(instance: &DecoderInstance, decoder: &Decoder) -> Result<bool> {
    let letters: Vec<Letter> = instance.letters().collect();
    for (i, &a) in letters.iter().enumerate() {
        for &b in &letters[i + 1..] {
            if is_one_sided(instance, a, b)
                && runs_in_pair(instance, a, b, a) < 2
                && runs_in_pair(instance, a, b, b) < 2
            {
                return Err(malformed(format!(
                    "one-sided pair ({}, {}) has a single run of each letter",
                    a.0, b.0
                )));
            }
        }
    }

    for &a in &letters {
        let sub = instance.restrict(&[a], &[(a, a)]);
        let d = decoder.restrict(|p| p == DirectedPair::new(a, a));
        if !verify_decoder(&sub, &d)? {
            return Ok(false);
        }
    }
    for (i, &a) in letters.iter().enumerate() {
        for &b in &letters[i + 1..] {
            if is_one_sided(instance, a, b) {
                continue;
            }
            let sub = instance.restrict(&[a, b], &[(a, b)]);
            let d =
                decoder.restrict(|p| p == DirectedPair::new(a, b) || p == DirectedPair::new(b, a));
            if !verify_decoder(&sub, &d)? {
                return Ok(false);
            }
        }
    }
    for &a in &letters {
        let partners: Vec<Letter> = letters
            .iter()
            .copied()
            .filter(|&b| b != a && is_one_sided(instance, a, b))
            .filter(|&b| runs_in_pair(instance, a, b, a) >= 2)
            .collect();
        let mut block = partners.clone();
        block.push(a);
        let kept: Vec<_> = partners.iter().map(|&b| (a, b)).collect();
        let sub = instance.restrict(&block, &kept);
        let d = decoder.restrict(|p| {
            (p.first == a && partners.contains(&p.second))
                || (p.second == a && partners.contains(&p.first))
        });
        if !verify_decoder(&sub, &d)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Decoder verification by trying every color-respecting bijection of
/// vertices onto positions.
pub fn brute_verify_decoder(instance: &DecoderInstance, decoder: &Decoder) -> Result<bool> {
    let n = instance.graph().order();
    guard("vertex count", n as u64, MAX_PERMUTATION_ORDER as u64)?;
    let g = instance.graph();
    let word = instance.word();
    let groups = instance.coloring().groups();
    let slots: Vec<Vec<usize>> = instance
        .letters()
        .map(|a| (0..n).filter(|&i| word[i] == a).collect())
        .collect();
    let per_letter: Vec<Vec<Vec<Vertex>>> = groups
        .iter()
        .map(|group| group.iter().copied().permutations(group.len()).collect())
        .collect();
    let found = per_letter
        .into_iter()
        .multi_cartesian_product()
        .any(|choice| {
            let mut at = vec![0; n];
            for (a, order) in choice.iter().enumerate() {
                for (&pos, &v) in slots[a].iter().zip(order) {
                    at[pos] = v;
                }
            }
            (0..n).all(|i| {
                (i + 1..n).all(|j| g.has_edge(at[i], at[j]) == decoder.contains(word[i], word[j]))
            })
        });
    // multi_cartesian_product of zero iterators yields nothing
    Ok(found || instance.alphabet_len() == 0 && n == 0)
}

/// Word retrieval by trying every vertex permutation.
pub fn brute_word_retrieval(
    g: &Graph,
    coloring: &Coloring,
    decoder: &Decoder,
) -> Result<Option<Vec<Vertex>>> {
    let n = g.order();
    guard("vertex count", n as u64, MAX_PERMUTATION_ORDER as u64)?;
    coloring.check_total(g)?;
    Ok((0..n)
        .permutations(n)
        .find(|perm| is_generalized_solution(g, coloring, decoder, perm)))
}

/// Graph isomorphism by trying all `n!` bijections, in lexicographic order.
pub fn brute_isomorphism(g: &Graph, h: &Graph) -> Result<Option<IsomorphismMapping>> {
    let n = g.order();
    guard("vertex count", n as u64, MAX_PERMUTATION_ORDER as u64)?;
    if h.order() != n || g.size() != h.size() {
        return Ok(None);
    }
    Ok((0..n)
        .permutations(n)
        .map(|forward| IsomorphismMapping { forward })
        .find(|f| f.is_isomorphism(g, h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decoder::tests::abbaba;

    fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|v| (0, v)).collect();
        Graph::from_edges(m + 1, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn assert_realizes(g: &Graph, w: &LettericityWitness) {
        let decoded = crate::letter_graph::decode(&w.decoder, &w.word).unwrap();
        assert!(w.positions.is_isomorphism(g, &decoded.graph));
        for v in g.vertices() {
            assert_eq!(w.coloring.letter(v), w.word[w.positions.map(v)]);
        }
    }

    #[test]
    fn coloring_enumeration_counts() {
        assert_eq!(canonical_colorings(4, 2).len(), 7);
        assert_eq!(canonical_colorings(5, 3).len(), 25);
        assert_eq!(stirling2(5, 3), 25);
        assert_eq!(
            canonical_colorings(3, 3),
            vec![vec![Letter(0), Letter(1), Letter(2)]]
        );
        assert!(canonical_colorings(2, 3).is_empty());
    }

    #[test]
    fn known_lettericities() {
        let s3 = brute_lettericity(&star(3), 2).unwrap().unwrap();
        assert_eq!(s3.k, 2);
        assert_realizes(&star(3), &s3);

        assert_eq!(brute_lettericity(&complete(4), 4).unwrap().unwrap().k, 1);

        let path = brute_lettericity(&p4(), 4).unwrap().unwrap();
        assert_eq!(path.k, 2);
        assert_realizes(&p4(), &path);

        assert_eq!(brute_lettericity(&p4(), 1).unwrap(), None);
    }

    #[test]
    fn known_symmetric_lettericities() {
        assert_eq!(brute_symmetric_lettericity(&p4(), 4).unwrap().unwrap().k, 4);
        assert_eq!(
            brute_symmetric_lettericity(&complete(3), 3)
                .unwrap()
                .unwrap()
                .k,
            1
        );
        assert_eq!(
            brute_symmetric_lettericity(&star(3), 4).unwrap().unwrap().k,
            2
        );
    }

    #[test]
    fn abbaba_enumeration() {
        let (inst, sigma) = abbaba();
        let all = enumerate_decoders(&inst).unwrap();
        assert_eq!(all, vec![sigma.decoder(&[("a", "b")]).unwrap()]);
        let ab = &all[0];
        assert!(characterization_check(&inst, ab).unwrap());
        let both = sigma.decoder(&[("a", "b"), ("b", "a")]).unwrap();
        assert!(!characterization_check(&inst, &both).unwrap());
        assert!(brute_verify_decoder(&inst, ab).unwrap());
        assert!(!brute_verify_decoder(&inst, &both).unwrap());
    }

    #[test]
    fn single_color_independent() {
        let inst = DecoderInstance::new(
            Graph::with_order(3),
            Coloring::new(1, vec![Letter(0); 3]).unwrap(),
            Word::new(vec![Letter(0); 3]),
        )
        .unwrap();
        assert_eq!(enumerate_decoders(&inst).unwrap(), vec![Decoder::new(1)]);
    }

    #[test]
    fn single_runs_have_no_solution() {
        let sigma = Alphabet::latin(2);
        let g = Graph::from_edges(4, &[(0, 2)]).unwrap();
        let chi = Coloring::new(2, [0, 0, 1, 1].map(Letter).to_vec()).unwrap();
        let inst = DecoderInstance::new(g, chi, sigma.word_from_chars("aabb").unwrap()).unwrap();
        assert!(enumerate_decoders(&inst).unwrap().is_empty());
        assert!(characterization_check(&inst, &Decoder::new(2)).is_err());
    }

    #[test]
    fn empty_instance_characterization() {
        let inst = DecoderInstance::new(
            Graph::new(),
            Coloring::new(1, vec![]).unwrap(),
            Word::default(),
        )
        .unwrap();
        assert!(characterization_check(&inst, &Decoder::new(1)).unwrap());
    }

    #[test]
    fn permutation_isomorphism() {
        let k3 = complete(3);
        assert_eq!(
            brute_isomorphism(&k3, &k3).unwrap(),
            Some(IsomorphismMapping::identity(3))
        );
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let tt = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(brute_isomorphism(&c6, &tt).unwrap(), None);
        let g = p4();
        assert_eq!(
            brute_isomorphism(&g, &g).unwrap(),
            Some(IsomorphismMapping::identity(4))
        );
    }

    #[test]
    fn size_guards() {
        let big = Graph::with_order(9);
        assert!(matches!(
            brute_isomorphism(&big, &big),
            Err(Error::SizeGuard { .. })
        ));
        let inst = DecoderInstance::new(
            Graph::with_order(5),
            Coloring::new(5, (0..5).map(Letter).collect()).unwrap(),
            Word::new((0..5).map(Letter).collect()),
        )
        .unwrap();
        assert!(matches!(
            enumerate_decoders(&inst),
            Err(Error::SizeGuard { .. })
        ));
        assert!(brute_lettericity(&big, 0).is_err());
    }
}
