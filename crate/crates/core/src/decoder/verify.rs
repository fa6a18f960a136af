//! Deciding whether a given decoder solves a decoder-retrieval instance.
//!
//! The word is consumed left to right. For its first letter `a`, any vertex
//! of `V_a` whose neighborhood among the remaining vertices is exactly
//! `⋃ { V_b : ab ∈ D }` (minus itself) may be placed at that position. Two
//! eligible vertices are generalized twins in the remaining graph, so the
//! choice never matters; we take the smallest index.

use crate::error::{malformed, Result};
use crate::graph::{Vertex, VertexSet};
use crate::letters::{Decoder, Letter};

use super::DecoderInstance;

/// Runs the greedy placement. Returns the vertex placed at each position, or
/// `None` if `decoder` is not a solution.
pub fn place_decoder(instance: &DecoderInstance, decoder: &Decoder) -> Result<Option<Vec<Vertex>>> {
    let k = instance.alphabet_len();
    if decoder.alphabet_len() != k {
        return Err(malformed(format!(
            "decoder alphabet has {} letters, instance alphabet has {k}",
            decoder.alphabet_len()
        )));
    }
    let g = instance.graph();
    let n = g.order();

    // row[a] = ⋃ { V_b : ab ∈ D }
    let rows: Vec<VertexSet> = (0..k)
        .map(|a| {
            let mut row = g.empty_set();
            for b in 0..k {
                if decoder.contains(Letter(a), Letter(b)) {
                    row.union_with(instance.group(Letter(b)));
                }
            }
            row
        })
        .collect();

    let mut remaining = g.full_set();
    let mut placement = Vec::with_capacity(n);
    let mut target = g.empty_set();
    let mut neighborhood = g.empty_set();
    for a in instance.word().iter() {
        target.clone_from(&rows[a.0]);
        target.intersect_with(&remaining);
        let chosen = instance.group(a).intersection(&remaining).find(|&v| {
            neighborhood.clone_from(g.neighbors(v));
            neighborhood.intersect_with(&remaining);
            let had_self = target.contains(v);
            target.set(v, false);
            let ok = neighborhood == target;
            target.set(v, had_self);
            ok
        });
        match chosen {
            Some(v) => {
                remaining.set(v, false);
                placement.push(v);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(placement))
}

/// Whether `decoder` is a solution: some bijection of the vertices onto the
/// positions of `w` respects the coloring and turns `G` into `G(D, w)`.
pub fn verify_decoder(instance: &DecoderInstance, decoder: &Decoder) -> Result<bool> {
    place_decoder(instance, decoder).map(|p| p.is_some())
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::coloring::Coloring;
    use crate::graph::Graph;
    use crate::letters::{Alphabet, Word};

    pub(crate) fn abbaba() -> (DecoderInstance, Alphabet) {
        let sigma = Alphabet::latin(2);
        let mut g = Graph::with_labels(["a1", "a2", "a3", "b1", "b2", "b3"]).unwrap();
        for (x, y) in [("a1", "b1"), ("a1", "b2"), ("a1", "b3"), ("a2", "b3")] {
            g.add_edge_by_label(x, y).unwrap();
        }
        let chi = Coloring::new(2, [0, 0, 0, 1, 1, 1].map(Letter).to_vec()).unwrap();
        let w = sigma.word_from_chars("abbaba").unwrap();
        (DecoderInstance::new(g, chi, w).unwrap(), sigma)
    }

    #[test]
    fn abbaba_placement() {
        let (inst, sigma) = abbaba();
        let ab = sigma.decoder(&[("a", "b")]).unwrap();
        let placement = place_decoder(&inst, &ab).unwrap().unwrap();
        let labels: Vec<_> = placement.iter().map(|&v| inst.graph().label(v)).collect();
        assert_eq!(labels, ["a1", "b1", "b2", "a2", "b3", "a3"]);
        assert!(!verify_decoder(&inst, &sigma.decoder(&[("b", "a")]).unwrap()).unwrap());
        assert!(!verify_decoder(&inst, &Decoder::new(2)).unwrap());
    }

    #[test]
    fn empty_instance() {
        let inst = DecoderInstance::new(
            Graph::new(),
            Coloring::new(1, vec![]).unwrap(),
            Word::default(),
        )
        .unwrap();
        assert!(verify_decoder(&inst, &Decoder::new(1)).unwrap());
        assert!(verify_decoder(&inst, &Decoder::from_mask(1, 1)).unwrap());
    }

    #[test]
    fn malformed_instances() {
        let g = Graph::with_order(2);
        let chi = Coloring::new(2, vec![Letter(0), Letter(1)]).unwrap();
        let w = Word::new(vec![Letter(0), Letter(0)]);
        assert!(DecoderInstance::new(g.clone(), chi.clone(), w).is_err());
        let short = Word::new(vec![Letter(0)]);
        assert!(DecoderInstance::new(g.clone(), chi.clone(), short).is_err());
        let ok = DecoderInstance::new(g, chi, Word::new(vec![Letter(1), Letter(0)])).unwrap();
        assert!(verify_decoder(&ok, &Decoder::new(3)).is_err());
    }
}
