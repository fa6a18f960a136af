//! Random instance generation.
//!
//! A feasible instance is sampled as `(Σ, D, w)`, decoded, shuffled and then
//! stripped of the object the mode asks for. An infeasible one is a feasible
//! instance with one vertex pair toggled; the matching oracle is consulted
//! and its verdict recorded under `meta.oracle`.

use indexmap::IndexMap;
use lettericity::oracle::{brute_isomorphism, brute_word_retrieval, enumerate_decoders};
use lettericity::random::{
    plant, random_decoder, random_word, seeded, toggle_random_pair, PlantedGraph,
};
use lettericity::{decode, Alphabet, Error, Result};
use serde_json::{json, Value};

use crate::document::{coloring_document, graph_document, InstanceDocument, Mode};

/// Perturbations tried before giving up on an oracle-confirmed NO.
const PERTURBATION_ATTEMPTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub seed: u64,
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    pub feasible: bool,
}

/// Oracle verdict on a perturbed instance.
fn oracle_verdict(planted: &PlantedGraph, mode: Mode) -> Result<Option<bool>> {
    let outcome = match mode {
        Mode::Word => brute_word_retrieval(&planted.graph, &planted.coloring, &planted.decoder)
            .map(|s| s.is_some()),
        Mode::Decoder => enumerate_decoders(&planted.decoder_instance()).map(|all| !all.is_empty()),
        Mode::Coloring => {
            let target = decode(&planted.decoder, &planted.word)?.graph;
            brute_isomorphism(&planted.graph, &target).map(|f| f.is_some())
        }
    };
    match outcome {
        Ok(feasible) => Ok(Some(feasible)),
        Err(Error::SizeGuard { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn generate(params: GenParams) -> Result<InstanceDocument> {
    let GenParams {
        seed,
        n,
        k,
        mode,
        feasible,
    } = params;
    if n == 0 || k == 0 {
        return Err(Error::Malformed("gen needs n ≥ 1 and k ≥ 1".into()));
    }
    let mut rng = seeded(seed);
    // every letter must color some vertex, so at most n letters are used
    let k = k.min(n);
    let alphabet = Alphabet::latin(k);
    let word = random_word(&mut rng, n, k, true);
    let decoder = random_decoder(&mut rng, k, 0.5);
    let base = plant(&mut rng, decoder, word);

    let mut meta: IndexMap<String, Value> = IndexMap::new();
    meta.insert("seed".into(), json!(seed));
    meta.insert("n".into(), json!(n));
    meta.insert("k".into(), json!(k));
    meta.insert("mode".into(), json!(mode.name()));
    meta.insert("feasible".into(), json!(feasible));

    let planted = if feasible {
        meta.insert("oracle".into(), json!("feasible by construction"));
        base
    } else {
        let mut chosen = None;
        for attempt in 1..=PERTURBATION_ATTEMPTS {
            let mut candidate = base.clone();
            if !toggle_random_pair(&mut rng, &mut candidate.graph) {
                break;
            }
            match oracle_verdict(&candidate, mode)? {
                Some(false) => {
                    meta.insert("oracle".into(), json!("confirmed infeasible"));
                    meta.insert("attempts".into(), json!(attempt));
                    chosen = Some(candidate);
                    break;
                }
                Some(true) => continue,
                None => {
                    meta.insert(
                        "oracle".into(),
                        json!("unchecked: instance exceeds oracle limits"),
                    );
                    chosen = Some(candidate);
                    break;
                }
            }
        }
        match chosen {
            Some(c) => c,
            None => {
                meta.insert(
                    "oracle".into(),
                    json!("not confirmed: every perturbation stayed feasible"),
                );
                let mut fallback = base.clone();
                toggle_random_pair(&mut rng, &mut fallback.graph);
                fallback
            }
        }
    };

    let g = &planted.graph;
    let mut doc = InstanceDocument {
        graph: Some(graph_document(g)),
        alphabet: Some(alphabet.names().to_vec()),
        meta: Some(meta),
        ..InstanceDocument::default()
    };
    if mode != Mode::Coloring {
        doc.coloring = Some(coloring_document(g, &alphabet, &planted.coloring));
    }
    if mode != Mode::Word {
        doc.word = Some(alphabet.render_word(&planted.word));
    }
    if mode != Mode::Decoder {
        doc.decoder = Some(
            alphabet
                .render_decoder(&planted.decoder)
                .into_iter()
                .collect(),
        );
    }
    Ok(doc)
}
