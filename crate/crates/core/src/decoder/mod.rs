//! Decoder retrieval: given `(G, Σ, χ, w)`, find `D ⊆ Σ²` such that `G` is
//! isomorphic to `G(D, w)` respecting `χ`.
//!
//! Pipeline: sanity checks on color groups and one-sided pairs, then a 2-SAT
//! formula over the orientations of the one-sided pairs, then assembly of the
//! final decoder from a satisfying assignment plus the greedily fixed words.

mod formula;
mod instance;
mod pairs;
mod verify;

pub use formula::{build_formula, FormulaOutcome, Rejection};
pub use instance::DecoderInstance;
pub use pairs::{
    cascade_word, classify_pair, forced_pair_word, Cascade, PairClass, PairForcing, PairKind,
    PairProfile,
};
pub(crate) use pairs::{is_one_sided, runs_in_pair};
pub use verify::{place_decoder, verify_decoder};

use crate::error::{Error, Result};
use crate::letters::{Decoder, DirectedPair};
use crate::twosat::solve_2sat;

use formula::{build_formula_with, PairTable};

/// Result of a successful run of the retrieval pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecoderOutcome {
    Solution(Decoder),
    Rejected(Rejection),
    Unsatisfiable,
}

impl DecoderOutcome {
    pub fn decoder(&self) -> Option<&Decoder> {
        match self {
            Self::Solution(d) => Some(d),
            _ => None,
        }
    }
}

/// Solves decoder retrieval, reporting why an instance was found infeasible.
pub fn retrieve_decoder_detailed(instance: &DecoderInstance) -> Result<DecoderOutcome> {
    instance.require_all_colors_used()?;
    let table = PairTable::new(instance);
    let formula = match build_formula_with(instance, &table)? {
        FormulaOutcome::Formula(f) => f,
        FormulaOutcome::Rejected(r) => return Ok(DecoderOutcome::Rejected(r)),
    };
    let Some(assignment) = solve_2sat(&formula) else {
        return Ok(DecoderOutcome::Unsatisfiable);
    };

    let k = instance.alphabet_len();
    let mut decoder = Decoder::from_pairs(
        k,
        formula
            .variables()
            .iter()
            .zip(&assignment)
            .filter(|(_, &value)| value)
            .map(|(&p, _)| p),
    );
    let g = instance.graph();
    for a in instance.letters() {
        if instance.group_len(a) >= 2 && g.is_clique(instance.group(a)) {
            decoder.insert(a, a);
        }
        for b in instance.letters().filter(|&b| b > a) {
            if !table.is_one_sided(a, b)
                && instance.cross_edge_count(a, b) == instance.group_len(a) * instance.group_len(b)
            {
                decoder.insert_pair(DirectedPair::new(a, b));
                decoder.insert_pair(DirectedPair::new(b, a));
            }
        }
    }

    if !verify_decoder(instance, &decoder)? {
        return Err(Error::Internal(format!(
            "assembled decoder {decoder:?} fails verification"
        )));
    }
    Ok(DecoderOutcome::Solution(decoder))
}

/// Solves decoder retrieval. `Ok(None)` means no decoder exists.
pub fn retrieve_decoder(instance: &DecoderInstance) -> Result<Option<Decoder>> {
    retrieve_decoder_detailed(instance).map(|o| match o {
        DecoderOutcome::Solution(d) => Some(d),
        _ => None,
    })
}
