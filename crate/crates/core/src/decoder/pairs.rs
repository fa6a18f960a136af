//! Per-pair analysis: classification of color pairs, forced decoder words for
//! non-palindromic projections, and the implications between pairs that share
//! a letter.

use crate::error::{Error, Result};
use crate::letter_graph::{count_runs, is_palindrome, run_lengths};
use crate::letters::{Decoder, DirectedPair, Letter};

use super::{verify_decoder, DecoderInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairKind {
    /// Every possible edge between the two color groups is present.
    Full,
    /// No edge between the two color groups.
    Empty,
    /// Some but not all edges present.
    OneSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClass {
    pub kind: PairKind,
    pub edge_count: usize,
    pub capacity: usize,
}

/// Shape of `w[a,b]` and of the bipartite graph between the two groups.
///
/// The profile is normalized so that `lead` is the first letter of `w[a,b]`;
/// `swapped` records whether that reversed the requested order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairProfile {
    pub lead: Letter,
    pub other: Letter,
    pub swapped: bool,
    pub lead_runs: usize,
    pub other_runs: usize,
    pub palindrome: bool,
    /// Vertices of the lead group adjacent to every vertex of the other group.
    pub universal_count: usize,
    /// Vertices of the lead group with no neighbor in the other group.
    pub isolated_count: usize,
    /// Lengths of the first and last lead-letter runs.
    pub first_run_len: usize,
    pub last_run_len: usize,
}

pub fn classify_pair(instance: &DecoderInstance, a: Letter, b: Letter) -> (PairClass, PairProfile) {
    debug_assert_ne!(a, b);
    let edge_count = instance.cross_edge_count(a, b);
    let capacity = instance.group_len(a) * instance.group_len(b);
    let kind = if edge_count == capacity {
        PairKind::Full
    } else if edge_count == 0 {
        PairKind::Empty
    } else {
        PairKind::OneSided
    };
    // `Full` wins for empty groups (0 = 0 = capacity); such pairs impose nothing.

    let projected = instance.projection(&[a, b]);
    let swapped = projected.letters().first() == Some(&b);
    let (lead, other) = if swapped { (b, a) } else { (a, b) };
    let g = instance.graph();
    let other_group = instance.group(other);
    let other_len = instance.group_len(other);
    let (mut universal_count, mut isolated_count) = (0, 0);
    for v in instance.group(lead).ones() {
        let deg = g.neighbors(v).intersection(other_group).count();
        if deg == other_len {
            universal_count += 1;
        }
        if deg == 0 {
            isolated_count += 1;
        }
    }
    let runs = run_lengths(&projected, lead);
    let profile = PairProfile {
        lead,
        other,
        swapped,
        lead_runs: runs.len(),
        other_runs: count_runs(&projected, other),
        palindrome: is_palindrome(&projected),
        universal_count,
        isolated_count,
        first_run_len: runs.first().copied().unwrap_or(0),
        last_run_len: runs.last().copied().unwrap_or(0),
    };
    (
        PairClass {
            kind,
            edge_count,
            capacity,
        },
        profile,
    )
}

pub(crate) fn is_one_sided(instance: &DecoderInstance, a: Letter, b: Letter) -> bool {
    let edges = instance.cross_edge_count(a, b);
    edges > 0 && edges < instance.group_len(a) * instance.group_len(b)
}

/// Number of `c`-runs in `w[{a, b}]`.
pub(crate) fn runs_in_pair(instance: &DecoderInstance, a: Letter, b: Letter, c: Letter) -> usize {
    count_runs(&instance.projection(&[a, b]), c)
}

/// Outcome of deciding `D ∩ {ab, ba}` on the pair subinstance alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairForcing {
    /// Exactly one of `ab`, `ba` realizes the pair; every solution contains it.
    Forced(DirectedPair),
    /// Both orientations realize the pair.
    Free,
    /// Neither orientation realizes the pair; the instance has no solution.
    Infeasible,
}

/// Decides which of `ab` / `ba` every solution must contain.
///
/// Both candidates are checked on the pair subinstance
/// `(E(V_a, V_b), {a, b}, χ|, w[a,b])`. For a non-palindromic `w[a,b]` at most
/// one of them can pass. This replaces the inductive argument that strips the
/// first and last runs (using the counts of universal and isolated vertices)
/// and yields the same word.
pub fn forced_pair_word(instance: &DecoderInstance, a: Letter, b: Letter) -> Result<PairForcing> {
    if a == b || !is_one_sided(instance, a, b) {
        return Err(Error::Internal(format!(
            "forced_pair_word needs a one-sided pair, got ({}, {})",
            a.0, b.0
        )));
    }
    if runs_in_pair(instance, a, b, a) < 2 && runs_in_pair(instance, a, b, b) < 2 {
        return Err(Error::Internal(format!(
            "pair ({}, {}) has a single run of each letter",
            a.0, b.0
        )));
    }
    let sub = instance.restrict(&[a, b], &[(a, b)]);
    let k = instance.alphabet_len();
    let ab = DirectedPair::new(a, b);
    let with_ab = verify_decoder(&sub, &Decoder::from_pairs(k, [ab]))?;
    let with_ba = verify_decoder(&sub, &Decoder::from_pairs(k, [ab.reversed()]))?;
    Ok(match (with_ab, with_ba) {
        (true, false) => PairForcing::Forced(ab),
        (false, true) => PairForcing::Forced(ab.reversed()),
        (true, true) => PairForcing::Free,
        (false, false) => PairForcing::Infeasible,
    })
}

/// What a premise on `{a, b}` implies for `{b, c}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cascade {
    /// Every solution containing the premise also contains this word.
    Implied(DirectedPair),
    /// No solution contains the premise.
    NoSolutionWithPremise,
}

/// Given `d_ab ∈ {ab, ba}`, determines the word of `{bc, cb}` that every
/// solution containing `d_ab` must contain.
///
/// Checks `{d_ab, bc}` and `{d_ab, cb}` on the subinstance
/// `(E(V_b, V_a ∪ V_c), {a, b, c}, χ|, w[a,b,c])`. Requires `{a,b}` and
/// `{b,c}` to be distinct one-sided pairs whose projections each have at
/// least two `b`-runs, with `w[b,c]` a palindrome; under these conditions at
/// most one candidate passes.
pub fn cascade_word(
    instance: &DecoderInstance,
    a: Letter,
    b: Letter,
    c: Letter,
    premise: DirectedPair,
) -> Result<Cascade> {
    let precondition = a != b
        && b != c
        && a != c
        && is_one_sided(instance, a, b)
        && is_one_sided(instance, b, c)
        && runs_in_pair(instance, a, b, b) >= 2
        && runs_in_pair(instance, b, c, b) >= 2
        && is_palindrome(&instance.projection(&[b, c]))
        && (premise == DirectedPair::new(a, b) || premise == DirectedPair::new(b, a));
    if !precondition {
        return Err(Error::Internal(format!(
            "cascade_word preconditions fail for ({}, {}, {})",
            a.0, b.0, c.0
        )));
    }
    let sub = instance.restrict(&[a, b, c], &[(a, b), (b, c)]);
    let k = instance.alphabet_len();
    let bc = DirectedPair::new(b, c);
    let with_bc = verify_decoder(&sub, &Decoder::from_pairs(k, [premise, bc]))?;
    let with_cb = verify_decoder(&sub, &Decoder::from_pairs(k, [premise, bc.reversed()]))?;
    match (with_bc, with_cb) {
        (true, false) => Ok(Cascade::Implied(bc)),
        (false, true) => Ok(Cascade::Implied(bc.reversed())),
        (false, false) => Ok(Cascade::NoSolutionWithPremise),
        (true, true) => Err(Error::Internal(format!(
            "both orientations of ({}, {}) are compatible with the premise",
            b.0, c.0
        ))),
    }
}
