//! Reduction of decoder retrieval to 2-SAT.
//!
//! Only one-sided pairs need a decision; every other part of the decoder is
//! fixed greedily. Variables are the words `ab` and `ba` of each one-sided
//! pair `{a, b}`, and the formula is built from four clause families:
//!
//! 1. `ab ∨ ba` and `¬ab ∨ ¬ba`: exactly one word per one-sided pair.
//! 2. A unit clause `d_ab` whenever `w[a,b]` is not a palindrome.
//! 3. `¬d_ab ∨ d_bc` for pairs `{a,b}`, `{b,c}` sharing a letter `b` that has
//!    at least two runs in both projections, with `w[b,c]` a palindrome.
//! 4. `¬d_ab` whenever choosing `d_ab` makes the block subinstance `I_a`
//!    (all one-sided partners of `a` with ≥ 2 `a`-runs) unrealizable.

use std::collections::HashMap;

use crate::error::Result;
use crate::letter_graph::is_palindrome;
use crate::letters::{Decoder, DirectedPair, Letter};
use crate::twosat::Cnf2Formula;

use super::pairs::{cascade_word, forced_pair_word, is_one_sided, runs_in_pair};
use super::{verify_decoder, Cascade, DecoderInstance, PairForcing};

/// Why an instance was rejected before (or instead of) producing a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rejection {
    /// `G[V_a]` is neither a clique nor an independent set.
    MixedColorGroup(Letter),
    /// A one-sided pair whose projection is in `a⁺b⁺ ∪ b⁺a⁺`.
    SingleRuns(Letter, Letter),
    /// A one-sided pair that no orientation realizes, even in isolation.
    InfeasiblePair(Letter, Letter),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaOutcome {
    Formula(Cnf2Formula<DirectedPair>),
    Rejected(Rejection),
}

/// Analysis shared by the sanity checks, the formula and the final assembly.
pub(crate) struct PairTable {
    pub one_sided: Vec<(Letter, Letter)>,
    one_sided_lookup: Vec<bool>,
    k: usize,
}

impl PairTable {
    pub fn new(instance: &DecoderInstance) -> Self {
        let k = instance.alphabet_len();
        let mut one_sided = Vec::new();
        let mut one_sided_lookup = vec![false; k * k];
        for a in instance.letters() {
            for b in instance.letters().filter(|&b| b > a) {
                if is_one_sided(instance, a, b) {
                    one_sided.push((a, b));
                    one_sided_lookup[a.0 * k + b.0] = true;
                    one_sided_lookup[b.0 * k + a.0] = true;
                }
            }
        }
        Self {
            one_sided,
            one_sided_lookup,
            k,
        }
    }

    pub fn is_one_sided(&self, a: Letter, b: Letter) -> bool {
        self.one_sided_lookup[a.0 * self.k + b.0]
    }
}

/// The sanity checks that precede the reduction.
pub(crate) fn sanity_check(instance: &DecoderInstance, table: &PairTable) -> Option<Rejection> {
    let g = instance.graph();
    for a in instance.letters() {
        let group = instance.group(a);
        if !g.is_clique(group) && !g.is_independent(group) {
            return Some(Rejection::MixedColorGroup(a));
        }
    }
    for &(a, b) in &table.one_sided {
        if runs_in_pair(instance, a, b, a) == 1 && runs_in_pair(instance, a, b, b) == 1 {
            return Some(Rejection::SingleRuns(a, b));
        }
    }
    None
}

struct Builder<'a> {
    instance: &'a DecoderInstance,
    table: &'a PairTable,
    formula: Cnf2Formula<DirectedPair>,
    forced: HashMap<(Letter, Letter), PairForcing>,
    cascades: HashMap<(Letter, Letter, Letter, DirectedPair), Cascade>,
}

impl Builder<'_> {
    fn forced(&mut self, a: Letter, b: Letter) -> Result<PairForcing> {
        let key = (a.min(b), a.max(b));
        if let Some(&f) = self.forced.get(&key) {
            return Ok(f);
        }
        let f = forced_pair_word(self.instance, key.0, key.1)?;
        self.forced.insert(key, f);
        Ok(f)
    }

    fn cascade(
        &mut self,
        a: Letter,
        b: Letter,
        c: Letter,
        premise: DirectedPair,
    ) -> Result<Cascade> {
        let key = (a, b, c, premise);
        if let Some(&r) = self.cascades.get(&key) {
            return Ok(r);
        }
        let r = cascade_word(self.instance, a, b, c, premise)?;
        self.cascades.insert(key, r);
        Ok(r)
    }

    fn palindromic(&self, a: Letter, b: Letter) -> bool {
        is_palindrome(&self.instance.projection(&[a, b]))
    }

    fn pos(&self, p: DirectedPair) -> crate::twosat::Literal {
        self.formula.lit(&p, true)
    }

    /// `P_a`: one-sided partners `b` of `a` with at least two `a`-runs in
    /// `w[a,b]`.
    fn partners(&self, a: Letter) -> Vec<Letter> {
        self.instance
            .letters()
            .filter(|&b| b != a && self.table.is_one_sided(a, b))
            .filter(|&b| runs_in_pair(self.instance, a, b, a) >= 2)
            .collect()
    }

    /// Whether `{d_ac : c ∈ P_a}` realizes the block subinstance `I_a`.
    fn block_realizable(
        &self,
        a: Letter,
        partners: &[Letter],
        words: &[DirectedPair],
    ) -> Result<bool> {
        let mut letters = partners.to_vec();
        letters.push(a);
        let kept: Vec<_> = partners.iter().map(|&c| (a, c)).collect();
        let sub = self.instance.restrict(&letters, &kept);
        let d = Decoder::from_pairs(self.instance.alphabet_len(), words.iter().copied());
        verify_decoder(&sub, &d)
    }

    fn build(mut self) -> Result<FormulaOutcome> {
        let letters: Vec<Letter> = self.instance.letters().collect();

        // 1. exactly one word per one-sided pair
        for &(a, b) in &self.table.one_sided {
            let ab = self.pos(DirectedPair::new(a, b));
            let ba = self.pos(DirectedPair::new(b, a));
            self.formula.add_binary(ab, ba);
            self.formula.add_binary(ab.negated(), ba.negated());
        }

        // 2. forced words of non-palindromic pairs
        for &(a, b) in &self.table.one_sided {
            if self.palindromic(a, b) {
                continue;
            }
            match self.forced(a, b)? {
                PairForcing::Forced(d) => {
                    let lit = self.pos(d);
                    self.formula.add_unit(lit);
                }
                PairForcing::Infeasible => {
                    return Ok(FormulaOutcome::Rejected(Rejection::InfeasiblePair(a, b)))
                }
                PairForcing::Free => {}
            }
        }

        // 3. implications through a shared letter b, for every ordered triple
        for &b in &letters {
            for &a in &letters {
                for &c in &letters {
                    if a == b || c == b || a == c {
                        continue;
                    }
                    if !(self.table.is_one_sided(a, b) && self.table.is_one_sided(b, c)) {
                        continue;
                    }
                    if runs_in_pair(self.instance, a, b, b) < 2
                        || runs_in_pair(self.instance, b, c, b) < 2
                        || !self.palindromic(b, c)
                    {
                        continue;
                    }
                    for premise in [DirectedPair::new(a, b), DirectedPair::new(b, a)] {
                        let lit = self.pos(premise);
                        match self.cascade(a, b, c, premise)? {
                            Cascade::Implied(d) => {
                                let implied = self.pos(d);
                                self.formula.add_binary(lit.negated(), implied);
                            }
                            Cascade::NoSolutionWithPremise => self.formula.add_unit(lit.negated()),
                        }
                    }
                }
            }
        }

        // 4. block clauses
        for &a in &letters {
            let partners = self.partners(a);
            if partners.is_empty() {
                continue;
            }
            let (palindromic, non_palindromic): (Vec<Letter>, Vec<Letter>) =
                partners.iter().partition(|&&c| self.palindromic(a, c));

            if let Some(&b) = non_palindromic.first() {
                // 4a: the anchor pair is forced, the palindromic partners follow it
                let premise = match self.forced(a, b)? {
                    PairForcing::Forced(d) => d,
                    PairForcing::Infeasible => {
                        return Ok(FormulaOutcome::Rejected(Rejection::InfeasiblePair(a, b)))
                    }
                    PairForcing::Free => {
                        return Err(crate::error::Error::Internal(format!(
                            "non-palindromic pair ({}, {}) left free",
                            a.0, b.0
                        )))
                    }
                };
                let mut words = Vec::with_capacity(partners.len());
                let mut consistent = true;
                for &c in &non_palindromic {
                    match self.forced(a, c)? {
                        PairForcing::Forced(d) => words.push(d),
                        PairForcing::Infeasible => {
                            return Ok(FormulaOutcome::Rejected(Rejection::InfeasiblePair(a, c)))
                        }
                        PairForcing::Free => {
                            return Err(crate::error::Error::Internal(format!(
                                "non-palindromic pair ({}, {}) left free",
                                a.0, c.0
                            )))
                        }
                    }
                }
                for &c in &palindromic {
                    match self.cascade(b, a, c, premise)? {
                        Cascade::Implied(d) => words.push(d),
                        Cascade::NoSolutionWithPremise => {
                            consistent = false;
                            break;
                        }
                    }
                }
                if !consistent || !self.block_realizable(a, &partners, &words)? {
                    let lit = self.pos(premise);
                    self.formula.add_unit(lit.negated());
                }
            } else {
                // 4b: all partners palindromic; try both words of the anchor pair
                let b = palindromic[0];
                for premise in [DirectedPair::new(a, b), DirectedPair::new(b, a)] {
                    let mut words = vec![premise];
                    let mut consistent = true;
                    for &c in &palindromic[1..] {
                        match self.cascade(b, a, c, premise)? {
                            Cascade::Implied(d) => words.push(d),
                            Cascade::NoSolutionWithPremise => {
                                consistent = false;
                                break;
                            }
                        }
                    }
                    if !consistent || !self.block_realizable(a, &partners, &words)? {
                        let lit = self.pos(premise);
                        self.formula.add_unit(lit.negated());
                    }
                }
            }
        }

        Ok(FormulaOutcome::Formula(self.formula))
    }
}

pub(crate) fn build_formula_with(
    instance: &DecoderInstance,
    table: &PairTable,
) -> Result<FormulaOutcome> {
    if let Some(r) = sanity_check(instance, table) {
        return Ok(FormulaOutcome::Rejected(r));
    }
    let variables = table
        .one_sided
        .iter()
        .flat_map(|&(a, b)| [DirectedPair::new(a, b), DirectedPair::new(b, a)]);
    let builder = Builder {
        instance,
        table,
        formula: Cnf2Formula::new(variables),
        forced: HashMap::new(),
        cascades: HashMap::new(),
    };
    builder.build()
}

/// Runs the sanity checks and builds the 2-SAT formula whose satisfiability
/// is equivalent to the existence of a solution decoder.
pub fn build_formula(instance: &DecoderInstance) -> Result<FormulaOutcome> {
    instance.require_all_colors_used()?;
    build_formula_with(instance, &PairTable::new(instance))
}
