//! Letters, alphabets, words and decoders.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::check_token;

/// A letter, identified by its index in an [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub usize);

impl Letter {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// An ordered set of named letters.
///
/// Letter names are arbitrary whitespace-free tokens, so a graph's vertex
/// labels can double as letters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Letter>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Self::default();
        for name in names {
            alphabet.push(name)?;
        }
        Ok(alphabet)
    }

    /// `a, b, c, …` for `k ≤ 26`, `l1, l2, …` beyond.
    pub fn latin(k: usize) -> Self {
        if k <= 26 {
            Self::new((0..k).map(|i| ((b'a' + i as u8) as char).to_string()))
        } else {
            Self::new((1..=k).map(|i| format!("l{i}")))
        }
        .expect("generated names are distinct tokens")
    }

    /// `1, 2, …, k`.
    pub fn numeric(k: usize) -> Self {
        Self::new((1..=k).map(|i| i.to_string())).expect("generated names are distinct tokens")
    }

    pub fn push(&mut self, name: impl Into<String>) -> Result<Letter> {
        let name = name.into();
        check_token(&name)?;
        if self.index.contains_key(&name) {
            return Err(Error::Malformed(format!("letter `{name}` declared twice")));
        }
        let letter = Letter(self.names.len());
        self.index.insert(name.clone(), letter);
        self.names.push(name);
        Ok(letter)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.len()).map(Letter)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn letter_or_err(&self, name: &str) -> Result<Letter> {
        self.letter(name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// Parses a word given as letter tokens.
    pub fn word<S: AsRef<str>>(&self, tokens: &[S]) -> Result<Word> {
        tokens
            .iter()
            .map(|t| self.letter_or_err(t.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }

    /// Parses a word whose letters are single characters, e.g. `"banane"`.
    pub fn word_from_chars(&self, text: &str) -> Result<Word> {
        let tokens: Vec<String> = text.chars().map(String::from).collect();
        self.word(&tokens)
    }

    /// Parses a decoder given as `(first, second)` letter tokens.
    pub fn decoder<S: AsRef<str>>(&self, pairs: &[(S, S)]) -> Result<Decoder> {
        let mut d = Decoder::new(self.len());
        for (a, b) in pairs {
            d.insert(
                self.letter_or_err(a.as_ref())?,
                self.letter_or_err(b.as_ref())?,
            );
        }
        Ok(d)
    }

    pub fn render_word(&self, word: &Word) -> Vec<String> {
        word.iter().map(|l| self.name(l).to_string()).collect()
    }

    pub fn render_decoder(&self, decoder: &Decoder) -> Vec<[String; 2]> {
        decoder
            .pairs()
            .map(|p| {
                [
                    self.name(p.first).to_string(),
                    self.name(p.second).to_string(),
                ]
            })
            .collect()
    }
}

/// A finite word; the empty word is allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    /// Number of occurrences of each letter `0..k`.
    pub fn letter_counts(&self, k: usize) -> Vec<usize> {
        let mut counts = vec![0; k];
        for l in self.iter() {
            counts[l.0] += 1;
        }
        counts
    }

    pub fn max_letter(&self) -> Option<Letter> {
        self.0.iter().copied().max()
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Letter;
    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// An ordered two-letter word `ab`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectedPair {
    pub first: Letter,
    pub second: Letter,
}

impl DirectedPair {
    pub fn new(first: Letter, second: Letter) -> Self {
        Self { first, second }
    }

    pub fn reversed(self) -> Self {
        Self::new(self.second, self.first)
    }
}

impl fmt::Display for DirectedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.first.0, self.second.0)
    }
}

/// A decoder: a set of ordered letter pairs over an alphabet of size `k`,
/// stored as a dense `k × k` table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Decoder {
    k: usize,
    table: Vec<bool>,
}

impl Decoder {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            table: vec![false; k * k],
        }
    }

    pub fn from_pairs(k: usize, pairs: impl IntoIterator<Item = DirectedPair>) -> Self {
        let mut d = Self::new(k);
        for p in pairs {
            d.insert(p.first, p.second);
        }
        d
    }

    /// Decoder whose pair `(a, b)` is present iff bit `a·k + b` of `mask` is
    /// set. Requires `k² ≤ 64`.
    pub fn from_mask(k: usize, mask: u64) -> Self {
        debug_assert!(k * k <= 64);
        let table = (0..k * k).map(|i| mask >> i & 1 == 1).collect();
        Self { k, table }
    }

    pub fn mask(&self) -> u64 {
        debug_assert!(self.k * self.k <= 64);
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .fold(0, |m, (i, _)| m | 1 << i)
    }

    pub fn alphabet_len(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn contains(&self, a: Letter, b: Letter) -> bool {
        self.table[a.0 * self.k + b.0]
    }

    pub fn contains_pair(&self, p: DirectedPair) -> bool {
        self.contains(p.first, p.second)
    }

    pub fn insert(&mut self, a: Letter, b: Letter) {
        self.table[a.0 * self.k + b.0] = true;
    }

    pub fn insert_pair(&mut self, p: DirectedPair) {
        self.insert(p.first, p.second);
    }

    pub fn remove(&mut self, a: Letter, b: Letter) {
        self.table[a.0 * self.k + b.0] = false;
    }

    pub fn len(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = DirectedPair> + '_ {
        let k = self.k;
        self.table
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(i, _)| DirectedPair::new(Letter(i / k), Letter(i % k)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.pairs().all(|p| self.contains_pair(p.reversed()))
    }

    /// The pairs `p` of this decoder with `keep(p)`.
    pub fn restrict(&self, keep: impl Fn(DirectedPair) -> bool) -> Self {
        Self::from_pairs(self.k, self.pairs().filter(|&p| keep(p)))
    }
}

impl fmt::Debug for Decoder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|p| (p.first.0, p.second.0)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_parsing() {
        let sigma = Alphabet::latin(3);
        assert_eq!(sigma.names(), &["a", "b", "c"]);
        let w = sigma.word_from_chars("cab").unwrap();
        assert_eq!(w.letters(), &[Letter(2), Letter(0), Letter(1)]);
        assert!(matches!(
            sigma.word_from_chars("abz"),
            Err(Error::UnknownLetter(_))
        ));
        assert!(Alphabet::new(["x", "x"]).is_err());
        assert_eq!(Alphabet::latin(30).name(Letter(29)), "l30");
    }

    #[test]
    fn decoder_mask_round_trip() {
        let sigma = Alphabet::latin(3);
        let d = sigma
            .decoder(&[("b", "a"), ("a", "c"), ("c", "c")])
            .unwrap();
        assert_eq!(Decoder::from_mask(3, d.mask()), d);
        let pairs: Vec<_> = d.pairs().map(|p| (p.first.0, p.second.0)).collect();
        assert_eq!(pairs, vec![(0, 2), (1, 0), (2, 2)]);
        assert!(!d.is_symmetric());
        assert_eq!(d.len(), 3);
    }

    #[test]
    fn decoder_restriction() {
        let sigma = Alphabet::latin(2);
        let d = sigma
            .decoder(&[("a", "a"), ("a", "b"), ("b", "a")])
            .unwrap();
        assert!(d.is_symmetric());
        let cross = d.restrict(|p| p.first != p.second);
        assert_eq!(cross.len(), 2);
        assert!(!cross.contains(Letter(0), Letter(0)));
    }
}
