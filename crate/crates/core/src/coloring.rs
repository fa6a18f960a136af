use crate::error::{malformed, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::letters::Letter;

/// A total vertex coloring `χ : V → Σ` with `|Σ| = alphabet_len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    letters: Vec<Letter>,
    alphabet_len: usize,
}

impl Coloring {
    pub fn new(alphabet_len: usize, letters: Vec<Letter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.0 >= alphabet_len) {
            return Err(malformed(format!(
                "color {} outside an alphabet of size {alphabet_len}",
                bad.0
            )));
        }
        Ok(Self {
            letters,
            alphabet_len,
        })
    }

    /// Checks that the coloring is total on `g`.
    pub fn check_total(&self, g: &Graph) -> Result<()> {
        if self.letters.len() != g.order() {
            return Err(malformed(format!(
                "coloring has {} entries for {} vertices",
                self.letters.len(),
                g.order()
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn letter(&self, v: Vertex) -> Letter {
        self.letters[v]
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet_len
    }

    /// `V_a` for every letter, as vertex lists in increasing order.
    pub fn groups(&self) -> Vec<Vec<Vertex>> {
        let mut groups = vec![Vec::new(); self.alphabet_len];
        for (v, l) in self.letters.iter().enumerate() {
            groups[l.0].push(v);
        }
        groups
    }

    /// `V_a` for every letter, as bitsets over `0..n`.
    pub fn group_sets(&self) -> Vec<VertexSet> {
        let n = self.letters.len();
        let mut sets = vec![VertexSet::with_capacity(n); self.alphabet_len];
        for (v, l) in self.letters.iter().enumerate() {
            sets[l.0].insert(v);
        }
        sets
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.alphabet_len];
        for l in &self.letters {
            sizes[l.0] += 1;
        }
        sizes
    }
}
