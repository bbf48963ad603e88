//! Permutations in one-line notation, pattern containment, longest increasing
//! subsequences and descent sets.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of `{1, 2, ..., n}` in one-line notation.
///
/// The empty permutation (`n = 0`) is legal everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation, checking that the word uses each of `1..=n` once.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &e in &entries {
            if e == 0 || e > n {
                return Err(Error::InvalidPermutation(format!(
                    "entry {e} out of range 1..={n}"
                )));
            }
            if seen[e] {
                return Err(Error::InvalidPermutation(format!("entry {e} repeated")));
            }
            seen[e] = true;
        }
        Ok(Permutation { entries })
    }

    /// The identity permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// The group inverse: `w.inverse().at(w.at(i)) == i`.
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.entries.len()];
        for (i, &e) in self.entries.iter().enumerate() {
            inv[e - 1] = i + 1;
        }
        Permutation { entries: inv }
    }

    pub fn is_involution(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, &e)| self.entries[e - 1] == i + 1)
    }

    /// The reverse `w_n ... w_1`.
    pub fn reverse(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.reverse();
        Permutation { entries }
    }

    /// The complement, sending each entry `e` to `n + 1 - e`.
    pub fn complement(&self) -> Self {
        let n = self.entries.len();
        Permutation {
            entries: self.entries.iter().map(|&e| n + 1 - e).collect(),
        }
    }

    /// Reverse-complement, the composite of `reverse` and `complement`.
    pub fn reverse_complement(&self) -> Self {
        self.reverse().complement()
    }

    /// Positions `i` with `w_i > w_{i+1}` (1-based, so `i` ranges over `1..n`).
    pub fn descent_set(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Length of the longest increasing subsequence, by patience sorting.
    pub fn lis_length(&self) -> usize {
        lis_length_of(&self.entries)
    }

    /// Order-isomorphic copy of an arbitrary word of distinct values.
    pub fn standardize(word: &[usize]) -> Self {
        let mut sorted: Vec<usize> = word.to_vec();
        sorted.sort_unstable();
        let rank = |v: usize| sorted.binary_search(&v).unwrap() + 1;
        Permutation {
            entries: word.iter().map(|&v| rank(v)).collect(),
        }
    }

    /// True iff some subsequence of `self` is order-isomorphic to `pattern`.
    ///
    /// The empty pattern is contained in every word. Monotone increasing
    /// patterns are dispatched through `lis_length`; the general case is a
    /// depth-first search over positions that prunes on partial
    /// order-isomorphism.
    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        if pattern.entries.iter().enumerate().all(|(i, &e)| e == i + 1) {
            return self.lis_length() >= k;
        }
        let mut chosen = Vec::with_capacity(k);
        contains_search(&self.entries, &pattern.entries, 0, &mut chosen)
    }

    /// Negation of `contains_pattern`.
    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains_pattern(pattern)
    }
}

/// Longest increasing subsequence length of a word of distinct values.
pub fn lis_length_of(word: &[usize]) -> usize {
    // tails[j] = smallest tail of an increasing subsequence of length j+1
    let mut tails: Vec<usize> = Vec::new();
    for &v in word {
        match tails.binary_search(&v) {
            Ok(_) => unreachable!("distinct values"),
            Err(pos) => {
                if pos == tails.len() {
                    tails.push(v);
                } else {
                    tails[pos] = v;
                }
            }
        }
    }
    tails.len()
}

/// For each position, the length of the longest increasing subsequence ending
/// there.
pub fn lis_ending_lengths(word: &[usize]) -> Vec<usize> {
    let n = word.len();
    let mut lens = vec![0usize; n];
    for i in 0..n {
        let mut best = 0;
        for j in 0..i {
            if word[j] < word[i] && lens[j] > best {
                best = lens[j];
            }
        }
        lens[i] = best + 1;
    }
    lens
}

fn contains_search(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let t = chosen.len();
    if t == pattern.len() {
        return true;
    }
    for pos in start..word.len() {
        if word.len() - pos < pattern.len() - t {
            return false;
        }
        let v = word[pos];
        // v must compare against every already-chosen value the way
        // pattern[t] compares against the corresponding pattern value.
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(s, &u)| (u < v) == (pattern[s] < pattern[t]));
        if ok {
            chosen.push(v);
            if contains_search(word, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.iter().all(|&e| e <= 9) {
            for e in &self.entries {
                write!(f, "{e}")?;
            }
        } else {
            for (i, e) in self.entries.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}
