//! Letter-level views of reduced words, used by the closure engine to
//! enumerate only those actors whose action can stay inside a length bound.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::word::{Generator, GroupWord, WordMode};

/// A single letter `g` or `g^-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub(crate) struct Letter {
    pub generator: Generator,
    pub negative: bool,
}

impl Letter {
    fn inverse(self, mode: WordMode) -> Letter {
        match mode {
            WordMode::Free => Letter {
                generator: self.generator,
                negative: !self.negative,
            },
            WordMode::Involutory => self,
        }
    }
}

pub(crate) fn to_letters(word: &GroupWord) -> Vec<Letter> {
    let mut out = Vec::with_capacity(word.len());
    for s in word.syllables() {
        let letter = Letter {
            generator: s.generator,
            negative: s.exponent < 0,
        };
        for _ in 0..s.exponent.unsigned_abs() {
            out.push(letter);
        }
    }
    out
}

#[cfg(test)]
pub(crate) fn from_letters(letters: &[Letter], mode: WordMode) -> GroupWord {
    let mut word = GroupWord::identity(mode);
    for l in letters {
        word.push(l.generator, if l.negative { -1 } else { 1 });
    }
    word
}

/// True if `left ++ right` has no cancelling pair at the junction.
pub(crate) fn joins_reduced(left: &[Letter], right: &[Letter], mode: WordMode) -> bool {
    match (left.last(), right.first()) {
        (Some(&l), Some(&r)) => l.inverse(mode) != r,
        _ => true,
    }
}

/// Every letter available over the given generators.
pub(crate) fn letters_over(generators: &BTreeSet<Generator>, mode: WordMode) -> Vec<Letter> {
    let mut out = Vec::new();
    for &generator in generators {
        out.push(Letter {
            generator,
            negative: false,
        });
        if mode == WordMode::Free {
            out.push(Letter {
                generator,
                negative: true,
            });
        }
    }
    out
}

/// Reduced words grouped by exact length, grown on demand.
pub(crate) struct ReducedWords {
    mode: WordMode,
    letters: Vec<Letter>,
    by_length: Vec<Vec<Vec<Letter>>>,
}

impl ReducedWords {
    pub(crate) fn new(letters: Vec<Letter>, mode: WordMode) -> Self {
        ReducedWords {
            mode,
            letters,
            by_length: alloc::vec![alloc::vec![Vec::new()]],
        }
    }

    /// All reduced words of exactly `length` letters.
    pub(crate) fn of_length(&mut self, length: usize) -> &[Vec<Letter>] {
        while self.by_length.len() <= length {
            let prev = self.by_length.last().expect("length 0 is seeded");
            let mut next = Vec::new();
            for w in prev {
                for &l in &self.letters {
                    if joins_reduced(w, core::slice::from_ref(&l), self.mode) {
                        let mut grown = w.clone();
                        grown.push(l);
                        next.push(grown);
                    }
                }
            }
            self.by_length.push(next);
        }
        &self.by_length[length]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letters_round_trip() {
        let a = Generator::from_index(0);
        let b = Generator::from_index(1);
        let w = GroupWord::reduce(
            [
                crate::Syllable {
                    generator: a,
                    exponent: -2,
                },
                crate::Syllable {
                    generator: b,
                    exponent: 3,
                },
            ],
            WordMode::Free,
        );
        let letters = to_letters(&w);
        assert_eq!(letters.len(), 5);
        assert_eq!(from_letters(&letters, WordMode::Free), w);
    }

    #[test]
    fn reduced_word_counts() {
        let gens: BTreeSet<_> = [Generator::from_index(0), Generator::from_index(1)].into();
        let mut free = ReducedWords::new(letters_over(&gens, WordMode::Free), WordMode::Free);
        // 4 * 3^(n-1) reduced words of length n in F2
        assert_eq!(free.of_length(0).len(), 1);
        assert_eq!(free.of_length(1).len(), 4);
        assert_eq!(free.of_length(3).len(), 36);
        let mut inv = ReducedWords::new(
            letters_over(&gens, WordMode::Involutory),
            WordMode::Involutory,
        );
        // alternating words in two involutions: 2 of each positive length
        assert_eq!(inv.of_length(4).len(), 2);
    }
}
