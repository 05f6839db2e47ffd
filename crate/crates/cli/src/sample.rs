//! Seeded random elements for the axiom sampler.

use freerack_core::{Generator, GroupWord, RackElement, Syllable, WordMode};
use rand::Rng;

/// A reduced word of exactly `len` letters over the first `alphabet`
/// generators. In involutory mode neighbouring letters differ, which needs
/// at least two generators once `len > 1`.
pub fn word<R: Rng>(rng: &mut R, alphabet: usize, len: usize, mode: WordMode) -> GroupWord {
    let mut raw: Vec<Syllable> = Vec::with_capacity(len);
    let mut last: Option<(usize, i64)> = None;
    while raw.len() < len {
        let g = rng.random_range(0..alphabet);
        let sign = match mode {
            WordMode::Free if rng.random_bool(0.5) => -1,
            _ => 1,
        };
        let cancels = match (last, mode) {
            (Some((h, s)), WordMode::Free) => h == g && s == -sign,
            (Some((h, _)), WordMode::Involutory) => h == g,
            (None, _) => false,
        };
        if cancels {
            if alphabet == 1 && mode == WordMode::Involutory {
                break;
            }
            continue;
        }
        raw.push(Syllable {
            generator: Generator::from_index(g),
            exponent: sign,
        });
        last = Some((g, sign));
    }
    GroupWord::reduce(raw, mode)
}

/// An element with a uniform base and a word of uniform length in
/// `0..=max_len`.
pub fn element<R: Rng>(
    rng: &mut R,
    alphabet: usize,
    max_len: usize,
    mode: WordMode,
) -> RackElement {
    let base = Generator::from_index(rng.random_range(0..alphabet));
    let len = rng.random_range(0..=max_len);
    RackElement::new(base, word(rng, alphabet, len, mode))
}
