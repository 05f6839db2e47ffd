#![allow(dead_code)]

use std::collections::BTreeSet;

use freerack_core::{Generator, GroupWord, QuandleElement, RackElement, Sign, Syllable, WordMode};
use proptest::prelude::*;

/// Reduced words of at most `max_len` letters.
pub fn word(alphabet: usize, max_len: usize, mode: WordMode) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(
        (0..alphabet, prop_oneof![Just(-1i64), Just(1i64)]),
        0..=max_len,
    )
    .prop_map(move |raw| {
        GroupWord::reduce(
            raw.into_iter().map(|(g, exponent)| Syllable {
                generator: Generator::from_index(g),
                exponent,
            }),
            mode,
        )
    })
}

pub fn element(
    alphabet: usize,
    max_len: usize,
    mode: WordMode,
) -> impl Strategy<Value = RackElement> {
    (0..alphabet, word(alphabet, max_len, mode))
        .prop_map(|(g, w)| RackElement::new(Generator::from_index(g), w))
}

pub fn mode() -> impl Strategy<Value = WordMode> {
    prop_oneof![Just(WordMode::Free), Just(WordMode::Involutory)]
}

pub fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Pos), Just(Sign::Neg)]
}

/// Exhaustive fixed point: every pair, both signs, until nothing new fits.
pub fn naive_rack_closure(gens: &[RackElement], bound: usize) -> (BTreeSet<RackElement>, bool) {
    let mut set: BTreeSet<RackElement> = gens.iter().cloned().collect();
    loop {
        let mut truncated = false;
        let mut fresh = Vec::new();
        for x in &set {
            for y in &set {
                for s in [Sign::Pos, Sign::Neg] {
                    let r = x.op(y, s).unwrap();
                    if r.word().len() > bound {
                        truncated = true;
                    } else if !set.contains(&r) {
                        fresh.push(r);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return (set, truncated);
        }
        set.extend(fresh);
    }
}

pub fn naive_quandle_closure(
    gens: &[QuandleElement],
    bound: usize,
) -> (BTreeSet<QuandleElement>, bool) {
    let mut set: BTreeSet<QuandleElement> = gens
        .iter()
        .filter(|q| q.word().len() <= bound)
        .cloned()
        .collect();
    let dropped = set.len() < gens.iter().collect::<BTreeSet<_>>().len();
    loop {
        let mut truncated = dropped;
        let mut fresh = Vec::new();
        for x in &set {
            for y in &set {
                for s in [Sign::Pos, Sign::Neg] {
                    let r = x.op(y, s).unwrap();
                    if r.word().len() > bound {
                        truncated = true;
                    } else if !set.contains(&r) {
                        fresh.push(r);
                    }
                }
            }
        }
        if fresh.is_empty() {
            return (set, truncated);
        }
        set.extend(fresh);
    }
}

/// Applies the conjugating automorphism `x_s -> x_t^-e x_s x_t^e` to the
/// conjugates `x_i^{w_i}`, given as `(i, w_i)`.
pub fn conjugating_move(
    classes: &[(usize, GroupWord)],
    s: usize,
    t: usize,
    e: i64,
    mode: WordMode,
) -> Vec<(usize, GroupWord)> {
    let gs = Generator::from_index(s);
    let gt = Generator::from_index(t);
    let image = |w: &GroupWord| {
        let mut raw = Vec::new();
        for syl in w.syllables() {
            if syl.generator == gs {
                for _ in 0..syl.exponent.unsigned_abs() {
                    raw.push(Syllable {
                        generator: gt,
                        exponent: -e,
                    });
                    raw.push(Syllable {
                        generator: gs,
                        exponent: syl.exponent.signum(),
                    });
                    raw.push(Syllable {
                        generator: gt,
                        exponent: e,
                    });
                }
            } else {
                raw.push(*syl);
            }
        }
        GroupWord::reduce(raw, mode)
    };
    classes
        .iter()
        .map(|(i, w)| {
            let mut moved = image(w);
            if *i == s {
                moved = GroupWord::power(gt, e, mode).concat(&moved).unwrap();
            }
            (*i, moved)
        })
        .collect()
}

/// A subset of the image of the standard basis under a product of
/// conjugating automorphisms, as quandle classes.
pub fn free_classes(
    alphabet: usize,
    moves: &[(usize, usize, bool)],
    keep: &[bool],
    mode: WordMode,
) -> Vec<QuandleElement> {
    let mut classes: Vec<(usize, GroupWord)> = (0..alphabet)
        .map(|i| (i, GroupWord::identity(mode)))
        .collect();
    for &(s, t, neg) in moves {
        let (s, t) = (s % alphabet, t % alphabet);
        if s == t {
            continue;
        }
        classes = conjugating_move(&classes, s, t, if neg { -1 } else { 1 }, mode);
    }
    let mut out: Vec<QuandleElement> = classes
        .into_iter()
        .zip(keep.iter().cycle())
        .filter(|(_, &k)| k)
        .map(|((i, w), _)| QuandleElement::new(Generator::from_index(i), w))
        .collect();
    if out.is_empty() {
        out.push(QuandleElement::new(
            Generator::from_index(0),
            GroupWord::identity(mode),
        ));
    }
    out
}
