//! Bounded fixed points of the rack (or quandle) operation.
//!
//! Acting by an element only depends on its image in the free quandle, so the
//! engine keeps one table of actors keyed by canonical conjugator and, for
//! each element, only visits actors whose action can land inside the length
//! bound. For an element word `u` and an actor `(y, v)` write `v = V' S` with
//! `S` the longest common suffix of `u` and `v`. If `V'` is nonempty the
//! reduced product `u v^-1 y v` has length `|u| + 2|V'| + 1`, so within a
//! bound `L` only `|V'| <= (L - |u| - 1) / 2` can contribute. On the quandle
//! side the leading power of the base is stripped afterwards, which adds the
//! actors `v = V'' x^k u` whose canonical result has length
//! `|u| + k + 2|V''| + 1`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::letters::{joins_reduced, letters_over, to_letters, Letter, ReducedWords};
use crate::rack::{QuandleElement, RackElement, Sign};
use crate::word::{Generator, GroupWord, WordMode};

pub(crate) trait Side {
    type Elem: Ord + Clone;
    /// Results are canonicalized by stripping the base power.
    const CANONICAL: bool;
    fn base(e: &Self::Elem) -> Generator;
    fn word(e: &Self::Elem) -> &GroupWord;
    fn actor(e: &Self::Elem) -> QuandleElement;
    fn act(e: &Self::Elem, by: &GroupWord) -> Self::Elem;
}

pub(crate) struct RackSide;

impl Side for RackSide {
    type Elem = RackElement;
    const CANONICAL: bool = false;

    fn base(e: &RackElement) -> Generator {
        e.base()
    }
    fn word(e: &RackElement) -> &GroupWord {
        e.word()
    }
    fn actor(e: &RackElement) -> QuandleElement {
        e.project()
    }
    fn act(e: &RackElement, by: &GroupWord) -> RackElement {
        e.act_by(by)
    }
}

pub(crate) struct QuandleSide;

impl Side for QuandleSide {
    type Elem = QuandleElement;
    const CANONICAL: bool = true;

    fn base(e: &QuandleElement) -> Generator {
        e.base()
    }
    fn word(e: &QuandleElement) -> &GroupWord {
        e.word()
    }
    fn actor(e: &QuandleElement) -> QuandleElement {
        e.clone()
    }
    fn act(e: &QuandleElement, by: &GroupWord) -> QuandleElement {
        QuandleElement::new(e.base(), e.word().mul(by))
    }
}

/// How an element entered the set.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Origin {
    /// The `i`-th seed.
    Seed(usize),
    /// `parent |>sign source`, where `source` is any element whose projection
    /// is the actor used.
    Derived {
        parent: usize,
        source: usize,
        sign: Sign,
    },
}

struct Actor {
    base: Generator,
    /// Conjugate `v^-1 y^±1 v` for `Pos` and `Neg`.
    acts: [GroupWord; 2],
    source: usize,
}

pub(crate) struct Saturation<S: Side> {
    mode: WordMode,
    bound: usize,
    elements: Vec<S::Elem>,
    origins: Vec<Origin>,
    ids: BTreeMap<S::Elem, usize>,
    actors: BTreeMap<Vec<Letter>, Vec<Actor>>,
    actor_count: usize,
    truncated: bool,
    words: ReducedWords,
}

impl<S: Side> Saturation<S> {
    /// Saturates `seeds` under the bound. Seeds longer than the bound are
    /// dropped and mark the result truncated.
    pub(crate) fn run(seeds: &[S::Elem], mode: WordMode, bound: usize) -> Self {
        let mut generators = BTreeSet::new();
        for s in seeds {
            generators.insert(S::base(s));
            generators.extend(S::word(s).syllables().iter().map(|syl| syl.generator));
        }
        let mut sat = Saturation {
            mode,
            bound,
            elements: Vec::new(),
            origins: Vec::new(),
            ids: BTreeMap::new(),
            actors: BTreeMap::new(),
            actor_count: 0,
            truncated: false,
            words: ReducedWords::new(letters_over(&generators, mode), mode),
        };
        let mut dropped = false;
        for (i, s) in seeds.iter().enumerate() {
            if S::word(s).len() > bound {
                dropped = true;
                continue;
            }
            sat.insert(s.clone(), Origin::Seed(i));
        }
        loop {
            let elements_before = sat.elements.len();
            let actors_before = sat.actor_count;
            sat.truncated = false;
            let mut i = 0;
            while i < sat.elements.len() {
                sat.process(i);
                i += 1;
            }
            if sat.elements.len() == elements_before && sat.actor_count == actors_before {
                break;
            }
        }
        sat.truncated |= dropped;
        sat
    }

    fn insert(&mut self, e: S::Elem, origin: Origin) {
        if self.ids.contains_key(&e) {
            return;
        }
        let id = self.elements.len();
        self.ids.insert(e.clone(), id);
        self.elements.push(e);
        self.origins.push(origin);
    }

    fn register_actor(&mut self, id: usize) {
        let q = S::actor(&self.elements[id]);
        let key = to_letters(q.word());
        let list = self.actors.entry(key).or_default();
        if list.iter().any(|a| a.base == q.base()) {
            return;
        }
        let conj = q.conjugate_word();
        list.push(Actor {
            base: q.base(),
            acts: [conj.clone(), conj.invert()],
            source: id,
        });
        self.actor_count += 1;
    }

    fn candidates(&mut self, id: usize) -> BTreeSet<Vec<Letter>> {
        let mode = self.mode;
        let bound = self.bound;
        let u = to_letters(S::word(&self.elements[id]));
        let n = u.len();
        let mut out = BTreeSet::new();
        let spare = bound.checked_sub(n + 1);
        for c in 0..=n {
            let suffix = &u[n - c..];
            out.insert(suffix.to_vec());
            if let Some(spare) = spare {
                for len in 1..=spare / 2 {
                    for prefix in self.words.of_length(len) {
                        if joins_reduced(prefix, suffix, mode) {
                            let mut v = prefix.clone();
                            v.extend_from_slice(suffix);
                            out.insert(v);
                        }
                    }
                }
            }
        }
        if let (true, Some(spare)) = (S::CANONICAL, spare) {
            let x = S::base(&self.elements[id]);
            let max_run = if mode == WordMode::Involutory {
                spare.min(1)
            } else {
                spare
            };
            let signs: &[bool] = if mode == WordMode::Free {
                &[false, true]
            } else {
                &[false]
            };
            for k in 1..=max_run {
                for &negative in signs {
                    let run = alloc::vec![Letter { generator: x, negative }; k];
                    for len in 0..=(spare - k) / 2 {
                        for prefix in self.words.of_length(len) {
                            if joins_reduced(prefix, &run, mode) && joins_reduced(&run, &u, mode) {
                                let mut v = prefix.clone();
                                v.extend_from_slice(&run);
                                v.extend_from_slice(&u);
                                out.insert(v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn process(&mut self, id: usize) {
        self.register_actor(id);
        let candidates = self.candidates(id);
        let mut results = Vec::new();
        for key in &candidates {
            let Some(list) = self.actors.get(key) else {
                continue;
            };
            for actor in list {
                for (slot, sign) in Sign::BOTH.into_iter().enumerate() {
                    let r = S::act(&self.elements[id], &actor.acts[slot]);
                    if S::word(&r).len() <= self.bound {
                        results.push((
                            r,
                            Origin::Derived {
                                parent: id,
                                source: actor.source,
                                sign,
                            },
                        ));
                    }
                }
            }
        }
        if results.len() < 2 * self.actor_count {
            self.truncated = true;
        }
        for (r, origin) in results {
            self.insert(r, origin);
        }
    }

    pub(crate) fn elements(&self) -> &[S::Elem] {
        &self.elements
    }

    pub(crate) fn into_elements(self) -> Vec<S::Elem> {
        self.elements
    }

    pub(crate) fn id_of(&self, e: &S::Elem) -> Option<usize> {
        self.ids.get(e).copied()
    }

    /// True if some operation result was discarded for length.
    pub(crate) fn truncated(&self) -> bool {
        self.truncated
    }

    /// Expresses element `id` as `seed_root |> chain`, with the chain a
    /// freely reduced sequence of `(sign, seed index)` actions.
    pub(crate) fn chain(&self, id: usize) -> (usize, Vec<(Sign, usize)>) {
        let mut memo: BTreeMap<usize, (usize, Vec<(Sign, usize)>)> = BTreeMap::new();
        let mut stack = alloc::vec![id];
        while let Some(&top) = stack.last() {
            if memo.contains_key(&top) {
                stack.pop();
                continue;
            }
            match self.origins[top] {
                Origin::Seed(i) => {
                    memo.insert(top, (i, Vec::new()));
                    stack.pop();
                }
                Origin::Derived {
                    parent,
                    source,
                    sign,
                } => {
                    let (Some(p), Some(s)) = (memo.get(&parent), memo.get(&source)) else {
                        if !memo.contains_key(&parent) {
                            stack.push(parent);
                        }
                        if !memo.contains_key(&source) {
                            stack.push(source);
                        }
                        continue;
                    };
                    let mut chain = p.1.clone();
                    chain.extend(s.1.iter().rev().map(|&(sg, j)| (sg.flip(), j)));
                    chain.push((sign, s.0));
                    chain.extend_from_slice(&s.1);
                    let chain = reduce_chain(chain, self.mode);
                    memo.insert(top, (p.0, chain));
                    stack.pop();
                }
            }
        }
        memo.remove(&id).expect("chain computed")
    }
}

/// Cancels adjacent inverse actions. In involutory mode signs are dropped and
/// equal neighbours cancel.
pub(crate) fn reduce_chain(chain: Vec<(Sign, usize)>, mode: WordMode) -> Vec<(Sign, usize)> {
    let mut out: Vec<(Sign, usize)> = Vec::with_capacity(chain.len());
    for (sign, j) in chain {
        let sign = match mode {
            WordMode::Free => sign,
            WordMode::Involutory => Sign::Pos,
        };
        let cancels = match (out.last(), mode) {
            (Some(&(s, i)), WordMode::Free) => i == j && s == sign.flip(),
            (Some(&(_, i)), WordMode::Involutory) => i == j,
            (None, _) => false,
        };
        if cancels {
            out.pop();
        } else {
            out.push((sign, j));
        }
    }
    out
}
