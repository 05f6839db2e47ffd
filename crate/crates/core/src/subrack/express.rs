use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::Basis;
use crate::expr::{NormalForm, RackExpr};
use crate::rack::{QuandleElement, RackElement, Sign};
use crate::word::{GroupWord, WordMode};
use crate::Result;

/// Peel-search nodes visited before giving up.
const NODE_BUDGET: usize = 200_000;
/// Normal forms evaluated by the collision check in [`is_free_basis`].
const FORM_SAMPLE: usize = 4_000;

/// What stopped an unsuccessful bounded search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchLimit {
    /// Every peel sequence up to the depth bound was tried.
    Depth,
    /// The node budget ran out before the depth bound was covered.
    Budget,
}

/// Answer of [`express_over_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expressed {
    /// The normal form; it evaluates exactly to the element.
    Found(NormalForm),
    /// Certainly not in the subrack generated by the basis.
    NotInSpan,
    /// Not found within the limits.
    Unknown(SearchLimit),
}

struct Peeler<'a> {
    mode: WordMode,
    basis: &'a Basis,
    heads: BTreeMap<QuandleElement, usize>,
    /// `acts[j][0]` undoes `|> r_j`, `acts[j][1]` undoes `|>- r_j`.
    acts: Vec<[GroupWord; 2]>,
    failed: BTreeMap<(QuandleElement, Option<(Sign, usize)>), usize>,
    nodes: usize,
    budget_hit: bool,
}

impl Peeler<'_> {
    fn moves(&self) -> Vec<(Sign, usize)> {
        let signs: &[Sign] = match self.mode {
            WordMode::Free => &Sign::BOTH,
            WordMode::Involutory => &[Sign::Pos],
        };
        (0..self.basis.len())
            .flat_map(|j| signs.iter().map(move |&s| (s, j)))
            .collect()
    }

    /// Depth-first right-peeling. `tail` collects the peeled operands in
    /// reverse application order.
    fn search(
        &mut self,
        current: &RackElement,
        last: Option<(Sign, usize)>,
        remaining: usize,
        tail: &mut Vec<(Sign, usize)>,
    ) -> Option<NormalForm> {
        let class = current.project();
        if let Some(&head) = self.heads.get(&class) {
            let (n, _) = current.decompose();
            let mut t = tail.clone();
            t.reverse();
            return Some(NormalForm {
                head,
                head_exponent: n,
                tail: t,
            });
        }
        if remaining == 0 {
            return None;
        }
        let key = (class, last);
        if self.failed.get(&key).is_some_and(|&d| d >= remaining) {
            return None;
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            self.budget_hit = true;
            return None;
        }
        let mut options: Vec<(usize, (Sign, usize), RackElement)> = Vec::new();
        for (sign, j) in self.moves() {
            let undoes_last = match (last, self.mode) {
                (Some((s, i)), WordMode::Free) => i == j && s == sign.flip(),
                (Some((_, i)), WordMode::Involutory) => i == j,
                (None, _) => false,
            };
            if undoes_last {
                continue;
            }
            let slot = match sign {
                Sign::Pos => 0,
                Sign::Neg => 1,
            };
            let next = current.act_by(&self.acts[j][slot]);
            options.push((next.project().word().len(), (sign, j), next));
        }
        // longest cancellation first; sort is stable so basis order breaks ties
        options.sort_by_key(|o| o.0);
        for (_, step, next) in options {
            tail.push(step);
            let found = self.search(&next, Some(step), remaining - 1, tail);
            tail.pop();
            if found.is_some() {
                return found;
            }
            if self.budget_hit {
                return None;
            }
        }
        self.failed.insert(key, remaining);
        None
    }
}

/// Writes `e` as `r_head^n |>e1 r_t1 |>e2 ...` over `basis`, peeling at most
/// `bound` operands off the right.
///
/// The head exponent is read off exactly once the remaining element shares
/// its class with a basis element. Absence is only certified when the base of
/// `e` is not a basis base, or when the basis has a single element (its span
/// is then one fiber).
pub fn express_over_basis(e: &RackElement, basis: &Basis, bound: usize) -> Result<Expressed> {
    let Some(mode) = basis.mode() else {
        return Ok(Expressed::NotInSpan);
    };
    e.word().check_mode(basis.elements()[0].word())?;
    if !basis.bases().any(|b| b == e.base()) {
        return Ok(Expressed::NotInSpan);
    }
    let heads: BTreeMap<_, _> = basis
        .projections()
        .into_iter()
        .enumerate()
        .map(|(i, q)| (q, i))
        .collect();
    if basis.len() == 1 && !heads.contains_key(&e.project()) {
        return Ok(Expressed::NotInSpan);
    }
    let acts = basis
        .elements()
        .iter()
        .map(|r| {
            let c = r.conjugate_word();
            [c.invert(), c]
        })
        .collect();
    let mut peeler = Peeler {
        mode,
        basis,
        heads,
        acts,
        failed: BTreeMap::new(),
        nodes: 0,
        budget_hit: false,
    };
    let found = peeler.search(e, None, bound, &mut Vec::new());
    Ok(match found {
        Some(mut nf) => {
            if mode == WordMode::Involutory {
                nf.head_exponent = nf.head_exponent.rem_euclid(2);
            }
            debug_assert_eq!(nf.evaluate(basis).as_ref(), Ok(e));
            Expressed::Found(nf)
        }
        None if peeler.budget_hit => Expressed::Unknown(SearchLimit::Budget),
        None => Expressed::Unknown(SearchLimit::Depth),
    })
}

/// Why a candidate set is not a free basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FreenessWitness {
    /// `candidate[index]` carries a leading power of its base.
    NotFiberCanonical {
        #[allow(missing_docs)]
        index: usize,
        #[allow(missing_docs)]
        exponent: i64,
    },
    /// `candidate[index] = candidate[of]^exponent`.
    FiberMate {
        #[allow(missing_docs)]
        index: usize,
        #[allow(missing_docs)]
        of: usize,
        #[allow(missing_docs)]
        exponent: i64,
    },
    /// Two candidates are equal.
    Duplicate {
        #[allow(missing_docs)]
        first: usize,
        #[allow(missing_docs)]
        second: usize,
    },
    /// `candidate[index]` evaluates from the other candidates.
    Expressible {
        #[allow(missing_docs)]
        index: usize,
        /// Expression over the candidates' own elements.
        expr: RackExpr,
    },
    /// Two distinct normal forms with the same value.
    Collision(NormalForm, NormalForm),
}

/// Answer of [`is_free_basis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Freeness {
    /// No relation found within the bound.
    Free,
    /// A relation, with its witness.
    NotFree(FreenessWitness),
    /// A search budget ran out first.
    Unknown,
}

/// Bounded check that `candidate` freely generates its subrack.
///
/// Checks the basis invariants, tries to express each element over the
/// others, and evaluates normal forms of growing size looking for two with
/// the same value.
pub fn is_free_basis(candidate: &[RackElement], bound: usize) -> Result<Freeness> {
    if let Some(first) = candidate.first() {
        for e in candidate {
            first.word().check_mode(e.word())?;
        }
    }
    for (i, e) in candidate.iter().enumerate() {
        let (n, class) = e.decompose();
        if n != 0 {
            let lift = class.lift();
            let witness = match candidate.iter().position(|f| *f == lift) {
                Some(of) => FreenessWitness::FiberMate {
                    index: i,
                    of,
                    exponent: n,
                },
                None => FreenessWitness::NotFiberCanonical {
                    index: i,
                    exponent: n,
                },
            };
            return Ok(Freeness::NotFree(witness));
        }
    }
    for (i, e) in candidate.iter().enumerate() {
        if let Some(j) = candidate[..i].iter().position(|f| f == e) {
            return Ok(Freeness::NotFree(FreenessWitness::Duplicate {
                first: j,
                second: i,
            }));
        }
    }
    let mut unknown = false;
    for i in 0..candidate.len() {
        let others: Vec<RackElement> = candidate
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        let basis = Basis::new(others)?;
        match express_over_basis(&candidate[i], &basis, bound)? {
            Expressed::Found(nf) => {
                return Ok(Freeness::NotFree(FreenessWitness::Expressible {
                    index: i,
                    expr: nf.to_expr(&basis),
                }))
            }
            Expressed::Unknown(SearchLimit::Budget) => unknown = true,
            Expressed::NotInSpan | Expressed::Unknown(SearchLimit::Depth) => {}
        }
    }
    let basis = Basis::new(candidate.to_vec())?;
    if let Some((a, b)) = find_collision(&basis, bound) {
        return Ok(Freeness::NotFree(FreenessWitness::Collision(a, b)));
    }
    Ok(if unknown {
        Freeness::Unknown
    } else {
        Freeness::Free
    })
}

/// Reduced normal forms over `basis` in order of size `|n| + tail length`,
/// up to `max_size`, at most `limit` of them.
pub(crate) fn normal_forms(basis: &Basis, max_size: usize, limit: usize) -> Vec<NormalForm> {
    let Some(mode) = basis.mode() else {
        return Vec::new();
    };
    let k = basis.len();
    let signs: &[Sign] = match mode {
        WordMode::Free => &Sign::BOTH,
        WordMode::Involutory => &[Sign::Pos],
    };
    let mut tails: Vec<Vec<Vec<(Sign, usize)>>> = alloc::vec![alloc::vec![Vec::new()]];
    let mut out = Vec::new();
    for size in 0..=max_size {
        while tails.len() <= size {
            let mut next = Vec::new();
            for t in tails.last().expect("seeded") {
                for j in 0..k {
                    for &s in signs {
                        let reduced = match (t.last(), mode) {
                            (Some(&(ls, lj)), WordMode::Free) => !(lj == j && ls == s.flip()),
                            (Some(&(_, lj)), WordMode::Involutory) => lj != j,
                            (None, _) => true,
                        };
                        if reduced {
                            let mut grown = t.clone();
                            grown.push((s, j));
                            next.push(grown);
                        }
                    }
                }
            }
            tails.push(next);
        }
        for (tail_len, tails_here) in tails.iter().enumerate().take(size + 1) {
            let n_abs = (size - tail_len) as i64;
            let exponents: Vec<i64> = match (n_abs, mode) {
                (0, _) => alloc::vec![0],
                (1, WordMode::Involutory) => alloc::vec![1],
                (_, WordMode::Involutory) => Vec::new(),
                (n, WordMode::Free) => alloc::vec![n, -n],
            };
            for head in 0..k {
                for &head_exponent in &exponents {
                    for tail in tails_here {
                        if tail.first().is_some_and(|&(_, j)| j == head) {
                            continue;
                        }
                        out.push(NormalForm {
                            head,
                            head_exponent,
                            tail: tail.clone(),
                        });
                        if out.len() >= limit {
                            return out;
                        }
                    }
                }
            }
        }
    }
    out
}

fn find_collision(basis: &Basis, bound: usize) -> Option<(NormalForm, NormalForm)> {
    let mut seen: BTreeMap<RackElement, NormalForm> = BTreeMap::new();
    for nf in normal_forms(basis, bound, FORM_SAMPLE) {
        let value = nf.evaluate(basis).expect("generated forms are valid");
        if let Some(prev) = seen.get(&value) {
            return Some((prev.clone(), nf));
        }
        seen.insert(value, nf);
    }
    None
}

/// Answer of [`nielsen_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    /// A basis confirmed free within the bound.
    Basis(Basis),
    /// The heuristic could not confirm a free basis.
    Unknown,
}

/// Heuristic basis extraction: replace generators by their fiber-canonical
/// representatives, drop repeats, then repeatedly drop any generator that the
/// others express within `bound`. Never claims completeness.
pub fn nielsen_reduce(generators: &[RackElement], bound: usize) -> Result<Reduction> {
    let mut current: Vec<RackElement> = Vec::new();
    for g in generators {
        if let Some(first) = generators.first() {
            first.word().check_mode(g.word())?;
        }
        let lift = g.project().lift();
        if !current.contains(&lift) {
            current.push(lift);
        }
    }
    'outer: loop {
        for i in 0..current.len() {
            let mut others = current.clone();
            let candidate = others.remove(i);
            let basis = Basis::new(others)?;
            if let Expressed::Found(_) = express_over_basis(&candidate, &basis, bound)? {
                current.remove(i);
                continue 'outer;
            }
        }
        break;
    }
    match is_free_basis(&current, bound)? {
        Freeness::Free => Ok(Reduction::Basis(Basis::new(current)?)),
        _ => Ok(Reduction::Unknown),
    }
}
