use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use super::saturate::{QuandleSide, RackSide, Saturation};
use super::{witness_expr, ClosureSet};
use crate::expr::RackExpr;
use crate::rack::{QuandleElement, RackElement, Sign};
use crate::word::{Generator, WordMode};
use crate::{Error, Result};

fn common_mode(elements: &[RackElement]) -> Result<Option<crate::WordMode>> {
    let Some(first) = elements.first() else {
        return Ok(None);
    };
    for e in elements {
        first.word().check_mode(e.word())?;
    }
    Ok(Some(first.mode()))
}

/// Closes `generators` under both operations, acting by every element of the
/// set, and discards results whose word is longer than `length_bound`.
pub fn closure(generators: &[RackElement], length_bound: usize) -> Result<ClosureSet> {
    let Some(mode) = common_mode(generators)? else {
        return Ok(ClosureSet {
            elements: Vec::new(),
            bound: length_bound,
            generators: Vec::new(),
            saturated: true,
        });
    };
    if let Some(g) = generators.iter().find(|g| g.word().len() > length_bound) {
        return Err(Error::BoundTooSmall {
            bound: length_bound,
            length: g.word().len(),
        });
    }
    let sat = Saturation::<RackSide>::run(generators, mode, length_bound);
    let saturated = !sat.truncated();
    let mut elements = sat.into_elements();
    elements.sort();
    Ok(ClosureSet {
        elements,
        bound: length_bound,
        generators: generators.to_vec(),
        saturated,
    })
}

/// Why an element is certainly outside a subrack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonMemberReason {
    /// No generator has this base, and bases are invariant.
    BaseNotGenerated(Generator),
    /// The quandle-side closure was complete and the class is not in it.
    ClosureSaturated {
        /// Size of the complete subquandle.
        size: usize,
    },
}

/// Three-valued answer of [`rack_member`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MembershipAnswer {
    /// A witness over the generators that evaluates exactly to the element.
    Member(RackExpr),
    /// Certified absence.
    NonMember(NonMemberReason),
    /// Not found within the bound, and not certified absent.
    Unknown {
        /// The bound that was exhausted.
        bound: usize,
    },
}

/// Decides whether `e` lies in the subrack generated by `generators`, as far
/// as a quandle-side search up to `bound` can tell.
///
/// Fibers of the projection lie inside any subrack that meets them, so the
/// search runs on the images; a found class is lifted back by replaying the
/// same actions on the generators and fixing the fiber exponent with a power
/// on the head.
pub fn rack_member(
    e: &RackElement,
    generators: &[RackElement],
    bound: usize,
) -> Result<MembershipAnswer> {
    if let Some(g) = generators.first() {
        e.word().check_mode(g.word())?;
    }
    let Some(mode) = common_mode(generators)? else {
        return Ok(MembershipAnswer::NonMember(
            NonMemberReason::BaseNotGenerated(e.base()),
        ));
    };
    if !generators.iter().any(|g| g.base() == e.base()) {
        return Ok(MembershipAnswer::NonMember(
            NonMemberReason::BaseNotGenerated(e.base()),
        ));
    }
    let seeds: Vec<_> = generators.iter().map(RackElement::project).collect();
    let sat = Saturation::<QuandleSide>::run(&seeds, mode, bound);
    let (target_n, target) = e.decompose();
    let Some(id) = sat.id_of(&target) else {
        return Ok(if sat.truncated() {
            MembershipAnswer::Unknown { bound }
        } else {
            MembershipAnswer::NonMember(NonMemberReason::ClosureSaturated {
                size: sat.elements().len(),
            })
        });
    };
    let (root, chain) =
        shortest_chain(&sat, &seeds, &target, mode).unwrap_or_else(|| sat.chain(id));
    let mut reached = generators[root].clone();
    for &(sign, j) in &chain {
        reached = reached.op_unchecked(&generators[j], sign);
    }
    let (reached_n, reached_class) = reached.decompose();
    debug_assert_eq!(reached_class, target);
    let mut head = target_n - reached_n;
    if mode == WordMode::Involutory {
        head = head.rem_euclid(2);
    }
    let witness = witness_expr(generators, root, head, &chain);
    debug_assert_eq!(witness.evaluate(mode).as_ref(), Ok(e));
    Ok(MembershipAnswer::Member(witness))
}

/// Breadth-first search for `seed_root |> chain = target` acting only by
/// seeds and staying inside the saturated set.
fn shortest_chain(
    sat: &Saturation<QuandleSide>,
    seeds: &[QuandleElement],
    target: &QuandleElement,
    mode: WordMode,
) -> Option<(usize, Vec<(Sign, usize)>)> {
    let signs: &[Sign] = match mode {
        WordMode::Free => &Sign::BOTH,
        WordMode::Involutory => &[Sign::Pos],
    };
    let mut prev: BTreeMap<QuandleElement, Step> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for (i, s) in seeds.iter().enumerate() {
        if sat.id_of(s).is_some() && !prev.contains_key(s) {
            prev.insert(s.clone(), Step::Root(i));
            queue.push_back(s.clone());
        }
    }
    while let Some(q) = queue.pop_front() {
        if &q == target {
            let mut chain = Vec::new();
            let mut at = q;
            loop {
                match prev[&at].clone() {
                    Step::Root(i) => {
                        chain.reverse();
                        return Some((i, chain));
                    }
                    Step::From(parent, sign, j) => {
                        chain.push((sign, j));
                        at = parent;
                    }
                }
            }
        }
        for (j, s) in seeds.iter().enumerate() {
            for &sign in signs {
                let next = q.op_unchecked(s, sign);
                if sat.id_of(&next).is_some() && !prev.contains_key(&next) {
                    prev.insert(next.clone(), Step::From(q.clone(), sign, j));
                    queue.push_back(next);
                }
            }
        }
    }
    None
}

#[derive(Clone)]
enum Step {
    Root(usize),
    From(QuandleElement, Sign, usize),
}
