//! Subracks of the free rack: bounded closure, membership, basis lifting,
//! normal forms and freeness checks.
//!
//! Everything here is bounded. Negative answers are only reported when they
//! are certain; otherwise the procedures say `Unknown`.

mod express;
mod membership;
mod saturate;

use alloc::vec::Vec;

use crate::expr::RackExpr;
use crate::rack::{QuandleElement, RackElement};
use crate::word::{Generator, WordMode};
use crate::{Error, Result};

pub use express::{
    express_over_basis, is_free_basis, nielsen_reduce, Expressed, Freeness, FreenessWitness,
    Reduction, SearchLimit,
};
pub use membership::{closure, rack_member, MembershipAnswer, NonMemberReason};

/// An ordered set of fiber-canonical elements with pairwise distinct
/// projections, all in one word mode.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Basis {
    elements: Vec<RackElement>,
}

impl Basis {
    /// Validates the basis invariants.
    pub fn new(elements: Vec<RackElement>) -> Result<Self> {
        for (i, e) in elements.iter().enumerate() {
            if let Some(first) = elements.first() {
                first.word().check_mode(e.word())?;
            }
            let (n, _) = e.decompose();
            if n != 0 {
                return Err(Error::NotFiberCanonical {
                    index: i,
                    exponent: n,
                });
            }
            // canonical elements with equal projections are equal
            if let Some(j) = elements[..i].iter().position(|f| f == e) {
                return Err(Error::DuplicateClass {
                    first: j,
                    second: i,
                });
            }
        }
        Ok(Basis { elements })
    }

    /// The basis elements in order.
    pub fn elements(&self) -> &[RackElement] {
        &self.elements
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True for the empty basis.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Word mode shared by the elements, if any.
    pub fn mode(&self) -> Option<WordMode> {
        self.elements.first().map(RackElement::mode)
    }

    /// The quandle images, in basis order.
    pub fn projections(&self) -> Vec<QuandleElement> {
        self.elements.iter().map(RackElement::project).collect()
    }

    pub(crate) fn bases(&self) -> impl Iterator<Item = Generator> + '_ {
        self.elements.iter().map(RackElement::base)
    }
}

/// Picks the fiber-canonical preimage `(x, w)` of each class `x^w`.
pub fn lift_basis(classes: &[QuandleElement]) -> Result<Basis> {
    for (i, q) in classes.iter().enumerate() {
        if let Some(j) = classes[..i].iter().position(|p| p == q) {
            return Err(Error::DuplicateClass {
                first: j,
                second: i,
            });
        }
    }
    Basis::new(classes.iter().map(QuandleElement::lift).collect())
}

/// A bounded closure of a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureSet {
    /// Elements in structural order.
    pub elements: Vec<RackElement>,
    /// The word-length bound.
    pub bound: usize,
    /// The generating set as given.
    pub generators: Vec<RackElement>,
    /// True when no operation result was discarded, i.e. the set is the
    /// whole generated subrack.
    pub saturated: bool,
}

impl ClosureSet {
    /// Membership in the computed set.
    pub fn contains(&self, e: &RackElement) -> bool {
        self.elements.binary_search(e).is_ok()
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// True if the set is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

pub(crate) fn witness_expr(
    generators: &[RackElement],
    root: usize,
    head_exponent: i64,
    chain: &[(crate::rack::Sign, usize)],
) -> RackExpr {
    let mut expr = RackExpr::element(&generators[root]);
    if head_exponent != 0 {
        expr = RackExpr::power(expr, head_exponent);
    }
    for &(sign, j) in chain {
        expr = RackExpr::op(expr, sign, RackExpr::element(&generators[j]));
    }
    expr
}
