//! Symbolic computation in free racks and free quandles.
//!
//! Elements of the free rack on an alphabet `X` are pairs `(a, u)` with `a` a
//! generator and `u` a reduced word, operated on by
//! `(a, u) |> (b, v) = (a, u v^-1 b v)`. The free quandle is the set of
//! conjugates `w^-1 x w` of generators, stored as canonical pairs `(x, w)` where
//! `w` carries no leading power of `x`. Every computation runs in one of two
//! [`WordMode`]s: the free group, or the involutory group where each generator
//! squares to the identity.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]
#![deny(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

mod error;
pub mod expr;
mod letters;
pub mod rack;
pub mod subrack;
pub mod syntax;
pub mod word;

pub use error::Error;
pub use expr::{NormalForm, RackExpr};
pub use rack::{AxiomReport, QuandleElement, RackElement, Sign};
pub use subrack::{
    Basis, ClosureSet, Expressed, Freeness, MembershipAnswer, NonMemberReason, Reduction,
};
pub use word::{Alphabet, Generator, GroupWord, Syllable, WordMode};

/// Convenience alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
