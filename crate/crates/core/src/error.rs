use alloc::string::String;

use crate::word::WordMode;

/// Errors raised by word arithmetic, the text syntax and the subrack engine.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A name that is not part of the declared alphabet.
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    /// Two operands built in different word modes.
    #[error("mode mismatch: {left} vs {right}")]
    ModeMismatch {
        #[allow(missing_docs)]
        left: WordMode,
        #[allow(missing_docs)]
        right: WordMode,
    },
    /// Malformed input text; `position` is a byte offset.
    #[error("syntax error at {position}: {message}")]
    Syntax {
        #[allow(missing_docs)]
        position: usize,
        #[allow(missing_docs)]
        message: String,
    },
    /// An alphabet declaration that is empty, repeats a name or uses a bad identifier.
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),
    /// A closure generator whose word is already longer than the length bound.
    #[error("bound {bound} is smaller than generator length {length}")]
    BoundTooSmall {
        #[allow(missing_docs)]
        bound: usize,
        #[allow(missing_docs)]
        length: usize,
    },
    /// Two basis candidates project to the same quandle element.
    #[error("elements {first} and {second} lie in the same conjugacy class")]
    DuplicateClass {
        #[allow(missing_docs)]
        first: usize,
        #[allow(missing_docs)]
        second: usize,
    },
    /// A basis element that still carries a leading power of its base.
    #[error("basis element {index} is not fiber-canonical (leading power {exponent})")]
    NotFiberCanonical {
        #[allow(missing_docs)]
        index: usize,
        #[allow(missing_docs)]
        exponent: i64,
    },
    /// A normal form that references a basis index out of range or breaks the head rule.
    #[error("malformed normal form: {0}")]
    MalformedNormalForm(String),
}
