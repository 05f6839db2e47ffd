//! Reduced words in the free group `F(X)` and in the involutory group
//! `<X | x^2 = 1>`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Index of a generator inside its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub(crate) u32);

impl Generator {
    /// Position of this generator in the alphabet it was declared in.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Generator at position `index`. No alphabet check is made.
    pub fn from_index(index: usize) -> Self {
        Generator(index as u32)
    }
}

/// The ambient group words live in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum WordMode {
    /// The free group on the alphabet.
    #[default]
    Free,
    /// Every generator is its own inverse.
    Involutory,
}

impl WordMode {
    /// Brings an exponent into the range allowed by the mode. Zero means the
    /// syllable vanishes.
    pub(crate) fn normalize(self, exponent: i64) -> i64 {
        match self {
            WordMode::Free => exponent,
            WordMode::Involutory => exponent.rem_euclid(2),
        }
    }
}

impl fmt::Display for WordMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordMode::Free => "free",
            WordMode::Involutory => "involutory",
        })
    }
}

impl core::str::FromStr for WordMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(WordMode::Free),
            "involutory" => Ok(WordMode::Involutory),
            other => Err(Error::Syntax {
                position: 0,
                message: alloc::format!("unknown mode `{other}`"),
            }),
        }
    }
}

/// A finite, ordered set of generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    /// Declares an alphabet. Names must be distinct identifiers; `e` is
    /// reserved for the identity word.
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.as_ref();
            if !is_identifier(name) {
                return Err(Error::InvalidAlphabet(alloc::format!(
                    "`{name}` is not an identifier"
                )));
            }
            if name == "e" {
                return Err(Error::InvalidAlphabet(
                    "`e` is reserved for the identity word".to_string(),
                ));
            }
            if out.iter().any(|n| n == name) {
                return Err(Error::InvalidAlphabet(alloc::format!(
                    "`{name}` declared twice"
                )));
            }
            out.push(name.to_string());
        }
        if out.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".to_string()));
        }
        Ok(Alphabet { names: out })
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.names.len()
    }

    /// Always false; alphabets are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Looks a generator up by name.
    pub fn generator(&self, name: &str) -> Result<Generator> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Generator(i as u32))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Name of a generator; `?` if it does not belong to this alphabet.
    pub fn name(&self, generator: Generator) -> &str {
        self.names
            .get(generator.index())
            .map(String::as_str)
            .unwrap_or("?")
    }

    /// All generators in declaration order.
    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.names.len()).map(|i| Generator(i as u32))
    }

    /// Reduces a list of named syllables.
    pub fn reduce(&self, raw: &[(&str, i64)], mode: WordMode) -> Result<GroupWord> {
        let syllables = raw
            .iter()
            .map(|&(name, exponent)| {
                Ok(Syllable {
                    generator: self.generator(name)?,
                    exponent,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupWord::reduce(syllables, mode))
    }
}

/// A maximal power `g^k` inside a reduced word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Syllable {
    /// The generator.
    pub generator: Generator,
    /// Nonzero exponent; always 1 in involutory mode.
    pub exponent: i64,
}

/// A reduced group word.
///
/// Adjacent syllables have distinct generators, no exponent is zero and in
/// involutory mode every exponent is 1. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    syllables: Vec<Syllable>,
    mode: WordMode,
}

impl GroupWord {
    /// The identity word.
    pub fn identity(mode: WordMode) -> Self {
        GroupWord {
            syllables: Vec::new(),
            mode,
        }
    }

    /// The single-letter word `g`.
    pub fn generator(generator: Generator, mode: WordMode) -> Self {
        Self::power(generator, 1, mode)
    }

    /// The word `g^k`.
    pub fn power(generator: Generator, exponent: i64, mode: WordMode) -> Self {
        Self::reduce(
            [Syllable {
                generator,
                exponent,
            }],
            mode,
        )
    }

    /// Freely reduces a raw syllable list in the given mode. The result is the
    /// unique reduced word equal to the input.
    pub fn reduce<I>(raw: I, mode: WordMode) -> Self
    where
        I: IntoIterator<Item = Syllable>,
    {
        let mut word = GroupWord::identity(mode);
        for s in raw {
            word.push(s.generator, s.exponent);
        }
        word
    }

    /// Appends `g^k`, merging with (and possibly cancelling) the last syllable.
    pub(crate) fn push(&mut self, generator: Generator, exponent: i64) {
        let exponent = self.mode.normalize(exponent);
        if exponent == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.generator == generator => {
                let merged = self.mode.normalize(
                    last.exponent
                        .checked_add(exponent)
                        .expect("exponent overflow"),
                );
                if merged == 0 {
                    self.syllables.pop();
                } else {
                    last.exponent = merged;
                }
            }
            _ => self.syllables.push(Syllable {
                generator,
                exponent,
            }),
        }
    }

    /// The syllables of the reduced word.
    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    /// The mode this word was reduced in.
    pub fn mode(&self) -> WordMode {
        self.mode
    }

    /// True for the empty word.
    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn len(&self) -> usize {
        self.syllables
            .iter()
            .map(|s| s.exponent.unsigned_abs() as usize)
            .sum()
    }

    /// Same as [`GroupWord::is_identity`].
    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub(crate) fn check_mode(&self, other: &GroupWord) -> Result<()> {
        if self.mode == other.mode {
            Ok(())
        } else {
            Err(Error::ModeMismatch {
                left: self.mode,
                right: other.mode,
            })
        }
    }

    /// Product without the mode check. Callers guarantee equal modes.
    pub(crate) fn mul(&self, other: &GroupWord) -> GroupWord {
        debug_assert_eq!(self.mode, other.mode);
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.generator, s.exponent);
        }
        out
    }

    /// The reduced product `self * other`.
    pub fn concat(&self, other: &GroupWord) -> Result<GroupWord> {
        self.check_mode(other)?;
        Ok(self.mul(other))
    }

    /// The inverse word.
    pub fn invert(&self) -> GroupWord {
        let syllables = self
            .syllables
            .iter()
            .rev()
            .map(|s| Syllable {
                generator: s.generator,
                exponent: self.mode.normalize(-s.exponent),
            })
            .collect();
        GroupWord {
            syllables,
            mode: self.mode,
        }
    }

    pub(crate) fn conjugate_unchecked(&self, by: &GroupWord) -> GroupWord {
        by.invert().mul(self).mul(by)
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &GroupWord) -> Result<GroupWord> {
        self.check_mode(by)?;
        Ok(self.conjugate_unchecked(by))
    }

    /// Splits `self = x^n * tail` where `tail` does not start with `x`.
    pub fn strip_leading_power(&self, x: Generator) -> (i64, GroupWord) {
        match self.syllables.first() {
            Some(first) if first.generator == x => (
                first.exponent,
                GroupWord {
                    syllables: self.syllables[1..].to_vec(),
                    mode: self.mode,
                },
            ),
            _ => (0, self.clone()),
        }
    }

    /// True if the word starts with a nonzero power of `x`.
    pub fn starts_with(&self, x: Generator) -> bool {
        self.syllables.first().is_some_and(|s| s.generator == x)
    }
}
