//! Text forms of words and elements.
//!
//! Words are space-separated tokens `g` or `g^k` with `k` a nonzero decimal
//! integer; the identity is `e`. Elements are written `(a; w)`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rack::{QuandleElement, RackElement};
use crate::word::{is_identifier, Alphabet, GroupWord, Syllable, WordMode};
use crate::{Error, Result};

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        position,
        message: message.into(),
    }
}

/// Parses an exponent; restricted to the `i32` range so merged syllables
/// cannot overflow.
pub(crate) fn parse_int(text: &str, position: usize) -> Result<i64> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(
            position,
            alloc::format!("expected integer, found `{text}`"),
        ));
    }
    text.parse::<i32>()
        .map(i64::from)
        .map_err(|_| syntax(position, alloc::format!("integer `{text}` out of range")))
}

/// Parses a word, reducing it in `mode`. `offset` is added to reported
/// positions.
pub fn parse_word_at(
    alphabet: &Alphabet,
    mode: WordMode,
    text: &str,
    offset: usize,
) -> Result<GroupWord> {
    let mut raw = Vec::new();
    let mut saw_identity = false;
    let mut tokens = 0usize;
    for (start, token) in split_tokens(text) {
        let position = offset + start;
        tokens += 1;
        if token == "e" {
            saw_identity = true;
            continue;
        }
        let (name, exponent) = match token.split_once('^') {
            Some((name, exp)) => {
                let k = parse_int(exp, position + name.len() + 1)?;
                if k == 0 {
                    return Err(syntax(position, "exponent must be nonzero"));
                }
                (name, k)
            }
            None => (token, 1),
        };
        if !is_identifier(name) {
            return Err(syntax(
                position,
                alloc::format!("bad generator token `{token}`"),
            ));
        }
        raw.push(Syllable {
            generator: alphabet.generator(name)?,
            exponent,
        });
    }
    if tokens == 0 {
        return Err(syntax(offset, "empty word; write `e` for the identity"));
    }
    if saw_identity && tokens > 1 {
        return Err(syntax(offset, "`e` must stand alone"));
    }
    Ok(GroupWord::reduce(raw, mode))
}

/// Parses a word such as `a b^-1 c^2` or `e`.
pub fn parse_word(alphabet: &Alphabet, mode: WordMode, text: &str) -> Result<GroupWord> {
    parse_word_at(alphabet, mode, text, 0)
}

fn split_tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut consumed = 0usize;
    core::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        consumed += rest.len() - trimmed.len();
        rest = trimmed;
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let token = &rest[..end];
        let start = consumed;
        consumed += end;
        rest = &rest[end..];
        Some((start, token))
    })
}

/// Parses an element literal `(a; w)`.
pub fn parse_element(alphabet: &Alphabet, mode: WordMode, text: &str) -> Result<RackElement> {
    let trimmed = text.trim();
    let lead = text.len() - text.trim_start().len();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| syntax(lead, "expected `(base; word)`"))?;
    let semicolon = inner
        .find(';')
        .ok_or_else(|| syntax(lead, "missing `;` in element literal"))?;
    let (base, word) = (&inner[..semicolon], &inner[semicolon + 1..]);
    let base_name = base.trim();
    if !is_identifier(base_name) {
        return Err(syntax(lead + 1, alloc::format!("bad base `{base_name}`")));
    }
    let base = alphabet.generator(base_name)?;
    let word = parse_word_at(alphabet, mode, word, lead + 2 + semicolon)?;
    Ok(RackElement::new(base, word))
}

/// Parses a comma-separated list of element literals, as used by `--gens`.
pub fn parse_element_list(
    alphabet: &Alphabet,
    mode: WordMode,
    text: &str,
) -> Result<Vec<RackElement>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0usize;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(
                    parse_element(alphabet, mode, &text[start..i]).map_err(|e| shift(e, start))?,
                );
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(parse_element(alphabet, mode, &text[start..]).map_err(|e| shift(e, start))?);
    Ok(out)
}

fn shift(err: Error, by: usize) -> Error {
    match err {
        Error::Syntax { position, message } => Error::Syntax {
            position: position + by,
            message,
        },
        other => other,
    }
}

/// Display adapter for a word under an alphabet.
pub struct WordDisplay<'a> {
    alphabet: &'a Alphabet,
    word: &'a GroupWord,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("e");
        }
        for (i, s) in self.word.syllables().iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(self.alphabet.name(s.generator))?;
            if s.exponent != 1 {
                write!(f, "^{}", s.exponent)?;
            }
        }
        Ok(())
    }
}

/// Display adapter for `(a; w)` literals.
pub struct ElementDisplay<'a> {
    alphabet: &'a Alphabet,
    base: crate::word::Generator,
    word: &'a GroupWord,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {})",
            self.alphabet.name(self.base),
            self.word.display(self.alphabet)
        )
    }
}

impl GroupWord {
    /// Renders the word with generator names from `alphabet`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            alphabet,
            word: self,
        }
    }
}

impl RackElement {
    /// Renders the element as `(a; w)`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> ElementDisplay<'a> {
        ElementDisplay {
            alphabet,
            base: self.base(),
            word: self.word(),
        }
    }
}

impl QuandleElement {
    /// Renders the canonical representative as `(x; w)`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> ElementDisplay<'a> {
        ElementDisplay {
            alphabet,
            base: self.base(),
            word: self.word(),
        }
    }
}
