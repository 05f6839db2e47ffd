//! Rack expressions: `a^2 |> (b; c) |>- c`.
//!
//! ```text
//! expr    := primary (op primary)*
//! op      := "|>" | "|>-"
//! primary := unit ("^" int)*
//! unit    := ident | "(" ident ";" word ")" | "(" expr ")"
//! ```
//!
//! Operators associate to the left and powers bind tighter. A bare
//! identifier `g` stands for the element `(g; e)`.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::rack::{RackElement, Sign};
use crate::subrack::Basis;
use crate::syntax::{parse_int, parse_word_at};
use crate::word::{Alphabet, Generator, WordMode};
use crate::{Error, Result};

/// A leaf of an expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    /// A bare generator, meaning `(g; e)`.
    Generator(Generator),
    /// An element literal `(a; w)`.
    Literal(RackElement),
}

/// Expression tree over rack elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RackExpr {
    /// A leaf.
    Atom(Atom),
    /// `left |>± right`.
    Op {
        #[allow(missing_docs)]
        left: Box<RackExpr>,
        #[allow(missing_docs)]
        sign: Sign,
        #[allow(missing_docs)]
        right: Box<RackExpr>,
    },
    /// `base^exponent`, i.e. `|exponent|` self-applications.
    Power {
        #[allow(missing_docs)]
        base: Box<RackExpr>,
        #[allow(missing_docs)]
        exponent: i64,
    },
}

impl RackExpr {
    /// A bare generator leaf.
    pub fn generator(g: Generator) -> Self {
        RackExpr::Atom(Atom::Generator(g))
    }

    /// An element literal leaf.
    pub fn literal(e: RackElement) -> Self {
        RackExpr::Atom(Atom::Literal(e))
    }

    /// The leaf for `e`: a bare generator when `e`'s word is trivial.
    pub fn element(e: &RackElement) -> Self {
        if e.word().is_identity() {
            RackExpr::generator(e.base())
        } else {
            RackExpr::literal(e.clone())
        }
    }

    /// `left |>± right`.
    pub fn op(left: RackExpr, sign: Sign, right: RackExpr) -> Self {
        RackExpr::Op {
            left: Box::new(left),
            sign,
            right: Box::new(right),
        }
    }

    /// `base^exponent`.
    pub fn power(base: RackExpr, exponent: i64) -> Self {
        RackExpr::Power {
            base: Box::new(base),
            exponent,
        }
    }

    /// Parses `text` over `alphabet`; literal words are reduced in `mode`.
    pub fn parse(alphabet: &Alphabet, mode: WordMode, text: &str) -> Result<RackExpr> {
        let mut parser = Parser {
            alphabet,
            mode,
            text,
            pos: 0,
        };
        let expr = parser.expr()?;
        parser.skip_ws();
        if parser.pos < text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(expr)
    }

    /// Folds the tree through the rack operations.
    pub fn evaluate(&self, mode: WordMode) -> Result<RackElement> {
        match self {
            RackExpr::Atom(Atom::Generator(g)) => Ok(RackElement::generator(*g, mode)),
            RackExpr::Atom(Atom::Literal(e)) => {
                if e.mode() != mode {
                    return Err(Error::ModeMismatch {
                        left: mode,
                        right: e.mode(),
                    });
                }
                Ok(e.clone())
            }
            RackExpr::Op { left, sign, right } => {
                left.evaluate(mode)?.op(&right.evaluate(mode)?, *sign)
            }
            RackExpr::Power { base, exponent } => Ok(base.evaluate(mode)?.power(*exponent)),
        }
    }

    /// Renders the expression with minimal parentheses.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> ExprDisplay<'a> {
        ExprDisplay {
            alphabet,
            expr: self,
        }
    }
}

/// Display adapter for [`RackExpr`].
pub struct ExprDisplay<'a> {
    alphabet: &'a Alphabet,
    expr: &'a RackExpr,
}

impl fmt::Display for ExprDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self.alphabet, self.expr)
    }
}

fn write_expr(f: &mut fmt::Formatter<'_>, alphabet: &Alphabet, expr: &RackExpr) -> fmt::Result {
    match expr {
        RackExpr::Atom(Atom::Generator(g)) => f.write_str(alphabet.name(*g)),
        RackExpr::Atom(Atom::Literal(e)) => write!(f, "{}", e.display(alphabet)),
        RackExpr::Op { left, sign, right } => {
            write_expr(f, alphabet, left)?;
            f.write_str(match sign {
                Sign::Pos => " |> ",
                Sign::Neg => " |>- ",
            })?;
            if matches!(**right, RackExpr::Op { .. }) {
                f.write_str("(")?;
                write_expr(f, alphabet, right)?;
                f.write_str(")")
            } else {
                write_expr(f, alphabet, right)
            }
        }
        RackExpr::Power { base, exponent } => {
            if matches!(**base, RackExpr::Op { .. }) {
                f.write_str("(")?;
                write_expr(f, alphabet, base)?;
                f.write_str(")")?;
            } else {
                write_expr(f, alphabet, base)?;
            }
            write!(f, "^{exponent}")
        }
    }
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    mode: WordMode,
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn ident(&mut self) -> Option<&str> {
        let rest = &self.text[self.pos..];
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic()
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    fn expr(&mut self) -> Result<RackExpr> {
        let mut left = self.primary()?;
        loop {
            self.skip_ws();
            if !self.rest().starts_with("|>") {
                return Ok(left);
            }
            self.pos += 2;
            let sign = if self.peek() == Some('-') {
                self.pos += 1;
                Sign::Neg
            } else {
                Sign::Pos
            };
            let right = self.primary()?;
            left = RackExpr::op(left, sign, right);
        }
    }

    fn primary(&mut self) -> Result<RackExpr> {
        let mut unit = self.unit()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('^') {
                return Ok(unit);
            }
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let rest = self.rest();
            let len = rest
                .char_indices()
                .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
                .count();
            if len == 0 {
                return Err(self.error("expected integer exponent"));
            }
            let exponent = parse_int(&rest[..len], start)?;
            self.pos += len;
            unit = RackExpr::power(unit, exponent);
        }
    }

    fn unit(&mut self) -> Result<RackExpr> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                self.skip_ws();
                let after_paren = self.pos;
                if let Some(name) = self.ident() {
                    let name = name.to_string();
                    self.skip_ws();
                    if self.peek() == Some(';') {
                        return self.literal(start, &name);
                    }
                }
                self.pos = after_paren;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => {
                let Some(name) = self.ident().map(str::to_string) else {
                    return Err(self.error("expected generator, literal or `(`"));
                };
                let g = self.alphabet.generator(&name)?;
                Ok(RackExpr::generator(g))
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn literal(&mut self, start: usize, name: &str) -> Result<RackExpr> {
        let base = self.alphabet.generator(name)?;
        // past the `;`
        self.pos += 1;
        let close = self.rest().find(')').ok_or_else(|| Error::Syntax {
            position: start,
            message: "unterminated element literal".to_string(),
        })?;
        let word_text = &self.text[self.pos..self.pos + close];
        let word = parse_word_at(self.alphabet, self.mode, word_text, self.pos)?;
        self.pos += close + 1;
        Ok(RackExpr::literal(RackElement::new(base, word)))
    }
}

/// A representation `q_head^n |>e1 q_t1 |>e2 ... ` over a [`Basis`].
///
/// When the tail is nonempty its first atom differs from the head. In
/// involutory mode every tail sign is [`Sign::Pos`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NormalForm {
    /// Index of the head element in the basis.
    pub head: usize,
    /// Self-power applied to the head; 0 means the bare element.
    pub head_exponent: i64,
    /// Right operands in application order.
    pub tail: Vec<(Sign, usize)>,
}

impl NormalForm {
    /// Checks indices against `basis` and the head/first-tail rule.
    pub fn validate(&self, basis: &Basis) -> Result<()> {
        let n = basis.len();
        if self.head >= n || self.tail.iter().any(|&(_, i)| i >= n) {
            return Err(Error::MalformedNormalForm(
                "basis index out of range".to_string(),
            ));
        }
        if self.tail.first().is_some_and(|&(_, i)| i == self.head) {
            return Err(Error::MalformedNormalForm(
                "first tail atom repeats the head".to_string(),
            ));
        }
        Ok(())
    }

    /// The expression tree this form denotes.
    pub fn to_expr(&self, basis: &Basis) -> RackExpr {
        let elements = basis.elements();
        let mut expr = RackExpr::element(&elements[self.head]);
        if self.head_exponent != 0 {
            expr = RackExpr::power(expr, self.head_exponent);
        }
        for &(sign, i) in &self.tail {
            expr = RackExpr::op(expr, sign, RackExpr::element(&elements[i]));
        }
        expr
    }

    /// Evaluates the form over `basis`.
    pub fn evaluate(&self, basis: &Basis) -> Result<RackElement> {
        self.validate(basis)?;
        let elements = basis.elements();
        let mut out = elements[self.head].power(self.head_exponent);
        for &(sign, i) in &self.tail {
            out = out.op_unchecked(&elements[i], sign);
        }
        Ok(out)
    }
}
