//! The free rack `X x F(X)`, the free quandle of generator conjugates, and the
//! projection between them.

use alloc::vec::Vec;

use crate::word::{Generator, GroupWord, WordMode};
use crate::Result;

/// Which of the two rack operations to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    /// `|>`
    Pos,
    /// `|>-`, the inverse operation.
    Neg,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn exponent(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    /// The other sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    /// Sign of a nonzero integer; `None` for zero.
    pub fn of(k: i64) -> Option<Sign> {
        match k {
            0 => None,
            k if k > 0 => Some(Sign::Pos),
            _ => Some(Sign::Neg),
        }
    }

    /// Both signs, `Pos` first.
    pub const BOTH: [Sign; 2] = [Sign::Pos, Sign::Neg];
}

/// An element `(a, u)` of the free rack.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RackElement {
    base: Generator,
    word: GroupWord,
}

impl RackElement {
    /// Builds `(base, word)`. Any pair is a valid element.
    pub fn new(base: Generator, word: GroupWord) -> Self {
        RackElement { base, word }
    }

    /// The bare generator `(g, e)`.
    pub fn generator(base: Generator, mode: WordMode) -> Self {
        RackElement::new(base, GroupWord::identity(mode))
    }

    /// The base generator `a`.
    pub fn base(&self) -> Generator {
        self.base
    }

    /// The word `u`.
    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    /// Word mode of the element.
    pub fn mode(&self) -> WordMode {
        self.word.mode()
    }

    /// `(a, u) |>± (b, v) = (a, u v^-1 b^±1 v)`.
    pub fn op(&self, other: &RackElement, sign: Sign) -> Result<RackElement> {
        self.word.check_mode(&other.word)?;
        Ok(self.op_unchecked(other, sign))
    }

    pub(crate) fn op_unchecked(&self, other: &RackElement, sign: Sign) -> RackElement {
        let mut word = self.word.mul(&other.word.invert());
        word.push(other.base, sign.exponent());
        RackElement {
            base: self.base,
            word: word.mul(&other.word),
        }
    }

    /// Acts on `self` by the group element `by` (the conjugate that a rack
    /// element acts through): `(a, u) -> (a, u by)`.
    pub(crate) fn act_by(&self, by: &GroupWord) -> RackElement {
        RackElement {
            base: self.base,
            word: self.word.mul(by),
        }
    }

    /// `k` self-applications with the sign of `k`: `(x, w) -> (x, x^k w)`.
    /// `k = 0` returns the element unchanged.
    pub fn power(&self, k: i64) -> RackElement {
        let mut word = GroupWord::power(self.base, k, self.mode());
        word = word.mul(&self.word);
        RackElement {
            base: self.base,
            word,
        }
    }

    /// The image `x^w` in the free quandle, as its canonical representative.
    pub fn project(&self) -> QuandleElement {
        self.decompose().1
    }

    /// Splits `(x, x^n w)` into `n` and the canonical class `x^w`.
    pub fn decompose(&self) -> (i64, QuandleElement) {
        let (n, tail) = self.word.strip_leading_power(self.base);
        (
            n,
            QuandleElement {
                base: self.base,
                word: tail,
            },
        )
    }

    /// True if the word carries no leading power of the base.
    pub fn is_fiber_canonical(&self) -> bool {
        !self.word.starts_with(self.base)
    }

    /// The group element `w^-1 x w` this element acts through.
    pub fn conjugate_word(&self) -> GroupWord {
        GroupWord::generator(self.base, self.mode()).conjugate_unchecked(&self.word)
    }
}

/// A conjugate `w^-1 x w` of a generator, stored as `(x, w)` with `w` free of
/// any leading power of `x`. Equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuandleElement {
    base: Generator,
    word: GroupWord,
}

impl QuandleElement {
    /// Canonical representative of `word^-1 base word`.
    pub fn new(base: Generator, word: GroupWord) -> Self {
        let (_, word) = word.strip_leading_power(base);
        QuandleElement { base, word }
    }

    /// The generator `x`.
    pub fn base(&self) -> Generator {
        self.base
    }

    /// The canonical conjugator `w`.
    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    /// Word mode of the element.
    pub fn mode(&self) -> WordMode {
        self.word.mode()
    }

    /// `x^w |>± y^v = x^(w v^-1 y^±1 v)`, canonicalized.
    pub fn op(&self, other: &QuandleElement, sign: Sign) -> Result<QuandleElement> {
        self.word.check_mode(&other.word)?;
        Ok(self.op_unchecked(other, sign))
    }

    pub(crate) fn op_unchecked(&self, other: &QuandleElement, sign: Sign) -> QuandleElement {
        let mut word = self.word.mul(&other.word.invert());
        word.push(other.base, sign.exponent());
        QuandleElement::new(self.base, word.mul(&other.word))
    }

    /// The fiber-canonical preimage `(x, w)`.
    pub fn lift(&self) -> RackElement {
        RackElement::new(self.base, self.word.clone())
    }

    /// The group element `w^-1 x w`.
    pub fn conjugate_word(&self) -> GroupWord {
        GroupWord::generator(self.base, self.mode()).conjugate_unchecked(&self.word)
    }
}

/// One of the rack axioms checked by [`check_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    /// `(x |> y) |> z = (x |> z) |> (y |> z)`
    SelfDistributive,
    /// `(x |>- y) |>- z = (x |>- z) |>- (y |>- z)`
    SelfDistributiveInverse,
    /// `(x |> y) |>- y = x`
    RightCancel,
    /// `(x |>- y) |> y = x`
    RightCancelInverse,
}

impl Law {
    /// All four laws.
    pub const ALL: [Law; 4] = [
        Law::SelfDistributive,
        Law::SelfDistributiveInverse,
        Law::RightCancel,
        Law::RightCancelInverse,
    ];

    /// Short name used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Law::SelfDistributive => "self-distributive",
            Law::SelfDistributiveInverse => "self-distributive-inverse",
            Law::RightCancel => "right-cancel",
            Law::RightCancelInverse => "right-cancel-inverse",
        }
    }

    /// Both sides of the law on `(x, y, z)`; `z` is ignored by the
    /// cancellation laws.
    pub fn sides(
        self,
        x: &RackElement,
        y: &RackElement,
        z: &RackElement,
    ) -> (RackElement, RackElement) {
        use Sign::*;
        match self {
            Law::SelfDistributive => (
                x.op_unchecked(y, Pos).op_unchecked(z, Pos),
                x.op_unchecked(z, Pos)
                    .op_unchecked(&y.op_unchecked(z, Pos), Pos),
            ),
            Law::SelfDistributiveInverse => (
                x.op_unchecked(y, Neg).op_unchecked(z, Neg),
                x.op_unchecked(z, Neg)
                    .op_unchecked(&y.op_unchecked(z, Neg), Neg),
            ),
            Law::RightCancel => (x.op_unchecked(y, Pos).op_unchecked(y, Neg), x.clone()),
            Law::RightCancelInverse => (x.op_unchecked(y, Neg).op_unchecked(y, Pos), x.clone()),
        }
    }
}

/// A failed axiom instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    /// Which law failed.
    pub law: Law,
    /// Index of the triple in the sample.
    pub index: usize,
    /// Left-hand side as computed.
    pub left: RackElement,
    /// Right-hand side as computed.
    pub right: RackElement,
}

/// Outcome of [`check_axioms`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AxiomReport {
    /// Number of law instances evaluated.
    pub checked: usize,
    /// Every instance whose two sides differ.
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    /// True when no law failed.
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluates both self-distributive laws on every triple and both
/// cancellation laws on every leading pair.
pub fn check_axioms(sample: &[(RackElement, RackElement, RackElement)]) -> Result<AxiomReport> {
    let mut report = AxiomReport::default();
    for (index, (x, y, z)) in sample.iter().enumerate() {
        x.word.check_mode(&y.word)?;
        x.word.check_mode(&z.word)?;
        for law in Law::ALL {
            let (left, right) = law.sides(x, y, z);
            report.checked += 1;
            if left != right {
                report.violations.push(AxiomViolation {
                    law,
                    index,
                    left,
                    right,
                });
            }
        }
    }
    Ok(report)
}
