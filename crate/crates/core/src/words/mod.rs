//! Letters, freely reduced words, cyclic words and their formal linear
//! combinations.
//!
//! Text encoding: generator `k` (0-based) is the `k`-th lowercase letter and
//! its inverse the matching uppercase letter, so `aB` is `g1 g2⁻¹`. The
//! trivial word renders as `1`.

mod combo;
mod cyclic;

pub use combo::{Basis, Coeff, Combo, LinComb, Tensor, TensorCombo2, TensorCombo3};
pub use cyclic::{cyclic_reduce, CyclicWord};

use std::fmt;

use thiserror::Error;

/// Largest rank expressible in the letter text encoding.
pub const MAX_TEXT_RANK: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid letter {found:?} at position {position}")]
    InvalidLetter { position: usize, found: char },
    #[error("generator index {0} cannot be written as a letter")]
    UnencodableIndex(usize),
}

/// A generator or the inverse of a generator.
///
/// The derived order is `g1 < g1⁻¹ < g2 < g2⁻¹ < …`, which is the order used
/// to pick canonical rotations.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    index: u16,
    inverse: bool,
}

impl Letter {
    pub const fn generator(index: u16) -> Self {
        Letter { index, inverse: false }
    }

    pub const fn inverse_of(index: u16) -> Self {
        Letter { index, inverse: true }
    }

    /// 0-based generator index.
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inv(self) -> Self {
        Letter { index: self.index, inverse: !self.inverse }
    }

    /// Dense id in `0..2·rank`: `2·index + inverse`.
    pub fn id(self) -> usize {
        2 * self.index as usize + self.inverse as usize
    }

    pub fn from_id(id: usize) -> Self {
        Letter { index: (id / 2) as u16, inverse: id % 2 == 1 }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'a'..='z' => Some(Letter::generator(c as u16 - 'a' as u16)),
            'A'..='Z' => Some(Letter::inverse_of(c as u16 - 'A' as u16)),
            _ => None,
        }
    }

    pub fn to_char(self) -> Option<char> {
        if self.index() >= MAX_TEXT_RANK {
            return None;
        }
        let base = if self.inverse { b'A' } else { b'a' };
        Some((base + self.index as u8) as char)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_char() {
            Some(c) => write!(f, "{c}"),
            None if self.inverse => write!(f, "g{}^-1", self.index + 1),
            None => write!(f, "g{}", self.index + 1),
        }
    }
}

/// Parses letters, ignoring ASCII whitespace. `1` (and the empty string)
/// denote the empty sequence.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>, WordError> {
    let trimmed = text.trim();
    if trimmed == "1" {
        return Ok(Vec::new());
    }
    trimmed
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_ascii_whitespace())
        .map(|(position, c)| Letter::from_char(c).ok_or(WordError::InvalidLetter { position, found: c }))
        .collect()
}

/// A freely reduced word: no letter is adjacent to its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        Ok(free_reduce(parse_letters(text)?))
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        free_reduce(self.0.iter().chain(other.0.iter()).copied())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

pub(crate) fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter]) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "1");
    }
    let spaced = letters.iter().any(|l| l.to_char().is_none());
    for (k, l) in letters.iter().enumerate() {
        if spaced && k > 0 {
            write!(f, " ")?;
        }
        write!(f, "{l}")?;
    }
    Ok(())
}

/// Free reduction by a single stack pass.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word(out)
}
