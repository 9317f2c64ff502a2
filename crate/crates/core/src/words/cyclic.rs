use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{free_reduce, parse_letters, write_letters, Letter, Word, WordError};

/// A cyclically reduced word up to rotation, i.e. a conjugacy class in the
/// free group. Stored in its lexicographically least rotation.
///
/// The empty cyclic word is the trivial class.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn trivial() -> Self {
        CyclicWord(Vec::new())
    }

    /// Canonical rotation of a letter sequence that is already cyclically
    /// reduced.
    pub fn canonical_form(letters: &[Letter]) -> Self {
        debug_assert!(is_cyclically_reduced(letters));
        let n = letters.len();
        if n == 0 {
            return Self::trivial();
        }
        let best = (1..n).fold(0, |best, k| if rotation_cmp(letters, k, best) == Ordering::Less { k } else { best });
        CyclicWord(letters[best..].iter().chain(&letters[..best]).copied().collect())
    }

    /// Free and cyclic reduction of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        cyclic_reduce(&free_reduce(letters))
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        Ok(Self::from_letters(parse_letters(text)?))
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

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    /// `x_k x_{k+1} … x_{k-1}` as a linear word.
    pub fn rotation(&self, k: usize) -> impl Iterator<Item = Letter> + '_ {
        let n = self.0.len();
        (0..n).map(move |t| self.0[(k + t) % n])
    }

    /// Cyclic subword `x_from … x_{to-1}`; `from == to` gives the full
    /// rotation.
    pub fn arc(&self, from: usize, to: usize) -> impl Iterator<Item = Letter> + '_ {
        let n = self.0.len();
        let len = if n == 0 { 0 } else { (to + n - from - 1) % n + 1 };
        (0..len).map(move |t| self.0[(from + t) % n])
    }

    pub fn inverse(&self) -> CyclicWord {
        let inv: Vec<Letter> = self.0.iter().rev().map(|l| l.inv()).collect();
        Self::canonical_form(&inv)
    }

    /// Largest generator index used, plus one.
    pub fn min_rank(&self) -> usize {
        self.0.iter().map(|l| l.index() + 1).max().unwrap_or(0)
    }
}

fn rotation_cmp(letters: &[Letter], a: usize, b: usize) -> Ordering {
    let n = letters.len();
    (0..n).map(|t| letters[(a + t) % n].cmp(&letters[(b + t) % n])).find(|o| o.is_ne()).unwrap_or(Ordering::Equal)
}

fn is_cyclically_reduced(letters: &[Letter]) -> bool {
    let n = letters.len();
    (0..n).all(|k| n == 1 || letters[k].inv() != letters[(k + 1) % n])
}

/// Cancels first-against-last letters until the word is cyclically reduced,
/// then returns its canonical rotation.
pub fn cyclic_reduce(word: &Word) -> CyclicWord {
    let l = word.letters();
    let (mut lo, mut hi) = (0, l.len());
    while hi - lo >= 2 && l[lo].inv() == l[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    CyclicWord::canonical_form(&l[lo..hi])
}

/// Shortlex: shorter words first, then the letter order.
impl Ord for CyclicWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for CyclicWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.0)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        CyclicWord::parse(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn cyclic_reduce_examples() {
        assert_eq!(cw("Aba"), cw("b"));
        assert_eq!(cw("baB"), cw("a"));
        assert_eq!(cw("abAB").to_string(), "abAB");
        assert_eq!(cw("abcBA"), cw("c"));
        assert!(cw("abBA").is_trivial());
    }

    #[test]
    fn canonical_rotation_examples() {
        assert_eq!(cw("ba").to_string(), "ab");
        assert_eq!(cw("BA").to_string(), "AB");
        assert_eq!(cw("1").to_string(), "1");
        assert_eq!(cw("bAba").to_string(), "abAb");
    }

    #[test]
    fn arc_wraps_around() {
        let w = cw("abAb");
        let s: Vec<_> = w.arc(3, 1).collect();
        assert_eq!(s, vec![Letter::generator(1), Letter::generator(0)]);
        assert_eq!(w.arc(2, 2).count(), 4);
        assert_eq!(w.arc(0, 1).count(), 1);
    }

    #[test]
    fn shortlex_order() {
        assert!(cw("B") < cw("ab"));
        assert!(cw("a") < cw("A"));
        assert!(cw("ab") < cw("aB"));
    }

    #[test]
    fn inverse_class() {
        assert_eq!(cw("abAB").inverse(), cw("baBA"));
        assert_eq!(cw("aab").inverse().to_string(), "AAB");
    }
}
