//! Rays of periodic words in the universal-cover tree of a fat rose, and the
//! circular order of their ends.
//!
//! A site of a cyclic word `x_0 … x_{p-1}` is a letter gap; site `i` sits just
//! before `x_i`. Placing the lift of the word through the root of the tree at
//! site `i` gives two rays: forward `x_i x_{i+1} …` and backward
//! `x_{i-1}⁻¹ x_{i-2}⁻¹ …`.

use std::cmp::Ordering;

use thiserror::Error;

use crate::surface::FatRose;
use crate::words::{CyclicWord, Letter};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Forward,
    Backward,
}

#[derive(Clone, Copy, Debug)]
pub struct Ray<'a> {
    letters: &'a [Letter],
    site: usize,
    direction: Direction,
}

impl<'a> Ray<'a> {
    /// Panics if `word` is trivial or `site` is out of range.
    pub fn new(word: &'a CyclicWord, site: usize, direction: Direction) -> Self {
        assert!(!word.is_trivial(), "rays need a nontrivial word");
        assert!(site < word.len(), "site {site} out of range");
        Ray { letters: word.letters(), site, direction }
    }

    pub fn forward(word: &'a CyclicWord, site: usize) -> Self {
        Ray::new(word, site, Direction::Forward)
    }

    pub fn backward(word: &'a CyclicWord, site: usize) -> Self {
        Ray::new(word, site, Direction::Backward)
    }

    pub fn period(&self) -> usize {
        self.letters.len()
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Dart taken at 0-based `depth`.
    pub fn letter(&self, depth: usize) -> Letter {
        let p = self.letters.len();
        match self.direction {
            Direction::Forward => self.letters[(self.site + depth) % p],
            Direction::Backward => self.letters[(self.site + p - 1 - depth % p) % p].inv(),
        }
    }

    /// The dart that leaves the root.
    pub fn first(&self) -> Letter {
        self.letter(0)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RayComparison {
    Equal,
    /// The rays agree up to `depth - 1` (1-based) and then take the darts
    /// `left` and `right`. `incoming` is the dart at the divergence vertex
    /// that points back toward the root; `None` at the root itself.
    Diverges {
        depth: usize,
        left: Letter,
        right: Letter,
        incoming: Option<Letter>,
    },
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compares two rays letter by letter. Two periodic words with periods `p`
/// and `q` that agree on their first `p + q - gcd(p, q)` letters agree
/// everywhere, so the scan stops there.
pub fn ray_compare(r1: &Ray<'_>, r2: &Ray<'_>) -> RayComparison {
    let (p, q) = (r1.period(), r2.period());
    let bound = p + q - gcd(p, q);
    for depth in 0..bound {
        let (l, r) = (r1.letter(depth), r2.letter(depth));
        if l != r {
            return RayComparison::Diverges {
                depth: depth + 1,
                left: l,
                right: r,
                incoming: (depth > 0).then(|| r1.letter(depth - 1).inv()),
            };
        }
    }
    RayComparison::Equal
}

/// Linear order of ends obtained by cutting the circle of ends just before
/// the branch of `dart_order[0]` at the root and reading counterclockwise.
/// Below the root, branches are read counterclockwise starting just after the
/// incoming dart.
pub fn end_cmp(r1: &Ray<'_>, r2: &Ray<'_>, rose: &FatRose) -> Ordering {
    match ray_compare(r1, r2) {
        RayComparison::Equal => Ordering::Equal,
        RayComparison::Diverges { left, right, incoming: None, .. } => rose.position(left).cmp(&rose.position(right)),
        RayComparison::Diverges { left, right, incoming: Some(e), .. } => {
            rose.ccw_offset(e, left).cmp(&rose.ccw_offset(e, right))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("two of the rays define the same end")]
pub struct EqualRays;

/// `+1` if the ends of `(r1, r2, r3)` are in counterclockwise circular order,
/// `-1` otherwise.
pub fn end_order(r1: &Ray<'_>, r2: &Ray<'_>, r3: &Ray<'_>, rose: &FatRose) -> Result<i8, EqualRays> {
    let c12 = end_cmp(r1, r2, rose);
    let c23 = end_cmp(r2, r3, rose);
    let c13 = end_cmp(r1, r3, rose);
    if c12.is_eq() || c23.is_eq() || c13.is_eq() {
        return Err(EqualRays);
    }
    // Rotations of the sorted order are exactly the even permutations.
    let inversions = [c12, c23, c13].iter().filter(|c| c.is_gt()).count();
    let ccw = inversions % 2 == 0;
    Ok(if ccw { 1 } else { -1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    fn l(c: char) -> Letter {
        Letter::from_char(c).unwrap()
    }

    #[test]
    fn ray_letters() {
        let w = cw("abAb");
        let fwd: String = (0..6).map(|d| Ray::forward(&w, 0).letter(d).to_string()).collect();
        assert_eq!(fwd, "abAbab");
        let bwd: String = (0..6).map(|d| Ray::backward(&w, 3).letter(d).to_string()).collect();
        assert_eq!(bwd, "aBABaB");
    }

    #[test]
    fn compare_examples() {
        let a = cw("a");
        let b = cw("b");
        assert_eq!(
            ray_compare(&Ray::forward(&a, 0), &Ray::forward(&b, 0)),
            RayComparison::Diverges { depth: 1, left: l('a'), right: l('b'), incoming: None }
        );
        let w = cw("abAb");
        // W at site 1 = a b A b …, V at site 4 = a B A B … (1-based sites).
        assert_eq!(
            ray_compare(&Ray::forward(&w, 0), &Ray::backward(&w, 3)),
            RayComparison::Diverges { depth: 2, left: l('b'), right: l('B'), incoming: Some(l('A')) }
        );
        assert_eq!(ray_compare(&Ray::forward(&a, 0), &Ray::forward(&a, 0)), RayComparison::Equal);
    }

    #[test]
    fn equality_of_powers_needs_full_bound() {
        let u = cw("ab");
        let u2 = cw("abab");
        assert_eq!(ray_compare(&Ray::forward(&u, 0), &Ray::forward(&u2, 2)), RayComparison::Equal);
        assert_ne!(ray_compare(&Ray::forward(&u, 0), &Ray::forward(&u2, 1)), RayComparison::Equal);
        // aabaab… against aabaaab…: the first difference is at the
        // Fine-Wilf bound 3 + 4 - 1.
        let v = cw("aab");
        let v2 = cw("aaab");
        assert!(matches!(
            ray_compare(&Ray::forward(&v, 0), &Ray::forward(&v2, 1)),
            RayComparison::Diverges { depth: 6, .. }
        ));
    }
}
