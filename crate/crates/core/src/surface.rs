//! Oriented surfaces with boundary, presented as a one-vertex ribbon graph
//! (a fat rose).
//!
//! The dart of letter `g` is the end of loop `g` it leaves the vertex along;
//! the dart of `g⁻¹` is the end it returns along. The cyclic dart order is
//! read counterclockwise with respect to the surface orientation, and every
//! sign convention downstream depends on it.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::words::{parse_letters, CyclicWord, Letter, WordError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("malformed surface: dart {0} appears more than once")]
    DuplicateDart(Letter),
    #[error("malformed surface: dart {0} is missing")]
    MissingDart(Letter),
    #[error("malformed surface: {0}")]
    Parse(#[from] WordError),
    #[error("unsupported surface: closed surfaces (b = 0) are not supported")]
    Closed,
    #[error("unknown surface preset {0:?} (expected torus1, pants or g<g>b<b>)")]
    UnknownPreset(String),
    #[error("surface preset needs rank {0}, above the text alphabet limit")]
    TooLarge(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FatRose {
    order: Vec<Letter>,
    /// Position of each dart id in `order`.
    position: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SurfaceInvariants {
    pub euler_char: i64,
    pub genus: u64,
    pub boundary_count: usize,
    pub boundary_words: Vec<CyclicWord>,
}

/// Named surfaces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurfacePreset {
    PairOfPants,
    OneHoledTorus,
    Genus { genus: usize, boundary: usize },
}

impl FatRose {
    /// Validates a cyclic dart order: each of the `2·rank` darts exactly once,
    /// where the rank is one more than the largest generator index present.
    ///
    /// The empty order is accepted as the disk (rank 0).
    pub fn new(order: Vec<Letter>) -> Result<Self, SurfaceError> {
        let rank = order.iter().map(|d| d.index() + 1).max().unwrap_or(0);
        let mut position = vec![usize::MAX; 2 * rank];
        for (k, d) in order.iter().enumerate() {
            if position[d.id()] != usize::MAX {
                return Err(SurfaceError::DuplicateDart(*d));
            }
            position[d.id()] = k;
        }
        if let Some(id) = position.iter().position(|&p| p == usize::MAX) {
            return Err(SurfaceError::MissingDart(Letter::from_id(id)));
        }
        Ok(FatRose { order, position })
    }

    /// Parses a dart line such as `a b A B`.
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        FatRose::new(parse_letters(text)?)
    }

    pub fn preset(preset: SurfacePreset) -> Result<Self, SurfaceError> {
        let (genus, boundary) = match preset {
            SurfacePreset::PairOfPants => (0, 3),
            SurfacePreset::OneHoledTorus => (1, 1),
            SurfacePreset::Genus { genus, boundary } => (genus, boundary),
        };
        if boundary == 0 {
            return Err(SurfaceError::Closed);
        }
        let rank = 2 * genus + boundary - 1;
        if rank > crate::words::MAX_TEXT_RANK {
            return Err(SurfaceError::TooLarge(rank));
        }
        let mut order = Vec::with_capacity(2 * rank);
        for k in 0..genus as u16 {
            let (a, b) = (Letter::generator(2 * k), Letter::generator(2 * k + 1));
            order.extend([a, b, a.inv(), b.inv()]);
        }
        for j in 0..(boundary - 1) as u16 {
            let c = Letter::generator(2 * genus as u16 + j);
            order.extend([c, c.inv()]);
        }
        FatRose::new(order)
    }

    pub fn rank(&self) -> usize {
        self.order.len() / 2
    }

    pub fn dart_order(&self) -> &[Letter] {
        &self.order
    }

    pub fn degree(&self) -> usize {
        self.order.len()
    }

    pub fn position(&self, dart: Letter) -> usize {
        self.position[dart.id()]
    }

    /// Counterclockwise successor of a dart at the vertex.
    pub fn succ(&self, dart: Letter) -> Letter {
        self.order[(self.position(dart) + 1) % self.order.len()]
    }

    /// Steps counterclockwise from `from` to `to`, in `0..2·rank`.
    pub fn ccw_offset(&self, from: Letter, to: Letter) -> usize {
        let n = self.order.len();
        (self.position(to) + n - self.position(from)) % n
    }

    pub fn contains(&self, letter: Letter) -> bool {
        letter.index() < self.rank()
    }

    /// Whether every letter of `word` belongs to this surface's alphabet.
    pub fn accepts(&self, word: &CyclicWord) -> bool {
        word.min_rank() <= self.rank()
    }

    /// Boundary components, traced by `next(d) = succ(inv(d))`; each face
    /// reads as the cyclic word of darts it traverses.
    pub fn boundary_words(&self) -> Vec<CyclicWord> {
        if self.order.is_empty() {
            return vec![CyclicWord::trivial()];
        }
        let mut seen = vec![false; self.order.len()];
        let mut faces = Vec::new();
        for start in 0..self.order.len() {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = Letter::from_id(start);
            while !seen[d.id()] {
                seen[d.id()] = true;
                face.push(d);
                d = self.succ(d.inv());
            }
            faces.push(CyclicWord::canonical_form(&face));
        }
        faces
    }

    pub fn invariants(&self) -> SurfaceInvariants {
        let boundary_words = self.boundary_words();
        let euler_char = 1 - self.rank() as i64;
        let boundary_count = boundary_words.len();
        let twice_genus = 2 - boundary_count as i64 - euler_char;
        debug_assert!(twice_genus >= 0 && twice_genus % 2 == 0);
        SurfaceInvariants { euler_char, genus: (twice_genus / 2) as u64, boundary_count, boundary_words }
    }
}

impl fmt::Display for FatRose {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, d) in self.order.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for SurfacePreset {
    type Err = SurfaceError;

    /// `torus1`, `pants`, or `g<g>b<b>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || SurfaceError::UnknownPreset(s.to_string());
        match s {
            "torus1" => Ok(SurfacePreset::OneHoledTorus),
            "pants" => Ok(SurfacePreset::PairOfPants),
            _ => {
                let rest = s.strip_prefix('g').ok_or_else(unknown)?;
                let (g, b) = rest.split_once('b').ok_or_else(unknown)?;
                let genus = g.parse().map_err(|_| unknown())?;
                let boundary = b.parse().map_err(|_| unknown())?;
                Ok(SurfacePreset::Genus { genus, boundary })
            }
        }
    }
}
