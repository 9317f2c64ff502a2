use std::fmt;

use super::{ChordDiagram, DiagramError};

/// The named diagrams: `I(n)` and `II(n)` for the n-ary bracket and
/// cobracket, `III`–`VI` for the compositions behind the Lie bialgebra
/// identities, and `VII` for `bracket ∘ cobracket`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiagramPreset {
    /// `n` circles, one site each, joined by one `n`-prong.
    I(usize),
    /// One circle with `n` sites joined by one `n`-prong whose cyclic order
    /// is the reverse of the circle order.
    II(usize),
    /// `[[1,2],3]`: three circles, the middle one carrying both chords.
    III,
    /// `(s₂ ⊗ id) ∘ s₂`: one circle with two nested chords.
    IV,
    /// `s₂([1,2])` with the internal chord on the second circle.
    V,
    /// `s₂([1,2])` with both chords connecting the two circles.
    VI,
    /// `bracket ∘ cobracket`: one circle with two linked chords.
    VII,
}

fn labels(v: &[&[&str]]) -> Vec<Vec<String>> {
    v.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect()
}

impl DiagramPreset {
    /// `name` is one of `I`..`VII`; `n` is used by `I` and `II`.
    pub fn parse(name: &str, n: usize) -> Result<Self, DiagramError> {
        Ok(match name {
            "I" => DiagramPreset::I(n),
            "II" => DiagramPreset::II(n),
            "III" => DiagramPreset::III,
            "IV" => DiagramPreset::IV,
            "V" => DiagramPreset::V,
            "VI" => DiagramPreset::VI,
            "VII" => DiagramPreset::VII,
            _ => return Err(DiagramError::UnknownPreset(name.to_string())),
        })
    }

    pub fn build(self) -> Result<ChordDiagram, DiagramError> {
        match self {
            DiagramPreset::I(n) | DiagramPreset::II(n) if n < 2 => {
                Err(DiagramError::ArityTooSmall(if matches!(self, DiagramPreset::I(_)) { "I" } else { "II" }))
            }
            DiagramPreset::I(n) => {
                let sites: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
                ChordDiagram::new(sites.iter().map(|s| vec![s.clone()]).collect(), vec![sites])
            }
            DiagramPreset::II(n) => {
                let sites: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
                let reversed = sites.iter().rev().cloned().collect();
                ChordDiagram::new(vec![sites], vec![reversed])
            }
            DiagramPreset::III => {
                ChordDiagram::new(labels(&[&["p"], &["q", "r"], &["s"]]), labels(&[&["p", "q"], &["r", "s"]]))
            }
            DiagramPreset::IV => {
                ChordDiagram::new(labels(&[&["1", "2", "3", "4"]]), labels(&[&["1", "4"], &["2", "3"]]))
            }
            DiagramPreset::V => {
                ChordDiagram::new(labels(&[&["u"], &["v", "w1", "w2"]]), labels(&[&["u", "v"], &["w1", "w2"]]))
            }
            DiagramPreset::VI => {
                ChordDiagram::new(labels(&[&["p1", "p2"], &["q2", "q1"]]), labels(&[&["p1", "q1"], &["p2", "q2"]]))
            }
            DiagramPreset::VII => {
                ChordDiagram::new(labels(&[&["1", "2", "3", "4"]]), labels(&[&["1", "3"], &["2", "4"]]))
            }
        }
    }
}

impl fmt::Display for DiagramPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramPreset::I(n) => write!(f, "I({n})"),
            DiagramPreset::II(n) => write!(f, "II({n})"),
            DiagramPreset::III => write!(f, "III"),
            DiagramPreset::IV => write!(f, "IV"),
            DiagramPreset::V => write!(f, "V"),
            DiagramPreset::VI => write!(f, "VI"),
            DiagramPreset::VII => write!(f, "VII"),
        }
    }
}
