//! Crossing detection for a pair of strands meeting at the root of the
//! universal-cover tree.
//!
//! Two lifts through the root cross iff their ends alternate around the
//! circle of ends. Lifts that share a path of edges see the same four ends at
//! every vertex of that path, so a crossing is counted only at one vertex of
//! the shared path: the one where the strand of `alpha` enters it (its
//! incoming dart is not shared with `beta`).

use std::cmp::Ordering;

use crate::surface::FatRose;
use crate::words::CyclicWord;

use super::rays::{end_cmp, Ray};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum CrossingVerdict {
    Zero,
    Positive,
    Negative,
}

impl CrossingVerdict {
    pub fn value(self) -> i64 {
        match self {
            CrossingVerdict::Zero => 0,
            CrossingVerdict::Positive => 1,
            CrossingVerdict::Negative => -1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == CrossingVerdict::Zero
    }

    pub fn negate(self) -> Self {
        match self {
            CrossingVerdict::Zero => CrossingVerdict::Zero,
            CrossingVerdict::Positive => CrossingVerdict::Negative,
            CrossingVerdict::Negative => CrossingVerdict::Positive,
        }
    }
}

/// Whether the two strands belong to different curves or to the same one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Pairing {
    Distinct,
    SelfPair,
}

/// Which site pairs of a shared path report a crossing.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CountingRule {
    /// One vertex per shared path.
    #[default]
    CanonicalVertex,
    /// Every vertex whose ends alternate. Overcounts crossings along shared
    /// paths; kept to check that the identity harness detects it.
    EveryVertex,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Owner {
    Alpha,
    Beta,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Forward,
    Backward,
}

/// Raw linking verdict of the two lifts through the root: `±1` iff the ends
/// of `beta`'s lift separate those of `alpha`'s, `+1` when the
/// counterclockwise order is `(W_α, W_β, V_α, V_β)` and `-1` when it is
/// `(W_α, V_β, V_α, W_β)`.
///
/// Coinciding ends are ordered by treating the second strand (`beta`, or for
/// self pairs the larger site) as infinitesimally counterclockwise.
pub fn linking_sign(
    alpha: &CyclicWord,
    i: usize,
    beta: &CyclicWord,
    j: usize,
    rose: &FatRose,
    pairing: Pairing,
) -> CrossingVerdict {
    let second = match pairing {
        Pairing::SelfPair if i > j => Owner::Alpha,
        _ => Owner::Beta,
    };
    let mut ends = [
        (Ray::forward(alpha, i), Owner::Alpha, Kind::Forward),
        (Ray::backward(alpha, i), Owner::Alpha, Kind::Backward),
        (Ray::forward(beta, j), Owner::Beta, Kind::Forward),
        (Ray::backward(beta, j), Owner::Beta, Kind::Backward),
    ];
    ends.sort_by(|x, y| match end_cmp(&x.0, &y.0, rose) {
        Ordering::Equal if x.1 == y.1 => Ordering::Equal,
        Ordering::Equal if x.1 == second => Ordering::Greater,
        Ordering::Equal => Ordering::Less,
        o => o,
    });
    let owners = ends.map(|e| e.1);
    if owners[0] == owners[1] || owners[1] == owners[2] || owners[2] == owners[3] {
        return CrossingVerdict::Zero;
    }
    let start = ends.iter().position(|e| e.1 == Owner::Alpha && e.2 == Kind::Forward).unwrap();
    match ends[(start + 1) % 4].2 {
        Kind::Forward => CrossingVerdict::Positive,
        Kind::Backward => CrossingVerdict::Negative,
    }
}

/// Whether the root is the counted vertex of the path shared by the two
/// lifts: `alpha`'s incoming dart is not one of `beta`'s darts.
pub fn is_counted_vertex(alpha: &CyclicWord, i: usize, beta: &CyclicWord, j: usize) -> bool {
    let alpha_in = Ray::backward(alpha, i).first();
    alpha_in != Ray::forward(beta, j).first() && alpha_in != Ray::backward(beta, j).first()
}

/// Signed crossing of `alpha` at site `i` with `beta` at site `j`, counted
/// once per transversal double point.
pub fn crossing_sign(
    alpha: &CyclicWord,
    i: usize,
    beta: &CyclicWord,
    j: usize,
    rose: &FatRose,
    pairing: Pairing,
) -> CrossingVerdict {
    crossing_sign_with(alpha, i, beta, j, rose, pairing, CountingRule::CanonicalVertex)
}

pub fn crossing_sign_with(
    alpha: &CyclicWord,
    i: usize,
    beta: &CyclicWord,
    j: usize,
    rose: &FatRose,
    pairing: Pairing,
    rule: CountingRule,
) -> CrossingVerdict {
    if rule == CountingRule::CanonicalVertex && !is_counted_vertex(alpha, i, beta, j) {
        return CrossingVerdict::Zero;
    }
    linking_sign(alpha, i, beta, j, rose, pairing)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::SurfacePreset;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    fn torus() -> FatRose {
        FatRose::preset(SurfacePreset::OneHoledTorus).unwrap()
    }

    fn pants() -> FatRose {
        FatRose::preset(SurfacePreset::PairOfPants).unwrap()
    }

    #[test]
    fn sign_normalization_on_torus() {
        let v = crossing_sign(&cw("a"), 0, &cw("b"), 0, &torus(), Pairing::Distinct);
        assert_eq!(v, CrossingVerdict::Positive);
        let w = crossing_sign(&cw("b"), 0, &cw("a"), 0, &torus(), Pairing::Distinct);
        assert_eq!(w, CrossingVerdict::Negative);
    }

    #[test]
    fn pants_generators_do_not_cross() {
        let v = crossing_sign(&cw("a"), 0, &cw("b"), 0, &pants(), Pairing::Distinct);
        assert_eq!(v, CrossingVerdict::Zero);
    }

    #[test]
    fn self_sites_of_abab() {
        // abAb on the torus, 1-based sites (1,3) and (1,4).
        let w = cw("abAb");
        let t = torus();
        assert_eq!(crossing_sign(&w, 0, &w, 2, &t, Pairing::SelfPair), CrossingVerdict::Zero);
        assert_eq!(linking_sign(&w, 0, &w, 2, &t, Pairing::SelfPair), CrossingVerdict::Zero);
        assert!(!crossing_sign(&w, 0, &w, 3, &t, Pairing::SelfPair).is_zero());
        // (1,4) and (2,3) are the two ends of one shared edge.
        assert!(!linking_sign(&w, 1, &w, 2, &t, Pairing::SelfPair).is_zero());
        assert!(!is_counted_vertex(&w, 1, &w, 2));
    }

    #[test]
    fn parallel_strands_never_count() {
        let x = cw("aab");
        let t = torus();
        for i in 0..3 {
            assert!(crossing_sign(&x, i, &x, i, &t, Pairing::Distinct).is_zero());
        }
    }
}
