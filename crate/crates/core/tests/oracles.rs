//! Independent checks of the bracket and cobracket: an interval model of the
//! planar tree, the homological intersection form, and hand-derived cases.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use stringtop_core::bialgebra::crossing::is_counted_vertex;
use stringtop_core::bialgebra::{
    crossing_sign, end_order, linking_sign, ray_compare, CrossingVerdict, Pairing, Ray, RayComparison, StringOperators,
};
use stringtop_core::sampling::WordSampler;
use stringtop_core::surface::{FatRose, SurfacePreset};
use stringtop_core::words::{Coeff, Combo, CyclicWord, Letter, Tensor};

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

fn c(s: &str) -> Combo {
    Combo::basis(cw(s))
}

fn surface(name: &str) -> FatRose {
    FatRose::preset(name.parse::<SurfacePreset>().unwrap()).unwrap()
}

/// Position of an end on the unit circle of the embedded tree, truncated at
/// `depth` edges: the root splits `[0, 1)` evenly among its darts in
/// counterclockwise order; every other vertex splits its interval evenly
/// among its non-incoming darts, counterclockwise from the incoming one.
fn end_position(darts: &[Letter], rose: &FatRose) -> BigRational {
    let order = rose.dart_order();
    let n = order.len() as i64;
    let pos = |d: Letter| order.iter().position(|&x| x == d).unwrap() as i64;
    let mut lo = BigRational::zero();
    let mut width = BigRational::one();
    for (k, &d) in darts.iter().enumerate() {
        let (slot, slots) = if k == 0 {
            (pos(d), n)
        } else {
            let incoming = darts[k - 1].inv();
            ((pos(d) - pos(incoming)).rem_euclid(n) - 1, n - 1)
        };
        width /= BigRational::from_integer(BigInt::from(slots));
        lo += &width * BigRational::from_integer(BigInt::from(slot));
    }
    lo
}

fn ray_darts(w: &CyclicWord, site: usize, forward: bool, depth: usize) -> Vec<Letter> {
    let p = w.len();
    let l = w.letters();
    (0..depth).map(|t| if forward { l[(site + t) % p] } else { l[(site + 2 * p * depth - 1 - t) % p].inv() }).collect()
}

/// Linking verdict from interval positions; `None` if two ends coincide.
fn oracle_linking(alpha: &CyclicWord, i: usize, beta: &CyclicWord, j: usize, rose: &FatRose) -> Option<i64> {
    let depth = 2 * (alpha.len() + beta.len());
    let ends = [
        (end_position(&ray_darts(alpha, i, true, depth), rose), 0, true),
        (end_position(&ray_darts(alpha, i, false, depth), rose), 0, false),
        (end_position(&ray_darts(beta, j, true, depth), rose), 1, true),
        (end_position(&ray_darts(beta, j, false, depth), rose), 1, false),
    ];
    let mut sorted = ends.to_vec();
    sorted.sort_by(|x, y| x.0.cmp(&y.0));
    if sorted.windows(2).any(|w| w[0].0 == w[1].0) {
        return None;
    }
    let owners: Vec<_> = sorted.iter().map(|e| e.1).collect();
    if owners[0] == owners[1] || owners[1] == owners[2] || owners[2] == owners[3] {
        return Some(0);
    }
    let start = sorted.iter().position(|e| e.1 == 0 && e.2).unwrap();
    Some(if sorted[(start + 1) % 4].2 { 1 } else { -1 })
}

/// Algebraic intersection of two generator loops, read off the cyclic order
/// of their four darts.
fn generator_intersection(k: usize, l: usize, rose: &FatRose) -> i64 {
    if k == l {
        return 0;
    }
    let order = rose.dart_order();
    let targets = [
        Letter::generator(k as u16),
        Letter::generator(l as u16),
        Letter::inverse_of(k as u16),
        Letter::inverse_of(l as u16),
    ];
    let seq: Vec<usize> = order.iter().filter_map(|d| targets.iter().position(|t| t == d)).collect();
    let start = seq.iter().position(|&x| x == 0).unwrap();
    let rotated: Vec<usize> = (0..4).map(|t| seq[(start + t) % 4]).collect();
    match rotated.as_slice() {
        [0, 1, 2, 3] => 1,
        [0, 3, 2, 1] => -1,
        _ => 0,
    }
}

fn abelianize(w: &CyclicWord, rank: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    for l in w.letters() {
        v[l.index()] += if l.is_inverse() { -1 } else { 1 };
    }
    v
}

fn homological_intersection(alpha: &CyclicWord, beta: &CyclicWord, rose: &FatRose) -> i64 {
    let (ha, hb) = (abelianize(alpha, rose.rank()), abelianize(beta, rose.rank()));
    let mut total = 0;
    for (k, x) in ha.iter().enumerate() {
        for (l, y) in hb.iter().enumerate() {
            total += x * y * generator_intersection(k, l, rose);
        }
    }
    total
}

#[test]
fn linking_sign_matches_interval_model() {
    for name in ["torus1", "pants", "g2b1", "g1b2"] {
        let rose = surface(name);
        for trial in 0..60 {
            let mut s = WordSampler::new(11, trial, rose.rank(), 6);
            let [x, y] = s.words::<2>();
            for (alpha, beta, pairing) in [(&x, &y, Pairing::Distinct), (&x, &x, Pairing::SelfPair)] {
                for i in 0..alpha.len() {
                    for j in 0..beta.len() {
                        let Some(expected) = oracle_linking(alpha, i, beta, j, &rose) else {
                            continue;
                        };
                        let got = linking_sign(alpha, i, beta, j, &rose, pairing).value();
                        assert_eq!(got, expected, "{name}: {alpha}@{i} vs {beta}@{j}");
                    }
                }
            }
        }
    }
}

#[test]
fn end_order_matches_interval_model() {
    let rose = surface("g2b1");
    for trial in 0..80 {
        let mut s = WordSampler::new(5, trial, rose.rank(), 7);
        let [x, y, z] = s.words::<3>();
        let rays = [Ray::forward(&x, 0), Ray::backward(&y, y.len() - 1), Ray::forward(&z, z.len() / 2)];
        let darts =
            [ray_darts(&x, 0, true, 40), ray_darts(&y, y.len() - 1, false, 40), ray_darts(&z, z.len() / 2, true, 40)];
        let pos: Vec<BigRational> = darts.iter().map(|d| end_position(d, &rose)).collect();
        if pos[0] == pos[1] || pos[1] == pos[2] || pos[0] == pos[2] {
            assert!(end_order(&rays[0], &rays[1], &rays[2], &rose).is_err());
            continue;
        }
        let inversions = [(0, 1), (1, 2), (0, 2)].iter().filter(|&&(a, b)| pos[a] > pos[b]).count();
        let expected = if inversions % 2 == 0 { 1 } else { -1 };
        assert_eq!(end_order(&rays[0], &rays[1], &rays[2], &rose).unwrap(), expected);
    }
}

#[test]
fn bracket_coefficient_sum_is_intersection_number() {
    for name in ["torus1", "pants", "g2b1", "g1b2", "g0b4"] {
        let rose = surface(name);
        let ops = StringOperators::new(&rose);
        for trial in 0..150 {
            let mut s = WordSampler::new(3, trial, rose.rank(), 10);
            let [x, y] = s.words::<2>();
            let sum = ops.bracket_words(&x, &y).coefficient_sum();
            let expected = Coeff::from_integer(homological_intersection(&x, &y, &rose).into());
            assert_eq!(sum, expected, "{name}: [{x}, {y}]");
        }
    }
}

#[test]
fn boundary_words_are_central_and_simple() {
    for name in ["torus1", "pants", "g2b1", "g1b2", "g0b4"] {
        let rose = surface(name);
        let ops = StringOperators::new(&rose);
        let boundaries: Vec<CyclicWord> = rose.boundary_words().into_iter().flat_map(|w| [w.inverse(), w]).collect();
        for trial in 0..40 {
            let mut s = WordSampler::new(9, trial, rose.rank(), 9);
            let w = Combo::basis(s.word());
            for d in &boundaries {
                let d = Combo::basis(d.clone());
                assert!(ops.bracket(&d, &w).is_zero(), "{name}: [{d}, {w}]");
            }
        }
        for d in &boundaries {
            assert!(ops.cobracket_word(d).is_zero(), "{name}: s2({d})");
        }
    }
}

#[test]
fn powers_of_simple_curves_meeting_once() {
    let rose = surface("torus1");
    let ops = StringOperators::new(&rose);
    for p in 1..=3 {
        for q in 1..=3 {
            let x = cw(&"a".repeat(p));
            let y = cw(&"b".repeat(q));
            let expected = Combo::term(
                CyclicWord::from_letters(x.letters().iter().chain(y.letters()).copied()),
                Coeff::from_integer(((p * q) as i64).into()),
            );
            assert_eq!(ops.bracket_words(&x, &y), expected);
            assert!(ops.cobracket_word(&x).is_zero());
            // Powers of one class commute.
            assert!(ops.bracket_words(&cw("aab"), &cw(&"aab".repeat(q))).is_zero());
        }
    }
}

#[test]
fn hand_derived_ray_cases() {
    let w = cw("abAb");
    let l = |ch| Letter::from_char(ch).unwrap();
    // 1-based W₁ against V₄.
    assert_eq!(
        ray_compare(&Ray::forward(&w, 0), &Ray::backward(&w, 3)),
        RayComparison::Diverges { depth: 2, left: l('b'), right: l('B'), incoming: Some(l('A')) }
    );
    let torus = surface("torus1");
    let (a, b, aa) = (cw("a"), cw("b"), cw("A"));
    let (ra, rb, raa) = (Ray::forward(&a, 0), Ray::forward(&b, 0), Ray::forward(&aa, 0));
    assert_eq!(end_order(&ra, &rb, &raa, &torus), Ok(1));
    assert_eq!(end_order(&ra, &raa, &rb, &torus), Ok(-1));
    // V₁, V₃ share the dart B; inside its subtree V₃ (turning A) precedes
    // V₁ (turning a) counterclockwise after the incoming b.
    let v1 = Ray::backward(&w, 0);
    let v3 = Ray::backward(&w, 2);
    let w1 = Ray::forward(&w, 0);
    assert_eq!(end_order(&w1, &v3, &v1, &torus), Ok(1));
    assert_eq!(end_order(&v1, &v3, &w1, &torus), Ok(-1));
}

#[test]
fn hand_derived_crossings_of_abab() {
    let torus = surface("torus1");
    let w = cw("abAb");
    // Nonzero ordered self pairs, 1-based: (1,4) and (3,2).
    let mut nonzero = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i != j && !crossing_sign(&w, i, &w, j, &torus, Pairing::SelfPair).is_zero() {
                nonzero.push((i + 1, j + 1));
            }
        }
    }
    assert_eq!(nonzero, vec![(1, 4), (3, 2)]);
    assert_eq!(crossing_sign(&w, 0, &w, 3, &torus, Pairing::SelfPair), CrossingVerdict::Positive);
    assert_eq!(crossing_sign(&w, 2, &w, 1, &torus, Pairing::SelfPair), CrossingVerdict::Negative);
    // Both ends of the shared edge link; only one is counted per order.
    assert_eq!(linking_sign(&w, 1, &w, 2, &torus, Pairing::SelfPair), CrossingVerdict::Positive);
    assert!(is_counted_vertex(&w, 0, &w, 3) && !is_counted_vertex(&w, 1, &w, 2));
    let s2 = StringOperators::new(&torus).cobracket_word(&w);
    assert!(s2.is_zero());
}

#[test]
fn nonzero_cobracket_example() {
    // aabAB on the torus: splitting gives terms whose factors have
    // homology classes summing to that of the word.
    let torus = surface("torus1");
    let ops = StringOperators::new(&torus);
    let s = ops.cobracket(&c("aabAB"));
    assert!(!s.is_zero());
    let total = abelianize(&cw("aabAB"), 2);
    for (Tensor([u, v]), _) in s.iter() {
        let (hu, hv) = (abelianize(u, 2), abelianize(v, 2));
        assert_eq!(vec![hu[0] + hv[0], hu[1] + hv[1]], total);
    }
}
