use thiserror::Error;

use crate::surface::FatRose;
use crate::words::{Basis, Coeff, Combo, CyclicWord, LinComb, Tensor, TensorCombo2, TensorCombo3};

use super::crossing::{crossing_sign_with, CountingRule, Pairing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("word {word} uses letters outside the rank-{rank} surface alphabet")]
pub struct AlphabetMismatch {
    pub word: String,
    pub rank: usize,
}

/// The bracket and cobracket on one surface.
#[derive(Clone, Copy, Debug)]
pub struct StringOperators<'a> {
    rose: &'a FatRose,
    rule: CountingRule,
}

impl<'a> StringOperators<'a> {
    pub fn new(rose: &'a FatRose) -> Self {
        StringOperators { rose, rule: CountingRule::CanonicalVertex }
    }

    pub fn with_rule(rose: &'a FatRose, rule: CountingRule) -> Self {
        StringOperators { rose, rule }
    }

    pub fn rose(&self) -> &'a FatRose {
        self.rose
    }

    pub fn check_word(&self, word: &CyclicWord) -> Result<(), AlphabetMismatch> {
        if self.rose.accepts(word) {
            Ok(())
        } else {
            Err(AlphabetMismatch { word: word.to_string(), rank: self.rose.rank() })
        }
    }

    pub fn check<B: Basis>(
        &self,
        combo: &LinComb<B>,
        words: impl Fn(&B) -> Vec<&CyclicWord>,
    ) -> Result<(), AlphabetMismatch> {
        combo.iter().try_for_each(|(b, _)| words(b).into_iter().try_for_each(|w| self.check_word(w)))
    }

    /// Bracket of two classes, accumulated into `out` with weight `coeff`.
    fn bracket_words_into(&self, alpha: &CyclicWord, beta: &CyclicWord, coeff: &Coeff, out: &mut Combo) {
        for i in 0..alpha.len() {
            for j in 0..beta.len() {
                let sign = crossing_sign_with(alpha, i, beta, j, self.rose, Pairing::Distinct, self.rule);
                if sign.is_zero() {
                    continue;
                }
                let loop_word = CyclicWord::from_letters(alpha.rotation(i).chain(beta.rotation(j)));
                out.add_term(loop_word, coeff * Coeff::from_integer(sign.value().into()));
            }
        }
    }

    pub fn bracket_words(&self, alpha: &CyclicWord, beta: &CyclicWord) -> Combo {
        let mut out = Combo::zero();
        if !alpha.is_trivial() && !beta.is_trivial() {
            self.bracket_words_into(alpha, beta, &Coeff::from_integer(1.into()), &mut out);
        }
        out
    }

    /// Goldman bracket, extended bilinearly.
    pub fn bracket(&self, x: &Combo, y: &Combo) -> Combo {
        let mut out = Combo::zero();
        for (alpha, cx) in x.iter() {
            for (beta, cy) in y.iter() {
                self.bracket_words_into(alpha, beta, &(cx * cy), &mut out);
            }
        }
        out
    }

    fn cobracket_word_into(&self, alpha: &CyclicWord, coeff: &Coeff, out: &mut TensorCombo2) {
        let p = alpha.len();
        for i in 0..p {
            for j in 0..p {
                if i == j {
                    continue;
                }
                let sign = crossing_sign_with(alpha, i, alpha, j, self.rose, Pairing::SelfPair, self.rule);
                if sign.is_zero() {
                    continue;
                }
                let first = CyclicWord::from_letters(alpha.arc(i, j));
                let second = CyclicWord::from_letters(alpha.arc(j, i));
                out.add_term(Tensor([first, second]), coeff * Coeff::from_integer(sign.value().into()));
            }
        }
    }

    pub fn cobracket_word(&self, alpha: &CyclicWord) -> TensorCombo2 {
        let mut out = TensorCombo2::zero();
        if !alpha.is_trivial() {
            self.cobracket_word_into(alpha, &Coeff::from_integer(1.into()), &mut out);
        }
        out
    }

    /// Turaev cobracket, extended linearly.
    pub fn cobracket(&self, x: &Combo) -> TensorCombo2 {
        let mut out = TensorCombo2::zero();
        for (alpha, c) in x.iter() {
            self.cobracket_word_into(alpha, c, &mut out);
        }
        out
    }

    /// `e = bracket ∘ cobracket`.
    pub fn e_operator(&self, x: &Combo) -> Combo {
        let mut out = Combo::zero();
        for (Tensor([u, v]), c) in self.cobracket(x).iter() {
            self.bracket_words_into(u, v, c, &mut out);
        }
        out
    }

    /// `[u⊗v, w] = [u,w]⊗v + u⊗[v,w]`.
    pub fn bracket_tensor_left(&self, t: &TensorCombo2, w: &Combo) -> TensorCombo2 {
        let mut out = TensorCombo2::zero();
        for (Tensor([u, v]), c) in t.iter() {
            let uw = self.bracket(&Combo::basis(u.clone()), w);
            let vw = self.bracket(&Combo::basis(v.clone()), w);
            for (s, cs) in uw.iter() {
                out.add_term(Tensor([s.clone(), v.clone()]), c * cs);
            }
            for (s, cs) in vw.iter() {
                out.add_term(Tensor([u.clone(), s.clone()]), c * cs);
            }
        }
        out
    }

    /// `[w, u⊗v] = [w,u]⊗v + u⊗[w,v]`.
    pub fn bracket_tensor_right(&self, w: &Combo, t: &TensorCombo2) -> TensorCombo2 {
        let mut out = TensorCombo2::zero();
        for (Tensor([u, v]), c) in t.iter() {
            let wu = self.bracket(w, &Combo::basis(u.clone()));
            let wv = self.bracket(w, &Combo::basis(v.clone()));
            for (s, cs) in wu.iter() {
                out.add_term(Tensor([s.clone(), v.clone()]), c * cs);
            }
            for (s, cs) in wv.iter() {
                out.add_term(Tensor([u.clone(), s.clone()]), c * cs);
            }
        }
        out
    }

    /// `(s₂ ⊗ id) ∘ s₂`.
    pub fn iterated_cobracket(&self, x: &Combo) -> TensorCombo3 {
        let mut out = TensorCombo3::zero();
        for (Tensor([u, v]), c) in self.cobracket(x).iter() {
            for (Tensor([p, q]), cu) in self.cobracket_word(u).iter() {
                out.add_term(Tensor([p.clone(), q.clone(), v.clone()]), c * cu);
            }
        }
        out
    }

    pub fn antisymmetry_defect(&self, x: &Combo, y: &Combo) -> Combo {
        &self.bracket(x, y) + &self.bracket(y, x)
    }

    /// `s₂ + swap ∘ s₂`.
    pub fn coantisymmetry_defect(&self, x: &Combo) -> TensorCombo2 {
        let s = self.cobracket(x);
        &s + &s.map_basis(Tensor::swap)
    }

    /// `[[x,y],z] + [[y,z],x] + [[z,x],y]`.
    pub fn jacobi_defect(&self, x: &Combo, y: &Combo, z: &Combo) -> Combo {
        let mut out = self.bracket(&self.bracket(x, y), z);
        out = &out + &self.bracket(&self.bracket(y, z), x);
        &out + &self.bracket(&self.bracket(z, x), y)
    }

    /// `(id + τ + τ²) ∘ (s₂ ⊗ id) ∘ s₂` with `τ(u⊗v⊗w) = w⊗u⊗v`.
    pub fn cojacobi_defect(&self, x: &Combo) -> TensorCombo3 {
        let t = self.iterated_cobracket(x);
        let t1 = t.map_basis(Tensor::cycle);
        let t2 = t1.map_basis(Tensor::cycle);
        &(&t + &t1) + &t2
    }

    /// `s₂([x,y]) − [s₂(x), y] − [x, s₂(y)]`.
    pub fn drinfeld_defect(&self, x: &Combo, y: &Combo) -> TensorCombo2 {
        let lhs = self.cobracket(&self.bracket(x, y));
        let left = self.bracket_tensor_left(&self.cobracket(x), y);
        let right = self.bracket_tensor_right(x, &self.cobracket(y));
        &(&lhs - &left) - &right
    }
}

fn words_of_combo(w: &CyclicWord) -> Vec<&CyclicWord> {
    vec![w]
}

/// Goldman bracket on `rose`, with alphabet validation.
pub fn goldman_bracket(x: &Combo, y: &Combo, rose: &FatRose) -> Result<Combo, AlphabetMismatch> {
    let ops = StringOperators::new(rose);
    ops.check(x, words_of_combo)?;
    ops.check(y, words_of_combo)?;
    Ok(ops.bracket(x, y))
}

/// Turaev cobracket on `rose`, with alphabet validation.
pub fn turaev_cobracket(x: &Combo, rose: &FatRose) -> Result<TensorCombo2, AlphabetMismatch> {
    let ops = StringOperators::new(rose);
    ops.check(x, words_of_combo)?;
    Ok(ops.cobracket(x))
}

pub fn e_operator(x: &Combo, rose: &FatRose) -> Result<Combo, AlphabetMismatch> {
    let ops = StringOperators::new(rose);
    ops.check(x, words_of_combo)?;
    Ok(ops.e_operator(x))
}
