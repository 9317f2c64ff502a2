use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::CyclicWord;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// A basis element of a linear combination. Trivial elements are identified
/// with zero and never stored.
pub trait Basis: Ord + Clone + fmt::Display {
    /// JSON field name for this kind of key.
    const FIELD: &'static str;

    fn is_trivial(&self) -> bool;
}

impl Basis for CyclicWord {
    const FIELD: &'static str = "word";

    fn is_trivial(&self) -> bool {
        self.is_empty()
    }
}

/// Ordered tuple of classes, the basis of the `N`-fold tensor power.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Tensor<const N: usize>(pub [CyclicWord; N]);

impl<const N: usize> Basis for Tensor<N> {
    const FIELD: &'static str = "words";

    fn is_trivial(&self) -> bool {
        self.0.iter().any(CyclicWord::is_empty)
    }
}

impl<const N: usize> fmt::Display for Tensor<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, w) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "⊗")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl Tensor<2> {
    pub fn swap(&self) -> Self {
        let [u, v] = self.0.clone();
        Tensor([v, u])
    }
}

impl Tensor<3> {
    /// `u⊗v⊗w ↦ w⊗u⊗v`.
    pub fn cycle(&self) -> Self {
        let [u, v, w] = self.0.clone();
        Tensor([w, u, v])
    }
}

/// Finite formal sum with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<B: Basis> {
    terms: BTreeMap<B, Coeff>,
}

pub type Combo = LinComb<CyclicWord>;
pub type TensorCombo2 = LinComb<Tensor<2>>;
pub type TensorCombo3 = LinComb<Tensor<3>>;

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(basis: B, coeff: Coeff) -> Self {
        let mut c = Self::zero();
        c.add_term(basis, coeff);
        c
    }

    /// `1·basis`, or zero if the basis element is trivial.
    pub fn basis(basis: B) -> Self {
        Self::term(basis, Coeff::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, basis: &B) -> Coeff {
        self.terms.get(basis).cloned().unwrap_or_else(Coeff::zero)
    }

    /// Terms in canonical basis order.
    pub fn iter(&self) -> btree_map::Iter<'_, B, Coeff> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, basis: B, coeff: Coeff) {
        if basis.is_trivial() || coeff.is_zero() {
            return;
        }
        match self.terms.entry(basis) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_int(&mut self, basis: B, coeff: i64) {
        self.add_term(basis, Coeff::from_integer(BigInt::from(coeff)));
    }

    pub fn add_scaled(&mut self, other: &Self, lambda: &Coeff) {
        if lambda.is_zero() {
            return;
        }
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c * lambda);
        }
    }

    /// `self + lambda·other`.
    pub fn combine(&self, other: &Self, lambda: &Coeff) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, lambda);
        out
    }

    pub fn scale(&self, lambda: &Coeff) -> Self {
        Self::zero().combine(self, lambda)
    }

    pub fn map_basis<C: Basis>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |acc, c| acc + c)
    }
}

impl<B: Basis> FromIterator<(B, Coeff)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<B: Basis> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        self.combine(rhs, &Coeff::one())
    }
}

impl<B: Basis> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        self.combine(rhs, &-Coeff::one())
    }
}

impl<B: Basis> Neg for &LinComb<B> {
    type Output = LinComb<B>;
    fn neg(self) -> LinComb<B> {
        self.scale(&-Coeff::one())
    }
}

/// `p/q` with `q ≥ 1`, integers included (`3/1`).
pub fn format_coeff(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

pub fn parse_coeff(text: &str) -> Option<Coeff> {
    let text = text.trim();
    let (p, q) = match text.split_once('/') {
        Some((p, q)) => (p.trim().parse::<BigInt>().ok()?, q.trim().parse::<BigInt>().ok()?),
        None => (text.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if q.is_zero() {
        return None;
    }
    Some(Coeff::new(p, q))
}

/// Renders as `+1 ab -1/2 aB`, or `0`.
impl<B: Basis> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let abs = c.abs();
            if abs.is_integer() {
                write!(f, "{sign}{} {b}", abs.numer())?;
            } else {
                write!(f, "{sign}{}/{} {b}", abs.numer(), abs.denom())?;
            }
        }
        Ok(())
    }
}

struct Entry<'a, B>(&'a B, &'a Coeff);

impl<B: Basis + Serialize> Serialize for Entry<'_, B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry(B::FIELD, self.0)?;
        map.serialize_entry("coeff", &format_coeff(self.1))?;
        map.end()
    }
}

impl<B: Basis + Serialize> Serialize for LinComb<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&Entry(b, c))?;
        }
        seq.end()
    }
}

impl<'de, B: Basis + Deserialize<'de>> Deserialize<'de> for LinComb<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let entries = Vec::<serde_json::Map<String, serde_json::Value>>::deserialize(deserializer)?;
        let mut out = LinComb::zero();
        for mut entry in entries {
            let key = entry.remove(B::FIELD).ok_or_else(|| D::Error::missing_field(B::FIELD))?;
            let coeff = match entry.remove("coeff") {
                Some(serde_json::Value::String(s)) => parse_coeff(&s),
                _ => None,
            }
            .ok_or_else(|| D::Error::custom("coeff must be a \"p/q\" string"))?;
            // Keys are re-parsed through the word parser, so non-canonical
            // spellings are accepted and normalized.
            let basis = B::deserialize(key).map_err(D::Error::custom)?;
            out.add_term(basis, coeff);
        }
        Ok(out)
    }
}

impl<const N: usize> Serialize for Tensor<N> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(N))?;
        for w in &self.0 {
            seq.serialize_element(w)?;
        }
        seq.end()
    }
}

impl<'de, const N: usize> Deserialize<'de> for Tensor<N> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let words = Vec::<CyclicWord>::deserialize(deserializer)?;
        let words: [CyclicWord; N] =
            words.try_into().map_err(|v: Vec<_>| D::Error::invalid_length(v.len(), &"tensor arity"))?;
        Ok(Tensor(words))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    fn one() -> Coeff {
        Coeff::one()
    }

    #[test]
    fn combine_examples() {
        let x = Combo::basis(cw("a"));
        let y = Combo::basis(cw("b"));
        assert!(x.combine(&x, &-one()).is_zero());
        let s = x.combine(&y, &one());
        assert_eq!(s.len(), 2);
        assert_eq!(s.to_string(), "+1 a +1 b");
        let t = x.combine(&Combo::basis(CyclicWord::trivial()), &one());
        assert_eq!(t, x);
    }

    #[test]
    fn tensor_with_trivial_factor_is_zero() {
        let t = TensorCombo2::basis(Tensor([cw("a"), CyclicWord::trivial()]));
        assert!(t.is_zero());
    }

    #[test]
    fn json_format() {
        let mut c = Combo::zero();
        c.add_int(cw("ab"), -2);
        c.add_term(cw("b"), Coeff::new(1.into(), 3.into()));
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"[{"word":"b","coeff":"1/3"},{"word":"ab","coeff":"-2/1"}]"#);
        let back: Combo = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert_eq!(c.to_string(), "+1/3 b -2 ab");
    }

    #[test]
    fn tensor_json_and_display() {
        let t = TensorCombo2::basis(Tensor([cw("ab"), cw("B")]));
        assert_eq!(t.to_string(), "+1 ab⊗B");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"[{"words":["ab","B"],"coeff":"1/1"}]"#);
        let back: TensorCombo2 = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn parse_coeff_forms() {
        assert_eq!(parse_coeff("3"), Some(Coeff::from_integer(3.into())));
        assert_eq!(parse_coeff("-2/4"), Some(Coeff::new((-1).into(), 2.into())));
        assert_eq!(parse_coeff("1/0"), None);
    }
}
