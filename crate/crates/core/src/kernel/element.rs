use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::letter::Letter;
use super::word::Word;
use crate::error::Result;

/// Exact scalar coefficient.
pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// `base^exp` for a nonnegative exponent (`0^0 = 1`).
pub fn power(base: &Coeff, exp: usize) -> Coeff {
    let mut acc = Coeff::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// A finite linear combination of words with exact rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality
/// of elements. Terms iterate in canonical word order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Word, Coeff>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    /// The empty word with coefficient 1.
    pub fn one() -> Self {
        Element::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Element::term(w, Coeff::one())
    }

    pub fn term(w: Word, c: Coeff) -> Self {
        let mut e = Element::zero();
        e.add_term(w, c);
        e
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Element::word(Word::new(letters.to_vec()))
    }

    /// Adds `c·w` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            *self += other;
            return;
        }
        for (w, d) in other.iter() {
            self.add_term(w.clone(), d * c);
        }
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Word, Coeff> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn scale(&self, c: &Coeff) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(w, d)| (w.clone(), d * c)).collect(),
        }
    }

    /// Linear extension of a word-to-element map.
    pub fn linear<F>(&self, mut f: F) -> Result<Element>
    where
        F: FnMut(&Word) -> Result<Element>,
    {
        let mut out = Element::zero();
        for (w, c) in self.iter() {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    /// Bilinear extension of a word-pair map.
    pub fn bilinear<F>(&self, other: &Element, mut f: F) -> Result<Element>
    where
        F: FnMut(&Word, &Word) -> Result<Element>,
    {
        let mut out = Element::zero();
        for (u, c) in self.iter() {
            for (v, d) in other.iter() {
                let cd = c * d;
                let r = f(u, v)?;
                if out.is_zero() && cd.is_one() {
                    out = r;
                } else {
                    out.add_scaled(&r, &cd);
                }
            }
        }
        Ok(out)
    }

    /// Applies a word-to-word map termwise, merging coefficients.
    pub fn map_words<F>(&self, mut f: F) -> Element
    where
        F: FnMut(&Word) -> Word,
    {
        let mut out = Element::zero();
        for (w, c) in self.iter() {
            out.add_term(f(w), c.clone());
        }
        out
    }

    pub fn prepend(&self, letter: &Letter) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.prepend(letter), c.clone()))
                .collect(),
        }
    }

    /// Adds `c · (letter ⊗ other)`, with `c = 1` when `scale` is `None`.
    pub fn add_prepended(&mut self, letter: &Letter, other: &Element, scale: Option<&Coeff>) {
        for (w, c) in other.iter() {
            let c = match scale {
                Some(s) => c * s,
                None => c.clone(),
            };
            self.add_term(w.prepend(letter), c);
        }
    }

    pub fn contains_unit(&self) -> bool {
        self.words().any(Word::contains_unit)
    }

    /// True when every word has the given total degree.
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.words().all(|w| w.degree() == degree)
    }
}

impl FromIterator<(Word, Coeff)> for Element {
    fn from_iter<I: IntoIterator<Item = (Word, Coeff)>>(iter: I) -> Self {
        let mut e = Element::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

impl<'a> IntoIterator for &'a Element {
    type Item = (&'a Word, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, Word, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        for (w, c) in rhs.iter() {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl SubAssign<&Element> for Element {
    fn sub_assign(&mut self, rhs: &Element) {
        for (w, c) in rhs.iter() {
            self.add_term(w.clone(), -c);
        }
    }
}

impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;

    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Element {
    type Output = Element;

    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        Element {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;

    fn neg(self) -> Element {
        -&self
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::word(w)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::canonical_serialize(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(names: &[u32]) -> Word {
        names
            .iter()
            .map(|&n| Letter::new(&format!("z{n}"), n))
            .collect()
    }

    #[test]
    fn cancellation_drops_terms() {
        let a = Element::term(w(&[1]), int(2));
        let b = Element::term(w(&[1]), int(-2));
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &b).len(), 0);
    }

    #[test]
    fn exact_scaling() {
        let a = Element::term(w(&[1, 2]), int(3));
        assert_eq!(a.scale(&ratio(1, 3)), Element::word(w(&[1, 2])));
        assert!(a.scale(&int(0)).is_zero());
    }

    #[test]
    fn distinct_words_stay_apart() {
        let s = Element::word(w(&[1])) + Element::word(w(&[2]));
        assert_eq!(s.len(), 2);
        assert_eq!(&s - &Element::word(w(&[2])), Element::word(w(&[1])));
    }

    #[test]
    fn power_edge_cases() {
        assert_eq!(power(&int(0), 0), int(1));
        assert_eq!(power(&ratio(3, 5), 2), ratio(9, 25));
    }
}
