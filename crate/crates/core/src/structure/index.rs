use std::fmt;

use crate::error::{Error, Result};
use crate::kernel::{Alphabet, Element, Word};

/// A finite sequence `I = (i_1, ..., i_r)` of nonnegative integers. Entry 0
/// stands for the unit letter, entry `n > 0` for the `n`-th alphabet letter.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndexSequence(Vec<usize>);

impl IndexSequence {
    pub fn new(entries: Vec<usize>) -> Self {
        IndexSequence(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    /// `ℓ(I)`
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&i| i == 0).count()
    }

    /// All entries nonzero.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&i| i > 0)
    }

    /// `y_{⊗I}` over `alphabet`.
    pub fn to_word(&self, alphabet: &Alphabet) -> Result<Word> {
        self.0.iter().map(|&i| alphabet.nth_letter(i)).collect()
    }

    /// Sequential support: the nonzero entries in order.
    pub fn ssupp(&self) -> IndexSequence {
        IndexSequence(self.0.iter().copied().filter(|&i| i > 0).collect())
    }

    /// `I ∼ J`: same length and same sequential support.
    pub fn equivalent(&self, other: &IndexSequence) -> bool {
        self.len() == other.len() && self.ssupp() == other.ssupp()
    }

    /// Every `J ∼ I`, in increasing order.
    pub fn equivalence_class(&self) -> Vec<IndexSequence> {
        let support = self.ssupp();
        let (len, zeros) = (self.len(), self.zero_count());
        let mut out = Vec::new();
        // a bitmask marks the zero positions
        for mask in 0u64..(1u64 << len) {
            if mask.count_ones() as usize != zeros {
                continue;
            }
            let mut rest = support.0.iter();
            let entries = (0..len)
                .map(|p| if mask >> p & 1 == 1 { 0 } else { *rest.next().unwrap() })
                .collect();
            out.push(IndexSequence(entries));
        }
        out.sort();
        out
    }
}

impl From<Vec<usize>> for IndexSequence {
    fn from(v: Vec<usize>) -> Self {
        IndexSequence(v)
    }
}

impl fmt::Display for IndexSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// The one-shuffled element `O(y_{⊗I})`: the sum of `y_{⊗J}` over `J ∼ I`.
pub fn one_shuffled(index: &IndexSequence, alphabet: &Alphabet) -> Result<Element> {
    if index.len() >= 64 {
        return Err(Error::IndexOutOfRange(index.len()));
    }
    let mut out = Element::zero();
    for j in index.equivalence_class() {
        out += &Element::word(j.to_word(alphabet)?);
    }
    Ok(out)
}

/// All sequences over `1..=letters` of length at most `max_len`, shortest first.
pub fn positive_sequences(letters: usize, max_len: usize) -> Vec<IndexSequence> {
    let mut out = vec![IndexSequence::default()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s: &Vec<usize>| {
                (1..=letters).map(move |i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(IndexSequence));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::parse_element;

    fn seq(v: &[usize]) -> IndexSequence {
        IndexSequence::new(v.to_vec())
    }

    #[test]
    fn ssupp_examples() {
        assert_eq!(seq(&[2, 0, 1]).ssupp(), seq(&[2, 1]));
        assert_eq!(seq(&[0, 0]).ssupp(), seq(&[]));
        assert_eq!(seq(&[3, 1, 4]).ssupp(), seq(&[3, 1, 4]));
        assert_eq!(seq(&[2, 0, 1]).to_string(), "(2,0,1)");
        assert_eq!(seq(&[]).to_string(), "()");
    }

    #[test]
    fn one_shuffled_examples() {
        let a = Alphabet::stuffle();
        let o = one_shuffled(&seq(&[2, 0, 1]), &a).unwrap();
        assert_eq!(o, parse_element("[z2,1,z1] + [1,z2,z1] + [z2,z1,1]", &a).unwrap());
        assert_eq!(one_shuffled(&seq(&[3, 1]), &a).unwrap(), parse_element("[z3,z1]", &a).unwrap());
        assert_eq!(one_shuffled(&seq(&[0, 0]), &a).unwrap(), parse_element("[1,1]", &a).unwrap());
        assert_eq!(one_shuffled(&seq(&[]), &a).unwrap(), Element::one());
    }

    #[test]
    fn positive_sequence_counts() {
        assert_eq!(positive_sequences(2, 2).len(), 1 + 2 + 4);
        assert_eq!(positive_sequences(3, 0), vec![seq(&[])]);
    }
}
