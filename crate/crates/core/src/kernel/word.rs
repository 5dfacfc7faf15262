use std::cmp::Ordering;
use std::fmt;

use super::letter::Letter;

/// A tensor word `a1 ⊗ ... ⊗ an`; the empty word is the scalar `1`.
///
/// Words order by total degree, then length, then the lexicographic sequence
/// of letter names, so that graded components stay contiguous.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    degree: u32,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        let degree = letters.iter().map(Letter::degree).sum();
        Word { letters, degree }
    }

    pub fn single(letter: Letter) -> Self {
        Word::new(vec![letter])
    }

    /// `1_A^{⊗n}`.
    pub fn units(n: usize) -> Self {
        Word::new(vec![Letter::unit(); n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contains_unit(&self) -> bool {
        self.letters.iter().any(Letter::is_unit)
    }

    pub fn first(&self) -> Option<&Letter> {
        self.letters.first()
    }

    /// Everything after the first letter (empty for the empty word).
    pub fn tail(&self) -> Word {
        match self.letters.split_first() {
            Some((_, rest)) => Word::new(rest.to_vec()),
            None => Word::empty(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            letters,
            degree: self.degree + other.degree,
        }
    }

    pub fn prepend(&self, letter: &Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter.clone());
        letters.extend_from_slice(&self.letters);
        Word {
            letters,
            degree: self.degree + letter.degree(),
        }
    }

    /// Splits into `(prefix, suffix)` with `prefix.len() == k`.
    pub fn split_at(&self, k: usize) -> (Word, Word) {
        let (u, v) = self.letters.split_at(k);
        (Word::new(u.to_vec()), Word::new(v.to_vec()))
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then(self.len().cmp(&other.len()))
            .then_with(|| {
                self.letters
                    .iter()
                    .map(Letter::name)
                    .cmp(other.letters.iter().map(Letter::name))
            })
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("[e]");
        }
        f.write_str("[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(l.name())?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32) -> Letter {
        Letter::new(&format!("z{n}"), n)
    }

    #[test]
    fn degree_and_length_are_additive() {
        let a = Word::new(vec![z(1), z(3)]);
        let b = Word::new(vec![Letter::unit(), z(2)]);
        let ab = a.concat(&b);
        assert_eq!(ab.len(), a.len() + b.len());
        assert_eq!(ab.degree(), a.degree() + b.degree());
        assert_eq!(Word::empty().degree(), 0);
    }

    #[test]
    fn canonical_order() {
        let z2 = Word::single(z(2));
        let z1z1 = Word::new(vec![z(1), z(1)]);
        let z3 = Word::single(z(3));
        assert!(z2 < z1z1);
        assert!(z1z1 < z3);
        assert!(Word::empty() < Word::single(Letter::unit()));
    }

    #[test]
    fn display() {
        assert_eq!(Word::empty().to_string(), "[e]");
        assert_eq!(Word::new(vec![Letter::unit(), z(1)]).to_string(), "[1,z1]");
    }
}
