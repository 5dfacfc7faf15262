use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::alphabet::Alphabet;
use super::letter::Letter;
use super::word::Word;

/// All words of exactly `len` letters drawn from `letters`, in odometer order.
pub fn words_of_length(letters: &[Letter], len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| letters.iter().map(move |l| w.concat(&Word::single(l.clone()))))
            .collect();
    }
    out
}

/// All words of length at most `max_len` over `letters`, shortest first.
pub fn words_up_to_length(letters: &[Letter], max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|n| words_of_length(letters, n)).collect()
}

/// Unit-free words of total degree exactly `degree`.
pub fn words_of_degree(alphabet: &Alphabet, degree: u32) -> Vec<Word> {
    if degree == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    for first in 1..=degree {
        for l in alphabet.letters_of_degree(first) {
            for rest in words_of_degree(alphabet, degree - first) {
                out.push(rest.prepend(&l));
            }
        }
    }
    out.sort();
    out
}

/// Unit-free words of total degree at most `bound`, in canonical order.
pub fn words_up_to_degree(alphabet: &Alphabet, bound: u32) -> Vec<Word> {
    (0..=bound).flat_map(|d| words_of_degree(alphabet, d)).collect()
}

/// Number of unit-free words of the given total degree: compositions of
/// `degree` weighted by the slice sizes `|X_n|`.
pub fn graded_dimension(alphabet: &Alphabet, degree: u32) -> BigUint {
    let d = degree as usize;
    let slice: Vec<BigUint> = (0..=degree)
        .map(|n| BigUint::from(alphabet.letters_of_degree(n).len()))
        .collect();
    let mut dims = vec![BigUint::zero(); d + 1];
    dims[0] = BigUint::one();
    for total in 1..=d {
        let mut acc = BigUint::zero();
        for first in 1..=total {
            acc += &slice[first] * &dims[total - first];
        }
        dims[total] = acc;
    }
    dims[d].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stuffle_dimensions_are_compositions() {
        let a = Alphabet::stuffle();
        assert_eq!(graded_dimension(&a, 0), BigUint::from(1u32));
        assert_eq!(graded_dimension(&a, 2), BigUint::from(2u32));
        assert_eq!(graded_dimension(&a, 4), BigUint::from(8u32));
        for d in 0..=8 {
            assert_eq!(graded_dimension(&a, d), BigUint::from(words_of_degree(&a, d).len()));
        }
    }

    #[test]
    fn words_by_length() {
        let ls = [Letter::unit(), Letter::new("z1", 1)];
        assert_eq!(words_of_length(&ls, 3).len(), 8);
        assert_eq!(words_up_to_length(&ls, 2).len(), 7);
    }
}
