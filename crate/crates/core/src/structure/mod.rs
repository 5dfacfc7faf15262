//! The quasi-shuffle isomorphism, the rescaling map `g`, index sequences and
//! one-shuffled elements, and exact-rank checks of the independence and
//! spanning statements on finite windows.

mod index;
pub mod linalg;

use std::fmt;

use num_traits::{One, Zero};

pub use index::{one_shuffled, positive_sequences, IndexSequence};
pub use linalg::{check_linear_independence, solve_in_span, RankReport};

use crate::error::{Error, Result};
use crate::kernel::{int, power, words_up_to_length, Alphabet, Coeff, Element, Letter, Word};
use crate::products::{mixable_shuffle_explicit, quasi_shuffle, shuffle_recursive, Product};

/// `f̃(a_1 ··· a_n) = a_1 ⊗ ··· ⊗ a_n`. Both sides share the word encoding,
/// so this only enforces that `w` lives in the quasi-shuffle algebra.
pub fn f_tilde(w: &Word) -> Result<Element> {
    if w.contains_unit() {
        return Err(Error::UnitLetter("f̃"));
    }
    Ok(Element::word(w.clone()))
}

/// `g(a_1 ⊗ ··· ⊗ a_n) = λ^n a_1 ⊗ ··· ⊗ a_n`.
pub fn g_rescale(e: &Element, lambda: &Coeff) -> Result<Element> {
    if e.contains_unit() {
        return Err(Error::UnitLetter("g"));
    }
    Ok(e.iter()
        .map(|(w, c)| (w.clone(), c * power(lambda, w.len())))
        .collect())
}

/// `g⁻¹`, defined for `λ ≠ 0`.
pub fn g_inverse(e: &Element, lambda: &Coeff) -> Result<Element> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambdaInverse);
    }
    g_rescale(e, &(Coeff::one() / lambda))
}

fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return Coeff::zero();
    }
    (0..k).fold(Coeff::one(), |acc, i| acc * int((n - i) as i64) / int(i as i64 + 1))
}

/// `Σ_{i=0}^{m} λ^i C(ℓ(I), i) · 1_A^{⊗(m−i)} ш y_{⊗I}` for positive `I`;
/// equal to `1_A^{⊗m} ⋄⁺_λ y_{⊗I}`.
pub fn unit_power_product(m: usize, index: &IndexSequence, lambda: &Coeff, alphabet: &Alphabet) -> Result<Element> {
    if !index.is_positive() {
        return Err(Error::ZeroEntryInIndex);
    }
    let y = index.to_word(alphabet)?;
    let mut out = Element::zero();
    for i in 0..=m {
        let c = power(lambda, i) * binomial(index.len(), i);
        if !c.is_zero() {
            out.add_scaled(&shuffle_recursive(&Word::units(m - i), &y), &c);
        }
    }
    Ok(out)
}

/// `1_A^{⊗n} ⋄⁺_λ y_{⊗I}` by direct enumeration of mixable shuffles.
pub fn unit_power_direct(n: usize, index: &IndexSequence, lambda: &Coeff, alphabet: &Alphabet) -> Result<Element> {
    mixable_shuffle_explicit(&Word::units(n), &index.to_word(alphabet)?, lambda, alphabet)
}

/// Result of an exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub cases: usize,
    pub witness: Option<String>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn word_pairs(letters: &[Letter], max_total_len: usize) -> Vec<(Word, Word)> {
    let words = words_up_to_length(letters, max_total_len);
    let mut out = Vec::new();
    for a in &words {
        for b in words.iter().filter(|b| a.len() + b.len() <= max_total_len) {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}

fn run_pairs<F>(pairs: &[(Word, Word)], mut holds: F) -> Result<IdentityCheck>
where
    F: FnMut(&Word, &Word) -> Result<bool>,
{
    for (a, b) in pairs {
        if !holds(a, b)? {
            return Ok(IdentityCheck {
                cases: pairs.len(),
                witness: Some(format!("{a} {b}")),
            });
        }
    }
    Ok(IdentityCheck {
        cases: pairs.len(),
        witness: None,
    })
}

/// `f̃(a ∗ b) = f̃(a) ⋄⁺_1 f̃(b)` for all word pairs over `letters` of total
/// length at most `max_total_len`.
pub fn check_quasi_shuffle_isomorphism(alphabet: &Alphabet, letters: &[Letter], max_total_len: usize) -> Result<IdentityCheck> {
    let one = Coeff::one();
    run_pairs(&word_pairs(letters, max_total_len), |a, b| {
        let lhs = quasi_shuffle(a, b, alphabet)?.linear(|w| f_tilde(w))?;
        let rhs = f_tilde(a)?.bilinear(&f_tilde(b)?, |u, v| mixable_shuffle_explicit(u, v, &one, alphabet))?;
        Ok(lhs == rhs)
    })
}

/// `g(a ⋄⁺_λ b) = g(a) ⋄⁺_1 g(b)` and `g⁻¹(g(a)) = a` on all word pairs of
/// total length at most `max_total_len`.
pub fn check_rescaling(alphabet: &Alphabet, letters: &[Letter], max_total_len: usize, lambda: &Coeff) -> Result<IdentityCheck> {
    let weighted = Product::Mixable(lambda.clone());
    let unit_weight = Product::Mixable(Coeff::one());
    run_pairs(&word_pairs(letters, max_total_len), |a, b| {
        let (ea, eb) = (Element::word(a.clone()), Element::word(b.clone()));
        let lhs = g_rescale(&weighted.apply(&ea, &eb, alphabet)?, lambda)?;
        let rhs = unit_weight.apply(&g_rescale(&ea, lambda)?, &g_rescale(&eb, lambda)?, alphabet)?;
        let round_trip = lambda.is_zero() || g_inverse(&g_rescale(&ea, lambda)?, lambda)? == ea;
        Ok(lhs == rhs && round_trip)
    })
}

/// The unit-power identity for all `m ≤ max_m` and positive `I` over the
/// first `letters` letters with `ℓ(I) ≤ max_len`.
pub fn check_unit_power_lemma(
    alphabet: &Alphabet,
    max_m: usize,
    max_len: usize,
    letters: usize,
    lambda: &Coeff,
) -> Result<IdentityCheck> {
    let mut cases = 0;
    for index in positive_sequences(letters, max_len) {
        for m in 0..=max_m {
            cases += 1;
            if unit_power_direct(m, &index, lambda, alphabet)? != unit_power_product(m, &index, lambda, alphabet)? {
                return Ok(IdentityCheck {
                    cases,
                    witness: Some(format!("m={m} I={index}")),
                });
            }
        }
    }
    Ok(IdentityCheck { cases, witness: None })
}

/// A finite slice of the generators `1_A^{⊗n} ⋄⁺ y_{⊗I}`: `n ≤ max_units`,
/// `ℓ(I) ≤ max_index_len`, entries in `1..=letters`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub max_units: usize,
    pub max_index_len: usize,
    pub letters: usize,
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n<={} len<={} letters={}", self.max_units, self.max_index_len, self.letters)
    }
}

/// `1_A^{⊗n} ⋄⁺_λ y_{⊗I}` for `0 ≤ n ≤ max_units` at a fixed `I`.
pub fn unit_power_family(index: &IndexSequence, max_units: usize, lambda: &Coeff, alphabet: &Alphabet) -> Result<Vec<Element>> {
    (0..=max_units)
        .map(|n| unit_power_direct(n, index, lambda, alphabet))
        .collect()
}

/// Every generator in the window, ordered by `I` then `n`.
pub fn product_generators(window: &Window, lambda: &Coeff, alphabet: &Alphabet) -> Result<Vec<(usize, IndexSequence, Element)>> {
    let mut out = Vec::new();
    for index in positive_sequences(window.letters, window.max_index_len) {
        for n in 0..=window.max_units {
            let e = unit_power_direct(n, &index, lambda, alphabet)?;
            out.push((n, index.clone(), e));
        }
    }
    Ok(out)
}

/// The one-shuffled elements `1_A^{⊗k} ш y_{⊗I}` in the window.
pub fn one_shuffled_generators(window: &Window, alphabet: &Alphabet) -> Result<Vec<(usize, IndexSequence, Element)>> {
    let mut out = Vec::new();
    for index in positive_sequences(window.letters, window.max_index_len) {
        for k in 0..=window.max_units {
            let mut entries = vec![0; k];
            entries.extend_from_slice(index.entries());
            let e = one_shuffled(&IndexSequence::new(entries), alphabet)?;
            out.push((k, index.clone(), e));
        }
    }
    Ok(out)
}

/// Rank of the window's generators. Full rank means the multiplication map
/// from `γ⁺(Sh⁺(k)) ⊗ Sh⁺(A)` is injective on the window.
pub fn check_linear_disjointness(alphabet: &Alphabet, lambda: &Coeff, window: &Window) -> Result<RankReport> {
    let gens: Vec<Element> = product_generators(window, lambda, alphabet)?
        .into_iter()
        .map(|(_, _, e)| e)
        .collect();
    check_linear_independence(&gens)
}

/// Membership of every `targets` element in the span of `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inclusion {
    pub checked: usize,
    /// First target outside the span.
    pub witness: Option<Element>,
}

impl Inclusion {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

pub fn check_inclusion(targets: &[Element], basis: &[Element]) -> Inclusion {
    let witness = targets.iter().find(|t| solve_in_span(basis, t).is_none()).cloned();
    Inclusion {
        checked: targets.len(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanReport {
    pub products: usize,
    pub one_shuffled: usize,
    /// products ⊆ span(one-shuffled)
    pub forward: Inclusion,
    /// one-shuffled ⊆ span(products)
    pub backward: Inclusion,
}

impl SpanReport {
    pub fn passed(&self) -> bool {
        self.forward.passed() && self.backward.passed()
    }
}

/// Both span inclusions between the given products and one-shuffled elements.
pub fn check_span_inclusions(products: &[Element], one_shuffled: &[Element]) -> SpanReport {
    SpanReport {
        products: products.len(),
        one_shuffled: one_shuffled.len(),
        forward: check_inclusion(products, one_shuffled),
        backward: check_inclusion(one_shuffled, products),
    }
}

/// The span of the window's products equals the span of its one-shuffled
/// elements.
pub fn check_one_shuffled_span(alphabet: &Alphabet, lambda: &Coeff, window: &Window) -> Result<SpanReport> {
    let products: Vec<Element> = product_generators(window, lambda, alphabet)?
        .into_iter()
        .map(|(_, _, e)| e)
        .collect();
    let shuffled: Vec<Element> = one_shuffled_generators(window, alphabet)?
        .into_iter()
        .map(|(_, _, e)| e)
        .collect();
    Ok(check_span_inclusions(&products, &shuffled))
}
