//! Shuffle, quasi-shuffle, weight-λ mixable shuffle and the augmented
//! product, each on basis words with bilinear extension through [`Product`].
//!
//! The shuffle and the mixable shuffle both come in two independent forms:
//! an explicit sum over enumerated (mixable) shuffles and the head-letter
//! recursion. Each is the other's test oracle.

mod enumerate;

use std::fmt;

use num_traits::{One, Zero};

pub use enumerate::{enumerate_mixable_shuffles, enumerate_shuffles, MixableShuffle, ShufflePattern, Side};

use crate::error::{Error, Result};
use crate::kernel::{power, Alphabet, Coeff, Element, Letter, Word};

/// Applies a shuffle pattern to `a ⊗ b`.
fn interleave(a: &Word, b: &Word, pattern: &ShufflePattern) -> Word {
    let (mut left, mut right) = (a.letters().iter(), b.letters().iter());
    pattern
        .sides()
        .iter()
        .map(|s| match s {
            Side::Left => left.next(),
            Side::Right => right.next(),
        })
        .map(|l| l.expect("pattern matches word lengths").clone())
        .collect()
}

/// `a ш b` as the sum over all `(m, n)`-shuffles.
pub fn shuffle_explicit(a: &Word, b: &Word) -> Element {
    let mut out = Element::zero();
    for p in enumerate_shuffles(a.len(), b.len()) {
        out.add_term(interleave(a, b, &p), Coeff::one());
    }
    out
}

/// `a ш b` by the head-letter recursion
/// `a1(a' ш b) + b1(a ш b')`, with the empty word as identity.
pub fn shuffle_recursive(a: &Word, b: &Word) -> Element {
    head_recursion(a.letters(), b.letters(), |_, _| Ok(None)).expect("no merges")
}

/// Evaluates a head-letter recursion
/// `u(a) ⋆ v(b) = u(a' ⋆ b) + v(a ⋆ b') + c·[u,v](a' ⋆ b')`
/// over all suffix pairs, shortest first, so each pair is expanded once.
/// `merge` returns the merged head letter with its weight `c`, or `None`.
fn head_recursion<M>(a: &[Letter], b: &[Letter], mut merge: M) -> Result<Element>
where
    M: FnMut(&Letter, &Letter) -> Result<Option<(Letter, Coeff)>>,
{
    let (m, n) = (a.len(), b.len());
    // row i holds a[i..] ⋆ b[j..] for every j
    let mut below: Vec<Element> = (0..=n).map(|j| Element::from_letters(&b[j..])).collect();
    for i in (0..m).rev() {
        let mut row = vec![Element::zero(); n + 1];
        row[n] = Element::from_letters(&a[i..]);
        for j in (0..n).rev() {
            let mut out = below[j].prepend(&a[i]);
            out.add_prepended(&b[j], &row[j + 1], None);
            if let Some((c, weight)) = merge(&a[i], &b[j])? {
                out.add_prepended(&c, &below[j + 1], (!weight.is_one()).then_some(&weight));
            }
            row[j] = out;
        }
        below = row;
    }
    Ok(below.swap_remove(0))
}

fn check_letters(words: [&Word; 2], alphabet: &Alphabet, forbid_unit: Option<&'static str>) -> Result<()> {
    for w in words {
        for l in w.letters() {
            if let Some(op) = forbid_unit {
                if l.is_unit() {
                    return Err(Error::UnitLetter(op));
                }
            }
            alphabet.check(l)?;
        }
    }
    Ok(())
}

/// Hoffman's quasi-shuffle `a ∗ b` on unit-free words:
/// `(a1 w1) ∗ (b1 w2) = a1(w1 ∗ b1w2) + b1(a1w1 ∗ w2) + [a1,b1](w1 ∗ w2)`.
pub fn quasi_shuffle(a: &Word, b: &Word, alphabet: &Alphabet) -> Result<Element> {
    check_letters([a, b], alphabet, Some("the quasi-shuffle product"))?;
    head_recursion(a.letters(), b.letters(), |x, y| {
        Ok(alphabet.bracket(Some(x), Some(y))?.map(|c| (c, Coeff::one())))
    })
}

/// Builds `σ(a ⊗ b; T)`; `None` when a merge multiplies to zero.
fn merge_word(a: &Word, b: &Word, ms: &MixableShuffle, alphabet: &Alphabet) -> Result<Option<Word>> {
    let slots = interleave(a, b, &ms.pattern);
    let slots = slots.letters();
    let mut letters = Vec::with_capacity(slots.len() - ms.merges.len());
    let mut merges = ms.merges.iter().peekable();
    let mut k = 0;
    while k < slots.len() {
        if merges.peek() == Some(&&k) {
            merges.next();
            match alphabet.multiply(&slots[k], &slots[k + 1])? {
                Some(l) => letters.push(l),
                None => return Ok(None),
            }
            k += 2;
        } else {
            letters.push(slots[k].clone());
            k += 1;
        }
    }
    Ok(Some(Word::new(letters)))
}

/// `a ⋄⁺_λ b` as `Σ λ^{|T|} σ(a ⊗ b; T)` over all mixable shuffles. Merged
/// slots multiply in `Ã`: the unit letter is neutral, letters bracket.
pub fn mixable_shuffle_explicit(a: &Word, b: &Word, lambda: &Coeff, alphabet: &Alphabet) -> Result<Element> {
    check_letters([a, b], alphabet, None)?;
    let powers: Vec<Coeff> = (0..=a.len().min(b.len())).map(|i| power(lambda, i)).collect();
    let mut out = Element::zero();
    for ms in enumerate_mixable_shuffles(a.len(), b.len()) {
        let c = &powers[ms.merges.len()];
        if c.is_zero() {
            continue;
        }
        if let Some(w) = merge_word(a, b, &ms, alphabet)? {
            out.add_term(w, c.clone());
        }
    }
    Ok(out)
}

/// `a ⋄⁺_λ b` by the head recursion
/// `a1(a' ⋄ b) + b1(a ⋄ b') + λ·(a1 b1)(a' ⋄ b')`.
pub fn mixable_shuffle_recursive(a: &Word, b: &Word, lambda: &Coeff, alphabet: &Alphabet) -> Result<Element> {
    check_letters([a, b], alphabet, None)?;
    head_recursion(a.letters(), b.letters(), |x, y| {
        if lambda.is_zero() {
            return Ok(None);
        }
        Ok(alphabet.multiply(x, y)?.map(|c| (c, lambda.clone())))
    })
}

/// `(a0 ⊗ a) ⋄ (b0 ⊗ b) = (a0 b0) ⊗ (a ⋄⁺_λ b)` on words of length at least 1.
pub fn augmented_product_words(a: &Word, b: &Word, lambda: &Coeff, alphabet: &Alphabet) -> Result<Element> {
    let (Some(a0), Some(b0)) = (a.first(), b.first()) else {
        return Err(Error::EmptyWordOperand("the augmented product"));
    };
    let Some(head) = alphabet.multiply(a0, b0)? else {
        check_letters([a, b], alphabet, None)?;
        return Ok(Element::zero());
    };
    Ok(mixable_shuffle_recursive(&a.tail(), &b.tail(), lambda, alphabet)?.prepend(&head))
}

/// Bilinear augmented product on elements of `Sh(Ã)`.
pub fn augmented_product(a: &Element, b: &Element, lambda: &Coeff, alphabet: &Alphabet) -> Result<Element> {
    if a.words().chain(b.words()).any(Word::is_empty) {
        return Err(Error::EmptyWordOperand("the augmented product"));
    }
    a.bilinear(b, |u, v| augmented_product_words(u, v, lambda, alphabet))
}

/// A bilinear product on the word basis, selectable at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Product {
    Shuffle,
    QuasiShuffle,
    /// Mixable shuffle of the given weight on `Sh⁺`.
    Mixable(Coeff),
    /// Augmented mixable shuffle of the given weight on `Sh(Ã)`.
    Augmented(Coeff),
    Concatenation,
}

impl Product {
    pub fn words(&self, a: &Word, b: &Word, alphabet: &Alphabet) -> Result<Element> {
        match self {
            Product::Shuffle => Ok(shuffle_recursive(a, b)),
            Product::QuasiShuffle => quasi_shuffle(a, b, alphabet),
            Product::Mixable(l) => mixable_shuffle_recursive(a, b, l, alphabet),
            Product::Augmented(l) => augmented_product_words(a, b, l, alphabet),
            Product::Concatenation => Ok(Element::word(a.concat(b))),
        }
    }

    pub fn apply(&self, a: &Element, b: &Element, alphabet: &Alphabet) -> Result<Element> {
        if let Product::Augmented(l) = self {
            return augmented_product(a, b, l, alphabet);
        }
        a.bilinear(b, |u, v| self.words(u, v, alphabet))
    }

    /// The identity element of the product's algebra.
    pub fn unit(&self) -> Element {
        match self {
            Product::Augmented(_) => Element::word(Word::single(Letter::unit())),
            _ => Element::one(),
        }
    }
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Shuffle => f.write_str("shuffle"),
            Product::QuasiShuffle => f.write_str("quasi-shuffle"),
            Product::Mixable(l) => write!(f, "mixable(λ={})", crate::kernel::format_coeff(l)),
            Product::Augmented(l) => write!(f, "augmented(λ={})", crate::kernel::format_coeff(l)),
            Product::Concatenation => f.write_str("concatenation"),
        }
    }
}
