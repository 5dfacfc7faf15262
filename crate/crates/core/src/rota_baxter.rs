//! Rota-Baxter operators on the shuffle algebras, the identity checker, and
//! the embeddings between `Sh⁺(A)`, `Sh⁺(Ã)` and `Sh(Ã)`.

use crate::error::{Error, Result};
use crate::kernel::{Coeff, Element, Letter, Word};

/// `P_A`: prepends the unit letter, `a0 ⊗ a ↦ 1_A ⊗ a0 ⊗ a`.
pub fn p_a(e: &Element) -> Result<Element> {
    if e.words().any(Word::is_empty) {
        return Err(Error::EmptyWordOperand("P_A"));
    }
    Ok(e.prepend(&Letter::unit()))
}

/// `P_(v)(a) = v ⊗ a` on the tensor algebra `T(V)`.
pub fn p_v(v: &Letter, e: &Element) -> Result<Element> {
    if v.is_unit() || e.contains_unit() {
        return Err(Error::UnitLetter("P_v"));
    }
    Ok(e.prepend(v))
}

/// `α : Sh⁺(Ã) → Sh(Ã)`, `a ↦ 1_A ⊗ a`.
pub fn embed_alpha(e: &Element) -> Element {
    e.prepend(&Letter::unit())
}

/// `β : Sh⁺(A) → Sh(Ã)`: the inclusion `A ⊂ Ã` followed by `α`.
pub fn embed_beta(e: &Element) -> Result<Element> {
    if e.contains_unit() {
        return Err(Error::UnitLetter("β"));
    }
    Ok(embed_alpha(e))
}

/// `γ⁺(1_k^{⊗n}) = 1_A^{⊗n}`.
pub fn gamma_plus(n: usize) -> Element {
    Element::word(Word::units(n))
}

/// `γ(1_k ⊗ 1_k^{⊗n}) = 1_A ⊗ 1_A^{⊗n}`.
pub fn gamma(n: usize) -> Element {
    Element::word(Word::units(n + 1))
}

/// The canonical inclusion `j_A : A → Sh(Ã)`, `a ↦ a ⊗ 1`.
pub fn j_a(letter: &Letter) -> Result<Element> {
    if letter.is_unit() {
        return Err(Error::UnitLetter("j_A"));
    }
    Ok(Element::word(Word::single(letter.clone())))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterTrial {
    pub x: Element,
    pub y: Element,
    /// `P(x)P(y)`
    pub lhs: Element,
    /// `P(xP(y)) + P(P(x)y) + λP(xy)`
    pub rhs: Element,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotaBaxterReport {
    pub weight: Coeff,
    pub trials: Vec<RotaBaxterTrial>,
}

impl RotaBaxterReport {
    pub fn all_passed(&self) -> bool {
        self.trials.iter().all(|t| t.passed)
    }

    pub fn first_failure(&self) -> Option<&RotaBaxterTrial> {
        self.trials.iter().find(|t| !t.passed)
    }
}

/// Evaluates `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)` exactly on each sample.
pub fn check_rota_baxter<Op, Mul>(
    operator: Op,
    product: Mul,
    weight: &Coeff,
    samples: &[(Element, Element)],
) -> Result<RotaBaxterReport>
where
    Op: Fn(&Element) -> Result<Element>,
    Mul: Fn(&Element, &Element) -> Result<Element>,
{
    let mut trials = Vec::with_capacity(samples.len());
    for (x, y) in samples {
        let px = operator(x)?;
        let py = operator(y)?;
        let lhs = product(&px, &py)?;
        let mut rhs = operator(&product(x, &py)?)?;
        rhs += &operator(&product(&px, y)?)?;
        rhs.add_scaled(&operator(&product(x, y)?)?, weight);
        let passed = lhs == rhs;
        trials.push(RotaBaxterTrial {
            x: x.clone(),
            y: y.clone(),
            lhs,
            rhs,
            passed,
        });
    }
    Ok(RotaBaxterReport {
        weight: weight.clone(),
        trials,
    })
}
