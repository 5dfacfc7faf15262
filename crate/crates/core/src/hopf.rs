//! Deconcatenation coproduct, counit, antipode and convolution, with an
//! exhaustive bialgebra/Hopf axiom checker on a degree window.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::kernel::{format_coeff, words_up_to_degree, Alphabet, Coeff, Element, Word};
use crate::products::Product;

pub use crate::kernel::graded_dimension;

/// An element of `A ⊗ A` in the word-pair basis.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSquare {
    terms: BTreeMap<(Word, Word), Coeff>,
}

impl TensorSquare {
    pub fn zero() -> Self {
        TensorSquare::default()
    }

    pub fn add_term(&mut self, u: Word, v: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((u, v)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSquare, c: &Coeff) {
        for ((u, v), d) in other.iter() {
            self.add_term(u.clone(), v.clone(), d * c);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Word, Word), &Coeff)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, u: &Word, v: &Word) -> Coeff {
        self.terms
            .get(&(u.clone(), v.clone()))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    /// Componentwise product `(u⊗v)(u'⊗v') = uu' ⊗ vv'`.
    pub fn multiply(&self, other: &TensorSquare, product: &Product, alphabet: &Alphabet) -> Result<TensorSquare> {
        let mut out = TensorSquare::zero();
        for ((u, v), c) in self.iter() {
            for ((u2, v2), d) in other.iter() {
                let left = product.words(u, u2, alphabet)?;
                let right = product.words(v, v2, alphabet)?;
                let cd = c * d;
                for (x, e) in left.iter() {
                    for (y, f) in right.iter() {
                        out.add_term(x.clone(), y.clone(), &cd * e * f);
                    }
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for TensorSquare {
    /// `coeff*([u],[v])` terms joined by ` + `, same coefficient rules as elements.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((u, v), c)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if !c.is_one() {
                write!(f, "{}*", format_coeff(c))?;
            }
            write!(f, "({u},{v})")?;
        }
        Ok(())
    }
}

/// `Δ(w) = Σ_{uv = w} u ⊗ v`.
pub fn coproduct(w: &Word) -> TensorSquare {
    let mut out = TensorSquare::zero();
    for k in 0..=w.len() {
        let (u, v) = w.split_at(k);
        out.add_term(u, v, Coeff::one());
    }
    out
}

pub fn coproduct_element(e: &Element) -> TensorSquare {
    let mut out = TensorSquare::zero();
    for (w, c) in e.iter() {
        out.add_scaled(&coproduct(w), c);
    }
    out
}

/// `ε(w) = δ_{w,1}`: the coefficient of the empty word.
pub fn counit(e: &Element) -> Coeff {
    e.coefficient(&Word::empty())
}

/// The antipode of the connected graded bialgebra `(words, product, Δ, ε)`,
/// by `S(1) = 1` and `S(w) = -w - Σ S(u)·v` over the splits with `u, v ≠ 1`.
///
/// Results are cached per word for the lifetime of the value.
pub struct Antipode<'a> {
    product: Product,
    alphabet: &'a Alphabet,
    cache: HashMap<Word, Element>,
}

impl<'a> Antipode<'a> {
    pub fn new(product: Product, alphabet: &'a Alphabet) -> Self {
        Antipode {
            product,
            alphabet,
            cache: HashMap::new(),
        }
    }

    pub fn word(&mut self, w: &Word) -> Result<Element> {
        if let Some(s) = self.cache.get(w) {
            return Ok(s.clone());
        }
        if w.is_empty() {
            return Ok(Element::one());
        }
        let mut s = -Element::word(w.clone());
        for k in 1..w.len() {
            let (u, v) = w.split_at(k);
            let su = self.word(&u)?;
            let prod = self.product.apply(&su, &Element::word(v), self.alphabet)?;
            s -= &prod;
        }
        self.cache.insert(w.clone(), s.clone());
        Ok(s)
    }

    pub fn apply(&mut self, e: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (w, c) in e.iter() {
            out.add_scaled(&self.word(w)?, c);
        }
        Ok(out)
    }
}

/// One-shot antipode. The quasi-shuffle product rejects unit letters.
pub fn antipode(e: &Element, product: &Product, alphabet: &Alphabet) -> Result<Element> {
    Antipode::new(product.clone(), alphabet).apply(e)
}

/// `m ∘ (f ⊗ g) ∘ Δ` applied to `e`.
pub fn convolve<F, G>(mut f: F, mut g: G, e: &Element, product: &Product, alphabet: &Alphabet) -> Result<Element>
where
    F: FnMut(&Element) -> Result<Element>,
    G: FnMut(&Element) -> Result<Element>,
{
    let mut out = Element::zero();
    for ((u, v), c) in coproduct_element(e).iter() {
        let fu = f(&Element::word(u.clone()))?;
        let gv = g(&Element::word(v.clone()))?;
        out.add_scaled(&product.apply(&fu, &gv, alphabet)?, c);
    }
    Ok(out)
}

/// One axiom of a [`BialgebraReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub cases: usize,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BialgebraReport {
    pub product: Product,
    pub degree_bound: u32,
    pub checks: Vec<AxiomCheck>,
}

impl BialgebraReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Axiom names, in report order.
pub const BIALGEBRA_AXIOMS: [&str; 8] = [
    "coassociativity",
    "counit-left",
    "counit-right",
    "unit",
    "multiplicativity",
    "counit-multiplicative",
    "antipode-left",
    "antipode-right",
];

/// Checks the Hopf axioms for `(product, Δ, ε, S)` on every unit-free word
/// (or pair of words) of total degree at most `degree_bound`.
pub fn check_bialgebra(product: &Product, alphabet: &Alphabet, degree_bound: u32) -> Result<BialgebraReport> {
    check_bialgebra_with(coproduct, product, alphabet, degree_bound)
}

/// [`check_bialgebra`] with a caller-supplied coproduct on words.
pub fn check_bialgebra_with<D>(
    delta: D,
    product: &Product,
    alphabet: &Alphabet,
    degree_bound: u32,
) -> Result<BialgebraReport>
where
    D: Fn(&Word) -> TensorSquare,
{
    let words = words_up_to_degree(alphabet, degree_bound);
    let delta_el = |e: &Element| {
        let mut out = TensorSquare::zero();
        for (w, c) in e.iter() {
            out.add_scaled(&delta(w), c);
        }
        out
    };
    let mut checks = Vec::new();
    let mut record = |name, cases, witness: Option<String>| {
        checks.push(AxiomCheck {
            name,
            cases,
            passed: witness.is_none(),
            witness,
        })
    };

    // (Δ ⊗ id)Δ = (id ⊗ Δ)Δ
    let witness = words.iter().find(|w| {
        let mut left: BTreeMap<[Word; 3], Coeff> = BTreeMap::new();
        let mut right: BTreeMap<[Word; 3], Coeff> = BTreeMap::new();
        for ((u, v), c) in delta(w).iter() {
            for ((u1, u2), d) in delta(u).iter() {
                *left.entry([u1.clone(), u2.clone(), v.clone()]).or_insert_with(Coeff::zero) += c * d;
            }
            for ((v1, v2), d) in delta(v).iter() {
                *right.entry([u.clone(), v1.clone(), v2.clone()]).or_insert_with(Coeff::zero) += c * d;
            }
        }
        left.retain(|_, c| !c.is_zero());
        right.retain(|_, c| !c.is_zero());
        left != right
    });
    record(BIALGEBRA_AXIOMS[0], words.len(), witness.map(Word::to_string));

    // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
    let counit_side = |w: &Word, left: bool| {
        let mut out = Element::zero();
        for ((u, v), c) in delta(w).iter() {
            let (scalar, kept) = if left { (u, v) } else { (v, u) };
            if scalar.is_empty() {
                out.add_term(kept.clone(), c.clone());
            }
        }
        out
    };
    let witness = words.iter().find(|w| counit_side(w, true) != Element::word((*w).clone()));
    record(BIALGEBRA_AXIOMS[1], words.len(), witness.map(Word::to_string));
    let witness = words.iter().find(|w| counit_side(w, false) != Element::word((*w).clone()));
    record(BIALGEBRA_AXIOMS[2], words.len(), witness.map(Word::to_string));

    // Δ(1) = 1 ⊗ 1 and ε(1) = 1
    let unit = product.unit();
    let mut one_one = TensorSquare::zero();
    for (w, c) in unit.iter() {
        one_one.add_term(w.clone(), w.clone(), c.clone());
    }
    let unit_ok = delta_el(&unit) == one_one && counit(&unit).is_one();
    record(BIALGEBRA_AXIOMS[3], 1, (!unit_ok).then(|| unit.to_string()));

    // Δ(ab) = Δ(a)Δ(b) and ε(ab) = ε(a)ε(b)
    let mut pairs = 0;
    let mut mult_witness = None;
    let mut eps_witness = None;
    for a in &words {
        for b in words.iter().filter(|b| a.degree() + b.degree() <= degree_bound) {
            pairs += 1;
            let ab = product.words(a, b, alphabet)?;
            if mult_witness.is_none() {
                let lhs = delta_el(&ab);
                let rhs = delta(a).multiply(&delta(b), product, alphabet)?;
                if lhs != rhs {
                    mult_witness = Some(format!("{a} {b}"));
                }
            }
            let ea = counit(&Element::word(a.clone()));
            let eb = counit(&Element::word(b.clone()));
            if eps_witness.is_none() && counit(&ab) != ea * eb {
                eps_witness = Some(format!("{a} {b}"));
            }
        }
    }
    record(BIALGEBRA_AXIOMS[4], pairs, mult_witness);
    record(BIALGEBRA_AXIOMS[5], pairs, eps_witness);

    // S ∗ id = uε = id ∗ S
    let mut s = Antipode::new(product.clone(), alphabet);
    let mut left_witness = None;
    let mut right_witness = None;
    for w in &words {
        let expect = Element::one().scale(&counit(&Element::word(w.clone())));
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((u, v), c) in delta(w).iter() {
            let su = s.word(u)?;
            let sv = s.word(v)?;
            left.add_scaled(&product.apply(&su, &Element::word(v.clone()), alphabet)?, c);
            right.add_scaled(&product.apply(&Element::word(u.clone()), &sv, alphabet)?, c);
        }
        if left_witness.is_none() && left != expect {
            left_witness = Some(w.to_string());
        }
        if right_witness.is_none() && right != expect {
            right_witness = Some(w.to_string());
        }
    }
    record(BIALGEBRA_AXIOMS[6], words.len(), left_witness);
    record(BIALGEBRA_AXIOMS[7], words.len(), right_witness);

    Ok(BialgebraReport {
        product: product.clone(),
        degree_bound,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{int, parse_element, ratio};

    fn st() -> Alphabet {
        Alphabet::stuffle()
    }

    fn w(names: &[&str]) -> Word {
        let a = st();
        names.iter().map(|n| a.letter(n).unwrap()).collect()
    }

    fn el(text: &str) -> Element {
        parse_element(text, &st()).unwrap()
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct(&Word::empty());
        assert_eq!(d.len(), 1);
        assert_eq!(d.coefficient(&Word::empty(), &Word::empty()), int(1));
        assert_eq!(coproduct(&w(&["z1"])).to_string(), "([e],[z1]) + ([z1],[e])");
        let d = coproduct(&w(&["z1", "z2"]));
        assert_eq!(d.len(), 3);
        assert_eq!(d.coefficient(&w(&["z1"]), &w(&["z2"])), int(1));
        assert_eq!(d.to_string(), "([e],[z1,z2]) + ([z1],[z2]) + ([z1,z2],[e])");
    }

    #[test]
    fn counit_examples() {
        assert_eq!(counit(&Element::one()), int(1));
        assert_eq!(counit(&el("[z1]")), int(0));
        assert_eq!(counit(&el("3*[e] + 2*[z1]")), int(3));
    }

    #[test]
    fn antipode_examples() {
        let q = Product::QuasiShuffle;
        assert_eq!(antipode(&Element::one(), &q, &st()).unwrap(), Element::one());
        assert_eq!(antipode(&el("[z1]"), &q, &st()).unwrap(), el("-1*[z1]"));
        assert_eq!(antipode(&el("[z1,z1]"), &q, &st()).unwrap(), el("[z1,z1] + [z2]"));
        // brute-force convolution confirms it
        let s_id = convolve(
            |e| antipode(e, &q, &st()),
            |e| Ok(e.clone()),
            &el("[z1,z1]"),
            &q,
            &st(),
        )
        .unwrap();
        assert!(s_id.is_zero());
    }

    #[test]
    fn antipode_rejects_units_under_quasi_shuffle() {
        assert!(antipode(&el("[1,z1]"), &Product::QuasiShuffle, &st()).is_err());
    }

    #[test]
    fn convolution_basics() {
        let q = Product::QuasiShuffle;
        let id = |e: &Element| Ok(e.clone());
        assert_eq!(convolve(id, id, &el("[z1]"), &q, &st()).unwrap(), el("2*[z1]"));
        let e = el("3*[z1,z2] + [e] + -1/2*[z3]");
        let unit_counit = |x: &Element| Ok(Element::one().scale(&counit(x)));
        assert_eq!(convolve(unit_counit, id, &e, &q, &st()).unwrap(), e);
    }

    #[test]
    fn stuffle_is_hopf_to_degree_five() {
        let r = check_bialgebra(&Product::QuasiShuffle, &st(), 5).unwrap();
        assert!(r.all_passed(), "{r:?}");
        assert_eq!(r.checks.len(), BIALGEBRA_AXIOMS.len());
    }

    #[test]
    fn mixable_weight_is_hopf() {
        let r = check_bialgebra(&Product::Mixable(ratio(3, 2)), &st(), 4).unwrap();
        assert!(r.all_passed(), "{r:?}");
    }

    #[test]
    fn corrupted_coproduct_breaks_multiplicativity() {
        let outer_only = |w: &Word| {
            let mut t = TensorSquare::zero();
            t.add_term(Word::empty(), w.clone(), int(1));
            if !w.is_empty() {
                t.add_term(w.clone(), Word::empty(), int(1));
            }
            t
        };
        let r = check_bialgebra_with(outer_only, &Product::QuasiShuffle, &st(), 3).unwrap();
        let m = r.check("multiplicativity").unwrap();
        assert!(!m.passed);
        assert!(m.witness.is_some());
    }

    #[test]
    fn antipode_is_involutive_and_multiplicative() {
        let a = st();
        let q = Product::QuasiShuffle;
        let mut s = Antipode::new(q.clone(), &a);
        for word in words_up_to_degree(&a, 5) {
            let e = Element::word(word);
            let once = s.apply(&e).unwrap();
            let ss = s.apply(&once).unwrap();
            assert_eq!(ss, e);
        }
        let (x, y) = (el("[z1,z2]"), el("[z2] + [z1]"));
        let lhs = s.apply(&q.apply(&x, &y, &a).unwrap()).unwrap();
        let (sx, sy) = (s.apply(&x).unwrap(), s.apply(&y).unwrap());
        let rhs = q.apply(&sx, &sy, &a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_preserves_degree() {
        for word in words_up_to_degree(&st(), 5) {
            for ((u, v), _) in coproduct(&word).iter() {
                assert_eq!(u.degree() + v.degree(), word.degree());
            }
        }
    }
}
