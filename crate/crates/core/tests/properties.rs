use proptest::prelude::*;

use mixshuf::kernel::{canonical_serialize, parse_element, ratio, Coeff};
use mixshuf::products::{mixable_shuffle_explicit, quasi_shuffle, shuffle_recursive, Product};
use mixshuf::shell::{eval_str, parse_expression, parse_pairing_file};
use mixshuf::structure::{g_inverse, g_rescale, one_shuffled, IndexSequence};
use mixshuf::{Alphabet, Element, Letter, Word};

fn z(n: u32) -> Letter {
    Letter::new(&format!("z{n}"), n)
}

fn coeff() -> impl Strategy<Value = Coeff> {
    (-30i64..=30, 1i64..=9).prop_map(|(p, q)| ratio(p, q))
}

fn nonzero_coeff() -> impl Strategy<Value = Coeff> {
    coeff().prop_filter("nonzero", |c| *c != ratio(0, 1))
}

/// Unit-free words over z1..z3.
fn plain_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u32..=3, 0..=max_len).prop_map(|v| v.into_iter().map(z).collect())
}

/// Words over 1, z1, z2.
fn tilde_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u32..=2, 0..=max_len)
        .prop_map(|v| v.into_iter().map(|i| if i == 0 { Letter::unit() } else { z(i) }).collect())
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec((tilde_word(4), coeff()), 0..5).prop_map(|ts| ts.into_iter().collect())
}

fn small_element() -> impl Strategy<Value = Element> {
    prop::collection::vec((tilde_word(2), coeff()), 0..3).prop_map(|ts| ts.into_iter().collect())
}

fn lambda() -> impl Strategy<Value = Coeff> {
    prop_oneof![Just(ratio(0, 1)), Just(ratio(1, 1)), Just(ratio(-1, 1)), coeff()]
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn scaling_distributes(a in element(), b in element(), s in coeff(), t in coeff()) {
        prop_assert_eq!((&a + &b).scale(&s), &a.scale(&s) + &b.scale(&s));
        prop_assert_eq!(a.scale(&(&s + &t)), &a.scale(&s) + &a.scale(&t));
    }

    #[test]
    fn serialization_round_trips(e in element()) {
        let a = Alphabet::stuffle();
        let text = canonical_serialize(&e);
        let back = parse_element(&text, &a).unwrap();
        prop_assert_eq!(canonical_serialize(&back), text.clone());
        prop_assert_eq!(&back, &e);
        let evaluated = eval_str(&text, &a, &ratio(1, 1)).unwrap().into_element().unwrap();
        prop_assert_eq!(evaluated, e);
    }

    #[test]
    fn products_commute(a in tilde_word(3), b in tilde_word(3), lam in lambda()) {
        let alph = Alphabet::stuffle();
        prop_assert_eq!(shuffle_recursive(&a, &b), shuffle_recursive(&b, &a));
        prop_assert_eq!(
            mixable_shuffle_explicit(&a, &b, &lam, &alph).unwrap(),
            mixable_shuffle_explicit(&b, &a, &lam, &alph).unwrap()
        );
    }

    #[test]
    fn quasi_shuffle_commutes(a in plain_word(3), b in plain_word(3)) {
        let alph = Alphabet::stuffle();
        prop_assert_eq!(quasi_shuffle(&a, &b, &alph).unwrap(), quasi_shuffle(&b, &a, &alph).unwrap());
    }

    #[test]
    fn products_associate(x in small_element(), y in small_element(), w in small_element(), lam in lambda()) {
        let alph = Alphabet::stuffle();
        for p in [Product::Shuffle, Product::Mixable(lam.clone()), Product::Concatenation] {
            let left = p.apply(&p.apply(&x, &y, &alph).unwrap(), &w, &alph).unwrap();
            let right = p.apply(&x, &p.apply(&y, &w, &alph).unwrap(), &alph).unwrap();
            prop_assert_eq!(left, right, "{}", p);
        }
    }

    #[test]
    fn quasi_shuffle_associates(a in plain_word(2), b in plain_word(2), c in plain_word(2)) {
        let alph = Alphabet::stuffle();
        let p = Product::QuasiShuffle;
        let (a, b, c) = (Element::word(a), Element::word(b), Element::word(c));
        let left = p.apply(&p.apply(&a, &b, &alph).unwrap(), &c, &alph).unwrap();
        let right = p.apply(&a, &p.apply(&b, &c, &alph).unwrap(), &alph).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn products_are_graded(a in tilde_word(4), b in tilde_word(3), lam in lambda()) {
        let alph = Alphabet::stuffle();
        let d = a.degree() + b.degree();
        prop_assert!(shuffle_recursive(&a, &b).is_homogeneous_of(d));
        prop_assert!(mixable_shuffle_explicit(&a, &b, &lam, &alph).unwrap().is_homogeneous_of(d));
    }

    #[test]
    fn rescaling_is_bijective(terms in prop::collection::vec((plain_word(4), coeff()), 0..5), lam in nonzero_coeff()) {
        let e: Element = terms.into_iter().collect();
        prop_assert_eq!(g_inverse(&g_rescale(&e, &lam).unwrap(), &lam).unwrap(), e.clone());
        prop_assert_eq!(g_rescale(&g_inverse(&e, &lam).unwrap(), &lam).unwrap(), e);
    }

    #[test]
    fn ssupp_is_idempotent(v in prop::collection::vec(0usize..4, 0..7)) {
        let i = IndexSequence::new(v);
        prop_assert_eq!(i.ssupp().ssupp(), i.ssupp());
        prop_assert!(i.equivalent(&i));
    }

    #[test]
    fn equivalence_is_symmetric_and_transitive(
        a in prop::collection::vec(0usize..3, 0..5),
        b in prop::collection::vec(0usize..3, 0..5),
        c in prop::collection::vec(0usize..3, 0..5),
    ) {
        let (a, b, c) = (IndexSequence::new(a), IndexSequence::new(b), IndexSequence::new(c));
        prop_assert_eq!(a.equivalent(&b), b.equivalent(&a));
        if a.equivalent(&b) && b.equivalent(&c) {
            prop_assert!(a.equivalent(&c));
        }
    }

    #[test]
    fn one_shuffled_has_binomial_many_unit_terms(v in prop::collection::vec(0usize..4, 0..8)) {
        let i = IndexSequence::new(v);
        let o = one_shuffled(&i, &Alphabet::stuffle()).unwrap();
        let (n, k) = (i.len(), i.zero_count());
        let binom = (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1));
        prop_assert_eq!(o.len(), binom);
        prop_assert!(o.iter().all(|(_, c)| *c == ratio(1, 1)));
        for w in o.words() {
            prop_assert_eq!(w.len(), n);
        }
    }

    #[test]
    fn parsers_never_panic(bytes in prop::collection::vec(any::<u8>(), 0..64)) {
        let text = String::from_utf8_lossy(&bytes);
        let a = Alphabet::stuffle();
        let _ = parse_element(&text, &a);
        let _ = parse_expression(&text, &a);
        let _ = parse_pairing_file(&text);
    }

    #[test]
    fn grammar_shaped_input_never_panics(s in "[\\[\\]()ez1-3,+*/ -]{0,30}") {
        let a = Alphabet::stuffle();
        if let Err(mixshuf::Error::Parse(p)) = parse_expression(&s, &a) {
            prop_assert!(p.line >= 1 && p.column >= 1);
        }
        let _ = parse_element(&s, &a);
    }
}
