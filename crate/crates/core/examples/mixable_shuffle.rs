//! Weight-λ mixable shuffles: the enumerated (σ, T) pairs, the explicit sum
//! and the recursion, and the augmented product on `Sh(Ã)`.
//!
//!     cargo run --example mixable_shuffle

use mixshuf::kernel::{parse_element, ratio};
use mixshuf::products::{
    augmented_product, enumerate_mixable_shuffles, mixable_shuffle_explicit, mixable_shuffle_recursive,
};
use mixshuf::{Alphabet, Result, Word};

fn main() -> Result<()> {
    let alphabet = Alphabet::stuffle();
    let lambda = ratio(3, 2);
    let z1 = alphabet.letter("z1")?;
    let z2 = alphabet.letter("z2")?;
    let a = Word::new(vec![z1.clone(), z2.clone()]);
    let b = Word::single(z1.clone());

    println!("mixable (2,1)-shuffles:");
    for ms in enumerate_mixable_shuffles(2, 1) {
        println!("  {:?} merges {:?}", ms.pattern.sides(), ms.merges);
    }

    let explicit = mixable_shuffle_explicit(&a, &b, &lambda, &alphabet)?;
    let recursive = mixable_shuffle_recursive(&a, &b, &lambda, &alphabet)?;
    assert_eq!(explicit, recursive);
    println!("[z1,z2] <> [z1] at lambda=3/2: {explicit}");

    // the unit letter multiplies neutrally when merged
    let units = Word::units(2);
    println!(
        "[1,1] <> [z1] at lambda=-2: {}",
        mixable_shuffle_explicit(&units, &b, &ratio(-2, 1), &alphabet)?
    );

    let x = parse_element("[1,z1]", &alphabet)?;
    let y = parse_element("[z2,z1]", &alphabet)?;
    println!("[1,z1] <> [z2,z1] in Sh(A~): {}", augmented_product(&x, &y, &lambda, &alphabet)?);
    Ok(())
}
