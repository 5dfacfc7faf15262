//! The weight-1 mixable shuffle agrees with the quasi-shuffle, and the
//! rescaling `g` carries weight λ to weight 1.
//!
//!     cargo run --release --example quasi_shuffle_isomorphism

use mixshuf::kernel::{parse_element, ratio};
use mixshuf::products::Product;
use mixshuf::structure::{check_quasi_shuffle_isomorphism, check_rescaling, g_inverse, g_rescale};
use mixshuf::{Alphabet, Result};

fn main() -> Result<()> {
    let alphabet = Alphabet::stuffle();
    let letters: Vec<_> = ["z1", "z2", "z3"].iter().map(|n| alphabet.letter(n)).collect::<Result<_>>()?;

    let iso = check_quasi_shuffle_isomorphism(&alphabet, &letters, 5)?;
    println!("f(a * b) = f(a) <>_1 f(b): {} pairs, passed = {}", iso.cases, iso.passed());

    let lambda = ratio(3, 5);
    let resc = check_rescaling(&alphabet, &letters[..2], 5, &lambda)?;
    println!("g(a <>_3/5 b) = g(a) <>_1 g(b): {} pairs, passed = {}", resc.cases, resc.passed());

    let a = parse_element("[z1,z2]", &alphabet)?;
    let b = parse_element("[z1]", &alphabet)?;
    let lhs = g_rescale(&Product::Mixable(lambda.clone()).apply(&a, &b, &alphabet)?, &lambda)?;
    let rhs = Product::Mixable(ratio(1, 1)).apply(&g_rescale(&a, &lambda)?, &g_rescale(&b, &lambda)?, &alphabet)?;
    println!("g([z1,z2] <> [z1]) = {lhs}");
    assert_eq!(lhs, rhs);
    println!("g^-1 undoes it: {}", g_inverse(&lhs, &lambda)?);
    Ok(())
}
