//! Shuffle and quasi-shuffle products on words, both by enumeration and by
//! recursion.
//!
//!     cargo run --example shuffle_products

use mixshuf::kernel::parse_element;
use mixshuf::products::{enumerate_shuffles, quasi_shuffle, shuffle_explicit, shuffle_recursive, Product};
use mixshuf::{Alphabet, Element, Result};

fn main() -> Result<()> {
    let alphabet = Alphabet::stuffle();
    let a = alphabet.letter("z1")?;
    let b = alphabet.letter("z2")?;
    let ab: mixshuf::Word = [a.clone(), b.clone()].into_iter().collect();
    let b_only: mixshuf::Word = [b.clone()].into_iter().collect();

    println!("(2,1)-shuffles:");
    for p in enumerate_shuffles(2, 1) {
        println!("  {:?}  sigma = {:?}", p.sides(), p.permutation());
    }

    let explicit = shuffle_explicit(&ab, &b_only);
    assert_eq!(explicit, shuffle_recursive(&ab, &b_only));
    println!("[z1,z2] sh [z2] = {explicit}");

    // the quasi-shuffle adds the merged terms [z1,z2] -> [z1+z2]
    println!("[z1,z2] * [z2]  = {}", quasi_shuffle(&ab, &b_only, &alphabet)?);

    // products extend bilinearly to elements
    let x = parse_element("[z1] + 1/2*[z2]", &alphabet)?;
    let y = parse_element("[z1]", &alphabet)?;
    let xy: Element = Product::QuasiShuffle.apply(&x, &y, &alphabet)?;
    println!("([z1] + 1/2*[z2]) * [z1] = {xy}");
    Ok(())
}
