//! Deconcatenation coproduct, counit, antipode and the bialgebra axiom check.
//!
//!     cargo run --release --example hopf_antipode

use mixshuf::hopf::{antipode, check_bialgebra, convolve, coproduct_element, counit};
use mixshuf::kernel::{parse_element, ratio};
use mixshuf::products::Product;
use mixshuf::{Alphabet, Element, Result};

fn main() -> Result<()> {
    let alphabet = Alphabet::stuffle();
    let w = parse_element("[z1,z2,z1]", &alphabet)?;

    println!("Delta{w} = {}", coproduct_element(&w));
    println!("eps{w} = {}", counit(&w));

    let qsh = Product::QuasiShuffle;
    let s = antipode(&w, &qsh, &alphabet)?;
    println!("S{w} = {s}");

    // S * id = u eps on a positive-degree word
    let s_id = convolve(|e| antipode(e, &qsh, &alphabet), |e| Ok(e.clone()), &w, &qsh, &alphabet)?;
    assert_eq!(s_id, Element::zero());
    println!("(S * id){w} = {s_id}");

    for product in [qsh, Product::Mixable(ratio(3, 2))] {
        let report = check_bialgebra(&product, &alphabet, 4)?;
        println!("{product}, degree <= 4:");
        for c in &report.checks {
            println!("  {:<22} {:>4} cases  {}", c.name, c.cases, if c.passed { "ok" } else { "FAIL" });
        }
    }
    Ok(())
}
