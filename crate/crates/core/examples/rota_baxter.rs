//! The operator `P_A` on the free Rota-Baxter algebra and `P_v` on the tensor
//! algebra, checked against `P(x)P(y) = P(xP(y)) + P(P(x)y) + λP(xy)`.
//!
//!     cargo run --example rota_baxter

use mixshuf::kernel::{parse_element, ratio, words_up_to_length};
use mixshuf::products::{augmented_product, shuffle_recursive};
use mixshuf::rota_baxter::{check_rota_baxter, p_a, p_v};
use mixshuf::{Alphabet, Element, Letter, Result};

fn main() -> Result<()> {
    let alphabet = Alphabet::stuffle();
    let lambda = ratio(5, 3);

    let x = parse_element("[z1]", &alphabet)?;
    let y = parse_element("[1,z2]", &alphabet)?;
    println!("P([z1])          = {}", p_a(&x)?);
    println!("P([z1]) P([1,z2]) = {}", augmented_product(&p_a(&x)?, &p_a(&y)?, &lambda, &alphabet)?);

    let letters = [Letter::unit(), alphabet.letter("z1")?, alphabet.letter("z2")?];
    let words: Vec<Element> = words_up_to_length(&letters, 2)
        .into_iter()
        .filter(|w| !w.is_empty())
        .map(Element::word)
        .collect();
    let samples: Vec<(Element, Element)> = words
        .iter()
        .flat_map(|u| words.iter().map(move |v| (u.clone(), v.clone())))
        .collect();
    let report = check_rota_baxter(p_a, |u, v| augmented_product(u, v, &lambda, &alphabet), &lambda, &samples)?;
    println!("P_A, weight 5/3: {} pairs, all pass = {}", report.trials.len(), report.all_passed());

    // the same operator checked at the wrong weight fails
    let wrong = check_rota_baxter(p_a, |u, v| augmented_product(u, v, &lambda, &alphabet), &ratio(1, 1), &samples)?;
    if let Some(t) = wrong.first_failure() {
        println!("at weight 1 the identity breaks on {} , {}", t.x, t.y);
    }

    let v = alphabet.letter("z1")?;
    let shuffle = |a: &Element, b: &Element| a.bilinear(b, |u, w| Ok(shuffle_recursive(u, w)));
    // P_v lives on the tensor algebra over A, so no unit letters here
    let plain: Vec<Element> = words_up_to_length(&letters[1..], 2).into_iter().map(Element::word).collect();
    let pairs: Vec<(Element, Element)> =
        plain.iter().flat_map(|u| plain.iter().map(move |w| (u.clone(), w.clone()))).collect();
    println!("P_z1([z2]) = {}", p_v(&v, &plain[2])?);
    let report = check_rota_baxter(|e| p_v(&v, e), shuffle, &ratio(0, 1), &pairs)?;
    println!("P_z1 on the shuffle algebra, weight 0: {} pairs, all pass = {}", report.trials.len(), report.all_passed());
    Ok(())
}
