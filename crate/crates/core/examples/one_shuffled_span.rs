//! Index sequences, one-shuffled elements, and the exact-rank window checks
//! for `1^{⊗n} <> y_I`.
//!
//!     cargo run --release --example one_shuffled_span

use mixshuf::kernel::ratio;
use mixshuf::structure::{
    check_linear_disjointness, check_linear_independence, check_one_shuffled_span, one_shuffled, unit_power_direct,
    unit_power_product, IndexSequence, Window,
};
use mixshuf::{Alphabet, Result};

fn main() -> Result<()> {
    let alphabet = Alphabet::stuffle();
    let i = IndexSequence::new(vec![2, 0, 1]);
    println!("SSupp{i} = {}", i.ssupp());
    println!("O(y_{i}) = {}", one_shuffled(&i, &alphabet)?);

    let lambda = ratio(2, 1);
    let y = IndexSequence::new(vec![1, 2]);
    let direct = unit_power_direct(2, &y, &lambda, &alphabet)?;
    assert_eq!(direct, unit_power_product(2, &y, &lambda, &alphabet)?);
    println!("[1,1] <>_2 [z1,z2] = {direct}");

    let window = Window {
        max_units: 3,
        max_index_len: 2,
        letters: 2,
    };
    for lam in [ratio(0, 1), ratio(1, 1)] {
        let r = check_linear_disjointness(&alphabet, &lam, &window)?;
        println!("lambda={lam}: {window}: rank {} of {} ({} words)", r.rank, r.inputs, r.rows);
    }
    let span = check_one_shuffled_span(&alphabet, &ratio(1, 1), &window)?;
    println!(
        "products in span(one-shuffled): {}, one-shuffled in span(products): {}",
        span.forward.passed(),
        span.backward.passed()
    );

    let fam: Vec<_> = (0..3)
        .map(|n| unit_power_direct(n, &y, &ratio(1, 1), &alphabet))
        .chain([unit_power_direct(1, &y, &ratio(1, 1), &alphabet)])
        .collect::<Result<_>>()?;
    let r = check_linear_independence(&fam)?;
    let dep: Vec<String> = r.dependency.unwrap_or_default().iter().map(|c| c.to_string()).collect();
    println!("a repeated generator: rank {} of {}, dependency ({})", r.rank, r.inputs, dep.join(", "));
    Ok(())
}
