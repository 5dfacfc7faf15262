//! Loading an alphabet from a pairing file and checking the Hoffman axioms.
//!
//!     cargo run --example pairing_file [path]

use mixshuf::kernel::check_hoffman_axioms;
use mixshuf::products::quasi_shuffle;
use mixshuf::shell::load_alphabet;
use mixshuf::{Result, Word};

fn main() -> Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/hoffman_xy.pairs").to_string());
    let text = std::fs::read_to_string(&path).map_err(|e| mixshuf::Error::Config(format!("{path}: {e}")))?;
    let alphabet = load_alphabet(&text)?;
    println!("{path}: {}", alphabet.describe());

    let report = check_hoffman_axioms(&alphabet, 4);
    for o in &report.outcomes {
        println!("  {}: {}", o.axiom, if o.passed { "ok".to_string() } else { format!("fails at {:?}", o.witness) });
    }

    let x = Word::single(alphabet.letter("x")?);
    println!("[x] * [x] = {}", quasi_shuffle(&x, &x, &alphabet)?);

    // a bad table: x·x = x breaks degree additivity
    let bad = load_alphabet("letter x 1\npair x x = x")?;
    let report = check_hoffman_axioms(&bad, 2);
    println!("x.x = x passes all axioms: {}", report.all_passed());
    Ok(())
}
