//! The expression language used by `mixshuf --eval`.
//!
//!     cargo run --example expression_eval -- "antipode([z1,z2])"

use mixshuf::kernel::ratio;
use mixshuf::shell::{eval_str, render_value, OutputFormat};
use mixshuf::Alphabet;

fn main() {
    let alphabet = Alphabet::stuffle();
    let lambda = ratio(1, 1);
    let inputs: Vec<String> = match std::env::args().nth(1) {
        Some(e) => vec![e],
        None => [
            "msh([z1],[z1])",
            "2*[z1,z2] + [z3]",
            "aug(P([z1]), P([z2]))",
            "coprod([z1,z2])",
            "antipode([z1,z2]) - antipode([z1,z2], qsh)",
            "g(msh([z1],[z2]))",
            "oneshuf((2,0,1))",
            "ssupp((2,0,1))",
            "msh([z1])",
            "[z1] + [w]",
        ]
        .map(String::from)
        .to_vec(),
    };
    for text in inputs {
        match eval_str(&text, &alphabet, &lambda) {
            Ok(v) => print!("{text:<42} => {}", render_value(&v, OutputFormat::Canonical)),
            Err(e) => println!("{text:<42} !! {e}"),
        }
    }
}
