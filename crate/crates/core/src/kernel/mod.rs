//! Letters, graded alphabets with their pairings, words, and exact linear
//! combinations of words.

mod alphabet;
mod basis;
mod element;
pub mod format;
mod hoffman;
mod letter;
mod word;

pub use alphabet::{make_alphabet, Alphabet, AlphabetKind, AlphabetSpec, PairEntry};
pub use basis::{graded_dimension, words_of_degree, words_of_length, words_up_to_degree, words_up_to_length};
pub use element::{int, power, ratio, Coeff, Element};
pub use format::{canonical_serialize, format_coeff, parse_element};
pub use hoffman::{check_hoffman_axioms, Axiom, AxiomOutcome, HoffmanReport};
pub use letter::{Letter, UNIT_NAME};
pub use word::Word;
