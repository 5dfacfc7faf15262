//! Exact computation in shuffle, quasi-shuffle and mixable shuffle algebras
//! over graded alphabets, the free Rota-Baxter algebra built on the mixable
//! shuffle, and the Hopf structure they carry.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every identity checker compares elements for structural equality.

pub mod error;
pub mod hopf;
pub mod kernel;
pub mod products;
pub mod rota_baxter;
pub mod shell;
pub mod structure;

pub use error::{Error, ParseError, Result};
pub use kernel::{Alphabet, Coeff, Element, Letter, Word};
