//! Pairing files:
//!
//! ```text
//! # comment
//! letter x 1
//! letter y 2
//! pair x x = y
//! pair x y = 0
//! ```
//!
//! or a single `builtin stuffle` / `builtin zero z1:1 z2:2` line.

use crate::error::{Error, Result};
use crate::kernel::{make_alphabet, Alphabet, AlphabetSpec, PairEntry};

fn bad(line: usize, message: impl Into<String>) -> Error {
    Error::PairingFile {
        line,
        message: message.into(),
    }
}

fn degree(line: usize, text: &str) -> Result<i64> {
    text.parse()
        .map_err(|_| bad(line, format!("`{text}` is not an integer degree")))
}

/// Parses the pairing-file text into an alphabet description.
pub fn parse_pairing_file(text: &str) -> Result<AlphabetSpec> {
    let mut letters = Vec::new();
    let mut pairs = Vec::new();
    let mut builtin: Option<(usize, AlphabetSpec)> = None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let spaced = content.replace('=', " = ");
        let toks: Vec<&str> = spaced.split_whitespace().collect();
        match toks.as_slice() {
            [] => continue,
            ["letter", name, deg] => letters.push((name.to_string(), degree(line, deg)?)),
            ["letter", ..] => return Err(bad(line, "expected `letter <name> <degree>`")),
            ["pair", a, b, "=", value] => {
                let value = (*value != "0").then_some(*value);
                pairs.push(PairEntry::new(a, b, value));
            }
            ["pair", ..] => return Err(bad(line, "expected `pair <a> <b> = <c|0>`")),
            ["builtin", "stuffle"] => builtin = Some((line, AlphabetSpec::Stuffle)),
            ["builtin", "zero", rest @ ..] => {
                let mut zl = Vec::new();
                for item in rest {
                    let (name, deg) = item
                        .split_once(':')
                        .ok_or_else(|| bad(line, format!("expected `<name>:<degree>`, found `{item}`")))?;
                    zl.push((name.to_string(), degree(line, deg)?));
                }
                builtin = Some((line, AlphabetSpec::Zero { letters: zl }));
            }
            ["builtin", other, ..] => return Err(bad(line, format!("unknown builtin `{other}`"))),
            ["builtin"] => return Err(bad(line, "expected `builtin stuffle` or `builtin zero ...`")),
            [word, ..] => return Err(bad(line, format!("unknown directive `{word}`"))),
        }
        if builtin.is_some() && (!letters.is_empty() || !pairs.is_empty()) {
            return Err(bad(line, "a builtin alphabet cannot be combined with letter or pair lines"));
        }
    }
    match builtin {
        Some((_, spec)) => Ok(spec),
        None if letters.is_empty() => Err(bad(0, "no letters declared")),
        None => Ok(AlphabetSpec::Table { letters, pairs }),
    }
}

/// Parses and builds the alphabet in one step.
pub fn load_alphabet(text: &str) -> Result<Alphabet> {
    make_alphabet(&parse_pairing_file(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{check_hoffman_axioms, AlphabetKind};

    #[test]
    fn table_file() {
        let a = load_alphabet("# x and y\nletter x 1\nletter y 2\npair x x = y\npair x y=0 # trailing\n").unwrap();
        assert_eq!(a.kind(), AlphabetKind::Table);
        let x = a.letter("x").unwrap();
        assert_eq!(a.bracket(Some(&x), Some(&x)).unwrap(), Some(a.letter("y").unwrap()));
        assert!(check_hoffman_axioms(&a, 4).all_passed());
    }

    #[test]
    fn builtins() {
        assert_eq!(load_alphabet("builtin stuffle\n").unwrap().kind(), AlphabetKind::Stuffle);
        let z = load_alphabet("builtin zero a:1 b:3").unwrap();
        assert_eq!(z.kind(), AlphabetKind::ZeroBracket);
        assert_eq!(z.letter("b").unwrap().degree(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = load_alphabet("letter x 1\npair x\n").unwrap_err();
        assert!(matches!(e, Error::PairingFile { line: 2, .. }), "{e:?}");
        let e = load_alphabet("letter x one").unwrap_err();
        assert!(matches!(e, Error::PairingFile { line: 1, .. }));
        assert!(matches!(load_alphabet("frobnicate").unwrap_err(), Error::PairingFile { .. }));
        assert!(matches!(load_alphabet("").unwrap_err(), Error::PairingFile { .. }));
        assert!(matches!(load_alphabet("letter x 1\nbuiltin stuffle").unwrap_err(), Error::PairingFile { line: 2, .. }));
    }

    #[test]
    fn validation_errors_pass_through() {
        assert_eq!(load_alphabet("letter x 0").unwrap_err(), Error::NonpositiveDegree { name: "x".into(), degree: 0 });
        assert_eq!(load_alphabet("letter x 1\nletter x 2").unwrap_err(), Error::DuplicateLetter("x".into()));
        assert!(matches!(
            load_alphabet("letter x 1\nletter y 2\npair x x = y\npair x x = 0").unwrap_err(),
            Error::PairingConflict { .. }
        ));
    }
}
