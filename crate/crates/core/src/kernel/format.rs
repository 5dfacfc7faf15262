//! Canonical element text: `<coeff>*[<l1>,...]` terms joined by ` + `.
//!
//! Terms appear in canonical word order. A coefficient of 1 is omitted,
//! every other coefficient is printed as `p` or `p/q` in lowest terms with
//! `q > 0`, and a negative term after the first prints as `+ -p/q*[...]`.
//! The empty word prints as `[e]`, the unit letter as `1`, zero as `0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::alphabet::Alphabet;
use super::element::{Coeff, Element};
use super::word::Word;
use crate::error::{ParseError, Result};

pub fn format_coeff(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn canonical_serialize(e: &Element) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (w, c)) in e.iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        if !c.is_one() {
            out.push_str(&format_coeff(c));
            out.push('*');
        }
        out.push_str(&w.to_string());
    }
    out
}

/// Parses element text against an alphabet. Accepts everything
/// [`canonical_serialize`] produces, plus omitted `1*`, `-` between terms and
/// repeated words (which are summed).
pub fn parse_element(text: &str, alphabet: &Alphabet) -> Result<Element> {
    let mut p = Cursor::new(text);
    p.skip_ws();
    if p.peek() == Some('0') {
        let save = p.clone();
        p.bump();
        p.skip_ws();
        if p.at_end() {
            return Ok(Element::zero());
        }
        p = save;
    }
    let mut out = Element::zero();
    let mut first = true;
    loop {
        p.skip_ws();
        let mut negative = false;
        if !first {
            match p.peek() {
                Some('+') => {}
                Some('-') => negative = true,
                _ => return Err(p.error("expected `+` or `-` between terms", &["+", "-"]).into()),
            }
            p.bump();
            p.skip_ws();
        }
        if p.peek() == Some('-') {
            negative = !negative;
            p.bump();
            p.skip_ws();
        }
        let mut coeff = Coeff::one();
        if p.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = p.rational()?;
            p.skip_ws();
            p.expect('*')?;
            p.skip_ws();
        }
        let word = p.word(alphabet)?;
        if negative {
            coeff = -coeff;
        }
        out.add_term(word, coeff);
        first = false;
        p.skip_ws();
        if p.at_end() {
            return Ok(out);
        }
    }
}

#[derive(Clone)]
pub(crate) struct Cursor {
    chars: Vec<(usize, usize, char)>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Self {
        let mut chars = Vec::new();
        let (mut line, mut col) = (1, 1);
        for c in src.chars() {
            chars.push((line, col, c));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        chars.push((line, col, '\0'));
        Cursor { chars, pos: 0 }
    }

    pub(crate) fn peek(&self) -> Option<char> {
        if self.at_end() {
            None
        } else {
            Some(self.chars[self.pos].2)
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos + 1 >= self.chars.len()
    }

    pub(crate) fn bump(&mut self) {
        if !self.at_end() {
            self.pos += 1;
        }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    pub(crate) fn position(&self) -> (usize, usize) {
        let (l, c, _) = self.chars[self.pos];
        (l, c)
    }

    pub(crate) fn error(&self, message: &str, expected: &[&str]) -> ParseError {
        let (l, c) = self.position();
        ParseError::new(l, c, message).expecting(expected)
    }

    pub(crate) fn expect(&mut self, ch: char) -> std::result::Result<(), ParseError> {
        if self.peek() == Some(ch) {
            self.bump();
            Ok(())
        } else {
            let s = ch.to_string();
            Err(self.error(&format!("expected `{ch}`"), &[&s]))
        }
    }

    pub(crate) fn digits(&mut self) -> std::result::Result<BigInt, ParseError> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        if s.is_empty() {
            self.pos = start;
            return Err(self.error("expected a number", &["digit"]));
        }
        Ok(s.parse().expect("ascii digits"))
    }

    /// `p` or `p/q`, unsigned.
    pub(crate) fn rational(&mut self) -> std::result::Result<Coeff, ParseError> {
        let p = self.digits()?;
        let save = self.pos;
        self.skip_ws();
        if self.peek() == Some('/') {
            self.bump();
            self.skip_ws();
            let at = self.position();
            let q = self.digits()?;
            if q.is_zero() {
                return Err(ParseError::new(at.0, at.1, "zero denominator"));
            }
            return Ok(Coeff::new(p, q));
        }
        self.pos = save;
        Ok(Coeff::from_integer(p))
    }

    pub(crate) fn ident(&mut self) -> Option<String> {
        let mut s = String::new();
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
            s.push(c);
            self.bump();
        }
        Some(s)
    }

    /// `[e]`, or `[l1,...,ln]` where each entry is a letter name or `1`.
    pub(crate) fn word(&mut self, alphabet: &Alphabet) -> Result<Word> {
        self.expect('[')?;
        self.skip_ws();
        let mut letters = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            if !first {
                match self.peek() {
                    Some(']') => {
                        self.bump();
                        return Ok(Word::new(letters));
                    }
                    Some(',') => self.bump(),
                    _ => return Err(self.error("expected `,` or `]`", &[",", "]"]).into()),
                }
                self.skip_ws();
            }
            let (line, col) = self.position();
            let name = if self.peek() == Some('1') {
                self.bump();
                "1".to_string()
            } else {
                self.ident()
                    .ok_or_else(|| self.error("expected a letter", &["letter", "1", "e"]))?
            };
            if first && name == "e" {
                self.skip_ws();
                self.expect(']')?;
                return Ok(Word::empty());
            }
            let letter = alphabet.letter(&name).map_err(|e| {
                crate::error::Error::Eval {
                    line,
                    column: col,
                    source: Box::new(e),
                }
            })?;
            letters.push(letter);
            first = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::element::{int, ratio};
    use crate::kernel::letter::Letter;

    fn w(a: &Alphabet, names: &[&str]) -> Word {
        names.iter().map(|n| a.letter(n).unwrap()).collect()
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(canonical_serialize(&Element::zero()), "0");
    }

    #[test]
    fn unit_coefficient_is_omitted() {
        let a = Alphabet::stuffle();
        assert_eq!(canonical_serialize(&Element::word(w(&a, &["z1", "z2"]))), "[z1,z2]");
    }

    #[test]
    fn terms_follow_canonical_order() {
        let a = Alphabet::stuffle();
        let e = Element::term(w(&a, &["z1", "z1"]), int(2)) + Element::word(w(&a, &["z2"]));
        assert_eq!(canonical_serialize(&e), "[z2] + 2*[z1,z1]");
    }

    #[test]
    fn negative_and_fractional_terms() {
        let a = Alphabet::stuffle();
        let e = Element::term(Word::empty(), ratio(-3, 4))
            + Element::term(Word::new(vec![Letter::unit(), a.letter("z1").unwrap()]), int(-1));
        assert_eq!(canonical_serialize(&e), "-3/4*[e] + -1*[1,z1]");
        assert_eq!(parse_element("-3/4*[e] + -1*[1,z1]", &a).unwrap(), e);
    }

    #[test]
    fn parser_accepts_loose_forms() {
        let a = Alphabet::stuffle();
        let e = parse_element(" [z1] - 2 * [z2]+[z1] ", &a).unwrap();
        assert_eq!(canonical_serialize(&e), "2*[z1] + -2*[z2]");
        assert!(parse_element("0", &a).unwrap().is_zero());
        assert!(parse_element("[z1] + -1*[z1]", &a).unwrap().is_zero());
    }

    #[test]
    fn parser_reports_positions() {
        let a = Alphabet::stuffle();
        match parse_element("[z1] + [q]", &a) {
            Err(crate::error::Error::Eval { line: 1, column: 9, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_element("[z1,", &a) {
            Err(crate::error::Error::Parse(p)) => assert_eq!((p.line, p.column), (1, 5)),
            other => panic!("{other:?}"),
        }
        assert!(parse_element("1/0*[z1]", &a).is_err());
        assert!(parse_element("", &a).is_err());
    }
}
