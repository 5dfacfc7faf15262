use std::collections::{BTreeMap, HashMap};

use super::letter::{is_reserved_name, is_valid_letter_name, Letter};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphabetKind {
    /// Finite letter table with an explicit pairing table.
    Table,
    /// `z_n` of degree `n` for every `n >= 1`, `[z_i, z_j] = z_{i+j}`.
    Stuffle,
    /// Identically zero bracket; letters are either declared or the `z_n` family.
    ZeroBracket,
}

/// One `pair a b = c` line; `value: None` is the `= 0` form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEntry {
    pub a: String,
    pub b: String,
    pub value: Option<String>,
}

impl PairEntry {
    pub fn new(a: &str, b: &str, value: Option<&str>) -> Self {
        PairEntry {
            a: a.to_string(),
            b: b.to_string(),
            value: value.map(str::to_string),
        }
    }
}

/// Input to [`make_alphabet`]. Degrees are signed so that bad input can be
/// reported rather than rejected at parse time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphabetSpec {
    Stuffle,
    Zero {
        letters: Vec<(String, i64)>,
    },
    Table {
        letters: Vec<(String, i64)>,
        pairs: Vec<PairEntry>,
    },
}

/// A locally finite graded alphabet together with its Hoffman pairing.
#[derive(Clone, Debug)]
pub struct Alphabet {
    kind: AlphabetKind,
    // empty for the rule alphabets that generate `z_n` on demand
    letters: BTreeMap<String, Letter>,
    pairs: HashMap<(Letter, Letter), Option<Letter>>,
}

pub fn make_alphabet(spec: &AlphabetSpec) -> Result<Alphabet> {
    match spec {
        AlphabetSpec::Stuffle => Ok(Alphabet::stuffle()),
        AlphabetSpec::Zero { letters } => Ok(Alphabet {
            kind: AlphabetKind::ZeroBracket,
            letters: declare_letters(letters)?,
            pairs: HashMap::new(),
        }),
        AlphabetSpec::Table { letters, pairs } => {
            let letters = declare_letters(letters)?;
            let lookup = |name: &str| {
                letters
                    .get(name)
                    .cloned()
                    .ok_or_else(|| Error::UnknownLetter(name.to_string()))
            };
            let mut table: HashMap<(Letter, Letter), Option<Letter>> = HashMap::new();
            for entry in pairs {
                let key = ordered(lookup(&entry.a)?, lookup(&entry.b)?);
                let value = entry.value.as_deref().map(lookup).transpose()?;
                if let Some(prev) = table.get(&key) {
                    if *prev != value {
                        return Err(Error::PairingConflict {
                            a: entry.a.clone(),
                            b: entry.b.clone(),
                            first: slot_name(prev),
                            second: slot_name(&value),
                        });
                    }
                }
                table.insert(key, value);
            }
            Ok(Alphabet {
                kind: AlphabetKind::Table,
                letters,
                pairs: table,
            })
        }
    }
}

fn declare_letters(spec: &[(String, i64)]) -> Result<BTreeMap<String, Letter>> {
    let mut letters = BTreeMap::new();
    for (name, degree) in spec {
        if is_reserved_name(name) {
            return Err(Error::ReservedName(name.clone()));
        }
        if !is_valid_letter_name(name) {
            return Err(Error::UnknownLetter(name.clone()));
        }
        if *degree <= 0 || *degree > u32::MAX as i64 {
            return Err(Error::NonpositiveDegree {
                name: name.clone(),
                degree: *degree,
            });
        }
        if letters.contains_key(name) {
            return Err(Error::DuplicateLetter(name.clone()));
        }
        letters.insert(name.clone(), Letter::new(name, *degree as u32));
    }
    Ok(letters)
}

fn ordered(a: Letter, b: Letter) -> (Letter, Letter) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn slot_name(s: &Option<Letter>) -> String {
    s.as_ref().map_or_else(|| "0".to_string(), |l| l.name().to_string())
}

/// `z<n>` with `n >= 1` and no leading zero.
fn parse_z_index(name: &str) -> Option<u32> {
    let digits = name.strip_prefix('z')?;
    if digits.is_empty() || digits.starts_with('0') || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

fn z(n: u32) -> Letter {
    Letter::new(&format!("z{n}"), n)
}

impl Alphabet {
    pub fn stuffle() -> Self {
        Alphabet {
            kind: AlphabetKind::Stuffle,
            letters: BTreeMap::new(),
            pairs: HashMap::new(),
        }
    }

    /// Zero-bracket alphabet on the `z_n` family.
    pub fn zero_bracket() -> Self {
        Alphabet {
            kind: AlphabetKind::ZeroBracket,
            letters: BTreeMap::new(),
            pairs: HashMap::new(),
        }
    }

    pub fn kind(&self) -> AlphabetKind {
        self.kind
    }

    fn is_rule_generated(&self) -> bool {
        self.kind != AlphabetKind::Table && self.letters.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        !self.is_rule_generated()
    }

    /// Resolves a letter name; `1` is the unit letter.
    pub fn letter(&self, name: &str) -> Result<Letter> {
        if name == super::letter::UNIT_NAME {
            return Ok(Letter::unit());
        }
        if self.is_rule_generated() {
            return parse_z_index(name)
                .map(z)
                .ok_or_else(|| Error::UnknownLetter(name.to_string()));
        }
        self.letters
            .get(name)
            .cloned()
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    /// True for the unit letter and for letters of this alphabet.
    pub fn contains(&self, letter: &Letter) -> bool {
        letter.is_unit() || self.letter(letter.name()).is_ok_and(|l| l == *letter)
    }

    pub fn check(&self, letter: &Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch(letter.name().to_string()))
        }
    }

    /// The degree-`n` slice `X_n`, sorted by name.
    pub fn letters_of_degree(&self, n: u32) -> Vec<Letter> {
        if n == 0 {
            return Vec::new();
        }
        if self.is_rule_generated() {
            return vec![z(n)];
        }
        self.letters
            .values()
            .filter(|l| l.degree() == n)
            .cloned()
            .collect()
    }

    /// All letters of degree at most `bound`, by degree then name.
    pub fn letters_up_to(&self, bound: u32) -> Vec<Letter> {
        (1..=bound).flat_map(|n| self.letters_of_degree(n)).collect()
    }

    /// Largest degree among declared letters, if the alphabet is finite.
    pub fn max_declared_degree(&self) -> Option<u32> {
        self.letters.values().map(Letter::degree).max()
    }

    /// The enumeration `y_1, y_2, ...` of the alphabet (1-based), ordered by
    /// degree then name; index 0 is the unit letter.
    pub fn nth_letter(&self, index: usize) -> Result<Letter> {
        if index == 0 {
            return Ok(Letter::unit());
        }
        if self.is_rule_generated() {
            return u32::try_from(index)
                .map(z)
                .map_err(|_| Error::IndexOutOfRange(index));
        }
        let mut sorted: Vec<&Letter> = self.letters.values().collect();
        sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then(a.name().cmp(b.name())));
        sorted
            .get(index - 1)
            .map(|l| (*l).clone())
            .ok_or(Error::IndexOutOfRange(index))
    }

    /// Number of declared letters (`None` for rule-generated families).
    pub fn letter_count(&self) -> Option<usize> {
        self.is_finite().then_some(self.letters.len())
    }

    /// The Hoffman pairing on `X ∪ {0}`; `None` is the zero value. Neither
    /// operand may be the unit letter.
    pub fn bracket(&self, a: Option<&Letter>, b: Option<&Letter>) -> Result<Option<Letter>> {
        let (Some(a), Some(b)) = (a, b) else {
            return Ok(None);
        };
        self.check(a)?;
        self.check(b)?;
        if a.is_unit() || b.is_unit() {
            // unit is the identity of Ã, handled by `multiply`
            return self.multiply(a, b);
        }
        Ok(match self.kind {
            AlphabetKind::Stuffle => Some(z(a.degree() + b.degree())),
            AlphabetKind::ZeroBracket => None,
            AlphabetKind::Table => self
                .pairs
                .get(&ordered(a.clone(), b.clone()))
                .cloned()
                .flatten(),
        })
    }

    /// Product of two basis letters of `Ã = k·1_A ⊕ A`: the unit is neutral and
    /// two letters multiply by the bracket. `None` is zero.
    pub fn multiply(&self, a: &Letter, b: &Letter) -> Result<Option<Letter>> {
        if a.is_unit() {
            self.check(b)?;
            return Ok(Some(b.clone()));
        }
        if b.is_unit() {
            self.check(a)?;
            return Ok(Some(a.clone()));
        }
        self.bracket(Some(a), Some(b))
    }

    /// A short human-readable name used in reports.
    pub fn describe(&self) -> String {
        match (self.kind, self.is_rule_generated()) {
            (AlphabetKind::Stuffle, _) => "builtin:stuffle".to_string(),
            (AlphabetKind::ZeroBracket, true) => "builtin:zero".to_string(),
            (AlphabetKind::ZeroBracket, false) => format!("zero[{}]", self.letters.len()),
            (AlphabetKind::Table, _) => format!("table[{}]", self.letters.len()),
        }
    }
}
